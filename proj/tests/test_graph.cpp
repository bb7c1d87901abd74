#include <doctest.h>

#include <sstream>

#include "cyclab/families.hpp"
#include "cyclab/graph.hpp"
#include "cyclab/graph_io.hpp"

using namespace cyclab;

TEST_CASE("VertexSet is sorted and duplicate free") {
  VertexSet s{4, 1, 3};
  CHECK(s.ids() == std::vector<Vertex>{1, 3, 4});
  CHECK_THROWS_AS(VertexSet({1, 1}), GraphError);
  CHECK(s.with(2) == VertexSet{1, 2, 3, 4});
  CHECK(s.minus({3}) == VertexSet{1, 4});
  CHECK(s.unite({0}) == VertexSet{0, 1, 3, 4});
  CHECK(s.intersect({3, 9}) == VertexSet{3});
  CHECK(s.intersects({9, 4}));
  CHECK(VertexSet{1, 4}.is_subset_of(s));
}

TEST_CASE("Graph rejects loops, duplicates and bad ids") {
  GraphBuilder b(3);
  b.add_edge(0, 1);
  CHECK_THROWS_AS(b.add_edge(1, 0), GraphError);
  CHECK_THROWS_AS(b.add_edge(2, 2), GraphError);
  CHECK_THROWS_AS(b.add_edge(0, 3), GraphError);
  Graph g = b.build();
  CHECK(g.order() == 3);
  CHECK(g.size() == 1);
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(1, 2));
}

TEST_CASE("labels resolve both ways") {
  GraphBuilder b(2);
  b.add_edge(0, 1).label(1, "z");
  Graph g = b.build();
  CHECK(g.find_label("z") == 1);
  CHECK_FALSE(g.find_label("y"));
  CHECK(g.name(0) == "0");
  CHECK(g.name(1) == "z");
}

TEST_CASE("cycle segments follow orientation and openness") {
  Cycle c({0, 1, 2, 3, 4});
  CHECK(segment(c, 1, 3).vertices() == std::vector<Vertex>{1, 2, 3});
  CHECK(segment(c, 1, 3, Direction::Counterclockwise).vertices() == std::vector<Vertex>{1, 0, 4, 3});
  CHECK(segment(c, 1, 3, Direction::Clockwise, Openness::Open).vertices() == std::vector<Vertex>{2});
  CHECK(segment(c, 3, 1, Direction::Clockwise, Openness::OpenLeft).vertices() == std::vector<Vertex>{4, 0, 1});
  CHECK(segment(c, 2, 2).vertices() == std::vector<Vertex>{2});
  CHECK_THROWS_AS(segment(c, 1, 2, Direction::Clockwise, Openness::Open), GraphError);
  CHECK(c.next(4) == 0);
  CHECK(c.prev(0) == 4);
}

TEST_CASE("paths and cycles validate against the graph") {
  Graph g = families::cycle(5);
  CHECK_NOTHROW(Cycle({0, 1, 2, 3, 4}).validate(g));
  CHECK_THROWS_AS(Cycle({0, 2, 1, 3, 4}).validate(g), GraphError);
  CHECK_THROWS_AS(Path({0, 1, 0}), GraphError);
  CHECK_NOTHROW(Path({3, 4, 0}).validate(g));
}

TEST_CASE("deletion and contraction keep explicit id maps") {
  Graph g = families::cycle(6);
  Subgraph sub = delete_vertices(g, {0, 3});
  CHECK(sub.graph.order() == 4);
  CHECK(sub.old_to_new[0] == -1);
  CHECK(sub.new_to_old[sub.old_to_new[4]] == 4);
  CHECK(components(sub.graph).size() == 2);

  Contraction con = contract(g, {0, 1, 2});
  CHECK(con.graph.order() == 4);
  CHECK(con.merged == 3);
  CHECK(con.graph.has_edge(con.merged, con.old_to_new[3]));
  CHECK(con.graph.has_edge(con.merged, con.old_to_new[5]));
  CHECK_THROWS_AS(contract(g, {0, 3}), GraphError);
  CHECK(identify_vertices(g, {0, 3}).graph.order() == 5);
}

TEST_CASE("line graph of K4 is the octahedron") {
  Graph l = line_graph(families::complete(4));
  CHECK(l.order() == 6);
  CHECK(l.size() == 12);
  for (Vertex v = 0; v < l.order(); ++v) CHECK(l.degree(v) == 4);
}

TEST_CASE("edge list parsing") {
  Graph g = parse_edge_list("# triangle\n3 3\n0 1\n1 2\n\n2 0\n");
  CHECK(g.size() == 3);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 5\n"), ParseError);
  try {
    parse_edge_list("3 2\n0 1\n1 1\n");
  } catch (const ParseError& e) {
    CHECK(e.where() == "line 3");
  }
}

TEST_CASE("JSON parsing and round trips keep labels") {
  Graph g = families::petersen_inflated();
  Graph back = parse_graph(to_json(g).dump());
  CHECK(back.edges() == g.edges());
  CHECK(back.labels() == g.labels());
  Graph from_text = parse_graph(to_edge_list(g));
  CHECK(from_text.edges() == g.edges());
  CHECK_THROWS_AS(parse_graph_json(R"({"n": 2, "edges": [[0, 0]]})"), ParseError);
  CHECK_THROWS_AS(parse_graph_json(R"({"n": 2, "edges": [[0, 1]], "labels": {"7": "x"}})"), ParseError);
  CHECK_THROWS_AS(parse_graph_json("{"), ParseError);
  std::istringstream in(R"({"n": 3, "edges": [[0, 1], [1, 2]], "labels": {"2": "end"}})");
  CHECK(read_graph(in).find_label("end") == 2);
}
