#include "cyclab/graph_io.hpp"

#include <charconv>
#include <istream>
#include <iterator>
#include <sstream>

namespace cyclab {

namespace {

std::vector<long long> numbers_on(std::string_view line, const std::string& where) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t' && *ptr != '\r'))
      throw ParseError(where, "expected integers, got '" + std::string(line) + "'");
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  long long n = -1, m = -1, seen = 0;
  std::optional<GraphBuilder> builder;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string where = "line " + std::to_string(line_no);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto nums = numbers_on(line, where);
    if (nums.size() != 2) throw ParseError(where, "expected two integers");
    if (!builder) {
      n = nums[0];
      m = nums[1];
      if (n < 0 || m < 0) throw ParseError(where, "negative header values");
      builder.emplace(static_cast<int>(n));
      continue;
    }
    if (seen == m) throw ParseError(where, "more edges than announced (" + std::to_string(m) + ")");
    auto u = nums[0], v = nums[1];
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(where, "vertex id out of range");
    if (u == v) throw ParseError(where, "self-loop at vertex " + std::to_string(u));
    if (builder->has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
      throw ParseError(where, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    builder->add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    ++seen;
  }
  if (!builder) throw ParseError("line " + std::to_string(line_no), "missing 'n m' header");
  if (seen != m)
    throw ParseError("line " + std::to_string(line_no),
                     "expected " + std::to_string(m) + " edges, found " + std::to_string(seen));
  return builder->build();
}

Graph parse_graph_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
    throw ParseError("root", "object with integer field \"n\" required");
  const long long n = doc["n"].get<long long>();
  if (n < 0) throw ParseError("n", "negative vertex count");
  GraphBuilder b(static_cast<int>(n));
  if (doc.contains("edges")) {
    const auto& edges = doc["edges"];
    if (!edges.is_array()) throw ParseError("edges", "must be an array");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string where = "edges[" + std::to_string(i) + "]";
      const auto& e = edges[i];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        throw ParseError(where, "expected [u, v]");
      auto u = e[0].get<long long>(), v = e[1].get<long long>();
      if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(where, "vertex id out of range");
      if (u == v) throw ParseError(where, "self-loop at vertex " + std::to_string(u));
      if (b.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
        throw ParseError(where, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
      b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  if (doc.contains("labels")) {
    const auto& labels = doc["labels"];
    if (!labels.is_object()) throw ParseError("labels", "must be an object");
    for (const auto& [key, value] : labels.items()) {
      const std::string where = "labels[" + key + "]";
      long long id = -1;
      auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), id);
      if (ec != std::errc() || ptr != key.data() + key.size() || id < 0 || id >= n)
        throw ParseError(where, "label key must be a valid vertex id");
      if (!value.is_string()) throw ParseError(where, "label must be a string");
      b.label(static_cast<Vertex>(id), value.get<std::string>());
    }
  }
  return b.build();
}

Graph parse_graph(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_graph_json(text);
  return parse_edge_list(text);
}

Graph read_graph(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_graph(text);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

nlohmann::json to_json(const Graph& g) {
  nlohmann::json doc;
  doc["n"] = g.order();
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  nlohmann::json labels = nlohmann::json::object();
  for (const auto& [v, l] : g.labels()) labels[std::to_string(v)] = l;
  doc["labels"] = std::move(labels);
  return doc;
}

}  // namespace cyclab
