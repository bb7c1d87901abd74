#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "cyclab/graph.hpp"
#include "json.hpp"

namespace cyclab {

/// Parse failure; `where` names the offending line or edge index.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// Text edge list: first line "n m", then m lines "u v". Blank lines and
/// lines starting with '#' are skipped.
Graph parse_edge_list(std::string_view text);

/// {"n": int, "edges": [[u,v],...], "labels": {"id": "name"}}
Graph parse_graph_json(std::string_view text);

/// Dispatches on the first non-blank character ('{' selects JSON).
Graph parse_graph(std::string_view text);
Graph read_graph(std::istream& in);

std::string to_edge_list(const Graph& g);
nlohmann::json to_json(const Graph& g);

}  // namespace cyclab
