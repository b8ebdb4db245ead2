#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "kchoose/gadget_types.hpp"
#include "kchoose/gadgets.hpp"
#include "kchoose/graph.hpp"
#include "kchoose/lists.hpp"

namespace kchoose {

using Json = nlohmann::ordered_json;

/// Malformed input data (bad JSON, unknown vertices, wrong shapes).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses a file; syntax errors report the byte offset.
Json read_json_file(const std::string& path);
Json parse_json(std::string_view text, const std::string& origin = "<input>");

/// {"vertices": [...], "edges": [[u, v], ...], "coords": {"v": [row, col]}}
Graph graph_from_json(const Json& j);
Json graph_to_json(const Graph& g);

/// A JSON file if `arg` names an existing file, a named-graph descriptor
/// otherwise.
Graph load_graph(const std::string& arg);

/// {"palette": k, "lists": {"v": [colors]}}
ListAssignment lists_from_json(const Json& j, const Graph& g);
Json lists_to_json(const ListAssignment& lists, const Graph& g);

/// {"colors": {"v": c}}; uncolored vertices are omitted.
Json coloring_to_json(const Coloring& c, const Graph& g);
Coloring coloring_from_json(const Json& j, const Graph& g);

/// {"sizes": {"v": n}, "default": n}; "default" covers unlisted vertices.
SizeFunction sizes_from_json(const Json& j, const Graph& g);
Json sizes_to_json(const SizeFunction& f, const Graph& g);

/// {"X": [...], "F": [[...], ...]}
Hypergraph hypergraph_from_json(const Json& j);

/// Name, palette, roles, sizes and metadata (the graph itself separately).
Json gadget_summary_json(const GadgetWithRoles& gadget);

/// Graphviz rendering; lists and colors become vertex labels when given.
std::string to_dot(const Graph& g, const ListAssignment* lists = nullptr, const Coloring* coloring = nullptr);

}  // namespace kchoose
