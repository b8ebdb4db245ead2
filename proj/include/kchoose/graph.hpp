#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace kchoose {

/// Index of a vertex in a graph's declared order. All algorithms iterate in
/// increasing index order, which makes every search and witness deterministic.
using VertexId = std::size_t;

struct Edge {
  VertexId u;
  VertexId v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Row/column position of a vertex inside a parent grid.
struct GridCoord {
  int row;
  int col;
  friend bool operator==(const GridCoord&, const GridCoord&) = default;
  friend auto operator<=>(const GridCoord&, const GridCoord&) = default;
};

/// Simple undirected graph with string vertex identifiers.
///
/// Vertices keep their insertion order; neighbor lists are kept sorted by
/// index. Loops and parallel edges are rejected on insertion.
class Graph {
 public:
  Graph() = default;

  VertexId add_vertex(std::string name);
  void add_edge(VertexId u, VertexId v);
  void add_edge(std::string_view u, std::string_view v);

  /// Adds the edge unless it is already present; still rejects loops.
  bool add_edge_if_absent(VertexId u, VertexId v);

  std::size_t order() const { return names_.size(); }
  std::size_t size() const { return edge_count_; }
  bool empty() const { return names_.empty(); }

  const std::string& name(VertexId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<VertexId> find(std::string_view name) const;
  /// Throws std::out_of_range if the vertex does not exist.
  VertexId index(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name).has_value(); }

  std::span<const VertexId> neighbors(VertexId v) const { return adj_.at(v); }
  std::size_t degree(VertexId v) const { return adj_.at(v).size(); }
  std::size_t max_degree() const;
  bool adjacent(VertexId u, VertexId v) const;

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  /// Subgraph induced by `keep`, preserving the relative vertex order and
  /// coordinates.
  Graph induced(std::span<const VertexId> keep) const;

  bool has_coords() const { return !coords_.empty(); }
  std::optional<GridCoord> coord(VertexId v) const;
  void set_coord(VertexId v, GridCoord c);

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> by_name_;
  std::vector<std::vector<VertexId>> adj_;
  std::size_t edge_count_ = 0;
  std::unordered_map<VertexId, GridCoord> coords_;
};

/// Connected components, each listed in increasing vertex order; components
/// are ordered by their smallest vertex.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// Returns a name not yet used in `g`, starting from `base` and appending
/// primes until free.
std::string fresh_name(const Graph& g, std::string base);

}  // namespace kchoose
