#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kchoose/graph.hpp"

namespace kchoose {

/// One step of core computation: `vertex` had degree 1 and was removed along
/// with its edge to `neighbor`.
struct CoreRemoval {
  VertexId vertex;
  VertexId neighbor;
};

struct CoreResult {
  Graph core;
  /// Removal steps in the order performed, indices refer to the input graph.
  std::vector<CoreRemoval> removal_order;
  /// Input-graph indices of the vertices kept in `core`, in order.
  std::vector<VertexId> kept;
};

/// Repeatedly deletes a vertex of degree 1, always the smallest-index one.
CoreResult compute_core(const Graph& g);

/// Same result set, but the degree-1 vertex removed at each step is chosen by
/// `pick` among the current candidates. Used to check confluence.
template <typename Pick>
CoreResult compute_core_with(const Graph& g, Pick&& pick);

struct CoreClass {
  enum class Tag { K1, EvenCycle, Theta222m, K2m, Other };
  Tag tag = Tag::Other;
  /// Cycle length for EvenCycle, m for Theta222m (theta_{2,2,2m}) and K2m
  /// (K_{2,m}); zero otherwise.
  int param = 0;

  friend bool operator==(const CoreClass&, const CoreClass&) = default;
};

std::string to_string(const CoreClass& c);

/// Classifies a connected core by degree analysis. Priority for overlapping
/// families: K1, EvenCycle, Theta222m, K2m. So K_{2,2} is EvenCycle(4) and
/// K_{2,3} is Theta222m(1). Throws std::invalid_argument on a vertex of
/// degree 1 or a disconnected input.
CoreClass classify_core_component(const Graph& g);

struct BlockVisit {
  std::size_t block;
  /// The single vertex shared with the union of earlier blocks of the same
  /// component; absent for a component's root block.
  std::optional<VertexId> attach;
};

struct BlockDecomposition {
  /// Vertex sets, each sorted. Blocks of a component are numbered in the
  /// order their DFS completes.
  std::vector<std::vector<VertexId>> blocks;
  std::vector<VertexId> cut_vertices;
  /// Block-tree adjacency: for each block, its cut vertices.
  std::vector<std::vector<VertexId>> block_cuts;
  /// BFS order over the block tree, one root per component with an edge.
  std::vector<BlockVisit> bfs_order;
  /// Vertices without edges; they belong to no block.
  std::vector<VertexId> isolated;
};

/// Biconnected components with their block tree, linear time (iterative
/// Hopcroft-Tarjan). `root_vertex`, if given, selects the root block of its
/// component: the first block containing it.
BlockDecomposition block_decomposition(const Graph& g, std::optional<VertexId> root_vertex = std::nullopt);

struct BlockClass {
  enum class Tag { SingleEdge, K4, OddCycle, EvenCycle, TwoConnectedBipartite, K11p, Clique, Other };
  Tag tag = Tag::Other;
  /// Cycle length, p of K_{1,1,p}, or clique order.
  int param = 0;

  friend bool operator==(const BlockClass&, const BlockClass&) = default;
};

std::string to_string(const BlockClass& c);

/// Mutually exclusive tag, checked in the order SingleEdge, K4, OddCycle
/// (the triangle included), EvenCycle, TwoConnectedBipartite, K11p (p >= 2),
/// Clique (n >= 5), Other.
BlockClass classify_block(const Graph& block);

/// Every block is K4, 2-connected bipartite (even cycles included), K_{1,1,p},
/// an odd cycle or a single edge.
bool is_quasi_line_perfect(const Graph& g);

/// Every block is a clique or a cycle of length at least 4.
bool is_block_cactus(const Graph& g);

/// Removes `v` and contracts its neighborhood into one vertex named
/// `v'` (fresh), placed at the position of v's first neighbor. Parallel edges
/// are merged. A vertex without neighbors is simply removed. Throws if `v` is
/// absent or two neighbors of `v` are adjacent (a loop would appear).
Graph merge_neighbors(const Graph& g, VertexId v);

struct Bipartition {
  /// side[v] == 0 for the part B, 1 for W.
  std::vector<int> side;
  std::vector<VertexId> black() const;
  std::vector<VertexId> white() const;
};

/// Two-coloring with the smallest vertex of each component in B; absent if
/// an odd cycle exists.
std::optional<Bipartition> bipartition(const Graph& g);

bool is_bipartite(const Graph& g);

/// Whether `g` contains a triangle.
bool has_triangle(const Graph& g);

// --- template implementation -------------------------------------------------

template <typename Pick>
CoreResult compute_core_with(const Graph& g, Pick&& pick) {
  const std::size_t n = g.order();
  std::vector<std::size_t> deg(n);
  std::vector<char> removed(n, 0);
  std::vector<VertexId> candidates;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] == 1) candidates.push_back(v);
  }
  CoreResult out;
  while (!candidates.empty()) {
    const std::size_t at = pick(static_cast<const std::vector<VertexId>&>(candidates));
    const VertexId v = candidates.at(at);
    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(at));
    if (removed[v] || deg[v] != 1) continue;
    VertexId u = 0;
    for (VertexId w : g.neighbors(v)) {
      if (!removed[w]) {
        u = w;
        break;
      }
    }
    removed[v] = 1;
    deg[v] = 0;
    --deg[u];
    out.removal_order.push_back({v, u});
    if (deg[u] == 1) candidates.push_back(u);
    // K2 remnant: u now isolated, v removed; the pair shrinks to u alone.
    if (deg[u] == 0) std::erase(candidates, u);
  }
  for (VertexId v = 0; v < n; ++v)
    if (!removed[v]) out.kept.push_back(v);
  out.core = g.induced(out.kept);
  return out;
}

}  // namespace kchoose
