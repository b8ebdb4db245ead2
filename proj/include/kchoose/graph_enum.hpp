#pragma once

#include <cstdint>
#include <vector>

#include "kchoose/graph.hpp"

namespace kchoose {

/// Canonical code of a graph on at most 11 vertices: the upper-triangle
/// adjacency bits under the lexicographically smallest relabeling that
/// respects a color-refinement partition. Equal codes iff isomorphic.
std::uint64_t canonical_code(const Graph& g);

/// All graphs on `n` vertices (n <= 9) up to isomorphism, vertices named
/// v1..vn, in increasing canonical-code order. Built by vertex augmentation
/// from the graphs on n - 1 vertices.
std::vector<Graph> all_graphs(int n);

/// The connected members of all_graphs(n).
std::vector<Graph> all_connected_graphs(int n);

}  // namespace kchoose
