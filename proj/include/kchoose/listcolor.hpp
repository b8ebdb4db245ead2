#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "kchoose/gadget_types.hpp"
#include "kchoose/graph.hpp"
#include "kchoose/lists.hpp"

namespace kchoose {

/// Raised when an operation's precondition fails at a specific vertex.
class ListColorError : public std::invalid_argument {
 public:
  ListColorError(const std::string& what, VertexId vertex) : std::invalid_argument(what), vertex_(vertex) {}
  VertexId vertex() const { return vertex_; }

 private:
  VertexId vertex_;
};

/// Exact list coloring. Returns the lexicographically first proper list
/// coloring (vertex order, then color order) extending `pins`, or nothing if
/// none exists. Pins truncate the pinned lists to singletons; a pin whose
/// color is outside the vertex's list throws ListColorError.
std::optional<Coloring> solve(const Graph& g, const ListAssignment& lists, std::span<const Pin> pins = {});

/// Feasibility only: MRV backtracking with singleton propagation, no
/// witness canonicalization. This is the hot path of the choosability
/// deciders.
bool is_feasible(const Graph& g, const ListAssignment& lists);

/// Number of proper list colorings (intended for up to ~20 vertices).
std::uint64_t count_colorings(const Graph& g, const ListAssignment& lists, std::span<const Pin> pins = {});

/// Colors order[0] with `first`, then every later vertex with the first color
/// of its list not used by an earlier neighbor. Requires
/// |L(v_i)| >= d^-(v_i) + 1 for every position; throws ListColorError naming
/// the offending vertex otherwise.
Coloring greedy_order_color(const Graph& g, std::span<const VertexId> order, const ListAssignment& lists,
                            Color first);

/// Whether greedy_order_color's precondition holds for `order`.
bool greedy_applicable(const Graph& g, std::span<const VertexId> order, const ListAssignment& lists);

/// Linear-time coloring of a bipartite graph with 3-lists from palette 4 and
/// one precolored vertex. The pinned vertex's side receives at most two
/// colors.
Coloring color_bipartite_34(const Graph& g, const ListAssignment& lists, Pin pin);

/// Colors one block, honoring the pin if given (a block-local vertex index).
using BlockColorer =
    std::function<std::optional<Coloring>(const Graph& block, const ListAssignment& lists, std::optional<Pin> pin)>;

/// Root blocks: exact solver. Pinned blocks: greedy when its degree
/// condition holds (also with the K_{1,1,p} hub-first order), the bipartite
/// [3,4] colorer when applicable, the exact solver otherwise.
std::optional<Coloring> default_block_colorer(const Graph& block, const ListAssignment& lists,
                                              std::optional<Pin> pin);

/// Colors each component's root block first, then the remaining blocks in
/// BFS order of the block tree with the shared cut vertex precolored.
std::optional<Coloring> color_via_blocks(const Graph& g, const ListAssignment& lists,
                                         const BlockColorer& colorer = default_block_colorer);

/// Polynomial list coloring for instances built by hypergraph_reduction:
/// tries every ordered pair of colors for the two free clique vertices.
/// Throws std::invalid_argument if roles or list sizes do not match.
std::optional<Coloring> color_reduction_class(const GadgetWithRoles& instance, const ListAssignment& lists);

}  // namespace kchoose
