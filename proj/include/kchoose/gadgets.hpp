#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kchoose/gadget_types.hpp"
#include "kchoose/graph.hpp"
#include "kchoose/lists.hpp"

namespace kchoose {

// Constructions whose source material numbers colors from 0 take colors
// shifted by one; such gadgets carry metadata "color_shift" = "1".

/// Six vertices u, ubar, u1..u4: the 4-cycle u1u2u3u4 with pendants u-u1 and
/// ubar-u3. Sizes 2, palette 3. Roles: u, ubar, cycle.
GadgetWithRoles forall_variable_gadget();

/// Path x, t1, ..., t(length-1), y with the 2-lists that force y to
/// `target` + 1 once x takes color 1. `target` is 0, 1 or 2 in the
/// unshifted numbering. Roles x, y and their aliases I, O; metadata
/// pin_color and forced_color.
GadgetWithRoles path_transmitter(int length, int target);

/// The diamond with each vertex's size equal to its degree.
GadgetWithRoles diamond_gadget(int palette);

/// Two diamonds glued at a degree-2 vertex X; Y and Z are the remaining
/// degree-2 vertices. Vertex order X, b1, c1, Y, b2, c2, Z. Sizes 2 on X, Y,
/// Z and 3 elsewhere, palette 4. Roles X, Y, Z and S = {X, Y, Z}. The
/// canonical assignment is infeasible and leaves one color off X, Y, Z.
GadgetWithRoles gadget_H();

/// Adds a copy of `gadget` to `g`, joins every vertex of its role S to `v0`
/// and raises the size of v0 and of S by one. Gadget vertices are named
/// "<gadget>[<v0>].<vertex>", primed on collision. Roles: base, gadget, S,
/// v0. Throws std::invalid_argument if f(v0) >= palette.
GadgetWithRoles compose_ff(const Graph& g, const SizeFunction& f, VertexId v0, const GadgetWithRoles& gadget,
                           int palette);

/// One gadget_H per listed vertex (those carry 2-lists, all others 3-lists).
/// The result has size 3 everywhere, palette 4, and a 3-coloring
/// certificate when g is bipartite.
GadgetWithRoles attach_H_everywhere(const Graph& g, std::span<const VertexId> two_list);

/// The 18-vertex gadget: 5-cycles ABCDE and ABFGH sharing AB, inner
/// 5-cycles abcde and a'b'fgh matched to them. Sizes 2 on C, E, F, H and 3
/// elsewhere, palette 5.
GadgetWithRoles gadget_G3();

/// Which vertex of one copy is identified with which vertex of the next when
/// three copies of gadget_G3 are glued around their common vertex A.
struct GlueSpec {
  std::string left = "E";
  std::string right = "H";
};

/// Three copies of gadget_G3 sharing A, copy i's `left` vertex identified
/// with copy i+1's `right` vertex (cyclically). Role S holds the size-2
/// vertices. Throws std::invalid_argument if the result has a triangle, if
/// |S| != 9 or if the glue merges vertices of different sizes.
GadgetWithRoles gadget_G(const GlueSpec& glue = {});

/// Three copies of gadget_G plus a vertex "hub" adjacent to all their S
/// vertices. Size 3 everywhere, palette 5.
GadgetWithRoles candidate148(const GlueSpec& glue = {});

/// K_{C(2l-2,l), C(2l-2,l-1)}; B carries all l-subsets and W all
/// (l-1)-subsets of {1..2l-2}. Palette 2l-1, roles B, W and S = W.
GadgetWithRoles bipartite_critical_gadget(int ell);

/// Repeated compose_ff with bipartite_critical_gadget(ell) until every
/// original vertex has size ell. Throws std::invalid_argument unless g is
/// bipartite, ell >= 3 and every f(v) is 2 or 3.
GadgetWithRoles bipartite_ch_reduction(const Graph& g, const SizeFunction& f, int ell);

struct Hypergraph {
  std::vector<std::string> vertices;
  std::vector<std::vector<std::string>> edges;
};

/// A 2-coloring (0/1 per vertex, in vertex order) leaving no edge
/// monochromatic, the first one in binary counting order.
std::optional<std::vector<int>> two_coloring(const Hypergraph& h);

/// The list-coloring instance built from a hypergraph with m >= 2 edges of
/// size 1..3. Roles V0 (ordered, m+1 vertices), VF, VX (in hypergraph
/// vertex order), VS (one vertex per color pair other than {1,2}). Sizes
/// m-1 on VS, m on VX, m+1 elsewhere; palette m+1; certificate is an
/// (m+1)-coloring.
GadgetWithRoles hypergraph_reduction(const Hypergraph& h);

/// Infeasible assignment built from a proper 2-coloring of the hypergraph
/// behind `instance`. Throws std::invalid_argument if the coloring leaves a
/// hyperedge monochromatic.
ListAssignment infeasible_from_2coloring(const GadgetWithRoles& instance, std::span<const int> coloring);

/// Embeds an induced subgrid (every vertex has coordinates) into its
/// bounding grid; new vertices get size 5. Roles S, padding.
GadgetWithRoles pad_subgrid_to_grid(const Graph& s, const SizeFunction& f, int palette = 5);

/// Adds u1, u2, u3 closing the 6-cycle v1 u1 v2 u2 v3 u3. Sizes 2 on the
/// cycle and 3 elsewhere, palette 3; the canonical assignment is the rigid
/// one that forces three colors on v1, v2, v3. Roles C, V, U.
GadgetWithRoles c6_preext_reduction(const Graph& g, VertexId v1, VertexId v2, VertexId v3);

/// Replaces every 2-list vertex v by a 3-list vertex with an attached copy of
/// gadget_H whose lists block the added color at v. Canonical assignment:
/// the new 3-lists; certificate: a 3-coloring when g is bipartite.
GadgetWithRoles listcol_reduction_34(const Graph& g, const ListAssignment& lists);

}  // namespace kchoose
