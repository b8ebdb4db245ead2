#pragma once

#include <random>

#include "kchoose/graph.hpp"
#include "kchoose/lists.hpp"

namespace kchoose {

using Rng = std::mt19937_64;

/// G(n, p) with vertices v1..vn.
Graph random_graph(Rng& rng, int n, double p);

/// Random bipartite graph: vertices b1.. and w1.. (part sizes drawn
/// uniformly, both nonempty when n >= 2), each cross pair an edge with
/// probability p.
Graph random_bipartite(Rng& rng, int n, double p);

/// A uniformly random subset of {1..palette} of the given size.
ColorSet random_list(Rng& rng, int size, int palette);

/// Independent random lists of the prescribed sizes.
ListAssignment random_lists(Rng& rng, const SizeFunction& f, int palette);

}  // namespace kchoose
