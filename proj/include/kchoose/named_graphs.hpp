#pragma once

#include <string_view>
#include <vector>

#include "kchoose/graph.hpp"

namespace kchoose {

// Builders for the named families. Vertex naming per family:
//   cycle, path, complete, diamond : v1..vn
//   complete_bipartite(p,q)        : b1..bp, w1..wq
//   complete_tripartite(p,q,r)     : a1.., b1.., c1..
//   k11p(p)                        : a, b (the clique), s1..sp
//   theta(lengths)                 : hubs x, y; internal vertices p<i>_<j>
//   gamma(p,q,r)                   : c1_1..c1_p, c2_1..c2_q, path r1..r(r-1);
//                                    c1_1 and c2_1 are the path ends (shared
//                                    vertex c1_1 when r = 0)
//   grid(p,q)                      : "i,j" (1-based) with coordinates

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int p, int q);
Graph complete_tripartite(int p, int q, int r);
Graph k11p(int p);
/// Theta graph with three or four internally disjoint paths between x and y.
/// At most one path may have length 1.
Graph theta_graph(std::vector<int> lengths);
Graph gamma_graph(int p, int q, int r);

struct GridGraph {
  Graph graph;
  int rows = 0;
  int cols = 0;
};

GridGraph grid_graph(int rows, int cols);
/// G(2,3).
GridGraph chocolate();
/// K4 minus the edge v1v4.
Graph diamond();

/// Parses a descriptor such as `cycle:6`, `theta:2,2,4`, `grid:3,5`,
/// `kbip:2,4`, `chocolate`. Throws std::invalid_argument on malformed input.
Graph build_named(std::string_view descriptor);

}  // namespace kchoose
