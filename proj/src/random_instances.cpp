#include "kchoose/random_instances.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace kchoose {

Graph random_graph(Rng& rng, int n, double p) {
  Graph g;
  for (int i = 1; i <= n; ++i) g.add_vertex("v" + std::to_string(i));
  std::bernoulli_distribution edge(p);
  for (VertexId u = 0; u < g.order(); ++u)
    for (VertexId v = u + 1; v < g.order(); ++v)
      if (edge(rng)) g.add_edge(u, v);
  return g;
}

Graph random_bipartite(Rng& rng, int n, double p) {
  Graph g;
  const int black = n < 2 ? n : std::uniform_int_distribution<int>(1, n - 1)(rng);
  for (int i = 1; i <= black; ++i) g.add_vertex("b" + std::to_string(i));
  for (int i = 1; i <= n - black; ++i) g.add_vertex("w" + std::to_string(i));
  std::bernoulli_distribution edge(p);
  for (int b = 0; b < black; ++b)
    for (int w = black; w < n; ++w)
      if (edge(rng)) g.add_edge(static_cast<VertexId>(b), static_cast<VertexId>(w));
  return g;
}

ColorSet random_list(Rng& rng, int size, int palette) {
  std::vector<Color> colors(static_cast<std::size_t>(palette));
  std::iota(colors.begin(), colors.end(), 1);
  std::shuffle(colors.begin(), colors.end(), rng);
  ColorSet out;
  for (int i = 0; i < size; ++i) out.insert(colors[static_cast<std::size_t>(i)]);
  return out;
}

ListAssignment random_lists(Rng& rng, const SizeFunction& f, int palette) {
  ListAssignment out{palette, {}};
  for (int s : f.sizes) out.lists.push_back(random_list(rng, s, palette));
  return out;
}

}  // namespace kchoose
