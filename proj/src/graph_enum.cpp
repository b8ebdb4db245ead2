#include "kchoose/graph_enum.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace kchoose {

namespace {

using Masks = std::vector<std::uint32_t>;

std::uint64_t encode(const Masks& adj, const std::vector<int>& perm) {
  // perm[i] is the old vertex placed at new position i.
  const int n = static_cast<int>(perm.size());
  std::uint64_t code = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      code <<= 1;
      if (adj[perm[i]] >> perm[j] & 1u) code |= 1;
    }
  }
  return code;
}

std::vector<int> refine(const Masks& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = __builtin_popcount(adj[v]);
  std::size_t classes = 0;
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> nb;
      for (int w = 0; w < n; ++w)
        if (adj[v] >> w & 1u) nb.push_back(color[w]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<int>> uniq(sig);
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (int v = 0; v < n; ++v)
      color[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
    if (uniq.size() == classes) break;
    classes = uniq.size();
  }
  return color;
}

std::uint64_t canonical(const Masks& adj) {
  const int n = static_cast<int>(adj.size());
  if (n > 11) throw std::invalid_argument("canonical_code supports at most 11 vertices");
  const std::vector<int> color = refine(adj);
  std::vector<std::vector<int>> cells;
  for (int c = 0;; ++c) {
    std::vector<int> cell;
    for (int v = 0; v < n; ++v)
      if (color[v] == c) cell.push_back(v);
    if (cell.empty()) break;
    cells.push_back(std::move(cell));
  }
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> perm;
  // Odometer over the permutations of every cell.
  auto recurse = [&](auto&& self, std::size_t cell) -> void {
    if (cell == cells.size()) {
      best = std::min(best, encode(adj, perm));
      return;
    }
    std::vector<int> members = cells[cell];
    do {
      const std::size_t mark = perm.size();
      perm.insert(perm.end(), members.begin(), members.end());
      self(self, cell + 1);
      perm.resize(mark);
    } while (std::next_permutation(members.begin(), members.end()));
  };
  recurse(recurse, 0);
  return best;
}

Masks to_masks(const Graph& g) {
  Masks adj(g.order(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  return adj;
}

Masks decode(std::uint64_t code, int n) {
  Masks adj(n, 0);
  int bit = n * (n - 1) / 2 - 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, --bit) {
      if (code >> bit & 1u) {
        adj[i] |= 1u << j;
        adj[j] |= 1u << i;
      }
    }
  }
  return adj;
}

Graph from_masks(const Masks& adj) {
  Graph g;
  const int n = static_cast<int>(adj.size());
  for (int i = 1; i <= n; ++i) g.add_vertex("v" + std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (adj[i] >> j & 1u) g.add_edge(i, j);
  return g;
}

std::vector<std::uint64_t> codes_for(int n) {
  if (n < 1 || n > 9) throw std::invalid_argument("all_graphs supports 1 <= n <= 9");
  if (n == 1) return {0};
  std::set<std::uint64_t> found;
  for (std::uint64_t base : codes_for(n - 1)) {
    Masks small = decode(base, n - 1);
    for (std::uint32_t subset = 0; subset < (1u << (n - 1)); ++subset) {
      Masks adj(small);
      adj.push_back(subset);
      for (int v = 0; v < n - 1; ++v)
        if (subset >> v & 1u) adj[v] |= 1u << (n - 1);
      found.insert(canonical(adj));
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) { return canonical(to_masks(g)); }

std::vector<Graph> all_graphs(int n) {
  std::vector<Graph> out;
  for (std::uint64_t code : codes_for(n)) out.push_back(from_masks(decode(code, n)));
  return out;
}

std::vector<Graph> all_connected_graphs(int n) {
  std::vector<Graph> out;
  for (Graph& g : all_graphs(n))
    if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

}  // namespace kchoose
