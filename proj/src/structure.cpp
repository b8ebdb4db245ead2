#include "kchoose/structure.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace kchoose {

CoreResult compute_core(const Graph& g) {
  // Smallest candidate first.
  return compute_core_with(g, [](const std::vector<VertexId>& cands) {
    return static_cast<std::size_t>(std::min_element(cands.begin(), cands.end()) - cands.begin());
  });
}

std::string to_string(const CoreClass& c) {
  using T = CoreClass::Tag;
  switch (c.tag) {
    case T::K1: return "K1";
    case T::EvenCycle: return "EvenCycle(" + std::to_string(c.param) + ")";
    case T::Theta222m: return "Theta222m(" + std::to_string(c.param) + ")";
    case T::K2m: return "K2m(" + std::to_string(c.param) + ")";
    case T::Other: return "Other";
  }
  return "Other";
}

namespace {

struct ThetaArm {
  VertexId end;
  int length;
};

// Walks from hub along `first` through degree-2 vertices until a vertex of
// another degree is reached.
ThetaArm walk_arm(const Graph& g, VertexId hub, VertexId first) {
  VertexId prev = hub;
  VertexId cur = first;
  int length = 1;
  while (g.degree(cur) == 2) {
    const auto nb = g.neighbors(cur);
    const VertexId next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
    ++length;
  }
  return {cur, length};
}

}  // namespace

CoreClass classify_core_component(const Graph& g) {
  using T = CoreClass::Tag;
  const std::size_t n = g.order();
  if (n == 0) throw std::invalid_argument("empty graph");
  if (!is_connected(g)) throw std::invalid_argument("core component must be connected");
  if (n == 1) return {T::K1, 0};
  std::vector<VertexId> deg3, deg_other;
  std::size_t deg2 = 0;
  for (VertexId v = 0; v < n; ++v) {
    const std::size_t d = g.degree(v);
    if (d < 2) throw std::invalid_argument("vertex '" + g.name(v) + "' has degree < 2: not a core");
    if (d == 2) {
      ++deg2;
    } else if (d == 3) {
      deg3.push_back(v);
    } else {
      deg_other.push_back(v);
    }
  }
  if (deg2 == n) {
    return n % 2 == 0 ? CoreClass{T::EvenCycle, static_cast<int>(n)} : CoreClass{T::Other, 0};
  }
  if (deg3.size() == 2 && deg_other.empty()) {
    const VertexId x = deg3[0], y = deg3[1];
    std::vector<int> lengths;
    bool theta = true;
    for (VertexId w : g.neighbors(x)) {
      if (w == y) {
        lengths.push_back(1);
        continue;
      }
      const ThetaArm arm = walk_arm(g, x, w);
      if (arm.end != y) {
        theta = false;
        break;
      }
      lengths.push_back(arm.length);
    }
    if (theta) {
      std::sort(lengths.begin(), lengths.end());
      if (lengths[0] == 2 && lengths[1] == 2 && lengths[2] % 2 == 0) return {T::Theta222m, lengths[2] / 2};
    }
    return {T::Other, 0};
  }
  // K_{2,m}: two hubs of degree m = n - 2, the rest degree 2 adjacent to both.
  std::vector<VertexId> hubs;
  for (VertexId v = 0; v < n; ++v)
    if (g.degree(v) == n - 2) hubs.push_back(v);
  if (n >= 4 && hubs.size() == 2 && deg2 == n - 2 && !g.adjacent(hubs[0], hubs[1])) {
    bool ok = true;
    for (VertexId v = 0; v < n && ok; ++v) {
      if (v == hubs[0] || v == hubs[1]) continue;
      ok = g.adjacent(v, hubs[0]) && g.adjacent(v, hubs[1]);
    }
    if (ok) return {T::K2m, static_cast<int>(n - 2)};
  }
  return {T::Other, 0};
}

BlockDecomposition block_decomposition(const Graph& g, std::optional<VertexId> root_vertex) {
  const std::size_t n = g.order();
  BlockDecomposition out;
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, kUnseen), low(n, 0), parent(n, kUnseen), next_edge(n, 0);
  std::vector<Edge> edge_stack;
  std::size_t time = 0;

  auto close_block = [&](VertexId p, VertexId v) {
    std::vector<VertexId> block;
    while (true) {
      const Edge e = edge_stack.back();
      edge_stack.pop_back();
      block.push_back(e.u);
      block.push_back(e.v);
      if (e.u == p && e.v == v) break;
    }
    std::sort(block.begin(), block.end());
    block.erase(std::unique(block.begin(), block.end()), block.end());
    out.blocks.push_back(std::move(block));
  };

  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (disc[s] != kUnseen) continue;
    if (g.degree(s) == 0) {
      disc[s] = time++;
      out.isolated.push_back(s);
      continue;
    }
    disc[s] = low[s] = time++;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      const auto nb = g.neighbors(v);
      if (next_edge[v] < nb.size()) {
        const VertexId w = nb[next_edge[v]++];
        if (disc[w] == kUnseen) {
          parent[w] = v;
          edge_stack.push_back({v, w});
          disc[w] = low[w] = time++;
          stack.push_back(w);
        } else if (w != parent[v] && disc[w] < disc[v]) {
          edge_stack.push_back({v, w});
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        stack.pop_back();
        const VertexId p = parent[v];
        if (p != kUnseen) {
          low[p] = std::min(low[p], low[v]);
          if (low[v] >= disc[p]) close_block(p, v);
        }
      }
    }
  }

  std::vector<std::vector<std::size_t>> blocks_of(n);
  for (std::size_t b = 0; b < out.blocks.size(); ++b)
    for (VertexId v : out.blocks[b]) blocks_of[v].push_back(b);
  out.block_cuts.resize(out.blocks.size());
  for (VertexId v = 0; v < n; ++v) {
    if (blocks_of[v].size() >= 2) {
      out.cut_vertices.push_back(v);
      for (std::size_t b : blocks_of[v]) out.block_cuts[b].push_back(v);
    }
  }

  std::vector<char> visited(out.blocks.size(), 0);
  auto bfs_from = [&](std::size_t root) {
    std::deque<std::size_t> queue{root};
    visited[root] = 1;
    out.bfs_order.push_back({root, std::nullopt});
    while (!queue.empty()) {
      const std::size_t b = queue.front();
      queue.pop_front();
      for (VertexId c : out.block_cuts[b]) {
        for (std::size_t nb : blocks_of[c]) {
          if (visited[nb]) continue;
          visited[nb] = 1;
          out.bfs_order.push_back({nb, c});
          queue.push_back(nb);
        }
      }
    }
  };
  if (root_vertex) {
    if (*root_vertex >= n) throw std::out_of_range("root vertex out of range");
    if (!blocks_of[*root_vertex].empty()) bfs_from(blocks_of[*root_vertex].front());
  }
  for (VertexId v = 0; v < n; ++v) {
    if (!blocks_of[v].empty() && !visited[blocks_of[v].front()]) bfs_from(blocks_of[v].front());
  }
  return out;
}

std::string to_string(const BlockClass& c) {
  using T = BlockClass::Tag;
  const std::string p = "(" + std::to_string(c.param) + ")";
  switch (c.tag) {
    case T::SingleEdge: return "SingleEdge";
    case T::K4: return "K4";
    case T::OddCycle: return "OddCycle" + p;
    case T::EvenCycle: return "EvenCycle" + p;
    case T::TwoConnectedBipartite: return "TwoConnectedBipartite";
    case T::K11p: return "K11p" + p;
    case T::Clique: return "Clique" + p;
    case T::Other: return "Other";
  }
  return "Other";
}

BlockClass classify_block(const Graph& block) {
  using T = BlockClass::Tag;
  const std::size_t n = block.order();
  const int ni = static_cast<int>(n);
  if (n == 2 && block.size() == 1) return {T::SingleEdge, 0};
  if (n < 3) return {T::Other, 0};
  const bool complete = block.size() == n * (n - 1) / 2;
  if (complete && n == 4) return {T::K4, 4};
  bool all_deg2 = true;
  for (VertexId v = 0; v < n; ++v) all_deg2 = all_deg2 && block.degree(v) == 2;
  if (all_deg2 && is_connected(block)) return n % 2 ? BlockClass{T::OddCycle, ni} : BlockClass{T::EvenCycle, ni};
  if (is_bipartite(block)) return {T::TwoConnectedBipartite, 0};
  std::vector<VertexId> hubs;
  std::size_t rest_ok = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (block.degree(v) == n - 1) {
      hubs.push_back(v);
    } else if (block.degree(v) == 2) {
      ++rest_ok;
    }
  }
  if (n >= 4 && hubs.size() == 2 && rest_ok == n - 2) return {T::K11p, ni - 2};
  if (complete && n >= 5) return {T::Clique, ni};
  return {T::Other, 0};
}

namespace {

template <typename Accept>
bool all_blocks(const Graph& g, Accept&& accept) {
  const BlockDecomposition bd = block_decomposition(g);
  for (const auto& b : bd.blocks) {
    if (!accept(classify_block(g.induced(b)))) return false;
  }
  return true;
}

}  // namespace

bool is_quasi_line_perfect(const Graph& g) {
  using T = BlockClass::Tag;
  return all_blocks(g, [](const BlockClass& c) {
    return c.tag == T::SingleEdge || c.tag == T::K4 || c.tag == T::OddCycle || c.tag == T::EvenCycle ||
           c.tag == T::TwoConnectedBipartite || c.tag == T::K11p;
  });
}

bool is_block_cactus(const Graph& g) {
  using T = BlockClass::Tag;
  return all_blocks(g, [](const BlockClass& c) {
    return c.tag == T::SingleEdge || c.tag == T::K4 || c.tag == T::Clique || c.tag == T::OddCycle ||
           c.tag == T::EvenCycle;
  });
}

Graph merge_neighbors(const Graph& g, VertexId v) {
  if (v >= g.order()) throw std::out_of_range("merge_neighbors: vertex absent");
  const auto nb = g.neighbors(v);
  std::vector<char> in_nb(g.order(), 0);
  for (VertexId w : nb) in_nb[w] = 1;
  for (VertexId a : nb)
    for (VertexId b : g.neighbors(a))
      if (in_nb[b]) throw std::invalid_argument("merge_neighbors: neighbors of '" + g.name(v) + "' are adjacent");

  Graph out;
  std::vector<VertexId> remap(g.order(), 0);
  std::optional<VertexId> merged;
  for (VertexId u = 0; u < g.order(); ++u) {
    if (u == v) continue;
    if (in_nb[u]) {
      if (!merged) merged = out.add_vertex(fresh_name(g, g.name(v) + "'"));
      remap[u] = *merged;
    } else {
      remap[u] = out.add_vertex(g.name(u));
    }
  }
  for (const Edge& e : g.edges()) {
    if (e.u == v || e.v == v) continue;
    out.add_edge_if_absent(remap[e.u], remap[e.v]);
  }
  return out;
}

std::vector<VertexId> Bipartition::black() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < side.size(); ++v)
    if (side[v] == 0) out.push_back(v);
  return out;
}

std::vector<VertexId> Bipartition::white() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < side.size(); ++v)
    if (side[v] == 1) out.push_back(v);
  return out;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  Bipartition bp;
  bp.side.assign(g.order(), -1);
  std::deque<VertexId> queue;
  for (VertexId s = 0; s < g.order(); ++s) {
    if (bp.side[s] != -1) continue;
    bp.side[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (VertexId w : g.neighbors(v)) {
        if (bp.side[w] == -1) {
          bp.side[w] = 1 - bp.side[v];
          queue.push_back(w);
        } else if (bp.side[w] == bp.side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return bp;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

bool has_triangle(const Graph& g) {
  for (const Edge& e : g.edges()) {
    const auto a = g.neighbors(e.u);
    const auto b = g.neighbors(e.v);
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return true;
      a[i] < b[j] ? ++i : ++j;
    }
  }
  return false;
}

}  // namespace kchoose
