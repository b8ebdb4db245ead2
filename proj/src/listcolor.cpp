#include "kchoose/listcolor.hpp"

#include <algorithm>
#include <bit>

#include "kchoose/structure.hpp"

namespace kchoose {

namespace {

using Domains = std::vector<std::uint64_t>;

// Removes the color of every queued singleton vertex from its neighbors,
// queueing vertices that become singletons. False on a wipe-out.
bool propagate(const Graph& g, std::uint64_t* dom, std::vector<VertexId>& queue) {
  while (!queue.empty()) {
    const VertexId v = queue.back();
    queue.pop_back();
    const std::uint64_t bit = dom[v];
    for (VertexId w : g.neighbors(v)) {
      if (dom[w] & bit) {
        dom[w] &= ~bit;
        if (dom[w] == 0) return false;
        if (std::has_single_bit(dom[w])) queue.push_back(w);
      }
    }
  }
  return true;
}

// Depth-first search over propagated domains stored in `arena` rows; row
// `level` holds the current state. On success the row at `level` is a full
// assignment.
class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.order()) {}

  bool run(Domains& dom) {
    arena_.assign((n_ + 1) * n_, 0);
    std::copy(dom.begin(), dom.end(), arena_.begin());
    if (!descend(0)) return false;
    std::copy(arena_.begin() + static_cast<std::ptrdiff_t>(solved_ * n_),
              arena_.begin() + static_cast<std::ptrdiff_t>((solved_ + 1) * n_), dom.begin());
    return true;
  }

 private:
  bool descend(std::size_t level) {
    std::uint64_t* cur = &arena_[level * n_];
    VertexId best = n_;
    int best_size = 65;
    for (VertexId v = 0; v < n_; ++v) {
      const int s = std::popcount(cur[v]);
      if (s > 1 && s < best_size) {
        best = v;
        best_size = s;
        if (s == 2) break;
      }
    }
    if (best == n_) {
      solved_ = level;
      return true;
    }
    std::uint64_t* next = cur + n_;
    for (std::uint64_t rest = cur[best]; rest; rest &= rest - 1) {
      std::copy(cur, cur + n_, next);
      next[best] = rest & (~rest + 1);
      queue_.clear();
      queue_.push_back(best);
      if (propagate(g_, next, queue_) && descend(level + 1)) return true;
    }
    return false;
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::uint64_t> arena_;
  std::vector<VertexId> queue_;
  std::size_t solved_ = 0;
};

// Initial domains with pins applied and singletons propagated; nothing on
// an immediate contradiction.
std::optional<Domains> initial_domains(const Graph& g, const ListAssignment& lists, std::span<const Pin> pins) {
  lists.validate(g);
  Domains dom(g.order());
  for (VertexId v = 0; v < g.order(); ++v) dom[v] = lists[v].bits();
  for (const Pin& p : pins) {
    if (p.vertex >= g.order()) throw std::out_of_range("pin on unknown vertex");
    if (!lists[p.vertex].contains(p.color)) {
      throw ListColorError("pin color " + std::to_string(p.color) + " not in the list of '" + g.name(p.vertex) + "'",
                           p.vertex);
    }
    if ((dom[p.vertex] & ColorSet::single(p.color).bits()) == 0) return std::nullopt;  // conflicting pins
    dom[p.vertex] = ColorSet::single(p.color).bits();
  }
  std::vector<VertexId> queue;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (dom[v] == 0) return std::nullopt;
    if (std::has_single_bit(dom[v])) queue.push_back(v);
  }
  if (!propagate(g, dom.data(), queue)) return std::nullopt;
  return dom;
}

bool feasible_from(const Graph& g, Domains dom) {
  Search search(g);
  return search.run(dom);
}

}  // namespace

std::optional<Coloring> solve(const Graph& g, const ListAssignment& lists, std::span<const Pin> pins) {
  auto start = initial_domains(g, lists, pins);
  if (!start) return std::nullopt;
  Domains dom = std::move(*start);
  if (!feasible_from(g, dom)) return std::nullopt;
  // Fix vertices one at a time to their smallest extendable color.
  std::vector<VertexId> queue;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (std::has_single_bit(dom[v])) continue;
    for (std::uint64_t rest = dom[v]; rest; rest &= rest - 1) {
      Domains trial = dom;
      trial[v] = rest & (~rest + 1);
      queue.assign(1, v);
      if (propagate(g, trial.data(), queue) && feasible_from(g, trial)) {
        dom = std::move(trial);
        break;
      }
    }
  }
  Coloring out;
  out.colors.reserve(g.order());
  for (std::uint64_t d : dom) out.colors.push_back(std::countr_zero(d));
  return out;
}

bool is_feasible(const Graph& g, const ListAssignment& lists) {
  auto start = initial_domains(g, lists, {});
  return start && feasible_from(g, std::move(*start));
}

std::uint64_t count_colorings(const Graph& g, const ListAssignment& lists, std::span<const Pin> pins) {
  lists.validate(g);
  std::vector<ColorSet> dom(lists.lists);
  for (const Pin& p : pins) {
    if (!lists[p.vertex].contains(p.color)) throw ListColorError("pin color outside list", p.vertex);
    dom[p.vertex] = dom[p.vertex] & ColorSet::single(p.color);
  }
  std::vector<Color> color(g.order(), 0);
  auto rec = [&](auto&& self, VertexId v) -> std::uint64_t {
    if (v == g.order()) return 1;
    ColorSet avail = dom[v];
    for (VertexId w : g.neighbors(v))
      if (w < v) avail.erase(color[w]);
    std::uint64_t total = 0;
    for (Color c : avail.colors()) {
      color[v] = c;
      total += self(self, v + 1);
    }
    color[v] = 0;
    return total;
  };
  return rec(rec, 0);
}

namespace {

std::vector<std::size_t> positions(const Graph& g, std::span<const VertexId> order) {
  if (order.size() != g.order()) throw std::invalid_argument("order must list every vertex once");
  std::vector<std::size_t> pos(g.order(), g.order());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= g.order() || pos[order[i]] != g.order()) {
      throw std::invalid_argument("order must list every vertex once");
    }
    pos[order[i]] = i;
  }
  return pos;
}

std::optional<VertexId> greedy_violation(const Graph& g, std::span<const VertexId> order,
                                         const ListAssignment& lists, const std::vector<std::size_t>& pos) {
  for (VertexId v : order) {
    std::size_t back = 0;
    for (VertexId w : g.neighbors(v))
      if (pos[w] < pos[v]) ++back;
    if (static_cast<std::size_t>(lists[v].size()) < back + 1) return v;
  }
  return std::nullopt;
}

}  // namespace

bool greedy_applicable(const Graph& g, std::span<const VertexId> order, const ListAssignment& lists) {
  return !greedy_violation(g, order, lists, positions(g, order)).has_value();
}

Coloring greedy_order_color(const Graph& g, std::span<const VertexId> order, const ListAssignment& lists,
                            Color first) {
  lists.validate(g);
  const auto pos = positions(g, order);
  if (auto bad = greedy_violation(g, order, lists, pos)) {
    throw ListColorError("list of '" + g.name(*bad) + "' is shorter than its in-degree plus one", *bad);
  }
  Coloring out{std::vector<Color>(g.order(), 0)};
  if (order.empty()) return out;
  if (!lists[order[0]].contains(first)) {
    throw ListColorError("first color not in the list of '" + g.name(order[0]) + "'", order[0]);
  }
  out.colors[order[0]] = first;
  for (std::size_t i = 1; i < order.size(); ++i) {
    const VertexId v = order[i];
    ColorSet avail = lists[v];
    for (VertexId w : g.neighbors(v))
      if (pos[w] < i) avail.erase(out.colors[w]);
    out.colors[v] = avail.first();
  }
  return out;
}

Coloring color_bipartite_34(const Graph& g, const ListAssignment& lists, Pin pin) {
  lists.validate(g);
  if (lists.palette != 4) throw std::invalid_argument("color_bipartite_34 needs palette 4");
  for (VertexId v = 0; v < g.order(); ++v) {
    if (lists[v].size() != 3) throw ListColorError("list of '" + g.name(v) + "' is not a 3-list", v);
  }
  if (pin.vertex >= g.order()) throw std::out_of_range("pin on unknown vertex");
  if (!lists[pin.vertex].contains(pin.color)) throw ListColorError("pin color not in list", pin.vertex);
  auto bp = bipartition(g);
  if (!bp) throw std::invalid_argument("color_bipartite_34 needs a bipartite graph");
  if (bp->side[pin.vertex] != 0) {
    for (const auto& comp : connected_components(g)) {
      if (std::binary_search(comp.begin(), comp.end(), pin.vertex)) {
        for (VertexId v : comp) bp->side[v] = 1 - bp->side[v];
      }
    }
  }
  const Color c = pin.color;
  // Every pinned-side list missing c equals {1..4} \ {c}; they share c2.
  const Color c2 = ColorSet::full(4).without(ColorSet::single(c)).first();
  Coloring out{std::vector<Color>(g.order(), 0)};
  for (VertexId v = 0; v < g.order(); ++v) {
    if (bp->side[v] == 0) out.colors[v] = lists[v].contains(c) ? c : c2;
  }
  const ColorSet used{c, c2};
  for (VertexId v = 0; v < g.order(); ++v) {
    if (bp->side[v] == 1) out.colors[v] = lists[v].without(used).first();
  }
  return out;
}

std::optional<Coloring> default_block_colorer(const Graph& block, const ListAssignment& lists,
                                              std::optional<Pin> pin) {
  if (!pin) return solve(block, lists);
  std::vector<VertexId> order{pin->vertex};
  for (VertexId v = 0; v < block.order(); ++v)
    if (v != pin->vertex) order.push_back(v);
  if (greedy_applicable(block, order, lists)) return greedy_order_color(block, order, lists, pin->color);

  const BlockClass cls = classify_block(block);
  if (cls.tag == BlockClass::Tag::K11p) {
    std::vector<VertexId> hub_first{pin->vertex};
    for (VertexId v = 0; v < block.order(); ++v)
      if (v != pin->vertex && block.degree(v) == block.order() - 1) hub_first.push_back(v);
    for (VertexId v = 0; v < block.order(); ++v)
      if (std::find(hub_first.begin(), hub_first.end(), v) == hub_first.end()) hub_first.push_back(v);
    if (greedy_applicable(block, hub_first, lists)) return greedy_order_color(block, hub_first, lists, pin->color);
  }
  const bool three_lists = std::all_of(lists.lists.begin(), lists.lists.end(), [](ColorSet s) { return s.size() == 3; });
  if (lists.palette == 4 && three_lists && is_bipartite(block)) return color_bipartite_34(block, lists, *pin);
  const Pin pins[] = {*pin};
  return solve(block, lists, pins);
}

std::optional<Coloring> color_via_blocks(const Graph& g, const ListAssignment& lists, const BlockColorer& colorer) {
  lists.validate(g);
  const BlockDecomposition bd = block_decomposition(g);
  Coloring out{std::vector<Color>(g.order(), 0)};
  for (VertexId v : bd.isolated) {
    if (lists[v].empty()) return std::nullopt;
    out.colors[v] = lists[v].first();
  }
  for (const BlockVisit& visit : bd.bfs_order) {
    const auto& vertices = bd.blocks[visit.block];
    const Graph block = g.induced(vertices);
    ListAssignment local{lists.palette, {}};
    for (VertexId v : vertices) local.lists.push_back(lists[v]);
    std::optional<Pin> pin;
    if (visit.attach) {
      const auto at = std::lower_bound(vertices.begin(), vertices.end(), *visit.attach) - vertices.begin();
      pin = Pin{static_cast<VertexId>(at), out.colors[*visit.attach]};
    }
    const auto colored = colorer(block, local, pin);
    if (!colored) return std::nullopt;
    for (std::size_t i = 0; i < vertices.size(); ++i) out.colors[vertices[i]] = colored->colors[i];
  }
  return out;
}

std::optional<Coloring> color_reduction_class(const GadgetWithRoles& instance, const ListAssignment& lists) {
  const Graph& g = instance.graph;
  lists.validate(g);
  const auto& v0 = instance.role("V0");
  const auto& vf = instance.role("VF");
  const auto& vx = instance.role("VX");
  const auto& vs = instance.role("VS");
  const int m = static_cast<int>(vf.size());
  const int k = m + 1;
  if (m < 2 || static_cast<int>(v0.size()) != m + 1 || lists.palette != k) {
    throw std::invalid_argument("color_reduction_class: role sizes do not describe a reduction instance");
  }
  auto check_sizes = [&](const std::vector<VertexId>& part, int size, const char* role) {
    for (VertexId v : part) {
      if (lists[v].size() != size) {
        throw ListColorError(std::string("color_reduction_class: wrong list size in role ") + role, v);
      }
    }
  };
  check_sizes(v0, k, "V0");
  check_sizes(vf, k, "VF");
  check_sizes(vx, m, "VX");
  check_sizes(vs, m - 1, "VS");

  std::vector<char> in_vx(g.order(), 0);
  for (VertexId x : vx) in_vx[x] = 1;

  for (Color a = 1; a <= k; ++a) {
    for (Color b = 1; b <= k; ++b) {
      if (a == b) continue;
      const ColorSet pair{a, b};
      auto meets = [&](VertexId v) { return !(lists[v] & pair).empty(); };
      if (!std::all_of(vx.begin(), vx.end(), meets) || !std::all_of(vs.begin(), vs.end(), meets)) continue;
      // The clique vertex colored b needs all its V_X neighbors colored a.
      std::optional<VertexId> carrier;
      for (VertexId f : vf) {
        bool ok = true;
        for (VertexId x : g.neighbors(f))
          if (in_vx[x] && !lists[x].contains(a)) ok = false;
        if (ok) {
          carrier = f;
          break;
        }
      }
      if (!carrier) continue;

      Coloring out{std::vector<Color>(g.order(), 0)};
      const std::vector<Color> rest = ColorSet::full(k).without(pair).colors();
      out.colors[v0[0]] = a;
      out.colors[v0[1]] = b;
      for (std::size_t i = 2; i < v0.size(); ++i) out.colors[v0[i]] = rest[i - 2];
      std::size_t next = 0;
      for (VertexId f : vf) out.colors[f] = f == *carrier ? b : rest[next++];
      for (VertexId x : vx) {
        const bool forced = g.adjacent(x, *carrier);
        out.colors[x] = forced || lists[x].contains(a) ? a : b;
      }
      for (VertexId s : vs) out.colors[s] = lists[s].contains(a) ? a : b;
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace kchoose
