#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "kchoose/graph.hpp"
#include "kchoose/lists.hpp"

// Brute-force reference implementations used as test oracles. They share no
// code with the library's solver or enumerator.
namespace oracle {

using kchoose::Color;
using kchoose::ColorSet;
using kchoose::Graph;
using kchoose::ListAssignment;
using kchoose::SizeFunction;
using kchoose::VertexId;

/// Visits every proper coloring in lexicographic (vertex, color) order;
/// stops when `visit` returns false.
inline void for_each_coloring(const Graph& g, const ListAssignment& lists,
                              const std::function<bool(const std::vector<Color>&)>& visit) {
  const std::size_t n = g.order();
  std::vector<Color> colors(n, 0);
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (stop) return;
    if (v == n) {
      stop = !visit(colors);
      return;
    }
    for (Color c = 1; c <= kchoose::kMaxPalette && !stop; ++c) {
      if (!lists[v].contains(c)) continue;
      bool clash = false;
      for (VertexId w : g.neighbors(v))
        if (w < v && colors[w] == c) clash = true;
      if (clash) continue;
      colors[v] = c;
      rec(v + 1);
    }
    colors[v] = 0;
  };
  rec(0);
}

inline std::optional<std::vector<Color>> first_coloring(const Graph& g, const ListAssignment& lists) {
  std::optional<std::vector<Color>> found;
  for_each_coloring(g, lists, [&](const std::vector<Color>& c) {
    found = c;
    return false;
  });
  return found;
}

inline std::uint64_t count(const Graph& g, const ListAssignment& lists) {
  std::uint64_t n = 0;
  for_each_coloring(g, lists, [&](const std::vector<Color>&) {
    ++n;
    return true;
  });
  return n;
}

/// All subsets of {1..k} with exactly `size` elements, in lexicographic
/// order of their sorted colors.
inline std::vector<ColorSet> subsets(int size, int k) {
  std::vector<std::vector<Color>> sorted;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    if (std::popcount(mask) != size) continue;
    std::vector<Color> colors;
    for (Color c = 1; c <= k; ++c)
      if (mask >> (c - 1) & 1u) colors.push_back(c);
    sorted.push_back(colors);
  }
  std::sort(sorted.begin(), sorted.end());
  std::vector<ColorSet> out;
  for (const auto& colors : sorted) {
    ColorSet s;
    for (Color c : colors) s.insert(c);
    out.push_back(s);
  }
  return out;
}

/// Visits every f-list assignment over {1..k}, without symmetry reduction.
inline void for_each_assignment(const SizeFunction& f, int k,
                                const std::function<bool(const ListAssignment&)>& visit) {
  const std::size_t n = f.sizes.size();
  std::vector<std::vector<ColorSet>> choices;
  for (int s : f.sizes) choices.push_back(subsets(s, k));
  std::vector<std::size_t> idx(n, 0);
  ListAssignment a{k, std::vector<ColorSet>(n)};
  while (true) {
    for (std::size_t v = 0; v < n; ++v) a.lists[v] = choices[v][idx[v]];
    if (!visit(a)) return;
    std::size_t v = n;
    while (v > 0) {
      --v;
      if (++idx[v] < choices[v].size()) break;
      idx[v] = 0;
      if (v == 0) return;
    }
    if (n == 0) return;
  }
}

inline bool choosable(const Graph& g, const SizeFunction& f, int k) {
  bool ok = true;
  for_each_assignment(f, k, [&](const ListAssignment& a) {
    ok = first_coloring(g, a).has_value();
    return ok;
  });
  return ok;
}

/// Isomorphism by trying every vertex permutation; intended for n <= 9.
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<std::size_t> da, db;
  for (VertexId v = 0; v < a.order(); ++v) da.push_back(a.degree(v));
  for (VertexId v = 0; v < b.order(); ++v) db.push_back(b.degree(v));
  std::vector<std::size_t> sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  std::vector<VertexId> perm(a.order());
  std::iota(perm.begin(), perm.end(), VertexId{0});
  do {
    bool ok = true;
    for (VertexId v = 0; v < a.order() && ok; ++v) ok = da[v] == db[perm[v]];
    for (const auto& e : a.edges())
      if (ok) ok = b.adjacent(perm[e.u], perm[e.v]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline bool is_proper(const Graph& g, const std::vector<Color>& c) {
  for (const auto& e : g.edges())
    if (c[e.u] == c[e.v]) return false;
  return true;
}

}  // namespace oracle
