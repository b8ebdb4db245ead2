#include "kchoose/enumerate.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kchoose {

namespace {

// For two sets of equal size, the one holding the smallest color where
// they differ comes first in lexicographic order.
bool precedes(ColorSet a, ColorSet b) {
  const std::uint64_t diff = a.bits() ^ b.bits();
  return diff != 0 && (a.bits() & diff & (~diff + 1)) != 0;
}

void combinations(int palette, int size, Color from, ColorSet acc, std::vector<ColorSet>& out) {
  if (acc.size() == size) {
    out.push_back(acc);
    return;
  }
  for (Color c = from; c <= palette - (size - acc.size()) + 1; ++c) {
    ColorSet next = acc;
    next.insert(c);
    combinations(palette, size, c + 1, next, out);
  }
}

}  // namespace

struct EnumeratorWalk {
  const AssignmentEnumerator& e;
  std::size_t stop;
  std::vector<ColorSet> cur;

  template <typename Leaf>
  bool descend(std::size_t v, const std::vector<std::uint32_t>& tied, ColorSet used, Leaf& leaf) {
    if (v == stop) return leaf(cur, tied, used);
    std::vector<std::uint32_t> next;
    const bool check_symmetry = tied.size() > 1;
    for (ColorSet list : e.candidates_[v]) {
      ColorSet now = used;
      if (e.has_union_ && e.in_union_[v]) {
        now |= list;
        if (now.size() > e.union_bound_) continue;
      }
      if (check_symmetry) {
        next.clear();
        bool canonical = true;
        for (std::uint32_t p : tied) {
          const ColorSet image = e.apply(p, list);
          if (image == list) {
            next.push_back(p);
          } else if (precedes(image, list)) {
            canonical = false;
            break;
          }
        }
        if (!canonical) continue;
      }
      cur[v] = list;
      if (!descend(v + 1, check_symmetry ? next : tied, now, leaf)) return false;
    }
    return true;
  }
};

AssignmentEnumerator::AssignmentEnumerator(const Graph& g, SizeFunction f, int palette, EnumerationOptions options)
    : sizes_(std::move(f)), palette_(palette) {
  if (palette < 1 || palette > kMaxPalette) throw std::invalid_argument("palette out of range");
  if (sizes_.sizes.size() != g.order()) throw std::invalid_argument("size function does not cover the graph");
  for (VertexId v = 0; v < g.order(); ++v) {
    if (sizes_[v] < 1 || sizes_[v] > palette) {
      throw std::invalid_argument("f('" + g.name(v) + "') = " + std::to_string(sizes_[v]) + " is outside 1.." +
                                  std::to_string(palette));
    }
  }
  std::vector<std::vector<ColorSet>> by_size(static_cast<std::size_t>(palette) + 1);
  candidates_.reserve(g.order());
  for (VertexId v = 0; v < g.order(); ++v) {
    auto& pool = by_size[static_cast<std::size_t>(sizes_[v])];
    if (pool.empty()) combinations(palette, sizes_[v], 1, ColorSet{}, pool);
    candidates_.push_back(pool);
  }
  in_union_.assign(g.order(), 0);
  if (options.union_constraint) {
    has_union_ = true;
    union_bound_ = options.union_constraint->bound;
    for (VertexId v : options.union_constraint->vertices) {
      if (v >= g.order()) throw std::invalid_argument("union constraint names an unknown vertex");
      in_union_[v] = 1;
    }
  }
  if (options.symmetry && palette <= kMaxSymmetryPalette) {
    std::vector<std::uint8_t> perm(static_cast<std::size_t>(palette) + 1);
    std::iota(perm.begin(), perm.end(), std::uint8_t{0});
    do {
      perms_.insert(perms_.end(), perm.begin(), perm.end());
      ++perm_count_;
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
  }
}

ColorSet AssignmentEnumerator::apply(std::uint32_t perm, ColorSet s) const {
  const std::uint8_t* image = &perms_[static_cast<std::size_t>(perm) * (static_cast<std::size_t>(palette_) + 1)];
  std::uint64_t out = 0;
  for (std::uint64_t b = s.bits(); b; b &= b - 1) out |= std::uint64_t{1} << image[std::countr_zero(b)];
  return ColorSet(out);
}

namespace {

std::vector<std::uint32_t> all_perms(std::uint32_t count) {
  std::vector<std::uint32_t> out(count);
  std::iota(out.begin(), out.end(), 0u);
  return out;
}

}  // namespace

bool AssignmentEnumerator::for_each(const Visitor& visit) const {
  EnumerationPrefix root{{}, all_perms(perm_count_), ColorSet{}};
  return for_each_below(root, visit);
}

bool AssignmentEnumerator::for_each_below(const EnumerationPrefix& prefix, const Visitor& visit) const {
  EnumeratorWalk walk{*this, order(), prefix.lists};
  walk.cur.resize(order());
  auto leaf = [&](const std::vector<ColorSet>& lists, const std::vector<std::uint32_t>&, ColorSet) {
    return visit(lists);
  };
  return walk.descend(prefix.lists.size(), prefix.tied, prefix.used, leaf);
}

std::vector<EnumerationPrefix> AssignmentEnumerator::prefixes(std::size_t depth) const {
  depth = std::min(depth, order());
  std::vector<EnumerationPrefix> out;
  EnumeratorWalk walk{*this, depth, std::vector<ColorSet>(depth)};
  auto leaf = [&](const std::vector<ColorSet>& lists, const std::vector<std::uint32_t>& tied, ColorSet used) {
    out.push_back({lists, tied, used});
    return true;
  };
  walk.descend(0, all_perms(perm_count_), ColorSet{}, leaf);
  return out;
}

std::vector<ListAssignment> AssignmentEnumerator::collect() const {
  std::vector<ListAssignment> out;
  for_each([&](std::span<const ColorSet> lists) {
    out.push_back({palette_, {lists.begin(), lists.end()}});
    return true;
  });
  return out;
}

std::uint64_t AssignmentEnumerator::count() const {
  std::uint64_t n = 0;
  for_each([&](std::span<const ColorSet>) {
    ++n;
    return true;
  });
  return n;
}

namespace {

// Search one subtree, examining at most `cap` assignments.
SearchOutcome search_below(const AssignmentEnumerator& e, const EnumerationPrefix& prefix,
                           const AssignmentPredicate& pred, std::uint64_t cap) {
  SearchOutcome out;
  e.for_each_below(prefix, [&](std::span<const ColorSet> lists) {
    if (out.examined == cap) {
      out.status = SearchStatus::BudgetExceeded;
      return false;
    }
    ++out.examined;
    if (pred(lists)) {
      out.status = SearchStatus::Found;
      out.found.emplace(lists.begin(), lists.end());
      return false;
    }
    return true;
  });
  return out;
}

}  // namespace

SearchOutcome find_first_serial(const AssignmentEnumerator& e, const AssignmentPredicate& pred,
                                std::uint64_t budget) {
  const auto roots = e.prefixes(0);
  return search_below(e, roots.front(), pred, budget);
}

SearchOutcome find_first_parallel(const AssignmentEnumerator& e, const AssignmentPredicate& pred,
                                  std::uint64_t budget, int jobs) {
  jobs = std::max(jobs, 1);
  const std::size_t want = static_cast<std::size_t>(jobs) * 16;
  std::vector<EnumerationPrefix> work = e.prefixes(0);
  for (std::size_t depth = 1; depth <= e.order() && work.size() < want; ++depth) work = e.prefixes(depth);

  const std::size_t wave = static_cast<std::size_t>(jobs) * 4;
  SearchOutcome total;
  std::vector<SearchOutcome> results;
  for (std::size_t start = 0; start < work.size(); start += wave) {
    const std::size_t end = std::min(work.size(), start + wave);
    const std::uint64_t cap = budget - total.examined;
    results.assign(end - start, SearchOutcome{});
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(end - start); ++i) {
      results[static_cast<std::size_t>(i)] = search_below(e, work[start + static_cast<std::size_t>(i)], pred, cap);
    }
    for (SearchOutcome& r : results) {
      // The serial search would stop here once the running count hits the cap.
      if (r.status == SearchStatus::BudgetExceeded || total.examined + r.examined > budget) {
        total.status = SearchStatus::BudgetExceeded;
        total.examined = budget;
        return total;
      }
      total.examined += r.examined;
      if (r.status == SearchStatus::Found) {
        total.status = SearchStatus::Found;
        total.found = std::move(r.found);
        return total;
      }
    }
  }
  return total;
}

}  // namespace kchoose
