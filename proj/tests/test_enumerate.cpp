#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "kchoose/enumerate.hpp"
#include "kchoose/listcolor.hpp"
#include "kchoose/named_graphs.hpp"
#include "kchoose/random_instances.hpp"
#include "oracles.hpp"

using namespace kchoose;

namespace {

using Key = std::vector<std::vector<Color>>;

Key key_of(std::span<const ColorSet> lists) {
  Key k;
  for (ColorSet s : lists) k.push_back(s.colors());
  return k;
}

/// Smallest image of an assignment under every permutation of {1..k}.
Key orbit_min(std::span<const ColorSet> lists, int k) {
  std::vector<Color> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 1);
  std::optional<Key> best;
  do {
    Key image;
    for (ColorSet s : lists) {
      std::vector<Color> mapped;
      for (Color c : s.colors()) mapped.push_back(perm[static_cast<std::size_t>(c - 1)]);
      std::sort(mapped.begin(), mapped.end());
      image.push_back(mapped);
    }
    if (!best || image < *best) best = image;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

std::vector<Key> emitted(const AssignmentEnumerator& e) {
  std::vector<Key> out;
  e.for_each([&](std::span<const ColorSet> lists) {
    out.push_back(key_of(lists));
    return true;
  });
  return out;
}

struct Case {
  Graph graph;
  SizeFunction sizes;
  int palette;
};

std::vector<Case> cases() {
  std::vector<Case> out;
  out.push_back({path_graph(3), {{2, 2, 2}}, 4});
  out.push_back({cycle_graph(4), {{1, 2, 2, 3}}, 4});
  out.push_back({complete_bipartite(1, 3), {{2, 2, 2, 2}}, 5});
  out.push_back({cycle_graph(5), {{2, 2, 2, 2, 2}}, 3});
  out.push_back({complete_graph(3), {{3, 1, 2}}, 3});
  out.push_back({path_graph(4), {{1, 1, 1, 1}}, 4});
  return out;
}

}  // namespace

TEST_CASE("enumeration examples") {
  const Graph one = path_graph(1);
  CHECK(AssignmentEnumerator(one, SizeFunction::uniform(one, 1), 3, {}).count() == 1);
  const Graph edge = path_graph(2);
  const auto two = AssignmentEnumerator(edge, SizeFunction::uniform(edge, 1), 2, {}).collect();
  REQUIRE(two.size() == 2);
  CHECK(two[0].lists == std::vector<ColorSet>{{1}, {1}});
  CHECK(two[1].lists == std::vector<ColorSet>{{1}, {2}});
  const Graph c5 = cycle_graph(5);
  CHECK(AssignmentEnumerator(c5, SizeFunction::uniform(c5, 2), 2, {}).count() == 1);
  CHECK_THROWS(AssignmentEnumerator(c5, SizeFunction::uniform(c5, 3), 2, {}));
  CHECK_THROWS(AssignmentEnumerator(c5, SizeFunction::uniform(c5, 0), 2, {}));
  CHECK_THROWS(AssignmentEnumerator(c5, SizeFunction::uniform(path_graph(2), 1), 2, {}));
}

TEST_CASE("full enumeration is the lexicographic product") {
  for (const Case& c : cases()) {
    const AssignmentEnumerator e(c.graph, c.sizes, c.palette, {false, std::nullopt});
    std::vector<Key> expected;
    oracle::for_each_assignment(c.sizes, c.palette, [&](const ListAssignment& a) {
      expected.push_back(key_of(a.lists));
      return true;
    });
    CHECK(emitted(e) == expected);
    CHECK(e.count() == expected.size());
  }
}

TEST_CASE("symmetric enumeration emits exactly the orbit minima, in order") {
  for (const Case& c : cases()) {
    std::set<Key> minima;
    oracle::for_each_assignment(c.sizes, c.palette, [&](const ListAssignment& a) {
      minima.insert(orbit_min(a.lists, c.palette));
      return true;
    });
    const AssignmentEnumerator e(c.graph, c.sizes, c.palette, {true, std::nullopt});
    CHECK(e.symmetry_active());
    const auto got = emitted(e);
    CHECK(got == std::vector<Key>(minima.begin(), minima.end()));
  }
}

TEST_CASE("union constraint") {
  for (const Case& c : cases()) {
    std::vector<VertexId> subset{0, c.graph.order() - 1};
    for (int bound = 1; bound <= c.palette; ++bound) {
      std::vector<Key> expected;
      std::set<Key> minima;
      oracle::for_each_assignment(c.sizes, c.palette, [&](const ListAssignment& a) {
        if ((a.lists[subset[0]] | a.lists[subset[1]]).size() <= bound) {
          expected.push_back(key_of(a.lists));
          minima.insert(orbit_min(a.lists, c.palette));
        }
        return true;
      });
      const AssignmentEnumerator plain(c.graph, c.sizes, c.palette, {false, UnionConstraint{subset, bound}});
      CHECK(emitted(plain) == expected);
      const AssignmentEnumerator sym(c.graph, c.sizes, c.palette, {true, UnionConstraint{subset, bound}});
      CHECK(emitted(sym) == std::vector<Key>(minima.begin(), minima.end()));
    }
  }
}

TEST_CASE("prefix subtrees partition the enumeration") {
  for (const Case& c : cases()) {
    for (bool symmetry : {false, true}) {
      const AssignmentEnumerator e(c.graph, c.sizes, c.palette, {symmetry, std::nullopt});
      const auto all = emitted(e);
      for (std::size_t depth = 0; depth <= c.graph.order(); ++depth) {
        std::vector<Key> joined;
        for (const auto& prefix : e.prefixes(depth))
          e.for_each_below(prefix, [&](std::span<const ColorSet> lists) {
            joined.push_back(key_of(lists));
            return true;
          });
        CHECK(joined == all);
      }
    }
  }
}

TEST_CASE("parallel search reproduces the serial outcome") {
  Rng rng(123);
  for (const Case& c : cases()) {
    for (bool symmetry : {false, true}) {
      const AssignmentEnumerator e(c.graph, c.sizes, c.palette, {symmetry, std::nullopt});
      const std::uint64_t total = e.count();
      const std::uint64_t salt = rng();
      // Hit patterns to try.
      std::vector<AssignmentPredicate> preds;
      preds.push_back([&](std::span<const ColorSet> l) {
        return !is_feasible(c.graph, ListAssignment{c.palette, {l.begin(), l.end()}});
      });
      preds.push_back([salt](std::span<const ColorSet> l) {
        std::uint64_t h = salt;
        for (ColorSet s : l) h = (h ^ s.bits()) * 0x100000001b3ull;
        return h % 13 == 0;
      });
      preds.push_back([](std::span<const ColorSet>) { return false; });
      for (const auto& pred : preds) {
        for (std::uint64_t budget : {std::uint64_t{0}, std::uint64_t{1}, std::uint64_t{5}, total > 0 ? total - 1 : 0,
                                     total, std::uint64_t{1} << 40}) {
          const SearchOutcome serial = find_first_serial(e, pred, budget);
          for (int jobs : {1, 2, 3, 8}) {
            const SearchOutcome parallel = find_first_parallel(e, pred, budget, jobs);
            CHECK(parallel.status == serial.status);
            CHECK(parallel.found == serial.found);
            CHECK(parallel.examined == serial.examined);
          }
        }
      }
    }
  }
}

TEST_CASE("budget semantics") {
  const Graph g = cycle_graph(4);
  const AssignmentEnumerator e(g, SizeFunction::uniform(g, 2), 3, {false, std::nullopt});
  const auto never = [](std::span<const ColorSet>) { return false; };
  const std::uint64_t total = e.count();
  CHECK(total == 81);
  CHECK(find_first_serial(e, never, total).status == SearchStatus::Exhausted);
  CHECK(find_first_serial(e, never, total).examined == total);
  const auto over = find_first_serial(e, never, total - 1);
  CHECK(over.status == SearchStatus::BudgetExceeded);
  CHECK(over.examined == total - 1);
  std::uint64_t calls = 0;
  const auto third = [&calls](std::span<const ColorSet>) { return ++calls == 3; };
  const auto hit = find_first_serial(e, third, 3);
  CHECK(hit.status == SearchStatus::Found);
  CHECK(hit.examined == 3);
}
