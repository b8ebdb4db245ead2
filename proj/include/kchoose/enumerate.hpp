#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "kchoose/graph.hpp"
#include "kchoose/lists.hpp"

namespace kchoose {

/// Restricts enumeration to assignments whose lists on `vertices` use at
/// most `bound` colors in total.
struct UnionConstraint {
  std::vector<VertexId> vertices;
  int bound = 0;
};

struct EnumerationOptions {
  /// Emit only the lexicographically smallest member of each orbit under
  /// palette permutations. Honored for palettes up to kMaxSymmetryPalette.
  bool symmetry = true;
  std::optional<UnionConstraint> union_constraint;
};

inline constexpr int kMaxSymmetryPalette = 8;

/// Lists for vertices 0..depth-1 plus the state needed to resume below them.
struct EnumerationPrefix {
  std::vector<ColorSet> lists;
  std::vector<std::uint32_t> tied;
  ColorSet used;
};

/// Enumerates f-list assignments over {1..k}. Vertices are taken in index
/// order, each vertex's lists in lexicographic order of their sorted
/// colors, so assignments come out in lexicographic order.
class AssignmentEnumerator {
 public:
  /// Returns false to stop the enumeration.
  using Visitor = std::function<bool(std::span<const ColorSet>)>;

  /// Throws std::invalid_argument if f does not cover g, some f(v) is
  /// outside 1..k, or a union-constraint vertex is unknown.
  AssignmentEnumerator(const Graph& g, SizeFunction f, int palette, EnumerationOptions options = {});

  int palette() const { return palette_; }
  std::size_t order() const { return sizes_.sizes.size(); }
  const SizeFunction& sizes() const { return sizes_; }
  bool symmetry_active() const { return !perms_.empty(); }

  /// Visits every assignment; false if the visitor stopped early.
  bool for_each(const Visitor& visit) const;

  /// All valid prefixes of the given depth, in enumeration order.
  std::vector<EnumerationPrefix> prefixes(std::size_t depth) const;

  /// Visits the assignments extending `prefix`, in enumeration order.
  bool for_each_below(const EnumerationPrefix& prefix, const Visitor& visit) const;

  std::vector<ListAssignment> collect() const;
  std::uint64_t count() const;

 private:
  friend struct EnumeratorWalk;
  ColorSet apply(std::uint32_t perm, ColorSet s) const;

  SizeFunction sizes_;
  int palette_;
  std::vector<std::vector<ColorSet>> candidates_;
  std::vector<char> in_union_;
  int union_bound_ = 0;
  bool has_union_ = false;
  /// perms_[p * (palette + 1) + c] is the image of color c.
  std::vector<std::uint8_t> perms_;
  std::uint32_t perm_count_ = 0;
};

enum class SearchStatus { Exhausted, Found, BudgetExceeded };

struct SearchOutcome {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<std::vector<ColorSet>> found;
  /// Assignments handed to the predicate, counting the found one.
  std::uint64_t examined = 0;
};

/// Must be safe to call concurrently.
using AssignmentPredicate = std::function<bool(std::span<const ColorSet>)>;

/// First assignment in enumeration order satisfying `pred`. The budget caps
/// the number of predicate calls.
SearchOutcome find_first_serial(const AssignmentEnumerator& e, const AssignmentPredicate& pred, std::uint64_t budget);

/// Same contract and identical outcome as find_first_serial, whatever the
/// thread count. Subtrees below enumeration prefixes are searched in waves
/// on an OpenMP team; per-prefix results are reduced in enumeration order.
SearchOutcome find_first_parallel(const AssignmentEnumerator& e, const AssignmentPredicate& pred,
                                  std::uint64_t budget, int jobs);

}  // namespace kchoose
