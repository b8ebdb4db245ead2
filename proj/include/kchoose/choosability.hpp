#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kchoose/gadget_types.hpp"
#include "kchoose/graph.hpp"
#include "kchoose/lists.hpp"
#include "kchoose/structure.hpp"

namespace kchoose {

enum class Verdict { Choosable, NotChoosable, BudgetExceeded };
std::string to_string(Verdict v);

struct DeciderOptions {
  /// Cap on the number of list assignments examined.
  std::uint64_t budget = 100'000'000;
  /// Worker threads; 1 runs the serial kernel.
  int jobs = 1;
  bool symmetry = true;
  /// Decide connected components separately and combine.
  bool by_component = true;
};

struct ChoosabilityVerdict {
  Verdict verdict = Verdict::Choosable;
  /// The first infeasible assignment in enumeration order, when not choosable.
  std::optional<ListAssignment> witness;
  std::uint64_t examined = 0;

  bool choosable() const { return verdict == Verdict::Choosable; }
};

/// Exhaustive [f,k]-choosability. The witness does not depend on `jobs`,
/// `symmetry` or `by_component`.
ChoosabilityVerdict is_fk_choosable(const Graph& g, const SizeFunction& f, int palette,
                                    const DeciderOptions& options = {});

/// Convenience for uniform list size.
ChoosabilityVerdict is_choosable(const Graph& g, int list_size, int palette, const DeciderOptions& options = {});

enum class CriticalStatus { Critical, NotCritical, BudgetExceeded };
std::string to_string(CriticalStatus s);

struct CriticalityReport {
  CriticalStatus status = CriticalStatus::NotCritical;
  /// First infeasible assignment whose lists on the subset miss a color.
  std::optional<ListAssignment> witness;
  struct FailedBump {
    VertexId vertex;
    ListAssignment counterexample;
  };
  std::optional<FailedBump> failed_bump;
  std::uint64_t examined = 0;

  bool is_critical() const { return status == CriticalStatus::Critical; }
};

/// ([f,k],subset)-criticality checked literally: a constrained witness
/// search, then one choosability run per subset vertex with f raised by one
/// there. Throws std::invalid_argument if some subset vertex has f(v) >= k.
CriticalityReport is_critical(const Graph& g, const SizeFunction& f, int palette, std::span<const VertexId> subset,
                              const DeciderOptions& options = {});

/// Class of each component's core, components in order of their smallest
/// vertex.
std::vector<CoreClass> core_classes(const Graph& g);

/// Core of every component is K1, an even cycle or theta_{2,2,2m}.
bool recognize_2_choosable(const Graph& g);

/// Core of every component is K1, an even cycle, theta_{2,2,2m} or K_{2,m}
/// with m >= 2.
bool recognize_23_choosable(const Graph& g);

/// How one component was settled by decide_23_3_CH_bipartite.
enum class BipartiteRoute {
  AtMostFive,
  SmallSide,
  PendantInH,
  ChocolateInH,
  InducedC6Enumerated,
  Fallback,
};
std::string to_string(BipartiteRoute r);

struct BipartiteDecision {
  Verdict verdict = Verdict::Choosable;
  std::vector<BipartiteRoute> routes;
  /// Present when an enumerated component turned out not choosable.
  std::optional<ListAssignment> witness;
  std::uint64_t examined = 0;

  bool choosable() const { return verdict == Verdict::Choosable; }
};

/// Choosability of a bipartite graph with 2-lists on `two_list` and 3-lists
/// elsewhere, palette 3. Throws std::invalid_argument if g is not bipartite.
BipartiteDecision decide_23_3_CH_bipartite(const Graph& g, std::span<const VertexId> two_list,
                                           const DeciderOptions& options = {});

enum class GadgetProperty {
  /// The gadget is [sizes, palette]-choosable.
  Choosable,
  /// Every conforming assignment extends any color of the input vertex
  /// (role "I").
  IdealAtInput,
  /// For every conforming assignment, one of the literal vertices (roles "u"
  /// and "ubar") can take every color of its list.
  LiteralFreedom,
  /// Under the canonical assignment, the input (role "I") colored with
  /// metadata "pin_color" forces the output (role "O") to "forced_color".
  ForcedTransmission,
};
std::string to_string(GadgetProperty p);

enum class CheckOutcome { Pass, Fail, BudgetExceeded };
std::string to_string(CheckOutcome o);

struct PropertyCheck {
  GadgetProperty property;
  CheckOutcome outcome = CheckOutcome::Pass;
  std::optional<ListAssignment> counterexample;
  std::uint64_t examined = 0;

  bool passed() const { return outcome == CheckOutcome::Pass; }
};

struct GadgetReport {
  std::vector<PropertyCheck> checks;
  bool all_passed() const;
};

/// Runs the selected checks. Missing roles or metadata throw
/// std::invalid_argument.
GadgetReport verify_gadget_properties(const GadgetWithRoles& gadget, std::span<const GadgetProperty> properties,
                                      const DeciderOptions& options = {});

}  // namespace kchoose
