#include "kchoose/choosability.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include "kchoose/enumerate.hpp"
#include "kchoose/listcolor.hpp"
#include "kchoose/named_graphs.hpp"

namespace kchoose {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Choosable: return "choosable";
    case Verdict::NotChoosable: return "not-choosable";
    case Verdict::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

std::string to_string(CriticalStatus s) {
  switch (s) {
    case CriticalStatus::Critical: return "critical";
    case CriticalStatus::NotCritical: return "not-critical";
    case CriticalStatus::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

std::string to_string(BipartiteRoute r) {
  switch (r) {
    case BipartiteRoute::AtMostFive: return "at-most-five";
    case BipartiteRoute::SmallSide: return "small-side";
    case BipartiteRoute::PendantInH: return "pendant-in-H";
    case BipartiteRoute::ChocolateInH: return "chocolate-in-H";
    case BipartiteRoute::InducedC6Enumerated: return "induced-C6-enumerated";
    case BipartiteRoute::Fallback: return "fallback";
  }
  return "?";
}

std::string to_string(GadgetProperty p) {
  switch (p) {
    case GadgetProperty::Choosable: return "choosable";
    case GadgetProperty::IdealAtInput: return "ideal-at-input";
    case GadgetProperty::LiteralFreedom: return "literal-freedom";
    case GadgetProperty::ForcedTransmission: return "forced-transmission";
  }
  return "?";
}

std::string to_string(CheckOutcome o) {
  switch (o) {
    case CheckOutcome::Pass: return "pass";
    case CheckOutcome::Fail: return "fail";
    case CheckOutcome::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

namespace {

SearchOutcome run_search(const AssignmentEnumerator& e, const AssignmentPredicate& pred,
                         const DeciderOptions& options, std::uint64_t budget) {
  if (options.jobs > 1) return find_first_parallel(e, pred, budget, options.jobs);
  return find_first_serial(e, pred, budget);
}

AssignmentPredicate infeasible_under(const Graph& g, int palette) {
  return [&g, palette](std::span<const ColorSet> lists) {
    return !is_feasible(g, ListAssignment{palette, {lists.begin(), lists.end()}});
  };
}

ChoosabilityVerdict decide_whole(const Graph& g, const SizeFunction& f, int palette, const DeciderOptions& options,
                                 std::uint64_t budget) {
  const AssignmentEnumerator e(g, f, palette, {options.symmetry, std::nullopt});
  const SearchOutcome found = run_search(e, infeasible_under(g, palette), options, budget);
  ChoosabilityVerdict out;
  out.examined = found.examined;
  switch (found.status) {
    case SearchStatus::Exhausted: out.verdict = Verdict::Choosable; break;
    case SearchStatus::BudgetExceeded: out.verdict = Verdict::BudgetExceeded; break;
    case SearchStatus::Found:
      out.verdict = Verdict::NotChoosable;
      out.witness = ListAssignment{palette, *found.found};
      break;
  }
  return out;
}

bool assignment_less(const std::vector<ColorSet>& a, const std::vector<ColorSet>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return lex_less(a[i], b[i]);
  }
  return false;
}

SizeFunction restrict_sizes(const SizeFunction& f, std::span<const VertexId> vertices) {
  SizeFunction out;
  for (VertexId v : vertices) out.sizes.push_back(f[v]);
  return out;
}

}  // namespace

ChoosabilityVerdict is_fk_choosable(const Graph& g, const SizeFunction& f, int palette,
                                    const DeciderOptions& options) {
  // Validates f and the palette up front, also for the split path.
  const AssignmentEnumerator check(g, f, palette, {false, std::nullopt});
  const auto components = connected_components(g);
  if (!options.by_component || components.size() <= 1) return decide_whole(g, f, palette, options, options.budget);

  // Each failing component yields a candidate: its own first infeasible
  // lists, the smallest lists elsewhere. The global first infeasible
  // assignment is the smallest candidate.
  std::vector<ColorSet> smallest(g.order());
  for (VertexId v = 0; v < g.order(); ++v) smallest[v] = ColorSet::full(f[v]);

  ChoosabilityVerdict out;
  std::optional<std::vector<ColorSet>> best;
  for (const auto& comp : components) {
    const Graph sub = g.induced(comp);
    const auto part = decide_whole(sub, restrict_sizes(f, comp), palette, options, options.budget - out.examined);
    out.examined += part.examined;
    if (part.verdict == Verdict::BudgetExceeded) {
      out.verdict = Verdict::BudgetExceeded;
      out.witness.reset();
      return out;
    }
    if (part.verdict == Verdict::NotChoosable) {
      std::vector<ColorSet> candidate = smallest;
      for (std::size_t i = 0; i < comp.size(); ++i) candidate[comp[i]] = part.witness->lists[i];
      if (!best || assignment_less(candidate, *best)) best = std::move(candidate);
    }
  }
  if (best) {
    out.verdict = Verdict::NotChoosable;
    out.witness = ListAssignment{palette, std::move(*best)};
  }
  return out;
}

ChoosabilityVerdict is_choosable(const Graph& g, int list_size, int palette, const DeciderOptions& options) {
  return is_fk_choosable(g, SizeFunction::uniform(g, list_size), palette, options);
}

CriticalityReport is_critical(const Graph& g, const SizeFunction& f, int palette, std::span<const VertexId> subset,
                              const DeciderOptions& options) {
  for (VertexId v : subset) {
    if (v >= g.order()) throw std::invalid_argument("subset names an unknown vertex");
    if (f.sizes.size() == g.order() && f[v] >= palette) {
      throw std::invalid_argument("f('" + g.name(v) + "') must be below the palette size for a subset vertex");
    }
  }
  UnionConstraint bound{{subset.begin(), subset.end()}, palette - 1};
  const AssignmentEnumerator e(g, f, palette, {options.symmetry, bound});
  const SearchOutcome found = run_search(e, infeasible_under(g, palette), options, options.budget);

  CriticalityReport out;
  out.examined = found.examined;
  if (found.status == SearchStatus::BudgetExceeded) {
    out.status = CriticalStatus::BudgetExceeded;
    return out;
  }
  if (found.status == SearchStatus::Exhausted) {
    out.status = CriticalStatus::NotCritical;
    return out;
  }
  out.witness = ListAssignment{palette, *found.found};

  for (VertexId v : subset) {
    SizeFunction bumped = f;
    ++bumped[v];
    DeciderOptions sub = options;
    sub.budget = options.budget - std::min(options.budget, out.examined);
    const auto verdict = is_fk_choosable(g, bumped, palette, sub);
    out.examined += verdict.examined;
    if (verdict.verdict == Verdict::BudgetExceeded) {
      out.status = CriticalStatus::BudgetExceeded;
      return out;
    }
    if (verdict.verdict == Verdict::NotChoosable) {
      out.status = CriticalStatus::NotCritical;
      out.failed_bump = CriticalityReport::FailedBump{v, *verdict.witness};
      return out;
    }
  }
  out.status = CriticalStatus::Critical;
  return out;
}

std::vector<CoreClass> core_classes(const Graph& g) {
  const Graph core = compute_core(g).core;
  std::vector<CoreClass> out;
  for (const auto& comp : connected_components(core)) out.push_back(classify_core_component(core.induced(comp)));
  return out;
}

bool recognize_2_choosable(const Graph& g) {
  const auto classes = core_classes(g);
  return std::all_of(classes.begin(), classes.end(), [](const CoreClass& c) {
    return c.tag == CoreClass::Tag::K1 || c.tag == CoreClass::Tag::EvenCycle || c.tag == CoreClass::Tag::Theta222m;
  });
}

bool recognize_23_choosable(const Graph& g) {
  const auto classes = core_classes(g);
  return std::all_of(classes.begin(), classes.end(), [](const CoreClass& c) { return c.tag != CoreClass::Tag::Other; });
}

namespace {

bool is_cycle6(const Graph& h) {
  if (h.order() != 6 || h.size() != 6 || !is_connected(h)) return false;
  for (VertexId v = 0; v < h.order(); ++v)
    if (h.degree(v) != 2) return false;
  return true;
}

// Whether the 6-vertex graph `h` has the chocolate as a spanning subgraph.
bool contains_chocolate(const Graph& h) {
  if (h.order() != 6) return false;
  const Graph choc = chocolate().graph;
  const auto edges = choc.edges();
  std::array<VertexId, 6> image{0, 1, 2, 3, 4, 5};
  do {
    const bool fits = std::all_of(edges.begin(), edges.end(),
                                  [&](const Edge& e) { return h.adjacent(image[e.u], image[e.v]); });
    if (fits) return true;
  } while (std::next_permutation(image.begin(), image.end()));
  return false;
}

}  // namespace

BipartiteDecision decide_23_3_CH_bipartite(const Graph& g, std::span<const VertexId> two_list,
                                           const DeciderOptions& options) {
  if (!is_bipartite(g)) throw std::invalid_argument("decide_23_3_CH_bipartite needs a bipartite graph");
  std::vector<char> short_list(g.order(), 0);
  for (VertexId v : two_list) {
    if (v >= g.order()) throw std::invalid_argument("two-list set names an unknown vertex");
    short_list[v] = 1;
  }
  SizeFunction f;
  for (VertexId v = 0; v < g.order(); ++v) f.sizes.push_back(short_list[v] ? 2 : 3);

  BipartiteDecision out;
  bool exceeded = false;
  for (const auto& comp : connected_components(g)) {
    const Graph sub = g.induced(comp);
    std::vector<VertexId> local;
    for (std::size_t i = 0; i < comp.size(); ++i)
      if (short_list[comp[i]]) local.push_back(i);

    auto enumerate = [&](BipartiteRoute route) {
      out.routes.push_back(route);
      DeciderOptions sub_options = options;
      sub_options.budget = options.budget - std::min(options.budget, out.examined);
      const auto verdict = is_fk_choosable(sub, restrict_sizes(f, comp), 3, sub_options);
      out.examined += verdict.examined;
      if (verdict.verdict == Verdict::BudgetExceeded) exceeded = true;
      if (verdict.verdict == Verdict::NotChoosable) {
        out.verdict = Verdict::NotChoosable;
        if (!out.witness) {
          std::vector<ColorSet> lists(g.order());
          for (VertexId v = 0; v < g.order(); ++v) lists[v] = ColorSet::full(f[v]);
          for (std::size_t i = 0; i < comp.size(); ++i) lists[comp[i]] = verdict.witness->lists[i];
          out.witness = ListAssignment{3, std::move(lists)};
        }
      }
    };

    if (local.size() <= 5) {
      out.routes.push_back(BipartiteRoute::AtMostFive);
      continue;
    }
    if (local.size() > 6) {
      enumerate(BipartiteRoute::Fallback);
      continue;
    }
    const Bipartition parts = *bipartition(sub);
    const auto black = static_cast<std::size_t>(
        std::count_if(local.begin(), local.end(), [&](VertexId v) { return parts.side[v] == 0; }));
    if (black <= 2 || local.size() - black <= 2) {
      out.routes.push_back(BipartiteRoute::SmallSide);
      continue;
    }
    const Graph h = sub.induced(local);
    if (is_cycle6(h)) {
      enumerate(BipartiteRoute::InducedC6Enumerated);
      continue;
    }
    bool pendant = false;
    for (VertexId v = 0; v < h.order(); ++v)
      if (h.degree(v) <= 1) pendant = true;
    if (pendant) {
      out.routes.push_back(BipartiteRoute::PendantInH);
    } else if (contains_chocolate(h)) {
      out.routes.push_back(BipartiteRoute::ChocolateInH);
      out.verdict = Verdict::NotChoosable;
    } else {
      enumerate(BipartiteRoute::Fallback);
    }
  }
  if (out.verdict != Verdict::NotChoosable && exceeded) out.verdict = Verdict::BudgetExceeded;
  return out;
}

bool GadgetReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const PropertyCheck& c) { return c.passed(); });
}

namespace {

int metadata_int(const GadgetWithRoles& gadget, std::string_view key) {
  const auto it = gadget.metadata.find(key);
  if (it == gadget.metadata.end()) {
    throw std::invalid_argument("gadget '" + gadget.name + "' lacks metadata '" + std::string(key) + "'");
  }
  return std::stoi(it->second);
}

bool feasible_with(const Graph& g, int palette, std::span<const ColorSet> lists,
                   std::initializer_list<std::pair<VertexId, Color>> pins) {
  ListAssignment a{palette, {lists.begin(), lists.end()}};
  for (const auto& [v, c] : pins) a.lists[v] = a.lists[v] & ColorSet::single(c);
  return is_feasible(g, a);
}

ColorSet available(const Graph& g, int palette, std::span<const ColorSet> lists, VertexId v) {
  ColorSet out;
  for (Color c : lists[v].colors())
    if (feasible_with(g, palette, lists, {{v, c}})) out.insert(c);
  return out;
}

PropertyCheck exhaustive_check(GadgetProperty property, const GadgetWithRoles& gadget,
                               const AssignmentPredicate& bad, const DeciderOptions& options) {
  const AssignmentEnumerator e(gadget.graph, gadget.sizes, gadget.palette, {options.symmetry, std::nullopt});
  const SearchOutcome found = run_search(e, bad, options, options.budget);
  PropertyCheck check{property, CheckOutcome::Pass, std::nullopt, 0};
  check.examined = found.examined;
  if (found.status == SearchStatus::BudgetExceeded) check.outcome = CheckOutcome::BudgetExceeded;
  if (found.status == SearchStatus::Found) {
    check.outcome = CheckOutcome::Fail;
    check.counterexample = ListAssignment{gadget.palette, *found.found};
  }
  return check;
}

}  // namespace

GadgetReport verify_gadget_properties(const GadgetWithRoles& gadget, std::span<const GadgetProperty> properties,
                                      const DeciderOptions& options) {
  gadget.validate();
  const Graph& g = gadget.graph;
  const int k = gadget.palette;
  GadgetReport report;
  for (GadgetProperty property : properties) {
    switch (property) {
      case GadgetProperty::Choosable: {
        const auto verdict = is_fk_choosable(g, gadget.sizes, k, options);
        PropertyCheck check{property, CheckOutcome::Pass, std::nullopt, 0};
        check.examined = verdict.examined;
        if (verdict.verdict == Verdict::BudgetExceeded) check.outcome = CheckOutcome::BudgetExceeded;
        if (verdict.verdict == Verdict::NotChoosable) {
          check.outcome = CheckOutcome::Fail;
          check.counterexample = verdict.witness;
        }
        report.checks.push_back(std::move(check));
        break;
      }
      case GadgetProperty::IdealAtInput: {
        const VertexId input = gadget.single("I");
        report.checks.push_back(exhaustive_check(
            property, gadget,
            [&](std::span<const ColorSet> lists) { return available(g, k, lists, input) != lists[input]; }, options));
        break;
      }
      case GadgetProperty::LiteralFreedom: {
        const VertexId u = gadget.single("u");
        const VertexId ubar = gadget.single("ubar");
        report.checks.push_back(exhaustive_check(
            property, gadget,
            [&](std::span<const ColorSet> lists) {
              const ColorSet at_u = available(g, k, lists, u);
              if (at_u.empty()) return true;
              return at_u != lists[u] && available(g, k, lists, ubar) != lists[ubar];
            },
            options));
        break;
      }
      case GadgetProperty::ForcedTransmission: {
        if (!gadget.canonical) throw std::invalid_argument("gadget '" + gadget.name + "' has no canonical assignment");
        const VertexId in = gadget.single("I");
        const VertexId out = gadget.single("O");
        const Color pin = metadata_int(gadget, "pin_color");
        const Color forced = metadata_int(gadget, "forced_color");
        const auto& lists = gadget.canonical->lists;
        bool ok = feasible_with(g, k, lists, {{in, pin}});
        for (Color c : lists[out].colors()) {
          if (feasible_with(g, k, lists, {{in, pin}, {out, c}}) != (c == forced)) ok = false;
        }
        PropertyCheck check{property, CheckOutcome::Pass, std::nullopt, 0};
        check.examined = 1;
        if (!ok) {
          check.outcome = CheckOutcome::Fail;
          check.counterexample = gadget.canonical;
        }
        report.checks.push_back(std::move(check));
        break;
      }
    }
  }
  return report;
}

}  // namespace kchoose
