#include "kchoose/facts.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>

#include "kchoose/choosability.hpp"
#include "kchoose/enumerate.hpp"
#include "kchoose/gadgets.hpp"
#include "kchoose/graph_enum.hpp"
#include "kchoose/listcolor.hpp"
#include "kchoose/named_graphs.hpp"
#include "kchoose/random_instances.hpp"
#include "kchoose/structure.hpp"

namespace kchoose {

std::string to_string(FactStatus s) {
  switch (s) {
    case FactStatus::Pass: return "pass";
    case FactStatus::Fail: return "fail";
    case FactStatus::BudgetExceeded: return "budget";
  }
  return "?";
}

namespace {

// Collects the outcome of a fact: the first failure or budget overrun wins.
class Tally {
 public:
  explicit Tally(const FactOptions& options) : options_(options) {}

  DeciderOptions decider() const {
    DeciderOptions d;
    d.jobs = options_.jobs;
    d.budget = options_.budget;
    return d;
  }

  bool expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && status_ == FactStatus::Pass) {
      status_ = FactStatus::Fail;
      first_problem_ = what;
    }
    return ok;
  }

  /// False (and records a budget outcome) when the verdict ran out of budget.
  bool decided(Verdict v, const std::string& what) {
    if (v != Verdict::BudgetExceeded) return true;
    if (status_ == FactStatus::Pass) {
      status_ = FactStatus::BudgetExceeded;
      first_problem_ = what;
    }
    return false;
  }

  FactResult finish(const std::string& summary) const {
    std::ostringstream out;
    out << summary << " [" << checks_ << " checks]";
    if (status_ != FactStatus::Pass) out << " first problem: " << first_problem_;
    return {status_, out.str()};
  }

 private:
  const FactOptions& options_;
  FactStatus status_ = FactStatus::Pass;
  std::size_t checks_ = 0;
  std::string first_problem_;
};

bool witness_is_valid(const Graph& g, const ListAssignment& w, const SizeFunction& f, int palette) {
  return w.palette == palette && w.conforms_to(f) && !solve(g, w).has_value();
}

FactResult chocolate_not_23(const FactOptions& o) {
  Tally t(o);
  const Graph g = chocolate().graph;
  const auto v = is_choosable(g, 2, 3, t.decider());
  if (t.decided(v.verdict, "chocolate")) {
    t.expect(v.verdict == Verdict::NotChoosable, "chocolate reported choosable");
    t.expect(v.witness && witness_is_valid(g, *v.witness, SizeFunction::uniform(g, 2), 3), "invalid witness");
  }
  return t.finish("chocolate [2,3]: " + to_string(v.verdict) + " after " + std::to_string(v.examined) + " assignments");
}

FactResult k2m_thresholds(const FactOptions& o) {
  Tally t(o);
  for (int m = 2; m <= 6; ++m) {
    const Graph g = complete_bipartite(2, m);
    const auto three = is_choosable(g, 2, 3, t.decider());
    if (t.decided(three.verdict, "K2," + std::to_string(m) + " k=3"))
      t.expect(three.choosable(), "K2," + std::to_string(m) + " not [2,3]-choosable");
    const auto four = is_choosable(g, 2, 4, t.decider());
    if (t.decided(four.verdict, "K2," + std::to_string(m) + " k=4"))
      t.expect(four.choosable() == (m <= 3), "K2," + std::to_string(m) + " wrong [2,4] verdict");
  }
  return t.finish("K2,m for m=2..6 at palettes 3 and 4");
}

FactResult theta2224(const FactOptions& o) {
  Tally t(o);
  const Graph g = theta_graph({2, 2, 2, 4});
  const auto v = is_choosable(g, 2, 3, t.decider());
  if (t.decided(v.verdict, "theta")) {
    t.expect(v.verdict == Verdict::NotChoosable, "theta_{2,2,2,4} reported [2,3]-choosable");
    t.expect(v.witness && witness_is_valid(g, *v.witness, SizeFunction::uniform(g, 2), 3), "invalid witness");
  }
  return t.finish("theta_{2,2,2,4} [2,3]: " + to_string(v.verdict));
}

FactResult recognizer_oracles(const FactOptions& o) {
  Tally t(o);
  std::size_t graphs = 0;
  for (int n = 1; n <= o.sweep_order; ++n) {
    for (const Graph& g : all_connected_graphs(n)) {
      ++graphs;
      const auto k3 = is_choosable(g, 2, 3, t.decider());
      if (t.decided(k3.verdict, "sweep k=3"))
        t.expect(k3.choosable() == recognize_23_choosable(g), "[2,3] recognizer disagrees on a " + std::to_string(n) + "-vertex graph");
      const auto k4 = is_choosable(g, 2, 4, t.decider());
      if (t.decided(k4.verdict, "sweep k=4"))
        t.expect(k4.choosable() == recognize_2_choosable(g), "2-choosability recognizer disagrees on a " + std::to_string(n) + "-vertex graph");
    }
  }
  return t.finish(std::to_string(graphs) + " connected graphs up to order " + std::to_string(o.sweep_order));
}

FactResult palette_threshold(const FactOptions& o) {
  Tally t(o);
  std::size_t graphs = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : all_connected_graphs(n)) {
      ++graphs;
      const auto k4 = is_choosable(g, 2, 4, t.decider());
      const auto k5 = is_choosable(g, 2, 5, t.decider());
      if (t.decided(k4.verdict, "k=4") && t.decided(k5.verdict, "k=5"))
        t.expect(k4.choosable() == k5.choosable(), "palettes 4 and 5 disagree on a " + std::to_string(n) + "-vertex graph");
    }
  }
  return t.finish(std::to_string(graphs) + " connected graphs up to order 6");
}

FactResult diamond_choosable(const FactOptions& o) {
  Tally t(o);
  for (int k = 3; k <= 5; ++k) {
    const auto gadget = diamond_gadget(k);
    const auto v = is_fk_choosable(gadget.graph, gadget.sizes, k, t.decider());
    if (t.decided(v.verdict, "diamond")) t.expect(v.choosable(), "diamond not choosable at palette " + std::to_string(k));
  }
  return t.finish("diamond with degree sizes at palettes 3, 4, 5");
}

FactResult gadget_h_critical(const FactOptions& o) {
  Tally t(o);
  const auto h = gadget_H();
  const AssignmentEnumerator all(h.graph, h.sizes, h.palette, {false, std::nullopt});
  const auto conforming = all.count();
  t.expect(conforming == 55296, "conforming assignment count " + std::to_string(conforming));
  const auto report = is_critical(h.graph, h.sizes, h.palette, h.role("S"), t.decider());
  if (report.status == CriticalStatus::BudgetExceeded) {
    t.decided(Verdict::BudgetExceeded, "criticality");
  } else {
    t.expect(report.is_critical(), "gadget H not critical");
    t.expect(report.witness == h.canonical, "first constrained witness differs from the frozen fixture");
  }
  return t.finish(std::to_string(conforming) + " conforming assignments; " + to_string(report.status));
}

FactResult bipartite_gadgets(const FactOptions& o) {
  Tally t(o);
  const auto small = bipartite_critical_gadget(2);
  t.expect(small.graph.order() == 3 && small.graph.size() == 2, "ell=2 gadget is not K1,2");
  const auto report = is_critical(small.graph, small.sizes, 3, small.role("W"), t.decider());
  t.expect(report.is_critical(), "K1,2 not critical");
  const auto big = bipartite_critical_gadget(3);
  t.expect(big.role("B").size() == 4 && big.role("W").size() == 6 && big.palette == 5, "ell=3 gadget shape");
  t.expect(!solve(big.graph, *big.canonical).has_value(), "ell=3 canonical assignment is feasible");
  return t.finish("K1,2 criticality and K4,6 infeasibility");
}

FactResult c5_facts(const FactOptions& o) {
  Tally t(o);
  const Graph c5 = cycle_graph(5);
  std::uint64_t infeasible = 0;
  const AssignmentEnumerator all(c5, SizeFunction::uniform(c5, 2), 5, {false, std::nullopt});
  all.for_each([&](std::span<const ColorSet> lists) {
    const bool identical = std::all_of(lists.begin(), lists.end(), [&](ColorSet l) { return l == lists[0]; });
    const bool feasible = is_feasible(c5, ListAssignment{5, {lists.begin(), lists.end()}});
    if (!feasible) ++infeasible;
    return t.expect(feasible != identical, "C5 2-list assignment misclassified");
  });
  t.expect(infeasible == 10, "expected the 10 constant assignments to be the infeasible ones");
  for (VertexId v = 0; v < 5; ++v) {
    SizeFunction f = SizeFunction::uniform(c5, 2);
    f[v] = 3;
    const auto verdict = is_fk_choosable(c5, f, 5, t.decider());
    if (t.decided(verdict.verdict, "C5 with a 3-list")) t.expect(verdict.choosable(), "C5 with one 3-list not choosable");
  }
  return t.finish("C5 at palette 5: " + std::to_string(infeasible) + " infeasible 2-list assignments");
}

FactResult literal_and_transmission(const FactOptions& o) {
  Tally t(o);
  DeciderOptions d = t.decider();
  d.symmetry = false;
  const auto forall = forall_variable_gadget();
  const GadgetProperty literal[] = {GadgetProperty::LiteralFreedom};
  const auto report = verify_gadget_properties(forall, literal, d);
  t.expect(report.all_passed(), "literal freedom fails");
  t.expect(report.checks.front().examined == 729, "expected all 3^6 assignments to be examined");
  const auto two = is_choosable(forall.graph, 2, 4, t.decider());
  t.expect(two.choosable(), "forall gadget not 2-choosable");
  const GadgetProperty forced[] = {GadgetProperty::ForcedTransmission};
  for (int p = 2; p <= 6; ++p) {
    for (int i = 0; i <= 2; ++i) {
      t.expect(verify_gadget_properties(path_transmitter(p, i), forced, d).all_passed(),
               "transmitter p=" + std::to_string(p) + " i=" + std::to_string(i));
    }
  }
  return t.finish("forall gadget over 729 assignments; 15 transmitters");
}

FactResult hypergraph_biconditional(const FactOptions& o) {
  Tally t(o);
  std::size_t instances = 0;
  for (int n = 1; n <= 4; ++n) {
    Hypergraph base;
    for (int i = 1; i <= n; ++i) base.vertices.push_back("x" + std::to_string(i));
    std::vector<std::vector<std::string>> subsets;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      if (std::popcount(mask) > 3) continue;
      std::vector<std::string> s;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1u) s.push_back(base.vertices[static_cast<std::size_t>(i)]);
      subsets.push_back(std::move(s));
    }
    for (std::size_t a = 0; a < subsets.size(); ++a) {
      for (std::size_t b = a + 1; b < subsets.size(); ++b) {
        Hypergraph h = base;
        h.edges = {subsets[a], subsets[b]};
        const auto instance = hypergraph_reduction(h);
        ++instances;
        const auto split = two_coloring(h);
        const auto verdict = is_fk_choosable(instance.graph, instance.sizes, instance.palette, t.decider());
        if (!t.decided(verdict.verdict, "reduction instance")) continue;
        t.expect(split.has_value() == !verdict.choosable(), "biconditional fails");
        if (split) t.expect(!solve(instance.graph, infeasible_from_2coloring(instance, *split)), "constructed lists feasible");
        const AssignmentEnumerator all(instance.graph, instance.sizes, instance.palette, {false, std::nullopt});
        all.for_each([&](std::span<const ColorSet> lists) {
          const ListAssignment a{instance.palette, {lists.begin(), lists.end()}};
          const auto fast = color_reduction_class(instance, a);
          const bool ok = fast.has_value() == is_feasible(instance.graph, a) &&
                          (!fast || (fast->is_proper(instance.graph) && fast->respects(a)));
          return t.expect(ok, "pair algorithm disagrees with the solver");
        });
      }
    }
  }
  return t.finish(std::to_string(instances) + " hypergraphs with two edges on up to 4 vertices");
}

FactResult compose_equivalence(const FactOptions& o) {
  Tally t(o);
  const auto gadget = bipartite_critical_gadget(2);
  std::size_t cases = 0;
  for (int n = 1; n <= 3; ++n) {
    for (const Graph& g : all_graphs(n)) {
      const int combos = n == 1 ? 3 : n == 2 ? 9 : 27;
      for (int code = 0; code < combos; ++code) {
        SizeFunction f;
        for (int i = 0, c = code; i < n; ++i, c /= 3) f.sizes.push_back(c % 3 + 1);
        const auto base = is_fk_choosable(g, f, 3, t.decider());
        for (VertexId v0 = 0; v0 < g.order(); ++v0) {
          if (f[v0] > 2) continue;
          ++cases;
          const auto composed = compose_ff(g, f, v0, gadget, 3);
          const auto lifted = is_fk_choosable(composed.graph, composed.sizes, 3, t.decider());
          if (t.decided(base.verdict, "base") && t.decided(lifted.verdict, "composed"))
            t.expect(base.choosable() == lifted.choosable(), "composition changes the verdict");
        }
      }
    }
  }
  return t.finish(std::to_string(cases) + " (graph, sizes, attachment) cases");
}

FactResult ideal_colorers(const FactOptions& o) {
  Tally t(o);
  Rng rng(20240613);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 40)(rng);
    const Graph g = random_bipartite(rng, n, std::uniform_real_distribution<double>(0.05, 0.6)(rng));
    const auto lists = random_lists(rng, SizeFunction::uniform(g, 3), 4);
    const VertexId v = std::uniform_int_distribution<VertexId>(0, g.order() - 1)(rng);
    const auto colors = lists[v].colors();
    const Color c = colors[std::uniform_int_distribution<std::size_t>(0, colors.size() - 1)(rng)];
    const Coloring col = color_bipartite_34(g, lists, {v, c});
    if (!t.expect(col.is_proper(g) && col.respects(lists) && col[v] == c, "bipartite colorer failed")) break;
  }
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 30)(rng);
    const Graph g = random_graph(rng, n, std::uniform_real_distribution<double>(0.05, 0.7)(rng));
    std::vector<VertexId> order(g.order());
    std::iota(order.begin(), order.end(), VertexId{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::size_t> pos(g.order());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    const int palette = static_cast<int>(g.max_degree()) + 2;
    ListAssignment lists{palette, std::vector<ColorSet>(g.order())};
    for (VertexId v = 0; v < g.order(); ++v) {
      int back = 0;
      for (VertexId w : g.neighbors(v)) back += pos[w] < pos[v];
      const int size = std::uniform_int_distribution<int>(back + 1, palette)(rng);
      lists.lists[v] = random_list(rng, size, palette);
    }
    const auto first = lists[order[0]].colors();
    const Color c = first[std::uniform_int_distribution<std::size_t>(0, first.size() - 1)(rng)];
    const Coloring col = greedy_order_color(g, order, lists, c);
    if (!t.expect(col.is_proper(g) && col.respects(lists) && col[order[0]] == c, "greedy colorer failed")) break;
  }
  return t.finish("10000 bipartite [3,4] instances and 10000 greedy instances");
}

FactResult candidate_structure(const FactOptions& o) {
  Tally t(o);
  const auto c = candidate148();
  const Graph& g = c.graph;
  const VertexId hub = c.single("hub");
  t.expect(g.order() == 148, "vertex count " + std::to_string(g.order()));
  t.expect(!has_triangle(g), "triangle found");
  t.expect(c.role("black").size() == 27 && g.degree(hub) == 27, "hub is not joined to exactly 27 black vertices");
  const auto single = gadget_G();
  t.expect(single.graph.order() == 49 && single.role("S").size() == 9 && single.graph.degree(single.single("A")) == 12,
           "glued gadget shape");
  return t.finish("148 vertices, triangle-free, hub degree 27 (choosability not checked)");
}

FactResult bipartite_decider(const FactOptions& o) {
  Tally t(o);
  Rng rng(7340033);
  std::map<BipartiteRoute, int> routes;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(4, 10)(rng);
    const Graph g = random_bipartite(rng, n, std::uniform_real_distribution<double>(0.3, 0.9)(rng));
    std::vector<VertexId> all(g.order());
    std::iota(all.begin(), all.end(), VertexId{0});
    std::shuffle(all.begin(), all.end(), rng);
    const int want = std::min<int>(n, trial % 4 == 0 ? std::uniform_int_distribution<int>(0, 5)(rng) : 6);
    std::vector<VertexId> two(all.begin(), all.begin() + want);
    std::sort(two.begin(), two.end());
    SizeFunction f = SizeFunction::uniform(g, 3);
    for (VertexId v : two) f[v] = 2;
    const auto fast = decide_23_3_CH_bipartite(g, two, t.decider());
    const auto slow = is_fk_choosable(g, f, 3, t.decider());
    for (auto r : fast.routes) ++routes[r];
    if (t.decided(fast.verdict, "decider") && t.decided(slow.verdict, "enumeration"))
      t.expect(fast.choosable() == slow.choosable(), "decider disagrees with enumeration on trial " + std::to_string(trial));
  }
  std::string summary = "200 random bipartite graphs; routes:";
  for (const auto& [r, count] : routes) summary += " " + to_string(r) + "=" + std::to_string(count);
  return t.finish(summary);
}

std::vector<Fact> build_registry() {
  return {
      {"F1", "the chocolate is not [2,3]-choosable", 1.0, chocolate_not_23},
      {"F2", "K2,m is [2,3]-choosable for m=2..6 and [2,4]-choosable iff m<=3", 30.0, k2m_thresholds},
      {"F3", "theta_{2,2,2,4} is not [2,3]-choosable", 60.0, theta2224},
      {"F4", "core recognizers match exhaustive [2,3] and [2,4] deciders on small connected graphs", 7200.0,
       recognizer_oracles},
      {"F5", "[2,4] and [2,5] verdicts agree on connected graphs up to order 6", 1800.0, palette_threshold},
      {"F6", "the diamond with degree-sized lists is choosable at palettes 3, 4, 5", 1.0, diamond_choosable},
      {"F7", "gadget H is critical for its size function at palette 4 on X, Y, Z", 60.0, gadget_h_critical},
      {"F8", "K1,2 is critical for sizes (2,1) at palette 3; the K4,6 subset lists are infeasible", 1.0,
       bipartite_gadgets},
      {"F9", "C5 at palette 5: only constant 2-lists are infeasible; one 3-list always suffices", 10.0, c5_facts},
      {"F10", "literal freedom of the forall gadget; forced transmission along 2-list paths", 10.0,
       literal_and_transmission},
      {"F11", "hypergraph 2-colorable iff its reduction instance is not choosable; pair algorithm matches solver",
       600.0, hypergraph_biconditional},
      {"F12", "attaching K1,2 preserves [f,3]-choosability on all graphs up to order 3", 60.0, compose_equivalence},
      {"F13", "bipartite [3,4] colorer and greedy colorer never fail on random instances", 60.0, ideal_colorers},
      {"F14", "148-vertex candidate: order, triangle-freeness and hub adjacency", 10.0, candidate_structure},
      {"F15", "bipartite {2,3}-list decider agrees with exhaustive enumeration", 300.0, bipartite_decider},
  };
}

}  // namespace

const std::vector<Fact>& fact_registry() {
  static const std::vector<Fact> registry = build_registry();
  return registry;
}

std::vector<const Fact*> select_facts(const std::string& pattern) {
  std::vector<const Fact*> out;
  const std::regex re(pattern.empty() ? ".*" : pattern);
  for (const Fact& f : fact_registry())
    if (std::regex_match(f.id, re)) out.push_back(&f);
  return out;
}

}  // namespace kchoose
