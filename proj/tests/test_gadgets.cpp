#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <numeric>
#include <set>

#include "kchoose/choosability.hpp"
#include "kchoose/gadgets.hpp"
#include "kchoose/listcolor.hpp"
#include "kchoose/named_graphs.hpp"
#include "kchoose/random_instances.hpp"
#include "kchoose/structure.hpp"
#include "oracles.hpp"

using namespace kchoose;

namespace {

/// True if g has an induced cycle of the given length.
bool has_hole(const Graph& g, std::size_t length) {
  std::vector<VertexId> path;
  std::function<bool()> extend = [&]() {
    const VertexId last = path.back();
    for (VertexId w : g.neighbors(last)) {
      if (w <= path.front() || std::ranges::count(path, w)) continue;
      const bool closing = path.size() + 1 == length;
      bool chord = false;
      for (std::size_t i = 0; i + 1 < path.size() && !chord; ++i) {
        if (i == 0 && closing) continue;
        chord = g.adjacent(path[i], w);
      }
      if (chord) continue;
      if (closing) {
        if (g.adjacent(w, path.front())) return true;
        continue;
      }
      path.push_back(w);
      if (extend()) return true;
      path.pop_back();
    }
    return false;
  };
  for (VertexId s = 0; s < g.order(); ++s) {
    path = {s};
    if (extend()) return true;
  }
  return false;
}

bool every_solution_forces(const GadgetWithRoles& t) {
  ListAssignment l = *t.canonical;
  const VertexId x = t.single("I");
  const VertexId y = t.single("O");
  const Color pin = std::stoi(t.metadata.at("pin_color"));
  const Color forced = std::stoi(t.metadata.at("forced_color"));
  l[x] = ColorSet::single(pin);
  std::size_t solutions = 0;
  bool ok = true;
  oracle::for_each_coloring(t.graph, l, [&](const std::vector<Color>& c) {
    ++solutions;
    ok = ok && c[y] == forced;
    return true;
  });
  return ok && solutions > 0;
}

}  // namespace

TEST_CASE("hole scanner sanity") {
  CHECK(has_hole(cycle_graph(5), 5));
  CHECK_FALSE(has_hole(complete_graph(5), 5));
  CHECK(has_hole(theta_graph({2, 3, 3}), 5));
  CHECK_FALSE(has_hole(theta_graph({2, 3, 3}), 7));
}

TEST_CASE("forall gadget") {
  const auto g = forall_variable_gadget();
  g.validate();
  CHECK(g.graph.order() == 6);
  CHECK(g.graph.size() == 6);
  int leaves = 0;
  for (VertexId v = 0; v < 6; ++v) leaves += g.graph.degree(v) == 1;
  CHECK(leaves == 2);
  CHECK(compute_core(g.graph).core.order() == 4);
  CHECK(recognize_2_choosable(g.graph));
  CHECK(is_choosable(g.graph, 2, 4).choosable());
}

TEST_CASE("path transmitters") {
  SUBCASE("listed patterns") {
    const auto p20 = path_transmitter(2, 0);
    CHECK(p20.canonical->lists == std::vector<ColorSet>{{1, 2}, {1, 2}, {1, 2}});
    const auto p30 = path_transmitter(3, 0);
    CHECK(p30.canonical->lists == std::vector<ColorSet>{{1, 2}, {1, 2}, {2, 3}, {1, 3}});
    const auto p21 = path_transmitter(2, 1);
    CHECK(p21.canonical->lists == std::vector<ColorSet>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(p21.metadata.at("forced_color") == "2");
  }
  SUBCASE("pinning the input forces the output") {
    for (int p = 2; p <= 8; ++p)
      for (int i = 0; i <= 2; ++i) {
        const auto t = path_transmitter(p, i);
        t.validate();
        CHECK(t.graph.order() == static_cast<std::size_t>(p + 1));
        CHECK(every_solution_forces(t));
      }
  }
  CHECK_THROWS(path_transmitter(1, 0));
  CHECK_THROWS(path_transmitter(3, 3));
}

TEST_CASE("composition with a critical gadget") {
  const Graph k1 = path_graph(1);
  const auto gadget = bipartite_critical_gadget(2);
  const auto c = compose_ff(k1, {{1}}, 0, gadget, 3);
  CHECK(c.graph.order() == 4);
  CHECK(c.sizes.sizes == std::vector<int>{2, 2, 2, 2});
  CHECK(is_fk_choosable(k1, {{1}}, 3).choosable());
  CHECK(is_fk_choosable(c.graph, c.sizes, 3).choosable());
  CHECK(c.graph.induced(c.role("base")) == k1);
  CHECK_THROWS(compose_ff(k1, {{3}}, 0, gadget, 3));

  SUBCASE("names are prefixed and collisions resolved") {
    Graph g;
    g.add_vertex("bipcrit[v].b1");
    g.add_vertex("v");
    const auto twice = compose_ff(g, {{1, 1}}, 1, gadget, 3);
    CHECK(twice.graph.order() == 5);
    CHECK(twice.graph.contains("bipcrit[v].b1'"));
  }
  SUBCASE("H on a 2-list grid vertex lifts its size to 3") {
    const auto choc = chocolate();
    const auto lifted = compose_ff(choc.graph, SizeFunction::uniform(choc.graph, 2), 0, gadget_H(), 4);
    CHECK(lifted.sizes[0] == 3);
    for (VertexId s : lifted.role("S")) CHECK(lifted.sizes[s] == 3);
    CHECK(lifted.graph.order() == 13);
  }
}

TEST_CASE("gadget H") {
  const auto h = gadget_H();
  h.validate();
  CHECK(h.graph.order() == 7);
  CHECK(h.palette == 4);
  for (const char* r : {"X", "Y", "Z"}) CHECK(h.sizes[h.single(r)] == 2);
  CHECK_FALSE(solve(h.graph, *h.canonical));
  ColorSet on_s;
  for (VertexId v : h.role("S")) on_s |= h.canonical->lists[v];
  CHECK(on_s.size() <= 3);
  SUBCASE("X, Y, Z in one common color always extend") {
    const auto s = h.role("S");
    SizeFunction f = SizeFunction::uniform(h.graph, 3);
    for (Color c = 1; c <= 4; ++c) {
      for (VertexId v : s) f[v] = 1;
      oracle::for_each_assignment(f, 4, [&](ListAssignment l) {
        for (VertexId v : s) l[v] = ColorSet::single(c);
        CHECK(solve(h.graph, l));
        return true;
      });
    }
  }
}

TEST_CASE("attaching H to every 2-list vertex") {
  const auto choc = chocolate();
  std::vector<VertexId> all(6);
  std::iota(all.begin(), all.end(), VertexId{0});
  const auto out = attach_H_everywhere(choc.graph, all);
  out.validate();
  CHECK(out.graph.order() == 48);
  CHECK(out.sizes == SizeFunction::uniform(out.graph, 3));
  REQUIRE(out.certificate);
  CHECK(out.certificate->is_proper(out.graph));
  CHECK(std::set<Color>(out.certificate->colors.begin(), out.certificate->colors.end()).size() == 3);
  CHECK_FALSE(has_hole(out.graph, 5));
  CHECK_FALSE(has_hole(out.graph, 7));

  SUBCASE("verdict preserved with one gadget on tiny graphs") {
    for (int n = 1; n <= 2; ++n) {
      const Graph g = path_graph(n);
      const std::vector<VertexId> first{0};
      SizeFunction f = SizeFunction::uniform(g, 3);
      f[0] = 2;
      const auto lifted = attach_H_everywhere(g, first);
      CHECK(is_fk_choosable(g, f, 4).choosable() == is_fk_choosable(lifted.graph, lifted.sizes, 4).choosable());
    }
  }
}

TEST_CASE("the 18-vertex gadget and its gluings") {
  const auto g3 = gadget_G3();
  g3.validate();
  CHECK(g3.graph.order() == 18);
  CHECK(g3.graph.size() == 29);
  CHECK_FALSE(has_triangle(g3.graph));
  std::set<std::string> two;
  for (VertexId v = 0; v < 18; ++v)
    if (g3.sizes[v] == 2) two.insert(g3.graph.name(v));
  CHECK(two == std::set<std::string>{"C", "E", "F", "H"});
  CHECK(g3.palette == 5);

  const auto g = gadget_G();
  g.validate();
  CHECK(g.graph.order() == 49);
  CHECK(g.role("S").size() == 9);
  CHECK(g.graph.degree(g.single("A")) == 12);
  CHECK_FALSE(has_triangle(g.graph));
  CHECK_THROWS(gadget_G({"B", "C"}));

  const auto cand = candidate148();
  CHECK(cand.graph.order() == 148);
  CHECK_FALSE(has_triangle(cand.graph));
  CHECK(cand.graph.degree(cand.single("hub")) == 27);
  CHECK(cand.sizes == SizeFunction::uniform(cand.graph, 3));
}

TEST_CASE("complete bipartite critical gadgets") {
  const auto two = bipartite_critical_gadget(2);
  two.validate();
  CHECK(oracle::isomorphic(two.graph, complete_bipartite(1, 2)));
  CHECK(two.canonical->lists == std::vector<ColorSet>{{1, 2}, {1}, {2}});
  CHECK_FALSE(solve(two.graph, *two.canonical));
  const auto three = bipartite_critical_gadget(3);
  CHECK(three.graph.order() == 10);
  CHECK(three.graph.size() == 24);
  CHECK(three.palette == 5);
  CHECK_FALSE(solve(three.graph, *three.canonical));
  CHECK(is_critical(two.graph, two.sizes, 3, two.role("S")).is_critical());
  CHECK_THROWS(bipartite_critical_gadget(1));
}

TEST_CASE("bipartite CH reduction") {
  const Graph one = path_graph(1);
  const auto r = bipartite_ch_reduction(one, {{2}}, 3);
  CHECK(r.graph.order() == 11);
  CHECK(is_bipartite(r.graph));
  CHECK(r.sizes == SizeFunction::uniform(r.graph, 3));
  CHECK(bipartite_ch_reduction(one, {{3}}, 3).graph.order() == 1);
  const auto bigger = bipartite_ch_reduction(chocolate().graph, SizeFunction::uniform(chocolate().graph, 2), 4);
  CHECK(is_bipartite(bigger.graph));
  CHECK(bigger.graph.order() == 6 + 6 * 2 * (20 + 15));
  CHECK_THROWS(bipartite_ch_reduction(cycle_graph(3), SizeFunction::uniform(cycle_graph(3), 2), 3));
  CHECK_THROWS(bipartite_ch_reduction(one, {{2}}, 2));
  CHECK_THROWS(bipartite_ch_reduction(one, {{1}}, 3));
}

TEST_CASE("hypergraph reduction") {
  const Hypergraph h{{"x1", "x2", "x3"}, {{"x1", "x2"}, {"x2", "x3"}}};
  const auto inst = hypergraph_reduction(h);
  inst.validate();
  const int m = 2;
  CHECK(inst.palette == m + 1);
  CHECK(inst.role("V0").size() == 3);
  CHECK(inst.role("VF").size() == 2);
  CHECK(inst.role("VX").size() == 3);
  CHECK(inst.role("VS").size() == 2);
  for (VertexId v : inst.role("VS")) CHECK(inst.sizes[v] == m - 1);
  for (VertexId v : inst.role("VX")) CHECK(inst.sizes[v] == m);
  for (VertexId v : inst.role("V0")) CHECK(inst.sizes[v] == m + 1);
  REQUIRE(inst.certificate);
  CHECK(inst.certificate->is_proper(inst.graph));
  // No proper coloring with m colors.
  CHECK_FALSE(solve(inst.graph, {inst.palette, std::vector<ColorSet>(inst.graph.order(), ColorSet::full(m))}));
  const auto split = two_coloring(h);
  REQUIRE(split);
  CHECK_FALSE(solve(inst.graph, infeasible_from_2coloring(inst, *split)));
  const std::vector<int> mono{0, 0, 0};
  CHECK_THROWS(infeasible_from_2coloring(inst, mono));
  CHECK_THROWS(hypergraph_reduction({{"x1"}, {{"x1"}}}));
  CHECK_THROWS(hypergraph_reduction({{"a", "b", "c", "d"}, {{"a", "b", "c", "d"}, {"a"}}}));
  CHECK_THROWS(hypergraph_reduction({{"a", "b"}, {{"a", "z"}, {"a"}}}));
  SUBCASE("pair label count grows as C(m+1,2)-1") {
    const Hypergraph four{{"a", "b"}, {{"a"}, {"b"}, {"a", "b"}}};
    CHECK(hypergraph_reduction(four).role("VS").size() == 5);
  }
}

TEST_CASE("grid padding") {
  const auto choc = chocolate();
  const auto same = pad_subgrid_to_grid(choc.graph, SizeFunction::uniform(choc.graph, 2));
  CHECK(same.graph.order() == 6);
  const bool padded_any = same.has_role("padding") && !same.role("padding").empty();
  CHECK_FALSE(padded_any);
  CHECK(oracle::isomorphic(same.graph, choc.graph));

  const auto grid = grid_graph(3, 3);
  const std::vector<VertexId> diag{grid.graph.index("1,1"), grid.graph.index("2,2"), grid.graph.index("3,3")};
  const Graph cells = grid.graph.induced(diag);
  const auto padded = pad_subgrid_to_grid(cells, SizeFunction::uniform(cells, 2));
  CHECK(padded.graph.order() == 9);
  CHECK(padded.role("padding").size() == 6);
  for (VertexId v : padded.role("padding")) CHECK(padded.sizes[v] == 5);
  CHECK(oracle::isomorphic(padded.graph, grid.graph));

  SUBCASE("choosability unchanged on tiny subgrids") {
    const std::vector<VertexId> corner{grid.graph.index("1,1"), grid.graph.index("1,2"), grid.graph.index("2,2")};
    const Graph s = grid.graph.induced(corner);
    for (int code = 0; code < 8; ++code) {
      const SizeFunction f{{1 + (code & 1), 1 + (code >> 1 & 1), 1 + (code >> 2 & 1)}};
      const auto p = pad_subgrid_to_grid(s, f);
      CHECK(is_fk_choosable(s, f, 5).choosable() == is_fk_choosable(p.graph, p.sizes, 5).choosable());
    }
  }
  CHECK_THROWS(pad_subgrid_to_grid(path_graph(3), SizeFunction::uniform(path_graph(3), 2)));
}

TEST_CASE("6-cycle pre-extension gadget") {
  Graph three;
  for (auto n : {"v1", "v2", "v3"}) three.add_vertex(n);
  const auto c = c6_preext_reduction(three, 0, 1, 2);
  c.validate();
  CHECK(oracle::isomorphic(c.graph, cycle_graph(6)));
  CHECK(is_bipartite(c.graph));
  oracle::for_each_coloring(c.graph, *c.canonical, [&](const std::vector<Color>& col) {
    CHECK(std::set<Color>{col[0], col[1], col[2]}.size() == 3);
    return true;
  });
  CHECK(solve(c.graph, *c.canonical));
  const Graph p = path_graph(2);
  CHECK_THROWS(c6_preext_reduction(p, 0, 1, 1));
  Graph mixed = path_graph(2);
  mixed.add_vertex("z");
  CHECK_THROWS(c6_preext_reduction(mixed, 0, 1, 2));
}

TEST_CASE("[3,4] list-coloring reduction") {
  const auto choc = chocolate();
  ListAssignment lists{4, std::vector<ColorSet>(6, {1, 2, 4})};
  lists[0] = {1, 2};
  const auto out = listcol_reduction_34(choc.graph, lists);
  CHECK(out.graph.order() == 13);
  CHECK(out.canonical->lists[0] == ColorSet{1, 2, 3});
  CHECK(out.canonical->conforms_to(out.sizes));
  REQUIRE(out.certificate);
  CHECK(out.certificate->is_proper(out.graph));

  SUBCASE("the attached copy of H blocks the added color") {
    std::vector<VertexId> keep{0};
    for (VertexId v : out.role("gadgets")) keep.push_back(v);
    const Graph sub = out.graph.induced(keep);
    ListAssignment sub_lists{4, {}};
    for (VertexId v : keep) sub_lists.lists.push_back(out.canonical->lists[v]);
    const Pin pin{0, 3};
    CHECK(count_colorings(sub, sub_lists, std::span(&pin, 1)) == 0);
    CHECK(count_colorings(sub, sub_lists) > 0);
  }
  SUBCASE("feasibility is preserved on tiny inputs") {
    Rng rng(2);
    for (int trial = 0; trial < 300; ++trial) {
      const Graph g = random_bipartite(rng, std::uniform_int_distribution<int>(1, 4)(rng), 0.7);
      ListAssignment l{4, {}};
      for (VertexId v = 0; v < g.order(); ++v)
        l.lists.push_back(random_list(rng, std::uniform_int_distribution<int>(2, 3)(rng), 4));
      const auto r = listcol_reduction_34(g, l);
      CHECK(is_feasible(g, l) == is_feasible(r.graph, *r.canonical));
    }
  }
  CHECK_THROWS(listcol_reduction_34(choc.graph, ListAssignment{4, std::vector<ColorSet>(6, {1})}));
}
