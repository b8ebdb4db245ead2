#include "kchoose/gadgets.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>

#include "kchoose/named_graphs.hpp"
#include "kchoose/structure.hpp"

namespace kchoose {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

ColorSet shifted(std::initializer_list<Color> zero_based) {
  ColorSet out;
  for (Color c : zero_based) out.insert(c + 1);
  return out;
}

ColorSet map_colors(ColorSet s, const auto& image) {
  ColorSet out;
  for (Color c : s.colors()) out.insert(image(c));
  return out;
}

std::vector<VertexId> all_vertices(const Graph& g) {
  std::vector<VertexId> out(g.order());
  for (VertexId v = 0; v < g.order(); ++v) out[v] = v;
  return out;
}

// Colors the two sides of a bipartite graph 1 and 2.
std::optional<std::vector<Color>> two_tone(const Graph& g) {
  const auto parts = bipartition(g);
  if (!parts) return std::nullopt;
  std::vector<Color> out(g.order());
  for (VertexId v = 0; v < g.order(); ++v) out[v] = parts->side[v] == 0 ? 1 : 2;
  return out;
}

}  // namespace

GadgetWithRoles forall_variable_gadget() {
  GadgetWithRoles out;
  out.name = "forall";
  Graph& g = out.graph;
  for (const char* n : {"u", "ubar", "u1", "u2", "u3", "u4"}) g.add_vertex(n);
  g.add_edge("u1", "u2");
  g.add_edge("u2", "u3");
  g.add_edge("u3", "u4");
  g.add_edge("u4", "u1");
  g.add_edge("u", "u1");
  g.add_edge("ubar", "u3");
  out.roles["u"] = {g.index("u")};
  out.roles["ubar"] = {g.index("ubar")};
  out.roles["cycle"] = {g.index("u1"), g.index("u2"), g.index("u3"), g.index("u4")};
  out.sizes = SizeFunction::uniform(g, 2);
  out.palette = 3;
  return out;
}

GadgetWithRoles path_transmitter(int length, int target) {
  require(length >= 2, "a transmitter path needs length at least 2");
  require(target >= 0 && target <= 2, "transmitter target must be 0, 1 or 2");
  GadgetWithRoles out;
  out.name = "transmitter";
  Graph& g = out.graph;
  g.add_vertex("x");
  for (int i = 1; i < length; ++i) g.add_vertex("t" + std::to_string(i));
  g.add_vertex("y");
  for (VertexId v = 0; v + 1 < g.order(); ++v) g.add_edge(v, v + 1);

  std::vector<ColorSet> lists;
  if (target == 0 && length % 2 == 0) {
    lists.assign(g.order(), shifted({0, 1}));
  } else if (target == 0) {
    lists.assign(g.order() - 2, shifted({0, 1}));
    lists.push_back(shifted({1, 2}));
    lists.push_back(shifted({0, 2}));
  } else {
    const int other = 3 - target;
    const int last = length % 2 == 1 ? 0 : other;
    lists.push_back(shifted({0, 1}));
    for (int i = 1; i < length; ++i) lists.push_back(shifted({0, other}));
    lists.push_back(shifted({last, target}));
  }
  out.roles["x"] = {0};
  out.roles["y"] = {g.order() - 1};
  out.roles["I"] = out.roles["x"];
  out.roles["O"] = out.roles["y"];
  out.sizes = SizeFunction::uniform(g, 2);
  out.palette = 3;
  out.canonical = ListAssignment{3, std::move(lists)};
  out.metadata["color_shift"] = "1";
  out.metadata["pin_color"] = "1";
  out.metadata["forced_color"] = std::to_string(target + 1);
  return out;
}

GadgetWithRoles diamond_gadget(int palette) {
  require(palette >= 3, "the diamond needs a palette of at least 3 colors");
  GadgetWithRoles out;
  out.name = "diamond";
  out.graph = diamond();
  for (VertexId v = 0; v < out.graph.order(); ++v) out.sizes.sizes.push_back(static_cast<int>(out.graph.degree(v)));
  out.palette = palette;
  return out;
}

GadgetWithRoles gadget_H() {
  GadgetWithRoles out;
  out.name = "H";
  Graph& g = out.graph;
  for (const char* n : {"X", "b1", "c1", "Y", "b2", "c2", "Z"}) g.add_vertex(n);
  for (const auto& [b, c, end] : {std::tuple{"b1", "c1", "Y"}, std::tuple{"b2", "c2", "Z"}}) {
    g.add_edge("X", b);
    g.add_edge("X", c);
    g.add_edge(b, c);
    g.add_edge(b, end);
    g.add_edge(c, end);
  }
  const VertexId x = g.index("X"), y = g.index("Y"), z = g.index("Z");
  out.roles["X"] = {x};
  out.roles["Y"] = {y};
  out.roles["Z"] = {z};
  out.roles["S"] = {x, y, z};
  out.sizes = SizeFunction::uniform(g, 3);
  out.sizes[x] = out.sizes[y] = out.sizes[z] = 2;
  out.palette = 4;
  // First infeasible assignment, in enumeration order, whose lists on X, Y, Z
  // use at most three colors.
  out.canonical = ListAssignment{4,
                                 {
                                     ColorSet{1, 2},     // X
                                     ColorSet{1, 2, 3},  // b1
                                     ColorSet{1, 2, 3},  // c1
                                     ColorSet{1, 3},     // Y
                                     ColorSet{1, 2, 3},  // b2
                                     ColorSet{1, 2, 3},  // c2
                                     ColorSet{2, 3},     // Z
                                 }};
  return out;
}

GadgetWithRoles compose_ff(const Graph& g, const SizeFunction& f, VertexId v0, const GadgetWithRoles& gadget,
                           int palette) {
  require(f.sizes.size() == g.order(), "size function does not cover the graph");
  require(v0 < g.order(), "compose_ff: unknown attachment vertex");
  require(f[v0] <= palette - 1, "compose_ff: f(v0) must be below the palette size");
  const auto& attach = gadget.role("S");

  GadgetWithRoles out;
  out.name = "composed";
  out.palette = palette;
  Graph& h = out.graph;
  for (VertexId v = 0; v < g.order(); ++v) {
    h.add_vertex(g.name(v));
    if (auto c = g.coord(v)) h.set_coord(v, *c);
  }
  for (const Edge& e : g.edges()) h.add_edge(e.u, e.v);
  out.sizes = f;
  ++out.sizes[v0];

  const std::string prefix = gadget.name + "[" + g.name(v0) + "].";
  std::vector<VertexId> image(gadget.graph.order());
  for (VertexId v = 0; v < gadget.graph.order(); ++v) {
    image[v] = h.add_vertex(fresh_name(h, prefix + gadget.graph.name(v)));
    out.sizes.sizes.push_back(gadget.sizes[v]);
  }
  for (const Edge& e : gadget.graph.edges()) h.add_edge(image[e.u], image[e.v]);
  for (VertexId s : attach) {
    h.add_edge(image[s], v0);
    ++out.sizes[image[s]];
  }
  out.roles["base"] = all_vertices(g);
  out.roles["gadget"] = image;
  for (VertexId s : attach) out.roles["S"].push_back(image[s]);
  out.roles["v0"] = {v0};
  return out;
}

GadgetWithRoles attach_H_everywhere(const Graph& g, std::span<const VertexId> two_list) {
  require(!two_list.empty(), "attach_H_everywhere needs at least one 2-list vertex");
  SizeFunction f = SizeFunction::uniform(g, 3);
  for (VertexId v : two_list) {
    require(v < g.order(), "unknown 2-list vertex");
    f[v] = 2;
  }
  const GadgetWithRoles h = gadget_H();
  Graph cur = g;
  SizeFunction sizes = f;
  std::vector<VertexId> gadget_vertices;
  for (VertexId v : two_list) {
    GadgetWithRoles step = compose_ff(cur, sizes, v, h, 4);
    const auto& added = step.role("gadget");
    gadget_vertices.insert(gadget_vertices.end(), added.begin(), added.end());
    cur = std::move(step.graph);
    sizes = std::move(step.sizes);
  }
  GadgetWithRoles out;
  out.name = "attachH";
  out.graph = std::move(cur);
  out.sizes = std::move(sizes);
  out.palette = 4;
  out.roles["base"] = all_vertices(g);
  out.roles["two_list"] = {two_list.begin(), two_list.end()};
  out.roles["gadgets"] = gadget_vertices;
  if (auto base = two_tone(g)) {
    // Base in colors 1 and 2, X, Y, Z in 3, each diamond edge b-c in 1 and 2.
    Coloring cert{std::vector<Color>(out.graph.order(), 0)};
    for (VertexId v = 0; v < g.order(); ++v) cert.colors[v] = (*base)[v];
    for (std::size_t i = 0; i < gadget_vertices.size(); ++i) {
      static constexpr Color pattern[] = {3, 1, 2, 3, 1, 2, 3};
      cert.colors[gadget_vertices[i]] = pattern[i % 7];
    }
    out.certificate = std::move(cert);
  }
  return out;
}

GadgetWithRoles gadget_G3() {
  GadgetWithRoles out;
  out.name = "G3";
  Graph& g = out.graph;
  for (const char* n : {"A", "B", "C", "D", "E", "F", "G", "H", "a", "b", "c", "d", "e", "a'", "b'", "f", "g", "h"}) {
    g.add_vertex(n);
  }
  auto cycle = [&](std::initializer_list<const char*> names) {
    const std::vector<const char*> vs(names);
    for (std::size_t i = 0; i < vs.size(); ++i) g.add_edge_if_absent(g.index(vs[i]), g.index(vs[(i + 1) % vs.size()]));
  };
  cycle({"A", "B", "C", "D", "E"});
  cycle({"A", "B", "F", "G", "H"});
  cycle({"a", "b", "c", "d", "e"});
  cycle({"a'", "b'", "f", "g", "h"});
  for (const auto& [outer, inner] : std::initializer_list<std::pair<const char*, const char*>>{
           {"A", "a"}, {"B", "b"}, {"C", "c"}, {"D", "d"}, {"E", "e"},
           {"A", "a'"}, {"B", "b'"}, {"F", "f"}, {"G", "g"}, {"H", "h"}}) {
    g.add_edge(outer, inner);
  }
  out.sizes = SizeFunction::uniform(g, 3);
  for (const char* n : {"C", "E", "F", "H"}) {
    out.sizes[g.index(n)] = 2;
    out.roles["S"].push_back(g.index(n));
  }
  for (const char* n : {"A", "B", "C", "D", "E", "F", "G", "H"}) out.roles[n] = {g.index(n)};
  out.palette = 5;
  return out;
}

GadgetWithRoles gadget_G(const GlueSpec& glue) {
  const GadgetWithRoles part = gadget_G3();
  const Graph& pg = part.graph;
  require(pg.contains(glue.left) && pg.contains(glue.right), "glue names a vertex that gadget_G3 lacks");
  require(glue.left != "A" && glue.right != "A" && glue.left != glue.right, "glue must name two vertices other than A");
  const VertexId left = pg.index(glue.left), right = pg.index(glue.right), hub = pg.index("A");

  GadgetWithRoles out;
  out.name = "G";
  out.palette = 5;
  Graph& g = out.graph;
  std::vector<std::vector<VertexId>> image(3, std::vector<VertexId>(pg.order(), pg.order()));
  std::map<VertexId, int> size_of;
  auto place = [&](int copy, VertexId v, VertexId target) {
    image[copy][v] = target;
    const auto [it, fresh] = size_of.emplace(target, part.sizes[v]);
    require(fresh || it->second == part.sizes[v], "glue identifies vertices of different sizes");
  };
  for (int copy = 0; copy < 3; ++copy) {
    for (VertexId v = 0; v < pg.order(); ++v) {
      if (v == hub && copy > 0) {
        place(copy, v, image[0][hub]);
      } else if (v == right && copy > 0) {
        place(copy, v, image[copy - 1][left]);
      } else if (v == left && copy == 2) {
        place(copy, v, image[0][right]);
      } else {
        const std::string name = v == hub ? "A" : pg.name(v) + "_" + std::to_string(copy + 1);
        place(copy, v, g.add_vertex(name));
      }
    }
  }
  for (int copy = 0; copy < 3; ++copy) {
    for (const Edge& e : pg.edges()) g.add_edge_if_absent(image[copy][e.u], image[copy][e.v]);
  }
  out.sizes.sizes.assign(g.order(), 3);
  for (const auto& [v, size] : size_of) {
    out.sizes[v] = size;
    if (size == 2) out.roles["S"].push_back(v);
  }
  out.roles["A"] = {image[0][hub]};
  require(!has_triangle(g), "glue produces a triangle");
  require(out.roles["S"].size() == 9, "glue does not give 9 size-2 vertices");
  out.metadata["glue"] = glue.left + "~" + glue.right;
  return out;
}

GadgetWithRoles candidate148(const GlueSpec& glue) {
  const GadgetWithRoles part = gadget_G(glue);
  GadgetWithRoles out;
  out.name = "candidate148";
  out.palette = 5;
  Graph& g = out.graph;
  std::vector<VertexId> black;
  for (int copy = 1; copy <= 3; ++copy) {
    const std::string prefix = "g" + std::to_string(copy) + ".";
    const VertexId offset = g.order();
    for (VertexId v = 0; v < part.graph.order(); ++v) g.add_vertex(prefix + part.graph.name(v));
    for (const Edge& e : part.graph.edges()) g.add_edge(offset + e.u, offset + e.v);
    for (VertexId s : part.role("S")) black.push_back(offset + s);
  }
  const VertexId hub = g.add_vertex("hub");
  for (VertexId b : black) g.add_edge(hub, b);
  out.sizes = SizeFunction::uniform(g, 3);
  out.roles["hub"] = {hub};
  out.roles["black"] = black;
  out.metadata["glue"] = part.metadata.at("glue");
  return out;
}

namespace {

std::vector<ColorSet> subsets_of_size(int universe, int size) {
  std::vector<ColorSet> out;
  auto rec = [&](auto&& self, Color from, ColorSet acc) -> void {
    if (acc.size() == size) {
      out.push_back(acc);
      return;
    }
    for (Color c = from; c <= universe; ++c) {
      ColorSet next = acc;
      next.insert(c);
      self(self, c + 1, next);
    }
  };
  rec(rec, 1, ColorSet{});
  return out;
}

}  // namespace

GadgetWithRoles bipartite_critical_gadget(int ell) {
  require(ell >= 2, "bipartite_critical_gadget needs ell >= 2");
  const auto big = subsets_of_size(2 * ell - 2, ell);
  const auto small = subsets_of_size(2 * ell - 2, ell - 1);
  GadgetWithRoles out;
  out.name = "bipcrit";
  Graph& g = out.graph;
  std::vector<ColorSet> lists;
  for (std::size_t i = 0; i < big.size(); ++i) {
    out.roles["B"].push_back(g.add_vertex("b" + std::to_string(i + 1)));
    out.sizes.sizes.push_back(ell);
    lists.push_back(big[i]);
  }
  for (std::size_t i = 0; i < small.size(); ++i) {
    out.roles["W"].push_back(g.add_vertex("w" + std::to_string(i + 1)));
    out.sizes.sizes.push_back(ell - 1);
    lists.push_back(small[i]);
  }
  for (VertexId b : out.roles["B"])
    for (VertexId w : out.roles["W"]) g.add_edge(b, w);
  out.roles["S"] = out.roles["W"];
  out.palette = 2 * ell - 1;
  out.canonical = ListAssignment{out.palette, std::move(lists)};
  return out;
}

GadgetWithRoles bipartite_ch_reduction(const Graph& g, const SizeFunction& f, int ell) {
  require(ell >= 3, "bipartite_ch_reduction needs ell >= 3");
  require(is_bipartite(g), "bipartite_ch_reduction needs a bipartite graph");
  require(f.sizes.size() == g.order(), "size function does not cover the graph");
  for (int s : f.sizes) require(s == 2 || s == 3, "sizes must be 2 or 3");
  const int palette = 2 * ell - 1;
  const GadgetWithRoles gadget = bipartite_critical_gadget(ell);
  Graph cur = g;
  SizeFunction sizes = f;
  for (VertexId v = 0; v < g.order(); ++v) {
    while (sizes[v] < ell) {
      GadgetWithRoles step = compose_ff(cur, sizes, v, gadget, palette);
      cur = std::move(step.graph);
      sizes = std::move(step.sizes);
    }
  }
  GadgetWithRoles out;
  out.name = "bipch";
  out.graph = std::move(cur);
  out.sizes = std::move(sizes);
  out.palette = palette;
  out.roles["base"] = all_vertices(g);
  if (auto colors = two_tone(out.graph)) out.certificate = Coloring{std::move(*colors)};
  return out;
}

std::optional<std::vector<int>> two_coloring(const Hypergraph& h) {
  const std::size_t n = h.vertices.size();
  require(n < 31, "two_coloring is exhaustive and limited to 30 vertices");
  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t i = 0; i < n; ++i) index[h.vertices[i]] = i;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (const auto& edge : h.edges) {
      bool zero = false, one = false;
      for (const auto& x : edge) ((mask >> index.at(x)) & 1u ? one : zero) = true;
      if (!(zero && one)) ok = false;
    }
    if (ok) {
      std::vector<int> out(n);
      for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<int>((mask >> i) & 1u);
      return out;
    }
  }
  return std::nullopt;
}

namespace {

// Color pairs {s,t}, s < t, over {1..m+1} other than {1,2}, in
// lexicographic order.
std::vector<std::pair<Color, Color>> separator_pairs(int m) {
  std::vector<std::pair<Color, Color>> out;
  for (Color s = 1; s <= m + 1; ++s)
    for (Color t = s + 1; t <= m + 1; ++t)
      if (!(s == 1 && t == 2)) out.emplace_back(s, t);
  return out;
}

}  // namespace

GadgetWithRoles hypergraph_reduction(const Hypergraph& h) {
  const int m = static_cast<int>(h.edges.size());
  require(m >= 2, "hypergraph_reduction needs at least two hyperedges");
  std::set<std::string, std::less<>> names(h.vertices.begin(), h.vertices.end());
  require(names.size() == h.vertices.size(), "hypergraph vertices must be distinct");
  for (const auto& edge : h.edges) {
    require(!edge.empty() && edge.size() <= 3, "hyperedges must have 1 to 3 vertices");
    std::set<std::string, std::less<>> seen(edge.begin(), edge.end());
    require(seen.size() == edge.size(), "a hyperedge repeats a vertex");
    for (const auto& x : edge) require(names.contains(x), "hyperedge uses unknown vertex '" + x + "'");
  }

  GadgetWithRoles out;
  out.name = "hyperred";
  Graph& g = out.graph;
  auto& v0 = out.roles["V0"];
  auto& vf = out.roles["VF"];
  auto& vx = out.roles["VX"];
  auto& vs = out.roles["VS"];
  for (int i = 1; i <= m + 1; ++i) v0.push_back(g.add_vertex("v0_" + std::to_string(i)));
  for (int i = 1; i <= m; ++i) vf.push_back(g.add_vertex("vF_" + std::to_string(i)));
  std::map<std::string, VertexId, std::less<>> x_vertex;
  for (const auto& x : h.vertices) {
    x_vertex[x] = g.add_vertex("vX_" + x);
    vx.push_back(x_vertex[x]);
  }
  for (const auto& [s, t] : separator_pairs(m)) {
    vs.push_back(g.add_vertex("vS_" + std::to_string(s) + "_" + std::to_string(t)));
  }
  for (std::size_t i = 0; i < v0.size(); ++i)
    for (std::size_t j = i + 1; j < v0.size(); ++j) g.add_edge(v0[i], v0[j]);
  for (std::size_t i = 0; i < vf.size(); ++i)
    for (std::size_t j = i + 1; j < vf.size(); ++j) g.add_edge(vf[i], vf[j]);
  for (std::size_t i = 2; i < v0.size(); ++i) {
    for (VertexId x : vx) g.add_edge(v0[i], x);
    for (VertexId s : vs) g.add_edge(v0[i], s);
  }
  for (VertexId f : vf) g.add_edge(v0[0], f);
  for (int i = 0; i < m; ++i)
    for (const auto& x : h.edges[static_cast<std::size_t>(i)]) g.add_edge(vf[static_cast<std::size_t>(i)], x_vertex[x]);

  out.palette = m + 1;
  out.sizes = SizeFunction::uniform(g, m + 1);
  for (VertexId x : vx) out.sizes[x] = m;
  for (VertexId s : vs) out.sizes[s] = m - 1;

  Coloring cert{std::vector<Color>(g.order(), 1)};
  for (std::size_t i = 0; i < v0.size(); ++i) cert.colors[v0[i]] = static_cast<Color>(i + 1);
  for (std::size_t i = 0; i < vf.size(); ++i) cert.colors[vf[i]] = static_cast<Color>(i + 2);
  out.certificate = std::move(cert);
  out.metadata["color_shift"] = "1";
  out.metadata["m"] = std::to_string(m);
  return out;
}

ListAssignment infeasible_from_2coloring(const GadgetWithRoles& instance, std::span<const int> coloring) {
  const auto& vf = instance.role("VF");
  const auto& vx = instance.role("VX");
  const auto& vs = instance.role("VS");
  const int m = static_cast<int>(vf.size());
  require(coloring.size() == vx.size(), "one color per hypergraph vertex expected");
  const Graph& g = instance.graph;
  std::map<VertexId, int> theta;
  for (std::size_t i = 0; i < vx.size(); ++i) {
    require(coloring[i] == 0 || coloring[i] == 1, "2-coloring values must be 0 or 1");
    theta[vx[i]] = coloring[i];
  }
  for (VertexId f : vf) {
    bool zero = false, one = false;
    for (VertexId w : g.neighbors(f)) {
      if (auto it = theta.find(w); it != theta.end()) (it->second ? one : zero) = true;
    }
    require(zero && one, "the 2-coloring leaves hyperedge '" + g.name(f) + "' monochromatic");
  }

  const ColorSet full = ColorSet::full(m + 1);
  ListAssignment out{m + 1, std::vector<ColorSet>(g.order(), full)};
  for (VertexId x : vx) {
    ColorSet l = full.without(ColorSet{1, 2});
    l.insert(theta[x] + 1);
    out.lists[x] = l;
  }
  const auto pairs = separator_pairs(m);
  for (std::size_t i = 0; i < vs.size(); ++i) out.lists[vs[i]] = full.without(ColorSet{pairs[i].first, pairs[i].second});
  return out;
}

GadgetWithRoles pad_subgrid_to_grid(const Graph& s, const SizeFunction& f, int palette) {
  require(f.sizes.size() == s.order(), "size function does not cover the subgrid");
  require(s.order() > 0, "empty subgrid");
  std::map<GridCoord, VertexId> at;
  int r0 = 0, r1 = 0, c0 = 0, c1 = 0;
  for (VertexId v = 0; v < s.order(); ++v) {
    const auto c = s.coord(v);
    require(c.has_value(), "vertex '" + s.name(v) + "' has no grid coordinates");
    require(at.emplace(*c, v).second, "two vertices share grid coordinates");
    if (v == 0) {
      r0 = r1 = c->row;
      c0 = c1 = c->col;
    }
    r0 = std::min(r0, c->row);
    r1 = std::max(r1, c->row);
    c0 = std::min(c0, c->col);
    c1 = std::max(c1, c->col);
  }
  for (const Edge& e : s.edges()) {
    const auto a = *s.coord(e.u), b = *s.coord(e.v);
    require(std::abs(a.row - b.row) + std::abs(a.col - b.col) == 1, "edge between non-adjacent grid positions");
  }
  for (const auto& [c, v] : at) {
    for (GridCoord step : {GridCoord{c.row + 1, c.col}, GridCoord{c.row, c.col + 1}}) {
      if (auto it = at.find(step); it != at.end()) require(s.adjacent(v, it->second), "subgrid is not induced");
    }
  }

  GadgetWithRoles out;
  out.name = "padgrid";
  out.palette = palette;
  Graph& g = out.graph;
  std::map<GridCoord, VertexId> placed;
  for (int r = r0; r <= r1; ++r) {
    for (int c = c0; c <= c1; ++c) {
      const GridCoord pos{r, c};
      const auto it = at.find(pos);
      const VertexId v = it != at.end() ? g.add_vertex(s.name(it->second))
                                        : g.add_vertex(fresh_name(s, std::to_string(r) + "," + std::to_string(c)));
      g.set_coord(v, pos);
      placed[pos] = v;
      out.sizes.sizes.push_back(it != at.end() ? f[it->second] : 5);
      out.roles[it != at.end() ? "S" : "padding"].push_back(v);
    }
  }
  for (const auto& [pos, v] : placed) {
    for (GridCoord step : {GridCoord{pos.row + 1, pos.col}, GridCoord{pos.row, pos.col + 1}}) {
      if (auto it = placed.find(step); it != placed.end()) g.add_edge(v, it->second);
    }
  }
  out.roles.try_emplace("padding");
  out.metadata["rows"] = std::to_string(r1 - r0 + 1);
  out.metadata["cols"] = std::to_string(c1 - c0 + 1);
  return out;
}

GadgetWithRoles c6_preext_reduction(const Graph& g, VertexId v1, VertexId v2, VertexId v3) {
  require(v1 < g.order() && v2 < g.order() && v3 < g.order(), "unknown vertex");
  require(v1 != v2 && v2 != v3 && v1 != v3, "the three vertices must be distinct");
  const auto parts = bipartition(g);
  require(parts.has_value(), "c6_preext_reduction needs a bipartite graph");
  const auto components = connected_components(g);
  std::vector<std::size_t> comp_of(g.order());
  for (std::size_t i = 0; i < components.size(); ++i)
    for (VertexId v : components[i]) comp_of[v] = i;
  for (auto [a, b] : {std::pair{v1, v2}, std::pair{v2, v3}, std::pair{v1, v3}}) {
    require(comp_of[a] != comp_of[b] || parts->side[a] == parts->side[b], "the three vertices lie in different parts");
  }

  GadgetWithRoles out;
  out.name = "c6preext";
  out.graph = g;
  Graph& h = out.graph;
  const VertexId u1 = h.add_vertex(fresh_name(h, "u1"));
  const VertexId u2 = h.add_vertex(fresh_name(h, "u2"));
  const VertexId u3 = h.add_vertex(fresh_name(h, "u3"));
  h.add_edge(v1, u1);
  h.add_edge(u1, v2);
  h.add_edge(v2, u2);
  h.add_edge(u2, v3);
  h.add_edge(v3, u3);
  h.add_edge(u3, v1);
  out.roles["C"] = {v1, u1, v2, u2, v3, u3};
  out.roles["V"] = {v1, v2, v3};
  out.roles["U"] = {u1, u2, u3};
  out.palette = 3;
  out.sizes = SizeFunction::uniform(h, 3);
  ListAssignment lists{3, std::vector<ColorSet>(h.order(), ColorSet::full(3))};
  const ColorSet rigid[] = {{1, 2}, {2, 3}, {1, 3}, {1, 2}, {2, 3}, {1, 3}};
  for (std::size_t i = 0; i < 6; ++i) {
    out.sizes[out.roles["C"][i]] = 2;
    lists.lists[out.roles["C"][i]] = rigid[i];
  }
  out.canonical = std::move(lists);
  out.metadata["canonical"] = "rigid";
  return out;
}

GadgetWithRoles listcol_reduction_34(const Graph& g, const ListAssignment& lists) {
  lists.validate(g);
  require(lists.palette == 4, "listcol_reduction_34 needs palette 4");
  for (VertexId v = 0; v < g.order(); ++v) {
    require(lists[v].size() == 2 || lists[v].size() == 3, "list of '" + g.name(v) + "' must have 2 or 3 colors");
  }
  // Gadget lists blocking color 3: swap the color missing on X, Y, Z with 3,
  // then add 3 to those three lists.
  const GadgetWithRoles h = gadget_H();
  const auto& s_role = h.role("S");
  ColorSet on_s;
  for (VertexId v : s_role) on_s |= h.canonical->lists[v];
  const Color missing = ColorSet::full(4).without(on_s).first();
  std::vector<ColorSet> blocking;
  for (ColorSet l : h.canonical->lists) {
    blocking.push_back(map_colors(l, [&](Color c) { return c == missing ? 3 : c == 3 ? missing : c; }));
  }
  for (VertexId v : s_role) blocking[v].insert(3);

  GadgetWithRoles out;
  out.name = "listcol34";
  out.palette = 4;
  Graph cur = g;
  std::vector<ColorSet> result(lists.lists);
  std::vector<VertexId> gadget_vertices;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (lists[v].size() != 2) continue;
    int shift = 0;
    auto rotate = [&](Color c) { return (c - 1 + shift) % 4 + 1; };
    while (lists[v].contains(rotate(3))) ++shift;
    GadgetWithRoles step = compose_ff(cur, SizeFunction::uniform(cur, 2), v, h, 4);
    const auto& added = step.role("gadget");
    for (std::size_t i = 0; i < added.size(); ++i) result.push_back(map_colors(blocking[i], rotate));
    result[v].insert(rotate(3));
    gadget_vertices.insert(gadget_vertices.end(), added.begin(), added.end());
    cur = std::move(step.graph);
  }
  out.graph = std::move(cur);
  out.sizes = SizeFunction::uniform(out.graph, 3);
  out.canonical = ListAssignment{4, std::move(result)};
  out.roles["base"] = all_vertices(g);
  out.roles["gadgets"] = gadget_vertices;
  if (auto base = two_tone(g)) {
    Coloring cert{std::vector<Color>(out.graph.order(), 0)};
    for (VertexId v = 0; v < g.order(); ++v) cert.colors[v] = (*base)[v];
    for (std::size_t i = 0; i < gadget_vertices.size(); ++i) {
      static constexpr Color pattern[] = {3, 1, 2, 3, 1, 2, 3};
      cert.colors[gadget_vertices[i]] = pattern[i % 7];
    }
    out.certificate = std::move(cert);
  }
  return out;
}

}  // namespace kchoose
