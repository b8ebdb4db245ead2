#include "kchoose/named_graphs.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string>

namespace kchoose {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

std::string vname(char prefix, int i) { return std::string(1, prefix) + std::to_string(i); }

Graph numbered(int n) {
  Graph g;
  for (int i = 1; i <= n; ++i) g.add_vertex(vname('v', i));
  return g;
}

}  // namespace

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  Graph g = numbered(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  Graph g = numbered(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  Graph g = numbered(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph complete_bipartite(int p, int q) {
  require(p >= 1 && q >= 1, "complete bipartite needs p, q >= 1");
  Graph g;
  for (int i = 1; i <= p; ++i) g.add_vertex(vname('b', i));
  for (int j = 1; j <= q; ++j) g.add_vertex(vname('w', j));
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) g.add_edge(i, p + j);
  return g;
}

Graph complete_tripartite(int p, int q, int r) {
  require(p >= 1 && q >= 1 && r >= 1, "complete tripartite needs p, q, r >= 1");
  Graph g;
  std::vector<int> part;
  const int sizes[3] = {p, q, r};
  const char prefix[3] = {'a', 'b', 'c'};
  for (int k = 0; k < 3; ++k) {
    for (int i = 1; i <= sizes[k]; ++i) {
      g.add_vertex(vname(prefix[k], i));
      part.push_back(k);
    }
  }
  for (VertexId u = 0; u < g.order(); ++u)
    for (VertexId v = u + 1; v < g.order(); ++v)
      if (part[u] != part[v]) g.add_edge(u, v);
  return g;
}

Graph k11p(int p) {
  require(p >= 1, "K_{1,1,p} needs p >= 1");
  Graph g;
  const VertexId a = g.add_vertex("a");
  const VertexId b = g.add_vertex("b");
  g.add_edge(a, b);
  for (int i = 1; i <= p; ++i) {
    const VertexId s = g.add_vertex(vname('s', i));
    g.add_edge(a, s);
    g.add_edge(b, s);
  }
  return g;
}

Graph theta_graph(std::vector<int> lengths) {
  require(lengths.size() == 3 || lengths.size() == 4, "theta needs three or four path lengths");
  require(std::all_of(lengths.begin(), lengths.end(), [](int l) { return l >= 1; }),
          "theta path lengths must be >= 1");
  require(std::count(lengths.begin(), lengths.end(), 1) <= 1,
          "theta with two paths of length 1 would have a parallel edge");
  Graph g;
  const VertexId x = g.add_vertex("x");
  const VertexId y = g.add_vertex("y");
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    VertexId prev = x;
    for (int j = 1; j < lengths[i]; ++j) {
      const VertexId cur = g.add_vertex("p" + std::to_string(i + 1) + "_" + std::to_string(j));
      g.add_edge(prev, cur);
      prev = cur;
    }
    g.add_edge(prev, y);
  }
  return g;
}

Graph gamma_graph(int p, int q, int r) {
  require(p >= 3 && q >= 3 && r >= 0, "gamma needs p, q >= 3 and r >= 0");
  Graph g;
  std::vector<VertexId> c1, c2;
  for (int i = 1; i <= p; ++i) c1.push_back(g.add_vertex("c1_" + std::to_string(i)));
  for (int i = 0; i < p; ++i) g.add_edge(c1[i], c1[(i + 1) % p]);
  std::vector<VertexId> path{c1[0]};
  for (int i = 1; i < r; ++i) path.push_back(g.add_vertex("r" + std::to_string(i)));
  if (r == 0) {
    c2.push_back(c1[0]);
  } else {
    c2.push_back(g.add_vertex("c2_1"));
  }
  path.push_back(c2[0]);
  for (int i = 2; i <= q; ++i) c2.push_back(g.add_vertex("c2_" + std::to_string(i)));
  for (int i = 0; i < q; ++i) g.add_edge(c2[i], c2[(i + 1) % q]);
  if (r > 0) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) g.add_edge(path[i], path[i + 1]);
  }
  return g;
}

GridGraph grid_graph(int rows, int cols) {
  require(rows >= 1 && cols >= 1, "grid needs positive dimensions");
  GridGraph out{Graph{}, rows, cols};
  Graph& g = out.graph;
  auto id = [cols](int i, int j) { return static_cast<VertexId>((i - 1) * cols + (j - 1)); };
  for (int i = 1; i <= rows; ++i) {
    for (int j = 1; j <= cols; ++j) {
      const VertexId v = g.add_vertex(std::to_string(i) + "," + std::to_string(j));
      g.set_coord(v, {i, j});
    }
  }
  for (int i = 1; i <= rows; ++i) {
    for (int j = 1; j <= cols; ++j) {
      if (j < cols) g.add_edge(id(i, j), id(i, j + 1));
      if (i < rows) g.add_edge(id(i, j), id(i + 1, j));
    }
  }
  return out;
}

GridGraph chocolate() { return grid_graph(2, 3); }

Graph diamond() {
  Graph g = numbered(4);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  g.add_edge(2, 3);
  return g;
}

namespace {

std::vector<int> parse_ints(std::string_view text) {
  std::vector<int> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view tok = text.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty()) {
      throw std::invalid_argument("bad integer '" + std::string(tok) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw std::invalid_argument("trailing comma");
  }
  return out;
}

}  // namespace

Graph build_named(std::string_view descriptor) {
  const auto colon = descriptor.find(':');
  const std::string family(descriptor.substr(0, colon));
  const std::vector<int> args =
      colon == std::string_view::npos ? std::vector<int>{} : parse_ints(descriptor.substr(colon + 1));
  auto arity = [&](std::size_t n) {
    require(args.size() == n, family + " expects " + std::to_string(n) + " parameter(s)");
  };

  if (family == "chocolate") return arity(0), chocolate().graph;
  if (family == "diamond") return arity(0), diamond();
  if (family == "cycle") return arity(1), cycle_graph(args[0]);
  if (family == "path") return arity(1), path_graph(args[0]);
  if (family == "complete") return arity(1), complete_graph(args[0]);
  if (family == "k11p") return arity(1), k11p(args[0]);
  if (family == "kbip" || family == "completeBipartite") return arity(2), complete_bipartite(args[0], args[1]);
  if (family == "ktri" || family == "completeTripartite") {
    return arity(3), complete_tripartite(args[0], args[1], args[2]);
  }
  if (family == "theta") return theta_graph(args);
  if (family == "gamma") return arity(3), gamma_graph(args[0], args[1], args[2]);
  if (family == "grid") return arity(2), grid_graph(args[0], args[1]).graph;
  throw std::invalid_argument("unknown graph family '" + family + "'");
}

}  // namespace kchoose
