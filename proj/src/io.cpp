#include "kchoose/io.hpp"

#include <algorithm>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "kchoose/named_graphs.hpp"

namespace kchoose {

Json parse_json(std::string_view text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError(origin + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str(), path);
}

namespace {

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) throw DataError(std::string(what) + " needs a \"" + key + "\" field");
  return j.at(key);
}

VertexId vertex_of(const Graph& g, const Json& name, const char* what) {
  if (!name.is_string()) throw DataError(std::string(what) + ": vertex names must be strings");
  const auto v = g.find(name.get<std::string>());
  if (!v) throw DataError(std::string(what) + ": unknown vertex '" + name.get<std::string>() + "'");
  return *v;
}

int int_of(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw DataError(std::string(what) + ": expected an integer");
  return j.get<int>();
}

}  // namespace

Graph graph_from_json(const Json& j) {
  Graph g;
  const Json& vertices = field(j, "vertices", "graph");
  if (!vertices.is_array()) throw DataError("graph: \"vertices\" must be an array");
  try {
    for (const Json& v : vertices) {
      if (!v.is_string()) throw DataError("graph: vertex names must be strings");
      g.add_vertex(v.get<std::string>());
    }
    if (j.contains("edges")) {
      for (const Json& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw DataError("graph: each edge must be a pair");
        g.add_edge(vertex_of(g, e[0], "graph edge"), vertex_of(g, e[1], "graph edge"));
      }
    }
    if (j.contains("coords")) {
      for (const auto& [name, pos] : j.at("coords").items()) {
        if (!pos.is_array() || pos.size() != 2) throw DataError("graph: coordinates must be [row, col]");
        g.set_coord(vertex_of(g, Json(name), "graph coords"), {int_of(pos[0], "row"), int_of(pos[1], "col")});
      }
    }
  } catch (const std::invalid_argument& e) {
    throw DataError(std::string("graph: ") + e.what());
  }
  return g;
}

Json graph_to_json(const Graph& g) {
  Json j;
  j["vertices"] = g.names();
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({g.name(e.u), g.name(e.v)});
  j["edges"] = std::move(edges);
  if (g.has_coords()) {
    Json coords = Json::object();
    for (VertexId v = 0; v < g.order(); ++v)
      if (auto c = g.coord(v)) coords[g.name(v)] = {c->row, c->col};
    j["coords"] = std::move(coords);
  }
  return j;
}

Graph load_graph(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return graph_from_json(read_json_file(arg));
  try {
    return build_named(arg);
  } catch (const std::invalid_argument& e) {
    throw DataError("'" + arg + "' is neither a graph file nor a named graph (" + e.what() + ")");
  }
}

ListAssignment lists_from_json(const Json& j, const Graph& g) {
  ListAssignment out;
  out.palette = int_of(field(j, "palette", "lists"), "palette");
  out.lists.assign(g.order(), ColorSet{});
  std::vector<char> seen(g.order(), 0);
  for (const auto& [name, colors] : field(j, "lists", "lists").items()) {
    const VertexId v = vertex_of(g, Json(name), "lists");
    if (!colors.is_array()) throw DataError("lists: the list of '" + name + "' must be an array");
    for (const Json& c : colors) {
      const int color = int_of(c, "list color");
      if (color < 1 || color > kMaxPalette) throw DataError("lists: color out of range at '" + name + "'");
      if (out.lists[v].contains(color)) throw DataError("lists: repeated color at '" + name + "'");
      out.lists[v].insert(color);
    }
    seen[v] = 1;
  }
  for (VertexId v = 0; v < g.order(); ++v)
    if (!seen[v]) throw DataError("lists: no list for '" + g.name(v) + "'");
  try {
    out.validate(g);
  } catch (const std::invalid_argument& e) {
    throw DataError(std::string("lists: ") + e.what());
  }
  return out;
}

Json lists_to_json(const ListAssignment& lists, const Graph& g) {
  Json j;
  j["palette"] = lists.palette;
  Json body = Json::object();
  for (VertexId v = 0; v < g.order(); ++v) body[g.name(v)] = lists[v].colors();
  j["lists"] = std::move(body);
  return j;
}

Json coloring_to_json(const Coloring& c, const Graph& g) {
  Json body = Json::object();
  for (VertexId v = 0; v < g.order(); ++v)
    if (c[v] != 0) body[g.name(v)] = c[v];
  return Json{{"colors", std::move(body)}};
}

Coloring coloring_from_json(const Json& j, const Graph& g) {
  Coloring out{std::vector<Color>(g.order(), 0)};
  for (const auto& [name, c] : field(j, "colors", "coloring").items()) {
    out.colors[vertex_of(g, Json(name), "coloring")] = int_of(c, "color");
  }
  return out;
}

SizeFunction sizes_from_json(const Json& j, const Graph& g) {
  SizeFunction out;
  const int fallback = j.contains("default") ? int_of(j.at("default"), "default size") : 0;
  out.sizes.assign(g.order(), fallback);
  if (j.contains("sizes")) {
    for (const auto& [name, n] : j.at("sizes").items()) out.sizes[vertex_of(g, Json(name), "sizes")] = int_of(n, "size");
  } else if (!j.contains("default")) {
    throw DataError("sizes needs a \"sizes\" or \"default\" field");
  }
  for (VertexId v = 0; v < g.order(); ++v)
    if (out.sizes[v] < 1) throw DataError("sizes: no positive size for '" + g.name(v) + "'");
  return out;
}

Json sizes_to_json(const SizeFunction& f, const Graph& g) {
  Json body = Json::object();
  for (VertexId v = 0; v < g.order(); ++v) body[g.name(v)] = f[v];
  return Json{{"sizes", std::move(body)}};
}

Hypergraph hypergraph_from_json(const Json& j) {
  Hypergraph h;
  for (const Json& x : field(j, "X", "hypergraph")) {
    if (!x.is_string()) throw DataError("hypergraph: vertex names must be strings");
    h.vertices.push_back(x.get<std::string>());
  }
  for (const Json& e : field(j, "F", "hypergraph")) {
    if (!e.is_array()) throw DataError("hypergraph: hyperedges must be arrays");
    auto& edge = h.edges.emplace_back();
    for (const Json& x : e) {
      if (!x.is_string()) throw DataError("hypergraph: vertex names must be strings");
      edge.push_back(x.get<std::string>());
      if (std::find(h.vertices.begin(), h.vertices.end(), edge.back()) == h.vertices.end())
        throw DataError("hypergraph: unknown vertex '" + edge.back() + "' in a hyperedge");
    }
  }
  return h;
}

Json gadget_summary_json(const GadgetWithRoles& gadget) {
  const Graph& g = gadget.graph;
  Json j;
  j["name"] = gadget.name;
  j["vertices"] = g.order();
  j["edges"] = g.size();
  j["palette"] = gadget.palette;
  Json roles = Json::object();
  for (const auto& [label, vs] : gadget.roles) {
    Json names = Json::array();
    for (VertexId v : vs) names.push_back(g.name(v));
    roles[label] = std::move(names);
  }
  j["roles"] = std::move(roles);
  j["sizes"] = sizes_to_json(gadget.sizes, g)["sizes"];
  if (gadget.certificate) j["certificate"] = coloring_to_json(*gadget.certificate, g)["colors"];
  Json meta = Json::object();
  for (const auto& [k, v] : gadget.metadata) meta[k] = v;
  j["metadata"] = std::move(meta);
  return j;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const Graph& g, const ListAssignment* lists, const Coloring* coloring) {
  static constexpr const char* fills[] = {"white", "tomato", "skyblue", "palegreen", "gold", "plum", "orange"};
  std::ostringstream out;
  out << "graph G {\n";
  for (VertexId v = 0; v < g.order(); ++v) {
    std::string label = g.name(v);
    if (lists) label += "\\n" + to_string(lists->lists.at(v));
    out << "  " << quoted(g.name(v)) << " [label=" << quoted(label);
    if (coloring && coloring->colors.at(v) != 0) {
      const Color c = coloring->colors.at(v);
      out << ", style=filled, fillcolor=" << fills[c % 7];
      out << ", xlabel=" << quoted(std::to_string(c));
    }
    if (auto c = g.coord(v)) out << ", pos=\"" << c->col << "," << -c->row << "!\"";
    out << "];\n";
  }
  for (const Edge& e : g.edges()) out << "  " << quoted(g.name(e.u)) << " -- " << quoted(g.name(e.v)) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace kchoose
