#include "kchoose/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace kchoose {

VertexId Graph::add_vertex(std::string name) {
  if (by_name_.contains(name)) {
    throw std::invalid_argument("duplicate vertex '" + name + "'");
  }
  const VertexId id = names_.size();
  by_name_.emplace(name, id);
  names_.push_back(std::move(name));
  adj_.emplace_back();
  return id;
}

void Graph::add_edge(VertexId u, VertexId v) {
  if (!add_edge_if_absent(u, v)) {
    throw std::invalid_argument("parallel edge " + names_[u] + "-" + names_[v]);
  }
}

void Graph::add_edge(std::string_view u, std::string_view v) { add_edge(index(u), index(v)); }

bool Graph::add_edge_if_absent(VertexId u, VertexId v) {
  if (u >= order() || v >= order()) throw std::out_of_range("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("loop at " + names_[u]);
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) return false;
  au.insert(it, v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++edge_count_;
  return true;
}

std::optional<VertexId> Graph::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

VertexId Graph::index(std::string_view name) const {
  auto id = find(name);
  if (!id) throw std::out_of_range("unknown vertex '" + std::string(name) + "'");
  return *id;
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& a : adj_) d = std::max(d, a.size());
  return d;
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  const auto& au = adj_.at(u);
  return std::binary_search(au.begin(), au.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < order(); ++u) {
    for (VertexId v : adj_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Graph Graph::induced(std::span<const VertexId> keep) const {
  std::vector<VertexId> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::optional<VertexId>> remap(order());
  Graph out;
  for (VertexId v : sorted) {
    remap.at(v) = out.add_vertex(names_[v]);
    if (auto c = coord(v)) out.set_coord(*remap[v], *c);
  }
  for (VertexId v : sorted) {
    for (VertexId w : adj_[v]) {
      if (v < w && remap[w]) out.add_edge(*remap[v], *remap[w]);
    }
  }
  return out;
}

std::optional<GridCoord> Graph::coord(VertexId v) const {
  auto it = coords_.find(v);
  if (it == coords_.end()) return std::nullopt;
  return it->second;
}

void Graph::set_coord(VertexId v, GridCoord c) {
  if (v >= order()) throw std::out_of_range("coordinate for unknown vertex");
  coords_[v] = c;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.names_ == b.names_ && a.adj_ == b.adj_ && a.coords_ == b.coords_;
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
  std::vector<std::vector<VertexId>> comps;
  std::vector<char> seen(g.order(), 0);
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<VertexId> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (VertexId w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::string fresh_name(const Graph& g, std::string base) {
  while (g.contains(base)) base += '\'';
  return base;
}

}  // namespace kchoose
