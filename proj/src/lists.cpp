#include "kchoose/lists.hpp"

#include <algorithm>
#include <stdexcept>

namespace kchoose {

std::vector<Color> ColorSet::colors() const {
  std::vector<Color> out;
  for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

bool lex_less(ColorSet a, ColorSet b) {
  const auto x = a.colors();
  const auto y = b.colors();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

std::string to_string(ColorSet s) {
  std::string out = "{";
  bool first = true;
  for (Color c : s.colors()) {
    if (!first) out += ",";
    out += std::to_string(c);
    first = false;
  }
  return out + "}";
}

int SizeFunction::max() const { return sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end()); }

void ListAssignment::validate(const Graph& g) const {
  if (palette < 1 || palette > kMaxPalette) {
    throw std::invalid_argument("palette must be in 1.." + std::to_string(kMaxPalette));
  }
  if (lists.size() != g.order()) throw std::invalid_argument("list assignment does not cover every vertex");
  const ColorSet allowed = ColorSet::full(palette);
  for (VertexId v = 0; v < lists.size(); ++v) {
    if (!lists[v].without(allowed).empty()) {
      throw std::invalid_argument("list of '" + g.name(v) + "' uses a color outside 1.." + std::to_string(palette));
    }
  }
}

bool ListAssignment::conforms_to(const SizeFunction& f) const {
  if (f.sizes.size() != lists.size()) return false;
  for (VertexId v = 0; v < lists.size(); ++v)
    if (lists[v].size() != f[v]) return false;
  return true;
}

SizeFunction ListAssignment::sizes() const {
  SizeFunction f;
  for (ColorSet s : lists) f.sizes.push_back(s.size());
  return f;
}

bool Coloring::is_proper(const Graph& g) const {
  if (colors.size() != g.order()) return false;
  for (const Edge& e : g.edges())
    if (colors[e.u] != 0 && colors[e.u] == colors[e.v]) return false;
  return true;
}

bool Coloring::respects(const ListAssignment& lists) const {
  if (colors.size() != lists.lists.size()) return false;
  for (VertexId v = 0; v < colors.size(); ++v)
    if (colors[v] != 0 && !lists[v].contains(colors[v])) return false;
  return true;
}

}  // namespace kchoose
