#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "kchoose/graph.hpp"

namespace kchoose {

/// Colors are 1..k. Palettes are limited to 63 colors.
using Color = int;
inline constexpr int kMaxPalette = 63;

/// A set of colors stored as a bitmask (bit c set means color c present).
class ColorSet {
 public:
  constexpr ColorSet() = default;
  constexpr explicit ColorSet(std::uint64_t bits) : bits_(bits) {}
  ColorSet(std::initializer_list<Color> colors) {
    for (Color c : colors) insert(c);
  }

  /// {1, ..., k}
  static constexpr ColorSet full(int k) { return ColorSet(((std::uint64_t{1} << k) - 1) << 1); }
  static constexpr ColorSet single(Color c) { return ColorSet(std::uint64_t{1} << c); }

  constexpr bool contains(Color c) const { return c >= 0 && c <= kMaxPalette && (bits_ >> c & 1u); }
  constexpr void insert(Color c) { bits_ |= std::uint64_t{1} << c; }
  constexpr void erase(Color c) { bits_ &= ~(std::uint64_t{1} << c); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  /// Smallest color; undefined on an empty set.
  constexpr Color first() const { return std::countr_zero(bits_); }
  constexpr Color max() const { return 63 - std::countl_zero(bits_); }
  constexpr std::uint64_t bits() const { return bits_; }

  std::vector<Color> colors() const;

  constexpr ColorSet operator&(ColorSet o) const { return ColorSet(bits_ & o.bits_); }
  constexpr ColorSet operator|(ColorSet o) const { return ColorSet(bits_ | o.bits_); }
  constexpr ColorSet without(ColorSet o) const { return ColorSet(bits_ & ~o.bits_); }
  constexpr ColorSet& operator|=(ColorSet o) { bits_ |= o.bits_; return *this; }

  friend constexpr bool operator==(ColorSet, ColorSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order of the sorted color sequences ({1,2} < {1,3} < {2,3}).
bool lex_less(ColorSet a, ColorSet b);

std::string to_string(ColorSet s);

/// Per-vertex required list size f(v).
struct SizeFunction {
  std::vector<int> sizes;

  static SizeFunction uniform(const Graph& g, int value) { return {std::vector<int>(g.order(), value)}; }
  int operator[](VertexId v) const { return sizes.at(v); }
  int& operator[](VertexId v) { return sizes.at(v); }
  int max() const;
  friend bool operator==(const SizeFunction&, const SizeFunction&) = default;
};

/// Lists for every vertex of a graph (indexed by VertexId), colors within
/// {1..palette}.
struct ListAssignment {
  int palette = 0;
  std::vector<ColorSet> lists;

  ColorSet operator[](VertexId v) const { return lists.at(v); }
  ColorSet& operator[](VertexId v) { return lists.at(v); }

  /// Throws std::invalid_argument unless there is a list per vertex of `g`,
  /// all colors lie in 1..palette and the palette is within limits.
  void validate(const Graph& g) const;
  bool conforms_to(const SizeFunction& f) const;
  SizeFunction sizes() const;
  friend bool operator==(const ListAssignment&, const ListAssignment&) = default;
};

/// A (possibly partial) coloring; 0 marks an uncolored vertex.
struct Coloring {
  std::vector<Color> colors;

  Color operator[](VertexId v) const { return colors.at(v); }
  bool is_proper(const Graph& g) const;
  bool respects(const ListAssignment& lists) const;
  friend bool operator==(const Coloring&, const Coloring&) = default;
};

struct Pin {
  VertexId vertex;
  Color color;
};

}  // namespace kchoose
