#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kchoose/graph.hpp"
#include "kchoose/lists.hpp"

namespace kchoose {

/// A construction used by a reduction: the graph plus named role vertices,
/// the size function it is meant to be used with, and optionally a fixed
/// list assignment.
struct GadgetWithRoles {
  std::string name;
  Graph graph;
  std::map<std::string, std::vector<VertexId>, std::less<>> roles;
  SizeFunction sizes;
  int palette = 0;
  std::optional<ListAssignment> canonical;
  /// A proper coloring of the whole graph (ignoring lists) when the
  /// construction comes with one.
  std::optional<Coloring> certificate;
  std::map<std::string, std::string, std::less<>> metadata;

  bool has_role(std::string_view role) const { return roles.contains(role); }
  /// Throws std::invalid_argument if the role is missing.
  const std::vector<VertexId>& role(std::string_view role) const;
  /// The role must name exactly one vertex.
  VertexId single(std::string_view role) const;
  /// Checks that role vertices exist and the canonical assignment conforms to
  /// sizes and palette.
  void validate() const;
};

}  // namespace kchoose
