#include "kchoose/gadget_types.hpp"

#include <stdexcept>

namespace kchoose {

const std::vector<VertexId>& GadgetWithRoles::role(std::string_view role) const {
  const auto it = roles.find(role);
  if (it == roles.end()) throw std::invalid_argument("gadget '" + name + "' has no role '" + std::string(role) + "'");
  return it->second;
}

VertexId GadgetWithRoles::single(std::string_view role) const {
  const auto& vs = this->role(role);
  if (vs.size() != 1) throw std::invalid_argument("role '" + std::string(role) + "' does not name exactly one vertex");
  return vs.front();
}

void GadgetWithRoles::validate() const {
  for (const auto& [label, vs] : roles) {
    for (VertexId v : vs) {
      if (v >= graph.order()) throw std::invalid_argument("role '" + label + "' refers to a missing vertex");
    }
  }
  if (sizes.sizes.size() != graph.order()) throw std::invalid_argument("size function does not cover the graph");
  for (int s : sizes.sizes) {
    if (s < 1 || s > palette) throw std::invalid_argument("size function value outside 1..palette");
  }
  if (canonical) {
    canonical->validate(graph);
    if (canonical->palette != palette) throw std::invalid_argument("canonical assignment uses another palette");
    if (!canonical->conforms_to(sizes)) throw std::invalid_argument("canonical assignment does not match the sizes");
  }
}

}  // namespace kchoose
