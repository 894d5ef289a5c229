#include "gswitch/core/homogenise.hpp"

#include <stdexcept>
#include <string>

namespace gswitch {

Homogenised homogenise(const EdgeColouring& g, const ColourGroup& group, int v,
                       int colour) {
  if (group.degree() != g.m()) {
    throw std::invalid_argument("group degree " + std::to_string(group.degree()) +
                                " does not match m=" + std::to_string(g.m()));
  }
  if (v < 0 || v >= g.n()) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
  }
  if (colour < 0 || colour >= g.m()) {
    throw std::invalid_argument("colour " + std::to_string(colour) + " out of range");
  }

  // reach[c] = first element index taking c to `colour`.
  std::vector<std::size_t> reach(static_cast<std::size_t>(g.m()), group.order());
  for (std::size_t e = group.order(); e-- > 0;) {
    for (int c = 0; c < g.m(); ++c) {
      if (group.act(e, c) == colour) reach[static_cast<std::size_t>(c)] = e;
    }
  }
  for (int c = 0; c < g.m(); ++c) {
    if (reach[static_cast<std::size_t>(c)] == group.order()) {
      throw std::invalid_argument(
          "group " + group.name() + " is not transitive on colours: colour " +
          std::to_string(colour + 1) + " is unreachable from colour " +
          std::to_string(c + 1));
    }
  }

  SwitchingSequence seq;
  for (int u = 0; u < g.n(); ++u) {
    if (u == v) continue;
    seq.steps.push_back(
        {u, group.element(reach[static_cast<std::size_t>(g.colour(u, v))])});
  }
  return {apply_sequence(g, seq), std::move(seq)};
}

}  // namespace gswitch
