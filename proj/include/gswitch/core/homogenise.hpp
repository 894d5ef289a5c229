#pragma once

#include "gswitch/core/switching.hpp"
#include "gswitch/groups/colour_group.hpp"

namespace gswitch {

struct Homogenised {
  EdgeColouring graph;
  /// One switch per vertex u != v, in vertex order; never a switch at v.
  SwitchingSequence sequence;
};

/// Switches every vertex other than `v` so that all edges at `v` carry
/// `colour`. For each u the first group element (enumeration order) taking
/// c(uv) to `colour` is used.
///
/// Throws std::invalid_argument if the group is not transitive on colours;
/// the message names a colour that cannot be reached.
Homogenised homogenise(const EdgeColouring& g, const ColourGroup& group, int v,
                       int colour);

}  // namespace gswitch
