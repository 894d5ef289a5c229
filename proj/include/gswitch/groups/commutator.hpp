#pragma once

#include <utility>
#include <vector>

#include "gswitch/core/switching.hpp"
#include "gswitch/groups/colour_group.hpp"

namespace gswitch {

/// A product of basic commutators [a, b] = b^-1 a^-1 b a, evaluated left to
/// right: factors (a1,b1),(a2,b2),... stand for [a1,b1] * [a2,b2] * ...
struct CommutatorWord {
  std::vector<std::pair<Permutation, Permutation>> factors;

  Permutation evaluate(int degree) const;
};

/// b^-1 a^-1 b a.
Permutation commutator(const Permutation& a, const Permutation& b);

struct CommutatorSubgroup {
  /// Generated by the distinct non-trivial basic commutators, enumerated
  /// breadth-first, so each element's word is a shortest product of them.
  ColourGroup group;
  /// words[i] evaluates to group.element(i).
  std::vector<CommutatorWord> words;
};

CommutatorSubgroup commutator_subgroup(const ColourGroup& g);

struct QuotientAction {
  /// Orbits of [G,G] on colours, in colour_orbits order.
  std::vector<std::vector<int>> orbits;
  /// Image of G permuting those orbits; degree == orbits.size().
  ColourGroup group;
};

QuotientAction quotient_action(const ColourGroup& g);
QuotientAction quotient_action(const ColourGroup& g,
                               const CommutatorSubgroup& commutators);

/// Switching sequence that recolours edge uv from `from_colour` to
/// `to_colour` and leaves every other edge alone. Throws
/// std::invalid_argument when the two colours lie in different
/// [G,G]-orbits; the message lists the orbit partition.
SwitchingSequence single_edge_sequence(const ColourGroup& g, int u, int v,
                                       int from_colour, int to_colour);
SwitchingSequence single_edge_sequence(const CommutatorSubgroup& commutators,
                                       int u, int v, int from_colour,
                                       int to_colour);

}  // namespace gswitch
