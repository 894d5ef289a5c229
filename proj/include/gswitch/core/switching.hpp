#pragma once

#include <optional>
#include <vector>

#include "gswitch/core/colouring.hpp"
#include "gswitch/core/permutation.hpp"

namespace gswitch {

struct SwitchStep {
  int vertex;
  Permutation perm;

  friend bool operator==(const SwitchStep&, const SwitchStep&) = default;
};

/// Switches applied left to right.
struct SwitchingSequence {
  std::vector<SwitchStep> steps;

  bool empty() const { return steps.empty(); }
  std::size_t size() const { return steps.size(); }

  friend bool operator==(const SwitchingSequence&,
                         const SwitchingSequence&) = default;
};

/// Recolours every edge uv incident with v from c to p(c).
/// Throws std::invalid_argument on an out-of-range vertex or a degree
/// mismatch between p and the colour count.
EdgeColouring switch_at(const EdgeColouring& g, int v, const Permutation& p);

/// Left-to-right fold of switch_at. Every step is validated before any is
/// applied.
EdgeColouring apply_sequence(const EdgeColouring& g,
                             const SwitchingSequence& s);

/// A vertex set that is monochromatic in `colour` once `sequence` has been
/// applied to the host colouring.
struct CliqueWitness {
  std::vector<int> vertices;
  int colour = 0;
  SwitchingSequence sequence;
};

/// Lexicographically first `size`-set whose internal edges all carry
/// `colour`, or nullopt. Sizes above n simply yield nullopt.
std::optional<std::vector<int>> find_mono_clique(const EdgeColouring& g,
                                                 int colour, int size);

/// Checks a witness against its host colouring.
bool witness_holds(const EdgeColouring& g, const CliqueWitness& w);

/// Adds a new last vertex joined to every existing vertex with `colour`.
EdgeColouring apex(const EdgeColouring& g, int colour);

}  // namespace gswitch
