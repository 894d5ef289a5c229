#pragma once

#include <cstdint>
#include <optional>

#include "gswitch/core/switching.hpp"

namespace gswitch {

enum class ContainmentStatus {
  found,    // some member of [G] contains a target clique; witness set
  absent,   // exhaustive: no member of [G] does
  unknown,  // search budget ran out first
};

struct ContainmentStats {
  /// (colour, subset) candidates examined in scan order, up to and
  /// including the witness. Independent of thread count.
  std::uint64_t candidates = 0;
  /// Orbit members visited by the breadth-first search path.
  std::uint64_t orbit_members = 0;
};

struct ContainmentResult {
  ContainmentStatus status = ContainmentStatus::absent;
  std::optional<CliqueWitness> witness;
  ContainmentStats stats;

  bool found() const { return status == ContainmentStatus::found; }
  bool absent() const { return status == ContainmentStatus::absent; }
};

}  // namespace gswitch
