#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gswitch/core/colouring.hpp"
#include "gswitch/core/containment.hpp"
#include "gswitch/groups/colour_group.hpp"
#include "gswitch/kernels/first_hit.hpp"
#include "gswitch/ramsey/target.hpp"
#include "gswitch/search/orbit.hpp"

namespace gswitch {

enum class Verdict { verified, refuted, unknown };

const char* to_string(Verdict v);

/// A colouring on n vertices none of whose switches contains K_{a_i} in
/// colour i, so R_Γ(target) >= n + 1.
struct LowerWitness {
  std::string group_name;
  std::string group_key;  // ColourGroup::key(), for exact group matching
  RamseyTarget target;
  int n = 0;
  std::string source;  // where the colouring came from (file, construction)

  int bound() const { return n + 1; }
};

struct LowerCheck {
  Verdict verdict = Verdict::unknown;
  std::optional<LowerWitness> certificate;  // when verified
  std::optional<CliqueWitness> clique;      // when refuted
  ContainmentStats stats;
  std::string method;  // "subset-scan" or "orbit-search"
  /// Set when the colouring is homogenised at its last vertex and the group
  /// is transitive: true when no switch puts that vertex in a monochromatic
  /// clique of the smallest target size (checked by homogenising).
  std::optional<bool> apex_clique_free;
};

/// Decides containment for g (subset scan for abelian groups, orbit search
/// otherwise) and certifies R_Γ(target) >= n+1 when nothing is found.
LowerCheck verify_lower_witness(const EdgeColouring& g, const ColourGroup& group,
                                const RamseyTarget& target,
                                std::string source = {},
                                std::size_t budget = kDefaultOrbitBudget,
                                kernels::Parallelism par = {});

struct ExhaustiveCheck {
  Verdict verdict = Verdict::unknown;
  std::uint64_t items = 0;    // colourings in the sweep
  std::uint64_t checked = 0;  // sweep prefix examined
  /// First colouring shown to avoid every target (refuted) or left
  /// undecided (unknown), in sweep order.
  std::optional<EdgeColouring> counterexample;
  std::uint64_t counterexample_index = 0;
  std::string note;
};

/// Default cap on the number of swept colourings.
inline constexpr std::uint64_t kDefaultSweepBudget = std::uint64_t{1} << 32;

/// True (verified) iff every homogenised representative on n vertices
/// (apex colour 0) can be switched to contain a target clique, which shows
/// R_Γ(target) <= n for transitive Γ.
ExhaustiveCheck verify_value_exhaustive(int n, const ColourGroup& group,
                                        const RamseyTarget& target,
                                        kernels::Parallelism par = {},
                                        std::uint64_t budget = kDefaultSweepBudget,
                                        std::size_t orbit_budget = kDefaultOrbitBudget);

/// Serial reference for verify_value_exhaustive (abelian groups only).
ExhaustiveCheck verify_value_exhaustive_serial(int n, const ColourGroup& group,
                                               const RamseyTarget& target,
                                               std::uint64_t budget = kDefaultSweepBudget);

/// Classical check without switching: every m-colouring of K_n contains a
/// monochromatic K_{a_i} in colour i (m = target length), i.e. R(target) <= n.
ExhaustiveCheck verify_classical_exhaustive(int n, const RamseyTarget& target,
                                            kernels::Parallelism par = {},
                                            std::uint64_t budget = kDefaultSweepBudget);

/// True when g contains no monochromatic K_{a_i} in colour i.
bool avoids_target(const EdgeColouring& g, const RamseyTarget& target);

}  // namespace gswitch
