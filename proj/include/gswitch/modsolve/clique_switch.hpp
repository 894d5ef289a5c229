#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gswitch/core/colouring.hpp"
#include "gswitch/core/containment.hpp"
#include "gswitch/groups/colour_group.hpp"
#include "gswitch/kernels/first_hit.hpp"
#include "gswitch/modsolve/congruence.hpp"
#include "gswitch/ramsey/target.hpp"

namespace gswitch {

/// Exponents k_u (u in S, in the order given) with
/// c(uv) + k_u + k_v == target (mod m) for every pair in S, or nullopt.
/// One congruence per edge inside S, handed to solve_mod.
std::optional<std::vector<int>> clique_switch_cyclic(const EdgeColouring& g,
                                                     std::span<const int> s,
                                                     int target, int m);

/// Group element indices (one per vertex of S) whose switches make S
/// monochromatic in `target`, or nullopt. Requires an abelian group;
/// standard cyclic groups take the congruence route, anything else an
/// exhaustive assignment search pruned edge by edge.
std::optional<std::vector<std::size_t>> clique_switch_abelian(
    const EdgeColouring& g, std::span<const int> s, int target,
    const ColourGroup& group);

/// Element indices (one per vertex of S) switching g[S] onto `pattern`
/// (a colouring on |S| vertices), or nullopt. Requires an abelian group.
std::optional<std::vector<std::size_t>> switch_onto_pattern(
    const EdgeColouring& g, std::span<const int> s,
    const EdgeColouring& pattern, const ColourGroup& group);

/// Enumerates (colour, subset) candidates in a fixed order: colours by
/// index, then a_i-subsets of the vertices lexicographically. Candidate
/// subsets are precomputed once per (n, target) so that sweeps over many
/// colourings reuse them.
class ContainmentScanner {
 public:
  /// Throws std::invalid_argument for a non-abelian group or a target whose
  /// length differs from the group degree.
  ContainmentScanner(int n, const ColourGroup& group, RamseyTarget target);

  std::uint64_t candidates() const { return total_; }
  int n() const { return n_; }
  const RamseyTarget& target() const { return target_; }
  const ColourGroup& group() const { return *group_; }

  /// Per-thread solver state.
  class Worker {
   public:
    explicit Worker(const ContainmentScanner& scanner);
    /// True when candidate i is switchable on g; the assignment is kept.
    bool solve(const EdgeColouring& g, std::uint64_t i);
    const std::vector<std::size_t>& assignment() const { return assignment_; }

   private:
    bool solve_cyclic(const EdgeColouring& g, const int* subset, int size,
                      int colour);
    bool solve_search(const EdgeColouring& g, const int* subset, int size,
                      int colour, int depth);

    const ContainmentScanner* scanner_;
    CongruenceSolver solver_;
    std::vector<int> rows_;
    std::vector<int> exponents_;
    std::vector<std::size_t> assignment_;
  };

  /// Colour and vertex set of candidate i.
  int colour_of(std::uint64_t i) const;
  std::vector<int> subset_of(std::uint64_t i) const;

  ContainmentResult scan_serial(const EdgeColouring& g) const;
  ContainmentResult scan_parallel(const EdgeColouring& g,
                                  kernels::Parallelism par = {}) const;

 private:
  friend class Worker;

  const int* subset_ptr(std::uint64_t i, int* colour, int* size) const;
  ContainmentResult finish(const EdgeColouring& g,
                           std::optional<std::uint64_t> hit) const;

  int n_;
  const ColourGroup* group_;
  RamseyTarget target_;
  std::uint64_t total_ = 0;
  std::vector<std::uint64_t> offsets_;  // per colour, prefix counts
  // subsets_[size] is a flat list of size-subsets in lexicographic order.
  std::vector<std::vector<int>> subsets_;
};

/// Scans every colour i and every a_i-subset S, returning the first
/// (S, i, assignment) that switches S to K_{a_i}^{(i)}. Absence is exact:
/// switches outside S never touch edges inside S, and for abelian groups one
/// net switch per vertex covers every switching sequence.
ContainmentResult decide_containment_abelian(const EdgeColouring& g,
                                             const ColourGroup& group,
                                             const RamseyTarget& target,
                                             kernels::Parallelism par = {});

}  // namespace gswitch
