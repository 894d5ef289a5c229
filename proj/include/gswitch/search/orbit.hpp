#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "gswitch/core/colouring.hpp"
#include "gswitch/core/containment.hpp"
#include "gswitch/core/switching.hpp"
#include "gswitch/groups/colour_group.hpp"
#include "gswitch/kernels/first_hit.hpp"
#include "gswitch/ramsey/target.hpp"

namespace gswitch {

/// Default cap on orbit members held in memory.
inline constexpr std::size_t kDefaultOrbitBudget = 10'000'000;

/// Thrown when a search has to give up without a verdict.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Breadth-first closure of a colouring under single switches (v, g) with
/// g a generator. Members are kept in discovery order with parent links, so
/// any member can be reached from the base by an explicit sequence.
class SwitchOrbit {
 public:
  const EdgeColouring& base() const { return members_.front(); }
  const std::vector<EdgeColouring>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  /// False when the budget cut the closure short.
  bool exhaustive() const { return exhaustive_; }

  std::optional<std::size_t> index_of(const EdgeColouring& h) const;
  bool contains(const EdgeColouring& h) const { return index_of(h).has_value(); }

  /// Switches taking the base to member i, in application order.
  SwitchingSequence path_to(std::size_t i) const;

 private:
  friend class OrbitBuilder;

  std::vector<EdgeColouring> members_;
  std::vector<std::size_t> parent_;
  std::vector<SwitchStep> step_;
  std::unordered_map<std::string, std::size_t> index_;
  bool exhaustive_ = true;
};

/// Incremental breadth-first orbit construction. Each layer's successors
/// are computed in parallel and merged serially in frontier order, so the
/// member order does not depend on the thread count.
class OrbitBuilder {
 public:
  OrbitBuilder(const EdgeColouring& g, const ColourGroup& group,
               std::size_t budget, kernels::Parallelism par = {});

  /// Adds the next layer. Returns false once the orbit is complete or the
  /// budget is reached (then the orbit is marked non-exhaustive).
  bool expand_layer();
  /// Members added by the last expand_layer call (or the base initially).
  std::size_t layer_begin() const { return layer_begin_; }

  const SwitchOrbit& orbit() const { return orbit_; }
  SwitchOrbit take() { return std::move(orbit_); }

 private:
  const ColourGroup* group_;
  std::size_t budget_;
  kernels::Parallelism par_;
  SwitchOrbit orbit_;
  std::size_t layer_begin_ = 0;
  bool done_ = false;
};

/// Whole orbit of g, or a partial one flagged non-exhaustive when more than
/// `budget` members would be needed.
SwitchOrbit orbit_enumerate(const EdgeColouring& g, const ColourGroup& group,
                            std::size_t budget = kDefaultOrbitBudget,
                            kernels::Parallelism par = {});

/// A sequence taking g to h, or nullopt when h is not in [g].
/// Abelian groups: one net element per vertex, found by solving edge by
/// edge. Otherwise a bidirectional breadth-first search that throws
/// BudgetExceeded once more than `budget` colourings are held.
std::optional<SwitchingSequence> switching_between(
    const EdgeColouring& g, const EdgeColouring& h, const ColourGroup& group,
    std::size_t budget = kDefaultOrbitBudget);

bool switch_equivalent(const EdgeColouring& g, const EdgeColouring& h,
                       const ColourGroup& group,
                       std::size_t budget = kDefaultOrbitBudget);

/// Walks [G] breadth-first and checks every member for a monochromatic
/// K_{a_i} in colour i. Works for any group; status unknown when the budget
/// runs out before the orbit does.
ContainmentResult decide_containment_generic(
    const EdgeColouring& g, const ColourGroup& group,
    const RamseyTarget& target, std::size_t budget = kDefaultOrbitBudget,
    kernels::Parallelism par = {});

/// Abelian groups go to the subset scan, everything else to the orbit walk.
ContainmentResult decide_containment(const EdgeColouring& g,
                                     const ColourGroup& group,
                                     const RamseyTarget& target,
                                     std::size_t budget = kDefaultOrbitBudget,
                                     kernels::Parallelism par = {});

}  // namespace gswitch
