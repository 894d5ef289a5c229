#pragma once

#include <optional>
#include <vector>

#include "gswitch/core/containment.hpp"
#include "gswitch/core/homogenise.hpp"
#include "gswitch/groups/colour_group.hpp"
#include "gswitch/kernels/first_hit.hpp"
#include "gswitch/search/orbit.hpp"

namespace gswitch {

struct SelfIsomorphism {
  ContainmentStatus status = ContainmentStatus::absent;
  /// Set when found: H in [G], H != G, the switches producing it, and
  /// bijection[u] = f(u) with c_H(uv) == c_G(f(u) f(v)).
  std::optional<EdgeColouring> h;
  SwitchingSequence sequence;
  std::vector<int> bijection;
  std::size_t orbit_members = 0;
};

/// Largest n accepted by find_switch_isomorphic.
inline constexpr int kMaxSelfIsoVertices = 8;

/// Scans [G] in breadth-first order and, for each member other than G, all
/// n! vertex bijections. Status unknown when the orbit outgrows the budget
/// without a hit. Throws std::invalid_argument for n > 8.
SelfIsomorphism find_switch_isomorphic(const EdgeColouring& g,
                                       const ColourGroup& group,
                                       std::size_t budget = kDefaultOrbitBudget,
                                       kernels::Parallelism par = {});

/// Decides whether some H in [G] puts v inside a monochromatic K_size.
/// For a regular group: homogenise at v in colour 0 and look for a
/// monochromatic K_{size-1} in what remains. For other transitive groups a
/// single homogenisation can miss the clique (switch order matters), so
/// each vertex set S containing v is decided from the orbit of G[S].
/// Needs a transitive group; throws BudgetExceeded once more than `budget`
/// subgraph orbit members have been examined.
bool clique_through_vertex(const EdgeColouring& g, const ColourGroup& group,
                           int v, int size,
                           std::uint64_t budget = std::uint64_t{1} << 20);

/// Same question answered by walking the orbit.
ContainmentStatus clique_through_vertex_by_orbit(
    const EdgeColouring& g, const ColourGroup& group, int v, int size,
    std::size_t budget = kDefaultOrbitBudget);

}  // namespace gswitch
