#include "gswitch/search/probes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "gswitch/core/homogenise.hpp"

namespace gswitch {

namespace {

bool isomorphic_via(const EdgeColouring& h, const EdgeColouring& g,
                    const std::vector<int>& f) {
  for (int u = 0; u < h.n(); ++u) {
    for (int v = u + 1; v < h.n(); ++v) {
      if (h.colour(u, v) !=
          g.colour(f[static_cast<std::size_t>(u)], f[static_cast<std::size_t>(v)])) {
        return false;
      }
    }
  }
  return true;
}

std::optional<std::vector<int>> find_bijection(const EdgeColouring& h,
                                               const EdgeColouring& g) {
  std::vector<int> f(static_cast<std::size_t>(g.n()));
  std::iota(f.begin(), f.end(), 0);
  do {
    if (isomorphic_via(h, g, f)) return f;
  } while (std::next_permutation(f.begin(), f.end()));
  return std::nullopt;
}

// Mono clique of `size` vertices containing v.
bool has_clique_through(const EdgeColouring& x, int v, int size) {
  for (int c = 0; c < x.m(); ++c) {
    std::vector<int> nbrs;
    for (int u = 0; u < x.n(); ++u) {
      if (u != v && x.colour(u, v) == c) nbrs.push_back(u);
    }
    if (static_cast<int>(nbrs.size()) < size - 1) continue;
    if (size == 1) return true;
    if (find_mono_clique(x.induced(nbrs), c, size - 1)) return true;
  }
  return false;
}

bool has_any_clique(const EdgeColouring& x, int size) {
  for (int c = 0; c < x.m(); ++c) {
    if (find_mono_clique(x, c, size)) return true;
  }
  return false;
}

}  // namespace

SelfIsomorphism find_switch_isomorphic(const EdgeColouring& g,
                                       const ColourGroup& group,
                                       std::size_t budget,
                                       kernels::Parallelism par) {
  if (g.n() > kMaxSelfIsoVertices) {
    throw std::invalid_argument("self-isomorphism probe is limited to n <= " +
                                std::to_string(kMaxSelfIsoVertices));
  }
  SwitchOrbit orbit = orbit_enumerate(g, group, budget, par);
  const auto& members = orbit.members();
  auto hit = kernels::first_hit_parallel(
      members.size() - 1,
      [&] {
        return [&](std::uint64_t i) {
          return find_bijection(members[i + 1], g).has_value();
        };
      },
      par, 4);
  SelfIsomorphism result;
  result.orbit_members = members.size();
  if (hit) {
    std::size_t idx = *hit + 1;
    result.status = ContainmentStatus::found;
    result.h = members[idx];
    result.sequence = orbit.path_to(idx);
    result.bijection = *find_bijection(members[idx], g);
  } else {
    result.status = orbit.exhaustive() ? ContainmentStatus::absent
                                       : ContainmentStatus::unknown;
  }
  return result;
}

bool clique_through_vertex(const EdgeColouring& g, const ColourGroup& group,
                           int v, int size, std::uint64_t budget) {
  if (size < 2 || size > g.n()) {
    throw std::invalid_argument("clique size must lie in [2, n]");
  }
  // Throws for a non-transitive group or bad vertex.
  Homogenised h = homogenise(g, group, v, 0);

  // Regular action: the homogenised graph is unique up to a uniform shift
  // of G - v, so a plain clique search there is exact.
  if (action_properties(group).semi_regular) {
    return has_any_clique(h.graph.without_vertex(v), size - 1);
  }

  // Otherwise switch order matters and one homogenisation can miss the
  // clique. Switches outside S never touch G[S], so ask each S containing v
  // whether its own orbit holds a monochromatic colouring.
  std::vector<int> others;
  for (int u = 0; u < g.n(); ++u) {
    if (u != v) others.push_back(u);
  }
  std::unordered_map<std::string, bool> seen;
  std::vector<int> pick(static_cast<std::size_t>(size - 1));
  std::iota(pick.begin(), pick.end(), 0);
  const int k = size - 1;
  const int len = static_cast<int>(others.size());
  std::uint64_t orbit_work = 0;
  while (true) {
    std::vector<int> s{v};
    for (int i : pick) s.push_back(others[static_cast<std::size_t>(i)]);
    EdgeColouring sub = g.induced(s);
    auto [it, fresh] = seen.try_emplace(sub.key(), false);
    if (fresh) {
      SwitchOrbit orbit = orbit_enumerate(sub, group, budget);
      if (!orbit.exhaustive()) {
        throw BudgetExceeded("orbit of a " + std::to_string(size) +
                             "-vertex subgraph exceeded " + std::to_string(budget));
      }
      orbit_work += orbit.size();
      if (orbit_work > budget) {
        throw BudgetExceeded("more than " + std::to_string(budget) +
                             " subgraph orbit members examined");
      }
      for (const auto& x : orbit.members()) {
        if (has_any_clique(x, size)) {
          it->second = true;
          break;
        }
      }
    }
    if (it->second) return true;
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == len - k + i) --i;
    if (i < 0) return false;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

ContainmentStatus clique_through_vertex_by_orbit(const EdgeColouring& g,
                                                 const ColourGroup& group,
                                                 int v, int size,
                                                 std::size_t budget) {
  if (v < 0 || v >= g.n()) throw std::invalid_argument("vertex out of range");
  SwitchOrbit orbit = orbit_enumerate(g, group, budget);
  for (const auto& x : orbit.members()) {
    if (has_clique_through(x, v, size)) return ContainmentStatus::found;
  }
  return orbit.exhaustive() ? ContainmentStatus::absent
                            : ContainmentStatus::unknown;
}

}  // namespace gswitch
