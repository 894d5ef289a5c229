#include "gswitch/search/orbit.hpp"

#include <algorithm>
#include <numeric>

#include "gswitch/modsolve/clique_switch.hpp"

namespace gswitch {

namespace {

// Frontier members expanded per parallel round; bounds the successor
// buffer independently of layer size.
constexpr std::size_t kChunk = 4096;

void check_shape(const EdgeColouring& g, const ColourGroup& group) {
  if (group.degree() != g.m()) {
    throw std::invalid_argument("group " + group.name() + " acts on " +
                                std::to_string(group.degree()) +
                                " colours but the colouring has m=" +
                                std::to_string(g.m()));
  }
}

std::vector<Permutation> moving_generators(const ColourGroup& group) {
  std::vector<Permutation> gens;
  for (const auto& p : group.generators()) {
    if (!p.is_identity() && std::find(gens.begin(), gens.end(), p) == gens.end()) {
      gens.push_back(p);
    }
  }
  return gens;
}

}  // namespace

std::optional<std::size_t> SwitchOrbit::index_of(const EdgeColouring& h) const {
  auto it = index_.find(h.key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SwitchingSequence SwitchOrbit::path_to(std::size_t i) const {
  SwitchingSequence s;
  while (i != 0) {
    s.steps.push_back(step_[i]);
    i = parent_[i];
  }
  std::reverse(s.steps.begin(), s.steps.end());
  return s;
}

OrbitBuilder::OrbitBuilder(const EdgeColouring& g, const ColourGroup& group,
                           std::size_t budget, kernels::Parallelism par)
    : group_(&group), budget_(std::max<std::size_t>(budget, 1)), par_(par) {
  check_shape(g, group);
  orbit_.members_.push_back(g);
  orbit_.parent_.push_back(0);
  orbit_.step_.push_back({0, Permutation::identity(g.m())});
  orbit_.index_.emplace(g.key(), 0);
}

bool OrbitBuilder::expand_layer() {
  if (done_) return false;
  const auto gens = moving_generators(*group_);
  const std::size_t begin = layer_begin_;
  const std::size_t end = orbit_.members_.size();
  const int n = orbit_.base().n();
  const std::size_t fan = static_cast<std::size_t>(n) * gens.size();
  layer_begin_ = end;

  std::vector<EdgeColouring> succ;
  for (std::size_t chunk = begin; chunk < end; chunk += kChunk) {
    const std::size_t stop = std::min(end, chunk + kChunk);
    const auto count = static_cast<std::int64_t>(stop - chunk);
    succ.assign((stop - chunk) * fan, orbit_.base());
#pragma omp parallel for schedule(static) num_threads(par_.threads()) \
    if (!par_.serial() && count > 64)
    for (std::int64_t f = 0; f < count; ++f) {
      const auto& x = orbit_.members_[chunk + static_cast<std::size_t>(f)];
      std::size_t out = static_cast<std::size_t>(f) * fan;
      for (int v = 0; v < n; ++v) {
        for (const auto& p : gens) succ[out++] = switch_at(x, v, p);
      }
    }
    for (std::size_t k = 0; k < succ.size(); ++k) {
      auto [it, inserted] =
          orbit_.index_.try_emplace(succ[k].key(), orbit_.members_.size());
      if (!inserted) continue;
      if (orbit_.members_.size() >= budget_) {
        orbit_.index_.erase(it);
        orbit_.exhaustive_ = false;
        done_ = true;
        return false;
      }
      std::size_t local = k % fan;
      orbit_.parent_.push_back(chunk + k / fan);
      orbit_.step_.push_back({static_cast<int>(local / gens.size()),
                              gens[local % gens.size()]});
      orbit_.members_.push_back(std::move(succ[k]));
    }
  }
  if (orbit_.members_.size() == end) {
    done_ = true;
    return false;
  }
  return true;
}

SwitchOrbit orbit_enumerate(const EdgeColouring& g, const ColourGroup& group,
                            std::size_t budget, kernels::Parallelism par) {
  OrbitBuilder builder(g, group, budget, par);
  while (builder.expand_layer()) {
  }
  return builder.take();
}

// ---------------------------------------------------------------------------

namespace {

struct Side {
  std::vector<EdgeColouring> members;
  std::vector<std::size_t> parent;
  std::vector<SwitchStep> step;
  std::unordered_map<std::string, std::size_t> index;
  std::size_t layer_begin = 0;

  explicit Side(const EdgeColouring& g) {
    members.push_back(g);
    parent.push_back(0);
    step.push_back({0, Permutation::identity(g.m())});
    index.emplace(g.key(), 0);
  }

  SwitchingSequence path_to(std::size_t i) const {
    SwitchingSequence s;
    while (i != 0) {
      s.steps.push_back(step[i]);
      i = parent[i];
    }
    std::reverse(s.steps.begin(), s.steps.end());
    return s;
  }
};

// Expands one layer of `side`; returns the index of the first new member
// also present in `other`, if any. Sets `grew` to whether anything was added.
std::optional<std::pair<std::size_t, std::size_t>> grow(
    Side& side, const Side& other, const std::vector<Permutation>& gens,
    std::size_t& total, std::size_t budget, bool& grew) {
  std::size_t begin = side.layer_begin, end = side.members.size();
  side.layer_begin = end;
  grew = false;
  for (std::size_t f = begin; f < end; ++f) {
    for (int v = 0; v < side.members[f].n(); ++v) {
      for (const auto& p : gens) {
        EdgeColouring y = switch_at(side.members[f], v, p);
        std::string key = y.key();
        if (side.index.count(key)) continue;
        if (total >= budget) {
          throw BudgetExceeded("equivalence search exceeded " +
                               std::to_string(budget) + " colourings");
        }
        ++total;
        grew = true;
        std::size_t idx = side.members.size();
        side.index.emplace(key, idx);
        side.members.push_back(std::move(y));
        side.parent.push_back(f);
        side.step.push_back({v, p});
        if (auto it = other.index.find(key); it != other.index.end()) {
          return std::pair{idx, it->second};
        }
      }
    }
  }
  return std::nullopt;
}

SwitchingSequence join(const Side& from_g, std::size_t gi, const Side& from_h,
                       std::size_t hi) {
  SwitchingSequence s = from_g.path_to(gi);
  // Walk the h-side chain back to h, undoing each step.
  while (hi != 0) {
    const auto& st = from_h.step[hi];
    s.steps.push_back({st.vertex, st.perm.inverse()});
    hi = from_h.parent[hi];
  }
  return s;
}

}  // namespace

std::optional<SwitchingSequence> switching_between(const EdgeColouring& g,
                                                   const EdgeColouring& h,
                                                   const ColourGroup& group,
                                                   std::size_t budget) {
  if (g.n() != h.n() || g.m() != h.m()) {
    throw std::invalid_argument("colourings differ in shape: n=" +
                                std::to_string(g.n()) + ",m=" +
                                std::to_string(g.m()) + " vs n=" +
                                std::to_string(h.n()) + ",m=" +
                                std::to_string(h.m()));
  }
  check_shape(g, group);
  if (g == h) return SwitchingSequence{};

  if (action_properties(group).abelian) {
    std::vector<int> all(static_cast<std::size_t>(g.n()));
    std::iota(all.begin(), all.end(), 0);
    auto x = switch_onto_pattern(g, all, h, group);
    if (!x) return std::nullopt;
    SwitchingSequence s;
    for (int v = 0; v < g.n(); ++v) {
      std::size_t e = (*x)[static_cast<std::size_t>(v)];
      if (e != 0) s.steps.push_back({v, group.element(e)});
    }
    return s;
  }

  const auto gens = moving_generators(group);
  Side a(g), b(h);
  std::size_t total = 2;
  bool grew_a = true, grew_b = true;
  while (grew_a && grew_b) {
    bool expand_a = a.members.size() - a.layer_begin <=
                    b.members.size() - b.layer_begin;
    if (expand_a) {
      if (auto hit = grow(a, b, gens, total, budget, grew_a)) {
        return join(a, hit->first, b, hit->second);
      }
    } else {
      if (auto hit = grow(b, a, gens, total, budget, grew_b)) {
        return join(a, hit->second, b, hit->first);
      }
    }
  }
  return std::nullopt;
}

bool switch_equivalent(const EdgeColouring& g, const EdgeColouring& h,
                       const ColourGroup& group, std::size_t budget) {
  return switching_between(g, h, group, budget).has_value();
}

// ---------------------------------------------------------------------------

ContainmentResult decide_containment_generic(const EdgeColouring& g,
                                             const ColourGroup& group,
                                             const RamseyTarget& target,
                                             std::size_t budget,
                                             kernels::Parallelism par) {
  check_shape(g, group);
  if (target.colours() != g.m()) {
    throw std::invalid_argument("target has " + std::to_string(target.colours()) +
                                " entries but m=" + std::to_string(g.m()));
  }
  OrbitBuilder builder(g, group, budget, par);
  std::size_t checked = 0;
  ContainmentResult result;
  while (true) {
    const auto& members = builder.orbit().members();
    const std::size_t begin = checked;
    const std::size_t end = members.size();
    auto hit = kernels::first_hit_parallel(
        end - begin,
        [&] {
          return [&](std::uint64_t i) {
            const auto& x = members[begin + i];
            for (int c = 0; c < target.colours(); ++c) {
              if (find_mono_clique(x, c, target[c])) return true;
            }
            return false;
          };
        },
        par, 16);
    if (hit) {
      std::size_t idx = begin + *hit;
      const auto& x = members[idx];
      for (int c = 0; c < target.colours(); ++c) {
        if (auto s = find_mono_clique(x, c, target[c])) {
          result.status = ContainmentStatus::found;
          result.witness =
              CliqueWitness{*s, c, builder.orbit().path_to(idx)};
          result.stats.orbit_members = idx + 1;
          return result;
        }
      }
    }
    checked = end;
    if (!builder.expand_layer()) break;
  }
  // The last failed expansion may still have added members.
  const auto& members = builder.orbit().members();
  for (std::size_t idx = checked; idx < members.size(); ++idx) {
    for (int c = 0; c < target.colours(); ++c) {
      if (auto s = find_mono_clique(members[idx], c, target[c])) {
        result.status = ContainmentStatus::found;
        result.witness = CliqueWitness{*s, c, builder.orbit().path_to(idx)};
        result.stats.orbit_members = idx + 1;
        return result;
      }
    }
  }
  result.status = builder.orbit().exhaustive() ? ContainmentStatus::absent
                                               : ContainmentStatus::unknown;
  result.stats.orbit_members = members.size();
  return result;
}

ContainmentResult decide_containment(const EdgeColouring& g,
                                     const ColourGroup& group,
                                     const RamseyTarget& target,
                                     std::size_t budget,
                                     kernels::Parallelism par) {
  check_shape(g, group);
  if (action_properties(group).abelian) {
    return decide_containment_abelian(g, group, target, par);
  }
  return decide_containment_generic(g, group, target, budget, par);
}

}  // namespace gswitch
