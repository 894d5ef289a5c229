#include "gswitch/groups/colour_group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gswitch {

ColourGroup ColourGroup::generate(int degree,
                                  std::vector<Permutation> generators,
                                  std::string name) {
  if (degree < 1 || degree > kMaxDegree) {
    throw std::invalid_argument("group degree out of range: " +
                                std::to_string(degree));
  }
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw std::invalid_argument("generator " + g.to_cycle_string() +
                                  " has degree " + std::to_string(g.degree()) +
                                  ", expected " + std::to_string(degree));
    }
  }

  ColourGroup grp;
  grp.degree_ = degree;
  grp.name_ = std::move(name);
  grp.generators_ = std::move(generators);

  Permutation id = Permutation::identity(degree);
  grp.elements_.push_back(id);
  grp.parent_.push_back(0);
  grp.via_.push_back(0);
  grp.index_.emplace(id.key(), 0);
  for (std::size_t head = 0; head < grp.elements_.size(); ++head) {
    for (std::size_t gi = 0; gi < grp.generators_.size(); ++gi) {
      Permutation next = grp.elements_[head] * grp.generators_[gi];
      auto [it, inserted] = grp.index_.emplace(next.key(), grp.elements_.size());
      if (!inserted) continue;
      grp.elements_.push_back(next);
      grp.parent_.push_back(head);
      grp.via_.push_back(gi);
    }
  }

  std::size_t order = grp.elements_.size();
  auto m = static_cast<std::size_t>(degree);
  grp.table_.resize(order * m);
  grp.inverse_.resize(order);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t c = 0; c < m; ++c) {
      grp.table_[i * m + c] =
          static_cast<Colour>(grp.elements_[i](static_cast<int>(c)));
    }
    grp.inverse_[i] = grp.index_.at(grp.elements_[i].inverse().key());
  }

  grp.standard_cyclic_ = order == m;
  for (std::size_t k = 0; grp.standard_cyclic_ && k < order; ++k) {
    grp.standard_cyclic_ =
        grp.elements_[k] == Permutation::rotation(degree, static_cast<int>(k));
  }
  return grp;
}

ColourGroup ColourGroup::cyclic(int m) {
  return generate(m, {Permutation::rotation(m, 1)}, "C" + std::to_string(m));
}

ColourGroup ColourGroup::symmetric(int m) {
  std::vector<Permutation> gens;
  if (m >= 2) gens.push_back(Permutation::from_cycles(m, {{0, 1}}));
  if (m >= 3) gens.push_back(Permutation::rotation(m, 1));
  return generate(m, std::move(gens), "S" + std::to_string(m));
}

ColourGroup ColourGroup::alternating(int m) {
  std::vector<Permutation> gens;
  for (int i = 2; i < m; ++i) {
    gens.push_back(Permutation::from_cycles(m, {{0, 1, i}}));
  }
  return generate(m, std::move(gens), "A" + std::to_string(m));
}

ColourGroup ColourGroup::dihedral(int m) {
  if (m < 3) {
    throw std::invalid_argument("dihedral group needs degree >= 3");
  }
  std::vector<int> reflect(static_cast<std::size_t>(m));
  for (int c = 0; c < m; ++c) reflect[static_cast<std::size_t>(c)] = (m - c) % m;
  return generate(m,
                  {Permutation::rotation(m, 1),
                   Permutation(std::span<const int>(reflect))},
                  "D" + std::to_string(m));
}

ColourGroup ColourGroup::trivial(int m) {
  return generate(m, {}, "trivial" + std::to_string(m));
}

std::optional<std::size_t> ColourGroup::index_of(const Permutation& p) const {
  if (p.degree() != degree_) return std::nullopt;
  auto it = index_.find(p.key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string ColourGroup::key() const {
  std::vector<std::uint64_t> keys;
  keys.reserve(elements_.size());
  for (const auto& e : elements_) keys.push_back(e.key());
  std::sort(keys.begin(), keys.end());
  std::string k = std::to_string(degree_) + ":";
  for (auto x : keys) k += std::to_string(x) + ",";
  return k;
}

std::vector<std::vector<int>> colour_orbits(const ColourGroup& g) {
  int m = g.degree();
  std::vector<int> parent(static_cast<std::size_t>(m));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    }
    return x;
  };
  for (const auto& gen : g.generators()) {
    for (int c = 0; c < m; ++c) {
      int a = find(c), b = find(gen(c));
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }
  std::vector<std::vector<int>> orbits;
  std::vector<int> slot(static_cast<std::size_t>(m), -1);
  for (int c = 0; c < m; ++c) {
    int r = find(c);
    if (slot[static_cast<std::size_t>(r)] < 0) {
      slot[static_cast<std::size_t>(r)] = static_cast<int>(orbits.size());
      orbits.emplace_back();
    }
    orbits[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])].push_back(c);
  }
  return orbits;
}

ActionProperties action_properties(const ColourGroup& g) {
  ActionProperties p{};
  p.transitive = colour_orbits(g).size() == 1;
  p.semi_regular = true;
  for (std::size_t i = 1; i < g.order(); ++i) {
    if (g.element(i).has_fixed_point()) {
      p.semi_regular = false;
      break;
    }
  }
  // Abelian iff the generators pairwise commute.
  p.abelian = true;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size() && p.abelian; ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!(gens[i] * gens[j] == gens[j] * gens[i])) {
        p.abelian = false;
        break;
      }
    }
  }
  return p;
}

ColourGroup restrict_to_orbit(const ColourGroup& g,
                              std::span<const int> orbit) {
  std::vector<int> sorted(orbit.begin(), orbit.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> local(static_cast<std::size_t>(g.degree()), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    local[static_cast<std::size_t>(sorted[i])] = static_cast<int>(i);
  }
  std::vector<Permutation> gens;
  for (const auto& gen : g.generators()) {
    std::vector<int> image(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      int to = local[static_cast<std::size_t>(gen(sorted[i]))];
      if (to < 0) {
        throw std::invalid_argument("point set is not a union of orbits");
      }
      image[i] = to;
    }
    Permutation p{std::span<const int>(image)};
    if (!p.is_identity()) gens.push_back(p);
  }
  std::string label = g.name().empty() ? "group" : g.name();
  label += "|{";
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    label += (i ? "," : "") + std::to_string(sorted[i] + 1);
  }
  label += "}";
  return ColourGroup::generate(static_cast<int>(sorted.size()), std::move(gens),
                               std::move(label));
}

}  // namespace gswitch
