#include "gswitch/groups/commutator.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace gswitch {

namespace {

// All-pairs enumeration up to this group order; beyond it the commutator
// set is built as the conjugation closure of generator commutators.
constexpr std::size_t kAllPairsOrder = 1024;

std::string orbit_listing(const std::vector<std::vector<int>>& orbits) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    if (i) out << ", ";
    out << '{';
    for (std::size_t j = 0; j < orbits[i].size(); ++j) {
      if (j) out << ',';
      out << orbits[i][j] + 1;
    }
    out << '}';
  }
  out << '}';
  return out.str();
}

}  // namespace

Permutation commutator(const Permutation& a, const Permutation& b) {
  return b.inverse() * a.inverse() * b * a;
}

Permutation CommutatorWord::evaluate(int degree) const {
  Permutation p = Permutation::identity(degree);
  for (const auto& [a, b] : factors) p = p * commutator(a, b);
  return p;
}

CommutatorSubgroup commutator_subgroup(const ColourGroup& g) {
  std::vector<std::pair<Permutation, Permutation>> basics;
  std::vector<Permutation> values;
  std::unordered_set<std::uint64_t> seen;
  auto add = [&](const Permutation& a, const Permutation& b) {
    Permutation c = commutator(a, b);
    if (c.is_identity() || !seen.insert(c.key()).second) return false;
    basics.emplace_back(a, b);
    values.push_back(c);
    return true;
  };

  if (g.order() <= kAllPairsOrder) {
    for (const auto& a : g.elements()) {
      for (const auto& b : g.elements()) add(a, b);
    }
  } else {
    const auto& gens = g.generators();
    for (const auto& a : gens) {
      for (const auto& b : gens) add(a, b);
    }
    // x^-1 [a,b] x == [x^-1 a x, x^-1 b x]; closing under conjugation by the
    // generators yields the normal closure, which is [G,G].
    for (std::size_t head = 0; head < basics.size(); ++head) {
      for (const auto& x : gens) {
        Permutation xi = x.inverse();
        auto [a, b] = basics[head];
        add(xi * a * x, xi * b * x);
      }
    }
  }

  CommutatorSubgroup out{
      ColourGroup::generate(g.degree(), values,
                            "[" + (g.name().empty() ? std::string("G") : g.name()) +
                                "," +
                                (g.name().empty() ? std::string("G") : g.name()) +
                                "]"),
      {}};
  out.words.resize(out.group.order());
  for (std::size_t i = 1; i < out.group.order(); ++i) {
    out.words[i] = out.words[out.group.parent(i)];
    out.words[i].factors.push_back(basics[out.group.via(i)]);
  }
  return out;
}

QuotientAction quotient_action(const ColourGroup& g) {
  return quotient_action(g, commutator_subgroup(g));
}

QuotientAction quotient_action(const ColourGroup& g,
                               const CommutatorSubgroup& commutators) {
  QuotientAction q{colour_orbits(commutators.group), ColourGroup::trivial(1)};
  std::vector<int> orbit_of(static_cast<std::size_t>(g.degree()));
  for (std::size_t i = 0; i < q.orbits.size(); ++i) {
    for (int c : q.orbits[i]) orbit_of[static_cast<std::size_t>(c)] = static_cast<int>(i);
  }
  int t = static_cast<int>(q.orbits.size());
  std::vector<Permutation> gens;
  for (const auto& gen : g.generators()) {
    std::vector<int> image(q.orbits.size());
    for (std::size_t i = 0; i < q.orbits.size(); ++i) {
      image[i] = orbit_of[static_cast<std::size_t>(gen(q.orbits[i].front()))];
    }
    Permutation p{std::span<const int>(image)};
    if (!p.is_identity()) gens.push_back(p);
  }
  std::string base = g.name().empty() ? std::string("G") : g.name();
  q.group = ColourGroup::generate(t, std::move(gens),
                                  base + "/[" + base + "," + base + "]");
  return q;
}

SwitchingSequence single_edge_sequence(const ColourGroup& g, int u, int v,
                                       int from_colour, int to_colour) {
  return single_edge_sequence(commutator_subgroup(g), u, v, from_colour,
                              to_colour);
}

SwitchingSequence single_edge_sequence(const CommutatorSubgroup& commutators,
                                       int u, int v, int from_colour,
                                       int to_colour) {
  const ColourGroup& h = commutators.group;
  int m = h.degree();
  if (u == v || u < 0 || v < 0) {
    throw std::invalid_argument("single-edge sequence needs two distinct vertices");
  }
  if (from_colour < 0 || from_colour >= m || to_colour < 0 || to_colour >= m) {
    throw std::invalid_argument("colour out of range for degree " +
                                std::to_string(m));
  }
  for (std::size_t i = 0; i < h.order(); ++i) {
    if (h.act(i, from_colour) != to_colour) continue;
    SwitchingSequence seq;
    const auto& factors = commutators.words[i].factors;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
      const auto& [a, b] = *it;
      seq.steps.push_back({u, a});
      seq.steps.push_back({v, b});
      seq.steps.push_back({u, a.inverse()});
      seq.steps.push_back({v, b.inverse()});
    }
    return seq;
  }
  throw std::invalid_argument(
      "colours " + std::to_string(from_colour + 1) + " and " +
      std::to_string(to_colour + 1) +
      " lie in different orbits of the commutator subgroup; orbits are " +
      orbit_listing(colour_orbits(h)));
}

}  // namespace gswitch
