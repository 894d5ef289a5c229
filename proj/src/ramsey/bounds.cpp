#include "gswitch/ramsey/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "gswitch/groups/commutator.hpp"

namespace gswitch {

namespace {

std::string entry_note(const ClassicalEntry& e) {
  return e.describe() + " [" + e.citation + "]";
}

RamseyTarget restrict_target(const RamseyTarget& t, const std::vector<int>& orbit) {
  std::vector<int> a;
  for (int c : orbit) a.push_back(t[c]);
  return RamseyTarget(std::move(a));
}

int orbit_min(const RamseyTarget& t, const std::vector<int>& orbit) {
  int best = t[orbit.front()];
  for (int c : orbit) best = std::min(best, t[c]);
  return best;
}

bool is_cyclic_group(const ColourGroup& g) {
  return g.is_standard_cyclic() || g.same_elements(ColourGroup::cyclic(g.degree()));
}

bool pointwise_le(const RamseyTarget& a, const RamseyTarget& b) {
  if (a.colours() != b.colours()) return false;
  for (int i = 0; i < a.colours(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

RuleApplication exact_rule(std::string id, std::string statement, int value) {
  RuleApplication r;
  r.rule = std::move(id);
  r.statement = std::move(statement);
  r.side = BoundSide::exact;
  r.value = value;
  return r;
}

}  // namespace

const char* to_string(BoundSide s) {
  switch (s) {
    case BoundSide::lower:
      return "lower";
    case BoundSide::upper:
      return "upper";
    case BoundSide::exact:
      return "exact";
  }
  return "upper";
}

const RuleApplication* BoundCertificate::lower_rule() const {
  for (const auto& r : rules) {
    if (r.side != BoundSide::upper && r.value == lo) return &r;
  }
  return nullptr;
}

const RuleApplication* BoundCertificate::upper_rule() const {
  if (!hi) return nullptr;
  for (const auto& r : rules) {
    if (r.side != BoundSide::lower && r.value == *hi) return &r;
  }
  return nullptr;
}

RamseyTarget cyclic_collapse(const RamseyTarget& t) {
  const int m = t.colours();
  std::vector<int> a = t.a;
  if (m % 2 == 0) {
    int even = t[0], odd = t[1];
    for (int i = 0; i < m; ++i) {
      (i % 2 == 0 ? even : odd) = std::min(i % 2 == 0 ? even : odd, t[i]);
    }
    for (int i = 0; i < m; ++i) a[static_cast<std::size_t>(i)] = i % 2 == 0 ? even : odd;
  } else {
    std::fill(a.begin(), a.end(), t.min());
  }
  return RamseyTarget(std::move(a));
}

BoundEngine::BoundEngine(std::vector<LowerWitness> witnesses)
    : witnesses_(std::move(witnesses)) {}

std::shared_ptr<const BoundCertificate> BoundEngine::derive(
    const ColourGroup& group, const RamseyTarget& target) {
  if (target.colours() != group.degree()) {
    throw std::invalid_argument("target has " + std::to_string(target.colours()) +
                                " entries but the group acts on " +
                                std::to_string(group.degree()) + " colours");
  }
  std::string key = group.key() + "|" + target.to_string();
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  // Computed outside the lock; a racing duplicate is identical.
  auto cert = compute(group, target);
  std::lock_guard lock(mutex_);
  return memo_.try_emplace(key, std::move(cert)).first->second;
}

std::shared_ptr<const BoundCertificate> BoundEngine::compute(
    const ColourGroup& group, const RamseyTarget& target) {
  auto cert = std::make_shared<BoundCertificate>();
  cert->group = group.name();
  cert->target = target;
  const int m = group.degree();

  if (m == 1) {
    cert->rules.push_back(exact_rule(
        "single-colour", "with one colour every K_a needs exactly a vertices",
        target[0]));
  } else if (is_cyclic_group(group) && cyclic_collapse(target) != target) {
    auto reduced = derive(group, cyclic_collapse(target));
    RuleApplication r;
    r.rule = "cyclic-collapse";
    r.statement =
        m % 2 == 0
            ? "cyclic group, even m: monochromatic cliques switch freely between "
              "colours of equal parity, so only the minimum per parity class matters"
            : "cyclic group, odd m: monochromatic cliques switch freely between all "
              "colours, so only the overall minimum matters";
    r.side = BoundSide::lower;
    r.value = reduced->lo;
    r.premises.push_back(reduced);
    cert->rules.push_back(r);
    if (reduced->hi) {
      r.side = BoundSide::upper;
      r.value = *reduced->hi;
      cert->rules.push_back(r);
    }
  } else {
    add_lower_rules(group, *cert);
    add_upper_rules(group, *cert);
  }

  cert->lo = 0;
  for (const auto& r : cert->rules) {
    if (r.side != BoundSide::upper) cert->lo = std::max(cert->lo, r.value);
    if (r.side != BoundSide::lower) {
      cert->hi = cert->hi ? std::min(*cert->hi, r.value) : r.value;
    }
  }
  if (cert->hi && *cert->hi < cert->lo) {
    throw std::logic_error("bound rules disagree for " + group.name() + " (" +
                           target.to_string() + "): lower " +
                           std::to_string(cert->lo) + " above upper " +
                           std::to_string(*cert->hi));
  }
  return cert;
}

void BoundEngine::add_lower_rules(const ColourGroup& group, BoundCertificate& cert) {
  const RamseyTarget& t = cert.target;
  RuleApplication trivial;
  trivial.rule = "trivial-lower";
  trivial.statement =
      "a complete graph on fewer than min a_i vertices has no K_{a_i} at all";
  trivial.side = BoundSide::lower;
  trivial.value = t.min();
  cert.rules.push_back(trivial);

  const bool cyclic = is_cyclic_group(group);
  for (const auto& w : witnesses_) {
    if (w.group_key != group.key()) continue;
    RamseyTarget wt = cyclic ? cyclic_collapse(w.target) : w.target;
    if (!pointwise_le(wt, t)) continue;
    RuleApplication r;
    r.rule = "witness";
    r.statement =
        "a verified colouring on n vertices that no switch brings to a target "
        "clique (targets only grow from the witness's) shows R >= n+1";
    r.side = BoundSide::lower;
    r.value = w.bound();
    r.witness = w.source.empty() ? std::string("unnamed colouring") : w.source;
    *r.witness += " (n=" + std::to_string(w.n) + ", target " + w.target.to_string() + ")";
    cert.rules.push_back(std::move(r));
  }

  const auto props = action_properties(group);
  if (props.abelian && group.order() >= 2) {
    const int k = static_cast<int>(group.order());
    std::vector<int> b;
    for (int a : t.a) b.push_back(a / k);
    bool big_enough = std::all_of(b.begin(), b.end(), [](int x) { return x >= 2; });
    bool uniform = std::all_of(b.begin(), b.end(), [&](int x) { return x == b[0]; });
    bool involutions = true;
    for (const auto& e : group.elements()) involutions = involutions && (e * e).is_identity();
    if (big_enough && (uniform || involutions)) {
      if (auto e = classical_lookup(b)) {
        RuleApplication r;
        r.rule = "push-doubling";
        r.statement =
            "abelian group of order k: a monochromatic K_{k b_i} in the push graph "
            "leaves b_i vertices in one copy, so R(b) <= R_G(k b) <= R_G(t) for "
            "k b <= t (b uniform or every element an involution, so colours line up)";
        r.side = BoundSide::lower;
        r.value = e->lo;
        r.constants.push_back(entry_note(*e));
        cert.rules.push_back(std::move(r));
      }
    }
  }
}

void BoundEngine::add_upper_rules(const ColourGroup& group, BoundCertificate& cert) {
  const RamseyTarget& t = cert.target;
  const int m = group.degree();
  const auto props = action_properties(group);

  if (group.order() == 1) {
    if (auto e = classical_lookup(t.a)) {
      RuleApplication r;
      r.rule = "no-switching";
      r.statement = "the trivial group switches nothing, so R_G(t) = R(t)";
      r.side = BoundSide::lower;
      r.value = e->lo;
      r.constants.push_back(entry_note(*e));
      cert.rules.push_back(r);
      r.side = BoundSide::upper;
      r.value = e->hi;
      cert.rules.push_back(r);
    }
    return;
  }

  // Classical cap.
  if (auto e = classical_lookup(t.a)) {
    RuleApplication r;
    r.rule = "classical-cap";
    r.statement = "a colouring already holding a target clique needs no switch: R_G(t) <= R(t)";
    r.value = e->hi;
    r.constants.push_back(entry_note(*e));
    cert.rules.push_back(std::move(r));
  }

  // Homogenise at a vertex.
  if (props.transitive) {
    std::vector<int> less;
    for (int a : t.a) less.push_back(a - 1);
    if (auto e = classical_lookup(less)) {
      RuleApplication r;
      r.rule = "transitive-apex";
      r.statement =
          "transitive group: homogenise at a vertex v, find a monochromatic "
          "K_{a_i - 1} in G - v and switch v to its colour: R_G(t) <= R(t-1) + 1";
      r.value = e->hi + 1;
      r.constants.push_back(entry_note(*e));
      cert.rules.push_back(std::move(r));
    }
  }

  // Split by orbits of the group.
  if (!props.transitive) {
    auto orbits = colour_orbits(group);
    std::vector<int> n;
    RuleApplication r;
    r.rule = "orbit-split";
    r.statement =
        "intransitive group: a switched monochromatic clique had all its colours in "
        "one orbit, so R_G(t) <= R(n_1, ..., n_k) with n_i the value for the "
        "group restricted to orbit i";
    bool known = true;
    for (const auto& orbit : orbits) {
      auto sub = derive(restrict_to_orbit(group, orbit), restrict_target(t, orbit));
      r.premises.push_back(sub);
      if (!sub->hi) {
        known = false;
        break;
      }
      n.push_back(*sub->hi);
    }
    if (known) {
      if (auto e = classical_lookup(n)) {
        r.value = e->hi;
        r.constants.push_back(entry_note(*e));
        cert.rules.push_back(std::move(r));
      }
    }
  }

  const CommutatorSubgroup comm = commutator_subgroup(group);
  if (comm.group.order() == 1) {
    // Quotient rules would restate the group itself.
  } else if (action_properties(comm.group).transitive) {
    cert.rules.push_back(exact_rule(
        "transitive-commutator",
        "commutator subgroup transitive: any clique switches to any colour one "
        "edge at a time, so R_G(t) = min a_i",
        t.min()));
  } else {
    const QuotientAction q = quotient_action(group, comm);
    std::vector<int> n;
    for (const auto& orbit : q.orbits) n.push_back(orbit_min(t, orbit));

    if (auto e = classical_lookup(n)) {
      RuleApplication r;
      r.rule = "commutator-orbits";
      r.statement =
          "single edges recolour freely inside commutator orbits: R_G(t) <= "
          "R(n_1, ..., n_k) with n_i the least target over orbit i";
      r.value = e->hi;
      r.constants.push_back(entry_note(*e));
      cert.rules.push_back(std::move(r));
    }

    RamseyTarget nt(n);
    auto sub = derive(q.group, nt);
    if (sub->hi) {
      RuleApplication r;
      r.rule = "commutator-quotient";
      r.statement =
          "R_G(t) <= R_Q(n_1, ..., n_k) for the quotient Q acting on commutator "
          "orbits, n_i the least target over orbit i";
      r.value = *sub->hi;
      r.premises.push_back(sub);
      cert.rules.push_back(std::move(r));
    }

    if (!action_properties(q.group).transitive) {
      RuleApplication r;
      r.rule = "quotient-orbit-split";
      r.statement =
          "R_G(t) <= R(m_1, ..., m_q) with m_j the value of the quotient restricted "
          "to its j-th orbit on commutator orbits";
      std::vector<int> mm;
      bool known = true;
      for (const auto& p : colour_orbits(q.group)) {
        auto s = derive(restrict_to_orbit(q.group, p), restrict_target(nt, p));
        r.premises.push_back(s);
        if (!s->hi) {
          known = false;
          break;
        }
        mm.push_back(*s->hi);
      }
      if (known) {
        if (auto e = classical_lookup(mm)) {
          r.value = e->hi;
          r.constants.push_back(entry_note(*e));
          cert.rules.push_back(std::move(r));
        }
      }
    }
  }

  if (m >= 4 && group.same_elements(ColourGroup::alternating(m))) {
    cert.rules.push_back(exact_rule(
        "alternating",
        "alternating group on m >= 4 colours: R_G(t) = min a_i", t.min()));
  }

  if (m >= 3 && group.same_elements(ColourGroup::dihedral(m))) {
    if (m % 2 == 1) {
      cert.rules.push_back(exact_rule(
          "dihedral-odd", "dihedral group, odd m: R_G(t) = min a_i", t.min()));
    } else {
      int n1 = t[0], n2 = t[1];
      for (int i = 0; i < m; ++i) {
        if (i % 2 == 0) n1 = std::min(n1, t[i]);
        else n2 = std::min(n2, t[i]);
      }
      auto sub = derive(ColourGroup::symmetric(2), RamseyTarget({n1, n2}));
      if (sub->hi) {
        RuleApplication r;
        r.rule = "dihedral-even";
        r.statement =
            "dihedral group, even m: R_G(t) <= R_{S2}(n_1, n_2) with n_1, n_2 the "
            "least targets over odd and even colours";
        r.value = *sub->hi;
        r.premises.push_back(sub);
        cert.rules.push_back(std::move(r));
      }
    }
  }

  // The star-edge argument needs a third clique vertex; with some a_i = 2 a
  // lone star edge is itself a clique (C3 with (2,2,2) would give 1).
  if (props.abelian && props.semi_regular && t.min() >= 3) {
    if (auto e = classical_lookup(t.a)) {
      const int k = static_cast<int>(group.order());
      RuleApplication r;
      r.rule = "semi-regular-push";
      r.statement =
          "abelian semi-regular group of order k: the starred push graph on k n "
          "vertices only has star-free monochromatic cliques, so "
          "R_G(t) <= ceil(R(t) / k)";
      r.value = (e->hi + k - 1) / k;
      r.constants.push_back(entry_note(*e));
      cert.rules.push_back(std::move(r));
    }
  }
}

BoundCertificate derive_bounds(const ColourGroup& group, const RamseyTarget& target,
                               const std::vector<LowerWitness>& witnesses) {
  BoundEngine engine(witnesses);
  return *engine.derive(group, target);
}

}  // namespace gswitch
