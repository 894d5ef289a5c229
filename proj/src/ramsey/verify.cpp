#include "gswitch/ramsey/verify.hpp"

#include <limits>
#include <stdexcept>

#include "gswitch/modsolve/clique_switch.hpp"
#include "gswitch/search/classes.hpp"
#include "gswitch/search/probes.hpp"

namespace gswitch {

namespace {

void check_target(const ColourGroup& group, const RamseyTarget& target) {
  if (target.colours() != group.degree()) {
    throw std::invalid_argument("target has " + std::to_string(target.colours()) +
                                " entries but the group acts on " +
                                std::to_string(group.degree()) + " colours");
  }
}

bool homogenised_at_last(const EdgeColouring& g) {
  int v = g.n() - 1;
  for (int u = 1; u < v; ++u) {
    if (g.colour(u, v) != g.colour(0, v)) return false;
  }
  return g.n() >= 2;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::verified:
      return "verified";
    case Verdict::refuted:
      return "refuted";
    case Verdict::unknown:
      return "unknown";
  }
  return "unknown";
}

bool avoids_target(const EdgeColouring& g, const RamseyTarget& target) {
  if (target.colours() != g.m()) {
    throw std::invalid_argument("target length differs from colour count");
  }
  for (int c = 0; c < g.m(); ++c) {
    if (find_mono_clique(g, c, target[c])) return false;
  }
  return true;
}

LowerCheck verify_lower_witness(const EdgeColouring& g, const ColourGroup& group,
                                const RamseyTarget& target, std::string source,
                                std::size_t budget, kernels::Parallelism par) {
  check_target(group, target);
  if (group.degree() != g.m()) {
    throw std::invalid_argument("group degree differs from colour count");
  }
  LowerCheck out;
  ContainmentResult r;
  if (action_properties(group).abelian) {
    out.method = "subset-scan";
    r = decide_containment_abelian(g, group, target, par);
  } else {
    out.method = "orbit-search";
    r = decide_containment_generic(g, group, target, budget, par);
  }
  out.stats = r.stats;
  switch (r.status) {
    case ContainmentStatus::found:
      out.verdict = Verdict::refuted;
      out.clique = r.witness;
      return out;
    case ContainmentStatus::unknown:
      out.verdict = Verdict::unknown;
      return out;
    case ContainmentStatus::absent:
      break;
  }
  out.verdict = Verdict::verified;
  out.certificate = LowerWitness{group.name(), group.key(), target, g.n(),
                                 std::move(source)};
  if (homogenised_at_last(g) && action_properties(group).transitive &&
      target.min() <= g.n()) {
    try {
      out.apex_clique_free =
          !clique_through_vertex(g, group, g.n() - 1, target.min());
    } catch (const BudgetExceeded&) {
      // Probe outgrew its budget; leave it unset.
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

ExhaustiveCheck sweep_result(const HomogenisedSweep& sweep,
                             std::optional<std::uint64_t> hit, Verdict on_hit) {
  ExhaustiveCheck out;
  out.items = sweep.size();
  if (!hit) {
    out.verdict = Verdict::verified;
    out.checked = sweep.size();
    return out;
  }
  out.verdict = on_hit;
  out.checked = *hit + 1;
  out.counterexample = sweep.at(*hit);
  out.counterexample_index = *hit;
  return out;
}

// Worker answering "representative i avoids every target after any switch".
class SweepWorker {
 public:
  SweepWorker(const HomogenisedSweep& sweep, const ContainmentScanner& scanner)
      : sweep_(&sweep), scanner_(&scanner), solver_(scanner) {}

  bool operator()(std::uint64_t i) {
    sweep_->fill(i, colours_);
    EdgeColouring g(sweep_->n(), sweep_->m(), colours_);
    for (std::uint64_t c = 0; c < scanner_->candidates(); ++c) {
      if (solver_.solve(g, c)) return false;
    }
    return true;
  }

 private:
  const HomogenisedSweep* sweep_;
  const ContainmentScanner* scanner_;
  ContainmentScanner::Worker solver_;
  std::vector<Colour> colours_;
};

}  // namespace

ExhaustiveCheck verify_value_exhaustive(int n, const ColourGroup& group,
                                        const RamseyTarget& target,
                                        kernels::Parallelism par,
                                        std::uint64_t budget,
                                        std::size_t orbit_budget) {
  check_target(group, target);
  HomogenisedSweep sweep(n, group, 0);
  if (sweep.size() > budget) {
    ExhaustiveCheck out;
    out.items = sweep.size();
    out.note = "sweep of " + std::to_string(sweep.size()) +
               " representatives exceeds the budget of " + std::to_string(budget);
    return out;
  }
  if (action_properties(group).abelian) {
    ContainmentScanner scanner(n, group, target);
    auto hit = kernels::first_hit_parallel(
        sweep.size(), [&] { return SweepWorker(sweep, scanner); }, par, 1024);
    return sweep_result(sweep, hit, Verdict::refuted);
  }

  // Orbit search per representative; an undecided one stops the sweep too.
  auto status_of = [&](std::uint64_t i) {
    return decide_containment_generic(sweep.at(i), group, target, orbit_budget,
                                      kernels::Parallelism{1})
        .status;
  };
  auto hit = kernels::first_hit_parallel(
      sweep.size(),
      [&] {
        return [&](std::uint64_t i) {
          return status_of(i) != ContainmentStatus::found;
        };
      },
      par, 16);
  Verdict on_hit = Verdict::refuted;
  if (hit && status_of(*hit) == ContainmentStatus::unknown) {
    on_hit = Verdict::unknown;
  }
  return sweep_result(sweep, hit, on_hit);
}

ExhaustiveCheck verify_value_exhaustive_serial(int n, const ColourGroup& group,
                                               const RamseyTarget& target,
                                               std::uint64_t budget) {
  check_target(group, target);
  HomogenisedSweep sweep(n, group, 0);
  if (sweep.size() > budget) {
    ExhaustiveCheck out;
    out.items = sweep.size();
    out.note = "sweep exceeds the budget";
    return out;
  }
  ContainmentScanner scanner(n, group, target);
  auto hit = kernels::first_hit_serial(
      sweep.size(), [&] { return SweepWorker(sweep, scanner); });
  return sweep_result(sweep, hit, Verdict::refuted);
}

ExhaustiveCheck verify_classical_exhaustive(int n, const RamseyTarget& target,
                                            kernels::Parallelism par,
                                            std::uint64_t budget) {
  const int m = target.colours();
  if (n < 1) throw std::invalid_argument("n must be positive");
  const std::size_t edges = edge_count(n);
  std::uint64_t total = 1;
  for (std::size_t e = 0; e < edges; ++e) {
    if (total > budget / static_cast<std::uint64_t>(m)) {
      ExhaustiveCheck out;
      out.note = "too many colourings for the budget";
      return out;
    }
    total *= static_cast<std::uint64_t>(m);
  }
  auto decode = [&](std::uint64_t i) {
    std::vector<Colour> colours(edges);
    for (auto& c : colours) {
      c = static_cast<Colour>(i % static_cast<std::uint64_t>(m));
      i /= static_cast<std::uint64_t>(m);
    }
    return EdgeColouring(n, m, std::move(colours));
  };
  auto hit = kernels::first_hit_parallel(
      total,
      [&] {
        return [&](std::uint64_t i) { return avoids_target(decode(i), target); };
      },
      par, 1024);
  ExhaustiveCheck out;
  out.items = total;
  if (!hit) {
    out.verdict = Verdict::verified;
    out.checked = total;
    return out;
  }
  out.verdict = Verdict::refuted;
  out.checked = *hit + 1;
  out.counterexample = decode(*hit);
  out.counterexample_index = *hit;
  return out;
}

}  // namespace gswitch
