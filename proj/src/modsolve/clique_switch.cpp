#include "gswitch/modsolve/clique_switch.hpp"

#include <stdexcept>
#include <string>

namespace gswitch {

namespace {

void require_abelian(const ColourGroup& group) {
  if (!action_properties(group).abelian) {
    throw std::invalid_argument("group " + group.name() +
                                " is not abelian; use the generic search");
  }
}

void require_vertices(const EdgeColouring& g, std::span<const int> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= g.n()) {
      throw std::invalid_argument("vertex " + std::to_string(s[i]) +
                                  " out of range for n=" + std::to_string(g.n()));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (s[i] == s[j]) {
        throw std::invalid_argument("repeated vertex " + std::to_string(s[i]));
      }
    }
  }
}

// Depth-first assignment of one element per vertex. In an abelian group
// the edge uv ends up as gamma_u(gamma_v(c)) whatever the switch order, so
// each edge can be checked as soon as both ends are assigned.
template <typename Want>
bool assign(const EdgeColouring& g, std::span<const int> s,
            const ColourGroup& group, Want&& want, std::size_t depth,
            std::vector<std::size_t>& choice) {
  if (depth == s.size()) return true;
  for (std::size_t e = 0; e < group.order(); ++e) {
    bool ok = true;
    for (std::size_t j = 0; j < depth && ok; ++j) {
      int c = g.colour(s[j], s[depth]);
      ok = group.act(choice[j], group.act(e, c)) == want(j, depth);
    }
    if (!ok) continue;
    choice[depth] = e;
    if (assign(g, s, group, want, depth + 1, choice)) return true;
  }
  return false;
}

template <typename Want>
std::optional<std::vector<std::size_t>> cyclic_assign(const EdgeColouring& g,
                                                      std::span<const int> s,
                                                      int m, Want&& want) {
  auto k = s.size();
  CongruenceSystem system(m, static_cast<int>(k));
  std::vector<int> row(k, 0);
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t q = p + 1; q < k; ++q) {
      std::fill(row.begin(), row.end(), 0);
      row[p] = 1;
      row[q] = 1;
      system.add_row(row, want(p, q) - g.colour(s[p], s[q]));
    }
  }
  auto x = solve_mod(system);
  if (!x) return std::nullopt;
  return std::vector<std::size_t>(x->begin(), x->end());
}

}  // namespace

std::optional<std::vector<int>> clique_switch_cyclic(const EdgeColouring& g,
                                                     std::span<const int> s,
                                                     int target, int m) {
  if (m != g.m()) {
    throw std::invalid_argument("modulus " + std::to_string(m) +
                                " differs from colour count " +
                                std::to_string(g.m()));
  }
  if (target < 0 || target >= m) {
    throw std::invalid_argument("target colour out of range");
  }
  require_vertices(g, s);
  auto x = cyclic_assign(g, s, m, [&](std::size_t, std::size_t) { return target; });
  if (!x) return std::nullopt;
  return std::vector<int>(x->begin(), x->end());
}

std::optional<std::vector<std::size_t>> clique_switch_abelian(
    const EdgeColouring& g, std::span<const int> s, int target,
    const ColourGroup& group) {
  if (group.degree() != g.m()) {
    throw std::invalid_argument("group degree differs from colour count");
  }
  if (target < 0 || target >= g.m()) {
    throw std::invalid_argument("target colour out of range");
  }
  require_abelian(group);
  require_vertices(g, s);
  auto want = [&](std::size_t, std::size_t) { return target; };
  if (group.is_standard_cyclic()) return cyclic_assign(g, s, g.m(), want);
  std::vector<std::size_t> choice(s.size(), 0);
  if (!assign(g, s, group, want, 0, choice)) return std::nullopt;
  return choice;
}

std::optional<std::vector<std::size_t>> switch_onto_pattern(
    const EdgeColouring& g, std::span<const int> s,
    const EdgeColouring& pattern, const ColourGroup& group) {
  if (group.degree() != g.m() || pattern.m() != g.m()) {
    throw std::invalid_argument("colour counts differ");
  }
  if (static_cast<std::size_t>(pattern.n()) != s.size()) {
    throw std::invalid_argument("pattern size differs from vertex set size");
  }
  require_abelian(group);
  require_vertices(g, s);
  auto want = [&](std::size_t p, std::size_t q) {
    return pattern.colour(static_cast<int>(p), static_cast<int>(q));
  };
  if (group.is_standard_cyclic()) return cyclic_assign(g, s, g.m(), want);
  std::vector<std::size_t> choice(s.size(), 0);
  if (!assign(g, s, group, want, 0, choice)) return std::nullopt;
  return choice;
}

// ---------------------------------------------------------------------------

namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

std::vector<int> all_subsets(int n, int k) {
  std::vector<int> out;
  if (k > n) return out;
  out.reserve(binomial(n, k) * static_cast<std::size_t>(k));
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.insert(out.end(), cur.begin(), cur.end());
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

}  // namespace

ContainmentScanner::ContainmentScanner(int n, const ColourGroup& group,
                                       RamseyTarget target)
    : n_(n), group_(&group), target_(std::move(target)) {
  if (target_.colours() != group.degree()) {
    throw std::invalid_argument("target has " +
                                std::to_string(target_.colours()) +
                                " entries but the group acts on " +
                                std::to_string(group.degree()) + " colours");
  }
  require_abelian(group);
  if (n < 1) throw std::invalid_argument("n must be positive");
  offsets_.push_back(0);
  for (int i = 0; i < target_.colours(); ++i) {
    int k = target_[i];
    if (static_cast<std::size_t>(k) >= subsets_.size()) {
      subsets_.resize(static_cast<std::size_t>(k) + 1);
    }
    auto& list = subsets_[static_cast<std::size_t>(k)];
    if (list.empty() && k <= n) list = all_subsets(n, k);
    total_ += binomial(n, k);
    offsets_.push_back(total_);
  }
}

const int* ContainmentScanner::subset_ptr(std::uint64_t i, int* colour,
                                          int* size) const {
  int c = 0;
  while (offsets_[static_cast<std::size_t>(c) + 1] <= i) ++c;
  *colour = c;
  *size = target_[c];
  auto local = i - offsets_[static_cast<std::size_t>(c)];
  return subsets_[static_cast<std::size_t>(*size)].data() +
         local * static_cast<std::uint64_t>(*size);
}

int ContainmentScanner::colour_of(std::uint64_t i) const {
  if (i >= total_) throw std::out_of_range("candidate index out of range");
  int c = 0, size = 0;
  subset_ptr(i, &c, &size);
  return c;
}

std::vector<int> ContainmentScanner::subset_of(std::uint64_t i) const {
  if (i >= total_) throw std::out_of_range("candidate index out of range");
  int c = 0, size = 0;
  const int* p = subset_ptr(i, &c, &size);
  return {p, p + size};
}

ContainmentScanner::Worker::Worker(const ContainmentScanner& scanner)
    : scanner_(&scanner) {}

bool ContainmentScanner::Worker::solve(const EdgeColouring& g,
                                       std::uint64_t i) {
  int colour = 0, size = 0;
  const int* subset = scanner_->subset_ptr(i, &colour, &size);
  assignment_.assign(static_cast<std::size_t>(size), 0);
  if (scanner_->group_->is_standard_cyclic()) {
    return solve_cyclic(g, subset, size, colour);
  }
  return solve_search(g, subset, size, colour, 0);
}

bool ContainmentScanner::Worker::solve_cyclic(const EdgeColouring& g,
                                              const int* subset, int size,
                                              int colour) {
  const int m = g.m();
  const auto width = static_cast<std::size_t>(size) + 1;
  rows_.clear();
  for (int p = 0; p < size; ++p) {
    for (int q = p + 1; q < size; ++q) {
      std::size_t base = rows_.size();
      rows_.resize(base + width, 0);
      rows_[base + static_cast<std::size_t>(p)] = 1;
      rows_[base + static_cast<std::size_t>(q)] = 1;
      int r = (colour - g.colour(subset[p], subset[q])) % m;
      rows_[base + width - 1] = r < 0 ? r + m : r;
    }
  }
  exponents_.assign(static_cast<std::size_t>(size), 0);
  if (!solver_.solve(m, size, rows_, exponents_)) return false;
  for (int p = 0; p < size; ++p) {
    assignment_[static_cast<std::size_t>(p)] =
        static_cast<std::size_t>(exponents_[static_cast<std::size_t>(p)]);
  }
  return true;
}

bool ContainmentScanner::Worker::solve_search(const EdgeColouring& g,
                                              const int* subset, int size,
                                              int colour, int depth) {
  if (depth == size) return true;
  const ColourGroup& group = *scanner_->group_;
  for (std::size_t e = 0; e < group.order(); ++e) {
    bool ok = true;
    for (int j = 0; j < depth && ok; ++j) {
      int c = g.colour(subset[j], subset[depth]);
      ok = group.act(assignment_[static_cast<std::size_t>(j)], group.act(e, c)) ==
           colour;
    }
    if (!ok) continue;
    assignment_[static_cast<std::size_t>(depth)] = e;
    if (solve_search(g, subset, size, colour, depth + 1)) return true;
  }
  return false;
}

ContainmentResult ContainmentScanner::finish(
    const EdgeColouring& g, std::optional<std::uint64_t> hit) const {
  ContainmentResult result;
  if (!hit) {
    result.status = ContainmentStatus::absent;
    result.stats.candidates = total_;
    return result;
  }
  Worker worker(*this);
  if (!worker.solve(g, *hit)) {
    throw std::logic_error("containment hit did not reproduce");
  }
  CliqueWitness w;
  w.colour = colour_of(*hit);
  w.vertices = subset_of(*hit);
  for (std::size_t p = 0; p < w.vertices.size(); ++p) {
    std::size_t e = worker.assignment()[p];
    if (e == 0) continue;
    w.sequence.steps.push_back({w.vertices[p], group_->element(e)});
  }
  result.status = ContainmentStatus::found;
  result.witness = std::move(w);
  result.stats.candidates = *hit + 1;
  return result;
}

ContainmentResult ContainmentScanner::scan_serial(const EdgeColouring& g) const {
  if (g.n() != n_ || g.m() != group_->degree()) {
    throw std::invalid_argument("colouring shape differs from scanner");
  }
  auto hit = kernels::first_hit_serial(total_, [&] {
    return [&, w = Worker(*this)](std::uint64_t i) mutable {
      return w.solve(g, i);
    };
  });
  return finish(g, hit);
}

ContainmentResult ContainmentScanner::scan_parallel(
    const EdgeColouring& g, kernels::Parallelism par) const {
  if (g.n() != n_ || g.m() != group_->degree()) {
    throw std::invalid_argument("colouring shape differs from scanner");
  }
  auto hit = kernels::first_hit_parallel(
      total_,
      [&] {
        return [&, w = Worker(*this)](std::uint64_t i) mutable {
          return w.solve(g, i);
        };
      },
      par);
  return finish(g, hit);
}

ContainmentResult decide_containment_abelian(const EdgeColouring& g,
                                             const ColourGroup& group,
                                             const RamseyTarget& target,
                                             kernels::Parallelism par) {
  if (group.degree() != g.m()) {
    throw std::invalid_argument("group degree differs from colour count");
  }
  ContainmentScanner scanner(g.n(), group, target);
  return scanner.scan_parallel(g, par);
}

}  // namespace gswitch
