#include "gswitch/search/classes.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "gswitch/search/orbit.hpp"

namespace gswitch {

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / base) {
      throw std::overflow_error(std::to_string(base) + "^" +
                                std::to_string(exp) + " does not fit in 64 bits");
    }
    r *= base;
  }
  return r;
}

std::uint64_t brute_count(int n, const ColourGroup& group,
                          std::uint64_t budget) {
  const int m = group.degree();
  const std::size_t edges = edge_count(n);
  std::uint64_t total = 0;
  try {
    total = checked_pow(static_cast<std::uint64_t>(m), edges);
  } catch (const std::overflow_error&) {
    throw BudgetExceeded("too many colourings to partition");
  }
  if (total > budget) {
    throw BudgetExceeded(std::to_string(total) +
                         " colourings exceed the brute-force budget of " +
                         std::to_string(budget));
  }
  std::vector<std::uint64_t> place(edges);
  for (std::size_t e = 0; e < edges; ++e) {
    place[e] = e == 0 ? 1 : place[e - 1] * static_cast<std::uint64_t>(m);
  }
  // Generators as colour tables.
  std::vector<std::vector<int>> gens;
  for (const auto& p : group.generators()) {
    if (!p.is_identity()) gens.push_back(p.image());
  }

  std::vector<bool> seen(total, false);
  std::vector<std::uint64_t> stack;
  std::vector<int> digits(edges);
  std::uint64_t classes = 0;
  for (std::uint64_t start = 0; start < total; ++start) {
    if (seen[start]) continue;
    ++classes;
    seen[start] = true;
    stack.push_back(start);
    while (!stack.empty()) {
      std::uint64_t x = stack.back();
      stack.pop_back();
      for (std::size_t e = 0; e < edges; ++e) {
        digits[e] = static_cast<int>((x / place[e]) % static_cast<std::uint64_t>(m));
      }
      for (int v = 0; v < n; ++v) {
        for (const auto& p : gens) {
          std::uint64_t y = x;
          for (int u = 0; u < n; ++u) {
            if (u == v) continue;
            std::size_t e = u < v ? edge_index(n, u, v) : edge_index(n, v, u);
            int c = digits[e];
            y = y - static_cast<std::uint64_t>(c) * place[e] +
                static_cast<std::uint64_t>(p[static_cast<std::size_t>(c)]) * place[e];
          }
          if (!seen[y]) {
            seen[y] = true;
            stack.push_back(y);
          }
        }
      }
    }
  }
  return classes;
}

}  // namespace

std::uint64_t count_classes(int n, const ColourGroup& group, CountMode mode,
                            std::uint64_t budget) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const int m = group.degree();
  if (mode == CountMode::brute) return brute_count(n, group, budget);
  if (!group.is_standard_cyclic()) {
    throw std::invalid_argument("the class-count formula needs the cyclic group C" +
                                std::to_string(m) + ", got " + group.name());
  }
  if (n < 3) {
    throw std::invalid_argument("the class-count formula needs n >= 3");
  }
  auto exp = static_cast<std::uint64_t>(edge_count(n) - static_cast<std::size_t>(n));
  std::uint64_t base = checked_pow(static_cast<std::uint64_t>(m), exp);
  if (m % 2 == 0) {
    if (base > std::numeric_limits<std::uint64_t>::max() / 2) {
      throw std::overflow_error("class count does not fit in 64 bits");
    }
    return 2 * base;
  }
  return base;
}

HomogenisedSweep::HomogenisedSweep(int n, const ColourGroup& group, int colour)
    : n_(n), m_(group.degree()), colour_(colour) {
  if (n < 2) throw std::invalid_argument("homogenised sweep needs n >= 2");
  if (colour < 0 || colour >= m_) {
    throw std::invalid_argument("colour " + std::to_string(colour) +
                                " out of range for m=" + std::to_string(m_));
  }
  if (!action_properties(group).transitive) {
    throw std::invalid_argument("group " + group.name() +
                                " is not transitive on the colours");
  }
  size_ = checked_pow(static_cast<std::uint64_t>(m_), edge_count(n - 1));
  if (size_ > (std::uint64_t{1} << 63)) {
    throw std::overflow_error("homogenised sweep too large");
  }
}

void HomogenisedSweep::fill(std::uint64_t i, std::vector<Colour>& colours) const {
  if (i >= size_) throw std::out_of_range("sweep index out of range");
  colours.resize(edge_count(n_));
  std::size_t k = 0;
  const auto m = static_cast<std::uint64_t>(m_);
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (v == n_ - 1) {
        colours[k++] = static_cast<Colour>(colour_);
      } else {
        colours[k++] = static_cast<Colour>(i % m);
        i /= m;
      }
    }
  }
}

EdgeColouring HomogenisedSweep::at(std::uint64_t i) const {
  std::vector<Colour> colours;
  fill(i, colours);
  return EdgeColouring(n_, m_, std::move(colours));
}

}  // namespace gswitch
