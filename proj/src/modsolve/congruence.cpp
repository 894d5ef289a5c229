#include "gswitch/modsolve/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

namespace gswitch {

namespace {

int mod(long long x, int m) {
  long long r = x % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

// s*a + t*b == g == gcd(a, b)
int ext_gcd(int a, int b, int& s, int& t) {
  int old_r = a, r = b, old_s = 1, s_ = 0, old_t = 0, t_ = 1;
  while (r != 0) {
    int q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s_) = std::pair{s_, old_s - q * s_};
    std::tie(old_t, t_) = std::pair{t_, old_t - q * t_};
  }
  s = old_s;
  t = old_t;
  return old_r;
}

}  // namespace

CongruenceSystem::CongruenceSystem(int modulus, int variables)
    : modulus_(modulus), variables_(variables) {
  if (modulus < 2) {
    throw std::invalid_argument("modulus must be at least 2, got " +
                                std::to_string(modulus));
  }
  if (variables < 0) throw std::invalid_argument("negative variable count");
}

void CongruenceSystem::add_row(std::span<const int> coefficients, int rhs) {
  if (static_cast<int>(coefficients.size()) != variables_) {
    throw std::invalid_argument("row has " + std::to_string(coefficients.size()) +
                                " coefficients, expected " +
                                std::to_string(variables_));
  }
  for (int a : coefficients) coeffs_.push_back(mod(a, modulus_));
  rhs_.push_back(mod(rhs, modulus_));
}

bool CongruenceSystem::satisfied_by(std::span<const int> x) const {
  if (static_cast<int>(x.size()) != variables_) return false;
  for (std::size_t r = 0; r < rows(); ++r) {
    long long sum = 0;
    for (int j = 0; j < variables_; ++j) {
      sum += static_cast<long long>(coefficient(r, j)) * x[static_cast<std::size_t>(j)];
    }
    if (mod(sum, modulus_) != rhs_[r]) return false;
  }
  return true;
}

bool CongruenceSolver::solve(int modulus, int variables,
                             std::span<const int> rows,
                             std::span<int> solution) {
  m_ = modulus;
  vars_ = variables;
  width_ = static_cast<std::size_t>(variables) + 1;
  work_.assign(rows.begin(), rows.end());
  pivot_col_.clear();

  auto row = [&](std::size_t i) { return work_.data() + i * width_; };
  auto row_count = [&] { return work_.size() / width_; };

  std::size_t next = 0;
  for (int col = 0; col < vars_; ++col) {
    auto c = static_cast<std::size_t>(col);
    std::size_t i = next;
    while (i < row_count() && row(i)[c] == 0) ++i;
    if (i == row_count()) continue;
    if (i != next) {
      std::swap_ranges(row(i), row(i) + width_, row(next));
    }

    for (std::size_t j = next + 1; j < row_count(); ++j) {
      int b = row(j)[c];
      if (b == 0) continue;
      int a = row(next)[c];
      int s = 0, t = 0;
      int g = ext_gcd(a, b, s, t);
      int bg = b / g, ag = a / g;
      int* p = row(next);
      int* q = row(j);
      for (std::size_t k = c; k < width_; ++k) {
        long long pk = p[k], qk = q[k];
        p[k] = mod(s * pk + t * qk, m_);
        q[k] = mod(bg * pk - ag * qk, m_);
      }
    }

    int* p = row(next);
    int g = std::gcd(p[c], m_);
    if (p[c] != g) {
      int unit = 1;
      while (std::gcd(unit, m_) != 1 ||
             mod(static_cast<long long>(unit) * p[c], m_) != g) {
        ++unit;
      }
      for (std::size_t k = c; k < width_; ++k) {
        p[k] = mod(static_cast<long long>(unit) * p[k], m_);
      }
    }
    if (g != 1) {
      int ann = m_ / g;
      bool nonzero = false;
      std::size_t base = work_.size();
      work_.resize(base + width_, 0);
      p = row(next);  // resize may move storage
      int* extra = work_.data() + base;
      for (std::size_t k = c + 1; k < width_; ++k) {
        extra[k] = mod(static_cast<long long>(ann) * p[k], m_);
        nonzero = nonzero || extra[k] != 0;
      }
      if (!nonzero) work_.resize(base);
    }
    pivot_col_.push_back(col);
    ++next;
  }

  for (std::size_t j = next; j < row_count(); ++j) {
    if (row(j)[width_ - 1] != 0) return false;
  }
  std::fill(solution.begin(), solution.end(), 0);
  return back_substitute(next, solution);
}

bool CongruenceSolver::back_substitute(std::size_t pivot,
                                       std::span<int> solution) {
  if (pivot == 0) return true;
  const int* r = work_.data() + (pivot - 1) * width_;
  auto col = static_cast<std::size_t>(pivot_col_[pivot - 1]);
  long long residual = r[width_ - 1];
  for (std::size_t k = col + 1; k + 1 < width_; ++k) {
    residual -= static_cast<long long>(r[k]) * solution[k];
  }
  int res = mod(residual, m_);
  int g = r[col];
  if (res % g != 0) return false;
  int step = m_ / g;
  for (int t = 0; t < g; ++t) {
    solution[col] = res / g + t * step;
    if (back_substitute(pivot - 1, solution)) return true;
  }
  solution[col] = 0;
  return false;
}

std::optional<std::vector<int>> solve_mod(const CongruenceSystem& system) {
  int vars = system.variables();
  std::vector<int> flat;
  flat.reserve(system.rows() * static_cast<std::size_t>(vars + 1));
  for (std::size_t r = 0; r < system.rows(); ++r) {
    for (int j = 0; j < vars; ++j) flat.push_back(system.coefficient(r, j));
    flat.push_back(system.rhs(r));
  }
  std::vector<int> x(static_cast<std::size_t>(vars), 0);
  CongruenceSolver solver;
  if (!solver.solve(system.modulus(), vars, flat, x)) return std::nullopt;
  if (!system.satisfied_by(x)) {
    throw std::logic_error("congruence solver produced a non-solution");
  }
  return x;
}

}  // namespace gswitch
