#pragma once

#include <optional>
#include <span>
#include <vector>

namespace gswitch {

/// Simultaneous linear congruences sum_j a_ij x_j == b_i (mod m) in
/// `variables` unknowns. Coefficients and right-hand sides are stored
/// reduced into [0, m).
class CongruenceSystem {
 public:
  CongruenceSystem(int modulus, int variables);

  /// Throws std::invalid_argument unless coefficients.size() == variables().
  void add_row(std::span<const int> coefficients, int rhs);

  int modulus() const { return modulus_; }
  int variables() const { return variables_; }
  std::size_t rows() const { return rhs_.size(); }
  int coefficient(std::size_t row, int var) const {
    return coeffs_[row * static_cast<std::size_t>(variables_) +
                   static_cast<std::size_t>(var)];
  }
  int rhs(std::size_t row) const { return rhs_[row]; }

  bool satisfied_by(std::span<const int> x) const;

 private:
  int modulus_;
  int variables_;
  std::vector<int> coeffs_;
  std::vector<int> rhs_;
};

/// Reusable workspace for solving many small systems without allocating.
///
/// Elimination runs column by column. Rows sharing a column are merged with
/// an extended-gcd row operation (a unimodular 2x2 transform), leaving one
/// pivot row per column; a unit multiple brings the pivot to gcd(pivot, m).
/// When that gcd g is not 1, the row times m/g (zero in the pivot column)
/// is appended for the later columns. With those rows present every
/// partial solution of the lower rows extends upward, so back-substitution
/// only has to pick among the g residues solving g*x == r at each pivot.
class CongruenceSolver {
 public:
  /// `rows` is row-major with variables+1 entries per row (coefficients then
  /// rhs), already reduced mod m. Writes a solution into `solution` (size
  /// `variables`) and returns true, or returns false when none exists.
  bool solve(int modulus, int variables, std::span<const int> rows,
             std::span<int> solution);

 private:
  bool back_substitute(std::size_t pivot, std::span<int> solution);

  int m_ = 0;
  int vars_ = 0;
  std::size_t width_ = 0;
  std::vector<int> work_;
  std::vector<int> pivot_col_;
};

/// Throws std::invalid_argument when the modulus is below 2.
std::optional<std::vector<int>> solve_mod(const CongruenceSystem& system);

}  // namespace gswitch
