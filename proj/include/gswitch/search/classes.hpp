#pragma once

#include <cstdint>
#include <vector>

#include "gswitch/core/colouring.hpp"
#include "gswitch/groups/colour_group.hpp"

namespace gswitch {

enum class CountMode { formula, brute };

/// Default cap on m^{n(n-1)/2} for brute-force class counting.
inline constexpr std::uint64_t kDefaultClassBudget = std::uint64_t{1} << 26;

/// Number of switching classes of m-coloured K_n.
///
/// formula: standard cyclic groups with n >= 3 only; 2*m^{C(n,2)-n} for
/// even m and m^{C(n,2)-n} for odd m.
/// brute: partitions all m^{C(n,2)} colourings into orbits, any group.
/// Throws std::invalid_argument when the mode does not apply and
/// std::overflow_error / BudgetExceeded when the count is out of reach.
std::uint64_t count_classes(int n, const ColourGroup& group, CountMode mode,
                            std::uint64_t budget = kDefaultClassBudget);

/// Colourings of K_n whose last vertex has every edge in one colour, one
/// per colouring of K_{n-1}. Item i colours the j-th edge of K_{n-1}
/// (lexicographic order) with base-m digit j of i, least significant
/// first. Every switching class meets the sweep when the group is
/// transitive.
class HomogenisedSweep {
 public:
  /// Throws std::invalid_argument for a non-transitive group, n < 2, or a
  /// bad colour; std::overflow_error when the item count exceeds 2^63.
  HomogenisedSweep(int n, const ColourGroup& group, int colour);

  int n() const { return n_; }
  int m() const { return m_; }
  int apex_colour() const { return colour_; }
  std::uint64_t size() const { return size_; }

  EdgeColouring at(std::uint64_t i) const;
  /// Writes item i into `colours` (resized to C(n,2)).
  void fill(std::uint64_t i, std::vector<Colour>& colours) const;

 private:
  int n_;
  int m_;
  int colour_;
  std::uint64_t size_;
};

}  // namespace gswitch
