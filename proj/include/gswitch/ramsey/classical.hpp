#pragma once

#include <optional>
#include <string>
#include <vector>

namespace gswitch {

/// Version tag of the built-in classical Ramsey table; certificates record
/// it so a table change is visible in their output.
inline constexpr const char* kClassicalTableVersion = "classical-table/1";

/// Known value or interval of a classical multicolour Ramsey number.
struct ClassicalEntry {
  std::vector<int> target;  // normalised: 2s removed, sorted ascending
  int lo = 0;
  int hi = 0;
  std::string citation;

  bool exact() const { return lo == hi; }
  /// "R(3,3)=6" or "R(3,3,3,3) in [51,62]".
  std::string describe() const;
};

/// Normal form used for lookup: any entry <= 1 makes the number 1, entries
/// equal to 2 are deleted (any edge of that colour is already a K_2), and
/// the rest is sorted.
std::vector<int> normalise_classical(std::vector<int> target);

/// The value or best known interval of R(target). Entries may be 1 or
/// more. Reduced forms () and (a) are answered directly (2 and a); other
/// targets come from the constants table; nullopt when unknown.
std::optional<ClassicalEntry> classical_lookup(const std::vector<int>& target);

/// Every table row, for listing and tests.
const std::vector<ClassicalEntry>& classical_table();

}  // namespace gswitch
