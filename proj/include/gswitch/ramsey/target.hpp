#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace gswitch {

/// Clique sizes a_1..a_m, one per colour (0-based colour i wants K_{a[i]}).
struct RamseyTarget {
  std::vector<int> a;

  RamseyTarget() = default;
  explicit RamseyTarget(std::vector<int> sizes) : a(std::move(sizes)) {
    for (int x : a) {
      if (x < 2) {
        throw std::invalid_argument("target entries must be at least 2, got " +
                                    std::to_string(x));
      }
    }
  }

  int colours() const { return static_cast<int>(a.size()); }
  int operator[](int colour) const { return a[static_cast<std::size_t>(colour)]; }
  int min() const { return *std::min_element(a.begin(), a.end()); }

  /// "3,4,3,4"
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
      s += (i ? "," : "") + std::to_string(a[i]);
    }
    return s;
  }

  friend bool operator==(const RamseyTarget&, const RamseyTarget&) = default;
  friend auto operator<=>(const RamseyTarget&, const RamseyTarget&) = default;
};

}  // namespace gswitch
