#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace gswitch {

using Colour = std::uint8_t;

/// Largest colour degree a Permutation can hold.
inline constexpr int kMaxDegree = 16;

/// A bijection on the colour set {0, ..., degree-1}.
///
/// Composition follows the usual function convention: (a * b)(c) == a(b(c)),
/// so switching first with b and then with a at the same vertex is the same
/// as one switch with a * b.
class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `image` is a bijection on
  /// {0, ..., image.size()-1}.
  explicit Permutation(std::span<const int> image);
  Permutation(std::initializer_list<int> image);

  static Permutation identity(int degree);

  /// (0 1 ... degree-1)^k, i.e. c -> c + k (mod degree).
  static Permutation rotation(int degree, int k);

  /// Builds a permutation from disjoint cycles given with 0-based points.
  static Permutation from_cycles(int degree,
                                 const std::vector<std::vector<int>>& cycles);

  int degree() const { return degree_; }
  int operator()(int c) const { return image_[static_cast<std::size_t>(c)]; }

  Permutation inverse() const;
  bool is_identity() const;
  bool has_fixed_point() const;

  /// Packs the image into 4 bits per point; unique per (degree, image).
  std::uint64_t key() const;

  std::vector<int> image() const;

  /// Cycle notation, e.g. "(1 2 3)(4 5)"; identity prints as "()".
  std::string to_cycle_string(bool one_based = true) const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b) = default;

 private:
  std::array<Colour, kMaxDegree> image_{};
  int degree_ = 0;
};

}  // namespace gswitch
