#include "gswitch/core/permutation.hpp"

#include <sstream>
#include <stdexcept>

namespace gswitch {

Permutation::Permutation(std::span<const int> image) {
  if (image.empty() || image.size() > static_cast<std::size_t>(kMaxDegree)) {
    throw std::invalid_argument("permutation degree must be in [1, " +
                                std::to_string(kMaxDegree) + "], got " +
                                std::to_string(image.size()));
  }
  degree_ = static_cast<int>(image.size());
  std::array<bool, kMaxDegree> seen{};
  for (std::size_t i = 0; i < image.size(); ++i) {
    int c = image[i];
    if (c < 0 || c >= degree_) {
      throw std::invalid_argument("permutation image " + std::to_string(c) +
                                  " out of range for degree " +
                                  std::to_string(degree_));
    }
    if (seen[static_cast<std::size_t>(c)]) {
      throw std::invalid_argument("permutation is not a bijection: " +
                                  std::to_string(c) + " appears twice");
    }
    seen[static_cast<std::size_t>(c)] = true;
    image_[i] = static_cast<Colour>(c);
  }
}

Permutation::Permutation(std::initializer_list<int> image)
    : Permutation(std::span<const int>(image.begin(), image.size())) {}

Permutation Permutation::identity(int degree) { return rotation(degree, 0); }

Permutation Permutation::rotation(int degree, int k) {
  if (degree < 1 || degree > kMaxDegree) {
    throw std::invalid_argument("permutation degree out of range: " +
                                std::to_string(degree));
  }
  Permutation p;
  p.degree_ = degree;
  int shift = ((k % degree) + degree) % degree;
  for (int c = 0; c < degree; ++c) {
    p.image_[static_cast<std::size_t>(c)] =
        static_cast<Colour>((c + shift) % degree);
  }
  return p;
}

Permutation Permutation::from_cycles(
    int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> image(static_cast<std::size_t>(degree));
  for (int c = 0; c < degree; ++c) image[static_cast<std::size_t>(c)] = c;
  std::vector<bool> used(static_cast<std::size_t>(degree), false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i];
      int to = cycle[(i + 1) % cycle.size()];
      if (from < 0 || from >= degree) {
        throw std::invalid_argument("cycle point " + std::to_string(from) +
                                    " out of range for degree " +
                                    std::to_string(degree));
      }
      if (used[static_cast<std::size_t>(from)]) {
        throw std::invalid_argument("cycles are not disjoint at point " +
                                    std::to_string(from));
      }
      used[static_cast<std::size_t>(from)] = true;
      image[static_cast<std::size_t>(from)] = to;
    }
  }
  return Permutation(std::span<const int>(image));
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.degree_ = degree_;
  for (int c = 0; c < degree_; ++c) {
    inv.image_[image_[static_cast<std::size_t>(c)]] = static_cast<Colour>(c);
  }
  return inv;
}

bool Permutation::is_identity() const {
  for (int c = 0; c < degree_; ++c) {
    if (image_[static_cast<std::size_t>(c)] != c) return false;
  }
  return true;
}

bool Permutation::has_fixed_point() const {
  for (int c = 0; c < degree_; ++c) {
    if (image_[static_cast<std::size_t>(c)] == c) return true;
  }
  return false;
}

std::uint64_t Permutation::key() const {
  std::uint64_t k = 0;
  for (int c = 0; c < degree_; ++c) {
    k |= static_cast<std::uint64_t>(image_[static_cast<std::size_t>(c)])
         << (4 * c);
  }
  return k;
}

std::vector<int> Permutation::image() const {
  return std::vector<int>(image_.begin(), image_.begin() + degree_);
}

std::string Permutation::to_cycle_string(bool one_based) const {
  std::ostringstream out;
  std::array<bool, kMaxDegree> seen{};
  int offset = one_based ? 1 : 0;
  for (int start = 0; start < degree_; ++start) {
    if (seen[static_cast<std::size_t>(start)] ||
        image_[static_cast<std::size_t>(start)] == start) {
      continue;
    }
    out << '(';
    int c = start;
    bool first = true;
    while (!seen[static_cast<std::size_t>(c)]) {
      seen[static_cast<std::size_t>(c)] = true;
      if (!first) out << ' ';
      out << c + offset;
      first = false;
      c = image_[static_cast<std::size_t>(c)];
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree_ != b.degree_) {
    throw std::invalid_argument("cannot compose permutations of degree " +
                                std::to_string(a.degree_) + " and " +
                                std::to_string(b.degree_));
  }
  Permutation r;
  r.degree_ = a.degree_;
  for (int c = 0; c < a.degree_; ++c) {
    r.image_[static_cast<std::size_t>(c)] =
        a.image_[b.image_[static_cast<std::size_t>(c)]];
  }
  return r;
}

}  // namespace gswitch
