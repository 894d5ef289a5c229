#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gswitch/core/permutation.hpp"

namespace gswitch {

/// Position of edge {u, v} (u < v) in the row-major upper triangle of K_n.
constexpr std::size_t edge_index(int n, int u, int v) {
  return static_cast<std::size_t>(u) *
             static_cast<std::size_t>(2 * n - u - 1) / 2 +
         static_cast<std::size_t>(v - u - 1);
}

constexpr std::size_t edge_count(int n) {
  return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

/// An m-edge-colouring of the complete graph on n labelled vertices.
///
/// Colours are 0-based. The value is immutable once built; every operation
/// that changes colours returns a new colouring.
class EdgeColouring {
 public:
  /// All edges coloured 0.
  EdgeColouring(int n, int m);

  /// `colours` lists pairs (i, j), i < j, in lexicographic order.
  EdgeColouring(int n, int m, std::vector<Colour> colours);

  static EdgeColouring monochromatic(int n, int m, int colour);

  int n() const { return n_; }
  int m() const { return m_; }
  std::size_t edges() const { return colours_.size(); }

  /// Colour of {u, v}; u and v may be given in either order but must differ.
  int colour(int u, int v) const {
    return u < v ? colours_[edge_index(n_, u, v)]
                 : colours_[edge_index(n_, v, u)];
  }

  std::span<const Colour> colours() const { return colours_; }

  /// Copy with one edge recoloured.
  EdgeColouring with_colour(int u, int v, int colour) const;

  /// Subgraph induced on `vertices`, relabelled 0..k-1 in the given order.
  EdgeColouring induced(std::span<const int> vertices) const;

  EdgeColouring without_vertex(int v) const;

  /// Byte string (n, m, colours...) used as an exact hash key.
  std::string key() const;

  friend bool operator==(const EdgeColouring& a,
                         const EdgeColouring& b) = default;

 private:
  int n_;
  int m_;
  std::vector<Colour> colours_;
};

struct EdgeColouringHash {
  std::size_t operator()(const EdgeColouring& g) const;
};

}  // namespace gswitch
