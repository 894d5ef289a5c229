#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "gswitch/core/permutation.hpp"

namespace gswitch {

/// A finite permutation group on the colour set, held as its full element
/// list. Elements are enumerated breadth-first from the identity: element
/// x is expanded to x * g for each generator g in the order given, so the
/// identity is always element 0.
///
/// Colour degrees in this domain are small (m <= 8), so there is no
/// base/strong-generating-set machinery.
class ColourGroup {
 public:
  /// Closure of `generators`. Throws std::invalid_argument on a degree
  /// mismatch.
  static ColourGroup generate(int degree, std::vector<Permutation> generators,
                              std::string name = {});

  static ColourGroup cyclic(int m);
  static ColourGroup symmetric(int m);
  static ColourGroup alternating(int m);
  /// Rotation (0 1 ... m-1) and the reflection c -> -c fixing 0.
  static ColourGroup dihedral(int m);
  static ColourGroup trivial(int m);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::string& name() const { return name_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(std::size_t i) const { return elements_[i]; }

  std::optional<std::size_t> index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p).has_value(); }

  /// elements()[g](c) from a precomputed table.
  int act(std::size_t g, int c) const {
    return table_[g * static_cast<std::size_t>(degree_) +
                  static_cast<std::size_t>(c)];
  }
  std::size_t inverse_index(std::size_t g) const { return inverse_[g]; }

  /// BFS parent links: element i == element(parent(i)) * generators()[via(i)]
  /// for i > 0.
  std::size_t parent(std::size_t i) const { return parent_[i]; }
  std::size_t via(std::size_t i) const { return via_[i]; }

  /// True when the element list is exactly k -> (0 1 ... m-1)^k, so element
  /// index equals the cyclic exponent.
  bool is_standard_cyclic() const { return standard_cyclic_; }

  /// Order-independent identity of the element set.
  std::string key() const;
  bool same_elements(const ColourGroup& other) const {
    return key() == other.key();
  }

 private:
  ColourGroup() = default;

  int degree_ = 0;
  std::string name_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> via_;
  std::vector<std::size_t> inverse_;
  std::vector<Colour> table_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  bool standard_cyclic_ = false;
};

/// Orbit partition of the natural action, each orbit sorted, orbits ordered
/// by least element.
std::vector<std::vector<int>> colour_orbits(const ColourGroup& g);

struct ActionProperties {
  bool transitive;
  bool semi_regular;
  bool abelian;
};

ActionProperties action_properties(const ColourGroup& g);

/// Action of `g` on one of its orbits, relabelled 0..|orbit|-1 in sorted
/// order.
ColourGroup restrict_to_orbit(const ColourGroup& g,
                              std::span<const int> orbit);

}  // namespace gswitch
