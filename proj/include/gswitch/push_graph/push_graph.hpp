#pragma once

#include <optional>
#include <vector>

#include "gswitch/core/colouring.hpp"
#include "gswitch/groups/colour_group.hpp"
#include "gswitch/kernels/first_hit.hpp"

namespace gswitch {

/// |Γ| copies of a colouring, one per group element. Vertex (k, γ_i) has
/// index i*n + k (copy-major, elements in group enumeration order). Any two
/// vertices over different base vertices k != l are joined in colour
/// γ_i(γ_j(c(kl))); in particular copy i on its own is G switched by γ_i at
/// every vertex. Vertices over the same base vertex are joined only in the
/// starred variant.
///
/// Not a complete graph, so deliberately not convertible to EdgeColouring.
class PushGraph {
 public:
  static constexpr int kNoEdge = -1;

  int base_n() const { return base_n_; }
  int m() const { return m_; }
  int copies() const { return copies_; }
  int vertices() const { return base_n_ * copies_; }
  bool starred() const { return starred_; }

  int vertex(int k, int copy) const { return copy * base_n_ + k; }
  int base_of(int x) const { return x % base_n_; }
  int copy_of(int x) const { return x / base_n_; }

  /// Edge colour, or kNoEdge.
  int colour(int x, int y) const {
    return adj_[static_cast<std::size_t>(x) * static_cast<std::size_t>(vertices()) +
                static_cast<std::size_t>(y)];
  }
  bool adjacent(int x, int y) const { return colour(x, y) != kNoEdge; }
  bool is_star_edge(int x, int y) const {
    return x != y && base_of(x) == base_of(y);
  }

 private:
  friend PushGraph build_push(const EdgeColouring&, const ColourGroup&);
  friend PushGraph build_push_star(const EdgeColouring&, const ColourGroup&);

  int base_n_ = 0;
  int m_ = 0;
  int copies_ = 0;
  bool starred_ = false;
  std::vector<signed char> adj_;
};

/// Throws std::invalid_argument for a non-abelian group or a degree
/// mismatch.
PushGraph build_push(const EdgeColouring& g, const ColourGroup& group);

/// Colours of the star clique on copy indices: entry [i][j] (i != j).
/// Copies i < j get (i + j) mod m; if that leaves a monochromatic triangle,
/// pairs are recoloured greedily in order with the least colour closing no
/// monochromatic triangle. Throws std::runtime_error when neither works.
std::vector<std::vector<int>> star_scheme(int copies, int m);

/// build_push plus star edges coloured by star_scheme. Needs |Γ| >= 2.
PushGraph build_push_star(const EdgeColouring& g, const ColourGroup& group);

struct PushClique {
  std::vector<int> vertices;  // increasing push-graph indices
  int colour = 0;
};

/// Lexicographically first monochromatic `size`-clique, trying colours in
/// order. Sizes below 1 throw.
std::optional<PushClique> push_mono_clique(const PushGraph& p, int size,
                                           kernels::Parallelism par = {});

/// Same, restricted to one colour.
std::optional<PushClique> push_mono_clique(const PushGraph& p, int size,
                                           int colour,
                                           kernels::Parallelism par = {});

/// True when two of the clique's vertices lie over the same base vertex.
bool uses_star_edge(const PushGraph& p, const PushClique& clique);

struct CopyClique {
  int copy = 0;
  std::vector<int> base_vertices;  // increasing
  int colour_in_g = 0;             // colour of these vertices in G itself
};

/// Pigeonhole step: a monochromatic clique with at least copies*a vertices
/// (no star edges) has a vertices inside one copy, and those base vertices
/// form a monochromatic K_a of G. Throws std::invalid_argument if the
/// clique is too small, not monochromatic, or uses star edges.
CopyClique extract_copy_clique(const PushGraph& p, const ColourGroup& group,
                               const PushClique& clique, int a);

}  // namespace gswitch
