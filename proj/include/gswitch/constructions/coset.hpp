#pragma once

#include <cstdint>
#include <vector>

#include "gswitch/core/colouring.hpp"

namespace gswitch {

/// Colour {a, b} of a complete graph on a finite field by the coset of
/// a - b modulo the subgroup of d-th powers in the multiplicative group.
struct CosetColouringSpec {
  enum class Field { prime, binary };

  Field field = Field::prime;
  /// Prime field: the prime p. Binary field: the exponent k of GF(2^k).
  int size_parameter = 0;
  /// Binary field only: reduction polynomial with its leading bit, e.g.
  /// 0b10011 for x^4 + x + 1.
  std::uint32_t polynomial = 0;
  /// Number of cosets (= number of colours unless labels merge some).
  int d = 2;
  /// labels[i] is the colour of coset i (discrete log mod d == i); empty
  /// means the identity labelling.
  std::vector<int> labels;
};

/// Vertices are the field elements in their natural integer encoding.
/// Throws std::invalid_argument unless d divides the multiplicative order,
/// -1 is a d-th power (so the colour of a - b equals that of b - a), the
/// binary polynomial is primitive, and labels are valid.
EdgeColouring build_coset_colouring(const CosetColouringSpec& spec);

/// Smallest primitive root modulo the prime p.
int primitive_root(int p);

}  // namespace gswitch
