#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gswitch/core/colouring.hpp"

namespace gswitch {

struct TriangleScan {
  std::uint64_t triangles = 0;      // vertex triples examined
  std::uint64_t monochromatic = 0;  // of those, single-coloured
};

TriangleScan scan_triangles(const EdgeColouring& g);

/// "paper-k6": K_5 as the cycle 0-1-2-3-4 in colour 1 and the cycle
///   0-2-4-1-3 in colour 3, plus vertex 5 joined in colour 0 (m = 4).
/// "gg16": GF(16) (x^4 + x + 1) coloured by cubic cosets, 3 colours.
/// "gg41": Z_41 coloured by quartic cosets, 4 colours.
/// Each is validated when built; a failure throws std::runtime_error.
/// Unknown names throw std::invalid_argument.
EdgeColouring named_construction(const std::string& name);

std::vector<std::string> named_construction_names();

}  // namespace gswitch
