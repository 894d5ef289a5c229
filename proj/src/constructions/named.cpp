#include "gswitch/constructions/named.hpp"

#include <stdexcept>

#include "gswitch/constructions/coset.hpp"
#include "gswitch/ramsey/verify.hpp"

namespace gswitch {

namespace {

EdgeColouring paper_k6() {
  EdgeColouring g = EdgeColouring::monochromatic(6, 4, 0);
  for (int i = 0; i < 5; ++i) {
    g = g.with_colour(i, (i + 1) % 5, 1);
    g = g.with_colour(i, (i + 2) % 5, 3);
  }
  if (!avoids_target(g, RamseyTarget({3, 4, 3, 4}))) {
    throw std::runtime_error("paper-k6 contains a target clique");
  }
  return g;
}

EdgeColouring triangle_free(EdgeColouring g, const char* name) {
  if (scan_triangles(g).monochromatic != 0) {
    throw std::runtime_error(std::string(name) + " has a monochromatic triangle");
  }
  return g;
}

}  // namespace

TriangleScan scan_triangles(const EdgeColouring& g) {
  TriangleScan s;
  for (int a = 0; a < g.n(); ++a) {
    for (int b = a + 1; b < g.n(); ++b) {
      int ab = g.colour(a, b);
      for (int c = b + 1; c < g.n(); ++c) {
        ++s.triangles;
        if (g.colour(a, c) == ab && g.colour(b, c) == ab) ++s.monochromatic;
      }
    }
  }
  return s;
}

EdgeColouring named_construction(const std::string& name) {
  if (name == "paper-k6") return paper_k6();
  if (name == "gg16") {
    CosetColouringSpec spec;
    spec.field = CosetColouringSpec::Field::binary;
    spec.size_parameter = 4;
    spec.polynomial = 0b10011;
    spec.d = 3;
    return triangle_free(build_coset_colouring(spec), "gg16");
  }
  if (name == "gg41") {
    CosetColouringSpec spec;
    spec.size_parameter = 41;
    spec.d = 4;
    return triangle_free(build_coset_colouring(spec), "gg41");
  }
  std::string known;
  for (const auto& n : named_construction_names()) known += " " + n;
  throw std::invalid_argument("unknown construction '" + name + "'; known:" + known);
}

std::vector<std::string> named_construction_names() {
  return {"paper-k6", "gg16", "gg41"};
}

}  // namespace gswitch
