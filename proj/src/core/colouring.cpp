#include "gswitch/core/colouring.hpp"

#include <functional>
#include <stdexcept>
#include <string_view>

namespace gswitch {

namespace {

void check_shape(int n, int m) {
  if (n < 1) {
    throw std::invalid_argument("vertex count must be at least 1, got " +
                                std::to_string(n));
  }
  if (m < 2 || m > kMaxDegree) {
    throw std::invalid_argument("colour count must be in [2, " +
                                std::to_string(kMaxDegree) + "], got " +
                                std::to_string(m));
  }
}

}  // namespace

EdgeColouring::EdgeColouring(int n, int m) : n_(n), m_(m) {
  check_shape(n, m);
  colours_.assign(edge_count(n), 0);
}

EdgeColouring::EdgeColouring(int n, int m, std::vector<Colour> colours)
    : n_(n), m_(m), colours_(std::move(colours)) {
  check_shape(n, m);
  if (colours_.size() != edge_count(n)) {
    throw std::invalid_argument("expected " + std::to_string(edge_count(n)) +
                                " edge colours for n=" + std::to_string(n) +
                                ", got " + std::to_string(colours_.size()));
  }
  for (Colour c : colours_) {
    if (c >= m) {
      throw std::invalid_argument("edge colour " + std::to_string(c) +
                                  " out of range for m=" + std::to_string(m));
    }
  }
}

EdgeColouring EdgeColouring::monochromatic(int n, int m, int colour) {
  if (colour < 0 || colour >= m) {
    throw std::invalid_argument("colour " + std::to_string(colour) +
                                " out of range for m=" + std::to_string(m));
  }
  return EdgeColouring(n, m,
                       std::vector<Colour>(edge_count(n),
                                           static_cast<Colour>(colour)));
}

EdgeColouring EdgeColouring::with_colour(int u, int v, int colour) const {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw std::invalid_argument("invalid edge {" + std::to_string(u) + "," +
                                std::to_string(v) + "}");
  }
  if (colour < 0 || colour >= m_) {
    throw std::invalid_argument("colour out of range");
  }
  EdgeColouring g = *this;
  g.colours_[u < v ? edge_index(n_, u, v) : edge_index(n_, v, u)] =
      static_cast<Colour>(colour);
  return g;
}

EdgeColouring EdgeColouring::induced(std::span<const int> vertices) const {
  int k = static_cast<int>(vertices.size());
  std::vector<Colour> out;
  out.reserve(edge_count(k));
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      out.push_back(static_cast<Colour>(colour(vertices[i], vertices[j])));
    }
  }
  return EdgeColouring(k, m_, std::move(out));
}

EdgeColouring EdgeColouring::without_vertex(int v) const {
  if (v < 0 || v >= n_ || n_ < 2) {
    throw std::invalid_argument("cannot remove vertex " + std::to_string(v));
  }
  std::vector<int> keep;
  for (int u = 0; u < n_; ++u) {
    if (u != v) keep.push_back(u);
  }
  return induced(keep);
}

std::string EdgeColouring::key() const {
  std::string k;
  k.reserve(colours_.size() + 3);
  k.push_back(static_cast<char>(n_ >> 8));
  k.push_back(static_cast<char>(n_ & 0xff));
  k.push_back(static_cast<char>(m_));
  k.append(reinterpret_cast<const char*>(colours_.data()), colours_.size());
  return k;
}

std::size_t EdgeColouringHash::operator()(const EdgeColouring& g) const {
  auto c = g.colours();
  std::string_view bytes(reinterpret_cast<const char*>(c.data()), c.size());
  return std::hash<std::string_view>{}(bytes) ^
         (static_cast<std::size_t>(g.n()) << 8 | static_cast<std::size_t>(g.m()));
}

}  // namespace gswitch
