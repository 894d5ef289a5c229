#include "gswitch/core/switching.hpp"

#include <stdexcept>
#include <string>

namespace gswitch {

namespace {

void check_step(const EdgeColouring& g, int v, const Permutation& p) {
  if (v < 0 || v >= g.n()) {
    throw std::invalid_argument("switch vertex " + std::to_string(v) +
                                " out of range for n=" + std::to_string(g.n()));
  }
  if (p.degree() != g.m()) {
    throw std::invalid_argument("switch permutation has degree " +
                                std::to_string(p.degree()) + " but m=" +
                                std::to_string(g.m()));
  }
}

void switch_in_place(std::vector<Colour>& colours, int n, int v,
                     const Permutation& p) {
  for (int u = 0; u < v; ++u) {
    auto& c = colours[edge_index(n, u, v)];
    c = static_cast<Colour>(p(c));
  }
  for (int w = v + 1; w < n; ++w) {
    auto& c = colours[edge_index(n, v, w)];
    c = static_cast<Colour>(p(c));
  }
}

bool extend(const EdgeColouring& g, int colour, int size,
            std::vector<int>& chosen, int next) {
  if (static_cast<int>(chosen.size()) == size) return true;
  int needed = size - static_cast<int>(chosen.size());
  for (int v = next; v <= g.n() - needed; ++v) {
    bool ok = true;
    for (int u : chosen) {
      if (g.colour(u, v) != colour) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chosen.push_back(v);
    if (extend(g, colour, size, chosen, v + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

EdgeColouring switch_at(const EdgeColouring& g, int v, const Permutation& p) {
  check_step(g, v, p);
  std::vector<Colour> colours(g.colours().begin(), g.colours().end());
  switch_in_place(colours, g.n(), v, p);
  return EdgeColouring(g.n(), g.m(), std::move(colours));
}

EdgeColouring apply_sequence(const EdgeColouring& g,
                             const SwitchingSequence& s) {
  for (const auto& step : s.steps) check_step(g, step.vertex, step.perm);
  std::vector<Colour> colours(g.colours().begin(), g.colours().end());
  for (const auto& step : s.steps) {
    switch_in_place(colours, g.n(), step.vertex, step.perm);
  }
  return EdgeColouring(g.n(), g.m(), std::move(colours));
}

std::optional<std::vector<int>> find_mono_clique(const EdgeColouring& g,
                                                 int colour, int size) {
  if (size < 1) {
    throw std::invalid_argument("clique size must be at least 1");
  }
  if (size > g.n()) return std::nullopt;
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(size));
  if (extend(g, colour, size, chosen, 0)) return chosen;
  return std::nullopt;
}

bool witness_holds(const EdgeColouring& g, const CliqueWitness& w) {
  EdgeColouring h = apply_sequence(g, w.sequence);
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < w.vertices.size(); ++j) {
      if (h.colour(w.vertices[i], w.vertices[j]) != w.colour) return false;
    }
  }
  return true;
}

EdgeColouring apex(const EdgeColouring& g, int colour) {
  if (colour < 0 || colour >= g.m()) {
    throw std::invalid_argument("apex colour " + std::to_string(colour) +
                                " out of range for m=" + std::to_string(g.m()));
  }
  int n = g.n() + 1;
  std::vector<Colour> colours;
  colours.reserve(edge_count(n));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      colours.push_back(v == n - 1 ? static_cast<Colour>(colour)
                                   : static_cast<Colour>(g.colour(u, v)));
    }
  }
  return EdgeColouring(n, g.m(), std::move(colours));
}

}  // namespace gswitch
