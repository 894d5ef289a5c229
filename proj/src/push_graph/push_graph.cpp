#include "gswitch/push_graph/push_graph.hpp"

#include <stdexcept>
#include <string>

namespace gswitch {

namespace {

void check_inputs(const EdgeColouring& g, const ColourGroup& group) {
  if (group.degree() != g.m()) {
    throw std::invalid_argument("group degree differs from colour count");
  }
  if (!action_properties(group).abelian) {
    throw std::invalid_argument("push graphs need an abelian group, got " +
                                group.name());
  }
}

bool has_mono_triangle(const std::vector<std::vector<int>>& c, int upto_i,
                       int upto_j) {
  // Triangles among pairs already coloured: (a,b) precedes (upto_i, upto_j).
  int k = static_cast<int>(c.size());
  auto coloured = [&](int a, int b) {
    return a < upto_i || (a == upto_i && b <= upto_j);
  };
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      for (int d = b + 1; d < k; ++d) {
        if (!coloured(a, b) || !coloured(a, d) || !coloured(b, d)) continue;
        auto ab = c[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        if (ab == c[static_cast<std::size_t>(a)][static_cast<std::size_t>(d)] &&
            ab == c[static_cast<std::size_t>(b)][static_cast<std::size_t>(d)]) {
          return true;
        }
      }
    }
  }
  return false;
}

void set(std::vector<std::vector<int>>& c, int i, int j, int colour) {
  c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = colour;
  c[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = colour;
}

bool extend(const PushGraph& p, int colour, int size, std::vector<int>& chosen,
            const std::vector<int>& cand) {
  if (static_cast<int>(chosen.size()) == size) return true;
  int need = size - static_cast<int>(chosen.size());
  for (std::size_t i = 0; i < cand.size(); ++i) {
    if (static_cast<int>(cand.size() - i) < need) return false;
    int x = cand[i];
    std::vector<int> next;
    for (std::size_t j = i + 1; j < cand.size(); ++j) {
      if (p.colour(x, cand[j]) == colour) next.push_back(cand[j]);
    }
    chosen.push_back(x);
    if (extend(p, colour, size, chosen, next)) return true;
    chosen.pop_back();
  }
  return false;
}

std::optional<std::vector<int>> clique_from(const PushGraph& p, int colour,
                                            int size, int first) {
  std::vector<int> chosen{first};
  if (size == 1) return chosen;
  std::vector<int> cand;
  for (int y = first + 1; y < p.vertices(); ++y) {
    if (p.colour(first, y) == colour) cand.push_back(y);
  }
  if (extend(p, colour, size, chosen, cand)) return chosen;
  return std::nullopt;
}

}  // namespace

PushGraph build_push(const EdgeColouring& g, const ColourGroup& group) {
  check_inputs(g, group);
  PushGraph p;
  p.base_n_ = g.n();
  p.m_ = g.m();
  p.copies_ = static_cast<int>(group.order());
  const auto v = static_cast<std::size_t>(p.vertices());
  p.adj_.assign(v * v, static_cast<signed char>(PushGraph::kNoEdge));
  for (int x = 0; x < p.vertices(); ++x) {
    for (int y = 0; y < p.vertices(); ++y) {
      int k = p.base_of(x), l = p.base_of(y);
      if (k == l) continue;
      auto gi = static_cast<std::size_t>(p.copy_of(x));
      auto gj = static_cast<std::size_t>(p.copy_of(y));
      p.adj_[static_cast<std::size_t>(x) * v + static_cast<std::size_t>(y)] =
          static_cast<signed char>(group.act(gi, group.act(gj, g.colour(k, l))));
    }
  }
  return p;
}

std::vector<std::vector<int>> star_scheme(int copies, int m) {
  std::vector<std::vector<int>> c(static_cast<std::size_t>(copies),
                                  std::vector<int>(static_cast<std::size_t>(copies), -1));
  for (int i = 0; i < copies; ++i) {
    for (int j = i + 1; j < copies; ++j) set(c, i, j, (i + j) % m);
  }
  if (!has_mono_triangle(c, copies, copies)) return c;

  for (int i = 0; i < copies; ++i) {
    for (int j = i + 1; j < copies; ++j) {
      bool placed = false;
      for (int colour = 0; colour < m && !placed; ++colour) {
        set(c, i, j, colour);
        placed = !has_mono_triangle(c, i, j);
      }
      if (!placed) {
        throw std::runtime_error(
            "no star colouring of K_" + std::to_string(copies) + " with " +
            std::to_string(m) + " colours avoids monochromatic triangles");
      }
    }
  }
  return c;
}

PushGraph build_push_star(const EdgeColouring& g, const ColourGroup& group) {
  if (group.order() < 2) {
    throw std::invalid_argument("starred push graph needs a group of order >= 2");
  }
  PushGraph p = build_push(g, group);
  auto scheme = star_scheme(p.copies(), p.m());
  if (has_mono_triangle(scheme, p.copies(), p.copies())) {
    throw std::runtime_error("star colouring failed validation");
  }
  const auto v = static_cast<std::size_t>(p.vertices());
  for (int k = 0; k < p.base_n(); ++k) {
    for (int i = 0; i < p.copies(); ++i) {
      for (int j = 0; j < p.copies(); ++j) {
        if (i == j) continue;
        auto x = static_cast<std::size_t>(p.vertex(k, i));
        auto y = static_cast<std::size_t>(p.vertex(k, j));
        p.adj_[x * v + y] = static_cast<signed char>(
            scheme[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      }
    }
  }
  p.starred_ = true;
  return p;
}

std::optional<PushClique> push_mono_clique(const PushGraph& p, int size,
                                           int colour,
                                           kernels::Parallelism par) {
  if (size < 1) throw std::invalid_argument("clique size must be at least 1");
  if (colour < 0 || colour >= p.m()) {
    throw std::invalid_argument("colour out of range");
  }
  if (size > p.vertices()) return std::nullopt;
  auto hit = kernels::first_hit_parallel(
      static_cast<std::uint64_t>(p.vertices()),
      [&] {
        return [&](std::uint64_t x) {
          return clique_from(p, colour, size, static_cast<int>(x)).has_value();
        };
      },
      par, 1);
  if (!hit) return std::nullopt;
  return PushClique{*clique_from(p, colour, size, static_cast<int>(*hit)), colour};
}

std::optional<PushClique> push_mono_clique(const PushGraph& p, int size,
                                           kernels::Parallelism par) {
  for (int c = 0; c < p.m(); ++c) {
    if (auto q = push_mono_clique(p, size, c, par)) return q;
  }
  return std::nullopt;
}

bool uses_star_edge(const PushGraph& p, const PushClique& clique) {
  for (std::size_t i = 0; i < clique.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < clique.vertices.size(); ++j) {
      if (p.is_star_edge(clique.vertices[i], clique.vertices[j])) return true;
    }
  }
  return false;
}

CopyClique extract_copy_clique(const PushGraph& p, const ColourGroup& group,
                               const PushClique& clique, int a) {
  if (static_cast<int>(group.order()) != p.copies()) {
    throw std::invalid_argument("group order differs from copy count");
  }
  if (a < 1 ||
      static_cast<long long>(clique.vertices.size()) <
          static_cast<long long>(p.copies()) * a) {
    throw std::invalid_argument("clique has fewer than copies*a vertices");
  }
  if (uses_star_edge(p, clique)) {
    throw std::invalid_argument("clique uses star edges");
  }
  for (std::size_t i = 0; i < clique.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < clique.vertices.size(); ++j) {
      if (p.colour(clique.vertices[i], clique.vertices[j]) != clique.colour) {
        throw std::invalid_argument("clique is not monochromatic");
      }
    }
  }
  std::vector<std::vector<int>> by_copy(static_cast<std::size_t>(p.copies()));
  for (int x : clique.vertices) {
    by_copy[static_cast<std::size_t>(p.copy_of(x))].push_back(p.base_of(x));
  }
  for (int i = 0; i < p.copies(); ++i) {
    auto& verts = by_copy[static_cast<std::size_t>(i)];
    if (static_cast<int>(verts.size()) < a) continue;
    verts.resize(static_cast<std::size_t>(a));
    // Inside copy i an edge of colour c in G shows as γ_i(γ_i(c)).
    auto gi = static_cast<std::size_t>(i);
    int base_colour = -1;
    for (int c = 0; c < p.m(); ++c) {
      if (group.act(gi, group.act(gi, c)) == clique.colour) base_colour = c;
    }
    return CopyClique{i, verts, base_colour};
  }
  throw std::logic_error("pigeonhole extraction found no full copy");
}

}  // namespace gswitch
