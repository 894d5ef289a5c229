#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

namespace oracle {

Matrix matrix_of(int n, const std::vector<int>& upper) {
  Matrix g(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      g[i][j] = g[j][i] = upper[k++];
    }
  }
  return g;
}

std::vector<int> upper_of(const Matrix& g) {
  std::vector<int> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) out.push_back(g[i][j]);
  }
  return out;
}

std::vector<Perm> closure(int m, const std::vector<Perm>& generators) {
  Perm id(static_cast<std::size_t>(m));
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> seen{id};
  std::deque<Perm> todo{id};
  while (!todo.empty()) {
    Perm x = todo.front();
    todo.pop_front();
    for (const auto& g : generators) {
      Perm y(static_cast<std::size_t>(m));
      for (int c = 0; c < m; ++c) y[c] = g[x[c]];
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

Matrix switch_vertex(const Matrix& g, int v, const Perm& p) {
  Matrix h = g;
  for (std::size_t u = 0; u < g.size(); ++u) {
    if (static_cast<int>(u) == v) continue;
    h[u][v] = h[v][u] = p[g[u][v]];
  }
  return h;
}

std::set<std::vector<int>> orbit(const Matrix& g, const std::vector<Perm>& elements) {
  std::set<std::vector<int>> seen{upper_of(g)};
  std::deque<Matrix> todo{g};
  const int n = static_cast<int>(g.size());
  while (!todo.empty()) {
    Matrix x = todo.front();
    todo.pop_front();
    for (int v = 0; v < n; ++v) {
      for (const auto& p : elements) {
        Matrix y = switch_vertex(x, v, p);
        if (seen.insert(upper_of(y)).second) todo.push_back(y);
      }
    }
  }
  return seen;
}

bool has_mono(const Matrix& g, int c, int k) {
  const int n = static_cast<int>(g.size());
  if (k > n) return false;
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::function<bool(int, int)> rec = [&](int depth, int from) {
    if (depth == k) return true;
    for (int v = from; v < n; ++v) {
      bool ok = true;
      for (int i = 0; i < depth; ++i) ok = ok && g[pick[i]][v] == c;
      if (!ok) continue;
      pick[depth] = v;
      if (rec(depth + 1, v + 1)) return true;
    }
    return false;
  };
  return rec(0, 0);
}

bool orbit_contains(const Matrix& g, const std::vector<Perm>& elements,
                    const std::vector<int>& a) {
  const int n = static_cast<int>(g.size());
  for (const auto& x : orbit(g, elements)) {
    Matrix h = matrix_of(n, x);
    for (std::size_t c = 0; c < a.size(); ++c) {
      if (has_mono(h, static_cast<int>(c), a[c])) return true;
    }
  }
  return false;
}

bool solvable_mod(int m, int vars, const std::vector<std::vector<int>>& rows) {
  std::vector<int> x(static_cast<std::size_t>(vars), 0);
  while (true) {
    bool ok = true;
    for (const auto& r : rows) {
      long long s = 0;
      for (int j = 0; j < vars; ++j) s += static_cast<long long>(r[j]) * x[j];
      if (((s - r[vars]) % m + m) % m != 0) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
    int j = 0;
    while (j < vars && ++x[j] == m) x[j++] = 0;
    if (j == vars) return false;
  }
}

static std::vector<std::vector<int>> all_vectors(int base, int len) {
  std::vector<std::vector<int>> out;
  std::vector<int> x(static_cast<std::size_t>(len), 0);
  while (true) {
    out.push_back(x);
    int j = 0;
    while (j < len && ++x[j] == base) x[j++] = 0;
    if (j == len) return out;
  }
}

std::vector<std::vector<int>> cyclic_kernel(int m, int n) {
  std::vector<std::vector<int>> kernel;
  const int edges = n * (n - 1) / 2;
  auto colourings = all_vectors(m, edges);
  for (const auto& k : all_vectors(m, n)) {
    bool fixes_all = true;
    for (const auto& col : colourings) {
      Matrix g = matrix_of(n, col);
      Matrix h = g;
      for (int v = 0; v < n; ++v) {
        Perm rot(static_cast<std::size_t>(m));
        for (int c = 0; c < m; ++c) rot[c] = (c + k[v]) % m;
        h = switch_vertex(h, v, rot);
      }
      if (h != g) {
        fixes_all = false;
        break;
      }
    }
    if (fixes_all) kernel.push_back(k);
  }
  std::sort(kernel.begin(), kernel.end());
  return kernel;
}

std::uint64_t class_count(int n, int m, const std::vector<Perm>& elements) {
  const int edges = n * (n - 1) / 2;
  std::set<std::vector<int>> covered;
  std::uint64_t classes = 0;
  for (const auto& col : all_vectors(m, edges)) {
    if (covered.count(col)) continue;
    ++classes;
    auto o = orbit(matrix_of(n, col), elements);
    covered.insert(o.begin(), o.end());
  }
  return classes;
}

bool self_isomorphic(const Matrix& g, const std::vector<Perm>& elements) {
  const int n = static_cast<int>(g.size());
  auto base = upper_of(g);
  for (const auto& x : orbit(g, elements)) {
    if (x == base) continue;
    Matrix h = matrix_of(n, x);
    std::vector<int> f(static_cast<std::size_t>(n));
    std::iota(f.begin(), f.end(), 0);
    do {
      bool ok = true;
      for (int u = 0; u < n && ok; ++u) {
        for (int v = u + 1; v < n && ok; ++v) ok = h[u][v] == g[f[u]][f[v]];
      }
      if (ok) return true;
    } while (std::next_permutation(f.begin(), f.end()));
  }
  return false;
}

bool vertex_in_mono(const Matrix& g, const std::vector<Perm>& elements, int v, int k) {
  const int n = static_cast<int>(g.size());
  for (const auto& x : orbit(g, elements)) {
    Matrix h = matrix_of(n, x);
    for (int c = 0; c < static_cast<int>(elements.front().size()); ++c) {
      // Restrict to v's c-neighbours plus v.
      std::vector<int> nb;
      for (int u = 0; u < n; ++u) {
        if (u != v && h[u][v] == c) nb.push_back(u);
      }
      Matrix sub(nb.size(), std::vector<int>(nb.size(), -1));
      for (std::size_t i = 0; i < nb.size(); ++i) {
        for (std::size_t j = 0; j < nb.size(); ++j) {
          if (i != j) sub[i][j] = h[nb[i]][nb[j]];
        }
      }
      if (k == 1 || has_mono(sub, c, k - 1)) return true;
    }
  }
  return false;
}

bool classical_holds(int n, const std::vector<int>& a) {
  const int m = static_cast<int>(a.size());
  for (const auto& col : all_vectors(m, n * (n - 1) / 2)) {
    Matrix g = matrix_of(n, col);
    bool found = false;
    for (int c = 0; c < m && !found; ++c) found = has_mono(g, c, a[c]);
    if (!found) return false;
  }
  return true;
}

}  // namespace oracle
