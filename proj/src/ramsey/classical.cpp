#include "gswitch/ramsey/classical.hpp"

#include <algorithm>

namespace gswitch {

namespace {

std::string join(const std::vector<int>& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    s += (i ? "," : "") + std::to_string(t[i]);
  }
  return s;
}

}  // namespace

std::string ClassicalEntry::describe() const {
  std::string head = "R(" + join(target) + ")";
  if (exact()) return head + "=" + std::to_string(lo);
  return head + " in [" + std::to_string(lo) + "," + std::to_string(hi) + "]";
}

const std::vector<ClassicalEntry>& classical_table() {
  static const std::vector<ClassicalEntry> table = {
      {{3, 3}, 6, 6, "Greenwood and Gleason, Canad. J. Math. 7 (1955)"},
      {{3, 4}, 9, 9, "Greenwood and Gleason, Canad. J. Math. 7 (1955)"},
      {{4, 4}, 18, 18, "Greenwood and Gleason, Canad. J. Math. 7 (1955)"},
      {{4, 5}, 25, 25, "McKay and Radziszowski, J. Graph Theory 19 (1995)"},
      {{3, 3, 3}, 17, 17, "Greenwood and Gleason, Canad. J. Math. 7 (1955)"},
      {{3, 3, 3, 3}, 51, 62,
       "lower: Chung, Discrete Math. 5 (1973); upper: Fettes, Kramer and "
       "Radziszowski, Ars Combin. 72 (2004)"},
  };
  return table;
}

std::vector<int> normalise_classical(std::vector<int> target) {
  if (std::any_of(target.begin(), target.end(), [](int a) { return a <= 1; })) {
    return {1};
  }
  target.erase(std::remove(target.begin(), target.end(), 2), target.end());
  std::sort(target.begin(), target.end());
  return target;
}

std::optional<ClassicalEntry> classical_lookup(const std::vector<int>& target) {
  std::vector<int> t = normalise_classical(target);
  if (t == std::vector<int>{1}) {
    return ClassicalEntry{t, 1, 1, "convention: a K_1 is always present"};
  }
  if (t.empty()) {
    return ClassicalEntry{t, 2, 2, "convention: any edge is a K_2 of its colour"};
  }
  if (t.size() == 1) {
    return ClassicalEntry{t, t[0], t[0], "convention: one colour needs a_1 vertices"};
  }
  for (const auto& e : classical_table()) {
    if (e.target == t) return e;
  }
  return std::nullopt;
}

}  // namespace gswitch
