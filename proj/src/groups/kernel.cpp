#include "gswitch/groups/kernel.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gswitch/core/colouring.hpp"

namespace gswitch {

namespace {

bool next_vector(std::vector<int>& digits, int base) {
  for (auto& d : digits) {
    if (++d < base) return true;
    d = 0;
  }
  return false;
}

std::vector<std::vector<int>> kernel_by_action(int m, int n) {
  std::vector<std::vector<int>> kernel;
  std::size_t e = edge_count(n);
  std::vector<int> k(static_cast<std::size_t>(n), 0);
  do {
    bool fixes_all = true;
    std::vector<int> colours(e, 0);
    do {
      std::size_t idx = 0;
      for (int i = 0; i < n && fixes_all; ++i) {
        for (int j = i + 1; j < n; ++j, ++idx) {
          int c = colours[idx];
          if ((c + k[static_cast<std::size_t>(i)] + k[static_cast<std::size_t>(j)]) % m != c) {
            fixes_all = false;
            break;
          }
        }
      }
    } while (fixes_all && next_vector(colours, m));
    if (fixes_all) kernel.push_back(k);
  } while (next_vector(k, m));
  // next_vector counts with the first digit fastest; sort to lexicographic.
  std::sort(kernel.begin(), kernel.end());
  return kernel;
}

}  // namespace

std::vector<std::vector<int>> kernel_of_switch_action(int m, int n) {
  if (m < 2) throw std::invalid_argument("kernel needs m >= 2");
  if (n < 1) throw std::invalid_argument("kernel needs n >= 1");
  if (n <= 2) return kernel_by_action(m, n);
  std::vector<std::vector<int>> kernel{std::vector<int>(static_cast<std::size_t>(n), 0)};
  if (m % 2 == 0) kernel.emplace_back(static_cast<std::size_t>(n), m / 2);
  return kernel;
}

}  // namespace gswitch
