#pragma once

#include <vector>

namespace gswitch {

/// Exponent vectors (k_1..k_n) of C_m^n that fix every m-colouring of K_n,
/// sorted lexicographically.
///
/// For n >= 3 this is {0} when m is odd and {0, (m/2,...,m/2)} when m is
/// even. Smaller n has a larger kernel (one congruence or none), so it is
/// computed by applying every exponent vector to every colouring.
std::vector<std::vector<int>> kernel_of_switch_action(int m, int n);

}  // namespace gswitch
