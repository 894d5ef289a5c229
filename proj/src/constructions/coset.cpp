#include "gswitch/constructions/coset.hpp"

#include <stdexcept>
#include <string>

namespace gswitch {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

std::uint32_t gf2_mul(std::uint32_t a, std::uint32_t b, std::uint32_t poly, int k) {
  std::uint32_t r = 0;
  while (b) {
    if (b & 1u) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & (1u << k)) a ^= poly;
  }
  return r;
}

// log[x] for x in 1..q, from successive powers of `gen` under `mul`.
template <typename Mul>
std::vector<int> discrete_logs(int q, std::uint32_t gen, Mul mul) {
  std::vector<int> log(static_cast<std::size_t>(q) + 1, -1);
  std::uint32_t x = 1;
  for (int e = 0; e < q - 1; ++e) {
    if (log[x] != -1) return {};
    log[x] = e;
    x = mul(x, gen);
  }
  return x == 1 ? log : std::vector<int>{};
}

EdgeColouring colour_by_logs(int q, const std::vector<int>& log, int d,
                             const std::vector<int>& labels, bool binary, int p) {
  int m = 0;
  for (int l : labels) m = std::max(m, l + 1);
  std::vector<Colour> colours;
  colours.reserve(edge_count(q));
  for (int a = 0; a < q; ++a) {
    for (int b = a + 1; b < q; ++b) {
      int diff = binary ? (a ^ b) : ((b - a) % p + p) % p;
      colours.push_back(static_cast<Colour>(
          labels[static_cast<std::size_t>(log[static_cast<std::size_t>(diff)] % d)]));
    }
  }
  return EdgeColouring(q, m, std::move(colours));
}

}  // namespace

int primitive_root(int p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (p == 2) return 1;
  for (int g = 2; g < p; ++g) {
    long long x = 1;
    int order = 0;
    do {
      x = x * g % p;
      ++order;
    } while (x != 1);
    if (order == p - 1) return g;
  }
  throw std::logic_error("no primitive root found");
}

EdgeColouring build_coset_colouring(const CosetColouringSpec& spec) {
  const int d = spec.d;
  if (d < 2) throw std::invalid_argument("coset count d must be at least 2");
  std::vector<int> labels = spec.labels;
  if (labels.empty()) {
    for (int i = 0; i < d; ++i) labels.push_back(i);
  }
  if (static_cast<int>(labels.size()) != d) {
    throw std::invalid_argument("expected " + std::to_string(d) + " coset labels, got " +
                                std::to_string(labels.size()));
  }
  int m = 0;
  for (int l : labels) {
    if (l < 0) throw std::invalid_argument("negative coset label");
    m = std::max(m, l + 1);
  }
  if (m < 2 || m > kMaxDegree) {
    throw std::invalid_argument("coset labels must use between 2 and 16 colours");
  }

  if (spec.field == CosetColouringSpec::Field::prime) {
    const int p = spec.size_parameter;
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if ((p - 1) % d != 0) {
      throw std::invalid_argument(std::to_string(d) + " does not divide p-1=" +
                                  std::to_string(p - 1));
    }
    // -1 = g^((p-1)/2) is a d-th power iff d divides (p-1)/2.
    if (((p - 1) / 2) % d != 0) {
      throw std::invalid_argument("-1 is not a " + std::to_string(d) +
                                  "-th power mod " + std::to_string(p) +
                                  ", so the colour of a-b would differ from b-a");
    }
    const auto g = static_cast<std::uint32_t>(primitive_root(p));
    auto log = discrete_logs(p, g, [p](std::uint32_t a, std::uint32_t b) {
      return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b %
                                        static_cast<std::uint64_t>(p));
    });
    return colour_by_logs(p, log, d, labels, false, p);
  }

  const int k = spec.size_parameter;
  if (k < 1 || k > 8) throw std::invalid_argument("binary field exponent must be in [1, 8]");
  if ((spec.polynomial >> k) != 1u) {
    throw std::invalid_argument("reduction polynomial must have degree " + std::to_string(k));
  }
  const int q = 1 << k;
  if ((q - 1) % d != 0) {
    throw std::invalid_argument(std::to_string(d) + " does not divide 2^k-1=" +
                                std::to_string(q - 1));
  }
  // In characteristic 2, -1 = 1, which is always a d-th power.
  const std::uint32_t poly = spec.polynomial;
  auto mul = [poly, k](std::uint32_t a, std::uint32_t b) { return gf2_mul(a, b, poly, k); };
  for (std::uint32_t g = 2; g < static_cast<std::uint32_t>(q); ++g) {
    auto log = discrete_logs(q, g, mul);
    if (!log.empty()) return colour_by_logs(q, log, d, labels, true, 0);
  }
  throw std::invalid_argument("reduction polynomial is not primitive");
}

}  // namespace gswitch
