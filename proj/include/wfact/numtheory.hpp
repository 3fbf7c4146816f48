#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "wfact/errors.hpp"

namespace wfact::nt {

inline void require_positive(std::uint64_t n, const char* what) {
  if (n == 0) throw argument_error(std::string(what) + ": argument must be >= 1");
}

/// All positive divisors of n in increasing order.
inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  require_positive(n, "divisors");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// Prime factors of n without multiplicity, increasing.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  require_positive(n, "prime_factors");
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    out.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline int moebius(std::uint64_t n) {
  require_positive(n, "moebius");
  int sign = 1;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    n /= q;
    if (n % q == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (auto q : prime_factors(n)) result = result / q * (q - 1);
  return result;
}

/// Jordan's totient J_2(n) = sum_{d | n} mu(n/d) d^2.
inline std::uint64_t jordan_j2(std::uint64_t n) {
  std::int64_t acc = 0;
  for (auto d : divisors(n)) acc += moebius(n / d) * static_cast<std::int64_t>(d * d);
  return static_cast<std::uint64_t>(acc);
}

/// gcd of a list together with `base`; gcd(0, p) = p, so an empty or all-zero
/// list yields `base`.
inline std::uint64_t gcd_with(std::span<const std::uint64_t> values, std::uint64_t base) {
  std::uint64_t g = base;
  for (auto v : values) g = std::gcd(g, v);
  return g;
}

inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

}  // namespace wfact::nt
