#pragma once

// Rank-one groups G(m,p,1), cyclic of order N = m/p. Every non-identity element
// is a reflection, so the series only depend on N and the order o of the
// target element.

#include <cstdint>
#include <numeric>
#include <string>

#include "wfact/laurent.hpp"
#include "wfact/numtheory.hpp"

namespace wfact {

namespace detail {

inline void check_cyclic_args(std::uint64_t group_order, std::uint64_t element_order, const char* what) {
  nt::require_positive(group_order, what);
  nt::require_positive(element_order, what);
  if (group_order % element_order != 0)
    throw argument_error(std::string(what) + ": element order " + std::to_string(element_order) +
                         " does not divide group order " + std::to_string(group_order));
}

}  // namespace detail

/// (X^N + N - 1)/(N X) for the identity, (X^N - 1)/(N X) otherwise.
inline LaurentPoly cyclic_all_series(std::uint64_t group_order, std::uint64_t element_order) {
  detail::check_cyclic_args(group_order, element_order, "cyclic_all_series");
  if (group_order == 1) return LaurentPoly(1);
  const auto N = static_cast<int>(group_order);
  Rational constant = element_order == 1 ? Rational(N - 1) : Rational(-1);
  return (LaurentPoly::x(N - 1) + LaurentPoly::x(-1) * constant) / Rational(N);
}

/// ((X - 1)/X) sum_{o | r | N} mu(N/r) [r]_X / r, where (X - 1)[r]_X = X^r - 1.
inline LaurentPoly cyclic_full_series(std::uint64_t group_order, std::uint64_t element_order) {
  detail::check_cyclic_args(group_order, element_order, "cyclic_full_series");
  if (group_order == 1) return LaurentPoly(1);
  LaurentPoly acc;
  for (auto r : nt::divisors(group_order)) {
    if (r % element_order != 0) continue;
    int mu = nt::moebius(group_order / r);
    if (mu == 0) continue;
    const auto ri = static_cast<int>(r);
    acc += (LaurentPoly::x(ri - 1) - LaurentPoly::x(-1)) * (Rational(mu) / Rational(ri));
  }
  return acc;
}

/// Order of zeta_m^wt inside pZ/mZ: m / gcd(wt, m), with gcd(0, m) = m.
inline std::uint64_t cyclic_element_order(std::uint64_t m, std::uint64_t p, std::uint64_t wt) {
  nt::require_positive(m, "cyclic_element_order: m");
  nt::require_positive(p, "cyclic_element_order: p");
  if (m % p != 0) throw argument_error("cyclic_element_order: p does not divide m");
  if (wt % p != 0)
    throw argument_error("cyclic_element_order: weight " + std::to_string(wt) + " is not a multiple of p=" +
                         std::to_string(p));
  return m / std::gcd(wt % m, m);
}

}  // namespace wfact
