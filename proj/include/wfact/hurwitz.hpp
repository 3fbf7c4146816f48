#pragma once

// Genus 0 and genus 1 single Hurwitz numbers by their closed formulas. Values
// are computed as rationals and checked to be integers on the way out.

#include <string>
#include <vector>

#include "wfact/laurent.hpp"
#include "wfact/partitions.hpp"

namespace wfact {

namespace detail {

inline void require_nonempty(const IntegerPartition& lambda, const char* what) {
  if (lambda.parts.empty()) throw argument_error(std::string(what) + ": empty partition");
}

/// prod_i lambda_i^lambda_i / (lambda_i - 1)!
inline Rational hurwitz_part_product(const IntegerPartition& lambda) {
  Rational prod = 1;
  for (int part : lambda.parts)
    prod *= Rational(power(BigInt(part), static_cast<unsigned>(part))) /
            Rational(factorial(static_cast<unsigned>(part - 1)));
  return prod;
}

inline Rational require_integral(Rational value, const char* what, const IntegerPartition& lambda) {
  value.canonicalize();
  if (!is_integer(value))
    throw structural_error(std::string(what) + to_string(lambda) + " evaluated to non-integer " + to_string(value));
  return value;
}

}  // namespace detail

/// Elementary symmetric polynomials e_0..e_k of the parts.
inline std::vector<BigInt> elementary_symmetric(const IntegerPartition& lambda) {
  std::vector<BigInt> e(lambda.parts.size() + 1, 0);
  e[0] = 1;
  for (int part : lambda.parts)
    for (std::size_t i = e.size() - 1; i >= 1; --i) e[i] += e[i - 1] * part;
  return e;
}

/// H_0 = (n+k-2)! n^{k-3} prod lambda_i^lambda_i / (lambda_i - 1)!
inline Rational hurwitz_h0(const IntegerPartition& lambda) {
  detail::require_nonempty(lambda, "hurwitz_h0");
  const int n = lambda.size();
  const int k = lambda.length();
  Rational value = Rational(factorial(static_cast<unsigned>(n + k - 2))) * power(Rational(n), k - 3) *
                   detail::hurwitz_part_product(lambda);
  return detail::require_integral(value, "hurwitz_h0", lambda);
}

/// H_1 = (n+k)!/24 * prod(...) * (n^k - n^{k-1} - sum_{i=2}^k (i-2)! e_i n^{k-i})
inline Rational hurwitz_h1(const IntegerPartition& lambda) {
  detail::require_nonempty(lambda, "hurwitz_h1");
  const int n = lambda.size();
  const int k = lambda.length();
  const auto e = elementary_symmetric(lambda);
  BigInt bracket = power(BigInt(n), static_cast<unsigned>(k)) - power(BigInt(n), static_cast<unsigned>(k - 1));
  for (int i = 2; i <= k; ++i)
    bracket -= factorial(static_cast<unsigned>(i - 2)) * e[static_cast<std::size_t>(i)] *
               power(BigInt(n), static_cast<unsigned>(k - i));
  Rational value = Rational(factorial(static_cast<unsigned>(n + k))) / 24 * detail::hurwitz_part_product(lambda) *
                   Rational(bracket);
  return detail::require_integral(value, "hurwitz_h1", lambda);
}

}  // namespace wfact
