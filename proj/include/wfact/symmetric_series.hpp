#pragma once

// Generating functions for transposition factorizations in S_n, as Laurent
// polynomials in X = e^z.
//  - all factorizations: (1/n!) sum_lambda f_lambda chi_lambda(mu) X^{content(lambda)}
//  - full (= transitive) ones: subtract, over every proper coarsening P of the
//    orbit partition, the product of full series of the blocks.
//  - full series of the identity: the Dubrovin-Yang-Zagier recursion, an
//    independent route used as a cross-check.

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "wfact/laurent.hpp"
#include "wfact/partitions.hpp"

namespace wfact {

inline constexpr int max_frobenius_n = 9;
inline constexpr int max_full_sn_n = 7;

inline LaurentPoly frobenius_series_sn(const IntegerPartition& mu) {
  const int n = mu.size();
  if (n < 1 || n > max_frobenius_n)
    throw capability_error("frobenius_series_sn: n=" + std::to_string(n) + " outside guard 1..." +
                           std::to_string(max_frobenius_n));
  LaurentPoly acc;
  for (const auto& lambda : integer_partitions(n)) {
    auto chi = mn_character(lambda, mu);
    if (chi == 0) continue;
    Rational c(hook_dimension(lambda) * BigInt(static_cast<long>(chi)));
    acc += LaurentPoly::monomial(c, static_cast<int>(content_sum(lambda)));
  }
  return acc / Rational(factorial(static_cast<unsigned>(n)));
}

/// Full series by cycle type; memoized because it only depends on the type.
inline LaurentPoly full_series_sn_by_type(const IntegerPartition& lambda) {
  const int n = lambda.size();
  if (n < 1 || n > max_full_sn_n)
    throw capability_error("full_series_sn: n=" + std::to_string(n) + " outside guard 1..." +
                           std::to_string(max_full_sn_n));
  if (n == 1) return LaurentPoly(1);

  static std::recursive_mutex mutex;
  static std::map<IntegerPartition, LaurentPoly> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(lambda); it != cache.end()) return it->second;

  // Canonical permutation of this type with consecutive cycles.
  std::vector<int> perm(static_cast<std::size_t>(n));
  int start = 0;
  for (int len : lambda.parts) {
    for (int t = 0; t < len; ++t) perm[static_cast<std::size_t>(start + t)] = start + (t + 1) % len;
    start += len;
  }
  const auto orbits = orbit_partition(perm);

  LaurentPoly result = frobenius_series_sn(lambda);
  for (const auto& coarse : set_partitions(n)) {
    if (coarse.blocks.size() == 1 || !refines(orbits, coarse)) continue;
    LaurentPoly product(1);
    for (const auto& block : coarse.blocks)
      product *= full_series_sn_by_type(cycle_type(restrict_perm(perm, block)));
    result -= product;
  }
  cache.emplace(lambda, result);
  return result;
}

/// Full series of a permutation given as a 0-based image table.
inline LaurentPoly full_series_sn(const std::vector<int>& perm) {
  return full_series_sn_by_type(cycle_type(perm));
}

/// n^2(n-1) F_n = sum_{k=1}^{n-1} k (n-k)^2 C(n,k) (X^k - 2 + X^-k) F_k F_{n-k},
/// seeded with F_1 = 1.
inline LaurentPoly dyz_identity_series(int n) {
  if (n < 1) throw argument_error("dyz_identity_series: n must be >= 1");
  static std::mutex mutex;
  static std::vector<LaurentPoly> table{LaurentPoly(), LaurentPoly(1)};
  std::lock_guard lock(mutex);
  while (static_cast<int>(table.size()) <= n) {
    const int size = static_cast<int>(table.size());
    LaurentPoly acc;
    for (int k = 1; k < size; ++k) {
      const LaurentPoly kernel = LaurentPoly::x(k) + LaurentPoly::x(-k) - LaurentPoly(2);
      BigInt binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(size), static_cast<unsigned long>(k));
      Rational weight(binom * k * (size - k) * (size - k));
      acc += kernel * table[static_cast<std::size_t>(k)] * table[static_cast<std::size_t>(size - k)] * weight;
    }
    table.push_back(acc / Rational(size * size * (size - 1)));
  }
  return table[static_cast<std::size_t>(n)];
}

}  // namespace wfact
