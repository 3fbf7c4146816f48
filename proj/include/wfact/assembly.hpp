#pragma once

// Full-factorization series of G(m,p,n) assembled from the symmetric-group
// series and the rank-one cyclic factor, plus the closed forms for the lowest
// order term (full reflection length and its coefficient).

#include <cstdint>
#include <string>

#include "wfact/cyclic_series.hpp"
#include "wfact/group.hpp"
#include "wfact/hurwitz.hpp"
#include "wfact/laurent.hpp"
#include "wfact/numtheory.hpp"
#include "wfact/symmetric_series.hpp"

namespace wfact {

/// (1/p^{n-1}) sum_{r | d} mu(r) r^{n+k-2} F^full_{S_n}(lambda)(X -> X^{p/r}),
/// for g in G(p,p,n) described by its cycle data. The trivial group G(p,p,1)
/// gives 1.
inline LaurentPoly series_ppn(int p, int n, const CycleData& cd) {
  if (p < 1 || n < 1) throw argument_error("series_ppn: p and n must be >= 1");
  int total = 0;
  for (int len : cd.lengths) total += len;
  if (total != n || cd.k != static_cast<int>(cd.lengths.size()) || cd.d < 1 || p % cd.d != 0)
    throw argument_error("series_ppn: cycle data inconsistent with G(" + std::to_string(p) + "," + std::to_string(p) +
                         "," + std::to_string(n) + ")");
  if (n == 1) return LaurentPoly(1);
  const auto sn = full_series_sn_by_type(IntegerPartition(cd.lengths));
  LaurentPoly acc;
  for (auto r : nt::divisors(static_cast<std::uint64_t>(cd.d))) {
    int mu = nt::moebius(r);
    if (mu == 0) continue;
    Rational weight = Rational(mu) * Rational(power(BigInt(static_cast<unsigned long>(r)), static_cast<unsigned>(n + cd.k - 2)));
    acc += sn.substitute_power(p / static_cast<int>(r)) * weight;
  }
  return acc / Rational(power(BigInt(p), static_cast<unsigned>(n - 1)));
}

/// The rank-one factor F^full_{m,p,1}(zeta_m^{wt(g)}), before z -> n z.
inline LaurentPoly cyclic_factor(const GroupParams& params, const CycleData& cd) {
  const auto N = static_cast<std::uint64_t>(params.m / params.p);
  const auto order = cyclic_element_order(static_cast<std::uint64_t>(params.m), static_cast<std::uint64_t>(params.p),
                                          static_cast<std::uint64_t>(cd.col));
  return cyclic_full_series(N, order);
}

/// F^full_{m,p,n}(g) = (1/m^{n-1}) * cyclic(X -> X^n) *
///   sum_{r | d} mu(r) r^{n+k-2} F^full_{S_n}(lambda)(X -> X^{m/r}).
inline LaurentPoly series_full(const GroupParams& params, const Element& g) {
  params.validate();
  const auto cd = cycle_data(g, params);
  if (params.n == 1) return cyclic_factor(params, cd);

  const auto sn = full_series_sn_by_type(IntegerPartition(cd.lengths));
  LaurentPoly sum;
  for (auto r : nt::divisors(static_cast<std::uint64_t>(cd.d))) {
    int mu = nt::moebius(r);
    if (mu == 0) continue;
    Rational weight = Rational(mu) * Rational(power(BigInt(static_cast<unsigned long>(r)),
                                                    static_cast<unsigned>(params.n + cd.k - 2)));
    sum += sn.substitute_power(params.m / static_cast<int>(r)) * weight;
  }
  sum /= Rational(power(BigInt(params.m), static_cast<unsigned>(params.n - 1)));
  if (!params.has_diagonal()) return sum;
  return sum * cyclic_factor(params, cd).substitute_power(params.n);
}

/// The two-factor form: (1/(m/p)^{n-1}) * series_ppn(pi_{m/p}(g))(X -> X^{m/p})
/// * cyclic(X -> X^n).
inline LaurentPoly series_full_factorized(const GroupParams& params, const Element& g) {
  params.validate();
  const auto cd = cycle_data(g, params);
  const int q = params.m / params.p;
  const GroupParams ppn(params.p, params.p, params.n);
  const auto projected = cycle_data(project(g, params, params.p), ppn);
  LaurentPoly left = series_ppn(params.p, params.n, projected).substitute_power(q) /
                     Rational(power(BigInt(q), static_cast<unsigned>(params.n - 1)));
  return left * cyclic_factor(params, cd).substitute_power(params.n);
}

namespace detail {

struct RankOneLowest {
  unsigned length;
  Rational coeff;
};

// In a cyclic group of order N: the identity of the trivial group needs nothing,
// a generator is one reflection, anything else is two generating reflections,
// counted by (N/R) phi(R) with R = N / order.
inline RankOneLowest rank_one_lowest(const GroupParams& params, const CycleData& cd) {
  const int N = params.m / params.p;
  if (N == 1) return {0, 1};
  if (cd.a == 1) return {1, 1};
  const auto a = static_cast<std::uint64_t>(cd.a);
  return {2, Rational(static_cast<long>(static_cast<std::uint64_t>(N) / a * nt::euler_phi(a)))};
}

}  // namespace detail

/// Length of the shortest full factorization, by case on (m = p, d = 1, a = 1).
inline unsigned full_length(const GroupParams& params, const Element& g) {
  params.validate();
  const auto cd = cycle_data(g, params);
  if (params.n == 1) return detail::rank_one_lowest(params, cd).length;
  const int base = params.n + cd.k;
  if (!params.has_diagonal()) return static_cast<unsigned>(cd.d == 1 ? base - 2 : base);
  int extra = (cd.a == 1 ? -1 : 0) + (cd.d == 1 ? 0 : 2);
  return static_cast<unsigned>(base + extra);
}

/// Number of shortest full factorizations, by the same case split.
inline Rational lead_coeff(const GroupParams& params, const Element& g) {
  params.validate();
  const auto cd = cycle_data(g, params);
  if (params.n == 1) return detail::rank_one_lowest(params, cd).coeff;

  const IntegerPartition lambda(cd.lengths);
  const Rational n = params.n;
  const int k = cd.k;
  const BigInt m = params.m;
  // Shared genus-dependent factor: H_0 when d = 1, m^2 J_2(d)/d^2 H_1 otherwise.
  Rational core;
  int lift = 0;
  if (cd.d == 1) {
    core = hurwitz_h0(lambda);
  } else {
    const auto d = static_cast<std::uint64_t>(cd.d);
    core = Rational(static_cast<long>(nt::jordan_j2(d))) / Rational(static_cast<long>(d * d)) * hurwitz_h1(lambda);
    lift = 2;
  }
  Rational value;
  if (!params.has_diagonal()) {
    value = Rational(power(m, static_cast<unsigned>(k - 1 + lift))) * core;
  } else if (cd.a == 1) {
    // n (n+k-1+lift) m^{k-1+lift}
    value = n * (n + k - 1 + lift) * Rational(power(m, static_cast<unsigned>(k - 1 + lift))) * core;
  } else {
    const auto a = static_cast<long>(cd.a);
    Rational cyclic = Rational(static_cast<long>(nt::euler_phi(static_cast<std::uint64_t>(a)))) /
                      Rational(static_cast<long>(params.p) * a);
    value = n * n * (n + k + lift) * (n + k - 1 + lift) * Rational(power(m, static_cast<unsigned>(k + lift))) / 2 *
            cyclic * core;
  }
  value.canonicalize();
  if (!is_integer(value))
    throw structural_error("lead_coeff: non-integer value " + to_string(value) + " for " + params.label());
  return value;
}

/// Phi(1) * ell! / #W.
inline Rational lead_from_phi(const LaurentPoly& phi, const BigInt& group_order, unsigned ell) {
  if (!phi.is_polynomial()) throw argument_error("lead_from_phi: phi must be a polynomial");
  if (group_order <= 0) throw argument_error("lead_from_phi: group order must be positive");
  Rational value = phi.at_one() * Rational(factorial(ell)) / Rational(group_order);
  value.canonicalize();
  return value;
}

}  // namespace wfact
