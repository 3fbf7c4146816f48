#pragma once

// Simultaneous (Aberth-Ehrlich) root finding for the Phi polynomials. This is
// the only inexact computation in the library and only feeds plots.

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "wfact/laurent.hpp"

namespace wfact {

struct RootOptions {
  double tolerance = 1e-10;
  int max_iterations = 500;
  unsigned polish_bits = 320;  ///< mpf precision of the refinement pass; 0 skips it
  int polish_iterations = 60;
};

struct RootResult {
  std::vector<std::complex<double>> roots;
  int iterations = 0;
  double worst_residual = 0;  ///< max backward error over all roots
};

namespace detail {

using cld = std::complex<long double>;

// Horner value and derivative, plus sum |c_i| |x|^i for the backward-error scale.
inline void horner(const std::vector<long double>& c, cld x, cld& value, cld& deriv, long double& scale) {
  value = 0;
  deriv = 0;
  scale = 0;
  const long double ax = std::abs(x);
  for (std::size_t i = c.size(); i-- > 0;) {
    deriv = deriv * x + value;
    value = value * x + c[i];
    scale = scale * ax + std::fabs(c[i]);
  }
}

struct mpc {
  mpf_class re, im;
};

inline mpc mul(const mpc& a, const mpc& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline mpc sub(const mpc& a, const mpc& b) { return {a.re - b.re, a.im - b.im}; }
inline mpc div(const mpc& a, const mpc& b) {
  mpf_class den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}
inline mpf_class norm1(const mpc& a) { return abs(a.re) + abs(a.im); }

// Aberth iterations on exact coefficients at high precision, starting from
// converged low-precision roots. Clustered roots need this: their forward
// error in long double is far above the backward error.
inline void polish(const std::vector<mpf_class>& c, std::vector<cld>& z, unsigned bits, int iterations) {
  const auto n = z.size();
  // gmpxx temporaries take the default precision; raise it for the duration.
  const auto saved_prec = mpf_get_default_prec();
  mpf_set_default_prec(bits);
  std::vector<mpc> w(n);
  for (std::size_t i = 0; i < n; ++i)
    w[i] = {mpf_class(static_cast<double>(z[i].real()), bits), mpf_class(static_cast<double>(z[i].imag()), bits)};
  mpf_class threshold(1, bits);
  mpf_div_2exp(threshold.get_mpf_t(), threshold.get_mpf_t(), bits / 2);
  for (int it = 0; it < iterations; ++it) {
    mpf_class worst(0, bits);
    for (std::size_t i = 0; i < n; ++i) {
      mpc value{mpf_class(0, bits), mpf_class(0, bits)}, deriv{mpf_class(0, bits), mpf_class(0, bits)};
      for (std::size_t k = c.size(); k-- > 0;) {
        deriv = mul(deriv, w[i]);
        deriv.re += value.re;
        deriv.im += value.im;
        value = mul(value, w[i]);
        value.re += c[k];
      }
      if (value.re == 0 && value.im == 0) continue;
      mpc ratio = div(value, deriv);
      mpc sum{mpf_class(0, bits), mpf_class(0, bits)};
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        mpc inv = div(mpc{mpf_class(1, bits), mpf_class(0, bits)}, sub(w[i], w[j]));
        sum.re += inv.re;
        sum.im += inv.im;
      }
      mpc denom = sub(mpc{mpf_class(1, bits), mpf_class(0, bits)}, mul(ratio, sum));
      mpc step = (denom.re == 0 && denom.im == 0) ? ratio : div(ratio, denom);
      w[i] = sub(w[i], step);
      mpf_class scale = norm1(w[i]);
      if (scale < 1) scale = 1;
      mpf_class rel = norm1(step) / scale;
      if (rel > worst) worst = rel;
    }
    if (worst < threshold) break;
  }
  for (std::size_t i = 0; i < n; ++i) z[i] = cld(w[i].re.get_d(), w[i].im.get_d());
  mpf_set_default_prec(saved_prec);
}

}  // namespace detail

/// All complex roots of an ordinary polynomial (min_deg >= 0, degree >= 1).
/// A root is accepted when |p(r)| / sum|c_i||r|^i <= tolerance.
inline RootResult find_roots(const LaurentPoly& phi, RootOptions opts = {}) {
  using detail::cld;
  if (phi.is_zero() || phi.min_deg() < 0 || phi.max_deg() < 1)
    throw argument_error("find_roots: need an ordinary polynomial of degree >= 1");

  const int degree = phi.max_deg();
  std::vector<long double> c(static_cast<std::size_t>(degree) + 1, 0.0L);
  for (int k = phi.min_deg(); k <= degree; ++k) c[static_cast<std::size_t>(k)] = phi.coeff(k).get_d();
  const long double lead = c.back();
  for (auto& v : c) v /= lead;

  RootResult out;
  // X = 0 roots are exact; peel them off.
  std::size_t zeros = static_cast<std::size_t>(phi.min_deg());
  std::vector<long double> reduced(c.begin() + static_cast<std::ptrdiff_t>(zeros), c.end());
  const int n = static_cast<int>(reduced.size()) - 1;

  std::vector<cld> z(static_cast<std::size_t>(n));
  if (n > 0) {
    // Fujiwara bound: every root has |r| <= 2 max_i |c_{n-i}|^{1/i}.
    long double radius = 0;
    for (int i = 1; i <= n; ++i)
      radius = std::max(radius, std::pow(std::fabs(reduced[static_cast<std::size_t>(n - i)]), 1.0L / i));
    radius = radius > 0 ? 2 * radius : 1;
    for (int i = 0; i < n; ++i) {
      long double angle = 2 * std::numbers::pi_v<long double> * (i + 0.25L) / n + 0.4L;
      z[static_cast<std::size_t>(i)] = std::polar(radius, angle);
    }
  }

  std::vector<bool> done(z.size(), false);
  cld value, deriv;
  long double scale;
  int iter = 0;
  for (; iter < opts.max_iterations; ++iter) {
    bool all_done = true;
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (done[i]) continue;
      detail::horner(reduced, z[i], value, deriv, scale);
      if (std::abs(value) <= opts.tolerance * 1e-3L * scale) {
        done[i] = true;
        continue;
      }
      all_done = false;
      cld ratio = value / deriv;
      cld sum = 0;
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != i) sum += 1.0L / (z[i] - z[j]);
      cld step = ratio / (1.0L - ratio * sum);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) step = ratio;
      z[i] -= step;
      if (std::abs(step) <= 1e-18L * std::max(1.0L, std::abs(z[i]))) done[i] = true;
    }
    if (all_done) break;
  }

  if (opts.polish_bits > 0 && n > 0) {
    std::vector<mpf_class> exact;
    const Rational lead_exact = phi.leading();
    for (int k = static_cast<int>(zeros); k <= degree; ++k) {
      exact.emplace_back(Rational(phi.coeff(k) / lead_exact), opts.polish_bits);
    }
    detail::polish(exact, z, opts.polish_bits, opts.polish_iterations);
  }

  double worst = 0;
  for (const auto& r : z) {
    detail::horner(reduced, r, value, deriv, scale);
    worst = std::max(worst, static_cast<double>(std::abs(value) / scale));
  }
  out.iterations = iter;
  out.worst_residual = worst;
  if (worst > opts.tolerance)
    throw numeric_error("find_roots: no convergence after " + std::to_string(iter) +
                        " iterations; best backward error " + std::to_string(worst));
  for (std::size_t i = 0; i < zeros; ++i) out.roots.emplace_back(0.0, 0.0);
  for (const auto& r : z) out.roots.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
  return out;
}

}  // namespace wfact
