#pragma once

// Exact-rational Laurent polynomials in X = e^z and the bridge to exponential
// generating functions in z: a Laurent polynomial sum_k c_k X^k is the EGF
// whose coefficient of z^N/N! is sum_k c_k k^N.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wfact/errors.hpp"

namespace wfact {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Entry N is the coefficient of z^N/N!, i.e. the raw count for length N.
using EgfPrefix = std::vector<Rational>;

/// "num/den" with the denominator always present.
inline std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Accepts "a/b" or a bare integer "a".
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0)
    throw argument_error("malformed rational: '" + s + "'");
  if (q.get_den() == 0) throw argument_error("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

inline BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigInt power(const BigInt& base, unsigned exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Rational power(const Rational& base, int exp) {
  Rational r(power(base.get_num(), static_cast<unsigned>(exp < 0 ? -exp : exp)),
             power(base.get_den(), static_cast<unsigned>(exp < 0 ? -exp : exp)));
  if (exp < 0) {
    if (base == 0) throw argument_error("zero to a negative power");
    r = 1 / r;
  }
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

class LaurentPoly {
 public:
  LaurentPoly() = default;

  LaurentPoly(const Rational& c) : coeffs_{c} { trim(); }  // NOLINT: implicit constant

  LaurentPoly(int min_deg, std::vector<Rational> coeffs)
      : min_deg_(min_deg), coeffs_(std::move(coeffs)) {
    trim();
  }

  static LaurentPoly monomial(const Rational& c, int degree) { return {degree, {c}}; }
  static LaurentPoly x(int degree = 1) { return monomial(1, degree); }

  bool is_zero() const { return coeffs_.empty(); }

  /// Degree of the lowest stored monomial; 0 for the zero polynomial.
  int min_deg() const { return min_deg_; }
  int max_deg() const { return min_deg_ + static_cast<int>(coeffs_.size()) - 1; }

  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational coeff(int degree) const {
    if (is_zero() || degree < min_deg_ || degree > max_deg()) return 0;
    return coeffs_[static_cast<std::size_t>(degree - min_deg_)];
  }

  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

  LaurentPoly& operator+=(const LaurentPoly& other) { return accumulate(other, 1); }
  LaurentPoly& operator-=(const LaurentPoly& other) { return accumulate(other, -1); }

  LaurentPoly& operator*=(const Rational& c) {
    if (c == 0) {
      *this = LaurentPoly();
      return *this;
    }
    for (auto& v : coeffs_) v *= c;
    return *this;
  }

  LaurentPoly& operator/=(const Rational& c) {
    if (c == 0) throw argument_error("LaurentPoly divided by zero");
    for (auto& v : coeffs_) v /= c;
    return *this;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    Rational term;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        term = a.coeffs_[i] * b.coeffs_[j];
        out[i + j] += term;
      }
    }
    return {a.min_deg_ + b.min_deg_, std::move(out)};
  }

  LaurentPoly& operator*=(const LaurentPoly& other) { return *this = *this * other; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a) { return a *= Rational(-1); }
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  friend LaurentPoly operator/(LaurentPoly a, const Rational& c) { return a /= c; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.min_deg_ == b.min_deg_ && a.coeffs_ == b.coeffs_;
  }

  /// Multiply by X^k.
  LaurentPoly shifted(int k) const {
    if (is_zero()) return {};
    return {min_deg_ + k, coeffs_};
  }

  /// X -> X^c, i.e. z -> c*z on the EGF side.
  LaurentPoly substitute_power(int c) const {
    if (c < 1) throw argument_error("substitute_power: factor must be >= 1");
    if (is_zero() || c == 1) return *this;
    std::vector<Rational> out((coeffs_.size() - 1) * static_cast<std::size_t>(c) + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * static_cast<std::size_t>(c)] = coeffs_[i];
    return {min_deg_ * c, std::move(out)};
  }

  Rational evaluate(const Rational& x) const {
    if (is_zero()) return 0;
    if (x == 0 && min_deg_ < 0) throw argument_error("evaluate: pole at X = 0");
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc * power(x, min_deg_);
  }

  Rational at_one() const {
    Rational acc = 0;
    for (const auto& c : coeffs_) acc += c;
    return acc;
  }

  bool is_polynomial() const { return is_zero() || min_deg_ >= 0; }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

  /// Coefficient sequence reads the same in both directions.
  bool is_palindromic() const {
    return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
  }

 private:
  LaurentPoly& accumulate(const LaurentPoly& other, int sign) {
    if (other.is_zero()) return *this;
    if (is_zero()) {
      *this = other;
      if (sign < 0) *this *= Rational(-1);
      return *this;
    }
    int lo = std::min(min_deg_, other.min_deg_);
    int hi = std::max(max_deg(), other.max_deg());
    std::vector<Rational> out(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      out[i + static_cast<std::size_t>(min_deg_ - lo)] = coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
      auto& slot = out[i + static_cast<std::size_t>(other.min_deg_ - lo)];
      if (sign > 0)
        slot += other.coeffs_[i];
      else
        slot -= other.coeffs_[i];
    }
    min_deg_ = lo;
    coeffs_ = std::move(out);
    trim();
    return *this;
  }

  void trim() {
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; });
    if (first == coeffs_.end()) {
      coeffs_.clear();
      min_deg_ = 0;
      return;
    }
    auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](const Rational& c) { return c != 0; });
    coeffs_.erase(last.base(), coeffs_.end());
    min_deg_ += static_cast<int>(first - coeffs_.begin());
    coeffs_.erase(coeffs_.begin(), first);
  }

  int min_deg_ = 0;
  std::vector<Rational> coeffs_;
};

inline LaurentPoly pow(const LaurentPoly& base, unsigned exp) {
  LaurentPoly result(1);
  LaurentPoly b = base;
  while (exp) {
    if (exp & 1u) result *= b;
    exp >>= 1u;
    if (exp) b *= b;
  }
  return result;
}

/// Human-readable form, highest degree first: "1/6*X^2 - 1/3*X^-1".
inline std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.max_deg(); k >= p.min_deg(); --k) {
    Rational c = p.coeff(k);
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Rational a = abs(c);
    bool unit = (a == 1);
    if (!unit || k == 0) os << a.get_str();
    if (k != 0) {
      if (!unit) os << "*";
      os << "X";
      if (k != 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

// --- EGF bridge -------------------------------------------------------------

/// Coefficients of z^j/j! for j = 0..N (N+1 entries).
inline EgfPrefix egf_prefix(const LaurentPoly& p, std::size_t n) {
  EgfPrefix out(n + 1);
  if (p.is_zero()) return out;
  BigInt kpow;
  for (int k = p.min_deg(); k <= p.max_deg(); ++k) {
    Rational c = p.coeff(k);
    if (c == 0) continue;
    kpow = 1;
    for (std::size_t j = 0; j <= n; ++j) {
      out[j] += c * kpow;
      kpow *= k;
    }
  }
  return out;
}

namespace detail {

// Bareiss elimination of an integer augmented matrix (rows x (cols+1)), then
// rational back substitution. The system must be square and nonsingular.
inline std::vector<Rational> solve_fraction_free(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) throw reconstruction_error("singular Vandermonde system");
      std::swap(a[k], a[swap_row]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  std::vector<Rational> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rational acc(a[ii][n]);
    for (std::size_t j = ii + 1; j < n; ++j) acc -= Rational(a[ii][j]) * x[j];
    x[ii] = acc / Rational(a[ii][ii]);
  }
  return x;
}

}  // namespace detail

/// The unique Laurent polynomial supported on [min_deg, max_deg] whose EGF
/// prefix matches `prefix`. Surplus entries beyond the window width are
/// checked for consistency.
inline LaurentPoly laurent_from_egf(const EgfPrefix& prefix, int min_deg, int max_deg) {
  if (max_deg < min_deg) throw argument_error("laurent_from_egf: empty degree window");
  const auto width = static_cast<std::size_t>(max_deg - min_deg + 1);
  if (prefix.size() < width)
    throw argument_error("laurent_from_egf: prefix has " + std::to_string(prefix.size()) +
                         " entries, window needs " + std::to_string(width));

  BigInt denom = 1;
  for (std::size_t j = 0; j < width; ++j) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), prefix[j].get_den_mpz_t());

  std::vector<std::vector<BigInt>> aug(width, std::vector<BigInt>(width + 1));
  for (std::size_t i = 0; i < width; ++i) {
    BigInt node = min_deg + static_cast<int>(i);
    BigInt v = 1;
    for (std::size_t j = 0; j < width; ++j) {
      aug[j][i] = v;
      v *= node;
    }
  }
  for (std::size_t j = 0; j < width; ++j) {
    Rational scaled = prefix[j] * denom;
    aug[j][width] = scaled.get_num();
  }
  auto sol = detail::solve_fraction_free(std::move(aug));
  for (auto& c : sol) c /= denom;
  LaurentPoly result(min_deg, std::move(sol));

  auto check = egf_prefix(result, prefix.size() - 1);
  for (std::size_t j = width; j < prefix.size(); ++j) {
    if (check[j] != prefix[j])
      throw reconstruction_error("laurent_from_egf: surplus entry " + std::to_string(j) + " is " +
                                 to_string(prefix[j]) + " but window [" + std::to_string(min_deg) + ", " +
                                 std::to_string(max_deg) + "] predicts " + to_string(check[j]));
  }
  return result;
}

/// Divides by (X - 1) while the division is exact; returns the quotient and the
/// number of divisions. Synthetic division from the top coefficient.
inline std::pair<LaurentPoly, unsigned> strip_root_at_one(const LaurentPoly& p) {
  if (p.is_zero()) throw argument_error("strip_root_at_one: zero polynomial");
  std::vector<Rational> c = p.coeffs();
  int lo = p.min_deg();
  unsigned count = 0;
  while (c.size() > 1) {
    Rational sum = 0;
    for (const auto& v : c) sum += v;
    if (sum != 0) break;
    std::vector<Rational> q(c.size() - 1);
    q.back() = c.back();
    for (std::size_t i = q.size() - 1; i-- > 0;) q[i] = c[i + 1] + q[i + 1];
    c = std::move(q);
    ++count;
  }
  return {LaurentPoly(lo, std::move(c)), count};
}

struct LowestOrder {
  unsigned s = 0;  ///< multiplicity of the root X = 1 = lowest z-degree
  Rational c;      ///< coefficient of z^s/s! (a count when the series counts factorizations)
};

inline LowestOrder lowest_order(const LaurentPoly& p) {
  if (p.is_zero()) throw argument_error("lowest_order: zero polynomial");
  auto [quotient, s] = strip_root_at_one(p);
  // (X-1)^s = z^s + O(z^{s+1}), so [z^s] p = quotient(1).
  return {s, quotient.at_one() * Rational(factorial(s))};
}

struct PhiDecomposition {
  LaurentPoly phi;
  unsigned ell = 0;
};

/// phi = L * #W * X^{#A} / (X - 1)^ell with ell the multiplicity of X = 1.
inline PhiDecomposition extract_phi(const LaurentPoly& p, const BigInt& group_order, unsigned hyperplanes) {
  if (p.is_zero()) throw argument_error("extract_phi: zero polynomial");
  auto [quotient, ell] = strip_root_at_one(p);
  LaurentPoly phi = quotient.shifted(static_cast<int>(hyperplanes)) * Rational(group_order);
  if (!phi.is_polynomial())
    throw structural_error("extract_phi: X^" + std::to_string(hyperplanes) +
                           " does not clear the pole; lowest degree " + std::to_string(phi.min_deg()));
  return {std::move(phi), ell};
}

/// Inverse of extract_phi: phi * (X - 1)^ell / (#W * X^{#A}).
inline LaurentPoly assemble_from_phi(const LaurentPoly& phi, const BigInt& group_order, unsigned ell,
                                     unsigned hyperplanes) {
  LaurentPoly x_minus_one(0, {Rational(-1), Rational(1)});
  return (phi * pow(x_minus_one, ell)).shifted(-static_cast<int>(hyperplanes)) / Rational(group_order);
}

}  // namespace wfact
