// SPDX-License-Identifier: Apache-2.0
#pragma once

// Truncated formal power series in x whose coefficients are rational
// functions of q. A series of order N keeps the coefficients of x^0..x^{N-1};
// coefficient k of every result depends only on input coefficients 0..k.

#include <cstddef>
#include <vector>

#include "eulerq/algebra.hpp"

namespace eulerq {

class TruncSeries {
 public:
  /// The zero series of the given order (order >= 1).
  explicit TruncSeries(std::size_t order);
  explicit TruncSeries(std::vector<QRatFun> coeffs);

  static TruncSeries one(std::size_t order);
  /// The series x (order >= 2 to be meaningful).
  static TruncSeries x(std::size_t order);
  /// c0 + c1 x, truncated to the order.
  static TruncSeries linear(std::size_t order, const QRatFun& c0, const QRatFun& c1);

  std::size_t order() const { return c_.size(); }
  const QRatFun& operator[](std::size_t k) const { return c_[k]; }
  const std::vector<QRatFun>& coeffs() const { return c_; }
  void set(std::size_t k, QRatFun v) { c_.at(k) = std::move(v); }

  /// First n coefficients (n <= order).
  TruncSeries truncated(std::size_t n) const;

  TruncSeries operator-() const;
  friend TruncSeries operator+(const TruncSeries& f, const TruncSeries& g);
  friend TruncSeries operator-(const TruncSeries& f, const TruncSeries& g);
  friend TruncSeries operator*(const TruncSeries& f, const QRatFun& s);
  friend TruncSeries operator*(const QRatFun& s, const TruncSeries& f) { return f * s; }
  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

 private:
  std::vector<QRatFun> c_;
};

/// Cauchy product truncated to the common order. Orders must match.
TruncSeries series_mul(const TruncSeries& f, const TruncSeries& g);
inline TruncSeries operator*(const TruncSeries& f, const TruncSeries& g) { return series_mul(f, g); }

/// Multiplicative inverse; the constant term must be nonzero.
TruncSeries series_inverse(const TruncSeries& f);

/// Formal derivative; the result has order N-1 (the last coefficient is unknown).
TruncSeries series_derivative(const TruncSeries& f);

/// exp(f) for f(0) = 0.
TruncSeries series_exp(const TruncSeries& f);
/// log(f) for f(0) = 1.
TruncSeries series_log(const TruncSeries& f);
/// f^b = exp(b log f) for f(0) = 1.
TruncSeries series_pow(const TruncSeries& f, const BigRational& b);

/// f(g(x)) for g(0) = 0, by Horner's rule. Orders must match.
TruncSeries series_compose(const TruncSeries& f, const TruncSeries& g);

/// Compositional inverse fbar with f(fbar(x)) = x, by Newton iteration.
/// Requires f(0) = 0 and an invertible linear coefficient.
TruncSeries series_comp_inverse(const TruncSeries& f);

/// T_0..T_{N-1} with sum T_n x^n / n! = ((1-q) e^{a(1-q)x} / (1 - q e^{d(1-q)x}))^b.
/// Every T_n is asserted to be a polynomial in q.
std::vector<QPoly> egf_coefficients(const BigRational& a, const BigRational& b, const BigRational& d,
                                    std::size_t n_terms);

/// The generating function above as a series of the given order.
TruncSeries eulerian_egf(const BigRational& a, const BigRational& b, const BigRational& d, std::size_t order);

/// e^{scale * x} truncated to the order; scale is a rational function of q.
TruncSeries series_exp_linear(const QRatFun& scale, std::size_t order);

}  // namespace eulerq
