// SPDX-License-Identifier: Apache-2.0
#pragma once

// Exact scalar, polynomial and rational-function arithmetic in one
// indeterminate q. Everything is a value type; no operation mutates its
// operands.

#include <compare>
#include <concepts>
#include <type_traits>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "eulerq/error.hpp"

namespace eulerq {

/// Exact rational number, always in lowest terms with a positive denominator.
class BigRational {
 public:
  BigRational() = default;
  template <std::integral T>
  BigRational(T v)  // NOLINT(google-explicit-constructor)
      : v_(std::is_signed_v<T> ? mpq_class(static_cast<long>(v))
                               : mpq_class(static_cast<unsigned long>(v))) {}
  BigRational(long num, long den);
  explicit BigRational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p/q" or "p" (optional leading sign). Decimals are rejected.
  static BigRational parse(std::string_view text);

  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const;

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }
  const mpq_class& raw() const { return v_; }

  BigRational operator-() const { return BigRational(mpq_class(-v_)); }
  BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
  BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
  BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

BigRational factorial(unsigned n);
BigRational pow(const BigRational& base, unsigned exp);

/// Dense polynomial in q over the rationals. Trailing zeros are never stored,
/// so the zero polynomial is the empty coefficient vector.
class QPoly {
 public:
  /// Degree reported for the zero polynomial; compares below every real degree.
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  QPoly() = default;
  QPoly(std::initializer_list<BigRational> coeffs);
  explicit QPoly(std::vector<BigRational> coeffs);
  QPoly(const BigRational& c);  // NOLINT(google-explicit-constructor)
  QPoly(int c) : QPoly(BigRational(c)) {}  // NOLINT(google-explicit-constructor)

  static QPoly monomial(const BigRational& c, unsigned power);
  static QPoly q() { return monomial(1, 1); }

  const std::vector<BigRational>& coeffs() const { return c_; }
  /// Coefficient of q^k; zero past the degree.
  BigRational operator[](std::size_t k) const;

  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  const BigRational& leading() const;
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
  QPoly& operator*=(const BigRational& s);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const BigRational& s) { return a *= s; }
  friend QPoly operator*(const BigRational& s, QPoly a) { return a *= s; }

  friend bool operator==(const QPoly&, const QPoly&) = default;

  /// Exact division with remainder; throws on a zero divisor.
  std::pair<QPoly, QPoly> divmod(const QPoly& divisor) const;
  /// Scales to leading coefficient 1 (zero stays zero).
  QPoly monic() const;
  BigRational evaluate(const BigRational& at) const;
  /// q^(len-1) f(1/q): coefficient vector of length len read backwards.
  QPoly reversed(std::size_t len) const;
  /// Drops the factor q^k; throws if the low coefficients are not zero.
  QPoly divide_by_q_power(unsigned k) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigRational> c_;
};

QPoly derivative(const QPoly& f);

/// True iff every coefficient of f is >= 0 (the relation f >=_q 0).
bool is_nonneg(const QPoly& f);

/// Index of the first negative coefficient, or -1 when f >=_q 0.
int first_negative_index(const QPoly& f);

/// Monic gcd over the rationals. Throws when both arguments are zero.
QPoly gcd(const QPoly& f, const QPoly& g);

/// Quotient num/den in lowest terms with a monic denominator.
class QRatFun {
 public:
  QRatFun() : den_(1) {}
  QRatFun(QPoly num);  // NOLINT(google-explicit-constructor)
  QRatFun(const BigRational& c) : QRatFun(QPoly(c)) {}  // NOLINT(google-explicit-constructor)
  QRatFun(int c) : QRatFun(QPoly(c)) {}                 // NOLINT(google-explicit-constructor)
  QRatFun(QPoly num, QPoly den);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  /// Throws Errc::internal if the denominator is not 1.
  QPoly to_poly() const;

  QRatFun operator-() const;
  QRatFun inverse() const;

  friend QRatFun operator+(const QRatFun& a, const QRatFun& b);
  friend QRatFun operator-(const QRatFun& a, const QRatFun& b);
  friend QRatFun operator*(const QRatFun& a, const QRatFun& b);
  friend QRatFun operator/(const QRatFun& a, const QRatFun& b);
  QRatFun& operator+=(const QRatFun& o) { return *this = *this + o; }
  QRatFun& operator-=(const QRatFun& o) { return *this = *this - o; }
  QRatFun& operator*=(const QRatFun& o) { return *this = *this * o; }
  QRatFun& operator/=(const QRatFun& o) { return *this = *this / o; }

  friend bool operator==(const QRatFun&, const QRatFun&) = default;

  std::string to_string() const;

 private:
  struct canonical_tag {};
  QRatFun(QPoly num, QPoly den, canonical_tag) : num_(std::move(num)), den_(std::move(den)) {}
  static QRatFun reduce(QPoly num, QPoly den);

  QPoly num_;
  QPoly den_;
};

}  // namespace eulerq
