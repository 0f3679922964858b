// SPDX-License-Identifier: Apache-2.0
#include "eulerq/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace eulerq {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::division_by_zero: return "division_by_zero";
    case Errc::non_invertible: return "non_invertible";
    case Errc::order_mismatch: return "order_mismatch";
    case Errc::insufficient_length: return "insufficient_length";
    case Errc::not_quasi_definite: return "not_quasi_definite";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

// --- BigRational ----------------------------------------------------------

BigRational::BigRational(long num, long den) {
  if (den == 0) throw Error(Errc::division_by_zero, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

namespace {

bool is_digit_run(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!is_digit_run(s)) {
    throw Error(Errc::invalid_argument, "not an exact rational literal: '" + std::string(whole) + "'");
  }
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

}  // namespace

BigRational BigRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return BigRational(mpq_class(parse_integer(text, text)));
  }
  const mpz_class num = parse_integer(text.substr(0, slash), text);
  const std::string_view den_text = text.substr(slash + 1);
  if (!is_digit_run(den_text)) {
    throw Error(Errc::invalid_argument, "not an exact rational literal: '" + std::string(text) + "'");
  }
  const mpz_class den(std::string(den_text), 10);
  if (den == 0) throw Error(Errc::division_by_zero, "zero denominator in '" + std::string(text) + "'");
  return BigRational(mpq_class(num, den));
}

std::string BigRational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw Error(Errc::division_by_zero, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

BigRational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return BigRational(mpq_class(f));
}

BigRational pow(const BigRational& base, unsigned exp) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exp);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exp);
  return BigRational(mpq_class(num, den));
}

// --- QPoly ----------------------------------------------------------------

QPoly::QPoly(std::initializer_list<BigRational> coeffs) : c_(coeffs) { trim(); }
QPoly::QPoly(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }
QPoly::QPoly(const BigRational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

QPoly QPoly::monomial(const BigRational& c, unsigned power) {
  if (c.is_zero()) return {};
  std::vector<BigRational> v(power + 1);
  v[power] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BigRational QPoly::operator[](std::size_t k) const { return k < c_.size() ? c_[k] : BigRational(); }

const BigRational& QPoly::leading() const {
  if (c_.empty()) throw Error(Errc::invalid_argument, "leading coefficient of the zero polynomial");
  return c_.back();
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const BigRational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> acc(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += a.c_[i].raw() * b.c_[j].raw();
  }
  std::vector<BigRational> out;
  out.reserve(acc.size());
  for (auto& v : acc) out.emplace_back(std::move(v));
  return QPoly(std::move(out));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& divisor) const {
  if (divisor.is_zero()) throw Error(Errc::division_by_zero, "polynomial division by zero");
  if (degree() < divisor.degree()) return {QPoly{}, *this};
  std::vector<BigRational> rem = c_;
  const std::size_t dd = divisor.c_.size() - 1;
  std::vector<BigRational> quot(c_.size() - dd);
  const BigRational& lead = divisor.c_.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigRational f = rem[k + dd] / lead;
    quot[k] = f;
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= f * divisor.c_[j];
  }
  rem.resize(dd);
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly QPoly::monic() const {
  if (is_zero() || leading() == 1) return *this;
  return *this * (BigRational(1) / leading());
}

BigRational QPoly::evaluate(const BigRational& at) const {
  BigRational acc;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * at + c_[k];
  return acc;
}

QPoly QPoly::reversed(std::size_t len) const {
  if (c_.size() > len) {
    throw Error(Errc::invalid_argument, "cannot reverse a polynomial of degree " + std::to_string(degree()) +
                                            " inside length " + std::to_string(len));
  }
  std::vector<BigRational> r(len);
  for (std::size_t k = 0; k < c_.size(); ++k) r[len - 1 - k] = c_[k];
  return QPoly(std::move(r));
}

QPoly QPoly::divide_by_q_power(unsigned k) const {
  for (unsigned i = 0; i < k && i < c_.size(); ++i) {
    if (!c_[i].is_zero()) throw Error(Errc::invalid_argument, to_string() + " is not divisible by q^" + std::to_string(k));
  }
  if (c_.size() <= k) return {};
  return QPoly(std::vector<BigRational>(c_.begin() + k, c_.end()));
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    BigRational c = c_[k];
    if (!first) {
      os << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) c = -c;
    }
    const bool unit = c == 1 || c == -1;
    if (k == 0 || !unit) {
      os << c.to_string();
    } else if (c == -1) {
      os << '-';
    }
    if (k >= 1) os << (unit ? "q" : "*q");
    if (k >= 2) os << '^' << k;
    first = false;
  }
  return os.str();
}

QPoly derivative(const QPoly& f) {
  const auto& c = f.coeffs();
  if (c.size() <= 1) return {};
  std::vector<BigRational> d(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = c[k] * BigRational(k);
  return QPoly(std::move(d));
}

bool is_nonneg(const QPoly& f) { return first_negative_index(f) < 0; }

int first_negative_index(const QPoly& f) {
  const auto& c = f.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].sign() < 0) return static_cast<int>(k);
  }
  return -1;
}

QPoly gcd(const QPoly& f, const QPoly& g) {
  if (f.is_zero() && g.is_zero()) throw Error(Errc::invalid_argument, "gcd(0, 0) is undefined");
  QPoly a = f.monic();
  QPoly b = g.monic();
  while (!b.is_zero()) {
    QPoly r = a.divmod(b).second.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// --- QRatFun --------------------------------------------------------------

QRatFun::QRatFun(QPoly num) : num_(std::move(num)), den_(1) {}

QRatFun::QRatFun(QPoly num, QPoly den) {
  if (den.is_zero()) throw Error(Errc::division_by_zero, "rational function with zero denominator");
  *this = reduce(std::move(num), std::move(den));
}

QRatFun QRatFun::reduce(QPoly num, QPoly den) {
  if (num.is_zero()) return QRatFun(QPoly{}, QPoly(1), canonical_tag{});
  if (den.degree() > 0) {
    const QPoly g = gcd(num, den);
    if (g.degree() > 0) {
      num = num.divmod(g).first;
      den = den.divmod(g).first;
    }
  }
  const BigRational lead = den.leading();
  if (lead != 1) {
    const BigRational inv = BigRational(1) / lead;
    num *= inv;
    den *= inv;
  }
  return QRatFun(std::move(num), std::move(den), canonical_tag{});
}

QPoly QRatFun::to_poly() const {
  if (!is_polynomial()) {
    throw Error(Errc::internal, "expected a polynomial but found the rational function " + to_string());
  }
  return num_;
}

QRatFun QRatFun::operator-() const { return QRatFun(-num_, den_, canonical_tag{}); }

QRatFun QRatFun::inverse() const {
  if (is_zero()) throw Error(Errc::division_by_zero, "inverse of the zero rational function");
  return reduce(den_, num_);
}

QRatFun operator+(const QRatFun& a, const QRatFun& b) {
  if (a.is_polynomial() && b.is_polynomial()) return QRatFun(a.num_ + b.num_);
  if (a.den_ == b.den_) return QRatFun::reduce(a.num_ + b.num_, a.den_);
  return QRatFun::reduce(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QRatFun operator-(const QRatFun& a, const QRatFun& b) { return a + (-b); }

QRatFun operator*(const QRatFun& a, const QRatFun& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_polynomial() && b.is_polynomial()) return QRatFun(a.num_ * b.num_);
  // Cross-cancel first so both products stay in lowest terms.
  QPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (bd.degree() > 0) {
    const QPoly g = gcd(an, bd);
    if (g.degree() > 0) {
      an = an.divmod(g).first;
      bd = bd.divmod(g).first;
    }
  }
  if (ad.degree() > 0) {
    const QPoly g = gcd(bn, ad);
    if (g.degree() > 0) {
      bn = bn.divmod(g).first;
      ad = ad.divmod(g).first;
    }
  }
  QPoly num = an * bn;
  QPoly den = ad * bd;
  const BigRational lead = den.leading();
  if (lead != 1) {
    const BigRational inv = BigRational(1) / lead;
    num *= inv;
    den *= inv;
  }
  return QRatFun(std::move(num), std::move(den), QRatFun::canonical_tag{});
}

QRatFun operator/(const QRatFun& a, const QRatFun& b) {
  if (b.is_zero()) throw Error(Errc::division_by_zero, "division by the zero rational function");
  return a * b.inverse();
}

std::string QRatFun::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace eulerq
