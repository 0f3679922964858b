// SPDX-License-Identifier: Apache-2.0
#include "eulerq/series.hpp"

#include <string>

namespace eulerq {

namespace {

void require_same_order(const TruncSeries& f, const TruncSeries& g, const char* op) {
  if (f.order() != g.order()) {
    throw Error(Errc::order_mismatch, std::string(op) + ": series orders differ (" + std::to_string(f.order()) +
                                          " vs " + std::to_string(g.order()) + ")");
  }
}

QRatFun integer(std::size_t k) { return QRatFun(BigRational(k)); }

}  // namespace

TruncSeries::TruncSeries(std::size_t order) : c_(order) {
  if (order == 0) throw Error(Errc::invalid_argument, "series order must be positive");
}

TruncSeries::TruncSeries(std::vector<QRatFun> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw Error(Errc::invalid_argument, "series order must be positive");
}

TruncSeries TruncSeries::one(std::size_t order) {
  TruncSeries s(order);
  s.c_[0] = QRatFun(1);
  return s;
}

TruncSeries TruncSeries::x(std::size_t order) { return linear(order, QRatFun(), QRatFun(1)); }

TruncSeries TruncSeries::linear(std::size_t order, const QRatFun& c0, const QRatFun& c1) {
  TruncSeries s(order);
  s.c_[0] = c0;
  if (order > 1) s.c_[1] = c1;
  return s;
}

TruncSeries TruncSeries::truncated(std::size_t n) const {
  if (n == 0 || n > order()) throw Error(Errc::invalid_argument, "cannot truncate series to order " + std::to_string(n));
  return TruncSeries(std::vector<QRatFun>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(n)));
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

TruncSeries operator+(const TruncSeries& f, const TruncSeries& g) {
  require_same_order(f, g, "series add");
  TruncSeries r = f;
  for (std::size_t k = 0; k < r.order(); ++k) r.c_[k] += g.c_[k];
  return r;
}

TruncSeries operator-(const TruncSeries& f, const TruncSeries& g) {
  require_same_order(f, g, "series sub");
  TruncSeries r = f;
  for (std::size_t k = 0; k < r.order(); ++k) r.c_[k] -= g.c_[k];
  return r;
}

TruncSeries operator*(const TruncSeries& f, const QRatFun& s) {
  TruncSeries r = f;
  for (auto& c : r.c_) c *= s;
  return r;
}

TruncSeries series_mul(const TruncSeries& f, const TruncSeries& g) {
  require_same_order(f, g, "series_mul");
  const std::size_t n = f.order();
  std::vector<QRatFun> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (f[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (!g[j].is_zero()) out[i + j] += f[i] * g[j];
    }
  }
  return TruncSeries(std::move(out));
}

TruncSeries series_inverse(const TruncSeries& f) {
  if (f[0].is_zero()) throw Error(Errc::non_invertible, "series_inverse: constant term is zero");
  const std::size_t n = f.order();
  const QRatFun inv0 = f[0].inverse();
  std::vector<QRatFun> h(n);
  h[0] = inv0;
  for (std::size_t k = 1; k < n; ++k) {
    QRatFun acc;
    for (std::size_t j = 1; j <= k; ++j) {
      if (!f[j].is_zero()) acc += f[j] * h[k - j];
    }
    h[k] = -(acc * inv0);
  }
  return TruncSeries(std::move(h));
}

TruncSeries series_derivative(const TruncSeries& f) {
  if (f.order() < 2) throw Error(Errc::insufficient_length, "series_derivative needs order >= 2");
  std::vector<QRatFun> d(f.order() - 1);
  for (std::size_t k = 1; k < f.order(); ++k) d[k - 1] = f[k] * integer(k);
  return TruncSeries(std::move(d));
}

// h = exp(f) satisfies h' = f' h, i.e. n h_n = sum_{k=1}^{n} k f_k h_{n-k}.
TruncSeries series_exp(const TruncSeries& f) {
  if (!f[0].is_zero()) throw Error(Errc::invalid_argument, "series_exp: constant term must be 0");
  const std::size_t n = f.order();
  std::vector<QRatFun> h(n);
  h[0] = QRatFun(1);
  for (std::size_t m = 1; m < n; ++m) {
    QRatFun acc;
    for (std::size_t k = 1; k <= m; ++k) {
      if (!f[k].is_zero()) acc += f[k] * h[m - k] * integer(k);
    }
    h[m] = acc * QRatFun(BigRational(1) / BigRational(m));
  }
  return TruncSeries(std::move(h));
}

// g = log(f) satisfies f g' = f', i.e. n g_n = n f_n - sum_{k=1}^{n-1} k g_k f_{n-k}.
TruncSeries series_log(const TruncSeries& f) {
  if (f[0] != QRatFun(1)) throw Error(Errc::invalid_argument, "series_log: constant term must be 1");
  const std::size_t n = f.order();
  std::vector<QRatFun> g(n);
  for (std::size_t m = 1; m < n; ++m) {
    QRatFun acc = f[m] * integer(m);
    for (std::size_t k = 1; k < m; ++k) {
      if (!f[m - k].is_zero()) acc -= g[k] * f[m - k] * integer(k);
    }
    g[m] = acc * QRatFun(BigRational(1) / BigRational(m));
  }
  return TruncSeries(std::move(g));
}

TruncSeries series_pow(const TruncSeries& f, const BigRational& b) {
  if (f[0] != QRatFun(1)) throw Error(Errc::invalid_argument, "series_pow: constant term must be 1");
  if (b.is_zero()) return TruncSeries::one(f.order());
  return series_exp(series_log(f) * QRatFun(b));
}

TruncSeries series_compose(const TruncSeries& f, const TruncSeries& g) {
  require_same_order(f, g, "series_compose");
  if (!g[0].is_zero()) throw Error(Errc::invalid_argument, "series_compose: inner series must have zero constant term");
  const std::size_t n = f.order();
  TruncSeries acc(n);
  acc.set(0, f[n - 1]);
  for (std::size_t k = n - 1; k-- > 0;) {
    acc = series_mul(acc, g);
    acc.set(0, acc[0] + f[k]);
  }
  return acc;
}

TruncSeries series_comp_inverse(const TruncSeries& f) {
  if (!f[0].is_zero()) throw Error(Errc::invalid_argument, "series_comp_inverse: constant term must be 0");
  const std::size_t n = f.order();
  if (n < 2) throw Error(Errc::insufficient_length, "series_comp_inverse needs order >= 2");
  if (f[1].is_zero()) throw Error(Errc::non_invertible, "series_comp_inverse: linear coefficient is zero");

  // f' padded back to order n with a zero top coefficient: once f(h) - x
  // vanishes through x^{p-1} (p >= 2), the Newton correction at x^{n-1}
  // only reads f'(h) through x^{n-1-p}.
  std::vector<QRatFun> df = series_derivative(f).coeffs();
  df.emplace_back();
  const TruncSeries fprime(std::move(df));

  const TruncSeries x = TruncSeries::x(n);
  TruncSeries h = x * f[1].inverse();
  for (std::size_t correct = 2; correct < n; correct *= 2) {
    const TruncSeries residual = series_compose(f, h) - x;
    h = h - series_mul(residual, series_inverse(series_compose(fprime, h)));
  }
  if (series_compose(f, h) != x) {
    throw Error(Errc::internal, "series_comp_inverse: Newton iteration did not converge");
  }
  return h;
}

TruncSeries series_exp_linear(const QRatFun& scale, std::size_t order) {
  std::vector<QRatFun> c(order);
  QRatFun term(1);
  for (std::size_t k = 0; k < order; ++k) {
    if (k > 0) term = term * scale * QRatFun(BigRational(1) / BigRational(k));
    c[k] = term;
  }
  return TruncSeries(std::move(c));
}

TruncSeries eulerian_egf(const BigRational& a, const BigRational& b, const BigRational& d, std::size_t order) {
  const QPoly one_minus_q{1, -1};
  const QRatFun omq(one_minus_q);
  const TruncSeries ea = series_exp_linear(QRatFun(a) * omq, order);
  const TruncSeries ed = series_exp_linear(QRatFun(d) * omq, order);
  const TruncSeries denom = TruncSeries::one(order) - ed * QRatFun(QPoly::q());
  const TruncSeries base = series_mul(ea * omq, series_inverse(denom));
  return series_pow(base, b);
}

std::vector<QPoly> egf_coefficients(const BigRational& a, const BigRational& b, const BigRational& d,
                                    std::size_t n_terms) {
  if (n_terms == 0) throw Error(Errc::invalid_argument, "egf_coefficients needs at least one term");
  const TruncSeries g = eulerian_egf(a, b, d, n_terms);
  std::vector<QPoly> out;
  out.reserve(n_terms);
  for (std::size_t n = 0; n < n_terms; ++n) {
    const QRatFun scaled = g[n] * QRatFun(factorial(static_cast<unsigned>(n)));
    if (!scaled.is_polynomial()) {
      throw Error(Errc::internal, "egf_coefficients: T_" + std::to_string(n) + " did not reduce to a polynomial: " +
                                      scaled.to_string());
    }
    out.push_back(scaled.num());
  }
  return out;
}

}  // namespace eulerq
