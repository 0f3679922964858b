// SPDX-License-Identifier: Apache-2.0
#include "eulerq/riordan.hpp"

#include <string>

namespace eulerq {

LowerTri::LowerTri(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw Error(Errc::invalid_argument, "LowerTri must be square");
  for (std::size_t i = 0; i < m_.rows(); ++i) {
    for (std::size_t j = i + 1; j < m_.cols(); ++j) {
      if (!m_(i, j).is_zero()) {
        throw Error(Errc::invalid_argument,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ") above the diagonal is nonzero");
      }
    }
  }
}

LowerTri LowerTri::identity(std::size_t order) {
  LowerTri l(order);
  for (std::size_t i = 0; i < order; ++i) l.m_(i, i) = QRatFun(1);
  return l;
}

void LowerTri::set(std::size_t i, std::size_t j, QRatFun v) {
  if (j > i || i >= order()) throw Error(Errc::invalid_argument, "LowerTri::set outside the lower triangle");
  m_(i, j) = std::move(v);
}

LowerTri operator*(const LowerTri& a, const LowerTri& b) {
  if (a.order() != b.order()) throw Error(Errc::order_mismatch, "LowerTri product of different orders");
  LowerTri out(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      QRatFun acc;
      for (std::size_t k = j; k <= i; ++k) {
        if (!a(i, k).is_zero() && !b(k, j).is_zero()) acc += a(i, k) * b(k, j);
      }
      out.m_(i, j) = std::move(acc);
    }
  }
  return out;
}

ExpRiordan::ExpRiordan(TruncSeries g_, TruncSeries f_) : g(std::move(g_)), f(std::move(f_)) {
  if (g.order() != f.order()) throw Error(Errc::order_mismatch, "Riordan array: g and f orders differ");
  if (g[0].is_zero()) throw Error(Errc::non_invertible, "Riordan array: g(0) must be nonzero");
  if (!f[0].is_zero()) throw Error(Errc::invalid_argument, "Riordan array: f(0) must be zero");
  if (f.order() < 2 || f[1].is_zero()) throw Error(Errc::non_invertible, "Riordan array: f'(0) must be nonzero");
}

ExpRiordan eulerian_riordan(const BigRational& a, const BigRational& b, const BigRational& d, std::size_t order) {
  if (d.is_zero()) throw Error(Errc::invalid_argument, "eulerian_riordan: d must be nonzero");
  const QRatFun omq(QPoly{1, -1});
  const TruncSeries ed = series_exp_linear(QRatFun(d) * omq, order);
  const TruncSeries numer = ed - TruncSeries::one(order);
  const TruncSeries denom = (TruncSeries::one(order) - ed * QRatFun(QPoly::q())) * QRatFun(d);
  return ExpRiordan(eulerian_egf(a, b, d, order), series_mul(numer, series_inverse(denom)));
}

LowerTri riordan_matrix(const ExpRiordan& r) {
  const std::size_t n = r.order();
  LowerTri l(n);
  TruncSeries col = r.g;  // g f^k
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) col = series_mul(col, r.f);
    const BigRational kfact = factorial(static_cast<unsigned>(k));
    for (std::size_t i = k; i < n; ++i) {
      l.set(i, k, col[i] * QRatFun(factorial(static_cast<unsigned>(i)) / kfact));
    }
  }
  return l;
}

CAndR c_and_r(const ExpRiordan& r) {
  const std::size_t n = r.order();
  if (n < 2) throw Error(Errc::insufficient_length, "c_and_r needs order >= 2");
  const TruncSeries fbar = series_comp_inverse(r.f).truncated(n - 1);
  const TruncSeries dg = series_derivative(r.g);
  const TruncSeries df = series_derivative(r.f);
  const TruncSeries g_at = series_compose(r.g.truncated(n - 1), fbar);
  return CAndR{series_mul(series_compose(dg, fbar), series_inverse(g_at)), series_compose(df, fbar)};
}

namespace {

void fill_band(ProductionData& p) {
  const Matrix& m = p.full;
  bool tri = true;
  for (std::size_t i = 0; i < m.rows() && tri; ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j + 1 < i || j > i + 1) {
        if (!m(i, j).is_zero()) {
          tri = false;
          break;
        }
      } else if (j == i + 1 && m(i, j) != QRatFun(1)) {
        tri = false;
        break;
      }
    }
  }
  p.tridiagonal = tri;
  p.s.clear();
  p.t.clear();
  if (!tri) return;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    p.s.push_back(m(i, i));
    if (i >= 1) p.t.push_back(m(i, i - 1));
  }
}

}  // namespace

ProductionData production_matrix_formula(const TruncSeries& c, const TruncSeries& r, std::size_t rows) {
  if (c.order() < rows || r.order() < rows) {
    throw Error(Errc::insufficient_length, "production_matrix_formula: c and r need order >= " + std::to_string(rows));
  }
  ProductionData p;
  p.full = Matrix(rows, rows + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j <= i + 1; ++j) {
      // c_{i-j} with c_{-1} = 0, plus j r_{i-j+1}.
      QRatFun term = (j <= i) ? c[i - j] : QRatFun();
      if (j > 0) term += r[i + 1 - j] * QRatFun(BigRational(j));
      if (term.is_zero()) continue;
      BigRational ratio(1);
      if (i >= j) {
        ratio = factorial(static_cast<unsigned>(i)) / factorial(static_cast<unsigned>(j));
      } else {
        ratio = BigRational(1) / BigRational(j);  // i!/(i+1)!
      }
      p.full(i, j) = term * QRatFun(ratio);
    }
  }
  fill_band(p);
  return p;
}

ProductionData production_matrix_direct(const LowerTri& l) {
  const std::size_t n = l.order();
  if (n < 2) throw Error(Errc::insufficient_length, "production_matrix_direct needs order >= 2");
  const LowerTri inv = lower_tri_inverse(l);
  ProductionData p;
  p.full = Matrix(n - 1, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      QRatFun acc;
      for (std::size_t k = 0; k <= i; ++k) {
        const QRatFun& lbar = l(k + 1, j);
        if (!inv(i, k).is_zero() && !lbar.is_zero()) acc += inv(i, k) * lbar;
      }
      p.full(i, j) = std::move(acc);
    }
  }
  fill_band(p);
  return p;
}

LowerTri lower_tri_inverse(const LowerTri& l) {
  const std::size_t n = l.order();
  for (std::size_t i = 0; i < n; ++i) {
    if (l(i, i).is_zero()) {
      throw Error(Errc::non_invertible, "lower_tri_inverse: zero diagonal entry at " + std::to_string(i));
    }
  }
  LowerTri inv(n);
  for (std::size_t j = 0; j < n; ++j) {
    inv.set(j, j, l(j, j).inverse());
    for (std::size_t i = j + 1; i < n; ++i) {
      QRatFun acc;
      for (std::size_t k = j; k < i; ++k) {
        if (!l(i, k).is_zero() && !inv(k, j).is_zero()) acc += l(i, k) * inv(k, j);
      }
      inv.set(i, j, -(acc / l(i, i)));
    }
  }
  return inv;
}

}  // namespace eulerq
