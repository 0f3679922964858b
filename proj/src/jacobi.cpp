// SPDX-License-Identifier: Apache-2.0
#include "eulerq/jacobi.hpp"

#include <string>

namespace eulerq {

JFraction::JFraction(std::vector<QPoly> s_, std::vector<QPoly> t_) : s(std::move(s_)), t(std::move(t_)) {
  if (s.empty() || t.size() + 1 != s.size()) {
    throw Error(Errc::invalid_argument, "JFraction needs K >= 1 s-coefficients and K-1 t-coefficients (got " +
                                            std::to_string(s.size()) + " and " + std::to_string(t.size()) + ")");
  }
}

JFraction jfraction_from_params(const BigRational& a, const BigRational& b, const BigRational& d, std::size_t depth) {
  if (depth == 0) throw Error(Errc::invalid_argument, "jfraction_from_params: depth must be >= 1");
  const BigRational ab = a * b;
  const BigRational bd = b * d;
  std::vector<QPoly> s, t;
  for (std::size_t i = 0; i < depth; ++i) {
    const BigRational di = d * BigRational(i);
    s.push_back(QPoly{di + ab, di + bd - ab});
    if (i + 1 < depth) {
      // t_{i+1}
      t.push_back(QPoly::monomial(d * d * BigRational(i + 1) * (BigRational(i) + b), 1));
    }
  }
  return JFraction(std::move(s), std::move(t));
}

std::size_t required_depth(std::size_t n_moments) { return n_moments == 0 ? 1 : (n_moments + 1) / 2; }

namespace {

void require_depth(const JFraction& j, std::size_t n_moments, const char* op) {
  if (j.depth() == 0) throw Error(Errc::invalid_argument, std::string(op) + ": empty J-fraction");
  const std::size_t need = required_depth(n_moments);
  if (j.depth() < need) {
    throw Error(Errc::insufficient_length, std::string(op) + ": " + std::to_string(n_moments) +
                                               " moments need a J-fraction of depth K >= " + std::to_string(need) +
                                               ", got " + std::to_string(j.depth()));
  }
}

// Polynomials in x with polynomial-in-q coefficients, index = power of x.
using XPoly = std::vector<QPoly>;

XPoly xmul(const XPoly& a, const XPoly& b, std::size_t keep) {
  XPoly out(std::min(keep, a.size() + b.size() - 1));
  for (std::size_t i = 0; i < a.size() && i < out.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t k = 0; k < b.size() && i + k < out.size(); ++k) out[i + k] += a[i] * b[k];
  }
  return out;
}

XPoly xsub(XPoly a, const XPoly& b) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return a;
}

}  // namespace

MomentSeq moments_motzkin(const JFraction& j, std::size_t n_moments) {
  require_depth(j, n_moments, "moments_motzkin");
  const std::size_t heights = j.depth();
  // ways[h] = weighted sum over paths of the current length ending at height h.
  std::vector<QPoly> ways(heights);
  ways[0] = QPoly(1);
  MomentSeq out;
  for (std::size_t len = 0; len < n_moments; ++len) {
    out.mu.push_back(ways[0]);
    std::vector<QPoly> next(heights);
    for (std::size_t h = 0; h < heights; ++h) {
      if (ways[h].is_zero()) continue;
      if (h + 1 < heights) next[h + 1] += ways[h];
      next[h] += ways[h] * j.s[h];
      if (h >= 1) next[h - 1] += ways[h] * j.t_at(h);
    }
    ways = std::move(next);
  }
  return out;
}

MomentSeq moments_cfrac_expand(const JFraction& j, std::size_t n_moments) {
  require_depth(j, n_moments, "moments_cfrac_expand");
  const std::size_t keep = std::max<std::size_t>(n_moments, 1);
  const std::size_t depth = j.depth();
  // Tail T_i = num_i / den_i with T_K = 1 and
  //   T_i = 1 / (1 - s_i x - t_{i+1} x^2 T_{i+1}) = den_{i+1} / ((1 - s_i x) den_{i+1} - t_{i+1} x^2 num_{i+1}).
  // Terms of x-degree >= n_moments never reach the expansion, so both sides are truncated.
  XPoly num{QPoly(1)};
  XPoly den{QPoly(1)};
  for (std::size_t i = depth; i-- > 0;) {
    const XPoly level{QPoly(1), -j.s[i]};
    XPoly next_den = xmul(level, den, keep);
    if (i + 1 < depth) {
      const XPoly weight{QPoly(), QPoly(), j.t[i]};  // t_{i+1} x^2
      next_den = xsub(next_den, xmul(weight, num, keep));
    }
    num = std::move(den);
    den = std::move(next_den);
  }
  // Expand num / den; den(0) = 1 so no division in q is needed.
  num.resize(keep);
  den.resize(keep);
  MomentSeq out;
  for (std::size_t n = 0; n < n_moments; ++n) {
    QPoly c = num[n];
    for (std::size_t k = 1; k <= n; ++k) {
      if (!den[k].is_zero()) c -= den[k] * out.mu[n - k];
    }
    out.mu.push_back(std::move(c));
  }
  return out;
}

OrthoBasis orthopoly_coeffs(const JFraction& j, std::size_t n) {
  if (n > j.depth()) {
    throw Error(Errc::insufficient_length, "orthopoly_coeffs: " + std::to_string(n) +
                                               " polynomials need depth >= " + std::to_string(n));
  }
  LowerTri a(n);
  std::vector<std::vector<QPoly>> rows;
  for (std::size_t m = 0; m < n; ++m) {
    std::vector<QPoly> row(m + 1);
    if (m == 0) {
      row[0] = QPoly(1);
    } else {
      // Q_m = (x - s_{m-1}) Q_{m-1} - t_{m-1} Q_{m-2}
      const auto& prev = rows[m - 1];
      for (std::size_t k = 0; k < prev.size(); ++k) {
        row[k + 1] += prev[k];
        row[k] -= j.s[m - 1] * prev[k];
      }
      if (m >= 2) {
        const auto& prev2 = rows[m - 2];
        for (std::size_t k = 0; k < prev2.size(); ++k) row[k] -= j.t_at(m - 1) * prev2[k];
      }
    }
    for (std::size_t k = 0; k <= m; ++k) a.set(m, k, QRatFun(row[k]));
    rows.push_back(std::move(row));
  }
  return OrthoBasis{std::move(a)};
}

bool check_orthogonality(const OrthoBasis& basis, const MomentSeq& m) {
  const std::size_t n = basis.a.order();
  if (n == 0) return true;
  if (m.mu.size() < 2 * n - 1) {
    throw Error(Errc::insufficient_length, "check_orthogonality: " + std::to_string(n) +
                                               " polynomials need moments up to index " + std::to_string(2 * n - 2));
  }
  for (std::size_t row = 1; row < n; ++row) {
    for (std::size_t shift = 0; shift < row; ++shift) {
      QRatFun acc;
      for (std::size_t k = 0; k <= row; ++k) acc += basis.a(row, k) * QRatFun(m.mu[k + shift]);
      if (!acc.is_zero()) return false;
    }
  }
  return true;
}

namespace {

// Polynomials in x with rational-function coefficients.
using RPoly = std::vector<QRatFun>;

QRatFun inner(const RPoly& f, const RPoly& g, const std::vector<QRatFun>& mu) {
  QRatFun acc;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].is_zero()) continue;
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (!g[k].is_zero()) acc += f[i] * g[k] * mu.at(i + k);
    }
  }
  return acc;
}

RPoly times_x(const RPoly& f) {
  RPoly out(f.size() + 1);
  for (std::size_t i = 0; i < f.size(); ++i) out[i + 1] = f[i];
  return out;
}

QPoly as_poly(const QRatFun& v, const char* what, std::size_t index) {
  if (!v.is_polynomial()) {
    throw Error(Errc::invalid_argument, std::string("jfraction_from_moments: ") + what + "_" + std::to_string(index) +
                                            " = " + v.to_string() + " is not a polynomial in q");
  }
  return v.num();
}

}  // namespace

JFraction jfraction_from_moments(const MomentSeq& m, std::size_t depth) {
  if (depth == 0) throw Error(Errc::invalid_argument, "jfraction_from_moments: depth must be >= 1");
  if (m.mu.size() < 2 * depth) {
    throw Error(Errc::insufficient_length, "jfraction_from_moments: depth " + std::to_string(depth) + " needs " +
                                               std::to_string(2 * depth) + " moments, got " +
                                               std::to_string(m.mu.size()));
  }
  if (m.mu[0] != QPoly(1)) {
    throw Error(Errc::invalid_argument, "jfraction_from_moments: mu_0 must be 1, got " + m.mu[0].to_string());
  }
  std::vector<QRatFun> mu(m.mu.begin(), m.mu.end());
  std::vector<RPoly> basis;
  std::vector<QRatFun> norms;
  std::vector<QPoly> s, t;
  RPoly current{QRatFun(1)};
  for (std::size_t n = 0; n < depth; ++n) {
    const QRatFun norm = inner(current, current, mu);
    if (norm.is_zero()) {
      throw Error(Errc::not_quasi_definite,
                  "jfraction_from_moments: <Q_" + std::to_string(n) + ", Q_" + std::to_string(n) +
                      "> vanishes; the moment sequence is not quasi-definite at depth " + std::to_string(n + 1));
    }
    const RPoly xq = times_x(current);
    s.push_back(as_poly(inner(xq, current, mu) / norm, "s", n));
    if (n >= 1) t.push_back(as_poly(norm / norms.back(), "t", n));
    basis.push_back(current);
    norms.push_back(norm);
    if (n + 1 == depth) break;
    // Q_{n+1} = x Q_n - sum_j <x Q_n, Q_j> / <Q_j, Q_j> Q_j
    RPoly next = xq;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const QRatFun coef = inner(xq, basis[k], mu) / norms[k];
      if (coef.is_zero()) continue;
      for (std::size_t i = 0; i < basis[k].size(); ++i) next[i] -= coef * basis[k][i];
    }
    current = std::move(next);
  }
  return JFraction(std::move(s), std::move(t));
}

JFraction jfraction_from_moments(const MomentSeq& m) {
  if (m.mu.size() < 2) throw Error(Errc::insufficient_length, "jfraction_from_moments needs at least 2 moments");
  return jfraction_from_moments(m, m.mu.size() / 2);
}

}  // namespace eulerq
