// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "eulerq/algebra.hpp"
#include "eulerq/jacobi.hpp"
#include "eulerq/series.hpp"

namespace eulerq::testing {

inline BigRational R(const char* s) { return BigRational::parse(s); }

// P({"1", "6", "1"}) == 1 + 6q + q^2
inline QPoly P(std::initializer_list<const char*> cs) {
  std::vector<BigRational> v;
  for (const char* c : cs) v.push_back(R(c));
  return QPoly(std::move(v));
}

inline std::vector<QPoly> rows_of(std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<QPoly> out;
  for (auto r : rows) out.push_back(P(r));
  return out;
}

// Small random rationals with numerators in [-lim, lim] and denominators in [1, 3].
struct Gen {
  std::mt19937 rng;
  explicit Gen(unsigned seed) : rng(seed) {}

  BigRational rational(int lim = 4) {
    std::uniform_int_distribution<int> num(-lim, lim), den(1, 3);
    return BigRational(num(rng), den(rng));
  }
  BigRational nonzero(int lim = 4) {
    for (;;) {
      BigRational r = rational(lim);
      if (!r.is_zero()) return r;
    }
  }
  QPoly poly(int max_degree, int lim = 4) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<BigRational> c;
    const int n = deg(rng) + 1;
    for (int i = 0; i < n; ++i) c.push_back(rational(lim));
    return QPoly(std::move(c));
  }
  QPoly nonzero_poly(int max_degree, int lim = 4) {
    for (;;) {
      QPoly p = poly(max_degree, lim);
      if (!p.is_zero()) return p;
    }
  }
  QPoly nonneg_poly(int max_degree, int lim = 4) {
    std::uniform_int_distribution<int> deg(0, max_degree), c(0, lim);
    std::vector<BigRational> v;
    const int n = deg(rng) + 1;
    for (int i = 0; i < n; ++i) v.emplace_back(c(rng));
    return QPoly(std::move(v));
  }
  // J-fraction whose t_i are nonzero, hence quasi-definite.
  JFraction jfraction(std::size_t depth, int max_degree = 2) {
    std::vector<QPoly> s, t;
    for (std::size_t i = 0; i < depth; ++i) s.push_back(poly(max_degree));
    for (std::size_t i = 1; i < depth; ++i) t.push_back(nonzero_poly(max_degree));
    return JFraction(std::move(s), std::move(t));
  }
  TruncSeries series(std::size_t order, int max_degree = 1) {
    TruncSeries f(order);
    for (std::size_t k = 0; k < order; ++k) f.set(k, QRatFun(poly(max_degree, 3)));
    return f;
  }
};

inline std::vector<QPoly> as_polys(const TruncSeries& f) {
  std::vector<QPoly> out;
  for (const auto& c : f.coeffs()) out.push_back(c.to_poly());
  return out;
}

}  // namespace eulerq::testing
