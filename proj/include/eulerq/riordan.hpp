// SPDX-License-Identifier: Apache-2.0
#pragma once

// Exponential Riordan arrays [g, f]: column k has exponential generating
// function g(x) f(x)^k / k!, with f(0) = 0 and f'(0) invertible.

#include <cstddef>
#include <vector>

#include "eulerq/algebra.hpp"
#include "eulerq/series.hpp"

namespace eulerq {

/// Dense rows x cols matrix of rational functions.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const QRatFun& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  QRatFun& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<QRatFun> e_;
};

/// Square lower-triangular matrix; entries above the diagonal are zero.
class LowerTri {
 public:
  explicit LowerTri(std::size_t order) : m_(order, order) {}
  /// Throws if any entry above the diagonal is nonzero.
  explicit LowerTri(Matrix m);

  static LowerTri identity(std::size_t order);

  std::size_t order() const { return m_.rows(); }
  const QRatFun& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  /// Writes entry (i, j) with j <= i.
  void set(std::size_t i, std::size_t j, QRatFun v);
  const Matrix& dense() const { return m_; }

  friend LowerTri operator*(const LowerTri& a, const LowerTri& b);
  friend bool operator==(const LowerTri&, const LowerTri&) = default;

 private:
  Matrix m_;
};

struct ExpRiordan {
  TruncSeries g;
  TruncSeries f;

  /// Validates g(0) != 0, f(0) = 0, f'(0) != 0 and equal orders.
  ExpRiordan(TruncSeries g, TruncSeries f);
  std::size_t order() const { return g.order(); }
};

/// [g, f] for the Eulerian generating function with parameters (a, b, d):
///   g = ((1-q) e^{a(1-q)x} / (1 - q e^{d(1-q)x}))^b,
///   f = (e^{d(1-q)x} - 1) / (d (1 - q e^{d(1-q)x})).
/// Requires d != 0.
ExpRiordan eulerian_riordan(const BigRational& a, const BigRational& b, const BigRational& d, std::size_t order);

/// l_{n,k} = n!/k! [x^n] g f^k.
LowerTri riordan_matrix(const ExpRiordan& r);

struct CAndR {
  TruncSeries c;  // g'(fbar) / g(fbar)
  TruncSeries r;  // f'(fbar)
};

/// Both series come back at order N-1.
CAndR c_and_r(const ExpRiordan& r);

/// Production matrix rows 0..rows()-1 over columns 0..rows(). The band view
/// (s on the diagonal, t below it) is filled whenever the matrix is tridiagonal
/// with a unit superdiagonal.
struct ProductionData {
  Matrix full;
  bool tridiagonal = false;
  std::vector<QRatFun> s;  // s_i = p_{i,i}
  std::vector<QRatFun> t;  // t[i-1] = p_{i,i-1}, i.e. t_1 first
};

/// p_{i,j} = i!/j! (c_{i-j} + j r_{i-j+1}) with c_{-1} = 0, for rows 0..rows-1.
/// c and r must have order >= rows.
ProductionData production_matrix_formula(const TruncSeries& c, const TruncSeries& r, std::size_t rows);

/// P = L^{-1} Lbar where Lbar is L without its first row. Only rows 0..N-2
/// are determined by an N x N truncation, so that is what is returned.
ProductionData production_matrix_direct(const LowerTri& l);

/// Forward substitution; throws on a zero diagonal entry.
LowerTri lower_tri_inverse(const LowerTri& l);

}  // namespace eulerq
