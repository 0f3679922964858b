// SPDX-License-Identifier: Apache-2.0
#pragma once

// Jacobi continued fractions
//
//   sum_n mu_n x^n = 1 / (1 - s_0 x - t_1 x^2 / (1 - s_1 x - t_2 x^2 / ...)),
//
// their moment sequences, and the monic orthogonal polynomials
// Q_n = (x - s_{n-1}) Q_{n-1} - t_{n-1} Q_{n-2} attached to them.
//
// Indexing: JFraction::t is stored 0-based with t[i] holding t_{i+1}, so the
// closed forms below read s[i] = s_i(q) and t[i] = t_{i+1}(q).

#include <cstddef>
#include <vector>

#include "eulerq/algebra.hpp"
#include "eulerq/riordan.hpp"

namespace eulerq {

struct JFraction {
  std::vector<QPoly> s;  // s_0 .. s_{K-1}
  std::vector<QPoly> t;  // t_1 .. t_{K-1}

  JFraction() = default;
  /// Throws unless t.size() + 1 == s.size().
  JFraction(std::vector<QPoly> s, std::vector<QPoly> t);

  std::size_t depth() const { return s.size(); }
  /// t_i for 1 <= i <= K-1.
  const QPoly& t_at(std::size_t i) const { return t.at(i - 1); }

  friend bool operator==(const JFraction&, const JFraction&) = default;
};

struct MomentSeq {
  std::vector<QPoly> mu;
  friend bool operator==(const MomentSeq&, const MomentSeq&) = default;
};

/// Row n of `a` holds the coefficients of Q_n in the monomial basis.
struct OrthoBasis {
  LowerTri a;
};

/// s_i = (di + ab) + (di + bd - ab) q and t_{i+1} = d^2 (i+1)(i+b) q, i < K.
JFraction jfraction_from_params(const BigRational& a, const BigRational& b, const BigRational& d, std::size_t depth);

/// Smallest depth K whose J-fraction determines mu_0..mu_{n-1} (n <= 2K).
std::size_t required_depth(std::size_t n_moments);

/// mu_0..mu_{n-1} as weighted Motzkin path sums: up steps weigh 1, a level
/// step at height h weighs s_h, a down step from height h weighs t_h.
MomentSeq moments_motzkin(const JFraction& j, std::size_t n_moments);

/// mu_0..mu_{n-1} by folding the finite continued fraction bottom-up into a
/// quotient of polynomials in x and expanding that quotient as a series.
MomentSeq moments_cfrac_expand(const JFraction& j, std::size_t n_moments);

/// Q_0..Q_{n-1} from the three-term recurrence; requires n <= K.
OrthoBasis orthopoly_coeffs(const JFraction& j, std::size_t n);

/// True iff sum_k A_{n,k} mu_{k+m} = 0 for every row n of the basis and
/// 0 <= m < n. Needs moments up to index 2N-2.
bool check_orthogonality(const OrthoBasis& basis, const MomentSeq& m);

/// Recovers s_0..s_{K-1}, t_1..t_{K-1} by Gram-Schmidt against the moment
/// functional. Needs 2K moments. Throws Errc::not_quasi_definite when a norm
/// vanishes.
JFraction jfraction_from_moments(const MomentSeq& m, std::size_t depth);
/// Uses the largest depth the moments support, floor(size / 2).
JFraction jfraction_from_moments(const MomentSeq& m);

}  // namespace eulerq
