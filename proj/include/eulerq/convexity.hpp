// SPDX-License-Identifier: Apache-2.0
#pragma once

// q-log-convexity verdicts with reproducible witnesses.
//
// A sequence f_0, f_1, ... of polynomials is q-log-convex when
// f_{n-1} f_{n+1} - f_n^2 has nonnegative coefficients for n >= 1, and
// strongly q-log-convex when f_{m-1} f_{n+1} - f_m f_n does for n >= m >= 1.

#include <cstddef>
#include <string>
#include <vector>

#include "eulerq/algebra.hpp"
#include "eulerq/jacobi.hpp"

namespace eulerq {

struct Witness {
  int m = 0;
  int n = 0;
  int coeff_index = 0;  // first offending coefficient of q (0 for scalar checks)
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct ConvexityReport {
  bool verdict = true;             // false iff witnesses is nonempty
  std::vector<Witness> witnesses;  // sorted by (m, n)
  int m_max = 0;
  int n_max = 0;
};

ConvexityReport check_q_log_convex(const std::vector<QPoly>& seq);
ConvexityReport check_strong_q_log_convex(const std::vector<QPoly>& seq);

struct ZhuReport {
  ConvexityReport report;         // s_i s_{i+1} - t_{i+1} >=_q 0 for 1 <= i <= i_max; witnesses use m = n = i
  bool hypothesis_nonneg = true;  // every s_i, t_i used has nonnegative coefficients
  QPoly gap_at_zero;              // s_0 s_1 - t_1, informational only
};

/// Needs s_0..s_{i_max+1} and t_1..t_{i_max+1}.
ZhuReport zhu_criterion(const JFraction& j, int i_max);

struct SymbolicGap {
  QPoly gap;            // s_i s_{i+1} - t_{i+1}
  QPoly lower_bound;    // (di+ab)(di+d+ab) + (ab^2 d - a^2 b^2) q + (di+bd-ab)(di+d+bd-ab) q^2
  bool bound_below_gap; // gap - lower_bound >=_q 0
  bool bound_nonneg;    // lower_bound >=_q 0
};

SymbolicGap symbolic_gap(int i, const BigRational& a, const BigRational& b, const BigRational& d);

enum class Triangle { EulerianA, EulerianB };

const char* triangle_name(Triangle t);
Triangle parse_triangle(std::string_view name);

inline constexpr int kTriangleCap = 40;

struct TransformExperiment {
  std::vector<BigRational> z;  // z_0..z_{n_max}
  ConvexityReport report;      // numeric log-convexity of z; witnesses carry m = n
};

/// x_k^2 <= x_{k-1} x_{k+1} for every interior k and x_k >= 0.
bool is_log_convex(const std::vector<BigRational>& x);

/// z_n = sum_k T(n,k) x_k for n <= n_max and its log-convexity. Needs
/// x_0..x_{n_max}; throws Errc::invalid_argument if x is not log-convex.
/// Evidence only: a pass proves nothing beyond the tested range.
TransformExperiment transform_preserves_lcx_experiment(Triangle triangle, const std::vector<BigRational>& x,
                                                       int n_max);

/// Built-in log-convex inputs: "constant", "powers_of_two", "factorial",
/// "catalan", "motzkin". Returns x_0..x_{len-1}.
std::vector<BigRational> builtin_sequence(std::string_view name, std::size_t len);
const std::vector<std::string>& builtin_sequence_names();

}  // namespace eulerq
