// SPDX-License-Identifier: Apache-2.0
#include "eulerq/convexity.hpp"

#include "eulerq/families.hpp"

namespace eulerq {

namespace {

void require_length(std::size_t len, const char* op) {
  if (len < 3) throw Error(Errc::invalid_argument, std::string(op) + ": sequence needs at least 3 terms");
}

void record(ConvexityReport& rep, int m, int n, const QPoly& diff) {
  const int idx = first_negative_index(diff);
  if (idx >= 0) {
    rep.witnesses.push_back({m, n, idx});
    rep.verdict = false;
  }
}

}  // namespace

ConvexityReport check_q_log_convex(const std::vector<QPoly>& seq) {
  require_length(seq.size(), "check_q_log_convex");
  ConvexityReport rep;
  const int last = static_cast<int>(seq.size()) - 2;
  rep.m_max = rep.n_max = last;
  for (int n = 1; n <= last; ++n) record(rep, n, n, seq[n - 1] * seq[n + 1] - seq[n] * seq[n]);
  return rep;
}

ConvexityReport check_strong_q_log_convex(const std::vector<QPoly>& seq) {
  require_length(seq.size(), "check_strong_q_log_convex");
  ConvexityReport rep;
  const int last = static_cast<int>(seq.size()) - 2;
  rep.m_max = rep.n_max = last;
  for (int m = 1; m <= last; ++m) {
    for (int n = m; n <= last; ++n) record(rep, m, n, seq[m - 1] * seq[n + 1] - seq[m] * seq[n]);
  }
  return rep;
}

ZhuReport zhu_criterion(const JFraction& j, int i_max) {
  if (i_max < 1) throw Error(Errc::invalid_argument, "zhu_criterion: i_max must be >= 1");
  const auto need = static_cast<std::size_t>(i_max) + 2;
  if (j.depth() < need) {
    throw Error(Errc::insufficient_length, "zhu_criterion: i_max = " + std::to_string(i_max) +
                                               " needs a J-fraction of depth >= " + std::to_string(need));
  }
  ZhuReport out;
  out.report.m_max = out.report.n_max = i_max;
  for (int i = 1; i <= i_max; ++i) {
    const QPoly gap = j.s[i] * j.s[i + 1] - j.t_at(i + 1);
    record(out.report, i, i, gap);
  }
  for (std::size_t i = 0; i < need; ++i) {
    if (!is_nonneg(j.s[i]) || (i >= 1 && !is_nonneg(j.t_at(i)))) out.hypothesis_nonneg = false;
  }
  out.gap_at_zero = j.s[0] * j.s[1] - j.t_at(1);
  return out;
}

SymbolicGap symbolic_gap(int i, const BigRational& a, const BigRational& b, const BigRational& d) {
  if (i < 0) throw Error(Errc::invalid_argument, "symbolic_gap: i must be >= 0");
  const BigRational di = d * BigRational(i);
  const BigRational ab = a * b;
  const BigRational bd = b * d;
  const QPoly s_i{di + ab, di + bd - ab};
  const QPoly s_next{di + d + ab, di + d + bd - ab};
  const QPoly t_next = QPoly::monomial(d * d * BigRational(i + 1) * (BigRational(i) + b), 1);
  SymbolicGap out;
  out.gap = s_i * s_next - t_next;
  out.lower_bound = QPoly{(di + ab) * (di + d + ab), a * b * b * d - a * a * b * b, (di + bd - ab) * (di + d + bd - ab)};
  out.bound_below_gap = is_nonneg(out.gap - out.lower_bound);
  out.bound_nonneg = is_nonneg(out.lower_bound);
  return out;
}

const char* triangle_name(Triangle t) { return t == Triangle::EulerianA ? "A" : "B"; }

Triangle parse_triangle(std::string_view name) {
  if (name == "A" || name == "EulerianA") return Triangle::EulerianA;
  if (name == "B" || name == "EulerianB") return Triangle::EulerianB;
  throw Error(Errc::invalid_argument, "unknown triangle '" + std::string(name) + "' (expected A or B)");
}

bool is_log_convex(const std::vector<BigRational>& x) {
  for (const auto& v : x) {
    if (v.sign() < 0) return false;
  }
  for (std::size_t k = 1; k + 1 < x.size(); ++k) {
    if (x[k] * x[k] > x[k - 1] * x[k + 1]) return false;
  }
  return true;
}

TransformExperiment transform_preserves_lcx_experiment(Triangle triangle, const std::vector<BigRational>& x,
                                                       int n_max) {
  if (n_max < 0 || n_max > kTriangleCap) {
    throw Error(Errc::invalid_argument, "n_max must lie in 0.." + std::to_string(kTriangleCap));
  }
  if (x.size() < static_cast<std::size_t>(n_max) + 1) {
    throw Error(Errc::insufficient_length, "the input sequence needs x_0..x_" + std::to_string(n_max));
  }
  const std::vector<BigRational> input(x.begin(), x.begin() + n_max + 1);
  if (!is_log_convex(input)) {
    throw Error(Errc::invalid_argument, "the input sequence is not log-convex; the experiment is undefined");
  }
  TransformExperiment out;
  for (int n = 0; n <= n_max; ++n) {
    const auto row = triangle == Triangle::EulerianA ? eulerian_A_numbers(n) : eulerian_B_numbers(n);
    BigRational z;
    for (std::size_t k = 0; k < row.size(); ++k) z += row[k] * input[k];
    out.z.push_back(z);
  }
  out.report.m_max = out.report.n_max = n_max - 1;
  for (int n = 1; n + 1 <= n_max; ++n) {
    if (out.z[n] * out.z[n] > out.z[n - 1] * out.z[n + 1]) {
      out.report.witnesses.push_back({n, n, 0});
      out.report.verdict = false;
    }
  }
  return out;
}

const std::vector<std::string>& builtin_sequence_names() {
  static const std::vector<std::string> names{"constant", "powers_of_two", "factorial", "catalan", "motzkin"};
  return names;
}

std::vector<BigRational> builtin_sequence(std::string_view name, std::size_t len) {
  std::vector<BigRational> x;
  if (name == "constant") {
    x.assign(len, BigRational(1));
  } else if (name == "powers_of_two") {
    for (std::size_t k = 0; k < len; ++k) x.push_back(pow(BigRational(2), static_cast<unsigned>(k)));
  } else if (name == "factorial") {
    for (std::size_t k = 0; k < len; ++k) x.push_back(factorial(static_cast<unsigned>(k)));
  } else if (name == "catalan") {
    // C_{n+1} = sum_k C_k C_{n-k}
    for (std::size_t n = 0; n < len; ++n) {
      if (n == 0) {
        x.emplace_back(1);
        continue;
      }
      BigRational c;
      for (std::size_t k = 0; k < n; ++k) c += x[k] * x[n - 1 - k];
      x.push_back(c);
    }
  } else if (name == "motzkin") {
    // M_n = M_{n-1} + sum_{k=0}^{n-2} M_k M_{n-2-k}
    for (std::size_t n = 0; n < len; ++n) {
      if (n == 0) {
        x.emplace_back(1);
        continue;
      }
      BigRational m = x[n - 1];
      for (std::size_t k = 0; k + 2 <= n; ++k) m += x[k] * x[n - 2 - k];
      x.push_back(m);
    }
  } else {
    throw Error(Errc::invalid_argument, "unknown builtin sequence '" + std::string(name) + "'");
  }
  return x;
}

}  // namespace eulerq
