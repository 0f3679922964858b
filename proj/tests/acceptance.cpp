// SPDX-License-Identifier: Apache-2.0
// End-to-end acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "eulerq/convexity.hpp"
#include "eulerq/error.hpp"
#include "eulerq/families.hpp"
#include "eulerq/jacobi.hpp"
#include "eulerq/riordan.hpp"
#include "eulerq/series.hpp"
#include "eulerq/serialize.hpp"

using namespace eulerq;

namespace {

// Collects the first few failure descriptions of one criterion.
struct Tally {
  std::size_t checks = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // first few only

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (++failed <= 5) failures.push_back(what);
  }
  bool ok() const { return failed == 0 && failures.empty(); }
};

const std::vector<BigRational> kTs{BigRational(0), BigRational(1), BigRational(2), BigRational(1, 2), BigRational(3)};

bool in_convex_range(const EgfParams& p) {
  return p.b.sign() >= 0 && p.a.sign() >= 0 && p.d >= p.a;
}

void c1(Tally& t) {
  for (const FamilySpec& spec : standard_instances()) {
    const EgfParams p = family_params(spec);
    const auto egf = egf_coefficients(p.a, p.b, p.d, 12);
    const JFraction j = jfraction_from_params(p.a, p.b, p.d, required_depth(12));
    t.expect(moments_motzkin(j, 12).mu == egf, spec.label() + ": path moments != EGF");
    t.expect(moments_cfrac_expand(j, 12).mu == egf, spec.label() + ": fraction expansion != EGF");
  }
}

void c2(Tally& t) {
  const std::size_t n = 10;
  for (const FamilySpec& spec : standard_instances()) {
    const EgfParams p = family_params(spec);
    const std::string who = spec.label();
    const ExpRiordan r = eulerian_riordan(p.a, p.b, p.d, n);
    const ProductionData direct = production_matrix_direct(riordan_matrix(r));
    const CAndR cr = c_and_r(r);
    const ProductionData formula = production_matrix_formula(cr.c, cr.r, n - 1);
    t.expect(direct.full == formula.full, who + ": direct != formula");
    t.expect(direct.tridiagonal && formula.tridiagonal, who + ": not tridiagonal");
    for (std::size_t i = 0; i < formula.full.rows(); ++i) {
      for (std::size_t k = 0; k < formula.full.cols(); ++k) {
        if (k > i + 1 || k + 1 < i) t.expect(formula.full(i, k).is_zero(), who + ": off-band entry");
      }
      t.expect(formula.full(i, i + 1) == QRatFun(1), who + ": superdiagonal != 1");
    }
    const JFraction closed = jfraction_from_params(p.a, p.b, p.d, 9);
    for (std::size_t i = 0; i <= 7; ++i) {
      t.expect(formula.s[i].is_polynomial() && formula.s[i].to_poly() == closed.s[i],
               who + ": s_" + std::to_string(i));
      t.expect(formula.t[i].is_polynomial() && formula.t[i].to_poly() == closed.t[i],
               who + ": t_" + std::to_string(i + 1));
    }
  }
}

void c3(Tally& t) {
  for (const FamilySpec& spec : standard_instances()) {
    const EgfParams p = family_params(spec);
    const JFraction j = jfraction_from_params(p.a, p.b, p.d, 8);
    const LowerTri linv = lower_tri_inverse(riordan_matrix(eulerian_riordan(p.a, p.b, p.d, 8)));
    t.expect(orthopoly_coeffs(j, 8).a == linv, spec.label() + ": Q coefficients != L^-1");
    t.expect(check_orthogonality(orthopoly_coeffs(j, 6), moments_motzkin(j, 11)),
             spec.label() + ": orthogonality at N=6");
  }
}

void c4(Tally& t) {
  const QPoly q = QPoly::q();
  t.expect(enum_descents_A(3) == QPoly{1, 4, 1}, "anchor S_3 = 1+4q+q^2");
  t.expect(enum_signed(2, 1) == QPoly{1, 6, 1}, "anchor B_2 = 1+6q+q^2");
  t.expect(eulerian_B_numbers(3) == std::vector<BigRational>{1, 23, 23, 1}, "anchor B-row n=3");

  const auto shifted = egf_coefficients(1, 1, 1, 9);
  const auto shifted_cf = moments_motzkin(jfraction_from_params(1, 1, 1, 5), 9).mu;
  for (int n = 1; n <= 8; ++n) {
    const QPoly e = enum_descents_A(n);
    t.expect(e == shifted[n] && e == shifted_cf[n], "descents S_" + std::to_string(n));
  }
  for (const BigRational& tv : kTs) {
    const std::string ts = "t=" + tv.to_string();
    const auto a_egf = egf_coefficients(1, tv, 1, 9);
    const auto a_cf = moments_motzkin(jfraction_from_params(1, tv, 1, 5), 9).mu;
    for (int n = 1; n <= 8; ++n) {
      const QPoly e = enum_exc_cycles(n, tv);
      t.expect(e == q * a_egf[n] && e == q * a_cf[n], "exc/cycles n=" + std::to_string(n) + " " + ts);
    }
    const BigRational d = BigRational(1) + tv;
    const auto b_egf = egf_coefficients(1, 1, d, 8);
    const auto b_cf = moments_motzkin(jfraction_from_params(1, 1, d, 4), 8).mu;
    for (int n = 1; n <= 7; ++n) {
      const QPoly e = enum_signed(n, tv);
      t.expect(e == b_egf[n] && e == b_cf[n], "signed n=" + std::to_string(n) + " " + ts);
    }
  }
  for (const FamilySpec& spec : standard_instances()) {
    if (spec.family != Family::General) continue;
    const EgfParams p = family_params(spec);
    const auto egf = egf_coefficients(p.a, 1, p.d, 11);
    const auto cf = moments_motzkin(jfraction_from_params(p.a, 1, p.d, 6), 11).mu;
    for (int n = 0; n <= 10; ++n) {
      const QPoly rev = general_eulerian(n, p.a, p.d).reversed(static_cast<std::size_t>(n) + 1);
      t.expect(rev == egf[n] && rev == cf[n], spec.label() + " recurrence n=" + std::to_string(n));
    }
  }
}

void c5(Tally& t) {
  const auto egf = egf_coefficients(1, 1, 2, 11);
  for (int n = 0; n <= 10; ++n) {
    const QPoly numbers(eulerian_B_numbers(n));
    const QPoly rec = eulerian_B_poly_rec(n);
    t.expect(numbers == rec && rec == egf[n], "type-B n=" + std::to_string(n));
  }
}

void c6(Tally& t) {
  for (const FamilySpec& spec : standard_instances()) {
    const EgfParams p = family_params(spec);
    if (!in_convex_range(p)) continue;
    t.expect(check_strong_q_log_convex(egf_coefficients(p.a, p.b, p.d, 10)).verdict,
             spec.label() + ": strong q-log-convexity");
    const ZhuReport z = zhu_criterion(jfraction_from_params(p.a, p.b, p.d, 52), 50);
    t.expect(z.report.verdict, spec.label() + ": product criterion i<=50");
  }
  const std::vector<BigRational> ad{0, 1, 2, BigRational(1, 2), 3};
  const std::vector<BigRational> bs{0, 1, 2, BigRational(1, 2), 5};
  for (const auto& a : ad) {
    for (const auto& d : ad) {
      if (d < a) continue;
      for (const auto& b : bs) {
        for (int i = 0; i <= 50; ++i) {
          const SymbolicGap g = symbolic_gap(i, a, b, d);
          t.expect(is_nonneg(g.gap) && g.bound_below_gap && g.bound_nonneg,
                   "gap i=" + std::to_string(i) + " a=" + a.to_string() + " b=" + b.to_string() +
                       " d=" + d.to_string());
        }
      }
    }
  }
}

void c7(Tally& t) {
  for (const FamilySpec& spec : standard_instances()) {
    const EgfParams p = family_params(spec);
    const JFraction j = jfraction_from_params(p.a, p.b, p.d, 6);
    const MomentSeq m = moments_motzkin(j, 12);
    const bool degenerate = std::any_of(j.t.begin(), j.t.end(), [](const QPoly& x) { return x.is_zero(); });
    if (degenerate) {
      // b = 0 makes t_1 vanish: the sequence is not quasi-definite past depth 1
      bool raised = false;
      try {
        jfraction_from_moments(m, 6);
      } catch (const Error& e) {
        raised = e.code() == Errc::not_quasi_definite;
      }
      t.expect(raised, spec.label() + ": expected not_quasi_definite");
      continue;
    }
    t.expect(jfraction_from_moments(m, 6) == j, spec.label() + ": round trip");
  }
  std::mt19937 rng(20260419);
  std::uniform_int_distribution<int> coef(-4, 4), den(1, 3), deg(0, 2);
  auto poly = [&](bool nonzero) {
    for (;;) {
      std::vector<BigRational> c;
      for (int k = 0, n = deg(rng) + 1; k < n; ++k) c.emplace_back(coef(rng), den(rng));
      QPoly p(std::move(c));
      if (!nonzero || !p.is_zero()) return p;
    }
  };
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<QPoly> s, tt;
    for (int i = 0; i < 6; ++i) s.push_back(poly(false));
    for (int i = 1; i < 6; ++i) tt.push_back(poly(true));
    const JFraction j(std::move(s), std::move(tt));
    t.expect(jfraction_from_moments(moments_motzkin(j, 12), 6) == j, "random J #" + std::to_string(trial));
  }
}

void c8(Tally& t) {
  const ConvexityReport r = check_q_log_convex({1, QPoly{1, 1}, 1});
  t.expect(!r.verdict && r.witnesses.size() == 1 && r.witnesses[0].n == 1, "(1, 1+q, 1) rejected at n=1");
  const JFraction counter({1, 1, 1}, {1, QPoly{2, 2}});
  t.expect(!zhu_criterion(counter, 1).report.verdict, "product criterion counterexample rejected");
  bool raised = false;
  try {
    jfraction_from_moments(MomentSeq{{1, 0, 0, 0, 0, 0}}, 3);
  } catch (const Error& e) {
    raised = e.code() == Errc::not_quasi_definite;
  }
  t.expect(raised, "mu = (1,0,0,...) signals not_quasi_definite");
}

std::string conjecture_run() {
  std::string digest;
  for (Triangle tri : {Triangle::EulerianA, Triangle::EulerianB}) {
    for (const auto& name : builtin_sequence_names()) {
      const TransformExperiment e = transform_preserves_lcx_experiment(tri, builtin_sequence(name, 13), 12);
      digest += to_json(e.z).dump() + to_json(e.report).dump() + "\n";
    }
  }
  return digest;
}

void c9(Tally& t, std::string& note) {
  const std::string first = conjecture_run();
  t.expect(first == conjecture_run(), "two runs differ");
  std::size_t held = 0, total = 0;
  for (Triangle tri : {Triangle::EulerianA, Triangle::EulerianB}) {
    for (const auto& name : builtin_sequence_names()) {
      ++total;
      if (transform_preserves_lcx_experiment(tri, builtin_sequence(name, 13), 12).report.verdict) ++held;
    }
  }
  note = std::to_string(held) + "/" + std::to_string(total) + " runs log-convex";
}

struct Criterion {
  int id;
  const char* title;
  double budget_s;
  std::function<void(Tally&, std::string&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "EGF equals J-fraction moments, n = 0..11, 18 instances", 30, [](Tally& t, std::string&) { c1(t); }},
      {2, "production matrices: direct = formula, tridiagonal, closed-form s_i, t_i at N = 10", 30,
       [](Tally& t, std::string&) { c2(t); }},
      {3, "orthogonal polynomial coefficients = L^-1 (rows 0..7); orthogonality at N = 6", 30,
       [](Tally& t, std::string&) { c3(t); }},
      {4, "enumeration = EGF = J-fraction (S_8, B_7, five t values); recurrence n <= 10", 120,
       [](Tally& t, std::string&) { c4(t); }},
      {5, "type-B triangle = differential recurrence = EGF, n <= 10", 5, [](Tally& t, std::string&) { c5(t); }},
      {6, "strong q-log-convexity, product criterion i <= 50, symbolic gap grid", 30,
       [](Tally& t, std::string&) { c6(t); }},
      {7, "moment inversion round trip at depth 6 (families + 20 random)", 30,
       [](Tally& t, std::string&) { c7(t); }},
      {8, "negative controls", 5, [](Tally& t, std::string&) { c8(t); }},
      {9, "log-convexity transform experiment to n = 12, deterministic", 30, c9},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    Tally tally;
    std::string note;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(tally, note);
    } catch (const std::exception& e) {
      tally.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_s) tally.failures.push_back("over time budget");
    const bool ok = tally.ok();
    if (!ok) ++failed;
    std::printf("criterion %d: %s  %s  [%zu checks, %.2fs%s%s]\n", c.id, ok ? "PASS" : "FAIL", c.title,
                tally.checks, secs, note.empty() ? "" : "; ", note.c_str());
    for (const auto& f : tally.failures) std::printf("    - %s\n", f.c_str());
    if (tally.failed > tally.failures.size()) std::printf("    - ... %zu more\n", tally.failed - tally.failures.size());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
