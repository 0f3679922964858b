// SPDX-License-Identifier: Apache-2.0
#include "eulerq/families.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>

#include "eulerq/jacobi.hpp"
#include "eulerq/series.hpp"

namespace eulerq {

namespace {

struct FamilyInfo {
  Family family;
  const char* name;
  bool needs_t;
  bool needs_ad;
};

constexpr std::array<FamilyInfo, 6> kFamilies{{
    {Family::TypeA_shifted, "TypeA_shifted", false, false},
    {Family::TypeA, "TypeA", false, false},
    {Family::TypeA_qt, "TypeA_qt", true, false},
    {Family::TypeB, "TypeB", false, false},
    {Family::TypeB_qt, "TypeB_qt", true, false},
    {Family::General, "General", false, true},
}};

const FamilyInfo& info(Family f) { return kFamilies[static_cast<std::size_t>(f)]; }

}  // namespace

const char* family_name(Family f) { return info(f).name; }

Family parse_family(std::string_view name) {
  for (const auto& fi : kFamilies) {
    if (name == fi.name) return fi.family;
  }
  throw Error(Errc::invalid_argument, "unknown family '" + std::string(name) +
                                          "' (expected TypeA_shifted, TypeA, TypeA_qt, TypeB, TypeB_qt or General)");
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> v{Family::TypeA_shifted, Family::TypeA,    Family::TypeA_qt,
                                     Family::TypeB,         Family::TypeB_qt, Family::General};
  return v;
}

std::string FamilySpec::label() const {
  std::string out = family_name(family);
  std::vector<std::string> parts;
  if (t) parts.push_back("t=" + t->to_string());
  if (a) parts.push_back("a=" + a->to_string());
  if (d) parts.push_back("d=" + d->to_string());
  if (!parts.empty()) {
    out += "(";
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
    out += ")";
  }
  return out;
}

EgfParams family_params(const FamilySpec& spec) {
  const FamilyInfo& fi = info(spec.family);
  if (fi.needs_t != spec.t.has_value()) {
    throw Error(Errc::invalid_argument, std::string(fi.name) + (fi.needs_t ? " requires" : " does not take") +
                                            " the parameter t");
  }
  if (fi.needs_ad != spec.a.has_value() || fi.needs_ad != spec.d.has_value()) {
    throw Error(Errc::invalid_argument, std::string(fi.name) + (fi.needs_ad ? " requires" : " does not take") +
                                            " the parameters a and d");
  }
  switch (spec.family) {
    case Family::TypeA_shifted: return {1, 1, 1};
    case Family::TypeA: return {0, 1, 1};
    case Family::TypeA_qt: return {1, *spec.t, 1};
    case Family::TypeB: return {1, 1, 2};
    case Family::TypeB_qt: return {1, 1, BigRational(1) + *spec.t};
    case Family::General: return {*spec.a, 1, *spec.d};
  }
  throw Error(Errc::internal, "unhandled family");
}

// --- enumeration ------------------------------------------------------------

namespace {

void check_cap(int n, int cap, const char* op) {
  if (n < 1 || n > cap) {
    throw Error(Errc::invalid_argument, std::string(op) + ": n = " + std::to_string(n) + " outside 1.." +
                                            std::to_string(cap));
  }
}

// tally[i][j] -> sum tally[i][j] q^(i + shift) t^j
QPoly assemble(const std::vector<std::vector<std::uint64_t>>& tally, const BigRational& t, unsigned shift) {
  std::vector<BigRational> coeffs(tally.size() + shift);
  for (std::size_t i = 0; i < tally.size(); ++i) {
    BigRational acc;
    for (std::size_t j = 0; j < tally[i].size(); ++j) {
      if (tally[i][j] != 0) acc += BigRational(tally[i][j]) * pow(t, static_cast<unsigned>(j));
    }
    coeffs[i + shift] = acc;
  }
  return QPoly(std::move(coeffs));
}

}  // namespace

QPoly enum_descents_A(int n, int cap) {
  check_cap(n, cap, "enum_descents_A");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<std::uint64_t>> tally(n, std::vector<std::uint64_t>(1));
  do {
    int des = 0;
    for (int i = 0; i + 1 < n; ++i) des += perm[i] > perm[i + 1];
    ++tally[des][0];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return assemble(tally, 1, 0);
}

QPoly enum_exc_cycles(int n, const BigRational& t, int cap) {
  check_cap(n, cap, "enum_exc_cycles");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);  // 0-based: pi(i) = perm[i]
  std::vector<std::vector<std::uint64_t>> tally(n, std::vector<std::uint64_t>(n + 1));
  std::vector<char> seen(n);
  do {
    int exc = 0;
    for (int i = 0; i < n; ++i) exc += perm[i] > i;
    int cycles = 0;
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < n; ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (int k = i; !seen[k]; k = perm[k]) seen[k] = 1;
    }
    ++tally[exc][cycles];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return assemble(tally, t, 1);
}

QPoly enum_signed(int n, const BigRational& t, int cap) {
  check_cap(n, cap, "enum_signed");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<std::uint64_t>> tally(n + 1, std::vector<std::uint64_t>(n + 1));
  std::vector<int> w(n + 1);
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      w[0] = 0;
      int neg = 0;
      for (int i = 0; i < n; ++i) {
        const bool minus = (mask >> i) & 1u;
        w[i + 1] = minus ? -perm[i] : perm[i];
        neg += minus;
      }
      int des = 0;
      for (int i = 0; i < n; ++i) des += w[i] > w[i + 1];
      ++tally[des][neg];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return assemble(tally, t, 0);
}

// --- recurrences ------------------------------------------------------------

std::vector<BigRational> eulerian_B_numbers(int n) {
  if (n < 0) throw Error(Errc::invalid_argument, "eulerian_B_numbers: n must be >= 0");
  std::vector<BigRational> row{1};
  for (int m = 1; m <= n; ++m) {
    std::vector<BigRational> next(m + 1);
    for (int k = 0; k <= m; ++k) {
      if (k < m) next[k] += BigRational(2 * k + 1) * row[k];
      if (k >= 1) next[k] += BigRational(2 * m - 2 * k + 1) * row[k - 1];
    }
    row = std::move(next);
  }
  return row;
}

std::vector<BigRational> eulerian_A_numbers(int n) {
  if (n < 0) throw Error(Errc::invalid_argument, "eulerian_A_numbers: n must be >= 0");
  std::vector<BigRational> row{1};
  for (int m = 1; m <= n; ++m) {
    // A(m,k) = (k+1) A(m-1,k) + (m-k) A(m-1,k-1), with A(0,0) = 1.
    std::vector<BigRational> next(m + 1);
    for (int k = 0; k < m; ++k) {
      if (k < static_cast<int>(row.size())) next[k] += BigRational(k + 1) * row[k];
      if (k >= 1) next[k] += BigRational(m - k) * row[k - 1];
    }
    row = std::move(next);
  }
  return row;
}

QPoly eulerian_B_poly_rec(int n) {
  if (n < 0) throw Error(Errc::invalid_argument, "eulerian_B_poly_rec: n must be >= 0");
  QPoly p(1);
  const QPoly two_q_one_minus_q{0, 2, -2};
  for (int m = 1; m <= n; ++m) {
    p = QPoly{1, 2 * m - 1} * p + two_q_one_minus_q * derivative(p);
  }
  return p;
}

QPoly general_eulerian(int n, const BigRational& a, const BigRational& d) {
  if (n < 0) throw Error(Errc::invalid_argument, "general_eulerian: n must be >= 0");
  // row[k + 1] holds A_{m,k} for k = -1..m-1.
  std::vector<BigRational> row{1};
  for (int m = 1; m <= n; ++m) {
    std::vector<BigRational> next(m + 1);
    for (int k = -1; k <= m - 1; ++k) {
      BigRational v;
      if (k <= m - 2) v += (-a + BigRational(k + 2) * d) * row[k + 1];
      if (k - 1 >= -1) v += (a + BigRational(m - k - 1) * d) * row[k];
      next[k + 1] = v;
    }
    row = std::move(next);
  }
  return QPoly(std::move(row));
}

// --- tables -----------------------------------------------------------------

const char* route_name(Route r) {
  switch (r) {
    case Route::egf: return "egf";
    case Route::cfrac: return "cfrac";
    case Route::enumeration: return "enum";
    case Route::recurrence: return "recurrence";
  }
  return "unknown";
}

Route parse_route(std::string_view name) {
  if (name == "egf") return Route::egf;
  if (name == "cfrac") return Route::cfrac;
  if (name == "enum") return Route::enumeration;
  if (name == "recurrence") return Route::recurrence;
  throw Error(Errc::invalid_argument, "unknown route '" + std::string(name) + "' (expected egf, cfrac, enum or recurrence)");
}

bool route_available(const FamilySpec& spec, Route route, std::size_t n_rows) {
  const EgfParams p = family_params(spec);
  const int top = static_cast<int>(n_rows) - 1;
  switch (route) {
    case Route::egf:
    case Route::cfrac: return true;
    case Route::enumeration:
      switch (spec.family) {
        case Family::TypeA_shifted:
        case Family::TypeA:
        case Family::TypeA_qt: return top <= kDefaultCapA;
        case Family::TypeB:
        case Family::TypeB_qt: return top <= kDefaultCapB;
        case Family::General: return false;
      }
      return false;
    case Route::recurrence: return spec.family == Family::TypeB || p.b == 1;
  }
  return false;
}

std::vector<QPoly> family_table(const FamilySpec& spec, Route route, std::size_t n_rows) {
  const EgfParams p = family_params(spec);
  if (n_rows == 0) return {};
  if (!route_available(spec, route, n_rows)) {
    throw Error(Errc::invalid_argument, std::string("route '") + route_name(route) + "' is not available for " +
                                            spec.label() + " with " + std::to_string(n_rows) + " rows");
  }
  switch (route) {
    case Route::egf: return egf_coefficients(p.a, p.b, p.d, n_rows);
    case Route::cfrac: return moments_motzkin(jfraction_from_params(p.a, p.b, p.d, required_depth(n_rows)), n_rows).mu;
    case Route::enumeration: {
      std::vector<QPoly> rows{QPoly(1)};
      for (int n = 1; n < static_cast<int>(n_rows); ++n) {
        switch (spec.family) {
          case Family::TypeA_shifted: rows.push_back(enum_descents_A(n)); break;
          case Family::TypeA: rows.push_back(enum_exc_cycles(n, 1)); break;
          case Family::TypeA_qt: rows.push_back(enum_exc_cycles(n, *spec.t).divide_by_q_power(1)); break;
          case Family::TypeB: rows.push_back(enum_signed(n, 1)); break;
          case Family::TypeB_qt: rows.push_back(enum_signed(n, *spec.t)); break;
          case Family::General: break;
        }
      }
      return rows;
    }
    case Route::recurrence: {
      std::vector<QPoly> rows;
      for (int n = 0; n < static_cast<int>(n_rows); ++n) {
        if (spec.family == Family::TypeB) {
          rows.push_back(eulerian_B_poly_rec(n));
        } else {
          rows.push_back(general_eulerian(n, p.a, p.d).reversed(static_cast<std::size_t>(n) + 1));
        }
      }
      return rows;
    }
  }
  throw Error(Errc::internal, "unhandled route");
}

std::vector<FamilySpec> standard_instances() {
  const std::vector<BigRational> ts{0, 1, 2, BigRational(1, 2), 3};
  const std::vector<std::pair<int, int>> ads{{1, 1}, {1, 2}, {1, 3}, {2, 5}, {0, 1}};
  std::vector<FamilySpec> out;
  out.push_back({Family::TypeA_shifted, {}, {}, {}});
  out.push_back({Family::TypeA, {}, {}, {}});
  for (const auto& t : ts) out.push_back({Family::TypeA_qt, t, {}, {}});
  out.push_back({Family::TypeB, {}, {}, {}});
  for (const auto& t : ts) out.push_back({Family::TypeB_qt, t, {}, {}});
  for (const auto& [a, d] : ads) out.push_back({Family::General, {}, BigRational(a), BigRational(d)});
  return out;
}

}  // namespace eulerq
