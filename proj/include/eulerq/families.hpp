// SPDX-License-Identifier: Apache-2.0
#pragma once

// The six Eulerian families, their (a, b, d) parameters in the generating
// function ((1-q) e^{a(1-q)x} / (1 - q e^{d(1-q)x}))^b, brute-force
// enumeration over S_n and B_n, and the classical recurrences.
//
// Row conventions (row n of each family, n >= 1):
//   TypeA_shifted (1,1,1)   sum_{S_n} q^des
//   TypeA         (0,1,1)   sum_{S_n} q^{exc+1}
//   TypeA_qt      (1,t,1)   sum_{S_n} q^exc t^cyc   (enum_exc_cycles / q)
//   TypeB         (1,1,2)   sum_{B_n} q^{des_B}
//   TypeB_qt      (1,1,1+t) sum_{B_n} q^{des_B} t^neg
//   General       (a,1,d)   reversal of the A_{n,k}(a,d) recurrence row
// Row 0 is 1 for every family.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eulerq/algebra.hpp"

namespace eulerq {

enum class Family { TypeA_shifted, TypeA, TypeA_qt, TypeB, TypeB_qt, General };

const char* family_name(Family f);
/// Throws Errc::invalid_argument on an unknown name.
Family parse_family(std::string_view name);
const std::vector<Family>& all_families();

struct FamilySpec {
  Family family = Family::TypeB;
  std::optional<BigRational> t;
  std::optional<BigRational> a;
  std::optional<BigRational> d;

  /// "TypeB_qt(t=1/2)" style label.
  std::string label() const;
};

struct EgfParams {
  BigRational a, b, d;
  friend bool operator==(const EgfParams&, const EgfParams&) = default;
};

/// Throws Errc::invalid_argument if a required parameter is missing or an
/// unexpected one is present.
EgfParams family_params(const FamilySpec& spec);

/// Enumeration caps (number of letters).
inline constexpr int kDefaultCapA = 8;
inline constexpr int kDefaultCapB = 7;

/// sum over S_n of q^des.
QPoly enum_descents_A(int n, int cap = kDefaultCapA);
/// sum over S_n of q^{exc+1} t^{cycles}.
QPoly enum_exc_cycles(int n, const BigRational& t, int cap = kDefaultCapA);
/// sum over signed permutations of [n] of q^{des_B} t^{neg}, with the
/// sentinel pi(0) = 0 so that a negative first letter is a descent.
QPoly enum_signed(int n, const BigRational& t, int cap = kDefaultCapB);

/// Row n of the type-B Eulerian triangle via B_{n,k} = (2k+1) B_{n-1,k} + (2n-2k+1) B_{n-1,k-1}.
std::vector<BigRational> eulerian_B_numbers(int n);
/// Row n of the classical Eulerian triangle (permutations of S_n by descents),
/// padded with a trailing zero to length n+1 for n >= 1.
std::vector<BigRational> eulerian_A_numbers(int n);
/// P(B_n) via P_n = ((2n-1)q + 1) P_{n-1} + 2q(1-q) P'_{n-1}.
QPoly eulerian_B_poly_rec(int n);
/// sum_{k=-1}^{n-1} A_{n,k}(a,d) q^{k+1} with
/// A_{n,k} = (-a + (k+2)d) A_{n-1,k} + (a + (n-k-1)d) A_{n-1,k-1}, A_{0,-1} = 1.
QPoly general_eulerian(int n, const BigRational& a, const BigRational& d);

enum class Route { egf, cfrac, enumeration, recurrence };

const char* route_name(Route r);
Route parse_route(std::string_view name);

/// Rows 0..n_rows-1 of a family along one route. Enumeration honours the caps;
/// routes a family does not have throw Errc::invalid_argument.
std::vector<QPoly> family_table(const FamilySpec& spec, Route route, std::size_t n_rows);

/// Whether `route` exists for `spec` for rows 0..n_rows-1 (enumeration caps included).
bool route_available(const FamilySpec& spec, Route route, std::size_t n_rows);

/// The family instances every end-to-end check runs over: TypeA_qt and
/// TypeB_qt at t in {0, 1, 2, 1/2, 3}, General at (a, d) in
/// {(1,1), (1,2), (1,3), (2,5), (0,1)}, plus the three parameter-free families.
std::vector<FamilySpec> standard_instances();

}  // namespace eulerq
