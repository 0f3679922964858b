// SPDX-License-Identifier: Apache-2.0
#pragma once

// JSON wire format. Rationals are strings "p/q" (or "p"); a polynomial in q is
// an array of such strings indexed by power of q; a rational function is
// {"num": [...], "den": [...]}.

#include <vector>

#include <json.hpp>

#include "eulerq/algebra.hpp"
#include "eulerq/convexity.hpp"
#include "eulerq/jacobi.hpp"
#include "eulerq/riordan.hpp"
#include "eulerq/series.hpp"

namespace eulerq {

using json = nlohmann::json;

json to_json(const BigRational& v);
json to_json(const QPoly& p);
json to_json(const QRatFun& f);
json to_json(const TruncSeries& s);
json to_json(const LowerTri& l);
json to_json(const Matrix& m);
json to_json(const JFraction& j);
json to_json(const MomentSeq& m);
json to_json(const ConvexityReport& r);
json to_json(const std::vector<QPoly>& rows);
json to_json(const std::vector<BigRational>& xs);

/// Parsers throw Errc::invalid_argument on malformed input.
BigRational rational_from_json(const json& j);
QPoly qpoly_from_json(const json& j);
QRatFun ratfun_from_json(const json& j);
/// Accepts {"mu": [...]} or a bare array of polynomials.
MomentSeq moments_from_json(const json& j);
JFraction jfraction_from_json(const json& j);
/// A bare array of rationals.
std::vector<BigRational> rationals_from_json(const json& j);

}  // namespace eulerq
