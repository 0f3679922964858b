// SPDX-License-Identifier: Apache-2.0
#include "eulerq/serialize.hpp"

namespace eulerq {

json to_json(const BigRational& v) { return v.to_string(); }

json to_json(const QPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.to_string());
  return arr;
}

json to_json(const QRatFun& f) { return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

json to_json(const TruncSeries& s) {
  json arr = json::array();
  for (const auto& c : s.coeffs()) arr.push_back(to_json(c));
  return arr;
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const LowerTri& l) { return to_json(l.dense()); }

json to_json(const std::vector<QPoly>& rows) {
  json arr = json::array();
  for (const auto& p : rows) arr.push_back(to_json(p));
  return arr;
}

json to_json(const std::vector<BigRational>& xs) {
  json arr = json::array();
  for (const auto& x : xs) arr.push_back(x.to_string());
  return arr;
}

json to_json(const JFraction& j) { return json{{"s", to_json(j.s)}, {"t", to_json(j.t)}}; }

json to_json(const MomentSeq& m) { return json{{"mu", to_json(m.mu)}}; }

json to_json(const ConvexityReport& r) {
  json w = json::array();
  for (const auto& x : r.witnesses) w.push_back(json{{"m", x.m}, {"n", x.n}, {"coeff_index", x.coeff_index}});
  return json{{"verdict", r.verdict}, {"witnesses", std::move(w)}, {"checked_range", json{{"m_max", r.m_max}, {"n_max", r.n_max}}}};
}

BigRational rational_from_json(const json& j) {
  if (j.is_string()) return BigRational::parse(j.get<std::string>());
  if (j.is_number_integer()) return BigRational(j.get<long>());
  throw Error(Errc::invalid_argument, "expected a rational string, got " + j.dump());
}

std::vector<BigRational> rationals_from_json(const json& j) {
  if (!j.is_array()) throw Error(Errc::invalid_argument, "expected an array of rationals, got " + j.dump());
  std::vector<BigRational> out;
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

QPoly qpoly_from_json(const json& j) {
  if (j.is_string() || j.is_number_integer()) return QPoly(rational_from_json(j));  // constant
  return QPoly(rationals_from_json(j));
}

QRatFun ratfun_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw Error(Errc::invalid_argument, "expected {\"num\": [...], \"den\": [...]}, got " + j.dump());
  }
  return QRatFun(qpoly_from_json(j.at("num")), qpoly_from_json(j.at("den")));
}

namespace {

std::vector<QPoly> qpolys_from_json(const json& j) {
  if (!j.is_array()) throw Error(Errc::invalid_argument, "expected an array of polynomials, got " + j.dump());
  std::vector<QPoly> out;
  for (const auto& e : j) out.push_back(qpoly_from_json(e));
  return out;
}

}  // namespace

MomentSeq moments_from_json(const json& j) {
  if (j.is_object()) {
    if (!j.contains("mu")) throw Error(Errc::invalid_argument, "moment object lacks the \"mu\" field");
    return MomentSeq{qpolys_from_json(j.at("mu"))};
  }
  return MomentSeq{qpolys_from_json(j)};
}

JFraction jfraction_from_json(const json& j) {
  if (!j.is_object() || !j.contains("s") || !j.contains("t")) {
    throw Error(Errc::invalid_argument, "expected {\"s\": [...], \"t\": [...]}");
  }
  return JFraction(qpolys_from_json(j.at("s")), qpolys_from_json(j.at("t")));
}

}  // namespace eulerq
