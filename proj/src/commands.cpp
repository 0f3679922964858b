// SPDX-License-Identifier: Apache-2.0
#include "eulerq/commands.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "eulerq/jacobi.hpp"
#include "eulerq/riordan.hpp"
#include "eulerq/series.hpp"

namespace eulerq {

namespace {

std::size_t parse_count(std::string_view key, std::string_view value) {
  std::size_t out = 0;
  const auto* end = value.data() + value.size();
  const auto res = std::from_chars(value.data(), end, out);
  if (res.ec != std::errc{} || res.ptr != end) {
    throw Error(Errc::invalid_argument, "--" + std::string(key) + " expects a non-negative integer, got '" +
                                            std::string(value) + "'");
  }
  return out;
}

std::size_t within(std::string_view what, std::size_t v, std::size_t lo, std::size_t hi) {
  if (v < lo || v > hi) {
    throw Error(Errc::invalid_argument, std::string(what) + " must lie in " + std::to_string(lo) + ".." +
                                            std::to_string(hi) + ", got " + std::to_string(v));
  }
  return v;
}

FamilySpec family_of(const RunConfig& c) {
  if (!c.family) throw Error(Errc::invalid_argument, std::string(command_name(c.command)) + " requires --family");
  FamilySpec spec{*c.family, c.t, c.a, c.d};
  family_params(spec);  // validates parameter presence
  return spec;
}

json params_json(const EgfParams& p) {
  return json{{"a", p.a.to_string()}, {"b", p.b.to_string()}, {"d", p.d.to_string()}};
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::invalid_argument, "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::invalid_argument, what + " is not valid JSON: " + e.what());
  }
}

// --- individual commands -----------------------------------------------------

RunResult run_table(const RunConfig& c) {
  const FamilySpec spec = family_of(c);
  const std::size_t rows = within("--nmax", c.nmax.value_or(kDefaultOrder), 1, kMaxRows);
  json result{{"family", spec.label()},
              {"params", params_json(family_params(spec))},
              {"route", route_name(c.route)},
              {"rows", to_json(family_table(spec, c.route, rows))}};
  return {RunStatus::ok, std::move(result)};
}

RunResult run_cfrac(const RunConfig& c) {
  const FamilySpec spec = family_of(c);
  const std::size_t depth = within("--depth", c.depth.value_or(6), 1, kMaxRows);
  const EgfParams p = family_params(spec);
  json result = to_json(jfraction_from_params(p.a, p.b, p.d, depth));
  result["family"] = spec.label();
  result["params"] = params_json(p);
  return {RunStatus::ok, std::move(result)};
}

RunResult run_prodmat(const RunConfig& c) {
  const FamilySpec spec = family_of(c);
  const std::size_t order = within("--order", c.order.value_or(kDefaultOrder), 3, kMaxRows);
  const EgfParams p = family_params(spec);
  const ExpRiordan r = eulerian_riordan(p.a, p.b, p.d, order);
  const ProductionData direct = production_matrix_direct(riordan_matrix(r));
  const CAndR cr = c_and_r(r);
  const ProductionData formula = production_matrix_formula(cr.c, cr.r, order - 1);
  const bool agree = direct.full == formula.full;

  json result{{"family", spec.label()}, {"params", params_json(p)}, {"tridiagonal", formula.tridiagonal},
              {"direct_equals_formula", agree}};
  if (formula.tridiagonal) {
    std::vector<QPoly> s, t;
    for (const auto& v : formula.s) s.push_back(v.to_poly());
    for (const auto& v : formula.t) t.push_back(v.to_poly());
    result["s"] = to_json(s);
    result["t"] = to_json(t);
  } else {
    result["s"] = json::array();
    result["t"] = json::array();
    result["matrix"] = to_json(formula.full);
  }
  return {agree ? RunStatus::ok : RunStatus::check_failed, std::move(result)};
}

RunResult run_check(const RunConfig& c) {
  const FamilySpec spec = family_of(c);
  const EgfParams p = family_params(spec);
  json result{{"family", spec.label()}, {"params", params_json(p)}, {"mode", c.mode}};
  bool verdict = false;
  if (c.mode == "zhu") {
    const int i_max = static_cast<int>(within("--nmax", c.nmax.value_or(10), 1, 1000));
    const ZhuReport z = zhu_criterion(jfraction_from_params(p.a, p.b, p.d, static_cast<std::size_t>(i_max) + 2), i_max);
    result["report"] = to_json(z.report);
    result["hypothesis_nonneg"] = z.hypothesis_nonneg;
    result["gap_at_zero"] = to_json(z.gap_at_zero);
    verdict = z.report.verdict;
  } else if (c.mode == "qlcx" || c.mode == "strong") {
    const std::size_t rows = within("--nmax", c.nmax.value_or(10), 3, kMaxRows);
    const auto seq = family_table(spec, c.route, rows);
    const ConvexityReport rep = c.mode == "strong" ? check_strong_q_log_convex(seq) : check_q_log_convex(seq);
    result["route"] = route_name(c.route);
    result["report"] = to_json(rep);
    verdict = rep.verdict;
  } else {
    throw Error(Errc::invalid_argument, "--mode must be qlcx, strong or zhu, got '" + c.mode + "'");
  }
  return {verdict ? RunStatus::ok : RunStatus::check_failed, std::move(result)};
}

RunResult run_conjecture(const RunConfig& c) {
  const int n_max = static_cast<int>(within("--nmax", c.nmax.value_or(12), 0, kTriangleCap));
  std::vector<BigRational> x;
  const auto& names = builtin_sequence_names();
  if (std::find(names.begin(), names.end(), c.seq) != names.end()) {
    x = builtin_sequence(c.seq, static_cast<std::size_t>(n_max) + 1);
  } else if (std::filesystem::exists(c.seq)) {
    x = rationals_from_json(parse_json_text(read_text(c.seq), "'" + c.seq + "'"));
  } else {
    throw Error(Errc::invalid_argument, "--seq '" + c.seq + "' is neither a builtin sequence nor a readable file");
  }
  const TransformExperiment exp = transform_preserves_lcx_experiment(c.triangle, x, n_max);
  json result{{"triangle", triangle_name(c.triangle)},
              {"seq", c.seq},
              {"x", to_json(std::vector<BigRational>(x.begin(), x.begin() + n_max + 1))},
              {"z", to_json(exp.z)},
              {"report", to_json(exp.report)}};
  return {exp.report.verdict ? RunStatus::ok : RunStatus::check_failed, std::move(result)};
}

RunResult run_invert_moments(const RunConfig& c) {
  if (c.moments.empty()) throw Error(Errc::invalid_argument, "invert-moments requires --moments <file|json>");
  const bool is_file = std::filesystem::exists(c.moments);
  const MomentSeq m =
      moments_from_json(parse_json_text(is_file ? read_text(c.moments) : c.moments, "--moments"));
  const std::size_t depth = c.depth.value_or(m.mu.size() / 2);
  within("--depth", depth, 1, kMaxRows);
  try {
    const JFraction j = jfraction_from_moments(m, depth);
    json result = to_json(j);
    const MomentSeq back = moments_motzkin(j, 2 * depth);
    result["roundtrip"] = std::equal(back.mu.begin(), back.mu.end(), m.mu.begin());
    return {RunStatus::ok, std::move(result)};
  } catch (const Error& e) {
    if (e.code() != Errc::not_quasi_definite) throw;
    return {RunStatus::check_failed, json{{"error", json{{"code", errc_name(e.code())}, {"message", e.what()}}}}};
  }
}

RunResult run_selftest(const RunConfig& c) {
  SelftestOptions opts;
  if (c.inject_fault == "t1-sign") {
    opts.flip_t1_sign = true;
  } else if (!c.inject_fault.empty() && c.inject_fault != "none") {
    throw Error(Errc::invalid_argument, "--inject-fault must be none or t1-sign");
  }
  if (c.nmax) opts.rows = within("--nmax", *c.nmax, 1, kMaxRows);
  const auto cells = agreement_matrix(opts);
  bool all_pass = true;
  json matrix = json::array();
  for (const auto& cell : cells) {
    all_pass = all_pass && cell.pass;
    matrix.push_back(json{{"family", cell.family}, {"n", cell.n}, {"pair", cell.pair}, {"pass", cell.pass}});
  }
  // Informational: B_n(q;0) enumerated next to the A_n(q) family rows.
  const std::size_t rows = std::min<std::size_t>(opts.rows, kDefaultCapB + 1);
  const FamilySpec b0{Family::TypeB_qt, BigRational(0), {}, {}};
  const FamilySpec a{Family::TypeA, {}, {}, {}};
  const FamilySpec a_shift{Family::TypeA_shifted, {}, {}, {}};
  json discrepancy{{"note", "B_n(q;0) by enumeration versus the A_n(q) and P(A_n,q) rows"},
                   {"B_n(q;0)", to_json(family_table(b0, Route::enumeration, rows))},
                   {"A_n(q)", to_json(family_table(a, Route::egf, rows))},
                   {"P(A_n,q)", to_json(family_table(a_shift, Route::egf, rows))}};
  json result{{"rows", opts.rows},
              {"fault", opts.flip_t1_sign ? "t1-sign" : "none"},
              {"all_pass", all_pass},
              {"matrix", std::move(matrix)},
              {"b_at_t0_discrepancy", std::move(discrepancy)}};
  return {all_pass ? RunStatus::ok : RunStatus::check_failed, std::move(result)};
}

}  // namespace

const char* command_name(Command c) {
  switch (c) {
    case Command::table: return "table";
    case Command::cfrac: return "cfrac";
    case Command::prodmat: return "prodmat";
    case Command::check: return "check";
    case Command::conjecture: return "conjecture";
    case Command::invert_moments: return "invert-moments";
    case Command::selftest: return "selftest";
  }
  return "unknown";
}

Command parse_command(std::string_view name) {
  for (Command c : {Command::table, Command::cfrac, Command::prodmat, Command::check, Command::conjecture,
                    Command::invert_moments, Command::selftest}) {
    if (name == command_name(c)) return c;
  }
  throw Error(Errc::invalid_argument, "unknown command '" + std::string(name) + "'");
}

void RunConfig::set(std::string_view key, std::string_view value) {
  if (key == "family") {
    family = parse_family(value);
  } else if (key == "t") {
    t = BigRational::parse(value);
  } else if (key == "a") {
    a = BigRational::parse(value);
  } else if (key == "d") {
    d = BigRational::parse(value);
  } else if (key == "nmax") {
    nmax = parse_count(key, value);
  } else if (key == "route") {
    route = parse_route(value);
  } else if (key == "mode") {
    mode = std::string(value);
  } else if (key == "triangle") {
    triangle = parse_triangle(value);
  } else if (key == "seq") {
    seq = std::string(value);
  } else if (key == "order") {
    order = parse_count(key, value);
  } else if (key == "depth") {
    depth = parse_count(key, value);
  } else if (key == "moments") {
    moments = std::string(value);
  } else if (key == "inject-fault") {
    inject_fault = std::string(value);
  } else {
    throw Error(Errc::invalid_argument, "unknown option '" + std::string(key) + "'");
  }
}

json RunConfig::to_json() const {
  json j{{"command", command_name(command)}};
  if (family) j["family"] = family_name(*family);
  if (t) j["t"] = t->to_string();
  if (a) j["a"] = a->to_string();
  if (d) j["d"] = d->to_string();
  if (nmax) j["nmax"] = *nmax;
  if (order) j["order"] = *order;
  if (depth) j["depth"] = *depth;
  switch (command) {
    case Command::table: j["route"] = route_name(route); break;
    case Command::check:
      j["mode"] = mode;
      if (mode != "zhu") j["route"] = route_name(route);
      break;
    case Command::conjecture:
      j["triangle"] = triangle_name(triangle);
      j["seq"] = seq;
      break;
    case Command::invert_moments: j["moments"] = moments; break;
    case Command::selftest: j["inject_fault"] = inject_fault.empty() ? "none" : inject_fault; break;
    default: break;
  }
  return j;
}

RunResult run(const RunConfig& config) {
  RunResult r;
  switch (config.command) {
    case Command::table: r = run_table(config); break;
    case Command::cfrac: r = run_cfrac(config); break;
    case Command::prodmat: r = run_prodmat(config); break;
    case Command::check: r = run_check(config); break;
    case Command::conjecture: r = run_conjecture(config); break;
    case Command::invert_moments: r = run_invert_moments(config); break;
    case Command::selftest: r = run_selftest(config); break;
  }
  r.envelope = json{{"command", command_name(config.command)},
                    {"config", config.to_json()},
                    {"result", std::move(r.envelope)},
                    {"meta", json{{"tool", "eulerq"}, {"version", kVersion}, {"schema", 1}}}};
  return r;
}

std::vector<AgreementCell> agreement_matrix(const SelftestOptions& opts) {
  std::vector<AgreementCell> cells;
  for (const FamilySpec& spec : standard_instances()) {
    const EgfParams p = family_params(spec);
    const auto egf = family_table(spec, Route::egf, opts.rows);
    JFraction j = jfraction_from_params(p.a, p.b, p.d, required_depth(opts.rows));
    if (opts.flip_t1_sign && !j.t.empty()) j.t[0] = -j.t[0];
    const auto cfrac = moments_motzkin(j, opts.rows).mu;

    std::vector<QPoly> enumerated, recurrence;
    const std::size_t cap_rows =
        std::min<std::size_t>(opts.rows, (spec.family == Family::TypeB || spec.family == Family::TypeB_qt)
                                             ? kDefaultCapB + 1
                                             : kDefaultCapA + 1);
    if (route_available(spec, Route::enumeration, cap_rows)) enumerated = family_table(spec, Route::enumeration, cap_rows);
    if (route_available(spec, Route::recurrence, opts.rows)) recurrence = family_table(spec, Route::recurrence, opts.rows);

    const std::string label = spec.label();
    for (std::size_t n = 0; n < opts.rows; ++n) {
      cells.push_back({label, n, "egf=cfrac", egf[n] == cfrac[n]});
      if (n < enumerated.size()) {
        cells.push_back({label, n, "egf=enum", egf[n] == enumerated[n]});
        cells.push_back({label, n, "cfrac=enum", cfrac[n] == enumerated[n]});
      }
      if (n < recurrence.size()) cells.push_back({label, n, "egf=recurrence", egf[n] == recurrence[n]});
    }
  }
  return cells;
}

// --- text rendering -----------------------------------------------------------

namespace {

std::string poly_text(const json& p) {
  std::vector<BigRational> c;
  for (const auto& e : p) c.push_back(BigRational::parse(e.get<std::string>()));
  return QPoly(std::move(c)).to_string();
}

void render_report(std::ostringstream& os, const json& rep) {
  os << "verdict: " << (rep.at("verdict").get<bool>() ? "PASS" : "FAIL") << "  (m_max="
     << rep.at("checked_range").at("m_max") << ", n_max=" << rep.at("checked_range").at("n_max") << ")\n";
  for (const auto& w : rep.at("witnesses")) {
    os << "  witness m=" << w.at("m") << " n=" << w.at("n") << " coeff=" << w.at("coeff_index") << "\n";
  }
}

}  // namespace

std::string render_text(const json& env) {
  std::ostringstream os;
  const std::string cmd = env.at("command").get<std::string>();
  const json& r = env.at("result");
  if (cmd == "table") {
    os << r.at("family").get<std::string>() << "  route=" << r.at("route").get<std::string>() << "\n";
    std::size_t n = 0;
    for (const auto& row : r.at("rows")) os << std::setw(4) << n++ << "  " << poly_text(row) << "\n";
  } else if (cmd == "cfrac" || cmd == "prodmat" || cmd == "invert-moments") {
    if (r.contains("error")) {
      os << "error: " << r.at("error").at("message").get<std::string>() << "\n";
      return os.str();
    }
    if (r.contains("family")) os << r.at("family").get<std::string>() << "\n";
    if (r.contains("tridiagonal")) {
      os << "tridiagonal: " << (r.at("tridiagonal").get<bool>() ? "yes" : "no")
         << "  direct=formula: " << (r.at("direct_equals_formula").get<bool>() ? "yes" : "no") << "\n";
    }
    const auto& s = r.at("s");
    const auto& t = r.at("t");
    for (std::size_t i = 0; i < s.size(); ++i) {
      os << "  s_" << std::left << std::setw(3) << i << std::right << poly_text(s[i]);
      if (i < t.size()) os << "    t_" << i + 1 << " = " << poly_text(t[i]);
      os << "\n";
    }
  } else if (cmd == "check") {
    os << r.at("family").get<std::string>() << "  mode=" << r.at("mode").get<std::string>() << "\n";
    render_report(os, r.at("report"));
    if (r.contains("hypothesis_nonneg")) {
      os << "nonnegative s_i, t_i: " << (r.at("hypothesis_nonneg").get<bool>() ? "yes" : "no")
         << "\ngap at i=0: " << poly_text(r.at("gap_at_zero")) << "\n";
    }
  } else if (cmd == "conjecture") {
    os << "triangle " << r.at("triangle").get<std::string>() << "  seq=" << r.at("seq").get<std::string>() << "\n";
    std::size_t n = 0;
    for (const auto& z : r.at("z")) os << std::setw(4) << n++ << "  " << z.get<std::string>() << "\n";
    render_report(os, r.at("report"));
  } else if (cmd == "selftest") {
    std::size_t pass = 0, total = 0;
    for (const auto& cell : r.at("matrix")) {
      ++total;
      if (cell.at("pass").get<bool>()) {
        ++pass;
      } else {
        os << "FAIL " << cell.at("family").get<std::string>() << " n=" << cell.at("n") << " "
           << cell.at("pair").get<std::string>() << "\n";
      }
    }
    os << pass << "/" << total << " agreement cells pass" << (r.at("all_pass").get<bool>() ? "" : "  (FAILURES)")
       << "\n";
  } else {
    os << r.dump(2) << "\n";
  }
  return os.str();
}

}  // namespace eulerq
