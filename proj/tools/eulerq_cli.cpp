// SPDX-License-Identifier: Apache-2.0
// eulerq command-line front end. Talks to the library only through eulerq.h.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "eulerq/eulerq.h"

namespace {

struct Options {
  std::map<std::string, std::string> values;  // key -> raw value, only options actually given
  std::string format = "json";
};

// Registers a string option that is forwarded verbatim to eulerq_config_set.
void forward(CLI::App* sub, Options& opts, const std::string& key, const std::string& help) {
  sub->add_option_function<std::string>(
      "--" + key, [&opts, key](const std::string& v) { opts.values[key] = v; }, help);
}

int write_output_copy(const std::string& command, const char* json) {
  const char* dir = std::getenv("EULERQ_OUTPUT_DIR");
  if (dir == nullptr || *dir == '\0') return 0;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::ofstream out(std::filesystem::path(dir) / (command + ".json"));
  if (!out) {
    std::cerr << "eulerq: cannot write to EULERQ_OUTPUT_DIR '" << dir << "'\n";
    return EULERQ_INTERNAL_ERROR;
  }
  out << json;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eulerian polynomials of Coxeter groups: EGF, J-fraction and enumeration routes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(eulerq_version()));

  Options opts;
  const std::string family_help = "TypeA_shifted | TypeA | TypeA_qt | TypeB | TypeB_qt | General";

  struct Sub {
    const char* name;
    const char* help;
    std::vector<std::pair<const char*, std::string>> keys;
  };
  const std::vector<Sub> subs{
      {"table", "print rows 0..nmax-1 of a family",
       {{"family", family_help}, {"t", "t parameter (rational)"}, {"a", "a parameter"}, {"d", "d parameter"},
        {"nmax", "number of rows (default 12)"}, {"route", "egf | cfrac | enum | recurrence"}}},
      {"cfrac", "closed-form J-fraction coefficients s_i, t_i",
       {{"family", family_help}, {"t", "t parameter"}, {"a", "a parameter"}, {"d", "d parameter"},
        {"depth", "number of levels (default 6)"}}},
      {"prodmat", "production matrix of the Riordan array, direct and by formula",
       {{"family", family_help}, {"t", "t parameter"}, {"a", "a parameter"}, {"d", "d parameter"},
        {"order", "truncation order N (default 12)"}}},
      {"check", "q-log-convexity checks",
       {{"family", family_help}, {"t", "t parameter"}, {"a", "a parameter"}, {"d", "d parameter"},
        {"nmax", "rows, or i_max for zhu (default 10)"}, {"route", "egf | cfrac | enum | recurrence"},
        {"mode", "qlcx | strong | zhu (default strong)"}}},
      {"conjecture", "log-convexity of z_n = sum_k T(n,k) x_k",
       {{"triangle", "A | B"}, {"seq", "builtin name or path to a JSON array"},
        {"nmax", "largest n (default 12)"}}},
      {"invert-moments", "recover s_i, t_i from a moment sequence",
       {{"moments", "path or inline JSON: [..] or {\"mu\": [..]}"}, {"depth", "levels (default len/2)"}}},
      {"selftest", "cross-route agreement matrix",
       {{"nmax", "rows per instance (default 12)"}, {"inject-fault", "none | t1-sign"}}},
  };

  std::string chosen;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    for (const auto& [key, help] : s.keys) forward(sub, opts, key, help);
    sub->add_option("--format", opts.format, "json | text")->check(CLI::IsMember({"json", "text"}));
    sub->callback([&chosen, name = std::string(s.name)] { chosen = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : EULERQ_USAGE_ERROR;
  }

  eulerq_config* cfg = nullptr;
  if (eulerq_config_create(chosen.c_str(), &cfg) != EULERQ_OK) {
    std::cerr << "eulerq: " << eulerq_last_error() << "\n";
    return EULERQ_USAGE_ERROR;
  }
  for (const auto& [key, value] : opts.values) {
    if (eulerq_config_set(cfg, key.c_str(), value.c_str()) != EULERQ_OK) {
      std::cerr << "eulerq: " << eulerq_last_error() << "\n";
      eulerq_config_destroy(cfg);
      return EULERQ_USAGE_ERROR;
    }
  }

  eulerq_report* rep = nullptr;
  const eulerq_status st = eulerq_run(cfg, &rep);
  eulerq_config_destroy(cfg);
  if (rep == nullptr) {
    std::cerr << "eulerq: " << eulerq_last_error() << "\n";
    return st;
  }
  std::fputs(opts.format == "text" ? eulerq_report_text(rep) : eulerq_report_json(rep), stdout);
  int rc = write_output_copy(chosen, eulerq_report_json(rep));
  eulerq_report_destroy(rep);
  if (rc == 0) rc = st;
  return rc;
}
