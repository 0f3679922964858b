// SPDX-License-Identifier: Apache-2.0
// Exercises the shared library through eulerq.h only, plus the CLI binary.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>

#include "eulerq/eulerq.h"

using nlohmann::json;

namespace {

struct Run {
  eulerq_status status;
  json envelope;
  std::string text;
};

Run run(const char* command, const std::map<std::string, std::string>& opts) {
  eulerq_config* cfg = nullptr;
  REQUIRE(eulerq_config_create(command, &cfg) == EULERQ_OK);
  for (const auto& [k, v] : opts) REQUIRE(eulerq_config_set(cfg, k.c_str(), v.c_str()) == EULERQ_OK);
  eulerq_report* rep = nullptr;
  const eulerq_status st = eulerq_run(cfg, &rep);
  eulerq_config_destroy(cfg);
  Run out{st, json(), ""};
  if (rep != nullptr) {
    CHECK(eulerq_report_status(rep) == st);
    out.envelope = json::parse(eulerq_report_json(rep));
    out.text = eulerq_report_text(rep);
    eulerq_report_destroy(rep);
  }
  return out;
}

bool has_float(const json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured()) {
    for (const auto& e : j) {
      if (has_float(e)) return true;
    }
  }
  return false;
}

struct Shell {
  int code;
  std::string out;
};

Shell shell(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + EULERQ_CLI_PATH + " " + args + " 2>/dev/null";
  Shell r{0, ""};
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("version and handle lifecycle") {
  CHECK(std::string(eulerq_version()) == "1.0.0");
  eulerq_config* cfg = nullptr;
  CHECK(eulerq_config_create("nonsense", &cfg) == EULERQ_USAGE_ERROR);
  CHECK(cfg == nullptr);
  CHECK(std::string(eulerq_last_error()).find("unknown command") != std::string::npos);
  CHECK(eulerq_config_create(nullptr, &cfg) == EULERQ_USAGE_ERROR);
  CHECK(eulerq_config_create("table", nullptr) == EULERQ_USAGE_ERROR);

  REQUIRE(eulerq_config_create("table", &cfg) == EULERQ_OK);
  CHECK(std::string(eulerq_last_error()).empty());
  CHECK(eulerq_config_set(cfg, "colour", "blue") == EULERQ_USAGE_ERROR);
  CHECK(eulerq_config_set(cfg, "t", "0.5") == EULERQ_USAGE_ERROR);
  CHECK(eulerq_config_set(cfg, "nmax", "-3") == EULERQ_USAGE_ERROR);
  CHECK(eulerq_config_set(cfg, "family", "TypeZ") == EULERQ_USAGE_ERROR);
  CHECK(eulerq_config_set(cfg, "family", nullptr) == EULERQ_USAGE_ERROR);
  eulerq_report* rep = reinterpret_cast<eulerq_report*>(&cfg);
  CHECK(eulerq_run(cfg, &rep) == EULERQ_USAGE_ERROR);  // no family given
  CHECK(rep == nullptr);
  CHECK(eulerq_run(nullptr, &rep) == EULERQ_USAGE_ERROR);
  eulerq_config_destroy(cfg);
  eulerq_config_destroy(nullptr);
  eulerq_report_destroy(nullptr);
  CHECK(std::string(eulerq_report_json(nullptr)).empty());
}

TEST_CASE("table command: type-B rows by enumeration") {
  const Run r = run("table", {{"family", "TypeB"}, {"nmax", "4"}, {"route", "enum"}});
  CHECK(r.status == EULERQ_OK);
  CHECK(r.envelope["command"] == "table");
  CHECK(r.envelope["result"]["rows"] == json::parse(R"([["1"],["1","1"],["1","6","1"],["1","23","23","1"]])"));
  CHECK(r.envelope["meta"]["tool"] == "eulerq");
  CHECK_FALSE(has_float(r.envelope));
}

TEST_CASE("table command rejects out-of-range and missing parameters") {
  eulerq_config* cfg = nullptr;
  REQUIRE(eulerq_config_create("table", &cfg) == EULERQ_OK);
  REQUIRE(eulerq_config_set(cfg, "family", "TypeA_qt") == EULERQ_OK);
  eulerq_report* rep = nullptr;
  CHECK(eulerq_run(cfg, &rep) == EULERQ_USAGE_ERROR);
  REQUIRE(eulerq_config_set(cfg, "t", "1/2") == EULERQ_OK);
  REQUIRE(eulerq_config_set(cfg, "nmax", "1000") == EULERQ_OK);
  CHECK(eulerq_run(cfg, &rep) == EULERQ_USAGE_ERROR);
  REQUIRE(eulerq_config_set(cfg, "nmax", "5") == EULERQ_OK);
  REQUIRE(eulerq_config_set(cfg, "route", "enum") == EULERQ_OK);
  CHECK(eulerq_run(cfg, &rep) == EULERQ_OK);
  eulerq_report_destroy(rep);
  eulerq_config_destroy(cfg);
}

TEST_CASE("check command") {
  CHECK(run("check", {{"family", "TypeA"}, {"nmax", "9"}, {"mode", "strong"}}).status == EULERQ_OK);
  const Run z = run("check", {{"family", "TypeB"}, {"nmax", "50"}, {"mode", "zhu"}});
  CHECK(z.status == EULERQ_OK);
  CHECK(z.envelope["result"]["report"]["verdict"] == true);
  CHECK(z.envelope["result"]["report"]["checked_range"]["n_max"] == 50);
  // a > d is outside b >= 0, d >= a >= 0; q-log-convexity of T_n fails
  const Run bad = run("check", {{"family", "General"}, {"a", "3"}, {"d", "1"}, {"nmax", "6"}, {"mode", "qlcx"}});
  CHECK(bad.status == EULERQ_CHECK_FAILED);
  CHECK_FALSE(bad.envelope["result"]["report"]["witnesses"].empty());
}

TEST_CASE("prodmat command") {
  const Run r = run("prodmat", {{"family", "General"}, {"a", "1"}, {"d", "3"}, {"order", "6"}});
  CHECK(r.status == EULERQ_OK);
  const json& res = r.envelope["result"];
  CHECK(res["tridiagonal"] == true);
  CHECK(res["direct_equals_formula"] == true);
  REQUIRE(res["s"].size() == 5);
  for (int i = 0; i < 5; ++i) {
    CHECK(res["s"][i] == json::array({std::to_string(3 * i + 1), std::to_string(3 * i + 2)}));
  }
}

TEST_CASE("cfrac command") {
  const Run r = run("cfrac", {{"family", "TypeA_qt"}, {"t", "3"}, {"depth", "2"}});
  CHECK(r.status == EULERQ_OK);
  CHECK(r.envelope["result"]["s"][0] == json::array({"3"}));
  CHECK(r.envelope["result"]["t"][0] == json::array({"0", "3"}));
}

TEST_CASE("invert-moments command") {
  const Run ok = run("invert-moments", {{"moments", R"({"mu": [["1"],["1","1"],["1","6","1"],["1","23","23","1"]]})"}});
  CHECK(ok.status == EULERQ_OK);
  CHECK(ok.envelope["result"]["s"] == json::parse(R"([["1","1"],["3","3"]])"));
  CHECK(ok.envelope["result"]["t"] == json::parse(R"([["0","4"]])"));
  CHECK(ok.envelope["result"]["roundtrip"] == true);

  const Run bad = run("invert-moments", {{"moments", "[1,0,0,0,0,0]"}, {"depth", "3"}});
  CHECK(bad.status == EULERQ_CHECK_FAILED);
  CHECK(bad.envelope["result"]["error"]["code"] == "not_quasi_definite");

  eulerq_config* cfg = nullptr;
  REQUIRE(eulerq_config_create("invert-moments", &cfg) == EULERQ_OK);
  REQUIRE(eulerq_config_set(cfg, "moments", "{not json") == EULERQ_OK);
  eulerq_report* rep = nullptr;
  CHECK(eulerq_run(cfg, &rep) == EULERQ_USAGE_ERROR);
  eulerq_config_destroy(cfg);
}

TEST_CASE("conjecture command") {
  const Run r = run("conjecture", {{"triangle", "B"}, {"seq", "constant"}, {"nmax", "6"}});
  CHECK(r.status == EULERQ_OK);
  CHECK(r.envelope["result"]["z"] == json::parse(R"(["1","2","8","48","384","3840","46080"])"));
  const Run bad_seq = run("conjecture", {{"seq", "/nonexistent/x.json"}});
  CHECK(bad_seq.status == EULERQ_USAGE_ERROR);
}

TEST_CASE("selftest passes and detects an injected fault") {
  const Run good = run("selftest", {});
  CHECK(good.status == EULERQ_OK);
  CHECK(good.envelope["result"]["all_pass"] == true);
  CHECK(good.envelope["result"].contains("b_at_t0_discrepancy"));

  const Run bad = run("selftest", {{"inject-fault", "t1-sign"}});
  CHECK(bad.status == EULERQ_CHECK_FAILED);
  bool cfrac_fail = false, egf_enum_fail = false;
  for (const auto& cell : bad.envelope["result"]["matrix"]) {
    if (cell["pass"] == false) {
      const std::string pair = cell["pair"];
      if (pair.find("cfrac") != std::string::npos) cfrac_fail = true;
      if (pair == "egf=enum") egf_enum_fail = true;
    }
  }
  CHECK(cfrac_fail);
  CHECK_FALSE(egf_enum_fail);
}

TEST_CASE("reports are deterministic byte for byte") {
  const std::map<std::string, std::string> opts{{"family", "TypeB_qt"}, {"t", "1/2"}, {"nmax", "8"}};
  CHECK(run("table", opts).envelope.dump() == run("table", opts).envelope.dump());
}

TEST_CASE("CLI exit codes and output") {
  const Shell table = shell("table --family TypeB --nmax 4 --route enum");
  CHECK(table.code == 0);
  CHECK(json::parse(table.out)["result"]["rows"][3] == json::array({"1", "23", "23", "1"}));
  CHECK(shell("check --family TypeA --nmax 9 --mode strong").code == 0);
  CHECK(shell("check --family General --a 3 --d 1 --nmax 6 --mode qlcx").code == 1);
  CHECK(shell("table --family Nope").code == 2);
  CHECK(shell("table --family TypeB --t 0.5").code == 2);
  CHECK(shell("table --family TypeB --bogus 1").code == 2);
  CHECK(shell("").code == 2);
  CHECK(shell("selftest --inject-fault t1-sign").code == 1);
  const Shell text = shell("table --family TypeB --nmax 3 --format text");
  CHECK(text.code == 0);
  CHECK(text.out.find("1 + 6*q + q^2") != std::string::npos);
}

TEST_CASE("CLI honours EULERQ_OUTPUT_DIR") {
  const auto dir = std::filesystem::temp_directory_path() / "eulerq_capi_test_out";
  std::filesystem::remove_all(dir);
  const Shell r = shell("cfrac --family TypeB --depth 3", "EULERQ_OUTPUT_DIR=" + dir.string());
  CHECK(r.code == 0);
  std::ifstream in(dir / "cfrac.json");
  REQUIRE(in);
  CHECK(json::parse(in) == json::parse(r.out));
  std::filesystem::remove_all(dir);
}
