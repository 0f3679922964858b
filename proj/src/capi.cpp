// SPDX-License-Identifier: Apache-2.0
#include "eulerq/eulerq.h"

#include <new>
#include <string>

#include "eulerq/commands.hpp"

struct eulerq_config {
  eulerq::RunConfig config;
};

struct eulerq_report {
  eulerq_status status;
  std::string json;
  std::string text;
};

namespace {

thread_local std::string g_last_error;

eulerq_status fail(eulerq_status st, std::string msg) {
  g_last_error = std::move(msg);
  return st;
}

// Maps exceptions escaping the command layer onto status codes.
template <class F>
eulerq_status guarded(F&& f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const eulerq::Error& e) {
    const bool usage = e.code() == eulerq::Errc::invalid_argument || e.code() == eulerq::Errc::insufficient_length;
    return fail(usage ? EULERQ_USAGE_ERROR : EULERQ_INTERNAL_ERROR,
                std::string(eulerq::errc_name(e.code())) + ": " + e.what());
  } catch (const std::bad_alloc&) {
    return fail(EULERQ_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(EULERQ_INTERNAL_ERROR, e.what());
  }
}

}  // namespace

extern "C" {

const char* eulerq_version(void) { return eulerq::kVersion; }

eulerq_status eulerq_config_create(const char* command, eulerq_config** out) {
  if (out == nullptr) return fail(EULERQ_USAGE_ERROR, "eulerq_config_create: out is NULL");
  *out = nullptr;
  if (command == nullptr) return fail(EULERQ_USAGE_ERROR, "eulerq_config_create: command is NULL");
  return guarded([&] {
    auto* cfg = new eulerq_config{};
    cfg->config.command = eulerq::parse_command(command);
    *out = cfg;
    return EULERQ_OK;
  });
}

eulerq_status eulerq_config_set(eulerq_config* cfg, const char* key, const char* value) {
  if (cfg == nullptr || key == nullptr || value == nullptr) {
    return fail(EULERQ_USAGE_ERROR, "eulerq_config_set: NULL argument");
  }
  return guarded([&] {
    cfg->config.set(key, value);
    return EULERQ_OK;
  });
}

void eulerq_config_destroy(eulerq_config* cfg) { delete cfg; }

eulerq_status eulerq_run(const eulerq_config* cfg, eulerq_report** out) {
  if (out == nullptr) return fail(EULERQ_USAGE_ERROR, "eulerq_run: out is NULL");
  *out = nullptr;
  if (cfg == nullptr) return fail(EULERQ_USAGE_ERROR, "eulerq_run: config is NULL");
  return guarded([&] {
    const eulerq::RunResult r = eulerq::run(cfg->config);
    auto* rep = new eulerq_report{static_cast<eulerq_status>(r.status), r.envelope.dump(2) + "\n",
                                  eulerq::render_text(r.envelope)};
    *out = rep;
    return rep->status;
  });
}

const char* eulerq_report_json(const eulerq_report* rep) { return rep ? rep->json.c_str() : ""; }

const char* eulerq_report_text(const eulerq_report* rep) { return rep ? rep->text.c_str() : ""; }

eulerq_status eulerq_report_status(const eulerq_report* rep) { return rep ? rep->status : EULERQ_USAGE_ERROR; }

void eulerq_report_destroy(eulerq_report* rep) { delete rep; }

const char* eulerq_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
