#include "splinter/capi.h"

#include <cstring>
#include <string>

#include "splinter/cache.hpp"
#include "splinter/error.hpp"
#include "splinter/report.hpp"
#include "splinter/scenario.hpp"

using splinter::Errc;
using splinter::Error;

struct splinter_report {
  std::string machine;
  splinter::scen::Report parsed;
};

namespace {

thread_local std::string g_last_error;

splinter_status status_of(const Error& e) {
  switch (e.code()) {
    case Errc::Validation:
    case Errc::DimensionMismatch:
    case Errc::DegreeMismatch:
    case Errc::NotMonicInVariable:
    case Errc::UnsupportedDimension:
    case Errc::DegenerateMap:
      return SPLINTER_INVALID;
    default:
      return SPLINTER_INTERNAL;
  }
}

template <typename Fn>
splinter_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    return fn();
  } catch (const Error& e) {
    g_last_error = std::string(splinter::errc_name(e.code())) + ": " + e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SPLINTER_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return SPLINTER_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::map<std::string, std::string> collect_params(const char* const* keys, const char* const* values,
                                                  size_t nparams) {
  std::map<std::string, std::string> params;
  for (size_t i = 0; i < nparams; ++i) {
    if (!keys[i] || !values[i]) splinter::fail(Errc::Validation, "null parameter entry");
    params[keys[i]] = values[i];
  }
  return params;
}

}  // namespace

extern "C" {

const char* splinter_version(void) { return splinter::scen::kToolVersion; }

const char* splinter_last_error(void) { return g_last_error.c_str(); }

splinter_status splinter_run_scenario(const char* name, const char* const* keys,
                                      const char* const* values, size_t nparams,
                                      const char* cache_dir, int use_cache, splinter_report** out) {
  if (!out) return SPLINTER_INVALID;
  *out = nullptr;
  return guarded([&]() -> splinter_status {
    if (!name) splinter::fail(Errc::Validation, "null scenario name");
    auto params = collect_params(keys, values, nparams);
    std::string canon = splinter::scen::canonical_params(name, params);
    std::string key = splinter::scen::Cache::key_for(name, canon);

    if (cache_dir && use_cache) {
      splinter::scen::Cache cache{std::string(cache_dir)};
      if (auto hit = cache.get(key)) {
        auto rep = splinter::scen::Report::from_machine(*hit);
        *out = new splinter_report{*hit, std::move(rep)};
        return (*out)->parsed.expectations_ok() ? SPLINTER_OK : SPLINTER_MISMATCH;
      }
    }

    splinter::scen::Report rep = splinter::scen::run_scenario(name, params);
    std::string bytes = rep.machine();
    if (cache_dir && use_cache) {
      splinter::scen::Cache cache{std::string(cache_dir)};
      cache.put(key, bytes);
    }
    bool ok = rep.expectations_ok();
    *out = new splinter_report{std::move(bytes), std::move(rep)};
    return ok ? SPLINTER_OK : SPLINTER_MISMATCH;
  });
}

const char* splinter_report_machine(const splinter_report* report) {
  return report ? report->machine.c_str() : "";
}

splinter_status splinter_report_table(const splinter_report* report, char** out) {
  if (!report || !out) return SPLINTER_INVALID;
  return guarded([&]() -> splinter_status {
    *out = dup_string(report->parsed.table());
    return SPLINTER_OK;
  });
}

int splinter_report_expectations_ok(const splinter_report* report) {
  return report && report->parsed.expectations_ok() ? 1 : 0;
}

void splinter_report_release(splinter_report* report) { delete report; }

splinter_status splinter_list_scenarios(const char* filter, char** out) {
  if (!out) return SPLINTER_INVALID;
  return guarded([&]() -> splinter_status {
    std::string text;
    for (const auto& info : splinter::scen::list_scenarios(filter ? filter : "")) {
      text += info.name + "\n  " + info.doc + "\n";
      for (const auto& p : info.params)
        text += "  --" + p.name + " <" + p.kind + "> (default " + p.default_value + "): " + p.doc + "\n";
    }
    *out = dup_string(text);
    return SPLINTER_OK;
  });
}

splinter_status splinter_cache_get(const char* cache_dir, const char* name, const char* const* keys,
                                   const char* const* values, size_t nparams, char** out) {
  if (!out) return SPLINTER_INVALID;
  *out = nullptr;
  return guarded([&]() -> splinter_status {
    if (!name) splinter::fail(Errc::Validation, "null scenario name");
    auto params = collect_params(keys, values, nparams);
    std::string canon = splinter::scen::canonical_params(name, params);
    splinter::scen::Cache cache{cache_dir ? std::string(cache_dir) : std::string()};
    if (auto hit = cache.get(splinter::scen::Cache::key_for(name, canon))) *out = dup_string(*hit);
    return SPLINTER_OK;
  });
}

splinter_status splinter_cache_clear(const char* cache_dir) {
  return guarded([&]() -> splinter_status {
    splinter::scen::Cache cache{cache_dir ? std::string(cache_dir) : std::string()};
    cache.clear();
    return SPLINTER_OK;
  });
}

void splinter_string_release(char* s) { delete[] s; }

}  // extern "C"
