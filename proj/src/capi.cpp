// Copyright 2026 the abelos authors
// SPDX-License-Identifier: Apache-2.0

#include "abelos.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "core/productlab.hpp"
#include "core/report.hpp"
#include "core/verify.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

abelos_status status_of(const abelos::error& e) {
  if (e.is_cap()) return ABELOS_CAP_EXCEEDED;
  if (e.is_violation()) return ABELOS_BOUND_VIOLATION;
  return ABELOS_INVALID_INPUT;
}

// Runs fn() producing a std::string payload; fills *out and the status.
template <typename Fn>
abelos_status guarded(char** out, Fn&& fn) {
  if (out == nullptr) {
    g_last_error = "null output pointer";
    return ABELOS_INVALID_INPUT;
  }
  *out = nullptr;
  try {
    std::string payload = fn();
    *out = dup_string(payload);
    if (*out == nullptr) {
      g_last_error = "allocation failed";
      return ABELOS_INTERNAL;
    }
    g_last_error.clear();
    return ABELOS_OK;
  } catch (const abelos::error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const abelos::json::exception& e) {
    g_last_error = e.what();
    return ABELOS_INVALID_INPUT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ABELOS_INTERNAL;
  }
}

abelos::json parse_request(const char* request_json) {
  if (request_json == nullptr)
    abelos::fail(abelos::errc::parse_error, "null request");
  return abelos::json::parse(request_json);
}

}  // namespace

struct abelos_code {
  abelos::ProductSurfaceCode code;
};

extern "C" {

const char* abelos_version(void) { return "abelos 1.0.0"; }

const char* abelos_last_error(void) { return g_last_error.c_str(); }

void abelos_string_free(char* s) { std::free(s); }

abelos_status abelos_classify(const char* request_json, char** out_json) {
  return guarded(out_json, [&] {
    return abelos::run_classify(parse_request(request_json)).dump(2);
  });
}

abelos_status abelos_bound(const char* request_json, char** out_json) {
  return guarded(out_json, [&] {
    return abelos::run_bound(parse_request(request_json)).dump(2);
  });
}

abelos_status abelos_count(const char* request_json, char** out_json) {
  return guarded(out_json, [&] {
    return abelos::run_count(parse_request(request_json)).dump(2);
  });
}

abelos_status abelos_phi_max(const char* request_json, char** out_json) {
  return guarded(out_json, [&] {
    return abelos::run_phi_max(parse_request(request_json)).dump(2);
  });
}

abelos_status abelos_search(const char* request_json, char** out_csv) {
  return guarded(out_csv, [&] {
    return abelos::run_search_csv(parse_request(request_json));
  });
}

abelos_status abelos_verify(const char* suite, char** out_json,
                            int* out_all_pass) {
  bool all = true;
  abelos_status st = guarded(out_json, [&] {
    auto results = abelos::run_verify(suite != nullptr ? suite : "all");
    abelos::json arr = abelos::json::array();
    for (const auto& r : results) {
      all = all && r.pass;
      arr.push_back({{"name", r.name},
                     {"pass", r.pass},
                     {"details", r.details},
                     {"seconds", r.seconds}});
    }
    return abelos::json({{"criteria", arr}, {"all_pass", all}}).dump(2);
  });
  if (out_all_pass != nullptr) *out_all_pass = (st == ABELOS_OK && all) ? 1 : 0;
  return st;
}

abelos_status abelos_code_build(const char* request_json, abelos_code** out) {
  if (out == nullptr) {
    g_last_error = "null output pointer";
    return ABELOS_INVALID_INPUT;
  }
  *out = nullptr;
  try {
    abelos::json req = parse_request(request_json);
    auto E1 = abelos::parse_elliptic(req.at("curve1"));
    auto E2 = abelos::parse_elliptic(req.at("curve2"));
    int r = req.value("r", 3);
    abelos::EvalMode mode =
        req.value("mode", "punctured") == std::string("full")
            ? abelos::EvalMode::Full
            : abelos::EvalMode::Punctured;
    auto handle = new abelos_code{abelos::build_code(E1, E2, r, mode)};
    *out = handle;
    g_last_error.clear();
    return ABELOS_OK;
  } catch (const abelos::error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const abelos::json::exception& e) {
    g_last_error = e.what();
    return ABELOS_INVALID_INPUT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ABELOS_INTERNAL;
  }
}

abelos_status abelos_code_measure(const abelos_code* code,
                                  const char* options_json, char** out_json) {
  return guarded(out_json, [&] {
    if (code == nullptr)
      abelos::fail(abelos::errc::parse_error, "null code handle");
    std::uint64_t cap = abelos::kEnumCapDefault;
    if (options_json != nullptr && *options_json != '\0') {
      abelos::json opts = abelos::json::parse(options_json);
      cap = opts.value("cap", cap);
    }
    auto meas = abelos::measure(code->code, cap);
    auto rep = abelos::check_against_bounds(code->code, meas);
    return abelos::lab_json(rep).dump(2);
  });
}

abelos_status abelos_code_matrix(const abelos_code* code, char** out_json) {
  return guarded(out_json, [&] {
    if (code == nullptr)
      abelos::fail(abelos::errc::parse_error, "null code handle");
    abelos::json rows = abelos::json::array();
    for (const auto& row : code->code.rows) rows.push_back(row);
    abelos::json j;
    j["q"] = code->code.field->q();
    j["n"] = code->code.n;
    j["k"] = code->code.k;
    j["rows"] = rows;
    return j.dump(2);
  });
}

void abelos_code_free(abelos_code* code) { delete code; }

abelos_status abelos_lab(const char* request_json, char** out_json) {
  return guarded(out_json, [&] {
    return abelos::run_lab(parse_request(request_json)).dump(2);
  });
}

}  // extern "C"
