// Copyright 2026 the abelos authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. All computation goes through the C API of the
// shared library; this file only assembles JSON requests from flags or a
// config file and routes replies to stdout / the chosen output file.

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "abelos.h"

namespace {

using nlohmann::json;

int finish(abelos_status st, char* payload, const std::string& out_path) {
  if (payload != nullptr) {
    if (out_path.empty()) {
      std::cout << payload;
      if (*payload != '\0' && payload[std::strlen(payload) - 1] != '\n')
        std::cout << "\n";
    } else {
      std::ofstream f(out_path, std::ios::binary);
      f << payload;
    }
    abelos_string_free(payload);
  }
  if (st != ABELOS_OK) std::cerr << "error: " << abelos_last_error() << "\n";
  return static_cast<int>(st);
}

json load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) {
    std::cerr << "error: cannot read " << path << "\n";
    std::exit(2);
  }
  json j;
  try {
    f >> j;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::exit(2);
  }
  return j;
}

// Enumeration-cap override for the lab; unset or unparsable means default.
std::optional<std::uint64_t> env_enum_cap() {
  const char* v = std::getenv("ABELOS_MAX_ENUM");
  if (v == nullptr || *v == '\0') return std::nullopt;
  char* end = nullptr;
  unsigned long long cap = std::strtoull(v, &end, 10);
  if (end == nullptr || *end != '\0') return std::nullopt;
  return cap;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"abelos: evaluation-code parameters on abelian surfaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", abelos_version());

  std::string config_path, out_path;

  // --- classify -------------------------------------------------------------
  auto* classify = app.add_subcommand(
      "classify", "isogeny-class report: simplicity, NPP, ell_max");
  std::int64_t q = 0, t1 = 0, t2 = 0, tr_e = 0;
  bool weil_restriction = false;
  classify->add_option("--q", q, "field size of the surface");
  classify->add_option("--t1", t1, "trace coefficient t1");
  classify->add_option("--t2", t2, "coefficient t2");
  classify->add_flag("--weil-restriction", weil_restriction,
                     "surface is the Weil restriction of E/F_{q^2}");
  classify->add_option("--tr-e", tr_e, "trace of E over F_{q^2}");
  classify->add_option("--config", config_path, "JSON request file");
  classify->add_option("--out", out_path, "write reply to this file");

  // --- bound ----------------------------------------------------------------
  auto* bound = app.add_subcommand(
      "bound", "distance lower bounds for C(A, rH) on a surface");
  std::int64_t h2 = 2, r = 3;
  int ell = 1, galois_e = 1;
  bool sharpened = false, unsafe_ell = false;
  bound->add_option("--q", q, "field size");
  bound->add_option("--t1", t1, "trace coefficient t1");
  bound->add_option("--t2", t2, "coefficient t2");
  bound->add_option("--h2", h2, "self-intersection H^2 (even, >= 2)");
  bound->add_option("--r", r, "multiple of H (r >= 3)");
  bound->add_option("--ell", ell, "minimum excluded curve genus + 1");
  bound->add_option("--e", galois_e, "Galois refinement degree");
  bound->add_flag("--weil-restriction", weil_restriction,
                  "surface is the Weil restriction of E/F_{q^2}");
  bound->add_option("--tr-e", tr_e, "trace of E over F_{q^2}");
  bound->add_flag("--sharpened", sharpened, "also report the sharpened max");
  bound->add_flag("--unsafe-ell", unsafe_ell,
                  "skip the ell licensing check (watermarked output)");
  bound->add_option("--config", config_path, "JSON request file");
  bound->add_option("--out", out_path, "write reply to this file");

  // --- search ---------------------------------------------------------------
  auto* search = app.add_subcommand(
      "search", "bound table over a parameter grid, versioned CSV");
  std::vector<std::uint32_t> grid_q;
  std::string source = "all", policy = "licensed-only";
  std::int64_t r_min = 3, r_max = 3;
  std::vector<int> ells{1};
  search->add_option("--q", grid_q, "field sizes")->delimiter(',');
  search->add_option("--source", source,
                     "trace source: all | weil-restriction | explicit");
  search->add_option("--h2", h2, "self-intersection H^2");
  search->add_option("--r-min", r_min, "smallest r");
  search->add_option("--r-max", r_max, "largest r");
  search->add_option("--ells", ells, "ell values")->delimiter(',');
  search->add_option("--policy", policy, "licensed-only | unsafe");
  search->add_option("--config", config_path, "JSON request file");
  search->add_option("--out", out_path, "write the CSV to this file");

  // --- count ----------------------------------------------------------------
  auto* count = app.add_subcommand(
      "count", "exact point counts of an elliptic or genus-2 curve");
  std::string curve_path;
  std::vector<std::uint32_t> degrees{1, 2};
  count->add_option("--curve", curve_path, "curve JSON file")
      ->check(CLI::ExistingFile);
  count->add_option("--degrees", degrees, "extension degrees")->delimiter(',');
  count->add_option("--config", config_path, "JSON request file");
  count->add_option("--out", out_path, "write reply to this file");

  // --- lab ------------------------------------------------------------------
  auto* lab = app.add_subcommand(
      "lab", "build a product code E1 x E2 and measure it exactly");
  std::string curve1_path, curve2_path, mode = "punctured";
  std::uint64_t cap = 0;
  bool dump_matrix = false, no_exact = false;
  lab->add_option("--curve1", curve1_path, "first curve JSON file")
      ->check(CLI::ExistingFile);
  lab->add_option("--curve2", curve2_path, "second curve JSON file")
      ->check(CLI::ExistingFile);
  lab->add_option("--r", r, "multiple of H");
  lab->add_option("--mode", mode, "punctured | full");
  lab->add_option("--cap", cap, "enumeration cap (default 10^7)");
  lab->add_flag("--dump-matrix", dump_matrix, "include the generator matrix");
  lab->add_flag("--rank-only", no_exact, "skip the distance enumeration");
  lab->add_option("--config", config_path, "JSON request file");
  lab->add_option("--out", out_path, "write reply to this file");

  // --- phi-max --------------------------------------------------------------
  auto* phi_max = app.add_subcommand(
      "phi-max", "exact maximum of the polygon objective, brute force");
  std::string objective = "theorem";
  phi_max->add_option("--q", q, "field size");
  phi_max->add_option("--t1", t1, "trace coefficient t1");
  phi_max->add_option("--h2", h2, "self-intersection H^2");
  phi_max->add_option("--r", r, "multiple of H");
  phi_max->add_option("--ell", ell, "ell parameter");
  phi_max->add_option("--objective", objective, "theorem | sharpened");
  phi_max->add_option("--config", config_path, "JSON request file");
  phi_max->add_option("--out", out_path, "write reply to this file");

  // --- verify ---------------------------------------------------------------
  auto* verify = app.add_subcommand(
      "verify", "run the oracle/property suite; exit 0 iff all pass");
  std::string suite = "all";
  verify->add_option("--suite", suite, "all | lab-only | bounds-only");
  verify->add_option("--out", out_path, "write the JSON summary to this file");

  CLI11_PARSE(app, argc, argv);

  char* reply = nullptr;

  if (classify->parsed()) {
    json req;
    if (!config_path.empty()) req = load_config(config_path);
    if (weil_restriction) {
      req["weil_restriction"] = true;
      req["q"] = q;
      req["tr_e"] = tr_e;
    } else if (config_path.empty()) {
      req["q"] = q;
      req["t1"] = t1;
      req["t2"] = t2;
    }
    abelos_status st = abelos_classify(req.dump().c_str(), &reply);
    return finish(st, reply, out_path);
  }

  if (bound->parsed()) {
    json req;
    if (!config_path.empty()) {
      req = load_config(config_path);
    } else {
      req = {{"q", q},   {"h2", h2},   {"r", r},
             {"ell", ell}, {"e", galois_e}};
      if (weil_restriction) {
        req["weil_restriction"] = true;
        req["tr_e"] = tr_e;
      } else {
        req["t1"] = t1;
        req["t2"] = t2;
      }
      if (sharpened) req["sharpened"] = true;
      if (unsafe_ell) req["unsafe_ell"] = true;
    }
    abelos_status st = abelos_bound(req.dump().c_str(), &reply);
    return finish(st, reply, out_path);
  }

  if (search->parsed()) {
    json req;
    if (!config_path.empty()) {
      req = load_config(config_path);
    } else {
      req = {{"q", grid_q},   {"source", source}, {"h2", h2},
             {"r_min", r_min}, {"r_max", r_max},  {"ells", ells},
             {"policy", policy}};
    }
    abelos_status st = abelos_search(req.dump().c_str(), &reply);
    return finish(st, reply, out_path);
  }

  if (count->parsed()) {
    json req;
    if (!config_path.empty()) {
      req = load_config(config_path);
    } else {
      if (curve_path.empty()) {
        std::cerr << "error: count needs --curve or --config\n";
        return 2;
      }
      req["curve"] = load_config(curve_path);
      req["degrees"] = degrees;
    }
    abelos_status st = abelos_count(req.dump().c_str(), &reply);
    return finish(st, reply, out_path);
  }

  if (lab->parsed()) {
    json req;
    if (!config_path.empty()) {
      req = load_config(config_path);
    } else {
      if (curve1_path.empty() || curve2_path.empty()) {
        std::cerr << "error: lab needs --curve1/--curve2 or --config\n";
        return 2;
      }
      req["curve1"] = load_config(curve1_path);
      req["curve2"] = load_config(curve2_path);
      req["r"] = r;
      req["mode"] = mode;
      if (cap != 0) req["cap"] = cap;
      if (no_exact) req["exact"] = false;
      if (dump_matrix) req["dump_matrix"] = true;
    }
    if (!req.contains("cap")) {
      if (auto env = env_enum_cap()) req["cap"] = *env;
    }
    abelos_status st = abelos_lab(req.dump().c_str(), &reply);
    return finish(st, reply, out_path);
  }

  if (phi_max->parsed()) {
    json req;
    if (!config_path.empty()) {
      req = load_config(config_path);
    } else {
      req = {{"q", q},   {"t1", t1},         {"h2", h2},
             {"r", r},   {"ell", ell},       {"objective", objective}};
    }
    abelos_status st = abelos_phi_max(req.dump().c_str(), &reply);
    return finish(st, reply, out_path);
  }

  // verify
  int all_pass = 0;
  abelos_status st = abelos_verify(suite.c_str(), &reply, &all_pass);
  if (reply != nullptr) {
    json summary = json::parse(reply);
    for (const auto& cr : summary["criteria"])
      std::cerr << (cr["pass"].get<bool>() ? "PASS" : "FAIL") << " "
                << cr["name"].get<std::string>() << " ("
                << cr["seconds"].get<double>() << " s): "
                << cr["details"].get<std::string>() << "\n";
  }
  int rc = finish(st, reply, out_path);
  if (rc != 0) return rc;
  return all_pass ? 0 : 4;
}
