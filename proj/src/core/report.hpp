// Copyright 2026 the abelos authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ABELOS_CORE_REPORT_HPP
#define ABELOS_CORE_REPORT_HPP

#include <json.hpp>
#include <string>

#include "bounds.hpp"
#include "curves.hpp"
#include "productlab.hpp"

namespace abelos {

using json = nlohmann::json;

// --- curve input format -----------------------------------------------------
// {"p":5,"n":1,"model":"weierstrass","a":[a1,a2,a3,a4,a6]}
// {"p":7,"n":1,"model":"genus2","f":[...low-to-high...],"h":[...]}
EllipticCurveModel parse_elliptic(const json& j);
Genus2CurveModel parse_genus2(const json& j);

// --- JSON records -----------------------------------------------------------
json classification_json(const ClassificationReport& rep);
json bound_json(const BoundResult& res);
json lab_json(const LabReport& rep);

// classify from either explicit (q,t1,t2) or a Weil restriction (q, trE)
json run_classify(const json& request);

// {"q":..,"t1":..,"t2":..,"h2":..,"r":..,"ell":..,"e":..,"sharpened":..,
//  "unsafe_ell":..}
json run_bound(const json& request);

// point counting on a curve input; {"curve":{...},"degrees":[1,2]}
json run_count(const json& request);

// polygon maximum; {"q","t1","h2","r","ell","objective"}
json run_phi_max(const json& request);

// --- search sweeps ----------------------------------------------------------
// {"q":[...], "source":"all"|"weil-restriction"|"explicit",
//  "traces":[[t1,t2],...], "h2":2, "r_min":3, "r_max":5, "ells":[1,2],
//  "policy":"licensed-only"|"unsafe"}
// Emits the versioned CSV (schema v1), rows sorted by (q,t1,t2,r,ell),
// byte-identical across reruns.
std::string run_search_csv(const json& request);

// lab request: {"curve1":{...},"curve2":{...},"r":3,"mode":"punctured"|"full",
//  "exact":true,"cap":10000000,"dump_matrix":false}
json run_lab(const json& request);

// valid (t1, t2) pairs for a given q, ascending
std::vector<std::pair<std::int64_t, std::int64_t>> valid_weil_pairs(
    std::uint32_t q);

// smallest prime factor (the characteristic) of a prime power q
std::uint32_t char_of_prime_power(std::uint32_t q);

}  // namespace abelos

#endif
