// Copyright 2026 the abelos authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <array>
#include <sstream>
#include <vector>

#include "core/report.hpp"

using namespace abelos;

TEST_CASE("run_classify over explicit Weil data and restrictions") {
  auto j = run_classify(json{{"q", 7}, {"t1", 0}, {"t2", -7}});
  CHECK(j["npp"] == true);
  CHECK(j["ell_max"] == 2);
  CHECK(j["rule"] == "npp");

  auto w = run_classify(json{{"weil_restriction", true}, {"q", 16},
                             {"tr_e", 31}});
  CHECK(w["rule"] == "prop45-case-1");
  CHECK(w["t2"] == -31);

  CHECK_THROWS_AS(run_classify(json{{"q", 4}, {"t1", 9}, {"t2", 0}}), error);
}

TEST_CASE("run_bound emits the licensed sections") {
  auto j = run_bound(json{{"weil_restriction", true}, {"q", 16},
                          {"tr_e", 31}, {"r", 3}, {"ell", 2}});
  CHECK(j["general"]["d_lower"] == 4);
  CHECK(j["simple"]["d_lower"] == 144);
  CHECK(j["simple"]["winner"] == "phi(1)");

  // unlicensed ell: no "simple" section, no error
  auto u = run_bound(json{{"q", 16}, {"t1", 0}, {"t2", -31}, {"r", 3},
                          {"ell", 2}});
  CHECK_FALSE(u.contains("simple"));

  // haloui appears for the H^2 = 2, ell = 1 specialization
  auto h = run_bound(json{{"q", 16}, {"t1", 0}, {"t2", -31}, {"r", 3},
                          {"ell", 1}});
  CHECK(h["haloui"]["d_lower"] == 145);
}

TEST_CASE("run_count parses curves and reports counts") {
  json curve = {{"p", 7}, {"n", 1}, {"model", "genus2"},
                {"f", {1, 0, 0, 0, 0, 1}}};
  auto j = run_count(json{{"curve", curve}, {"degrees", {1, 2}}});
  CHECK(j["counts"]["1"] == 8);
  CHECK(j["counts"]["2"] == 50);
  CHECK(j["jacobian_points"] == 50);
  CHECK(j["weil"]["t1"] == 0);

  json ell = {{"p", 5}, {"n", 1}, {"model", "weierstrass"},
              {"a", {0, 0, 0, 1, 1}}};
  auto e = run_count(json{{"curve", ell}, {"degrees", {1}}});
  std::int64_t n1 = e["counts"]["1"].get<std::int64_t>();
  std::int64_t tr = e["trace"].get<std::int64_t>();
  CHECK(n1 == 5 + 1 - tr);
  CHECK(tr * tr <= 20);

  CHECK_THROWS_AS(run_count(json{{"curve", json{{"model", "weierstrass"}}}}),
                  error);
}

TEST_CASE("run_phi_max exposes the polygon maximum") {
  auto j = run_phi_max(json{{"q", 16}, {"t1", 0}, {"r", 3}, {"ell", 2}});
  CHECK(j["max"] == "84 - 1*sqrt(2)");
  CHECK(j["k1"] == 1);
  CHECK(j["k2"] == 0);
}

TEST_CASE("search CSV: schema, determinism, and the worked row") {
  json req = {{"q", {16}}, {"source", "weil-restriction"}, {"h2", 2},
              {"r_min", 3}, {"r_max", 3}, {"ells", {1}},
              {"policy", "licensed-only"}};
  std::string a = run_search_csv(req);
  std::string b = run_search_csv(req);
  CHECK(a == b);  // byte-identical reruns
  CHECK(a.rfind("# abelos-schema v1\n", 0) == 0);
  CHECK(a.find("q,t1,t2,h2,r,ell,n,k,d_general,d_simple,d_haloui,winner\n") !=
        std::string::npos);
  // the worked family appears with its certified distances
  CHECK(a.find("16,0,-31,2,3,1,226,9,4,145,145,") != std::string::npos);
  CHECK(a.find("# best d_lower per (n,k)") != std::string::npos);

  // explicit source with an empty trace list: header only, no data rows
  json empty = {{"q", {16}}, {"source", "explicit"},
                {"traces", json::array()}, {"h2", 2}};
  std::string e = run_search_csv(empty);
  std::istringstream is(e);
  std::string line;
  int data_rows = 0;
  while (std::getline(is, line))
    if (!line.empty() && line[0] != '#' && line[0] != 'q') ++data_rows;
  CHECK(data_rows == 0);
}

TEST_CASE("rows are sorted by (q, t1, t2, r, ell)") {
  json req = {{"q", {5, 4}}, {"source", "all"}, {"h2", 2},
              {"r_min", 3}, {"r_max", 4}, {"ells", {1}},
              {"policy", "licensed-only"}};
  std::string csv = run_search_csv(req);
  std::istringstream is(csv);
  std::string line;
  std::vector<std::array<long, 5>> keys;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#' || line[0] == 'q') continue;
    std::array<long, 5> k{};
    std::istringstream ls(line);
    std::string cell;
    for (int i = 0; i < 6; ++i) {
      std::getline(ls, cell, ',');
      if (i == 0) k[0] = std::stol(cell);
      if (i == 1) k[1] = std::stol(cell);
      if (i == 2) k[2] = std::stol(cell);
      if (i == 4) k[3] = std::stol(cell);
      if (i == 5) k[4] = std::stol(cell);
    }
    keys.push_back(k);
  }
  CHECK(keys.size() > 10);
  CHECK(std::is_sorted(keys.begin(), keys.end()));
}

TEST_CASE("valid_weil_pairs only returns validated data") {
  auto pairs = valid_weil_pairs(4);
  CHECK(!pairs.empty());
  for (auto [t1, t2] : pairs) CHECK(validate_weil_surface(4, t1, t2));
}

TEST_CASE("char_of_prime_power") {
  CHECK(char_of_prime_power(8) == 2);
  CHECK(char_of_prime_power(121) == 11);
  CHECK(char_of_prime_power(7) == 7);
}
