// Copyright 2026 the abelos authors
// SPDX-License-Identifier: Apache-2.0

#include "report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "errors.hpp"

namespace abelos {

namespace {

FieldPtr field_from_json(const json& j) {
  if (!j.contains("p")) fail(errc::parse_error, "curve input needs \"p\"");
  std::uint32_t p = j.at("p").get<std::uint32_t>();
  std::uint32_t n = j.value("n", 1u);
  return Field::make(p, n);
}

Field::elt elt_from_json(const Field& F, const json& v) {
  if (v.is_number_integer()) return F.from_int(v.get<std::int64_t>());
  if (v.is_array()) {
    // coordinate vector over F_p, little-endian in the power basis
    Field::elt e = 0;
    std::uint32_t mul = 1;
    for (const auto& c : v) {
      e += F.from_int(c.get<std::int64_t>()) * mul;
      mul *= F.p();
    }
    return e;
  }
  fail(errc::parse_error, "field element must be an integer or coord array");
}

}  // namespace

EllipticCurveModel parse_elliptic(const json& j) {
  if (j.value("model", "weierstrass") != "weierstrass")
    fail(errc::parse_error, "expected a weierstrass curve");
  auto F = field_from_json(j);
  const auto& a = j.at("a");
  if (!a.is_array() || a.size() != 5)
    fail(errc::parse_error, "\"a\" must be [a1,a2,a3,a4,a6]");
  return EllipticCurveModel(F, elt_from_json(*F, a[0]), elt_from_json(*F, a[1]),
                            elt_from_json(*F, a[2]), elt_from_json(*F, a[3]),
                            elt_from_json(*F, a[4]));
}

Genus2CurveModel parse_genus2(const json& j) {
  if (j.value("model", "") != "genus2")
    fail(errc::parse_error, "expected a genus2 curve");
  auto F = field_from_json(j);
  std::vector<Field::elt> f, h;
  for (const auto& c : j.at("f")) f.push_back(elt_from_json(*F, c));
  if (j.contains("h"))
    for (const auto& c : j.at("h")) h.push_back(elt_from_json(*F, c));
  return Genus2CurveModel(F, std::move(f), std::move(h));
}

json classification_json(const ClassificationReport& rep) {
  json j;
  j["q"] = rep.weil.q;
  j["t1"] = rep.weil.t1;
  j["t2"] = rep.weil.t2;
  j["valid"] = rep.valid;
  j["simple"] = to_string(rep.simplicity);
  j["npp"] = rep.npp;
  j["ell_max"] = rep.ell_max;
  j["rule"] = rep.rule;
  return j;
}

json bound_json(const BoundResult& res) {
  json j;
  j["n"] = res.n;
  j["k"] = res.k;
  j["d_lower"] = res.d_lower;
  j["theorem"] = to_string(res.theorem);
  j["candidates"] = res.candidates;
  j["vacuous"] = res.vacuous;
  j["relevance_B"] = res.relevance_B;
  j["winner"] = res.winner;
  j["injectivity_ok"] = res.injectivity_ok;
  if (res.watermark_unsafe) j["unsafe_ell"] = true;
  return j;
}

json run_classify(const json& request) {
  SurfaceWeilData w;
  std::optional<WeilRestrictionMeta> prov;
  if (request.value("weil_restriction", false)) {
    std::uint32_t q = request.at("q").get<std::uint32_t>();
    std::int64_t tr_e = request.at("tr_e").get<std::int64_t>();
    w = weil_restriction(q, tr_e);
    prov = WeilRestrictionMeta{char_of_prime_power(q), q, tr_e};
  } else {
    w.q = request.at("q").get<std::uint32_t>();
    w.t1 = request.at("t1").get<std::int64_t>();
    w.t2 = request.at("t2").get<std::int64_t>();
  }
  return classification_json(classify_no_low_genus(w, prov));
}

json run_bound(const json& request) {
  SurfaceWeilData w;
  std::optional<WeilRestrictionMeta> prov;
  std::uint32_t q = request.at("q").get<std::uint32_t>();
  if (request.value("weil_restriction", false)) {
    std::int64_t tr_e = request.at("tr_e").get<std::int64_t>();
    w = weil_restriction(q, tr_e);
    prov = WeilRestrictionMeta{char_of_prime_power(q), q, tr_e};
  } else {
    w.q = q;
    w.t1 = request.at("t1").get<std::int64_t>();
    w.t2 = request.at("t2").get<std::int64_t>();
  }
  std::int64_t h2 = request.value("h2", 2);
  std::int64_t r = request.value("r", 3);
  int ell = request.value("ell", 1);
  int e = request.value("e", 1);
  bool unsafe = request.value("unsafe_ell", false);

  auto rep = classify_no_low_genus(w, prov);
  BoundInput in = make_bound_input(w, h2, r, ell, &rep, e, unsafe);

  json j;
  j["input"] = {{"q", w.q},   {"t1", w.t1}, {"t2", w.t2}, {"h2", h2},
                {"r", r},     {"ell", ell}, {"e", e}};
  j["classification"] = classification_json(rep);
  j["general"] = bound_json(bound_general(in));
  if (in.ell_licensed || unsafe) {
    j["simple"] = bound_json(bound_simple(in));
    if (request.value("sharpened", false)) {
      auto pm = polygon_max_bruteforce(in, PolygonObjective::SharpenedEq13);
      json s;
      s["max"] = pm.value.to_string();
      s["max_decimal"] = pm.value.to_decimal();
      s["k1"] = pm.k1;
      s["k2"] = pm.k2;
      s["d_lower"] = in.num_points -
                     static_cast<std::int64_t>(pm.value.floor().get_si());
      j["sharpened"] = s;
    }
  }
  if (h2 == 2 && ell == 1) j["haloui"] = bound_json(bound_haloui(in));
  return j;
}

json run_count(const json& request) {
  const json& cj = request.at("curve");
  std::vector<std::uint32_t> degrees =
      request.value("degrees", std::vector<std::uint32_t>{1, 2});
  json j;
  if (cj.value("model", "weierstrass") == "genus2") {
    auto C = parse_genus2(cj);
    j["model"] = "genus2";
    j["q"] = C.field->q();
    std::map<std::uint32_t, std::int64_t> counts;
    for (auto d : degrees) counts[d] = count_points_genus2(C, d);
    for (auto& [d, c] : counts)
      j["counts"][std::to_string(d)] = c;
    if (counts.count(1) && counts.count(2)) {
      auto w = weil_data_from_counts(C.field->q(), counts[1], counts[2]);
      j["weil"] = {{"q", w.q}, {"t1", w.t1}, {"t2", w.t2}};
      j["jacobian_points"] = point_count_surface(w);
    }
  } else {
    auto E = parse_elliptic(cj);
    j["model"] = "weierstrass";
    j["q"] = E.field->q();
    for (auto d : degrees)
      j["counts"][std::to_string(d)] = count_points_elliptic(E, d);
    j["trace"] = E.field->q() + 1 - count_points_elliptic(E, 1);
  }
  return j;
}

json run_phi_max(const json& request) {
  BoundInput in;
  in.q = request.at("q").get<std::uint32_t>();
  in.t1 = request.at("t1").get<std::int64_t>();
  in.num_points = 0;
  in.h2 = request.value("h2", 2);
  in.r = request.value("r", 3);
  in.ell = request.value("ell", 1);
  in.ell_licensed = true;  // exploration surface, no distance claim emitted
  auto obj = request.value("objective", "theorem") == std::string("sharpened")
                 ? PolygonObjective::SharpenedEq13
                 : PolygonObjective::TheoremPhi;
  auto pm = polygon_max_bruteforce(in, obj);
  json j;
  j["max"] = pm.value.to_string();
  j["max_decimal"] = pm.value.to_decimal();
  j["k1"] = pm.k1;
  j["k2"] = pm.k2;
  return j;
}

std::uint32_t char_of_prime_power(std::uint32_t q) {
  for (std::uint32_t d = 2; d <= q; ++d)
    if (q % d == 0) return d;
  fail(errc::invalid_weil_data, "not a prime power");
}

std::vector<std::pair<std::int64_t, std::int64_t>> valid_weil_pairs(
    std::uint32_t q) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  std::int64_t t1max = static_cast<std::int64_t>(isqrt_floor(16ull * q));
  for (std::int64_t t1 = -t1max; t1 <= t1max; ++t1)
    for (std::int64_t t2 = -2 * static_cast<std::int64_t>(q);
         t2 <= 6 * static_cast<std::int64_t>(q); ++t2)
      if (validate_weil_surface(q, t1, t2)) out.emplace_back(t1, t2);
  return out;
}

std::string run_search_csv(const json& request) {
  std::vector<std::uint32_t> qs = request.at("q").get<std::vector<std::uint32_t>>();
  std::string source = request.value("source", "all");
  std::int64_t h2 = request.value("h2", 2);
  std::int64_t r_min = request.value("r_min", 3);
  std::int64_t r_max = request.value("r_max", 3);
  std::vector<int> ells = request.value("ells", std::vector<int>{1});
  bool unsafe = request.value("policy", "licensed-only") == std::string("unsafe");

  struct Cell {
    std::uint32_t q;
    std::int64_t t1, t2, r;
    int ell;
    std::optional<WeilRestrictionMeta> prov;
  };
  std::vector<Cell> cells;
  for (std::uint32_t q : qs) {
    std::vector<std::pair<std::int64_t, std::int64_t>> traces;
    std::vector<std::optional<WeilRestrictionMeta>> provs;
    if (source == "explicit") {
      for (const auto& t : request.at("traces")) {
        traces.emplace_back(t[0].get<std::int64_t>(), t[1].get<std::int64_t>());
        provs.push_back(std::nullopt);
      }
    } else if (source == "weil-restriction") {
      std::uint32_t p = char_of_prime_power(q);
      std::uint64_t q2 = static_cast<std::uint64_t>(q) * q;
      for (std::int64_t beta = -2 * static_cast<std::int64_t>(q);
           beta <= 2 * static_cast<std::int64_t>(q); ++beta) {
        if (!deuring_trace_exists(p, q2, beta)) continue;
        traces.emplace_back(0, -beta);
        provs.push_back(WeilRestrictionMeta{p, q, beta});
      }
    } else {
      for (auto& t : valid_weil_pairs(q)) {
        traces.push_back(t);
        provs.push_back(std::nullopt);
      }
    }
    for (std::size_t i = 0; i < traces.size(); ++i) {
      if (!validate_weil_surface(q, traces[i].first, traces[i].second))
        continue;
      for (std::int64_t r = r_min; r <= r_max; ++r)
        for (int ell : ells)
          cells.push_back({q, traces[i].first, traces[i].second, r, ell,
                           provs[i]});
    }
  }
  if (cells.size() > 1'000'000)
    fail(errc::cap_exceeded, "search grid exceeds 10^6 cells");

  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    return std::tie(a.q, a.t1, a.t2, a.r, a.ell) <
           std::tie(b.q, b.t1, b.t2, b.r, b.ell);
  });
  cells.erase(std::unique(cells.begin(), cells.end(),
                          [](const Cell& a, const Cell& b) {
                            return std::tie(a.q, a.t1, a.t2, a.r, a.ell) ==
                                   std::tie(b.q, b.t1, b.t2, b.r, b.ell);
                          }),
              cells.end());

  std::ostringstream os;
  os << "# abelos-schema v1\n";
  os << "q,t1,t2,h2,r,ell,n,k,d_general,d_simple,d_haloui,winner\n";

  struct Best {
    std::int64_t d = INT64_MIN;
    std::string where;
  };
  std::map<std::pair<std::int64_t, std::int64_t>, Best> best_per_nk;

  for (const auto& c : cells) {
    SurfaceWeilData w{c.q, c.t1, c.t2};
    auto rep = classify_no_low_genus(w, c.prov);
    BoundInput in = make_bound_input(w, h2, c.r, c.ell, &rep, 1, unsafe);
    auto gen = bound_general(in);
    std::string d_simple = "-", d_haloui = "-";
    std::int64_t best_d = gen.vacuous ? INT64_MIN : gen.d_lower;
    std::string winner = gen.vacuous ? "vacuous" : "general";
    if (in.ell_licensed) {
      auto s = bound_simple(in);
      d_simple = std::to_string(s.d_lower);
      if (!s.vacuous && s.d_lower > best_d) {
        best_d = s.d_lower;
        winner = "simple";
      }
    }
    if (h2 == 2 && c.ell == 1) {
      auto hb = bound_haloui(in);
      d_haloui = std::to_string(hb.d_lower);
      if (!hb.vacuous && hb.d_lower > best_d) {
        best_d = hb.d_lower;
        winner = "haloui";
      }
    }
    os << c.q << "," << c.t1 << "," << c.t2 << "," << h2 << "," << c.r << ","
       << c.ell << "," << gen.n << "," << gen.k << "," << gen.d_lower << ","
       << d_simple << "," << d_haloui << "," << winner << "\n";
    if (best_d != INT64_MIN) {
      auto key = std::make_pair(gen.n, gen.k);
      auto& b = best_per_nk[key];
      if (best_d > b.d) {
        b.d = best_d;
        std::ostringstream ws;
        ws << "q=" << c.q << " t1=" << c.t1 << " t2=" << c.t2 << " r=" << c.r
           << " ell=" << c.ell;
        b.where = ws.str();
      }
    }
  }
  os << "# best d_lower per (n,k)\n";
  for (const auto& [nk, b] : best_per_nk)
    os << "# n=" << nk.first << " k=" << nk.second << " d>=" << b.d << " ("
       << b.where << ")\n";
  return os.str();
}

json lab_json(const LabReport& rep) {
  json j;
  j["n"] = rep.n;
  j["k"] = rep.k;
  if (rep.d_exact)
    j["d_exact"] = *rep.d_exact;
  else
    j["d_exact"] = nullptr;
  j["max_nf"] = rep.max_nf;
  j["bound_general"] = bound_json(rep.general);
  j["nf_cap"] = rep.nf_cap;
  j["vacuous"] = rep.general.vacuous;
  j["checks"] = {{"dim", rep.checks.dim_ok},
                 {"dist", rep.checks.dist_ok},
                 {"nf_cap", rep.checks.nf_cap_ok},
                 {"injectivity_failed", rep.checks.injectivity_failed}};
  return j;
}

json run_lab(const json& request) {
  auto E1 = parse_elliptic(request.at("curve1"));
  auto E2 = parse_elliptic(request.at("curve2"));
  int r = request.value("r", 3);
  EvalMode mode = request.value("mode", "punctured") == std::string("full")
                      ? EvalMode::Full
                      : EvalMode::Punctured;
  std::uint64_t cap = request.value("cap", kEnumCapDefault);
  bool exact = request.value("exact", true);

  auto code = build_code(E1, E2, r, mode);
  auto meas = measure(code, exact ? cap : 0);
  auto rep = check_against_bounds(code, meas);
  json j = lab_json(rep);
  if (request.value("dump_matrix", false)) {
    std::ostringstream os;
    const Field& F = *code.field;
    for (const auto& row : code.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) os << " ";
        os << F.to_string(row[c]);
      }
      os << "\n";
    }
    j["generator_matrix"] = os.str();
  }
  return j;
}

}  // namespace abelos
