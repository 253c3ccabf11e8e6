#pragma once

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include <json.hpp>

#include "hardy/discrete.hpp"
#include "hardy/errors.hpp"
#include "hardy/fuzz.hpp"
#include "hardy/muckenhoupt.hpp"
#include "hardy/report.hpp"
#include "hardy/weight.hpp"

namespace hardy {

/// JSON has no infinity literal; infinities serialize as the string "inf".
inline nlohmann::json encode_real(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

inline Weight weight_from_json(const nlohmann::json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "power") {
      return PowerWeight(j.at("a").get<double>(), j.value("origin", 0.0));
    }
    if (kind == "piecewise") {
      std::optional<bool> monotone;
      if (j.contains("monotone")) monotone = j.at("monotone").get<bool>();
      return PiecewiseConstantWeight(j.at("breakpoints").get<std::vector<double>>(),
                                     j.at("values").get<std::vector<double>>(), monotone);
    }
    throw ParseError("weight kind must be \"power\" or \"piecewise\"");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad weight spec: ") + e.what());
  }
}

inline nlohmann::json weight_to_json(const Weight& w) {
  if (const auto* pw = std::get_if<PowerWeight>(&w)) {
    return {{"kind", "power"}, {"a", pw->exponent}, {"origin", pw->origin}};
  }
  const auto& pc = std::get<PiecewiseConstantWeight>(w);
  nlohmann::json j = {{"kind", "piecewise"},
                      {"breakpoints", pc.breakpoints()},
                      {"values", pc.values()}};
  if (pc.monotone_flag().has_value()) j["monotone"] = *pc.monotone_flag();
  return j;
}

inline WeightedSequence sequence_from_json(const nlohmann::json& j) {
  try {
    auto a = j.at("a").get<std::vector<double>>();
    if (j.contains("lam")) {
      return WeightedSequence(std::move(a), j.at("lam").get<std::vector<double>>());
    }
    return WeightedSequence::with_unit_weights(std::move(a));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad sequence spec: ") + e.what());
  }
}

inline nlohmann::json to_json(const InequalityReport& r) {
  return {{"lhs", encode_real(r.lhs)},   {"rhs", encode_real(r.rhs)},
          {"ratio", encode_real(r.ratio)}, {"margin", encode_real(r.margin)},
          {"holds", r.holds},            {"params", r.params}};
}

inline nlohmann::json to_json(const P0Solution& s) {
  return {{"p0", s.p0},       {"residual", s.residual}, {"iterations", s.iterations},
          {"q", s.q},         {"M", s.M}};
}

inline nlohmann::json to_json(const ApScan& s) {
  nlohmann::json intervals = nlohmann::json::array();
  for (const auto& [a, b] : s.intervals) intervals.push_back({a, b});
  nlohmann::json chars = nlohmann::json::array();
  for (double c : s.characteristics) chars.push_back(encode_real(c));
  return {{"exponent", s.exponent},
          {"intervals", intervals},
          {"characteristics", chars},
          {"sup", encode_real(s.sup)},
          {"monotone", s.weight_monotone}};
}

inline nlohmann::json to_json(const FuzzSummary& s) {
  return {{"count", s.count},
          {"min_rel_margin", encode_real(s.min_rel_margin)},
          {"all_hold", s.all_hold},
          {"worst_case", s.worst_case}};
}

/// Grid mini-language: "geom:J" for 2^{-j}, j = J..0; "lin:n" for n
/// equispaced points in (0, 1]; otherwise a comma-separated list.
inline std::vector<double> parse_grid(const std::string& spec) {
  auto parse_int = [&](const std::string& s) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(s, &pos);
    } catch (const std::exception&) {
      throw ParseError("grid spec: bad integer \"" + s + "\"");
    }
    if (pos != s.size()) throw ParseError("grid spec: bad integer \"" + s + "\"");
    return v;
  };
  if (spec.rfind("geom:", 0) == 0) {
    const int levels = parse_int(spec.substr(5));
    if (levels < 0) throw ParseError("grid spec: geom levels must be >= 0");
    return geometric_grid(levels);
  }
  if (spec.rfind("lin:", 0) == 0) {
    const int n = parse_int(spec.substr(4));
    if (n < 1) throw ParseError("grid spec: lin count must be >= 1");
    std::vector<double> grid(n);
    for (int i = 1; i <= n; ++i) grid[i - 1] = static_cast<double>(i) / n;
    return grid;
  }
  std::vector<double> grid;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t comma = spec.find(',', start);
    const std::string tok =
        spec.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (tok.empty()) throw ParseError("grid spec: empty element");
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &pos);
    } catch (const std::exception&) {
      throw ParseError("grid spec: bad number \"" + tok + "\"");
    }
    if (pos != tok.size()) throw ParseError("grid spec: bad number \"" + tok + "\"");
    grid.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (grid.empty()) throw ParseError("grid spec: empty grid");
  return grid;
}

}  // namespace hardy
