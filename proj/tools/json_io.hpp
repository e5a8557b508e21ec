#pragma once

// JSON rendering of polynomials, configurations and reports.

#include <json.hpp>

#include "jackpieri/jackpieri.hpp"

namespace jackpieri::json_io {

using Json = nlohmann::ordered_json;

template <ExactField F>
Json polynomial(const MultiPoly<F>& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"exponents", e}, {"coefficient", c.to_string()}});
  return out;
}

template <ExactField F>
Json expansion(const SymPoly<F>& p) {
  Json out = Json::array();
  for (const auto& [lambda, c] : p.coeffs()) out.push_back({{"partition", lambda.parts()}, {"coefficient", c.to_string()}});
  return out;
}

template <ExactField F, class Cmp>
Json expansion(const std::map<Partition, F, Cmp>& coeffs) {
  Json out = Json::array();
  for (const auto& [lambda, c] : coeffs) out.push_back({{"partition", lambda.parts()}, {"coefficient", c.to_string()}});
  return out;
}

inline Json config(const SuiteConfig& cfg) {
  Json d = Json::array();
  if (cfg.symbolic) {
    d.push_back("symbolic");
  } else {
    for (const auto& v : cfg.d_values) d.push_back(v.to_string());
  }
  return {{"r", cfg.rank},         {"max_weight", cfg.max_weight}, {"d", d},
          {"u", cfg.u.to_string()}, {"seed", cfg.seed},             {"random_points", cfg.random_points}};
}

/// millis is reported only when timing is requested, so that the default
/// output is byte-identical across runs.
inline Json report(const VerificationReport& r, bool timing) {
  Json out{{"suite", r.suite}, {"covers", r.covers}, {"cases", r.cases}, {"passed", r.passed}, {"failed", r.failed()}};
  if (r.first_failure)
    out["first_failure"] = {{"parameters", r.first_failure->parameters}, {"residual", r.first_failure->residual}};
  out["millis"] = timing ? static_cast<long>(r.millis + 0.5) : 0L;
  return out;
}

}  // namespace jackpieri::json_io
