#pragma once

// JSON forms. A Laurent polynomial is {"min_deg": k, "coeffs": ["num/den", ...]}
// with coefficients ascending from X^k; the zero polynomial has no coeffs.
// An element is {"m", "p", "n", "perm": [1-based images], "colors": [...]}.

#include <json.hpp>

#include <string>
#include <vector>

#include "wfact/group.hpp"
#include "wfact/laurent.hpp"

namespace wfact {

using json = nlohmann::json;

inline json laurent_to_json(const LaurentPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
  return {{"min_deg", p.min_deg()}, {"coeffs", coeffs}};
}

inline LaurentPoly laurent_from_json(const json& j) {
  try {
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
    return {j.at("min_deg").get<int>(), std::move(coeffs)};
  } catch (const json::exception& e) {
    throw argument_error(std::string("malformed Laurent polynomial JSON: ") + e.what());
  }
}

inline json egf_to_json(const EgfPrefix& prefix) {
  json out = json::array();
  for (const auto& c : prefix) out.push_back(to_string(c));
  return out;
}

inline json element_to_json(const Element& g, const GroupParams& params) {
  std::vector<int> perm;
  for (int v : g.perm) perm.push_back(v + 1);
  return {{"m", params.m}, {"p", params.p}, {"n", params.n}, {"perm", perm}, {"colors", g.colors}};
}

inline std::pair<GroupParams, Element> element_from_json(const json& j) {
  try {
    GroupParams params(j.at("m").get<int>(), j.at("p").get<int>(), j.at("n").get<int>());
    Element g;
    for (int v : j.at("perm").get<std::vector<int>>()) g.perm.push_back(v - 1);
    g.colors = j.at("colors").get<std::vector<int>>();
    require_member(g, params);
    return {params, g};
  } catch (const json::exception& e) {
    throw argument_error(std::string("malformed element JSON: ") + e.what());
  }
}

}  // namespace wfact
