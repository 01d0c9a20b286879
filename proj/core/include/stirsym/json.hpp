#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "stirsym/partition.hpp"
#include "stirsym/rational.hpp"
#include "stirsym/report.hpp"
#include "stirsym/series.hpp"
#include "stirsym/stirling.hpp"
#include "stirsym/symfunc.hpp"
#include "stirsym/tpoly.hpp"
#include "stirsym/trees.hpp"

namespace stirsym::json {

using nlohmann::json;

// Serializers and the matching parsers. Parsers throw std::invalid_argument
// (or nlohmann::json::exception) on malformed input.

json to_json(const Rational& q);            // "p/q" or "p"
Rational rational_from_json(const json& j);

json to_json(const Partition& lambda);      // [2,1,1]
Partition partition_from_json(const json& j);

json to_json(const WeakComposition& mu);    // [2,0,1]
WeakComposition weak_composition_from_json(const json& j);

json to_json(const SymFunc& f);             // {"basis":"e","terms":[{"partition":[2,1],"coeff":"4"}]}
SymFunc symfunc_from_json(const json& j);

json to_json(const TPoly& p);               // ascending coefficients ["0","1","8","6"]
TPoly tpoly_from_json(const json& j);

json to_json(const StirlingPerm& theta);    // [1,1,2,2]
StirlingPerm stirling_from_json(const json& j, int r);

json to_json(const BinaryTree& tree);       // {"leaf":3} / {"node":{"left":..,"right":..,"color":2}}
BinaryTree tree_from_json(const json& j);

json to_json(const VerificationReport& report);
VerificationReport report_from_json(const json& j);

template <class R>
json to_json(const Series<R>& s) {
  json coeffs = json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(to_json(c));
  return {{"flavor", std::string(flavor_name(s.flavor()))}, {"order", s.order()}, {"coeffs", coeffs}};
}

/// `element` parses one coefficient, e.g. rational_from_json.
template <class R, class F>
Series<R> series_from_json(const json& j, F&& element) {
  std::vector<R> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(element(c));
  return Series<R>(parse_flavor(j.at("flavor").get<std::string>()), j.at("order").get<int>(), std::move(coeffs));
}

}  // namespace stirsym::json
