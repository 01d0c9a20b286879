#include "stirsym/json.hpp"

#include <stdexcept>

namespace stirsym::json {

json to_json(const Rational& q) { return q.to_string(); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return Rational::parse(j.get<std::string>());
}

json to_json(const Partition& lambda) { return lambda.parts(); }

Partition partition_from_json(const json& j) { return Partition(j.get<std::vector<int>>()); }

json to_json(const WeakComposition& mu) { return mu.entries(); }

WeakComposition weak_composition_from_json(const json& j) { return WeakComposition(j.get<std::vector<int>>()); }

json to_json(const SymFunc& f) {
  json terms = json::array();
  for (const auto& [lambda, c] : f.terms()) terms.push_back({{"partition", to_json(lambda)}, {"coeff", to_json(c)}});
  return {{"basis", std::string(basis_name(f.basis()))}, {"terms", terms}};
}

SymFunc symfunc_from_json(const json& j) {
  Terms terms;
  for (const auto& t : j.at("terms")) {
    Partition lambda = partition_from_json(t.at("partition"));
    if (!terms.emplace(lambda, rational_from_json(t.at("coeff"))).second) {
      throw std::invalid_argument("duplicate term " + lambda.to_string());
    }
  }
  return SymFunc(parse_basis(j.at("basis").get<std::string>()), std::move(terms));
}

json to_json(const TPoly& p) {
  json out = json::array();
  for (int k = 0; k <= p.degree(); ++k) out.push_back(to_json(p.coefficient(k)));
  return out;
}

TPoly tpoly_from_json(const json& j) {
  std::map<int, Rational> coeffs;
  int k = 0;
  for (const auto& c : j) {
    Rational q = rational_from_json(c);
    if (!q.is_zero()) coeffs.emplace(k, q);
    ++k;
  }
  return TPoly(std::move(coeffs));
}

json to_json(const StirlingPerm& theta) { return theta.word(); }

StirlingPerm stirling_from_json(const json& j, int r) { return StirlingPerm(j.get<std::vector<int>>(), r); }

namespace {

json tree_node(const BinaryTree& t, int i) {
  const auto& n = t.node(i);
  if (n.is_leaf()) return {{"leaf", n.label}};
  json body = {{"left", tree_node(t, n.left)}, {"right", tree_node(t, n.right)}};
  if (n.color) body["color"] = n.color;
  return {{"node", body}};
}

}  // namespace

json to_json(const BinaryTree& tree) { return tree_node(tree, BinaryTree::root()); }

BinaryTree tree_from_json(const json& j) {
  if (j.contains("leaf")) return BinaryTree::leaf(j.at("leaf").get<int>());
  const json& body = j.at("node");
  int color = body.contains("color") ? body.at("color").get<int>() : 0;
  return BinaryTree::join(tree_from_json(body.at("left")), tree_from_json(body.at("right")), color);
}

json to_json(const VerificationReport& report) {
  json out = {{"identity", report.identity}, {"order", report.order}, {"pass", report.pass}};
  if (report.discrepancy) {
    out["discrepancy"] = {{"location", report.discrepancy->location},
                          {"expected", report.discrepancy->expected},
                          {"actual", report.discrepancy->actual}};
  } else {
    out["discrepancy"] = nullptr;
  }
  out["details"] = report.details;
  return out;
}

VerificationReport report_from_json(const json& j) {
  VerificationReport r;
  r.identity = j.at("identity").get<std::string>();
  r.order = j.at("order").get<int>();
  r.pass = j.at("pass").get<bool>();
  if (!j.at("discrepancy").is_null()) {
    const json& d = j.at("discrepancy");
    r.discrepancy = Discrepancy{d.at("location").get<std::string>(), d.at("expected").get<std::string>(),
                                d.at("actual").get<std::string>()};
  }
  if (j.contains("details")) r.details = j.at("details").get<std::vector<std::string>>();
  return r;
}

}  // namespace stirsym::json
