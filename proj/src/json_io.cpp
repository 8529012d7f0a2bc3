#include "sbo/json_io.hpp"

namespace sbo {

namespace {

bool any_params(const SpacePoly& p) {
  for (const auto& [e, c] : p.terms())
    if (!c.vars()->empty()) return true;
  return false;
}

VarList params_of(const SpacePoly& p) {
  for (const auto& [e, c] : p.terms())
    if (!c.vars()->empty()) return c.vars();
  return no_vars();
}

}  // namespace

Json space_poly_to_json(const SpacePoly& p) {
  Json j;
  j["vars"] = *p.vars();
  if (any_params(p)) j["params"] = *params_of(p);
  Json terms = Json::array();
  for (const auto& [exps, coeff] : p.terms()) {
    Json t;
    t["coeff"] = to_string(coeff);
    t["exps"] = exps;
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

SpacePoly space_poly_from_json(const Json& j) {
  VarList vars = make_vars(j.at("vars").get<std::vector<std::string>>());
  VarList params = j.contains("params")
                       ? make_vars(j.at("params").get<std::vector<std::string>>())
                       : no_vars();
  SpacePoly p(vars);
  for (const auto& t : j.at("terms")) {
    Exps e = t.at("exps").get<Exps>();
    if (e.size() != vars->size())
      throw precondition_error("polynomial JSON: exponent arity mismatch");
    p.add_term(std::move(e), parse_param_poly(t.at("coeff").get<std::string>(), params));
  }
  return p;
}

Json param_poly_to_json(const ParamPoly& p) {
  Json j;
  j["vars"] = *p.vars();
  Json terms = Json::array();
  for (const auto& [exps, coeff] : p.terms()) {
    Json t;
    t["coeff"] = rat_to_string(coeff);
    t["exps"] = exps;
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

namespace {

VarList bidiff_params(const BiDiffOp& op) {
  for (const auto& c : op.coeffs)
    if (!c.vars()->empty()) return c.vars();
  return no_vars();
}

}  // namespace

Json bidiffop_to_json(const BiDiffOp& op) {
  Json j;
  j["a"] = op.a;
  VarList params = bidiff_params(op);
  if (!params->empty()) j["params"] = *params;
  Json coeffs = Json::array();
  for (const auto& c : op.coeffs) coeffs.push_back(to_string(c));
  j["coeffs"] = std::move(coeffs);
  return j;
}

BiDiffOp bidiffop_from_json(const Json& j) {
  BiDiffOp op;
  op.a = j.at("a").get<unsigned>();
  VarList params = j.contains("params")
                       ? make_vars(j.at("params").get<std::vector<std::string>>())
                       : no_vars();
  for (const auto& c : j.at("coeffs"))
    op.coeffs.push_back(parse_param_poly(c.get<std::string>(), params));
  if (op.coeffs.size() != op.a + 1)
    throw precondition_error("operator JSON: expected a+1 coefficients");
  return op;
}

Json juhlop_to_json(const JuhlOp& op) {
  Json j;
  j["n"] = op.n;
  if (!op.lambda.is_constant() || !op.nu.is_constant())
    throw precondition_error("juhl JSON: symbolic operators are not serialized");
  j["lambda"] = rat_to_string(op.lambda.constant_term());
  j["nu"] = rat_to_string(op.nu.constant_term());
  Json terms = Json::array();
  for (const auto& [orders, coeff] : op.terms) {
    Json t;
    t["coeff"] = to_string(coeff);
    t["orders"] = orders;
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  j["restrict"] = "x_n=0";
  return j;
}

JuhlOp juhlop_from_json(const Json& j) {
  JuhlOp op;
  op.n = j.at("n").get<unsigned>();
  op.lambda = param_const(rat_from_string(j.at("lambda").get<std::string>()));
  op.nu = param_const(rat_from_string(j.at("nu").get<std::string>()));
  for (const auto& t : j.at("terms")) {
    Exps orders = t.at("orders").get<Exps>();
    if (orders.size() != op.n)
      throw precondition_error("juhl JSON: order arity mismatch");
    op.terms.emplace(std::move(orders),
                     parse_param_poly(t.at("coeff").get<std::string>(), no_vars()));
  }
  return op;
}

}  // namespace sbo
