#include "sbo/sl2.hpp"

namespace sbo {

Sl2Element sl2_bracket(const Sl2Element& x, const Sl2Element& y) {
  return {2 * (x.h * y.e - x.e * y.h),
          x.e * y.f - x.f * y.e,
          -2 * (x.h * y.f - x.f * y.h)};
}

namespace {

// dpi_lambda(X) applied to F in the variable with index `zi`, multiplying by
// that same variable. Shared by the single and tensor models.
SpacePoly act_one_leg(const Sl2Element& x, const ParamPoly& lambda, const SpacePoly& f,
                      size_t zi) {
  const auto& vars = f.vars();
  SpacePoly z = SpacePoly::variable(vars, zi, param_const(1));
  SpacePoly df = f.diff(zi);

  SpacePoly out(vars);
  if (x.e != 0) out += df.scaled(param_const(-x.e));
  if (x.h != 0) {
    SpacePoly t = f.scaled(lambda) + (z * df).scaled(param_const(2));
    out += t.scaled(param_const(-x.h));
  }
  if (x.f != 0) {
    SpacePoly t = (z * f).scaled(lambda) + z * z * df;
    out += t.scaled(param_const(x.f));
  }
  return out;
}

}  // namespace

SpacePoly sl2_act(const Sl2Element& x, const ParamPoly& lambda, const SpacePoly& f) {
  if (f.vars()->size() != 1)
    throw precondition_error("sl2_act: expected a polynomial in one variable");
  return act_one_leg(x, lambda, f, 0);
}

SpacePoly sl2_act(const Sl2Element& x, const Rational& lambda, const SpacePoly& f) {
  return sl2_act(x, param_const(lambda), f);
}

SpacePoly sl2_tensor_act(const Sl2Element& x, const ParamPoly& l1, const ParamPoly& l2,
                         const SpacePoly& f) {
  if (f.vars()->size() != 2)
    throw precondition_error("sl2_tensor_act: expected a polynomial in two variables");
  return act_one_leg(x, l1, f, 0) + act_one_leg(x, l2, f, 1);
}

SpacePoly sl2_tensor_act(const Sl2Element& x, const Rational& l1, const Rational& l2,
                         const SpacePoly& f) {
  return sl2_tensor_act(x, param_const(l1), param_const(l2), f);
}

CheckReport check_brackets_sl2(const ParamPoly& lambda, unsigned max_degree) {
  if (max_degree < 1) throw precondition_error("check_brackets_sl2: max_degree >= 1");
  static const std::pair<const char*, std::pair<Sl2Element, Sl2Element>> pairs[] = {
      {"[e,f]", {sl2_e(), sl2_f()}},
      {"[h,e]", {sl2_h(), sl2_e()}},
      {"[h,f]", {sl2_h(), sl2_f()}},
  };

  VarList zv = make_vars({"z"});
  CheckReport report;
  for (const auto& [name, xy] : pairs) {
    const auto& [x, y] = xy;
    Sl2Element xy_bracket = sl2_bracket(x, y);
    for (unsigned k = 0; k <= max_degree; ++k) {
      SpacePoly m = SpacePoly::monomial(zv, {k}, param_const(1));
      SpacePoly lhs = sl2_act(x, lambda, sl2_act(y, lambda, m)) -
                      sl2_act(y, lambda, sl2_act(x, lambda, m));
      SpacePoly rhs = sl2_act(xy_bracket, lambda, m);
      ++report.checks;
      if (!(lhs == rhs))
        report.violations.push_back(std::string(name) + " fails on z^" + std::to_string(k));
    }
  }
  return report;
}

}  // namespace sbo
