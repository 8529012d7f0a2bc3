#include "sbo/rankin_cohen.hpp"

#include "sbo/sl2.hpp"

namespace sbo {

const char* omega_class_name(OmegaClass c) {
  switch (c) {
    case OmegaClass::NotInOmega: return "not_in_omega";
    case OmegaClass::OmegaGeneric: return "omega_generic";
    case OmegaClass::OmegaSingular: return "omega_singular";
  }
  return "?";
}

OmegaClass omega_classify(const Rational& l1, const Rational& l2, const Rational& l3) {
  Rational gap = l3 - l1 - l2;
  if (!is_even_nonneg_integer(gap)) return OmegaClass::NotInOmega;
  if (is_integer(l1) && is_integer(l2) && is_integer(l3)) {
    Rational d = l1 - l2;
    if (d < 0) d = -d;
    if (l3 - d >= 2 && l1 + l2 + l3 <= 2) return OmegaClass::OmegaSingular;
  }
  return OmegaClass::OmegaGeneric;
}

unsigned sbo_dim_sl2(const Rational& l1, const Rational& l2, const Rational& l3) {
  switch (omega_classify(l1, l2, l3)) {
    case OmegaClass::NotInOmega: return 0;
    case OmegaClass::OmegaGeneric: return 1;
    case OmegaClass::OmegaSingular: return 2;
  }
  return 0;
}

namespace {

Rational factorial(unsigned k) {
  Integer f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return Rational(f);
}

}  // namespace

BiDiffOp rc_operator(const ParamPoly& l1, const ParamPoly& l2, unsigned a) {
  BiDiffOp op;
  op.a = a;
  op.coeffs.reserve(a + 1);
  for (unsigned l = 0; l <= a; ++l) {
    Rational pref = Rational(l % 2 ? -1 : 1) / (factorial(l) * factorial(a - l));
    ParamPoly c = poch(l1 + param_const(Rational(a - l)), l) *
                  poch(l2 + param_const(Rational(l)), a - l);
    op.coeffs.push_back(c.scaled(pref));
  }
  return op;
}

BiDiffOp rc_operator(const Rational& l1, const Rational& l2, unsigned a) {
  return rc_operator(param_const(l1), param_const(l2), a);
}

SpacePoly rc_apply(const BiDiffOp& op, const SpacePoly& f1, const SpacePoly& f2) {
  if (f1.vars()->size() != 1 || f2.vars()->size() != 1 || !same_vars(f1.vars(), f2.vars()))
    throw precondition_error("rc_apply: expected two polynomials in the same variable");
  SpacePoly out(f1.vars());
  for (unsigned l = 0; l <= op.a; ++l) {
    if (op.coeffs[l].is_zero()) continue;
    out += (f1.diff(0, op.a - l) * f2.diff(0, l)).scaled(op.coeffs[l]);
  }
  return out;
}

SpacePoly diag_restrict(const SpacePoly& f, const VarList& target) {
  if (f.vars()->size() != 2 || target->size() != 1)
    throw precondition_error("diag_restrict: expected two variables and a one-variable target");
  SpacePoly out(target);
  for (const auto& [e, c] : f.terms()) out.add_term({e[0] + e[1]}, c);
  return out;
}

SpacePoly rc_apply2(const BiDiffOp& op, const SpacePoly& f, const VarList& target) {
  if (f.vars()->size() != 2)
    throw precondition_error("rc_apply2: expected a polynomial in two variables");
  SpacePoly out(target);
  for (unsigned l = 0; l <= op.a; ++l) {
    if (op.coeffs[l].is_zero()) continue;
    out += diag_restrict(f.diff(0, op.a - l).diff(1, l), target).scaled(op.coeffs[l]);
  }
  return out;
}

namespace {

// Common entry checks for the two singular-point bases. Returns the order a.
unsigned require_singular(const Rational& l1, const Rational& l2, const Rational& l3) {
  if (omega_classify(l1, l2, l3) != OmegaClass::OmegaSingular)
    throw precondition_error("singular basis requested at a non-singular parameter point");
  // Omega_sing forces l1, l2 <= 0, so 1 - l_i are genuine derivative orders.
  // Guarded anyway: a violation here would make the composition ill-defined.
  if (l1 > 0 || l2 > 0)
    throw precondition_error("singular point with positive l1 or l2; composition undefined");
  return static_cast<unsigned>(to_long((l3 - l1 - l2) / 2));
}

}  // namespace

std::pair<BiDiffOp, BiDiffOp> singular_basis(const Rational& l1, const Rational& l2,
                                             const Rational& l3) {
  unsigned a = require_singular(l1, l2, l3);
  long m1 = to_long(l1), m2 = to_long(l2);

  // RC^{l3}_{2-l1, l2} has order a1 = a + l1 - 1 >= 0; postcomposing the
  // first slot with d^{1-l1} shifts term l to d1^{a-l} d2^l, total order a.
  unsigned a1 = static_cast<unsigned>(static_cast<long>(a) + m1 - 1);
  BiDiffOp base1 = rc_operator(Rational(2) - l1, l2, a1);
  BiDiffOp first;
  first.a = a;
  first.coeffs.assign(a + 1, ParamPoly());
  for (unsigned l = 0; l <= a1; ++l) first.coeffs[l] = base1.coeffs[l];

  // Mirror: RC^{l3}_{l1, 2-l2} o (id (x) d^{1-l2}); term l lands at index
  // l + (1 - l2).
  unsigned a2 = static_cast<unsigned>(static_cast<long>(a) + m2 - 1);
  unsigned shift = static_cast<unsigned>(1 - m2);
  BiDiffOp base2 = rc_operator(l1, Rational(2) - l2, a2);
  BiDiffOp second;
  second.a = a;
  second.coeffs.assign(a + 1, ParamPoly());
  for (unsigned l = 0; l <= a2; ++l) second.coeffs[l + shift] = base2.coeffs[l];

  return {first, second};
}

std::pair<BiDiffOp, BiDiffOp> derivative_basis(const Rational& l1, const Rational& l2,
                                               const Rational& l3) {
  unsigned a = require_singular(l1, l2, l3);

  VarList params = make_vars({"l1", "l2"});
  BiDiffOp symbolic = rc_operator(ParamPoly::variable(params, 0, Rational(1)),
                                  ParamPoly::variable(params, 1, Rational(1)), a);

  auto partial_at = [&](size_t which) {
    BiDiffOp op;
    op.a = a;
    op.coeffs.reserve(a + 1);
    for (const auto& c : symbolic.coeffs) {
      std::vector<Rational> point{l1, l2};
      op.coeffs.push_back(param_const(c.diff(which).eval(point)));
    }
    return op;
  };
  return {partial_at(0), partial_at(1)};
}

CheckReport verify_intertwining(const BiDiffOp& op, const ParamPoly& l1,
                                const ParamPoly& l2, const ParamPoly& l3,
                                unsigned max_degree) {
  ParamPoly expected = l1 + l2 + param_const(Rational(2 * op.a));
  if (!(l3 == expected))
    throw precondition_error("verify_intertwining: l3 != l1 + l2 + 2a");

  VarList zz = make_vars({"z1", "z2"});
  VarList zv = make_vars({"z"});
  const Sl2Element basis[] = {sl2_e(), sl2_h(), sl2_f()};
  const char* names[] = {"e", "h", "f"};

  CheckReport report;
  for (unsigned i = 0; i + 0 <= max_degree; ++i) {
    for (unsigned j = 0; i + j <= max_degree; ++j) {
      SpacePoly m = SpacePoly::monomial(zz, {i, j}, param_const(1));
      for (int b = 0; b < 3; ++b) {
        SpacePoly lhs = rc_apply2(op, sl2_tensor_act(basis[b], l1, l2, m), zv);
        SpacePoly rhs = sl2_act(basis[b], l3, rc_apply2(op, m, zv));
        ++report.checks;
        if (!(lhs == rhs))
          report.violations.push_back(std::string("X=") + names[b] + " fails on z1^" +
                                      std::to_string(i) + " z2^" + std::to_string(j));
      }
    }
  }
  return report;
}

CheckReport verify_intertwining(const BiDiffOp& op, const Rational& l1, const Rational& l2,
                                const Rational& l3, unsigned max_degree) {
  return verify_intertwining(op, param_const(l1), param_const(l2), param_const(l3),
                             max_degree);
}

std::vector<CgComponent> cg_decompose(unsigned m, unsigned n) {
  std::vector<CgComponent> components;
  for (unsigned a = 0; a <= std::min(m, n); ++a) {
    components.push_back({a, rc_operator(Rational(-static_cast<long>(m)),
                                         Rational(-static_cast<long>(n)), a),
                          m + n - 2 * a + 1});
  }
  return components;
}

}  // namespace sbo
