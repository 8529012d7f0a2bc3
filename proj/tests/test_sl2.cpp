#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sbo/sl2.hpp"

using namespace sbo;

namespace {

VarList zvar() { return make_vars({"z"}); }
VarList zzvars() { return make_vars({"z1", "z2"}); }

SpacePoly zmono(unsigned k, const Rational& c = 1) {
  return SpacePoly::monomial(zvar(), {k}, param_const(c));
}

// Independent oracle for the finite-dimensional model lambda = -m: expanding
// pi(exp(-tX)) on z^k to first order in t gives
//   e: -k z^{k-1},  h: (m - 2k) z^k,  f: (k - m) z^{k+1}.
SpacePoly oracle_e(unsigned m, unsigned k) {
  (void)m;
  if (k == 0) return SpacePoly(zvar());
  return zmono(k - 1, Rational(-static_cast<long>(k)));
}
SpacePoly oracle_h(unsigned m, unsigned k) {
  return zmono(k, Rational(static_cast<long>(m) - 2 * static_cast<long>(k)));
}
SpacePoly oracle_f(unsigned m, unsigned k) {
  return zmono(k + 1, Rational(static_cast<long>(k) - static_cast<long>(m)));
}

}  // namespace

TEST_CASE("bracket arithmetic on sl(2) coefficients") {
  Sl2Element ef = sl2_bracket(sl2_e(), sl2_f());
  CHECK(ef.e == 0);
  CHECK(ef.h == 1);
  CHECK(ef.f == 0);
  Sl2Element he = sl2_bracket(sl2_h(), sl2_e());
  CHECK(he.e == 2);
  Sl2Element hf = sl2_bracket(sl2_h(), sl2_f());
  CHECK(hf.f == -2);
}

TEST_CASE("act on the stated examples") {
  VarList params = make_vars({"lambda"});
  ParamPoly lambda = ParamPoly::variable(params, 0, Rational(1));

  // act(e, lambda, z^2) = -2z
  CHECK(sl2_act(sl2_e(), lambda, zmono(2)) == zmono(1, -2));
  // act(h, lambda, 1) = -lambda
  SpacePoly one = zmono(0);
  SpacePoly expected = SpacePoly::constant(zvar(), -lambda);
  CHECK(sl2_act(sl2_h(), lambda, one) == expected);
  // act(f, 0, 1) = 0
  CHECK(sl2_act(sl2_f(), Rational(0), one).is_zero());
}

TEST_CASE("act matches the one-parameter-subgroup oracle on Pol_m") {
  for (unsigned m = 0; m <= 8; ++m) {
    Rational lambda(-static_cast<long>(m));
    for (unsigned k = 0; k <= m; ++k) {
      SpacePoly zk = zmono(k);
      CHECK(sl2_act(sl2_e(), lambda, zk) == oracle_e(m, k));
      CHECK(sl2_act(sl2_h(), lambda, zk) == oracle_h(m, k));
      CHECK(sl2_act(sl2_f(), lambda, zk) == oracle_f(m, k));
    }
  }
}

TEST_CASE("finite-dimensional invariance of Pol_m") {
  for (unsigned m = 0; m <= 8; ++m) {
    Rational lambda(-static_cast<long>(m));
    for (unsigned k = 0; k <= m; ++k) {
      for (const auto& x : {sl2_e(), sl2_h(), sl2_f()}) {
        SpacePoly image = sl2_act(x, lambda, zmono(k));
        CHECK(image.total_degree() <= static_cast<int>(m));
      }
    }
  }
}

TEST_CASE("act is linear in the Lie algebra argument and in F") {
  VarList params = make_vars({"lambda"});
  ParamPoly lambda = ParamPoly::variable(params, 0, Rational(1));
  Sl2Element x{3, -2, Rational(1, 2)};
  SpacePoly f = zmono(3) + zmono(1, Rational(5, 3));

  SpacePoly by_parts = sl2_act(sl2_e(), lambda, f).scaled(param_const(3)) +
                       sl2_act(sl2_h(), lambda, f).scaled(param_const(-2)) +
                       sl2_act(sl2_f(), lambda, f).scaled(param_const(Rational(1, 2)));
  CHECK(sl2_act(x, lambda, f) == by_parts);

  SpacePoly g = zmono(2, -7);
  CHECK(sl2_act(x, lambda, f + g) == sl2_act(x, lambda, f) + sl2_act(x, lambda, g));
}

TEST_CASE("tensor action on the stated examples") {
  VarList params = make_vars({"l1", "l2"});
  ParamPoly l1 = ParamPoly::variable(params, 0, Rational(1));
  ParamPoly l2 = ParamPoly::variable(params, 1, Rational(1));
  VarList zz = zzvars();

  SpacePoly z1z2 = SpacePoly::monomial(zz, {1, 1}, param_const(1));
  SpacePoly z1 = SpacePoly::monomial(zz, {1, 0}, param_const(1));
  SpacePoly z2 = SpacePoly::monomial(zz, {0, 1}, param_const(1));
  CHECK(sl2_tensor_act(sl2_e(), l1, l2, z1z2) == -z2 - z1);

  SpacePoly one = SpacePoly::monomial(zz, {0, 0}, param_const(1));
  CHECK(sl2_tensor_act(sl2_h(), l1, l2, one) == SpacePoly::constant(zz, -(l1 + l2)));

  CHECK(sl2_tensor_act(sl2_f(), l1, l2, SpacePoly(zz)).is_zero());
}

TEST_CASE("tensor action is the sum of one-leg actions on products") {
  VarList zz = zzvars();
  Rational l1(3, 2), l2(-2);
  for (unsigned i = 0; i <= 4; ++i) {
    for (unsigned j = 0; j <= 4; ++j) {
      SpacePoly m = SpacePoly::monomial(zz, {i, j}, param_const(1));
      for (const auto& x : {sl2_e(), sl2_h(), sl2_f()}) {
        // Leibniz oracle: act on each leg separately and re-multiply.
        SpacePoly leg1 = sl2_act(x, l1, zmono(i));
        SpacePoly leg2 = sl2_act(x, l2, zmono(j));
        SpacePoly expected(zz);
        for (const auto& [e, c] : leg1.terms()) expected.add_term({e[0], j}, c);
        for (const auto& [e, c] : leg2.terms()) expected.add_term({i, e[0]}, c);
        CHECK(sl2_tensor_act(x, l1, l2, m) == expected);
      }
    }
  }
}

TEST_CASE("bracket identities hold for the derived action") {
  VarList params = make_vars({"lambda"});
  ParamPoly lambda = ParamPoly::variable(params, 0, Rational(1));

  CheckReport symbolic = check_brackets_sl2(lambda, 10);
  CHECK(symbolic.ok());
  CHECK(symbolic.checks == 33);

  CHECK(check_brackets_sl2(param_const(Rational(2)), 4).ok());
  CHECK(check_brackets_sl2(param_const(Rational(0)), 1).ok());
}

TEST_CASE("act rejects wrong arity") {
  SpacePoly two_vars = SpacePoly::monomial(zzvars(), {1, 0}, param_const(1));
  CHECK_THROWS_AS(sl2_act(sl2_e(), Rational(1), two_vars), precondition_error);
  SpacePoly one_var = zmono(1);
  CHECK_THROWS_AS(sl2_tensor_act(sl2_e(), Rational(1), Rational(1), one_var),
                  precondition_error);
}
