#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sbo/matrix.hpp"
#include "sbo/poly.hpp"

using namespace sbo;

namespace {

ParamPoly var(const VarList& vars, size_t i) {
  return ParamPoly::variable(vars, i, Rational(1));
}

// Deterministic random rationals and polynomials for the property checks.
Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 12);
  return Rational(num(rng), den(rng));
}

ParamPoly random_param_poly(std::mt19937& rng, const VarList& vars, unsigned max_terms) {
  std::uniform_int_distribution<unsigned> nterms(0, max_terms);
  std::uniform_int_distribution<unsigned> expd(0, 4);
  ParamPoly p(vars);
  unsigned k = nterms(rng);
  for (unsigned t = 0; t < k; ++t) {
    Exps e(vars->size());
    for (auto& x : e) x = expd(rng);
    p.add_term(std::move(e), random_rational(rng));
  }
  return p;
}

SpacePoly random_space_poly(std::mt19937& rng, const VarList& vars, const VarList& params,
                            unsigned max_terms) {
  std::uniform_int_distribution<unsigned> nterms(0, max_terms);
  std::uniform_int_distribution<unsigned> expd(0, 5);
  SpacePoly p(vars);
  unsigned k = nterms(rng);
  for (unsigned t = 0; t < k; ++t) {
    Exps e(vars->size());
    for (auto& x : e) x = expd(rng);
    p.add_term(std::move(e), random_param_poly(rng, params, 3));
  }
  return p;
}

}  // namespace

TEST_CASE("rationals stay reduced with positive denominators") {
  Rational r(3, 6);
  CHECK(numerator(r) == 1);
  CHECK(denominator(r) == 2);
  Rational s = Rational(2) / Rational(-4);
  CHECK(numerator(s) == -1);
  CHECK(denominator(s) == 2);
  CHECK(rat_to_string(Rational(0)) == "0");
  CHECK(rat_to_string(Rational(-3, 2)) == "-3/2");
  CHECK(rat_from_string("-3/2") == Rational(-3, 2));
  CHECK(rat_from_string("7") == Rational(7));
  CHECK_THROWS_AS(rat_from_string("1/0"), precondition_error);
  CHECK_THROWS_AS(rat_from_string("x"), precondition_error);
  CHECK_THROWS_AS(rat_from_string("1.5"), precondition_error);
}

TEST_CASE("poch: empty product, single factor, and a vanishing product") {
  VarList params = make_vars({"x"});
  ParamPoly x = var(params, 0);

  CHECK(poch(x, 0) == ParamPoly::constant(params, 1));
  CHECK(poch(x + ParamPoly::constant(params, 1), 1) ==
        x + ParamPoly::constant(params, 1));

  // poch(-2, 3) = (-2)(-1)(0) = 0, by direct multiplication.
  ParamPoly m2 = param_const(Rational(-2));
  CHECK(poch(m2, 3).is_zero());
}

TEST_CASE("poch evaluation agrees with a pointwise product oracle") {
  VarList params = make_vars({"x"});
  ParamPoly x = var(params, 0);
  for (unsigned k = 0; k <= 8; ++k) {
    ParamPoly p = poch(x, k);
    for (int base = -5; base <= 5; ++base) {
      Rational expected(1);
      for (unsigned i = 0; i < k; ++i) expected *= Rational(base) + Rational(i);
      std::vector<Rational> point{Rational(base)};
      CHECK(p.eval(point) == expected);
    }
  }
}

TEST_CASE("poch recurrence poch(x, k+1) = poch(x, k) (x + k)") {
  VarList params = make_vars({"x"});
  ParamPoly x = var(params, 0);
  for (unsigned k = 0; k <= 12; ++k) {
    ParamPoly lhs = poch(x, k + 1);
    ParamPoly rhs = poch(x, k) * (x + param_const(Rational(k)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("poly_mul basics") {
  VarList zv = make_vars({"z"});
  SpacePoly z = SpacePoly::variable(zv, 0, param_const(1));
  CHECK(z * z == SpacePoly::monomial(zv, {2}, param_const(1)));

  VarList zz = make_vars({"z1", "z2"});
  SpacePoly z1 = SpacePoly::variable(zz, 0, param_const(1));
  SpacePoly z2 = SpacePoly::variable(zz, 1, param_const(1));
  CHECK((z1 + z2) * (z1 - z2) == z1 * z1 - z2 * z2);

  VarList tv = make_vars({"t"});
  SpacePoly two_t = SpacePoly::variable(tv, 0, param_const(2));
  CHECK(two_t * two_t == SpacePoly::monomial(tv, {2}, param_const(4)));
}

TEST_CASE("poly_mul rejects mismatched variable lists") {
  SpacePoly z = SpacePoly::variable(make_vars({"z"}), 0, param_const(1));
  SpacePoly w = SpacePoly::variable(make_vars({"w"}), 0, param_const(1));
  CHECK_THROWS_AS(z * w, precondition_error);
}

TEST_CASE("poly_diff basics and error") {
  VarList zv = make_vars({"z"});
  SpacePoly z3 = SpacePoly::monomial(zv, {3}, param_const(1));
  CHECK(z3.diff(0) == SpacePoly::monomial(zv, {2}, param_const(3)));
  CHECK(SpacePoly::variable(zv, 0, param_const(1)).diff(0, 2).is_zero());

  VarList zz = make_vars({"z1", "z2"});
  SpacePoly m = SpacePoly::monomial(zz, {2, 1}, param_const(1));
  CHECK(m.diff(0) == SpacePoly::monomial(zz, {1, 1}, param_const(2)));
  CHECK_THROWS_AS(m.diff(5), precondition_error);
}

TEST_CASE("mixed partials commute exactly") {
  std::mt19937 rng(20240811);
  VarList uv = make_vars({"u", "v"});
  for (int trial = 0; trial < 40; ++trial) {
    SpacePoly f = random_space_poly(rng, uv, no_vars(), 8);
    CHECK(f.diff(0).diff(1) == f.diff(1).diff(0));
  }
}

TEST_CASE("ring distributivity on random triples") {
  std::mt19937 rng(987654);
  VarList zz = make_vars({"z1", "z2"});
  VarList params = make_vars({"l1", "l2"});
  for (int trial = 0; trial < 30; ++trial) {
    SpacePoly a = random_space_poly(rng, zz, params, 5);
    SpacePoly b = random_space_poly(rng, zz, params, 5);
    SpacePoly c = random_space_poly(rng, zz, params, 5);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("evaluation homomorphism commutes with +, *, and d/dz") {
  std::mt19937 rng(5150);
  VarList zz = make_vars({"z1", "z2"});
  VarList params = make_vars({"l1", "l2"});
  for (int trial = 0; trial < 25; ++trial) {
    SpacePoly a = random_space_poly(rng, zz, params, 5);
    SpacePoly b = random_space_poly(rng, zz, params, 5);
    std::vector<std::pair<std::string, Rational>> assign{
        {"l1", random_rational(rng)}, {"l2", random_rational(rng)}};

    CHECK(subst_params(a + b, assign) == subst_params(a, assign) + subst_params(b, assign));
    CHECK(subst_params(a * b, assign) == subst_params(a, assign) * subst_params(b, assign));
    CHECK(subst_params(a.diff(0), assign) == subst_params(a, assign).diff(0));
  }
}

TEST_CASE("rank: identity, zero, proportional rows") {
  RationalMatrix id(2, 2);
  id.at(0, 0) = 1;
  id.at(1, 1) = 1;
  CHECK(id.rank() == 2);

  RationalMatrix zero(3, 4);
  CHECK(zero.rank() == 0);

  RationalMatrix prop = RationalMatrix::from_rows({{Rational(1), Rational(2)},
                                                   {Rational(2), Rational(4)}});
  CHECK(prop.rank() == 1);
}

TEST_CASE("rank handles rational entries exactly") {
  // Rows: (1/2, 1/3), (1/4, 1/6) are proportional; adding (0, 1) lifts rank.
  RationalMatrix m = RationalMatrix::from_rows({
      {Rational(1, 2), Rational(1, 3)},
      {Rational(1, 4), Rational(1, 6)},
      {Rational(0), Rational(1)},
  });
  CHECK(m.rank() == 2);
}

TEST_CASE("param poly string form round-trips") {
  VarList params = make_vars({"l1", "l2"});
  std::mt19937 rng(777);
  for (int trial = 0; trial < 50; ++trial) {
    ParamPoly p = random_param_poly(rng, params, 6);
    CHECK(parse_param_poly(to_string(p), params) == p);
  }
  CHECK(to_string(ParamPoly(params)) == "0");
  ParamPoly q = parse_param_poly("2*l1^2*l2 - 3/2*l1 + 1", params);
  CHECK(to_string(q) == "1 - 3/2*l1 + 2*l1^2*l2");
  CHECK_THROWS_AS(parse_param_poly("2*q", params), precondition_error);
}
