#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sbo/json_io.hpp"
#include "sbo/juhl.hpp"

using namespace sbo;

namespace {

VarList alpha_params() { return make_vars({"alpha"}); }
ParamPoly alpha_sym() { return ParamPoly::variable(alpha_params(), 0, Rational(1)); }

SpacePoly tmono(unsigned k, ParamPoly c) {
  return SpacePoly::monomial(make_vars({"t"}), {k}, std::move(c));
}

// Classical three-term recurrence, an independent construction:
//   l C_l = 2t (l - 1 + alpha) C_{l-1} - (l + 2 alpha - 2) C_{l-2}.
SpacePoly gegenbauer_recurrence(unsigned l, const ParamPoly& alpha) {
  VarList tv = make_vars({"t"});
  SpacePoly c0 = SpacePoly::constant(tv, ParamPoly::constant(alpha.vars(), 1));
  if (l == 0) return c0;
  SpacePoly t = SpacePoly::variable(tv, 0, ParamPoly::constant(alpha.vars(), 1));
  SpacePoly c1 = t.scaled(alpha + alpha);
  if (l == 1) return c1;
  SpacePoly prev2 = c0, prev1 = c1;
  for (unsigned k = 2; k <= l; ++k) {
    ParamPoly two_k1_alpha = (alpha + param_const(Rational(k - 1))).scaled(2);
    ParamPoly k2a2 = alpha.scaled(2) + param_const(Rational(k) - 2);
    SpacePoly next = (t * prev1).scaled(two_k1_alpha) - prev2.scaled(k2a2);
    next = next.scaled(param_const(Rational(1, k)));
    prev2 = prev1;
    prev1 = next;
  }
  return prev1;
}

}  // namespace

TEST_CASE("gegenbauer examples") {
  // l = 0 -> 1, l = 1 -> 2 alpha t
  CHECK(gegenbauer(0, alpha_sym()) == tmono(0, ParamPoly::constant(alpha_params(), 1)));
  CHECK(gegenbauer(1, alpha_sym()) == tmono(1, alpha_sym().scaled(2)));
  // l = 2 at alpha = 0 vanishes identically
  CHECK(gegenbauer(2, Rational(0)).is_zero());
}

TEST_CASE("explicit sum matches the classical recurrence") {
  for (unsigned l = 0; l <= 10; ++l)
    CHECK(gegenbauer(l, alpha_sym()) == gegenbauer_recurrence(l, alpha_sym()));
}

TEST_CASE("vanishing law on the half-integer grid") {
  for (unsigned l = 0; l <= 10; ++l) {
    for (long twice = -16; twice <= 16; ++twice) {
      Rational alpha(twice, 2);
      bool vanishes = gegenbauer(l, alpha).is_zero();
      bool in_printed_set = l >= 1 && is_integer(alpha) && alpha <= 0 &&
                            -alpha <= Rational((l - 1) / 2);
      CHECK(vanishes == in_printed_set);
      CHECK_FALSE(gegenbauer_renorm(l, alpha).is_zero());
    }
  }
}

TEST_CASE("renormalization removes exactly poch(alpha, floor((l+1)/2))") {
  for (unsigned l = 0; l <= 10; ++l) {
    ParamPoly factor = poch(alpha_sym(), (l + 1) / 2);
    SpacePoly lhs = gegenbauer_renorm(l, alpha_sym()).scaled(factor);
    CHECK(lhs == gegenbauer(l, alpha_sym()));
  }
}

TEST_CASE("renormalized examples from the printed table") {
  // C~_0 = 1, C~_1 = 2t, C~_2 = 2(alpha+1) t^2 - 1
  CHECK(gegenbauer_renorm(0, alpha_sym()) ==
        tmono(0, ParamPoly::constant(alpha_params(), 1)));
  CHECK(gegenbauer_renorm(1, alpha_sym()) ==
        tmono(1, ParamPoly::constant(alpha_params(), 2)));
  SpacePoly c2 = gegenbauer_renorm(2, alpha_sym());
  SpacePoly expected = tmono(2, (alpha_sym() + param_const(1)).scaled(2)) +
                       tmono(0, param_const(-1));
  CHECK(c2 == expected);

  // degree in t can drop at special alpha while staying nonzero
  SpacePoly at_minus1 = gegenbauer_renorm(2, Rational(-1));
  CHECK_FALSE(at_minus1.is_zero());
  CHECK(at_minus1.total_degree() == 0);
}

TEST_CASE("inflation to (u, v)") {
  VarList uv = make_vars({"u", "v"});
  // l = 0 -> 1; l = 1 -> 2v; l = 2 -> 2(alpha+1)v^2 - u
  CHECK(gegenbauer_inflate(0, alpha_sym()) ==
        SpacePoly::monomial(uv, {0, 0}, ParamPoly::constant(alpha_params(), 1)));
  CHECK(gegenbauer_inflate(1, alpha_sym()) ==
        SpacePoly::monomial(uv, {0, 1}, ParamPoly::constant(alpha_params(), 2)));
  SpacePoly infl2 = gegenbauer_inflate(2, alpha_sym());
  SpacePoly expected = SpacePoly::monomial(uv, {0, 2}, (alpha_sym() + param_const(1)).scaled(2)) +
                       SpacePoly::monomial(uv, {1, 0}, param_const(-1));
  CHECK(infl2 == expected);
}

TEST_CASE("juhl operator structure at the stated parameters") {
  // nu = lambda: the restriction operator itself.
  JuhlOp rest = juhl_operator(3, Rational(1), Rational(1));
  REQUIRE(rest.terms.size() == 1);
  CHECK(rest.terms.begin()->first == Exps{0, 0, 0});
  CHECK(rest.terms.begin()->second == param_const(1));
  CHECK(rest.order() == 0);

  // n = 3, lambda = 1, nu = 3: alpha = 0, so 2 d3^2 + d1^2 + d2^2.
  JuhlOp op = juhl_operator(3, Rational(1), Rational(3));
  REQUIRE(op.terms.size() == 3);
  CHECK(op.terms.at(Exps{0, 0, 2}) == param_const(2));
  CHECK(op.terms.at(Exps{2, 0, 0}) == param_const(1));
  CHECK(op.terms.at(Exps{0, 2, 0}) == param_const(1));
  CHECK(op.order() == 2);
}

TEST_CASE("juhl operator rejects off-locus parameters") {
  CHECK_THROWS_AS(juhl_operator(3, Rational(3), Rational(1)), precondition_error);
  CHECK_THROWS_AS(juhl_operator(3, Rational(0), Rational(1)), precondition_error);
  CHECK_THROWS_AS(juhl_operator(3, Rational(1, 2), Rational(3, 2)), precondition_error);
}

TEST_CASE("juhl_apply on the stated examples") {
  VarList x3 = conf_vars(3);
  JuhlOp rest = juhl_operator(3, Rational(1), Rational(1));
  // x_n -> 0, x1^2 -> x1^2
  CHECK(juhl_apply(rest, SpacePoly::monomial(x3, {0, 0, 1}, param_const(1))).is_zero());
  SpacePoly x1sq = SpacePoly::monomial(x3, {2, 0, 0}, param_const(1));
  VarList x2v = conf_vars(2);
  CHECK(juhl_apply(rest, x1sq) == SpacePoly::monomial(x2v, {2, 0}, param_const(1)));

  JuhlOp op = juhl_operator(3, Rational(1), Rational(3));
  SpacePoly x3sq = SpacePoly::monomial(x3, {0, 0, 2}, param_const(1));
  CHECK(juhl_apply(op, x3sq) == SpacePoly::constant(x2v, param_const(4)));
}

TEST_CASE("dimension law and exceptional set") {
  CHECK(sbo_dim_conf(0, 0) == 2);
  CHECK(sbo_dim_conf(-2, 0) == 2);
  CHECK(sbo_dim_conf(1, 1) == 1);
  CHECK(l_even_member(-4, -2));
  CHECK_FALSE(l_even_member(-3, -2));                      // parity
  CHECK_FALSE(l_even_member(Rational(-1, 2), Rational(-1, 2)));  // not integers
  CHECK_FALSE(l_even_member(0, 2));                        // nu > 0
}

TEST_CASE("differential locus") {
  CHECK(diff_locus(1, 3));
  CHECK_FALSE(diff_locus(3, 1));
  CHECK_FALSE(diff_locus(0, 1));
  CHECK(diff_locus(Rational(-1, 2), Rational(7, 2)));
  CHECK_FALSE(diff_locus(Rational(1, 3), Rational(7, 3)));
}

TEST_CASE("Aq hom dimensions: only the two printed cases are decided") {
  CHECK(aq_hom_dim(4, 2) == AqHomDim::One);
  CHECK(aq_hom_dim(1, 2) == AqHomDim::Zero);
  CHECK(aq_hom_dim(3, 2) == AqHomDim::Unspecified);
  CHECK(aq_hom_dim(2, 4) == AqHomDim::Unspecified);
  CHECK(aq_hom_dim(5, 5) == AqHomDim::One);
}

TEST_CASE("equivariance of the Juhl operator, rational parameters") {
  CHECK(verify_juhl_equivariance(2, Rational(1, 2), Rational(1, 2), 6).ok());  // anchor
  CHECK(verify_juhl_equivariance(3, Rational(1), Rational(3), 6).ok());
  CHECK(verify_juhl_equivariance(3, Rational(-2), Rational(0), 6).ok());  // L_even point
  CHECK(verify_juhl_equivariance(2, Rational(-1, 2), Rational(7, 2), 5).ok());
}

TEST_CASE("equivariance with a formal lambda") {
  CHECK(verify_juhl_equivariance_symbolic(2, 1, 6).ok());
  CHECK(verify_juhl_equivariance_symbolic(3, 1, 5).ok());
  CHECK(verify_juhl_equivariance_symbolic(2, 2, 5).ok());
}

TEST_CASE("juhl JSON round-trip") {
  JuhlOp op = juhl_operator(3, Rational(-1, 2), Rational(7, 2));
  Json j = juhlop_to_json(op);
  CHECK(j.at("restrict") == "x_n=0");
  JuhlOp back = juhlop_from_json(j);
  CHECK(back.n == op.n);
  CHECK(back.lambda == op.lambda);
  CHECK(back.nu == op.nu);
  CHECK(back.terms == op.terms);
}
