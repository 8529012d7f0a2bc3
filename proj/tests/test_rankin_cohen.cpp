#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sbo/json_io.hpp"
#include "sbo/matrix.hpp"
#include "sbo/rankin_cohen.hpp"

using namespace sbo;

namespace {

VarList zvar() { return make_vars({"z"}); }
VarList zzvars() { return make_vars({"z1", "z2"}); }
VarList rc_params() { return make_vars({"l1", "l2"}); }

ParamPoly l1_sym() { return ParamPoly::variable(rc_params(), 0, Rational(1)); }
ParamPoly l2_sym() { return ParamPoly::variable(rc_params(), 1, Rational(1)); }

SpacePoly zmono(unsigned k, const Rational& c = 1) {
  return SpacePoly::monomial(zvar(), {k}, param_const(c));
}

RationalMatrix coeff_matrix(const std::vector<const BiDiffOp*>& ops) {
  size_t cols = ops.front()->a + 1;
  RationalMatrix m(ops.size(), cols);
  for (size_t r = 0; r < ops.size(); ++r)
    for (size_t c = 0; c < cols; ++c)
      m.at(r, c) = ops[r]->coeffs[c].constant_term();
  return m;
}

}  // namespace

TEST_CASE("omega classification on the stated examples") {
  CHECK(omega_classify(2, 2, 5) == OmegaClass::NotInOmega);   // odd gap
  CHECK(omega_classify(0, 0, 2) == OmegaClass::OmegaSingular);
  CHECK(omega_classify(1, 1, 2) == OmegaClass::OmegaGeneric);  // 2 >= 4 fails
  // Non-integer parameters can never be singular.
  CHECK(omega_classify(Rational(1, 2), Rational(1, 2), 3) == OmegaClass::OmegaGeneric);
  CHECK(omega_classify(Rational(1, 2), Rational(1, 2), Rational(7, 2)) ==
        OmegaClass::NotInOmega);
  CHECK(omega_classify(0, 0, -2) == OmegaClass::NotInOmega);  // negative gap
}

TEST_CASE("sbo_dim_sl2 on the stated examples") {
  CHECK(sbo_dim_sl2(2, 2, 4) == 1);
  CHECK(sbo_dim_sl2(0, 0, 2) == 2);
  CHECK(sbo_dim_sl2(2, 2, 5) == 0);
}

TEST_CASE("rc_operator coefficients for a = 0 and a = 1") {
  BiDiffOp mult = rc_operator(l1_sym(), l2_sym(), 0);
  REQUIRE(mult.coeffs.size() == 1);
  CHECK(mult.coeffs[0] == ParamPoly::constant(rc_params(), 1));

  BiDiffOp op = rc_operator(l1_sym(), l2_sym(), 1);
  REQUIRE(op.coeffs.size() == 2);
  CHECK(op.coeffs[0] == l2_sym());
  CHECK(op.coeffs[1] == -l1_sym());

  // At (0,0) the a = 1 operator vanishes identically, matching (0,0,2) being
  // a singular point.
  CHECK(rc_operator(Rational(0), Rational(0), 1).is_zero());
}

TEST_CASE("rc_apply on the stated examples") {
  BiDiffOp op = rc_operator(l1_sym(), l2_sym(), 1);

  // (z, 1) -> l2
  CHECK(rc_apply(op, zmono(1), zmono(0)) == SpacePoly::constant(zvar(), l2_sym()));
  // (0, f2) -> 0
  CHECK(rc_apply(op, SpacePoly(zvar()), zmono(3)).is_zero());
  // (z, z) -> (l2 - l1) z
  SpacePoly expected = SpacePoly::constant(zvar(), l2_sym() - l1_sym()) * zmono(1);
  CHECK(rc_apply(op, zmono(1), zmono(1)) == expected);
}

TEST_CASE("classification equivalence: vanishing coefficients iff singular") {
  for (long a1 = -4; a1 <= 4; ++a1) {
    for (long a2 = -4; a2 <= 4; ++a2) {
      for (unsigned a = 0; a <= 4; ++a) {
        Rational l1(a1), l2(a2), l3 = l1 + l2 + Rational(2 * a);
        bool zero = rc_operator(l1, l2, a).is_zero();
        bool singular = omega_classify(l1, l2, l3) == OmegaClass::OmegaSingular;
        CHECK(zero == singular);
      }
    }
  }
}

TEST_CASE("swap symmetry c_{a-l}(l2,l1) = (-1)^a c_l(l1,l2)") {
  for (unsigned a = 0; a <= 6; ++a) {
    BiDiffOp op = rc_operator(l1_sym(), l2_sym(), a);
    BiDiffOp swapped = rc_operator(l2_sym(), l1_sym(), a);
    for (unsigned l = 0; l <= a; ++l) {
      ParamPoly want = a % 2 ? -op.coeffs[l] : op.coeffs[l];
      CHECK(swapped.coeffs[a - l] == want);
    }
  }
}

TEST_CASE("verify_intertwining symbolically for a <= 4") {
  for (unsigned a = 0; a <= 4; ++a) {
    BiDiffOp op = rc_operator(l1_sym(), l2_sym(), a);
    ParamPoly l3 = l1_sym() + l2_sym() + ParamPoly::constant(rc_params(), Rational(2 * a));
    CheckReport r = verify_intertwining(op, l1_sym(), l2_sym(), l3, 6);
    CHECK(r.ok());
    CHECK(r.checks > 0);
  }
}

TEST_CASE("verify_intertwining at rational points including half-integers") {
  const Rational samples[][2] = {
      {Rational(3), Rational(2)},      {Rational(-1), Rational(4)},
      {Rational(1, 2), Rational(5, 2)}, {Rational(-3, 2), Rational(7, 3)},
  };
  for (const auto& s : samples) {
    for (unsigned a : {1u, 3u}) {
      BiDiffOp op = rc_operator(s[0], s[1], a);
      Rational l3 = s[0] + s[1] + Rational(2 * a);
      CHECK(verify_intertwining(op, s[0], s[1], l3, 6).ok());
    }
  }
}

TEST_CASE("verify_intertwining rejects inconsistent l3") {
  BiDiffOp op = rc_operator(Rational(1), Rational(1), 1);
  CHECK_THROWS_AS(verify_intertwining(op, Rational(1), Rational(1), Rational(3), 4),
                  precondition_error);
}

TEST_CASE("singular basis at (0,0,2) expands to first-derivative operators") {
  auto [first, second] = singular_basis(0, 0, 2);
  REQUIRE(first.a == 1);
  REQUIRE(second.a == 1);
  // RC^2_{2,0} o (d (x) id) = f1' f2;  RC^2_{0,2} o (id (x) d) = f1 f2'.
  CHECK(first.coeffs[0] == param_const(1));
  CHECK(first.coeffs[1].is_zero());
  CHECK(second.coeffs[0].is_zero());
  CHECK(second.coeffs[1] == param_const(1));

  const BiDiffOp* pair_rows[] = {&first, &second};
  CHECK(coeff_matrix({pair_rows[0], pair_rows[1]}).rank() == 2);
}

TEST_CASE("derivative basis at (0,0,2)") {
  auto [d1, d2] = derivative_basis(0, 0, 2);
  CHECK(d1.coeffs[0].is_zero());
  CHECK(d1.coeffs[1] == param_const(-1));  // -f1 f2'
  CHECK(d2.coeffs[0] == param_const(1));   // f1' f2
  CHECK(d2.coeffs[1].is_zero());
}

TEST_CASE("singular and derivative bases span the same plane and intertwine") {
  // A few singular points (l1, l2, a) beyond the corner case.
  const long pts[][3] = {{0, 0, 1}, {-1, 0, 2}, {0, -1, 2}, {-2, -1, 3}, {-1, -1, 2}};
  for (const auto& p : pts) {
    Rational l1(p[0]), l2(p[1]);
    unsigned a = static_cast<unsigned>(p[2]);
    Rational l3 = l1 + l2 + Rational(2 * a);
    REQUIRE(omega_classify(l1, l2, l3) == OmegaClass::OmegaSingular);

    auto [s1, s2] = singular_basis(l1, l2, l3);
    auto [d1, d2] = derivative_basis(l1, l2, l3);
    CHECK_FALSE(s1.is_zero());
    CHECK_FALSE(s2.is_zero());

    CHECK(coeff_matrix({&s1, &s2}).rank() == 2);
    CHECK(coeff_matrix({&d1, &d2}).rank() == 2);
    CHECK(coeff_matrix({&s1, &s2, &d1, &d2}).rank() == 2);

    for (const BiDiffOp* op : {&s1, &s2, &d1, &d2})
      CHECK(verify_intertwining(*op, l1, l2, l3, 6).ok());
  }
}

TEST_CASE("singular basis refuses non-singular points") {
  CHECK_THROWS_AS(singular_basis(2, 2, 4), precondition_error);
  CHECK_THROWS_AS(derivative_basis(1, 1, 2), precondition_error);
}

TEST_CASE("cg_decompose dimensions") {
  auto c11 = cg_decompose(1, 1);
  REQUIRE(c11.size() == 2);
  CHECK(c11[0].target_dim == 3);
  CHECK(c11[1].target_dim == 1);

  auto c21 = cg_decompose(2, 1);
  REQUIRE(c21.size() == 2);
  CHECK(c21[0].target_dim == 4);
  CHECK(c21[1].target_dim == 2);

  auto cm0 = cg_decompose(5, 0);
  REQUIRE(cm0.size() == 1);
  CHECK(cm0[0].projector.a == 0);
  CHECK(cm0[0].projector.coeffs[0] == param_const(1));
}

TEST_CASE("cg projectors have the right image dimensions and jointly span") {
  VarList zz = zzvars();
  VarList zv = zvar();
  for (unsigned m = 0; m <= 4; ++m) {
    for (unsigned n = 0; n <= 4; ++n) {
      auto comps = cg_decompose(m, n);
      unsigned total = 0;
      size_t joint_cols = 0;
      for (const auto& c : comps) joint_cols += m + n - 2 * c.a + 1;

      RationalMatrix joint((m + 1) * (n + 1), joint_cols);
      size_t col_base = 0;
      for (const auto& c : comps) {
        CHECK_FALSE(c.projector.is_zero());
        unsigned dim = m + n - 2 * c.a + 1;
        RationalMatrix img((m + 1) * (n + 1), dim);
        size_t row = 0;
        for (unsigned i = 0; i <= m; ++i) {
          for (unsigned j = 0; j <= n; ++j, ++row) {
            SpacePoly basis_el = SpacePoly::monomial(zz, {i, j}, param_const(1));
            SpacePoly image = rc_apply2(c.projector, basis_el, zv);
            for (const auto& [e, coeff] : image.terms()) {
              img.at(row, e[0]) = coeff.constant_term();
              joint.at(row, col_base + e[0]) = coeff.constant_term();
            }
          }
        }
        CHECK(img.rank() == dim);
        total += c.target_dim;
        col_base += dim;
      }
      CHECK(total == (m + 1) * (n + 1));
      CHECK(joint.rank() == (m + 1) * (n + 1));
    }
  }
}

TEST_CASE("operator JSON round-trips and preserves application results") {
  BiDiffOp op = rc_operator(Rational(3), Rational(2), 2);
  Json j = bidiffop_to_json(op);
  BiDiffOp back = bidiffop_from_json(j);
  REQUIRE(back.a == op.a);
  for (unsigned l = 0; l <= op.a; ++l) CHECK(back.coeffs[l] == op.coeffs[l]);

  SpacePoly f1 = zmono(3) + zmono(1, Rational(1, 2));
  SpacePoly f2 = zmono(2, -2);
  CHECK(rc_apply(back, f1, f2) == rc_apply(op, f1, f2));

  // Symbolic coefficients round-trip through the params field.
  BiDiffOp sym = rc_operator(l1_sym(), l2_sym(), 3);
  BiDiffOp sym_back = bidiffop_from_json(bidiffop_to_json(sym));
  for (unsigned l = 0; l <= sym.a; ++l) CHECK(sym_back.coeffs[l] == sym.coeffs[l]);
}
