#pragma once

#include <utility>
#include <vector>

#include "sbo/poly.hpp"
#include "sbo/report.hpp"

namespace sbo {

// Bidifferential operator of order a,
//   (f1, f2) |-> sum_l c_l (d^{a-l} f1) (d^l f2),
// i.e. sum_l c_l (d/dz1)^{a-l} (d/dz2)^l followed by restriction to the
// diagonal z1 = z2 = z. Coefficients may carry formal parameters.
struct BiDiffOp {
  unsigned a = 0;
  std::vector<ParamPoly> coeffs;  // size a + 1

  bool is_zero() const {
    for (const auto& c : coeffs)
      if (!c.is_zero()) return false;
    return true;
  }
};

enum class OmegaClass { NotInOmega, OmegaGeneric, OmegaSingular };

const char* omega_class_name(OmegaClass c);

// Omega = { l3 - l1 - l2 in {0, 2, 4, ...} };
// Omega_sing additionally requires integer parameters with
// l3 - |l1 - l2| >= 2 >= l1 + l2 + l3.
OmegaClass omega_classify(const Rational& l1, const Rational& l2, const Rational& l3);

// dim H(l1, l2, l3): 0 outside Omega, 1 on the generic stratum, 2 on the
// singular one.
unsigned sbo_dim_sl2(const Rational& l1, const Rational& l2, const Rational& l3);

// The Rankin-Cohen family with l3 = l1 + l2 + 2a:
//   c_l = ((-1)^l / (l! (a-l)!)) poch(l1 + a - l, l) poch(l2 + l, a - l).
// All Gamma ratios are rewritten as rising factorials, so the coefficients
// are genuine polynomials in (l1, l2).
BiDiffOp rc_operator(const ParamPoly& l1, const ParamPoly& l2, unsigned a);
BiDiffOp rc_operator(const Rational& l1, const Rational& l2, unsigned a);

// Applies the operator to a pair of one-variable polynomials.
SpacePoly rc_apply(const BiDiffOp& op, const SpacePoly& f1, const SpacePoly& f2);

// Applies the operator to a polynomial in two variables (the operator's
// native domain): differentiate, then restrict to the diagonal.
SpacePoly rc_apply2(const BiDiffOp& op, const SpacePoly& f, const VarList& target);

// Restriction to the diagonal z1 = z2 = z as a standalone map.
SpacePoly diag_restrict(const SpacePoly& f, const VarList& target);

// At a singular point, the two compositions
//   RC^{l3}_{2-l1, l2} o (d^{1-l1} (x) id)  and  RC^{l3}_{l1, 2-l2} o (id (x) d^{1-l2})
// expanded to plain order-a form. Requires omega_classify = OmegaSingular.
std::pair<BiDiffOp, BiDiffOp> singular_basis(const Rational& l1, const Rational& l2,
                                             const Rational& l3);

// Coefficientwise d/dl1 and d/dl2 of the symbolic family, evaluated at a
// singular point; spans the same two-dimensional space as singular_basis.
std::pair<BiDiffOp, BiDiffOp> derivative_basis(const Rational& l1, const Rational& l2,
                                               const Rational& l3);

// Checks op o (dpi_{l1} (x) dpi_{l2})(X) = dpi_{l3}(X) o op for the sl(2)
// basis on all monomials z1^i z2^j with i + j <= max_degree. Parameters may
// be symbolic; l3 must equal l1 + l2 + 2a.
CheckReport verify_intertwining(const BiDiffOp& op, const ParamPoly& l1,
                                const ParamPoly& l2, const ParamPoly& l3,
                                unsigned max_degree);
CheckReport verify_intertwining(const BiDiffOp& op, const Rational& l1, const Rational& l2,
                                const Rational& l3, unsigned max_degree);

// One Clebsch-Gordan component Pol_m (x) Pol_n -> Pol_{m+n-2a}.
struct CgComponent {
  unsigned a;
  BiDiffOp projector;  // rc_operator(-m, -n, a)
  unsigned target_dim;  // m + n - 2a + 1
};

std::vector<CgComponent> cg_decompose(unsigned m, unsigned n);

}  // namespace sbo
