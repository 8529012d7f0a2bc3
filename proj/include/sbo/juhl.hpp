#pragma once

#include <map>
#include <vector>

#include "sbo/poly.hpp"
#include "sbo/report.hpp"

namespace sbo {

// Gegenbauer polynomial C_l^alpha in the variable t,
//   C_l^alpha(t) = sum_k (-1)^k poch(alpha, l-k) / ((l-2k)! k!) (2t)^{l-2k},
// with the Gamma ratio already rewritten as a rising factorial. Identically
// zero iff l >= 1 and alpha in {0, -1, ..., -floor((l-1)/2)}.
SpacePoly gegenbauer(unsigned l, const ParamPoly& alpha);
SpacePoly gegenbauer(unsigned l, const Rational& alpha);

// Renormalization C~_l^alpha = Gamma(alpha) / Gamma(alpha + floor((l+1)/2)) C_l^alpha.
// The quotient of rising factorials cancels exactly, leaving a polynomial
// that is nonzero for every alpha.
SpacePoly gegenbauer_renorm(unsigned l, const ParamPoly& alpha);
SpacePoly gegenbauer_renorm(unsigned l, const Rational& alpha);

// Two-variable inflation C~_l^alpha(u, v) = u^{l/2} C~_l^alpha(v / sqrt(u));
// each t^{l-2k} term becomes u^k v^{l-2k}, so the result is a genuine
// polynomial in (u, v).
SpacePoly gegenbauer_inflate(unsigned l, const ParamPoly& alpha);
SpacePoly gegenbauer_inflate(unsigned l, const Rational& alpha);

// Constant-coefficient differential operator on R^n postcomposed with
// restriction to x_n = 0. Term key = derivative multi-order (k1..kn).
struct JuhlOp {
  unsigned n = 0;
  ParamPoly lambda, nu;
  std::map<Exps, ParamPoly> terms;

  // Total differential order of the nonzero terms (-1 for the zero operator).
  // Can drop below nu - lambda when the top Gegenbauer coefficient vanishes.
  int order() const;
};

// The Juhl family: substitute u = -Laplace(R^{n-1}), v = d/dx_n into the
// inflated C~_{nu-lambda}^{lambda-(n-1)/2} and restrict to x_n = 0.
// Requires nu - lambda in {0, 2, 4, ...}.
JuhlOp juhl_operator(unsigned n, const Rational& lambda, const Rational& nu);

// Same construction with a formal lambda and gap nu - lambda = 2l.
JuhlOp juhl_operator_symbolic(unsigned n, unsigned l, const ParamPoly& lambda);

// Applies the operator: differentiate, then set x_n = 0 and drop it.
SpacePoly juhl_apply(const JuhlOp& op, const SpacePoly& f);

// dim H(lambda, nu) for O(n+1,1) down to O(n,1): 2 on L_even (integers with
// lambda <= nu <= 0, lambda = nu mod 2), otherwise 1; never 0.
unsigned sbo_dim_conf(const Rational& lambda, const Rational& nu);

bool l_even_member(const Rational& lambda, const Rational& nu);

// True iff H(lambda, nu) contains a nontrivial differential operator,
// i.e. nu - lambda in {0, 2, 4, ...}.
bool diff_locus(const Rational& lambda, const Rational& nu);

// dim Hom(Aq(i)|restricted, Aq'(j)) where the statement pins only two of the
// four parity/order cases; the others are reported as Unspecified.
enum class AqHomDim { Zero, One, Unspecified };
AqHomDim aq_hom_dim(unsigned i, unsigned j);

// Checks juhl_apply o dpi_lambda(X) = dpi'_nu(X) o juhl_apply for every X in
// subalgebra_basis(n) on monomials of total degree <= max_degree.
CheckReport verify_juhl_equivariance(unsigned n, const Rational& lambda,
                                     const Rational& nu, unsigned max_degree);
CheckReport verify_juhl_equivariance_symbolic(unsigned n, unsigned l,
                                              unsigned max_degree);

}  // namespace sbo
