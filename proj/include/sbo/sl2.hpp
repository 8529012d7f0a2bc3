#pragma once

#include "sbo/poly.hpp"
#include "sbo/report.hpp"

namespace sbo {

// Element of sl(2) in the basis e = (0 1; 0 0), h = (1 0; 0 -1),
// f = (0 0; 1 0), so [e,f] = h, [h,e] = 2e, [h,f] = -2f.
struct Sl2Element {
  Rational e, h, f;
};

inline Sl2Element sl2_e() { return {1, 0, 0}; }
inline Sl2Element sl2_h() { return {0, 1, 0}; }
inline Sl2Element sl2_f() { return {0, 0, 1}; }

Sl2Element sl2_bracket(const Sl2Element& x, const Sl2Element& y);

// Infinitesimal action on the polynomial model of pi_lambda:
//   dpi(e) = -d/dz,  dpi(h) = -lambda - 2 z d/dz,  dpi(f) = lambda z + z^2 d/dz.
// The convention follows the g^{-1} = (a b; c d) realization; it is validated
// by check_brackets_sl2 and by every intertwining test downstream.
SpacePoly sl2_act(const Sl2Element& x, const ParamPoly& lambda, const SpacePoly& f);
SpacePoly sl2_act(const Sl2Element& x, const Rational& lambda, const SpacePoly& f);

// Diagonal action dpi_{l1}(x) (x) 1 + 1 (x) dpi_{l2}(x) on polynomials in
// two variables (first variable carries l1, second l2).
SpacePoly sl2_tensor_act(const Sl2Element& x, const ParamPoly& l1, const ParamPoly& l2,
                         const SpacePoly& f);
SpacePoly sl2_tensor_act(const Sl2Element& x, const Rational& l1, const Rational& l2,
                         const SpacePoly& f);

// Verifies [dpi(a), dpi(b)] = dpi([a,b]) for all basis pairs on all monomials
// of degree <= max_degree. lambda may be symbolic.
CheckReport check_brackets_sl2(const ParamPoly& lambda, unsigned max_degree);

}  // namespace sbo
