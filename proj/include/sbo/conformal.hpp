#pragma once

#include <string>
#include <vector>

#include "sbo/poly.hpp"
#include "sbo/report.hpp"

namespace sbo {

// Generator of the conformal algebra o(n+1,1) acting on R^n. Indices are
// 1-based; rotations require i < j. Serialized as "T1", "R12", "D", "C3".
struct ConfGenerator {
  enum class Kind { Translation, Rotation, Dilation, SpecialConformal };
  Kind kind = Kind::Dilation;
  unsigned i = 0, j = 0;

  static ConfGenerator T(unsigned j) { return {Kind::Translation, 0, j}; }
  static ConfGenerator R(unsigned i, unsigned j) { return {Kind::Rotation, i, j}; }
  static ConfGenerator D() { return {Kind::Dilation, 0, 0}; }
  static ConfGenerator C(unsigned j) { return {Kind::SpecialConformal, 0, j}; }

  friend bool operator==(const ConfGenerator&, const ConfGenerator&) = default;
};

std::string generator_name(const ConfGenerator& g);

// All (n+1)(n+2)/2 generators in a fixed order: T1..Tn, R(i,j) for i<j,
// D, C1..Cn.
std::vector<ConfGenerator> conf_basis(unsigned n);

// Generators preserving the hyperplane x_n = 0, i.e. a basis of o(n,1):
// T_j, C_j for j < n, R(i,j) for i < j < n, and D. Requires n >= 2.
std::vector<ConfGenerator> subalgebra_basis(unsigned n);

// N-picture action of the generator on polynomials on R^n:
//   T_j -> d_j,   R_ij -> x_i d_j - x_j d_i,   D -> sum_k x_k d_k + lambda,
//   C_j -> |x|^2 d_j - 2 x_j sum_k x_k d_k - 2 lambda x_j.
// The two free signs are pinned by bracket fidelity and by the restriction
// identity rest_{x_n=0} o dpi_lambda(X) = dpi'_lambda(X) o rest_{x_n=0}.
SpacePoly conf_act(const ConfGenerator& g, unsigned n, const ParamPoly& lambda,
                   const SpacePoly& f);
SpacePoly conf_act(const ConfGenerator& g, unsigned n, const Rational& lambda,
                   const SpacePoly& f);

// Abstract bracket [x, y] expanded in the generator basis.
struct GenTerm {
  Rational coeff;
  ConfGenerator gen;
};
std::vector<GenTerm> conf_bracket(const ConfGenerator& x, const ConfGenerator& y);

// Verifies [dpi(x), dpi(y)] = dpi([x,y]) for all generator pairs on all
// monomials of total degree <= max_degree.
CheckReport check_brackets_conf(unsigned n, const ParamPoly& lambda, unsigned max_degree);

// Variable lists x1..xn used by the conformal and Juhl modules.
VarList conf_vars(unsigned n);

}  // namespace sbo
