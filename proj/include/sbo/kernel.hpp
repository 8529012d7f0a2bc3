#pragma once

#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "sbo/conformal.hpp"
#include "sbo/poly.hpp"

namespace sbo {

// Compactly supported smooth test function: exp(-1/(1 - |x-c|^2/R^2)) inside
// the ball of radius R around c, zero outside, optionally multiplied by a
// polynomial. Value and first partials are evaluated from closed formulas.
struct BumpFunction {
  std::vector<double> center;
  double radius = 1.0;
  std::map<Exps, double> modulation;  // empty means the constant 1
  double scale = 1.0;

  double value(std::span<const double> x) const;
  double partial(size_t j, std::span<const double> x) const;
};

// Controls for the graded-panel quadrature of the integral operator. The
// integrand is split at |x_n| = split_radius: inside, the substitution
// x_n = s^{1/(w+1)} absorbs the weight |x_n|^w exactly; outside, panels are
// graded geometrically toward the singular locus. `refine` subdivides every
// panel 2^refine times.
struct KernelConfig {
  unsigned n = 2;
  double lambda = 0.0;
  double nu = 0.0;
  int refine = 2;
  double split_radius = 0.125;
  unsigned gl_points = 6;
  double noncvg_threshold = 1e-3;
};

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long cells = 0;
};

// Integrability of |x_n|^{lambda+nu-n} (|x'-y|^2 + x_n^2)^{-nu} against a
// compactly supported f: requires lambda + nu > n - 1 and lambda > nu.
bool kernel_convergent(unsigned n, double lambda, double nu);

// (A_{lambda,nu} f)(y) by deterministic graded quadrature; y in R^{n-1}.
// The error estimate is the difference against the next-coarser refinement.
QuadResult kernel_eval(const KernelConfig& cfg, const BumpFunction& f,
                       std::span<const double> y);

// Same, for an arbitrary integrand on R^n (used by the equivariance check).
QuadResult kernel_eval_fn(const KernelConfig& cfg,
                          const std::function<double(std::span<const double>)>& f,
                          std::span<const double> support_center, double support_radius,
                          std::span<const double> y);

// Normalizing factors 1/(Gamma((lambda+nu-n+1)/2) Gamma((lambda-nu)/2)) and
// 1/Gamma((lambda+nu-n+1)/2); exactly 0 at reciprocal-Gamma poles.
std::pair<double, double> normalization(double lambda, double nu, unsigned n);

// (dpi_lambda(X) f)(x) evaluated from the test function's exact derivatives.
double conf_act_numeric(const ConfGenerator& g, unsigned n, double lambda,
                        const BumpFunction& f, std::span<const double> x);

struct EquivarianceResult {
  double residual = 0.0;  // max |A(dpi f) - dpi'(A f)| / max |A f|
  double ref_norm = 0.0;
  long cells = 0;
};

// Compares A(dpi_lambda(X) f) with dpi'_nu(X)(A f) on a uniform grid of
// y-points; the outer action is applied by fourth-order finite differences.
EquivarianceResult numeric_equivariance(const KernelConfig& cfg, const ConfGenerator& g,
                                        const BumpFunction& f, double grid_halfwidth,
                                        unsigned grid_points_per_dim);

}  // namespace sbo
