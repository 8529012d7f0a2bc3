#include "sbo/kernel.hpp"

#include <algorithm>
#include <cmath>

namespace sbo {

double BumpFunction::value(std::span<const double> x) const {
  double s = 0.0;
  for (size_t d = 0; d < x.size(); ++d) {
    double t = (x[d] - center[d]) / radius;
    s += t * t;
  }
  if (s >= 1.0 - 1e-14) return 0.0;
  double b = scale * std::exp(-1.0 / (1.0 - s));
  if (!modulation.empty()) {
    double m = 0.0;
    for (const auto& [e, c] : modulation) {
      double t = c;
      for (size_t d = 0; d < e.size(); ++d)
        for (unsigned k = 0; k < e[d]; ++k) t *= x[d];
      m += t;
    }
    b *= m;
  }
  return b;
}

double BumpFunction::partial(size_t j, std::span<const double> x) const {
  double s = 0.0;
  for (size_t d = 0; d < x.size(); ++d) {
    double t = (x[d] - center[d]) / radius;
    s += t * t;
  }
  if (s >= 1.0 - 1e-14) return 0.0;
  double one_minus = 1.0 - s;
  double b = scale * std::exp(-1.0 / one_minus);
  double db = -b * 2.0 * (x[j] - center[j]) / (radius * radius * one_minus * one_minus);
  if (modulation.empty()) return db;

  double m = 0.0, dm = 0.0;
  for (const auto& [e, c] : modulation) {
    double t = c;
    for (size_t d = 0; d < e.size(); ++d)
      for (unsigned k = 0; k < e[d]; ++k) t *= x[d];
    m += t;
    if (e[j] > 0) {
      double td = c * e[j];
      for (size_t d = 0; d < e.size(); ++d) {
        unsigned pow = d == j ? e[d] - 1 : e[d];
        for (unsigned k = 0; k < pow; ++k) td *= x[d];
      }
      dm += td;
    }
  }
  return db * m + b * dm;
}

bool kernel_convergent(unsigned n, double lambda, double nu) {
  return lambda + nu > static_cast<double>(n) - 1.0 && lambda > nu;
}

namespace {

void gauss_legendre(unsigned q, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(q, 0.0);
  weights.assign(q, 0.0);
  for (unsigned k = 0; k < q; ++k) {
    double x = std::cos(M_PI * (k + 0.75) / (q + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 64; ++iter) {
      double p0 = 1.0, p1 = x;
      for (unsigned m = 2; m <= q; ++m) {
        double p2 = ((2.0 * m - 1.0) * x * p1 - (m - 1.0) * p0) / m;
        p0 = p1;
        p1 = p2;
      }
      dp = q * (x * p1 - p0) / (x * x - 1.0);
      double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    nodes[k] = x;
    weights[k] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

struct Panel {
  double lo, hi;
  int type;  // 0: plain coordinate; +1/-1: substituted s-variable, x_n = sign * s^{1/(w+1)}
};

void split_panel(std::vector<Panel>& out, const Panel& p, unsigned parts) {
  double width = (p.hi - p.lo) / parts;
  for (unsigned k = 0; k < parts; ++k)
    out.push_back({p.lo + k * width, p.lo + (k + 1) * width, p.type});
}

// Plain geometric panels covering sign * [from_abs, to_abs] in |x_n|, widths
// starting at `base` and doubling away from the hyperplane.
void geometric_panels(std::vector<Panel>& out, double from_abs, double to_abs, double base,
                      int sign, unsigned parts) {
  double a = from_abs;
  double w = base;
  while (a < to_abs) {
    double b = std::min(a + w, to_abs);
    if (sign > 0)
      split_panel(out, {a, b, 0}, parts);
    else
      split_panel(out, {-b, -a, 0}, parts);
    a = b;
    w *= 2.0;
  }
}

// Panels for the x_n axis over [lo, hi]: substituted panels absorb the
// |x_n|^w weight inside the split radius, plain geometric panels outside.
std::vector<Panel> xn_panels(double lo, double hi, double split_radius, double w,
                             unsigned grading, unsigned parts) {
  std::vector<Panel> out;
  auto one_side = [&](double extent, int sign) {
    if (extent <= 0.0) return;
    double delta = std::min(split_radius, extent);
    // s-interval [0, delta^{w+1}] graded geometrically toward 0; the panel
    // variable is s with x_n = sign * s^{1/(w+1)}.
    double cap = std::pow(delta, w + 1.0);
    double floor_s = cap * std::pow(4.0, -static_cast<double>(grading));
    split_panel(out, {0.0, floor_s, sign}, 1);
    for (unsigned g = grading; g >= 1; --g) {
      double a = cap * std::pow(4.0, -static_cast<double>(g));
      double b = cap * std::pow(4.0, -static_cast<double>(g - 1));
      split_panel(out, {a, b, sign}, parts);
    }
    if (extent > delta) geometric_panels(out, delta, extent, delta, sign, parts);
  };
  if (lo < 0.0 && hi > 0.0) {
    // Fixed deterministic order: negative side, then positive.
    one_side(-lo, -1);
    one_side(hi, +1);
  } else if (lo >= 0.0) {
    // Support avoids the hyperplane: the weight is smooth, plain panels only.
    geometric_panels(out, std::max(lo, 0.0), hi, std::max(lo, split_radius), +1, parts);
  } else {
    geometric_panels(out, std::max(-hi, 0.0), -lo, std::max(-hi, split_radius), -1, parts);
  }
  return out;
}

// Panels for one tangential axis over [lo, hi], graded toward the kernel's
// singular projection y_d with a floor width matching the finest x_n scale.
std::vector<Panel> xbar_panels(double lo, double hi, double yd, double floor_width,
                               unsigned parts) {
  std::vector<double> pts{lo, hi};
  if (yd > lo && yd < hi) pts.push_back(yd);
  for (double off = floor_width; off < (hi - lo); off *= 2.0) {
    double l = yd - off, r = yd + off;
    if (l > lo && l < hi) pts.push_back(l);
    if (r > lo && r < hi) pts.push_back(r);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<Panel> out;
  for (size_t i = 0; i + 1 < pts.size(); ++i)
    split_panel(out, {pts[i], pts[i + 1], 0}, parts);
  return out;
}

struct QuadPlan {
  std::vector<std::vector<Panel>> dims;  // last dim is x_n
  std::vector<double> nodes, weights;
  double w_exp = 0.0;       // lambda + nu - n
  double sub_exponent = 0;  // 1 / (w_exp + 1)
  double sub_factor = 0;    // 1 / (w_exp + 1)
};

QuadPlan make_plan(const KernelConfig& cfg, std::span<const double> center, double radius,
                   std::span<const double> y, int refine) {
  unsigned n = cfg.n;
  QuadPlan plan;
  plan.w_exp = cfg.lambda + cfg.nu - static_cast<double>(n);
  plan.sub_exponent = 1.0 / (plan.w_exp + 1.0);
  plan.sub_factor = 1.0 / (plan.w_exp + 1.0);
  unsigned parts = static_cast<unsigned>(refine) + 1;
  unsigned grading = 6 + 2 * static_cast<unsigned>(refine);
  double floor_width = cfg.split_radius * std::pow(2.0, -(4.0 + 2.0 * refine));

  plan.dims.resize(n);
  for (unsigned d = 0; d + 1 < n; ++d)
    plan.dims[d] =
        xbar_panels(center[d] - radius, center[d] + radius, y[d], floor_width, parts);
  plan.dims[n - 1] = xn_panels(center[n - 1] - radius, center[n - 1] + radius,
                               cfg.split_radius, plan.w_exp, grading, parts);
  gauss_legendre(cfg.gl_points, plan.nodes, plan.weights);
  return plan;
}

}  // namespace

QuadResult kernel_eval_fn(const KernelConfig& cfg,
                          const std::function<double(std::span<const double>)>& f,
                          std::span<const double> support_center, double support_radius,
                          std::span<const double> y) {
  if (!kernel_convergent(cfg.n, cfg.lambda, cfg.nu))
    throw precondition_error(
        "kernel_eval: outside the convergent chart (requires lambda > nu and "
        "lambda + nu > n - 1)");
  if (support_center.size() != cfg.n || y.size() + 1 != cfg.n)
    throw precondition_error("kernel_eval: dimension mismatch");

  unsigned n = cfg.n;
  auto integrate = [&](int refine) -> std::pair<double, long> {
    QuadPlan plan = make_plan(cfg, support_center, support_radius, y, refine);
    const unsigned q = static_cast<unsigned>(plan.nodes.size());
    std::vector<double> x(n, 0.0);
    long cells = 0;
    double total = 0.0;

    // Recursive tensor loop over panels and nodes, fixed order throughout.
    auto over_dims = [&](auto&& self, unsigned d, double w_outer) -> double {
      double acc = 0.0;
      for (const Panel& p : plan.dims[d]) {
        if (d + 1 == n) ++cells;
        double mid = 0.5 * (p.lo + p.hi), half = 0.5 * (p.hi - p.lo);
        for (unsigned k = 0; k < q; ++k) {
          double t = mid + half * plan.nodes[k];
          double w = w_outer * half * plan.weights[k];
          if (d + 1 < n) {
            x[d] = t;
            acc += self(self, d + 1, w);
            continue;
          }
          double weight_term;
          if (p.type == 0) {
            x[d] = t;
            weight_term = std::pow(std::abs(t), plan.w_exp);
          } else {
            x[d] = p.type * std::pow(t, plan.sub_exponent);
            weight_term = plan.sub_factor;
          }
          double fx = f(x);
          if (fx == 0.0) continue;
          double r2 = x[d] * x[d];
          for (unsigned dd = 0; dd + 1 < n; ++dd) {
            double diff = x[dd] - y[dd];
            r2 += diff * diff;
          }
          acc += w * weight_term * std::pow(r2, -cfg.nu) * fx;
        }
      }
      return acc;
    };
    total = over_dims(over_dims, 0, 1.0);
    return {total, cells};
  };

  int r = std::max(cfg.refine, 1);
  auto [coarse, coarse_cells] = integrate(r - 1);
  auto [fine, fine_cells] = integrate(r);
  QuadResult res;
  res.value = fine;
  res.error_estimate = std::abs(fine - coarse);
  res.cells = fine_cells;
  return res;
}

QuadResult kernel_eval(const KernelConfig& cfg, const BumpFunction& f,
                       std::span<const double> y) {
  if (f.center.size() != cfg.n)
    throw precondition_error("kernel_eval: test function dimension != n");
  auto fn = [&f](std::span<const double> x) { return f.value(x); };
  QuadResult res = kernel_eval_fn(cfg, fn, f.center, f.radius, y);
  if (res.error_estimate > cfg.noncvg_threshold * std::max(1.0, std::abs(res.value)))
    throw std::runtime_error("kernel_eval: quadrature did not converge");
  return res;
}

std::pair<double, double> normalization(double lambda, double nu, unsigned n) {
  auto recip_gamma = [](double a) {
    if (a == std::rint(a) && a <= 0.0) return 0.0;  // reciprocal Gamma vanishes
    return 1.0 / std::tgamma(a);
  };
  double g1 = recip_gamma((lambda + nu - static_cast<double>(n) + 1.0) / 2.0);
  double g2 = recip_gamma((lambda - nu) / 2.0);
  return {g1 * g2, g1};
}

double conf_act_numeric(const ConfGenerator& g, unsigned n, double lambda,
                        const BumpFunction& f, std::span<const double> x) {
  using Kind = ConfGenerator::Kind;
  switch (g.kind) {
    case Kind::Translation:
      return f.partial(g.j - 1, x);
    case Kind::Rotation:
      return x[g.i - 1] * f.partial(g.j - 1, x) - x[g.j - 1] * f.partial(g.i - 1, x);
    case Kind::Dilation: {
      double acc = lambda * f.value(x);
      for (unsigned k = 0; k < n; ++k) acc += x[k] * f.partial(k, x);
      return acc;
    }
    case Kind::SpecialConformal: {
      double r2 = 0.0, euler = 0.0;
      for (unsigned k = 0; k < n; ++k) {
        r2 += x[k] * x[k];
        euler += x[k] * f.partial(k, x);
      }
      return r2 * f.partial(g.j - 1, x) - 2.0 * x[g.j - 1] * euler -
             2.0 * lambda * x[g.j - 1] * f.value(x);
    }
  }
  return 0.0;
}

namespace {

// First-order action of a subalgebra generator on functions of y in R^{n-1}
// with parameter nu, given the value and gradient of the function at y.
double conf_act_on_samples(const ConfGenerator& g, unsigned dim, double nu,
                           std::span<const double> y, double value,
                           std::span<const double> grad) {
  using Kind = ConfGenerator::Kind;
  switch (g.kind) {
    case Kind::Translation:
      return grad[g.j - 1];
    case Kind::Rotation:
      return y[g.i - 1] * grad[g.j - 1] - y[g.j - 1] * grad[g.i - 1];
    case Kind::Dilation: {
      double acc = nu * value;
      for (unsigned k = 0; k < dim; ++k) acc += y[k] * grad[k];
      return acc;
    }
    case Kind::SpecialConformal: {
      double r2 = 0.0, euler = 0.0;
      for (unsigned k = 0; k < dim; ++k) {
        r2 += y[k] * y[k];
        euler += y[k] * grad[k];
      }
      return r2 * grad[g.j - 1] - 2.0 * y[g.j - 1] * euler - 2.0 * nu * y[g.j - 1] * value;
    }
  }
  return 0.0;
}

}  // namespace

EquivarianceResult numeric_equivariance(const KernelConfig& cfg, const ConfGenerator& g,
                                        const BumpFunction& f, double grid_halfwidth,
                                        unsigned grid_points_per_dim) {
  unsigned dim = cfg.n - 1;
  unsigned P = grid_points_per_dim;
  if (P < 7 || P % 2 == 0)
    throw precondition_error("numeric_equivariance: need an odd grid with >= 7 points");
  double h = 2.0 * grid_halfwidth / (P - 1);

  // Tensor grid over R^{n-1}.
  std::vector<std::vector<double>> grid_pts;
  {
    std::vector<unsigned> idx(dim, 0);
    bool done = false;
    while (!done) {
      std::vector<double> y(dim);
      for (unsigned d = 0; d < dim; ++d) y[d] = -grid_halfwidth + idx[d] * h;
      grid_pts.push_back(std::move(y));
      unsigned d = 0;
      while (d < dim) {
        if (++idx[d] < P) break;
        idx[d] = 0;
        ++d;
      }
      done = d == dim;
    }
  }

  auto flat_index = [&](std::span<const unsigned> idx) {
    size_t o = 0;
    for (unsigned d = dim; d-- > 0;) o = o * P + idx[d];
    return o;
  };

  // A f on the whole grid.
  std::vector<double> af(grid_pts.size());
  long cells = 0;
  for (size_t i = 0; i < grid_pts.size(); ++i) {
    QuadResult r = kernel_eval(cfg, f, grid_pts[i]);
    af[i] = r.value;
    cells += r.cells;
  }
  double norm = 0.0;
  for (double v : af) norm = std::max(norm, std::abs(v));
  if (norm == 0.0) return {0.0, 0.0, cells};

  auto dpi_f = [&](std::span<const double> x) {
    return conf_act_numeric(g, cfg.n, cfg.lambda, f, x);
  };

  // Interior points admit the 5-point fourth-order stencil in every dim.
  double worst = 0.0;
  std::vector<unsigned> idx(dim, 0);
  bool done = false;
  while (!done) {
    bool interior = true;
    for (unsigned d = 0; d < dim; ++d)
      if (idx[d] < 2 || idx[d] + 2 >= P) interior = false;
    if (interior) {
      size_t flat = flat_index(idx);
      std::vector<double> y(dim);
      for (unsigned d = 0; d < dim; ++d) y[d] = -grid_halfwidth + idx[d] * h;

      std::vector<double> grad(dim);
      for (unsigned d = 0; d < dim; ++d) {
        size_t stride = 1;
        for (unsigned dd = 0; dd < d; ++dd) stride *= P;
        double m2 = af[flat - 2 * stride], m1 = af[flat - stride];
        double p1 = af[flat + stride], p2 = af[flat + 2 * stride];
        grad[d] = (-p2 + 8.0 * p1 - 8.0 * m1 + m2) / (12.0 * h);
      }
      double rhs = conf_act_on_samples(g, dim, cfg.nu, y, af[flat], grad);

      QuadResult lhs = kernel_eval_fn(cfg, dpi_f, f.center, f.radius, y);
      cells += lhs.cells;
      worst = std::max(worst, std::abs(lhs.value - rhs));
    }
    unsigned d = 0;
    while (d < dim) {
      if (++idx[d] < P) break;
      idx[d] = 0;
      ++d;
    }
    done = d == dim;
  }

  return {worst / norm, norm, cells};
}

}  // namespace sbo
