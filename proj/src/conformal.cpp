#include "sbo/conformal.hpp"

namespace sbo {

std::string generator_name(const ConfGenerator& g) {
  using Kind = ConfGenerator::Kind;
  switch (g.kind) {
    case Kind::Translation: return "T" + std::to_string(g.j);
    case Kind::Rotation: return "R" + std::to_string(g.i) + std::to_string(g.j);
    case Kind::Dilation: return "D";
    case Kind::SpecialConformal: return "C" + std::to_string(g.j);
  }
  return "?";
}

VarList conf_vars(unsigned n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (unsigned k = 1; k <= n; ++k) names.push_back("x" + std::to_string(k));
  return make_vars(std::move(names));
}

std::vector<ConfGenerator> conf_basis(unsigned n) {
  std::vector<ConfGenerator> out;
  for (unsigned j = 1; j <= n; ++j) out.push_back(ConfGenerator::T(j));
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = i + 1; j <= n; ++j) out.push_back(ConfGenerator::R(i, j));
  out.push_back(ConfGenerator::D());
  for (unsigned j = 1; j <= n; ++j) out.push_back(ConfGenerator::C(j));
  return out;
}

std::vector<ConfGenerator> subalgebra_basis(unsigned n) {
  if (n < 2) throw precondition_error("subalgebra_basis: n >= 2 required");
  std::vector<ConfGenerator> out;
  for (unsigned j = 1; j < n; ++j) out.push_back(ConfGenerator::T(j));
  for (unsigned i = 1; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) out.push_back(ConfGenerator::R(i, j));
  out.push_back(ConfGenerator::D());
  for (unsigned j = 1; j < n; ++j) out.push_back(ConfGenerator::C(j));
  return out;
}

namespace {

// Euler operator sum_k x_k d_k.
SpacePoly euler(const SpacePoly& f) {
  const auto& vars = f.vars();
  SpacePoly out(vars);
  for (size_t k = 0; k < vars->size(); ++k)
    out += SpacePoly::variable(vars, k, param_const(1)) * f.diff(k);
  return out;
}

}  // namespace

SpacePoly conf_act(const ConfGenerator& g, unsigned n, const ParamPoly& lambda,
                   const SpacePoly& f) {
  if (f.vars()->size() != n) throw precondition_error("conf_act: variable arity != n");
  using Kind = ConfGenerator::Kind;
  const auto& vars = f.vars();
  switch (g.kind) {
    case Kind::Translation: {
      if (g.j < 1 || g.j > n) throw precondition_error("conf_act: index out of range");
      return f.diff(g.j - 1);
    }
    case Kind::Rotation: {
      if (g.i < 1 || g.j <= g.i || g.j > n)
        throw precondition_error("conf_act: rotation indices out of range");
      SpacePoly xi = SpacePoly::variable(vars, g.i - 1, param_const(1));
      SpacePoly xj = SpacePoly::variable(vars, g.j - 1, param_const(1));
      return xi * f.diff(g.j - 1) - xj * f.diff(g.i - 1);
    }
    case Kind::Dilation:
      return euler(f) + f.scaled(lambda);
    case Kind::SpecialConformal: {
      if (g.j < 1 || g.j > n) throw precondition_error("conf_act: index out of range");
      SpacePoly xj = SpacePoly::variable(vars, g.j - 1, param_const(1));
      SpacePoly r2(vars);
      for (size_t k = 0; k < n; ++k) {
        SpacePoly xk = SpacePoly::variable(vars, k, param_const(1));
        r2 += xk * xk;
      }
      return r2 * f.diff(g.j - 1) - (xj * euler(f)).scaled(param_const(2)) -
             (xj * f).scaled(lambda + lambda);
    }
  }
  throw precondition_error("conf_act: bad generator");
}

SpacePoly conf_act(const ConfGenerator& g, unsigned n, const Rational& lambda,
                   const SpacePoly& f) {
  return conf_act(g, n, param_const(lambda), f);
}

namespace {

using Kind = ConfGenerator::Kind;

// Adds c * R_{ij} with the convention R_{ij} = -R_{ji}, R_{ii} = 0.
void add_rotation(std::vector<GenTerm>& out, Rational c, unsigned i, unsigned j) {
  if (i == j) return;
  if (i < j)
    out.push_back({c, ConfGenerator::R(i, j)});
  else
    out.push_back({-c, ConfGenerator::R(j, i)});
}

std::vector<GenTerm> bracket_ordered(const ConfGenerator& x, const ConfGenerator& y) {
  std::vector<GenTerm> out;
  // Ordered cases with x.kind <= y.kind in the order T < R < D < C; the
  // dispatcher below antisymmetrizes.
  if (x.kind == Kind::Translation && y.kind == Kind::Translation) return out;
  if (x.kind == Kind::Dilation && y.kind == Kind::Dilation) return out;
  if (x.kind == Kind::SpecialConformal && y.kind == Kind::SpecialConformal) return out;

  if (x.kind == Kind::Dilation && y.kind == Kind::Translation) {
    out.push_back({-1, y});  // [D, T_j] = -T_j
    return out;
  }
  if (x.kind == Kind::Dilation && y.kind == Kind::SpecialConformal) {
    out.push_back({1, y});  // [D, C_j] = C_j
    return out;
  }
  if (x.kind == Kind::Dilation && y.kind == Kind::Rotation) return out;

  if (x.kind == Kind::Translation && y.kind == Kind::SpecialConformal) {
    // [T_i, C_j] = 2 R_{ij} - 2 delta_{ij} D
    if (x.j == y.j)
      out.push_back({-2, ConfGenerator::D()});
    else
      add_rotation(out, 2, x.j, y.j);
    return out;
  }

  if (x.kind == Kind::Rotation && y.kind == Kind::Translation) {
    // [R_{ij}, T_k] = delta_{jk} T_i - delta_{ik} T_j
    if (x.j == y.j) out.push_back({1, ConfGenerator::T(x.i)});
    if (x.i == y.j) out.push_back({-1, ConfGenerator::T(x.j)});
    return out;
  }
  if (x.kind == Kind::Rotation && y.kind == Kind::SpecialConformal) {
    if (x.j == y.j) out.push_back({1, ConfGenerator::C(x.i)});
    if (x.i == y.j) out.push_back({-1, ConfGenerator::C(x.j)});
    return out;
  }
  if (x.kind == Kind::Rotation && y.kind == Kind::Rotation) {
    // [R_{ij}, R_{kl}] = d_{jk} R_{il} + d_{il} R_{jk} - d_{jl} R_{ik} - d_{ik} R_{jl}
    if (x.j == y.i) add_rotation(out, 1, x.i, y.j);
    if (x.i == y.j) add_rotation(out, 1, x.j, y.i);
    if (x.j == y.j) add_rotation(out, -1, x.i, y.i);
    if (x.i == y.i) add_rotation(out, -1, x.j, y.j);
    return out;
  }
  throw precondition_error("conf_bracket: unhandled generator pair");
}

// The ordered table stores D-first, R-first (against T/C), and (T,C) pairs.
bool needs_flip(Kind a, Kind b) {
  if (a == b) return false;
  if (b == Kind::Dilation) return true;
  if (a == Kind::Dilation) return false;
  if (a == Kind::Rotation) return false;
  if (b == Kind::Rotation) return true;
  return a == Kind::SpecialConformal;  // remaining mixed pair {T, C}
}

}  // namespace

std::vector<GenTerm> conf_bracket(const ConfGenerator& x, const ConfGenerator& y) {
  bool flip = needs_flip(x.kind, y.kind);
  auto terms = flip ? bracket_ordered(y, x) : bracket_ordered(x, y);
  if (flip)
    for (auto& t : terms) t.coeff = -t.coeff;
  return terms;
}

CheckReport check_brackets_conf(unsigned n, const ParamPoly& lambda, unsigned max_degree) {
  if (n < 2) throw precondition_error("check_brackets_conf: n >= 2 required");
  auto basis = conf_basis(n);
  VarList vars = conf_vars(n);

  // Enumerate monomials of total degree <= max_degree.
  std::vector<Exps> monomials;
  Exps cur(n, 0);
  auto rec = [&](auto&& self, size_t pos, unsigned left) -> void {
    if (pos == n) {
      monomials.push_back(cur);
      return;
    }
    for (unsigned d = 0; d <= left; ++d) {
      cur[pos] = d;
      self(self, pos + 1, left - d);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, max_degree);

  CheckReport report;
  for (size_t xi = 0; xi < basis.size(); ++xi) {
    for (size_t yi = xi + 1; yi < basis.size(); ++yi) {
      const auto& x = basis[xi];
      const auto& y = basis[yi];
      auto abstract = conf_bracket(x, y);
      for (const auto& e : monomials) {
        SpacePoly m = SpacePoly::monomial(vars, e, param_const(1));
        SpacePoly lhs = conf_act(x, n, lambda, conf_act(y, n, lambda, m)) -
                        conf_act(y, n, lambda, conf_act(x, n, lambda, m));
        SpacePoly rhs(vars);
        for (const auto& t : abstract)
          rhs += conf_act(t.gen, n, lambda, m).scaled(param_const(t.coeff));
        ++report.checks;
        if (!(lhs == rhs))
          report.violations.push_back("[" + generator_name(x) + "," + generator_name(y) +
                                      "] fails on a degree-" +
                                      std::to_string(m.total_degree()) + " monomial");
      }
    }
  }
  return report;
}

}  // namespace sbo
