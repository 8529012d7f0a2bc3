#include "sbo/juhl.hpp"

#include "sbo/conformal.hpp"

namespace sbo {

namespace {

Rational factorial(unsigned k) {
  Integer f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return Rational(f);
}

Rational pow2(unsigned k) {
  Integer p = 1;
  p <<= k;
  return Rational(p);
}

VarList t_var() {
  static const VarList v = make_vars({"t"});
  return v;
}

VarList uv_vars() {
  static const VarList v = make_vars({"u", "v"});
  return v;
}

}  // namespace

SpacePoly gegenbauer(unsigned l, const ParamPoly& alpha) {
  SpacePoly p(t_var());
  for (unsigned k = 0; 2 * k <= l; ++k) {
    Rational pref = Rational(k % 2 ? -1 : 1) * pow2(l - 2 * k) /
                    (factorial(l - 2 * k) * factorial(k));
    p.add_term({l - 2 * k}, poch(alpha, l - k).scaled(pref));
  }
  return p;
}

SpacePoly gegenbauer(unsigned l, const Rational& alpha) {
  return gegenbauer(l, param_const(alpha));
}

SpacePoly gegenbauer_renorm(unsigned l, const ParamPoly& alpha) {
  // poch(alpha, l-k) / poch(alpha, h) = poch(alpha + h, l-k-h) with
  // h = floor((l+1)/2) <= l-k, so the division is exact by construction.
  unsigned h = (l + 1) / 2;
  ParamPoly shifted = alpha + param_const(Rational(h));
  SpacePoly p(t_var());
  for (unsigned k = 0; 2 * k <= l; ++k) {
    Rational pref = Rational(k % 2 ? -1 : 1) * pow2(l - 2 * k) /
                    (factorial(l - 2 * k) * factorial(k));
    p.add_term({l - 2 * k}, poch(shifted, l - k - h).scaled(pref));
  }
  return p;
}

SpacePoly gegenbauer_renorm(unsigned l, const Rational& alpha) {
  return gegenbauer_renorm(l, param_const(alpha));
}

SpacePoly gegenbauer_inflate(unsigned l, const ParamPoly& alpha) {
  SpacePoly tpoly = gegenbauer_renorm(l, alpha);
  SpacePoly p(uv_vars());
  for (const auto& [e, c] : tpoly.terms()) {
    unsigned tdeg = e[0];
    // t^{l-2k} -> u^k v^{l-2k}; parity guarantees l - tdeg is even.
    p.add_term({(l - tdeg) / 2, tdeg}, c);
  }
  return p;
}

SpacePoly gegenbauer_inflate(unsigned l, const Rational& alpha) {
  return gegenbauer_inflate(l, param_const(alpha));
}

int JuhlOp::order() const {
  int best = -1;
  for (const auto& [e, c] : terms) {
    if (c.is_zero()) continue;
    int total = 0;
    for (unsigned k : e) total += static_cast<int>(k);
    best = std::max(best, total);
  }
  return best;
}

namespace {

void add_to(std::map<Exps, ParamPoly>& out, const Exps& key, const ParamPoly& val) {
  if (val.is_zero()) return;
  auto it = out.find(key);
  if (it == out.end()) {
    out.emplace(key, val);
  } else {
    it->second += val;
    if (it->second.is_zero()) out.erase(it);
  }
}

// Expands (sum_{j<n} d_j^2)^k d_n^m into multi-orders over x1..xn, adding
// coeff times each multinomial term to `out`.
void expand_laplacian_power(unsigned n, unsigned k, unsigned m, const ParamPoly& coeff,
                            std::map<Exps, ParamPoly>& out) {
  const unsigned slots = n - 1;
  Exps orders(n, 0);
  orders[n - 1] = m;
  if (slots == 0) {
    // The (n-1)-Laplacian is the empty sum: its k-th power is 0 unless k = 0.
    if (k == 0) add_to(out, orders, coeff);
    return;
  }
  Rational kfact = factorial(k);
  auto rec = [&](auto&& self, unsigned slot, unsigned left, const Rational& denom) -> void {
    if (slot + 1 == slots) {
      orders[slot] = 2 * left;
      add_to(out, orders, coeff.scaled(kfact / (denom * factorial(left))));
      orders[slot] = 0;
      return;
    }
    for (unsigned take = 0; take <= left; ++take) {
      orders[slot] = 2 * take;
      self(self, slot + 1, left - take, denom * factorial(take));
      orders[slot] = 0;
    }
  };
  rec(rec, 0, k, Rational(1));
}

JuhlOp build_juhl(unsigned n, unsigned l, const ParamPoly& lambda, const ParamPoly& nu) {
  // alpha = lambda - (n-1)/2
  ParamPoly alpha = lambda - param_const(Rational(n - 1, 2));
  SpacePoly infl = gegenbauer_inflate(2 * l, alpha);

  JuhlOp op;
  op.n = n;
  op.lambda = lambda;
  op.nu = nu;
  for (const auto& [e, c] : infl.terms()) {
    unsigned uk = e[0], vm = e[1];
    // u = -Laplacian(R^{n-1}) contributes (-1)^k.
    ParamPoly signed_c = uk % 2 ? -c : c;
    expand_laplacian_power(n, uk, vm, signed_c, op.terms);
  }
  return op;
}

}  // namespace

JuhlOp juhl_operator(unsigned n, const Rational& lambda, const Rational& nu) {
  if (n < 1) throw precondition_error("juhl_operator: n >= 1 required");
  Rational gap = nu - lambda;
  if (!is_even_nonneg_integer(gap))
    throw precondition_error(
        "juhl_operator: nu - lambda must be in {0, 2, 4, ...} (no differential operator "
        "exists otherwise)");
  unsigned l = static_cast<unsigned>(to_long(gap / 2));
  return build_juhl(n, l, param_const(lambda), param_const(nu));
}

JuhlOp juhl_operator_symbolic(unsigned n, unsigned l, const ParamPoly& lambda) {
  return build_juhl(n, l, lambda, lambda + param_const(Rational(2 * l)));
}

SpacePoly juhl_apply(const JuhlOp& op, const SpacePoly& f) {
  if (f.vars()->size() != op.n)
    throw precondition_error("juhl_apply: variable arity != n");
  SpacePoly acc(f.vars());
  for (const auto& [orders, c] : op.terms) {
    SpacePoly d = f;
    for (size_t j = 0; j < orders.size() && !d.is_zero(); ++j)
      if (orders[j] > 0) d = d.diff(j, orders[j]);
    acc += d.scaled(c);
  }
  VarList reduced = conf_vars(op.n - 1);
  return acc.restrict_drop(op.n - 1, param_const(0), reduced);
}

bool l_even_member(const Rational& lambda, const Rational& nu) {
  if (!is_integer(lambda) || !is_integer(nu)) return false;
  if (!(lambda <= nu && nu <= 0)) return false;
  Rational gap = nu - lambda;
  return numerator(gap) % 2 == 0;
}

unsigned sbo_dim_conf(const Rational& lambda, const Rational& nu) {
  return l_even_member(lambda, nu) ? 2 : 1;
}

bool diff_locus(const Rational& lambda, const Rational& nu) {
  return is_even_nonneg_integer(nu - lambda);
}

AqHomDim aq_hom_dim(unsigned i, unsigned j) {
  bool same_parity = (i % 2) == (j % 2);
  if (i >= j && same_parity) return AqHomDim::One;
  if (i < j && !same_parity) return AqHomDim::Zero;
  return AqHomDim::Unspecified;
}

namespace {

CheckReport verify_equivariance(const JuhlOp& op, unsigned n, const ParamPoly& lambda,
                                const ParamPoly& nu, unsigned max_degree) {
  if (n < 2) throw precondition_error("verify_juhl_equivariance: n >= 2 required");
  VarList vars = conf_vars(n);

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
  for (const auto& x : subalgebra_basis(n)) {
    for (const auto& e : monomials) {
      SpacePoly m = SpacePoly::monomial(vars, e, param_const(1));
      SpacePoly lhs = juhl_apply(op, conf_act(x, n, lambda, m));
      SpacePoly rhs = conf_act(x, n - 1, nu, juhl_apply(op, m));
      ++report.checks;
      if (!(lhs == rhs))
        report.violations.push_back(generator_name(x) + " fails on a degree-" +
                                    std::to_string(m.total_degree()) + " monomial");
    }
  }
  return report;
}

}  // namespace

CheckReport verify_juhl_equivariance(unsigned n, const Rational& lambda,
                                     const Rational& nu, unsigned max_degree) {
  JuhlOp op = juhl_operator(n, lambda, nu);
  return verify_equivariance(op, n, param_const(lambda), param_const(nu), max_degree);
}

CheckReport verify_juhl_equivariance_symbolic(unsigned n, unsigned l,
                                              unsigned max_degree) {
  VarList params = make_vars({"lambda"});
  ParamPoly lambda = ParamPoly::variable(params, 0, Rational(1));
  JuhlOp op = juhl_operator_symbolic(n, l, lambda);
  return verify_equivariance(op, n, lambda, op.nu, max_degree);
}

}  // namespace sbo
