#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "sbo/rational.hpp"

namespace sbo {

// A variable list is fixed when a polynomial is constructed and shared by
// every value derived from it. Lists are compared by content, so two
// independently built lists with the same names are interchangeable.
using VarList = std::shared_ptr<const std::vector<std::string>>;

VarList make_vars(std::vector<std::string> names);
const VarList& no_vars();

inline bool same_vars(const VarList& a, const VarList& b) {
  return a == b || *a == *b;
}

int var_index(const VarList& vars, std::string_view name);

using Exps = std::vector<unsigned>;

template <class C>
inline bool coeff_is_zero(const C& c) {
  if constexpr (std::is_same_v<C, Rational>)
    return c == 0;
  else
    return c.is_zero();
}

// Sparse multivariate polynomial over an exact coefficient ring. Terms are
// keyed by exponent vector in lexicographic order, which doubles as the
// canonical serialization order. No zero coefficient is ever stored.
template <class Coeff>
class Poly {
 public:
  using TermMap = std::map<Exps, Coeff>;

  Poly() : vars_(no_vars()) {}
  explicit Poly(VarList vars) : vars_(std::move(vars)) {}

  static Poly zero(VarList vars) { return Poly(std::move(vars)); }

  static Poly constant(VarList vars, Coeff c) {
    Poly p(std::move(vars));
    if (!coeff_is_zero(c)) p.terms_.emplace(Exps(p.vars_->size(), 0), std::move(c));
    return p;
  }

  static Poly monomial(VarList vars, Exps exps, Coeff c) {
    Poly p(std::move(vars));
    if (exps.size() != p.vars_->size())
      throw precondition_error("monomial: exponent arity mismatch");
    if (!coeff_is_zero(c)) p.terms_.emplace(std::move(exps), std::move(c));
    return p;
  }

  static Poly variable(VarList vars, size_t index, Coeff unit) {
    Exps e(vars->size(), 0);
    if (index >= e.size()) throw precondition_error("variable index out of range");
    e[index] = 1;
    return monomial(std::move(vars), std::move(e), std::move(unit));
  }

  const VarList& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 &&
            std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                        [](unsigned e) { return e == 0; }));
  }

  // Constant term (zero coefficient if absent).
  Coeff constant_term() const {
    auto it = terms_.find(Exps(vars_->size(), 0));
    if (it != terms_.end()) return it->second;
    return Coeff{};
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int t = 0;
      for (unsigned k : e) t += static_cast<int>(k);
      d = std::max(d, t);
    }
    return d;  // -1 for the zero polynomial
  }

  int degree_in(size_t index) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[index]));
    return d;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (!same_vars(a.vars_, b.vars_)) {
      if (a.is_constant() && b.is_constant()) return a.constant_term() == b.constant_term();
      return false;
    }
    return a.terms_ == b.terms_;
  }

  Poly operator-() const {
    Poly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    auto [x, y] = unify(a, b);
    for (const auto& [e, c] : y.terms_) x.add_term(e, c);
    return x;
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    auto [x, y] = unify(a, b);
    Poly r(x.vars_);
    for (const auto& [ea, ca] : x.terms_) {
      for (const auto& [eb, cb] : y.terms_) {
        Exps e(ea.size());
        for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(std::move(e), ca * cb);
      }
    }
    return r;
  }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const Coeff& c) const {
    Poly r(vars_);
    if (coeff_is_zero(c)) return r;
    for (const auto& [e, t] : terms_) {
      Coeff p = t * c;
      if (!coeff_is_zero(p)) r.terms_.emplace(e, std::move(p));
    }
    return r;
  }

  // Exact partial derivative of the given order.
  Poly diff(size_t index, unsigned order = 1) const {
    if (index >= vars_->size()) throw precondition_error("diff: unknown variable");
    Poly r(vars_);
    for (const auto& [e, c] : terms_) {
      if (e[index] < order) continue;
      Coeff f = c;
      for (unsigned k = 0; k < order; ++k) f = f * Coeff_from_int(e[index] - k);
      Exps ne = e;
      ne[index] -= order;
      r.add_term(std::move(ne), std::move(f));
    }
    return r;
  }

  // Full evaluation: substitutes a value for every variable.
  Coeff eval(std::span<const Coeff> values) const {
    if (values.size() != vars_->size()) throw precondition_error("eval: arity mismatch");
    Coeff acc{};
    for (const auto& [e, c] : terms_) {
      Coeff t = c;
      for (size_t i = 0; i < e.size(); ++i)
        for (unsigned k = 0; k < e[i]; ++k) t = t * values[i];
      acc = acc + t;
    }
    return acc;
  }

  // Substitutes one variable by a rational value; the variable stays in the list.
  Poly subst(size_t index, const Coeff& value) const {
    if (index >= vars_->size()) throw precondition_error("subst: unknown variable");
    Poly r(vars_);
    for (const auto& [e, c] : terms_) {
      Coeff t = c;
      for (unsigned k = 0; k < e[index]; ++k) t = t * value;
      Exps ne = e;
      ne[index] = 0;
      r.add_term(std::move(ne), std::move(t));
    }
    return r;
  }

  // Substitutes a value for one variable and removes it from the list.
  // This is the restriction map used by rest_{x_n = 0}.
  Poly restrict_drop(size_t index, const Coeff& value, VarList reduced) const {
    if (index >= vars_->size()) throw precondition_error("restrict_drop: unknown variable");
    if (reduced->size() + 1 != vars_->size())
      throw precondition_error("restrict_drop: reduced variable list has wrong arity");
    Poly r(std::move(reduced));
    for (const auto& [e, c] : terms_) {
      Coeff t = c;
      for (unsigned k = 0; k < e[index]; ++k) t = t * value;
      if (coeff_is_zero(t)) continue;
      Exps ne;
      ne.reserve(e.size() - 1);
      for (size_t i = 0; i < e.size(); ++i)
        if (i != index) ne.push_back(e[i]);
      r.add_term(std::move(ne), std::move(t));
    }
    return r;
  }

  void add_term(Exps e, Coeff c) {
    if (coeff_is_zero(c)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(std::move(e), std::move(c));
    } else {
      it->second = it->second + c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

 private:
  static Coeff Coeff_from_int(unsigned v) {
    if constexpr (std::is_same_v<Coeff, Rational>)
      return Rational(v);
    else
      return Coeff::constant(no_vars(), Rational(v));
  }

  // Binary operations accept mismatched lists only when one side is constant,
  // which is then lifted into the other side's list.
  static std::pair<Poly, Poly> unify(const Poly& a, const Poly& b) {
    if (same_vars(a.vars_, b.vars_)) return {a, b};
    if (a.is_constant()) return {lift(a, b.vars_), b};
    if (b.is_constant()) return {a, lift(b, a.vars_)};
    throw precondition_error("polynomial variable-list mismatch");
  }

  static Poly lift(const Poly& c, const VarList& vars) {
    return constant(vars, c.constant_term());
  }

  VarList vars_;
  TermMap terms_;
};

// Polynomials in formal parameters (l1, l2, lambda, nu, alpha, ...) over Q.
using ParamPoly = Poly<Rational>;

// Polynomials in spatial variables (z; z1,z2; x1..xn; t; u,v) whose
// coefficients may still carry formal parameters. A plain rational
// coefficient is a constant ParamPoly over the empty parameter list.
using SpacePoly = Poly<ParamPoly>;

inline ParamPoly param_const(const Rational& r) {
  return ParamPoly::constant(no_vars(), r);
}

// Rising factorial base (base+1) ... (base+k-1); poch(b, 0) = 1. Every Gamma
// ratio appearing in the operator coefficient formulas is rewritten through
// this, so coefficients stay exact polynomials even where Gamma has poles.
ParamPoly poch(const ParamPoly& base, unsigned k);

// Canonical string form, e.g. "2*l1^2*l2 - 3/2*l1 + 1" (terms in the same
// lexicographic order as the JSON form; "0" for the zero polynomial).
std::string to_string(const ParamPoly& p);
std::string to_string(const SpacePoly& p);

// Parses the canonical string form against a declared variable list.
ParamPoly parse_param_poly(std::string_view text, const VarList& vars);

// Substitutes rational values for all parameters in every coefficient; the
// resulting coefficients live over the empty parameter list.
SpacePoly subst_params(const SpacePoly& p,
                       std::span<const std::pair<std::string, Rational>> assignments);

// Evaluates a spatial polynomial at a rational point, leaving parameters.
ParamPoly eval_space(const SpacePoly& p, std::span<const Rational> point);

}  // namespace sbo
