#include "sbo/poly.hpp"

#include <cctype>

namespace sbo {

VarList make_vars(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

const VarList& no_vars() {
  static const VarList empty = make_vars({});
  return empty;
}

int var_index(const VarList& vars, std::string_view name) {
  for (size_t i = 0; i < vars->size(); ++i)
    if ((*vars)[i] == name) return static_cast<int>(i);
  return -1;
}

ParamPoly poch(const ParamPoly& base, unsigned k) {
  ParamPoly acc = ParamPoly::constant(base.vars(), 1);
  for (unsigned i = 0; i < k; ++i)
    acc *= base + ParamPoly::constant(base.vars(), Rational(i));
  return acc;
}

namespace {

void append_monomial(std::string& out, const VarList& vars, const Exps& exps) {
  for (size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += (*vars)[i];
    if (exps[i] > 1) {
      out += '^';
      out += std::to_string(exps[i]);
    }
  }
}

void append_term(std::string& out, bool first, const Rational& coeff,
                 const std::string& mono) {
  Rational c = coeff;
  if (first) {
    if (c < 0) {
      out += '-';
      c = -c;
    }
  } else {
    out += c < 0 ? " - " : " + ";
    if (c < 0) c = -c;
  }
  if (mono.empty()) {
    out += rat_to_string(c);
  } else {
    if (c != 1) {
      out += rat_to_string(c);
      out += '*';
    }
    out += mono;
  }
}

}  // namespace

std::string to_string(const ParamPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exps, coeff] : p.terms()) {
    std::string mono;
    append_monomial(mono, p.vars(), exps);
    append_term(out, first, coeff, mono);
    first = false;
  }
  return out;
}

std::string to_string(const SpacePoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exps, coeff] : p.terms()) {
    std::string mono;
    append_monomial(mono, p.vars(), exps);
    if (coeff.is_constant()) {
      append_term(out, first, coeff.constant_term(), mono);
    } else {
      if (!first) out += " + ";
      out += '(';
      out += to_string(coeff);
      out += ')';
      if (!mono.empty()) {
        out += '*';
        out += mono;
      }
    }
    first = false;
  }
  return out;
}

namespace {

class TermScanner {
 public:
  explicit TermScanner(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() { return s_[pos_]; }
  char take() { return s_[pos_++]; }

  bool take_if(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Integer integer() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw precondition_error("polynomial parse: expected integer");
    return Integer{std::string(s_.substr(start, pos_ - start))};
  }

  std::string name() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  bool at_name() {
    skip_ws();
    return pos_ < s_.size() &&
           (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_');
  }
  bool at_digit() {
    skip_ws();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

 private:
  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

ParamPoly parse_param_poly(std::string_view text, const VarList& vars) {
  ParamPoly result(vars);
  TermScanner sc(text);
  bool first = true;
  while (!sc.done()) {
    bool neg = false;
    if (sc.take_if('-'))
      neg = true;
    else if (sc.take_if('+')) {
      if (first) throw precondition_error("polynomial parse: leading '+'");
    } else if (!first) {
      throw precondition_error("polynomial parse: expected '+' or '-' between terms");
    }
    first = false;

    Rational coeff{1};
    Exps exps(vars->size(), 0);
    bool want_factor = true;
    while (want_factor) {
      if (sc.at_digit()) {
        Integer num = sc.integer();
        Integer den{1};
        if (sc.take_if('/')) {
          den = sc.integer();
          if (den == 0) throw precondition_error("polynomial parse: zero denominator");
        }
        coeff *= Rational{num, den};
      } else if (sc.at_name()) {
        std::string n = sc.name();
        int idx = var_index(vars, n);
        if (idx < 0)
          throw precondition_error("polynomial parse: unknown variable '" + n + "'");
        unsigned k = 1;
        if (sc.take_if('^')) k = static_cast<unsigned>(sc.integer());
        exps[static_cast<size_t>(idx)] += k;
      } else {
        throw precondition_error("polynomial parse: expected a factor");
      }
      want_factor = sc.take_if('*');
    }
    result.add_term(std::move(exps), neg ? -coeff : coeff);
  }
  return result;
}

SpacePoly subst_params(const SpacePoly& p,
                       std::span<const std::pair<std::string, Rational>> assignments) {
  SpacePoly out(p.vars());
  for (const auto& [exps, coeff] : p.terms()) {
    std::vector<Rational> values;
    values.reserve(coeff.vars()->size());
    for (const auto& name : *coeff.vars()) {
      const Rational* found = nullptr;
      for (const auto& [n, v] : assignments)
        if (n == name) found = &v;
      if (!found)
        throw precondition_error("subst_params: no value for parameter '" + name + "'");
      values.push_back(*found);
    }
    out.add_term(exps, param_const(coeff.eval(values)));
  }
  return out;
}

ParamPoly eval_space(const SpacePoly& p, std::span<const Rational> point) {
  if (point.size() != p.vars()->size())
    throw precondition_error("eval_space: arity mismatch");
  ParamPoly acc;
  for (const auto& [exps, coeff] : p.terms()) {
    Rational scale{1};
    for (size_t i = 0; i < exps.size(); ++i)
      for (unsigned k = 0; k < exps[i]; ++k) scale *= point[i];
    acc += coeff.scaled(scale);
  }
  return acc;
}

}  // namespace sbo
