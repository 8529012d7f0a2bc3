#include "sbo/pair_tables.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sbo::detail {
const char* embedded_pair_tables();
}

namespace sbo {

namespace {

// ---------------------------------------------------------------- grammar --

// Linear integer expression in named parameters: "p+q", "2n+2", "m-1", "-20".
struct LinExpr {
  std::map<std::string, long> coeff;
  long cst = 0;
  std::string text;

  bool literal() const { return coeff.empty(); }

  long eval(const std::map<std::string, long>& env) const {
    long v = cst;
    for (const auto& [name, c] : coeff) {
      auto it = env.find(name);
      if (it == env.end()) throw precondition_error("unbound parameter " + name);
      v += c * it->second;
    }
    return v;
  }
};

struct PatternAtom {
  std::string name;
  std::vector<LinExpr> args;
  char field = 0;
  bool diag = false;
  std::vector<PatternAtom> inner;

  void collect_params(std::vector<std::string>& out) const {
    for (const auto& a : args)
      for (const auto& [n, c] : a.coeff)
        if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
    for (const auto& in : inner) in.collect_params(out);
  }
};

using PatternSum = std::vector<PatternAtom>;

class Scanner {
 public:
  explicit Scanner(std::string_view s) : s_(s) {}

  void ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    ws();
    return pos_ >= s_.size();
  }
  char peek() {
    ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool take(char c) {
    ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!take(c))
      throw precondition_error(std::string("descriptor parse: expected '") + c + "' in '" +
                               std::string(s_) + "'");
  }

  long integer() {
    ws();
    bool neg = take('-');
    ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw precondition_error("descriptor parse: expected integer");
    long v = std::stol(std::string(s_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }

  bool at_digit() {
    ws();
    return pos_ < s_.size() &&
           (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-');
  }
  bool at_alpha() {
    ws();
    return pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]));
  }

  // Algebra names: lowercase letters, optional digits, optional '*'.
  std::string name() {
    ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '*') ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  std::string_view rest() const { return s_.substr(pos_); }

 private:
  std::string_view s_;
  size_t pos_ = 0;
};

// arg := linear expression | field letter (R, C, H) as the last argument.
LinExpr parse_linexpr(Scanner& sc) {
  LinExpr e;
  std::string text;
  bool first = true;
  for (;;) {
    long sign = 1;
    sc.ws();
    if (sc.take('-')) {
      sign = -1;
      text += '-';
    } else if (sc.take('+')) {
      text += '+';
    } else if (!first) {
      break;
    }
    first = false;
    if (sc.at_digit()) {
      long v = sc.integer();
      text += std::to_string(v);
      if (sc.at_alpha()) {  // "2n"
        std::string n = sc.name();
        text += n;
        e.coeff[n] += sign * v;
      } else {
        e.cst += sign * v;
      }
    } else if (sc.at_alpha()) {
      std::string n = sc.name();
      text += n;
      e.coeff[n] += sign;
    } else {
      throw precondition_error("descriptor parse: bad argument expression");
    }
    char c = sc.peek();
    if (c != '+' && c != '-') break;
  }
  e.text = text;
  return e;
}

PatternSum parse_sum(Scanner& sc);

PatternAtom parse_atom(Scanner& sc) {
  PatternAtom atom;
  sc.ws();
  if (sc.take('0')) {
    atom.name = "0";
    return atom;
  }
  if (!sc.at_alpha()) throw precondition_error("descriptor parse: expected an algebra name");
  std::string n = sc.name();
  if (n == "diag") {
    atom = parse_atom(sc);
    atom.diag = true;
    return atom;
  }
  if (n == "s" && sc.peek() == '(') {
    sc.expect('(');
    atom.name = "s";
    atom.inner = parse_sum(sc);
    sc.expect(')');
    return atom;
  }
  atom.name = n;
  if (sc.take('(')) {
    for (;;) {
      sc.ws();
      char c = sc.peek();
      if ((c == 'R' || c == 'C' || c == 'H')) {
        // Field marker: single uppercase letter argument.
        Scanner probe(sc.rest());
        probe.take(c);
        char after = probe.peek();
        if (after == ')' || after == ',') {
          sc.take(c);
          atom.field = c;
          if (!sc.take(',')) break;
          continue;
        }
      }
      atom.args.push_back(parse_linexpr(sc));
      if (!sc.take(',')) break;
    }
    sc.expect(')');
  }
  return atom;
}

PatternSum parse_sum(Scanner& sc) {
  PatternSum out;
  out.push_back(parse_atom(sc));
  while (sc.take('+')) out.push_back(parse_atom(sc));
  return out;
}

PatternSum parse_pattern_text(std::string_view text) {
  Scanner sc(text);
  PatternSum s = parse_sum(sc);
  if (!sc.done()) throw precondition_error("descriptor parse: trailing input");
  return s;
}

AlgebraAtom to_concrete(const PatternAtom& p, const std::map<std::string, long>& env) {
  AlgebraAtom a;
  a.name = p.name;
  a.field = p.field;
  a.diag = p.diag;
  for (const auto& arg : p.args) a.args.push_back(arg.eval(env));
  for (const auto& in : p.inner) a.inner.push_back(to_concrete(in, env));
  return a;
}

// ---------------------------------------------------------- normalization --

bool is_trivial_atom(const AlgebraAtom& a) {
  if (a.name == "0") return true;
  if (a.inner.empty() && a.args.size() == 1) {
    long n = a.args[0];
    if (a.name == "o" && n <= 1) return true;
    if (a.name == "u" && n == 0) return true;
    if (a.name == "su" && n <= 1) return true;
    if (a.name == "sp" && n == 0) return true;
    if (a.name == "sl" && n <= 1) return true;
    if (a.name == "gl" && n == 0) return true;
  }
  if (a.name == "s" && a.inner.empty()) return true;
  return false;
}

std::string atom_to_string(const AlgebraAtom& a);

AlgebraAtom normalize_atom(const AlgebraAtom& in) {
  AlgebraAtom a = in;
  if (a.name == "so") a.name = "o";
  if (a.name == "so*") a.name = "o*";
  // Abstractly o(p,q) = o(q,p) etc.; canonical order is descending, and a
  // zero summand collapses to the compact form.
  if (a.field == 0 && a.args.size() == 2 &&
      (a.name == "o" || a.name == "u" || a.name == "su" || a.name == "sp")) {
    if (a.args[0] < a.args[1]) std::swap(a.args[0], a.args[1]);
    if (a.args[1] == 0) a.args.pop_back();
  }
  if (a.name == "s") {
    std::vector<AlgebraAtom> inner;
    for (const auto& x : a.inner) {
      AlgebraAtom nx = normalize_atom(x);
      if (!is_trivial_atom(nx)) inner.push_back(std::move(nx));
    }
    std::sort(inner.begin(), inner.end(), [](const AlgebraAtom& x, const AlgebraAtom& y) {
      return atom_to_string(x) < atom_to_string(y);
    });
    if (inner.size() == 1 && inner[0].name == "u") {
      AlgebraAtom su = inner[0];
      su.name = "su";
      su.diag = a.diag;
      return normalize_atom(su);
    }
    a.inner = std::move(inner);
  }
  return a;
}

std::string atom_to_string(const AlgebraAtom& a) {
  std::string out;
  if (a.diag) out += "diag ";
  if (a.name == "s" || !a.inner.empty()) {
    out += "s(";
    for (size_t i = 0; i < a.inner.size(); ++i) {
      if (i) out += '+';
      out += atom_to_string(a.inner[i]);
    }
    out += ')';
    return out;
  }
  out += a.name;
  if (!a.args.empty() || a.field) {
    out += '(';
    for (size_t i = 0; i < a.args.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(a.args[i]);
    }
    if (a.field) {
      if (!a.args.empty()) out += ',';
      out += a.field;
    }
    out += ')';
  }
  return out;
}

bool compact_simple(const AlgebraAtom& a) {
  if (a.field != 0 || a.diag || !a.inner.empty()) return false;
  if (a.args.size() == 1) {
    long n = a.args[0];
    if (a.name == "su") return n >= 2;
    if (a.name == "o") return n == 3 || n >= 5;
    if (a.name == "sp") return n >= 1;
    return false;
  }
  if (a.args.empty())
    return a.name == "g2" || a.name == "f4" || a.name == "e6" || a.name == "e7" ||
           a.name == "e8";
  return false;
}

}  // namespace

AlgebraSum normalize(const AlgebraSum& in) {
  AlgebraSum out;
  for (const auto& a : in) {
    AlgebraAtom na = normalize_atom(a);
    if (!is_trivial_atom(na)) out.push_back(std::move(na));
  }
  std::sort(out.begin(), out.end(), [](const AlgebraAtom& x, const AlgebraAtom& y) {
    return atom_to_string(x) < atom_to_string(y);
  });
  return out;
}

std::string algebra_to_string(const AlgebraSum& a) {
  if (a.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) out += '+';
    out += atom_to_string(a[i]);
  }
  return out;
}

namespace {

AlgebraSum concrete_sum(const PatternSum& p) {
  std::map<std::string, long> empty_env;
  AlgebraSum out;
  for (const auto& atom : p) out.push_back(to_concrete(atom, empty_env));
  return out;
}

}  // namespace

AlgebraSum parse_algebra(std::string_view text) {
  PatternSum p = parse_pattern_text(text);
  std::vector<std::string> params;
  for (const auto& a : p) a.collect_params(params);
  if (!params.empty())
    throw precondition_error("descriptor contains unbound parameters: " +
                             std::string(text));
  return concrete_sum(p);
}

PairDescriptor parse_pair(std::string_view text) {
  Scanner sc(text);
  sc.expect('(');
  // Split at the top-level comma: scan with depth counting.
  std::string_view rest = sc.rest();
  int depth = 0;
  size_t split = std::string_view::npos;
  size_t end = std::string_view::npos;
  for (size_t i = 0; i < rest.size(); ++i) {
    char c = rest[i];
    if (c == '(') ++depth;
    if (c == ')') {
      if (depth == 0) {
        end = i;
        break;
      }
      --depth;
    }
    if (c == ',' && depth == 0 && split == std::string_view::npos) split = i;
  }
  if (split == std::string_view::npos || end == std::string_view::npos || split > end)
    throw precondition_error("pair descriptor must have the form (g, h): " +
                             std::string(text));
  PairDescriptor d;
  d.g = parse_algebra(rest.substr(0, split));
  d.h = parse_algebra(rest.substr(split + 1, end - split - 1));
  return d;
}

std::string normalize_descriptor(std::string_view pair_text) {
  PairDescriptor d = parse_pair(pair_text);
  return "(" + algebra_to_string(normalize(d.g)) + ", " + algebra_to_string(normalize(d.h)) +
         ")";
}

// ------------------------------------------------------------------ table --

namespace {

struct Constraint {
  LinExpr lhs;
  long rhs = 0;  // lhs >= rhs
};

Constraint parse_constraint(const std::string& text) {
  auto pos = text.find(">=");
  if (pos == std::string::npos)
    throw precondition_error("constraint must use >=: " + text);
  Scanner sc(std::string_view(text).substr(0, pos));
  Constraint c;
  c.lhs = parse_linexpr(sc);
  c.rhs = std::stol(text.substr(pos + 2));
  return c;
}

struct SubPattern {
  PatternSum g, h;
  std::vector<std::string> params;
  std::vector<Constraint> constraints;
  std::string display_g, display_h;
};

constexpr long kMaxParam = 64;

// Enumerates parameter assignments satisfying the constraints; calls fn(env)
// until it returns true. Supports 0, 1, or 2 parameters.
template <class Fn>
bool enumerate_params(const std::vector<std::string>& params,
                      const std::vector<Constraint>& constraints, const Fn& fn) {
  std::map<std::string, long> env;
  auto satisfies = [&]() {
    for (const auto& c : constraints)
      if (c.lhs.eval(env) < c.rhs) return false;
    return true;
  };
  if (params.empty()) return satisfies() && fn(env);
  if (params.size() == 1) {
    for (long v = 0; v <= kMaxParam; ++v) {
      env[params[0]] = v;
      if (satisfies() && fn(env)) return true;
    }
    return false;
  }
  if (params.size() == 2) {
    for (long v0 = 0; v0 <= kMaxParam; ++v0) {
      env[params[0]] = v0;
      for (long v1 = 0; v1 <= kMaxParam; ++v1) {
        env[params[1]] = v1;
        if (satisfies() && fn(env)) return true;
      }
    }
    return false;
  }
  throw precondition_error("patterns with more than two parameters are not supported");
}

// Instantiates a pattern sum and normalizes it; returns false when an
// argument driven by a parameter goes negative.
bool instantiate(const PatternSum& pat, const std::map<std::string, long>& env,
                 AlgebraSum& out) {
  AlgebraSum raw;
  for (const auto& atom : pat) raw.push_back(to_concrete(atom, env));
  // Reject negative instantiated signatures (literal negatives like f4(-20)
  // carry no parameters and are exempt).
  auto check = [&](auto&& self, const PatternAtom& p, const AlgebraAtom& a) -> bool {
    for (size_t i = 0; i < p.args.size(); ++i)
      if (!p.args[i].literal() && a.args[i] < 0) return false;
    for (size_t i = 0; i < p.inner.size(); ++i)
      if (!self(self, p.inner[i], a.inner[i])) return false;
    return true;
  };
  for (size_t i = 0; i < pat.size(); ++i)
    if (!check(check, pat[i], raw[i])) return false;
  out = normalize(raw);
  return true;
}

std::vector<std::string> sum_strings(const AlgebraSum& s) {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (const auto& a : s) out.push_back(atom_to_string(a));
  return out;
}

// Multiset inclusion + removal over sorted string vectors.
bool remove_subset(std::vector<std::string>& from, const std::vector<std::string>& sub) {
  std::vector<std::string> work = from;
  for (const auto& s : sub) {
    auto it = std::find(work.begin(), work.end(), s);
    if (it == work.end()) return false;
    work.erase(it);
  }
  from = std::move(work);
  return true;
}

}  // namespace

struct PairTable::Impl {
  struct FamilyDef {
    std::string tag, kind, note;
    std::string display_g, display_h;
    std::vector<std::string> params;
    std::vector<Constraint> constraints;
    std::vector<std::string> constraint_texts;
    PatternSum pg, ph;
    std::vector<SubPattern> riemann;
    bool finite = false, bounded = false;
  };

  struct ComplexRow {
    PatternAtom g;
    std::string text_g, text_k, text_gR;
    std::vector<std::string> params;
    std::vector<Constraint> constraints;
    std::vector<std::string> constraint_texts;
  };

  std::vector<FamilyDef> families;
  std::vector<ComplexRow> complex_rows;

  // Whole-pair match against one family.
  bool match_family(const FamilyDef& fam, const AlgebraSum& qg, const AlgebraSum& qh,
                    MatchedFamily& out) const {
    out.tag = fam.tag;
    out.params.clear();
    std::string sg = algebra_to_string(qg), sh = algebra_to_string(qh);
    if (fam.kind == "trivial")
      return !qg.empty() && sg == sh;
    if (fam.kind == "abelian")
      return qg.size() == 1 && qg[0].name == "R" && qh.empty();
    if (fam.kind == "compact")
      return qg.size() == 1 && compact_simple(qg[0]);
    if (fam.kind == "group_compact") {
      if (qg.size() != 2 || qh.size() != 1) return false;
      if (atom_to_string(qg[0]) != atom_to_string(qg[1])) return false;
      if (!compact_simple(qg[0])) return false;
      AlgebraAtom want = qg[0];
      want.diag = true;
      return atom_to_string(qh[0]) == atom_to_string(want);
    }
    if (fam.kind == "riemannian") {
      for (const auto& sub : fam.riemann) {
        bool found = enumerate_params(sub.params, sub.constraints,
                                      [&](const std::map<std::string, long>& env) {
                                        AlgebraSum ig, ih;
                                        if (!instantiate(sub.g, env, ig)) return false;
                                        if (!instantiate(sub.h, env, ih)) return false;
                                        if (algebra_to_string(ig) != sg) return false;
                                        if (algebra_to_string(ih) != sh) return false;
                                        out.params = env;
                                        return true;
                                      });
        if (found) return true;
      }
      return false;
    }
    // generic pattern family
    return enumerate_params(fam.params, fam.constraints,
                            [&](const std::map<std::string, long>& env) {
                              AlgebraSum ig, ih;
                              if (!instantiate(fam.pg, env, ig)) return false;
                              if (!instantiate(fam.ph, env, ih)) return false;
                              if (algebra_to_string(ig) != sg) return false;
                              if (algebra_to_string(ih) != sh) return false;
                              out.params = env;
                              return true;
                            });
  }

  // Direct-sum decomposition over explicit unit families. `gs`/`hs` hold
  // canonical strings of the remaining summands.
  bool decompose(std::vector<std::string> gs, std::vector<std::string> hs,
                 const std::vector<const FamilyDef*>& units,
                 std::vector<MatchedFamily>& out) const {
    if (gs.empty()) return hs.empty();
    std::string g0 = gs.front();

    for (const FamilyDef* fam : units) {
      if (fam->kind == "trivial") {
        auto it = std::find(hs.begin(), hs.end(), g0);
        if (it == hs.end()) continue;
        auto gs2 = gs;
        gs2.erase(gs2.begin());
        auto hs2 = hs;
        hs2.erase(std::find(hs2.begin(), hs2.end(), g0));
        std::vector<MatchedFamily> tail;
        if (decompose(std::move(gs2), std::move(hs2), units, tail)) {
          out.push_back({fam->tag, {}});
          out.insert(out.end(), tail.begin(), tail.end());
          return true;
        }
        continue;
      }
      if (fam->kind == "abelian") {
        if (g0 != "R") continue;
        auto gs2 = gs;
        gs2.erase(gs2.begin());
        std::vector<MatchedFamily> tail;
        if (decompose(std::move(gs2), hs, units, tail)) {
          out.push_back({fam->tag, {}});
          out.insert(out.end(), tail.begin(), tail.end());
          return true;
        }
        continue;
      }
      if (fam->kind != "pattern") continue;

      bool matched = enumerate_params(
          fam->params, fam->constraints, [&](const std::map<std::string, long>& env) {
            AlgebraSum ig, ih;
            if (!instantiate(fam->pg, env, ig)) return false;
            if (!instantiate(fam->ph, env, ih)) return false;
            auto igs = sum_strings(ig);
            auto ihs = sum_strings(ih);
            if (std::find(igs.begin(), igs.end(), g0) == igs.end()) return false;
            auto gs2 = gs;
            auto hs2 = hs;
            if (!remove_subset(gs2, igs) || !remove_subset(hs2, ihs)) return false;
            std::vector<MatchedFamily> tail;
            if (!decompose(std::move(gs2), std::move(hs2), units, tail)) return false;
            out.push_back({fam->tag, env});
            out.insert(out.end(), tail.begin(), tail.end());
            return true;
          });
      if (matched) return true;
    }
    return false;
  }

  std::vector<const FamilyDef*> units_for(bool bounded_only) const {
    std::vector<const FamilyDef*> out;
    for (const auto& f : families) {
      if (bounded_only && !f.bounded) continue;
      if (f.kind == "trivial" || f.kind == "abelian" || f.kind == "pattern")
        out.push_back(&f);
    }
    return out;
  }
};

namespace {

PatternSum parse_pattern_checked(const std::string& text) { return parse_pattern_text(text); }

}  // namespace

PairTable PairTable::load_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  auto impl = std::make_shared<Impl>();

  for (const auto& jf : j.at("families")) {
    Impl::FamilyDef fam;
    fam.tag = jf.at("tag").get<std::string>();
    fam.kind = jf.at("kind").get<std::string>();
    fam.display_g = jf.at("g").get<std::string>();
    fam.display_h = jf.at("h").get<std::string>();
    fam.finite = jf.at("finite").get<bool>();
    fam.bounded = jf.at("bounded").get<bool>();
    fam.note = jf.value("note", "");
    for (const auto& c : jf.at("constraints")) {
      fam.constraint_texts.push_back(c.get<std::string>());
      fam.constraints.push_back(parse_constraint(c.get<std::string>()));
    }
    if (jf.contains("params"))
      for (const auto& p : jf.at("params")) fam.params.push_back(p.get<std::string>());
    if (fam.kind == "pattern") {
      fam.pg = parse_pattern_checked(fam.display_g);
      fam.ph = parse_pattern_checked(fam.display_h);
    }
    if (fam.kind == "riemannian" && jf.contains("pairs")) {
      for (const auto& jp : jf.at("pairs")) {
        SubPattern sub;
        sub.display_g = jp.at("g").get<std::string>();
        sub.display_h = jp.at("h").get<std::string>();
        sub.g = parse_pattern_checked(sub.display_g);
        sub.h = parse_pattern_checked(sub.display_h);
        for (const auto& p : jp.at("params")) sub.params.push_back(p.get<std::string>());
        for (const auto& c : jp.at("constraints"))
          sub.constraints.push_back(parse_constraint(c.get<std::string>()));
        fam.riemann.push_back(std::move(sub));
      }
    }
    impl->families.push_back(std::move(fam));
  }

  for (const auto& jr : j.at("complex_forms")) {
    Impl::ComplexRow row;
    row.text_g = jr.at("g").get<std::string>();
    row.text_k = jr.at("k").get<std::string>();
    row.text_gR = jr.at("gR").get<std::string>();
    PatternSum pg = parse_pattern_checked(row.text_g);
    if (pg.size() != 1)
      throw precondition_error("complex form row g must be a single algebra");
    row.g = pg[0];
    for (const auto& p : jr.at("params")) row.params.push_back(p.get<std::string>());
    for (const auto& c : jr.at("constraints")) {
      row.constraint_texts.push_back(c.get<std::string>());
      row.constraints.push_back(parse_constraint(c.get<std::string>()));
    }
    impl->complex_rows.push_back(std::move(row));
  }

  PairTable table(impl);
  table.version_ = j.value("version", 0);
  if (j.contains("annotations"))
    for (const auto& a : j.at("annotations"))
      table.annotations_.push_back(a.get<std::string>());
  return table;
}

PairTable PairTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw precondition_error("cannot open pair table file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_json(ss.str());
}

PairTable PairTable::load_default() {
  if (const char* env = std::getenv("SBO_TABLE_PATH")) return load_file(env);
  return load_json(detail::embedded_pair_tables());
}

PairQueryResult PairTable::pp_query(const std::string& pair_text) const {
  PairDescriptor d = parse_pair(pair_text);
  AlgebraSum qg = normalize(d.g), qh = normalize(d.h);

  PairQueryResult result;
  result.normalized =
      "(" + algebra_to_string(qg) + ", " + algebra_to_string(qh) + ")";

  MatchedFamily m;
  for (const auto& fam : impl_->families) {
    if (impl_->match_family(fam, qg, qh, m)) {
      result.families.push_back(m);
      result.finite = true;
      break;
    }
  }
  if (result.families.empty()) {
    std::vector<MatchedFamily> parts;
    if (impl_->decompose(sum_strings(qg), sum_strings(qh), impl_->units_for(false), parts)) {
      result.families = std::move(parts);
      result.finite = true;
    }
  }
  result.bounded = bb_query(pair_text);
  return result;
}

bool PairTable::bb_query(const std::string& pair_text) const {
  PairDescriptor d = parse_pair(pair_text);
  AlgebraSum qg = normalize(d.g), qh = normalize(d.h);
  std::vector<MatchedFamily> parts;
  return impl_->decompose(sum_strings(qg), sum_strings(qh), impl_->units_for(true), parts);
}

std::optional<ComplexFormRecord> PairTable::complex_form_lookup(
    const std::string& g_text) const {
  AlgebraSum q = normalize(parse_algebra(g_text));
  if (q.size() != 1) return std::nullopt;
  std::string qs = atom_to_string(q[0]);

  for (const auto& row : impl_->complex_rows) {
    std::vector<std::map<std::string, long>> matches;
    enumerate_params(row.params, row.constraints, [&](const std::map<std::string, long>& env) {
      AlgebraSum ig;
      if (!instantiate({row.g}, env, ig)) return false;
      if (ig.size() == 1 && atom_to_string(ig[0]) == qs) matches.push_back(env);
      return false;  // keep enumerating: we need to know whether it is unique
    });
    if (matches.empty()) continue;

    ComplexFormRecord rec;
    if (matches.size() == 1) {
      const auto& env = matches.front();
      auto instantiate_text = [&](const std::string& text) {
        PatternSum ps = parse_pattern_text(text);
        std::string out;
        for (size_t i = 0; i < ps.size(); ++i) {
          if (i) out += '+';
          out += atom_to_string(to_concrete(ps[i], env));
        }
        return out;
      };
      rec.g = instantiate_text(row.text_g);
      rec.k = instantiate_text(row.text_k);
      rec.g_r = instantiate_text(row.text_gR);
    } else {
      // The split into parameters is not determined by g alone; return the
      // row in parametric form with the binding equation.
      rec.g = qs;
      rec.k = row.text_k;
      rec.g_r = row.text_gR;
      rec.constraints = row.constraint_texts;
      if (!row.g.args.empty() && !row.g.args[0].literal()) {
        long value = q[0].args.empty() ? 0 : q[0].args[0];
        rec.constraints.push_back(row.g.args[0].text + "=" + std::to_string(value));
      }
    }
    return rec;
  }
  return std::nullopt;
}

std::vector<PairRecord> PairTable::list_families(FamilyFilter filter) const {
  std::vector<PairRecord> out;
  for (const auto& fam : impl_->families) {
    if (filter == FamilyFilter::BB && !fam.bounded) continue;
    PairRecord rec;
    rec.tag = fam.tag;
    rec.pattern_g = fam.display_g;
    rec.pattern_h = fam.display_h;
    for (size_t i = 0; i < fam.constraint_texts.size(); ++i) {
      if (i) rec.constraints += ", ";
      rec.constraints += fam.constraint_texts[i];
    }
    rec.finite = fam.finite;
    rec.bounded = fam.bounded;
    rec.note = fam.note;
    out.push_back(std::move(rec));
  }
  std::sort(out.begin(), out.end(),
            [](const PairRecord& a, const PairRecord& b) { return a.tag < b.tag; });
  return out;
}

}  // namespace sbo
