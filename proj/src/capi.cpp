#include "sbo/sbo_c.h"

#include <cstring>
#include <string>

#include "sbo/json_io.hpp"
#include "sbo/juhl.hpp"
#include "sbo/kernel.hpp"
#include "sbo/pair_tables.hpp"
#include "sbo/rankin_cohen.hpp"
#include "sbo/report.hpp"

struct sbo_session {
  sbo::PairTable table = sbo::PairTable::load_default();
  std::string last_error;
  std::string last_hint;
};

namespace {

using sbo::Json;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Fn>
sbo_status wrap(sbo_session* s, char** json_out, const char* hint, Fn&& fn) {
  if (!s) return SBO_ERR_PRECONDITION;
  s->last_error.clear();
  s->last_hint.clear();
  try {
    Json j = fn();
    if (json_out) *json_out = dup_string(j.dump());
    return SBO_OK;
  } catch (const sbo::precondition_error& e) {
    s->last_error = e.what();
    s->last_hint = hint ? hint : "";
    return SBO_ERR_PRECONDITION;
  } catch (const std::exception& e) {
    s->last_error = e.what();
    s->last_hint = "";
    return SBO_ERR_INTERNAL;
  }
}

sbo::Rational rat_arg(const char* text, const char* what) {
  if (!text) throw sbo::precondition_error(std::string("missing argument: ") + what);
  return sbo::rat_from_string(text);
}

Json report_json(const sbo::CheckReport& r) {
  Json j;
  j["ok"] = r.ok();
  j["checks"] = r.checks;
  j["violations"] = r.violations;
  return j;
}

double real_arg(const char* text, const char* what) {
  if (!text) throw sbo::precondition_error(std::string("missing argument: ") + what);
  if (auto r = sbo::try_rat_from_string(text))
    return static_cast<double>(numerator(*r)) / static_cast<double>(denominator(*r));
  try {
    size_t used = 0;
    double v = std::stod(text, &used);
    if (used != std::strlen(text)) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw sbo::precondition_error(std::string("cannot parse number: ") + what);
  }
}

}  // namespace

extern "C" {

sbo_session* sbo_session_new(void) {
  try {
    return new sbo_session;
  } catch (...) {
    return nullptr;
  }
}

void sbo_session_free(sbo_session* s) { delete s; }

sbo_status sbo_session_load_tables(sbo_session* s, const char* path) {
  return wrap(s, nullptr, "pass a readable JSON table file", [&]() -> Json {
    if (!path) throw sbo::precondition_error("missing table path");
    s->table = sbo::PairTable::load_file(path);
    return Json::object();
  });
}

const char* sbo_last_error(const sbo_session* s) { return s ? s->last_error.c_str() : ""; }
const char* sbo_last_hint(const sbo_session* s) { return s ? s->last_hint.c_str() : ""; }

void sbo_string_free(char* s) { std::free(s); }

sbo_status sbo_sl2_dim(sbo_session* s, const char* l1, const char* l2, const char* l3,
                       char** json_out) {
  return wrap(s, json_out, "pass --l1 --l2 --l3 as exact rationals", [&]() -> Json {
    auto a = rat_arg(l1, "l1"), b = rat_arg(l2, "l2"), c = rat_arg(l3, "l3");
    Json j;
    j["dim"] = sbo::sbo_dim_sl2(a, b, c);
    j["class"] = sbo::omega_class_name(sbo::omega_classify(a, b, c));
    return j;
  });
}

sbo_status sbo_sl2_rc(sbo_session* s, const char* l1, const char* l2, unsigned a,
                      const char* basis, char** json_out) {
  return wrap(s, json_out,
              "basis must be generic, singular, or derivative; singular bases exist only "
              "at omega-singular points",
              [&]() -> Json {
                auto r1 = rat_arg(l1, "l1"), r2 = rat_arg(l2, "l2");
                std::string mode = basis ? basis : "generic";
                if (mode == "generic")
                  return sbo::bidiffop_to_json(sbo::rc_operator(r1, r2, a));
                sbo::Rational r3 = r1 + r2 + sbo::Rational(2 * a);
                std::pair<sbo::BiDiffOp, sbo::BiDiffOp> ops =
                    mode == "singular"   ? sbo::singular_basis(r1, r2, r3)
                    : mode == "derivative" ? sbo::derivative_basis(r1, r2, r3)
                                           : throw sbo::precondition_error(
                                                 "unknown basis: " + mode);
                Json j;
                j["ops"] = Json::array({sbo::bidiffop_to_json(ops.first),
                                        sbo::bidiffop_to_json(ops.second)});
                return j;
              });
}

sbo_status sbo_sl2_verify(sbo_session* s, const char* l1, const char* l2, unsigned a,
                          unsigned max_degree, char** json_out) {
  return wrap(s, json_out, "pass rational --l1 --l2 and a small --max-degree",
              [&]() -> Json {
                auto r1 = rat_arg(l1, "l1"), r2 = rat_arg(l2, "l2");
                sbo::BiDiffOp op = sbo::rc_operator(r1, r2, a);
                sbo::Rational r3 = r1 + r2 + sbo::Rational(2 * a);
                return report_json(sbo::verify_intertwining(op, r1, r2, r3, max_degree));
              });
}

sbo_status sbo_sl2_cg(sbo_session* s, unsigned m, unsigned n, char** json_out) {
  return wrap(s, json_out, nullptr, [&]() -> Json {
    Json comps = Json::array();
    unsigned total = 0;
    for (const auto& c : sbo::cg_decompose(m, n)) {
      Json jc;
      jc["a"] = c.a;
      jc["target_dim"] = c.target_dim;
      jc["op"] = sbo::bidiffop_to_json(c.projector);
      comps.push_back(std::move(jc));
      total += c.target_dim;
    }
    Json j;
    j["m"] = m;
    j["n"] = n;
    j["components"] = std::move(comps);
    j["total_dim"] = total;
    return j;
  });
}

sbo_status sbo_sl2_rc_apply(sbo_session* s, const char* op_json, const char* f1_json,
                            const char* f2_json, char** json_out) {
  return wrap(s, json_out, "pass an operator JSON and two polynomial JSONs",
              [&]() -> Json {
                if (!op_json || !f1_json || !f2_json)
                  throw sbo::precondition_error("missing JSON argument");
                sbo::BiDiffOp op = sbo::bidiffop_from_json(Json::parse(op_json));
                sbo::SpacePoly f1 = sbo::space_poly_from_json(Json::parse(f1_json));
                sbo::SpacePoly f2 = sbo::space_poly_from_json(Json::parse(f2_json));
                return sbo::space_poly_to_json(sbo::rc_apply(op, f1, f2));
              });
}

sbo_status sbo_conf_dim(sbo_session* s, const char* lambda, const char* nu,
                        char** json_out) {
  return wrap(s, json_out, "pass --lambda --nu as exact rationals", [&]() -> Json {
    auto l = rat_arg(lambda, "lambda"), v = rat_arg(nu, "nu");
    Json j;
    j["dim"] = sbo::sbo_dim_conf(l, v);
    j["l_even"] = sbo::l_even_member(l, v);
    return j;
  });
}

sbo_status sbo_conf_juhl(sbo_session* s, unsigned n, const char* lambda, const char* nu,
                         char** json_out) {
  return wrap(s, json_out, "requires nu - lambda in {0, 2, 4, ...} and n >= 1",
              [&]() -> Json {
                auto l = rat_arg(lambda, "lambda"), v = rat_arg(nu, "nu");
                return sbo::juhlop_to_json(sbo::juhl_operator(n, l, v));
              });
}

sbo_status sbo_conf_verify(sbo_session* s, unsigned n, const char* lambda, const char* nu,
                           unsigned max_degree, char** json_out) {
  return wrap(s, json_out, "requires nu - lambda in {0, 2, 4, ...} and n >= 2",
              [&]() -> Json {
                auto l = rat_arg(lambda, "lambda"), v = rat_arg(nu, "nu");
                return report_json(sbo::verify_juhl_equivariance(n, l, v, max_degree));
              });
}

sbo_status sbo_conf_kernel(sbo_session* s, unsigned n, const char* lambda, const char* nu,
                           const char* config_json, char** json_out) {
  return wrap(s, json_out,
              "requires lambda > nu and lambda + nu > n - 1; see README for the config "
              "schema",
              [&]() -> Json {
                Json cfg_in = config_json && *config_json ? Json::parse(config_json)
                                                          : Json::object();
                sbo::KernelConfig cfg;
                cfg.n = n;
                cfg.lambda = real_arg(lambda, "lambda");
                cfg.nu = real_arg(nu, "nu");
                cfg.refine = cfg_in.value("refine", 2);
                cfg.split_radius = cfg_in.value("split_radius", 0.125);
                cfg.gl_points = cfg_in.value("gl_points", 6u);
                cfg.noncvg_threshold = cfg_in.value("noncvg_threshold", 1e-3);

                sbo::BumpFunction bump;
                bump.center.assign(n, 0.0);
                bump.radius = 1.0;
                if (cfg_in.contains("bump")) {
                  const Json& jb = cfg_in["bump"];
                  if (jb.contains("center"))
                    bump.center = jb["center"].get<std::vector<double>>();
                  bump.radius = jb.value("radius", 1.0);
                  bump.scale = jb.value("scale", 1.0);
                  if (jb.contains("modulation"))
                    for (const auto& t : jb["modulation"])
                      bump.modulation[t.at("exps").get<sbo::Exps>()] =
                          t.at("coeff").get<double>();
                }
                if (bump.center.size() != n)
                  throw sbo::precondition_error("bump center dimension != n");

                std::vector<double> y(n - 1, 0.0);
                if (cfg_in.contains("y")) y = cfg_in["y"].get<std::vector<double>>();
                if (y.size() + 1 != n)
                  throw sbo::precondition_error("y must lie in R^{n-1}");

                std::string task = cfg_in.value("task", "eval");
                if (task == "eval") {
                  sbo::QuadResult r = sbo::kernel_eval(cfg, bump, y);
                  Json j;
                  j["value"] = r.value;
                  j["error_estimate"] = r.error_estimate;
                  j["cells"] = r.cells;
                  return j;
                }
                if (task == "convergence") {
                  Json values = Json::array();
                  std::vector<double> vals;
                  long cells = 0;
                  for (int r = 0; r < 4; ++r) {
                    sbo::KernelConfig c2 = cfg;
                    c2.refine = cfg.refine + r;
                    c2.noncvg_threshold = 1e9;  // report, do not throw
                    sbo::QuadResult q = sbo::kernel_eval(c2, bump, y);
                    vals.push_back(q.value);
                    values.push_back(q.value);
                    cells = q.cells;
                  }
                  Json diffs = Json::array(), ratios = Json::array();
                  std::vector<double> d;
                  for (size_t i = 1; i < vals.size(); ++i) {
                    d.push_back(std::abs(vals[i] - vals[i - 1]));
                    diffs.push_back(d.back());
                  }
                  for (size_t i = 1; i < d.size(); ++i)
                    ratios.push_back(d[i - 1] > 0 ? d[i] / d[i - 1] : 0.0);
                  Json j;
                  j["values"] = std::move(values);
                  j["diffs"] = std::move(diffs);
                  j["ratios"] = std::move(ratios);
                  j["final_relative_change"] =
                      vals.back() != 0.0 ? d.back() / std::abs(vals.back()) : 0.0;
                  j["cells"] = cells;
                  return j;
                }
                if (task == "equivariance") {
                  double halfwidth = 0.75;
                  unsigned points = 13;
                  if (cfg_in.contains("grid")) {
                    halfwidth = cfg_in["grid"].value("halfwidth", 0.75);
                    points = cfg_in["grid"].value("points", 13u);
                  }
                  Json gens = Json::object();
                  double worst = 0.0;
                  for (const auto& g : sbo::subalgebra_basis(n)) {
                    sbo::EquivarianceResult r =
                        sbo::numeric_equivariance(cfg, g, bump, halfwidth, points);
                    gens[sbo::generator_name(g)] = r.residual;
                    worst = std::max(worst, r.residual);
                  }
                  Json j;
                  j["residuals"] = std::move(gens);
                  j["max_residual"] = worst;
                  return j;
                }
                throw sbo::precondition_error("unknown kernel task: " + task);
              });
}

sbo_status sbo_pairs_query(sbo_session* s, const char* pair_descriptor, char** json_out) {
  return wrap(s, json_out,
              "descriptors look like \"(sl(4,R), gl(3,R))\" or \"(o(4,1)+o(4,1), diag "
              "o(4,1))\"",
              [&]() -> Json {
                if (!pair_descriptor)
                  throw sbo::precondition_error("missing pair descriptor");
                sbo::PairQueryResult r = s->table.pp_query(pair_descriptor);
                Json j;
                j["pair"] = r.normalized;
                Json fams = Json::array();
                for (const auto& m : r.families) {
                  Json f;
                  f["tag"] = m.tag;
                  Json params = Json::object();
                  for (const auto& [k, v] : m.params) params[k] = v;
                  f["params"] = std::move(params);
                  fams.push_back(std::move(f));
                }
                j["families"] = std::move(fams);
                if (r.families.size() == 1)
                  j["family"] = r.families[0].tag;
                else
                  j["family"] = nullptr;
                j["finite_mult"] = r.finite;
                j["bounded_mult"] = r.bounded;
                if (r.families.empty())
                  j["note"] = "no match under implemented normalizations";
                return j;
              });
}

sbo_status sbo_pairs_list(sbo_session* s, const char* filter, char** json_out) {
  return wrap(s, json_out, "filter must be pp, bb, or all", [&]() -> Json {
    std::string f = filter ? filter : "all";
    sbo::FamilyFilter ff = f == "pp"   ? sbo::FamilyFilter::PP
                           : f == "bb" ? sbo::FamilyFilter::BB
                           : f == "all"
                               ? sbo::FamilyFilter::All
                               : throw sbo::precondition_error("unknown filter: " + f);
    Json fams = Json::array();
    for (const auto& rec : s->table.list_families(ff)) {
      Json r;
      r["tag"] = rec.tag;
      r["g"] = rec.pattern_g;
      r["h"] = rec.pattern_h;
      r["constraints"] = rec.constraints;
      r["finite_mult"] = rec.finite;
      r["bounded_mult"] = rec.bounded;
      if (!rec.note.empty()) r["note"] = rec.note;
      fams.push_back(std::move(r));
    }
    Json j;
    j["version"] = s->table.version();
    j["families"] = std::move(fams);
    j["annotations"] = s->table.annotations();
    return j;
  });
}

sbo_status sbo_pairs_complex_form(sbo_session* s, const char* g, char** json_out) {
  return wrap(s, json_out, "pass a complex simple algebra such as sl(4,C)", [&]() -> Json {
    if (!g) throw sbo::precondition_error("missing algebra descriptor");
    auto rec = s->table.complex_form_lookup(g);
    Json j;
    if (!rec) {
      j["found"] = false;
      return j;
    }
    j["found"] = true;
    j["g"] = rec->g;
    j["k"] = rec->k;
    j["gR"] = rec->g_r;
    if (!rec->constraints.empty()) j["constraints"] = rec->constraints;
    return j;
  });
}

}  // extern "C"
