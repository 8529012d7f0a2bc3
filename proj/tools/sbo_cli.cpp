// Command-line front end. Talks to the library exclusively through the C API
// so it double-checks the shared-library surface; all output is JSON on
// stdout (or a flat text rendering with --format text).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "sbo/sbo_c.h"

namespace {

struct SessionDeleter {
  void operator()(sbo_session* s) const { sbo_session_free(s); }
};

std::string format_text(const nlohmann::ordered_json& j, int indent = 0) {
  std::string pad(indent, ' ');
  std::ostringstream out;
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || v.is_array()) {
        out << pad << k << ":\n" << format_text(v, indent + 2);
      } else {
        out << pad << k << ": " << v.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object() || v.is_array()) {
        out << pad << "-\n" << format_text(v, indent + 2);
      } else {
        out << pad << "- " << v.dump() << "\n";
      }
    }
  } else {
    out << pad << j.dump() << "\n";
  }
  return out.str();
}

int emit(sbo_session* session, sbo_status status, char* json, const std::string& format) {
  if (status == SBO_OK) {
    std::string text = json ? json : "{}";
    if (format == "text")
      std::cout << format_text(nlohmann::ordered_json::parse(text));
    else
      std::cout << text << "\n";
    sbo_string_free(json);
    return 0;
  }
  nlohmann::ordered_json err;
  err["error"] = sbo_last_error(session);
  err["hint"] = sbo_last_hint(session);
  std::cout << err.dump() << "\n";
  return status == SBO_ERR_PRECONDITION ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symmetry breaking operator toolkit"};
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));

  std::unique_ptr<sbo_session, SessionDeleter> session(sbo_session_new());
  if (!session) {
    std::cerr << "failed to initialize session\n";
    return 1;
  }

  std::function<std::pair<sbo_status, char*>()> run;

  // --- sl2 ---------------------------------------------------------------
  auto* sl2 = app.add_subcommand("sl2", "Rankin-Cohen operators for SL(2)");
  sl2->require_subcommand(1);

  std::string l1, l2, l3;
  unsigned a = 0, max_degree = 8, cg_m = 0, cg_n = 0;
  std::string basis = "generic";

  auto* sl2_dim = sl2->add_subcommand("dim", "dim H(l1, l2, l3)");
  sl2_dim->add_option("--l1", l1)->required();
  sl2_dim->add_option("--l2", l2)->required();
  sl2_dim->add_option("--l3", l3)->required();
  sl2_dim->callback([&] {
    run = [&] {
      char* out = nullptr;
      auto st = sbo_sl2_dim(session.get(), l1.c_str(), l2.c_str(), l3.c_str(), &out);
      return std::make_pair(st, out);
    };
  });

  auto* sl2_rc = sl2->add_subcommand("rc", "Rankin-Cohen operator coefficients");
  sl2_rc->add_option("--l1", l1)->required();
  sl2_rc->add_option("--l2", l2)->required();
  sl2_rc->add_option("--a", a)->required();
  sl2_rc->add_option("--basis", basis, "generic|singular|derivative")
      ->check(CLI::IsMember({"generic", "singular", "derivative"}));
  sl2_rc->callback([&] {
    run = [&] {
      char* out = nullptr;
      auto st =
          sbo_sl2_rc(session.get(), l1.c_str(), l2.c_str(), a, basis.c_str(), &out);
      return std::make_pair(st, out);
    };
  });

  auto* sl2_verify = sl2->add_subcommand("verify", "exact intertwining check");
  sl2_verify->add_option("--l1", l1)->required();
  sl2_verify->add_option("--l2", l2)->required();
  sl2_verify->add_option("--a", a)->required();
  sl2_verify->add_option("--max-degree", max_degree);
  sl2_verify->callback([&] {
    run = [&] {
      char* out = nullptr;
      auto st = sbo_sl2_verify(session.get(), l1.c_str(), l2.c_str(), a, max_degree, &out);
      return std::make_pair(st, out);
    };
  });

  auto* sl2_cg = sl2->add_subcommand("cg", "Clebsch-Gordan projectors");
  sl2_cg->add_option("--m", cg_m)->required();
  sl2_cg->add_option("--n", cg_n)->required();
  sl2_cg->callback([&] {
    run = [&] {
      char* out = nullptr;
      auto st = sbo_sl2_cg(session.get(), cg_m, cg_n, &out);
      return std::make_pair(st, out);
    };
  });

  // --- conf --------------------------------------------------------------
  auto* conf = app.add_subcommand("conf", "conformal symmetry breaking operators");
  conf->require_subcommand(1);

  std::string lambda, nu, config_path;
  unsigned dim_n = 2;

  auto* conf_dim = conf->add_subcommand("dim", "dim H(lambda, nu)");
  conf_dim->add_option("--lambda", lambda)->required();
  conf_dim->add_option("--nu", nu)->required();
  conf_dim->callback([&] {
    run = [&] {
      char* out = nullptr;
      auto st = sbo_conf_dim(session.get(), lambda.c_str(), nu.c_str(), &out);
      return std::make_pair(st, out);
    };
  });

  auto* conf_juhl = conf->add_subcommand("juhl", "Juhl differential operator");
  conf_juhl->add_option("--n", dim_n)->required();
  conf_juhl->add_option("--lambda", lambda)->required();
  conf_juhl->add_option("--nu", nu)->required();
  conf_juhl->callback([&] {
    run = [&] {
      char* out = nullptr;
      auto st = sbo_conf_juhl(session.get(), dim_n, lambda.c_str(), nu.c_str(), &out);
      return std::make_pair(st, out);
    };
  });

  auto* conf_verify = conf->add_subcommand("verify", "exact equivariance check");
  conf_verify->add_option("--n", dim_n)->required();
  conf_verify->add_option("--lambda", lambda)->required();
  conf_verify->add_option("--nu", nu)->required();
  conf_verify->add_option("--max-degree", max_degree);
  conf_verify->callback([&] {
    run = [&] {
      char* out = nullptr;
      auto st = sbo_conf_verify(session.get(), dim_n, lambda.c_str(), nu.c_str(),
                                max_degree, &out);
      return std::make_pair(st, out);
    };
  });

  auto* conf_kernel = conf->add_subcommand("kernel", "numeric integral operator");
  conf_kernel->add_option("--n", dim_n)->required();
  conf_kernel->add_option("--lambda", lambda)->required();
  conf_kernel->add_option("--nu", nu)->required();
  conf_kernel->add_option("--config", config_path, "JSON config file");
  conf_kernel->callback([&] {
    run = [&] {
      std::string config = "{}";
      if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) {
          // surfaced as a precondition failure through the C API
          config.clear();
        } else {
          std::stringstream ss;
          ss << in.rdbuf();
          config = ss.str();
        }
      }
      char* out = nullptr;
      auto st = sbo_conf_kernel(session.get(), dim_n, lambda.c_str(), nu.c_str(),
                                config.c_str(), &out);
      return std::make_pair(st, out);
    };
  });

  // --- pairs ---------------------------------------------------------------
  auto* pairs = app.add_subcommand("pairs", "classification tables");
  pairs->require_subcommand(1);

  std::string pair_desc, filter = "all", complex_g;

  auto* pairs_query = pairs->add_subcommand("query", "match a pair against families A-H");
  pairs_query->add_option("--pair", pair_desc)->required();
  pairs_query->callback([&] {
    run = [&] {
      char* out = nullptr;
      auto st = sbo_pairs_query(session.get(), pair_desc.c_str(), &out);
      return std::make_pair(st, out);
    };
  });

  auto* pairs_list = pairs->add_subcommand("list", "list families");
  pairs_list->add_option("--filter", filter, "pp|bb|all")
      ->check(CLI::IsMember({"pp", "bb", "all"}));
  pairs_list->callback([&] {
    run = [&] {
      char* out = nullptr;
      auto st = sbo_pairs_list(session.get(), filter.c_str(), &out);
      return std::make_pair(st, out);
    };
  });

  auto* pairs_complex = pairs->add_subcommand("complex-form", "complex pair table lookup");
  pairs_complex->add_option("--g", complex_g)->required();
  pairs_complex->callback([&] {
    run = [&] {
      char* out = nullptr;
      auto st = sbo_pairs_complex_form(session.get(), complex_g.c_str(), &out);
      return std::make_pair(st, out);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    nlohmann::ordered_json err;
    err["error"] = e.what();
    err["hint"] = "run with --help for the flag grammar";
    std::cout << err.dump() << "\n";
    return 2;
  }

  if (!run) {
    std::cout << R"({"error":"no subcommand","hint":"run with --help"})" << "\n";
    return 2;
  }
  auto [status, json] = run();
  return emit(session.get(), status, json, format);
}
