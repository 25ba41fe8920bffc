#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cli.hpp"

namespace {

using padyn::cli::Request;

void add_family(CLI::App* sub, Request& req, bool require) {
  auto* p = sub->add_option("--p", req.p, "prime");
  auto* n = sub->add_option("--N", req.N, "exponent N >= 2");
  auto* a = sub->add_option("--a", req.a, "parameter a as num/den");
  if (require) {
    p->required();
    n->required();
    a->required();
  }
}

void add_common(CLI::App* sub, Request& req) {
  sub->add_option("--precision,--prec", req.precision, "relative p-adic precision");
  sub->add_option("--output", req.output, "json or text")->check(CLI::IsMember({"json", "text"}));
}

void emit(const padyn::cli::json& report, const std::string& output) {
  if (output == "text") {
    std::cout << padyn::cli::render_text(report);
  } else {
    std::cout << report.dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  Request req;
  req.precision = padyn::cli::default_precision();

  CLI::App app{"p-adic dynamics of the sigmoid Beverton-Holt family", "padyn"};
  app.set_version_flag("--version", std::string(padyn::cli::version()));
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "regime, conjugate polynomial and fixed points");
  add_family(analyze, req, true);
  add_common(analyze, req);

  auto* orbit = app.add_subcommand("orbit", "iterate f_N from a starting point");
  add_family(orbit, req, true);
  orbit->add_option("--x", req.x, "start point: num/den, v:<int> u:<digits>, or inf")->required();
  orbit->add_option("--iterations", req.iterations, "maximum iterations");
  add_common(orbit, req);

  auto* cycles = app.add_subcommand("cycles", "cycles of a polynomial mod p^n and their lifts");
  add_family(cycles, req, false);
  cycles->add_option("--poly", req.poly, "coefficients c0,c1,... (lowest degree first)");
  cycles->add_option("--map", req.map, "f, g or h when --poly is absent");
  cycles->add_option("--level", req.level, "level n");
  cycles->add_option("--domain", req.domain, "all | sphere:1 | class:c mod p^t");
  add_common(cycles, req);

  auto* decompose = app.add_subcommand("decompose", "minimal decomposition of a polynomial");
  add_family(decompose, req, false);
  decompose->add_option("--poly", req.poly, "coefficients c0,c1,... (lowest degree first)");
  decompose->add_option("--map", req.map, "f, g or h when --poly is absent");
  decompose->add_option("--domain", req.domain, "all | sphere:1 | class:c mod p^t");
  decompose->add_option("--depth,--n-max", req.n_max, "deepest level examined");
  decompose->add_option("--samples", req.samples, "basin samples");
  decompose->add_option("--seed", req.seed, "sampling seed");
  add_common(decompose, req);

  auto* repeller = app.add_subcommand("repeller", "symbolic coding of the repeller");
  add_family(repeller, req, true);
  repeller->add_option("--depth", req.depth, "coding depth");
  repeller->add_option("--samples", req.samples, "expansion samples");
  repeller->add_option("--seed", req.seed, "sampling seed");
  add_common(repeller, req);

  auto* verify = app.add_subcommand("verify", "check one theorem on a family member");
  add_family(verify, req, true);
  verify->add_option("--theorem", req.theorem, "sy1 sy2 sy3 sy4 dsy1 dsy2 dsy3")->required();
  verify->add_option("--depth", req.depth, "depth budget");
  verify->add_option("--iterations", req.iterations, "orbit iteration budget");
  verify->add_option("--samples", req.samples, "sample budget");
  verify->add_option("--seed", req.seed, "sampling seed");
  add_common(verify, req);

  auto* binomial = app.add_subcommand("binomial", "binomial valuation inequality sweep");
  binomial->add_option("--p", req.p, "prime")->required();
  binomial->add_option("--n-max", req.n_max, "largest N in the sweep");
  binomial->add_option("--N", req.N, "single N");
  binomial->add_option("--K", req.K, "single K");
  add_common(binomial, req);

  auto* hensel = app.add_subcommand("hensel", "lift an approximate root");
  hensel->add_option("--p", req.p, "prime")->required();
  hensel->add_option("--poly", req.poly, "coefficients c0,c1,... (lowest degree first)")->required();
  hensel->add_option("--seed,--x", req.x, "integer starting point x0")->required();
  hensel->add_option("--L", req.L, "derivative order");
  hensel->add_option("--s", req.s, "threshold s");
  add_common(hensel, req);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << padyn::cli::error_report(padyn::ErrorCode::ParseError, e.what()).dump(2) << "\n";
    return 2;
  }

  for (auto* sub : app.get_subcommands()) req.command = sub->get_name();

  try {
    const auto report = padyn::cli::run(req);
    emit(report, req.output);
    return padyn::cli::exit_code(report);
  } catch (const padyn::Error& e) {
    emit(padyn::cli::error_report(e.code(), e.what()), req.output);
    return padyn::cli::exit_code(e.code());
  } catch (const std::exception& e) {
    emit(padyn::cli::error_report(padyn::ErrorCode::InternalInconsistency, e.what()), req.output);
    return 3;
  }
}
