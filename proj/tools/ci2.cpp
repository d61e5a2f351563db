// ci2: command-line front end. Each subcommand prints one JSON document (or a
// text summary) and exits 0, or 2 on bad input, 3 on a failed mathematical
// precondition, 4 when a budget runs out.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ci2/harness.hpp"

namespace {

using namespace ci2;

AlgebraVariant parse_variant(const std::string& s) {
  if (s == "A") return AlgebraVariant::A;
  if (s == "B") return AlgebraVariant::B;
  throw std::invalid_argument("algebra must be A or B, got " + s);
}

void add_pair_options(CLI::App* cmd, PairInput& in) {
  cmd->add_option("--vars", in.vars, "comma-separated variable names")->capture_default_str();
  cmd->add_option("-f", in.f, "homogeneous polynomial f")->required();
  cmd->add_option("-g", in.g, "homogeneous polynomial g")->required();
  cmd->add_option("--order", in.order, "monomial order")
      ->check(CLI::IsMember({"degrevlex", "deglex"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert series, Betti tables and conjecture checks for A(f,g) and B(f,g)"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  PairInput pair;
  std::string algebra = "A";
  std::size_t max_degree = 12;
  bool compare = false;

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert-Poincare series of A(f,g) or B(f,g)");
  add_pair_options(hilbert, pair);
  hilbert->add_option("--algebra", algebra)->check(CLI::IsMember({"A", "B"}))->capture_default_str();
  hilbert->add_option("--max-degree", max_degree, "expansion length for infinite series")
      ->capture_default_str();

  auto* check = app.add_subcommand("check", "complete intersection, finiteness and radical report");
  add_pair_options(check, pair);

  std::string prop2;
  bool smooth = false, expand = false;
  unsigned n = 3, d = 0, e = 0;
  auto* formula = app.add_subcommand("formula", "closed-form Hilbert numerators");
  formula->add_option("--prop2", prop2, "A or B")->check(CLI::IsMember({"A", "B"}));
  formula->add_flag("--smooth", smooth, "Milnor algebra of a smooth hypersurface");
  formula->add_option("-n", n, "projective dimension (with --smooth)")->capture_default_str();
  formula->add_option("-d", d, "degree of f")->required();
  formula->add_option("-e", e, "degree of g (with --prop2)");
  formula->add_flag("--expand", expand, "expand the series");

  auto* betti = app.add_subcommand("betti", "minimal graded Betti numbers");
  add_pair_options(betti, pair);
  betti->add_option("--algebra", algebra)->check(CLI::IsMember({"A", "B"}))->capture_default_str();
  betti->add_flag("--compare-conjecture", compare, "compare with the conjectured table");

  SweepOptions sweep_opts;
  std::string csv;
  auto* sweep = app.add_subcommand("sweep", "random smooth complete intersections");
  sweep->add_option("--dmax", sweep_opts.dmax)->capture_default_str();
  sweep->add_option("--emax", sweep_opts.emax)->capture_default_str();
  sweep->add_option("--seeds", sweep_opts.seeds, "seeds per (d, e)")->capture_default_str();
  sweep->add_option("--seed-base", sweep_opts.seed_base)->capture_default_str();
  sweep->add_flag("--with-resolution", sweep_opts.with_resolution);
  sweep->add_option("--budget-secs", sweep_opts.budget_secs, "0 = unlimited")->capture_default_str();
  sweep->add_option("--threads", sweep_opts.threads, "0 = all cores")->capture_default_str();
  sweep->add_option("--coeff-bound", sweep_opts.random.coeff_bound)->capture_default_str();
  sweep->add_option("--resample-budget", sweep_opts.random.budget)->capture_default_str();
  sweep->add_option("--csv", csv, "write the finite HP tables as CSV");

  std::string which = "all";
  auto* examples = app.add_subcommand("examples", "reproduce the reference examples");
  examples->add_option("--which", which)
      ->check(CLI::IsMember({"ex1", "ex2-1", "ex2-2", "ex2-3", "ex2-4", "all"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::CallForAllHelp& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kExitParse;
  }

  CommandResult result;
  if (*hilbert) {
    result = run_command("hilbert", [&] { return cmd_hilbert(pair, parse_variant(algebra), max_degree); });
  } else if (*check) {
    result = run_command("check", [&] { return cmd_check(pair); });
  } else if (*formula) {
    result = run_command("formula", [&] {
      if (smooth == !prop2.empty()) throw std::invalid_argument("give exactly one of --prop2 and --smooth");
      if (smooth) return cmd_formula_smooth(n, d);
      if (e == 0) throw std::invalid_argument("--prop2 needs -e");
      return cmd_formula_prop2(parse_variant(prop2), d, e, expand);
    });
  } else if (*betti) {
    result = run_command("betti", [&] { return cmd_betti(pair, parse_variant(algebra), compare); });
  } else if (*sweep) {
    result = run_command("sweep", [&] { return cmd_sweep(sweep_opts, csv); });
  } else if (*examples) {
    result = run_command("examples", [&] { return cmd_examples(which); });
  }

  if (format == "json") {
    std::cout << result.report.dump(2) << "\n";
  } else {
    (result.exit_code == kExitOk ? std::cout : std::cerr) << result.text;
  }
  return result.exit_code;
}
