// Experiment runner for the DAG-ledger consensus models: analytic tables,
// Monte-Carlo simulations, attack sweeps, figure data and file comparison.
//
// Exit codes: 0 ok, 2 spec/usage error, 3 parameter validation error,
// 4 comparison failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dagsim/errors.hpp"
#include "dagsim/experiment.hpp"

namespace {

using dagsim::LoadRegime;
using dagsim::experiments::ExperimentSpec;
using dagsim::experiments::Kind;
using dagsim::experiments::OutputFormat;

constexpr int kExitOk = 0;
constexpr int kExitSpecError = 2;
constexpr int kExitValidationError = 3;
constexpr int kExitCompareFailed = 4;

struct CommonFlags {
  double lambda_high = -1.0;
  double lambda_low = -1.0;
  double reveal_delay = -1.0;
  std::vector<std::string> regimes;
  std::vector<int> thresholds;
  std::vector<double> mus;
  std::vector<double> mu_ratios;
  long replications = -1;
  double horizon = -1.0;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string out;
  std::string format;
  std::string spec_file;
};

void attach_common(CLI::App* cmd, CommonFlags* flags) {
  cmd->add_option("--lambda-high", flags->lambda_high,
                  "high-load arrival rate (tx/s)");
  cmd->add_option("--lambda-low", flags->lambda_low,
                  "low-load arrival rate (tx/s)");
  cmd->add_option("--reveal-delay", flags->reveal_delay,
                  "reveal delay in seconds");
  cmd->add_option("--regime", flags->regimes, "hr, lr, h2lr or l2hr")
      ->delimiter(',');
  cmd->add_option("--threshold,--m,-m", flags->thresholds,
                  "confirmation thresholds")
      ->delimiter(',');
  cmd->add_option("--mu", flags->mus, "attacker rates")->delimiter(',');
  cmd->add_option("--mu-ratio", flags->mu_ratios,
                  "attacker rates as fractions of the honest rate")
      ->delimiter(',');
  cmd->add_option("--replications", flags->replications,
                  "Monte-Carlo replications (0 disables simulation columns)");
  cmd->add_option("--horizon", flags->horizon, "simulation horizon (s)");
  cmd->add_option_function<std::uint64_t>(
         "--seed",
         [flags](std::uint64_t v) {
           flags->seed = v;
           flags->seed_set = true;
         },
         "master seed");
  cmd->add_option("--out", flags->out, "output file path");
  cmd->add_option("--format", flags->format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--spec", flags->spec_file,
                  "JSON experiment spec (flags override file values)");
}

ExperimentSpec merge_spec(const CommonFlags& flags, Kind kind) {
  ExperimentSpec spec;
  if (!flags.spec_file.empty()) {
    std::ifstream in(flags.spec_file);
    if (!in) {
      throw dagsim::SpecParseError("cannot open spec file: " +
                                   flags.spec_file);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    spec = dagsim::experiments::spec_from_json(buf.str());
  }
  spec.kind = kind;
  if (flags.lambda_high > 0.0) spec.params.lambda_high = flags.lambda_high;
  if (flags.lambda_low > 0.0) spec.params.lambda_low = flags.lambda_low;
  if (flags.reveal_delay > 0.0) spec.params.reveal_delay = flags.reveal_delay;
  for (const std::string& r : flags.regimes) {
    const auto parsed = dagsim::parse_regime(r);
    if (!parsed) throw dagsim::SpecParseError("unknown regime: " + r);
    spec.regimes.push_back(*parsed);
  }
  if (!flags.thresholds.empty()) spec.thresholds = flags.thresholds;
  if (!flags.mus.empty()) spec.mus = flags.mus;
  if (!flags.mu_ratios.empty()) spec.mu_ratios = flags.mu_ratios;
  if (flags.replications >= 0) spec.replications = flags.replications;
  if (flags.horizon > 0.0) spec.horizon = flags.horizon;
  if (flags.seed_set) spec.seed = flags.seed;
  if (!flags.out.empty()) spec.out_path = flags.out;
  if (flags.format == "json") spec.format = OutputFormat::json;
  if (flags.format == "csv") spec.format = OutputFormat::csv;
  return spec;
}

int run_spec(const ExperimentSpec& spec) {
  const auto result = dagsim::experiments::run(spec);
  std::cout << result.summary << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DAG-ledger consensus performance and security toolkit"};
  app.require_subcommand(1);

  CommonFlags sim_flags;
  std::string sim_kind = "weight";
  auto* sim_cmd =
      app.add_subcommand("simulate", "Monte-Carlo DAG simulation tables");
  sim_cmd->add_option("--kind", sim_kind, "weight, tips or delay")
      ->check(CLI::IsMember({"weight", "tips", "delay"}));
  attach_common(sim_cmd, &sim_flags);

  CommonFlags analytic_flags;
  std::string analytic_kind = "weight";
  auto* analytic_cmd =
      app.add_subcommand("analytic", "closed-form tables (no simulation)");
  analytic_cmd->add_option("--kind", analytic_kind, "weight or delay")
      ->check(CLI::IsMember({"weight", "delay"}));
  attach_common(analytic_cmd, &analytic_flags);

  CommonFlags attack_flags;
  auto* attack_cmd = app.add_subcommand(
      "attack", "double-spend success probability sweeps");
  attack_cmd->alias("attack-sweep");
  attach_common(attack_cmd, &attack_flags);

  CommonFlags figure_flags;
  std::string figure_name;
  auto* figure_cmd =
      app.add_subcommand("figure", "reference figure data tables");
  figure_cmd
      ->add_option("name", figure_name, "fig8 .. fig15")
      ->required()
      ->check(CLI::IsMember({"fig8", "fig9", "fig10", "fig11", "fig12",
                             "fig13", "fig14", "fig15"}));
  attach_common(figure_cmd, &figure_flags);

  std::string compare_a;
  std::string compare_b;
  double tolerance = 0.05;
  bool verbose_compare = false;
  auto* compare_cmd = app.add_subcommand(
      "compare", "match two result files row by row at a tolerance");
  compare_cmd->add_option("analytic_file", compare_a)->required();
  compare_cmd->add_option("simulation_file", compare_b)->required();
  compare_cmd->add_option("--tolerance", tolerance,
                          "maximum allowed relative error");
  compare_cmd->add_flag("--rows", verbose_compare, "print every row");

  try {
    app.parse(argc, argv);

    if (sim_cmd->parsed()) {
      Kind kind = Kind::weight_curve;
      if (sim_kind == "tips") kind = Kind::tip_series;
      if (sim_kind == "delay") kind = Kind::confirmation_delay;
      return run_spec(merge_spec(sim_flags, kind));
    }
    if (analytic_cmd->parsed()) {
      ExperimentSpec spec = merge_spec(
          analytic_flags, analytic_kind == "delay" ? Kind::confirmation_delay
                                                   : Kind::weight_curve);
      spec.replications = 0;  // analytic rows carry no stochastic fields
      return run_spec(spec);
    }
    if (attack_cmd->parsed()) {
      return run_spec(merge_spec(attack_flags, Kind::attack_sweep));
    }
    if (figure_cmd->parsed()) {
      ExperimentSpec spec = merge_spec(figure_flags, Kind::figure);
      spec.figure = figure_name;
      return run_spec(spec);
    }
    if (compare_cmd->parsed()) {
      const auto report =
          dagsim::experiments::compare_files(compare_a, compare_b, tolerance);
      if (verbose_compare) {
        for (const auto& line : report.lines) std::cout << line << "\n";
      }
      std::cout << "compared " << report.compared << " rows, max rel error "
                << report.max_rel_error;
      if (!report.worst_key.empty()) {
        std::cout << " at " << report.worst_key;
      }
      std::cout << (report.pass ? " : PASS" : " : FAIL") << "\n";
      return report.pass ? kExitOk : kExitCompareFailed;
    }
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitSpecError;
  } catch (const dagsim::SpecParseError& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return kExitSpecError;
  } catch (const dagsim::SchemaMismatch& e) {
    std::cerr << "schema mismatch: " << e.what() << "\n";
    return kExitSpecError;
  } catch (const dagsim::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidationError;
  }
  return kExitSpecError;
}
