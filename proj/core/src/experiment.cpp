#include "dagsim/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dagsim/attack.hpp"
#include "dagsim/confirmation_delay.hpp"
#include "dagsim/h2lr_chain.hpp"
#include "dagsim/parallel.hpp"
#include "dagsim/race.hpp"
#include "dagsim/rng.hpp"
#include "dagsim/simulator.hpp"
#include "dagsim/weight_curves.hpp"

namespace dagsim::experiments {

namespace {

const std::vector<std::string> kWeightColumns = {
    "regime", "t", "expected_weight", "sim_mean", "sim_se", "replications",
    "seed"};
const std::vector<std::string> kTipColumns = {
    "regime", "t", "tips_mean", "tips_se", "replications", "seed"};
const std::vector<std::string> kDelayColumns = {
    "regime", "m", "lambda", "delay_analytic", "delay_sim_mean",
    "delay_sim_se"};
const std::vector<std::string> kAttackColumns = {
    "regime", "m",  "lambda",       "mu",      "p",
    "q",      "prob_formula", "prob_mc", "mc_se",
    "method"};
const std::vector<std::string> kRawAttackColumns = {
    "alpha", "beta", "p", "q", "prob_formula", "prob_mc", "mc_se", "method"};

constexpr int kRaceCutoff = 200;

std::vector<LoadRegime> all_regimes() {
  return {LoadRegime::high, LoadRegime::low, LoadRegime::high_to_low,
          LoadRegime::low_to_high};
}

double regime_rate(const NetworkParams& p, LoadRegime r) {
  return (r == LoadRegime::high || r == LoadRegime::low_to_high)
             ? p.lambda_high
             : p.lambda_low;
}

double analytic_weight(double t, LoadRegime regime, const NetworkParams& p) {
  switch (regime) {
    case LoadRegime::high: return analytic::expected_weight_hr(t, p);
    case LoadRegime::low: return analytic::expected_weight_lr(t, p.lambda_low);
    case LoadRegime::high_to_low: return analytic::expected_weight_h2lr(t, p);
    case LoadRegime::low_to_high:
      return analytic::expected_weight_l2hr(t, p.lambda_high);
  }
  return 0.0;
}

std::vector<double> linear_grid(double lo, double hi, double step) {
  std::vector<double> out;
  for (double v = lo; v <= hi + 1e-9; v += step) out.push_back(v);
  return out;
}

std::vector<double> log_grid(double lo, double hi, int points) {
  std::vector<double> out;
  const double llo = std::log(lo);
  const double lhi = std::log(hi);
  for (int i = 0; i < points; ++i) {
    const double f = static_cast<double>(i) / (points - 1);
    out.push_back(std::exp(llo + f * (lhi - llo)));
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

// Hands out disjoint stream-index blocks so every replication of every row
// group draws from its own stream, independent of evaluation order.
struct StreamAllocator {
  std::uint64_t master;
  std::uint64_t next = 1;

  std::uint64_t reserve(std::uint64_t count) {
    const std::uint64_t base = next;
    next += count;
    return base;
  }
};

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;
};

MeanSe summarize(const std::vector<double>& values) {
  MeanSe out;
  const double n = static_cast<double>(values.size());
  if (values.empty()) return out;
  double sum = 0.0;
  for (double v : values) sum += v;
  out.mean = sum / n;
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - out.mean) * (v - out.mean);
    out.se = std::sqrt(ss / (n - 1.0) / n);
  }
  return out;
}

long resolve_replications(const ExperimentSpec& spec, long kind_default) {
  return spec.replications >= 0 ? spec.replications : kind_default;
}

std::vector<double> resolve_mus(const ExperimentSpec& spec, double lambda) {
  std::vector<double> mus = spec.mus;
  for (double r : spec.mu_ratios) mus.push_back(r * lambda);
  if (mus.empty()) {
    for (double r : linear_grid(0.05, 1.2, 0.05)) mus.push_back(r * lambda);
  }
  return mus;
}

Table build_weight_table(const ExperimentSpec& spec) {
  Table table(kWeightColumns);
  const auto regimes = spec.regimes.empty() ? all_regimes() : spec.regimes;
  std::vector<double> times = spec.sample_times;
  if (times.empty()) times = linear_grid(1.0, 100.0, 1.0);
  const long reps = resolve_replications(spec, 500);
  const double horizon =
      spec.horizon > 0.0 ? spec.horizon
                         : *std::max_element(times.begin(), times.end());
  StreamAllocator streams{spec.seed};

  for (LoadRegime regime : regimes) {
    const NetworkParams p = validate(spec.params, regime);
    std::vector<std::vector<double>> sim_at(times.size());
    if (reps > 0) {
      for (auto& v : sim_at) v.resize(static_cast<std::size_t>(reps));
      const std::uint64_t base = streams.reserve(static_cast<std::uint64_t>(reps));
      parallel_for_index(static_cast<std::size_t>(reps), [&](std::size_t rep) {
        SeededStream rng = derive_stream(spec.seed, base + rep);
        const auto trace = sim::run_weight_experiment(
            p, regime, ConfirmationThreshold{2}, horizon, rng);
        for (std::size_t i = 0; i < times.size(); ++i) {
          sim_at[i][rep] = sim::weight_at(trace, times[i]);
        }
      });
    }
    for (std::size_t i = 0; i < times.size(); ++i) {
      std::vector<Cell> row;
      row.emplace_back(to_string(regime));
      row.emplace_back(times[i]);
      row.emplace_back(analytic_weight(times[i], regime, p));
      if (reps > 0) {
        const MeanSe ms = summarize(sim_at[i]);
        row.emplace_back(ms.mean);
        row.emplace_back(ms.se);
        row.emplace_back(static_cast<long long>(reps));
        row.emplace_back(static_cast<long long>(spec.seed));
      } else {
        row.emplace_back(std::monostate{});
        row.emplace_back(std::monostate{});
        row.emplace_back(std::monostate{});
        row.emplace_back(std::monostate{});
      }
      table.add_row(std::move(row));
    }
  }
  return table;
}

Table build_tip_table(const ExperimentSpec& spec) {
  Table table(kTipColumns);
  const auto regimes = spec.regimes.empty() ? all_regimes() : spec.regimes;
  const long reps = resolve_replications(spec, 20);
  const double horizon = spec.horizon > 0.0 ? spec.horizon : 300.0;
  StreamAllocator streams{spec.seed};

  for (LoadRegime regime : regimes) {
    const NetworkParams p = validate(spec.params, regime);
    std::vector<double> times = spec.sample_times;
    if (times.empty()) times = linear_grid(0.0, horizon, p.reveal_delay / 2.0);

    std::vector<std::vector<double>> tips_at(times.size());
    for (auto& v : tips_at) v.resize(static_cast<std::size_t>(reps));
    const std::uint64_t base = streams.reserve(static_cast<std::uint64_t>(reps));
    parallel_for_index(static_cast<std::size_t>(reps), [&](std::size_t rep) {
      SeededStream rng = derive_stream(spec.seed, base + rep);
      const auto series = sim::tip_count_series(p, regime, horizon, rng);
      std::size_t e = 0;
      double current = 1.0;
      for (std::size_t i = 0; i < times.size(); ++i) {
        while (e < series.size() && series[e].t <= times[i]) {
          current = series[e].tips;
          ++e;
        }
        tips_at[i][rep] = current;
      }
    });
    for (std::size_t i = 0; i < times.size(); ++i) {
      const MeanSe ms = summarize(tips_at[i]);
      table.add_row({to_string(regime), times[i], ms.mean, ms.se,
                     static_cast<long long>(reps),
                     static_cast<long long>(spec.seed)});
    }
  }
  return table;
}

void add_delay_row(Table& table, LoadRegime regime, int m,
                   const NetworkParams& p, long reps, std::uint64_t seed,
                   StreamAllocator* streams, double horizon) {
  const double analytic_value = analytic::confirmation_delay(m, regime, p);
  std::vector<Cell> row;
  row.emplace_back(to_string(regime));
  row.emplace_back(static_cast<long long>(m));
  row.emplace_back(regime_rate(p, regime));
  row.emplace_back(analytic_value);
  if (reps > 0) {
    const std::uint64_t base =
        streams->reserve(static_cast<std::uint64_t>(reps));
    const auto est = sim::estimate_confirmation_delay(
        p, regime, ConfirmationThreshold{m}, reps,
        derive_stream(seed, base), horizon);
    row.emplace_back(est.mean);
    row.emplace_back(est.standard_error);
  } else {
    row.emplace_back(std::monostate{});
    row.emplace_back(std::monostate{});
  }
  table.add_row(std::move(row));
}

Table build_delay_table(const ExperimentSpec& spec) {
  Table table(kDelayColumns);
  const auto regimes = spec.regimes.empty() ? all_regimes() : spec.regimes;
  const auto ms = spec.thresholds.empty() ? std::vector<int>{50, 100, 200}
                                          : spec.thresholds;
  const long reps = resolve_replications(spec, 1000);
  StreamAllocator streams{spec.seed};
  for (LoadRegime regime : regimes) {
    const NetworkParams p = validate(spec.params, regime);
    for (int m : ms) {
      add_delay_row(table, regime, m, p, reps, spec.seed, &streams,
                    spec.horizon);
    }
  }
  return table;
}

void add_attack_row(Table& table, LoadRegime regime, int m,
                    const NetworkParams& p, double mu, long reps,
                    std::uint64_t seed, StreamAllocator* streams) {
  const double lambda = regime_rate(p, regime);
  const attack::RaceOdds odds = attack::race_probabilities(lambda, mu);
  const double formula = attack::attack_success_regime(m, regime, p, mu);

  std::vector<Cell> row;
  row.emplace_back(to_string(regime));
  row.emplace_back(static_cast<long long>(m));
  row.emplace_back(lambda);
  row.emplace_back(mu);
  row.emplace_back(odds.p);
  row.emplace_back(odds.q);
  row.emplace_back(formula);
  if (reps > 0) {
    const std::uint64_t base =
        streams->reserve(static_cast<std::uint64_t>(reps));
    attack::RaceEstimate est;
    const int cutoff = std::max(kRaceCutoff, m + 2);
    if (regime == LoadRegime::high_to_low) {
      est = attack::monte_carlo_race_h2lr(m, p, mu, reps, cutoff,
                                          derive_stream(seed, base));
    } else {
      attack::AttackScenario sc;
      sc.lambda = lambda;
      sc.mu = mu;
      if (regime == LoadRegime::high) {
        const auto adapt =
            analytic::adaptation_period(p.tip_count_high, p.reveal_delay);
        sc.alpha = static_cast<int>(
            std::max<long>(m - std::llround(adapt.weight_at_end) + 1, 0));
        sc.beta = 0;
      } else {
        sc.alpha = m - 1;
        sc.beta = 1;
      }
      est = attack::monte_carlo_race(
          sc, reps, std::max(cutoff, sc.alpha + sc.beta + 2),
          derive_stream(seed, base));
    }
    row.emplace_back(est.probability);
    row.emplace_back(est.standard_error);
    row.emplace_back(std::string("monte_carlo"));
  } else {
    row.emplace_back(std::monostate{});
    row.emplace_back(std::monostate{});
    row.emplace_back(std::string("analytic"));
  }
  table.add_row(std::move(row));
}

Table build_attack_table(const ExperimentSpec& spec) {
  Table table(kAttackColumns);
  const auto regimes = spec.regimes.empty() ? all_regimes() : spec.regimes;
  const auto ms = spec.thresholds.empty() ? std::vector<int>{50, 100, 150}
                                          : spec.thresholds;
  const long reps = resolve_replications(spec, 0);
  StreamAllocator streams{spec.seed};
  for (LoadRegime regime : regimes) {
    const NetworkParams p = validate(spec.params, regime);
    const auto mus = resolve_mus(spec, regime_rate(p, regime));
    for (int m : ms) {
      for (double mu : mus) {
        add_attack_row(table, regime, m, p, mu, reps, spec.seed, &streams);
      }
    }
  }
  return table;
}

Table build_raw_attack_table(const ExperimentSpec& spec,
                             const std::vector<int>& alphas,
                             const std::vector<int>& betas,
                             const std::vector<double>& ps) {
  Table table(kRawAttackColumns);
  const long reps = resolve_replications(spec, 0);
  StreamAllocator streams{spec.seed};
  for (double p : ps) {
    for (int alpha : alphas) {
      for (int beta : betas) {
        const double q = 1.0 - p;
        const double formula = attack::attack_success_with_gap(alpha, beta, p, q);
        std::vector<Cell> row;
        row.emplace_back(static_cast<long long>(alpha));
        row.emplace_back(static_cast<long long>(beta));
        row.emplace_back(p);
        row.emplace_back(q);
        row.emplace_back(formula);
        if (reps > 0) {
          const std::uint64_t base =
              streams.reserve(static_cast<std::uint64_t>(reps));
          attack::AttackScenario sc;
          sc.lambda = p;  // only the ratio matters for the race
          sc.mu = q;
          sc.alpha = alpha;
          sc.beta = beta;
          const auto est = attack::monte_carlo_race(
              sc, reps, std::max(kRaceCutoff, alpha + beta + 2),
              derive_stream(spec.seed, base));
          row.emplace_back(est.probability);
          row.emplace_back(est.standard_error);
          row.emplace_back(std::string("monte_carlo"));
        } else {
          row.emplace_back(std::monostate{});
          row.emplace_back(std::monostate{});
          row.emplace_back(std::string("analytic"));
        }
        table.add_row(std::move(row));
      }
    }
  }
  return table;
}

std::vector<int> int_range(int lo, int hi) {
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

Table build_figure(const ExperimentSpec& spec) {
  const std::string& fig = spec.figure;
  ExperimentSpec local = spec;
  const std::vector<double> default_ps = {0.55, 0.6, 0.7, 0.8, 0.9};

  if (fig == "fig8") {
    // Success probability against the attachment gap, one honest head start.
    const auto alphas = local.alphas.empty() ? std::vector<int>{1} : local.alphas;
    const auto betas = local.betas.empty() ? int_range(0, 15) : local.betas;
    const auto ps = local.ps.empty() ? default_ps : local.ps;
    return build_raw_attack_table(local, alphas, betas, ps);
  }
  if (fig == "fig9") {
    // Success probability against the honest head start, gap fixed at one.
    const auto alphas = local.alphas.empty() ? int_range(0, 15) : local.alphas;
    const auto betas = local.betas.empty() ? std::vector<int>{1} : local.betas;
    const auto ps = local.ps.empty() ? default_ps : local.ps;
    return build_raw_attack_table(local, alphas, betas, ps);
  }
  if (fig == "fig10") {
    // How the parasite-chain start time shifts the honest head start: with
    // m0 honest transactions between the payment and its confirmation, a
    // chain built `offset` transactions earlier races m0 + offset of them,
    // one built later races m0 - offset.
    Table table({"ordering", "offset", "m0", "alpha"});
    const int m0 = local.thresholds.empty() ? 10 : local.thresholds.front();
    for (int offset = 0; offset <= 10; ++offset) {
      table.add_row({std::string("chain_before_payment"),
                     static_cast<long long>(offset),
                     static_cast<long long>(m0),
                     static_cast<long long>(m0 + offset)});
    }
    for (int offset = 0; offset <= 10; ++offset) {
      table.add_row({std::string("payment_before_chain"),
                     static_cast<long long>(offset),
                     static_cast<long long>(m0),
                     static_cast<long long>(std::max(m0 - offset, 0))});
    }
    return table;
  }
  if (fig == "fig11") {
    // Distribution-based vs expected-value attack formulas as the threshold
    // moves away from the mean two-tip weight.
    const NetworkParams p = validate(local.params);
    const double mu = local.mus.empty() ? 0.25 : local.mus.front();
    const int tips = p.tip_count_high_int();
    const double w0 =
        analytic::h2lr_distribution(tips - 2, tips).expected_weight();
    const int w0r = static_cast<int>(std::llround(w0));
    Table table({"m", "w0", "prob_distribution", "prob_expected", "abs_diff"});
    for (int offset : {-5, 0, 5, 10, 20, 30, 50, 75, 100, 150, 200, 250, 300}) {
      const int m = std::max(w0r + offset, 2);
      const double dist = attack::attack_success_regime(
          m, LoadRegime::high_to_low, p, mu);
      const double expect = attack::attack_success_h2lr_expected(m, p, mu);
      table.add_row({static_cast<long long>(m), w0, dist, expect,
                     std::abs(dist - expect)});
    }
    return table;
  }
  if (fig == "fig12") {
    local.kind = Kind::weight_curve;
    if (local.replications < 0) local.replications = 500;
    return build_weight_table(local);
  }
  if (fig == "fig13") {
    // Confirmation delay against the arrival rate; analytic curves only.
    Table table(kDelayColumns);
    const auto ms = local.thresholds.empty() ? std::vector<int>{50, 100, 200}
                                             : local.thresholds;
    const auto low_grid = log_grid(0.05, 1.0, 40);
    const auto high_grid = log_grid(1.0, 100.0, 40);
    for (LoadRegime regime : all_regimes()) {
      const bool high_side =
          regime == LoadRegime::high || regime == LoadRegime::low_to_high;
      for (int m : ms) {
        for (double lambda : high_side ? high_grid : low_grid) {
          NetworkParams p = local.params;
          if (high_side) {
            p.lambda_high = lambda;
          } else {
            p.lambda_low = lambda;
          }
          p = validate(p, regime);
          table.add_row({to_string(regime), static_cast<long long>(m), lambda,
                         analytic::confirmation_delay(m, regime, p),
                         std::monostate{}, std::monostate{}});
        }
      }
    }
    return table;
  }
  if (fig == "fig14" || fig == "fig15") {
    local.kind = Kind::attack_sweep;
    if (local.regimes.empty()) {
      local.regimes = fig == "fig14"
                          ? std::vector<LoadRegime>{LoadRegime::high,
                                                    LoadRegime::low_to_high}
                          : std::vector<LoadRegime>{LoadRegime::low,
                                                    LoadRegime::high_to_low};
    }
    if (local.thresholds.empty()) local.thresholds = {50, 100, 150};
    return build_attack_table(local);
  }
  throw SpecParseError("unknown figure: " + fig);
}

}  // namespace

Table build_table(const ExperimentSpec& spec) {
  switch (spec.kind) {
    case Kind::weight_curve: return build_weight_table(spec);
    case Kind::tip_series: return build_tip_table(spec);
    case Kind::confirmation_delay: return build_delay_table(spec);
    case Kind::attack_sweep: return build_attack_table(spec);
    case Kind::figure: return build_figure(spec);
  }
  throw SpecParseError("unknown experiment kind");
}

namespace {

std::string kind_name(Kind kind) {
  switch (kind) {
    case Kind::weight_curve: return "weight_curve";
    case Kind::tip_series: return "tip_series";
    case Kind::confirmation_delay: return "confirmation_delay";
    case Kind::attack_sweep: return "attack_sweep";
    case Kind::figure: return "figure";
  }
  return "?";
}

nlohmann::json spec_to_json(const ExperimentSpec& spec) {
  nlohmann::json j;
  j["kind"] = kind_name(spec.kind);
  if (!spec.figure.empty()) j["figure"] = spec.figure;
  j["lambda_high"] = spec.params.lambda_high;
  j["lambda_low"] = spec.params.lambda_low;
  j["reveal_delay"] = spec.params.reveal_delay;
  nlohmann::json regimes = nlohmann::json::array();
  for (auto r : spec.regimes) regimes.push_back(to_string(r));
  j["regimes"] = regimes;
  j["m"] = spec.thresholds;
  j["mu"] = spec.mus;
  j["mu_ratios"] = spec.mu_ratios;
  j["times"] = spec.sample_times;
  j["alpha"] = spec.alphas;
  j["beta"] = spec.betas;
  j["p"] = spec.ps;
  j["replications"] = spec.replications;
  j["horizon"] = spec.horizon;
  j["seed"] = spec.seed;
  j["format"] = spec.format == OutputFormat::csv ? "csv" : "json";
  if (!spec.out_path.empty()) j["out"] = spec.out_path;
  return j;
}

}  // namespace

ExperimentSpec spec_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SpecParseError(std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object()) throw SpecParseError("spec must be a JSON object");

  static const std::vector<std::string> known = {
      "kind", "figure", "lambda_high", "lambda_low", "reveal_delay",
      "regimes", "m", "mu", "mu_ratios", "times", "alpha", "beta", "p",
      "replications", "horizon", "seed", "format", "out"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw SpecParseError("unknown spec key: " + key);
    }
  }

  ExperimentSpec spec;
  try {
    if (j.contains("kind")) {
      const std::string k = j["kind"];
      if (k == "weight_curve" || k == "weight") {
        spec.kind = Kind::weight_curve;
      } else if (k == "tip_series" || k == "tips") {
        spec.kind = Kind::tip_series;
      } else if (k == "confirmation_delay" || k == "delay") {
        spec.kind = Kind::confirmation_delay;
      } else if (k == "attack_sweep" || k == "attack") {
        spec.kind = Kind::attack_sweep;
      } else if (k == "figure") {
        spec.kind = Kind::figure;
      } else {
        throw SpecParseError("unknown kind: " + k);
      }
    }
    if (j.contains("figure")) spec.figure = j["figure"];
    if (j.contains("lambda_high")) spec.params.lambda_high = j["lambda_high"];
    if (j.contains("lambda_low")) spec.params.lambda_low = j["lambda_low"];
    if (j.contains("reveal_delay")) spec.params.reveal_delay = j["reveal_delay"];
    if (j.contains("regimes")) {
      for (const auto& r : j["regimes"]) {
        const auto parsed = parse_regime(r.get<std::string>());
        if (!parsed) throw SpecParseError("unknown regime in spec");
        spec.regimes.push_back(*parsed);
      }
    }
    if (j.contains("m")) spec.thresholds = j["m"].get<std::vector<int>>();
    if (j.contains("mu")) spec.mus = j["mu"].get<std::vector<double>>();
    if (j.contains("mu_ratios")) {
      spec.mu_ratios = j["mu_ratios"].get<std::vector<double>>();
    }
    if (j.contains("times")) {
      spec.sample_times = j["times"].get<std::vector<double>>();
    }
    if (j.contains("alpha")) spec.alphas = j["alpha"].get<std::vector<int>>();
    if (j.contains("beta")) spec.betas = j["beta"].get<std::vector<int>>();
    if (j.contains("p")) spec.ps = j["p"].get<std::vector<double>>();
    if (j.contains("replications")) spec.replications = j["replications"];
    if (j.contains("horizon")) spec.horizon = j["horizon"];
    if (j.contains("seed")) spec.seed = j["seed"];
    if (j.contains("format")) {
      const std::string f = j["format"];
      if (f == "csv") {
        spec.format = OutputFormat::csv;
      } else if (f == "json") {
        spec.format = OutputFormat::json;
      } else {
        throw SpecParseError("unknown format: " + f);
      }
    }
    if (j.contains("out")) spec.out_path = j["out"];
  } catch (const nlohmann::json::exception& e) {
    throw SpecParseError(std::string("bad spec value: ") + e.what());
  }
  return spec;
}

std::string canonical_spec_json(const ExperimentSpec& spec) {
  return spec_to_json(spec).dump();
}

std::uint64_t spec_hash(const ExperimentSpec& spec) {
  const std::string text = canonical_spec_json(spec);
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

RunResult run(const ExperimentSpec& spec) {
  const Table table = build_table(spec);

  std::string path = spec.out_path;
  if (path.empty()) {
    path = spec.kind == Kind::figure ? spec.figure : kind_name(spec.kind);
    path += spec.format == OutputFormat::csv ? ".csv" : ".json";
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + path);
  }
  if (spec.format == OutputFormat::csv) {
    table.write_csv(out);
  } else {
    table.write_json(out);
  }
  out.close();

  RunResult result;
  result.path = path;
  result.rows = table.row_count();
  std::ostringstream summary;
  summary << "wrote " << table.row_count() << " rows to " << path
          << " (seed=" << spec.seed << ", spec_hash=" << std::hex
          << spec_hash(spec) << std::dec << ")";
  result.summary = summary.str();
  return result;
}

CompareReport compare_files(const std::filesystem::path& analytic_file,
                            const std::filesystem::path& simulation_file,
                            double tolerance) {
  auto load = [](const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw SchemaMismatch("cannot open " + p.string());
    return Table::read_csv(in);
  };
  const Table a = load(analytic_file);
  const Table b = load(simulation_file);
  return compare_tables(a, b, tolerance);
}

}  // namespace dagsim::experiments
