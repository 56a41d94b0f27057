#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "dagsim/params.hpp"
#include "dagsim/table.hpp"

namespace dagsim::experiments {

enum class Kind {
  weight_curve,
  tip_series,
  confirmation_delay,
  attack_sweep,
  figure,
};

enum class OutputFormat { csv, json };

/// Declarative experiment description. Unset numeric fields keep their
/// zero/negative sentinels and are resolved to per-kind defaults by run().
struct ExperimentSpec {
  Kind kind = Kind::figure;
  std::string figure;  // "fig8" .. "fig15" when kind == figure

  NetworkParams params{50.0, 0.5, 1.0};  // high 50/s, low 0.5/s, reveal 1 s
  std::vector<LoadRegime> regimes;       // empty = all four
  std::vector<int> thresholds;           // m values; empty = {50, 100, 200}
  std::vector<double> mus;               // attacker rates
  std::vector<double> mu_ratios;         // alternative: fractions of lambda
  std::vector<double> sample_times;      // weight/tip grid; empty = default
  std::vector<int> alphas;               // raw attack sweeps
  std::vector<int> betas;
  std::vector<double> ps;

  long replications = -1;  // -1 = per-kind default
  double horizon = -1.0;
  std::uint64_t seed = 1;

  std::string out_path;  // empty = derived from kind/figure
  OutputFormat format = OutputFormat::csv;
};

/// Parses a JSON experiment description; throws SpecParseError on unknown
/// keys or malformed values.
ExperimentSpec spec_from_json(const std::string& text);

/// Canonical serialized form of a spec (sorted keys) and its FNV-1a hash;
/// the hash is echoed in the run summary so outputs stay attributable.
std::string canonical_spec_json(const ExperimentSpec& spec);
std::uint64_t spec_hash(const ExperimentSpec& spec);

/// Computes the result table for a spec without touching the filesystem.
Table build_table(const ExperimentSpec& spec);

struct RunResult {
  std::filesystem::path path;
  std::size_t rows = 0;
  std::string summary;  // human-readable one-paragraph account of the run
};

/// Builds the table and writes it to the output path in the requested
/// format. Deterministic for a fixed spec and seed.
RunResult run(const ExperimentSpec& spec);

/// Comparison driver for result files; relative tolerance.
CompareReport compare_files(const std::filesystem::path& analytic_file,
                            const std::filesystem::path& simulation_file,
                            double tolerance);

}  // namespace dagsim::experiments
