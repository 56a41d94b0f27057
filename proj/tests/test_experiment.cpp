#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dagsim/experiment.hpp"

using namespace dagsim;
using namespace dagsim::experiments;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("dagsim_test_" + std::to_string(std::rand()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("weight figure carries both analytic and simulated columns") {
  ExperimentSpec spec;
  spec.kind = Kind::figure;
  spec.figure = "fig12";
  spec.replications = 20;
  spec.sample_times = {1.0, 5.0, 10.0};
  const Table t = build_table(spec);
  CHECK(t.columns() ==
        std::vector<std::string>{"regime", "t", "expected_weight", "sim_mean",
                                 "sim_se", "replications", "seed"});
  CHECK(t.row_count() == 12);  // four regimes, three times
  double v = 0.0;
  CHECK(cell_number(t.at(0, 3), v));  // sim_mean present
}

TEST_CASE("analytic-only tables leave stochastic cells empty") {
  ExperimentSpec spec;
  spec.kind = Kind::weight_curve;
  spec.replications = 0;
  spec.regimes = {LoadRegime::low};
  spec.sample_times = {1.0, 2.0};
  const Table t = build_table(spec);
  CHECK(t.row_count() == 2);
  CHECK(cell_absent(t.at(0, 3)));
  CHECK(cell_absent(t.at(0, 6)));  // no seed on analytic rows
  double v = 0.0;
  CHECK(cell_number(t.at(0, 2), v));
  CHECK(v == 1.5);
}

TEST_CASE("delay table columns and the reference value") {
  ExperimentSpec spec;
  spec.kind = Kind::confirmation_delay;
  spec.replications = 0;
  spec.regimes = {LoadRegime::low};
  spec.thresholds = {50};
  const Table t = build_table(spec);
  CHECK(t.columns() ==
        std::vector<std::string>{"regime", "m", "lambda", "delay_analytic",
                                 "delay_sim_mean", "delay_sim_se"});
  REQUIRE(t.row_count() == 1);
  double v = 0.0;
  CHECK(cell_number(t.at(0, 3), v));
  CHECK(v == 98.0);
}

TEST_CASE("attack sweep uses the pinned schema and methods") {
  ExperimentSpec spec;
  spec.kind = Kind::attack_sweep;
  spec.regimes = {LoadRegime::high};
  spec.thresholds = {50};
  spec.mus = {10.0, 25.0};
  spec.replications = 0;
  const Table t = build_table(spec);
  CHECK(t.columns() ==
        std::vector<std::string>{"regime", "m", "lambda", "mu", "p", "q",
                                 "prob_formula", "prob_mc", "mc_se",
                                 "method"});
  CHECK(t.row_count() == 2);
  CHECK(cell_text(t.at(0, 9)) == "analytic");
  double v = 0.0;
  CHECK(cell_number(t.at(0, 6), v));
  CHECK(v == doctest::Approx(10.0 / 50.0).epsilon(1e-12));
}

TEST_CASE("figure thirteen sweeps the rate on a fixed grid") {
  ExperimentSpec spec;
  spec.kind = Kind::figure;
  spec.figure = "fig13";
  const Table t = build_table(spec);
  CHECK(t.row_count() == 4 * 3 * 40);
  // All delay cells analytic, none simulated.
  for (std::size_t r = 0; r < t.row_count(); ++r) {
    CHECK(cell_absent(t.at(r, 4)));
  }
}

TEST_CASE("spec json round-trip and strictness") {
  const std::string good = R"({"kind":"attack","regimes":["hr"],"m":[50],)"
                           R"("mu":[10.0],"seed":3,"replications":0})";
  const ExperimentSpec spec = spec_from_json(good);
  CHECK(spec.kind == Kind::attack_sweep);
  CHECK(spec.seed == 3);
  CHECK(spec.thresholds == std::vector<int>{50});

  CHECK_THROWS_AS(spec_from_json("{not json"), SpecParseError);
  CHECK_THROWS_AS(spec_from_json(R"({"kindd":"attack"})"), SpecParseError);
  CHECK_THROWS_AS(spec_from_json(R"({"kind":"bogus"})"), SpecParseError);
  CHECK_THROWS_AS(spec_from_json(R"({"regimes":["zr"]})"), SpecParseError);
}

TEST_CASE("seeded runs are byte-identical; different seeds differ") {
  TempDir tmp;
  ExperimentSpec spec;
  spec.kind = Kind::weight_curve;
  spec.regimes = {LoadRegime::low};
  spec.sample_times = {1.0, 5.0, 10.0};
  spec.replications = 50;
  spec.seed = 21;
  spec.out_path = (tmp.path / "a.csv").string();
  run(spec);
  const std::string first = slurp(spec.out_path);

  spec.out_path = (tmp.path / "b.csv").string();
  run(spec);
  CHECK(slurp(spec.out_path) == first);

  spec.seed = 22;
  spec.out_path = (tmp.path / "c.csv").string();
  run(spec);
  const std::string other = slurp(spec.out_path);
  CHECK(other != first);

  // Different seeds may only move the stochastic columns.
  std::istringstream in_a(first);
  std::istringstream in_c(other);
  const Table ta = Table::read_csv(in_a);
  const Table tc = Table::read_csv(in_c);
  REQUIRE(ta.row_count() == tc.row_count());
  for (std::size_t r = 0; r < ta.row_count(); ++r) {
    CHECK(cell_text(ta.at(r, 0)) == cell_text(tc.at(r, 0)));  // regime
    CHECK(cell_text(ta.at(r, 1)) == cell_text(tc.at(r, 1)));  // t
    CHECK(cell_text(ta.at(r, 2)) == cell_text(tc.at(r, 2)));  // analytic
  }
}

TEST_CASE("json output format is selectable") {
  TempDir tmp;
  ExperimentSpec spec;
  spec.kind = Kind::confirmation_delay;
  spec.regimes = {LoadRegime::low};
  spec.thresholds = {50};
  spec.replications = 0;
  spec.format = OutputFormat::json;
  spec.out_path = (tmp.path / "d.json").string();
  run(spec);
  const std::string text = slurp(spec.out_path);
  CHECK(text.find("\"delay_analytic\": 98.0") != std::string::npos);
  CHECK(text.find("\"delay_sim_mean\": null") != std::string::npos);
}

TEST_CASE("compare passes low-load analytic against a heavy simulation") {
  TempDir tmp;
  ExperimentSpec spec;
  spec.kind = Kind::weight_curve;
  spec.regimes = {LoadRegime::low};
  spec.seed = 3;

  spec.replications = 0;
  spec.out_path = (tmp.path / "analytic.csv").string();
  run(spec);

  spec.replications = 10'000;
  spec.out_path = (tmp.path / "sim.csv").string();
  run(spec);

  const auto report = compare_files(tmp.path / "analytic.csv",
                                    tmp.path / "sim.csv", 0.05);
  CHECK(report.pass);
  CHECK(report.compared == 100);
}

TEST_CASE("figure eleven reports the approximation gap") {
  ExperimentSpec spec;
  spec.kind = Kind::figure;
  spec.figure = "fig11";
  const Table t = build_table(spec);
  CHECK(t.columns() ==
        std::vector<std::string>{"m", "w0", "prob_distribution",
                                 "prob_expected", "abs_diff"});
  CHECK(t.row_count() > 5);
}

TEST_CASE("raw attack figures expose the sweep variables") {
  ExperimentSpec spec;
  spec.kind = Kind::figure;
  spec.figure = "fig8";
  spec.replications = 0;
  const Table t = build_table(spec);
  CHECK(t.columns() ==
        std::vector<std::string>{"alpha", "beta", "p", "q", "prob_formula",
                                 "prob_mc", "mc_se", "method"});
  CHECK(t.row_count() == 5 * 16);
}

TEST_CASE("unknown figures are spec errors") {
  ExperimentSpec spec;
  spec.kind = Kind::figure;
  spec.figure = "fig99";
  CHECK_THROWS_AS(build_table(spec), SpecParseError);
}

TEST_CASE("spec hash is stable and sensitive") {
  ExperimentSpec a;
  a.kind = Kind::attack_sweep;
  ExperimentSpec b = a;
  CHECK(spec_hash(a) == spec_hash(b));
  b.seed = 99;
  CHECK(spec_hash(a) != spec_hash(b));
}
