#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <unistd.h>

#include "iotrelay/app/commands.hpp"
#include "iotrelay/app/csv.hpp"
#include "iotrelay/app/experiment.hpp"
#include "iotrelay/app/svg.hpp"
#include "iotrelay/app/validate.hpp"
#include "iotrelay/errors.hpp"
#include "iotrelay/units.hpp"

using namespace iotrelay;
using namespace iotrelay::cli;
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  TempDir() {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    path_ = fs::temp_directory_path() /
            ("iotrelay_" + std::string(info->name()) + "_" + std::to_string(::getpid()));
    fs::remove_all(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

ExperimentConfig parse(const char* text) {
  return config_from_json(nlohmann::json::parse(text));
}

}  // namespace

TEST(Config, Defaults) {
  const ExperimentConfig cfg = parse("{}");
  EXPECT_EQ(cfg.strategies.size(), 3u);
  EXPECT_EQ(cfg.mc.seed, 1u);
  EXPECT_EQ(resolve_cst_grid(cfg).size(), 116u);
}

TEST(Config, AllKeys) {
  const ExperimentConfig cfg = parse(R"({
    "sinr_threshold_db": 0, "cst_min_dbm": -40, "cst_max_dbm": -25, "cst_points": 4,
    "strategies": ["rfp", "MFR"], "mc_trials": 500, "mc_patterns": 20,
    "mc_hop_samples": 2000, "mc_bound_points": 3, "seed": 99, "threads": 2,
    "lambda_grid": [0.2, 0.4], "out_dir": "results", "emit_svg": true,
    "cst_points_per_decade": 10
  })");
  EXPECT_DOUBLE_EQ(cfg.params.sinr_threshold_lin, 1.0);
  ASSERT_EQ(cfg.strategies.size(), 2u);
  EXPECT_EQ(cfg.strategies[0], Strategy::kRfp);
  EXPECT_EQ(cfg.mc.n_trials, 500u);
  EXPECT_EQ(cfg.mc.n_patterns, 20u);
  EXPECT_EQ(cfg.mc.n_hop_samples, 2000u);
  EXPECT_EQ(cfg.mc.bound_points, 3u);
  EXPECT_EQ(cfg.mc.seed, 99u);
  EXPECT_EQ(cfg.threads, 2u);
  EXPECT_EQ(cfg.lambda_grid.size(), 2u);
  EXPECT_EQ(cfg.out_dir, fs::path("results"));
  EXPECT_TRUE(cfg.emit_svg);
  const auto grid = resolve_cst_grid(cfg);
  ASSERT_EQ(grid.size(), 4u);
  EXPECT_NEAR(w_to_dbm(grid.front()), -40.0, 1e-9);
  EXPECT_NEAR(w_to_dbm(grid.back()), -25.0, 1e-9);
}

TEST(Config, Errors) {
  for (const char* text : {
           R"({"bogus": 1})",
           R"({"cst_min_dbm": -40})",
           R"({"cst_min_dbm": -40, "cst_max_dbm": -30})",
           R"({"strategies": []})",
           R"({"strategies": ["MFR", "mfr"]})",
           R"({"strategies": ["XFR"]})",
           R"({"mc_trials": -5})",
           R"({"mc_trials": 1.5})",
           R"({"lambda_grid": []})",
           R"({"lambda_grid": [0.5, -1]})",
           R"({"emit_svg": "yes"})",
           R"({"cst_dbm": -10})",
           R"({"tx_power_w": -1})",
       }) {
    EXPECT_THROW(parse(text), ConfigError) << text;
  }
  EXPECT_THROW(load_config("/nonexistent/config.json"), IoError);
}

TEST(Config, LoadFromFile) {
  TempDir dir;
  fs::create_directories(dir.path());
  const auto path = dir.path() / "c.json";
  write_text_file(path, R"({"seed": 5, "device_density": 0.25})");
  const ExperimentConfig cfg = load_config(path);
  EXPECT_EQ(cfg.mc.seed, 5u);
  EXPECT_DOUBLE_EQ(cfg.params.device_density, 0.25);
  write_text_file(path, "{not json");
  EXPECT_THROW(load_config(path), ConfigError);
}

TEST(Csv, Formatting) {
  EXPECT_EQ(format_double(0.1234567891234), "0.123456789");
  EXPECT_EQ(format_double(1e-5), "1e-05");
  EXPECT_EQ(format_double(157.07963267948966), "157.079633");
  EXPECT_EQ(format_double(INFINITY), "inf");
  EXPECT_EQ(format_double(-INFINITY), "-inf");
}

TEST(Csv, SweepRows) {
  SweepPoint pt;
  pt.strategy = Strategy::kRfp;
  pt.cst_w = 1e-3;
  pt.active_density = 0.003;
  pt.success_prob = 0.5;
  pt.mean_progress_m = 4.0;
  pt.nafp = 2.0;
  pt.app = 0.003;
  pt.delay_s = INFINITY;
  pt.feasible = false;
  const std::vector<SweepPoint> rows{pt};
  EXPECT_EQ(sweep_csv(rows),
            "strategy,cst_dbm,lambda_active,p_success,mean_progress_m,nafp,app,delay_s,"
            "feasible,clamped\nRFP,0,0.003,0.5,4,2,0.003,inf,false,false\n");
  const std::string opt = optimize_csv(rows);
  EXPECT_NE(opt.find(",slots_to_access,retransmissions,hops,slot_s\n"), std::string::npos);
}

TEST(Commands, SweepSinglePointAndDeterminism) {
  TempDir dir;
  ExperimentConfig cfg = parse(R"({"cst_min_dbm": -30, "cst_max_dbm": -30, "cst_points": 1,
                                   "strategies": ["NFP"]})");
  cfg.out_dir = dir.path();
  std::ostringstream log;
  EXPECT_EQ(cmd_sweep(cfg, log), kExitOk);
  const std::string first = slurp(dir.path() / "sweep.csv");
  EXPECT_EQ(count_lines(first), 2u);
  EXPECT_EQ(first.rfind("strategy,cst_dbm,", 0), 0u);
  EXPECT_NE(first.find("\nNFP,-30,"), std::string::npos);

  cfg = parse("{}");
  cfg.out_dir = dir.path();
  cfg.emit_svg = true;
  EXPECT_EQ(cmd_sweep(cfg, log), kExitOk);
  const std::string a = slurp(dir.path() / "sweep.csv");
  EXPECT_EQ(count_lines(a), 1u + 3u * 116u);
  EXPECT_EQ(cmd_sweep(cfg, log), kExitOk);
  EXPECT_EQ(slurp(dir.path() / "sweep.csv"), a);
  EXPECT_NE(slurp(dir.path() / "sweep.svg").find("<polyline"), std::string::npos);
}

TEST(Commands, SweepRejectsGridAboveDetectThreshold) {
  TempDir dir;
  ExperimentConfig cfg = parse(R"({"cst_min_dbm": -30, "cst_max_dbm": -10, "cst_points": 3})");
  cfg.out_dir = dir.path();
  std::ostringstream log;
  EXPECT_THROW(cmd_sweep(cfg, log), ConfigError);
}

TEST(Commands, Nafp) {
  TempDir dir;
  ExperimentConfig cfg = parse(R"({"lambda_grid": [2.0]})");
  cfg.out_dir = dir.path();
  cfg.emit_svg = true;
  std::ostringstream log;
  EXPECT_EQ(cmd_nafp(cfg, log), kExitOk);
  const std::string csv = slurp(dir.path() / "nafp.csv");
  EXPECT_EQ(count_lines(csv), 4u);
  EXPECT_EQ(csv.rfind("lambda,strategy,nafp,nafp_max\n", 0), 0u);
  EXPECT_NE(csv.find(",14.1421356\n"), std::string::npos);  // 10 sqrt(2)
  EXPECT_TRUE(fs::exists(dir.path() / "nafp.svg"));
}

TEST(Commands, OptimizeReports) {
  TempDir dir;
  ExperimentConfig cfg = parse(R"({"delay_budget_s": 1e-9, "cst_points_per_decade": 10})");
  cfg.out_dir = dir.path();
  std::ostringstream log;
  EXPECT_EQ(cmd_optimize(cfg, log), kExitOk);
  const auto report = nlohmann::json::parse(slurp(dir.path() / "optimize.json"));
  EXPECT_EQ(report["status"], "no feasible point");
  EXPECT_TRUE(report["best"].is_null());
  EXPECT_NE(log.str().find("no feasible point"), std::string::npos);

  cfg = parse(R"({"cst_points_per_decade": 10})");
  cfg.out_dir = dir.path();
  EXPECT_EQ(cmd_optimize(cfg, log), kExitOk);
  const auto ok = nlohmann::json::parse(slurp(dir.path() / "optimize.json"));
  EXPECT_EQ(ok["status"], "optimal");
  for (const char* key : {"slots_to_access", "retransmissions", "hops", "slot_s"}) {
    EXPECT_TRUE(ok["best"].contains(key)) << key;
  }
  const std::string csv = slurp(dir.path() / "optimize.csv");
  EXPECT_NE(csv.find("slots_to_access"), std::string::npos);
}

TEST(Commands, ExportSamples) {
  TempDir dir;
  ExperimentConfig cfg = parse(R"({"mc_trials": 150, "strategies": ["MFR", "NFP"]})");
  cfg.out_dir = dir.path();
  std::ostringstream log;
  EXPECT_EQ(cmd_export_samples(cfg, log), kExitOk);
  const std::string csv = slurp(dir.path() / "samples.csv");
  EXPECT_EQ(csv.rfind("trial,strategy,r_m,z_m,d_m,sinr_db,success\n", 0), 0u);
  EXPECT_EQ(count_lines(csv), 1u + 300u);
  EXPECT_NE(csv.find("\n0,NFP,"), std::string::npos);
}

TEST(Commands, UnwritableOutput) {
  EXPECT_THROW(write_text_file("/proc/iotrelay_forbidden/x.csv", "x"), IoError);
  ExperimentConfig cfg = parse(R"({"cst_points_per_decade": 5})");
  cfg.out_dir = "/proc/iotrelay_forbidden";
  std::ostringstream log;
  EXPECT_THROW(cmd_sweep(cfg, log), IoError);
}

TEST(Svg, RendersAndSkipsNonFinite) {
  Panel panel{"t", "x", "y", true, {}};
  panel.series.push_back({"a", {1, 2, 3, 4}, {1, INFINITY, 0.0, 3}, {true, true, false, true}});
  panel.series.push_back({"empty", {}, {}, {}});
  const std::string svg = render_svg({panel, panel});
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("stroke-dasharray"), std::string::npos);
  EXPECT_EQ(svg.find("nan"), std::string::npos);
  EXPECT_EQ(svg.find("inf"), std::string::npos);
  EXPECT_EQ(svg, render_svg({panel, panel}));
}

namespace {

ExperimentConfig small_validation_config() {
  return parse(R"({"mc_trials": 300, "mc_patterns": 10, "mc_hop_samples": 30000,
                   "mc_bound_points": 2, "cst_points_per_decade": 10, "seed": 4})");
}

}  // namespace

TEST(Validate, ReportIsDeterministicAcrossThreads) {
  ExperimentConfig cfg = small_validation_config();
  cfg.threads = 1;
  const ValidationReport a = run_validation(cfg);
  cfg.threads = 3;
  const ValidationReport b = run_validation(cfg);
  EXPECT_EQ(a.to_jsonl(), b.to_jsonl());
  EXPECT_FALSE(a.any_failed());
  const auto header = nlohmann::json::parse(a.to_jsonl().substr(0, a.to_jsonl().find('\n')));
  EXPECT_EQ(header["seed"], 4);
  EXPECT_EQ(a.count(CheckStatus::kPass) + a.count(CheckStatus::kInconclusive), a.checks.size());
}

TEST(Validate, MisWiredNfpLawFails) {
  ExperimentConfig cfg = small_validation_config();
  ValidateOptions opts;
  opts.nfp_law = NfpLaw::kAsPrinted;
  const ValidationReport r = run_validation(cfg, opts);
  bool saw = false;
  for (const auto& c : r.checks) {
    if (c.name == "ks_distance_NFP") {
      saw = true;
      EXPECT_EQ(c.status, CheckStatus::kFail);
    }
  }
  EXPECT_TRUE(saw);
  TempDir dir;
  cfg.out_dir = dir.path();
  std::ostringstream log;
  EXPECT_EQ(cmd_validate(cfg, opts, log), kExitValidationFailed);
  EXPECT_TRUE(fs::exists(dir.path() / "validate.jsonl"));
}

TEST(Validate, TooFewSamplesIsInconclusive) {
  ExperimentConfig cfg = parse(R"({"mc_trials": 50, "mc_patterns": 5, "mc_hop_samples": 500,
                                   "cst_points_per_decade": 5})");
  const ValidationReport r = run_validation(cfg);
  EXPECT_FALSE(r.any_failed());
  for (const auto& c : r.checks) {
    if (c.name.rfind("order_", 0) == 0) {
      EXPECT_EQ(c.status, CheckStatus::kPass) << c.name;
    } else {
      EXPECT_EQ(c.status, CheckStatus::kInconclusive) << c.name;
    }
  }
  TempDir dir;
  cfg.out_dir = dir.path();
  std::ostringstream log;
  EXPECT_EQ(cmd_validate(cfg, {}, log), kExitOk);
}
