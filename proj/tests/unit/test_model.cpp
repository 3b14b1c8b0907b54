#include <cmath>
#include <functional>
#include <numbers>
#include <set>
#include <string>

#include <gtest/gtest.h>

#include "iotrelay/errors.hpp"
#include "iotrelay/params.hpp"
#include "iotrelay/units.hpp"

using namespace iotrelay;
using std::numbers::pi;

namespace {
// Gamma(1.25), tabulated.
constexpr double kGamma125 = 0.9064024770554771;
}  // namespace

TEST(AvgRange, ReferenceValues) {
  EXPECT_NEAR(avg_range(0.1, 1.0, 1e-5, 4.0), 10.0 * kGamma125, 1e-12);
  EXPECT_NEAR(avg_range(0.1, 1.0, 1e-5, 4.0), 9.0640, 5e-5);
  EXPECT_NEAR(avg_range(0.37, 1.0, 0.37, 4.0), kGamma125, 1e-14);
}

TEST(AvgRange, DecreasingInThreshold) {
  EXPECT_GT(avg_range(0.1, 1.0, 1e-5, 4.0), avg_range(0.1, 1.0, 1e-4, 4.0));
  double prev = INFINITY;
  for (double rho = 1e-9; rho < 1e-1; rho *= 3.0) {
    const double r = avg_range(0.1, 2.0, rho, 3.5);
    EXPECT_LT(r, prev);
    prev = r;
  }
}

TEST(AvgRange, InverseRoundTrip) {
  for (double eta : {2.5, 3.0, 4.0, 5.5}) {
    for (double range : {0.5, 5.0, 10.0, 77.0}) {
      const double rho = threshold_for_range(0.1, 1.5, range, eta);
      EXPECT_NEAR(avg_range(0.1, 1.5, rho, eta), range, 1e-12 * range);
    }
  }
}

TEST(AvgRange, DomainErrors) {
  EXPECT_THROW(avg_range(0.0, 1.0, 1e-5, 4.0), DomainError);
  EXPECT_THROW(avg_range(0.1, -1.0, 1e-5, 4.0), DomainError);
  EXPECT_THROW(avg_range(0.1, 1.0, 0.0, 4.0), DomainError);
  EXPECT_THROW(avg_range(0.1, 1.0, 1e-5, 2.0), DomainError);
  EXPECT_THROW(threshold_for_range(0.1, 1.0, 0.0, 4.0), DomainError);
  EXPECT_THROW(threshold_for_range(0.1, 1.0, 10.0, 1.5), DomainError);
}

TEST(Units, Conversions) {
  EXPECT_DOUBLE_EQ(dbm_to_w(30.0), 1.0);
  EXPECT_DOUBLE_EQ(dbm_to_w(20.0), 0.1);
  EXPECT_NEAR(w_to_dbm(1e-3), 0.0, 1e-12);
  EXPECT_DOUBLE_EQ(db_to_lin(10.0), 10.0);
  EXPECT_DOUBLE_EQ(db_to_lin(0.0), 1.0);
  EXPECT_NEAR(lin_to_db(100.0), 20.0, 1e-12);
  EXPECT_DOUBLE_EQ(convert_units(30.0, UnitConversion::kDbmToW), 1.0);
  EXPECT_NEAR(convert_units(10.0, UnitConversion::kLinToDb), 10.0, 1e-12);
}

TEST(Units, RoundTrip) {
  for (double v : {-120.0, -21.7, 0.0, 13.3, 47.0}) {
    EXPECT_NEAR(w_to_dbm(dbm_to_w(v)), v, 1e-12 * std::max(1.0, std::abs(v)));
    EXPECT_NEAR(lin_to_db(db_to_lin(v)), v, 1e-12 * std::max(1.0, std::abs(v)));
  }
  for (double w : {1e-15, 3.3e-6, 0.1, 12.0}) {
    EXPECT_NEAR(dbm_to_w(w_to_dbm(w)), w, 1e-12 * w);
  }
}

TEST(Units, LogOfNonPositiveThrows) {
  EXPECT_THROW(w_to_dbm(0.0), DomainError);
  EXPECT_THROW(w_to_dbm(-1.0), DomainError);
  EXPECT_THROW(lin_to_db(0.0), DomainError);
  EXPECT_THROW(convert_units(-2.0, UnitConversion::kLinToDb), DomainError);
}

TEST(Params, DefaultsGiveTenMetreRanges) {
  const NetworkParams p = default_params();
  EXPECT_DOUBLE_EQ(p.tx_power_w, 0.1);
  EXPECT_DOUBLE_EQ(p.sinr_threshold_lin, 10.0);
  const DerivedRanges r = derive_ranges(p);
  EXPECT_NEAR(r.avg_tx_range_m, 10.0, 1e-12);
  EXPECT_NEAR(r.avg_sense_range_m, 10.0, 1e-12);
  EXPECT_NEAR(r.mean_contention_count, 0.5 * pi * 100.0, 1e-9);
  EXPECT_FALSE(exclusion_clamped(r));
  // (P/rho)^(1/4) Gamma(1.25) = 10 gives rho = P (Gamma(1.25)/10)^4, about -21.7 dBm.
  EXPECT_NEAR(p.detect_min_w, 0.1 * std::pow(kGamma125 / 10.0, 4.0), 1e-18);
  EXPECT_NEAR(w_to_dbm(p.detect_min_w), -21.707, 1e-3);
}

TEST(Params, ContentionCountInvariant) {
  NetworkParams p = default_params();
  p.device_density = 1.7;
  p.cst_w = p.detect_min_w / 10.0;
  const DerivedRanges r = derive_ranges(p);
  EXPECT_NEAR(r.mean_contention_count, 1.7 * pi * r.avg_sense_range_m * r.avg_sense_range_m,
              1e-9 * r.mean_contention_count);
  EXPECT_GT(r.avg_sense_range_m, r.avg_tx_range_m);
}

TEST(Params, InvariantViolationsThrow) {
  const std::vector<std::function<void(NetworkParams&)>> breakers{
      [](NetworkParams& p) { p.tx_power_w = 0.0; },
      [](NetworkParams& p) { p.device_density = -1.0; },
      [](NetworkParams& p) { p.path_loss_exp = 2.0; },
      [](NetworkParams& p) { p.fading_rate = 0.0; },
      [](NetworkParams& p) { p.noise_w = -1e-9; },
      [](NetworkParams& p) { p.sinr_threshold_lin = 0.0; },
      [](NetworkParams& p) { p.detect_min_w = 0.0; },
      [](NetworkParams& p) { p.detect_min_w = 0.2; },  // above tx power
      [](NetworkParams& p) { p.cst_w = 0.0; },
      [](NetworkParams& p) { p.cst_w = 2.0 * p.detect_min_w; },
      [](NetworkParams& p) { p.dest_distance_m = 0.0; },
      [](NetworkParams& p) { p.delay_budget_s = 0.0; },
      [](NetworkParams& p) { p.slot_duration_s = -1.0; },
      [](NetworkParams& p) { p.device_density = NAN; },
  };
  for (std::size_t i = 0; i < breakers.size(); ++i) {
    NetworkParams p = default_params();
    breakers[i](p);
    EXPECT_THROW(validate(p), DomainError) << "case " << i;
    EXPECT_THROW(derive_ranges(p), DomainError) << "case " << i;
  }
}

TEST(Params, OrderingCanBeRelaxed) {
  NetworkParams p = default_params();
  p.cst_w = 4.0 * p.detect_min_w;
  EXPECT_THROW(validate(p), DomainError);
  p.enforce_range_ordering = false;
  EXPECT_NO_THROW(validate(p));
  const DerivedRanges r = derive_ranges(p);
  EXPECT_LT(r.avg_sense_range_m, r.avg_tx_range_m);
  EXPECT_TRUE(exclusion_clamped(r));
}

TEST(ParamsJson, AliasesAndRanges) {
  const auto doc = nlohmann::json::parse(R"({
    "tx_power_dbm": 20, "sinr_threshold_db": 0, "noise_dbm": -100,
    "avg_tx_range_m": 8, "avg_sense_range_m": 15, "device_density": 0.25
  })");
  std::set<std::string> consumed;
  const NetworkParams p = params_from_json(doc, default_params(), &consumed);
  EXPECT_NEAR(p.tx_power_w, 0.1, 1e-15);
  EXPECT_NEAR(p.sinr_threshold_lin, 1.0, 1e-15);
  EXPECT_NEAR(p.noise_w, 1e-13, 1e-25);
  EXPECT_DOUBLE_EQ(p.device_density, 0.25);
  const DerivedRanges r = derive_ranges(p);
  EXPECT_NEAR(r.avg_tx_range_m, 8.0, 1e-12);
  EXPECT_NEAR(r.avg_sense_range_m, 15.0, 1e-12);
  EXPECT_EQ(consumed.size(), 6u);
}

TEST(ParamsJson, LinearKeysAndDefaults) {
  const auto doc = nlohmann::json::parse(R"({"cst_dbm": -30, "enforce_range_ordering": false})");
  const NetworkParams p = params_from_json(doc, default_params());
  EXPECT_NEAR(p.cst_w, 1e-6, 1e-18);
  EXPECT_FALSE(p.enforce_range_ordering);
  EXPECT_EQ(p.detect_min_w, default_params().detect_min_w);
}

TEST(ParamsJson, Errors) {
  const NetworkParams base = default_params();
  for (const char* text : {
           R"({"tx_power_w": 0.1, "tx_power_dbm": 20})",
           R"({"cst_w": 1e-6, "avg_sense_range_m": 12})",
           R"({"detect_min_dbm": -20, "avg_tx_range_m": 12})",
           R"({"device_density": "dense"})",
           R"({"enforce_range_ordering": 1})",
           R"({"avg_tx_range_m": -3})",
           R"([1, 2])",
       }) {
    EXPECT_THROW(params_from_json(nlohmann::json::parse(text), base), ConfigError) << text;
  }
}

TEST(ParamsJson, RoundTrip) {
  NetworkParams p = default_params();
  p.noise_w = 3e-14;
  p.fading_rate = 2.0;
  p.enforce_range_ordering = false;
  const NetworkParams q = params_from_json(params_to_json(p), NetworkParams{});
  EXPECT_EQ(params_to_json(q), params_to_json(p));
}
