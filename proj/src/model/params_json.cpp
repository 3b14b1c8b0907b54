#include <cmath>
#include <optional>
#include <string>

#include "iotrelay/errors.hpp"
#include "iotrelay/params.hpp"
#include "iotrelay/units.hpp"

namespace iotrelay {
namespace {

class Reader {
 public:
  Reader(const nlohmann::json& doc, std::set<std::string>* consumed)
      : doc_(doc), consumed_(consumed) {}

  std::optional<double> number(const std::string& key) {
    auto it = doc_.find(key);
    if (it == doc_.end()) return std::nullopt;
    if (!it->is_number()) {
      throw ConfigError("config key '" + key + "' must be a number");
    }
    if (consumed_) consumed_->insert(key);
    return it->get<double>();
  }

  std::optional<bool> boolean(const std::string& key) {
    auto it = doc_.find(key);
    if (it == doc_.end()) return std::nullopt;
    if (!it->is_boolean()) {
      throw ConfigError("config key '" + key + "' must be a boolean");
    }
    if (consumed_) consumed_->insert(key);
    return it->get<bool>();
  }

  // Reads one field spelled as `linear` or `alias` (converted), never both.
  std::optional<double> either(const std::string& linear,
                               const std::string& alias,
                               double (*convert)(double)) {
    auto a = number(linear);
    auto b = number(alias);
    if (a && b) {
      throw ConfigError("config keys '" + linear + "' and '" + alias +
                        "' set the same field");
    }
    if (b) return convert(*b);
    return a;
  }

 private:
  const nlohmann::json& doc_;
  std::set<std::string>* consumed_;
};

}  // namespace

NetworkParams params_from_json(const nlohmann::json& doc,
                               const NetworkParams& base,
                               std::set<std::string>* consumed) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  Reader in(doc, consumed);
  NetworkParams p = base;

  if (auto v = in.either("tx_power_w", "tx_power_dbm", dbm_to_w)) p.tx_power_w = *v;
  if (auto v = in.number("device_density")) p.device_density = *v;
  if (auto v = in.number("path_loss_exp")) p.path_loss_exp = *v;
  if (auto v = in.number("fading_rate")) p.fading_rate = *v;
  if (auto v = in.either("noise_w", "noise_dbm", dbm_to_w)) p.noise_w = *v;
  if (auto v = in.either("sinr_threshold_lin", "sinr_threshold_db", db_to_lin)) {
    p.sinr_threshold_lin = *v;
  }
  if (auto v = in.number("dest_distance_m")) p.dest_distance_m = *v;
  if (auto v = in.number("delay_budget_s")) p.delay_budget_s = *v;
  if (auto v = in.number("slot_duration_s")) p.slot_duration_s = *v;
  if (auto v = in.boolean("enforce_range_ordering")) p.enforce_range_ordering = *v;

  // Ranges are back-solved after P, mu and eta are final.
  auto detect = in.either("detect_min_w", "detect_min_dbm", dbm_to_w);
  auto tx_range = in.number("avg_tx_range_m");
  if (detect && tx_range) {
    throw ConfigError("config sets both detect_min and avg_tx_range_m");
  }
  if (detect) p.detect_min_w = *detect;
  try {
    if (tx_range) {
      p.detect_min_w = threshold_for_range(p.tx_power_w, p.fading_rate,
                                           *tx_range, p.path_loss_exp);
    }
    auto cst = in.either("cst_w", "cst_dbm", dbm_to_w);
    auto sense_range = in.number("avg_sense_range_m");
    if (cst && sense_range) {
      throw ConfigError("config sets both cst and avg_sense_range_m");
    }
    if (cst) p.cst_w = *cst;
    if (sense_range) {
      p.cst_w = threshold_for_range(p.tx_power_w, p.fading_rate, *sense_range,
                                    p.path_loss_exp);
    }
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  return p;
}

nlohmann::json params_to_json(const NetworkParams& p) {
  return nlohmann::json{
      {"tx_power_w", p.tx_power_w},
      {"device_density", p.device_density},
      {"path_loss_exp", p.path_loss_exp},
      {"fading_rate", p.fading_rate},
      {"noise_w", p.noise_w},
      {"sinr_threshold_lin", p.sinr_threshold_lin},
      {"detect_min_w", p.detect_min_w},
      {"cst_w", p.cst_w},
      {"dest_distance_m", p.dest_distance_m},
      {"delay_budget_s", p.delay_budget_s},
      {"slot_duration_s", p.slot_duration_s},
      {"enforce_range_ordering", p.enforce_range_ordering},
  };
}

}  // namespace iotrelay
