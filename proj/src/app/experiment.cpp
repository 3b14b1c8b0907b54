#include "iotrelay/app/experiment.hpp"

#include <fstream>
#include <set>
#include <string>

#include "iotrelay/analytic/optimizer.hpp"
#include "iotrelay/errors.hpp"
#include "iotrelay/units.hpp"

namespace iotrelay::cli {
namespace {

template <class T>
T get_as(const nlohmann::json& doc, const std::string& key) {
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError("config key '" + key + "' has the wrong type");
  }
}

std::size_t get_count(const nlohmann::json& doc, const std::string& key) {
  const auto& v = doc.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw ConfigError("config key '" + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

}  // namespace

ExperimentConfig config_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  ExperimentConfig cfg;
  std::set<std::string> consumed;
  cfg.params = params_from_json(doc, cfg.params, &consumed);

  for (const auto& [key, value] : doc.items()) {
    if (consumed.contains(key)) continue;
    if (key == "cst_min_dbm") {
      cfg.cst_grid.min_dbm = get_as<double>(doc, key);
    } else if (key == "cst_max_dbm") {
      cfg.cst_grid.max_dbm = get_as<double>(doc, key);
    } else if (key == "cst_points") {
      cfg.cst_grid.points = get_count(doc, key);
    } else if (key == "cst_points_per_decade") {
      cfg.cst_grid.points_per_decade = get_count(doc, key);
    } else if (key == "strategies") {
      if (!value.is_array() || value.empty()) {
        throw ConfigError("config key 'strategies' must be a non-empty array");
      }
      cfg.strategies.clear();
      for (const auto& s : value) {
        if (!s.is_string()) throw ConfigError("strategies must be strings");
        const Strategy parsed = parse_strategy(s.get<std::string>());
        for (Strategy existing : cfg.strategies) {
          if (existing == parsed) throw ConfigError("duplicate strategy in config");
        }
        cfg.strategies.push_back(parsed);
      }
    } else if (key == "mc_trials") {
      cfg.mc.n_trials = get_count(doc, key);
    } else if (key == "mc_patterns") {
      cfg.mc.n_patterns = get_count(doc, key);
    } else if (key == "mc_hop_samples") {
      cfg.mc.n_hop_samples = get_count(doc, key);
    } else if (key == "mc_bound_points") {
      cfg.mc.bound_points = get_count(doc, key);
    } else if (key == "seed") {
      cfg.mc.seed = get_as<std::uint64_t>(doc, key);
    } else if (key == "threads") {
      cfg.threads = static_cast<unsigned>(get_count(doc, key));
    } else if (key == "lambda_grid") {
      cfg.lambda_grid = get_as<std::vector<double>>(doc, key);
      if (cfg.lambda_grid.empty()) throw ConfigError("lambda_grid must be non-empty");
      for (double l : cfg.lambda_grid) {
        if (!(l > 0.0)) throw ConfigError("lambda_grid values must be > 0");
      }
    } else if (key == "out_dir") {
      cfg.out_dir = get_as<std::string>(doc, key);
    } else if (key == "emit_svg") {
      cfg.emit_svg = get_as<bool>(doc, key);
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }

  const bool has_min = cfg.cst_grid.min_dbm.has_value();
  const bool has_max = cfg.cst_grid.max_dbm.has_value();
  if (has_min != has_max) {
    throw ConfigError("cst_min_dbm and cst_max_dbm must be given together");
  }
  if (has_min && cfg.cst_grid.points == 0) {
    throw ConfigError("an explicit threshold grid needs cst_points >= 1");
  }
  if (cfg.cst_grid.points_per_decade == 0) {
    throw ConfigError("cst_points_per_decade must be >= 1");
  }
  try {
    validate(cfg.params);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path.string() + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config file '" + path.string() + "': " + e.what());
  }
  return config_from_json(doc);
}

std::vector<double> resolve_cst_grid(const ExperimentConfig& config) {
  try {
    if (config.cst_grid.min_dbm) {
      return log_grid(dbm_to_w(*config.cst_grid.min_dbm),
                      dbm_to_w(*config.cst_grid.max_dbm), config.cst_grid.points);
    }
    return default_cst_grid(config.params, config.cst_grid.points_per_decade);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("threshold grid: ") + e.what());
  }
}

}  // namespace iotrelay::cli
