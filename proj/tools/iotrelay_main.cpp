#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "iotrelay/app/commands.hpp"
#include "iotrelay/errors.hpp"

namespace app = iotrelay::cli;

int main(int argc, char** argv) {
  CLI::App cli{"Analytic and Monte-Carlo evaluation of CSMA multi-hop forwarding strategies"};
  cli.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  std::optional<unsigned> threads;
  bool svg = false;
  bool nfp_as_printed = false;

  cli.add_option("--config", config_path, "JSON config file (defaults when omitted)");
  cli.add_option("--seed", seed, "Monte-Carlo master seed");
  cli.add_option("--out", out_dir, "Output directory");
  cli.add_option("--threads", threads, "Worker threads (0 = all cores)");
  cli.add_flag("--svg", svg, "Also write SVG charts");

  auto* sweep = cli.add_subcommand("sweep", "Analytic metrics over the CST grid");
  auto* nafp = cli.add_subcommand("nafp", "NAFP versus device density");
  auto* optimize = cli.add_subcommand("optimize", "Delay-constrained APP maximisation");
  auto* validate = cli.add_subcommand("validate", "Monte-Carlo oracle battery");
  validate->add_flag("--debug-nfp-as-printed", nfp_as_printed,
                     "Check NFP distances against the full-disc exponent law");
  auto* export_samples =
      cli.add_subcommand("export-samples", "Raw Monte-Carlo hop trials as CSV");

  CLI11_PARSE(cli, argc, argv);

  try {
    app::ExperimentConfig cfg =
        config_path.empty() ? app::ExperimentConfig{} : app::load_config(config_path);
    if (seed) cfg.mc.seed = *seed;
    if (out_dir) cfg.out_dir = *out_dir;
    if (threads) cfg.threads = *threads;
    if (svg) cfg.emit_svg = true;

    if (sweep->parsed()) return app::cmd_sweep(cfg, std::cout);
    if (nafp->parsed()) return app::cmd_nafp(cfg, std::cout);
    if (optimize->parsed()) return app::cmd_optimize(cfg, std::cout);
    if (validate->parsed()) {
      app::ValidateOptions opts;
      if (nfp_as_printed) opts.nfp_law = iotrelay::NfpLaw::kAsPrinted;
      return app::cmd_validate(cfg, opts, std::cout);
    }
    if (export_samples->parsed()) return app::cmd_export_samples(cfg, std::cout);
  } catch (const iotrelay::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return app::kExitConfigError;
  } catch (const iotrelay::DomainError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return app::kExitConfigError;
  } catch (const iotrelay::IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return app::kExitIoError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return app::kExitValidationFailed;
  }
  return app::kExitOk;
}
