#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "run_config.hpp"

namespace cli = poncelet::cli;

int main(int argc, char** argv) {
  CLI::App app{"Poncelet triangle families, inversive loci and power invariants"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<long long> samples;
  std::string out_dir = ".";
  bool svg = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON run configuration")->required();
    sub->add_option("--samples", samples, "number of lambda samples (>= 64)");
    sub->add_option("--out", out_dir, "output directory")->capture_default_str();
  };
  CLI::App* sweep = app.add_subcommand("sweep", "sample the family and write CSV/SVG");
  add_common(sweep);
  sweep->add_flag("--svg", svg, "also write the SVG plot");
  CLI::App* verify = app.add_subcommand("verify", "run every invariant check");
  add_common(verify);
  CLI::App* classify = app.add_subcommand("classify", "classify the inversion center");
  add_common(classify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitConfig;
  }

  try {
    cli::RunConfig cfg = cli::load_config(config_path);
    if (samples) {
      if (*samples < 64) throw cli::ConfigError("--samples must be >= 64");
      cfg.samples = static_cast<std::size_t>(*samples);
    }
    if (sweep->parsed()) return cli::cmd_sweep(cfg, out_dir, svg, std::cout);
    if (verify->parsed()) return cli::cmd_verify(cfg, out_dir, std::cout);
    return cli::cmd_classify(cfg, std::cout, std::cerr);
  } catch (const cli::ConfigError& e) {
    std::cerr << "poncelet: config error: " << e.what() << '\n';
    return cli::kExitConfig;
  } catch (const poncelet::Error& e) {
    std::cerr << "poncelet: " << poncelet::to_string(e.kind()) << ": " << e.what() << '\n';
    return cli::exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "poncelet: " << e.what() << '\n';
    return cli::kExitNumeric;
  }
}
