#include <CLI11.hpp>
#include <iostream>
#include <nlohmann/json.hpp>

#include "commands.hpp"
#include "run_config.hpp"
#include "vpanel/errors.hpp"

namespace {

using vpanel::cli::GlobalOptions;

void print_error_json(int code, const std::string& message) {
  nlohmann::json err;
  err["error"] = {{"code", code}, {"message", message}};
  std::cout << err.dump() << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"boundary point-vortex method for 2D ideal flow outside the unit disk"};
  app.require_subcommand(1);

  GlobalOptions opt;
  app.add_option("--config", opt.config_path, "path to the JSON run config")->required();
  app.add_option("--out", opt.out_path, "output path (default: stdout)");
  app.add_option("--seed", opt.seed, "seed for randomized property suites (default 1)");
  app.add_option("--workers", opt.workers, "worker threads for per-N sweep fan-out")
      ->check(CLI::PositiveNumber);
  app.add_option("--tolerance-scale", opt.tolerance_scale,
                 "multiplies every identity tolerance");

  auto* converge = app.add_subcommand("converge", "convergence sweep of the boundary method");
  auto* identities = app.add_subcommand("identities", "numerical identity suite");
  auto* simulate = app.add_subcommand("simulate", "combined dynamic vortex method");
  auto* field = app.add_subcommand("field", "sample velocity fields on a grid or circle");
  auto* hilbert = app.add_subcommand("hilbert", "circular Hilbert transform of sampled data");
  // the flags above are global; let them appear after the subcommand too
  for (auto* sub : {converge, identities, simulate, field, hilbert}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error_json(vpanel::cli::kExitInvalidInput, e.what());
    return vpanel::cli::kExitInvalidInput;
  }

  try {
    if (converge->parsed()) return vpanel::cli::cmd_converge(opt);
    if (identities->parsed()) return vpanel::cli::cmd_identities(opt);
    if (simulate->parsed()) return vpanel::cli::cmd_simulate(opt);
    if (field->parsed()) return vpanel::cli::cmd_field(opt);
    if (hilbert->parsed()) return vpanel::cli::cmd_hilbert(opt);
    print_error_json(vpanel::cli::kExitInvalidInput, "no subcommand given");
    return vpanel::cli::kExitInvalidInput;
  } catch (const vpanel::cli::SchemaError& e) {
    print_error_json(vpanel::cli::kExitInvalidInput, e.what());
    return vpanel::cli::kExitInvalidInput;
  } catch (const std::invalid_argument& e) {
    print_error_json(vpanel::cli::kExitInvalidInput, e.what());
    return vpanel::cli::kExitInvalidInput;
  } catch (const std::exception& e) {
    print_error_json(vpanel::cli::kExitRuntimeAbort, e.what());
    return vpanel::cli::kExitRuntimeAbort;
  }
}
