#pragma once

#include <cstdint>
#include <string>

#include "run_config.hpp"

namespace vpanel::cli {

struct GlobalOptions {
  std::string config_path;
  std::string out_path;  // empty = stdout
  std::uint64_t seed = kDefaultSeed;
  int workers = 1;
  double tolerance_scale = 1.0;
};

// exit codes shared by every command
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitRuntimeAbort = 3;

int cmd_converge(const GlobalOptions& opt);
int cmd_identities(const GlobalOptions& opt);
int cmd_simulate(const GlobalOptions& opt);
int cmd_field(const GlobalOptions& opt);
int cmd_hilbert(const GlobalOptions& opt);

// stderr logging gated by VORTEX_PANEL_LOG (quiet | info | debug)
void log_info(const std::string& msg);
void log_debug(const std::string& msg);

// 17 significant digits, scientific, locale independent
std::string format_number(double v);

}  // namespace vpanel::cli
