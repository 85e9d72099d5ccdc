#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vpanel/fields.hpp"

namespace vpanel::cli {

using nlohmann::json;

// invalid config content; maps to exit code 2
struct SchemaError : std::runtime_error {
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr int kSchemaVersion = 1;
inline constexpr std::uint64_t kDefaultSeed = 1;

struct EvalCircle {
  double radius = 1.5;
  int points = 360;
};

struct ConvergeConfig {
  std::vector<int> n_list;
  EvalCircle eval_circle;
  std::optional<std::pair<double, double>> slope_band;
};

struct IdentitiesConfig {
  std::vector<int> sizes{2, 16, 256};
};

struct SimulateConfig {
  int n_boundary = 64;
  double dt = 1e-3;
  long steps = 0;
  double blob_delta = 0.0;
  long record_every = 1;
};

struct GridSpec {
  double x_min = -3, x_max = 3;
  double y_min = -3, y_max = 3;
  int nx = 5, ny = 5;
};

struct FieldConfig {
  int n_boundary = 64;
  std::vector<std::string> fields;  // u_P, u_R, u_app, diff_app_R
  std::optional<GridSpec> grid;
  std::optional<EvalCircle> circle;
};

struct HilbertConfig {
  std::string mode = "spectral";     // spectral | pv
  std::string grid_kind = "node";    // node | midpoint (spectral only; pv is node in)
  std::vector<double> values;        // inline samples
  std::string input;                 // or a CSV path, one value per line
};

struct RunConfig {
  std::string command;
  VorticityConfig vorticity;
  std::optional<ConvergeConfig> converge;
  std::optional<IdentitiesConfig> identities;
  std::optional<SimulateConfig> simulate;
  std::optional<FieldConfig> field;
  std::optional<HilbertConfig> hilbert;
};

// parses and validates the file for the given command; throws SchemaError on
// unknown keys, missing sections, or malformed values
RunConfig load_run_config(const std::string& path, const std::string& command);

}  // namespace vpanel::cli
