#include "run_config.hpp"

#include <fstream>
#include <set>

namespace vpanel::cli {

namespace {

void require_keys(const json& obj, const std::string& where,
                  const std::set<std::string>& allowed,
                  const std::set<std::string>& required = {}) {
  if (!obj.is_object()) {
    throw SchemaError("'" + where + "' must be a JSON object");
  }
  for (const auto& item : obj.items()) {
    if (!allowed.count(item.key())) {
      throw SchemaError("unknown key '" + item.key() + "' in '" + where + "'");
    }
  }
  for (const auto& key : required) {
    if (!obj.contains(key)) {
      throw SchemaError("missing key '" + key + "' in '" + where + "'");
    }
  }
}

double get_number(const json& obj, const std::string& where, const std::string& key) {
  if (!obj.at(key).is_number()) {
    throw SchemaError("'" + where + "." + key + "' must be a number");
  }
  return obj.at(key).get<double>();
}

int get_int(const json& obj, const std::string& where, const std::string& key) {
  if (!obj.at(key).is_number_integer()) {
    throw SchemaError("'" + where + "." + key + "' must be an integer");
  }
  return obj.at(key).get<int>();
}

Point2 get_point(const json& arr, const std::string& where) {
  if (!arr.is_array() || arr.size() != 2 || !arr[0].is_number() || !arr[1].is_number()) {
    throw SchemaError("'" + where + "' must be an array of two numbers");
  }
  return {arr[0].get<double>(), arr[1].get<double>()};
}

VorticityConfig parse_vorticity(const json& v) {
  require_keys(v, "vorticity", {"gamma", "vortices", "blobs"});
  VorticityConfig cfg;
  if (v.contains("gamma")) cfg.gamma = get_number(v, "vorticity", "gamma");
  if (v.contains("vortices")) {
    if (!v["vortices"].is_array()) throw SchemaError("'vorticity.vortices' must be an array");
    for (const auto& pv : v["vortices"]) {
      require_keys(pv, "vorticity.vortices[]", {"position", "strength"},
                   {"position", "strength"});
      cfg.vortices.push_back({get_point(pv["position"], "vorticity.vortices[].position"),
                              get_number(pv, "vorticity.vortices[]", "strength")});
    }
  }
  if (v.contains("blobs")) {
    if (!v["blobs"].is_array()) throw SchemaError("'vorticity.blobs' must be an array");
    for (const auto& bj : v["blobs"]) {
      require_keys(bj, "vorticity.blobs[]", {"center", "support_radius", "kind", "total_mass"},
                   {"center", "support_radius", "total_mass"});
      const Point2 c = get_point(bj["center"], "vorticity.blobs[].center");
      const double r = get_number(bj, "vorticity.blobs[]", "support_radius");
      const double m = get_number(bj, "vorticity.blobs[]", "total_mass");
      std::string kind = "uniform";
      if (bj.contains("kind")) {
        if (!bj["kind"].is_string()) throw SchemaError("'vorticity.blobs[].kind' must be a string");
        kind = bj["kind"].get<std::string>();
      }
      if (r <= 0.0) throw SchemaError("'vorticity.blobs[].support_radius' must be positive");
      if (kind == "uniform") {
        cfg.blobs.push_back(uniform_blob(c, r, m));
      } else if (kind == "parabolic") {
        cfg.blobs.push_back(parabolic_blob(c, r, m));
      } else {
        throw SchemaError("'vorticity.blobs[].kind' must be 'uniform' or 'parabolic'");
      }
    }
  }
  return cfg;
}

EvalCircle parse_eval_circle(const json& c, const std::string& where) {
  require_keys(c, where, {"radius", "points"}, {"radius", "points"});
  EvalCircle ec;
  ec.radius = get_number(c, where, "radius");
  ec.points = get_int(c, where, "points");
  if (ec.radius <= 1.0) throw SchemaError("'" + where + ".radius' must exceed 1");
  if (ec.points < 1) throw SchemaError("'" + where + ".points' must be positive");
  return ec;
}

ConvergeConfig parse_converge(const json& c) {
  require_keys(c, "converge", {"n_list", "eval_circle", "slope_band"}, {"n_list"});
  ConvergeConfig cc;
  if (!c["n_list"].is_array() || c["n_list"].empty()) {
    throw SchemaError("'converge.n_list' must be a nonempty array of integers");
  }
  for (const auto& n : c["n_list"]) {
    if (!n.is_number_integer()) throw SchemaError("'converge.n_list' entries must be integers");
    cc.n_list.push_back(n.get<int>());
  }
  if (c.contains("eval_circle")) {
    cc.eval_circle = parse_eval_circle(c["eval_circle"], "converge.eval_circle");
  }
  if (c.contains("slope_band")) {
    const auto& b = c["slope_band"];
    if (!b.is_array() || b.size() != 2 || !b[0].is_number() || !b[1].is_number()) {
      throw SchemaError("'converge.slope_band' must be an array of two numbers");
    }
    cc.slope_band = {{b[0].get<double>(), b[1].get<double>()}};
  }
  return cc;
}

IdentitiesConfig parse_identities(const json& c) {
  require_keys(c, "identities", {"sizes"});
  IdentitiesConfig ic;
  if (c.contains("sizes")) {
    if (!c["sizes"].is_array() || c["sizes"].empty()) {
      throw SchemaError("'identities.sizes' must be a nonempty array of integers");
    }
    ic.sizes.clear();
    for (const auto& n : c["sizes"]) {
      if (!n.is_number_integer()) throw SchemaError("'identities.sizes' entries must be integers");
      ic.sizes.push_back(n.get<int>());
    }
  }
  return ic;
}

SimulateConfig parse_simulate(const json& c) {
  require_keys(c, "simulate", {"n_boundary", "dt", "steps", "blob_delta", "record_every"},
               {"n_boundary", "dt", "steps"});
  SimulateConfig sc;
  sc.n_boundary = get_int(c, "simulate", "n_boundary");
  sc.dt = get_number(c, "simulate", "dt");
  if (!c.at("steps").is_number_integer()) {
    throw SchemaError("'simulate.steps' must be an integer");
  }
  sc.steps = c.at("steps").get<long>();
  if (c.contains("blob_delta")) sc.blob_delta = get_number(c, "simulate", "blob_delta");
  if (c.contains("record_every")) {
    if (!c["record_every"].is_number_integer()) {
      throw SchemaError("'simulate.record_every' must be an integer");
    }
    sc.record_every = c["record_every"].get<long>();
    if (sc.record_every < 1) throw SchemaError("'simulate.record_every' must be >= 1");
  }
  if (sc.n_boundary < 2) throw SchemaError("'simulate.n_boundary' must be >= 2");
  if (sc.dt <= 0.0) throw SchemaError("'simulate.dt' must be positive");
  if (sc.steps < 0) throw SchemaError("'simulate.steps' must be nonnegative");
  if (sc.blob_delta < 0.0) throw SchemaError("'simulate.blob_delta' must be nonnegative");
  return sc;
}

FieldConfig parse_field(const json& c) {
  require_keys(c, "field", {"n_boundary", "fields", "grid", "circle"}, {"fields"});
  FieldConfig fc;
  if (c.contains("n_boundary")) fc.n_boundary = get_int(c, "field", "n_boundary");
  if (fc.n_boundary < 2) throw SchemaError("'field.n_boundary' must be >= 2");
  if (!c["fields"].is_array() || c["fields"].empty()) {
    throw SchemaError("'field.fields' must be a nonempty array of strings");
  }
  for (const auto& f : c["fields"]) {
    if (!f.is_string()) throw SchemaError("'field.fields' entries must be strings");
    const std::string name = f.get<std::string>();
    if (name != "u_P" && name != "u_R" && name != "u_app" && name != "diff_app_R") {
      throw SchemaError("unknown field '" + name + "'; expected u_P, u_R, u_app, diff_app_R");
    }
    fc.fields.push_back(name);
  }
  if (c.contains("grid") == c.contains("circle")) {
    throw SchemaError("'field' needs exactly one of 'grid' or 'circle'");
  }
  if (c.contains("grid")) {
    const auto& g = c["grid"];
    require_keys(g, "field.grid", {"x_min", "x_max", "y_min", "y_max", "nx", "ny"},
                 {"x_min", "x_max", "y_min", "y_max", "nx", "ny"});
    GridSpec gs;
    gs.x_min = get_number(g, "field.grid", "x_min");
    gs.x_max = get_number(g, "field.grid", "x_max");
    gs.y_min = get_number(g, "field.grid", "y_min");
    gs.y_max = get_number(g, "field.grid", "y_max");
    gs.nx = get_int(g, "field.grid", "nx");
    gs.ny = get_int(g, "field.grid", "ny");
    if (gs.nx < 1 || gs.ny < 1) throw SchemaError("'field.grid' sample counts must be positive");
    fc.grid = gs;
  } else {
    fc.circle = parse_eval_circle(c["circle"], "field.circle");
  }
  return fc;
}

HilbertConfig parse_hilbert(const json& c) {
  require_keys(c, "hilbert", {"mode", "grid_kind", "values", "input"});
  HilbertConfig hc;
  if (c.contains("mode")) {
    if (!c["mode"].is_string()) throw SchemaError("'hilbert.mode' must be a string");
    hc.mode = c["mode"].get<std::string>();
    if (hc.mode != "spectral" && hc.mode != "pv") {
      throw SchemaError("'hilbert.mode' must be 'spectral' or 'pv'");
    }
  }
  if (c.contains("grid_kind")) {
    if (!c["grid_kind"].is_string()) throw SchemaError("'hilbert.grid_kind' must be a string");
    hc.grid_kind = c["grid_kind"].get<std::string>();
    if (hc.grid_kind != "node" && hc.grid_kind != "midpoint") {
      throw SchemaError("'hilbert.grid_kind' must be 'node' or 'midpoint'");
    }
  }
  if (c.contains("values") == c.contains("input")) {
    throw SchemaError("'hilbert' needs exactly one of 'values' or 'input'");
  }
  if (c.contains("values")) {
    if (!c["values"].is_array()) throw SchemaError("'hilbert.values' must be an array");
    for (const auto& v : c["values"]) {
      if (!v.is_number()) throw SchemaError("'hilbert.values' entries must be numbers");
      hc.values.push_back(v.get<double>());
    }
  } else {
    if (!c["input"].is_string()) throw SchemaError("'hilbert.input' must be a string path");
    hc.input = c["input"].get<std::string>();
  }
  return hc;
}

}  // namespace

RunConfig load_run_config(const std::string& path, const std::string& command) {
  std::ifstream in(path);
  if (!in) {
    throw SchemaError("cannot open config file '" + path + "'");
  }
  json root;
  try {
    root = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("config is not valid JSON: ") + e.what());
  }

  require_keys(root, "config",
               {"schema_version", "vorticity", "converge", "identities", "simulate", "field",
                "hilbert"},
               {"schema_version"});
  if (!root["schema_version"].is_number_integer() ||
      root["schema_version"].get<int>() != kSchemaVersion) {
    throw SchemaError("unsupported schema_version; expected " + std::to_string(kSchemaVersion));
  }

  RunConfig rc;
  rc.command = command;
  if (root.contains("vorticity")) rc.vorticity = parse_vorticity(root["vorticity"]);

  if (!root.contains(command)) {
    throw SchemaError("config lacks the '" + command + "' section");
  }
  if (command == "converge") rc.converge = parse_converge(root["converge"]);
  else if (command == "identities") rc.identities = parse_identities(root["identities"]);
  else if (command == "simulate") rc.simulate = parse_simulate(root["simulate"]);
  else if (command == "field") rc.field = parse_field(root["field"]);
  else if (command == "hilbert") rc.hilbert = parse_hilbert(root["hilbert"]);
  else throw SchemaError("unknown command '" + command + "'");

  return rc;
}

}  // namespace vpanel::cli
