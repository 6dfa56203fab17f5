#include "wocsim/config_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "wocsim/errors.hpp"

namespace wocsim {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int to_int(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    int x = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("bad integer for '" + key + "': " + v);
  }
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("bad number for '" + key + "': " + v);
  }
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "on") return true;
  if (v == "false" || v == "0" || v == "off") return false;
  throw ConfigError("bad boolean for '" + key + "': " + v);
}

std::vector<std::string> split(const std::string& v, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(trim(item));
  return parts;
}

std::vector<int> int_list(const std::string& key, const std::string& v) {
  std::vector<int> out;
  for (const auto& p : split(v, ',')) out.push_back(to_int(key, p));
  return out;
}

std::vector<double> double_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  for (const auto& p : split(v, ',')) out.push_back(to_double(key, p));
  return out;
}

// quality.<level>.<field>
bool apply_quality_key(QualityConfig& q, const std::string& key,
                       const std::string& value) {
  auto parts = split(key, '.');
  if (parts.size() != 3 || parts[0] != "quality") return false;
  QualityLevel* level = nullptr;
  if (parts[1] == "high") level = &q.high;
  else if (parts[1] == "medium") level = &q.medium;
  else if (parts[1] == "low") level = &q.low;
  else throw ConfigError("unknown quality level '" + parts[1] + "'");
  const std::string& f = parts[2];
  if (f == "noise_sd") level->noise_sd = to_double(key, value);
  else if (f == "bias") level->bias = to_double(key, value);
  else if (f == "n_points") level->n_points = to_int(key, value);
  else if (f == "outliers") level->outlier_count = to_int(key, value);
  else if (f == "nonlinear") level->nonlinear = to_bool(key, value);
  else throw ConfigError("unknown quality field '" + f + "'");
  return true;
}

}  // namespace

void apply_config_key(LoadedConfig& config, const std::string& key,
                      const std::string& value) {
  RunConfig& run = config.run;
  if (key == "condition") run.condition = parse_condition(value);
  else if (key == "agents") run.agents = to_int(key, value);
  else if (key == "rounds") run.rounds = to_int(key, value);
  else if (key == "kappa") run.kappa = to_int(key, value);
  else if (key == "self_weight") run.self_weight = to_int(key, value);
  else if (key == "lambda") run.lambda = to_int(key, value);
  else if (key == "eta") run.eta = to_double(key, value);
  else if (key == "rho") {
    run.shock = ShockSchedule::bernoulli(to_double(key, value));
  } else if (key == "shock_mode") {
    if (value == "deterministic")
      run.shock.mode = ShockSchedule::Mode::Deterministic;
    else if (value == "bernoulli")
      run.shock.mode = ShockSchedule::Mode::Bernoulli;
    else
      throw ConfigError("shock_mode must be deterministic or bernoulli");
  } else if (key == "shock_rounds") {
    auto rounds = value.empty() ? std::vector<int>{} : int_list(key, value);
    auto mode = run.shock.mode;
    double rho = run.shock.rho;
    run.shock = ShockSchedule::deterministic(rounds);
    run.shock.mode = mode;
    run.shock.rho = rho;
  } else if (key == "shock_rho") {
    if (to_double(key, value) < 1.0) throw ConfigError("shock_rho must be >= 1");
    run.shock.rho = to_double(key, value);
  } else if (key == "signal_channel") {
    run.signal_channel = parse_signal_channel(value);
  } else if (key == "truth_lo") run.truth_lo = to_double(key, value);
  else if (key == "truth_hi") run.truth_hi = to_double(key, value);
  else if (key == "centralization_mode") {
    if (value == "binary") run.centralization_mode = CentralizationMode::Binary;
    else if (value == "shares")
      run.centralization_mode = CentralizationMode::Shares;
    else
      throw ConfigError("centralization_mode must be binary or shares");
  } else if (key == "degroot_stages") run.degroot_stages = to_int(key, value);
  else if (key == "rewiring") run.rewiring_enabled = to_bool(key, value);
  else if (key == "self_attachment") run.self_attachment = to_bool(key, value);
  else if (key == "seed") {
    try {
      run.seed = std::stoull(value);
    } catch (const std::exception&) {
      throw ConfigError("bad seed: " + value);
    }
  } else if (key == "replications") run.replications = to_int(key, value);
  else if (key == "lambda_grid") config.lambda_grid = int_list(key, value);
  else if (key == "rho_grid") config.rho_grid = double_list(key, value);
  else if (key == "eta_grid") config.eta_grid = double_list(key, value);
  else if (!apply_quality_key(run.quality, key, value))
    throw ConfigError("unknown config key '" + key + "'");
}

LoadedConfig parse_config(const std::string& text) {
  LoadedConfig config;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) +
                        ": expected key = value");
    apply_config_key(config, trim(line.substr(0, eq)),
                     trim(line.substr(eq + 1)));
  }
  return config;
}

LoadedConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace wocsim
