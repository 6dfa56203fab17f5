#pragma once

#include <string>
#include <vector>

#include "wocsim/harness.hpp"

namespace wocsim {

// RunConfig plus the sweep grids, as loaded from a config file.
struct LoadedConfig {
  RunConfig run;
  std::vector<int> lambda_grid{1, 5, 20};
  std::vector<double> rho_grid{10.0, 100.0};
  std::vector<double> eta_grid{0.0, 0.1, 0.25, 0.5, 1.0};
};

// Flat key = value text format, '#' comments, blank lines ignored. Every key
// mirrors a RunConfig field (see README for the full list); unknown keys are
// hard errors.
LoadedConfig parse_config(const std::string& text);
LoadedConfig load_config_file(const std::string& path);

// Applies a single key=value pair; shared by the parser and CLI overrides.
void apply_config_key(LoadedConfig& config, const std::string& key,
                      const std::string& value);

}  // namespace wocsim
