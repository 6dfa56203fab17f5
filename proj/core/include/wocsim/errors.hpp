#pragma once

#include <stdexcept>
#include <string>

namespace wocsim {

// Bad user input (config file, CLI values). CLI exit code 1.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A runtime invariant was violated mid-run. CLI exit code 2.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace wocsim
