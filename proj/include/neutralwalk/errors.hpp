#pragma once

#include <stdexcept>
#include <string>

namespace neutralwalk {

// Invalid structural input (dimension mismatch, broken allocation, ...).
class StructuralError : public std::runtime_error {
 public:
  explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

// Bad parameter or configuration value.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Output file could not be written.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace neutralwalk
