#pragma once

#include <stdexcept>
#include <string>

namespace farey {

// Two computation routes disagreed; always an implementation bug.
class CrossCheckError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid user-facing configuration (CLI flags, incompatible options).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace farey
