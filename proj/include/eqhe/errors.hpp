#pragma once

#include <stdexcept>
#include <string>

namespace eqhe {

// Input outside the mathematical domain of an operation (T <= 0, C >= 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A cycle or sweep configuration that violates its invariants.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace eqhe
