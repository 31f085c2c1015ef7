#pragma once

#include <stdexcept>
#include <string>

namespace bgcf {

/// Invalid user input: malformed files, inconsistent shapes, structural
/// violations. Maps to CLI exit code 1.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string &msg) : std::runtime_error(msg) {}
};

/// Numerical failure inside an otherwise valid computation: non-PD matrices,
/// optimizer breakdown, corrupted sampler state. Maps to CLI exit code 2.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string &msg) : std::runtime_error(msg) {}
};

}  // namespace bgcf
