#pragma once

#include <stdexcept>
#include <string>

namespace ahlfors {

// Error taxonomy, one type per CLI exit code (usage errors come out of the
// argument parser as std::invalid_argument).
struct geometry_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct solver_error : std::runtime_error {
  explicit solver_error(const std::string& msg, double cond = 0.0)
      : std::runtime_error(msg), condition_estimate(cond) {}
  double condition_estimate;  // 0 when no estimate is available
};

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ahlfors
