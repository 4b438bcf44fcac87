#pragma once

#include <stdexcept>
#include <string>

namespace adelic {

/// Input outside an operation's contract (rank, range, malformed data).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Evaluation at (or numerically on top of) a pole.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An iterative numerical method failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}

  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

}  // namespace adelic
