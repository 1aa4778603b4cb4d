#pragma once

#include <stdexcept>
#include <string>

namespace trigva {

// Invalid argument combinations (kind mismatch, n = 0 weight, bad config).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Arithmetic outside the field, e.g. inverting zero.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A denominator vanished under specialization; `factor` names the culprit.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, std::string factor)
      : std::runtime_error(what), factor_(std::move(factor)) {}
  const std::string& factor() const noexcept { return factor_; }

 private:
  std::string factor_;
};

// An index left the configured interval; the caller should widen it.
class WideningRequired : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace trigva
