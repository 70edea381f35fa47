#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace whitham {

/// Raised when a symbol or state takes a non-finite value.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A pointwise precondition failed (e.g. a non-positive elevation sample).
class DomainError : public std::domain_error {
 public:
  DomainError(const std::string& what, std::ptrdiff_t index)
      : std::domain_error(what), index_(index) {}

  /// Grid index of the first offending sample, or -1 when not pointwise.
  std::ptrdiff_t index() const noexcept { return index_; }

 private:
  std::ptrdiff_t index_;
};

/// No admissibility constant mu exists for the given data.
class AdmissibilityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The coefficient state V left the admissible set during a linear solve.
class AssumptionViolated : public std::runtime_error {
 public:
  AssumptionViolated(const std::string& what, double time)
      : std::runtime_error(what), time_(time) {}
  double time() const noexcept { return time_; }

 private:
  double time_;
};

enum class BlowUpReason { non_finite, admissibility_floor };

/// Time integration stopped: non-finite samples or the elevation floor was hit.
class BlowUpError : public std::runtime_error {
 public:
  BlowUpError(const std::string& what, BlowUpReason reason, double last_valid_time,
              double max_slope)
      : std::runtime_error(what),
        reason_(reason),
        last_valid_time_(last_valid_time),
        max_slope_(max_slope) {}

  BlowUpReason reason() const noexcept { return reason_; }
  double last_valid_time() const noexcept { return last_valid_time_; }
  /// max over [0, last_valid_time] of max_x |d/dx u|.
  double max_slope() const noexcept { return max_slope_; }

 private:
  BlowUpReason reason_;
  double last_valid_time_;
  double max_slope_;
};

}  // namespace whitham
