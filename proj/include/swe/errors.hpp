#ifndef SWE_ERRORS_HPP
#define SWE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace swe {

/// Input data violates the assumptions the case analysis is built on
/// (wrong quadrant, missing stationary contact, ...). CLI maps this to exit 2.
class UnsupportedConfiguration : public std::runtime_error {
  public:
    explicit UnsupportedConfiguration(const std::string& what) : std::runtime_error(what) {}
};

/// A solver failed to converge or to bracket a root. Carries the bracket
/// that was searched so the caller can diagnose. CLI maps this to exit 1.
class NumericalFailure : public std::runtime_error {
  public:
    NumericalFailure(const std::string& what, double lo, double hi)
        : std::runtime_error(what + " [bracket " + std::to_string(lo) + ", " + std::to_string(hi) + "]"),
          bracket_lo(lo),
          bracket_hi(hi) {}
    explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
};

}  // namespace swe

#endif  // SWE_ERRORS_HPP
