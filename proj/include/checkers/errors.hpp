#pragma once

#include <stdexcept>
#include <string>

namespace checkers {

/// Addition of two half-power amplitudes whose scales differ by an odd
/// power of sqrt(2); the sum would leave the ring.
struct ParityMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Conversion to double exceeded the representable exponent range.
struct OverflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exhaustive path enumeration was requested beyond the configured cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An argument violates the validity range of an identity or path map.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// No closed-form series is known for the requested absorption line.
struct UnsupportedLine : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace checkers
