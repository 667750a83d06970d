#pragma once

#include <complex>
#include <string>

#include "checkers/errors.hpp"
#include "checkers/gaussian_int.hpp"

namespace checkers {

/// value * 2^shift as a double; exponent-aware so that integers far wider
/// than the double mantissa convert with relative error <= a few ulps.
double scaled_to_double(const BigInt& value, long long shift);

/// Exact nonnegative dyadic rational num / 2^exp.
///
/// Canonical form: num odd, or num == 0 with exp == 0, or exp == 0
/// (integers need no reduction). Every probability in the model lives here.
class DyadicRational {
 public:
  DyadicRational() = default;  // zero
  DyadicRational(BigInt num, long long exp);

  static DyadicRational zero() { return {}; }
  static DyadicRational one() { return {BigInt(1), 0}; }

  const BigInt& num() const { return num_; }
  long long exp() const { return exp_; }
  bool is_zero() const { return num_ == 0; }

  double to_double() const { return scaled_to_double(num_, -exp_); }
  std::string to_string() const;  // "num/2^exp"

  friend DyadicRational operator+(const DyadicRational& a, const DyadicRational& b);
  friend DyadicRational operator*(const DyadicRational& a, const DyadicRational& b);
  /// a - b; throws DomainError if the result would be negative.
  friend DyadicRational operator-(const DyadicRational& a, const DyadicRational& b);
  friend bool operator==(const DyadicRational& a, const DyadicRational& b) {
    return a.num_ == b.num_ && a.exp_ == b.exp_;
  }
  friend bool operator<(const DyadicRational& a, const DyadicRational& b);
  friend bool operator<=(const DyadicRational& a, const DyadicRational& b) {
    return !(b < a);
  }

 private:
  BigInt num_{0};
  long long exp_{0};
};

enum class Unit { One, I, MinusOne, MinusI };

/// Exact amplitude g * 2^(-k/2) with g a Gaussian integer and k a free
/// signed integer.
///
/// Canonical form: g == 0 with k == 0, or g not divisible by 2 in Z[i]
/// (both components even would allow g/2 with k-2 at the same value, so
/// reduction runs to a fixed point for any k; this keeps equality a plain
/// structural comparison).
class HalfPowerAmplitude {
 public:
  HalfPowerAmplitude() = default;  // zero
  HalfPowerAmplitude(GaussianInt g, long long k);

  static HalfPowerAmplitude zero() { return {}; }
  /// Real amplitude n * 2^(-k/2).
  static HalfPowerAmplitude real(long long n, long long k) {
    return {GaussianInt(n), k};
  }

  const GaussianInt& gauss() const { return g_; }
  long long half_exp() const { return k_; }
  bool is_zero() const { return g_.is_zero(); }

  /// Exact sum. Operands with different k are rescaled to the larger k;
  /// throws ParityMismatch when the two scales differ by an odd power of
  /// sqrt(2) (the model never produces such sums, so this is a bug trap).
  friend HalfPowerAmplitude operator+(const HalfPowerAmplitude& a,
                                      const HalfPowerAmplitude& b);
  friend HalfPowerAmplitude operator*(const HalfPowerAmplitude& a,
                                      const HalfPowerAmplitude& b);
  HalfPowerAmplitude operator-() const { return {-g_, k_}; }

  /// Multiply by 2^(m/2), i.e. k <- k - m.
  HalfPowerAmplitude scaled_sqrt2(long long m) const;
  HalfPowerAmplitude times_unit(Unit u) const;

  /// |g|^2 / 2^k as a canonical dyadic rational.
  DyadicRational norm_sq() const;
  std::complex<double> to_complex() const;

  friend bool operator==(const HalfPowerAmplitude& a, const HalfPowerAmplitude& b) {
    return a.k_ == b.k_ && a.g_ == b.g_;
  }

  std::string to_string() const;

 private:
  GaussianInt g_{};
  long long k_{0};
};

}  // namespace checkers
