#include "checkers/amplitude.hpp"

#include <cmath>

namespace checkers {

double scaled_to_double(const BigInt& value, long long shift) {
  if (value == 0) {
    return 0.0;
  }
  BigInt mag = abs(value);
  const long long bits = static_cast<long long>(msb(mag)) + 1;
  long long extra = 0;
  if (bits > 62) {
    extra = bits - 62;
    mag >>= extra;
  }
  double mant = mag.convert_to<double>();
  if (value < 0) {
    mant = -mant;
  }
  if (bits + shift > 1024) {
    throw OverflowError("scaled_to_double: exponent " + std::to_string(bits + shift) +
                        " exceeds double range");
  }
  // underflow flushes toward zero through denormals, which is acceptable
  return std::ldexp(mant, static_cast<int>(shift + extra));
}

DyadicRational::DyadicRational(BigInt num, long long exp) : num_(std::move(num)), exp_(exp) {
  if (num_ < 0) {
    throw DomainError("DyadicRational: negative numerator");
  }
  if (exp_ < 0) {
    throw DomainError("DyadicRational: negative exponent");
  }
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && bit_test(num_, 0) == 0) {
    num_ >>= 1;
    --exp_;
  }
}

std::string DyadicRational::to_string() const {
  if (exp_ == 0) {
    return num_.str();
  }
  return num_.str() + "/2^" + std::to_string(exp_);
}

DyadicRational operator+(const DyadicRational& a, const DyadicRational& b) {
  const long long e = std::max(a.exp_, b.exp_);
  return {(a.num_ << (e - a.exp_)) + (b.num_ << (e - b.exp_)), e};
}

DyadicRational operator-(const DyadicRational& a, const DyadicRational& b) {
  const long long e = std::max(a.exp_, b.exp_);
  BigInt n = (a.num_ << (e - a.exp_)) - (b.num_ << (e - b.exp_));
  if (n < 0) {
    throw DomainError("DyadicRational: subtraction below zero");
  }
  return {std::move(n), e};
}

DyadicRational operator*(const DyadicRational& a, const DyadicRational& b) {
  return {a.num_ * b.num_, a.exp_ + b.exp_};
}

bool operator<(const DyadicRational& a, const DyadicRational& b) {
  const long long e = std::max(a.exp_, b.exp_);
  return (a.num_ << (e - a.exp_)) < (b.num_ << (e - b.exp_));
}

HalfPowerAmplitude::HalfPowerAmplitude(GaussianInt g, long long k)
    : g_(std::move(g)), k_(k) {
  if (g_.is_zero()) {
    k_ = 0;
    return;
  }
  while (g_.divisible_by_two()) {
    g_ = g_.half();
    k_ -= 2;
  }
}

HalfPowerAmplitude operator+(const HalfPowerAmplitude& a, const HalfPowerAmplitude& b) {
  if (a.is_zero()) {
    return b;
  }
  if (b.is_zero()) {
    return a;
  }
  const long long diff = a.k_ - b.k_;
  if (diff & 1) {
    throw ParityMismatch("amp_add: scales " + std::to_string(a.k_) + " and " +
                         std::to_string(b.k_) + " differ by an odd power of sqrt(2)");
  }
  // lift the smaller-k operand onto the common scale max(ka, kb)
  if (diff >= 0) {
    return {a.g_ + b.g_.shifted_left(diff / 2), a.k_};
  }
  return {a.g_.shifted_left(-diff / 2) + b.g_, b.k_};
}

HalfPowerAmplitude operator*(const HalfPowerAmplitude& a, const HalfPowerAmplitude& b) {
  return {a.g_ * b.g_, a.k_ + b.k_};
}

HalfPowerAmplitude HalfPowerAmplitude::scaled_sqrt2(long long m) const {
  if (is_zero()) {
    return {};
  }
  return {g_, k_ - m};
}

HalfPowerAmplitude HalfPowerAmplitude::times_unit(Unit u) const {
  switch (u) {
    case Unit::One:
      return *this;
    case Unit::I:
      return {g_.times_i(), k_};
    case Unit::MinusOne:
      return {-g_, k_};
    case Unit::MinusI:
      return {g_.times_minus_i(), k_};
  }
  throw DomainError("times_unit: bad unit");
}

DyadicRational HalfPowerAmplitude::norm_sq() const {
  BigInt n = g_.norm();
  if (k_ >= 0) {
    return {std::move(n), k_};
  }
  return {n << (-k_), 0};
}

std::complex<double> HalfPowerAmplitude::to_complex() const {
  if (is_zero()) {
    return {0.0, 0.0};
  }
  // k = 2q + r with r in {0,1}: value = g * 2^-q * (r ? 1/sqrt(2) : 1)
  const bool odd = (k_ & 1) != 0;
  const long long q = odd ? (k_ - 1) / 2 : k_ / 2;
  double re = scaled_to_double(g_.re, -q);
  double im = scaled_to_double(g_.im, -q);
  if (odd) {
    re *= M_SQRT1_2;
    im *= M_SQRT1_2;
  }
  return {re, im};
}

std::string HalfPowerAmplitude::to_string() const {
  return g_.to_string() + "*2^(-" + std::to_string(k_) + "/2)";
}

}  // namespace checkers
