#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

namespace checkers {

using BigInt = boost::multiprecision::cpp_int;

/// Exact Gaussian integer re + im*i. Closed under addition and
/// multiplication; no rounding ever occurs.
struct GaussianInt {
  BigInt re{0};
  BigInt im{0};

  GaussianInt() = default;
  GaussianInt(BigInt r, BigInt i) : re(std::move(r)), im(std::move(i)) {}
  explicit GaussianInt(long long r) : re(r) {}

  bool is_zero() const { return re == 0 && im == 0; }

  // divisible by 2 in Z[i] <=> both components even
  bool divisible_by_two() const { return bit_test(re, 0) == 0 && bit_test(im, 0) == 0; }
  GaussianInt half() const { return {re >> 1, im >> 1}; }
  GaussianInt doubled() const { return {re << 1, im << 1}; }
  GaussianInt shifted_left(long long bits) const { return {re << bits, im << bits}; }

  BigInt norm() const { return re * re + im * im; }

  GaussianInt times_i() const { return {-im, re}; }
  GaussianInt times_minus_i() const { return {im, -re}; }
  GaussianInt conj() const { return {re, -im}; }

  friend GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) {
    return {a.re - b.re, a.im - b.im};
  }
  GaussianInt operator-() const { return {-re, -im}; }
  friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
    return a.re == b.re && a.im == b.im;
  }

  std::string to_string() const {
    return "(" + re.str() + (im < 0 ? "" : "+") + im.str() + "i)";
  }
};

inline GaussianInt gaussian_i() { return {0, 1}; }

}  // namespace checkers
