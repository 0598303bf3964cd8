#pragma once

#include <compare>
#include <string>

#include "steinitz/arith.hpp"
#include "steinitz/rational.hpp"

namespace steinitz {

// Exact real number (x + y*sqrt(d)) / z with integers x, y >= 0, z > 0 and
// d squarefree. Rationals are stored with y == 0 and d == 1. All order
// comparisons, including between different radicands, are decided with
// integer arithmetic only.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;  // zero

  static QuadraticNumber rational(const BigInt& num, const BigInt& den = 1);
  static QuadraticNumber rational(const PositiveRational& q) { return rational(q.num(), q.den()); }
  // Throws std::domain_error for y < 0, z <= 0 or d < 1. Square factors of d
  // are moved into y; a square d yields a rational.
  static QuadraticNumber surd(const BigInt& x, const BigInt& y, const BigInt& d, const BigInt& z);

  bool is_rational() const noexcept { return y_ == 0; }

  const BigInt& x() const noexcept { return x_; }
  const BigInt& y() const noexcept { return y_; }
  const BigInt& radicand() const noexcept { return d_; }
  const BigInt& z() const noexcept { return z_; }

  // Rational parts; only meaningful when is_rational().
  const BigInt& numerator() const noexcept { return x_; }
  const BigInt& denominator() const noexcept { return z_; }

  // this * num / den for den > 0, num >= 0.
  QuadraticNumber scaled(const BigInt& num, const BigInt& den) const;
  QuadraticNumber scaled(const PositiveRational& q) const { return scaled(q.num(), q.den()); }

  BigInt floor() const;
  bool is_integer() const { return is_rational() && z_ == 1; }
  int sign() const;

  // "u", "u/v" or "(x+y*sqrt(d))/z".
  std::string str() const;

  friend bool operator==(const QuadraticNumber&, const QuadraticNumber&) = default;
  friend std::strong_ordering operator<=>(const QuadraticNumber& a, const QuadraticNumber& b);

 private:
  void normalize();

  BigInt x_ = 0;
  BigInt y_ = 0;
  BigInt d_ = 1;
  BigInt z_ = 1;
};

// sign(a + b*sqrt(d)) for squarefree d >= 2 (or b == 0).
int sign_of_surd(const BigInt& a, const BigInt& b, const BigInt& d);

// Density of a saturated set at a base: a real r >= 1 that is rational or a
// quadratic surd, or Infinity.
class DensityBound {
 public:
  enum class Kind { Rational, Surd, Infinity };

  // Throws std::domain_error if value < 1.
  explicit DensityBound(QuadraticNumber value);

  static DensityBound infinity() { return DensityBound(); }
  static DensityBound rational(const BigInt& num, const BigInt& den = 1) {
    return DensityBound(QuadraticNumber::rational(num, den));
  }
  static DensityBound surd(const BigInt& x, const BigInt& y, const BigInt& d, const BigInt& z) {
    return DensityBound(QuadraticNumber::surd(x, y, d, z));
  }

  Kind kind() const noexcept;
  bool is_infinite() const noexcept { return infinite_; }
  // Throws std::logic_error on Infinity.
  const QuadraticNumber& value() const;

  // QuadraticNumber::str(), or "inf".
  std::string str() const;

  friend bool operator==(const DensityBound&, const DensityBound&) = default;
  friend std::strong_ordering operator<=>(const DensityBound& a, const DensityBound& b);

 private:
  DensityBound() : infinite_(true) {}

  bool infinite_ = false;
  QuadraticNumber value_;
};

}  // namespace steinitz
