#pragma once

#include <compare>
#include <map>
#include <string>

#include "steinitz/arith.hpp"

namespace steinitz {

// Positive rational in lowest terms.
class PositiveRational {
 public:
  PositiveRational() = default;
  PositiveRational(BigInt num, BigInt den = 1);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  bool is_integer() const { return den_ == 1; }

  // "u/v", or "u" when v == 1.
  std::string str() const;

  friend PositiveRational operator*(const PositiveRational& a, const PositiveRational& b);
  friend PositiveRational operator/(const PositiveRational& a, const PositiveRational& b);
  friend bool operator==(const PositiveRational&, const PositiveRational&) = default;
  friend std::strong_ordering operator<=>(const PositiveRational& a, const PositiveRational& b);

 private:
  BigInt num_ = 1;
  BigInt den_ = 1;
};

// A positive rational kept as a prime-exponent vector. Exponents are signed
// and never zero. Steinitz arithmetic produces ratios in this form directly,
// so nothing has to be refactored to test denominators against Omega(s).
class FactoredRatio {
 public:
  using ExponentMap = std::map<Prime, BigInt>;

  FactoredRatio() = default;
  explicit FactoredRatio(ExponentMap exponents);

  static FactoredRatio from_rational(const PositiveRational& q);

  const ExponentMap& exponents() const noexcept { return exponents_; }

  // Prime-power parts with positive (numerator) and negative (denominator)
  // exponents; the denominator map holds absolute values.
  ExponentMap numerator_exponents() const;
  ExponentMap denominator_exponents() const;

  BigInt numerator() const;
  BigInt denominator() const;
  PositiveRational value() const;

  bool is_one() const noexcept { return exponents_.empty(); }
  FactoredRatio inverse() const;

  friend FactoredRatio operator*(const FactoredRatio& a, const FactoredRatio& b);
  friend bool operator==(const FactoredRatio&, const FactoredRatio&) = default;

 private:
  ExponentMap exponents_;
};

}  // namespace steinitz
