#include "steinitz/rational.hpp"

#include <stdexcept>

namespace steinitz {

PositiveRational::PositiveRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_ <= 0 || den_ <= 0) {
    throw std::domain_error("positive rational expected, got " + num_.str() + "/" + den_.str());
  }
  BigInt g = gcd(num_, den_);
  num_ /= g;
  den_ /= g;
}

std::string PositiveRational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

PositiveRational operator*(const PositiveRational& a, const PositiveRational& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

PositiveRational operator/(const PositiveRational& a, const PositiveRational& b) {
  return {a.num_ * b.den_, a.den_ * b.num_};
}

std::strong_ordering operator<=>(const PositiveRational& a, const PositiveRational& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

FactoredRatio::FactoredRatio(ExponentMap exponents) {
  for (auto& [p, e] : exponents) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (e != 0) exponents_.emplace(p, std::move(e));
  }
}

FactoredRatio FactoredRatio::from_rational(const PositiveRational& q) {
  ExponentMap e;
  for (auto& [p, k] : factorize(q.num())) e[p] += k;
  for (auto& [p, k] : factorize(q.den())) e[p] -= k;
  return FactoredRatio(std::move(e));
}

FactoredRatio::ExponentMap FactoredRatio::numerator_exponents() const {
  ExponentMap out;
  for (const auto& [p, e] : exponents_) {
    if (e > 0) out.emplace(p, e);
  }
  return out;
}

FactoredRatio::ExponentMap FactoredRatio::denominator_exponents() const {
  ExponentMap out;
  for (const auto& [p, e] : exponents_) {
    if (e < 0) out.emplace(p, -e);
  }
  return out;
}

BigInt FactoredRatio::numerator() const {
  BigInt n = 1;
  for (const auto& [p, e] : exponents_) {
    if (e > 0) n *= power(p, e);
  }
  return n;
}

BigInt FactoredRatio::denominator() const {
  BigInt d = 1;
  for (const auto& [p, e] : exponents_) {
    if (e < 0) d *= power(p, -e);
  }
  return d;
}

PositiveRational FactoredRatio::value() const { return {numerator(), denominator()}; }

FactoredRatio FactoredRatio::inverse() const {
  ExponentMap e;
  for (const auto& [p, k] : exponents_) e.emplace(p, -k);
  FactoredRatio out;
  out.exponents_ = std::move(e);
  return out;
}

FactoredRatio operator*(const FactoredRatio& a, const FactoredRatio& b) {
  FactoredRatio out = a;
  for (const auto& [p, k] : b.exponents_) {
    BigInt& slot = out.exponents_[p];
    slot += k;
    if (slot == 0) out.exponents_.erase(p);
  }
  return out;
}

}  // namespace steinitz
