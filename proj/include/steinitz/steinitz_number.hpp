#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "steinitz/arith.hpp"
#include "steinitz/rational.hpp"

namespace steinitz {

// A value in {0, 1, 2, ...} or Infinity. Arithmetic saturates at Infinity.
class ExtendedNatural {
 public:
  ExtendedNatural() = default;
  ExtendedNatural(BigInt value);  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  ExtendedNatural(T value) : ExtendedNatural(BigInt(value)) {}  // NOLINT

  static ExtendedNatural infinity() {
    ExtendedNatural e;
    e.infinite_ = true;
    return e;
  }

  bool is_infinite() const noexcept { return infinite_; }
  bool is_zero() const noexcept { return !infinite_ && value_ == 0; }

  // Throws std::logic_error on Infinity.
  const BigInt& value() const;

  // Infinity - k == Infinity; throws std::domain_error when the result
  // would be negative.
  ExtendedNatural minus(const BigInt& k) const;

  // Decimal digits or "inf".
  std::string str() const;

  friend ExtendedNatural operator+(const ExtendedNatural& a, const ExtendedNatural& b);
  friend bool operator==(const ExtendedNatural& a, const ExtendedNatural& b);
  friend std::strong_ordering operator<=>(const ExtendedNatural& a, const ExtendedNatural& b);

 private:
  bool infinite_ = false;
  BigInt value_ = 0;
};

using Exponent = ExtendedNatural;

inline const ExtendedNatural& max(const ExtendedNatural& a, const ExtendedNatural& b) { return a < b ? b : a; }
inline const ExtendedNatural& min(const ExtendedNatural& a, const ExtendedNatural& b) { return a < b ? a : b; }

// Steinitz number prod_p p^{r_p} in cofinite presentation: every prime not
// listed in `exceptions` carries `default_exponent`. The presentation is kept
// minimal, so equal numbers compare equal member-wise.
class SteinitzNumber {
 public:
  using ExponentMap = std::map<Prime, Exponent>;

  // The number 1.
  SteinitzNumber() = default;

  // Throws std::invalid_argument if a key is not prime.
  SteinitzNumber(Exponent default_exponent, ExponentMap exceptions);

  static SteinitzNumber from_natural(const BigInt& n);
  static SteinitzNumber prime_power(Prime p, Exponent e);
  // P^e: exponent e at every prime.
  static SteinitzNumber uniform(Exponent e);

  const Exponent& default_exponent() const noexcept { return default_; }
  const ExponentMap& exceptions() const noexcept { return exceptions_; }

  Exponent valuation(Prime p) const;

  bool is_natural() const;
  bool is_infinite() const { return !is_natural(); }
  bool is_infinity_free() const;

  std::optional<BigInt> as_natural() const;

  // Canonical text form, see format().
  std::string str() const;

  friend bool operator==(const SteinitzNumber&, const SteinitzNumber&) = default;

 private:
  Exponent default_;
  ExponentMap exceptions_;
};

// Textual grammar: '*'-separated terms `p`, `p^e` and at most one `P^e`
// (exponent e for all unlisted primes); e is a decimal or `inf`. The empty
// product is written `1`. Throws ParseError.
SteinitzNumber parse_steinitz(std::string_view text);

// Terms in increasing prime order, `P^e` last, exponent 1 elided on prime
// terms, `inf` for Infinity, `1` for the empty product.
std::string format(const SteinitzNumber& s);

Exponent valuation(const SteinitzNumber& s, Prime p);

// n in Omega(s), i.e. n divides s.
bool omega_contains(const SteinitzNumber& s, const BigInt& n);
bool omega_contains(const SteinitzNumber& s, const FactoredRatio::ExponentMap& factored_n);

// Pointwise v_p(s1) <= v_p(s2).
bool divides(const SteinitzNumber& s1, const SteinitzNumber& s2);

// Pointwise sum of exponents.
SteinitzNumber operator*(const SteinitzNumber& a, const SteinitzNumber& b);

SteinitzNumber mul_natural(const SteinitzNumber& s, const BigInt& n);

// s / b. Throws std::domain_error unless b is in Omega(s).
SteinitzNumber divide_by(const SteinitzNumber& s, const BigInt& b);

// Smallest b in Omega(s2) with s1 == s2 / b, if any.
std::optional<BigInt> finitely_divides(const SteinitzNumber& s1, const SteinitzNumber& s2);

// s2 == q * s1 for a positive rational q.
bool rationally_connected(const SteinitzNumber& s1, const SteinitzNumber& s2);

// prod p^(v_p(s2) - v_p(s1)) over primes where both valuations are finite.
// Throws std::domain_error if the arguments are not rationally connected.
FactoredRatio canonical_ratio_factored(const SteinitzNumber& s1, const SteinitzNumber& s2);
PositiveRational canonical_ratio(const SteinitzNumber& s1, const SteinitzNumber& s2);

// Order within a rational-connectivity class by canonical ratio:
// negative when s1 < s2. Throws std::domain_error for unconnected arguments.
int compare_connected(const SteinitzNumber& s1, const SteinitzNumber& s2);

// q * s. Throws std::domain_error if the result is not a Steinitz number,
// i.e. the denominator of q is not in Omega(s).
SteinitzNumber scale(const SteinitzNumber& s, const FactoredRatio& q);
SteinitzNumber scale(const SteinitzNumber& s, const PositiveRational& q);

SteinitzNumber lcm(const SteinitzNumber& s1, const SteinitzNumber& s2);

// All n in [1, bound] dividing s, ascending.
std::vector<std::uint64_t> enumerate_omega(const SteinitzNumber& s, std::uint64_t bound);

}  // namespace steinitz
