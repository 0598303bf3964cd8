#include "steinitz/steinitz_number.hpp"

#include <limits>
#include <set>
#include <stdexcept>

#include "cursor.hpp"
#include "steinitz/errors.hpp"

namespace steinitz {

// ---------------------------------------------------------------------------
// ExtendedNatural

ExtendedNatural::ExtendedNatural(BigInt value) : value_(std::move(value)) {
  if (value_ < 0) throw std::domain_error("negative exponent " + value_.str());
}

const BigInt& ExtendedNatural::value() const {
  if (infinite_) throw std::logic_error("value() of Infinity");
  return value_;
}

ExtendedNatural ExtendedNatural::minus(const BigInt& k) const {
  if (infinite_) return *this;
  if (k > value_) throw std::domain_error(value_.str() + " - " + k.str() + " is negative");
  return ExtendedNatural(value_ - k);
}

std::string ExtendedNatural::str() const { return infinite_ ? "inf" : value_.str(); }

ExtendedNatural operator+(const ExtendedNatural& a, const ExtendedNatural& b) {
  if (a.infinite_ || b.infinite_) return ExtendedNatural::infinity();
  return ExtendedNatural(a.value_ + b.value_);
}

bool operator==(const ExtendedNatural& a, const ExtendedNatural& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtendedNatural& a, const ExtendedNatural& b) {
  if (a.infinite_ || b.infinite_) {
    if (a.infinite_ == b.infinite_) return std::strong_ordering::equal;
    return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  int c = a.value_.compare(b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// SteinitzNumber

SteinitzNumber::SteinitzNumber(Exponent default_exponent, ExponentMap exceptions)
    : default_(std::move(default_exponent)) {
  for (auto& [p, e] : exceptions) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (e != default_) exceptions_.emplace(p, std::move(e));
  }
}

SteinitzNumber SteinitzNumber::from_natural(const BigInt& n) {
  ExponentMap e;
  for (auto& [p, k] : factorize(n)) e.emplace(p, Exponent(k));
  return {Exponent(), std::move(e)};
}

SteinitzNumber SteinitzNumber::prime_power(Prime p, Exponent e) { return {Exponent(), {{p, std::move(e)}}}; }

SteinitzNumber SteinitzNumber::uniform(Exponent e) { return {std::move(e), {}}; }

Exponent SteinitzNumber::valuation(Prime p) const {
  auto it = exceptions_.find(p);
  return it == exceptions_.end() ? default_ : it->second;
}

bool SteinitzNumber::is_natural() const {
  if (!default_.is_zero()) return false;
  for (const auto& [p, e] : exceptions_) {
    if (e.is_infinite()) return false;
  }
  return true;
}

bool SteinitzNumber::is_infinity_free() const {
  if (default_.is_infinite()) return false;
  for (const auto& [p, e] : exceptions_) {
    if (e.is_infinite()) return false;
  }
  return true;
}

std::optional<BigInt> SteinitzNumber::as_natural() const {
  if (!is_natural()) return std::nullopt;
  BigInt n = 1;
  for (const auto& [p, e] : exceptions_) n *= power(p, e.value());
  return n;
}

std::string SteinitzNumber::str() const { return format(*this); }

// ---------------------------------------------------------------------------
// Text form

std::string format(const SteinitzNumber& s) {
  std::string out;
  auto append = [&out](const std::string& term) {
    if (!out.empty()) out += '*';
    out += term;
  };
  for (const auto& [p, e] : s.exceptions()) {
    if (e == Exponent(1)) {
      append(std::to_string(p));
    } else {
      append(std::to_string(p) + "^" + e.str());
    }
  }
  if (!s.default_exponent().is_zero()) append("P^" + s.default_exponent().str());
  return out.empty() ? "1" : out;
}

SteinitzNumber parse_steinitz(std::string_view text) {
  detail::Cursor cur(text);
  {
    detail::Cursor probe(text);
    if (probe.accept('1') && probe.at_end()) return {};
  }
  auto read_exponent = [&cur]() -> Exponent {
    if (!cur.accept('^')) return Exponent(1);
    if (cur.accept("inf")) return Exponent::infinity();
    return Exponent(cur.read_natural("exponent (digits or 'inf')"));
  };

  std::optional<Exponent> default_exponent;
  SteinitzNumber::ExponentMap exceptions;
  do {
    cur.skip_ws();
    std::size_t start = cur.pos();
    if (cur.accept('P')) {
      if (default_exponent) cur.fail_at(start, "prime base", "duplicate 'P' term");
      default_exponent = read_exponent();
      continue;
    }
    BigInt base = cur.read_natural("prime base or 'P'");
    if (base > std::numeric_limits<Prime>::max() || !is_prime(base.convert_to<Prime>())) {
      cur.fail_at(start, "prime base", base.str() + " is not prime");
    }
    auto p = base.convert_to<Prime>();
    if (exceptions.contains(p)) cur.fail_at(start, "prime base", "duplicate prime " + base.str());
    exceptions.emplace(p, read_exponent());
  } while (cur.accept('*'));
  cur.expect_end();
  return {default_exponent.value_or(Exponent()), std::move(exceptions)};
}

// ---------------------------------------------------------------------------
// Arithmetic

namespace {

std::set<Prime> listed_primes(const SteinitzNumber& a, const SteinitzNumber& b) {
  std::set<Prime> keys;
  for (const auto& [p, e] : a.exceptions()) keys.insert(p);
  for (const auto& [p, e] : b.exceptions()) keys.insert(p);
  return keys;
}

template <typename Combine>
SteinitzNumber pointwise(const SteinitzNumber& a, const SteinitzNumber& b, Combine combine) {
  SteinitzNumber::ExponentMap out;
  for (Prime p : listed_primes(a, b)) out.emplace(p, combine(a.valuation(p), b.valuation(p)));
  return {combine(a.default_exponent(), b.default_exponent()), std::move(out)};
}

}  // namespace

Exponent valuation(const SteinitzNumber& s, Prime p) { return s.valuation(p); }

bool omega_contains(const SteinitzNumber& s, const FactoredRatio::ExponentMap& factored_n) {
  for (const auto& [p, k] : factored_n) {
    if (s.valuation(p) < Exponent(k)) return false;
  }
  return true;
}

bool omega_contains(const SteinitzNumber& s, const BigInt& n) {
  if (n < 1) throw std::domain_error("Omega membership needs n >= 1");
  FactoredRatio::ExponentMap factored;
  for (auto& [p, k] : factorize(n)) factored.emplace(p, std::move(k));
  return omega_contains(s, factored);
}

bool divides(const SteinitzNumber& s1, const SteinitzNumber& s2) {
  if (s1.default_exponent() > s2.default_exponent()) return false;
  for (Prime p : listed_primes(s1, s2)) {
    if (s1.valuation(p) > s2.valuation(p)) return false;
  }
  return true;
}

SteinitzNumber operator*(const SteinitzNumber& a, const SteinitzNumber& b) {
  return pointwise(a, b, [](const Exponent& x, const Exponent& y) { return x + y; });
}

SteinitzNumber mul_natural(const SteinitzNumber& s, const BigInt& n) {
  auto exceptions = s.exceptions();
  for (auto& [p, k] : factorize(n)) exceptions[p] = s.valuation(p) + Exponent(k);
  return {s.default_exponent(), std::move(exceptions)};
}

SteinitzNumber divide_by(const SteinitzNumber& s, const BigInt& b) {
  if (!omega_contains(s, b)) {
    throw std::domain_error(b.str() + " does not divide " + format(s));
  }
  auto exceptions = s.exceptions();
  for (auto& [p, k] : factorize(b)) exceptions[p] = s.valuation(p).minus(k);
  return {s.default_exponent(), std::move(exceptions)};
}

bool rationally_connected(const SteinitzNumber& s1, const SteinitzNumber& s2) {
  if (s1.default_exponent() != s2.default_exponent()) return false;
  for (Prime p : listed_primes(s1, s2)) {
    if (s1.valuation(p).is_infinite() != s2.valuation(p).is_infinite()) return false;
  }
  return true;
}

FactoredRatio canonical_ratio_factored(const SteinitzNumber& s1, const SteinitzNumber& s2) {
  if (!rationally_connected(s1, s2)) {
    throw std::domain_error(format(s1) + " and " + format(s2) + " are not rationally connected");
  }
  FactoredRatio::ExponentMap diff;
  for (Prime p : listed_primes(s1, s2)) {
    Exponent a = s1.valuation(p);
    Exponent b = s2.valuation(p);
    if (a.is_infinite()) continue;
    BigInt d = b.value() - a.value();
    if (d != 0) diff.emplace(p, std::move(d));
  }
  return FactoredRatio(std::move(diff));
}

PositiveRational canonical_ratio(const SteinitzNumber& s1, const SteinitzNumber& s2) {
  return canonical_ratio_factored(s1, s2).value();
}

int compare_connected(const SteinitzNumber& s1, const SteinitzNumber& s2) {
  FactoredRatio q = canonical_ratio_factored(s1, s2);
  if (q.is_one()) return 0;
  int c = q.numerator().compare(q.denominator());
  // q = s2 / s1 > 1 means s1 < s2.
  return c > 0 ? -1 : (c < 0 ? 1 : 0);
}

std::optional<BigInt> finitely_divides(const SteinitzNumber& s1, const SteinitzNumber& s2) {
  if (!rationally_connected(s1, s2)) return std::nullopt;
  FactoredRatio q = canonical_ratio_factored(s1, s2);
  for (const auto& [p, e] : q.exponents()) {
    if (e < 0) return std::nullopt;
  }
  return q.numerator();
}

SteinitzNumber scale(const SteinitzNumber& s, const FactoredRatio& q) {
  auto exceptions = s.exceptions();
  for (const auto& [p, e] : q.exponents()) {
    Exponent v = s.valuation(p);
    if (e > 0) {
      exceptions[p] = v + Exponent(e);
    } else {
      if (v < Exponent(-e)) {
        throw std::domain_error(format(s) + " times " + q.value().str() + " is not a Steinitz number");
      }
      exceptions[p] = v.minus(-e);
    }
  }
  return {s.default_exponent(), std::move(exceptions)};
}

SteinitzNumber scale(const SteinitzNumber& s, const PositiveRational& q) {
  return scale(s, FactoredRatio::from_rational(q));
}

SteinitzNumber lcm(const SteinitzNumber& s1, const SteinitzNumber& s2) {
  return pointwise(s1, s2, [](const Exponent& x, const Exponent& y) { return max(x, y); });
}

std::vector<std::uint64_t> enumerate_omega(const SteinitzNumber& s, std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound == 0) return out;
  // Smallest-prime-factor sieve; capacity[p] = min(v_p(s), log_p(bound)).
  std::vector<std::uint64_t> spf(bound + 1, 0);
  std::vector<std::uint64_t> capacity(bound + 1, 0);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (spf[i] != 0) continue;
    for (std::uint64_t j = i; j <= bound; j += i) {
      if (spf[j] == 0) spf[j] = i;
    }
    Exponent v = s.valuation(i);
    capacity[i] = v > Exponent(64) ? 64 : v.value().convert_to<std::uint64_t>();
  }
  out.push_back(1);
  for (std::uint64_t n = 2; n <= bound; ++n) {
    std::uint64_t m = n;
    bool ok = true;
    while (m > 1 && ok) {
      std::uint64_t p = spf[m];
      std::uint64_t k = 0;
      while (m % p == 0) {
        m /= p;
        ++k;
      }
      ok = k <= capacity[p];
    }
    if (ok) out.push_back(n);
  }
  return out;
}

}  // namespace steinitz
