#include "steinitz/arith.hpp"

#include <array>
#include <limits>
#include <stdexcept>

namespace steinitz {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Exponents beyond this are rejected by power(); 2^(1<<20) already has a
// million bits.
constexpr std::uint64_t kMaxMaterializedBits = 1u << 22;

// Trial division stops here; a remaining cofactor must be 1 or a 64-bit prime.
constexpr std::uint64_t kTrialDivisionLimit = 2'000'000;

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Prime next_prime(Prime p) {
  if (p < 2) return 2;
  if (p == 2) return 3;
  Prime candidate = p % 2 == 0 ? p + 1 : p + 2;
  while (!is_prime(candidate)) {
    if (candidate > std::numeric_limits<Prime>::max() - 2) throw std::overflow_error("prime out of range");
    candidate += 2;
  }
  return candidate;
}

Prime nth_prime(std::size_t index) {
  Prime p = 2;
  for (std::size_t i = 0; i < index; ++i) p = next_prime(p);
  return p;
}

std::vector<std::pair<Prime, BigInt>> factorize(const BigInt& n) {
  if (n < 1) throw std::domain_error("factorize: expected a positive integer, got " + n.str());
  std::vector<std::pair<Prime, BigInt>> factors;
  BigInt rest = n;
  auto strip = [&](std::uint64_t d) {
    if (rest % d != 0) return;
    BigInt e = 0;
    while (rest % d == 0) {
      rest /= d;
      ++e;
    }
    factors.emplace_back(d, e);
  };
  strip(2);
  for (std::uint64_t d = 3; d <= kTrialDivisionLimit; d += 2) {
    if (BigInt(d) * d > rest) break;
    strip(d);
  }
  if (rest == 1) return factors;
  if (rest <= std::numeric_limits<std::uint64_t>::max()) {
    auto r = rest.convert_to<std::uint64_t>();
    if (BigInt(kTrialDivisionLimit) * kTrialDivisionLimit > rest || is_prime(r)) {
      factors.emplace_back(r, 1);
      return factors;
    }
  }
  throw std::domain_error("factorize: " + n.str() + " has a composite cofactor too large to factor; give it in factored form");
}

BigInt power(Prime p, const BigInt& exponent) {
  if (exponent < 0) throw std::domain_error("power: negative exponent");
  if (p <= 1) return BigInt(p);
  const auto bits_per_factor = static_cast<std::uint64_t>(boost::multiprecision::msb(BigInt(p)) + 1);
  if (exponent > kMaxMaterializedBits / bits_per_factor) {
    throw std::overflow_error("power: " + std::to_string(p) + "^" + exponent.str() + " is too large to materialize");
  }
  return boost::multiprecision::pow(BigInt(p), exponent.convert_to<unsigned>());
}

BigInt floor_div(const BigInt& num, const BigInt& den) {
  if (den <= 0) throw std::domain_error("floor_div: nonpositive divisor");
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw std::domain_error("isqrt: negative argument");
  return boost::multiprecision::sqrt(n);
}

bool is_perfect_square(const BigInt& n) {
  if (n < 0) return false;
  BigInt r = isqrt(n);
  return r * r == n;
}

BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

BigInt parse_bigint(std::string_view digits) {
  if (digits.empty()) throw std::invalid_argument("expected digits");
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("expected digits, got '" + std::string(digits) + "'");
  }
  return BigInt(std::string(digits));
}

std::uint64_t to_u64(const BigInt& n) {
  if (n < 0 || n > std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error(n.str() + " does not fit in 64 bits");
  }
  return n.convert_to<std::uint64_t>();
}

}  // namespace steinitz
