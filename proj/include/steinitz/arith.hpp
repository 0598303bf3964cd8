#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace steinitz {

using BigInt = boost::multiprecision::cpp_int;
using Prime = std::uint64_t;

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

// Smallest prime strictly greater than p.
Prime next_prime(Prime p);

// nth_prime(0) == 2, nth_prime(1) == 3, ...
Prime nth_prime(std::size_t index);

// Prime factorization of n >= 1 by trial division, increasing primes.
// Throws std::domain_error when n < 1 or when n carries a large composite
// cofactor; such inputs have to be given in factored form.
std::vector<std::pair<Prime, BigInt>> factorize(const BigInt& n);

// p^e. Throws std::overflow_error for exponents that cannot be materialized.
BigInt power(Prime p, const BigInt& exponent);

// Floor division for den > 0.
BigInt floor_div(const BigInt& num, const BigInt& den);

// Integer square root of n >= 0.
BigInt isqrt(const BigInt& n);

bool is_perfect_square(const BigInt& n);

BigInt gcd(const BigInt& a, const BigInt& b);

// Parses a run of decimal digits. Throws std::invalid_argument otherwise.
BigInt parse_bigint(std::string_view digits);

inline std::string to_string(const BigInt& n) { return n.str(); }

// Narrowing conversion used where a quantity has to be enumerated.
// Throws std::overflow_error if n does not fit.
std::uint64_t to_u64(const BigInt& n);

}  // namespace steinitz
