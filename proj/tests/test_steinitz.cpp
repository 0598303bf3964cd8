#include <doctest.h>

#include <random>

#include "steinitz/errors.hpp"
#include "steinitz/steinitz_number.hpp"

using namespace steinitz;

namespace {

SteinitzNumber sn(const char* text) { return parse_steinitz(text); }

const Exponent kInf = Exponent::infinity();

// v_p(n) by repeated division, independent of factorize().
std::uint64_t trial_valuation(std::uint64_t n, std::uint64_t p) {
  std::uint64_t k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

}  // namespace

TEST_CASE("arith helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(1601));
  CHECK_FALSE(is_prime(1681));
  CHECK(is_prime(1000000007));
  CHECK_FALSE(is_prime(1));
  CHECK(next_prime(2) == 3);
  CHECK(next_prime(3) == 5);
  CHECK(next_prime(7) == 11);
  CHECK(nth_prime(0) == 2);
  CHECK(nth_prime(9) == 29);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(isqrt(BigInt(99)) == 9);
  CHECK(is_perfect_square(BigInt(144)));
  auto f = factorize(360);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::pair<Prime, BigInt>{2, 3});
  CHECK(f[2] == std::pair<Prime, BigInt>{5, 1});
  CHECK_THROWS_AS(parse_bigint("12a"), std::invalid_argument);
}

TEST_CASE("factorize agrees with trial division") {
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    std::uint64_t back = 1;
    for (auto& [p, k] : factorize(n)) {
      CHECK(is_prime(p));
      CHECK(BigInt(trial_valuation(n, p)) == k);
      back *= static_cast<std::uint64_t>(power(p, k));
    }
    CHECK(back == n);
  }
}

TEST_CASE("parse and format") {
  SteinitzNumber a = sn("2^inf*3^2");
  CHECK(a.default_exponent() == Exponent(0));
  CHECK(a.exceptions().size() == 2);
  CHECK(a.valuation(2) == kInf);
  CHECK(a.valuation(3) == Exponent(2));

  SteinitzNumber b = sn("P^1*2^3");
  CHECK(b.default_exponent() == Exponent(1));
  CHECK(b.valuation(2) == Exponent(3));

  CHECK_THROWS_AS(sn("4^2"), ParseError);
  CHECK_THROWS_AS(sn("2^"), ParseError);
  CHECK_THROWS_AS(sn("P^1*P^2"), ParseError);
  CHECK_THROWS_AS(sn(""), ParseError);

  CHECK(format(sn("3^2*2^inf")) == "2^inf*3^2");
  CHECK(format(sn("2*P^1")) == "P^1");
  CHECK(format(sn("1")) == "1");
  CHECK(format(sn("5^1*2^0")) == "5");
  CHECK(format(sn("P^inf*3^0")) == "3^0*P^inf");
  for (const char* text : {"1", "2^2*3", "2^inf*3^2", "2^3*P^1", "3^0*P^inf", "2^0*5^4*P^2"}) {
    CHECK(format(sn(format(sn(text)).c_str())) == format(sn(text)));
  }
}

TEST_CASE("valuation") {
  CHECK(valuation(sn("P^1*2^3"), 2) == Exponent(3));
  CHECK(valuation(sn("P^1*2^3"), 5) == Exponent(1));
  CHECK(valuation(sn("2^inf*3^2"), 7) == Exponent(0));
}

TEST_CASE("natural and infinite") {
  CHECK(sn("2^2*3").is_natural());
  CHECK(sn("2^2*3").as_natural() == BigInt(12));
  CHECK_THROWS_AS(sn("12"), ParseError);
  CHECK(sn("2^inf").is_infinite());
  CHECK(sn("P^1").is_infinite());
  CHECK(sn("P^1").is_infinity_free());
  CHECK_FALSE(sn("2^inf*3").is_infinity_free());
  CHECK(SteinitzNumber::from_natural(360) == sn("2^3*3^2*5"));
}

TEST_CASE("omega membership") {
  CHECK(omega_contains(sn("2^inf*3"), 12));
  CHECK_FALSE(omega_contains(sn("P^1"), 4));
  for (const char* text : {"1", "P^1", "2^inf", "7"}) CHECK(omega_contains(sn(text), 1));
}

TEST_CASE("divides") {
  CHECK(divides(sn("2^inf"), sn("2^inf*3")));
  CHECK_FALSE(divides(sn("P^1"), sn("2^inf")));
  CHECK(divides(sn("P^1*2^3"), sn("P^1*2^3")));
}

TEST_CASE("multiply and divide") {
  CHECK(divide_by(sn("2^inf*3^2"), 12) == sn("2^inf*3"));
  CHECK(mul_natural(sn("2^inf"), 2) == sn("2^inf"));
  CHECK_THROWS_AS(divide_by(sn("P^1"), 4), std::domain_error);
  CHECK(mul_natural(sn("P^1"), 6) == sn("2^2*3^2*P^1"));
  CHECK(sn("2^3") * sn("2*5") == sn("2^4*5"));
}

TEST_CASE("finite divisibility") {
  CHECK(finitely_divides(sn("2^inf*3"), sn("2^inf*3^2*5")) == BigInt(15));
  CHECK(finitely_divides(sn("P^1"), sn("P^1")) == BigInt(1));
  CHECK_FALSE(finitely_divides(sn("2^inf"), sn("3^inf")).has_value());
}

TEST_CASE("rational connectivity") {
  CHECK(rationally_connected(sn("P^1*2^3"), sn("P^1*3^2")));
  CHECK(canonical_ratio(sn("P^1*2^3"), sn("P^1*3^2")) == PositiveRational(3, 4));
  CHECK(canonical_ratio(sn("2^inf*3"), sn("2^inf*5")) == PositiveRational(5, 3));
  CHECK_FALSE(rationally_connected(sn("2^inf"), sn("3^inf")));
  CHECK_THROWS_AS(canonical_ratio(sn("2^inf"), sn("3^inf")), std::domain_error);
  CHECK(compare_connected(sn("P^1"), mul_natural(sn("P^1"), 2)) < 0);
  CHECK(compare_connected(sn("P^1"), sn("P^1")) == 0);
  CHECK(scale(sn("2^inf*3"), PositiveRational(3, 4)) == sn("2^inf*3^2"));
  CHECK_THROWS_AS(scale(sn("P^1"), PositiveRational(1, 4)), std::domain_error);
}

TEST_CASE("lcm") {
  CHECK(lcm(sn("2^inf"), sn("3^2")) == sn("2^inf*3^2"));
  CHECK(lcm(sn("P^1"), sn("2^3")) == sn("P^1*2^3"));
  CHECK(lcm(sn("P^1*5^0"), sn("1")) == sn("P^1*5^0"));
}

TEST_CASE("omega enumeration") {
  CHECK(enumerate_omega(sn("P^1"), 10) == std::vector<std::uint64_t>{1, 2, 3, 5, 6, 7, 10});
  CHECK(enumerate_omega(sn("2^inf"), 8) == std::vector<std::uint64_t>{1, 2, 4, 8});
  CHECK(enumerate_omega(sn("1"), 10) == std::vector<std::uint64_t>{1});
}

TEST_CASE("omega enumeration matches per-n divisibility") {
  for (const char* text : {"P^1", "2^3*P^1", "2^inf*3", "3^0*P^2", "2^3*3^2*5"}) {
    SteinitzNumber s = sn(text);
    std::vector<std::uint64_t> expected;
    for (std::uint64_t n = 1; n <= 400; ++n) {
      bool ok = true;
      for (std::uint64_t p = 2; p <= n && ok; ++p) {
        if (!is_prime(p)) continue;
        std::uint64_t k = trial_valuation(n, p);
        if (k > 0 && s.valuation(p) < Exponent(k)) ok = false;
      }
      if (ok) expected.push_back(n);
    }
    CHECK(enumerate_omega(s, 400) == expected);
  }
}

TEST_CASE("random products are pointwise sums") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> e(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    SteinitzNumber::ExponentMap ma, mb;
    for (Prime p : {2, 3, 5, 7, 11}) {
      int x = e(rng), y = e(rng);
      ma[p] = x == 4 ? kInf : Exponent(x);
      mb[p] = y == 4 ? kInf : Exponent(y);
    }
    SteinitzNumber a(Exponent(e(rng) % 2), ma), b(Exponent(0), mb);
    SteinitzNumber prod = a * b;
    for (Prime p : {2, 3, 5, 7, 11, 13}) CHECK(prod.valuation(p) == a.valuation(p) + b.valuation(p));
    CHECK(divides(a, prod));
    CHECK(lcm(a, b) == lcm(b, a));
  }
}
