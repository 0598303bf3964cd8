#include <doctest.h>

#include <cmath>

#include "steinitz/density.hpp"

using namespace steinitz;

TEST_CASE("rational normalization") {
  QuadraticNumber q = QuadraticNumber::rational(6, 4);
  CHECK(q.is_rational());
  CHECK(q.numerator() == 3);
  CHECK(q.denominator() == 2);
  CHECK(q.str() == "3/2");
  CHECK(QuadraticNumber::rational(4, 2).str() == "2");
  CHECK(q.floor() == 1);
  CHECK(q.scaled(3, 1).floor() == 4);
}

TEST_CASE("surds") {
  QuadraticNumber r2 = QuadraticNumber::surd(0, 1, 2, 1);
  CHECK_FALSE(r2.is_rational());
  CHECK(r2.str() == "(0+1*sqrt(2))/1");
  CHECK(r2.scaled(2, 1).floor() == 2);
  CHECK(QuadraticNumber::surd(0, 1, 8, 1) == QuadraticNumber::surd(0, 2, 2, 1));
  CHECK(QuadraticNumber::surd(1, 1, 9, 2).is_rational());
  CHECK(QuadraticNumber::surd(1, 1, 9, 2) == QuadraticNumber::rational(2));
  CHECK_THROWS_AS(QuadraticNumber::surd(0, 1, 2, 0), std::domain_error);
  CHECK(QuadraticNumber::rational(3, 2) > r2);
  CHECK(QuadraticNumber::rational(7, 5) < r2);
  CHECK(QuadraticNumber::surd(0, 1, 5, 1) > QuadraticNumber::surd(0, 3, 2, 2));
}

TEST_CASE("floor of k*sqrt(d) matches integer square roots") {
  for (int d : {2, 3, 5, 6, 7, 10}) {
    QuadraticNumber r = QuadraticNumber::surd(0, 1, d, 1);
    for (int k = 1; k <= 300; ++k) {
      CHECK(r.scaled(k, 1).floor() == isqrt(BigInt(k) * k * d));
    }
  }
}

TEST_CASE("surd order agrees with floating point away from ties") {
  for (int x = 0; x < 6; ++x) {
    for (int y = 1; y < 4; ++y) {
      for (int z = 1; z < 5; ++z) {
        QuadraticNumber a = QuadraticNumber::surd(x, y, 2, z);
        QuadraticNumber b = QuadraticNumber::surd(1, 1, 5, 2);
        double fa = (x + y * std::sqrt(2.0)) / z;
        double fb = (1 + std::sqrt(5.0)) / 2;
        if (std::abs(fa - fb) > 1e-9) CHECK((a < b) == (fa < fb));
      }
    }
  }
}

TEST_CASE("sign_of_surd") {
  CHECK(sign_of_surd(-3, 2, 2) == -1);  // 2*sqrt(2) < 3
  CHECK(sign_of_surd(-2, 2, 2) == 1);
  CHECK(sign_of_surd(0, 0, 2) == 0);
  CHECK(sign_of_surd(3, -2, 2) == 1);
}

TEST_CASE("density bounds") {
  CHECK(DensityBound::rational(3, 2).kind() == DensityBound::Kind::Rational);
  CHECK(DensityBound::surd(0, 1, 2, 1).kind() == DensityBound::Kind::Surd);
  CHECK(DensityBound::infinity().str() == "inf");
  CHECK(DensityBound::infinity() > DensityBound::rational(1000));
  CHECK(DensityBound::rational(1) < DensityBound::surd(0, 1, 2, 1));
  CHECK_THROWS_AS(DensityBound::rational(1, 2), std::domain_error);
  CHECK_THROWS_AS(DensityBound::infinity().value(), std::logic_error);
}
