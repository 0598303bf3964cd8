#include "steinitz/density.hpp"

#include <stdexcept>

namespace steinitz {

namespace {

int sign(const BigInt& v) { return v.sign(); }

// sign(a + b*sqrt(d1) + c*sqrt(d2)) with d1 != d2 squarefree and >= 2.
int sign_of_two_surds(const BigInt& a, const BigInt& b, const BigInt& d1, const BigInt& c, const BigInt& d2) {
  int sx = sign_of_surd(a, b, d1);
  int sy = sign(c);
  if (sx == 0) return sy;
  if (sy == 0 || sx == sy) return sx;
  // Opposite signs: compare |X|^2 with |Y|^2 where X = a + b*sqrt(d1),
  // Y = c*sqrt(d2). X^2 - Y^2 = (a^2 + b^2 d1 - c^2 d2) + 2ab*sqrt(d1).
  int diff = sign_of_surd(a * a + b * b * d1 - c * c * d2, 2 * a * b, d1);
  return sx * diff;
}

}  // namespace

int sign_of_surd(const BigInt& a, const BigInt& b, const BigInt& d) {
  int sa = sign(a);
  int sb = sign(b);
  if (sb == 0 || d == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs; compare a^2 with b^2 d. Equality is impossible for
  // non-square d.
  int c = BigInt(a * a).compare(BigInt(b * b * d));
  return c > 0 ? sa : sb;
}

QuadraticNumber QuadraticNumber::rational(const BigInt& num, const BigInt& den) {
  if (den <= 0) throw std::domain_error("rational with nonpositive denominator");
  QuadraticNumber q;
  q.x_ = num;
  q.z_ = den;
  q.normalize();
  return q;
}

QuadraticNumber QuadraticNumber::surd(const BigInt& x, const BigInt& y, const BigInt& d, const BigInt& z) {
  if (y < 0) throw std::domain_error("surd coefficient y must be nonnegative");
  if (z <= 0) throw std::domain_error("surd denominator z must be positive");
  if (d < 1) throw std::domain_error("surd radicand d must be positive");
  QuadraticNumber q;
  q.x_ = x;
  q.y_ = y;
  q.d_ = d;
  q.z_ = z;
  q.normalize();
  return q;
}

void QuadraticNumber::normalize() {
  if (y_ != 0) {
    // Pull square factors out of the radicand.
    for (BigInt k = 2; k * k <= d_; ++k) {
      BigInt k2 = k * k;
      while (d_ % k2 == 0) {
        d_ /= k2;
        y_ *= k;
      }
    }
    if (d_ == 1) {
      x_ += y_;
      y_ = 0;
    }
  }
  if (y_ == 0) d_ = 1;
  BigInt g = gcd(gcd(x_, y_), z_);
  if (g > 1) {
    x_ /= g;
    y_ /= g;
    z_ /= g;
  }
}

QuadraticNumber QuadraticNumber::scaled(const BigInt& num, const BigInt& den) const {
  if (den <= 0 || num < 0) throw std::domain_error("scale factor must be nonnegative with positive denominator");
  QuadraticNumber q = *this;
  q.x_ *= num;
  q.y_ *= num;
  q.z_ *= den;
  if (num == 0) {
    q.y_ = 0;
    q.d_ = 1;
  }
  // The radicand is already squarefree; only the common factor changes.
  BigInt g = gcd(gcd(q.x_, q.y_), q.z_);
  if (g > 1) {
    q.x_ /= g;
    q.y_ /= g;
    q.z_ /= g;
  }
  if (q.y_ == 0) q.d_ = 1;
  return q;
}

BigInt QuadraticNumber::floor() const {
  if (is_rational()) return floor_div(x_, z_);
  // y*sqrt(d) is irrational, so floor((x + y sqrt d) / z) equals
  // floor(floor(x + y sqrt d) / z) = floor((x + isqrt(y^2 d)) / z).
  return floor_div(x_ + isqrt(y_ * y_ * d_), z_);
}

int QuadraticNumber::sign() const { return sign_of_surd(x_, y_, d_); }

std::string QuadraticNumber::str() const {
  if (is_rational()) {
    if (z_ == 1) return x_.str();
    return x_.str() + "/" + z_.str();
  }
  return "(" + x_.str() + "+" + y_.str() + "*sqrt(" + d_.str() + "))/" + z_.str();
}

std::strong_ordering operator<=>(const QuadraticNumber& a, const QuadraticNumber& b) {
  // sign(a - b) = sign((xa zb - xb za) + ya zb sqrt(da) - yb za sqrt(db)).
  BigInt base = a.x_ * b.z_ - b.x_ * a.z_;
  BigInt ca = a.y_ * b.z_;
  BigInt cb = -(b.y_ * a.z_);
  int s;
  if (cb == 0) {
    s = sign_of_surd(base, ca, a.d_);
  } else if (ca == 0) {
    s = sign_of_surd(base, cb, b.d_);
  } else if (a.d_ == b.d_) {
    s = sign_of_surd(base, ca + cb, a.d_);
  } else {
    s = sign_of_two_surds(base, ca, a.d_, cb, b.d_);
  }
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

DensityBound::DensityBound(QuadraticNumber value) : value_(std::move(value)) {
  if (value_ < QuadraticNumber::rational(1)) {
    throw std::domain_error("density must be at least 1, got " + value_.str());
  }
}

DensityBound::Kind DensityBound::kind() const noexcept {
  if (infinite_) return Kind::Infinity;
  return value_.is_rational() ? Kind::Rational : Kind::Surd;
}

const QuadraticNumber& DensityBound::value() const {
  if (infinite_) throw std::logic_error("value() of an infinite density");
  return value_;
}

std::string DensityBound::str() const { return infinite_ ? "inf" : value_.str(); }

std::strong_ordering operator<=>(const DensityBound& a, const DensityBound& b) {
  if (a.infinite_ || b.infinite_) {
    if (a.infinite_ == b.infinite_) return std::strong_ordering::equal;
    return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return a.value_ <=> b.value_;
}

}  // namespace steinitz
