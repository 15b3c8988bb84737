#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>

namespace holoforms {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number.  Canonical form is enforced at construction:
// denominator > 0, gcd(|num|, den) = 1, zero is 0/1.  Equality is therefore
// structural.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

  Rational operator-() const;
  Rational abs() const { return sign() < 0 ? -*this : *this; }
  // Multiplicative inverse; throws std::domain_error on zero.
  Rational inv() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws std::domain_error on /0

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // "p/q" with q omitted when 1, e.g. "-3/4", "7", "0".
  std::string str() const;

  // n! as an exact integer rational.
  static Rational factorial(unsigned n);

 private:
  BigInt num_;
  BigInt den_;
};

// Exact Gaussian rational re + im*i: the coefficient field everywhere.
struct Scalar {
  Rational re;
  Rational im;

  Scalar() = default;
  Scalar(Rational r) : re(std::move(r)) {}  // NOLINT: implicit by design
  Scalar(long long r) : re(r) {}            // NOLINT: implicit by design
  Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }
  Scalar conj() const { return Scalar(re, -im); }
  // |z|^2 = re^2 + im^2, a nonnegative Rational.
  Rational norm2() const { return re * re + im * im; }

  Scalar operator-() const { return Scalar(-re, -im); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);  // throws std::domain_error on /0

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re == b.re && a.im == b.im;
  }

  // "re", "im i" or "re+im i" with no spaces and unit imaginary parts
  // abbreviated: "5/4", "3-2i", "i", "-i", "1/2+3/4i".
  std::string str() const;
};

}  // namespace holoforms
