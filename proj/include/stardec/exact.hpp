#pragma once

// Exact arithmetic for the bound formulas. Every quantity that has to be
// compared against an integer is either a rational, a quadratic surd
// a + b*sqrt(c), or a nested radical p + sqrt(a + b*sqrt(c)). Signs are
// decided by isolating the radical and squaring, never by floating point.

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace stardec {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

int sign(const Rational& x);
std::string to_string(const Rational& x);
double to_double(const Rational& x);

// Largest integer <= x.
BigInt floor(const Rational& x);
// Smallest integer >= x.
BigInt ceil(const Rational& x);

// a + b*sqrt(c) with rational a, b and integer c >= 0. The radicand is kept
// square-free: square factors are folded into b on construction.
class Surd {
 public:
  Surd() = default;
  Surd(Rational a);  // NOLINT: rationals embed implicitly
  Surd(std::int64_t a) : Surd(Rational(a)) {}  // NOLINT
  Surd(Rational a, Rational b, std::int64_t radicand);

  const Rational& rational_part() const { return a_; }
  const Rational& radical_coefficient() const { return b_; }
  std::int64_t radicand() const { return c_; }
  bool is_rational() const { return c_ == 1 || b_ == 0 || c_ == 0; }

  int sign() const;
  double to_double() const;
  std::string to_string() const;

  Surd operator-() const;
  friend Surd operator+(const Surd& x, const Surd& y);
  friend Surd operator-(const Surd& x, const Surd& y);
  friend Surd operator*(const Surd& x, const Rational& r);
  friend Surd operator*(const Rational& r, const Surd& x) { return x * r; }
  // Product of two surds over the same radicand (or with one rational).
  friend Surd operator*(const Surd& x, const Surd& y);

  friend bool operator==(const Surd& x, const Surd& y) { return (x - y).sign() == 0; }
  friend bool operator<(const Surd& x, const Surd& y) { return (x - y).sign() < 0; }
  friend bool operator>(const Surd& x, const Surd& y) { return (x - y).sign() > 0; }
  friend bool operator<=(const Surd& x, const Surd& y) { return (x - y).sign() <= 0; }
  friend bool operator>=(const Surd& x, const Surd& y) { return (x - y).sign() >= 0; }

 private:
  void normalize();

  Rational a_ = 0;
  Rational b_ = 0;
  std::int64_t c_ = 0;
};

// outer + sqrt(inner), inner >= 0.
class NestedRadical {
 public:
  NestedRadical(Rational outer, Surd inner);

  const Rational& outer() const { return outer_; }
  const Surd& inner() const { return inner_; }

  // sign(x - value), exact.
  int compare_from(const Rational& x) const;
  bool is_below(const Rational& x) const { return compare_from(x) > 0; }
  bool is_above(const Rational& x) const { return compare_from(x) < 0; }

  // Smallest integer strictly greater than the value.
  BigInt first_integer_above() const;

  double to_double() const;
  std::string to_string() const;

 private:
  Rational outer_;
  Surd inner_;
};

// Smallest integer >= x for a surd.
BigInt ceil(const Surd& x);

}  // namespace stardec
