#include "stardec/exact.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "stardec/error.hpp"

namespace stardec {

int sign(const Rational& x) {
  if (x > 0) return 1;
  if (x < 0) return -1;
  return 0;
}

std::string to_string(const Rational& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

BigInt floor(const Rational& x) {
  BigInt num = boost::multiprecision::numerator(x);
  BigInt den = boost::multiprecision::denominator(x);
  BigInt q = num / den;
  if (num % den != 0 && num < 0) q -= 1;
  return q;
}

BigInt ceil(const Rational& x) { return -floor(-x); }

Surd::Surd(Rational a) : a_(std::move(a)) {}

Surd::Surd(Rational a, Rational b, std::int64_t radicand)
    : a_(std::move(a)), b_(std::move(b)), c_(radicand) {
  if (c_ < 0) throw InvalidInput("surd radicand must be nonnegative");
  normalize();
}

void Surd::normalize() {
  if (b_ == 0 || c_ == 0) {
    b_ = 0;
    c_ = 0;
    return;
  }
  for (std::int64_t f = 2; f * f <= c_; ++f) {
    while (c_ % (f * f) == 0) {
      c_ /= f * f;
      b_ *= f;
    }
  }
  if (c_ == 1) {
    a_ += b_;
    b_ = 0;
    c_ = 0;
  }
}

int Surd::sign() const {
  const int sa = stardec::sign(a_);
  const int sb = c_ == 0 ? 0 : stardec::sign(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 against b^2 c.
  const Rational diff = a_ * a_ - b_ * b_ * Rational(c_);
  return sa > 0 ? stardec::sign(diff) : -stardec::sign(diff);
}

double Surd::to_double() const {
  return stardec::to_double(a_) + stardec::to_double(b_) * std::sqrt(static_cast<double>(c_));
}

std::string Surd::to_string() const {
  if (c_ == 0) return stardec::to_string(a_);
  std::ostringstream os;
  if (a_ != 0) os << a_ << (b_ < 0 ? " - " : " + ");
  else if (b_ < 0) os << "-";
  const Rational mag = b_ < 0 ? Rational(-b_) : b_;
  if (mag != 1) os << mag << "*";
  os << "sqrt(" << c_ << ")";
  return os.str();
}

Surd Surd::operator-() const {
  Surd out = *this;
  out.a_ = -out.a_;
  out.b_ = -out.b_;
  return out;
}

namespace {

std::int64_t common_radicand(const Surd& x, const Surd& y) {
  if (x.radicand() == 0) return y.radicand();
  if (y.radicand() == 0) return x.radicand();
  if (x.radicand() != y.radicand()) {
    throw std::domain_error("surd arithmetic over different radicands");
  }
  return x.radicand();
}

}  // namespace

Surd operator+(const Surd& x, const Surd& y) {
  const std::int64_t c = common_radicand(x, y);
  return Surd(x.a_ + y.a_, x.b_ + y.b_, c);
}

Surd operator-(const Surd& x, const Surd& y) { return x + (-y); }

Surd operator*(const Surd& x, const Rational& r) {
  return Surd(x.a_ * r, x.b_ * r, x.c_);
}

Surd operator*(const Surd& x, const Surd& y) {
  const std::int64_t c = common_radicand(x, y);
  return Surd(x.a_ * y.a_ + x.b_ * y.b_ * Rational(c), x.a_ * y.b_ + x.b_ * y.a_, c);
}

BigInt ceil(const Surd& x) {
  BigInt cand(static_cast<long long>(std::floor(x.to_double())) - 1);
  while (Surd(Rational(cand)) < x) ++cand;
  while (Surd(Rational(cand - 1)) >= x) --cand;
  return cand;
}

NestedRadical::NestedRadical(Rational outer, Surd inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (inner_.sign() < 0) throw InvalidInput("nested radical with negative radicand");
}

int NestedRadical::compare_from(const Rational& x) const {
  const Rational d = x - outer_;
  if (d < 0) return -1;
  return (Surd(d * d) - inner_).sign();
}

BigInt NestedRadical::first_integer_above() const {
  BigInt cand(static_cast<long long>(std::floor(to_double())) - 1);
  while (!is_below(Rational(cand))) ++cand;
  while (is_below(Rational(cand - 1))) --cand;
  return cand;
}

double NestedRadical::to_double() const {
  return stardec::to_double(outer_) + std::sqrt(inner_.to_double());
}

std::string NestedRadical::to_string() const {
  std::ostringstream os;
  os << outer_ << " + sqrt(" << inner_.to_string() << ")";
  return os.str();
}

}  // namespace stardec
