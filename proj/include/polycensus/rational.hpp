#pragma once

#include <string>

#include "polycensus/integer.hpp"

namespace polycensus {

/// Exact fraction over an integer type Z (Int or BigInt), kept in lowest
/// terms with a positive denominator.
template <class Z>
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Z n) : num_(std::move(n)), den_(1) {}  // NOLINT(implicit)
  Rational(int n) : num_(n), den_(1) {}           // NOLINT(implicit)
  Rational(Z n, Z d) : num_(std::move(n)), den_(std::move(d)) {
    if (is_zero(den_)) throw PreconditionError("Rational: zero denominator");
    normalize();
  }

  const Z& num() const noexcept { return num_; }
  const Z& den() const noexcept { return den_; }
  bool is_integer() const { return den_ == Z(1); }
  bool is_zero_value() const { return is_zero(num_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return Rational(a.num_ + b.num_, a.den_);
    const Z g = gcd(a.den_, b.den_);
    const Z ad = a.den_ / g;
    const Z bd = b.den_ / g;
    return Rational(a.num_ * bd + b.num_ * ad, a.den_ * bd);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (is_zero(a.num_) || is_zero(b.num_)) return Rational();
    // Cross-reduce first to keep intermediates small.
    const Z g1 = gcd(a.num_, b.den_);
    const Z g2 = gcd(b.num_, a.den_);
    Rational r;
    r.num_ = (a.num_ / g1) * (b.num_ / g2);
    r.den_ = (a.den_ / g2) * (b.den_ / g1);
    return r;
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (is_zero(b.num_)) throw PreconditionError("Rational: division by zero");
    return a * Rational(b.den_, b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const {
    using polycensus::to_string;
    return is_integer() ? to_string(num_) : to_string(num_) + "/" + to_string(den_);
  }

 private:
  void normalize() {
    if (sign_of(den_) < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const Z g = gcd(num_, den_);
    if (!(g == Z(1)) && !is_zero(g)) {
      num_ /= g;
      den_ /= g;
    }
  }

  Z num_;
  Z den_;
};

template <class Z>
bool is_zero(const Rational<Z>& q) {
  return q.is_zero_value();
}
template <class Z>
int sign_of(const Rational<Z>& q) {
  return sign_of(q.num());
}

using Rat = Rational<Int>;
using BigRat = Rational<BigInt>;

}  // namespace polycensus
