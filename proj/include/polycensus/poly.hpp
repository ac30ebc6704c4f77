#pragma once

// Dense univariate polynomials with exact coefficients.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polycensus/integer.hpp"
#include "polycensus/rational.hpp"

namespace polycensus {

/// Coefficients in ascending order: coeffs()[i] multiplies x^i. The highest
/// stored coefficient is never zero; the zero polynomial stores nothing.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Poly monomial(T coeff, std::size_t degree) {
    std::vector<T> c(degree + 1, T(0));
    c[degree] = std::move(coeff);
    return Poly(std::move(c));
  }

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  std::size_t size() const noexcept { return c_.size(); }
  const std::vector<T>& coeffs() const noexcept { return c_; }
  const T& lead() const {
    if (c_.empty()) throw PreconditionError("lead: zero polynomial");
    return c_.back();
  }
  /// Coefficient of x^i, zero beyond the degree.
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& operator[](std::size_t i) const { return c_[i]; }
  bool is_constant() const noexcept { return c_.size() <= 1; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> r(std::max(a.size(), b.size()), T(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a.c_[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b.c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  Poly operator-() const {
    std::vector<T> r;
    r.reserve(c_.size());
    for (const T& x : c_) r.push_back(-x);
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> r(a.size() + b.size() - 1, T(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (polycensus::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend Poly operator*(const T& s, const Poly& p) {
    std::vector<T> r;
    r.reserve(p.size());
    for (const T& x : p.c_) r.push_back(s * x);
    return Poly(std::move(r));
  }

  /// Exact Horner evaluation at a point of any ring containing T.
  template <class U>
  U operator()(const U& t) const {
    U acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + U(*it);
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && polycensus::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
};

using IntPoly = Poly<Int>;
using BigPoly = Poly<BigInt>;
using RatPoly = Poly<Rat>;
using BigRatPoly = Poly<BigRat>;

/// g(h(x)). Both arguments must be nonzero.
template <class T>
Poly<T> compose(const Poly<T>& g, const Poly<T>& h) {
  if (g.is_zero() || h.is_zero()) throw PreconditionError("compose: zero polynomial argument");
  Poly<T> acc{g.lead()};
  for (int i = g.degree() - 1; i >= 0; --i) acc = acc * h + Poly<T>{g[static_cast<std::size_t>(i)]};
  return acc;
}

template <class T>
Poly<T> power(const Poly<T>& p, unsigned k) {
  Poly<T> r{T(1)};
  for (unsigned i = 0; i < k; ++i) r = r * p;
  return r;
}

/// Horner evaluation; kept as a named operation alongside compose.
template <class T, class U>
U evaluate(const Poly<T>& f, const U& t) {
  return f(t);
}

/// Maximum absolute coefficient. Throws PreconditionError for zero.
Int height(const IntPoly& f);
BigInt height(const BigPoly& f);

/// Converts between the checked and arbitrary-precision representations.
BigPoly to_big(const IntPoly& f);
/// Throws OverflowError if a coefficient needs more than 128 bits.
IntPoly from_big(const BigPoly& f);
RatPoly to_rational(const IntPoly& f);

/// The integrally invertible affine map x -> u*x + v, u = +1 or -1.
class LinearShift {
 public:
  LinearShift(int u, Int v);
  int u() const noexcept { return u_; }
  Int v() const noexcept { return v_; }
  LinearShift inverse() const;
  /// p(u*x + v).
  IntPoly apply_inner(const IntPoly& p) const;
  /// u*x + v as a polynomial.
  IntPoly as_poly() const;

 private:
  int u_;
  Int v_;
};

/// Moves the constant of the inner polynomial into the outer one and fixes
/// the sign so that the result has h1(0) = 0 and lead(h1) > 0, with
/// compose(g1, h1) == compose(g, h).
std::pair<IntPoly, IntPoly> shift_pair(const IntPoly& g, const IntPoly& h);

/// Comma-separated ascending coefficients, e.g. "5,2,3,2,1". Whitespace is
/// ignored. Throws PreconditionError on malformed text.
IntPoly parse_poly(std::string_view text);
/// Inverse of parse_poly; the zero polynomial prints as "0".
std::string format_poly(const IntPoly& f);
std::string format_poly(const RatPoly& f);

/// Human-readable form, e.g. "x^4 + 2x^3 - 5".
std::string pretty(const IntPoly& f);

}  // namespace polycensus
