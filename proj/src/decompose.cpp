#include "polycensus/decompose.hpp"

#include <string>

namespace polycensus {
namespace {

template <class Z>
using QPoly = Poly<Rational<Z>>;

template <class Z>
QPoly<Z> lift(const Poly<Z>& f) {
  std::vector<Rational<Z>> c;
  c.reserve(f.size());
  for (const Z& x : f.coeffs()) c.emplace_back(x);
  return QPoly<Z>(std::move(c));
}

void check_split(int degree, int m, int n) {
  if (m < 2 || n < 2 || m * n != degree) {
    throw PreconditionError("invalid split (" + std::to_string(m) + "," + std::to_string(n) +
                            ") for degree " + std::to_string(degree));
  }
}

// Coefficients of y^0..y^{len-1} of r(y)^k for a power series r.
template <class Q>
std::vector<Q> truncated_power(const std::vector<Q>& r, unsigned k, std::size_t len) {
  std::vector<Q> acc(len, Q(0));
  acc[0] = Q(1);
  for (unsigned step = 0; step < k; ++step) {
    std::vector<Q> next(len, Q(0));
    for (std::size_t i = 0; i < len; ++i) {
      if (is_zero(acc[i])) continue;
      for (std::size_t j = 0; i + j < len && j < r.size(); ++j) {
        if (!is_zero(r[j])) next[i + j] += acc[i] * r[j];
      }
    }
    acc = std::move(next);
  }
  return acc;
}

template <class Z>
QPoly<Z> candidate_impl(const Poly<Z>& f, int m, int n) {
  using Q = Rational<Z>;
  const int d = f.degree();
  const Q lead(f.lead());
  // rev[k] holds b_{n-k}, the coefficient of x^{n-k} in h; rev[0] = 1.
  std::vector<Q> rev(static_cast<std::size_t>(n), Q(0));
  rev[0] = Q(1);
  for (int k = 1; k < n; ++k) {
    const std::vector<Q> pw = truncated_power(rev, static_cast<unsigned>(m), static_cast<std::size_t>(k) + 1);
    // pw[k] = m * b_{n-k} + (terms in b_{n-1}, ..., b_{n-k+1}); rev[k] is still 0.
    const Q target = Q(f[static_cast<std::size_t>(d - k)]) / lead;
    rev[static_cast<std::size_t>(k)] = (target - pw[static_cast<std::size_t>(k)]) / Q(Z(m));
  }
  std::vector<Q> h(static_cast<std::size_t>(n) + 1, Q(0));
  for (int k = 0; k < n; ++k) h[static_cast<std::size_t>(n - k)] = rev[static_cast<std::size_t>(k)];
  return QPoly<Z>(std::move(h));
}

// Division with remainder by a monic polynomial.
template <class Q>
std::pair<Poly<Q>, Poly<Q>> divmod_monic(const Poly<Q>& a, const Poly<Q>& b) {
  const int db = b.degree();
  if (a.degree() < db) return {Poly<Q>(), a};
  std::vector<Q> rem = a.coeffs();
  std::vector<Q> quo(static_cast<std::size_t>(a.degree() - db) + 1, Q(0));
  for (int i = a.degree(); i >= db; --i) {
    const Q c = rem[static_cast<std::size_t>(i)];
    if (is_zero(c)) continue;
    quo[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(i - db + j)] -= c * b[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly<Q>(std::move(quo)), Poly<Q>(std::move(rem))};
}

// When stop_early is set the expansion ends at the first non-constant digit,
// which is then the last element returned.
template <class Q>
std::vector<Poly<Q>> hadic_impl(Poly<Q> f, const Poly<Q>& h, bool stop_early) {
  std::vector<Poly<Q>> digits;
  while (f.degree() >= h.degree()) {
    auto [q, r] = divmod_monic(f, h);
    const bool constant = r.is_constant();
    digits.push_back(std::move(r));
    if (stop_early && !constant) return digits;
    f = std::move(q);
  }
  digits.push_back(std::move(f));
  return digits;
}

template <class Z>
std::optional<std::pair<Poly<Z>, Poly<Z>>> decompose_impl(const Poly<Z>& f, int m, int n) {
  using Q = Rational<Z>;
  const QPoly<Z> h = candidate_impl(f, m, n);
  const std::vector<QPoly<Z>> digits = hadic_impl(lift(f), h, true);
  if (digits.size() != static_cast<std::size_t>(m) + 1) return std::nullopt;
  std::vector<Q> gq;
  gq.reserve(digits.size());
  for (const QPoly<Z>& c : digits) {
    if (!c.is_constant()) return std::nullopt;
    gq.push_back(c.coeff(0));
  }

  // Scale h to a primitive integer polynomial s*h with positive leading
  // coefficient and compensate in g: g(x) -> g(x / s).
  Z den_lcm(1);
  for (const Q& b : h.coeffs()) den_lcm = den_lcm / gcd(den_lcm, b.den()) * b.den();
  Z num_gcd(0);
  std::vector<Z> hz;
  hz.reserve(h.size());
  for (const Q& b : h.coeffs()) {
    hz.push_back(b.num() * (den_lcm / b.den()));
    num_gcd = gcd(num_gcd, hz.back());
  }
  for (Z& b : hz) b = b / num_gcd;
  const Q scale(den_lcm, num_gcd);  // s, with h_int = s * h
  const Q inv_scale = Q(1) / scale;

  std::vector<Z> gz;
  gz.reserve(gq.size());
  Q factor(1);
  for (const Q& a : gq) {
    const Q c = a * factor;
    if (!c.is_integer()) {
      throw InternalError("rational witness found but integer normalization failed for split (" +
                          std::to_string(m) + "," + std::to_string(n) + ")");
    }
    gz.push_back(c.num());
    factor = factor * inv_scale;
  }
  Poly<Z> g(std::move(gz));
  Poly<Z> hi(std::move(hz));
  if (!(compose(g, hi) == f)) {
    throw InternalError("normalized witness does not reproduce the input polynomial");
  }
  return std::make_pair(std::move(g), std::move(hi));
}

}  // namespace

std::vector<std::pair<int, int>> splits_of(int d) {
  std::vector<std::pair<int, int>> out;
  for (int n = 2; n * 2 <= d; ++n) {
    if (d % n == 0) out.emplace_back(d / n, n);
  }
  return out;
}

RatPoly candidate_h(const IntPoly& f, int m, int n) {
  check_split(f.degree(), m, n);
  return candidate_impl(f, m, n);
}

std::vector<RatPoly> hadic_coefficients(const IntPoly& f, const RatPoly& h) {
  if (h.degree() < 1 || !(h.lead() == Rat(1))) {
    throw PreconditionError("hadic_coefficients: h must be monic of degree at least 1");
  }
  return hadic_impl(to_rational(f), h, false);
}

std::optional<Decomposition> decompose_split(const IntPoly& f, int m, int n, OverflowPolicy policy) {
  check_split(f.degree(), m, n);
  std::optional<std::pair<IntPoly, IntPoly>> found;
  try {
    found = decompose_impl(f, m, n);
  } catch (const OverflowError&) {
    if (policy == OverflowPolicy::Report) throw;
    auto big = decompose_impl(to_big(f), m, n);
    if (big) found = std::make_pair(from_big(big->first), from_big(big->second));
  }
  if (!found) return std::nullopt;
  return Decomposition{std::move(found->first), std::move(found->second), m, n};
}

bool is_decomposable(const IntPoly& f, OverflowPolicy policy) {
  if (f.degree() < 2) throw PreconditionError("is_decomposable: degree must be at least 2");
  for (const auto& [m, n] : splits_of(f.degree())) {
    if (decompose_split(f, m, n, policy)) return true;
  }
  return false;
}

std::vector<IntPoly> full_decomposition(const IntPoly& f, OverflowPolicy policy) {
  if (f.degree() < 2) throw PreconditionError("full_decomposition: degree must be at least 2");
  std::vector<IntPoly> inner_first;
  IntPoly rest = f;
  bool peeled = true;
  while (peeled) {
    peeled = false;
    for (const auto& [m, n] : splits_of(rest.degree())) {
      if (auto w = decompose_split(rest, m, n, policy)) {
        inner_first.push_back(std::move(w->h));
        rest = std::move(w->g);
        peeled = true;
        break;
      }
    }
  }
  inner_first.push_back(std::move(rest));
  return {inner_first.rbegin(), inner_first.rend()};
}

}  // namespace polycensus
