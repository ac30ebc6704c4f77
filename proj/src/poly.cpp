#include "polycensus/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace polycensus {

Int height(const IntPoly& f) {
  if (f.is_zero()) throw PreconditionError("height: zero polynomial");
  Int h = 0;
  for (const Int& c : f.coeffs()) h = std::max(h, abs(c));
  return h;
}

BigInt height(const BigPoly& f) {
  if (f.is_zero()) throw PreconditionError("height: zero polynomial");
  BigInt h = 0;
  for (const BigInt& c : f.coeffs()) {
    BigInt a = abs(c);
    if (a > h) h = a;
  }
  return h;
}

BigPoly to_big(const IntPoly& f) {
  std::vector<BigInt> c;
  c.reserve(f.size());
  for (const Int& x : f.coeffs()) c.push_back(to_big(x));
  return BigPoly(std::move(c));
}

IntPoly from_big(const BigPoly& f) {
  std::vector<Int> c;
  c.reserve(f.size());
  for (const BigInt& x : f.coeffs()) c.push_back(from_big(x));
  return IntPoly(std::move(c));
}

RatPoly to_rational(const IntPoly& f) {
  std::vector<Rat> c;
  c.reserve(f.size());
  for (const Int& x : f.coeffs()) c.emplace_back(x);
  return RatPoly(std::move(c));
}

LinearShift::LinearShift(int u, Int v) : u_(u), v_(v) {
  if (u != 1 && u != -1) throw PreconditionError("LinearShift: u must be +1 or -1");
}

LinearShift LinearShift::inverse() const {
  // y = u x + v  =>  x = u y - u v
  return LinearShift(u_, u_ == 1 ? -v_ : v_);
}

IntPoly LinearShift::as_poly() const { return IntPoly{v_, Int(u_)}; }

IntPoly LinearShift::apply_inner(const IntPoly& p) const {
  if (p.is_zero()) return p;
  return compose(p, as_poly());
}

std::pair<IntPoly, IntPoly> shift_pair(const IntPoly& g, const IntPoly& h) {
  if (g.degree() < 1 || h.degree() < 1) throw PreconditionError("shift_pair: both degrees must be at least 1");
  // With lambda(x) = u x + v: g1 = g o lambda and h1 = lambda^{-1} o h,
  // so g1 o h1 = g o h.
  const Int v = h.coeff(0);
  const int u = h.lead().sign() > 0 ? 1 : -1;
  const LinearShift lambda(u, v);
  IntPoly g1 = lambda.apply_inner(g);
  IntPoly h1 = compose(lambda.inverse().as_poly(), h);
  return {std::move(g1), std::move(h1)};
}

IntPoly parse_poly(std::string_view text) {
  std::string cleaned;
  cleaned.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) cleaned.push_back(c);
  }
  if (cleaned.empty()) throw PreconditionError("polynomial text is empty");
  std::vector<Int> coeffs;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = cleaned.find(',', start);
    const std::string_view field =
        std::string_view(cleaned).substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (field.empty()) throw PreconditionError("empty coefficient in polynomial text '" + std::string(text) + "'");
    coeffs.push_back(Int::parse(field));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return IntPoly(std::move(coeffs));
}

std::string format_poly(const IntPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ',';
    out += f[i].to_string();
  }
  return out;
}

std::string format_poly(const RatPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ',';
    out += f[i].to_string();
  }
  return out;
}

std::string pretty(const IntPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    const Int c = f[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const Int mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != Int(1)) os << mag;
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

}  // namespace polycensus
