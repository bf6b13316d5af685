#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "bts/errors.hpp"

namespace bts {

using Rat = mpq_class;
using Int = mpz_class;

// Parses "p", "p/q" or a plain decimal like "0.25" into an exact rational.
Rat parse_rational(std::string_view text);

Int rat_floor(const Rat& q);
Int rat_ceil(const Rat& q);
Rat rat_abs(const Rat& q);
Rat rat_pow(const Rat& base, long exp);  // exp may be negative (base != 0)

std::string rat_str(const Rat& q);
double rat_double(const Rat& q);

// Closed rational interval [lo, hi]. The workhorse enclosure type for
// certified evaluation; arithmetic is outward-exact (rationals, so no
// rounding is involved at all).
struct QInterval {
  Rat lo, hi;

  QInterval() : lo(0), hi(0) {}
  QInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw Error("QInterval: lo > hi");
  }
  static QInterval point(const Rat& x) { return QInterval(x, x); }

  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
  bool is_point() const { return lo == hi; }
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  // Sign of every point in the interval; 0 if the interval straddles or
  // touches zero.
  int definite_sign() const {
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
    if (lo == 0 && hi == 0) return 0;
    return 0;
  }

  QInterval intersect(const QInterval& o) const;

  friend QInterval operator+(const QInterval& a, const QInterval& b) {
    return QInterval(a.lo + b.lo, a.hi + b.hi);
  }
  friend QInterval operator-(const QInterval& a, const QInterval& b) {
    return QInterval(a.lo - b.hi, a.hi - b.lo);
  }
  friend QInterval operator-(const QInterval& a) {
    return QInterval(-a.hi, -a.lo);
  }
  friend QInterval operator*(const QInterval& a, const QInterval& b);
  // Division requires 0 not in b.
  friend QInterval operator/(const QInterval& a, const QInterval& b);
  friend QInterval operator+(const QInterval& a, const Rat& c) {
    return QInterval(a.lo + c, a.hi + c);
  }
  friend QInterval operator*(const QInterval& a, const Rat& c) {
    return c >= 0 ? QInterval(a.lo * c, a.hi * c) : QInterval(a.hi * c, a.lo * c);
  }
};

// Certified enclosure of ln(x) with width <= tol, x > 0, pure rational
// arithmetic (atanh series with an explicit geometric tail bound).
QInterval ln_enclosure(const Rat& x, const Rat& tol);

// Monotone extension to intervals: encloses { ln y : y in [x.lo, x.hi] }.
QInterval ln_enclosure(const QInterval& x, const Rat& tol);

}  // namespace bts
