#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bts/rational.hpp"

namespace bts {

// Dense univariate polynomial with integer coefficients, ascending order
// (c[i] is the coefficient of x^i). The zero polynomial has no
// coefficients and degree -1.
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs_asc);
  // Convenience for literals written highest degree first, e.g.
  // {1,-3,-1} is x^2 - 3x - 1 (the CLI's poly: syntax).
  static IntPoly from_desc(const std::vector<long>& coeffs_desc);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Int& leading() const;
  const std::vector<Int>& coeffs() const { return c_; }
  const Int& coeff(size_t i) const;

  Rat eval(const Rat& x) const;
  int sign_at(const Rat& x) const { return sgn(eval(x)); }
  // Interval Horner evaluation; encloses { p(x) : x in iv }.
  QInterval eval_interval(const QInterval& iv) const;

  IntPoly derivative() const;
  IntPoly primitive_part() const;  // divided by positive content

  friend IntPoly operator-(const IntPoly& p);
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly times_xk(size_t k) const;
  IntPoly times(const Int& s) const;

  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  // Exact division by (x - 1); throws unless 1 is a root.
  IntPoly deflate_at_one() const;

  // Polynomial gcd over Q, returned as a primitive integer polynomial
  // with positive leading coefficient (subresultant-free primitive PRS;
  // fine at the degrees handled here).
  static IntPoly gcd(IntPoly a, IntPoly b);

  // Squarefree part p / gcd(p, p'), primitive.
  IntPoly squarefree_part() const;

  std::string str() const;  // human-readable, for messages

private:
  void normalize();
  std::vector<Int> c_;
};

// Signed pseudo-remainder: r congruent to (positive constant) * f modulo
// g, with deg r < deg g. Requires g nonzero.
IntPoly signed_prem(const IntPoly& f, const IntPoly& g);

// Sturm chain of p. With the usual skip-zeros variation count,
// V(a) - V(b) equals the number of distinct roots in the half-open
// interval (a, b]; only the left endpoint must be a non-root.
class SturmChain {
public:
  static SturmChain build(const IntPoly& p);
  int variations_at(const Rat& x) const;
  // Distinct roots in (a, b]; requires p(a) != 0 and a <= b.
  int count_halfopen(const Rat& a, const Rat& b) const;
  // Distinct roots in the open interval (a, b).
  int count_open(const Rat& a, const Rat& b) const;
  const IntPoly& poly() const { return chain_.front(); }

private:
  std::vector<IntPoly> chain_;
};

// All real roots of p are in (-bound, bound).
Rat cauchy_root_bound(const IntPoly& p);

// Result of isolating a single root: either an exact rational root or an
// open isolating interval with non-root endpoints containing exactly one
// distinct root.
struct IsolatedRoot {
  bool exact = false;
  Rat value;        // set when exact
  QInterval range;  // set when !exact; degenerate copy of value when exact
};

// Isolates the unique root of p greater than `lower`. Throws DomainError
// if the number of distinct roots in (lower, +inf) is not exactly one.
IsolatedRoot isolate_unique_root_above(const IntPoly& p, const Rat& lower);

// Isolates the smallest root of p in the open interval (0, 1), or
// nullopt when p has no root there. p(0) and p(1) must be nonzero.
std::optional<IsolatedRoot> isolate_smallest_root_01(const IntPoly& p);

}  // namespace bts
