#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "bts/config.hpp"
#include "bts/intpoly.hpp"

namespace bts {

// Rational-coefficient polynomial; just enough for arithmetic modulo a
// defining polynomial.
class QPoly {
public:
  QPoly() = default;
  explicit QPoly(std::vector<Rat> coeffs_asc);
  static QPoly constant(const Rat& c);
  static QPoly x();
  static QPoly from_int(const IntPoly& p);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rat& coeff(size_t i) const;
  const std::vector<Rat>& coeffs() const { return c_; }

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly times(const Rat& s) const;

  QInterval eval_interval(const QInterval& iv) const;
  Rat eval(const Rat& x) const;

  // Clears denominators; result is primitive with the sign pattern of
  // the input.
  IntPoly cleared() const;

  bool operator==(const QPoly& o) const { return c_ == o.c_; }

private:
  void normalize();
  std::vector<Rat> c_;
};

// The real algebraic number beta: a root of an integer polynomial,
// pinned down by an isolating interval that contains exactly one
// distinct root and whose endpoints are not roots. The interval is a
// monotonically shrinking cache shared by all users of the field;
// refinement is thread-safe.
class BetaField {
public:
  static std::shared_ptr<const BetaField> make(IntPoly defining,
                                               QInterval isolating);

  const IntPoly& defining() const { return p_; }
  int degree() const { return p_.degree(); }

  QInterval enclosure() const;
  // Shrinks the cached interval to width <= w; throws
  // RefinementCapExceeded after lim.refine_cap halvings.
  QInterval enclosure_of_width(const Rat& w, const Limits& lim) const;

  // v(beta) as a rational polynomial of degree < deg(defining).
  QPoly reduce(const QPoly& v) const;

  // Exact test of v(beta) == 0 (v need not be reduced).
  bool vanishes(const QPoly& v) const;

private:
  BetaField(IntPoly p, IntPoly sqf, QInterval iv);
  IntPoly p_;
  IntPoly sqf_;  // same real roots, all simple; used for sign bisection
  mutable std::mutex mu_;
  mutable QInterval encl_;
  mutable int sign_lo_;  // sign of sqf_ at encl_.lo (never 0)
};

using BetaFieldPtr = std::shared_ptr<const BetaField>;

// An element of Q(beta), stored as num(beta)/den(beta) with both parts
// reduced modulo the defining polynomial. All predicates are exact: zero
// tests go through polynomial gcds, sign tests refine the shared beta
// enclosure until the value's interval is separated from zero.
class FieldElem {
public:
  FieldElem() = default;  // invalid; assign before use
  static FieldElem of_rat(BetaFieldPtr f, const Rat& q);
  static FieldElem beta(BetaFieldPtr f);

  const BetaFieldPtr& field() const { return f_; }
  bool valid() const { return static_cast<bool>(f_); }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  FieldElem operator-() const;
  FieldElem plus(const Rat& q) const;
  FieldElem times(const Rat& q) const;

  bool is_zero() const;
  int sign(const Limits& lim = Limits{}) const;
  bool equals(const FieldElem& o) const { return (*this - o).is_zero(); }
  // Syntactic identity of the stored num/den polynomials. Implies equal
  // values; the converse can fail when the defining polynomial is
  // reducible, so use equals() when an exact decision is required.
  bool same_representation(const FieldElem& o) const {
    return f_ == o.f_ && num_ == o.num_ && den_ == o.den_;
  }

  // Exact floor/ceil; certified by refinement with exact integer probes,
  // so a value that is exactly an integer is still decided.
  Int floor(const Limits& lim = Limits{}) const;
  Int ceil(const Limits& lim = Limits{}) const;

  QInterval enclosure() const;
  QInterval enclosure_of_width(const Rat& w, const Limits& lim) const;

private:
  FieldElem(BetaFieldPtr f, QPoly num, QPoly den);
  BetaFieldPtr f_;
  QPoly num_, den_;
};

}  // namespace bts
