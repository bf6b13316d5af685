#pragma once

#include <functional>
#include <memory>

#include "bts/betafield.hpp"
#include "bts/config.hpp"
#include "bts/intpoly.hpp"
#include "bts/word.hpp"

namespace bts {

// A real number carried as a refinable certified enclosure. Refinement
// halves the width (or better) per step and never moves the true value
// outside the enclosure. Values are immutable; refining returns a new
// value, so sharing across threads is safe.
//
// Backends:
//   Point     - an exact rational; refinement is the identity.
//   Algebraic - an element of Q(beta); sign and equality are exact.
//   Root      - a root of an integer polynomial pinned by a Sturm chain
//               and an interval (lo, hi] containing exactly that root.
//   Opaque    - anything else (logarithms, quotients); an enclosure
//               generator indexed by refinement depth.
class CertValue {
public:
  CertValue() = default;  // exact zero

  static CertValue point(const Rat& x);
  static CertValue algebraic(FieldElem e);
  static CertValue root(std::shared_ptr<const SturmChain> chain, QInterval iv);
  static CertValue opaque(std::function<QInterval(int)> at_depth);

  const QInterval& enclosure() const { return encl_; }
  const Rat& lo() const { return encl_.lo; }
  const Rat& hi() const { return encl_.hi; }
  Rat width() const { return encl_.width(); }
  Rat mid() const { return encl_.mid(); }
  bool is_point() const { return encl_.is_point(); }
  bool is_algebraic() const { return kind_ == Kind::Algebraic; }
  const FieldElem& elem() const;

  CertValue refined_once(const Limits& lim = Limits{}) const;
  CertValue refined_to_width(const Rat& w, const Limits& lim = Limits{}) const;

private:
  enum class Kind { Point, Algebraic, Root, Opaque };
  Kind kind_ = Kind::Point;
  QInterval encl_;
  FieldElem elem_;
  std::shared_ptr<const SturmChain> chain_;
  std::function<QInterval(int)> at_depth_;
  int depth_ = 0;
};

// Refines both values until their enclosures are disjoint, or until both
// are (or collapse to) the same exact value. Exact decisions are used
// where available (points, elements of the same field); otherwise
// equality of two non-point enclosures at the cap is an
// UndecidableComparison error, never a guess.
Ordering cert_cmp(const CertValue& a, const CertValue& b,
                  const Limits& lim = Limits{});

// Enclosure width <= target_width or RefinementCapExceeded.
CertValue refine(const CertValue& v, const Rat& target_width,
                 const Limits& lim = Limits{});

// Arithmetic. Point and same-field algebraic operands stay exact; mixed
// operands fall back to a refinable interval composition.
CertValue cert_add(const CertValue& a, const CertValue& b);
CertValue cert_sub(const CertValue& a, const CertValue& b);
CertValue cert_mul(const CertValue& a, const CertValue& b);

// -ln(x); requires x > 0 (certified during refinement).
CertValue cert_neg_ln(const CertValue& x);

// ln(x); requires x > 0.
CertValue cert_ln(const CertValue& x);

// a / b; requires b bounded away from zero (certified during refinement).
CertValue cert_div(const CertValue& a, const CertValue& b);

}  // namespace bts
