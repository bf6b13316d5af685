#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "bts/certvalue.hpp"
#include "bts/epseq.hpp"

namespace bts {

// The base beta > 1: either an exact rational or a certified root of an
// integer polynomial. Every comparison anywhere in the library that
// involves beta goes through exact rational arithmetic or the certified
// field arithmetic of BetaField; floating point is never trusted.
class BetaSpec {
public:
  static BetaSpec rational(const Rat& q);
  // Isolates the unique root > 1 of p (throws if there is not exactly
  // one). A root that lands exactly on a rational collapses to the
  // rational form.
  static BetaSpec poly_root(const IntPoly& p);
  // CLI syntax: "2", "3/2", "poly:1,-3,-1" (descending coefficients) or
  // "one-exp:31" (greedy expansion of 1).
  static BetaSpec parse(std::string_view text);

  bool is_rational() const { return rat_.has_value(); }
  const Rat& rational_value() const;
  const BetaFieldPtr& field() const;

  CertValue value() const;
  // beta as an element of its own field (field form only).
  FieldElem beta_elem() const;

  std::string describe() const;

private:
  BetaSpec() = default;
  std::optional<Rat> rat_;
  BetaFieldPtr field_;
};

// gamma = beta - 1 if beta is an integer, floor(beta) otherwise. The
// integer-or-not question is decided exactly (a polynomial root that is
// secretly an integer is detected by an exact probe, not by refinement).
// Throws DomainError when gamma would exceed the digit alphabet (9).
int gamma_of(const BetaSpec& beta, const Limits& lim = Limits{});

// The unique beta > 1 with 1 = sum d_i beta^{-i}, i.e. the root of
// x^m - d_1 x^{m-1} - ... - d_m. Verifies post hoc that d really is the
// greedy expansion of 1 for that root and throws DomainError otherwise.
BetaSpec beta_from_one_expansion(const Word& d, const Limits& lim = Limits{});

// Value of the digit sequence: sum s_i beta^{-i}, in closed form over the
// preperiod and period. Exact (point) for rational beta, an element of
// Q(beta) otherwise. Requires digits <= gamma(beta).
CertValue eval_pi(const EPSeq& s, const BetaSpec& beta,
                  const Limits& lim = Limits{});

// Eventually periodic stream of integer coefficients c_1 c_2 ... in
// [-9, 9], indexed from 1; the shape mirrors EPSeq.
struct CoeffStream {
  std::vector<int> pre;
  std::vector<int> per;  // nonempty

  CoeffStream(std::vector<int> pre_, std::vector<int> per_);
  // Digitwise difference upper - lower, aligned over a common preperiod
  // and the lcm of the two periods.
  static CoeffStream difference(const EPSeq& upper, const EPSeq& lower);
  int at(size_t n) const;  // n >= 1
};

// Exact numerator polynomial of sum_{n>=1} c_n z^n - 1 after clearing
// the (1 - z^q) denominator, with all roots at z = 1 divided out.
IntPoly unit_equation_numerator(const CoeffStream& c);

// Certified enclosure of the smallest root in (0, 1) of
// sum c_n z^n = 1, or nullopt when there is no root there. "No root" is
// a proven outcome (Sturm count), not a numeric guess.
std::optional<CertValue> smallest_root_unit(const CoeffStream& c);

}  // namespace bts
