#pragma once

#include <memory>
#include <optional>

#include "bts/beta.hpp"
#include "bts/certvalue.hpp"
#include "bts/epseq.hpp"

namespace bts {

enum class ExpansionKind { Greedy, QuasiGreedy };

// A number carried exactly through T_beta orbits: a rational when beta
// is rational, an element of Q(beta) otherwise. Keeping orbits exact is
// what makes finite-expansion detection and cycle detection sound; in
// certified-interval mode a remainder is never declared zero, so that
// mode never feeds these paths.
class OrbitPoint {
public:
  OrbitPoint() = default;
  static OrbitPoint make(const BetaSpec& beta, const Rat& x);
  static OrbitPoint from_elem(const BetaSpec& beta, FieldElem e);

  OrbitPoint times_beta() const;
  OrbitPoint minus(const Int& digit) const;
  Int floor(const Limits& lim = Limits{}) const;
  Int ceil(const Limits& lim = Limits{}) const;
  bool is_zero() const;
  int sign(const Limits& lim = Limits{}) const;
  // Sign of *this - o (exact).
  int cmp(const OrbitPoint& o, const Limits& lim = Limits{}) const;
  int cmp_rat(const Rat& q, const Limits& lim = Limits{}) const;
  // Syntactic state identity; sound for cycle declaration.
  bool same_state(const OrbitPoint& o) const;
  CertValue to_cert() const;

private:
  const BetaSpec& beta() const;
  std::shared_ptr<const BetaSpec> beta_;
  bool rational_form_ = true;
  Rat q_;
  FieldElem e_;
};

// Step-by-step digit generator for the greedy / quasi-greedy expansion
// of an exactly represented x. Greedy orbits that reach exactly zero are
// detected and emit zeros from then on.
class Orbit {
public:
  static Orbit greedy(const BetaSpec& beta, OrbitPoint x);
  // The extended-domain greedy orbit of 1: first digit gamma, then the
  // orbit of beta - gamma.
  static Orbit greedy_of_one(const BetaSpec& beta, const Limits& lim = Limits{});
  static Orbit quasi_greedy(const BetaSpec& beta, OrbitPoint x);

  int next_digit(const Limits& lim = Limits{});
  // Greedy orbit has terminated (remainder exactly zero).
  bool finished() const { return finished_; }
  // State entering the next step; for a greedy orbit after k digits this
  // is T_beta^k(x).
  const OrbitPoint& state() const { return x_; }
  size_t steps() const { return steps_; }

private:
  Orbit(ExpansionKind kind, const BetaSpec& beta, OrbitPoint x);
  ExpansionKind kind_;
  BetaSpec beta_spec_;
  OrbitPoint x_;
  bool finished_ = false;
  size_t steps_ = 0;
};

// First n greedy digits of x. Exact for point/algebraic x; for other
// certified values each floor decision is made by refinement and an
// undecidable digit raises UndecidableDigit. x = 1 (known exactly) uses
// the gamma . b(beta-gamma) convention.
Word greedy_digits(const CertValue& x, const BetaSpec& beta, size_t n,
                   const Limits& lim = Limits{});

// First n digits of the unique never-eventually-zero expansion of
// x in (0, 1], via the recursion a = ceil(beta x) - 1.
Word quasi_greedy_digits(const CertValue& x, const BetaSpec& beta, size_t n,
                         const Limits& lim = Limits{});

// alpha(beta) = quasi-greedy expansion of 1. Exactly representable
// alphas (the orbit of 1 terminates or cycles within the depth limit)
// come back as EPSeq; otherwise a lazy digit stream with a shared,
// mutex-guarded prefix cache.
class AlphaSeq {
public:
  static AlphaSeq from_seq(EPSeq s);
  static AlphaSeq stream(const BetaSpec& beta);

  bool exact() const { return seq_.has_value(); }
  const EPSeq& seq() const;
  int digit_at(size_t i) const;

private:
  AlphaSeq() = default;
  std::optional<EPSeq> seq_;
  struct Stream;
  std::shared_ptr<Stream> stream_;
};

AlphaSeq alpha_of(const BetaSpec& beta, const Limits& lim = Limits{});

// Lexicographic comparison of an EPSeq against alpha. For a streamed
// alpha the scan is capped at lim.admissibility_depth digits and an
// undecided comparison raises InconclusiveAtDepth.
Ordering cmp_vs_alpha(const EPSeq& s, const AlphaSeq& alpha,
                      const Limits& lim = Limits{});

// Parry criterion: s is a greedy expansion of some x in [0,1) iff every
// shift is lexicographically below alpha(beta).
bool is_admissible(const EPSeq& s, const BetaSpec& beta,
                   const Limits& lim = Limits{});
bool is_admissible_vs(const EPSeq& s, const AlphaSeq& alpha,
                      const Limits& lim = Limits{});

// Quasi-greedy criterion: 0^inf < sigma^k(s) <= alpha(beta) for all k.
bool is_quasi_admissible(const EPSeq& s, const BetaSpec& beta,
                         const Limits& lim = Limits{});
bool is_quasi_admissible_vs(const EPSeq& s, const AlphaSeq& alpha,
                            const Limits& lim = Limits{});

// Splice rule: if b(x) = w1..wm 0^inf with wm >= 1, the quasi-greedy
// expansion of x is w1..w{m-1} (wm - 1) alpha(beta).
EPSeq quasi_from_finite_greedy(const Word& w, const EPSeq& alpha);

// Same rule applied to x = 1: (d1..d{m-1}(dm - 1))^inf.
EPSeq quasi_one_epseq(const Word& one_expansion);

// Greedy expansion of an exact x in [0,1) as an EPSeq, by running the
// orbit until it terminates or revisits a state; nullopt when neither
// happens within lim.admissibility_depth steps.
std::optional<EPSeq> greedy_epseq(const OrbitPoint& x, const BetaSpec& beta,
                                  const Limits& lim = Limits{});

}  // namespace bts
