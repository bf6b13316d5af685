#include "bts/expansion.hpp"

#include <mutex>
#include <vector>

namespace bts {

OrbitPoint OrbitPoint::make(const BetaSpec& beta, const Rat& x) {
  OrbitPoint p;
  p.beta_ = std::make_shared<const BetaSpec>(beta);
  if (beta.is_rational()) {
    p.rational_form_ = true;
    p.q_ = x;
  } else {
    p.rational_form_ = false;
    p.e_ = FieldElem::of_rat(beta.field(), x);
  }
  return p;
}

OrbitPoint OrbitPoint::from_elem(const BetaSpec& beta, FieldElem e) {
  if (beta.is_rational() || e.field() != beta.field())
    throw Error("OrbitPoint::from_elem: element does not live in beta's field");
  OrbitPoint p;
  p.beta_ = std::make_shared<const BetaSpec>(beta);
  p.rational_form_ = false;
  p.e_ = std::move(e);
  return p;
}

const BetaSpec& OrbitPoint::beta() const {
  if (!beta_) throw Error("OrbitPoint: uninitialized");
  return *beta_;
}

OrbitPoint OrbitPoint::times_beta() const {
  OrbitPoint p = *this;
  if (rational_form_) {
    p.q_ = q_ * beta().rational_value();
  } else {
    p.e_ = e_ * FieldElem::beta(e_.field());
  }
  return p;
}

OrbitPoint OrbitPoint::minus(const Int& digit) const {
  OrbitPoint p = *this;
  Rat d(digit);
  if (rational_form_)
    p.q_ = q_ - d;
  else
    p.e_ = e_.plus(-d);
  return p;
}

Int OrbitPoint::floor(const Limits& lim) const {
  return rational_form_ ? rat_floor(q_) : e_.floor(lim);
}

Int OrbitPoint::ceil(const Limits& lim) const {
  return rational_form_ ? rat_ceil(q_) : e_.ceil(lim);
}

bool OrbitPoint::is_zero() const {
  return rational_form_ ? q_ == 0 : e_.is_zero();
}

int OrbitPoint::sign(const Limits& lim) const {
  return rational_form_ ? sgn(q_) : e_.sign(lim);
}

int OrbitPoint::cmp(const OrbitPoint& o, const Limits& lim) const {
  if (rational_form_ && o.rational_form_) {
    return q_ < o.q_ ? -1 : q_ > o.q_ ? 1 : 0;
  }
  if (!rational_form_ && !o.rational_form_) return (e_ - o.e_).sign(lim);
  const OrbitPoint& fieldish = rational_form_ ? o : *this;
  FieldElem lifted = FieldElem::of_rat(fieldish.e_.field(),
                                       rational_form_ ? q_ : o.q_);
  FieldElem diff = rational_form_ ? lifted - o.e_ : e_ - lifted;
  return diff.sign(lim);
}

int OrbitPoint::cmp_rat(const Rat& q, const Limits& lim) const {
  if (rational_form_) return q_ < q ? -1 : q_ > q ? 1 : 0;
  return e_.plus(-q).sign(lim);
}

bool OrbitPoint::same_state(const OrbitPoint& o) const {
  if (rational_form_ != o.rational_form_) return false;
  return rational_form_ ? q_ == o.q_ : e_.same_representation(o.e_);
}

CertValue OrbitPoint::to_cert() const {
  return rational_form_ ? CertValue::point(q_) : CertValue::algebraic(e_);
}

Orbit::Orbit(ExpansionKind kind, const BetaSpec& beta, OrbitPoint x)
    : kind_(kind), beta_spec_(beta), x_(std::move(x)) {}

Orbit Orbit::greedy(const BetaSpec& beta, OrbitPoint x) {
  Limits lim;
  if (x.sign(lim) < 0 || x.cmp_rat(Rat(1), lim) > 0)
    throw DomainError("greedy expansion needs x in [0, 1]");
  return Orbit(ExpansionKind::Greedy, beta, std::move(x));
}

Orbit Orbit::greedy_of_one(const BetaSpec& beta, const Limits& lim) {
  (void)lim;
  return greedy(beta, OrbitPoint::make(beta, Rat(1)));
}

Orbit Orbit::quasi_greedy(const BetaSpec& beta, OrbitPoint x) {
  Limits lim;
  if (x.sign(lim) <= 0 || x.cmp_rat(Rat(1), lim) > 0)
    throw DomainError("quasi-greedy expansion needs x in (0, 1]");
  return Orbit(ExpansionKind::QuasiGreedy, beta, std::move(x));
}

int Orbit::next_digit(const Limits& lim) {
  ++steps_;
  if (kind_ == ExpansionKind::Greedy) {
    if (finished_) return 0;
    // b(1, beta) = gamma . b(beta - gamma, beta).
    if (x_.cmp_rat(Rat(1), lim) == 0) {
      int g = gamma_of(beta_spec_, lim);
      x_ = x_.times_beta().minus(Int(g)).minus(Int(0));
      // x was 1, so the new state is beta - gamma.
      if (x_.is_zero()) finished_ = true;
      return g;
    }
    OrbitPoint y = x_.times_beta();
    Int d = y.floor(lim);
    x_ = y.minus(d);
    if (x_.is_zero()) finished_ = true;
    return static_cast<int>(d.get_si());
  }
  OrbitPoint y = x_.times_beta();
  Int a = y.ceil(lim) - 1;
  x_ = y.minus(a);
  return static_cast<int>(a.get_si());
}

namespace {

Word digits_from_exact_orbit(Orbit orbit, size_t n, const Limits& lim) {
  Word w;
  for (size_t i = 0; i < n; ++i) w.push_back(orbit.next_digit(lim));
  return w;
}

// Interval-only digit extraction for values with no exact form. A floor
// decision that stays straddled at the cap raises UndecidableDigit.
Word digits_from_certified(const CertValue& x0, const BetaSpec& beta, size_t n,
                           ExpansionKind kind, const Limits& lim) {
  CertValue cur = x0;
  CertValue bval = beta.value();
  Word w;
  for (size_t i = 0; i < n; ++i) {
    CertValue y = cert_mul(cur, bval);
    Int d;
    int steps = 0;
    while (true) {
      Int lo_i = kind == ExpansionKind::Greedy ? rat_floor(y.lo())
                                               : rat_ceil(y.lo()) - 1;
      Int hi_i = kind == ExpansionKind::Greedy ? rat_floor(y.hi())
                                               : rat_ceil(y.hi()) - 1;
      if (lo_i == hi_i) {
        d = lo_i;
        break;
      }
      if (++steps > lim.refine_cap)
        throw UndecidableDigit("digit undecided at refinement cap (position " +
                               std::to_string(i + 1) + ")");
      y = y.refined_once(lim);
    }
    w.push_back(static_cast<int>(d.get_si()));
    cur = cert_sub(y, CertValue::point(Rat(d)));
  }
  return w;
}

// Chooses the exact orbit path when x has an exact representation
// compatible with beta.
std::optional<OrbitPoint> exact_point(const CertValue& x, const BetaSpec& beta) {
  if (x.is_point()) return OrbitPoint::make(beta, x.lo());
  if (x.is_algebraic() && !beta.is_rational() &&
      x.elem().field() == beta.field())
    return OrbitPoint::from_elem(beta, x.elem());
  return std::nullopt;
}

}  // namespace

Word greedy_digits(const CertValue& x, const BetaSpec& beta, size_t n,
                   const Limits& lim) {
  if (n == 0) throw DomainError("digit count must be >= 1");
  if (auto p = exact_point(x, beta))
    return digits_from_exact_orbit(Orbit::greedy(beta, *p), n, lim);
  if (x.lo() < 0 || x.hi() > 1)
    throw DomainError("greedy expansion needs x in [0, 1)");
  return digits_from_certified(x, beta, n, ExpansionKind::Greedy, lim);
}

Word quasi_greedy_digits(const CertValue& x, const BetaSpec& beta, size_t n,
                         const Limits& lim) {
  if (n == 0) throw DomainError("digit count must be >= 1");
  if (auto p = exact_point(x, beta))
    return digits_from_exact_orbit(Orbit::quasi_greedy(beta, *p), n, lim);
  if (x.lo() <= 0 || x.hi() > 1)
    throw DomainError("quasi-greedy expansion needs x in (0, 1]");
  return digits_from_certified(x, beta, n, ExpansionKind::QuasiGreedy, lim);
}

struct AlphaSeq::Stream {
  Orbit orbit;
  Limits lim;
  std::mutex mu;
  std::vector<int> digits;

  Stream(const BetaSpec& beta, const Limits& l)
      : orbit(Orbit::quasi_greedy(beta, OrbitPoint::make(beta, Rat(1)))),
        lim(l) {}
};

AlphaSeq AlphaSeq::from_seq(EPSeq s) {
  AlphaSeq a;
  a.seq_ = std::move(s);
  return a;
}

AlphaSeq AlphaSeq::stream(const BetaSpec& beta) {
  AlphaSeq a;
  a.stream_ = std::make_shared<Stream>(beta, Limits{});
  return a;
}

const EPSeq& AlphaSeq::seq() const {
  if (!seq_) throw Error("AlphaSeq: streamed alpha has no exact EPSeq form");
  return *seq_;
}

int AlphaSeq::digit_at(size_t i) const {
  if (seq_) return seq_->digit_at(i);
  std::lock_guard<std::mutex> lock(stream_->mu);
  while (stream_->digits.size() <= i)
    stream_->digits.push_back(stream_->orbit.next_digit(stream_->lim));
  return stream_->digits[i];
}

AlphaSeq alpha_of(const BetaSpec& beta, const Limits& lim) {
  Orbit orbit = Orbit::quasi_greedy(beta, OrbitPoint::make(beta, Rat(1)));
  std::vector<OrbitPoint> states;
  states.push_back(orbit.state());
  std::vector<int> digits;
  for (int step = 0; step < lim.admissibility_depth; ++step) {
    digits.push_back(orbit.next_digit(lim));
    const OrbitPoint& s = orbit.state();
    for (size_t j = 0; j < states.size(); ++j) {
      if (s.same_state(states[j])) {
        Word pre(std::vector<int>(digits.begin(), digits.begin() + j));
        Word per(std::vector<int>(digits.begin() + j, digits.end()));
        return AlphaSeq::from_seq(EPSeq::make(std::move(pre), std::move(per)));
      }
    }
    states.push_back(s);
  }
  return AlphaSeq::stream(beta);
}

Ordering cmp_vs_alpha(const EPSeq& s, const AlphaSeq& alpha, const Limits& lim) {
  if (alpha.exact()) return cmp(s, alpha.seq());
  for (int i = 0; i < lim.admissibility_depth; ++i) {
    int ds = s.digit_at(i);
    int da = alpha.digit_at(i);
    if (ds < da) return Ordering::Less;
    if (ds > da) return Ordering::Greater;
  }
  throw InconclusiveAtDepth(
      "sequence agrees with streamed alpha(beta) to the admissibility depth");
}

bool is_admissible_vs(const EPSeq& s, const AlphaSeq& alpha, const Limits& lim) {
  for (size_t k = 0; k < s.shift_states(); ++k) {
    if (cmp_vs_alpha(shift(s, k), alpha, lim) != Ordering::Less) return false;
  }
  return true;
}

bool is_admissible(const EPSeq& s, const BetaSpec& beta, const Limits& lim) {
  return is_admissible_vs(s, alpha_of(beta, lim), lim);
}

bool is_quasi_admissible_vs(const EPSeq& s, const AlphaSeq& alpha,
                            const Limits& lim) {
  for (size_t k = 0; k < s.shift_states(); ++k) {
    EPSeq sh = shift(s, k);
    if (sh.is_zero()) return false;
    if (cmp_vs_alpha(sh, alpha, lim) == Ordering::Greater) return false;
  }
  return true;
}

bool is_quasi_admissible(const EPSeq& s, const BetaSpec& beta,
                         const Limits& lim) {
  return is_quasi_admissible_vs(s, alpha_of(beta, lim), lim);
}

EPSeq quasi_from_finite_greedy(const Word& w, const EPSeq& alpha) {
  if (w.empty() || w.last() < 1)
    throw DomainError("splice rule needs a finite word with nonzero last digit");
  std::vector<int> pre = w.digits();
  pre.back() -= 1;
  for (int d : alpha.preperiod().digits()) pre.push_back(d);
  return EPSeq::make(Word(std::move(pre)), alpha.period());
}

EPSeq quasi_one_epseq(const Word& one_expansion) {
  if (one_expansion.empty() || one_expansion.last() < 1)
    throw DomainError("splice rule needs a finite word with nonzero last digit");
  std::vector<int> per = one_expansion.digits();
  per.back() -= 1;
  bool all_zero = true;
  for (int d : per) all_zero = all_zero && d == 0;
  if (all_zero)
    throw DomainError("degenerate one-expansion: splice would be the zero sequence");
  return EPSeq::periodic(Word(std::move(per)));
}

std::optional<EPSeq> greedy_epseq(const OrbitPoint& x, const BetaSpec& beta,
                                  const Limits& lim) {
  Orbit orbit = Orbit::greedy(beta, x);
  std::vector<OrbitPoint> states;
  states.push_back(orbit.state());
  std::vector<int> digits;
  for (int step = 0; step < lim.admissibility_depth; ++step) {
    digits.push_back(orbit.next_digit(lim));
    if (orbit.finished())
      return EPSeq::from_word(Word(std::move(digits)));
    const OrbitPoint& s = orbit.state();
    for (size_t j = 0; j < states.size(); ++j) {
      if (s.same_state(states[j])) {
        Word pre(std::vector<int>(digits.begin(), digits.begin() + j));
        Word per(std::vector<int>(digits.begin() + j, digits.end()));
        return EPSeq::make(std::move(pre), std::move(per));
      }
    }
    states.push_back(s);
  }
  return std::nullopt;
}

}  // namespace bts
