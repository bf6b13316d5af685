#include "bts/beta.hpp"

#include <numeric>
#include <sstream>

#include "bts/expansion.hpp"

namespace bts {

BetaSpec BetaSpec::rational(const Rat& q) {
  if (q <= 1) throw DomainError("beta must be > 1, got " + rat_str(q));
  BetaSpec b;
  b.rat_ = q;
  return b;
}

BetaSpec BetaSpec::poly_root(const IntPoly& p) {
  IsolatedRoot r = isolate_unique_root_above(p, Rat(1));
  if (r.exact) return rational(r.value);
  BetaSpec b;
  b.field_ = BetaField::make(p, r.range);
  return b;
}

BetaSpec BetaSpec::parse(std::string_view text) {
  if (text.rfind("poly:", 0) == 0) {
    std::string list(text.substr(5));
    std::vector<long> coeffs;
    std::istringstream is(list);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      try {
        coeffs.push_back(std::stol(tok));
      } catch (const std::exception&) {
        throw ParseError("bad coefficient in poly: spec: '" + tok + "'");
      }
    }
    if (coeffs.empty()) throw ParseError("poly: spec needs coefficients");
    return poly_root(IntPoly::from_desc(coeffs));
  }
  if (text.rfind("one-exp:", 0) == 0) {
    return beta_from_one_expansion(Word::parse(text.substr(8)));
  }
  return rational(parse_rational(text));
}

const Rat& BetaSpec::rational_value() const {
  if (!rat_) throw Error("BetaSpec: not in rational form");
  return *rat_;
}

const BetaFieldPtr& BetaSpec::field() const {
  if (!field_) throw Error("BetaSpec: not in polynomial-root form");
  return field_;
}

CertValue BetaSpec::value() const {
  if (rat_) return CertValue::point(*rat_);
  return CertValue::algebraic(FieldElem::beta(field_));
}

FieldElem BetaSpec::beta_elem() const { return FieldElem::beta(field()); }

std::string BetaSpec::describe() const {
  if (rat_) return rat_str(*rat_);
  std::ostringstream os;
  QInterval iv = field_->enclosure();
  os << "root of " << field_->defining().str() << " in ("
     << rat_double(iv.lo) << ", " << rat_double(iv.hi) << ")";
  return os.str();
}

int gamma_of(const BetaSpec& beta, const Limits& lim) {
  Int g;
  if (beta.is_rational()) {
    const Rat& q = beta.rational_value();
    g = (q.get_den() == 1) ? Int(q.get_num() - 1) : rat_floor(q);
  } else {
    FieldElem b = beta.beta_elem();
    Int f = b.floor(lim);
    bool integral = b.plus(Rat(-f)).is_zero();
    g = integral ? f - 1 : f;
  }
  if (g > kMaxDigit)
    throw DomainError("gamma(beta) = " + g.get_str() +
                      " exceeds the digit alphabet 0..9");
  return static_cast<int>(g.get_si());
}

BetaSpec beta_from_one_expansion(const Word& d, const Limits& lim) {
  if (d.empty()) throw DomainError("one-expansion word must be nonempty");
  if (d.at(0) < 1) throw DomainError("one-expansion must start with a digit >= 1");
  if (d.last() == 0) throw DomainError("one-expansion must end with a nonzero digit");
  size_t m = d.size();
  // x^m - d_1 x^{m-1} - ... - d_m
  std::vector<Int> coeffs(m + 1, Int(0));
  coeffs[m] = 1;
  for (size_t i = 1; i <= m; ++i) coeffs[m - i] = -d.at(i - 1);
  BetaSpec beta = BetaSpec::poly_root(IntPoly(std::move(coeffs)));
  // The produced root must reproduce d as the greedy expansion of 1
  // (with exact remainder zero after m digits).
  Orbit orbit = Orbit::greedy_of_one(beta, lim);
  for (size_t i = 0; i < m; ++i) {
    if (orbit.finished())
      throw DomainError("verification failed: greedy expansion of 1 terminates early for " +
                        d.str());
    if (orbit.next_digit(lim) != d.at(i))
      throw DomainError("verification failed: '" + d.str() +
                        "' is not the greedy expansion of 1 for its own root");
  }
  if (!orbit.finished())
    throw DomainError("verification failed: greedy expansion of 1 continues past '" +
                      d.str() + "'");
  return beta;
}

CertValue eval_pi(const EPSeq& s, const BetaSpec& beta, const Limits& lim) {
  if (s.max_digit() > gamma_of(beta, lim))
    throw DomainError("sequence digit exceeds gamma(beta)");
  const Word& pre = s.preperiod();
  const Word& per = s.period();
  long p = static_cast<long>(pre.size());
  long q = static_cast<long>(per.size());
  if (beta.is_rational()) {
    Rat inv = Rat(1) / beta.rational_value();
    Rat acc = 0;
    for (long i = p - 1; i >= 0; --i) acc = (acc + pre.at(i)) * inv;
    Rat perv = 0;
    for (long j = q - 1; j >= 0; --j) perv = (perv + per.at(j)) * inv;
    acc += rat_pow(inv, p) * perv / (1 - rat_pow(inv, q));
    return CertValue::point(acc);
  }
  FieldElem b = beta.beta_elem();
  FieldElem one = FieldElem::of_rat(beta.field(), Rat(1));
  FieldElem inv = one / b;
  FieldElem acc = FieldElem::of_rat(beta.field(), Rat(0));
  for (long i = p - 1; i >= 0; --i) acc = (acc.plus(Rat(pre.at(i)))) * inv;
  FieldElem perv = FieldElem::of_rat(beta.field(), Rat(0));
  for (long j = q - 1; j >= 0; --j) perv = (perv.plus(Rat(per.at(j)))) * inv;
  FieldElem invp = one;
  for (long i = 0; i < p; ++i) invp = invp * inv;
  FieldElem invq = one;
  for (long j = 0; j < q; ++j) invq = invq * inv;
  acc = acc + invp * perv / (one - invq);
  return CertValue::algebraic(acc);
}

CoeffStream::CoeffStream(std::vector<int> pre_, std::vector<int> per_)
    : pre(std::move(pre_)), per(std::move(per_)) {
  if (per.empty()) throw DomainError("CoeffStream: empty period");
  for (int c : pre)
    if (c < -kMaxDigit || c > kMaxDigit)
      throw DomainError("CoeffStream entry out of range");
  for (int c : per)
    if (c < -kMaxDigit || c > kMaxDigit)
      throw DomainError("CoeffStream entry out of range");
}

CoeffStream CoeffStream::difference(const EPSeq& upper, const EPSeq& lower) {
  size_t p = std::max(upper.preperiod().size(), lower.preperiod().size());
  size_t q = std::lcm(upper.period().size(), lower.period().size());
  std::vector<int> pre(p), per(q);
  for (size_t i = 0; i < p; ++i)
    pre[i] = upper.digit_at(i) - lower.digit_at(i);
  for (size_t j = 0; j < q; ++j)
    per[j] = upper.digit_at(p + j) - lower.digit_at(p + j);
  return CoeffStream(std::move(pre), std::move(per));
}

int CoeffStream::at(size_t n) const {
  if (n == 0) throw Error("CoeffStream::at is 1-based");
  size_t i = n - 1;
  if (i < pre.size()) return pre[i];
  return per[(i - pre.size()) % per.size()];
}

IntPoly unit_equation_numerator(const CoeffStream& c) {
  size_t p = c.pre.size(), q = c.per.size();
  // P(z) = sum pre_i z^i (i = 1..p), Q(z) = sum per_j z^j (j = 1..q).
  std::vector<Int> pc(p + 1, Int(0));
  for (size_t i = 0; i < p; ++i) pc[i + 1] = c.pre[i];
  IntPoly P(std::move(pc));
  std::vector<Int> qc(q + 1, Int(0));
  for (size_t j = 0; j < q; ++j) qc[j + 1] = c.per[j];
  IntPoly Q(std::move(qc));
  // (P - 1)(1 - z^q) + z^p Q  — the numerator of sum c_n z^n - 1 over
  // the common denominator (1 - z^q).
  IntPoly one_minus_zq = IntPoly(std::vector<Int>{Int(1)}) -
                         IntPoly(std::vector<Int>{Int(1)}).times_xk(q);
  IntPoly N = (P - IntPoly(std::vector<Int>{Int(1)})) * one_minus_zq +
              Q.times_xk(p);
  while (!N.is_zero() && N.eval(Rat(1)) == 0) N = N.deflate_at_one();
  return N;
}

std::optional<CertValue> smallest_root_unit(const CoeffStream& c) {
  IntPoly N = unit_equation_numerator(c);
  auto iso = isolate_smallest_root_01(N);
  if (!iso) return std::nullopt;
  if (iso->exact) return CertValue::point(iso->value);
  auto chain = std::make_shared<SturmChain>(SturmChain::build(N));
  return CertValue::root(std::move(chain), iso->range);
}

}  // namespace bts
