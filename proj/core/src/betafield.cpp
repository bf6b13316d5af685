#include "bts/betafield.hpp"

#include <algorithm>

#include "bts/errors.hpp"

namespace bts {

QPoly::QPoly(std::vector<Rat> coeffs_asc) : c_(std::move(coeffs_asc)) {
  normalize();
}

void QPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::constant(const Rat& c) { return QPoly(std::vector<Rat>{c}); }

QPoly QPoly::x() { return QPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

QPoly QPoly::from_int(const IntPoly& p) {
  std::vector<Rat> c(p.coeffs().size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = Rat(p.coeffs()[i]);
  return QPoly(std::move(c));
}

const Rat& QPoly::coeff(size_t i) const {
  static const Rat zero(0);
  return i < c_.size() ? c_[i] : zero;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rat> out(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
  return QPoly(std::move(out));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  std::vector<Rat> out(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
  return QPoly(std::move(out));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<Rat> out(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return QPoly(std::move(out));
}

QPoly QPoly::times(const Rat& s) const {
  std::vector<Rat> out(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * s;
  return QPoly(std::move(out));
}

QInterval QPoly::eval_interval(const QInterval& iv) const {
  QInterval acc = QInterval::point(Rat(0));
  for (size_t i = c_.size(); i-- > 0;)
    acc = acc * iv + QInterval::point(c_[i]);
  return acc;
}

Rat QPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

IntPoly QPoly::cleared() const {
  Int den = 1;
  for (const Rat& q : c_)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<Int> out(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) {
    Rat scaled = c_[i] * Rat(den);
    out[i] = scaled.get_num();
  }
  return IntPoly(std::move(out)).primitive_part();
}

BetaField::BetaField(IntPoly p, IntPoly sqf, QInterval iv)
    : p_(std::move(p)), sqf_(std::move(sqf)), encl_(std::move(iv)) {
  sign_lo_ = sqf_.sign_at(encl_.lo);
}

std::shared_ptr<const BetaField> BetaField::make(IntPoly defining,
                                                 QInterval isolating) {
  if (defining.degree() < 1)
    throw DomainError("BetaField: defining polynomial must have degree >= 1");
  IntPoly sqf = defining.squarefree_part();
  if (sqf.sign_at(isolating.lo) == 0 || sqf.sign_at(isolating.hi) == 0)
    throw DomainError("BetaField: isolating interval endpoint is a root");
  if (sqf.sign_at(isolating.lo) == sqf.sign_at(isolating.hi))
    throw DomainError("BetaField: interval does not isolate a sign change");
  return std::shared_ptr<const BetaField>(
      new BetaField(std::move(defining), std::move(sqf), std::move(isolating)));
}

QInterval BetaField::enclosure() const {
  std::lock_guard<std::mutex> lock(mu_);
  return encl_;
}

QInterval BetaField::enclosure_of_width(const Rat& w, const Limits& lim) const {
  std::lock_guard<std::mutex> lock(mu_);
  int steps = 0;
  while (encl_.width() > w) {
    if (++steps > lim.refine_cap)
      throw RefinementCapExceeded("beta enclosure refinement cap exceeded");
    Rat mid = encl_.mid();
    int sm = sqf_.sign_at(mid);
    if (sm == 0) {
      // The root is exactly mid; collapse.
      encl_ = QInterval::point(mid);
      break;
    }
    if (sm == sign_lo_)
      encl_ = QInterval(mid, encl_.hi);
    else
      encl_ = QInterval(encl_.lo, mid);
  }
  return encl_;
}

QPoly BetaField::reduce(const QPoly& v) const {
  int d = p_.degree();
  if (v.degree() < d) return v;
  std::vector<Rat> c(v.coeffs());
  Rat lead(p_.leading());
  for (int i = static_cast<int>(c.size()) - 1; i >= d; --i) {
    if (c[i] == 0) continue;
    Rat f = c[i] / lead;
    c[i] = 0;
    for (int j = 0; j < d; ++j) c[i - d + j] -= f * Rat(p_.coeff(j));
  }
  c.resize(d);
  return QPoly(std::move(c));
}

bool BetaField::vanishes(const QPoly& v) const {
  QPoly r = reduce(v);
  if (r.is_zero()) return true;
  IntPoly w = r.cleared();
  IntPoly g = IntPoly::gcd(w, p_);
  if (g.degree() < 1) return false;
  // beta is the only root of p_ in the enclosure, and roots(g) is a
  // subset of roots(p_), so g has a root there iff g(beta) == 0.
  QInterval iv = enclosure();
  if (g.sign_at(iv.lo) == 0 || g.sign_at(iv.hi) == 0)
    throw Error("BetaField::vanishes: enclosure endpoint hit a divisor root");
  return SturmChain::build(g).count_halfopen(iv.lo, iv.hi) > 0;
}

FieldElem::FieldElem(BetaFieldPtr f, QPoly num, QPoly den)
    : f_(std::move(f)), num_(std::move(num)), den_(std::move(den)) {}

FieldElem FieldElem::of_rat(BetaFieldPtr f, const Rat& q) {
  return FieldElem(std::move(f), QPoly::constant(q), QPoly::constant(Rat(1)));
}

FieldElem FieldElem::beta(BetaFieldPtr f) {
  QPoly x = f->reduce(QPoly::x());
  return FieldElem(std::move(f), std::move(x), QPoly::constant(Rat(1)));
}

namespace {
void check_same_field(const FieldElem& a, const FieldElem& b) {
  if (a.field() != b.field())
    throw Error("FieldElem arithmetic across different fields");
}
}  // namespace

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  check_same_field(a, b);
  const BetaField& f = *a.f_;
  return FieldElem(a.f_, f.reduce(a.num_ * b.den_ + b.num_ * a.den_),
                   f.reduce(a.den_ * b.den_));
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  check_same_field(a, b);
  const BetaField& f = *a.f_;
  return FieldElem(a.f_, f.reduce(a.num_ * b.den_ - b.num_ * a.den_),
                   f.reduce(a.den_ * b.den_));
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  check_same_field(a, b);
  const BetaField& f = *a.f_;
  return FieldElem(a.f_, f.reduce(a.num_ * b.num_), f.reduce(a.den_ * b.den_));
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) {
  check_same_field(a, b);
  if (b.is_zero()) throw Error("FieldElem division by zero");
  const BetaField& f = *a.f_;
  return FieldElem(a.f_, f.reduce(a.num_ * b.den_), f.reduce(a.den_ * b.num_));
}

FieldElem FieldElem::operator-() const {
  return FieldElem(f_, num_.times(Rat(-1)), den_);
}

FieldElem FieldElem::plus(const Rat& q) const {
  return FieldElem(f_, f_->reduce(num_ + den_.times(q)), den_);
}

FieldElem FieldElem::times(const Rat& q) const {
  return FieldElem(f_, num_.times(q), den_);
}

bool FieldElem::is_zero() const { return f_->vanishes(num_); }

int FieldElem::sign(const Limits& lim) const {
  if (is_zero()) return 0;
  QInterval iv = f_->enclosure();
  int steps = 0;
  while (true) {
    QInterval n = num_.eval_interval(iv);
    QInterval d = den_.eval_interval(iv);
    int sn = n.definite_sign(), sd = d.definite_sign();
    if (sn != 0 && sd != 0) return sn * sd;
    if (++steps > lim.refine_cap)
      throw RefinementCapExceeded("FieldElem::sign refinement cap exceeded");
    iv = f_->enclosure_of_width(iv.width() / 2, lim);
  }
}

Int FieldElem::floor(const Limits& lim) const {
  QInterval iv = f_->enclosure();
  int steps = 0;
  std::vector<Int> probed;  // integers already proven unequal to the value
  while (true) {
    QInterval d = den_.eval_interval(iv);
    if (d.definite_sign() != 0) {
      QInterval v = num_.eval_interval(iv) / d;
      Int flo = rat_floor(v.lo), fhi = rat_floor(v.hi);
      if (flo == fhi) return flo;
      // Some integer sits inside the value interval; decide exactly
      // whether the value equals one of them.
      for (Int k = rat_ceil(v.lo); k <= fhi; ++k) {
        if (std::find(probed.begin(), probed.end(), k) != probed.end())
          continue;
        if (this->plus(Rat(-k)).is_zero()) return k;
        probed.push_back(k);
      }
    }
    if (++steps > lim.refine_cap)
      throw UndecidableDigit("floor undecided at refinement cap");
    iv = f_->enclosure_of_width(iv.width() / 2, lim);
  }
}

Int FieldElem::ceil(const Limits& lim) const { return -((-*this).floor(lim)); }

QInterval FieldElem::enclosure() const {
  QInterval iv = f_->enclosure();
  Limits lim;
  int guard = 0;
  while (true) {
    QInterval d = den_.eval_interval(iv);
    if (d.definite_sign() != 0) return num_.eval_interval(iv) / d;
    if (++guard > lim.refine_cap)
      throw RefinementCapExceeded("FieldElem::enclosure: denominator pinched");
    iv = f_->enclosure_of_width(iv.width() / 2, lim);
  }
}

QInterval FieldElem::enclosure_of_width(const Rat& w, const Limits& lim) const {
  QInterval iv = f_->enclosure();
  int steps = 0;
  QInterval out = enclosure();
  while (out.width() > w) {
    if (++steps > lim.refine_cap)
      throw RefinementCapExceeded("FieldElem enclosure refinement cap exceeded");
    iv = f_->enclosure_of_width(iv.width() / 2, lim);
    QInterval d = den_.eval_interval(iv);
    if (d.definite_sign() == 0) continue;
    out = out.intersect(num_.eval_interval(iv) / d);
  }
  return out;
}

}  // namespace bts
