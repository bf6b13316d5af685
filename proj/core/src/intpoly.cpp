#include "bts/intpoly.hpp"

#include <algorithm>
#include <sstream>

namespace bts {

IntPoly::IntPoly(std::vector<Int> coeffs_asc) : c_(std::move(coeffs_asc)) {
  normalize();
}

IntPoly IntPoly::from_desc(const std::vector<long>& coeffs_desc) {
  std::vector<Int> asc(coeffs_desc.size());
  for (size_t i = 0; i < coeffs_desc.size(); ++i)
    asc[coeffs_desc.size() - 1 - i] = coeffs_desc[i];
  return IntPoly(std::move(asc));
}

void IntPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPoly::leading() const {
  if (c_.empty()) throw Error("leading() of zero polynomial");
  return c_.back();
}

const Int& IntPoly::coeff(size_t i) const {
  static const Int zero = 0;
  return i < c_.size() ? c_[i] : zero;
}

Rat IntPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

QInterval IntPoly::eval_interval(const QInterval& iv) const {
  QInterval acc = QInterval::point(Rat(0));
  for (size_t i = c_.size(); i-- > 0;)
    acc = acc * iv + QInterval::point(Rat(c_[i]));
  return acc;
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return IntPoly();
  std::vector<Int> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return IntPoly(std::move(d));
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return *this;
  Int g = 0;
  for (const Int& x : c_) {
    Int a = abs(x);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  }
  if (g == 0 || g == 1) return *this;
  std::vector<Int> out(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] / g;
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& p) {
  std::vector<Int> out(p.c_.size());
  for (size_t i = 0; i < p.c_.size(); ++i) out[i] = -p.c_[i];
  return IntPoly(std::move(out));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> out(std::max(a.c_.size(), b.c_.size()), Int(0));
  for (size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<Int> out(a.c_.size() + b.c_.size() - 1, Int(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return IntPoly(std::move(out));
}

IntPoly IntPoly::times_xk(size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Int> out(c_.size() + k, Int(0));
  for (size_t i = 0; i < c_.size(); ++i) out[i + k] = c_[i];
  return IntPoly(std::move(out));
}

IntPoly IntPoly::times(const Int& s) const {
  std::vector<Int> out(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * s;
  return IntPoly(std::move(out));
}

IntPoly IntPoly::deflate_at_one() const {
  if (is_zero() || eval(Rat(1)) != 0)
    throw Error("deflate_at_one: 1 is not a root");
  // Synthetic division by (x - 1): q_i = c_{i+1} + q_{i+1}.
  std::vector<Int> q(c_.size() - 1, Int(0));
  Int carry = 0;
  for (size_t i = c_.size(); i-- > 1;) {
    carry += c_[i];
    q[i - 1] = carry;
  }
  return IntPoly(std::move(q));
}

IntPoly signed_prem(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw Error("signed_prem: division by zero polynomial");
  IntPoly r = f;
  const Int& lg = g.leading();
  int sign_flips = 0;
  while (!r.is_zero() && r.degree() >= g.degree()) {
    // r <- lc(g)*r - lc(r)*x^(dr-dg)*g, killing the leading term of r.
    IntPoly scaled = r.times(lg);
    IntPoly sub = g.times(r.leading()).times_xk(r.degree() - g.degree());
    r = scaled - sub;
    if (lg < 0) ++sign_flips;
  }
  if (sign_flips % 2 == 1) r = -r;
  return r.primitive_part();
}

IntPoly IntPoly::gcd(IntPoly a, IntPoly b) {
  a = a.primitive_part();
  b = b.primitive_part();
  while (!b.is_zero()) {
    IntPoly r = signed_prem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero() && a.leading() < 0) a = -a;
  return a;
}

IntPoly IntPoly::squarefree_part() const {
  if (degree() <= 1) return *this;
  IntPoly g = gcd(*this, derivative());
  if (g.degree() == 0) return *this;
  // Exact division *this / g over Q, cleared back to a primitive integer
  // polynomial.
  std::vector<Rat> rem(c_.begin(), c_.end());
  int dq = degree() - g.degree();
  std::vector<Rat> q(dq + 1, Rat(0));
  Rat lg = Rat(g.leading());
  for (int i = dq; i >= 0; --i) {
    Rat coef = rem[i + g.degree()] / lg;
    q[i] = coef;
    for (int j = 0; j <= g.degree(); ++j)
      rem[i + j] -= coef * Rat(g.coeff(j));
  }
  Int den = 1;
  for (const Rat& x : q)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<Int> out(q.size());
  for (size_t i = 0; i < q.size(); ++i) {
    Rat scaled = q[i] * Rat(den);
    out[i] = scaled.get_num();
  }
  return IntPoly(std::move(out)).primitive_part();
}

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << (c_[i] > 0 ? " + " : " - ");
    else if (c_[i] < 0) os << "-";
    Int a = abs(c_[i]);
    if (a != 1 || i == 0) os << a.get_str();
    if (i > 0) os << "x";
    if (i > 1) os << "^" << i;
    first = false;
  }
  return os.str();
}

SturmChain SturmChain::build(const IntPoly& p) {
  SturmChain s;
  IntPoly p0 = p.primitive_part();
  if (p0.is_zero()) throw Error("Sturm chain of zero polynomial");
  s.chain_.push_back(p0);
  IntPoly p1 = p0.derivative().primitive_part();
  if (!p1.is_zero()) {
    s.chain_.push_back(p1);
    while (true) {
      const IntPoly& a = s.chain_[s.chain_.size() - 2];
      const IntPoly& b = s.chain_.back();
      IntPoly r = signed_prem(a, b);
      if (r.is_zero()) break;
      s.chain_.push_back(-r);
    }
  }
  return s;
}

int SturmChain::variations_at(const Rat& x) const {
  int v = 0;
  int prev = 0;
  for (const IntPoly& p : chain_) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

int SturmChain::count_halfopen(const Rat& a, const Rat& b) const {
  if (a > b) throw Error("count_halfopen: a > b");
  if (a == b) return 0;
  if (chain_.front().sign_at(a) == 0)
    throw Error("count_halfopen: left endpoint is a root");
  return variations_at(a) - variations_at(b);
}

int SturmChain::count_open(const Rat& a, const Rat& b) const {
  if (a == b) return 0;
  int n = count_halfopen(a, b);
  if (chain_.front().sign_at(b) == 0) --n;
  return n;
}

Rat cauchy_root_bound(const IntPoly& p) {
  if (p.is_zero()) throw Error("cauchy_root_bound of zero polynomial");
  Rat m = 0;
  for (size_t i = 0; i + 1 < p.coeffs().size() + 0u; ++i) {
    Rat r = rat_abs(Rat(p.coeff(i)) / Rat(p.leading()));
    m = std::max(m, r);
  }
  return m + 1;
}

namespace {

// Bisects [lo, hi], where (lo, hi] contains exactly one distinct root
// and lo is a non-root, until either the midpoint hits the root exactly
// or the width is at most `target`.
IsolatedRoot bisect_isolated(const SturmChain& chain, Rat lo, Rat hi,
                             const Rat& target) {
  while (hi - lo > target) {
    Rat mid = (lo + hi) / 2;
    if (chain.poly().sign_at(mid) == 0) {
      IsolatedRoot r;
      r.exact = true;
      r.value = mid;
      r.range = QInterval::point(mid);
      return r;
    }
    if (chain.count_halfopen(lo, mid) >= 1)
      hi = mid;
    else
      lo = mid;
  }
  IsolatedRoot r;
  r.range = QInterval(lo, hi);
  return r;
}

}  // namespace

IsolatedRoot isolate_unique_root_above(const IntPoly& p, const Rat& lower) {
  IntPoly q = p.primitive_part();
  if (q.degree() < 1) throw DomainError("root isolation needs degree >= 1");
  Rat lo = lower;
  // Deflate an exact root sitting on the boundary so Sturm endpoints are
  // clean; that root is not "above lower" anyway.
  while (!q.is_zero() && q.eval(lo) == 0) {
    if (lo != 1)
      throw DomainError("root isolation: boundary " + rat_str(lo) +
                        " is a root of " + q.str());
    q = q.deflate_at_one();
  }
  if (q.degree() < 1)
    throw DomainError("no root above " + rat_str(lower));
  SturmChain chain = SturmChain::build(q);
  Rat hi = cauchy_root_bound(q);
  if (hi < lo + 1) hi = lo + 1;
  while (q.eval(hi) == 0) hi += 1;
  int n = chain.count_halfopen(lo, hi);
  if (n != 1)
    throw DomainError("expected exactly one root above " + rat_str(lower) +
                      ", found " + std::to_string(n) + " for " + q.str());
  // Shrink until reasonably tight; refinement continues on demand.
  IsolatedRoot r = bisect_isolated(chain, lo, hi, Rat(1, 1024));
  return r;
}

std::optional<IsolatedRoot> isolate_smallest_root_01(const IntPoly& p) {
  IntPoly q = p.primitive_part();
  if (q.is_zero()) throw Error("isolate_smallest_root_01: zero polynomial");
  if (q.eval(Rat(0)) == 0 || q.eval(Rat(1)) == 0)
    throw Error("isolate_smallest_root_01: endpoint is a root");
  if (q.degree() < 1) return std::nullopt;
  SturmChain chain = SturmChain::build(q);
  Rat lo = 0, hi = 1;
  if (chain.count_halfopen(lo, hi) == 0) return std::nullopt;
  // Invariant: lo is a non-root, (0, lo] is root-free, and (lo, hi]
  // contains at least one root; the smallest root lies in (lo, hi].
  while (true) {
    Rat mid = (lo + hi) / 2;
    if (q.sign_at(mid) == 0) {
      if (chain.count_open(lo, mid) == 0) {
        IsolatedRoot r;
        r.exact = true;
        r.value = mid;
        r.range = QInterval::point(mid);
        return r;
      }
      hi = mid;
      continue;
    }
    if (chain.count_halfopen(lo, mid) >= 1) {
      hi = mid;
      if (chain.count_halfopen(lo, hi) == 1) {
        return bisect_isolated(chain, lo, hi, Rat(1, 1 << 20));
      }
    } else {
      lo = mid;
    }
  }
}

}  // namespace bts
