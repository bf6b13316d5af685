#include "bts/certvalue.hpp"

#include "bts/errors.hpp"

namespace bts {

CertValue CertValue::point(const Rat& x) {
  CertValue v;
  v.kind_ = Kind::Point;
  v.encl_ = QInterval::point(x);
  return v;
}

CertValue CertValue::algebraic(FieldElem e) {
  CertValue v;
  v.kind_ = Kind::Algebraic;
  v.encl_ = e.enclosure();
  v.elem_ = std::move(e);
  return v;
}

CertValue CertValue::root(std::shared_ptr<const SturmChain> chain,
                          QInterval iv) {
  CertValue v;
  if (iv.is_point()) {
    v.kind_ = Kind::Point;
    v.encl_ = std::move(iv);
    return v;
  }
  v.kind_ = Kind::Root;
  v.encl_ = std::move(iv);
  v.chain_ = std::move(chain);
  return v;
}

CertValue CertValue::opaque(std::function<QInterval(int)> at_depth) {
  CertValue v;
  v.kind_ = Kind::Opaque;
  v.at_depth_ = std::move(at_depth);
  v.encl_ = v.at_depth_(0);
  v.depth_ = 0;
  return v;
}

const FieldElem& CertValue::elem() const {
  if (kind_ != Kind::Algebraic)
    throw Error("CertValue::elem on non-algebraic value");
  return elem_;
}

CertValue CertValue::refined_once(const Limits& lim) const {
  switch (kind_) {
    case Kind::Point:
      return *this;
    case Kind::Algebraic: {
      if (encl_.is_point()) return *this;
      CertValue v = *this;
      Rat target = encl_.width() / 2;
      v.encl_ = encl_.intersect(elem_.enclosure_of_width(target, lim));
      return v;
    }
    case Kind::Root: {
      Rat mid = encl_.mid();
      if (chain_->poly().sign_at(mid) == 0) return point(mid);
      CertValue v = *this;
      if (chain_->count_halfopen(encl_.lo, mid) >= 1)
        v.encl_ = QInterval(encl_.lo, mid);
      else
        v.encl_ = QInterval(mid, encl_.hi);
      return v;
    }
    case Kind::Opaque: {
      if (encl_.is_point()) return *this;
      CertValue v = *this;
      Rat target = encl_.width() / 2;
      int steps = 0;
      while (v.encl_.width() > target) {
        if (++steps > lim.refine_cap)
          throw RefinementCapExceeded("opaque enclosure refinement cap exceeded");
        ++v.depth_;
        v.encl_ = v.encl_.intersect(at_depth_(v.depth_));
      }
      return v;
    }
  }
  throw Error("unreachable");
}

CertValue CertValue::refined_to_width(const Rat& w, const Limits& lim) const {
  if (w <= 0) throw DomainError("refine: target width must be positive");
  CertValue v = *this;
  int steps = 0;
  while (v.width() > w) {
    if (++steps > lim.refine_cap)
      throw RefinementCapExceeded("refinement cap exceeded before target width");
    v = v.refined_once(lim);
  }
  return v;
}

CertValue refine(const CertValue& v, const Rat& target_width,
                 const Limits& lim) {
  return v.refined_to_width(target_width, lim);
}

Ordering cert_cmp(const CertValue& a, const CertValue& b, const Limits& lim) {
  // Exact decisions first.
  if (a.is_point() && b.is_point()) {
    if (a.lo() < b.lo()) return Ordering::Less;
    if (a.lo() > b.lo()) return Ordering::Greater;
    return Ordering::Equal;
  }
  if (a.is_algebraic() && b.is_algebraic() &&
      a.elem().field() == b.elem().field()) {
    int s = (a.elem() - b.elem()).sign(lim);
    return s < 0 ? Ordering::Less : s > 0 ? Ordering::Greater : Ordering::Equal;
  }
  if (a.is_algebraic() && b.is_point()) {
    int s = a.elem().plus(-b.lo()).sign(lim);
    return s < 0 ? Ordering::Less : s > 0 ? Ordering::Greater : Ordering::Equal;
  }
  if (a.is_point() && b.is_algebraic()) {
    int s = b.elem().plus(-a.lo()).sign(lim);
    return s > 0 ? Ordering::Less : s < 0 ? Ordering::Greater : Ordering::Equal;
  }
  CertValue x = a, y = b;
  for (int step = 0;; ++step) {
    if (x.hi() < y.lo()) return Ordering::Less;
    if (y.hi() < x.lo()) return Ordering::Greater;
    if (x.is_point() && y.is_point())
      return x.lo() == y.lo()
                 ? Ordering::Equal
                 : (x.lo() < y.lo() ? Ordering::Less : Ordering::Greater);
    if (step >= lim.refine_cap)
      throw UndecidableComparison(
          "enclosures still overlap at comparison refinement cap");
    if (x.width() >= y.width() && !x.is_point())
      x = x.refined_once(lim);
    else
      y = y.refined_once(lim);
  }
}

namespace {

enum class BinOp { Add, Sub, Mul };

QInterval apply_op(BinOp op, const QInterval& x, const QInterval& y) {
  switch (op) {
    case BinOp::Add: return x + y;
    case BinOp::Sub: return x - y;
    case BinOp::Mul: return x * y;
  }
  throw Error("unreachable");
}

CertValue binop(BinOp op, const CertValue& a, const CertValue& b) {
  if (a.is_point() && b.is_point()) {
    switch (op) {
      case BinOp::Add: return CertValue::point(a.lo() + b.lo());
      case BinOp::Sub: return CertValue::point(a.lo() - b.lo());
      case BinOp::Mul: return CertValue::point(a.lo() * b.lo());
    }
  }
  if (a.is_algebraic() && b.is_algebraic() &&
      a.elem().field() == b.elem().field()) {
    switch (op) {
      case BinOp::Add: return CertValue::algebraic(a.elem() + b.elem());
      case BinOp::Sub: return CertValue::algebraic(a.elem() - b.elem());
      case BinOp::Mul: return CertValue::algebraic(a.elem() * b.elem());
    }
  }
  if (a.is_algebraic() && b.is_point()) {
    switch (op) {
      case BinOp::Add: return CertValue::algebraic(a.elem().plus(b.lo()));
      case BinOp::Sub: return CertValue::algebraic(a.elem().plus(-b.lo()));
      case BinOp::Mul: return CertValue::algebraic(a.elem().times(b.lo()));
    }
  }
  if (a.is_point() && b.is_algebraic()) {
    switch (op) {
      case BinOp::Add: return CertValue::algebraic(b.elem().plus(a.lo()));
      case BinOp::Sub: return CertValue::algebraic((-b.elem()).plus(a.lo()));
      case BinOp::Mul: return CertValue::algebraic(b.elem().times(a.lo()));
    }
  }
  return CertValue::opaque([op, a, b](int depth) {
    Limits lim;
    Rat target = rat_pow(Rat(1, 2), depth) / 4;
    CertValue xa = a, xb = b;
    QInterval q = apply_op(op, xa.enclosure(), xb.enclosure());
    int steps = 0;
    while (q.width() > target) {
      if (++steps > lim.refine_cap)
        throw RefinementCapExceeded("arithmetic refinement cap exceeded");
      if (!xa.is_point()) xa = xa.refined_once(lim);
      if (!xb.is_point()) xb = xb.refined_once(lim);
      q = q.intersect(apply_op(op, xa.enclosure(), xb.enclosure()));
    }
    return q;
  });
}

}  // namespace

CertValue cert_add(const CertValue& a, const CertValue& b) {
  return binop(BinOp::Add, a, b);
}
CertValue cert_sub(const CertValue& a, const CertValue& b) {
  return binop(BinOp::Sub, a, b);
}
CertValue cert_mul(const CertValue& a, const CertValue& b) {
  return binop(BinOp::Mul, a, b);
}

namespace {

// Refine x until its enclosure is strictly positive.
CertValue make_positive(CertValue x, const Limits& lim) {
  int steps = 0;
  while (x.lo() <= 0) {
    if (x.hi() <= 0)
      throw DomainError("logarithm of a non-positive certified value");
    if (++steps > lim.refine_cap)
      throw RefinementCapExceeded("could not certify positivity");
    x = x.refined_once(lim);
  }
  return x;
}

}  // namespace

CertValue cert_ln(const CertValue& x) {
  return CertValue::opaque([x](int depth) {
    Limits lim;
    Rat target = rat_pow(Rat(1, 2), depth) / 4;
    CertValue xs = make_positive(x, lim);
    // ln is 1/lo-Lipschitz on [lo, hi]; match the input width to the
    // requested output width.
    Rat input_w = target * xs.lo() / 2;
    xs = xs.refined_to_width(input_w, lim);
    return ln_enclosure(xs.enclosure(), target / 2);
  });
}

CertValue cert_neg_ln(const CertValue& x) {
  CertValue l = cert_ln(x);
  return CertValue::opaque([l](int depth) {
    Limits lim;
    CertValue r = l.refined_to_width(rat_pow(Rat(1, 2), depth) / 4, lim);
    return QInterval(-r.hi(), -r.lo());
  });
}

CertValue cert_div(const CertValue& a, const CertValue& b) {
  return CertValue::opaque([a, b](int depth) {
    Limits lim;
    Rat target = rat_pow(Rat(1, 2), depth) / 4;
    CertValue xa = a, xb = b;
    int steps = 0;
    while (xb.enclosure().contains_zero()) {
      if (++steps > lim.refine_cap)
        throw RefinementCapExceeded("divisor enclosure pinched at zero");
      xb = xb.refined_once(lim);
    }
    QInterval q = xa.enclosure() / xb.enclosure();
    while (q.width() > target) {
      if (++steps > lim.refine_cap)
        throw RefinementCapExceeded("quotient refinement cap exceeded");
      if (!xa.is_point()) xa = xa.refined_once(lim);
      if (!xb.is_point()) xb = xb.refined_once(lim);
      q = q.intersect(xa.enclosure() / xb.enclosure());
    }
    return q;
  });
}

}  // namespace bts
