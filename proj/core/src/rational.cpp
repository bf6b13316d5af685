#include "bts/rational.hpp"

#include <cctype>
#include <sstream>

namespace bts {

Rat parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational literal");
  std::string s(text);
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' ||
          c == '+' || c == '.')) {
      throw ParseError("illegal character in rational literal: '" + s + "'");
    }
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find('/') != std::string::npos)
      throw ParseError("mixed decimal/fraction literal: '" + s + "'");
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac_len = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      throw ParseError("malformed decimal literal: '" + s + "'");
    try {
      Int num(digits, 10);
      Int den = 1;
      for (size_t i = 0; i < frac_len; ++i) den *= 10;
      Rat q(num, den);
      q.canonicalize();
      return q;
    } catch (const std::invalid_argument&) {
      throw ParseError("malformed decimal literal: '" + s + "'");
    }
  }
  try {
    Rat q(s);
    if (q.get_den() == 0) throw ParseError("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed rational literal: '" + s + "'");
  }
}

Int rat_floor(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Int rat_ceil(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

Rat rat_pow(const Rat& base, long exp) {
  if (exp == 0) return Rat(1);
  bool neg = exp < 0;
  unsigned long e = neg ? static_cast<unsigned long>(-exp)
                        : static_cast<unsigned long>(exp);
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
  if (neg) {
    if (num == 0) throw Error("rat_pow: 0 to a negative power");
    std::swap(num, den);
  }
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

double rat_double(const Rat& q) { return q.get_d(); }

QInterval QInterval::intersect(const QInterval& o) const {
  Rat l = std::max(lo, o.lo);
  Rat h = std::min(hi, o.hi);
  if (l > h) throw Error("QInterval::intersect: disjoint intervals");
  return QInterval(l, h);
}

QInterval operator*(const QInterval& a, const QInterval& b) {
  Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return QInterval(std::min(std::min(p1, p2), std::min(p3, p4)),
                   std::max(std::max(p1, p2), std::max(p3, p4)));
}

QInterval operator/(const QInterval& a, const QInterval& b) {
  if (b.contains_zero()) throw Error("QInterval division by interval containing 0");
  return a * QInterval(Rat(1) / b.hi, Rat(1) / b.lo);
}

namespace {

// ln on [3/4, 2]: 2*atanh(y), y = (x-1)/(x+1), |y| <= 1/3.
// Tail after the y^(2n+1) term is < |y|^(2n+3) / ((2n+3)(1-y^2)).
QInterval ln_core(const Rat& x, const Rat& tol) {
  Rat y = (x - 1) / (x + 1);
  Rat y2 = y * y;
  Rat term = y;  // y^(2k+1)
  Rat sum = 0;
  long k = 0;
  Rat one_minus_y2 = 1 - y2;
  while (true) {
    sum += term / (2 * k + 1);
    term *= y2;
    ++k;
    Rat tail = rat_abs(term) / ((2 * k + 1) * one_minus_y2);
    if (2 * tail <= tol / 2) {
      Rat lo = 2 * sum - 2 * tail;
      Rat hi = 2 * sum + 2 * tail;
      return QInterval(lo, hi);
    }
  }
}

}  // namespace

QInterval ln_enclosure(const Rat& x, const Rat& tol) {
  if (x <= 0) throw Error("ln_enclosure: argument must be positive");
  if (tol <= 0) throw Error("ln_enclosure: tolerance must be positive");
  // Scale x into [3/4, 2] by powers of 2, then ln x = k*ln2 + ln(x/2^k).
  long k = 0;
  Rat z = x;
  while (z > 2) {
    z /= 2;
    ++k;
  }
  while (z < Rat(3, 4)) {
    z *= 2;
    --k;
  }
  if (k == 0) return ln_core(z, tol);
  long ak = k < 0 ? -k : k;
  QInterval ln2 = ln_core(Rat(2), tol / (2 * ak));
  QInterval core = ln_core(z, tol / 2);
  Rat a = ln2.lo * k, b = ln2.hi * k;
  QInterval scaled = a <= b ? QInterval(a, b) : QInterval(b, a);
  return core + scaled;
}

QInterval ln_enclosure(const QInterval& x, const Rat& tol) {
  QInterval lo = ln_enclosure(x.lo, tol / 2);
  QInterval hi = ln_enclosure(x.hi, tol / 2);
  return QInterval(lo.lo, hi.hi);
}

}  // namespace bts
