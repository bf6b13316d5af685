#include "bts/subshift.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace bts {

namespace {

void require_binary(const EPSeq& s, const char* what) {
  if (s.max_digit() > 1)
    throw DomainError(std::string(what) + " must be a {0,1}-sequence, got " +
                      render(s));
}

// Least k >= 1 with cmp(sigma^k(s), bound) == want, scanning the
// distinct shifts; nullopt when no shift compares that way.
std::optional<size_t> first_shift_with(const EPSeq& s, const EPSeq& bound,
                                       Ordering want) {
  for (size_t k = 1; k < s.shift_states() + 1; ++k) {
    if (cmp(shift(s, k), bound) == want) return k;
  }
  return std::nullopt;
}

Word prefix_of(const EPSeq& s, size_t n) {
  Word w;
  for (size_t i = 0; i < n; ++i) w.push_back(s.digit_at(i));
  return w;
}

}  // namespace

LexPair::LexPair(EPSeq t, EPSeq u) : t_(std::move(t)), u_(std::move(u)) {
  require_binary(t_, "t");
  require_binary(u_, "u");
  if (cmp(t_, u_) == Ordering::Greater)
    throw DomainError("LexPair: t > u (" + render(t_) + " > " + render(u_) + ")");
}

const char* pair_status_str(PairStatus s) {
  switch (s) {
    case PairStatus::Nonempty: return "nonempty";
    case PairStatus::Empty: return "empty";
    case PairStatus::DegenerateBoundary: return "degenerate-boundary";
  }
  return "?";
}

bool membership(const EPSeq& x, const LexPair& p) {
  require_binary(x, "x");
  for (size_t k = 0; k < x.shift_states(); ++k) {
    EPSeq sh = shift(x, k);
    if (cmp(sh, p.t()) == Ordering::Less) return false;
    if (cmp(sh, p.u()) == Ordering::Greater) return false;
  }
  return true;
}

EPSeq step1_min(const EPSeq& t) {
  require_binary(t, "t");
  auto n1 = first_shift_with(t, t, Ordering::Less);
  if (!n1) return t;
  return EPSeq::periodic(prefix_of(t, *n1));
}

EPSeq step1_max(const EPSeq& u) {
  require_binary(u, "u");
  auto m1 = first_shift_with(u, u, Ordering::Greater);
  if (!m1) return u;
  return EPSeq::periodic(prefix_of(u, *m1));
}

EPSeq tau(const EPSeq& a, const EPSeq& u) {
  require_binary(a, "a");
  require_binary(u, "u");
  auto n2 = first_shift_with(a, u, Ordering::Greater);
  if (!n2) return a;
  Word w = prefix_of(a, *n2);
  if (w.last() != 0)
    throw DigitOverflow("tau would increment digit 1 at position " +
                        std::to_string(*n2) + " of " + render(a));
  std::vector<int> d = w.digits();
  d.back() += 1;
  return EPSeq::periodic(Word(std::move(d)));
}

EPSeq theta(const EPSeq& b, const EPSeq& t) {
  require_binary(b, "b");
  require_binary(t, "t");
  auto m2 = first_shift_with(b, t, Ordering::Less);
  if (!m2) return b;
  Word w = prefix_of(b, *m2);
  if (w.last() != 1)
    throw DigitUnderflow("theta would decrement digit 0 at position " +
                         std::to_string(*m2) + " of " + render(b));
  std::vector<int> d = w.digits();
  d.back() -= 1;
  return EPSeq::periodic(Word(std::move(d)));
}

namespace {

std::optional<PairStatus> quick_status(const EPSeq& a, const EPSeq& b) {
  if (cmp(a, b) == Ordering::Greater) return PairStatus::Empty;
  if (a.digit_at(0) == 1 || b.digit_at(0) == 0)
    return PairStatus::DegenerateBoundary;
  return std::nullopt;
}

}  // namespace

NormalizedPair normalize(const LexPair& p, const NormalizeOptions& opt) {
  EPSeq a = step1_min(p.t());
  EPSeq b = step1_max(p.u());
  if (auto st = quick_status(a, b)) return {a, b, *st};

  auto tau_loop = [&](std::optional<PairStatus>& st) {
    size_t prev = static_cast<size_t>(-1);
    while (true) {
      const EPSeq& bound = opt.reduced ? b : p.u();
      auto n2 = first_shift_with(a, bound, Ordering::Greater);
      if (!n2) break;
      if (*n2 >= prev)
        throw Error("tau indices failed to decrease; offending pair (" +
                    render(p.t()) + ", " + render(p.u()) + ")");
      prev = *n2;
      a = tau(a, bound);
      if ((st = quick_status(a, b))) return;
    }
  };
  auto theta_loop = [&](std::optional<PairStatus>& st) {
    size_t prev = static_cast<size_t>(-1);
    while (true) {
      const EPSeq& bound = opt.reduced ? a : p.t();
      auto m2 = first_shift_with(b, bound, Ordering::Less);
      if (!m2) break;
      if (*m2 >= prev)
        throw Error("theta indices failed to decrease; offending pair (" +
                    render(p.t()) + ", " + render(p.u()) + ")");
      prev = *m2;
      b = theta(b, bound);
      if ((st = quick_status(a, b))) return;
    }
  };

  std::optional<PairStatus> st;
  if (opt.step2_first) {
    tau_loop(st);
    if (!st) theta_loop(st);
  } else {
    theta_loop(st);
    if (!st) tau_loop(st);
  }
  if (st) return {a, b, *st};

  // A nonempty K(t,u) makes (a, b) its min/max, which must then both
  // belong to K(a,b). Failure of that membership proves K(t,u) is empty.
  LexPair pair_ab(a, b);
  if (!membership(a, pair_ab) || !membership(b, pair_ab))
    return {a, b, PairStatus::Empty};
  return {a, b, PairStatus::Nonempty};
}

EntropyResult entropy(const LexPair& p, const NormalizeOptions& opt) {
  NormalizedPair np = normalize(p, opt);
  if (np.status != PairStatus::Nonempty)
    return {std::nullopt, CertValue::point(Rat(0)), np};
  CoeffStream c = CoeffStream::difference(np.b, np.a);
  std::optional<CertValue> lambda = smallest_root_unit(c);
  if (!lambda) return {std::nullopt, CertValue::point(Rat(0)), np};
  return {lambda, cert_neg_ln(*lambda), np};
}

std::optional<std::vector<EPSeq>> enumerate_if_finite(const NormalizedPair& np,
                                                      size_t period_cap) {
  if (np.status == PairStatus::Empty) return std::vector<EPSeq>{};
  if (period_cap == 0 || period_cap > 20)
    throw DomainError("enumerate_if_finite: period cap out of range");
  if (np.status == PairStatus::Nonempty) {
    CoeffStream c = CoeffStream::difference(np.b, np.a);
    if (smallest_root_unit(c)) return std::nullopt;  // positive entropy
  }
  if (!np.a.purely_periodic() || !np.b.purely_periodic() ||
      np.a.period().size() > period_cap || np.b.period().size() > period_cap)
    throw CapTooSmall("zero-entropy set has boundary sequences beyond the period cap");
  LexPair pair_ab(np.a, np.b);
  std::set<EPSeq, EPSeqLess> found;
  for (size_t len = 1; len <= period_cap; ++len) {
    for (size_t mask = 0; mask < (size_t{1} << len); ++mask) {
      std::vector<int> d(len);
      for (size_t i = 0; i < len; ++i) d[i] = (mask >> i) & 1;
      EPSeq s = EPSeq::periodic(Word(std::move(d)));
      if (membership(s, pair_ab)) found.insert(s);
    }
  }
  return std::vector<EPSeq>(found.begin(), found.end());
}

double sft_entropy_oracle(const std::vector<Word>& forbidden, size_t n) {
  size_t m = 0;
  for (const Word& f : forbidden) {
    if (f.empty()) throw DomainError("empty forbidden word");
    for (int d : f.digits())
      if (d > 1) throw DomainError("forbidden words must be over {0,1}");
    m = std::max(m, f.size());
  }
  if (m > 20) throw DomainError("forbidden word too long for the DP oracle");
  if (n < m + 2 || n < 2)
    throw DomainError("sft_entropy_oracle: n must be at least max length + 2");

  size_t sbits = m > 0 ? m - 1 : 0;
  size_t nstates = size_t{1} << sbits;
  auto ends_with_forbidden = [&](size_t word, size_t wlen) {
    for (const Word& f : forbidden) {
      if (f.size() > wlen) continue;
      size_t fv = 0;
      for (size_t i = 0; i < f.size(); ++i)
        fv |= static_cast<size_t>(f.at(i)) << (f.size() - 1 - i);
      size_t suffix = word & ((size_t{1} << f.size()) - 1);
      if (suffix == fv) return true;
    }
    return false;
  };
  auto contains_forbidden = [&](size_t word, size_t wlen) {
    for (size_t end = 1; end <= wlen; ++end)
      if (ends_with_forbidden(word >> (wlen - end), end)) return true;
    return false;
  };

  // counts[s] = number of admissible words of the current length ending
  // in state s (the last sbits bits).
  std::vector<unsigned long long> counts(nstates, 0);
  size_t start_len = sbits;
  if (start_len == 0) {
    counts[0] = 1;  // the empty word
  } else {
    for (size_t w = 0; w < nstates; ++w)
      if (!contains_forbidden(w, start_len)) counts[w] = 1;
  }
  unsigned long long prev_total = 0, total = 0;
  for (size_t len = start_len; len < n; ++len) {
    std::vector<unsigned long long> next(nstates, 0);
    for (size_t s = 0; s < nstates; ++s) {
      if (counts[s] == 0) continue;
      for (size_t bit = 0; bit <= 1; ++bit) {
        size_t word = (s << 1) | bit;  // length sbits + 1
        if (ends_with_forbidden(word, sbits + 1)) continue;
        size_t ns = word & (nstates - 1);
        next[ns] += counts[s];
      }
    }
    counts.swap(next);
    prev_total = total;
    total = 0;
    for (unsigned long long c : counts) total += c;
    if (total == 0)
      return -std::numeric_limits<double>::infinity();
  }
  if (prev_total == 0) return -std::numeric_limits<double>::infinity();
  return std::log(static_cast<double>(total) / static_cast<double>(prev_total));
}

}  // namespace bts
