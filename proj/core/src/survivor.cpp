#include "bts/survivor.hpp"

#include <algorithm>

namespace bts {

namespace {

Word prefix_of(const EPSeq& s, size_t n) {
  Word w;
  for (size_t i = 0; i < n; ++i) w.push_back(s.digit_at(i));
  return w;
}

OrbitPoint orbit_point_of(const BetaSpec& beta, const CertValue& t) {
  if (t.is_point()) return OrbitPoint::make(beta, t.lo());
  if (t.is_algebraic() && !beta.is_rational() &&
      t.elem().field() == beta.field())
    return OrbitPoint::from_elem(beta, t.elem());
  throw DomainError(
      "t must be exactly representable (a rational or an element of Q(beta))");
}

struct OrbitScan {
  enum class Outcome { Finite, Cycle, StableEntry, Exhausted };
  Outcome outcome = Outcome::Exhausted;
  EPSeq epseq;         // Finite / Cycle
  Word stable_prefix;  // StableEntry: t_1 .. t_k
};

// Runs the greedy orbit of t, watching simultaneously for termination,
// a revisited state, and the first entry of the orbit into (0, t).
OrbitScan scan_orbit(const BetaSpec& beta, const OrbitPoint& t,
                     const Limits& lim) {
  Orbit orbit = Orbit::greedy(beta, t);
  std::vector<OrbitPoint> states;
  states.push_back(orbit.state());
  std::vector<int> digits;
  OrbitScan out;
  for (int step = 0; step < lim.admissibility_depth; ++step) {
    digits.push_back(orbit.next_digit(lim));
    if (orbit.finished()) {
      out.outcome = OrbitScan::Outcome::Finite;
      out.epseq = EPSeq::from_word(Word(digits));
      return out;
    }
    const OrbitPoint& x = orbit.state();
    bool cycled = false;
    for (size_t j = 0; j < states.size() && !cycled; ++j) {
      if (x.same_state(states[j])) {
        Word pre(std::vector<int>(digits.begin(), digits.begin() + j));
        Word per(std::vector<int>(digits.begin() + j, digits.end()));
        out.outcome = OrbitScan::Outcome::Cycle;
        out.epseq = EPSeq::make(std::move(pre), std::move(per));
        cycled = true;
      }
    }
    if (cycled) return out;
    if (x.sign(lim) > 0 && x.cmp(t, lim) < 0) {
      out.outcome = OrbitScan::Outcome::StableEntry;
      out.stable_prefix = Word(digits);
      return out;
    }
    states.push_back(x);
  }
  out.outcome = OrbitScan::Outcome::Exhausted;
  return out;
}

}  // namespace

std::string hypothesis_str(const HypothesisVerdict& v) {
  switch (v.kind) {
    case HypothesisKind::Holds: return "holds";
    case HypothesisKind::Fails: return "fails(" + std::to_string(v.k) + ")";
    case HypothesisKind::Inconclusive: return "inconclusive";
  }
  return "?";
}

bool is_bifurcation(const BetaSpec& beta, const EPSeq& greedy_t,
                    const Limits& lim) {
  if (!is_admissible(greedy_t, beta, lim))
    throw DomainError("sequence is not a greedy expansion at this beta: " +
                      render(greedy_t));
  for (size_t k = 1; k <= greedy_t.shift_states(); ++k) {
    EPSeq sh = shift(greedy_t, k);
    if (sh.is_zero()) continue;
    if (cmp(sh, greedy_t) == Ordering::Less) return false;
  }
  return true;
}

bool is_bifurcation_value(const BetaSpec& beta, const CertValue& t,
                          const Limits& lim) {
  if (t.is_point() && t.lo() == 0) return true;  // K(0) = [0,1) contains 0
  OrbitScan scan = scan_orbit(beta, orbit_point_of(beta, t), lim);
  switch (scan.outcome) {
    case OrbitScan::Outcome::StableEntry: return false;
    case OrbitScan::Outcome::Finite:
    case OrbitScan::Outcome::Cycle: return true;
    case OrbitScan::Outcome::Exhausted:
      throw InconclusiveAtDepth(
          "orbit neither cycled, terminated, nor entered (0, t) within depth");
  }
  return false;
}

RewriteChain r_star_chain(int gamma, const AlphaSeq& alpha, const Word& r_word,
                          const Limits& lim) {
  if (r_word.empty() || r_word.last() == 0)
    throw NotGreedyRational("r must have a finite greedy expansion with a "
                            "nonzero last digit");
  for (int d : r_word.digits())
    if (d > gamma) throw NotGreedyRational("digit exceeds gamma");
  if (!is_admissible_vs(EPSeq::from_word(r_word), alpha, lim))
    throw NotGreedyRational("'" + r_word.str() +
                            "' is not a greedy expansion at this beta");
  RewriteChain chain;
  chain.steps.push_back(EPSeq::periodic(r_word));
  if (is_admissible_vs(chain.steps.back(), alpha, lim)) return chain;
  if (r_word.at(0) == gamma) {
    if (!alpha.exact())
      throw InconclusiveAtDepth("r* = 1 needs alpha(beta) in closed form");
    chain.steps.push_back(alpha.seq());
    return chain;
  }
  size_t prev_j = static_cast<size_t>(-1);
  while (true) {
    const EPSeq& cur = chain.steps.back();
    std::optional<size_t> j;
    for (size_t k = 0; k <= cur.shift_states(); ++k) {
      if (cmp_vs_alpha(shift(cur, k), alpha, lim) != Ordering::Less) {
        j = k;
        break;
      }
    }
    if (!j)
      throw Error("rewriting loop: inadmissible sequence with no shift >= alpha");
    if (*j == 0)
      throw Error("rewriting loop: whole sequence >= alpha with r_1 < gamma");
    if (*j >= prev_j)
      throw Error("rewriting loop: indices failed to decrease");
    prev_j = *j;
    int dj = cur.digit_at(*j - 1);
    if (dj >= gamma)
      throw DigitOverflow("rewriting loop would bump digit " +
                          std::to_string(dj) + " past gamma");
    std::vector<int> w;
    for (size_t i = 0; i + 1 < *j; ++i) w.push_back(cur.digit_at(i));
    w.push_back(dj + 1);
    chain.steps.push_back(EPSeq::from_word(Word(std::move(w))));
    if (is_admissible_vs(chain.steps.back(), alpha, lim)) return chain;
  }
}

StableInterval r_star(const BetaSpec& beta, const Word& r_word,
                      const Limits& lim) {
  AlphaSeq alpha = alpha_of(beta, lim);
  RewriteChain chain = r_star_chain(gamma_of(beta, lim), alpha, r_word, lim);
  StableInterval si;
  si.r_word = r_word;
  si.r_value = eval_pi(EPSeq::from_word(r_word), beta, lim);
  si.r_star_seq = chain.result();
  si.r_star_value = eval_pi(si.r_star_seq, beta, lim);
  if (cert_cmp(si.r_value, si.r_star_value, lim) != Ordering::Less)
    throw Error("r* did not land strictly above r for '" + r_word.str() + "'");
  return si;
}

std::optional<StableInterval> stable_component(const BetaSpec& beta,
                                               const EPSeq& greedy_t,
                                               const Limits& lim) {
  if (is_bifurcation(beta, greedy_t, lim)) return std::nullopt;
  std::optional<size_t> k;
  for (size_t i = 1; i <= greedy_t.shift_states(); ++i) {
    EPSeq sh = shift(greedy_t, i);
    if (!sh.is_zero() && cmp(sh, greedy_t) == Ordering::Less) {
      k = i;
      break;
    }
  }
  if (!k) throw Error("non-bifurcation t with no orbit entry into (0, t)");
  Word r_word = prefix_of(greedy_t, *k);
  if (r_word.last() == 0)
    throw Error("orbit-entry prefix ends in zero; not a greedy rational word");
  StableInterval si = r_star(beta, r_word, lim);
  CertValue tv = eval_pi(greedy_t, beta, lim);
  if (cert_cmp(si.r_value, tv, lim) != Ordering::Less ||
      cert_cmp(tv, si.r_star_value, lim) != Ordering::Less)
    throw Error("stability window failed the r < t < r* certification");
  return si;
}

std::optional<StableInterval> stable_component_value(const BetaSpec& beta,
                                                     const CertValue& t,
                                                     const Limits& lim) {
  if (t.is_point() && t.lo() == 0) return std::nullopt;
  OrbitScan scan = scan_orbit(beta, orbit_point_of(beta, t), lim);
  switch (scan.outcome) {
    case OrbitScan::Outcome::Finite:
    case OrbitScan::Outcome::Cycle:
      return std::nullopt;  // t is a bifurcation parameter
    case OrbitScan::Outcome::StableEntry: {
      if (scan.stable_prefix.last() == 0)
        throw Error("orbit-entry prefix ends in zero; not a greedy rational word");
      StableInterval si = r_star(beta, scan.stable_prefix, lim);
      if (cert_cmp(si.r_value, t, lim) != Ordering::Less ||
          cert_cmp(t, si.r_star_value, lim) != Ordering::Less)
        throw Error("stability window failed the r < t < r* certification");
      return si;
    }
    case OrbitScan::Outcome::Exhausted:
      throw InconclusiveAtDepth(
          "orbit neither cycled, terminated, nor entered (0, t) within depth");
  }
  return std::nullopt;
}

std::vector<OmegaWord> omega_words(const BetaSpec& beta, const EPSeq& greedy_t,
                                   size_t k, const Limits& lim) {
  if (k < 1) throw DomainError("omega_words: k must be >= 1");
  int gamma = gamma_of(beta, lim);
  AlphaSeq alpha = alpha_of(beta, lim);
  Word base = prefix_of(greedy_t, k - 1);
  int tk = greedy_t.digit_at(k - 1);
  std::vector<OmegaWord> out;
  for (int s = tk + 1; s <= gamma; ++s) {
    Word w = base;
    w.push_back(s);
    bool adm = is_admissible_vs(EPSeq::from_word(w), alpha, lim);
    out.push_back(OmegaWord{std::move(w), adm});
  }
  return out;
}

namespace {

EPSeq quasi_from_greedy_epseq(const EPSeq& greedy, const AlphaSeq& alpha) {
  if (greedy.is_zero())
    throw DomainError("quasi-greedy form of the zero sequence is undefined");
  if (!greedy.eventually_zero()) return greedy;
  if (!alpha.exact())
    throw InconclusiveAtDepth(
        "splice rule needs alpha(beta) in closed form, but alpha is a stream");
  return quasi_from_finite_greedy(greedy.preperiod(), alpha.seq());
}

DimResult dim_from_quasi(const BetaSpec& beta, const AlphaSeq& alpha,
                         EPSeq t_seq, bool rerouted, const CertValue& t,
                         bool t_is_zero, const Limits& lim) {
  if (!alpha.exact())
    throw InconclusiveAtDepth(
        "dimension pipeline needs alpha(beta) in closed form, but alpha is a "
        "stream");
  LexPair pair(t_seq, alpha.seq());
  EntropyResult ent = entropy(pair);
  CertValue dim = t_is_zero ? CertValue::point(Rat(1))
                  : ent.lambda
                      ? cert_div(ent.entropy, cert_ln(beta.value()))
                      : CertValue::point(Rat(0));
  DimResult r;
  r.t_seq = std::move(t_seq);
  r.computed_at_window_endpoint = rerouted;
  r.lambda = ent.lambda;
  r.dim = std::move(dim);
  r.hypothesis_main1 = check_main1_hypothesis(beta, t, lim);
  r.hypothesis_literal = check_main1_literal(beta, t, lim);
  r.normalized = ent.normalized;
  return r;
}

}  // namespace

DimResult hausdorff_dim(const BetaSpec& beta, const CertValue& t,
                        const Limits& lim) {
  if (gamma_of(beta, lim) != 1)
    throw DomainError("dimension pipeline is restricted to 1 < beta <= 2");
  AlphaSeq alpha = alpha_of(beta, lim);
  if (t.is_point() && t.lo() == 0)
    return dim_from_quasi(beta, alpha, EPSeq(), false, t, true, lim);
  OrbitPoint pt = orbit_point_of(beta, t);
  if (pt.sign(lim) < 0 || pt.cmp_rat(Rat(1), lim) >= 0)
    throw DomainError("t must lie in [0, 1)");
  if (pt.is_zero())
    return dim_from_quasi(beta, alpha, EPSeq(), false, t, true, lim);
  OrbitScan scan = scan_orbit(beta, pt, lim);
  switch (scan.outcome) {
    case OrbitScan::Outcome::Finite:
    case OrbitScan::Outcome::Cycle:
      return dim_from_quasi(beta, alpha,
                            quasi_from_greedy_epseq(scan.epseq, alpha), false,
                            t, false, lim);
    case OrbitScan::Outcome::StableEntry: {
      StableInterval si = r_star(beta, scan.stable_prefix, lim);
      return dim_from_quasi(beta, alpha,
                            quasi_from_greedy_epseq(si.r_star_seq, alpha), true,
                            t, false, lim);
    }
    case OrbitScan::Outcome::Exhausted:
      throw InconclusiveAtDepth(
          "the expansion of t neither closes up nor proves t stable within "
          "depth");
  }
  throw Error("unreachable");
}

DimResult hausdorff_dim_seq(const BetaSpec& beta, const EPSeq& greedy_t,
                            const Limits& lim) {
  if (gamma_of(beta, lim) != 1)
    throw DomainError("dimension pipeline is restricted to 1 < beta <= 2");
  AlphaSeq alpha = alpha_of(beta, lim);
  if (greedy_t.is_zero())
    return dim_from_quasi(beta, alpha, EPSeq(), false, CertValue::point(Rat(0)),
                          true, lim);
  if (!is_admissible_vs(greedy_t, alpha, lim))
    throw DomainError("sequence is not a greedy expansion at this beta: " +
                      render(greedy_t));
  CertValue tv = eval_pi(greedy_t, beta, lim);
  return dim_from_quasi(beta, alpha, quasi_from_greedy_epseq(greedy_t, alpha),
                        false, tv, false, lim);
}

HypothesisVerdict check_main1_hypothesis(const BetaSpec& beta,
                                         const CertValue& t,
                                         const Limits& lim) {
  AlphaSeq alpha = alpha_of(beta, lim);
  if (!alpha.exact()) return {HypothesisKind::Inconclusive, 0};
  const EPSeq& a = alpha.seq();
  for (size_t k = 1; k <= a.shift_states(); ++k) {
    CertValue v = eval_pi(shift(a, k - 1), beta, lim);
    if (cert_cmp(v, t, lim) == Ordering::Less)
      return {HypothesisKind::Fails, k};
  }
  return {HypothesisKind::Holds, 0};
}

HypothesisVerdict check_main1_literal(const BetaSpec& beta, const CertValue& t,
                                      const Limits& lim) {
  AlphaSeq alpha = alpha_of(beta, lim);
  if (!alpha.exact()) return {HypothesisKind::Inconclusive, 0};
  const EPSeq& a = alpha.seq();
  if (cert_cmp(t, CertValue::point(Rat(0)), lim) != Ordering::Greater)
    return {HypothesisKind::Holds, 0};
  CertValue scale = CertValue::point(Rat(1));  // beta^{-(k-1)}
  CertValue inv =
      beta.is_rational()
          ? CertValue::point(Rat(1) / beta.rational_value())
          : CertValue::algebraic(FieldElem::of_rat(beta.field(), Rat(1)) /
                                 beta.beta_elem());
  size_t states = a.shift_states();
  for (size_t k = 1;; ++k) {
    size_t idx = (k - 1 < states)
                     ? k - 1
                     : a.preperiod().size() +
                           (k - 1 - a.preperiod().size()) % a.period().size();
    CertValue v = eval_pi(shift(a, idx), beta, lim);
    CertValue tail = cert_mul(v, scale);
    if (cert_cmp(tail, t, lim) == Ordering::Less)
      return {HypothesisKind::Fails, k};
    scale = cert_mul(scale, inv);
    if (k > 10000)
      return {HypothesisKind::Inconclusive, 0};
  }
}

bool in_survivor_set(const BetaSpec& beta, const EPSeq& greedy_x,
                     const CertValue& t, const Limits& lim) {
  for (size_t k = 0; k < greedy_x.shift_states(); ++k) {
    EPSeq sh = shift(greedy_x, k);
    if (sh.is_zero()) continue;
    CertValue v = eval_pi(sh, beta, lim);
    if (cert_cmp(v, t, lim) == Ordering::Less) return false;
  }
  return true;
}

}  // namespace bts
