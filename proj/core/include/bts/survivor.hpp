#pragma once

#include <optional>
#include <vector>

#include "bts/expansion.hpp"
#include "bts/subshift.hpp"

namespace bts {

// Stability interval I_r^* = (r, r^*) attached to a beta-rational r.
struct StableInterval {
  Word r_word;             // finite greedy expansion of r
  CertValue r_value;       // r = .r_word
  EPSeq r_star_seq;        // greedy expansion of r^*
  CertValue r_star_value;  // r^*
};

struct OmegaWord {
  Word word;        // t_1 ... t_{k-1} s with s > t_k
  bool admissible;  // word . 0^inf lies in Sigma_beta
};

enum class HypothesisKind { Holds, Fails, Inconclusive };

struct HypothesisVerdict {
  HypothesisKind kind = HypothesisKind::Inconclusive;
  size_t k = 0;  // least violating k when kind == Fails
};

std::string hypothesis_str(const HypothesisVerdict& v);

struct DimResult {
  EPSeq t_seq;  // quasi-greedy sequence the subshift pair was built from
  // True when t sat inside a stability window and the dimension was
  // computed at the window endpoint r^* (same survivor set).
  bool computed_at_window_endpoint = false;
  std::optional<CertValue> lambda;
  CertValue dim;
  HypothesisVerdict hypothesis_main1;    // orbit reading of the condition
  HypothesisVerdict hypothesis_literal;  // literal summation reading
  NormalizedPair normalized;
};

// t in K(t): every shift of the greedy expansion of t is 0^inf or >= it.
// The EPSeq overload takes the greedy expansion directly (exact); the
// value overload computes the expansion, raising InconclusiveAtDepth if
// the orbit neither cycles, terminates, nor enters (0, t) in depth.
bool is_bifurcation(const BetaSpec& beta, const EPSeq& greedy_t,
                    const Limits& lim = Limits{});
bool is_bifurcation_value(const BetaSpec& beta, const CertValue& t,
                          const Limits& lim = Limits{});

// The admissibility-restoring rewriting chain of section-3 style: from
// (r_word)^inf through digit bumps to a sequence all of whose shifts are
// below alpha. steps.front() is the starting periodization, steps.back()
// the admissible result.
struct RewriteChain {
  std::vector<EPSeq> steps;
  const EPSeq& result() const { return steps.back(); }
  size_t rewrites() const { return steps.size() - 1; }
};

RewriteChain r_star_chain(int gamma, const AlphaSeq& alpha, const Word& r_word,
                          const Limits& lim = Limits{});

StableInterval r_star(const BetaSpec& beta, const Word& r_word,
                      const Limits& lim = Limits{});

// The stability window containing t, or nullopt if t is a bifurcation
// parameter. Certifies r < t < r^*.
std::optional<StableInterval> stable_component(const BetaSpec& beta,
                                               const EPSeq& greedy_t,
                                               const Limits& lim = Limits{});
std::optional<StableInterval> stable_component_value(const BetaSpec& beta,
                                                     const CertValue& t,
                                                     const Limits& lim = Limits{});

// Omega_{beta,k}(t): the words t_1..t_{k-1} s with t_k < s <= gamma,
// each flagged with admissibility of word . 0^inf.
std::vector<OmegaWord> omega_words(const BetaSpec& beta, const EPSeq& greedy_t,
                                   size_t k, const Limits& lim = Limits{});

// dim_H K(t) = -ln(lambda)/ln(beta) through the normalize-then-entropy
// pipeline on the pair (quasi-greedy t, alpha(beta)). Requires
// gamma(beta) = 1 (i.e. 1 < beta <= 2). t = 0 gives dimension exactly 1.
// A stable t whose expansion does not close up is rerouted to the window
// endpoint r^* (K(t) = K(r^*) on a stability window).
DimResult hausdorff_dim(const BetaSpec& beta, const CertValue& t,
                        const Limits& lim = Limits{});
// Same, with t supplied as its greedy expansion (validated admissible).
DimResult hausdorff_dim_seq(const BetaSpec& beta, const EPSeq& greedy_t,
                            const Limits& lim = Limits{});

// Orbit reading of the main-theorem hypothesis: the value of every shift
// sigma^{k-1}(alpha) is >= t.
HypothesisVerdict check_main1_hypothesis(const BetaSpec& beta,
                                         const CertValue& t,
                                         const Limits& lim = Limits{});
// Literal summation reading: sum_{i>=k} alpha_i beta^{-i} >= t, which
// fails for every t > 0 at large k since the tail vanishes.
HypothesisVerdict check_main1_literal(const BetaSpec& beta, const CertValue& t,
                                      const Limits& lim = Limits{});

// x in K(t), with x given by its greedy expansion.
bool in_survivor_set(const BetaSpec& beta, const EPSeq& greedy_x,
                     const CertValue& t, const Limits& lim = Limits{});

}  // namespace bts
