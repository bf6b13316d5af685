#pragma once

#include <optional>
#include <vector>

#include "bts/beta.hpp"
#include "bts/certvalue.hpp"
#include "bts/epseq.hpp"

namespace bts {

// An ordered pair (t, u) of {0,1}-sequences defining the two-sided
// lexicographic subshift K(t,u) = { x : t <= sigma^n(x) <= u for all n }.
class LexPair {
public:
  LexPair(EPSeq t, EPSeq u);  // rejects digits > 1 and t > u
  const EPSeq& t() const { return t_; }
  const EPSeq& u() const { return u_; }

private:
  EPSeq t_, u_;
};

enum class PairStatus { Nonempty, Empty, DegenerateBoundary };

const char* pair_status_str(PairStatus s);

// (a, b) with K(a,b) = K(t,u); when Nonempty, a = min K and b = max K
// and both belong to K(a,b). DegenerateBoundary marks a_1 = 1 or
// b_1 = 0, where K(t,u) is contained in {0^inf, 1^inf}.
struct NormalizedPair {
  EPSeq a, b;
  PairStatus status = PairStatus::Nonempty;
};

struct NormalizeOptions {
  // Run the tau (min) loop before the theta (max) loop.
  bool step2_first = true;
  // Compare against the current opposite side instead of the original
  // t/u; fewer repetitions, same fixed point.
  bool reduced = true;
};

// x in K(t,u): every shift of x lies in [t, u]. Finite check over the
// distinct shifts of x.
bool membership(const EPSeq& x, const LexPair& p);

// Step 1: periodize t upward / u downward so every shift of the result
// is on the correct side of it.
EPSeq step1_min(const EPSeq& t);
EPSeq step1_max(const EPSeq& u);

// Step 2 operator: one application. Unchanged when every shift of a is
// <= u; otherwise bumps digit n2 = min{k>=1 : sigma^k(a) > u} up by one
// and periodizes. The bumped digit must be 0 (DigitOverflow otherwise).
EPSeq tau(const EPSeq& a, const EPSeq& u);

// Step 3 operator, mirror of tau (DigitUnderflow when the digit is 0).
EPSeq theta(const EPSeq& b, const EPSeq& t);

NormalizedPair normalize(const LexPair& p,
                         const NormalizeOptions& opt = NormalizeOptions{});

struct EntropyResult {
  std::optional<CertValue> lambda;  // smallest root in (0,1), if any
  CertValue entropy;                // -ln(lambda), or exactly 0
  NormalizedPair normalized;
};

// Topological entropy of K(t,u) via the smallest positive solution of
// sum (b_n - a_n) z^n = 1 over the normalized pair; 0 when the pair is
// empty, degenerate, or the equation has no root in (0,1).
EntropyResult entropy(const LexPair& p,
                      const NormalizeOptions& opt = NormalizeOptions{});

// When the entropy of the normalized pair is zero, enumerates K as a set
// of purely periodic sequences of period <= period_cap; nullopt when the
// entropy is positive. CapTooSmall if the boundary sequences themselves
// cannot be represented within the cap.
std::optional<std::vector<EPSeq>> enumerate_if_finite(const NormalizedPair& np,
                                                      size_t period_cap);

// Test oracle: ln(N_n / N_{n-1}) where N_k counts {0,1}-words of length
// k with no factor in `forbidden` (dynamic programming on suffix
// states). Accuracy is O(1/n); this backs differential tests, nothing
// certified.
double sft_entropy_oracle(const std::vector<Word>& forbidden, size_t n);

}  // namespace bts
