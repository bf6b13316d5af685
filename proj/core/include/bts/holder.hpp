#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bts/survivor.hpp"

namespace bts {

// Number of leading quasi-greedy digits shared by t and u (both in
// (0, 1], t != u). IdenticalInputs when t == u.
size_t common_prefix_len(const CertValue& t, const CertValue& u,
                         const BetaSpec& beta, const Limits& lim = Limits{});

struct HolderSample {
  Rat offset;                   // signed t' - t
  Rat eta_diff;                 // |eta(t') - eta(t)|, midpoint-based
  bool treated_zero = false;    // below the noise threshold
  std::optional<double> ratio;  // ln|diff| / ln|offset|; nullopt when zero
};

struct HolderEstimate {
  CertValue eta_t;
  std::vector<HolderSample> samples;
  // No finite ratio among the finest half of the offsets: eta is locally
  // constant at the sampled resolution and the exponent proxy is +inf.
  bool infinite = false;
  std::optional<double> estimate;  // min finite ratio over the finest half
};

// Geometric offset ladder base/2, base/4, ..., base/2^count.
std::vector<Rat> geometric_offsets(const Rat& base, int count);

// liminf proxy for the local Hoelder exponent of eta at t: evaluates
// eta(t +- h) over the offset ladder and takes the minimum ratio over
// the finest half. Differences below 10x the enclosure width are treated
// as zero rather than manufacturing exponents from noise.
HolderEstimate holder_estimate(const BetaSpec& beta, const CertValue& t,
                               const std::vector<Rat>& offsets,
                               const Limits& lim = Limits{});

struct SweepRow {
  Rat t;
  std::optional<std::pair<Rat, Rat>> lambda;  // enclosure endpoints
  std::optional<Rat> eta;                     // midpoint after refinement
  std::string hypothesis;
  std::string status;  // "ok" or the error message
};

// eta(t) over a grid; per-row errors are recorded in the status column
// and the sweep continues. jobs <= 0 means one worker per core.
std::vector<SweepRow> eta_sweep(const BetaSpec& beta,
                                const std::vector<Rat>& grid, int jobs,
                                const Limits& lim = Limits{});

}  // namespace bts
