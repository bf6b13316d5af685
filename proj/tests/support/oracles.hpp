#pragma once

// Brute-force oracles and generators shared by the test binaries. These
// deliberately avoid the library's own code paths wherever they serve as
// an independent check.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "bts/epseq.hpp"
#include "bts/word.hpp"

namespace bts::testsupport {

inline std::mt19937_64 rng(uint64_t seed = 0x5eed5eedULL) {
  return std::mt19937_64(seed);
}

inline int rand_int(std::mt19937_64& g, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(g);
}

inline Word random_word(std::mt19937_64& g, int max_len, int max_digit,
                        int min_len = 0) {
  int len = rand_int(g, min_len, max_len);
  std::vector<int> d(len);
  for (int i = 0; i < len; ++i) d[i] = rand_int(g, 0, max_digit);
  return Word(std::move(d));
}

inline EPSeq random_epseq(std::mt19937_64& g, int max_pre, int max_per,
                          int max_digit) {
  Word pre = random_word(g, max_pre, max_digit);
  Word per = random_word(g, max_per, max_digit, 1);
  return EPSeq::make(pre, per);
}

// Word order u.0^inf vs v.0^inf by direct padded digit scan; independent
// of word_cmp.
inline int padded_word_cmp(const std::vector<int>& u,
                           const std::vector<int>& v) {
  size_t n = std::max(u.size(), v.size());
  for (size_t i = 0; i < n; ++i) {
    int a = i < u.size() ? u[i] : 0;
    int b = i < v.size() ? v[i] : 0;
    if (a != b) return a < b ? -1 : 1;
  }
  return 0;
}

// All-splits Lyndon oracle straight from the definition.
inline bool lyndon_oracle(const std::vector<int>& w) {
  for (size_t i = 1; i < w.size(); ++i) {
    std::vector<int> suffix(w.begin() + i, w.end());
    if (padded_word_cmp(w, suffix) >= 0) return false;
  }
  return true;
}

// Plain double bisection for a sign-changing f on [lo, hi]; the root
// oracle used to freeze expected enclosures.
template <typename F>
double bisect_oracle(F f, double lo, double hi, int iters = 200) {
  for (int i = 0; i < iters; ++i) {
    double mid = (lo + hi) / 2;
    if (f(lo) * f(mid) <= 0)
      hi = mid;
    else
      lo = mid;
  }
  return (lo + hi) / 2;
}

}  // namespace bts::testsupport
