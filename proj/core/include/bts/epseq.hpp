#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "bts/word.hpp"

namespace bts {

// An eventually periodic digit sequence, stored as preperiod + nonempty
// period and kept in the unique minimal ("lasso") form:
//   - the period is primitive (not a power of a shorter word),
//   - the preperiod cannot be shortened (its last digit differs from the
//     last digit of the period).
// Two EPSeq are equal as infinite sequences iff they are identical, so
// operator== is syntactic. The all-zero tail is the period "0".
class EPSeq {
public:
  // The zero sequence 0^inf.
  EPSeq();
  // Canonicalizing constructor; per must be nonempty.
  static EPSeq make(Word pre, Word per);
  // w followed by zeros.
  static EPSeq from_word(const Word& w);
  // (w)^inf.
  static EPSeq periodic(const Word& w);

  const Word& preperiod() const { return pre_; }
  const Word& period() const { return per_; }

  int digit_at(size_t i) const;
  int max_digit() const;
  // True iff the sequence is 0^inf.
  bool is_zero() const { return pre_.empty() && per_.digits() == std::vector<int>{0}; }
  // True iff the digits are eventually all zero.
  bool eventually_zero() const { return per_.digits() == std::vector<int>{0}; }
  // True iff the preperiod is empty (purely periodic sequence).
  bool purely_periodic() const { return pre_.empty(); }

  // Number of positions after which shifts start repeating; shifts by
  // 0..shift_states()-1 enumerate every distinct tail of the sequence.
  size_t shift_states() const { return pre_.size() + per_.size(); }

  bool operator==(const EPSeq& o) const {
    return pre_ == o.pre_ && per_ == o.per_;
  }
  bool operator!=(const EPSeq& o) const { return !(*this == o); }

private:
  EPSeq(Word pre, Word per) : pre_(std::move(pre)), per_(std::move(per)) {}
  Word pre_;
  Word per_;
};

// Parses the sequence literal grammar
//   seq := word | word "(" word ")" | "(" word ")"
// where a bare word w denotes w.0^inf.
EPSeq parse_seq(std::string_view text);

// Inverse printer: emits the canonical literal, omitting "(0)". The zero
// sequence renders as "0".
std::string render(const EPSeq& s);

// Identity; retained as the public canonicalization entry point (EPSeq
// values are already canonical by construction).
EPSeq canonicalize(const EPSeq& s);

// Drops the first n digits.
EPSeq shift(const EPSeq& s, size_t n);

// Exact lexicographic comparison. Decided by scanning at most
// |pre_a|+|pre_b|+lcm(|per_a|,|per_b|)+max(|per_a|,|per_b|) positions;
// no difference within that bound means the sequences are equal.
Ordering cmp(const EPSeq& a, const EPSeq& b);

// Position of the first differing digit, if any.
std::optional<size_t> first_difference(const EPSeq& a, const EPSeq& b);

// Strict total order usable as a container comparator.
struct EPSeqLess {
  bool operator()(const EPSeq& a, const EPSeq& b) const {
    return cmp(a, b) == Ordering::Less;
  }
};

}  // namespace bts
