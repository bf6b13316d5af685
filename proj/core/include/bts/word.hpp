#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bts/errors.hpp"

namespace bts {

// Total order result for sequence and word comparisons.
enum class Ordering { Less, Equal, Greater };

inline const char* ordering_str(Ordering o) {
  switch (o) {
    case Ordering::Less: return "Less";
    case Ordering::Equal: return "Equal";
    case Ordering::Greater: return "Greater";
  }
  return "?";
}

// Single-character digit alphabet; gamma < 10 covers every base handled
// here.
constexpr int kMaxDigit = 9;

// A finite word of digits 0..9. May be empty.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<int> digits);
  // Parses a run of digit characters, e.g. "0110011".
  static Word parse(std::string_view text);

  size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  int at(size_t i) const { return digits_[i]; }
  const std::vector<int>& digits() const { return digits_; }

  int last() const;
  Word prefix(size_t n) const;
  Word suffix_from(size_t i) const;
  void push_back(int d);
  void pop_back();

  bool operator==(const Word& o) const { return digits_ == o.digits_; }

  std::string str() const;

private:
  std::vector<int> digits_;
};

// Lexicographic comparison of u.0^inf and v.0^inf (the paper's order on
// words, so trailing zeros are invisible: "10" equals "1").
Ordering word_cmp(const Word& u, const Word& v);

// True iff w is strictly less than each of its proper suffixes, i.e. for
// every split w = AB with A, B nonempty, w < B in word_cmp order.
// Single-letter words are Lyndon by convention.
bool is_lyndon(const Word& w);

}  // namespace bts
