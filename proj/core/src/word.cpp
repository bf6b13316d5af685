#include "bts/word.hpp"

#include <algorithm>

namespace bts {

Word::Word(std::vector<int> digits) : digits_(std::move(digits)) {
  for (int d : digits_) {
    if (d < 0 || d > kMaxDigit)
      throw DomainError("digit out of range [0,9]: " + std::to_string(d));
  }
}

Word Word::parse(std::string_view text) {
  std::vector<int> ds;
  ds.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > '9')
      throw ParseError(std::string("illegal character in word: '") + c + "'");
    ds.push_back(c - '0');
  }
  return Word(std::move(ds));
}

int Word::last() const {
  if (digits_.empty()) throw DomainError("last() on empty word");
  return digits_.back();
}

Word Word::prefix(size_t n) const {
  n = std::min(n, digits_.size());
  return Word(std::vector<int>(digits_.begin(), digits_.begin() + n));
}

Word Word::suffix_from(size_t i) const {
  i = std::min(i, digits_.size());
  return Word(std::vector<int>(digits_.begin() + i, digits_.end()));
}

void Word::push_back(int d) {
  if (d < 0 || d > kMaxDigit)
    throw DomainError("digit out of range [0,9]: " + std::to_string(d));
  digits_.push_back(d);
}

void Word::pop_back() {
  if (digits_.empty()) throw DomainError("pop_back() on empty word");
  digits_.pop_back();
}

std::string Word::str() const {
  std::string s;
  s.reserve(digits_.size());
  for (int d : digits_) s.push_back(static_cast<char>('0' + d));
  return s;
}

Ordering word_cmp(const Word& u, const Word& v) {
  size_t n = std::max(u.size(), v.size());
  for (size_t i = 0; i < n; ++i) {
    int a = i < u.size() ? u.at(i) : 0;
    int b = i < v.size() ? v.at(i) : 0;
    if (a < b) return Ordering::Less;
    if (a > b) return Ordering::Greater;
  }
  return Ordering::Equal;
}

bool is_lyndon(const Word& w) {
  if (w.empty()) throw DomainError("is_lyndon: empty word");
  for (size_t i = 1; i < w.size(); ++i) {
    if (word_cmp(w, w.suffix_from(i)) != Ordering::Less) return false;
  }
  return true;
}

}  // namespace bts
