#include "bts/epseq.hpp"

#include <algorithm>
#include <numeric>

namespace bts {

namespace {

// Smallest p such that w is a power of its length-p prefix.
size_t primitive_root_len(const Word& w) {
  size_t n = w.size();
  for (size_t p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (size_t i = p; i < n && ok; ++i) ok = w.at(i) == w.at(i - p);
    if (ok) return p;
  }
  return n;
}

}  // namespace

EPSeq::EPSeq() : pre_(), per_(Word({0})) {}

EPSeq EPSeq::make(Word pre, Word per) {
  if (per.empty()) throw DomainError("EPSeq: empty period");
  // Reduce the period to its primitive root.
  size_t p = primitive_root_len(per);
  if (p < per.size()) per = per.prefix(p);
  // Shorten the preperiod while its last digit matches the last digit of
  // the period; each step rotates the period right by one. This yields
  // the unique minimal lasso representation.
  std::vector<int> pre_d = pre.digits();
  std::vector<int> per_d = per.digits();
  while (!pre_d.empty() && pre_d.back() == per_d.back()) {
    per_d.pop_back();
    per_d.insert(per_d.begin(), pre_d.back());
    pre_d.pop_back();
  }
  return EPSeq(Word(std::move(pre_d)), Word(std::move(per_d)));
}

EPSeq EPSeq::from_word(const Word& w) { return make(w, Word({0})); }

EPSeq EPSeq::periodic(const Word& w) { return make(Word(), w); }

int EPSeq::digit_at(size_t i) const {
  if (i < pre_.size()) return pre_.at(i);
  return per_.at((i - pre_.size()) % per_.size());
}

int EPSeq::max_digit() const {
  int m = 0;
  for (int d : pre_.digits()) m = std::max(m, d);
  for (int d : per_.digits()) m = std::max(m, d);
  return m;
}

EPSeq parse_seq(std::string_view text) {
  if (text.empty()) throw ParseError("empty sequence literal");
  auto open = text.find('(');
  if (open == std::string_view::npos) {
    if (text.find(')') != std::string_view::npos)
      throw ParseError("unmatched ')' in sequence literal");
    return EPSeq::from_word(Word::parse(text));
  }
  if (text.back() != ')')
    throw ParseError("sequence literal must end with ')' after '('");
  std::string_view pre = text.substr(0, open);
  std::string_view per = text.substr(open + 1, text.size() - open - 2);
  if (per.find('(') != std::string_view::npos ||
      per.find(')') != std::string_view::npos)
    throw ParseError("nested parentheses in sequence literal");
  if (per.empty()) throw ParseError("empty period in parentheses");
  return EPSeq::make(Word::parse(pre), Word::parse(per));
}

std::string render(const EPSeq& s) {
  if (s.is_zero()) return "0";
  if (s.eventually_zero()) return s.preperiod().str();
  return s.preperiod().str() + "(" + s.period().str() + ")";
}

EPSeq canonicalize(const EPSeq& s) { return s; }

EPSeq shift(const EPSeq& s, size_t n) {
  const Word& pre = s.preperiod();
  const Word& per = s.period();
  if (n <= pre.size()) {
    return EPSeq::make(pre.suffix_from(n), per);
  }
  size_t r = (n - pre.size()) % per.size();
  std::vector<int> rot;
  rot.reserve(per.size());
  for (size_t i = 0; i < per.size(); ++i)
    rot.push_back(per.at((i + r) % per.size()));
  return EPSeq::make(Word(), Word(std::move(rot)));
}

std::optional<size_t> first_difference(const EPSeq& a, const EPSeq& b) {
  size_t pa = a.period().size(), pb = b.period().size();
  size_t l = std::lcm(pa, pb);
  size_t bound = a.preperiod().size() + b.preperiod().size() + l + std::max(pa, pb);
  for (size_t i = 0; i < bound; ++i) {
    if (a.digit_at(i) != b.digit_at(i)) return i;
  }
  return std::nullopt;
}

Ordering cmp(const EPSeq& a, const EPSeq& b) {
  auto d = first_difference(a, b);
  if (!d) return Ordering::Equal;
  return a.digit_at(*d) < b.digit_at(*d) ? Ordering::Less : Ordering::Greater;
}

}  // namespace bts
