#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bts/epseq.hpp"
#include "bts/word.hpp"
#include "support/oracles.hpp"

using namespace bts;
namespace ts = bts::testsupport;

TEST_CASE("sequence literal grammar") {
  EPSeq s = parse_seq("0110011");
  CHECK(s.preperiod().str() == "0110011");
  CHECK(s.period().str() == "0");

  s = parse_seq("(30)");
  CHECK(s.preperiod().empty());
  CHECK(s.period().str() == "30");

  s = parse_seq("11101001000(1)");
  CHECK(s.preperiod().str() == "11101001000");
  CHECK(s.period().str() == "1");

  CHECK_THROWS_AS(parse_seq(""), ParseError);
  CHECK_THROWS_AS(parse_seq("()"), ParseError);
  CHECK_THROWS_AS(parse_seq("01()"), ParseError);
  CHECK_THROWS_AS(parse_seq("0a1"), ParseError);
  CHECK_THROWS_AS(parse_seq("0(1"), ParseError);
  CHECK_THROWS_AS(parse_seq("0)1("), ParseError);
  CHECK_THROWS_AS(parse_seq("((1))"), ParseError);
}

TEST_CASE("canonical form") {
  EPSeq s = EPSeq::make(Word::parse("01"), Word::parse("0101"));
  CHECK(s.preperiod().empty());
  CHECK(s.period().str() == "01");

  s = EPSeq::make(Word(), Word::parse("011011"));
  CHECK(s.period().str() == "011");

  s = EPSeq::make(Word::parse("10"), Word::parse("0"));
  CHECK(s.preperiod().str() == "1");
  CHECK(s.period().str() == "0");

  // Rotation-absorbing case: 11(01) is the sequence 1(10).
  s = EPSeq::make(Word::parse("11"), Word::parse("01"));
  CHECK(s.preperiod().str() == "1");
  CHECK(s.period().str() == "10");
  CHECK(cmp(s, parse_seq("1(10)")) == Ordering::Equal);

  CHECK_THROWS_AS(EPSeq::make(Word::parse("1"), Word()), DomainError);
}

TEST_CASE("render is the inverse printer") {
  CHECK(render(parse_seq("0110011")) == "0110011");
  CHECK(render(parse_seq("(30)")) == "(30)");
  CHECK(render(parse_seq("11101001000(1)")) == "11101001000(1)");
  CHECK(render(EPSeq()) == "0");
  CHECK(render(parse_seq("000")) == "0");
}

TEST_CASE("shift") {
  CHECK(shift(parse_seq("(01)"), 1) == parse_seq("(10)"));
  CHECK(shift(parse_seq("23(0)"), 1) == parse_seq("3"));
  CHECK(shift(parse_seq("(011)"), 3) == parse_seq("(011)"));
  CHECK(shift(parse_seq("1(10)"), 2) == parse_seq("(01)"));
}

TEST_CASE("cmp worked examples") {
  CHECK(cmp(parse_seq("(01)"), parse_seq("(110)")) == Ordering::Less);
  CHECK(cmp(shift(parse_seq("(23)"), 1), parse_seq("(30)")) ==
        Ordering::Greater);
  CHECK(cmp(parse_seq("(011)"), parse_seq("011(011)")) == Ordering::Equal);
}

TEST_CASE("word_cmp") {
  CHECK(word_cmp(Word::parse("01"), Word::parse("1")) == Ordering::Less);
  CHECK(word_cmp(Word::parse("10"), Word::parse("1")) == Ordering::Equal);
  CHECK(word_cmp(Word::parse("0110011"), Word::parse("0110100")) ==
        Ordering::Less);
}

TEST_CASE("is_lyndon basics") {
  CHECK(is_lyndon(Word::parse("01")));
  CHECK_FALSE(is_lyndon(Word::parse("010")));
  CHECK(is_lyndon(Word::parse("0")));
  CHECK(is_lyndon(Word::parse("5")));
  CHECK(is_lyndon(Word::parse("00111")));
  CHECK_THROWS_AS(is_lyndon(Word()), DomainError);
}

TEST_CASE("is_lyndon agrees with the all-splits oracle") {
  // Length <= 12 over {0,1}.
  for (size_t len = 1; len <= 12; ++len) {
    for (size_t mask = 0; mask < (size_t{1} << len); ++mask) {
      std::vector<int> d(len);
      for (size_t i = 0; i < len; ++i) d[i] = (mask >> i) & 1;
      CHECK(is_lyndon(Word(d)) == ts::lyndon_oracle(d));
    }
  }
  // Length <= 8 over {0,..,3}.
  for (size_t len = 1; len <= 8; ++len) {
    size_t total = 1;
    for (size_t i = 0; i < len; ++i) total *= 4;
    for (size_t code = 0; code < total; ++code) {
      std::vector<int> d(len);
      size_t c = code;
      for (size_t i = 0; i < len; ++i) {
        d[i] = static_cast<int>(c % 4);
        c /= 4;
      }
      CHECK(is_lyndon(Word(d)) == ts::lyndon_oracle(d));
    }
  }
}

TEST_CASE("lexicographic order axioms on random triples") {
  auto g = ts::rng(101);
  auto leq = [](const EPSeq& x, const EPSeq& y) {
    return cmp(x, y) != Ordering::Greater;
  };
  for (int it = 0; it < 300; ++it) {
    EPSeq a = ts::random_epseq(g, 4, 4, 2);
    EPSeq b = ts::random_epseq(g, 4, 4, 2);
    EPSeq c = ts::random_epseq(g, 4, 4, 2);
    // Antisymmetry of the comparison result.
    Ordering ab = cmp(a, b), ba = cmp(b, a);
    if (ab == Ordering::Less) CHECK(ba == Ordering::Greater);
    if (ab == Ordering::Greater) CHECK(ba == Ordering::Less);
    if (ab == Ordering::Equal) {
      CHECK(ba == Ordering::Equal);
      CHECK(a == b);  // equality iff canonical forms identical
    }
    // Transitivity.
    if (leq(a, b) && leq(b, c)) CHECK(leq(a, c));
    // Totality: exactly one of <, =, > holds by construction of Ordering.
  }
}

TEST_CASE("canonical equality is syntactic on random pairs") {
  auto g = ts::rng(102);
  for (int it = 0; it < 300; ++it) {
    EPSeq a = ts::random_epseq(g, 3, 3, 1);
    EPSeq b = ts::random_epseq(g, 3, 3, 1);
    CHECK((cmp(a, b) == Ordering::Equal) == (a == b));
  }
}

TEST_CASE("shift streams the same digits") {
  auto g = ts::rng(103);
  for (int it = 0; it < 200; ++it) {
    EPSeq s = ts::random_epseq(g, 4, 5, 3);
    size_t n = static_cast<size_t>(ts::rand_int(g, 0, 12));
    EPSeq sh = shift(s, n);
    size_t bound = 3 * (s.preperiod().size() + s.period().size()) + 6;
    for (size_t i = 0; i < bound; ++i) CHECK(sh.digit_at(i) == s.digit_at(n + i));
    // Shift composition.
    CHECK(shift(s, n + 2) == shift(shift(s, n), 2));
  }
}

TEST_CASE("parse round trip on random canonical sequences") {
  auto g = ts::rng(104);
  for (int it = 0; it < 300; ++it) {
    EPSeq s = ts::random_epseq(g, 4, 4, 9);
    CHECK(parse_seq(render(s)) == s);
  }
}
