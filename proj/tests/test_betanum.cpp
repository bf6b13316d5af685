#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bts/beta.hpp"
#include "bts/certvalue.hpp"
#include "bts/intpoly.hpp"
#include "support/oracles.hpp"

using namespace bts;
namespace ts = bts::testsupport;

namespace {

Rat tol(long num, long exp10) {
  Int den = 1;
  for (long i = 0; i < exp10; ++i) den *= 10;
  return Rat(num, den);
}

bool encloses(const CertValue& v, double x, double slack = 0.0) {
  return rat_double(v.lo()) - slack <= x && x <= rat_double(v.hi()) + slack;
}

}  // namespace

TEST_CASE("rational parsing and helpers") {
  CHECK(parse_rational("3/2") == Rat(3, 2));
  CHECK(parse_rational("0.25") == Rat(1, 4));
  CHECK(parse_rational("-7") == Rat(-7));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK(rat_floor(Rat(7, 2)) == 3);
  CHECK(rat_floor(Rat(-7, 2)) == -4);
  CHECK(rat_ceil(Rat(7, 2)) == 4);
  CHECK(rat_pow(Rat(2, 3), -2) == Rat(9, 4));
}

TEST_CASE("ln enclosure") {
  for (double x : {0.5, 0.7548776662466928, 1.0, 1.888518845484415, 3.30277,
                   7.5, 0.01}) {
    Rat q(static_cast<long>(x * 1e9), 1000000000L);
    QInterval iv = ln_enclosure(q, tol(1, 12));
    double expect = std::log(rat_double(q));
    CHECK(rat_double(iv.lo) <= expect + 1e-12);
    CHECK(rat_double(iv.hi) >= expect - 1e-12);
    CHECK(rat_double(iv.width()) <= 1e-12 + 1e-15);
  }
}

TEST_CASE("IntPoly basics") {
  IntPoly p = IntPoly::from_desc({1, -3, -1});  // x^2 - 3x - 1
  CHECK(p.degree() == 2);
  CHECK(p.eval(Rat(0)) == Rat(-1));
  CHECK(p.eval(Rat(4)) == Rat(3));
  CHECK(p.derivative() == IntPoly::from_desc({2, -3}));

  IntPoly q = IntPoly::from_desc({1, -1});  // x - 1
  IntPoly prod = p * q;
  CHECK(prod.eval(Rat(1)) == 0);
  CHECK(prod.deflate_at_one() == p);

  // gcd((x-1)(x-2), (x-1)(x-3)) = x - 1 up to sign/content.
  IntPoly a = IntPoly::from_desc({1, -3, 2});
  IntPoly b = IntPoly::from_desc({1, -4, 3});
  CHECK(IntPoly::gcd(a, b) == IntPoly::from_desc({1, -1}));

  // Squarefree part of (x-1)^2 (x+2) has roots {1, -2}.
  IntPoly sq = IntPoly::from_desc({1, -1}) * IntPoly::from_desc({1, -1}) *
               IntPoly::from_desc({1, 2});
  IntPoly sf = sq.squarefree_part();
  CHECK(sf.degree() == 2);
  CHECK(sf.eval(Rat(1)) == 0);
  CHECK(sf.eval(Rat(-2)) == 0);
}

TEST_CASE("Sturm root counting") {
  // (x-1)(x-2)(x-3)
  IntPoly p = IntPoly::from_desc({1, -1}) * IntPoly::from_desc({1, -2}) *
              IntPoly::from_desc({1, -3});
  SturmChain chain = SturmChain::build(p);
  CHECK(chain.count_halfopen(Rat(0), Rat(4)) == 3);
  CHECK(chain.count_halfopen(Rat(0), Rat(2)) == 2);  // (0, 2] includes 2
  CHECK(chain.count_open(Rat(0), Rat(2)) == 1);
  CHECK(chain.count_halfopen(Rat(3, 2), Rat(5, 2)) == 1);
  CHECK(chain.count_halfopen(Rat(7, 2), Rat(10)) == 0);

  // Double root counts once (distinct roots).
  IntPoly d = IntPoly::from_desc({1, -2, 1});  // (x-1)^2
  SturmChain dc = SturmChain::build(d);
  CHECK(dc.count_halfopen(Rat(0), Rat(2)) == 1);
}

TEST_CASE("unique root isolation above 1") {
  IsolatedRoot r = isolate_unique_root_above(IntPoly::from_desc({1, -3, -1}),
                                             Rat(1));
  double expect = ts::bisect_oracle(
      [](double x) { return x * x - 3 * x - 1; }, 3.0, 4.0);
  CHECK_FALSE(r.exact);
  CHECK(rat_double(r.range.lo) <= expect);
  CHECK(rat_double(r.range.hi) >= expect);

  // Exactly one root > 1 required.
  CHECK_THROWS_AS(isolate_unique_root_above(
                      IntPoly::from_desc({1, -5, 6}), Rat(1)),  // roots 2, 3
                  DomainError);
  CHECK_THROWS_AS(isolate_unique_root_above(IntPoly::from_desc({1, 1}), Rat(1)),
                  DomainError);  // root -1
}

TEST_CASE("beta parsing and gamma") {
  CHECK(gamma_of(BetaSpec::rational(Rat(2))) == 1);
  CHECK(gamma_of(BetaSpec::rational(Rat(3, 2))) == 1);
  CHECK(gamma_of(BetaSpec::rational(Rat(10))) == 9);
  CHECK(gamma_of(BetaSpec::parse("poly:1,-3,-1")) == 3);
  CHECK_THROWS_AS(BetaSpec::rational(Rat(1)), DomainError);
  CHECK_THROWS_AS(gamma_of(BetaSpec::rational(Rat(11))), DomainError);

  // A polynomial whose relevant root is secretly an integer collapses to
  // the rational form, and gamma uses the integer convention.
  BetaSpec two = BetaSpec::parse("poly:1,-2");
  CHECK(two.is_rational());
  CHECK(gamma_of(two) == 1);
}

TEST_CASE("beta from one-expansion") {
  BetaSpec b13 = beta_from_one_expansion(Word::parse("31"));
  double expect31 = ts::bisect_oracle(
      [](double x) { return x * x - 3 * x - 1; }, 3.0, 4.0);
  CHECK(encloses(b13.value(), expect31));
  CHECK(gamma_of(b13) == 3);

  BetaSpec phi = beta_from_one_expansion(Word::parse("11"));
  double expect_phi = ts::bisect_oracle(
      [](double x) { return x * x - x - 1; }, 1.0, 2.0);
  CertValue pv = refine(phi.value(), tol(1, 9));
  CHECK(encloses(pv, expect_phi, 1e-9));
  CHECK(rat_double(pv.mid()) == doctest::Approx(1.6180339887).epsilon(1e-8));

  BetaSpec b5 = beta_from_one_expansion(Word::parse("11101"));
  double expect5 = ts::bisect_oracle(
      [](double x) { return ((((x - 1) * x - 1) * x - 1) * x) * x - 1; }, 1.0,
      2.0);
  CHECK(expect5 == doctest::Approx(1.888518845484415).epsilon(1e-12));
  CHECK(encloses(refine(b5.value(), tol(1, 9)), expect5, 1e-9));

  // Not greedy expansions of 1 for their own root:
  CHECK_THROWS_AS(beta_from_one_expansion(Word::parse("2")), DomainError);
  CHECK_THROWS_AS(beta_from_one_expansion(Word::parse("13")), DomainError);
  CHECK_THROWS_AS(beta_from_one_expansion(Word::parse("10")), DomainError);
  CHECK_THROWS_AS(beta_from_one_expansion(Word::parse("01")), DomainError);
  CHECK_THROWS_AS(beta_from_one_expansion(Word()), DomainError);
}

TEST_CASE("eval_pi closed forms") {
  BetaSpec two = BetaSpec::rational(Rat(2));
  CertValue half = eval_pi(parse_seq("1"), two);
  CHECK(half.is_point());
  CHECK(half.lo() == Rat(1, 2));
  CHECK(eval_pi(parse_seq("(10)"), two).lo() == Rat(2, 3));

  BetaSpec b13 = beta_from_one_expansion(Word::parse("31"));
  CertValue one = eval_pi(parse_seq("(30)"), b13);
  CHECK(cert_cmp(one, CertValue::point(Rat(1))) == Ordering::Equal);

  CHECK_THROWS_AS(eval_pi(parse_seq("(40)"), b13), DomainError);
}

TEST_CASE("cert_cmp") {
  BetaSpec b13 = beta_from_one_expansion(Word::parse("31"));
  for (const BetaSpec& beta :
       {BetaSpec::rational(Rat(2)), BetaSpec::rational(Rat(7, 4)), b13}) {
    CHECK(cert_cmp(eval_pi(parse_seq("(01)"), beta),
                   eval_pi(parse_seq("(10)"), beta)) == Ordering::Less);
  }
  CHECK(cert_cmp(CertValue::point(Rat(1, 3)), CertValue::point(Rat(1, 3))) ==
        Ordering::Equal);

  // Two equal opaque enclosures cannot be proven equal: loud error.
  auto mk = [] {
    return CertValue::opaque([](int depth) {
      Rat w = rat_pow(Rat(1, 2), depth);
      return QInterval(Rat(1, 3) - w, Rat(1, 3) + w);
    });
  };
  CHECK_THROWS_AS(cert_cmp(mk(), mk(), Limits{.refine_cap = 64}),
                  UndecidableComparison);
}

TEST_CASE("refine") {
  CertValue p = CertValue::point(Rat(1, 2));
  CHECK(refine(p, tol(1, 30)).is_point());

  BetaSpec b13 = beta_from_one_expansion(Word::parse("31"));
  CertValue b = refine(b13.value(), tol(1, 9));
  CHECK(b.width() <= tol(1, 9));
  CHECK(b.lo() > Rat(330277563, 100000000));
  CHECK(b.hi() < Rat(330277564, 100000000));

  CHECK_THROWS_AS(refine(CertValue::opaque([](int) {
                           return QInterval(Rat(0), Rat(1));
                         }),
                         tol(1, 6), Limits{.refine_cap = 8}),
                  RefinementCapExceeded);
}

TEST_CASE("smallest_root_unit worked cases") {
  // x + x^5 = 1 as a finite stream.
  CoeffStream c1({1, 0, 0, 0, 1}, {0});
  auto l1 = smallest_root_unit(c1);
  REQUIRE(l1.has_value());
  double expect = ts::bisect_oracle(
      [](double x) { return x + x * x * x * x * x - 1; }, 0.0, 1.0);
  CertValue l1r = refine(*l1, tol(1, 13));
  CHECK(encloses(l1r, expect, 1e-12));

  // Full shift: z/(1-z) = 1 at exactly 1/2.
  CoeffStream c2({}, {1});
  auto l2 = smallest_root_unit(c2);
  REQUIRE(l2.has_value());
  CHECK(l2->is_point());
  CHECK(l2->lo() == Rat(1, 2));

  // Period 1, 0, -1: no root in (0, 1).
  CoeffStream c3({}, {1, 0, -1});
  CHECK_FALSE(smallest_root_unit(c3).has_value());
}

TEST_CASE("root identity across the two Example-5 equations") {
  // x + x^5 = 1 and x^2 + x^3 = 1 share their root in (0,1).
  CoeffStream a({1, 0, 0, 0, 1}, {0});
  CoeffStream b({0, 1, 1}, {0});
  CertValue la = refine(*smallest_root_unit(a), tol(1, 13));
  CertValue lb = refine(*smallest_root_unit(b), tol(1, 13));
  CHECK(rat_abs(la.mid() - lb.mid()) <= tol(1, 12));

  // The periodized variant (x + x^2 - x^4 - x^5)/(1 - x^5) = 1 again.
  CoeffStream p({}, {1, 1, 0, -1, -1});
  CertValue lp = refine(*smallest_root_unit(p), tol(1, 13));
  CHECK(rat_abs(lp.mid() - lb.mid()) <= tol(1, 12));
}

TEST_CASE("unit equation numerator clears the period denominator") {
  // From a = (011)^inf, b = (110)^inf: difference periodic 1, 0, -1.
  CoeffStream c({}, {1, 0, -1});
  IntPoly n = unit_equation_numerator(c);
  // (P-1)(1-z^3) + zQ ... reduces to z - 1 and deflates to a constant.
  CHECK(n.degree() == 0);
}

TEST_CASE("smallest_root_unit vs dense sign-scan oracle") {
  auto g = ts::rng(105);
  int with_roots = 0;
  for (int it = 0; it < 100; ++it) {
    int plen = ts::rand_int(g, 1, 6);
    int prelen = ts::rand_int(g, 0, 3);
    std::vector<int> pre(prelen), per(plen);
    for (int& x : pre) x = ts::rand_int(g, -3, 3);
    for (int& x : per) x = ts::rand_int(g, -3, 3);
    CoeffStream c(pre, per);

    // Oracle: scan f(z) = sum c_n z^n - 1 on a double grid, with the
    // periodic tail summed in closed form.
    auto f = [&](double z) {
      double acc = -1.0, zp = 1.0;
      for (size_t i = 0; i < pre.size(); ++i) {
        zp *= z;
        acc += pre[i] * zp;
      }
      double qv = 0.0, zj = 1.0;
      for (size_t j = 0; j < per.size(); ++j) {
        zj *= z;
        qv += per[j] * zj;
      }
      acc += zp * qv / (1.0 - zj);
      return acc;
    };
    double first_cross = -1;
    double prev = f(1e-5);
    for (double z = 2e-5; z < 0.99999; z += 1e-5) {
      double cur = f(z);
      if (prev == 0 || (prev < 0) != (cur < 0)) {
        first_cross = z;
        break;
      }
      prev = cur;
    }
    auto root = smallest_root_unit(c);
    if (root) {
      ++with_roots;
      CertValue r = refine(*root, tol(1, 8));
      if (first_cross > 0 && first_cross < 0.9999) {
        CHECK(rat_double(r.mid()) ==
              doctest::Approx(first_cross).epsilon(2e-4));
      }
      CHECK(r.lo() > 0);
      CHECK(r.hi() < 1);
    } else {
      // No certified root: the oracle must not see a crossing safely
      // inside (0,1).  (Grid noise very close to 1 is tolerated.)
      if (first_cross > 0) CHECK(first_cross > 0.999);
    }
  }
  CHECK(with_roots > 10);  // the sample actually exercised the root path
}
