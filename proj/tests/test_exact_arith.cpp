#include <gtest/gtest.h>

#include <random>

#include "daha/fraction.hpp"
#include "daha/laurent.hpp"
#include "daha/ratfunc.hpp"

using namespace daha;

namespace {

// variables: t, Y1, Y2
const VarSpace kVars({"t", "Y1", "Y2"});
LaurentPoly t(int k = 1) { return LaurentPoly::var(0, k); }
LaurentPoly Y1(int k = 1) { return LaurentPoly::var(1, k); }
LaurentPoly Y2(int k = 1) { return LaurentPoly::var(2, k); }
Exps ex(int a, int b, int c) {
  Exps e{};
  e[0] = a;
  e[1] = b;
  e[2] = c;
  return e;
}
Binomial f12() { return Binomial(1, ex(1, 1, 0), -1, ex(-1, 0, 1), std::make_pair(1, 2)); }

LaurentPoly random_poly(std::mt19937& rng, int terms = 4, int range = 2) {
  std::uniform_int_distribution<int> e(-range, range), c(-3, 3), nt(0, terms);
  std::vector<Term> ts;
  for (int k = nt(rng); k > 0; --k) ts.push_back({ex(e(rng), e(rng), e(rng)), Rational(c(rng))});
  return LaurentPoly::from_terms(ts);
}

Binomial random_binomial(std::mt19937& rng) {
  std::uniform_int_distribution<int> e(-2, 2), c(1, 4), var(1, 2);
  while (true) {
    Exps m1 = ex(e(rng), e(rng), e(rng)), m2 = ex(e(rng), e(rng), e(rng));
    int v = var(rng);
    m2[v] = m1[v] - 1;
    if (m1 == m2) continue;
    return Binomial(Rational(c(rng)), m1, Rational(-c(rng)), m2);
  }
}

// Y1 -> 1, Y2 -> t^-2
std::pair<Rational, int> pt_descending(const Exps& e) { return {Rational(1), e[0] - 2 * e[2]}; }
std::pair<Rational, int> pt_ascending(const Exps& e) { return {Rational(1), e[0] + 2 * e[2]}; }

}  // namespace

TEST(Qint, Examples) {
  EXPECT_EQ(qint(3, t()), 1 + t() + t(2));
  EXPECT_EQ(qint(1, t(2)), LaurentPoly(1));
  EXPECT_EQ(qint(2, t(-2)), 1 + t(-2));
  EXPECT_EQ(qint(0, t()), LaurentPoly());
  EXPECT_THROW(qint(-1, t()), std::invalid_argument);
}

TEST(Qint, FactorialAndBinomial) {
  EXPECT_EQ(qfact(3, t()), (1 + t()) * (1 + t() + t(2)));
  // [4 choose 2]_t = 1 + t + 2t^2 + t^3 + t^4
  EXPECT_EQ(qbinom(4, 2, t()), 1 + t() + 2 * t(2) + t(3) + t(4));
  for (int m = 0; m <= 5; ++m)
    for (int k = 0; k <= m; ++k) EXPECT_EQ(qbinom(m, k, t()) * qfact(k, t()) * qfact(m - k, t()), qfact(m, t()));
}

TEST(BinomialDivide, Examples) {
  LaurentPoly f = f12().poly();
  EXPECT_EQ(binomial_divide(f * Y1(), f12()), Y1());
  EXPECT_FALSE(binomial_divide(Y1() - Y2(), f12()).has_value());
  Binomial d(1, ex(0, 1, 0), -1, ex(0, 0, 1));
  EXPECT_EQ(binomial_divide(Y1(2) - Y2(2), d), Y1() + Y2());
}

TEST(BinomialDivide, RejectsReducibleCandidates) {
  EXPECT_THROW(Binomial(1, ex(0, 2, 0), -1, ex(0, 0, 2)), std::invalid_argument);
  EXPECT_THROW(Binomial(1, ex(0, 1, 0), 0, ex(0, 0, 1)), std::invalid_argument);
  EXPECT_THROW(Binomial(1, ex(0, 1, 0), 2, ex(0, 1, 0)), std::invalid_argument);
}

TEST(BinomialDivide, ProductRoundTrip) {
  std::mt19937 rng(11);
  for (int k = 0; k < 300; ++k) {
    LaurentPoly p = random_poly(rng);
    Binomial b = random_binomial(rng);
    auto q = binomial_divide(p * b.poly(), b);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, p);
  }
}

TEST(FfReduce, Examples) {
  FactoredFraction a = FactoredFraction::ratio(f12().poly() * Y1(), f12());
  EXPECT_EQ(a, FactoredFraction(Y1()));
  EXPECT_TRUE(a.is_polynomial());
  Binomial d(1, ex(0, 1, 0), -1, ex(0, 0, 1));
  EXPECT_EQ(FactoredFraction::ratio(Y1(2) - Y2(2), d), FactoredFraction(Y1() + Y2()));
  EXPECT_EQ(ff_reduce(a), a);
}

TEST(FfReduce, IdempotentAndValuePreserving) {
  std::mt19937 rng(5);
  for (int k = 0; k < 100; ++k) {
    LaurentPoly p = random_poly(rng);
    Binomial b1 = random_binomial(rng), b2 = random_binomial(rng);
    LaurentPoly num = p * b1.poly();
    FactoredFraction x = FactoredFraction::ratio(num, b1).divided_by(b2);
    FactoredFraction r = ff_reduce(x);
    EXPECT_EQ(ff_reduce(r), r);
    EXPECT_TRUE(FactoredFraction::cross_equal(r, x));
    // no denominator factor divides the numerator
    for (const auto& [f, m] : r.den()) EXPECT_FALSE(detail::divide_by_factor(r.num(), f).has_value());
  }
}

TEST(FactoredFraction, FieldAxioms) {
  std::mt19937 rng(7);
  auto rnd = [&]() { return FactoredFraction(random_poly(rng, 3)).divided_by(random_binomial(rng)); };
  for (int k = 0; k < 60; ++k) {
    FactoredFraction a = rnd(), b = rnd(), c = rnd();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(LaurentPoly, RingAxioms) {
  std::mt19937 rng(3);
  for (int k = 0; k < 200; ++k) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    for (const auto& term : (a * b).terms()) EXPECT_NE(term.c, 0);
  }
}

TEST(LaurentPoly, TextForm) {
  LaurentPoly p = 3 * t(2) * Y1() - Y2(-1);
  EXPECT_EQ(p.to_string(kVars), "-Y2^-1 + 3 * t^2 * Y1");
}

TEST(VarSpaceRules, AcyclicAndIdempotent) {
  VarSpace vs({"t", "q", "u"});
  vs.add_rule(1, ex(-2, 0, 0));  // q -> t^-2
  Exps e = ex(1, 3, 0);
  EXPECT_EQ(vs.specialize(e), ex(-5, 0, 0));
  EXPECT_EQ(vs.specialize(vs.specialize(e)), vs.specialize(e));
  EXPECT_THROW(vs.add_rule(0, ex(0, 1, 0)), std::invalid_argument);
}

TEST(EvalAtPoint, Examples) {
  FactoredFraction inv = FactoredFraction(1).divided_by(f12());
  PointValue v = inv.eval(pt_descending);
  ASSERT_FALSE(v.is_pole());
  // 1/(t - t^-3) = t^3 / (t^4 - 1)
  RatFunc expect = RatFunc(UPoly::x_pow(3), UPoly::x_pow(4) - UPoly(Rational(1)));
  EXPECT_EQ(*v.value, expect);
  PointValue p = inv.eval(pt_ascending);
  EXPECT_TRUE(p.is_pole());
  EXPECT_EQ(p.pole_order, 1);
  FactoredFraction one = FactoredFraction::ratio(f12().poly(), f12());
  EXPECT_EQ(*one.eval(pt_ascending).value, RatFunc(1));
}

TEST(EvalAtPoint, Multiplicative) {
  std::mt19937 rng(9);
  for (int k = 0; k < 80; ++k) {
    FactoredFraction a = FactoredFraction(random_poly(rng, 3)).divided_by(random_binomial(rng));
    FactoredFraction b = FactoredFraction(random_poly(rng, 3)).divided_by(random_binomial(rng));
    PointValue va = a.eval(pt_descending), vb = b.eval(pt_descending), vab = (a * b).eval(pt_descending);
    if (va.is_pole() || vb.is_pole()) continue;
    ASSERT_FALSE(vab.is_pole());
    EXPECT_EQ(*vab.value, *va.value * *vb.value);
  }
}

TEST(RatFunc, Arithmetic) {
  RatFunc x = RatFunc::monomial(1);
  RatFunc a = (x + RatFunc(1)) / (x - RatFunc(1));
  EXPECT_EQ(a * a.inverse(), RatFunc(1));
  EXPECT_EQ(RatFunc::monomial(-2) * RatFunc::monomial(2), RatFunc(1));
  EXPECT_EQ((x * x - RatFunc(1)) / (x - RatFunc(1)), x + RatFunc(1));
  EXPECT_EQ(RatFunc::monomial(-1, 2).to_string("t"), "2 * t^-1");
}
