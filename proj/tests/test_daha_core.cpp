#include <gtest/gtest.h>

#include <random>

#include "daha/daha.hpp"

using namespace daha;

namespace {

std::vector<ParamsPtr> all_regimes(int n) {
  return {DahaParams::make(n, Regime::Generic), DahaParams::make(n, Regime::GL), DahaParams::make(n, Regime::SL)};
}

DahaElement random_element(std::mt19937& rng, const ParamsPtr& P, int terms, int len) {
  int n = P->n();
  std::uniform_int_distribution<int> gen(0, n - 1), pk(-1, 1), b(-1, 1), c(-2, 2);
  DahaElement x(P);
  for (int k = 0; k < terms; ++k) {
    AffinePerm w = AffinePerm::pi(n, pk(rng));
    for (int m = 0; m < len; ++m) w = w * AffinePerm::s(n, gen(rng));
    std::vector<int> beta(n);
    for (auto& v : beta) v = b(rng);
    x += gen_Tw(P, w) * gen_Ymono(P, beta) * gen_scalar(P, Rational(c(rng)));
  }
  return x;
}

}  // namespace

TEST(DahaRelations, AllRegimes) {
  for (int n = 2; n <= 3; ++n)
    for (const auto& P : all_regimes(n))
      for (const auto& c : daha_relation_suite(P)) EXPECT_TRUE(c.pass) << P->describe() << ": " << c.name << " " << c.detail;
}

TEST(DahaRelations, GLAtNonDivisibleN) {
  // n = 2, N = 3: q = t^{-4/3} through the base variable u, t = u^3
  auto P = DahaParams::make(2, Regime::GL, 3);
  EXPECT_EQ(P->t_degree(), 3);
  for (const auto& c : daha_relation_suite(P)) EXPECT_TRUE(c.pass) << c.name << " " << c.detail;
}

TEST(DahaMul, Examples) {
  auto P = DahaParams::make(2, Regime::GL);
  DahaElement qinvY1 = gen_scalar(P, LaurentPoly::monomial(-P->q_exps())) * gen_Y(P, 1);
  EXPECT_EQ(gen_pi(P) * gen_Y(P, 2) * gen_pi(P, -1), qinvY1);
  EXPECT_EQ(parse_word(P, "T0 Y2 T0"), qinvY1);
  for (int n = 2; n <= 3; ++n) {
    auto S = DahaParams::make(n, Regime::SL);
    EXPECT_EQ(gen_pi(S, n), gen_one(S));
    EXPECT_EQ(parse_word(S, "pi^" + std::to_string(n)), gen_one(S));
  }
}

TEST(DahaMul, RegimeMismatchRejected) {
  auto A = DahaParams::make(2, Regime::GL), B = DahaParams::make(2, Regime::SL);
  EXPECT_THROW(gen_T(A, 1) * gen_T(B, 1), std::invalid_argument);
}

TEST(DahaMul, Associative) {
  std::mt19937 rng(31);
  for (const auto& P : all_regimes(2))
    for (int k = 0; k < 12; ++k) {
      DahaElement a = random_element(rng, P, 2, 3), b = random_element(rng, P, 2, 3), c = random_element(rng, P, 2, 3);
      EXPECT_EQ((a * b) * c, a * (b * c)) << P->describe();
    }
}

TEST(DahaMul, WordIndependent) {
  // T_w built from two different reduced words agree
  auto P = DahaParams::make(3, Regime::Generic);
  EXPECT_EQ(parse_word(P, "T1 T2 T1"), parse_word(P, "T2 T1 T2"));
  EXPECT_EQ(parse_word(P, "T0 T1 T0"), parse_word(P, "T1 T0 T1"));
  EXPECT_EQ(parse_word(P, "pi T1 pi^-1"), gen_T(P, 2));
}

TEST(XGenerators, Examples) {
  auto P = DahaParams::make(2, Regime::GL);
  EXPECT_EQ(x_generator(P, 1), gen_pi(P) * gen_Tinv(P, 1));
  DahaElement x12 = x_generator(P, 1) * x_generator(P, 2);
  EXPECT_EQ(x12, gen_pi(P, 2));
  EXPECT_EQ(AffinePerm::translation({1, 1}), AffinePerm::pi(2, 2));
  EXPECT_EQ(x_generator(P, 1) * x_generator(P, 1, -1), gen_one(P));
  EXPECT_EQ(x_generator(P, 1) * x_generator(P, 2), x_generator(P, 2) * x_generator(P, 1));
  auto P3 = DahaParams::make(3, Regime::Generic);
  for (int i = 1; i <= 3; ++i) {
    EXPECT_EQ(x_generator(P3, i) * x_generator(P3, i, -1), gen_one(P3));
    for (int j = i + 1; j <= 3; ++j)
      EXPECT_EQ(x_generator(P3, i) * x_generator(P3, j), x_generator(P3, j) * x_generator(P3, i));
  }
  // T_i X_i T_i = X_{i+1} in the X presentation
  EXPECT_EQ(gen_T(P3, 2) * x_generator(P3, 2) * gen_T(P3, 2), x_generator(P3, 3));
}

TEST(DualNormalForm, Examples) {
  auto P = DahaParams::make(2, Regime::GL);
  DualForm d = dual_normal_form(gen_Ymono(P, {2, -1}));
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d.begin()->first, (DualKey{{0, 0}, {1, 2}, {2, -1}}));
  EXPECT_EQ(d.begin()->second, LaurentPoly(1));
  DualForm x = dual_normal_form(x_generator(P, 1));
  ASSERT_EQ(x.size(), 1u);
  EXPECT_EQ(x.begin()->first, (DualKey{{1, 0}, {1, 2}, {0, 0}}));
  EXPECT_THROW(dual_normal_form(gen_one(DahaParams::make(2, Regime::SL))), std::invalid_argument);
}

TEST(DualNormalForm, RoundTrip) {
  std::mt19937 rng(41);
  for (auto regime : {Regime::GL, Regime::Generic}) {
    auto P = DahaParams::make(2, regime);
    for (int k = 0; k < 12; ++k) {
      DahaElement a = random_element(rng, P, 2, 3);
      EXPECT_EQ(from_dual_form(P, dual_normal_form(a)), a);
    }
  }
}

TEST(TextForm, NfExample) {
  auto P = DahaParams::make(2, Regime::GL);
  EXPECT_EQ(format_element(parse_word(P, "T1 Y1 T1")), "Y^(0,1)");
  EXPECT_EQ(format_element(gen_one(P)), "1");
  EXPECT_THROW(parse_word(P, "T7"), std::invalid_argument);
  EXPECT_THROW(parse_word(P, "Q1"), std::invalid_argument);
  EXPECT_THROW(parse_word(P, "Z1"), std::invalid_argument);
}
