#include <gtest/gtest.h>

#include <algorithm>

#include "daha/intertwiner.hpp"

using namespace daha;

TEST(Phi, NormalOrderedDefinition) {
  auto P = DahaParams::make(2, Regime::Generic);
  LocDahaElement p = phi(P, 1);
  ASSERT_EQ(p.terms().size(), 2u);
  EXPECT_EQ(p.coeff(AffinePerm::s(2, 1)), FactoredFraction(P->Y(1) - P->Y(2)));
  EXPECT_EQ(p.coeff(AffinePerm::identity(2)), FactoredFraction(P->tdiff() * P->Y(2)));
}

TEST(Nu, SquareAndPi) {
  for (auto regime : {Regime::Generic, Regime::GL, Regime::SL}) {
    auto P = DahaParams::make(2, regime);
    LocDahaElement one(P, FactoredFraction(1));
    EXPECT_EQ(nu(P, 1) * nu(P, 1), one);
    EXPECT_EQ(nu_word(P, AffinePerm::pi(2)), localize(gen_pi(P)));
  }
}

TEST(Nu, PhiSquareReducesToOne) {
  auto P = DahaParams::make(2, Regime::Generic);
  LocDahaElement sq = phi(P, 1) * phi(P, 1);
  ASSERT_EQ(sq.terms().size(), 1u);
  FactoredFraction c = sq.coeff(AffinePerm::identity(2)).divided_by(P->f(1, 2)).divided_by(P->f(2, 1));
  EXPECT_EQ(c, FactoredFraction(1));
}

TEST(IntertwinerRelations, AllRegimes) {
  for (int n = 2; n <= 3; ++n)
    for (auto regime : {Regime::Generic, Regime::GL, Regime::SL}) {
      auto P = DahaParams::make(n, regime);
      for (const auto& c : intertwiner_relation_suite(P))
        EXPECT_TRUE(c.pass) << P->describe() << ": " << c.name << " " << c.detail;
    }
}

TEST(PhiVsNu, PaperExample) {
  auto P = DahaParams::make(3, Regime::Generic);
  AffinePerm w = AffinePerm::from_word(3, ReducedWord{0, {1, 2, 0, 1, 2, 0, 1, 2}});
  PhiNuResult r = phi_vs_nu_check(P, w);
  ASSERT_TRUE(r.alpha.has_value());
  EXPECT_EQ(*r.alpha, 5);
  EXPECT_EQ(r.alpha_from_subscripts, 5);
  EXPECT_TRUE(r.verified);
  auto nat = r.natural_pairs;
  std::sort(nat.begin(), nat.end());
  std::vector<std::pair<int, int>> expect{{-2, 9}, {-1, 9}, {-2, 6}, {-1, 6}, {1, 6}, {-1, 3}, {1, 3}, {2, 3}};
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(nat, expect);
}

TEST(PhiVsNu, SmallCases) {
  auto P = DahaParams::make(3, Regime::Generic);
  PhiNuResult id = phi_vs_nu_check(P, AffinePerm::identity(3));
  EXPECT_EQ(id.alpha, 0);
  EXPECT_TRUE(id.verified);
  PhiNuResult s1 = phi_vs_nu_check(P, AffinePerm::s(3, 1));
  EXPECT_EQ(s1.alpha, 0);
  EXPECT_TRUE(s1.verified);
  EXPECT_EQ(inversion_product(P, AffinePerm::s(3, 1)), P->f_poly(1, 2));
  for (const auto& w : elements_up_to_length(3, 4)) {
    PhiNuResult r = phi_vs_nu_check(P, w);
    EXPECT_TRUE(r.verified) << w.to_string();
    EXPECT_EQ(r.alpha, r.alpha_from_subscripts) << w.to_string();
  }
}

TEST(AbDecompose, NuIdentityAtSpecialization) {
  for (int n = 2; n <= 3; ++n) {
    auto P = DahaParams::make(n, Regime::GL);
    for (int i = 0; i < n; ++i) {
      NuParts ab = ab_decompose(P, i, i + 1);
      LocDahaElement one(P, FactoredFraction(1));
      EXPECT_EQ(one.mul_T(i).times_coeff(ab.a) + LocDahaElement(P, ab.b), nu(P, i));
    }
  }
  auto P = DahaParams::make(2, Regime::GL);
  EXPECT_EQ(ab_decompose(P, 1, 2).a, FactoredFraction::ratio(P->Y(1) - P->Y(2), P->f(1, 2)));
  EXPECT_EQ(ab_decompose(P, 1, 2).b, ab_decompose(P, 3, 4).b);
  EXPECT_EQ(ab_decompose(P, 1, 2).a, ab_decompose(P, 3, 4).a);
}

TEST(NuWord, ReducedWordIndependent) {
  auto P = DahaParams::make(3, Regime::GL);
  int checked = 0;
  for (const auto& w : elements_up_to_length(3, 6)) {
    auto words = reduced_words(w, 3);
    if (words.size() < 2) continue;
    LocDahaElement ref = nu_from_word(P, words[0]);
    for (size_t k = 1; k < words.size(); ++k) EXPECT_EQ(nu_from_word(P, words[k]), ref) << w.to_string();
    ++checked;
  }
  EXPECT_GT(checked, 10);
}
