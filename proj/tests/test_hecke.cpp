#include <gtest/gtest.h>

#include <random>

#include "daha/daha.hpp"
#include "daha/hecke.hpp"

using namespace daha;

namespace {

RatFunc T_(int k) { return RatFunc::monomial(k); }
FinHeckeElt one(int n) { return FinHeckeElt::scalar(n, RatFunc(1)); }
FinHeckeElt Ti(int n, int i) { return FinHeckeElt::T(n, AffinePerm::s(n, i)); }

// Polynomial module K[Y] (x) chi with T_i acting by chi = t or -t^{-1}, written directly from
// T_i Y_i = Y_{i+1} T_i^{-1} and T_i Y_j = Y_j T_i: T_i (f (x) 1) = chi (s_i f) + (t - t^-1) Y_{i+1} (f - s_i f)/(Y_{i+1} - Y_i).
struct PolyModule {
  ParamsPtr P;
  LaurentPoly chi;

  LaurentPoly swap(const LaurentPoly& f, int i) const {
    return f.map_monomials([&](const Exps& e) {
      Exps r = e;
      std::swap(r[P->yvar(i)], r[P->yvar(i + 1)]);
      return std::make_pair(Rational(1), r);
    });
  }
  LaurentPoly T(int i, const LaurentPoly& f) const {
    LaurentPoly sf = swap(f, i), d = f - sf;
    LaurentPoly out = chi * sf;
    if (!d.is_zero()) {
      auto q = binomial_divide(d, Binomial(1, P->y_ext(i + 1), -1, P->y_ext(i)));
      if (!q) throw std::logic_error("not divisible");
      out += P->tdiff() * P->Y(i + 1) * *q;
    }
    return out;
  }
  LaurentPoly Tinv(int i, const LaurentPoly& f) const { return T(i, f) - P->tdiff() * f; }
  // act by the normal form sum T_w c_w on 1 (x) 1
  LaurentPoly act(const DahaElement& a) const {
    LaurentPoly out;
    for (const auto& [w, c] : a.terms()) {
      LaurentPoly f = c;
      std::vector<int> l = w.reduced_word().letters;
      for (auto it = l.rbegin(); it != l.rend(); ++it) f = T(*it, f);
      out += f;
    }
    return out;
  }
};

}  // namespace

TEST(FinHecke, Quadratic) {
  FinHeckeElt sq = Ti(2, 1) * Ti(2, 1);
  FinHeckeElt expect = one(2) + Ti(2, 1).scaled(T_(1) - T_(-1));
  EXPECT_EQ(sq, expect);
  EXPECT_EQ(one(3) * Ti(3, 2), Ti(3, 2));
}

TEST(FinHecke, BraidAndCommutation) {
  EXPECT_EQ(Ti(3, 1) * Ti(3, 2) * Ti(3, 1), Ti(3, 2) * Ti(3, 1) * Ti(3, 2));
  EXPECT_EQ(Ti(4, 1) * Ti(4, 3), Ti(4, 3) * Ti(4, 1));
  for (int n = 2; n <= 4; ++n)
    for (int i = 1; i < n; ++i) {
      FinHeckeElt q = (Ti(n, i) - one(n).scaled(T_(1))) * (Ti(n, i) + one(n).scaled(T_(-1)));
      EXPECT_TRUE(q.is_zero());
    }
}

TEST(Idempotent, SignAtTwo) {
  FinHeckeElt e = idempotent(2, IdempotentKind::Sign);
  RatFunc k = (RatFunc(1) + T_(-2)).inverse();
  FinHeckeElt expect = (one(2) - Ti(2, 1).scaled(T_(-1))).scaled(k);
  EXPECT_EQ(e, expect);
}

TEST(Idempotent, Properties) {
  for (int n = 2; n <= 3; ++n) {
    FinHeckeElt em = idempotent(n, IdempotentKind::Sign), ep = idempotent(n, IdempotentKind::Triv);
    EXPECT_EQ(em * em, em);
    EXPECT_EQ(ep * ep, ep);
    EXPECT_TRUE((ep * em).is_zero());
    EXPECT_TRUE((em * ep).is_zero());
    for (int i = 1; i < n; ++i) {
      EXPECT_EQ(Ti(n, i) * em, em.scaled(-T_(-1)));
      EXPECT_EQ(em * Ti(n, i), em.scaled(-T_(-1)));
      EXPECT_EQ(Ti(n, i) * ep, ep.scaled(T_(1)));
    }
  }
}

TEST(AhaMul, Examples) {
  auto P = DahaParams::make(2, Regime::Generic);
  EXPECT_EQ(parse_word(P, "T1 Y1 T1"), gen_Y(P, 2));
  DahaElement lhs = aha_mul(gen_Y(P, 2), gen_T(P, 1));
  DahaElement rhs = gen_T(P, 1) * gen_Y(P, 1) + gen_scalar(P, P->tdiff()) * gen_Y(P, 2);
  EXPECT_EQ(lhs, rhs);
  auto P3 = DahaParams::make(3, Regime::Generic);
  EXPECT_EQ(aha_mul(gen_T(P3, 1), gen_Y(P3, 3)), aha_mul(gen_Y(P3, 3), gen_T(P3, 1)));
  EXPECT_THROW(aha_mul(gen_T(P3, 0), gen_T(P3, 1)), std::invalid_argument);
}

TEST(AhaMul, RelationSuite) {
  for (int n = 2; n <= 4; ++n) {
    auto P = DahaParams::make(n, Regime::Generic);
    for (const auto& c : hecke_relation_suite(P)) EXPECT_TRUE(c.pass) << n << ": " << c.name << " " << c.detail;
  }
}

TEST(AhaMul, CenterAtTwo) {
  auto P = DahaParams::make(2, Regime::Generic);
  DahaElement e1 = gen_Y(P, 1) + gen_Y(P, 2), e2 = gen_Y(P, 1) * gen_Y(P, 2);
  for (const auto& z : {e1, e2}) EXPECT_EQ(aha_mul(z, gen_T(P, 1)), aha_mul(gen_T(P, 1), z));
}

TEST(AhaMul, AgreesWithPolynomialModules) {
  std::mt19937 rng(21);
  for (int n = 2; n <= 3; ++n) {
    auto P = DahaParams::make(n, Regime::Generic);
    std::uniform_int_distribution<int> kind(0, 2), idx(1, n - 1), yi(1, n), pw(-1, 1);
    for (LaurentPoly chi : {P->t(), -P->tinv()}) {
      PolyModule M{P, chi};
      for (int trial = 0; trial < 40; ++trial) {
        // apply a random word letter by letter from the right and compare with its normal form
        DahaElement a = gen_one(P);
        std::vector<std::pair<int, int>> word;
        for (int k = 0; k < 6; ++k) {
          int kd = kind(rng);
          word.emplace_back(kd, kd == 2 ? yi(rng) : idx(rng));
        }
        LaurentPoly direct = 1;
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
          auto [kd, i] = *it;
          if (kd == 0) direct = M.T(i, direct);
          if (kd == 1) direct = M.Tinv(i, direct);
          if (kd == 2) direct = P->Y(i) * direct;
        }
        for (auto [kd, i] : word) a = kd == 0 ? a.mul_T(i) : kd == 1 ? a.mul_Tinv(i) : a * gen_Y(P, i);
        EXPECT_EQ(M.act(a), direct);
      }
    }
  }
}

TEST(AhaMul, Associative) {
  std::mt19937 rng(8);
  for (int n = 2; n <= 3; ++n) {
    auto P = DahaParams::make(n, Regime::Generic);
    auto perms = symmetric_group(n);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(perms.size()) - 1), b(-2, 2), c(-2, 2);
    auto rnd = [&]() {
      DahaElement x(P);
      for (int k = 0; k < 2; ++k) {
        std::vector<int> beta(n);
        for (auto& v : beta) v = b(rng);
        x += gen_Tw(P, perms[pick(rng)]) * gen_Ymono(P, beta) * gen_scalar(P, Rational(c(rng)));
      }
      return x;
    };
    for (int k = 0; k < 15; ++k) {
      DahaElement x = rnd(), y = rnd(), z = rnd();
      EXPECT_EQ(aha_mul(aha_mul(x, y), z), aha_mul(x, aha_mul(y, z)));
    }
  }
}
