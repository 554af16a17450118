#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "daha/qtorus.hpp"

using namespace daha;

namespace {

QtParams gl(int N, int qz = -2) {
  QtParams p;
  p.N = N;
  p.qz = qz;
  return p;
}

QtParams sl(int N) { return QtParams::from(DahaParams::make(N, Regime::SL, N)); }

RatFunc z(int k) { return RatFunc::monomial(k); }

// number of standard Young tableaux by the branching rule
long long syt(std::vector<int> lam) {
  while (!lam.empty() && lam.back() == 0) lam.pop_back();
  if (lam.empty()) return 1;
  long long s = 0;
  for (size_t r = 0; r < lam.size(); ++r)
    if (r + 1 == lam.size() || lam[r + 1] < lam[r]) {
      auto mu = lam;
      --mu[r];
      s += syt(mu);
    }
  return s;
}

QTorusElt random_mono(const QtParams& p, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-2, 2);
  std::vector<int> a(p.N), b(p.N);
  for (int i = 0; i < p.N; ++i) {
    a[i] = d(rng);
    b[i] = d(rng);
  }
  auto G = symmetric_group(p.N);
  return QTorusElt::mono(p, a, b, G[rng() % G.size()], RatFunc(d(rng) == 0 ? 2 : 1));
}

}  // namespace

TEST(QTorus, TwistAndCommutation) {
  QtParams p = gl(2);
  auto X = [&](int j) { return QTorusElt::X(p, j); };
  auto Y = [&](int j) { return QTorusElt::Y(p, j); };
  EXPECT_EQ(Y(1) * X(1), QTorusElt::scalar(p, z(-2)) * X(1) * Y(1));
  EXPECT_EQ(Y(1) * X(2), X(2) * Y(1));
  EXPECT_EQ(X(1) * X(2), X(2) * X(1));
  EXPECT_EQ(QTorusElt::Y(p, 1, -1) * Y(1), QTorusElt::one(p));
}

TEST(QTorus, PermutationConjugation) {
  QtParams p = gl(3);
  for (const auto& s : symmetric_group(3)) {
    EXPECT_EQ(QTorusElt::S(p, s) * QTorusElt::S(p, s.inverse()), QTorusElt::one(p));
    for (int j = 1; j <= 3; ++j) {
      EXPECT_EQ(QTorusElt::S(p, s) * QTorusElt::X(p, j) * QTorusElt::S(p, s.inverse()), QTorusElt::X(p, s(j)));
      EXPECT_EQ(QTorusElt::S(p, s) * QTorusElt::Y(p, j) * QTorusElt::S(p, s.inverse()), QTorusElt::Y(p, s(j)));
    }
  }
}

TEST(QTorus, RelationSuites) {
  for (int N = 2; N <= 3; ++N) {
    for (const auto& c : qt_relation_suite(gl(N))) EXPECT_TRUE(c.pass) << c.name << " " << c.detail;
    for (const auto& c : qt_relation_suite(sl(N))) EXPECT_TRUE(c.pass) << c.name << " " << c.detail;
  }
}

TEST(QTorus, SlProducts) {
  QtParams p = sl(2);
  EXPECT_EQ(QTorusElt::X(p, 1) * QTorusElt::X(p, 2), QTorusElt::one(p));
  EXPECT_EQ(QTorusElt::Y(p, 1) * QTorusElt::Y(p, 2), QTorusElt::scalar(p, z(p.zeta_e)));
}

TEST(QTorus, AssociativityProperty) {
  std::mt19937 rng(2024);
  for (const QtParams& p : {gl(3), sl(3)})
    for (int trial = 0; trial < 40; ++trial) {
      QTorusElt a = random_mono(p, rng), b = random_mono(p, rng), c = random_mono(p, rng);
      EXPECT_EQ((a * b) * c, a * (b * c));
    }
}

TEST(QtInd, WeightSpaceDimensions) {
  for (int N = 2; N <= 3; ++N) {
    QtParams p = gl(N);
    std::vector<Mono> ones(N, Mono{1, 0});
    QTIndModule M(p, ones);
    long long fact = 1;
    for (int k = 2; k <= N; ++k) fact *= k;
    EXPECT_EQ(static_cast<long long>(M.weight_space(ones).size()), fact);
    std::vector<Mono> off = ones;
    off[0] = Mono{2, 0};
    EXPECT_TRUE(M.weight_space(off).empty());
    off[0] = Mono{1, 1};
    EXPECT_TRUE(M.weight_space(off).empty());
  }
}

TEST(QtInd, YActsDiagonally) {
  QtParams p = gl(3);
  std::vector<Mono> b{{1, 0}, {2, 0}, {1, -2}};
  QTIndModule M(p, b);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    QTorusElt h = random_mono(p, rng);
    auto v = M.act(h, M.unit());
    ASSERT_EQ(v.size(), 1u);
    const QtIndKey& k = v.begin()->first;
    auto w = M.weight_of(k);
    for (int j = 1; j <= 3; ++j) {
      auto y = M.act(QTorusElt::Y(p, j), v);
      ASSERT_EQ(y.size(), 1u);
      EXPECT_EQ(y.begin()->second, v.begin()->second * RatFunc::monomial(w[j - 1].e, w[j - 1].c));
    }
  }
}

TEST(QtInd, ModuleAxiom) {
  std::mt19937 rng(11);
  QtParams p = sl(3);
  std::vector<Mono> b{{1, p.zeta_e / 3}, {1, p.zeta_e / 3}, {1, p.zeta_e / 3}};
  QTIndModule M(p, b);
  for (int trial = 0; trial < 20; ++trial) {
    QTorusElt g = random_mono(p, rng), h = random_mono(p, rng);
    EXPECT_EQ(M.act(g * h, M.unit()), M.act(g, M.act(h, M.unit())));
  }
}

TEST(QtInd, PermutedWeightGivesIsomorphicWeightSpaces) {
  QtParams p = gl(2);
  std::vector<Mono> b{{1, 0}, {3, 0}};
  QTIndModule M(p, b), Mw(p, {b[1], b[0]});
  for (const auto& target : {b, std::vector<Mono>{b[1], b[0]}, std::vector<Mono>{{1, -2}, {3, 2}}}) {
    EXPECT_EQ(M.weight_space(target).size(), 1u);
    EXPECT_EQ(Mw.weight_space(target).size(), 1u);
  }
}

TEST(QtEndRing, GroupAlgebraAtOnes) {
  for (int N = 2; N <= 3; ++N) {
    for (const QtParams& p : {gl(N), sl(N)}) {
      std::vector<Mono> ones(N, Mono{1, p.sl ? p.zeta_e / N : 0});
      QTIndModule M(p, ones);
      QtEnd e = qt_end_ring(M, ones);
      EXPECT_TRUE(e.parabolic);
      EXPECT_EQ(e.J.size(), static_cast<size_t>(N - 1));
      Identification id = identify(e.table, e.group_name);
      EXPECT_EQ(id.type, RingType::GROUP_ALGEBRA);
      EXPECT_TRUE(id.semisimple);
    }
  }
}

TEST(QtEndRing, ParabolicAtMixedWeight) {
  QtParams p = gl(3);
  std::vector<Mono> b{{2, -2}, {1, 0}, {1, 0}};
  QTIndModule M(p, b);
  QtEnd e = qt_end_ring(M, b);
  EXPECT_EQ(e.keys.size(), 2u);
  EXPECT_EQ(e.J, std::vector<int>{2});
  EXPECT_EQ(identify(e.table, e.group_name).type, RingType::GROUP_ALGEBRA);
}

TEST(Seminormal, CoxeterAndIrreducible) {
  for (int N = 1; N <= 4; ++N)
    for (const auto& lam : partitions(N)) {
      SeminormalRep R = seminormal(lam);
      EXPECT_EQ(static_cast<long long>(R.dim()), syt(lam));
      for (const auto& c : coxeter_check(R)) EXPECT_TRUE(c.pass) << c.name;
      EXPECT_EQ(commutant_dim(R), 1u);
    }
}

TEST(Seminormal, TrivialAndSignCharacters) {
  for (int N = 2; N <= 4; ++N) {
    SeminormalRep triv = seminormal({N});
    SeminormalRep sgn = seminormal(std::vector<int>(N, 1));
    for (const auto& s : symmetric_group(N)) {
      EXPECT_EQ(rep_matrix(triv, s)[0][0], RatFunc(1));
      EXPECT_EQ(rep_matrix(sgn, s)[0][0], RatFunc(s.length() % 2 ? -1 : 1));
    }
  }
}

TEST(Springer, MultiplicitiesMatchHookOracle) {
  for (int N = 2; N <= 3; ++N) {
    SpringerDecomposition sd = springer_decomposition_check(N);
    for (const auto& c : sd.report.checks) EXPECT_TRUE(c.pass) << c.name << " " << c.detail;
    EXPECT_EQ(sd.multiplicities.size(), partitions(N).size());
    for (const auto& [lam, m] : sd.multiplicities) EXPECT_EQ(m, syt(lam));
  }
}
