#include <gtest/gtest.h>

#include <random>
#include <set>

#include "daha/endo.hpp"
#include "daha/morita.hpp"

using namespace daha;

namespace {

ParamsPtr gl(int n) { return DahaParams::make(n, Regime::GL); }

// conjugates the stabilizer of a onto some parabolic subgroup of S_n
bool conjugates_to_parabolic(const ParamsPtr& P, const std::vector<AffinePerm>& stab, const AffinePerm& g) {
  int n = P->n();
  std::set<AffinePerm> conj;
  for (const auto& x : stab) {
    AffinePerm y = P->normalize_perm(g * x * g.inverse());
    if (!y.is_finite()) return false;
    conj.insert(y);
  }
  std::vector<int> J;
  for (int i = 1; i < n; ++i)
    if (conj.count(AffinePerm::s(n, i))) J.push_back(i);
  auto wj = parabolic_subgroup(n, J);
  return std::set<AffinePerm>(wj.begin(), wj.end()) == conj;
}

}  // namespace

TEST(Nopoles, AllPermutationsRankTwoAndThree) {
  for (int n = 2; n <= 3; ++n) {
    auto P = gl(n);
    for (const auto& w : symmetric_group(n)) {
      NopolesReport r = nopoles_check(P, w);
      EXPECT_TRUE(r.pass()) << "n=" << n << " w=" << w.to_string();
      EXPECT_EQ(r.checks.size(), 3u);
    }
  }
}

TEST(Nopoles, ConjugatedSimpleReflectionLength) {
  for (int n = 2; n <= 3; ++n) {
    auto P = gl(n);
    for (int i = 1; i < n; ++i) {
      NopolesReport r = nopoles_check(P, AffinePerm::s(n, i));
      EXPECT_EQ(r.u.length(), 2 * n - 1);
    }
  }
  EXPECT_THROW(nopoles_check(gl(2), AffinePerm::pi(2, 1)), std::invalid_argument);
}

TEST(Nu, ProductIdentityThroughGamma) {
  auto check = [](int n, const AffinePerm& w, const AffinePerm& u) {
    auto P = gl(n);
    AffinePerm g = AffinePerm::gamma(n);
    auto conj = [&](const AffinePerm& x) { return P->normalize_perm(g.inverse() * x * g); };
    EXPECT_EQ(nu_word(P, conj(w)) * nu_word(P, conj(u)), nu_word(P, conj(w * u))) << w.to_string() << " " << u.to_string();
  };
  for (const auto& w : symmetric_group(2))
    for (const auto& u : symmetric_group(2)) check(2, w, u);
  // each rank-three product costs seconds in the localized algebra
  check(3, AffinePerm::s(3, 1), AffinePerm::s(3, 1));
  check(3, AffinePerm::s(3, 1), AffinePerm::s(3, 2));
}

TEST(EndRing, QrhoAntiHomomorphismDirect) {
  for (int n = 2; n <= 3; ++n) {
    auto P = gl(n);
    WeightPoint a = WeightPoint::qrho(P);
    IndYModule M(a);
    AffinePerm g = AffinePerm::gamma(n);
    std::map<AffinePerm, IndYModule::Vector> phi;
    for (const auto& w : symmetric_group(n)) phi[w] = build_endo(M, P->normalize_perm(g.inverse() * w * g)).m;
    // compose(m_w, m_u) is (Phi_w o Phi_u)(1 (x) v)
    for (const auto& [w, mw] : phi)
      for (const auto& [u, mu] : phi) EXPECT_EQ(compose(M, mw, mu), phi.at(u * w)) << w.to_string() << " " << u.to_string();
  }
}

TEST(EndRing, QrhoIdentifiedAsOppositeGroupAlgebra) {
  auto P = gl(2);
  LabeledEnd L = labeled_end_ring(WeightPoint::qrho(P), AffinePerm::gamma(2));
  EXPECT_TRUE(L.spans_weight_space);
  EXPECT_TRUE(L.distinct_leading_terms);
  EXPECT_TRUE(L.end.table.associative());
  Identification id = identify(L.end.table, "S_2");
  EXPECT_EQ(id.type, RingType::GROUP_ALGEBRA);
  EXPECT_EQ(id.description, "K[S_2]^op");
  EXPECT_TRUE(id.semisimple);
  // Phi_{s_1}^2 = id
  size_t s = L.end.table.group[0].is_identity() ? 1 : 0;
  EXPECT_EQ(L.end.table.mul(L.end.table.basis_vec(s), L.end.table.basis_vec(s)), L.end.table.basis_vec(1 - s));
}

TEST(EndRing, IdentityEndomorphism) {
  auto P = gl(3);
  WeightPoint a = WeightPoint::qrho(P);
  IndYModule M(a);
  Endo e = build_endo(M, AffinePerm::identity(3));
  EXPECT_EQ(e.m, M.unit());
  std::mt19937 rng(7);
  for (int trial = 0; trial < 4; ++trial) {
    AffinePerm w = symmetric_group(3)[rng() % 6];
    Endo f = build_endo(M, P->normalize_perm(AffinePerm::gamma(3).inverse() * w * AffinePerm::gamma(3)));
    EXPECT_EQ(compose(M, e.m, f.m), f.m);
    EXPECT_EQ(compose(M, f.m, e.m), f.m);
  }
}

TEST(EndRing, NonDescendingRankTwoIsTrivial) {
  EndoTable E = end_ring(WeightPoint::parse(gl(2), "t^-2,t^0"));
  EXPECT_EQ(E.basis.size(), 1u);
  Identification id = identify(E.table);
  EXPECT_EQ(id.type, RingType::GROUP_ALGEBRA);
  EXPECT_EQ(id.description, "K");
}

TEST(EndRing, NilpotentExample) {
  auto P = gl(3);
  WeightPoint a = WeightPoint::parse(P, "t^0,t^0,t^-2");
  EndoTable E = end_ring(a);
  EXPECT_EQ(E.basis.size(), 2u);
  Identification id = identify(E.table);
  EXPECT_EQ(id.type, RingType::NILPOTENT_WITNESS);
  EXPECT_EQ(id.nilpotency_index, 2);
  EXPECT_FALSE(id.semisimple);

  GammaResult G = gamma_search(a);
  IndYModule M(a);
  AffinePerm u = G.gamma.inverse() * AffinePerm::s(3, 2) * G.gamma;
  EXPECT_THROW(build_endo(M, u), PoleAtWeight);
  Endo En = build_endo(M, u, {{-1, 1}});
  EXPECT_FALSE(En.m.empty());
  EXPECT_TRUE(compose(M, En.m, En.m).empty());
}

TEST(Gamma, MinimalLengthAgainstExhaustiveSearch) {
  std::vector<std::pair<int, std::string>> cases = {
      {2, "t^0,t^-2"}, {3, "t^0,t^-2,t^-4"}, {3, "t^0,t^0,t^-2"}, {3, "t^0,t^-2,2*t^0"}, {2, "t^0,3*t^0"}};
  for (const auto& [n, s] : cases) {
    auto P = gl(n);
    WeightPoint a = WeightPoint::parse(P, s);
    GammaResult G = gamma_search(a);
    auto stab = stabilizer(a);
    EXPECT_TRUE(conjugates_to_parabolic(P, stab, G.gamma)) << s;
    int len = G.gamma.length();
    for (const auto& x : elements_up_to_length(n, len - 1))
      for (int k = 0; k < n; ++k) {
        AffinePerm g = AffinePerm::pi(n, k) * x;
        if (g.length() < len) {
          EXPECT_FALSE(conjugates_to_parabolic(P, stab, g)) << s << " " << g.to_string();
        }
      }
  }
  EXPECT_EQ(gamma_search(WeightPoint::qrho(gl(3))).gamma.length(), AffinePerm::gamma(3).length());
}

TEST(Parabolic, SubgroupsAndNames) {
  EXPECT_EQ(parabolic_subgroup(3, {}).size(), 1u);
  EXPECT_EQ(parabolic_subgroup(3, {1}).size(), 2u);
  EXPECT_EQ(parabolic_subgroup(3, {1, 2}).size(), 6u);
  EXPECT_EQ(parabolic_subgroup(4, {1, 3}).size(), 4u);
  EXPECT_EQ(parabolic_name(3, {1}), "S_2xS_1");
  EXPECT_EQ(parabolic_name(3, {2}), "S_1xS_2");
  EXPECT_EQ(parabolic_name(4, {}), "S_1xS_1xS_1xS_1");
}

TEST(HookDim, AgainstStandardTableauxCount) {
  // count standard Young tableaux by removing corners
  std::function<long long(std::vector<int>)> syt = [&](std::vector<int> lam) -> long long {
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
  };
  for (int n = 1; n <= 6; ++n) {
    long long sq = 0, fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    for (const auto& lam : partitions(n)) {
      EXPECT_EQ(hook_dim(lam), syt(lam));
      sq += hook_dim(lam) * hook_dim(lam);
    }
    EXPECT_EQ(sq, fact);
  }
}

TEST(Morita, BoundZeroNotFound) {
  MoritaResult r = morita_witness_search(2, 0);
  EXPECT_FALSE(r.found);
  EXPECT_EQ(r.candidates, 1u);
}

TEST(Morita, BoundTwoWitnessVerified) {
  MoritaResult r = morita_witness_search(2, 2);
  ASSERT_TRUE(r.found);
  EXPECT_TRUE(r.verified);
  EXPECT_FALSE(r.witness.empty());
}
