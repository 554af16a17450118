#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "daha/rea.hpp"

using namespace daha;

namespace {

RatFunc q(int k) { return RatFunc::monomial(k); }

// all words of length len on G letters
std::vector<Word> all_words(int G, int len) {
  std::vector<Word> out{Word{}};
  for (int k = 0; k < len; ++k) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (int g = 0; g < G; ++g) {
        Word x = w;
        x.push_back(g);
        next.push_back(x);
      }
    out = next;
  }
  return out;
}

// span of x rel y over all words x, y with total length deg, in the full degree-deg component
struct Slice {
  std::map<Word, size_t> idx;
  RowSpace span{1};
  Vec dense(const FreeElt& e) const {
    Vec v(idx.size());
    for (const auto& [w, c] : e) v[idx.at(w)] = c;
    return v;
  }
};

Slice full_slice(int N, const std::vector<FreeElt>& rels, int deg) {
  Slice s;
  int G = N * N;
  for (const auto& w : all_words(G, deg)) s.idx.emplace(w, s.idx.size());
  s.span = RowSpace(s.idx.size());
  for (const auto& rel : rels)
    for (int lx = 0; lx <= deg - 2; ++lx)
      for (const auto& x : all_words(G, lx))
        for (const auto& y : all_words(G, deg - 2 - lx))
          s.span.insert(s.dense(fa_mul(fa_mul(FreeElt{{x, RatFunc(1)}}, rel), FreeElt{{y, RatFunc(1)}})));
  return s;
}

}  // namespace

TEST(RMatrix, HeckeAndYbeSelectedConvention) {
  for (int N = 2; N <= 3; ++N) {
    HeckeReport h = hecke_and_ybe_check(standard_r(N, RConvention::Lower));
    EXPECT_TRUE(h.hecke);
    EXPECT_TRUE(h.ybe);
    EXPECT_TRUE(h.invertible);
  }
}

TEST(RMatrix, ExplicitRankTwoEntries) {
  RMatrixData d = standard_r(2, RConvention::Lower);
  // basis order v1v1, v1v2, v2v1, v2v2
  EXPECT_EQ(d.R[0][0], q(1));
  EXPECT_EQ(d.R[1][1], RatFunc(1));
  EXPECT_EQ(d.R[2][2], RatFunc(1));
  EXPECT_EQ(d.R[3][3], q(1));
  EXPECT_EQ(d.R[2][1], q(1) - q(-1));
  EXPECT_TRUE(d.R[1][2].is_zero());
}

TEST(RMatrix, BraidingEigenvalues) {
  // sigma - q and sigma + q^-1 have complementary ranks N(N+1)/2 and N(N-1)/2
  for (int N = 2; N <= 3; ++N) {
    RMatrixData d = standard_r(N, RConvention::Lower);
    Mat sigma = mat_mul(flip(N), d.action());
    Mat I = identity_mat(N * N);
    EXPECT_EQ(rank(mat_add(sigma, I, -q(1))), static_cast<size_t>(N * (N - 1) / 2));
    EXPECT_EQ(rank(mat_add(sigma, I, q(-1))), static_cast<size_t>(N * (N + 1) / 2));
  }
}

TEST(RMatrix, RescalingLeavesRelationsProportional) {
  EXPECT_TRUE(rescaling_invariant(2, RConvention::Lower));
  EXPECT_TRUE(rescaling_invariant(3, RConvention::Lower));
}

TEST(RMatrix, ZVector) {
  EXPECT_TRUE(z_vector_check(standard_r(2, RConvention::Lower)));
  EXPECT_TRUE(z_vector_check(standard_r(3, RConvention::Lower)));
}

TEST(Detq, RankTwoInstantiation) {
  FreeElt expect;
  fa_add(expect, Word{0, 3}, RatFunc(1));   // l^1_1 l^2_2
  fa_add(expect, Word{1, 2}, -q(2));        // l^1_2 l^2_1
  EXPECT_EQ(detq(2), expect);
  EXPECT_EQ(detq(3).size(), 6u);
}

TEST(Statistics, ExcedenceAndLengthBruteForce) {
  for (int N = 1; N <= 4; ++N) {
    std::vector<int> p(N);
    std::iota(p.begin(), p.end(), 1);
    size_t count = 0;
    do {
      int inv = 0, exc = 0;
      for (int i = 0; i < N; ++i) {
        exc += p[i] > i + 1;
        for (int j = i + 1; j < N; ++j) inv += p[i] > p[j];
      }
      AffinePerm s = AffinePerm::from_window(p);
      EXPECT_EQ(s.length(), inv);
      EXPECT_EQ(excedence(s), exc);
      ++count;
    } while (std::next_permutation(p.begin(), p.end()));
    EXPECT_EQ(count, symmetric_group(N).size());
  }
}

TEST(Relations, HomogeneousForAdjointWeight) {
  for (int N = 2; N <= 3; ++N)
    for (const auto& rel : rea_relations(standard_r(N, RConvention::Lower))) {
      auto wt = word_weight(rel.begin()->first, N);
      for (const auto& [w, c] : rel) {
        EXPECT_EQ(w.size(), 2u);
        EXPECT_EQ(word_weight(w, N), wt);
      }
    }
}

TEST(Relations, SliceStableUnderGenerators) {
  int N = 2, G = 4;
  auto rels = rea_relations(standard_r(N, RConvention::Lower));
  Slice s2 = full_slice(N, rels, 2), s3 = full_slice(N, rels, 3);
  EXPECT_EQ(s2.span.dim(), 6u);  // 16 - dim of the degree-2 quotient (10)
  for (const auto& rel : rels)
    for (int g = 0; g < G; ++g) {
      FreeElt x{{Word{g}, RatFunc(1)}};
      EXPECT_TRUE(s3.span.contains(s3.dense(fa_mul(x, rel))));
      EXPECT_TRUE(s3.span.contains(s3.dense(fa_mul(rel, x))));
    }
  // a single square is not a relation consequence
  EXPECT_FALSE(s2.span.contains(s2.dense(FreeElt{{Word{0, 0}, RatFunc(1)}})));
}

TEST(Centrality, RankTwoAgainstFullSlice) {
  RMatrixData d = standard_r(2, RConvention::Lower);
  auto rels = rea_relations(d);
  Slice s3 = full_slice(2, rels, 3);
  FreeElt det = detq(2);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      CentralityResult c = centrality_one(d, rels, i, j);
      EXPECT_TRUE(c.central) << c.certificate;
      FreeElt l = fa_gen(2, i, j);
      EXPECT_TRUE(s3.span.contains(s3.dense(fa_sub(fa_mul(det, l), fa_mul(l, det)))));
    }
}

TEST(Centrality, RankTwoReport) {
  ReaReport r = rea_check(2);
  ASSERT_TRUE(r.selected.has_value());
  EXPECT_EQ(*r.selected, RConvention::Lower);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.centrality.size(), 4u);
}
