// R-matrix identities, the reflection equation algebra and centrality of det_q in degree-bounded slices.
#ifndef DAHA_REA_HPP
#define DAHA_REA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "daha/affine_perm.hpp"
#include "daha/fraction.hpp"
#include "daha/linalg.hpp"
#include "daha/parallel.hpp"

namespace daha {

// coefficients are rational functions of the quantum parameter q (printed as "q")
enum class RConvention { Upper, Lower };
inline const char* convention_name(RConvention c) { return c == RConvention::Upper ? "upper" : "lower"; }

// entries live in Q(x) with q = x^qdeg, so q^{-1/N} = x^{-1} when qdeg = N
struct RMatrixData {
  int N = 2;
  RConvention conv = RConvention::Upper;
  int qdeg = 1;
  RatFunc scale = 1;  // overall factor applied to every entry
  Mat R;              // R[i*N+j][k*N+l] = R^{ij}_{kl}
  // operator on V (x) V: v_i (x) v_j -> sum R^{ij}_{kl} v_k (x) v_l, upper indices as inputs like l^i_j in L
  Mat action() const {
    size_t D = R.size();
    Mat t = zero_mat(D, D);
    for (size_t a = 0; a < D; ++a)
      for (size_t b = 0; b < D; ++b) t[b][a] = R[a][b];
    return t;
  }
};

inline RatFunc qpow(int k, int qdeg = 1) { return RatFunc::monomial(k * qdeg); }

// R^{ii}_{ii} = q, R^{ij}_{ij} = 1 (i != j), R^{ij}_{ji} = q - q^-1 for i < j (Upper) or i > j (Lower)
inline RMatrixData standard_r(int N, RConvention conv, int qdeg = 1, RatFunc scale = 1) {
  RMatrixData d{N, conv, qdeg, scale, zero_mat(N * N, N * N)};
  RatFunc qq = qpow(1, qdeg) - qpow(-1, qdeg);
  auto idx = [N](int a, int b) { return a * N + b; };
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      d.R[idx(i, j)][idx(i, j)] = (i == j ? qpow(1, qdeg) : RatFunc(1)) * scale;
      bool off = conv == RConvention::Upper ? i < j : i > j;
      if (off) d.R[idx(i, j)][idx(j, i)] = qq * scale;
    }
  return d;
}

inline Mat flip(int N) {
  Mat t = zero_mat(N * N, N * N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) t[b * N + a][a * N + b] = 1;
  return t;
}

inline Mat kron(const Mat& a, const Mat& b) {
  size_t ra = a.size(), rb = b.size();
  Mat out = zero_mat(ra * rb, ra * rb);
  for (size_t i = 0; i < ra; ++i)
    for (size_t j = 0; j < ra; ++j) {
      if (a[i][j].is_zero()) continue;
      for (size_t k = 0; k < rb; ++k)
        for (size_t l = 0; l < rb; ++l)
          if (!b[k][l].is_zero()) out[i * rb + k][j * rb + l] = a[i][j] * b[k][l];
    }
  return out;
}

inline Mat mat_add(Mat a, const Mat& b, const RatFunc& s = 1) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) a[i][j] += s * b[i][j];
  return a;
}

struct HeckeReport {
  RConvention conv;
  bool hecke = false, ybe = false, invertible = false;
  bool z_vector = false;  // filled in by rea_check
  bool pass() const { return hecke && ybe && invertible; }
};

// (sigma - q)(sigma + q^-1) = 0 for sigma = tau R, and R12 R13 R23 = R23 R13 R12
inline HeckeReport hecke_and_ybe_check(const RMatrixData& d) {
  int N = d.N;
  HeckeReport r{d.conv};
  Mat sigma = mat_mul(flip(N), d.action());
  Mat I = identity_mat(N * N);
  RatFunc s = d.scale;
  Mat a = mat_add(sigma, I, -qpow(1, d.qdeg) * s), b = mat_add(sigma, I, qpow(-1, d.qdeg) * s);
  Mat h = mat_mul(a, b);
  r.hecke = true;
  for (const auto& row : h) r.hecke = r.hecke && is_zero_vec(row);
  r.invertible = rank(d.R) == static_cast<size_t>(N * N);
  Mat IN = identity_mat(N), P = flip(N);
  Mat R12 = kron(d.R, IN), R23 = kron(IN, d.R);
  Mat P23 = kron(IN, P);
  Mat R13 = mat_mul(mat_mul(P23, R12), P23);
  r.ybe = mat_mul(mat_mul(R12, R13), R23) == mat_mul(mat_mul(R23, R13), R12);
  return r;
}

// ---------- free algebra on l^i_j ----------

using Word = std::vector<int>;  // generator index (i-1)*N + (j-1) for l^i_j
using FreeElt = std::map<Word, RatFunc>;

inline void fa_add(FreeElt& a, const Word& w, const RatFunc& c) {
  if (c.is_zero()) return;
  RatFunc& s = a[w];
  s += c;
  if (s.is_zero()) a.erase(w);
}
inline FreeElt fa_mul(const FreeElt& a, const FreeElt& b) {
  FreeElt out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      fa_add(out, w, ca * cb);
    }
  return out;
}
inline FreeElt fa_sub(FreeElt a, const FreeElt& b) {
  for (const auto& [w, c] : b) fa_add(a, w, -c);
  return a;
}
inline FreeElt fa_gen(int N, int i, int j) { return FreeElt{{Word{(i - 1) * N + (j - 1)}, RatFunc(1)}}; }

inline std::string fa_to_string(const FreeElt& a, int N) {
  if (a.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : a) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string("q") + ")";
    for (int g : w) s += " l" + std::to_string(g / N + 1) + "_" + std::to_string(g % N + 1);
  }
  return s;
}

// sum_{k,l,m,p} R^{ij}_{kl} l^l_m R^{mk}_{np} l^p_r - sum_{s,t,u,v} l^i_s R^{sj}_{tu} l^u_v R^{vt}_{nr}
inline std::vector<FreeElt> rea_relations(const RMatrixData& d) {
  int N = d.N;
  auto R = [&](int a, int b, int c, int e) -> const RatFunc& { return d.R[a * N + b][c * N + e]; };
  auto g = [N](int up, int low) { return up * N + low; };
  std::vector<FreeElt> out;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int n = 0; n < N; ++n)
        for (int r = 0; r < N; ++r) {
          FreeElt e;
          for (int k = 0; k < N; ++k)
            for (int l = 0; l < N; ++l) {
              if (R(i, j, k, l).is_zero()) continue;
              for (int m = 0; m < N; ++m)
                for (int p = 0; p < N; ++p)
                  if (!R(m, k, n, p).is_zero()) fa_add(e, Word{g(l, m), g(p, r)}, R(i, j, k, l) * R(m, k, n, p));
            }
          for (int s2 = 0; s2 < N; ++s2)
            for (int t = 0; t < N; ++t)
              for (int u = 0; u < N; ++u) {
                if (R(s2, j, t, u).is_zero()) continue;
                for (int v = 0; v < N; ++v)
                  if (!R(v, t, n, r).is_zero()) fa_add(e, Word{g(i, s2), g(u, v)}, -(R(s2, j, t, u) * R(v, t, n, r)));
              }
          if (!e.empty()) out.push_back(e);
        }
  return out;
}

// number of i with sigma(i) > i
inline int excedence(const AffinePerm& s) {
  int e = 0;
  for (int i = 1; i <= s.n(); ++i) e += s(i) > i;
  return e;
}

// sum (-q)^len(s) q^e(s) l^1_{s(1)} ... l^N_{s(N)}
inline FreeElt detq(int N) {
  FreeElt out;
  for (const auto& s : symmetric_group(N)) {
    Word w;
    for (int i = 1; i <= N; ++i) w.push_back((i - 1) * N + (s(i) - 1));
    int len = s.length();
    RatFunc c = qpow(len + excedence(s));
    if (len % 2) c = -c;
    fa_add(out, w, c);
  }
  return out;
}

// adjoint weight: l^i_j has weight e_i - e_j; every relation is homogeneous for it
inline std::vector<int> word_weight(const Word& w, int N) {
  std::vector<int> wt(N, 0);
  for (int g : w) {
    ++wt[g / N];
    --wt[g % N];
  }
  return wt;
}

struct CentralityResult {
  int i = 0, j = 0;
  size_t block_dim = 0, spanning = 0, slice_rank = 0;
  bool central = false;
  std::string certificate;  // the commutator when it lies outside the slice
};

// det_q l^i_j - l^i_j det_q in the span of x (relation) y within its weight block
inline CentralityResult centrality_one(const RMatrixData& d, const std::vector<FreeElt>& rels, int i, int j) {
  int N = d.N, G = N * N, deg = N + 1;
  CentralityResult res;
  res.i = i;
  res.j = j;
  FreeElt det = detq(N), l = fa_gen(N, i, j);
  FreeElt target = fa_sub(fa_mul(det, l), fa_mul(l, det));
  std::vector<int> block = word_weight(target.begin()->first, N);

  // words of the block
  std::map<Word, size_t> idx;
  {
    Word w(deg, 0);
    std::function<void(int)> rec = [&](int p) {
      if (p == deg) {
        if (word_weight(w, N) == block) idx.emplace(w, 0);
        return;
      }
      for (int g = 0; g < G; ++g) {
        w[p] = g;
        rec(p + 1);
      }
    };
    rec(0);
    size_t k = 0;
    for (auto& [w2, v] : idx) v = k++;
  }
  res.block_dim = idx.size();
  auto dense = [&](const FreeElt& e) {
    Vec v(idx.size());
    for (const auto& [w, c] : e) v.at(idx.at(w)) = c;
    return v;
  };

  std::vector<Vec> cands;
  std::vector<std::vector<Word>> words_by_len(deg - 1);
  words_by_len[0] = {Word{}};
  for (int len = 1; len <= deg - 2; ++len)
    for (const auto& w : words_by_len[len - 1])
      for (int g = 0; g < G; ++g) {
        Word x = w;
        x.push_back(g);
        words_by_len[len].push_back(x);
      }
  for (const auto& rel : rels) {
    std::vector<int> rw = word_weight(rel.begin()->first, N);
    for (int lx = 0; lx <= deg - 2; ++lx)
      for (const auto& x : words_by_len[lx])
        for (const auto& y : words_by_len[deg - 2 - lx]) {
          std::vector<int> wt = rw, wx = word_weight(x, N), wy = word_weight(y, N);
          for (int k = 0; k < N; ++k) wt[k] += wx[k] + wy[k];
          if (wt != block) continue;
          FreeElt e = fa_mul(fa_mul(FreeElt{{x, RatFunc(1)}}, rel), FreeElt{{y, RatFunc(1)}});
          cands.push_back(dense(e));
        }
  }
  res.spanning = cands.size();

  RowSpace span(idx.size());
  for (const auto& v : cands) span.insert(v);
  res.slice_rank = span.dim();
  res.central = span.contains(dense(target));
  if (!res.central) res.certificate = fa_to_string(target, N);
  return res;
}

struct ReaReport {
  int N = 2;
  std::vector<HeckeReport> conventions;
  std::optional<RConvention> selected;
  bool z_vector_ok = false;
  bool rescale_invariant = false;
  std::vector<CentralityResult> centrality;
  bool pass() const {
    if (!selected || !z_vector_ok || !rescale_invariant) return false;
    for (const auto& c : centrality)
      if (!c.central) return false;
    return true;
  }
};

// e- = sum (-q^-1)^len(w) T_w / [N]_{q^-2}! with T_i = tau R on factors i, i+1, applied to v_1 (x) ... (x) v_N,
// compared with z = sum (-q^-1)^len(s) v_{s(1)} (x) ... (x) v_{s(N)} / [N]_{q^-2}!
inline bool z_vector_check(const RMatrixData& d) {
  int N = d.N;
  size_t D = 1;
  for (int k = 0; k < N; ++k) D *= N;
  Mat sigma = mat_mul(flip(N), d.action());
  auto T = [&](int i) {
    Mat m = identity_mat(1);
    for (int k = 1; k <= N;) {
      if (k == i) {
        m = kron(m, sigma);
        k += 2;
      } else {
        m = kron(m, identity_mat(N));
        ++k;
      }
    }
    return m;
  };
  std::vector<Mat> Ts;
  for (int i = 1; i < N; ++i) Ts.push_back(T(i));
  auto index_of = [&](const std::vector<int>& v) {
    size_t x = 0;
    for (int a : v) x = x * N + (a - 1);
    return x;
  };
  Vec start(D);
  std::vector<int> id(N);
  for (int k = 0; k < N; ++k) id[k] = k + 1;
  start[index_of(id)] = 1;
  Vec lhs(D), rhs(D);
  for (const auto& s : symmetric_group(N)) {
    RatFunc c = qpow(-s.length());
    if (s.length() % 2) c = -c;
    Vec v = start;
    auto letters = s.reduced_word().letters;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) v = mat_vec(Ts[*it - 1], v);
    for (size_t k = 0; k < D; ++k) lhs[k] += c * v[k];
    std::vector<int> img(N);
    for (int k = 1; k <= N; ++k) img[k - 1] = s(k);
    rhs[index_of(img)] += c;
  }
  return lhs == rhs;
}

// R -> q^{-1/N} R rescales every relation by q^{-2/N}; the braiding then satisfies the rescaled Hecke relation
inline bool rescaling_invariant(int N, RConvention conv) {
  RMatrixData a = standard_r(N, conv, N), b = standard_r(N, conv, N, RatFunc::monomial(-1));
  if (!hecke_and_ybe_check(b).pass()) return false;
  std::vector<FreeElt> ra = rea_relations(a), rb = rea_relations(b);
  if (ra.size() != rb.size()) return false;
  RatFunc f = RatFunc::monomial(-2);
  for (size_t k = 0; k < ra.size(); ++k) {
    FreeElt scaled;
    for (const auto& [w, c] : ra[k]) fa_add(scaled, w, c * f);
    if (scaled != rb[k]) return false;
  }
  return true;
}

inline ReaReport rea_check(int N) {
  ReaReport rep;
  rep.N = N;
  for (RConvention c : {RConvention::Upper, RConvention::Lower}) {
    HeckeReport h = hecke_and_ybe_check(standard_r(N, c));
    h.z_vector = z_vector_check(standard_r(N, c));
    rep.conventions.push_back(h);
    if (h.pass() && h.z_vector && !rep.selected) rep.selected = c;
  }
  if (!rep.selected) return rep;
  RMatrixData d = standard_r(N, *rep.selected);
  rep.z_vector_ok = z_vector_check(d);
  rep.rescale_invariant = rescaling_invariant(N, *rep.selected);
  std::vector<FreeElt> rels = rea_relations(d);
  std::vector<std::pair<int, int>> ij;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) ij.emplace_back(i, j);
  rep.centrality = parallel_map(ij.size(), [&](size_t k) { return centrality_one(d, rels, ij[k].first, ij[k].second); });
  return rep;
}

}  // namespace daha

#endif
