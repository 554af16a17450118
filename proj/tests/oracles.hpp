// Independent reference computations shared by the unit tests and the acceptance runner.
#ifndef DAHA_TESTS_ORACLES_HPP
#define DAHA_TESTS_ORACLES_HPP

#include <map>
#include <set>
#include <vector>

#include "daha/affine_perm.hpp"
#include "daha/ratfunc.hpp"

namespace oracle {

using daha::AffinePerm;
using daha::RatFunc;

// Y-monomial q^k Y^beta in the GL regime with n = N (q = t^{-2}).
struct QMono {
  int qpow = 0;
  std::vector<int> beta;
  bool operator<(const QMono& o) const { return qpow != o.qpow ? qpow < o.qpow : beta < o.beta; }
  bool operator==(const QMono& o) const { return qpow == o.qpow && beta == o.beta; }
};

// Y_j for an arbitrary integer j: Y_{r + mn} = q^{-m} Y_r.
inline QMono y_ext(int n, int j, int power) {
  int r = daha::mod1(j, n), m = (j - r) / n;
  QMono x{-m * power, std::vector<int>(n, 0)};
  x.beta[r - 1] = power;
  return x;
}

inline QMono mul(QMono a, const QMono& b) {
  a.qpow += b.qpow;
  for (size_t i = 0; i < a.beta.size(); ++i) a.beta[i] += b.beta[i];
  return a;
}

// Leading coefficient of Y^beta T_x: push the monomial through the letters of a reduced word of x,
// keeping only the T_i (s_i g) part at each letter; g pi^k = pi^k (Y_j -> Y_{j-k}) g.
inline QMono leading_exchange(int n, const std::vector<int>& beta, const AffinePerm& x) {
  daha::ReducedWord rw = x.reduced_word();
  QMono g{0, beta};
  auto apply = [&](const QMono& m, auto image) {
    QMono out{m.qpow, std::vector<int>(n, 0)};
    for (int j = 1; j <= n; ++j) out = mul(out, y_ext(n, image(j), m.beta[j - 1]));
    return out;
  };
  g = apply(g, [&](int j) { return j - rw.pi_power; });
  for (int i : rw.letters) {
    AffinePerm s = AffinePerm::s(n, i);
    g = apply(g, [&](int j) { return s(j); });
  }
  return g;
}

// Every element obtained from a proper subword of the reduced word of x (with the pi-part kept).
inline std::set<AffinePerm> proper_subword_elements(const AffinePerm& x) {
  daha::ReducedWord rw = x.reduced_word();
  int n = x.n();
  size_t m = rw.letters.size();
  std::set<AffinePerm> out;
  for (size_t mask = 0; mask + 1 < (size_t(1) << m); ++mask) {
    AffinePerm y = AffinePerm::pi(n, rw.pi_power);
    for (size_t k = 0; k < m; ++k)
      if (mask & (size_t(1) << k)) y = y * AffinePerm::s(n, rw.letters[k]);
    out.insert(y);
  }
  return out;
}

// Ind_Y^{H(Y)}(a_1, a_2) at n = 2 on the basis (1 (x) v, T_1 (x) v), written out by hand:
//   T_1 (1) = T_1,  T_1 (T_1) = 1 + (t - t^-1) T_1,
//   Y_1 (1) = a_1,  Y_1 (T_1) = a_2 T_1 - (t - t^-1) a_2,
// from Y_1 T_1 = T_1 Y_2 - (t - t^-1) Y_2.
struct Two {
  RatFunc a1, a2, t, td;
  using V = std::vector<RatFunc>;  // (coefficient of 1, coefficient of T_1)
  V T1(const V& v) const { return {v[1], v[0] + td * v[1]}; }
  V Y1(const V& v) const { return {a1 * v[0] - td * a2 * v[1], a2 * v[1]}; }
  // e- = (1 - t^-1 T_1) / (1 + t^-2)
  V sign_idempotent() const {
    RatFunc k = (RatFunc(1) + t.inverse() * t.inverse()).inverse();
    return {k, -(t.inverse()) * k};
  }
};

}  // namespace oracle

#endif
