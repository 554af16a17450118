// Bounded search for h_i, h'_i with sum h_i e- h'_i = 1.
#ifndef DAHA_MORITA_HPP
#define DAHA_MORITA_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "daha/daha.hpp"
#include "daha/endo.hpp"
#include "daha/fraction.hpp"
#include "daha/hecke.hpp"
#include "daha/linalg.hpp"

namespace daha {

struct MoritaResult {
  int n = 2, bound = 0;
  size_t candidates = 0, keys = 0, support = 0;
  bool found = false, verified = false;
  std::string witness;  // "c * [pi^k Y^b] e [pi^k Y^b] + ..."
  std::string note;
};

namespace detail {

using FlatKey = std::pair<AffinePerm, std::vector<int>>;

inline std::map<FlatKey, RatFunc> flatten(const DahaElement& a) {
  const DahaParams& P = *a.params();
  std::map<FlatKey, std::map<int, Rational>> acc;
  for (const auto& [w, c] : a.terms())
    for (const auto& t : c.terms()) acc[{w, P.y_exponents(t.e)}][P.param_part(t.e)[0]] += t.c;
  std::map<FlatKey, RatFunc> out;
  for (auto& [k, m] : acc) {
    RatFunc f = RatFunc::laurent(m);
    if (!f.is_zero()) out[k] = f;
  }
  return out;
}

inline uint64_t rf_mod(const RatFunc& f, uint64_t tv) {
  auto ev = [&](const UPoly& p) {
    uint64_t s = 0, pw = 1;
    for (const auto& c : p.coeffs()) {
      uint64_t cm = 0;
      if (!rational_mod(c, &cm)) throw std::runtime_error("morita: coefficient denominator vanishes mod p");
      s = (s + cm * pw) % kProbe;
      pw = pw * tv % kProbe;
    }
    return s;
  };
  uint64_t d = ev(f.den());
  if (d == 0) throw std::runtime_error("morita: evaluation point is a pole");
  return ev(f.num()) * mod_pow(d, -1) % kProbe;
}

}  // namespace detail

// candidates pi^k Y^beta with |k| + |beta|_1 <= bound on both sides of e~ = sum (-t^-1)^len(w) T_w,
// a unit multiple of e-. A modular solve at a fixed t proposes a support; the exact solve on that support
// is re-verified by multiplication in the algebra.
inline MoritaResult morita_witness_search(int n, int bound) {
  MoritaResult r;
  r.n = n;
  r.bound = bound;
  ParamsPtr P = DahaParams::make(n, Regime::GL);
  if (P->t_degree() != 1) throw std::invalid_argument("morita: base variable must be t");

  DahaElement e(P);
  for (const auto& w : symmetric_group(n)) {
    int l = w.length();
    Rational c = (l % 2) ? -1 : 1;
    Exps ex{};
    ex[0] = -l;
    e += gen_Tw(P, w) * DahaElement(P, LaurentPoly::monomial(ex, c));
  }

  struct Mon {
    int k;
    std::vector<int> beta;
  };
  std::vector<Mon> mons;
  std::vector<int> beta(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      for (int k = -left; k <= left; ++k) mons.push_back({k, beta});
      return;
    }
    for (int b = -left; b <= left; ++b) {
      beta[i] = b;
      rec(i + 1, left - std::abs(b));
    }
    beta[i] = 0;
  };
  rec(0, bound);
  auto elem = [&](const Mon& m) { return gen_Ymono(P, m.beta) * gen_pi(P, m.k); };
  auto name = [&](const Mon& m) { return "[pi^" + std::to_string(m.k) + " Y^(" + join_ints(m.beta) + ")]"; };

  std::vector<std::pair<size_t, size_t>> pairs;
  std::vector<DahaElement> prods;
  std::vector<std::map<detail::FlatKey, RatFunc>> flat;
  for (size_t a = 0; a < mons.size(); ++a) {
    DahaElement left = elem(mons[a]) * e;
    for (size_t b = 0; b < mons.size(); ++b) {
      DahaElement p = left * elem(mons[b]);
      pairs.emplace_back(a, b);
      flat.push_back(detail::flatten(p));
      prods.push_back(std::move(p));
    }
  }
  r.candidates = prods.size();
  std::map<detail::FlatKey, size_t> idx;
  detail::FlatKey one{AffinePerm::identity(n), std::vector<int>(n, 0)};
  idx.emplace(one, 0);
  for (const auto& f : flat)
    for (const auto& [k, c] : f) idx.emplace(k, 0);
  {
    size_t i = 0;
    for (auto& [k, v] : idx) v = i++;
  }
  r.keys = idx.size();

  // modular solve of A c = [1] at t = t0
  const uint64_t t0 = 918273;
  const uint64_t p = detail::kProbe;
  size_t R = idx.size(), C = prods.size();
  std::vector<std::vector<uint64_t>> M(R, std::vector<uint64_t>(C + 1, 0));
  for (size_t j = 0; j < C; ++j)
    for (const auto& [k, c] : flat[j]) M[idx[k]][j] = detail::rf_mod(c, t0);
  M[idx[one]][C] = 1;
  std::vector<size_t> piv;
  size_t row = 0;
  for (size_t col = 0; col <= C && row < R; ++col) {
    size_t q = row;
    while (q < R && M[q][col] == 0) ++q;
    if (q == R) continue;
    std::swap(M[q], M[row]);
    uint64_t inv = detail::mod_pow(M[row][col], -1);
    for (auto& x : M[row]) x = x * inv % p;
    for (size_t i = 0; i < R; ++i) {
      if (i == row || M[i][col] == 0) continue;
      uint64_t f = M[i][col];
      for (size_t j = col; j <= C; ++j)
        if (M[row][j]) M[i][j] = (M[i][j] + (p - f) * M[row][j]) % p;
    }
    piv.push_back(col);
    ++row;
  }
  if (!piv.empty() && piv.back() == C) {
    r.note = "1 is not in the bounded span at the modular test point";
    return r;
  }
  std::vector<size_t> support;
  for (size_t i = 0; i < piv.size(); ++i)
    if (M[i][C] != 0) support.push_back(piv[i]);
  r.support = support.size();

  // exact solve on the support
  size_t s = support.size();
  Mat A = zero_mat(R, s + 1);
  for (size_t j = 0; j < s; ++j)
    for (const auto& [k, c] : flat[support[j]]) A[idx[k]][j] = c;
  A[idx[one]][s] = 1;
  std::vector<size_t> ep = rref(A);
  if (!ep.empty() && ep.back() == s) {
    r.note = "modular support does not solve exactly";
    return r;
  }
  Vec coef(s);
  for (size_t i = 0; i < ep.size(); ++i) coef[ep[i]] = A[i][s];

  // clear denominators and verify sum (D c_j) h_j e h'_j = D
  UPoly D(Rational(1));
  for (const auto& c : coef) {
    if (c.is_zero()) continue;
    UPoly g = UPoly::gcd(D, c.den()), q, rem;
    UPoly::divmod(c.den(), g, q, rem);
    D = (D * q).monic();
  }
  auto to_laurent = [&](const UPoly& f) {
    LaurentPoly out;
    for (int k = 0; k <= f.degree(); ++k)
      if (f[k] != 0) {
        Exps ex{};
        ex[0] = k;
        out += LaurentPoly::monomial(ex, f[k]);
      }
    return out;
  };
  DahaElement lhs(P);
  std::string wit;
  for (size_t j = 0; j < s; ++j) {
    if (coef[j].is_zero()) continue;
    UPoly num = coef[j].num(), q, rem;
    UPoly::divmod(D * num, coef[j].den(), q, rem);
    if (!rem.is_zero()) throw std::logic_error("morita: denominator clearing failed");
    lhs += prods[support[j]] * DahaElement(P, to_laurent(q));
    const auto& [a, b] = pairs[support[j]];
    wit += (wit.empty() ? "" : " + ") + ("(" + coef[j].to_string() + ") " + name(mons[a]) + " e " + name(mons[b]));
  }
  r.found = true;
  r.verified = lhs == DahaElement(P, to_laurent(D));
  r.witness = wit;
  r.note = r.verified ? "witness verified by exact multiplication" : "exact solution failed re-verification";
  return r;
}

}  // namespace daha

#endif
