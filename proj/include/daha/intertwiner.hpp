#ifndef DAHA_INTERTWINER_HPP
#define DAHA_INTERTWINER_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "daha/daha.hpp"
#include "daha/normal_form.hpp"

namespace daha {

inline FactoredFraction ff(const LaurentPoly& p) { return FactoredFraction(p); }

// phi_i = T_i (Y_i - Y_{i+1}) + (t - t^{-1}) Y_{i+1}, any integer i
inline LocDahaElement phi(const ParamsPtr& P, int i) {
  LocDahaElement one(P, FactoredFraction(1));
  return one.mul_T(i).times_coeff(ff(P->Y(i) - P->Y(i + 1))) + LocDahaElement(P, ff(P->tdiff() * P->Y(i + 1)));
}

// nu_i = phi_i f_{i,i+1}^{-1} = T_i a + b
struct NuParts {
  FactoredFraction a, b;
};
inline NuParts nu_parts(const ParamsPtr& P, int i) {
  Binomial f = P->f(i, i + 1);
  return {FactoredFraction::ratio(P->Y(i) - P->Y(i + 1), f), FactoredFraction::ratio(P->tdiff() * P->Y(i + 1), f)};
}
inline LocDahaElement nu(const ParamsPtr& P, int i) {
  NuParts p = nu_parts(P, i);
  LocDahaElement one(P, FactoredFraction(1));
  return one.mul_T(i).times_coeff(p.a) + LocDahaElement(P, p.b);
}

inline LocDahaElement right_mul_nu(const LocDahaElement& A, int i) {
  NuParts p = nu_parts(A.params(), i);
  return A.mul_T(i).times_coeff(p.a) + A.times_coeff(p.b);
}
inline LocDahaElement right_mul_phi(const LocDahaElement& A, int i) {
  const DahaParams& P = A.P();
  return A.mul_T(i).times_coeff(ff(P.Y(i) - P.Y(i + 1))) + A.times_coeff(ff(P.tdiff() * P.Y(i + 1)));
}

// nu_w = pi^k nu_{i_1} ... nu_{i_m} along the given word
inline LocDahaElement nu_from_word(const ParamsPtr& P, const ReducedWord& rw) {
  LocDahaElement r = LocDahaElement(P, FactoredFraction(1)).mul_pi(rw.pi_power);
  for (int i : rw.letters) r = right_mul_nu(r, i);
  return r;
}
inline LocDahaElement phi_from_word(const ParamsPtr& P, const ReducedWord& rw) {
  LocDahaElement r = LocDahaElement(P, FactoredFraction(1)).mul_pi(rw.pi_power);
  for (int i : rw.letters) r = right_mul_phi(r, i);
  return r;
}
inline LocDahaElement nu_word(const ParamsPtr& P, const AffinePerm& w) { return nu_from_word(P, w.reduced_word()); }
inline LocDahaElement phi_word(const ParamsPtr& P, const AffinePerm& w) { return phi_from_word(P, w.reduced_word()); }

// All reduced words of w (letters only; the pi-power is fixed), up to `limit` words.
inline std::vector<ReducedWord> reduced_words(const AffinePerm& w, size_t limit = 64) {
  int n = w.n();
  int k = w.pi_degree();
  std::vector<ReducedWord> out;
  std::vector<int> suffix;
  std::function<void(const AffinePerm&)> rec = [&](const AffinePerm& u) {
    if (out.size() >= limit) return;
    if (u.length() == 0) {
      ReducedWord rw;
      rw.pi_power = k;
      rw.letters.assign(suffix.rbegin(), suffix.rend());
      out.push_back(rw);
      return;
    }
    for (int i = 0; i < n; ++i)
      if (u.has_right_descent(i)) {
        suffix.push_back(i);
        rec(u * AffinePerm::s(n, i));
        suffix.pop_back();
      }
  };
  rec(AffinePerm::pi(n, -k) * w);
  return out;
}

inline LaurentPoly inversion_product(const ParamsPtr& P, const AffinePerm& w) {
  LaurentPoly p = 1;
  for (auto [i, j] : w.inversions()) p *= P->f_poly(i, j);
  return p;
}

struct PhiNuResult {
  std::optional<int> alpha;       // exponent found by comparing the two sides
  int alpha_from_subscripts = 0;  // exponent from normalizing the natural f-subscripts
  std::vector<std::pair<int, int>> natural_pairs;
  bool verified = false;
};

// phi_w = nu_w q^alpha prod_{Inv(w)} f_{i,j}
inline PhiNuResult phi_vs_nu_check(const ParamsPtr& P, const AffinePerm& w) {
  PhiNuResult res;
  int n = P->n();
  ReducedWord rw = w.reduced_word();
  // natural subscripts: the f attached to letter k is moved right past nu_{i_{k+1}} ... nu_{i_m}
  for (size_t k = 0; k < rw.letters.size(); ++k) {
    AffinePerm y = AffinePerm::identity(n);
    for (size_t m = k + 1; m < rw.letters.size(); ++m) y = y * AffinePerm::s(n, rw.letters[m]);
    AffinePerm yi = y.inverse();
    int a = yi(rw.letters[k]), b = yi(rw.letters[k] + 1);
    res.natural_pairs.emplace_back(a, b);
    int r = mod1(a, n);
    res.alpha_from_subscripts -= (a - r) / n;
  }
  LocDahaElement ph = phi_from_word(P, rw), nw = nu_from_word(P, rw);
  LocDahaElement base = nw.times_coeff(ff(inversion_product(P, w)));
  if (ph.terms().empty() || base.terms().empty()) return res;
  const auto& [x, c] = *ph.terms().rbegin();
  FactoredFraction s = base.coeff(x);
  int bound = 4 * static_cast<int>(rw.letters.size()) + 4;
  for (int al = -bound; al <= bound && !res.alpha; ++al)
    if (s.mul_term(al * P->q_exps(), 1) == c) res.alpha = al;
  if (res.alpha) res.verified = base.times_coeff(ff(LaurentPoly::monomial(*res.alpha * P->q_exps()))) == ph;
  return res;
}

// a_{ij} = t f_{i-n,j} / f_{ij},  b_{ij} = (t - t^{-1}) Y_j / f_{ij}
inline NuParts ab_decompose(const ParamsPtr& P, int i, int j) {
  int n = P->n();
  Binomial f = P->f(i, j);
  return {FactoredFraction::ratio(P->t() * P->f_poly(i - n, j), f), FactoredFraction::ratio(P->tdiff() * P->Y(j), f)};
}

inline std::vector<RelationCheck> intertwiner_relation_suite(const ParamsPtr& P) {
  std::vector<RelationCheck> out;
  int n = P->n();
  bool sl = P->regime() == Regime::SL;
  auto I = [](int i) { return std::to_string(i); };
  auto chk = [&](const std::string& name, const LocDahaElement& a, const LocDahaElement& b) {
    RelationCheck c{name, a == b, ""};
    if (!c.pass) c.detail = "lhs - rhs = " + (a - b).to_string();
    out.push_back(c);
  };
  auto L = [&](const DahaElement& d) { return localize(d); };
  auto Yl = [&](int j) { return LocDahaElement(P, ff(P->Y(j))); };
  LocDahaElement pi = L(gen_pi(P)), one(P, FactoredFraction(1));
  std::vector<LocDahaElement> ph, nv;
  for (int i = 0; i < n; ++i) {
    ph.push_back(phi(P, i));
    nv.push_back(nu(P, i));
  }
  // the defining difference T_i Y_i - Y_i T_i
  for (int i = 0; i < n; ++i) chk("phi" + I(i) + " = T Y - Y T", ph[i], L(gen_T(P, i)) * Yl(i) - Yl(i) * L(gen_T(P, i)));
  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= n; ++j) {
      int sj = AffinePerm::s(n, i)(j);
      chk("Y" + I(j) + " phi" + I(i), Yl(j) * ph[i], ph[i] * Yl(sj));
      chk("Y" + I(j) + " nu" + I(i), Yl(j) * nv[i], nv[i] * Yl(sj));
    }
  // phi_{i+n} = q^{-1} phi_i, so wrap-around relations use consecutive integer indices
  for (int i = 0; i < n; ++i) {
    LocDahaElement twist = sl ? LocDahaElement(P, ff(LaurentPoly::monomial(-2 * P->sq_exps()))) : one;
    chk("pi phi" + I(i), pi * ph[i], twist * phi(P, i + 1) * pi);
    chk("pi nu" + I(i), pi * nv[i], nu(P, i + 1) * pi);
  }
  for (int i = 0; i < n; ++i) {
    chk("phi" + I(i) + "^2", ph[i] * ph[i], LocDahaElement(P, ff(P->f_poly(i, i + 1) * P->f_poly(i + 1, i))));
    chk("nu" + I(i) + "^2", nv[i] * nv[i], one);
  }
  if (n > 2) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        bool adj = (j - i) % n == 1 || (i - j + n) % n == 1;
        std::string nm = I(i) + "," + I(j);
        if (adj) {
          LocDahaElement pi_ = ph[i], pj = ph[j];
          if (j - i != 1) pi_ = phi(P, i + n);
          chk("phi braid " + nm, pi_ * pj * pi_, pj * pi_ * pj);
          chk("nu braid " + nm, nv[i] * nv[j] * nv[i], nv[j] * nv[i] * nv[j]);
        } else {
          chk("phi commute " + nm, ph[i] * ph[j], ph[j] * ph[i]);
          chk("nu commute " + nm, nv[i] * nv[j], nv[j] * nv[i]);
        }
      }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        bool adj = (j - i + n) % n == 1 || (i - j + n) % n == 1;
        LocDahaElement Ti = L(gen_T(P, i)), Tj = L(gen_T(P, j));
        std::string nm = I(i) + "," + I(j);
        if (adj) {
          chk("mixed nu T nu " + nm, nv[i] * Tj * nv[i], nv[j] * Ti * nv[j]);
          chk("mixed nu nu T " + nm, nv[i] * nv[j] * Ti, Tj * nv[i] * nv[j]);
        } else {
          chk("mixed T nu commute " + nm, Ti * nv[j], nv[j] * Ti);
        }
      }
  }
  return out;
}

}  // namespace daha

#endif
