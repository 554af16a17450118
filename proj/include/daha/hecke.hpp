#ifndef DAHA_HECKE_HPP
#define DAHA_HECKE_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "daha/affine_perm.hpp"
#include "daha/laurent.hpp"
#include "daha/normal_form.hpp"
#include "daha/ratfunc.hpp"

namespace daha {

// Element of the finite Hecke algebra H_n(t) with coefficients in Q(x), t = x^tdeg.
class FinHeckeElt {
 public:
  FinHeckeElt() = default;
  explicit FinHeckeElt(int n, int tdeg = 1) : n_(n), tdeg_(tdeg) {}
  static FinHeckeElt T(int n, const AffinePerm& w, int tdeg = 1) {
    FinHeckeElt r(n, tdeg);
    r.add(w, RatFunc(1));
    return r;
  }
  static FinHeckeElt scalar(int n, const RatFunc& c, int tdeg = 1) {
    FinHeckeElt r(n, tdeg);
    r.add(AffinePerm::identity(n), c);
    return r;
  }

  int n() const { return n_; }
  int tdeg() const { return tdeg_; }
  RatFunc t() const { return RatFunc::monomial(tdeg_); }
  RatFunc tdiff() const { return RatFunc::monomial(tdeg_) - RatFunc::monomial(-tdeg_); }
  const std::map<AffinePerm, RatFunc>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  RatFunc coeff(const AffinePerm& w) const {
    auto it = c_.find(w);
    return it == c_.end() ? RatFunc() : it->second;
  }

  void add(const AffinePerm& w, const RatFunc& c) {
    if (!w.is_finite()) throw std::invalid_argument("FinHeckeElt: permutation not in S_n");
    if (c.is_zero()) return;
    auto& slot = c_[w];
    slot += c;
    if (slot.is_zero()) c_.erase(w);
  }

  FinHeckeElt mul_T(int i) const {
    FinHeckeElt r(n_, tdeg_);
    AffinePerm s = AffinePerm::s(n_, i);
    RatFunc td = tdiff();
    for (const auto& [w, c] : c_) {
      r.add(w * s, c);
      if (w.has_right_descent(i)) r.add(w, c * td);
    }
    return r;
  }

  friend FinHeckeElt operator+(FinHeckeElt a, const FinHeckeElt& b) {
    for (const auto& [w, c] : b.c_) a.add(w, c);
    return a;
  }
  friend FinHeckeElt operator-(FinHeckeElt a, const FinHeckeElt& b) {
    for (const auto& [w, c] : b.c_) a.add(w, -c);
    return a;
  }
  FinHeckeElt scaled(const RatFunc& k) const {
    FinHeckeElt r(n_, tdeg_);
    for (const auto& [w, c] : c_) r.add(w, c * k);
    return r;
  }
  friend FinHeckeElt operator*(const FinHeckeElt& a, const FinHeckeElt& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("FinHeckeElt: mismatched n");
    FinHeckeElt r(a.n_, a.tdeg_);
    for (const auto& [v, h] : b.c_) {
      FinHeckeElt x = a;
      for (int i : v.reduced_word().letters) x = x.mul_T(i);
      r = r + x.scaled(h);
    }
    return r;
  }
  friend bool operator==(const FinHeckeElt& a, const FinHeckeElt& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

  std::string to_string(const std::string& var = "t") const {
    if (c_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : c_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.to_string(var) + ")";
      if (!w.is_identity()) s += " * T" + w.to_string();
    }
    return s;
  }

 private:
  int n_ = 0, tdeg_ = 1;
  std::map<AffinePerm, RatFunc> c_;
};

enum class IdempotentKind { Sign, Triv };

inline RatFunc ratfunc_of(const LaurentPoly& p, int var = 0) {
  std::map<int, Rational> m;
  for (const auto& t : p.terms()) {
    for (int v = 0; v < kMaxVars; ++v)
      if (v != var && t.e[v] != 0) throw std::invalid_argument("ratfunc_of: polynomial is not univariate");
    m[t.e[var]] += t.c;
  }
  for (auto it = m.begin(); it != m.end();) it = it->second == 0 ? m.erase(it) : std::next(it);
  return RatFunc::laurent(m);
}

// e- = sum (-t^{-1})^len T_w / [n]_{t^-2}!,  e+ = sum t^len T_w / [n]_{t^2}!
inline FinHeckeElt idempotent(int n, IdempotentKind kind, int tdeg = 1) {
  FinHeckeElt r(n, tdeg);
  bool sign = kind == IdempotentKind::Sign;
  RatFunc base = sign ? RatFunc::monomial(-tdeg, -1) : RatFunc::monomial(tdeg);
  LaurentPoly r2 = LaurentPoly::var(0, sign ? -2 * tdeg : 2 * tdeg);
  RatFunc norm = ratfunc_of(qfact(n, r2)).inverse();
  for (const auto& w : symmetric_group(n)) r.add(w, base.pow(w.length()) * norm);
  return r;
}

using AhaElt = DahaElement;

// Product in the affine Hecke algebra H(Y): the DAHA product restricted to finite permutations.
inline AhaElt aha_mul(const AhaElt& a, const AhaElt& b) {
  for (const auto* x : {&a, &b})
    for (const auto& [w, c] : x->terms())
      if (!w.is_finite()) throw std::invalid_argument("aha_mul: element outside the affine Hecke algebra");
  return a * b;
}

}  // namespace daha

#endif
