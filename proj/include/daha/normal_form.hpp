#ifndef DAHA_NORMAL_FORM_HPP
#define DAHA_NORMAL_FORM_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "daha/affine_perm.hpp"
#include "daha/fraction.hpp"
#include "daha/params.hpp"

namespace daha {

// Coefficient operations used by the rewriting engine.
template <class C>
struct CoeffOps;

template <>
struct CoeffOps<LaurentPoly> {
  static LaurentPoly subst(const DahaParams& P, const LaurentPoly& c, const YSubst& s) {
    return c.map_monomials([&](const Exps& e) { return std::make_pair(Rational(1), P.apply(s, e)); });
  }
  static LaurentPoly divide(const LaurentPoly& c, const Binomial& b) {
    auto q = binomial_divide(c, b);
    if (!q) throw std::logic_error("divided difference is not a polynomial");
    return *q;
  }
  static LaurentPoly normalize(const DahaParams& P, const LaurentPoly& c) { return P.normalize(c); }
  static AffinePerm normalize_perm(const DahaParams& P, const AffinePerm& x) { return P.normalize_perm(x); }
  static std::string str(const LaurentPoly& c, const VarSpace& vs) { return c.to_string(vs); }
};

// Localized coefficients are kept in the SL cover (no Z_n elimination, no pi^n reduction).
template <>
struct CoeffOps<FactoredFraction> {
  static FactoredFraction subst(const DahaParams& P, const FactoredFraction& c, const YSubst& s) {
    return c.map_monomials([&](const Exps& e) { return std::make_pair(Rational(1), P.apply(s, e)); });
  }
  static FactoredFraction divide(const FactoredFraction& c, const Binomial& b) { return c.divided_by(b); }
  static FactoredFraction normalize(const DahaParams&, const FactoredFraction& c) { return c; }
  static AffinePerm normalize_perm(const DahaParams&, const AffinePerm& x) { return x; }
  static std::string str(const FactoredFraction& c, const VarSpace& vs) { return c.to_string(vs); }
};

// Sum of T_w * c_w with coefficients on the right; T_{pi^k u} = pi^k T_u.
template <class C>
class NormalForm {
 public:
  using Ops = CoeffOps<C>;
  using Map = std::map<AffinePerm, C>;

  NormalForm() = default;
  explicit NormalForm(ParamsPtr p) : P_(std::move(p)) {}
  NormalForm(ParamsPtr p, const C& c) : P_(std::move(p)) { add_term(AffinePerm::identity(P_->n()), c); }
  static NormalForm term(ParamsPtr p, const AffinePerm& w, const C& c) {
    NormalForm r(std::move(p));
    r.add_term(w, c);
    return r;
  }
  static NormalForm T(ParamsPtr p, const AffinePerm& w) { return term(p, w, C(1)); }

  const ParamsPtr& params() const { return P_; }
  const DahaParams& P() const { return *P_; }
  const Map& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  C coeff(const AffinePerm& w) const {
    auto it = t_.find(w);
    return it == t_.end() ? C() : it->second;
  }

  void add_term(const AffinePerm& w0, const C& c0) {
    if (c0.is_zero()) return;
    AffinePerm w = Ops::normalize_perm(*P_, w0);
    C c = Ops::normalize(*P_, c0);
    if (c.is_zero()) return;
    auto it = t_.find(w);
    if (it == t_.end()) {
      t_.emplace(w, std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  NormalForm& operator+=(const NormalForm& o) {
    check(o);
    for (const auto& [w, c] : o.t_) add_term(w, c);
    return *this;
  }
  NormalForm& operator-=(const NormalForm& o) {
    check(o);
    for (const auto& [w, c] : o.t_) add_term(w, -c);
    return *this;
  }
  friend NormalForm operator+(NormalForm a, const NormalForm& b) { return a += b; }
  friend NormalForm operator-(NormalForm a, const NormalForm& b) { return a -= b; }
  NormalForm operator-() const {
    NormalForm r(P_);
    for (const auto& [w, c] : t_) r.t_.emplace(w, -c);
    return r;
  }

  // this * c for a Y-side coefficient c
  NormalForm times_coeff(const C& c) const {
    NormalForm r(P_);
    for (const auto& [w, x] : t_) r.add_term(w, x * c);
    return r;
  }

  NormalForm mul_T(int i) const {
    const DahaParams& P = *P_;
    int n = P.n();
    i = ((i % n) + n) % n;
    YSubst s = P.reflection(i);
    Binomial den(1, P.y_ext(i + 1), -1, P.y_ext(i));
    C td(P.tdiff());
    C yi1(P.Y(i + 1));
    AffinePerm si = AffinePerm::s(n, i);
    NormalForm r(P_);
    for (const auto& [x, c] : t_) {
      C sc = Ops::subst(P, c, s);
      AffinePerm xs = x * si;
      r.add_term(xs, sc);
      if (x.has_right_descent(i)) r.add_term(x, sc * td);
      C diff = c - sc;
      if (!diff.is_zero()) r.add_term(x, Ops::divide(diff, den) * yi1 * td);
    }
    return r;
  }
  // T_i^{-1} = T_i - (t - t^{-1})
  NormalForm mul_Tinv(int i) const { return mul_T(i) - times_coeff(C(P_->tdiff())); }

  NormalForm mul_pi(int k) const {
    if (k == 0) return *this;
    const DahaParams& P = *P_;
    YSubst s = P.pi_shift(k);
    AffinePerm pk = AffinePerm::pi(P.n(), k);
    NormalForm r(P_);
    for (const auto& [x, c] : t_) r.add_term(x * pk, Ops::subst(P, c, s));
    return r;
  }

  NormalForm mul_Tw(const AffinePerm& v) const {
    ReducedWord rw = v.reduced_word();
    NormalForm r = mul_pi(rw.pi_power);
    for (int i : rw.letters) r = r.mul_T(i);
    return r;
  }

  friend NormalForm operator*(const NormalForm& a, const NormalForm& b) {
    a.check(b);
    NormalForm r(a.P_);
    for (const auto& [v, h] : b.t_) r += a.mul_Tw(v).times_coeff(h);
    return r;
  }

  friend bool operator==(const NormalForm& a, const NormalForm& b) {
    return (a.P_ == b.P_ || (a.P_ && b.P_ && *a.P_ == *b.P_)) && a.t_ == b.t_;
  }
  friend bool operator!=(const NormalForm& a, const NormalForm& b) { return !(a == b); }

  std::string to_string() const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : t_) {
      if (!first) s += " + ";
      first = false;
      bool id = w.is_identity();
      std::string cs = Ops::str(c, P_->vars());
      if (id) {
        s += "(" + cs + ")";
      } else {
        s += "T" + w.to_string();
        if (!(c == C(1))) s += " * (" + cs + ")";
      }
    }
    return s;
  }

 private:
  void check(const NormalForm& o) const {
    if (P_ != o.P_ && !(P_ && o.P_ && *P_ == *o.P_)) throw std::invalid_argument("NormalForm: parameter mismatch");
  }

  ParamsPtr P_;
  Map t_;
};

using DahaElement = NormalForm<LaurentPoly>;
using LocDahaElement = NormalForm<FactoredFraction>;

// Inclusion of the polynomial algebra into its localization.
inline LocDahaElement localize(const DahaElement& a) {
  LocDahaElement r(a.params());
  for (const auto& [w, c] : a.terms()) r.add_term(w, FactoredFraction(c));
  return r;
}

}  // namespace daha

#endif
