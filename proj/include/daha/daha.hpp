#ifndef DAHA_DAHA_HPP
#define DAHA_DAHA_HPP

#include <functional>
#include <map>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "daha/hecke.hpp"
#include "daha/normal_form.hpp"
#include "daha/params.hpp"

namespace daha {

inline DahaElement gen_one(const ParamsPtr& P) { return DahaElement(P, LaurentPoly(1)); }
inline DahaElement gen_scalar(const ParamsPtr& P, const LaurentPoly& c) { return DahaElement(P, c); }
inline DahaElement gen_T(const ParamsPtr& P, int i) { return gen_one(P).mul_T(i); }
inline DahaElement gen_Tinv(const ParamsPtr& P, int i) { return gen_one(P).mul_Tinv(i); }
inline DahaElement gen_pi(const ParamsPtr& P, int k = 1) { return gen_one(P).mul_pi(k); }
inline DahaElement gen_Y(const ParamsPtr& P, int j, int power = 1) {
  return DahaElement(P, LaurentPoly::monomial(power * P->y_ext(j)));
}
inline DahaElement gen_Ymono(const ParamsPtr& P, const std::vector<int>& beta) { return DahaElement(P, P->Ymono(beta)); }
inline DahaElement gen_Tw(const ParamsPtr& P, const AffinePerm& w) { return gen_one(P).mul_Tw(w); }

// X_1 = pi T_{n-1}^{-1} ... T_1^{-1},  X_{i+1} = T_i X_i T_i
inline DahaElement x_generator(const ParamsPtr& P, int i, int power = 1) {
  int n = P->n();
  if (i < 1 || i > n) throw std::invalid_argument("x_generator: index out of range");
  if (power == 0) return gen_one(P);
  DahaElement x = gen_one(P);
  if (power > 0) {
    x = x.mul_pi(1);
    for (int k = n - 1; k >= 1; --k) x = x.mul_Tinv(k);
    for (int k = 1; k < i; ++k) x = gen_T(P, k) * x.mul_T(k);
  } else {
    // X_1^{-1} = T_1 ... T_{n-1} pi^{-1},  X_{i+1}^{-1} = T_i^{-1} X_i^{-1} T_i^{-1}
    for (int k = 1; k <= n - 1; ++k) x = x.mul_T(k);
    x = x.mul_pi(-1);
    for (int k = 1; k < i; ++k) x = gen_Tinv(P, k) * x.mul_Tinv(k);
  }
  DahaElement r = gen_one(P);
  for (int k = 0; k < (power > 0 ? power : -power); ++k) r = r * x;
  return r;
}

inline DahaElement x_monomial(const ParamsPtr& P, const std::vector<int>& alpha) {
  DahaElement r = gen_one(P);
  for (int i = 0; i < P->n(); ++i)
    if (alpha[i] != 0) r = r * x_generator(P, i + 1, alpha[i]);
  return r;
}

// Parses whitespace-separated generators: T0..T{n-1}, pi, Y1..Yn, Z1..Zn, X1..Xn, each with optional ^k.
inline DahaElement parse_word(const ParamsPtr& P, const std::string& text) {
  std::istringstream is(text);
  std::string tok;
  DahaElement r = gen_one(P);
  static const std::regex re(R"(^(T|Y|Z|X|pi)(\d*)(?:\^\(?(-?\d+)\)?)?$)");
  int n = P->n();
  while (is >> tok) {
    std::smatch m;
    if (!std::regex_match(tok, m, re)) throw std::invalid_argument("unknown generator token '" + tok + "'");
    std::string g = m[1];
    int power = m[3].matched ? std::stoi(m[3]) : 1;
    if (g == "pi") {
      if (m[2].length() != 0) throw std::invalid_argument("pi takes no index: '" + tok + "'");
      r = r.mul_pi(power);
      continue;
    }
    if (m[2].length() == 0) throw std::invalid_argument("generator needs an index: '" + tok + "'");
    int idx = std::stoi(m[2]);
    if (g == "T") {
      if (idx < 0 || idx >= n) throw std::invalid_argument("T index out of range: '" + tok + "'");
      for (int k = 0; k < (power > 0 ? power : -power); ++k) r = power > 0 ? r.mul_T(idx) : r.mul_Tinv(idx);
    } else if (g == "X") {
      if (P->regime() == Regime::SL && idx == n) throw std::invalid_argument("X_n is not a basis generator in SL");
      r = r * x_generator(P, idx, power);
    } else {
      bool sl = P->regime() == Regime::SL;
      if ((g == "Z") != sl) throw std::invalid_argument("use " + std::string(sl ? "Z" : "Y") + " generators in this regime");
      if (idx < 1 || idx > n) throw std::invalid_argument("index out of range: '" + tok + "'");
      r = r * gen_Y(P, idx, power);
    }
  }
  return r;
}

// Canonical text: terms "coeff * T[w] * Y^(b)" with unit parts omitted.
inline std::string format_element(const DahaElement& a) {
  const DahaParams& P = a.P();
  if (a.is_zero()) return "0";
  std::string yname = P.regime() == Regime::SL ? "Z" : "Y";
  std::vector<std::string> parts;
  for (const auto& [w, c] : a.terms()) {
    std::map<std::vector<int>, LaurentPoly> byY;
    for (const auto& t : c.terms()) byY[P.y_exponents(t.e)] += LaurentPoly::monomial(P.param_part(t.e), t.c);
    for (const auto& [beta, k] : byY) {
      std::vector<std::string> f;
      bool ybare = true;
      for (int b : beta)
        if (b != 0) ybare = false;
      if (!(k == LaurentPoly(1))) {
        std::string ks = k.to_string(P.vars());
        if (k.size() > 1) ks = "(" + ks + ")";
        f.push_back(ks);
      }
      if (!w.is_identity()) f.push_back("T" + w.to_string());
      if (!ybare) {
        std::string y = yname + "^(";
        for (size_t i = 0; i < beta.size(); ++i) y += (i ? "," : "") + std::to_string(beta[i]);
        f.push_back(y + ")");
      }
      std::string s;
      for (size_t i = 0; i < f.size(); ++i) s += (i ? " * " : "") + f[i];
      parts.push_back(s.empty() ? "1" : s);
    }
  }
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) s += (i ? " + " : "") + parts[i];
  return s;
}

// X^alpha T_sigma Y^gamma coordinates; the key is (alpha, sigma window, gamma).
using DualKey = std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>;
using DualForm = std::map<DualKey, LaurentPoly>;

namespace detail {

// sum_sigma f_sigma(X) T_sigma with the X variables stored in the Y slots
struct XForm {
  ParamsPtr P;
  std::map<AffinePerm, LaurentPoly> t;

  void add(const AffinePerm& s, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto& slot = t[s];
    slot += c;
    if (slot.is_zero()) t.erase(s);
  }
  // T_i f(X) T_s = (s_i f) T_i T_s + (t - t^{-1}) X_{i+1} (f - s_i f) / (X_{i+1} - X_i) T_s
  XForm left_T(int i) const {
    XForm r{P, {}};
    YSubst sub = P->reflection(i);
    Binomial den(1, P->y_ext(i + 1), -1, P->y_ext(i));
    LaurentPoly td = P->tdiff();
    AffinePerm si = AffinePerm::s(P->n(), i);
    for (const auto& [s, f] : t) {
      LaurentPoly sf = CoeffOps<LaurentPoly>::subst(*P, f, sub);
      r.add(si * s, sf);
      if (s.has_left_descent(i)) r.add(s, sf * td);
      LaurentPoly d = f - sf;
      if (!d.is_zero()) r.add(s, CoeffOps<LaurentPoly>::divide(d, den) * P->Y(i + 1) * td);
    }
    return r;
  }
  XForm left_Tinv(int i) const {
    XForm r = left_T(i);
    for (const auto& [s, f] : t) r.add(s, -(f * P->tdiff()));
    return r;
  }
  XForm left_X1(int power) const {
    XForm r{P, {}};
    for (const auto& [s, f] : t) r.add(s, f.mul_term(power * P->y_ext(1), 1));
    return r;
  }
  // pi = X_1 T_1 ... T_{n-1}
  XForm left_pi(int k) const {
    XForm r = *this;
    int n = P->n();
    for (int m = 0; m < (k > 0 ? k : -k); ++m) {
      if (k > 0) {
        for (int i = n - 1; i >= 1; --i) r = r.left_T(i);
        r = r.left_X1(1);
      } else {
        r = r.left_X1(-1);
        for (int i = 1; i <= n - 1; ++i) r = r.left_Tinv(i);
      }
    }
    return r;
  }
  // T_0 = pi T_{n-1} pi^{-1}
  XForm left_gen(int i) const {
    if (i != 0) return left_T(i);
    return left_pi(-1).left_T(P->n() - 1).left_pi(1);
  }
};

}  // namespace detail

inline DualForm dual_normal_form(const DahaElement& a) {
  const ParamsPtr& P = a.params();
  if (P->regime() == Regime::SL) throw std::invalid_argument("dual_normal_form: GL or GENERIC regime only");
  DualForm out;
  for (const auto& [w, c] : a.terms()) {
    ReducedWord rw = w.reduced_word();
    detail::XForm x{P, {}};
    x.add(AffinePerm::identity(P->n()), LaurentPoly(1));
    for (auto it = rw.letters.rbegin(); it != rw.letters.rend(); ++it) x = x.left_gen(*it);
    x = x.left_pi(rw.pi_power);
    for (const auto& [s, f] : x.t)
      for (const auto& tf : f.terms())
        for (const auto& tc : c.terms()) {
          DualKey key{P->y_exponents(tf.e), s.window(), P->y_exponents(tc.e)};
          LaurentPoly k = LaurentPoly::monomial(P->param_part(tf.e) + P->param_part(tc.e), tf.c * tc.c);
          auto& slot = out[key];
          slot += k;
          if (slot.is_zero()) out.erase(key);
        }
  }
  return out;
}

inline DahaElement from_dual_form(const ParamsPtr& P, const DualForm& d) {
  DahaElement r(P);
  for (const auto& [key, k] : d) {
    const auto& [alpha, sigma, gamma] = key;
    r += x_monomial(P, alpha) * gen_Tw(P, AffinePerm::from_window(sigma)) * gen_Ymono(P, gamma) * gen_scalar(P, k);
  }
  return r;
}

struct RelationCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

inline RelationCheck check_equal(const std::string& name, const DahaElement& lhs, const DahaElement& rhs) {
  RelationCheck c{name, lhs == rhs, ""};
  if (!c.pass) c.detail = "lhs - rhs = " + format_element(lhs - rhs);
  return c;
}

// Defining relations of the finite Hecke algebra and of H(Y), as DAHA-subalgebra identities.
inline std::vector<RelationCheck> hecke_relation_suite(const ParamsPtr& P) {
  std::vector<RelationCheck> out;
  int n = P->n();
  auto T = [&](int i) { return gen_T(P, i); };
  LaurentPoly t = P->t(), ti = P->tinv();
  for (int i = 1; i < n; ++i) {
    DahaElement q = (T(i) - gen_scalar(P, t)) * (T(i) + gen_scalar(P, ti));
    out.push_back(check_equal("quadratic T" + std::to_string(i), q, DahaElement(P)));
  }
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::string nm = "T" + std::to_string(i) + " T" + std::to_string(j);
      if (j == i + 1)
        out.push_back(check_equal("braid " + nm, T(i) * T(j) * T(i), T(j) * T(i) * T(j)));
      else
        out.push_back(check_equal("commute " + nm, T(i) * T(j), T(j) * T(i)));
    }
  for (int i = 1; i < n; ++i) {
    out.push_back(check_equal("T" + std::to_string(i) + " Y" + std::to_string(i) + " T" + std::to_string(i),
                              T(i) * gen_Y(P, i) * T(i), gen_Y(P, i + 1)));
    for (int j = 1; j <= n; ++j)
      if (j != i && j != i + 1)
        out.push_back(check_equal("T" + std::to_string(i) + " Y" + std::to_string(j) + " commute",
                                  T(i) * gen_Y(P, j), gen_Y(P, j) * T(i)));
  }
  for (int j = 1; j <= n; ++j) {
    out.push_back(check_equal("Y" + std::to_string(j) + " inverse", gen_Y(P, j) * gen_Y(P, j, -1), gen_one(P)));
    for (int k = j + 1; k <= n; ++k)
      out.push_back(check_equal("Y" + std::to_string(j) + " Y" + std::to_string(k) + " commute",
                                gen_Y(P, j) * gen_Y(P, k), gen_Y(P, k) * gen_Y(P, j)));
  }
  return out;
}

// Every defining relation of the GL (resp. SL) DAHA for the regime of P.
inline std::vector<RelationCheck> daha_relation_suite(const ParamsPtr& P) {
  std::vector<RelationCheck> out = hecke_relation_suite(P);
  int n = P->n();
  bool sl = P->regime() == Regime::SL;
  auto T = [&](int i) { return gen_T(P, i); };
  auto S = [&](const Exps& e) { return gen_scalar(P, LaurentPoly::monomial(e)); };
  auto I = [](int i) { return std::to_string(i); };
  LaurentPoly t = P->t(), ti = P->tinv();
  DahaElement pi = gen_pi(P, 1), pinv = gen_pi(P, -1);
  out.push_back(check_equal("quadratic T0", (T(0) - gen_scalar(P, t)) * (T(0) + gen_scalar(P, ti)), DahaElement(P)));
  if (n > 2) {
    for (int j = 1; j < n; ++j) {
      if (j == 1 || j == n - 1)
        out.push_back(check_equal("braid T0 T" + I(j), T(0) * T(j) * T(0), T(j) * T(0) * T(j)));
      else
        out.push_back(check_equal("commute T0 T" + I(j), T(0) * T(j), T(j) * T(0)));
    }
  }
  out.push_back(check_equal("pi inverse", pi * pinv, gen_one(P)));
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    if (sl)
      out.push_back(check_equal("pi T" + I(i) + " = T" + I(j) + " pi", pi * T(i), T(j) * pi));
    else
      out.push_back(check_equal("pi T" + I(i) + " pi^-1", pi * T(i) * pinv, T(j)));
  }
  if (!sl) {
    out.push_back(check_equal("T0 Y" + I(n) + " T0", T(0) * gen_Y(P, n) * T(0), S(-P->q_exps()) * gen_Y(P, 1)));
    for (int j = 2; j < n; ++j)
      out.push_back(check_equal("T0 Y" + I(j) + " commute", T(0) * gen_Y(P, j), gen_Y(P, j) * T(0)));
    for (int i = 1; i < n; ++i)
      out.push_back(check_equal("pi Y" + I(i) + " pi^-1", pi * gen_Y(P, i) * pinv, gen_Y(P, i + 1)));
    out.push_back(check_equal("pi Y" + I(n) + " pi^-1", pi * gen_Y(P, n) * pinv, S(-P->q_exps()) * gen_Y(P, 1)));
  } else {
    Exps sq = P->sq_exps();
    out.push_back(check_equal("T0 Z" + I(n) + " T0", T(0) * gen_Y(P, n) * T(0), S((2 * n) * sq) * gen_Y(P, 1)));
    for (int j = 2; j < n; ++j)
      out.push_back(check_equal("T0 Z" + I(j) + " commute", T(0) * gen_Y(P, j), gen_Y(P, j) * T(0)));
    for (int i = 1; i < n; ++i)
      out.push_back(check_equal("pi Z" + I(i), pi * gen_Y(P, i), S(-2 * sq) * gen_Y(P, i + 1) * pi));
    out.push_back(check_equal("pi Z" + I(n), pi * gen_Y(P, n), S((2 * n - 2) * sq) * gen_Y(P, 1) * pi));
    DahaElement prod = gen_one(P);
    for (int j = 1; j <= n; ++j) prod = prod * gen_Y(P, j);
    out.push_back(check_equal("Z1...Zn = Zprod", prod, S(P->zprod_exps())));
    out.push_back(check_equal("pi^n = 1", gen_pi(P, n), gen_one(P)));
  }
  return out;
}

}  // namespace daha

#endif
