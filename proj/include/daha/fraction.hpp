#ifndef DAHA_FRACTION_HPP
#define DAHA_FRACTION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "daha/laurent.hpp"
#include "daha/ratfunc.hpp"

namespace daha {

// Canonical irreducible binomial X^M - c, with the first nonzero entry of M positive.
struct BinomialFactor {
  Exps M{};
  Rational c;

  friend bool operator<(const BinomialFactor& a, const BinomialFactor& b) {
    if (a.M != b.M) return a.M < b.M;
    return a.c < b.c;
  }
  friend bool operator==(const BinomialFactor& a, const BinomialFactor& b) { return a.M == b.M && a.c == b.c; }

  LaurentPoly poly() const { return LaurentPoly::monomial(M) - LaurentPoly(c); }
};

// c1 * X^m1 + c2 * X^m2 with distinct monomials and nonzero coefficients.
class Binomial {
 public:
  Binomial(Rational c1, Exps m1, Rational c2, Exps m2, std::optional<std::pair<int, int>> ftag = std::nullopt)
      : c1_(std::move(c1)), c2_(std::move(c2)), m1_(m1), m2_(m2), ftag_(ftag) {
    if (c1_ == 0 || c2_ == 0) throw std::invalid_argument("Binomial: zero coefficient");
    if (m1_ == m2_) throw std::invalid_argument("Binomial: equal monomials");
    Exps M = m1_ - m2_;
    bool linear = false;
    for (int x : M)
      if (x == 1 || x == -1) linear = true;
    if (!linear) throw std::invalid_argument("Binomial: no variable of degree one; irreducibility not certified");
  }

  LaurentPoly poly() const { return LaurentPoly::monomial(m1_, c1_) + LaurentPoly::monomial(m2_, c2_); }
  const std::optional<std::pair<int, int>>& ftag() const { return ftag_; }

  // poly() = unit_c * X^unit_m * canonical
  BinomialFactor canonical(Rational* unit_c, Exps* unit_m) const {
    // c1 X^m1 + c2 X^m2 = c1 X^m2 (X^{m1-m2} + c2/c1)
    return canonicalize(m1_ - m2_, -c2_ / c1_, c1_, m2_, unit_c, unit_m);
  }

  // X^M - c  ->  unit * (canonical factor); input unit (u, um) is folded in.
  static BinomialFactor canonicalize(Exps M, Rational c, Rational u, Exps um, Rational* unit_c, Exps* unit_m) {
    int first = 0;
    while (first < kMaxVars && M[first] == 0) ++first;
    if (first == kMaxVars) throw std::invalid_argument("Binomial: constant factor");
    if (M[first] < 0) {
      // X^M - c = -c X^M (X^{-M} - 1/c)
      u *= -c;
      um = um + M;
      c = 1 / c;
      M = -M;
    }
    *unit_c = u;
    *unit_m = um;
    return BinomialFactor{M, c};
  }

 private:
  Rational c1_, c2_;
  Exps m1_, m2_;
  std::optional<std::pair<int, int>> ftag_;
};

namespace detail {

inline constexpr uint64_t kProbe = 2147483647;

inline uint64_t mod_pow(uint64_t b, int64_t e) {
  if (e < 0) {
    b = mod_pow(b, kProbe - 2);
    e = -e;
  }
  uint64_t r = 1;
  while (e > 0) {
    if (e & 1) r = r * b % kProbe;
    b = b * b % kProbe;
    e >>= 1;
  }
  return r;
}

// false when q has a denominator divisible by the probe prime
inline bool rational_mod(const Rational& q, uint64_t* out) {
  uint64_t n = mpz_fdiv_ui(q.get_num_mpz_t(), kProbe);
  if (mpz_cmp_ui(q.get_den_mpz_t(), 1) == 0) {
    *out = n;
    return true;
  }
  uint64_t d = mpz_fdiv_ui(q.get_den_mpz_t(), kProbe);
  if (d == 0) return false;
  *out = n * mod_pow(d, -1) % kProbe;
  return true;
}

// Value of p at a fixed point of the hypersurface x_v = c X^m modulo the probe prime.
// A nonzero value proves x_v - c X^m does not divide p.
inline bool probe_nonzero(const LaurentPoly& p, int v, const Rational& c, const Exps& m) {
  static const std::array<uint64_t, kMaxVars> pt = {1000003, 7368787, 2750159, 15485863, 32452843, 49979687, 86028121, 104395301};
  std::array<uint64_t, kMaxVars> x = pt;
  uint64_t s;
  if (!rational_mod(c, &s)) return false;
  for (int i = 0; i < kMaxVars; ++i)
    if (m[i] != 0) s = s * mod_pow(x[i], m[i]) % kProbe;
  if (s == 0) return false;
  x[v] = s;
  std::array<int, kMaxVars> lo{}, hi{};
  for (const auto& t : p.terms())
    for (int i = 0; i < kMaxVars; ++i) {
      lo[i] = std::min(lo[i], t.e[i]);
      hi[i] = std::max(hi[i], t.e[i]);
    }
  std::array<std::vector<uint64_t>, kMaxVars> pw;
  for (int i = 0; i < kMaxVars; ++i) {
    pw[i].resize(hi[i] - lo[i] + 1);
    pw[i][0] = mod_pow(x[i], lo[i]);
    for (size_t k = 1; k < pw[i].size(); ++k) pw[i][k] = pw[i][k - 1] * x[i] % kProbe;
  }
  uint64_t acc = 0;
  for (const auto& t : p.terms()) {
    uint64_t val;
    if (!rational_mod(t.c, &val)) return false;
    for (int i = 0; i < kMaxVars; ++i)
      if (t.e[i] != 0) val = val * pw[i][t.e[i] - lo[i]] % kProbe;
    acc = (acc + val) % kProbe;
  }
  return acc != 0;
}

// Exact division of p by the canonical factor X^M - c, or nullopt.
inline std::optional<LaurentPoly> divide_by_factor(const LaurentPoly& p, const BinomialFactor& b) {
  if (p.is_zero()) return LaurentPoly();
  int v = -1;
  for (int i = 0; i < kMaxVars; ++i)
    if (b.M[i] == 1 || b.M[i] == -1) {
      v = i;
      break;
    }
  if (v < 0) throw std::invalid_argument("divide_by_factor: factor has no linear variable");
  // X^M - c = unit * (x_v - S),  S = s_c * X^s_m
  Rational unit_c, s_c;
  Exps unit_m{}, s_m{};
  if (b.M[v] == 1) {
    Exps R = b.M;
    R[v] = 0;
    unit_c = 1;
    unit_m = R;
    s_c = b.c;
    s_m = -R;
  } else {
    Exps R = b.M;
    R[v] = 0;
    unit_c = -b.c;
    unit_m = unit_exps(v, -1);
    s_c = 1 / b.c;
    s_m = R;
  }
  if (probe_nonzero(p, v, s_c, s_m)) return std::nullopt;
  // group p by the exponent of x_v
  std::map<int, std::vector<Term>> by_deg;
  for (const auto& t : p.terms()) {
    Exps e = t.e;
    int k = e[v];
    e[v] = 0;
    by_deg[k].push_back({e, t.c});
  }
  int kmin = by_deg.begin()->first, kmax = by_deg.rbegin()->first;
  if (kmin == kmax) return std::nullopt;  // a monomial multiple in x_v is never divisible
  int d = kmax - kmin;
  std::vector<LaurentPoly> P(d + 1);
  for (auto& [k, ts] : by_deg) P[k - kmin] = LaurentPoly::from_terms(std::move(ts));
  std::vector<LaurentPoly> Q(d);
  Q[d - 1] = P[d];
  for (int k = d - 1; k >= 1; --k) Q[k - 1] = P[k] + Q[k].mul_term(s_m, s_c);
  LaurentPoly rem = P[0] + Q[0].mul_term(s_m, s_c);
  if (!rem.is_zero()) return std::nullopt;
  std::vector<Term> out;
  for (int k = 0; k < d; ++k)
    for (const auto& t : Q[k].terms()) {
      Exps e = t.e;
      e[v] = k + kmin;
      out.push_back({e, t.c});
    }
  LaurentPoly q = LaurentPoly::from_terms(std::move(out));
  return q.mul_term(-unit_m, 1 / unit_c);
}

}  // namespace detail

// Exact quotient p / b, or nullopt when b does not divide p.
inline std::optional<LaurentPoly> binomial_divide(const LaurentPoly& p, const Binomial& b) {
  Rational uc;
  Exps um;
  BinomialFactor f = b.canonical(&uc, &um);
  auto q = detail::divide_by_factor(p, f);
  if (!q) return std::nullopt;
  return q->mul_term(-um, 1 / uc);
}

// Result of evaluating at a point: a value, or a pole of the given order.
struct PointValue {
  std::optional<RatFunc> value;
  int pole_order = 0;
  bool is_pole() const { return !value.has_value(); }
};

// num / prod(factor^mult), kept reduced: no factor divides num.
class FactoredFraction {
 public:
  FactoredFraction() = default;
  FactoredFraction(LaurentPoly num) : num_(std::move(num)) {}  // NOLINT(google-explicit-constructor)
  FactoredFraction(const Rational& c) : num_(c) {}             // NOLINT(google-explicit-constructor)
  FactoredFraction(int c) : num_(c) {}                          // NOLINT(google-explicit-constructor)

  static FactoredFraction ratio(const LaurentPoly& num, const Binomial& den) {
    FactoredFraction f(num);
    return f.divided_by(den);
  }

  const LaurentPoly& num() const { return num_; }
  const std::map<BinomialFactor, int>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  LaurentPoly den_poly() const {
    LaurentPoly d = 1;
    for (const auto& [f, k] : den_)
      for (int i = 0; i < k; ++i) d *= f.poly();
    return d;
  }

  FactoredFraction divided_by(const Binomial& b) const {
    if (is_zero()) return *this;
    Rational uc;
    Exps um;
    BinomialFactor f = b.canonical(&uc, &um);
    FactoredFraction r = *this;
    r.num_ = r.num_.mul_term(-um, 1 / uc);
    r.den_[f] += 1;
    r.reduce_factor(f);
    return r;
  }

  FactoredFraction operator-() const {
    FactoredFraction r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend FactoredFraction operator+(const FactoredFraction& a, const FactoredFraction& b) { return add(a, b, false); }
  friend FactoredFraction operator-(const FactoredFraction& a, const FactoredFraction& b) { return add(a, b, true); }
  friend FactoredFraction operator*(const FactoredFraction& a, const FactoredFraction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    FactoredFraction r;
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_;
    for (const auto& [f, k] : b.den_) r.den_[f] += k;
    // a monomial numerator never cancels a binomial factor
    if (b.num_.size() > 1)
      for (const auto& [f, k] : a.den_) r.reduce_factor(f);
    if (a.num_.size() > 1)
      for (const auto& [f, k] : b.den_) r.reduce_factor(f);
    return r;
  }
  FactoredFraction& operator+=(const FactoredFraction& o) { return *this = *this + o; }
  FactoredFraction& operator-=(const FactoredFraction& o) { return *this = *this - o; }
  FactoredFraction& operator*=(const FactoredFraction& o) { return *this = *this * o; }

  FactoredFraction mul_term(const Exps& e, const Rational& c) const {
    if (c == 0) return {};
    FactoredFraction r = *this;
    r.num_ = r.num_.mul_term(e, c);
    return r;
  }

  // Applies an automorphism X^e -> coeff * X^e' of the Laurent ring.
  template <class F>
  FactoredFraction map_monomials(F&& f) const {
    FactoredFraction r;
    r.num_ = num_.map_monomials(f);
    for (const auto& [b, k] : den_) {
      auto [cm, em] = f(b.M);
      Exps zero{};
      auto [c0, e0] = f(zero);
      // image of X^M - c is cm X^em - c c0 X^e0
      Rational uc;
      Exps um;
      BinomialFactor nb = Binomial::canonicalize(em - e0, b.c * c0 / cm, cm, e0, &uc, &um);
      r.den_[nb] += k;
      for (int i = 0; i < k; ++i) r.num_ = r.num_.mul_term(-um, 1 / uc);
    }
    return r;
  }

  friend bool operator==(const FactoredFraction& a, const FactoredFraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const FactoredFraction& a, const FactoredFraction& b) { return !(a == b); }

  // Equality of values by cross-multiplication, independent of reduction state.
  static bool cross_equal(const FactoredFraction& a, const FactoredFraction& b) {
    return a.num_ * b.den_poly() == b.num_ * a.den_poly();
  }

  // Evaluates through a monomial point map X^e -> coeff * x^k into Q(x).
  template <class F>
  PointValue eval(F&& point) const {
    PointValue out;
    for (const auto& [b, k] : den_) {
      auto [c, e] = point(b.M);
      if (e == 0 && c == b.c) out.pole_order += k;
    }
    if (out.pole_order > 0) return out;
    out.value = eval_poly(num_, point);
    for (const auto& [b, k] : den_) {
      RatFunc d = eval_poly(b.poly(), point);
      for (int i = 0; i < k; ++i) *out.value = *out.value / d;
    }
    return out;
  }

  template <class F>
  static RatFunc eval_poly(const LaurentPoly& p, F&& point) {
    std::map<int, Rational> acc;
    for (const auto& t : p.terms()) {
      auto [c, e] = point(t.e);
      acc[e] += t.c * c;
    }
    for (auto it = acc.begin(); it != acc.end();) it = it->second == 0 ? acc.erase(it) : std::next(it);
    return RatFunc::laurent(acc);
  }

  std::string to_string(const VarSpace& vs) const {
    if (den_.empty()) return num_.to_string(vs);
    std::string s = "(" + num_.to_string(vs) + ") / (";
    bool first = true;
    for (const auto& [b, k] : den_) {
      if (!first) s += " * ";
      first = false;
      s += "(" + b.poly().to_string(vs) + ")";
      if (k != 1) s += "^" + std::to_string(k);
    }
    return s + ")";
  }

 private:
  static FactoredFraction add(const FactoredFraction& a, const FactoredFraction& b, bool sub) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return sub ? -b : b;
    FactoredFraction r;
    if (a.den_ == b.den_) {
      r.num_ = sub ? a.num_ - b.num_ : a.num_ + b.num_;
      r.den_ = a.den_;
    } else {
      LaurentPoly na = a.num_, nb = b.num_;
      r.den_ = a.den_;
      for (const auto& [f, k] : b.den_) {
        int ka = 0;
        auto it = a.den_.find(f);
        if (it != a.den_.end()) ka = it->second;
        for (int i = ka; i < k; ++i) na *= f.poly();
        if (k > ka) r.den_[f] = k;
      }
      for (const auto& [f, k] : a.den_) {
        int kb = 0;
        auto it = b.den_.find(f);
        if (it != b.den_.end()) kb = it->second;
        for (int i = kb; i < k; ++i) nb *= f.poly();
      }
      r.num_ = sub ? na - nb : na + nb;
    }
    if (r.num_.is_zero()) {
      r.den_.clear();
      return r;
    }
    std::vector<BinomialFactor> fs;
    for (const auto& [f, k] : r.den_) fs.push_back(f);
    for (const auto& f : fs) r.reduce_factor(f);
    return r;
  }

  void reduce_factor(const BinomialFactor& f) {
    auto it = den_.find(f);
    if (it == den_.end()) return;
    while (it->second > 0) {
      auto q = detail::divide_by_factor(num_, f);
      if (!q) break;
      num_ = std::move(*q);
      --it->second;
    }
    if (it->second == 0) den_.erase(it);
  }

  LaurentPoly num_;
  std::map<BinomialFactor, int> den_;
};

// Fully reduced representative; every FactoredFraction operation already maintains this.
inline FactoredFraction ff_reduce(const FactoredFraction& x) {
  FactoredFraction r(x.num());
  for (const auto& [f, k] : x.den())
    for (int i = 0; i < k; ++i) {
      Rational c = 1;
      Exps z{};
      r = r.divided_by(Binomial(c, f.M, -f.c, z));
    }
  return r;
}

}  // namespace daha

#endif
