#ifndef DAHA_LAURENT_HPP
#define DAHA_LAURENT_HPP

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace daha {

using Rational = mpq_class;

inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline constexpr int kMaxVars = 8;
using Exps = std::array<int, kMaxVars>;

inline Exps operator+(Exps a, const Exps& b) {
  for (int i = 0; i < kMaxVars; ++i) a[i] += b[i];
  return a;
}
inline Exps operator-(Exps a, const Exps& b) {
  for (int i = 0; i < kMaxVars; ++i) a[i] -= b[i];
  return a;
}
inline Exps operator-(Exps a) {
  for (auto& x : a) x = -x;
  return a;
}
inline Exps operator*(int k, Exps a) {
  for (auto& x : a) x *= k;
  return a;
}
inline bool is_zero_exps(const Exps& a) {
  for (int x : a)
    if (x != 0) return false;
  return true;
}
inline Exps unit_exps(int var, int power = 1) {
  Exps e{};
  e[var] = power;
  return e;
}

inline std::string rational_str(const Rational& r) { return r.get_str(); }

// Ordered variable names plus optional specialization rules var -> monomial in the others.
class VarSpace {
 public:
  VarSpace() = default;
  explicit VarSpace(std::vector<std::string> names) : names_(std::move(names)), rules_(names_.size()) {
    if (names_.size() > static_cast<size_t>(kMaxVars)) throw std::invalid_argument("VarSpace: too many variables");
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  int index(const std::string& nm) const {
    for (int i = 0; i < size(); ++i)
      if (names_[i] == nm) return i;
    return -1;
  }

  void add_rule(int var, const Exps& image) {
    if (image[var] != 0) throw std::invalid_argument("VarSpace: rule refers to its own variable");
    rules_.at(var) = image;
    // acyclicity: every variable must reach a rule-free form in at most size() steps
    for (int v = 0; v < size(); ++v) {
      Exps e = unit_exps(v);
      int steps = 0;
      while (!is_fixed(e)) {
        e = step(e);
        if (++steps > size()) {
          rules_.at(var).reset();
          throw std::invalid_argument("VarSpace: cyclic specialization rules");
        }
      }
    }
  }
  bool has_rule(int var) const { return rules_.at(var).has_value(); }

  Exps specialize(Exps e) const {
    while (!is_fixed(e)) e = step(e);
    return e;
  }

 private:
  bool is_fixed(const Exps& e) const {
    for (int v = 0; v < size(); ++v)
      if (e[v] != 0 && rules_[v]) return false;
    return true;
  }
  Exps step(Exps e) const {
    for (int v = 0; v < size(); ++v) {
      if (e[v] != 0 && rules_[v]) {
        int k = e[v];
        e[v] = 0;
        e = e + k * *rules_[v];
      }
    }
    return e;
  }

  std::vector<std::string> names_;
  std::vector<std::optional<Exps>> rules_;
};

struct Term {
  Exps e;
  Rational c;
};

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) t_.push_back({Exps{}, c});
  }
  LaurentPoly(int c) : LaurentPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const Exps& e, const Rational& c = 1) {
    LaurentPoly p;
    if (c != 0) p.t_.push_back({e, c});
    return p;
  }
  static LaurentPoly var(int i, int power = 1) { return monomial(unit_exps(i, power)); }
  static LaurentPoly from_terms(std::vector<Term> terms) {
    LaurentPoly p;
    p.t_ = std::move(terms);
    p.normalize();
    return p;
  }

  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }
  const std::vector<Term>& terms() const { return t_; }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && is_zero_exps(t_[0].e)); }
  bool is_monomial() const { return t_.size() == 1; }
  Rational constant_term() const {
    for (const auto& t : t_)
      if (is_zero_exps(t.e)) return t.c;
    return 0;
  }
  Rational coeff(const Exps& e) const {
    auto it = std::lower_bound(t_.begin(), t_.end(), e, [](const Term& a, const Exps& b) { return a.e < b; });
    if (it != t_.end() && it->e == e) return it->c;
    return 0;
  }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.t_) t.c = -t.c;
    return r;
  }
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = merge(*this, o, 1); }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = merge(*this, o, -1); }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, 1); }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, -1); }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.t_.size() == 1) return a.mul_term(b.t_[0].e, b.t_[0].c);
    if (a.t_.size() == 1) return b.mul_term(a.t_[0].e, a.t_[0].c);
    std::vector<Term> out;
    out.reserve(a.t_.size() * b.t_.size());
    for (const auto& x : a.t_)
      for (const auto& y : b.t_) out.push_back({x.e + y.e, x.c * y.c});
    return from_terms(std::move(out));
  }

  LaurentPoly mul_term(const Exps& e, const Rational& c) const {
    if (c == 0) return {};
    LaurentPoly r;
    r.t_.reserve(t_.size());
    for (const auto& t : t_) r.t_.push_back({t.e + e, t.c * c});
    return r;  // shifting preserves lexicographic order
  }
  LaurentPoly scaled(const Rational& c) const { return mul_term(Exps{}, c); }

  // Applies a monomial substitution e -> (c, e'); the map need not preserve order.
  template <class F>
  LaurentPoly map_monomials(F&& f) const {
    std::vector<Term> out;
    out.reserve(t_.size());
    for (const auto& t : t_) {
      auto [c, e] = f(t.e);
      out.push_back({e, t.c * c});
    }
    return from_terms(std::move(out));
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (size_t i = 0; i < a.t_.size(); ++i)
      if (a.t_[i].e != b.t_[i].e || a.t_[i].c != b.t_[i].c) return false;
    return true;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
    size_t m = std::min(a.t_.size(), b.t_.size());
    for (size_t i = 0; i < m; ++i) {
      if (a.t_[i].e != b.t_[i].e) return a.t_[i].e < b.t_[i].e;
      if (a.t_[i].c != b.t_[i].c) return a.t_[i].c < b.t_[i].c;
    }
    return a.t_.size() < b.t_.size();
  }

  std::string to_string(const VarSpace& vs) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : t_) {
      Rational c = t.c;
      bool neg = c < 0;
      if (neg) c = -c;
      if (first)
        os << (neg ? "-" : "");
      else
        os << (neg ? " - " : " + ");
      first = false;
      std::string mono = monomial_string(t.e, vs);
      if (mono.empty())
        os << c.get_str();
      else if (c == 1)
        os << mono;
      else
        os << c.get_str() << " * " << mono;
    }
    return os.str();
  }

  static std::string monomial_string(const Exps& e, const VarSpace& vs) {
    std::string s;
    for (int v = 0; v < kMaxVars; ++v) {
      if (e[v] == 0) continue;
      if (!s.empty()) s += " * ";
      s += v < vs.size() ? vs.name(v) : "x" + std::to_string(v);
      if (e[v] != 1) s += "^" + std::to_string(e[v]);
    }
    return s;
  }

 private:
  static LaurentPoly merge(const LaurentPoly& a, const LaurentPoly& b, int sign) {
    LaurentPoly r;
    r.t_.reserve(a.t_.size() + b.t_.size());
    size_t i = 0, j = 0;
    while (i < a.t_.size() || j < b.t_.size()) {
      if (j == b.t_.size() || (i < a.t_.size() && a.t_[i].e < b.t_[j].e)) {
        r.t_.push_back(a.t_[i++]);
      } else if (i == a.t_.size() || b.t_[j].e < a.t_[i].e) {
        r.t_.push_back({b.t_[j].e, sign > 0 ? b.t_[j].c : Rational(-b.t_[j].c)});
        ++j;
      } else {
        Rational c = sign > 0 ? Rational(a.t_[i].c + b.t_[j].c) : Rational(a.t_[i].c - b.t_[j].c);
        if (c != 0) r.t_.push_back({a.t_[i].e, c});
        ++i;
        ++j;
      }
    }
    return r;
  }

  void normalize() {
    std::sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) { return a.e < b.e; });
    size_t w = 0;
    for (size_t r = 0; r < t_.size();) {
      Exps e = t_[r].e;
      Rational c = t_[r].c;
      size_t k = r + 1;
      while (k < t_.size() && t_[k].e == e) c += t_[k++].c;
      if (c != 0) t_[w++] = {e, c};
      r = k;
    }
    t_.resize(w);
  }

  std::vector<Term> t_;
};

// Unbalanced quantum integer [k]_r = 1 + r + ... + r^{k-1}.
inline LaurentPoly qint(int k, const LaurentPoly& r) {
  if (k < 0) throw std::invalid_argument("qint: negative argument");
  LaurentPoly out, pw = 1;
  for (int i = 0; i < k; ++i) {
    out += pw;
    pw *= r;
  }
  return out;
}

inline LaurentPoly qfact(int k, const LaurentPoly& r) {
  LaurentPoly out = 1;
  for (int i = 1; i <= k; ++i) out *= qint(i, r);
  return out;
}

// Gaussian binomial via the q-Pascal rule, exact polynomial for 0 <= k <= m.
inline LaurentPoly qbinom(int m, int k, const LaurentPoly& r) {
  if (m < 0 || k < 0 || k > m) throw std::invalid_argument("qbinom: bad arguments");
  std::vector<LaurentPoly> pw{LaurentPoly(1)};
  for (int j = 1; j <= m; ++j) pw.push_back(pw.back() * r);
  // [i choose j] = [i-1 choose j-1] + r^j [i-1 choose j]
  std::vector<LaurentPoly> row{LaurentPoly(1)};
  for (int i = 1; i <= m; ++i) {
    std::vector<LaurentPoly> next(i + 1);
    for (int j = 0; j <= i; ++j) next[j] = (j == 0 || j == i) ? LaurentPoly(1) : row[j - 1] + pw[j] * row[j];
    row = std::move(next);
  }
  return row[k];
}

}  // namespace daha

#endif
