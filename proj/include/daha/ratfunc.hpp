#ifndef DAHA_RATFUNC_HPP
#define DAHA_RATFUNC_HPP

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "daha/laurent.hpp"

namespace daha {

// Dense univariate polynomial over Q; c[k] is the coefficient of x^k, no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  UPoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) c_.push_back(c);
  }
  explicit UPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }
  static UPoly x_pow(int k, const Rational& c = 1) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return UPoly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& lead() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational operator[](int k) const { return k < static_cast<int>(c_.size()) ? c_[k] : Rational(0); }
  // lowest power with nonzero coefficient
  int valuation() const {
    for (size_t k = 0; k < c_.size(); ++k)
      if (c_[k] != 0) return static_cast<int>(k);
    return -1;
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return UPoly(std::move(v));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
    return UPoly(std::move(v));
  }
  UPoly operator-() const {
    UPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(v));
  }
  UPoly scaled(const Rational& s) const {
    if (s == 0) return {};
    UPoly r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
  }
  UPoly shifted(int k) const {  // multiply by x^k, k >= 0
    if (is_zero()) return {};
    std::vector<Rational> v(k, Rational(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return UPoly(std::move(v));
  }

  static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    if (b.is_zero()) throw std::domain_error("UPoly: division by zero");
    r = a;
    if (a.degree() < b.degree()) {
      q = UPoly();
      return;
    }
    std::vector<Rational> qv(a.degree() - b.degree() + 1);
    std::vector<Rational> rv = a.c_;
    Rational inv = 1 / b.lead();
    for (int k = a.degree(); k >= b.degree(); --k) {
      if (rv[k] == 0) continue;
      Rational f = rv[k] * inv;
      qv[k - b.degree()] = f;
      for (int j = 0; j <= b.degree(); ++j) rv[k - b.degree() + j] -= f * b.c_[j];
    }
    q = UPoly(std::move(qv));
    r = UPoly(std::move(rv));
  }

  UPoly monic() const { return is_zero() ? *this : scaled(1 / lead()); }

  static UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
      UPoly q, r;
      divmod(a, b, q, r);
      a = std::move(b);
      b = r.is_zero() ? r : r.monic();
    }
    return a.monic();
  }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  // Laurent-style text in variable `var`, after dividing by var^shift.
  std::string to_string(const std::string& var, int shift = 0) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < static_cast<int>(c_.size()); ++k) {
      if (c_[k] == 0) continue;
      Rational c = c_[k];
      bool neg = c < 0;
      if (neg) c = -c;
      os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      first = false;
      int e = k - shift;
      if (e == 0) {
        os << c.get_str();
      } else {
        if (c != 1) os << c.get_str() << " * ";
        os << var;
        if (e != 1) os << "^" << e;
      }
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

// Element of Q(x): num/den with gcd 1 and monic den.
class RatFunc {
 public:
  RatFunc() : den_(Rational(1)) {}
  RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(int c) : RatFunc(Rational(c)) {}                     // NOLINT(google-explicit-constructor)
  RatFunc(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

  // c * x^k for any integer k
  static RatFunc monomial(int k, const Rational& c = 1) {
    if (k >= 0) return RatFunc(UPoly::x_pow(k, c), UPoly(Rational(1)));
    return RatFunc(UPoly(c), UPoly::x_pow(-k));
  }
  // Laurent polynomial given as exponent -> coefficient
  static RatFunc laurent(const std::map<int, Rational>& terms) {
    if (terms.empty()) return RatFunc();
    int lo = terms.begin()->first;
    int shift = lo < 0 ? -lo : 0;
    std::vector<Rational> v;
    for (const auto& [k, c] : terms) {
      size_t idx = static_cast<size_t>(k + shift);
      if (v.size() <= idx) v.resize(idx + 1);
      v[idx] += c;
    }
    return RatFunc(UPoly(std::move(v)), UPoly::x_pow(shift));
  }

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  Rational constant() const { return num_[0]; }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    if (a.is_constant()) return b.scaled(a.constant());
    if (b.is_constant()) return a.scaled(b.constant());
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  RatFunc inverse() const {
    if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc scaled(const Rational& c) const {
    if (c == 0) return RatFunc();
    RatFunc r = *this;
    r.num_ = r.num_.scaled(c);
    return r;
  }
  RatFunc pow(int k) const {
    RatFunc base = k >= 0 ? *this : inverse(), out(1);
    for (int i = 0; i < (k >= 0 ? k : -k); ++i) out *= base;
    return out;
  }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  // Laurent form when the denominator is a power of x, otherwise (num)/(den).
  std::string to_string(const std::string& var = "t") const {
    int dv = den_.degree();
    if (den_ == UPoly::x_pow(dv)) return num_.to_string(var, dv);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
  }

 private:
  void canonicalize() {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    if (num_.is_zero()) {
      den_ = UPoly(Rational(1));
      return;
    }
    if (den_.degree() > 0 && den_.valuation() == den_.degree()) {
      int m = std::min(num_.valuation(), den_.degree());
      if (m > 0) {
        num_ = UPoly(std::vector<Rational>(num_.coeffs().begin() + m, num_.coeffs().end()));
        den_ = UPoly::x_pow(den_.degree() - m, den_.lead());
      }
    } else if (den_.degree() > 0) {
      UPoly g = UPoly::gcd(num_, den_);
      if (g.degree() > 0) {
        UPoly q, r;
        UPoly::divmod(num_, g, q, r);
        num_ = q;
        UPoly::divmod(den_, g, q, r);
        den_ = q;
      }
    }
    Rational l = den_.lead();
    if (l != 1) {
      num_ = num_.scaled(1 / l);
      den_ = den_.scaled(1 / l);
    }
  }

  UPoly num_, den_;
};

}  // namespace daha

#endif
