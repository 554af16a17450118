#ifndef DAHA_AFFINE_PERM_HPP
#define DAHA_AFFINE_PERM_HPP

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace daha {

inline constexpr int kMaxN = 6;

inline int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
inline int ceil_div(int a, int b) { return -floor_div(-a, b); }
// representative of a modulo n in 1..n
inline int mod1(int a, int n) { return a - n * floor_div(a - 1, n); }

struct ReducedWord {
  int pi_power = 0;
  std::vector<int> letters;  // indices in 0..n-1, read left to right

  std::string to_string() const {
    std::ostringstream os;
    os << "pi^" << pi_power << " .";
    for (int i : letters) os << " s" << i;
    return os.str();
  }
};

using InversionSet = std::vector<std::pair<int, int>>;

// Extended affine permutation of Z with w(i + n) = w(i) + n, stored by its window.
class AffinePerm {
 public:
  AffinePerm() = default;

  static AffinePerm identity(int n) {
    AffinePerm a;
    a.n_ = check_n(n);
    for (int i = 0; i < n; ++i) a.w_[i] = i + 1;
    return a;
  }
  static AffinePerm from_window(const std::vector<int>& win) {
    AffinePerm a;
    a.n_ = check_n(static_cast<int>(win.size()));
    std::vector<bool> seen(a.n_, false);
    for (int i = 0; i < a.n_; ++i) {
      a.w_[i] = win[i];
      int r = mod1(win[i], a.n_) - 1;
      if (seen[r]) throw std::invalid_argument("AffinePerm: window entries not distinct modulo n");
      seen[r] = true;
    }
    return a;
  }
  // s_i for i in 0..n-1 (s_0 exchanges 0 and 1)
  static AffinePerm s(int n, int i) {
    AffinePerm a = identity(n);
    i = ((i % n) + n) % n;
    if (i == 0) {
      a.w_[0] = 0;
      a.w_[n - 1] = n + 1;
    } else {
      std::swap(a.w_[i - 1], a.w_[i]);
    }
    return a;
  }
  static AffinePerm pi(int n, int k = 1) {
    AffinePerm a;
    a.n_ = check_n(n);
    for (int i = 0; i < n; ++i) a.w_[i] = i + 1 + k;
    return a;
  }
  // i -> i + n * beta_i
  static AffinePerm translation(const std::vector<int>& beta) {
    AffinePerm a;
    a.n_ = check_n(static_cast<int>(beta.size()));
    for (int i = 0; i < a.n_; ++i) a.w_[i] = i + 1 + a.n_ * beta[i];
    return a;
  }
  // translation by -rho = (0, -1, ..., 1-n)
  static AffinePerm gamma(int n) {
    std::vector<int> b(n);
    for (int i = 0; i < n; ++i) b[i] = -i;
    return translation(b);
  }
  static AffinePerm from_finite(const std::vector<int>& perm) { return from_window(perm); }

  int n() const { return n_; }
  // value at any integer
  int operator()(int i) const {
    int r = mod1(i, n_);
    return w_[r - 1] + (i - r);
  }
  std::vector<int> window() const { return std::vector<int>(w_.begin(), w_.begin() + n_); }

  AffinePerm operator*(const AffinePerm& b) const {
    if (n_ != b.n_) throw std::invalid_argument("AffinePerm: mismatched n");
    AffinePerm c;
    c.n_ = n_;
    for (int i = 0; i < n_; ++i) c.w_[i] = (*this)(b.w_[i]);
    return c;
  }
  AffinePerm inverse() const {
    AffinePerm c;
    c.n_ = n_;
    for (int r = 1; r <= n_; ++r) {
      int v = w_[r - 1];
      int s = mod1(v, n_);
      c.w_[s - 1] = r - (v - s);
    }
    return c;
  }

  int pi_degree() const {
    int s = 0;
    for (int i = 0; i < n_; ++i) s += w_[i] - (i + 1);
    return s / n_;
  }
  bool is_identity() const {
    for (int i = 0; i < n_; ++i)
      if (w_[i] != i + 1) return false;
    return true;
  }
  bool is_finite() const {
    for (int i = 0; i < n_; ++i)
      if (w_[i] < 1 || w_[i] > n_) return false;
    return true;
  }

  int length() const {
    int len = 0;
    for (int i = 1; i <= n_; ++i)
      for (int r = 1; r <= n_; ++r) len += count_pairs(i, r);
    return len;
  }
  // pairs (i, j), 1 <= i <= n, i < j, w(i) > w(j), ordered by (i, j)
  InversionSet inversions() const {
    InversionSet out;
    for (int i = 1; i <= n_; ++i)
      for (int r = 1; r <= n_; ++r) {
        int lo = floor_div(i - r, n_) + 1;
        int hi = ceil_div(w_[i - 1] - w_[r - 1], n_) - 1;
        for (int m = lo; m <= hi; ++m) out.emplace_back(i, r + m * n_);
      }
    std::sort(out.begin(), out.end());
    return out;
  }

  // s_i is a right descent iff w(i) > w(i+1)
  bool has_right_descent(int i) const { return (*this)(i) > (*this)(i + 1); }
  bool has_left_descent(int i) const { return inverse().has_right_descent(i); }

  ReducedWord reduced_word() const {
    ReducedWord rw;
    rw.pi_power = pi_degree();
    AffinePerm u = pi(n_, -rw.pi_power) * (*this);
    std::vector<int> rev;
    while (!u.is_identity()) {
      int i = 0;
      while (!u.has_right_descent(i)) ++i;
      rev.push_back(i);
      u = u * s(n_, i);
    }
    rw.letters.assign(rev.rbegin(), rev.rend());
    return rw;
  }

  static AffinePerm from_word(int n, const ReducedWord& rw) {
    AffinePerm a = pi(n, rw.pi_power);
    for (int i : rw.letters) a = a * s(n, i);
    return a;
  }

  friend bool operator==(const AffinePerm& a, const AffinePerm& b) { return a.n_ == b.n_ && a.w_ == b.w_; }
  friend bool operator!=(const AffinePerm& a, const AffinePerm& b) { return !(a == b); }
  friend bool operator<(const AffinePerm& a, const AffinePerm& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.w_ < b.w_;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < n_; ++i) os << (i ? "," : "") << w_[i];
    os << "]";
    return os.str();
  }

 private:
  static int check_n(int n) {
    if (n < 1 || n > kMaxN) throw std::invalid_argument("AffinePerm: n out of range");
    return n;
  }
  // #{m : j = r + m n > i and w(j) < w(i)}
  int count_pairs(int i, int r) const {
    int lo = floor_div(i - r, n_) + 1;
    int hi = ceil_div(w_[i - 1] - w_[r - 1], n_) - 1;
    return hi >= lo ? hi - lo + 1 : 0;
  }

  int n_ = 0;
  std::array<int, kMaxN> w_{};
};

// Additive action (w.b)_i = b_{w^{-1}(i)} with b_{i+mn} = b_i - m p.
inline std::vector<int> act_int(const AffinePerm& w, const std::vector<int>& b, int p = 1) {
  int n = w.n();
  if (static_cast<int>(b.size()) != n) throw std::invalid_argument("act_int: size mismatch");
  AffinePerm inv = w.inverse();
  std::vector<int> out(n);
  for (int i = 1; i <= n; ++i) {
    int j = inv(i);
    int r = mod1(j, n);
    int m = (j - r) / n;
    out[i - 1] = b[r - 1] - m * p;
  }
  return out;
}

// Bruhat order; elements of different pi-degree are incomparable.
inline bool bruhat_leq(const AffinePerm& x, const AffinePerm& y) {
  if (x.n() != y.n() || x.pi_degree() != y.pi_degree()) return false;
  int lx = x.length(), ly = y.length();
  AffinePerm a = x, b = y;
  while (true) {
    if (lx > ly) return false;
    if (ly == 0) return a == b;
    int i = 0;
    while (!b.has_right_descent(i)) ++i;
    AffinePerm s = AffinePerm::s(a.n(), i);
    if (a.has_right_descent(i)) {
      a = a * s;
      --lx;
    }
    b = b * s;
    --ly;
  }
}

// {y : y <= x} via [e, x] = [e, xs] u [e, xs] s for a right descent s.
inline std::set<AffinePerm> lower_interval(const AffinePerm& x) {
  if (x.length() == 0) return {x};
  int i = 0;
  while (!x.has_right_descent(i)) ++i;
  AffinePerm s = AffinePerm::s(x.n(), i);
  std::set<AffinePerm> lower = lower_interval(x * s);
  std::vector<AffinePerm> add;
  for (const auto& y : lower) add.push_back(y * s);
  lower.insert(add.begin(), add.end());
  return lower;
}

inline std::set<AffinePerm> order_ideal(const std::vector<AffinePerm>& gens) {
  std::set<AffinePerm> out;
  for (const auto& g : gens) {
    if (out.count(g)) continue;
    auto l = lower_interval(g);
    out.insert(l.begin(), l.end());
  }
  return out;
}

// All finite permutations of S_n as affine windows, in lexicographic order.
inline std::vector<AffinePerm> symmetric_group(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  std::vector<AffinePerm> out;
  do out.push_back(AffinePerm::from_window(p));
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Every element of pi-degree 0 with length <= max_len, by breadth-first search on s_0..s_{n-1}.
inline std::vector<AffinePerm> elements_up_to_length(int n, int max_len) {
  std::vector<AffinePerm> out{AffinePerm::identity(n)};
  std::set<AffinePerm> seen{out[0]};
  size_t start = 0;
  for (int len = 1; len <= max_len; ++len) {
    size_t end = out.size();
    for (size_t k = start; k < end; ++k)
      for (int i = 0; i < n; ++i) {
        AffinePerm y = out[k] * AffinePerm::s(n, i);
        if (y.length() == len && seen.insert(y).second) out.push_back(y);
      }
    start = end;
  }
  return out;
}

// Inversions classified relative to rho (n = N): vanishing iff j - i = 0 mod (n+1), singular iff = n mod (n+1).
struct InvClass {
  InversionSet vanishing, singular, neutral;
};

inline InvClass classify_inversions_rho(const AffinePerm& w) {
  InvClass c;
  int n = w.n();
  for (auto [i, j] : w.inversions()) {
    int d = ((j - i) % (n + 1) + (n + 1)) % (n + 1);
    if (d == 0)
      c.vanishing.emplace_back(i, j);
    else if (d == n)
      c.singular.emplace_back(i, j);
    else
      c.neutral.emplace_back(i, j);
  }
  return c;
}

struct InversionBijections {
  InversionSet domain;                        // Inv(w) for finite w
  InversionSet alpha_image, beta_image;       // images, in the order of domain
  InversionSet inv0, inv_inf;                 // vanishing / singular inversions of gamma^{-1} w gamma
  bool alpha_bijective = false, beta_bijective = false;
};

inline InversionBijections inversion_bijections(const AffinePerm& w) {
  if (!w.is_finite()) throw std::invalid_argument("inversion_bijections: w must lie in S_n");
  int n = w.n();
  AffinePerm g = AffinePerm::gamma(n);
  AffinePerm u = g.inverse() * w * g;
  InvClass c = classify_inversions_rho(u);
  InversionBijections out;
  out.domain = w.inversions();
  out.inv0 = c.vanishing;
  out.inv_inf = c.singular;
  for (auto [i, j] : out.domain) {
    out.alpha_image.emplace_back(i, j + (j - i) * n);
    out.beta_image.emplace_back(i, j + (j - i + 1) * n);
  }
  auto same_set = [](InversionSet a, InversionSet b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return std::adjacent_find(a.begin(), a.end()) == a.end() && a == b;
  };
  out.alpha_bijective = same_set(out.alpha_image, out.inv0);
  out.beta_bijective = same_set(out.beta_image, out.inv_inf);
  return out;
}

}  // namespace daha

#endif
