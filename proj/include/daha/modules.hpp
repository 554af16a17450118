#ifndef DAHA_MODULES_HPP
#define DAHA_MODULES_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "daha/daha.hpp"
#include "daha/hecke.hpp"
#include "daha/linalg.hpp"
#include "daha/normal_form.hpp"

namespace daha {

inline Rational rational_pow(const Rational& c, int k) {
  Rational r = 1, b = k < 0 ? Rational(1 / c) : c;
  for (int i = 0; i < std::abs(k); ++i) r *= b;
  return r;
}

// c * x^e in the base variable x of a specialized regime.
struct Mono {
  Rational c = 1;
  int e = 0;
  friend bool operator==(const Mono& a, const Mono& b) { return a.c == b.c && a.e == b.e; }
  friend bool operator!=(const Mono& a, const Mono& b) { return !(a == b); }
  friend bool operator<(const Mono& a, const Mono& b) { return a.e != b.e ? a.e < b.e : a.c < b.c; }
  RatFunc value() const { return RatFunc::monomial(e, c); }
};

// A point a = (a_1, ..., a_n) for the Y (or Z) variables.
class WeightPoint {
 public:
  WeightPoint() = default;
  WeightPoint(ParamsPtr P, std::vector<Mono> a) : P_(std::move(P)), a_(std::move(a)) {
    if (!P_->specialized()) throw std::invalid_argument("WeightPoint: a specialized regime (GL or SL) is required");
    if (static_cast<int>(a_.size()) != P_->n()) throw std::invalid_argument("WeightPoint: expected " + std::to_string(P_->n()) + " entries");
    for (const auto& m : a_)
      if (m.c == 0) throw std::invalid_argument("WeightPoint: entries must be nonzero");
    if (P_->regime() == Regime::SL) {
      Mono p = product();
      if (p.c != 1 || p.e != P_->zprod_exps()[0])
        throw std::invalid_argument("WeightPoint: SL weights must have product " + format_mono(Mono{1, P_->zprod_exps()[0]}));
    }
  }

  // entry := [rational "*"] "t^" integer | [rational "*"] "t^(" integer "/" integer ")"
  static WeightPoint parse(const ParamsPtr& P, const std::string& text) {
    static const std::regex re(R"(^(?:(-?\d+(?:/\d+)?)\*)?t\^(?:(-?\d+)|\((-?\d+)/(\d+)\))$)");
    std::vector<Mono> a;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
      std::smatch m;
      if (!std::regex_match(tok, m, re)) throw std::invalid_argument("bad weight entry '" + tok + "' (expected e.g. t^-2, 3*t^0, t^(1/2))");
      Mono x;
      if (m[1].matched) {
        x.c = Rational(m[1].str());
        x.c.canonicalize();
      }
      x.c.canonicalize();
      int d = P->t_degree();
      if (m[2].matched) {
        x.e = std::stoi(m[2].str()) * d;
      } else {
        int num = std::stoi(m[3].str()), den = std::stoi(m[4].str());
        if (den == 0 || (num * d) % den != 0)
          throw std::invalid_argument("weight entry '" + tok + "' is not a power of the base variable " + P->base_name());
        x.e = num * d / den;
      }
      a.push_back(x);
    }
    return WeightPoint(P, a);
  }

  // q^rho: a_i = q^{i-1}
  static WeightPoint qrho(const ParamsPtr& P) {
    std::vector<Mono> a;
    for (int i = 1; i <= P->n(); ++i) a.push_back(Mono{1, (i - 1) * P->q_exps()[0]});
    return WeightPoint(P, a);
  }

  const ParamsPtr& params() const { return P_; }
  int n() const { return static_cast<int>(a_.size()); }
  const std::vector<Mono>& entries() const { return a_; }
  const Mono& operator[](int j) const { return a_.at(j - 1); }  // j in 1..n

  // a_{r + mn} = q^{-m} a_r
  Mono ext(int j) const {
    int n = this->n();
    int r = mod1(j, n), m = (j - r) / n;
    Mono x = a_[r - 1];
    x.e -= m * P_->q_exps()[0];
    return x;
  }

  Mono product() const {
    Mono p;
    for (const auto& m : a_) {
      p.c *= m.c;
      p.e += m.e;
    }
    return p;
  }

  // value of the monomial X^e with parameters and Y variables substituted
  std::pair<Rational, int> eval_exps(const Exps& e) const {
    Rational c = 1;
    int k = 0;
    for (int v = 0; v < P_->num_params(); ++v) k += e[v];
    for (int j = 1; j <= n(); ++j) {
      int b = e[P_->yvar(j)];
      if (b == 0) continue;
      c *= rational_pow(a_[j - 1].c, b);
      k += b * a_[j - 1].e;
    }
    return {c, k};
  }
  auto point() const {
    return [this](const Exps& e) { return eval_exps(e); };
  }
  RatFunc eval(const LaurentPoly& p) const { return FactoredFraction::eval_poly(p, point()); }
  PointValue eval(const FactoredFraction& f) const { return f.eval(point()); }

  std::vector<RatFunc> values() const {
    std::vector<RatFunc> v;
    for (const auto& m : a_) v.push_back(m.value());
    return v;
  }

  std::string format_mono(const Mono& m) const {
    int d = P_->t_degree();
    std::string s = m.c == 1 ? "" : m.c.get_str() + "*";
    if (m.e % d == 0) return s + "t^" + std::to_string(m.e / d);
    int g = std::gcd(std::abs(m.e), d);
    return s + "t^(" + std::to_string(m.e / g) + "/" + std::to_string(d / g) + ")";
  }
  std::string to_string() const {
    std::string s;
    for (size_t i = 0; i < a_.size(); ++i) s += (i ? "," : "") + format_mono(a_[i]);
    return s;
  }

  friend bool operator==(const WeightPoint& a, const WeightPoint& b) { return a.a_ == b.a_; }
  friend bool operator!=(const WeightPoint& a, const WeightPoint& b) { return !(a == b); }
  friend bool operator<(const WeightPoint& a, const WeightPoint& b) { return a.a_ < b.a_; }

 private:
  ParamsPtr P_;
  std::vector<Mono> a_;
};

// (x . a)_j = a_{x^{-1}(j)}, with the loop twist lambda^{deg x} in SL: the Y_j-eigenvalue on the top term T_x (x) v.
inline WeightPoint act_weight(const AffinePerm& x, const WeightPoint& a) {
  const ParamsPtr& P = a.params();
  YSubst sub = P->perm_subst(x.inverse());
  std::vector<Mono> out;
  for (int j = 1; j <= a.n(); ++j) {
    auto [c, e] = a.eval_exps(sub.image[j]);
    out.push_back(Mono{c, e});
  }
  return WeightPoint(P, out);
}

// a_i / a_j = t^{2z} (t^{2z/N} in SL) with i < j forces z >= 0
inline bool descending(const WeightPoint& a) {
  const DahaParams& P = *a.params();
  int step = P.regime() == Regime::SL ? 2 * P.t_degree() / P.N() : 2 * P.t_degree();
  for (int i = 1; i <= a.n(); ++i)
    for (int j = i + 1; j <= a.n(); ++j) {
      if (a[i].c != a[j].c) continue;
      int d = a[i].e - a[j].e;
      if (d % step == 0 && d < 0) return false;
    }
  return true;
}

inline bool transverse(const WeightPoint& a) {
  for (int i = 1; i <= a.n(); ++i)
    for (int j = i + 1; j <= a.n(); ++j)
      if (a[i] == a[j]) return false;
  return true;
}

struct PoleAtWeight : std::runtime_error {
  PoleAtWeight(const AffinePerm& w, const std::string& coeff)
      : std::runtime_error("POLE_AT_WEIGHT at T" + w.to_string() + ": " + coeff), where(w) {}
  AffinePerm where;
};

template <class K>
using SparseVec = std::map<K, RatFunc>;

template <class K>
void add_to(SparseVec<K>& v, const K& k, const RatFunc& c) {
  if (c.is_zero()) return;
  auto& slot = v[k];
  slot += c;
  if (slot.is_zero()) v.erase(k);
}

template <class K>
SparseVec<K> scaled(const SparseVec<K>& v, const RatFunc& c) {
  SparseVec<K> r;
  if (c.is_zero()) return r;
  for (const auto& [k, x] : v) r.emplace(k, x * c);
  return r;
}

template <class K>
SparseVec<K> combine(const SparseVec<K>& a, const SparseVec<K>& b, const RatFunc& cb = RatFunc(1)) {
  SparseVec<K> r = a;
  for (const auto& [k, x] : b) add_to(r, k, x * cb);
  return r;
}

// Result of a triangular weight-space solve.
template <class K>
struct WeightSpace {
  std::vector<K> coset;  // basis keys whose diagonal weight is the target
  std::vector<K> ideal;  // the Y-stable set of keys the solve ran on
  std::vector<SparseVec<K>> basis;
  size_t generalized_dim() const { return coset.size(); }
};

// Simultaneous kernel of Y_j - target_j on span(order), where order lists keys so that Y_j applied to
// a key only produces that key and keys later in the list. cols[k][j] is Y_{j+1} applied to k.
template <class K>
WeightSpace<K> triangular_weight_space(const std::vector<K>& order, const std::map<K, std::vector<SparseVec<K>>>& cols,
                                       const std::vector<RatFunc>& target) {
  WeightSpace<K> out;
  out.ideal = order;
  size_t nY = target.size();
  std::map<K, size_t> pos;
  for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  auto diag = [&](const K& k, size_t j) {
    const auto& c = cols.at(k)[j];
    auto it = c.find(k);
    return it == c.end() ? RatFunc() : it->second;
  };
  // rows[y][j]: list of (x, coefficient of y in Y_j x) for x != y
  std::map<K, std::vector<std::vector<std::pair<K, RatFunc>>>> rows;
  for (const auto& k : order) rows[k].resize(nY);
  for (const auto& x : order)
    for (size_t j = 0; j < nY; ++j)
      for (const auto& [y, c] : cols.at(x)[j]) {
        auto it = pos.find(y);
        if (it == pos.end()) throw std::logic_error("weight space: Y-action leaves the key set");
        if (y == x) continue;
        if (it->second < pos[x]) throw std::logic_error("weight space: Y-action is not triangular in the given order");
        rows[y][j].emplace_back(x, c);
      }
  std::map<K, size_t> param;
  for (const auto& k : order) {
    bool hit = true;
    for (size_t j = 0; j < nY && hit; ++j)
      if (diag(k, j) != target[j]) hit = false;
    if (hit) {
      param[k] = out.coset.size();
      out.coset.push_back(k);
    }
  }
  size_t s = out.coset.size();
  if (s == 0) return out;
  // every coefficient as a linear form in the coset coefficients
  std::map<K, Vec> form;
  for (const auto& y : order) {
    Vec f(s);
    auto pit = param.find(y);
    if (pit != param.end()) {
      f[pit->second] = 1;
    } else {
      size_t j = 0;
      while (diag(y, j) == target[j]) ++j;
      RatFunc d = diag(y, j) - target[j];
      RatFunc inv = -d.inverse();
      for (const auto& [x, c] : rows[y][j]) {
        const Vec& fx = form.at(x);
        RatFunc m = c * inv;
        for (size_t p = 0; p < s; ++p)
          if (!fx[p].is_zero()) f[p] += m * fx[p];
      }
    }
    form[y] = std::move(f);
  }
  Mat constraints;
  for (const auto& y : order)
    for (size_t j = 0; j < nY; ++j) {
      Vec r(s);
      RatFunc d = diag(y, j) - target[j];
      if (!d.is_zero())
        for (size_t p = 0; p < s; ++p) r[p] = d * form[y][p];
      for (const auto& [x, c] : rows[y][j])
        for (size_t p = 0; p < s; ++p)
          if (!form[x][p].is_zero()) r[p] += c * form[x][p];
      if (!is_zero_vec(r)) constraints.push_back(std::move(r));
    }
  for (const auto& z : nullspace(constraints, s)) {
    SparseVec<K> v;
    for (const auto& y : order) {
      RatFunc c;
      for (size_t p = 0; p < s; ++p)
        if (!z[p].is_zero() && !form[y][p].is_zero()) c += z[p] * form[y][p];
      add_to(v, y, c);
    }
    out.basis.push_back(v);
  }
  return out;
}

// Ind_Y^H(a): basis T_x (x) v, x in the extended affine symmetric group.
class IndYModule {
 public:
  using Vector = SparseVec<AffinePerm>;

  explicit IndYModule(WeightPoint a) : a_(std::move(a)), P_(a_.params()) {}
  const WeightPoint& weight() const { return a_; }
  const ParamsPtr& params() const { return P_; }

  Vector unit() const { return Vector{{AffinePerm::identity(P_->n()), RatFunc(1)}}; }
  AffinePerm key(const AffinePerm& x) const { return P_->normalize_perm(x); }

  Vector act(const DahaElement& h, const Vector& m) const {
    Vector out;
    for (const auto& [x, c] : m) {
      DahaElement hx = h.mul_Tw(x);
      for (const auto& [y, g] : hx.terms()) add_to(out, key(y), a_.eval(g) * c);
    }
    return out;
  }
  Vector act(const LocDahaElement& h, const Vector& m) const {
    Vector out;
    for (const auto& [x, c] : m) {
      LocDahaElement hx = h.mul_Tw(x);
      for (const auto& [y, g] : hx.terms()) {
        PointValue pv = a_.eval(g);
        if (pv.is_pole()) throw PoleAtWeight(y, g.to_string(P_->vars()));
        add_to(out, key(y), *pv.value * c);
      }
    }
    return out;
  }
  // T_x (x) v for a single x, acted on by h; the vector of an element h is act(h, unit())
  Vector of(const DahaElement& h) const { return act(h, unit()); }

  // {x : x . a = target}; finite because q is a nontrivial power of the base variable
  std::vector<AffinePerm> weight_coset(const WeightPoint& target) const {
    int n = P_->n();
    int q0 = P_->q_exps()[0];
    bool sl = P_->regime() == Regime::SL;
    std::set<AffinePerm> found;
    for (int k = 0; k < (sl ? n : 1); ++k) {
      int shift = sl ? k * P_->pi_twist()[0] : 0;
      std::vector<std::vector<int>> cand(n);
      for (int j = 1; j <= n; ++j)
        for (int r = 1; r <= n; ++r) {
          const Mono& ar = a_[r];
          const Mono& tj = target[j];
          if (ar.c != tj.c) continue;
          int d = ar.e + shift - tj.e;
          if (d % q0 != 0) continue;
          cand[j - 1].push_back(r + (d / q0) * n);
        }
      std::vector<int> win(n);
      std::function<void(int)> rec = [&](int j) {
        if (j == n) {
          std::set<int> res;
          for (int i : win) res.insert(mod1(i, n));
          if (static_cast<int>(res.size()) != n) return;
          AffinePerm x = AffinePerm::from_window(win).inverse();
          if (sl && mod1(x.pi_degree() + 1, n) - 1 != k) return;
          x = key(x);
          if (act_weight(x, a_) == target) found.insert(x);
          return;
        }
        for (int i : cand[j]) {
          win[j] = i;
          rec(j + 1);
        }
      };
      rec(0);
    }
    return std::vector<AffinePerm>(found.begin(), found.end());
  }

  // Y_j applied to T_x (x) v for every j, the columns of the Y-action
  std::vector<Vector> y_columns(const AffinePerm& x) const {
    std::vector<Vector> out;
    Vector tx{{x, RatFunc(1)}};
    for (int j = 1; j <= P_->n(); ++j) out.push_back(act(gen_Y(P_, j), tx));
    return out;
  }

  // keys of the Bruhat order ideal generated by the coset, longest first
  std::vector<AffinePerm> ideal_order(const std::vector<AffinePerm>& gens) const {
    std::set<AffinePerm> ideal = order_ideal(gens);
    std::vector<AffinePerm> order;
    for (const auto& x : ideal) order.push_back(key(x));
    std::stable_sort(order.begin(), order.end(), [](const AffinePerm& a, const AffinePerm& b) { return a.length() > b.length(); });
    return order;
  }

  WeightSpace<AffinePerm> weight_space(const WeightPoint& target) const {
    std::vector<AffinePerm> coset = weight_coset(target);
    if (coset.empty()) return {};
    std::vector<AffinePerm> order = ideal_order(coset);
    std::map<AffinePerm, std::vector<Vector>> cols;
    for (const auto& x : order) cols[x] = y_columns(x);
    std::vector<RatFunc> tv = target.values();
    WeightSpace<AffinePerm> ws = triangular_weight_space(order, cols, tv);
    if (ws.coset.size() != coset.size()) throw std::logic_error("weight space: diagonal weights disagree with the coset");
    return ws;
  }

  size_t generalized_weight_dim(const WeightPoint& target) const { return weight_coset(target).size(); }

 private:
  WeightPoint a_;
  ParamsPtr P_;
};

// Dense generalized eigenspace on the ideal: kernel of (Y_j - target_j)^d stacked over j.
inline size_t dense_generalized_dim(const IndYModule& M, const WeightPoint& target) {
  std::vector<AffinePerm> coset = M.weight_coset(target);
  if (coset.empty()) return 0;
  std::vector<AffinePerm> order = M.ideal_order(coset);
  size_t d = order.size();
  std::map<AffinePerm, size_t> idx;
  for (size_t i = 0; i < d; ++i) idx[order[i]] = i;
  std::vector<Mat> A(M.params()->n(), zero_mat(d, d));
  for (size_t c = 0; c < d; ++c) {
    auto cols = M.y_columns(order[c]);
    for (size_t j = 0; j < cols.size(); ++j)
      for (const auto& [y, v] : cols[j]) A[j][idx.at(y)][c] = v;
  }
  Mat stacked;
  std::vector<RatFunc> tv = target.values();
  for (size_t j = 0; j < A.size(); ++j) {
    Mat B = A[j];
    for (size_t i = 0; i < d; ++i) B[i][i] -= tv[j];
    Mat P = identity_mat(d);
    for (size_t k = 0; k < d; ++k) P = mat_mul(P, B);
    for (auto& row : P) stacked.push_back(row);
  }
  return nullspace(stacked, d).size();
}

// Dense n!-dimensional Ind_Y^{H(Y)}(a) on the basis T_w (x) v, w in S_n.
struct AhaModule {
  std::vector<AffinePerm> basis;
  std::vector<Mat> T;  // T_1..T_{n-1}
  std::vector<Mat> Y;  // Y_1..Y_n
};

inline AhaModule aha_module(const WeightPoint& a) {
  const ParamsPtr& P = a.params();
  int n = P->n();
  IndYModule M(a);
  AhaModule out;
  out.basis = symmetric_group(n);
  size_t d = out.basis.size();
  std::map<AffinePerm, size_t> idx;
  for (size_t i = 0; i < d; ++i) idx[out.basis[i]] = i;
  auto matrix = [&](const DahaElement& h) {
    Mat m = zero_mat(d, d);
    for (size_t c = 0; c < d; ++c)
      for (const auto& [y, v] : M.act(h, IndYModule::Vector{{out.basis[c], RatFunc(1)}})) m[idx.at(y)][c] = v;
    return m;
  };
  for (int i = 1; i < n; ++i) out.T.push_back(matrix(gen_T(P, i)));
  for (int j = 1; j <= n; ++j) out.Y.push_back(matrix(gen_Y(P, j)));
  return out;
}

inline Vec to_dense(const IndYModule::Vector& v, const std::vector<AffinePerm>& basis) {
  Vec out(basis.size());
  for (size_t i = 0; i < basis.size(); ++i) {
    auto it = v.find(basis[i]);
    if (it != v.end()) out[i] = it->second;
  }
  return out;
}

struct IndShReport {
  bool descending = false;
  std::vector<RelationCheck> checks;
  size_t generation_rank = 0;
  RatFunc g_constant;
  bool pass() const {
    if (!descending) return false;
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

inline std::string vector_to_string(const IndYModule::Vector& v, const std::string& var) {
  if (v.empty()) return "0";
  std::string s;
  for (const auto& [x, c] : v) s += (s.empty() ? "" : " + ") + std::string("(") + c.to_string(var) + ") * T" + x.to_string();
  return s;
}

// e- (x) v: annihilation by T_i + t^{-1} and by the power sums, generation, and the g(Y) constant.
inline IndShReport check_ind_sh(const WeightPoint& a) {
  const ParamsPtr& P = a.params();
  int n = P->n(), td = P->t_degree();
  std::string var = P->base_name();
  IndShReport rep;
  rep.descending = descending(a);
  if (!rep.descending) {
    rep.checks.push_back({"NOT_DESCENDING", false, a.to_string()});
    return rep;
  }
  IndYModule M(a);
  IndYModule::Vector e;
  FinHeckeElt em = idempotent(n, IdempotentKind::Sign, td);
  for (const auto& [w, c] : em.terms()) add_to(e, w, c);
  auto chk = [&](const std::string& name, const IndYModule::Vector& v) {
    rep.checks.push_back({name, v.empty(), v.empty() ? "" : vector_to_string(v, var)});
  };
  RatFunc tinv = RatFunc::monomial(-td);
  for (int i = 1; i < n; ++i) chk("(T" + std::to_string(i) + " + t^-1) e-", combine(M.act(gen_T(P, i), e), e, tinv));
  for (int m = 1; m <= n; ++m) {
    DahaElement ps(P);
    for (int i = 1; i <= n; ++i) {
      Mono am = a[i];
      ps += gen_Y(P, i, m) - gen_scalar(P, LaurentPoly::monomial(m * am.e * unit_exps(0), rational_pow(am.c, m)));
    }
    chk("sum (Y_i^" + std::to_string(m) + " - a_i^" + std::to_string(m) + ") e-", M.act(ps, e));
  }
  // generation: close span{e} under T_i and Y_j
  std::vector<AffinePerm> basis = symmetric_group(n);
  RowSpace span(basis.size());
  std::vector<IndYModule::Vector> frontier{e};
  span.insert(to_dense(e, basis));
  std::vector<DahaElement> gens;
  for (int i = 1; i < n; ++i) gens.push_back(gen_T(P, i));
  for (int j = 1; j <= n; ++j) gens.push_back(gen_Y(P, j));
  while (!frontier.empty()) {
    std::vector<IndYModule::Vector> next;
    for (const auto& v : frontier)
      for (const auto& g : gens) {
        IndYModule::Vector w = M.act(g, v);
        if (span.insert(to_dense(w, basis))) next.push_back(w);
      }
    frontier = std::move(next);
  }
  rep.generation_rank = span.dim();
  rep.checks.push_back({"generation rank n!", span.dim() == basis.size(),
                        "rank " + std::to_string(span.dim()) + " of " + std::to_string(basis.size())});
  // g(Y) = prod_{i<j} (Y_i - a_j)
  DahaElement g = gen_one(P);
  RatFunc fprod = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Mono aj = a[j];
      g = g * (gen_Y(P, i) - gen_scalar(P, LaurentPoly::monomial(aj.e * unit_exps(0), aj.c)));
      fprod *= a.eval(P->f_poly(i, j));
    }
  RatFunc qf = ratfunc_of(qfact(n, LaurentPoly::var(0, 2 * td)));
  rep.g_constant = RatFunc::monomial(td * n * (n - 1) / 2) / qf * fprod;
  IndYModule::Vector ge = M.act(g, e);
  IndYModule::Vector expect = scaled(M.unit(), rep.g_constant);
  rep.checks.push_back({"g(Y) e- = t^{n(n-1)/2}/[n]! prod f_ij(a)", ge == expect,
                        ge == expect ? rep.g_constant.to_string(var) : "got " + vector_to_string(ge, var)});
  return rep;
}

// One-dimensional AHA module: T_i -> t (trivial) or -t^{-1} (sign), Y -> c.
struct AhaCharacter {
  bool trivial = true;
  WeightPoint c;
};

// Ind_{H(Y)}^H(chi) on the basis X^alpha (x) m.
class IndAhaModule {
 public:
  using Key = std::vector<int>;
  using Vector = SparseVec<Key>;

  explicit IndAhaModule(AhaCharacter chi) : chi_(std::move(chi)), P_(chi_.c.params()) {
    if (P_->regime() != Regime::GL) throw std::invalid_argument("IndAhaModule: GL regime only");
    int td = P_->t_degree();
    int step = chi_.trivial ? 2 * td : -2 * td;
    for (int i = 1; i < P_->n(); ++i)
      if (chi_.c[i + 1].c != chi_.c[i].c || chi_.c[i + 1].e != chi_.c[i].e + step)
        throw std::invalid_argument("inconsistent character: T_i Y_i T_i = Y_{i+1} forces c_{i+1} = chi(T)^2 c_i");
  }
  const ParamsPtr& params() const { return P_; }
  const AhaCharacter& character() const { return chi_; }

  RatFunc chi_T() const {
    int td = P_->t_degree();
    return chi_.trivial ? RatFunc::monomial(td) : RatFunc::monomial(-td, -1);
  }

  Vector act(const DahaElement& h, const Vector& m) const {
    Vector out;
    RatFunc ct = chi_T();
    for (const auto& [alpha, c] : m) {
      DualForm d = dual_normal_form(h * x_monomial(P_, alpha));
      for (const auto& [key, k] : d) {
        const auto& [a2, sigma, gamma] = key;
        Exps ge{};
        for (int j = 0; j < P_->n(); ++j) ge[P_->yvar(j + 1)] = gamma[j];
        RatFunc v = chi_.c.eval(k) * ct.pow(AffinePerm::from_window(sigma).length()) * chi_.c.eval(LaurentPoly::monomial(ge));
        add_to(out, a2, v * c);
      }
    }
    return out;
  }

  std::vector<Vector> y_columns(const Key& alpha) const {
    std::vector<Vector> out;
    for (int j = 1; j <= P_->n(); ++j) out.push_back(act(gen_Y(P_, j), Vector{{alpha, RatFunc(1)}}));
    return out;
  }

  WeightPoint diagonal_weight(const Key& alpha) const {
    std::vector<Mono> w;
    for (const auto& col : y_columns(alpha)) {
      auto it = col.find(alpha);
      if (it == col.end()) throw std::logic_error("diagonal weight vanishes");
      const RatFunc& v = it->second;
      if (v.num().valuation() != v.num().degree() || v.den().valuation() != v.den().degree())
        throw std::logic_error("diagonal weight is not a monomial");
      int e = v.num().degree() - v.den().degree();
      w.push_back(Mono{v.num().lead() / v.den().lead(), e});
    }
    return WeightPoint(P_, w);
  }

  // every alpha with diagonal weight equal to target; the weight entries are q^{alpha_j}-shifts of the
  // character entries by at most t^{2(n-1)}, which bounds alpha
  std::vector<Key> weight_coset(const WeightPoint& target) const {
    int n = P_->n(), q0 = std::abs(P_->q_exps()[0]);
    int spread = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) spread = std::max(spread, std::abs(target[i].e - chi_.c[j].e));
    int bound = (spread + 2 * n * P_->t_degree()) / q0 + 1;
    std::vector<Key> out;
    Key alpha(n, -bound);
    while (true) {
      if (diagonal_weight(alpha) == target) out.push_back(alpha);
      int i = 0;
      while (i < n && alpha[i] == bound) alpha[i++] = -bound;
      if (i == n) break;
      ++alpha[i];
    }
    return out;
  }

  // Y-stable closure of the coset, topologically ordered so the action only moves later
  struct Closure {
    std::vector<Key> order;
    std::map<Key, std::vector<Vector>> cols;
  };
  Closure closure(const std::vector<Key>& gens, size_t limit = 4000) const {
    Closure c;
    std::vector<Key> stack(gens.begin(), gens.end());
    while (!stack.empty()) {
      Key k = stack.back();
      stack.pop_back();
      if (c.cols.count(k)) continue;
      if (c.cols.size() >= limit) throw std::runtime_error("IndAhaModule: Y-closure exceeds " + std::to_string(limit) + " keys");
      c.cols[k] = y_columns(k);
      for (const auto& col : c.cols[k])
        for (const auto& [b, v] : col)
          if (!c.cols.count(b)) stack.push_back(b);
    }
    // Kahn's algorithm on edges k -> b (b != k)
    std::map<Key, int> indeg;
    for (const auto& [k, cols] : c.cols) indeg[k];
    for (const auto& [k, cols] : c.cols) {
      std::set<Key> succ;
      for (const auto& col : cols)
        for (const auto& [b, v] : col)
          if (b != k) succ.insert(b);
      for (const auto& b : succ) ++indeg[b];
    }
    std::vector<Key> ready;
    for (const auto& [k, d] : indeg)
      if (d == 0) ready.push_back(k);
    while (!ready.empty()) {
      Key k = ready.back();
      ready.pop_back();
      c.order.push_back(k);
      std::set<Key> succ;
      for (const auto& col : c.cols[k])
        for (const auto& [b, v] : col)
          if (b != k) succ.insert(b);
      for (const auto& b : succ)
        if (--indeg[b] == 0) ready.push_back(b);
    }
    if (c.order.size() != c.cols.size()) throw std::logic_error("IndAhaModule: Y-action is not triangular");
    return c;
  }

  WeightSpace<Key> weight_space(const WeightPoint& target) const {
    std::vector<Key> coset = weight_coset(target);
    if (coset.empty()) return {};
    Closure c = closure(coset);
    return triangular_weight_space(c.order, c.cols, target.values());
  }

 private:
  AhaCharacter chi_;
  ParamsPtr P_;
};

// Standard order on compositions: beta below alpha when the sorted parts of beta are strictly
// dominated by those of alpha, or the sorted parts agree and beta != alpha.
inline bool composition_below(const std::vector<int>& beta, const std::vector<int>& alpha) {
  if (beta == alpha) return false;
  std::vector<int> b = beta, a = alpha;
  std::sort(b.rbegin(), b.rend());
  std::sort(a.rbegin(), a.rend());
  if (b == a) return true;
  int sa = 0, sb = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    sa += a[i];
    sb += b[i];
    if (sb > sa) return false;
  }
  return sa == sb;
}

}  // namespace daha

#endif
