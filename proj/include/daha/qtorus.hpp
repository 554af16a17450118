// Quantum torus smash product D_q # S_N, its induced modules and the Springer decomposition.
#ifndef DAHA_QTORUS_HPP
#define DAHA_QTORUS_HPP

#include <map>
#include <random>
#include <string>
#include <vector>

#include "daha/endo.hpp"

namespace daha {

// Coefficients live in Q(z), z the base variable; q = z^qz.
// SL: Y_i X_j = q^{delta_ij - 1/N} X_j Y_i, X^(1..1) = 1 and Y^(1..1) = z^zeta_e.
struct QtParams {
  int N = 2;
  bool sl = false;
  int qz = -2;
  int zeta_e = 0;
  std::string var = "t";

  static QtParams from(const ParamsPtr& P) {
    if (P->regime() == Regime::Generic) throw std::invalid_argument("quantum torus: specialized regime required");
    if (P->n() != P->N() && P->regime() == Regime::SL) throw std::invalid_argument("quantum torus: n = N required");
    QtParams q;
    q.N = P->n();
    q.sl = P->regime() == Regime::SL;
    q.qz = P->q_exps()[0];
    q.zeta_e = q.sl ? P->zprod_exps()[0] : 0;
    q.var = P->base_name();
    if (q.sl && q.qz % q.N != 0) throw std::invalid_argument("quantum torus: q^(1/N) not a power of the base");
    return q;
  }
  // z-exponent of the scalar in Y^beta X^gamma = (scalar) X^gamma Y^beta
  int twist(const std::vector<int>& beta, const std::vector<int>& gamma) const {
    long dot = 0, sb = 0, sg = 0;
    for (int i = 0; i < N; ++i) {
      dot += long(beta[i]) * gamma[i];
      sb += beta[i];
      sg += gamma[i];
    }
    long e = qz * dot;
    if (sl) e -= (qz / N) * sb * sg;
    return static_cast<int>(e);
  }
};

// (sigma alpha)_i = alpha_{sigma^-1(i)}
inline std::vector<int> perm_act(const AffinePerm& s, const std::vector<int>& a) {
  std::vector<int> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[s(static_cast<int>(i) + 1) - 1] = a[i];
  return out;
}

inline std::vector<int> vadd(std::vector<int> a, const std::vector<int>& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

struct QtKey {
  std::vector<int> alpha, beta;
  AffinePerm sigma;
  friend bool operator<(const QtKey& a, const QtKey& b) {
    if (a.alpha != b.alpha) return a.alpha < b.alpha;
    if (a.beta != b.beta) return a.beta < b.beta;
    return a.sigma < b.sigma;
  }
  friend bool operator==(const QtKey& a, const QtKey& b) { return a.alpha == b.alpha && a.beta == b.beta && a.sigma == b.sigma; }
};

// finitely supported sum of c X^alpha Y^beta sigma
class QTorusElt {
 public:
  explicit QTorusElt(QtParams p) : p_(std::move(p)) {}
  const QtParams& params() const { return p_; }
  const std::map<QtKey, RatFunc>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  static QTorusElt mono(const QtParams& p, std::vector<int> alpha, std::vector<int> beta, AffinePerm sigma, RatFunc c = 1) {
    QTorusElt e(p);
    e.add(QtKey{std::move(alpha), std::move(beta), std::move(sigma)}, c);
    return e;
  }
  static QTorusElt one(const QtParams& p) { return mono(p, zeros(p), zeros(p), AffinePerm::identity(p.N)); }
  static QTorusElt X(const QtParams& p, int j, int k = 1) { return mono(p, unit_vec(p, j, k), zeros(p), AffinePerm::identity(p.N)); }
  static QTorusElt Y(const QtParams& p, int j, int k = 1) { return mono(p, zeros(p), unit_vec(p, j, k), AffinePerm::identity(p.N)); }
  static QTorusElt S(const QtParams& p, const AffinePerm& s) { return mono(p, zeros(p), zeros(p), s); }
  static QTorusElt scalar(const QtParams& p, RatFunc c) { return mono(p, zeros(p), zeros(p), AffinePerm::identity(p.N), c); }

  void add(QtKey k, RatFunc c) {
    if (c.is_zero()) return;
    if (p_.sl) {
      int a = k.alpha[p_.N - 1], b = k.beta[p_.N - 1];
      for (auto& x : k.alpha) x -= a;
      for (auto& x : k.beta) x -= b;
      if (b) c *= RatFunc::monomial(b * p_.zeta_e);
    }
    RatFunc& slot = t_[k];
    slot += c;
    if (slot.is_zero()) t_.erase(k);
  }

  friend QTorusElt operator+(QTorusElt a, const QTorusElt& b) {
    for (const auto& [k, c] : b.t_) a.add(k, c);
    return a;
  }
  friend QTorusElt operator-(QTorusElt a, const QTorusElt& b) {
    for (const auto& [k, c] : b.t_) a.add(k, -c);
    return a;
  }
  // (X^a Y^b s)(X^g Y^d u) = z^twist(b, s g) X^{a + s g} Y^{b + s d} s u
  friend QTorusElt operator*(const QTorusElt& a, const QTorusElt& b) {
    QTorusElt r(a.p_);
    for (const auto& [ka, ca] : a.t_)
      for (const auto& [kb, cb] : b.t_) {
        std::vector<int> sg = perm_act(ka.sigma, kb.alpha), sd = perm_act(ka.sigma, kb.beta);
        r.add(QtKey{vadd(ka.alpha, sg), vadd(ka.beta, sd), ka.sigma * kb.sigma},
              ca * cb * RatFunc::monomial(a.p_.twist(ka.beta, sg)));
      }
    return r;
  }
  friend bool operator==(const QTorusElt& a, const QTorusElt& b) { return a.t_ == b.t_; }

  std::string to_string() const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : t_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.to_string(p_.var) + ")";
      s += " X^(" + join_ints(k.alpha) + ") Y^(" + join_ints(k.beta) + ") " + k.sigma.to_string();
    }
    return s;
  }

 private:
  static std::vector<int> zeros(const QtParams& p) { return std::vector<int>(p.N, 0); }
  static std::vector<int> unit_vec(const QtParams& p, int j, int k) {
    std::vector<int> v(p.N, 0);
    v[j - 1] = k;
    return v;
  }
  QtParams p_;
  std::map<QtKey, RatFunc> t_;
};

inline QTorusElt qt_mul(const QTorusElt& a, const QTorusElt& b) { return a * b; }

inline std::vector<RelationCheck> qt_relation_suite(const QtParams& p) {
  std::vector<RelationCheck> out;
  auto chk = [&](const std::string& name, const QTorusElt& a, const QTorusElt& b) {
    bool ok = a == b;
    out.push_back({name, ok, ok ? "" : (a - b).to_string()});
  };
  int N = p.N;
  int qfrac = p.sl ? p.qz / N : 0;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      int e = (i == j ? p.qz : 0) - qfrac;
      chk("Y" + std::to_string(i) + " X" + std::to_string(j), QTorusElt::Y(p, i) * QTorusElt::X(p, j),
          QTorusElt::scalar(p, RatFunc::monomial(e)) * QTorusElt::X(p, j) * QTorusElt::Y(p, i));
      chk("X" + std::to_string(i) + " X" + std::to_string(j) + " commute", QTorusElt::X(p, i) * QTorusElt::X(p, j),
          QTorusElt::X(p, j) * QTorusElt::X(p, i));
      chk("Y" + std::to_string(i) + " Y" + std::to_string(j) + " commute", QTorusElt::Y(p, i) * QTorusElt::Y(p, j),
          QTorusElt::Y(p, j) * QTorusElt::Y(p, i));
    }
  for (int i = 1; i <= N; ++i) {
    chk("X" + std::to_string(i) + " inverse", QTorusElt::X(p, i) * QTorusElt::X(p, i, -1), QTorusElt::one(p));
    chk("Y" + std::to_string(i) + " inverse", QTorusElt::Y(p, i) * QTorusElt::Y(p, i, -1), QTorusElt::one(p));
  }
  for (const auto& s : symmetric_group(N)) {
    chk("sigma sigma^-1 " + s.to_string(), QTorusElt::S(p, s) * QTorusElt::S(p, s.inverse()), QTorusElt::one(p));
    for (int j = 1; j <= N; ++j) {
      chk("sigma X" + std::to_string(j) + " sigma^-1 " + s.to_string(),
          QTorusElt::S(p, s) * QTorusElt::X(p, j) * QTorusElt::S(p, s.inverse()), QTorusElt::X(p, s(j)));
      chk("sigma Y" + std::to_string(j) + " sigma^-1 " + s.to_string(),
          QTorusElt::S(p, s) * QTorusElt::Y(p, j) * QTorusElt::S(p, s.inverse()), QTorusElt::Y(p, s(j)));
    }
  }
  if (p.sl) {
    QTorusElt xs = QTorusElt::one(p), ys = QTorusElt::one(p);
    for (int i = 1; i <= N; ++i) {
      xs = xs * QTorusElt::X(p, i);
      ys = ys * QTorusElt::Y(p, i);
    }
    chk("X_1...X_N = 1", xs, QTorusElt::one(p));
    chk("Y_1...Y_N = Z", ys, QTorusElt::scalar(p, RatFunc::monomial(p.zeta_e)));
  }
  return out;
}

// ---------- Ind_Y(b) = D # S_N (x)_{K[Y]} b ----------

struct QtIndKey {
  std::vector<int> alpha;
  AffinePerm sigma;
  friend bool operator<(const QtIndKey& a, const QtIndKey& b) { return a.alpha != b.alpha ? a.alpha < b.alpha : a.sigma < b.sigma; }
  friend bool operator==(const QtIndKey& a, const QtIndKey& b) { return a.alpha == b.alpha && a.sigma == b.sigma; }
};

class QTIndModule {
 public:
  using Vector = SparseVec<QtIndKey>;

  QTIndModule(QtParams p, std::vector<Mono> b) : p_(std::move(p)), b_(std::move(b)) {
    if (static_cast<int>(b_.size()) != p_.N) throw std::invalid_argument("QTIndModule: weight length");
    if (p_.sl) {
      int s = 0;
      Rational c = 1;
      for (const auto& m : b_) {
        s += m.e;
        c *= m.c;
      }
      if (s != p_.zeta_e || c != 1) throw std::invalid_argument("QTIndModule: SL weight must have product Z");
    }
  }
  const QtParams& params() const { return p_; }
  const std::vector<Mono>& weight() const { return b_; }

  QtIndKey key(std::vector<int> alpha, AffinePerm s) const {
    if (p_.sl) {
      int a = alpha[p_.N - 1];
      for (auto& x : alpha) x -= a;
    }
    return {std::move(alpha), std::move(s)};
  }
  Vector unit() const { return Vector{{key(std::vector<int>(p_.N, 0), AffinePerm::identity(p_.N)), RatFunc(1)}}; }

  // b^beta as a z-monomial
  RatFunc b_pow(const std::vector<int>& beta) const {
    Rational c = 1;
    int e = 0;
    for (int i = 0; i < p_.N; ++i) {
      c *= rational_pow(b_[i].c, beta[i]);
      e += b_[i].e * beta[i];
    }
    return RatFunc::monomial(e, c);
  }

  Vector act(const QTorusElt& h, const Vector& m) const {
    Vector out;
    for (const auto& [kh, ch] : h.terms())
      for (const auto& [km, cm] : m) {
        std::vector<int> sg = perm_act(kh.sigma, km.alpha);
        AffinePerm st = kh.sigma * km.sigma;
        // X^{a + s g} Y^b (s u) (x) v = b^{(s u)^-1 b} X^{a + s g} (s u) (x) v
        RatFunc c = ch * cm * RatFunc::monomial(p_.twist(kh.beta, sg)) * b_pow(perm_act(st.inverse(), kh.beta));
        add_to(out, key(vadd(kh.alpha, sg), st), c);
      }
    return out;
  }

  // Y-eigenvalue of X^alpha sigma (x) v: q^alpha (sigma b), as (coefficient, z-exponent) per coordinate
  std::vector<Mono> weight_of(const QtIndKey& k) const {
    std::vector<Mono> out(p_.N);
    for (int i = 1; i <= p_.N; ++i) {
      std::vector<int> ei(p_.N, 0);
      ei[i - 1] = 1;
      const Mono& bi = b_[k.sigma.inverse()(i) - 1];
      out[i - 1] = Mono{bi.c, bi.e + p_.twist(ei, k.alpha)};
    }
    return out;
  }

  // basis keys of weight target; the Y-action is diagonal so these span the weight space
  std::vector<QtIndKey> weight_space(const std::vector<Mono>& target) const {
    int N = p_.N;
    std::vector<QtIndKey> out;
    for (const auto& s : symmetric_group(N)) {
      std::vector<Rational> d(N);
      bool ok = true;
      for (int i = 1; i <= N && ok; ++i) {
        const Mono& bi = b_[s.inverse()(i) - 1];
        if (bi.c != target[i - 1].c) ok = false;
        else d[i - 1] = make_rational(target[i - 1].e - bi.e, p_.qz);
      }
      if (!ok) continue;
      std::vector<int> alpha(N);
      if (p_.sl) {
        Rational sum = 0;
        for (auto& x : d) sum += x;
        if (sum != 0) continue;
        for (int i = 0; i < N && ok; ++i) {
          Rational a = d[i] - d[N - 1];
          if (a.get_den() != 1) ok = false;
          else alpha[i] = static_cast<int>(a.get_num().get_si());
        }
      } else {
        for (int i = 0; i < N && ok; ++i) {
          if (d[i].get_den() != 1) ok = false;
          else alpha[i] = static_cast<int>(d[i].get_num().get_si());
        }
      }
      if (!ok) continue;
      QtIndKey k = key(alpha, s);
      if (weight_of(k) != target) throw std::logic_error("qt weight_space: solved key has the wrong weight");
      out.push_back(k);
    }
    return out;
  }

  QTorusElt element_of(const Vector& m) const {
    QTorusElt h(p_);
    for (const auto& [k, c] : m) h.add(QtKey{k.alpha, std::vector<int>(p_.N, 0), k.sigma}, c);
    return h;
  }
  // (Phi_a o Phi_b)(1 (x) v) = h_b m_a
  Vector compose(const Vector& ma, const Vector& mb) const { return act(element_of(mb), ma); }

 private:
  QtParams p_;
  std::vector<Mono> b_;
};

// End(Ind_Y b) on the weight-space basis X^alpha sigma (x) v, labeled by sigma
struct QtEnd {
  std::vector<QtIndKey> keys;
  StructureTable table;
  std::vector<int> J;
  bool parabolic = false;
  std::string group_name;
};

inline QtEnd qt_end_ring(const QTIndModule& M, const std::vector<Mono>& target) {
  QtEnd r;
  r.keys = M.weight_space(target);
  std::vector<QTIndModule::Vector> basis;
  for (const auto& k : r.keys) basis.push_back(QTIndModule::Vector{{k, RatFunc(1)}});
  size_t d = basis.size();
  r.table.d = d;
  r.table.c.assign(d, std::vector<Vec>(d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      auto c = coordinates(basis, M.compose(basis[i], basis[j]));
      if (!c) throw std::logic_error("qt_end_ring: composition left the weight space");
      r.table.c[i][j] = *c;
    }
  std::set<AffinePerm> sig;
  for (const auto& k : r.keys) {
    sig.insert(k.sigma);
    r.table.labels.push_back(k.sigma.to_string());
  }
  int N = M.params().N;
  for (int i = 1; i < N; ++i)
    if (sig.count(AffinePerm::s(N, i))) r.J.push_back(i);
  std::vector<AffinePerm> wj = parabolic_subgroup(N, r.J);
  r.parabolic = sig.size() == d && std::set<AffinePerm>(wj.begin(), wj.end()) == sig;
  r.group_name = parabolic_name(N, r.J);
  if (sig.size() == d)
    for (const auto& k : r.keys) r.table.group.push_back(k.sigma);
  return r;
}

// ---------- Young's seminormal form ----------

struct SeminormalRep {
  std::vector<int> lambda;
  std::vector<std::vector<int>> tableaux;  // tableaux[k][m] = row of m+1, as (row) per entry
  std::vector<Mat> s;                      // s[i-1] = matrix of s_i, columns are images of basis vectors
  size_t dim() const { return tableaux.size(); }
};

// standard Young tableaux of shape lambda, recorded as the row of each entry 1..N
inline std::vector<std::vector<int>> standard_tableaux(const std::vector<int>& lambda) {
  int N = 0;
  for (int p : lambda) N += p;
  std::vector<std::vector<int>> out;
  std::vector<int> fill(lambda.size(), 0), rows;
  std::function<void()> rec = [&] {
    if (static_cast<int>(rows.size()) == N) {
      out.push_back(rows);
      return;
    }
    for (size_t r = 0; r < lambda.size(); ++r)
      if (fill[r] < lambda[r] && (r == 0 || fill[r - 1] > fill[r])) {
        ++fill[r];
        rows.push_back(static_cast<int>(r));
        rec();
        rows.pop_back();
        --fill[r];
      }
  };
  rec();
  return out;
}

inline SeminormalRep seminormal(const std::vector<int>& lambda) {
  SeminormalRep R;
  R.lambda = lambda;
  R.tableaux = standard_tableaux(lambda);
  int N = 0;
  for (int p : lambda) N += p;
  size_t d = R.dim();
  std::map<std::vector<int>, size_t> idx;
  for (size_t k = 0; k < d; ++k) idx[R.tableaux[k]] = k;
  // content (col - row) of each entry
  auto contents = [&](const std::vector<int>& rows) {
    std::vector<int> c(N), fill(lambda.size(), 0);
    for (int m = 0; m < N; ++m) c[m] = fill[rows[m]]++ - rows[m];
    return c;
  };
  for (int i = 1; i < N; ++i) {
    Mat M = zero_mat(d, d);
    for (size_t k = 0; k < d; ++k) {
      const auto& T = R.tableaux[k];
      std::vector<int> c = contents(T);
      int r = c[i] - c[i - 1];  // axial distance
      M[k][k] = RatFunc(make_rational(1, r));
      std::vector<int> T2 = T;
      std::swap(T2[i - 1], T2[i]);
      auto it = idx.find(T2);
      if (it == idx.end()) continue;
      M[it->second][k] = r > 0 ? RatFunc(1) : RatFunc(1 - make_rational(1, long(r) * r));
    }
    R.s.push_back(M);
  }
  return R;
}

// matrix of an arbitrary sigma via a reduced word
inline Mat rep_matrix(const SeminormalRep& R, const AffinePerm& sigma) {
  Mat m = identity_mat(R.dim());
  for (int i : sigma.reduced_word().letters) m = mat_mul(m, R.s[i - 1]);
  return m;
}

inline std::vector<RelationCheck> coxeter_check(const SeminormalRep& R) {
  std::vector<RelationCheck> out;
  size_t n1 = R.s.size();
  Mat I = identity_mat(R.dim());
  for (size_t i = 0; i < n1; ++i) {
    out.push_back({"s" + std::to_string(i + 1) + "^2 = 1", mat_mul(R.s[i], R.s[i]) == I, ""});
    for (size_t j = i + 1; j < n1; ++j) {
      const Mat &a = R.s[i], &b = R.s[j];
      bool ok = j == i + 1 ? mat_mul(mat_mul(a, b), a) == mat_mul(mat_mul(b, a), b) : mat_mul(a, b) == mat_mul(b, a);
      out.push_back({"s" + std::to_string(i + 1) + " s" + std::to_string(j + 1), ok, ""});
    }
  }
  return out;
}

// dimension of the commutant of the S_N action; 1 certifies absolute irreducibility
inline size_t commutant_dim(const SeminormalRep& R) {
  size_t d = R.dim();
  Mat sys;
  for (const auto& S : R.s)
    for (size_t r = 0; r < d; ++r)
      for (size_t c = 0; c < d; ++c) {
        Vec row(d * d);
        // (A S - S A)[r][c] = sum_k A[r][k] S[k][c] - S[r][k] A[k][c]
        for (size_t k = 0; k < d; ++k) {
          row[r * d + k] += S[k][c];
          row[k * d + c] -= S[r][k];
        }
        sys.push_back(row);
      }
  return nullspace(sys, d * d).size();
}

// L_lambda = Ind_Gamma(1^N (x) S^lambda) on the basis X^beta (x) u_k (GL); Y acts on 1^N (x) S^lambda trivially,
// so X^g Y^b s sends X^beta (x) u to z^twist(b, s beta) X^{g + s beta} (x) s u
class LLambda {
 public:
  using Key = std::pair<std::vector<int>, size_t>;
  using Vector = SparseVec<Key>;
  LLambda(QtParams p, const SeminormalRep& R) : p_(std::move(p)), R_(R) {
    for (const auto& g : symmetric_group(p_.N)) mats_[g] = rep_matrix(R_, g);
  }
  Vector vec(const std::vector<int>& beta, const Vec& u) const {
    Vector v;
    for (size_t k = 0; k < u.size(); ++k) add_to(v, Key{beta, k}, u[k]);
    return v;
  }
  Vector act(const QTorusElt& h, const Vector& m) const {
    Vector out;
    for (const auto& [kh, ch] : h.terms()) {
      const Mat& S = mats_.at(kh.sigma);
      for (const auto& [km, cm] : m) {
        std::vector<int> sb = perm_act(kh.sigma, km.first);
        RatFunc c = ch * cm * RatFunc::monomial(p_.twist(kh.beta, sb));
        std::vector<int> a = vadd(kh.alpha, sb);
        for (size_t r = 0; r < R_.dim(); ++r)
          if (!S[r][km.second].is_zero()) add_to(out, Key{a, r}, c * S[r][km.second]);
      }
    }
    return out;
  }
  // u for a vector supported on X^0 (x) S^lambda
  Vec fiber(const Vector& v) const {
    Vec u(R_.dim());
    for (const auto& [k, c] : v) {
      for (int b : k.first)
        if (b != 0) throw std::logic_error("LLambda::fiber: vector not in 1 (x) S^lambda");
      u[k.second] = c;
    }
    return u;
  }

 private:
  QtParams p_;
  SeminormalRep R_;
  std::map<AffinePerm, Mat> mats_;
};

struct SpringerDecomposition {
  int N = 0;
  SuiteReport report;
  std::vector<std::pair<std::vector<int>, long long>> multiplicities;  // (lambda, multiplicity)
};

// L_lambda = Ind_Gamma(1^N (x) S^lambda), basis X^beta (x) u_k; X^g Y^b s acts as
// z^twist(b, s beta) X^{g + s beta} (x) s u_k since Y acts on 1^N (x) S^lambda trivially
inline SpringerDecomposition springer_decomposition_check(int N, int qz = -2, unsigned seed = 1) {
  if (N < 1 || N > 4) throw std::invalid_argument("springer_decomposition_check: N <= 4");
  SpringerDecomposition out;
  out.N = N;
  SuiteReport& rep = out.report;
  rep.title = "Springer decomposition N=" + std::to_string(N);
  QtParams p;
  p.N = N;
  p.qz = qz;
  std::vector<Mono> ones(N, Mono{1, 0});
  QTIndModule M(p, ones);
  std::vector<QtIndKey> ws = M.weight_space(ones);
  std::vector<AffinePerm> G = symmetric_group(N);
  long long order = static_cast<long long>(G.size());
  rep.add("dim of 1^N weight space = N!", static_cast<long long>(ws.size()) == order, std::to_string(ws.size()));

  // character of S_N on the weight space, read from the module action
  std::map<AffinePerm, RatFunc> chi_reg;
  for (const auto& g : G) {
    RatFunc tr;
    for (const auto& k : ws) {
      auto img = M.act(QTorusElt::S(p, g), QTIndModule::Vector{{k, RatFunc(1)}});
      auto it = img.find(k);
      if (it != img.end()) tr += it->second;
    }
    chi_reg[g] = tr;
  }

  std::mt19937 rng(seed);
  long long sum_sq = 0;
  for (const auto& lambda : partitions(N)) {
    SeminormalRep R = seminormal(lambda);
    std::string lname = "(" + join_ints(lambda) + ")";
    bool cox = true;
    for (const auto& c : coxeter_check(R)) cox = cox && c.pass;
    rep.add("Coxeter relations for S^" + lname, cox);
    size_t cd = commutant_dim(R);
    rep.add("S^" + lname + " absolutely irreducible (commutant dim 1)", cd == 1, std::to_string(cd));
    std::map<AffinePerm, Mat> mats;
    for (const auto& g : G) mats[g] = rep_matrix(R, g);
    RatFunc ip;
    for (const auto& g : G) {
      RatFunc tr;
      const Mat& m = mats[g.inverse()];
      for (size_t k = 0; k < R.dim(); ++k) tr += m[k][k];
      ip += chi_reg[g] * tr;
    }
    ip = ip * RatFunc(make_rational(1, static_cast<long>(order)));
    long long mult = -1;
    if (ip.is_zero()) mult = 0;
    else if (ip.num().degree() == 0 && ip.den() == UPoly(Rational(1)) && ip.num().lead().get_den() == 1)
      mult = ip.num().lead().get_num().get_si();
    out.multiplicities.emplace_back(lambda, mult);
    rep.add("multiplicity of L_" + lname + " = dim S^" + lname, mult == static_cast<long long>(R.dim()),
            std::to_string(mult) + " vs " + std::to_string(R.dim()));
    sum_sq += static_cast<long long>(R.dim() * R.dim());

    // simplicity: each weight vector X^beta (x) u returns to 1 (x) u under X^-beta and generates 1 (x) S^lambda
    LLambda L(p, R);
    size_t d = R.dim();
    std::vector<Vec> probes;
    for (size_t k = 0; k < d; ++k) {
      Vec e(d);
      e[k] = 1;
      probes.push_back(e);
    }
    std::uniform_int_distribution<int> dist(-3, 3);
    Vec rnd(d);
    for (auto& x : rnd) x = RatFunc(dist(rng));
    if (!is_zero_vec(rnd)) probes.push_back(rnd);
    bool simple = true, only_zero = true;
    size_t checked = 0;
    std::vector<int> beta(N, -2), zero(N, 0);
    std::function<void(int)> rec = [&](int i) {
      if (i == N) {
        int l1 = 0;
        for (int b : beta) l1 += std::abs(b);
        if (l1 > 2) return;
        bool is_zero_beta = beta == zero;
        for (const auto& u : probes) {
          LLambda::Vector v = L.vec(beta, u);
          bool trivial_weight = true;
          for (int j = 1; j <= N; ++j) {
            LLambda::Vector yv = L.act(QTorusElt::Y(p, j), v);
            RatFunc ev = RatFunc::monomial(p.qz * beta[j - 1]);
            if (combine(yv, v, -ev) != LLambda::Vector{}) simple = false;
            if (!ev.is_zero() && ev != RatFunc(1)) trivial_weight = false;
          }
          if (trivial_weight != is_zero_beta) only_zero = false;
          QTorusElt xinv = QTorusElt::one(p);
          for (int j = 1; j <= N; ++j) xinv = xinv * QTorusElt::X(p, j, -beta[j - 1]);
          LLambda::Vector back = L.act(xinv, v);
          if (back != L.vec(zero, u)) simple = false;
          RowSpace span(d);
          for (const auto& g : G) span.insert(L.fiber(L.act(QTorusElt::S(p, g), back)));
          if (span.dim() != d) simple = false;
          ++checked;
        }
        return;
      }
      for (int b = -2; b <= 2; ++b) {
        beta[i] = b;
        rec(i + 1);
      }
    };
    rec(0);
    rep.add("L_" + lname + " simple: weight vectors with |beta| <= 2 generate", simple && checked > 0,
            std::to_string(checked) + " weight vectors");
    rep.add("L_" + lname + ": q^beta = 1 only for beta = 0, so its 1^N weight space is 1 (x) S^" + lname, only_zero);
  }
  rep.add("sum of dim(S^lambda)^2 = N!", sum_sq == order);
  return out;
}

}  // namespace daha

#endif
