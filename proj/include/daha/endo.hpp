// Endomorphisms of Ind_Y(a) built from intertwiners, composition tables and their identification.
#ifndef DAHA_ENDO_HPP
#define DAHA_ENDO_HPP

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "daha/intertwiner.hpp"
#include "daha/linalg.hpp"
#include "daha/modules.hpp"
#include "daha/parallel.hpp"

namespace daha {

// ---------- nopoles ----------

struct NopolesReport {
  AffinePerm w, u;  // u = gamma^-1 w gamma
  size_t terms = 0;
  std::vector<RelationCheck> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

inline NopolesReport nopoles_check(const ParamsPtr& P, const AffinePerm& w) {
  if (!w.is_finite()) throw std::invalid_argument("nopoles_check: w must lie in S_n");
  int n = P->n();
  AffinePerm g = AffinePerm::gamma(n);
  NopolesReport r{w, P->normalize_perm(g.inverse() * w * g), 0, {}};
  LocDahaElement nu = nu_word(P, r.u);
  r.terms = nu.terms().size();
  WeightPoint a = WeightPoint::qrho(P);
  const VarSpace& vs = P->vars();

  const FactoredFraction* lead = nullptr;
  std::string longer;
  for (const auto& [x, c] : nu.terms()) {
    if (x == r.u) lead = &c;
    else if (x.length() >= r.u.length()) longer = x.to_string();
  }
  r.checks.push_back({"leading term T" + r.u.to_string(), lead && longer.empty(),
                      !lead ? "T_u absent" : longer.empty() ? "" : "term of length >= len(u): T" + longer});
  if (lead) {
    PointValue v = a.eval(*lead);
    bool ok = !v.is_pole() && !v.value->is_zero();
    r.checks.push_back({"leading coefficient regular and nonzero at q^rho", ok, ok ? "" : lead->to_string(vs)});
  }
  std::string bad;
  for (const auto& [x, c] : nu.terms())
    if (a.eval(c).is_pole()) {
      bad = "T" + x.to_string() + ": " + c.to_string(vs);
      break;
    }
  r.checks.push_back({"no coefficient has a pole at q^rho", bad.empty(), bad});
  return r;
}

// ---------- stabilizers and gamma ----------

inline std::vector<AffinePerm> stabilizer(const WeightPoint& a) { return IndYModule(a).weight_coset(a); }

// subgroup of S_n generated by s_i, i in J
inline std::vector<AffinePerm> parabolic_subgroup(int n, const std::vector<int>& J) {
  std::set<AffinePerm> seen{AffinePerm::identity(n)};
  std::vector<AffinePerm> todo{AffinePerm::identity(n)};
  while (!todo.empty()) {
    AffinePerm x = todo.back();
    todo.pop_back();
    for (int i : J) {
      AffinePerm y = x * AffinePerm::s(n, i);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return std::vector<AffinePerm>(seen.begin(), seen.end());
}

// "S_2xS_1" style name of W_J
inline std::string parabolic_name(int n, const std::vector<int>& J) {
  std::set<int> js(J.begin(), J.end());
  std::vector<int> blocks;
  int len = 1;
  for (int i = 1; i < n; ++i) {
    if (js.count(i)) ++len;
    else {
      blocks.push_back(len);
      len = 1;
    }
  }
  blocks.push_back(len);
  std::string s;
  for (size_t k = 0; k < blocks.size(); ++k) s += (k ? "x" : "") + std::string("S_") + std::to_string(blocks[k]);
  return s;
}

struct GammaResult {
  AffinePerm gamma;
  std::vector<int> J;
  std::vector<AffinePerm> W_J;
};

// minimal-length gamma with gamma Stab(a) gamma^-1 a standard parabolic subgroup of S_n
inline GammaResult gamma_search(const WeightPoint& a, int max_len = -1) {
  const ParamsPtr& P = a.params();
  int n = a.n();
  if (max_len < 0) max_len = 2 * n * n;
  std::vector<AffinePerm> stab = stabilizer(a);
  std::vector<AffinePerm> cands = elements_up_to_length(n, max_len);
  std::stable_sort(cands.begin(), cands.end(), [](const AffinePerm& x, const AffinePerm& y) { return x.length() < y.length(); });
  for (const auto& u : cands)
    for (int k = 0; k < n; ++k) {
      AffinePerm g = AffinePerm::pi(n, k) * u;
      std::set<AffinePerm> conj;
      bool finite = true;
      for (const auto& x : stab) {
        AffinePerm y = P->normalize_perm(g * x * g.inverse());
        if (!y.is_finite()) {
          finite = false;
          break;
        }
        conj.insert(y);
      }
      if (!finite) continue;
      std::vector<int> J;
      for (int i = 1; i < n; ++i)
        if (conj.count(AffinePerm::s(n, i))) J.push_back(i);
      std::vector<AffinePerm> wj = parabolic_subgroup(n, J);
      if (std::set<AffinePerm>(wj.begin(), wj.end()) == conj) return {g, J, wj};
    }
  throw std::runtime_error("gamma_search: no gamma up to length " + std::to_string(max_len));
}

// ---------- endomorphisms ----------

struct Endo {
  std::string label;
  AffinePerm word;  // the affine element whose nu builds it
  IndYModule::Vector m;  // image of 1 (x) v
};

inline void require_weight(const IndYModule& M, const IndYModule::Vector& m, const std::string& what) {
  std::vector<RatFunc> a = M.weight().values();
  for (int j = 1; j <= M.params()->n(); ++j) {
    IndYModule::Vector d = combine(M.act(gen_Y(M.params(), j), m), m, -a[j - 1]);
    if (!d.empty()) throw std::logic_error(what + ": not a weight vector (Y" + std::to_string(j) + ")");
  }
}

// 1 (x) v |-> <nu_u * prod f_{i,j}> (x) v; throws PoleAtWeight if the normal ordering has a pole at a
inline Endo build_endo(const IndYModule& M, const AffinePerm& u, const std::vector<std::pair<int, int>>& rescale = {},
                       std::string label = "") {
  const ParamsPtr& P = M.params();
  LocDahaElement h = nu_word(P, u);
  for (auto [i, j] : rescale) h = h.times_coeff(FactoredFraction(P->f_poly(i, j)));
  Endo e{label.empty() ? u.to_string() : label, u, M.act(h, M.unit())};
  if (e.m.empty()) throw std::logic_error("build_endo: zero vector");
  require_weight(M, e.m, "build_endo");
  return e;
}

// Phi_m(h (x) v) = h m, so (Phi_a o Phi_b)(1 (x) v) = h_b m_a
inline IndYModule::Vector compose(const IndYModule& M, const IndYModule::Vector& ma, const IndYModule::Vector& mb) {
  IndYModule::Vector out;
  for (const auto& [x, c] : mb) out = combine(out, M.act(gen_Tw(M.params(), x), ma), c);
  return out;
}

// coordinates of v in the span of basis; nullopt when v is not in the span
template <class K>
std::optional<Vec> coordinates(const std::vector<SparseVec<K>>& basis, const SparseVec<K>& v) {
  std::map<K, size_t> idx;
  for (const auto& b : basis)
    for (const auto& [k, c] : b) idx.emplace(k, 0);
  for (const auto& [k, c] : v)
    if (!idx.count(k)) return std::nullopt;
  size_t r = 0;
  for (auto& [k, i] : idx) i = r++;
  size_t d = basis.size();
  Mat m = zero_mat(r, d + 1);
  for (size_t j = 0; j < d; ++j)
    for (const auto& [k, c] : basis[j]) m[idx[k]][j] = c;
  for (const auto& [k, c] : v) m[idx[k]][d] = c;
  std::vector<size_t> piv = rref(m);
  if (!piv.empty() && piv.back() == d) return std::nullopt;
  if (piv.size() != d) throw std::logic_error("coordinates: basis is dependent");
  Vec out(d);
  for (size_t i = 0; i < piv.size(); ++i) out[piv[i]] = m[i][d];
  return out;
}

enum class RingType { GROUP_ALGEBRA, NILPOTENT_WITNESS, UNKNOWN };
inline const char* ring_type_name(RingType t) {
  switch (t) {
    case RingType::GROUP_ALGEBRA: return "GROUP_ALGEBRA";
    case RingType::NILPOTENT_WITNESS: return "NILPOTENT_WITNESS";
    default: return "UNKNOWN";
  }
}

// d x d x d structure constants: c[i][j] = coordinates of e_i o e_j
struct StructureTable {
  size_t d = 0;
  std::vector<std::vector<Vec>> c;
  std::vector<std::string> labels;
  std::vector<AffinePerm> group;  // group labels when the basis is {Phi_w}; empty otherwise

  Vec mul(const Vec& x, const Vec& y) const {
    Vec out(d);
    for (size_t i = 0; i < d; ++i) {
      if (x[i].is_zero()) continue;
      for (size_t j = 0; j < d; ++j) {
        if (y[j].is_zero()) continue;
        RatFunc s = x[i] * y[j];
        for (size_t k = 0; k < d; ++k)
          if (!c[i][j][k].is_zero()) out[k] += s * c[i][j][k];
      }
    }
    return out;
  }
  Vec basis_vec(size_t i) const {
    Vec v(d);
    v[i] = 1;
    return v;
  }
  bool associative() const {
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j)
        for (size_t k = 0; k < d; ++k)
          if (mul(mul(basis_vec(i), basis_vec(j)), basis_vec(k)) != mul(basis_vec(i), mul(basis_vec(j), basis_vec(k))))
            return false;
    return true;
  }
  // the unit of the table, if any
  std::optional<Vec> unit() const {
    // solve e o b_j = b_j for all j
    Mat m = zero_mat(d * d, d + 1);
    for (size_t j = 0; j < d; ++j)
      for (size_t k = 0; k < d; ++k) {
        for (size_t i = 0; i < d; ++i) m[j * d + k][i] = c[i][j][k];
        m[j * d + k][d] = j == k ? RatFunc(1) : RatFunc();
      }
    std::vector<size_t> piv = rref(m);
    if (!piv.empty() && piv.back() == d) return std::nullopt;
    Vec e(d);
    for (size_t r = 0; r < piv.size(); ++r) e[piv[r]] = m[r][d];
    for (size_t j = 0; j < d; ++j)
      if (mul(basis_vec(j), e) != basis_vec(j) || mul(e, basis_vec(j)) != basis_vec(j)) return std::nullopt;
    return e;
  }
  // radical of the trace form tr(L_x L_y); equals the Jacobson radical in characteristic 0
  std::vector<Vec> trace_radical() const {
    std::vector<Mat> L(d, zero_mat(d, d));
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j)
        for (size_t k = 0; k < d; ++k) L[i][k][j] = c[i][j][k];
    Mat tf = zero_mat(d, d);
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) {
        Mat p = mat_mul(L[i], L[j]);
        for (size_t k = 0; k < d; ++k) tf[i][j] += p[k][k];
      }
    return nullspace(tf, d);
  }
};

struct Identification {
  RingType type = RingType::UNKNOWN;
  std::string description;
  Vec witness;               // nilpotent element for NILPOTENT_WITNESS
  int nilpotency_index = 0;  // least k with witness^k = 0
  bool semisimple = false;
};

// GROUP_ALGEBRA if the labels form a group G with e_w o e_u = e_{uw}; otherwise the trace radical decides
inline Identification identify(const StructureTable& t, const std::string& group_name = "") {
  Identification id;
  id.semisimple = t.trace_radical().empty();
  if (!t.group.empty() && t.group.size() == t.d) {
    std::map<AffinePerm, size_t> pos;
    for (size_t i = 0; i < t.d; ++i) pos[t.group[i]] = i;
    bool ok = pos.size() == t.d;
    for (size_t i = 0; ok && i < t.d; ++i)
      for (size_t j = 0; ok && j < t.d; ++j) {
        auto it = pos.find(t.group[j] * t.group[i]);
        ok = it != pos.end() && t.c[i][j] == t.basis_vec(it->second);
      }
    if (ok) {
      id.type = RingType::GROUP_ALGEBRA;
      id.description = "K[" + (group_name.empty() ? "G" : group_name) + "]^op";
      return id;
    }
  }
  std::vector<Vec> rad = t.trace_radical();
  if (!rad.empty()) {
    Vec x = rad[0], p = x;
    int k = 1;
    while (!is_zero_vec(p) && k <= static_cast<int>(t.d) + 1) {
      p = t.mul(p, x);
      ++k;
    }
    if (is_zero_vec(p)) {
      id.type = RingType::NILPOTENT_WITNESS;
      id.witness = x;
      id.nilpotency_index = k;
      id.description = "radical of dimension " + std::to_string(rad.size());
      return id;
    }
  }
  if (t.d == 1 && t.unit()) {
    id.type = RingType::GROUP_ALGEBRA;
    id.description = "K";
    return id;
  }
  id.description = id.semisimple ? "semisimple, unlabeled" : "not identified";
  return id;
}

struct EndoTable {
  WeightPoint a;
  std::vector<IndYModule::Vector> basis;
  StructureTable table;
  std::vector<AffinePerm> coset;
};

// structure constants of the endomorphisms determined by the given weight vectors
inline StructureTable structure_table(const IndYModule& M, const std::vector<IndYModule::Vector>& basis,
                                      std::vector<std::string> labels = {}) {
  size_t d = basis.size();
  StructureTable t;
  t.d = d;
  t.labels = std::move(labels);
  auto entries = parallel_map(d * d, [&](size_t k) {
    size_t i = k / d, j = k % d;
    auto c = coordinates(basis, compose(M, basis[i], basis[j]));
    if (!c) throw std::logic_error("structure_table: composition left the weight space");
    return *c;
  });
  t.c.assign(d, std::vector<Vec>(d));
  for (size_t k = 0; k < d * d; ++k) t.c[k / d][k % d] = entries[k];
  return t;
}

// End(Ind_Y a) from the ordinary a-weight space
inline EndoTable end_ring(const WeightPoint& a) {
  IndYModule M(a);
  WeightSpace<AffinePerm> ws = M.weight_space(a);
  EndoTable e{a, {}, {}, ws.coset};
  for (const auto& v : ws.basis) e.basis.push_back(v);
  e.table = structure_table(M, e.basis);
  return e;
}

// End(Ind_Y a) on the basis {Phi_w : w in W_J}, Phi_w(1 (x) v) = <nu_{gamma^-1 w gamma}> (x) v
struct LabeledEnd {
  GammaResult gamma;
  std::vector<Endo> endos;
  EndoTable end;
  std::string group_name;
  bool spans_weight_space = false;
  bool distinct_leading_terms = false;
};

inline LabeledEnd labeled_end_ring(const WeightPoint& a, std::optional<AffinePerm> gamma = std::nullopt) {
  IndYModule M(a);
  const ParamsPtr& P = a.params();
  int n = a.n();
  LabeledEnd r;
  if (gamma) {
    r.gamma.gamma = *gamma;
    std::set<AffinePerm> conj;
    for (const auto& x : stabilizer(a)) conj.insert(P->normalize_perm(*gamma * x * gamma->inverse()));
    for (int i = 1; i < n; ++i)
      if (conj.count(AffinePerm::s(n, i))) r.gamma.J.push_back(i);
    r.gamma.W_J = parabolic_subgroup(n, r.gamma.J);
    if (std::set<AffinePerm>(r.gamma.W_J.begin(), r.gamma.W_J.end()) != conj)
      throw std::invalid_argument("labeled_end_ring: gamma does not conjugate the stabilizer onto a parabolic");
  } else {
    r.gamma = gamma_search(a);
  }
  r.group_name = parabolic_name(n, r.gamma.J);
  const AffinePerm& g = r.gamma.gamma;
  const auto& W = r.gamma.W_J;
  r.endos = parallel_map(W.size(), [&](size_t i) {
    AffinePerm u = P->normalize_perm(g.inverse() * W[i] * g);
    return build_endo(M, u, {}, W[i].to_string());
  });
  std::set<AffinePerm> leads;
  for (const auto& e : r.endos) leads.insert(e.word);
  r.distinct_leading_terms = leads.size() == r.endos.size();
  for (const auto& e : r.endos)
    if (!e.m.count(e.word)) r.distinct_leading_terms = false;

  WeightSpace<AffinePerm> ws = M.weight_space(a);
  r.end.a = a;
  r.end.coset = ws.coset;
  std::vector<std::string> labels;
  for (const auto& e : r.endos) {
    r.end.basis.push_back(e.m);
    labels.push_back(e.label);
  }
  RowSpace span(ws.coset.size());
  bool indep = true;
  for (const auto& e : r.endos) indep = span.insert(to_dense(e.m, ws.coset)) && indep;
  r.spans_weight_space = indep && r.endos.size() == ws.basis.size();
  r.end.table = structure_table(M, r.end.basis, labels);
  r.end.table.group = W;
  return r;
}

// ---------- suites ----------

struct SuiteReport {
  std::string title;
  std::vector<RelationCheck> checks;
  std::vector<std::pair<std::string, std::string>> facts;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add(const std::string& name, bool ok, const std::string& detail = "") { checks.push_back({name, ok, detail}); }
  void fact(const std::string& k, const std::string& v) { facts.emplace_back(k, v); }
};

inline std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// hook length formula
inline long long hook_dim(const std::vector<int>& lambda) {
  int n = 0;
  for (int p : lambda) n += p;
  long long num = 1;
  for (int k = 2; k <= n; ++k) num *= k;
  long long den = 1;
  for (size_t r = 0; r < lambda.size(); ++r)
    for (int c = 0; c < lambda[r]; ++c) {
      int arm = lambda[r] - c - 1, leg = 0;
      for (size_t r2 = r + 1; r2 < lambda.size() && lambda[r2] > c; ++r2) ++leg;
      den *= arm + leg + 1;
    }
  return num / den;
}

inline std::vector<std::vector<int>> partitions(int n, int max_part = -1) {
  if (max_part < 0) max_part = n;
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int p = std::min(n, max_part); p >= 1; --p)
    for (auto rest : partitions(n - p, p)) {
      rest.insert(rest.begin(), p);
      out.push_back(rest);
    }
  return out;
}

}  // namespace daha

#endif
