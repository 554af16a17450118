// Theorem-level suites combining the DAHA side and the quantum torus side.
#ifndef DAHA_SUITES_HPP
#define DAHA_SUITES_HPP

#include <string>
#include <vector>

#include "daha/endo.hpp"
#include "daha/qtorus.hpp"

namespace daha {

inline std::string monos_to_string(const std::vector<Mono>& b, const std::string& var) {
  std::string s;
  for (size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + RatFunc::monomial(b[i].e, b[i].c).to_string(var);
  return s;
}

// End(Ind_Y q^rho) = K[S_N]^op at n = N, with the quantum torus cross-check
inline SuiteReport springer_suite(int N, Regime regime) {
  SuiteReport r;
  r.title = std::string("springer N=") + std::to_string(N) + (regime == Regime::SL ? " SL" : " GL");
  ParamsPtr P = DahaParams::make(N, regime, N);
  WeightPoint a = WeightPoint::qrho(P);
  r.fact("weight", a.to_string());
  if (regime == Regime::SL) {
    Mono pr = a.product();
    r.add("prod q^rho = Z", pr.c == 1 && pr.e == P->zprod_exps()[0], a.format_mono(pr));
  }
  for (const auto& w : symmetric_group(N)) {
    NopolesReport np = nopoles_check(P, w);
    std::string detail;
    for (const auto& c : np.checks)
      if (!c.pass) detail += c.name + ": " + c.detail + "; ";
    r.add("nopoles w=" + w.to_string() + " (u=" + np.u.to_string() + ")", np.pass(), detail);
  }
  LabeledEnd L = labeled_end_ring(a, AffinePerm::gamma(N));
  size_t nfact = symmetric_group(N).size();
  r.add("gamma^-1 S_N gamma is the stabilizer", L.gamma.W_J.size() == nfact);
  r.add("Phi_w have distinct leading terms T_{gamma^-1 w gamma}", L.distinct_leading_terms);
  r.add("Phi_w form a basis of the q^rho weight space", L.spans_weight_space);
  r.add("dim End = N!", L.end.basis.size() == nfact, std::to_string(L.end.basis.size()));
  r.add("composition table associative", L.end.table.associative());
  Identification id = identify(L.end.table, "S_" + std::to_string(N));
  r.add("Phi_w o Phi_u = Phi_{uw}", id.type == RingType::GROUP_ALGEBRA, ring_type_name(id.type));
  r.fact("identification", "End ≅ " + id.description);

  QtParams qp = QtParams::from(P);
  std::vector<Mono> ones(N, Mono{1, qp.sl ? qp.zeta_e / N : 0});
  QTIndModule Q(qp, ones);
  QtEnd qe = qt_end_ring(Q, ones);
  Identification qid = identify(qe.table, "S_" + std::to_string(N));
  r.add("quantum torus: dim of the 1^N weight space = N!", qe.keys.size() == nfact, std::to_string(qe.keys.size()));
  r.add("quantum torus: End ≅ K[S_N]^op", qid.type == RingType::GROUP_ALGEBRA && qid.semisimple);
  r.add("both sides agree", qid.type == id.type && qe.keys.size() == L.end.basis.size());
  if (N <= 4 && regime == Regime::GL) {
    SpringerDecomposition sd = springer_decomposition_check(N, qp.qz);
    for (const auto& c : sd.report.checks) r.checks.push_back(c);
    std::string m;
    for (const auto& [lam, mult] : sd.multiplicities) m += (m.empty() ? "" : " ") + ("(" + join_ints(lam) + "):" + std::to_string(mult));
    r.fact("multiplicities", m);
  }
  return r;
}

// equal up to a power of q: the same q-line
inline bool same_line(const WeightPoint& a, int i, int j) {
  const ParamsPtr& P = a.params();
  int q0 = P->q_exps()[0];
  return a[i].c == a[j].c && (a[i].e - a[j].e) % q0 == 0;
}

// transverse descending a with same-line entries consecutive; End ≅ K[W_J]^op on both sides
inline SuiteReport chi_suite(const WeightPoint& a) {
  SuiteReport r;
  int n = a.n();
  r.title = "chisuite " + a.to_string();
  r.fact("weight", a.to_string());
  r.add("descending", descending(a));
  r.add("transverse", transverse(a));
  bool consecutive = true;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j)
      if (same_line(a, i, j))
        for (int k = i + 1; k < j; ++k)
          if (!same_line(a, i, k)) consecutive = false;
  r.add("same-line entries consecutive", consecutive);
  if (!r.pass()) return r;

  LabeledEnd L = labeled_end_ring(a);
  r.fact("gamma", L.gamma.gamma.to_string());
  r.fact("W_J", L.group_name);
  r.add("Phi_w have distinct leading terms", L.distinct_leading_terms);
  r.add("Phi_w form a basis of the weight space", L.spans_weight_space);
  r.add("dim End = |W_J|", L.end.basis.size() == L.gamma.W_J.size(), std::to_string(L.end.basis.size()));
  r.add("composition table associative", L.end.table.associative());
  Identification id = identify(L.end.table, L.group_name);
  r.add("End ≅ K[W_J]^op", id.type == RingType::GROUP_ALGEBRA, ring_type_name(id.type));
  r.add("End semisimple", id.semisimple);
  r.fact("identification", "End ≅ " + id.description);

  // torus weight b = gamma . a, whose S_N-stabilizer is W_J
  WeightPoint b = act_weight(L.gamma.gamma, a);
  std::vector<Mono> bm;
  for (int i = 1; i <= n; ++i) bm.push_back(b[i]);
  QtParams qp = QtParams::from(a.params());
  QTIndModule Q(qp, bm);
  QtEnd qe = qt_end_ring(Q, bm);
  Identification qid = identify(qe.table, qe.group_name);
  r.fact("torus weight", monos_to_string(bm, qp.var));
  r.add("quantum torus: weight space labeled by W_J", qe.parabolic && qe.J == L.gamma.J);
  r.add("quantum torus: End ≅ K[W_J]^op, semisimple", qid.type == RingType::GROUP_ALGEBRA && qid.semisimple);
  r.add("both sides agree", qe.keys.size() == L.end.basis.size() && qid.type == id.type);

  // irreducibles of W_J: multipartitions, one per block of J
  std::vector<int> blocks;
  {
    std::set<int> js(L.gamma.J.begin(), L.gamma.J.end());
    int len = 1;
    for (int i = 1; i < n; ++i) {
      if (js.count(i)) ++len;
      else {
        blocks.push_back(len);
        len = 1;
      }
    }
    blocks.push_back(len);
  }
  std::vector<std::pair<std::string, long long>> mp{{"", 1}};
  for (int blk : blocks) {
    std::vector<std::pair<std::string, long long>> next;
    for (const auto& [s, d] : mp)
      for (const auto& lam : partitions(blk))
        next.emplace_back(s + (s.empty() ? "" : "|") + "(" + join_ints(lam) + ")", d * hook_dim(lam));
    mp = next;
  }
  long long sq = 0;
  std::string ms;
  for (const auto& [s, d] : mp) {
    sq += d * d;
    ms += (ms.empty() ? "" : " ") + s + ":" + std::to_string(d);
  }
  r.fact("multipartitions", std::to_string(mp.size()));
  r.fact("multiplicities", ms);
  r.add("sum of squared multiplicities = |W_J|", sq == static_cast<long long>(L.gamma.W_J.size()));
  return r;
}

}  // namespace daha

#endif
