#include "dispatch.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "daha/daha.hpp"
#include "daha/endo.hpp"
#include "daha/intertwiner.hpp"
#include "daha/modules.hpp"
#include "daha/morita.hpp"
#include "daha/qtorus.hpp"
#include "daha/rea.hpp"
#include "daha/suites.hpp"

namespace daha::cli {

using nlohmann::json;

namespace {

bool g_progress = false;

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

template <class F>
auto stage(Report& r, const std::string& name, F f) {
  if (g_progress) std::cerr << "# " << name << std::endl;
  auto t0 = std::chrono::steady_clock::now();
  auto v = f();
  r.stages.emplace_back(name, ms_since(t0));
  return v;
}

Regime parse_regime(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
  if (s == "GENERIC") return Regime::Generic;
  if (s == "GL") return Regime::GL;
  if (s == "SL") return Regime::SL;
  throw UsageError("regime must be GENERIC, GL or SL (got '" + s + "')");
}

ParamsPtr params_of(const RunConfig& c, Report& r, int n) {
  if (n < 1 || n > 6) throw UsageError("n must lie in 1..6");
  int N = c.N > 0 ? c.N : n;
  ParamsPtr P = DahaParams::make(n, parse_regime(c.regime), N);
  r.params = {{"n", n}, {"N", N}, {"regime", regime_name(P->regime())}, {"description", P->describe()}};
  return P;
}

WeightPoint weight_of(const ParamsPtr& P, const std::string& text, Report& r) {
  if (text.empty()) throw UsageError("--weight is required (entries like t^0,t^-2 or 2*t^(1/2))");
  WeightPoint a = WeightPoint::parse(P, text);
  r.weight = a.to_string();
  return a;
}

void add_checks(Report& r, const std::vector<RelationCheck>& cs, const std::string& prefix = "") {
  for (const auto& c : cs) r.check(prefix + c.name, c.pass, c.detail);
}

void add_suite(Report& r, const SuiteReport& s) {
  add_checks(r, s.checks);
  for (const auto& [k, v] : s.facts) {
    if (k == "identification") r.identification = v;
    else if (k == "weight") r.weight = v;
    else r.fact(k, v);
  }
}

std::string vec_to_string(const Vec& v, const std::string& var) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string(var);
  return s + ")";
}

std::string identification_text(const Identification& id) {
  std::string s = ring_type_name(id.type);
  if (!id.description.empty()) s += ": " + id.description;
  return s;
}

// ---------- subcommands ----------

void run_nf(const RunConfig& c, Report& r) {
  ParamsPtr P = params_of(c, r, c.n);
  if (c.word.empty()) throw UsageError("nf needs a generator word, e.g. \"T1 Y1 T1\"");
  DahaElement h = stage(r, "normal form", [&] { return parse_word(P, c.word); });
  r.headline = format_element(h);
  r.fact("input", c.word);
  r.fact("normal_form", r.headline);
  r.fact("terms", std::to_string(h.terms().size()));
}

void run_relcheck(const RunConfig& c, Report& r) {
  ParamsPtr P = params_of(c, r, c.n);
  add_checks(r, stage(r, "affine Hecke relations", [&] { return hecke_relation_suite(P); }), "H(Y): ");
  add_checks(r, stage(r, "DAHA relations", [&] { return daha_relation_suite(P); }), "DAHA: ");
}

void run_intertwiner(const RunConfig& c, Report& r) {
  ParamsPtr P = params_of(c, r, c.n);
  add_checks(r, stage(r, "intertwiner relations", [&] { return intertwiner_relation_suite(P); }));
  if (c.word.empty()) return;
  ReducedWord rw{c.pi_power, {}};
  std::istringstream is(c.word);
  int x;
  while (is >> x) {
    if (x < 0 || x >= c.n) throw UsageError("--word letters must lie in 0..n-1");
    rw.letters.push_back(x);
  }
  AffinePerm w = AffinePerm::from_word(c.n, rw);
  PhiNuResult res = stage(r, "phi vs nu", [&] { return phi_vs_nu_check(P, w); });
  r.fact("w", w.to_string());
  r.fact("length", std::to_string(w.length()));
  std::string pairs;
  for (auto [i, j] : w.inversions()) pairs += (pairs.empty() ? "" : " ") + ("(" + std::to_string(i) + "," + std::to_string(j) + ")");
  r.fact("Inv(w)", pairs);
  std::string nat;
  for (auto [i, j] : res.natural_pairs) nat += (nat.empty() ? "" : " ") + ("(" + std::to_string(i) + "," + std::to_string(j) + ")");
  r.fact("natural subscripts", nat);
  r.fact("alpha", res.alpha ? std::to_string(*res.alpha) : "none");
  r.fact("alpha from subscripts", std::to_string(res.alpha_from_subscripts));
  r.check("phi_w = nu_w q^alpha prod f over Inv(w)", res.verified);
  r.check("alpha agrees with the subscript count", res.alpha && *res.alpha == res.alpha_from_subscripts);
}

void run_weightspace(const RunConfig& c, Report& r) {
  ParamsPtr P = params_of(c, r, c.n);
  WeightPoint a = weight_of(P, c.weight, r);
  WeightPoint b = c.target == "self" ? a : WeightPoint::parse(P, c.target);
  r.fact("target", b.to_string());
  r.fact("module", c.module);
  size_t ord = 0, gen = 0;
  if (c.module == "Y") {
    IndYModule M(a);
    auto ws = stage(r, "weight space", [&] { return M.weight_space(b); });
    ord = ws.basis.size();
    gen = ws.generalized_dim();
    for (const auto& v : ws.basis) r.witnesses.push_back(vector_to_string(v, P->base_name()));
    if (c.dense) {
      size_t dense = stage(r, "dense generalized dimension", [&] { return dense_generalized_dim(M, b); });
      r.check("generalized dimension agrees with the dense computation", dense == gen,
              std::to_string(dense) + " vs " + std::to_string(gen));
    }
  } else if (c.module == "trivial" || c.module == "sign") {
    IndAhaModule M(AhaCharacter{c.module == "trivial", a});
    auto ws = stage(r, "weight space", [&] { return M.weight_space(b); });
    ord = ws.basis.size();
    gen = ws.generalized_dim();
    for (const auto& v : ws.basis) {
      std::string s;
      for (const auto& [k, x] : v) s += (s.empty() ? "" : " + ") + ("(" + x.to_string(P->base_name()) + ") X^(" + join_ints(k) + ")");
      r.witnesses.push_back(s);
    }
  } else {
    throw UsageError("--module must be Y, trivial or sign");
  }
  r.dimension = static_cast<long long>(ord);
  r.fact("ordinary dimension", std::to_string(ord));
  r.fact("generalized dimension", std::to_string(gen));
}

void run_endring(const RunConfig& c, Report& r) {
  ParamsPtr P = params_of(c, r, c.n);
  WeightPoint a = weight_of(P, c.weight, r);
  EndoTable E = stage(r, "end ring", [&] { return end_ring(a); });
  r.dimension = static_cast<long long>(E.basis.size());
  r.check("composition table associative", E.table.associative());
  Identification id = identify(E.table);
  r.fact("semisimple", id.semisimple ? "yes" : "no");
  if (id.type == RingType::NILPOTENT_WITNESS) {
    r.witnesses.push_back("nilpotent " + vec_to_string(id.witness, P->base_name()) + " of index " + std::to_string(id.nilpotency_index));
  }
  r.identification = identification_text(id);

  if (descending(a)) {
    try {
      LabeledEnd L = stage(r, "labeled end ring", [&] { return labeled_end_ring(a); });
      Identification lid = identify(L.end.table, L.group_name);
      r.fact("gamma", L.gamma.gamma.to_string());
      r.fact("W_J", L.group_name);
      r.check("Phi_w form a basis of the weight space", L.spans_weight_space);
      if (lid.type == RingType::GROUP_ALGEBRA) r.identification = "End ≅ " + lid.description;
    } catch (const PoleAtWeight& e) {
      std::string what = e.what();
      if (what.size() > 160) what = what.substr(0, 160) + " ...";
      r.fact("labeled basis", "POLE_AT_WEIGHT (rescaling required): " + what);
    }
  }
  if (c.simple > 0) {
    if (c.simple >= c.n) throw UsageError("--simple must lie in 1..n-1");
    std::vector<std::pair<int, int>> resc;
    for (const auto& s : c.rescale) {
      int i, j;
      char comma;
      std::istringstream is(s);
      if (!(is >> i >> comma >> j) || comma != ',') throw UsageError("--rescale expects i,j");
      resc.emplace_back(i, j);
    }
    GammaResult G = gamma_search(a);
    IndYModule M(a);
    AffinePerm u = G.gamma.inverse() * AffinePerm::s(c.n, c.simple) * G.gamma;
    r.fact("u", u.to_string());
    try {
      Endo e = stage(r, "rescaled endomorphism", [&] { return build_endo(M, u, resc); });
      bool sq0 = compose(M, e.m, e.m).empty();
      r.check("E nonzero", !e.m.empty());
      r.fact("E terms", std::to_string(e.m.size()));
      r.fact("E o E", sq0 ? "0" : "nonzero");
      r.witnesses.push_back("E(1 (x) v) = " + vector_to_string(e.m, P->base_name()));
    } catch (const PoleAtWeight& e) {
      r.check("endomorphism defined at the weight", false, std::string("POLE_AT_WEIGHT: ") + e.what());
    }
  }
}

void run_aha_iso(const RunConfig& c, Report& r) {
  ParamsPtr P = params_of(c, r, c.n);
  WeightPoint a = weight_of(P, c.weight.empty() ? WeightPoint::qrho(P).to_string() : c.weight, r);
  IndShReport rep = stage(r, "Ind isomorphism checks", [&] { return check_ind_sh(a); });
  add_checks(r, rep.checks);
  r.dimension = static_cast<long long>(rep.generation_rank);
  r.fact("g constant", rep.g_constant.to_string(P->base_name()));
}

void run_springer(const RunConfig& c, Report& r) {
  int N = c.N > 0 ? c.N : c.n;
  RunConfig cc = c;
  cc.N = N;
  ParamsPtr P = params_of(cc, r, N);
  SuiteReport s = stage(r, "springer suite", [&] { return springer_suite(N, P->regime()); });
  add_suite(r, s);
  long long f = 1;
  for (int k = 2; k <= N; ++k) f *= k;
  r.dimension = f;
}

void run_chisuite(const RunConfig& c, Report& r) {
  ParamsPtr P = params_of(c, r, c.n);
  WeightPoint a = weight_of(P, c.weight, r);
  SuiteReport s = stage(r, "chi suite", [&] { return chi_suite(a); });
  add_suite(r, s);
  for (const auto& [k, v] : s.facts)
    if (k == "W_J") r.fact("group", v);
}

void run_qtorus(const RunConfig& c, Report& r) {
  int N = c.N > 0 ? c.N : c.n;
  RunConfig cc = c;
  cc.N = N;
  ParamsPtr P = params_of(cc, r, N);
  QtParams qp = QtParams::from(P);
  add_checks(r, stage(r, "torus relations", [&] { return qt_relation_suite(qp); }), "relation: ");
  std::vector<Mono> ones(N, Mono{1, qp.sl ? qp.zeta_e / N : 0});
  QTIndModule M(qp, ones);
  QtEnd e = stage(r, "torus end ring", [&] { return qt_end_ring(M, ones); });
  Identification id = identify(e.table, e.group_name);
  r.dimension = static_cast<long long>(e.keys.size());
  r.identification = id.type == RingType::GROUP_ALGEBRA ? "End ≅ " + id.description : identification_text(id);
  r.check("End is a group algebra", id.type == RingType::GROUP_ALGEBRA);
  r.check("End semisimple", id.semisimple);
  r.weight = monos_to_string(ones, qp.var);
  if (!qp.sl && N <= 4) {
    SpringerDecomposition sd = stage(r, "springer decomposition", [&] { return springer_decomposition_check(N, qp.qz); });
    add_checks(r, sd.report.checks);
    std::string m;
    for (const auto& [lam, mult] : sd.multiplicities) m += (m.empty() ? "" : " ") + ("(" + join_ints(lam) + "):" + std::to_string(mult));
    r.fact("multiplicities", m);
  }
}

void run_rea(const RunConfig& c, Report& r) {
  int N = c.N > 0 ? c.N : c.n;
  if (N < 2 || N > 3) throw UsageError("rea-check supports N = 2 or 3");
  r.params = {{"N", N}};
  ReaReport rep = stage(r, "reflection equation checks", [&] { return rea_check(N); });
  for (const auto& h : rep.conventions) {
    std::string p = std::string(convention_name(h.conv)) + " convention: ";
    r.fact(p + "Hecke", h.hecke ? "yes" : "no");
    r.fact(p + "YBE", h.ybe ? "yes" : "no");
    r.fact(p + "z-vector", h.z_vector ? "yes" : "no");
  }
  r.check("a convention passes Hecke, YBE and the z-vector check", rep.selected.has_value());
  if (!rep.selected) return;
  r.fact("selected convention", convention_name(*rep.selected));
  r.check("z-vector proportionality", rep.z_vector_ok);
  r.check("relations unchanged by R -> q^(-1/N) R", rep.rescale_invariant);
  for (const auto& cr : rep.centrality) {
    std::string d = "block " + std::to_string(cr.block_dim) + ", spanning " + std::to_string(cr.spanning) + ", slice rank " +
                    std::to_string(cr.slice_rank);
    if (!cr.central) d += "; certificate " + cr.certificate;
    r.check("det_q commutes with l^" + std::to_string(cr.i) + "_" + std::to_string(cr.j), cr.central, d);
  }
  r.fact("det_q", fa_to_string(detq(N), N));
}

void run_morita(const RunConfig& c, Report& r) {
  if (c.bound < 0) throw UsageError("--bound must be nonnegative");
  ParamsPtr P = params_of(c, r, c.n);
  (void)P;
  r.params["bound"] = c.bound;
  MoritaResult m = stage(r, "bounded witness search", [&] { return morita_witness_search(c.n, c.bound); });
  r.fact("candidates", std::to_string(m.candidates));
  r.fact("support", std::to_string(m.support));
  if (!m.found) {
    r.skip("witness for sum h e- h' = 1", "NOT_FOUND at bound " + std::to_string(c.bound) + " (inconclusive): " + m.note);
    return;
  }
  r.check("witness for sum h e- h' = 1", m.verified, m.note);
  r.witnesses.push_back(m.witness);
}

void run_nopoles(const RunConfig& c, Report& r) {
  ParamsPtr P = params_of(c, r, c.n);
  r.weight = WeightPoint::qrho(P).to_string();
  for (const auto& w : symmetric_group(c.n)) {
    auto t0 = std::chrono::steady_clock::now();
    if (g_progress) std::cerr << "# nopoles w=" << w.to_string() << std::endl;
    NopolesReport np = nopoles_check(P, w);
    double ms = ms_since(t0);
    for (const auto& ch : np.checks) r.check("w=" + w.to_string() + " u=" + np.u.to_string() + ": " + ch.name, ch.pass, ch.detail, ms);
  }
}

}  // namespace

// ---------- report ----------

json RunConfig::to_json() const {
  json j = {{"subcommand", subcommand}, {"n", n}, {"regime", regime}};
  if (N) j["N"] = N;
  if (!weight.empty()) j["weight"] = weight;
  if (target != "self") j["target"] = target;
  if (!word.empty()) j["word"] = word;
  if (module != "Y") j["module"] = module;
  if (!rescale.empty()) j["rescale"] = rescale;
  if (simple) j["simple"] = simple;
  if (subcommand == "morita") j["bound"] = bound;
  if (pi_power) j["pi"] = pi_power;
  if (dense) j["dense"] = true;
  return j;
}

void Report::check(const std::string& name, bool ok, const std::string& detail, std::optional<double> ms) {
  checks.push_back({name, ok ? "PASS" : "FAIL", detail, ms});
}

void Report::skip(const std::string& name, const std::string& reason) { checks.push_back({name, "SKIP", reason, std::nullopt}); }

std::string Report::status() const {
  for (const auto& c : checks)
    if (c.status == "FAIL") return "FAIL";
  return "PASS";
}

json Report::to_json(bool with_timing) const {
  json j;
  j["schema"] = kSchema;
  j["tool_version"] = kToolVersion;
  j["config"] = config.to_json();
  j["params"] = params;
  j["weight"] = weight.empty() ? json(nullptr) : json(weight);
  j["dimension"] = dimension ? json(*dimension) : json(nullptr);
  j["identification"] = identification.empty() ? json(nullptr) : json(identification);
  j["witnesses"] = witnesses;
  json cs = json::array();
  for (const auto& c : checks) {
    json x = {{"name", c.name}, {"status", c.status}};
    if (!c.detail.empty()) x[c.status == "FAIL" ? "counterexample" : "detail"] = c.detail;
    if (with_timing && c.wall_ms) x["wall_ms"] = *c.wall_ms;
    cs.push_back(x);
  }
  j["checks"] = cs;
  json fs = json::object();
  for (const auto& [k, v] : facts) fs[k] = v;
  j["facts"] = fs;
  j["status"] = status();
  if (with_timing) {
    json st = json::array();
    for (const auto& [k, v] : stages) st.push_back({{"stage", k}, {"wall_ms", v}});
    j["timing"] = {{"total_ms", total_ms}, {"stages", st}};
  }
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "daha " << config.subcommand;
  if (params.contains("description")) os << " [" << params["description"].get<std::string>() << "]";
  for (const auto& [k, v] : params.items())
    if (k != "description" && k != "n" && k != "N" && k != "regime") os << " " << k << "=" << v.dump();
  if (!params.contains("description") && params.contains("N")) os << " [N=" << params["N"].dump() << "]";
  os << "\n";
  if (!weight.empty()) os << "weight: " << weight << "\n";
  for (const auto& c : checks) {
    os << "  [" << c.status << "] " << c.name;
    if (!c.detail.empty()) os << (c.status == "FAIL" ? "\n      counterexample: " : "  -- ") << c.detail;
    os << "\n";
  }
  for (const auto& [k, v] : facts) os << k << ": " << v << "\n";
  if (dimension) os << "dimension: " << *dimension << "\n";
  if (!identification.empty()) os << "identification: " << identification << "\n";
  for (const auto& w : witnesses) os << "witness: " << w << "\n";
  os << "status: " << status() << "\n";
  return os.str();
}

Report dispatch(const RunConfig& cfg) {
  Report r;
  r.config = cfg;
  auto t0 = std::chrono::steady_clock::now();
  const std::string& s = cfg.subcommand;
  if (s == "nf") run_nf(cfg, r);
  else if (s == "relcheck") run_relcheck(cfg, r);
  else if (s == "intertwiner") run_intertwiner(cfg, r);
  else if (s == "weightspace") run_weightspace(cfg, r);
  else if (s == "endring") run_endring(cfg, r);
  else if (s == "aha-iso") run_aha_iso(cfg, r);
  else if (s == "springer") run_springer(cfg, r);
  else if (s == "chisuite") run_chisuite(cfg, r);
  else if (s == "qtorus") run_qtorus(cfg, r);
  else if (s == "rea-check") run_rea(cfg, r);
  else if (s == "morita") run_morita(cfg, r);
  else if (s == "nopoles") run_nopoles(cfg, r);
  else throw UsageError("unknown subcommand '" + s + "'");
  r.total_ms = ms_since(t0);
  return r;
}

// ---------- argument handling ----------

std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> rest;
  std::string path;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw UsageError("--config needs a path");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (path.empty()) return rest;
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("config '" + path + "' is not valid JSON: " + e.what());
  }
  if (!j.is_object()) throw UsageError("config must be a JSON object");
  std::vector<std::string> out;
  bool cli_has_sub = !rest.empty() && rest[0].rfind("-", 0) != 0;
  if (cli_has_sub) out.push_back(rest[0]);
  else if (j.contains("subcommand")) out.push_back(j["subcommand"].get<std::string>());
  else throw UsageError("config has no subcommand");
  if (j.contains("word") && !(cli_has_sub && rest.size() > 1 && rest[1].rfind("-", 0) != 0)) {
    if (out[0] == "nf") out.push_back(j["word"].get<std::string>());
  }
  auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  for (const auto& [k, v] : j.items()) {
    if (k == "subcommand" || k == "comment" || k == "expect") continue;
    if (k == "word" && out[0] == "nf") continue;
    if (v.is_boolean()) {
      if (v.get<bool>()) out.push_back("--" + k);
    } else if (v.is_array()) {
      for (const auto& x : v) out.push_back("--" + k + "=" + scalar(x));
    } else {
      out.push_back("--" + k + "=" + scalar(v));
    }
  }
  for (size_t i = cli_has_sub ? 1 : 0; i < rest.size(); ++i) out.push_back(rest[i]);
  return out;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  RunConfig cfg;
  bool quiet = false;
  CLI::App app{"Exact verification suites for double affine Hecke algebras, quantum tori and reflection equation algebras",
               "daha"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  app.footer(
      "Weight grammar: comma-separated entries [rational*]t^k or [rational*]t^(a/b), e.g. t^0,t^-2.\n"
      "Word grammar: space-separated T<i>, Y<j>, Z<j> (SL), X<j>, pi, each with optional ^k, e.g. \"T1 Y1 T1\".\n"
      "Environment: DAHA_JOBS sets the default worker count.\n"
      "Exit status: 0 all checks pass, 1 a mathematical check failed, 2 usage error.");

  auto common = [&](CLI::App* s) {
    s->add_option("--json", cfg.json_path, "write the JSON report to this path ('-' for stdout)");
    s->add_option("--jobs", cfg.jobs, "worker threads (default: DAHA_JOBS or hardware)");
    s->add_flag("--quiet", quiet, "no progress lines on stderr");
  };
  auto with_n = [&](CLI::App* s) {
    s->add_option("--n", cfg.n, "rank n")->check(CLI::Range(1, 6));
    s->add_option("--N", cfg.N, "N (default n)")->check(CLI::Range(0, 6));
    s->add_option("--regime", cfg.regime, "GENERIC, GL or SL");
  };
  auto sub = [&](const std::string& name, const std::string& desc) {
    CLI::App* s = app.add_subcommand(name, desc);
    common(s);
    return s;
  };

  CLI::App* nf = sub("nf", "normal form of a generator word");
  nf->add_option("word", cfg.word, "generator word")->required();
  with_n(nf);
  with_n(sub("relcheck", "defining relations of the affine Hecke algebra and the DAHA"));
  CLI::App* it = sub("intertwiner", "intertwiner relations; with --word, the phi versus nu exponent");
  with_n(it);
  it->add_option("--word", cfg.word, "simple reflection letters, e.g. \"1 2 0 1 2 0 1 2\"");
  it->add_option("--pi", cfg.pi_power, "pi power prefixed to the word");
  CLI::App* ws = sub("weightspace", "ordinary and generalized weight spaces of an induced module");
  with_n(ws);
  ws->add_option("--weight", cfg.weight, "weight a (or the character for --module trivial|sign)")->required();
  ws->add_option("--target", cfg.target, "target weight or 'self'");
  ws->add_option("--module", cfg.module, "Y (Ind from Y), trivial or sign (Ind from the affine Hecke algebra)");
  ws->add_flag("--dense", cfg.dense, "cross-check the generalized dimension by dense linear algebra (slow for n = 3)");
  CLI::App* er = sub("endring", "endomorphism ring of Ind_Y(a) with identification");
  with_n(er);
  er->add_option("--weight", cfg.weight, "weight a")->required();
  er->add_option("--simple", cfg.simple, "also build the endomorphism attached to s_k");
  er->add_option("--rescale", cfg.rescale, "rescale by f_{i,j}, given as i,j (repeatable)");
  CLI::App* ai = sub("aha-iso", "Ind from Y versus Ind of the sign representation");
  with_n(ai);
  ai->add_option("--weight", cfg.weight, "descending weight (default q^rho)");
  CLI::App* sp = sub("springer", "End(Ind q^rho) = K[S_N]^op on the DAHA and quantum torus sides");
  sp->add_option("--N", cfg.N, "N")->check(CLI::Range(1, 4));
  sp->add_option("--regime", cfg.regime, "GL or SL");
  CLI::App* cs = sub("chisuite", "transverse descending weights: End = K[W_J]^op on both sides");
  with_n(cs);
  cs->add_option("--weight", cfg.weight, "weight a")->required();
  CLI::App* qt = sub("qtorus", "quantum torus relations, End at 1^N and the Springer decomposition");
  qt->add_option("--N", cfg.N, "N")->check(CLI::Range(1, 4));
  qt->add_option("--regime", cfg.regime, "GL or SL");
  CLI::App* rc = sub("rea-check", "R-matrix Hecke relation, YBE and centrality of det_q");
  rc->add_option("--N", cfg.N, "N (2 or 3)")->check(CLI::Range(2, 3));
  CLI::App* mo = sub("morita", "bounded search for sum h e- h' = 1");
  with_n(mo);
  mo->add_option("--bound", cfg.bound, "bound on |k| + |beta|_1 for pi^k Y^beta");
  with_n(sub("nopoles", "leading term and pole checks for nu at q^rho, all w in S_n"));

  int code = 0;
  try {
    std::vector<std::string> expanded = expand_config(args);
    std::reverse(expanded.begin(), expanded.end());
    app.parse(expanded);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  if (cfg.jobs > 0) setenv("DAHA_JOBS", std::to_string(cfg.jobs).c_str(), 1);
  g_progress = !quiet && cfg.subcommand != "nf";

  Report rep;
  try {
    rep = dispatch(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  code = rep.status() == "PASS" ? 0 : 1;
  if (cfg.json_path == "-") {
    std::cout << rep.to_json().dump(2) << "\n";
  } else {
    if (cfg.subcommand == "nf") std::cout << rep.headline << "\n";
    else std::cout << rep.to_text();
    if (!cfg.json_path.empty()) {
      std::ofstream out(cfg.json_path);
      if (!out) {
        std::cerr << "cannot write " << cfg.json_path << "\n";
        return 2;
      }
      out << rep.to_json().dump(2) << "\n";
    }
  }
  return code;
}

}  // namespace daha::cli
