#ifndef DAHA_PARAMS_HPP
#define DAHA_PARAMS_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "daha/affine_perm.hpp"
#include "daha/fraction.hpp"
#include "daha/laurent.hpp"

namespace daha {

enum class Regime { Generic, GL, SL };

inline std::string regime_name(Regime r) {
  switch (r) {
    case Regime::Generic:
      return "GENERIC";
    case Regime::GL:
      return "GL";
    case Regime::SL:
      return "SL";
  }
  return "?";
}

// Y-variable substitution Y_j -> image[j] (a monomial including parameter powers).
struct YSubst {
  std::array<Exps, kMaxN + 1> image{};
};

// Parameters and variable layout of a DAHA.
//   GENERIC: variables t, q, Y_1..Y_n.
//   GL:      q = t^{-2n/N}; variables t, Y_1..Y_n when N | 2n, else u, Y_1..Y_n with t = u^N.
//   SL:      base u = t^{1/N}, variables u, Z_1..Z_n; loop twist u^{-2n}, Z_1...Z_n = u^{n(n-N^2)}.
class DahaParams {
 public:
  static std::shared_ptr<const DahaParams> make(int n, Regime regime, int N = 0) {
    return std::shared_ptr<const DahaParams>(new DahaParams(n, regime, N == 0 ? n : N));
  }

  int n() const { return n_; }
  int N() const { return N_; }
  Regime regime() const { return regime_; }
  const VarSpace& vars() const { return vs_; }
  int num_params() const { return nparams_; }
  // specialized regimes have a single base variable; t = base^t_degree
  bool specialized() const { return regime_ != Regime::Generic; }
  int t_degree() const { return t_.at(0); }
  const std::string& base_name() const { return vs_.name(0); }

  int yvar(int j) const { return nparams_ + j - 1; }  // j in 1..n
  const Exps& t_exps() const { return t_; }
  // q in the GL sense: Y_{i+n} = q^{-1} Y_i (in SL, q^{-1} = sq^{2n})
  const Exps& q_exps() const { return q_; }
  const Exps& sq_exps() const { return sq_; }
  const Exps& zprod_exps() const { return zprod_; }
  // twist picked up by Y under conjugation by pi: Y_j pi = pi * (lambda Y_{j-1})
  const Exps& pi_twist() const { return pi_twist_; }

  LaurentPoly t() const { return LaurentPoly::monomial(t_); }
  LaurentPoly tinv() const { return LaurentPoly::monomial(-t_); }
  LaurentPoly tdiff() const { return t() - tinv(); }  // t - t^{-1}
  LaurentPoly q() const { return LaurentPoly::monomial(q_); }
  LaurentPoly param_mono(const Exps& e, const Rational& c = 1) const { return LaurentPoly::monomial(e, c); }

  // exponent vector of Y_j for any integer j: Y_{r + mn} = q^{-m} Y_r
  Exps y_ext(int j) const {
    int r = mod1(j, n_);
    int m = (j - r) / n_;
    Exps e = (-m) * q_;
    e[yvar(r)] += 1;
    return e;
  }
  LaurentPoly Y(int j) const { return LaurentPoly::monomial(y_ext(j)); }
  LaurentPoly Ymono(const std::vector<int>& beta) const {
    Exps e{};
    for (int j = 0; j < n_; ++j) e[yvar(j + 1)] = beta[j];
    return normalize(LaurentPoly::monomial(e));
  }
  std::vector<int> y_exponents(const Exps& e) const {
    std::vector<int> b(n_);
    for (int j = 0; j < n_; ++j) b[j] = e[yvar(j + 1)];
    return b;
  }
  Exps param_part(Exps e) const {
    for (int j = 1; j <= n_; ++j) e[yvar(j)] = 0;
    return e;
  }

  // f_{i,j} = t Y_i - t^{-1} Y_j with extended indices
  Binomial f(int i, int j) const { return Binomial(1, t_ + y_ext(i), -1, y_ext(j) - t_, std::make_pair(i, j)); }
  LaurentPoly f_poly(int i, int j) const { return f(i, j).poly(); }

  // substitution realizing g -> s_i(g) with s_i acting on extended indices
  YSubst reflection(int i) const {
    AffinePerm s = AffinePerm::s(n_, i);
    YSubst sub;
    for (int j = 1; j <= n_; ++j) sub.image[j] = y_ext(s(j));
    return sub;
  }
  // g pi^k = pi^k * shift_k(g), shift_k(Y_j) = lambda^k Y_{j-k}
  YSubst pi_shift(int k) const {
    YSubst sub;
    for (int j = 1; j <= n_; ++j) sub.image[j] = y_ext(j - k) + k * pi_twist_;
    return sub;
  }
  // g -> w(g): Y_j -> Y_{w^{-1}(j)} style substitution used by Y_j nu_w = nu_w Y_{w^{-1}(j)}
  YSubst perm_subst(const AffinePerm& winv) const {
    YSubst sub;
    int k = -winv.pi_degree();
    for (int j = 1; j <= n_; ++j) sub.image[j] = y_ext(winv(j)) + k * pi_twist_;
    return sub;
  }

  Exps apply(const YSubst& sub, const Exps& e) const {
    Exps out = param_part(e);
    for (int j = 1; j <= n_; ++j) {
      int b = e[yvar(j)];
      if (b != 0) out = out + b * sub.image[j];
    }
    return out;
  }

  // SL: eliminate Z_n via Z_1...Z_n = Zprod; identity otherwise
  LaurentPoly normalize(const LaurentPoly& p) const {
    if (regime_ != Regime::SL) return p;
    int zn = yvar(n_);
    bool any = false;
    for (const auto& t : p.terms())
      if (t.e[zn] != 0) any = true;
    if (!any) return p;
    return p.map_monomials([&](const Exps& e) { return std::make_pair(Rational(1), normalize_exps(e)); });
  }
  Exps normalize_exps(Exps e) const {
    if (regime_ != Regime::SL) return e;
    int k = e[yvar(n_)];
    if (k == 0) return e;
    e[yvar(n_)] = 0;
    for (int j = 1; j < n_; ++j) e[yvar(j)] -= k;
    return e + k * zprod_;
  }
  // SL: pi-tilde^n = 1, so windows are reduced to pi-degree 0..n-1
  AffinePerm normalize_perm(const AffinePerm& x) const {
    if (regime_ != Regime::SL) return x;
    int k = x.pi_degree();
    int m = floor_div(k, n_);
    if (m == 0) return x;
    return AffinePerm::pi(n_, -n_ * m) * x;
  }

  // Laurent polynomial in the base variable -> exponent map; requires a specialized regime
  bool operator==(const DahaParams& o) const { return n_ == o.n_ && N_ == o.N_ && regime_ == o.regime_; }

  std::string describe() const {
    std::string s = regime_name(regime_) + " n=" + std::to_string(n_);
    if (regime_ != Regime::Generic) s += " N=" + std::to_string(N_);
    return s;
  }

 private:
  DahaParams(int n, Regime regime, int N) : n_(n), N_(N), regime_(regime) {
    if (n < 2 || n > kMaxN) throw std::invalid_argument("DahaParams: n must be in 2..6");
    std::vector<std::string> names;
    std::string yname = regime == Regime::SL ? "Z" : "Y";
    if (regime == Regime::Generic) {
      names = {"t", "q"};
    } else if (regime == Regime::GL) {
      names = {(2 * n) % N == 0 ? "t" : "u"};
    } else {
      names = {"u"};
    }
    nparams_ = static_cast<int>(names.size());
    for (int j = 1; j <= n; ++j) names.push_back(yname + std::to_string(j));
    if (static_cast<int>(names.size()) > kMaxVars) throw std::invalid_argument("DahaParams: too many variables");
    vs_ = VarSpace(names);
    t_ = Exps{};
    q_ = Exps{};
    sq_ = Exps{};
    zprod_ = Exps{};
    pi_twist_ = Exps{};
    if (regime == Regime::Generic) {
      t_[0] = 1;
      q_[1] = 1;
    } else if (regime == Regime::GL) {
      if ((2 * n) % N == 0) {
        t_[0] = 1;
        q_[0] = -2 * n / N;
      } else {
        t_[0] = N;
        q_[0] = -2 * n;
      }
    } else {
      t_[0] = N;
      sq_[0] = 1;
      q_[0] = -2 * n;
      zprod_[0] = n * (n - N * N);
      pi_twist_[0] = 2;
    }
  }

  int n_, N_;
  Regime regime_;
  VarSpace vs_;
  int nparams_ = 0;
  Exps t_{}, q_{}, sq_{}, zprod_{}, pi_twist_{};
};

using ParamsPtr = std::shared_ptr<const DahaParams>;

}  // namespace daha

#endif
