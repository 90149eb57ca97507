#pragma once

// Generators of the graded centraliser O_{t,c} of osp(1|2) in HC, its relations,
// the Dirac element D = Gamma S and the Vogan-type identities.

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>
#include <vector>

#include "tama/osp.hpp"
#include "tama/pin_cover.hpp"

namespace tama {

using Indices = std::vector<int>;  // 0-based coordinate indices

/// Sign of the permutation sorting `idx`, or 0 when an index repeats.
inline int sort_sign(Indices& idx) {
  int sign = 1;
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b + 1 < idx.size() - a; ++b) {
      if (idx[b] == idx[b + 1]) return 0;
      if (idx[b] > idx[b + 1]) {
        std::swap(idx[b], idx[b + 1]);
        sign = -sign;
      }
    }
  for (std::size_t b = 0; b + 1 < idx.size(); ++b)
    if (idx[b] == idx[b + 1]) return 0;
  return sign;
}

/// All ordered tuples of `n` distinct indices from 0..d-1.
inline std::vector<Indices> distinct_tuples(int d, int n) {
  std::vector<Indices> out;
  if (n > d) return out;
  Indices cur;
  std::vector<bool> used(std::size_t(d), false);
  std::function<void()> rec = [&] {
    if (int(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int k = 0; k < d; ++k) {
      if (used[std::size_t(k)]) continue;
      used[std::size_t(k)] = true;
      cur.push_back(k);
      rec();
      cur.pop_back();
      used[std::size_t(k)] = false;
    }
  };
  rec();
  return out;
}

/// (1/n!) sum over sigma of sgn(sigma) f(u_sigma(1), ..., u_sigma(n)).
inline HCElement antisymmetrize(const std::function<HCElement(const Indices&)>& f, const Indices& u) {
  Indices perm(u.size());
  std::iota(perm.begin(), perm.end(), 0);
  HCElement out;
  long count = 0;
  do {
    Indices v(u.size());
    for (std::size_t k = 0; k < u.size(); ++k) v[k] = u[std::size_t(perm[k])];
    Indices tmp = perm;
    int sign = sort_sign(tmp);
    HCElement term = f(v);
    out += sign > 0 ? term : -term;
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out * Scalar::frac(1, count);
}

/// How gamma of the coroot is read in the closed form for O-check_j.
enum class CorootNormalisation { coroot, unit_coroot };

/// (1/2) sum_{alpha > 0} <y_j, alpha> c(alpha) s_alpha gamma(v_alpha) where v_alpha is the coroot
/// or the unit vector along it.
inline HCElement ocheck_closed_form(const Algebra& A, int j, CorootNormalisation norm) {
  const RootDatum& rd = A.root_datum();
  int d = A.dim();
  HCElement out;
  for (std::size_t r = 0; r < rd.positive_roots().size(); ++r) {
    const Root& root = rd.root(int(r));
    if (root.v[j] == 0) continue;
    Scalar c = A.params().c_of(root);
    if (c.is_zero()) continue;
    Scalar w = c * Scalar(long(root.v[j])) * Scalar::frac(1, 2);
    int g = A.group().reflection(int(r));
    for (int p = 0; p < d; ++p) {
      if (root.v[p] == 0) continue;
      Scalar comp = norm == CorootNormalisation::coroot
                        ? Scalar(long(root.coroot[p]))
                        : (root.norm2 == 1 ? Scalar(long(root.v[p])) : Scalar(long(root.v[p])) * Scalar::r() * Scalar::frac(1, 2));
      out.add(HCKey{{}, {}, g, Blade(1) << p}, w * comp);
    }
  }
  return out;
}

class Tama {
 public:
  /// Global sign of O-check_j relative to the closed form with unnormalised coroots.
  static constexpr int kOcheckSign = -1;

  Tama(const Algebra& A, const Osp& osp) : A_(A), osp_(osp), d_(A.dim()) {
    for (int j = 0; j < d_; ++j) ocheck_.push_back(ocheck_closed_form(A, j, CorootNormalisation::coroot) * Scalar(kOcheckSign));
    gamma_ = hc_blade(A, full_blade(d_), Scalar(i_power(d_ * (d_ - 1) / 2)));
    dirac_ = mul(gamma_, osp.scasimir());
  }

  const Algebra& algebra() const { return A_; }
  const Osp& osp() const { return osp_; }
  int dim() const { return d_; }
  const Scalar& t() const { return A_.params().t; }

  HCElement mul(const HCElement& a, const HCElement& b) const { return hc_mul(A_, a, b); }
  HCElement comm(const HCElement& a, const HCElement& b) const { return hc_commutator(A_, a, b); }
  HCElement anti(const HCElement& a, const HCElement& b) const { return hc_anticommutator(A_, a, b); }
  HCElement scalar(const Scalar& s) const { return hc_scalar(A_, s); }

  HCElement M(int i, int j) const { return hc_mul(A_, hc_x(A_, i), hc_y(A_, j)) - hc_mul(A_, hc_x(A_, j), hc_y(A_, i)); }
  const HCElement& ocheck(int j) const { return ocheck_[std::size_t(j)]; }
  const HCElement& gamma() const { return gamma_; }
  const HCElement& dirac() const { return dirac_; }

  /// e_{a_1} ... e_{a_n} as an HC element (with ordering sign).
  HCElement e(const Indices& idx) const {
    CliffordElement<Scalar> u = CliffordElement<Scalar>::scalar(d_, Scalar(1));
    for (int a : idx) u = u * CliffordElement<Scalar>::generator(d_, a + 1);
    return hc_from_clifford(A_, u);
  }

  /// O_A = ((|A|-1)t/2 + sum_a O-check_a e_a + msign * sum_{a<b} M_ab e_a e_b) e_A, A sorted.
  HCElement O_formula(const Indices& sorted, int msign) const {
    HCElement inner = scalar(t() * Scalar::frac(long(sorted.size()) - 1, 2));
    for (int a : sorted) inner += mul(ocheck(a), hc_e(A_, a));
    for (std::size_t p = 0; p < sorted.size(); ++p)
      for (std::size_t q = p + 1; q < sorted.size(); ++q) {
        HCElement m = mul(M(sorted[p], sorted[q]), e({sorted[p], sorted[q]}));
        inner += msign > 0 ? m : -m;
      }
    return mul(inner, e(sorted));
  }

  /// O_{u_1 ... u_n}, skew-symmetric in its indices; O of one index is O-check.
  HCElement O(Indices idx) const {
    int sign = sort_sign(idx);
    if (sign == 0) return HCElement();
    const HCElement& v = O_sorted(idx);
    return sign > 0 ? v : -v;
  }
  HCElement O(std::initializer_list<int> idx) const { return O(Indices(idx)); }

  /// The displayed two- and three-index generators.
  HCElement O2_display(int i, int j) const {
    return M(i, j) + mul(hc_e(A_, i), hc_e(A_, j)) * (t() * Scalar::frac(1, 2)) + mul(ocheck(i), hc_e(A_, j)) -
           mul(ocheck(j), hc_e(A_, i));
  }
  HCElement O3_display(int i, int j, int k) const {
    HCElement out = mul(M(i, j), hc_e(A_, k)) - mul(M(i, k), hc_e(A_, j)) + mul(M(j, k), hc_e(A_, i));
    out += e({i, j, k}) * t();
    out += mul(ocheck(i), e({j, k})) - mul(ocheck(j), e({i, k})) + mul(ocheck(k), e({i, j}));
    return out;
  }

  /// -(t/2) P(e_A).
  HCElement projected_blade(const Indices& idx) const { return osp_.project(e(idx)) * (-t() * Scalar::frac(1, 2)); }

  std::size_t cache_size() const {
    std::shared_lock lock(mutex_);
    return cache_.size();
  }

 private:
  const HCElement& O_sorted(const Indices& sorted) const {
    {
      std::shared_lock lock(mutex_);
      auto it = cache_.find(sorted);
      if (it != cache_.end()) return it->second;
    }
    HCElement v = sorted.size() == 1 ? ocheck(sorted[0]) : O_formula(sorted, -1);
    std::unique_lock lock(mutex_);
    return cache_.try_emplace(sorted, std::move(v)).first->second;
  }

  const Algebra& A_;
  const Osp& osp_;
  int d_;
  std::vector<HCElement> ocheck_;
  HCElement gamma_;
  HCElement dirac_;
  mutable std::shared_mutex mutex_;
  mutable std::map<Indices, HCElement> cache_;
};

/// One relation instance: lhs - rhs, to be checked for zero.
struct Relation {
  std::string id;      // e.g. "[O_ij,O_ki]"
  std::string anchor;  // the identity in words
  int arity = 0;
  std::function<HCElement(const Tama&, const Indices&)> residual;
  bool as_printed = true;  // false for a corrected reading of a printed identity
};

/// [O_ij,O_ki] - (t O_jk + [Oc_a,Oc_b] + {O_ijk,Oc_i}) where (a, b) are positions in (i, j, k).
inline HCElement o17_residual(const Tama& T, const Indices& u, int a, int b) {
  int i = u[0], j = u[1], k = u[2];
  return T.comm(T.O({i, j}), T.O({k, i})) -
         (T.O({j, k}) * T.t() + T.comm(T.ocheck(u[std::size_t(a)]), T.ocheck(u[std::size_t(b)])) +
          T.anti(T.O({i, j, k}), T.ocheck(i)));
}

/// The relations among generators for distinct indices, written as lhs - rhs.
inline std::vector<Relation> relation_catalogue() {
  std::vector<Relation> r;
  r.push_back({"[O_ij,Oc_k] cyclic", "[O_ij,Oc_k] - [O_ik,Oc_j] + [O_jk,Oc_i] = 0", 3,
               [](const Tama& T, const Indices& u) {
                 int i = u[0], j = u[1], k = u[2];
                 return T.comm(T.O({i, j}), T.ocheck(k)) - T.comm(T.O({i, k}), T.ocheck(j)) +
                        T.comm(T.O({j, k}), T.ocheck(i));
               }});
  r.push_back({"{O_ijk,Oc_l} cyclic", "{O_ijk,Oc_l} - {O_ijl,Oc_k} + {O_ikl,Oc_j} - {O_jkl,Oc_i} = 0", 4,
               [](const Tama& T, const Indices& u) {
                 int i = u[0], j = u[1], k = u[2], l = u[3];
                 return T.anti(T.O({i, j, k}), T.ocheck(l)) - T.anti(T.O({i, j, l}), T.ocheck(k)) +
                        T.anti(T.O({i, k, l}), T.ocheck(j)) - T.anti(T.O({j, k, l}), T.ocheck(i));
               }});
  r.push_back({"[O_ij,O_ki]", "[O_ij,O_ki] = t O_jk + [Oc_i,Oc_j] + {O_ijk,Oc_i}", 3,
               [](const Tama& T, const Indices& u) { return o17_residual(T, u, 0, 1); }});
  r.push_back({"[O_ij,O_ki] with [Oc_j,Oc_k]", "[O_ij,O_ki] = t O_jk + [Oc_j,Oc_k] + {O_ijk,Oc_i}", 3,
               [](const Tama& T, const Indices& u) { return o17_residual(T, u, 1, 2); }, false});
  r.push_back({"[O_ij,O_kl]", "[O_ij,O_kl] = {Oc_i,O_jkl} - {Oc_j,O_ikl}", 4,
               [](const Tama& T, const Indices& u) {
                 int i = u[0], j = u[1], k = u[2], l = u[3];
                 return T.comm(T.O({i, j}), T.O({k, l})) -
                        (T.anti(T.ocheck(i), T.O({j, k, l})) - T.anti(T.ocheck(j), T.O({i, k, l})));
               }});
  r.push_back({"[O_jk,O_lmn]", "[O_jk,O_lmn] = [Oc_j,O_klmn] - [Oc_k,O_jlmn]", 5,
               [](const Tama& T, const Indices& u) {
                 int j = u[0], k = u[1], l = u[2], m = u[3], n = u[4];
                 return T.comm(T.O({j, k}), T.O({l, m, n})) -
                        (T.comm(T.ocheck(j), T.O({k, l, m, n})) - T.comm(T.ocheck(k), T.O({j, l, m, n})));
               }});
  r.push_back({"[O_jk,O_jlm]", "[O_jk,O_jlm] = -t O_klm - {Oc_k,O_lm} - [Oc_j,O_jklm]", 4,
               [](const Tama& T, const Indices& u) {
                 int j = u[0], k = u[1], l = u[2], m = u[3];
                 return T.comm(T.O({j, k}), T.O({j, l, m})) -
                        (-(T.O({k, l, m}) * T.t()) - T.anti(T.ocheck(k), T.O({l, m})) -
                         T.comm(T.ocheck(j), T.O({j, k, l, m})));
               }});
  r.push_back({"[O_jk,O_jkl]", "[O_jk,O_jkl] = -{Oc_j,O_jl} - {Oc_k,O_kl}", 3,
               [](const Tama& T, const Indices& u) {
                 int j = u[0], k = u[1], l = u[2];
                 return T.comm(T.O({j, k}), T.O({j, k, l})) +
                        T.anti(T.ocheck(j), T.O({j, l})) + T.anti(T.ocheck(k), T.O({k, l}));
               }});
  r.push_back({"{O_ijk,O_ijk}", "{O_ijk,O_ijk} = 2(Oc_i^2 + Oc_j^2 + Oc_k^2 + O_ij^2 + O_ik^2 + O_jk^2) - t^2/2", 3,
               [](const Tama& T, const Indices& u) {
                 int i = u[0], j = u[1], k = u[2];
                 HCElement sq = T.mul(T.ocheck(i), T.ocheck(i)) + T.mul(T.ocheck(j), T.ocheck(j)) +
                                T.mul(T.ocheck(k), T.ocheck(k));
                 for (auto [a, b] : {std::pair{i, j}, std::pair{i, k}, std::pair{j, k}}) {
                   HCElement o = T.O({a, b});
                   sq += T.mul(o, o);
                 }
                 HCElement o3 = T.O({i, j, k});
                 return T.anti(o3, o3) - (sq * Scalar(2) - T.scalar(T.t() * T.t() * Scalar::frac(1, 2)));
               }});
  r.push_back({"{O_ijk,O_ijl}", "{O_ijk,O_ijl} = {Oc_k,Oc_l} + {O_ik,O_il} + {O_jk,O_jl}", 4,
               [](const Tama& T, const Indices& u) {
                 int i = u[0], j = u[1], k = u[2], l = u[3];
                 return T.anti(T.O({i, j, k}), T.O({i, j, l})) -
                        (T.anti(T.ocheck(k), T.ocheck(l)) + T.anti(T.O({i, k}), T.O({i, l})) +
                         T.anti(T.O({j, k}), T.O({j, l})));
               }});
  r.push_back({"{O_ijk,O_imn}", "{O_ijk,O_imn} = t O_jkmn + {O_jk,O_mn} + {Oc_i,O_ijkmn}", 5,
               [](const Tama& T, const Indices& u) {
                 int i = u[0], j = u[1], k = u[2], m = u[3], n = u[4];
                 return T.anti(T.O({i, j, k}), T.O({i, m, n})) -
                        (T.O({j, k, m, n}) * T.t() + T.anti(T.O({j, k}), T.O({m, n})) +
                         T.anti(T.ocheck(i), T.O({i, j, k, m, n})));
               }});
  r.push_back({"{O_ijk,O_lmn}", "{O_ijk,O_lmn} = {Oc_i,O_jklmn} - {Oc_j,O_iklmn} + {Oc_k,O_ijlmn}", 6,
               [](const Tama& T, const Indices& u) {
                 int i = u[0], j = u[1], k = u[2], l = u[3], m = u[4], n = u[5];
                 return T.anti(T.O({i, j, k}), T.O({l, m, n})) -
                        (T.anti(T.ocheck(i), T.O({j, k, l, m, n})) - T.anti(T.ocheck(j), T.O({i, k, l, m, n})) +
                         T.anti(T.ocheck(k), T.O({i, j, l, m, n})));
               }});
  return r;
}

/// O_klmn = (6 A(O_kl O_mn) - 8 A(O_klm Oc_n)) / t^{tpow}.
inline HCElement reconstruction4_residual(const Tama& T, const Indices& u, int tpow = 1) {
  HCElement a = antisymmetrize([&](const Indices& v) { return T.mul(T.O({v[0], v[1]}), T.O({v[2], v[3]})); }, u);
  HCElement b = antisymmetrize([&](const Indices& v) { return T.mul(T.O({v[0], v[1], v[2]}), T.ocheck(v[3])); }, u);
  Scalar scale = tpow ? Scalar(1) / T.t() : Scalar(1);
  return T.O(u) - (a * Scalar(6) - b * Scalar(8)) * scale;
}

/// The expanded four-index form divided by t^{tpow}; `variant` 0 has {O_kn,O_ln}, 1 has {O_kn,O_lm}.
inline HCElement reconstruction4_expanded_residual(const Tama& T, const Indices& u, int variant, int tpow = 1) {
  int k = u[0], l = u[1], m = u[2], n = u[3];
  HCElement third = variant == 0 ? T.anti(T.O({k, n}), T.O({l, n})) : T.anti(T.O({k, n}), T.O({l, m}));
  HCElement rhs = T.anti(T.O({k, l}), T.O({m, n})) - T.anti(T.O({k, m}), T.O({l, n})) + third;
  HCElement corr = T.mul(T.O({k, l, m}), T.ocheck(n)) - T.mul(T.O({k, l, n}), T.ocheck(m)) +
                   T.mul(T.O({k, m, n}), T.ocheck(l)) - T.mul(T.O({l, m, n}), T.ocheck(k));
  Scalar scale = tpow ? Scalar(1) / T.t() : Scalar(1);
  return T.O(u) - (rhs - corr * Scalar(2)) * scale;
}

/// O_jklmn = 4 A(O_jkl O_mn)/t + 48 A(O_jkl Oc_m Oc_n)/t^2 - 36 A(O_jk O_lm Oc_n)/t^2 (tpow = 1),
/// or with all powers of t dropped (tpow = 0).
inline HCElement reconstruction5_residual(const Tama& T, const Indices& u, int tpow = 1) {
  HCElement a = antisymmetrize([&](const Indices& v) { return T.mul(T.O({v[0], v[1], v[2]}), T.O({v[3], v[4]})); }, u);
  HCElement b = antisymmetrize(
      [&](const Indices& v) { return T.mul(T.mul(T.O({v[0], v[1], v[2]}), T.ocheck(v[3])), T.ocheck(v[4])); }, u);
  HCElement c = antisymmetrize(
      [&](const Indices& v) { return T.mul(T.mul(T.O({v[0], v[1]}), T.O({v[2], v[3]})), T.ocheck(v[4])); }, u);
  Scalar s1 = tpow ? Scalar(1) / T.t() : Scalar(1);
  Scalar s2 = s1 * s1;
  return T.O(u) - (a * (Scalar(4) * s1) + b * (Scalar(48) * s2) - c * (Scalar(36) * s2));
}

/// S Gamma - (i^{d(d-1)/2} / t) O_{1..d}.
inline HCElement sgamma_residual(const Tama& T) {
  int d = T.dim();
  Indices all(std::size_t(d), 0);
  std::iota(all.begin(), all.end(), 0);
  Scalar coeff = Scalar(i_power(d * (d - 1) / 2)) / T.t();
  return T.mul(T.osp().scasimir(), T.gamma()) - T.O(all) * coeff;
}

/// S^2 - ((d-1)(d-2)/8 - (d-2)/t^2 sum Oc_j^2 - 1/t^2 sum_{j<k} O_jk^2).
inline HCElement ssquare_expansion_residual(const Tama& T) {
  int d = T.dim();
  HCElement a;
  HCElement b;
  for (int j = 0; j < d; ++j) a += T.mul(T.ocheck(j), T.ocheck(j));
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      HCElement o = T.O({j, k});
      b += T.mul(o, o);
    }
  Scalar inv_t2 = Scalar(1) / (T.t() * T.t());
  HCElement rhs = T.scalar(Scalar::frac(long(d - 1) * long(d - 2), 8)) - a * (Scalar(long(d - 2)) * inv_t2) - b * inv_t2;
  const HCElement& S = T.osp().scasimir();
  return T.mul(S, S) - rhs;
}

/// rho(w~) O_{u} - (-1)^{|w~| n} O_{w u} rho(w~), w~ in W~.
inline HCElement covariance_residual(const Tama& T, const PinGroup& P, int p, const Indices& u) {
  const Algebra& A = T.algebra();
  HCElement r = P.rho(A, p);
  const SignedPerm& w = A.group().element(PinGroup::project(p));
  Indices img;
  int sign = 1;
  for (int k : u) {
    img.push_back(w.target(k));
    sign *= w.sign(k);
  }
  if (P.parity(p) && (u.size() & 1)) sign = -sign;
  HCElement rhs = T.mul(T.O(img), r);
  return T.mul(r, T.O(u)) - (sign > 0 ? rhs : -rhs);
}

/// epsilon(rho(w~)) from the dimension: 1 for d odd, (-1)^{|w~|} for d even.
inline int epsilon_of(int d, int parity) { return (d % 2 == 0 && parity == 1) ? -1 : 1; }

/// D rho(w~) - epsilon rho(w~) D.
inline HCElement epsilon_residual(const Tama& T, const PinGroup& P, int p) {
  HCElement r = P.rho(T.algebra(), p);
  HCElement rhs = T.mul(r, T.dirac());
  if (epsilon_of(T.dim(), P.parity(p)) < 0) rhs = -rhs;
  return T.mul(T.dirac(), r) - rhs;
}

/// Residuals of the Dirac/Vogan identities for rho(omega) = `rw` of parity-epsilon `eps`.
struct VoganResiduals {
  HCElement dirac_self_adjoint;  // D^bullet - D
  HCElement dirac_square;        // D^2 - Omega - 1/4
  HCElement domega_square;       // D_w^2 - (Omega + rw^2 + (1+eps) rw D + 1/4)
  HCElement decomposition;       // Omega - (D_w a + a D_w + rw^2 - 1/4), a = D_w/2 - rw
  HCElement domega_self_adjoint; // D_w^bullet - D_w
};

inline VoganResiduals vogan_residuals(const Tama& T, const HCElement& rw, int eps) {
  const Algebra& A = T.algebra();
  const HCElement& D = T.dirac();
  const HCElement& Om = T.osp().casimir();
  HCElement quarter = T.scalar(Scalar::frac(1, 4));
  VoganResiduals r;
  r.dirac_self_adjoint = hc_bullet(A, D) - D;
  r.dirac_square = T.mul(D, D) - Om - quarter;
  HCElement Dw = D + rw;
  HCElement rw2 = T.mul(rw, rw);
  r.domega_square = T.mul(Dw, Dw) - (Om + rw2 + T.mul(rw, D) * Scalar(long(1 + eps)) + quarter);
  HCElement a = Dw * Scalar::frac(1, 2) - rw;
  r.decomposition = Om - (T.mul(Dw, a) + T.mul(a, Dw) + rw2 - quarter);
  r.domega_self_adjoint = hc_bullet(A, Dw) - Dw;
  return r;
}

/// Generators against which centrality is tested: rho of the simple lifts, O_ij and O_ijk (sorted tuples).
inline std::vector<std::pair<std::string, HCElement>> centre_test_set(const Tama& T, const PinGroup& P) {
  std::vector<std::pair<std::string, HCElement>> out;
  const Algebra& A = T.algebra();
  for (std::size_t k = 0; k < P.generators().size(); ++k)
    out.emplace_back("rho(s" + std::to_string(k + 1) + ")", P.rho(A, P.generator_index(k)));
  int d = T.dim();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      out.emplace_back("O_" + std::to_string(i + 1) + std::to_string(j + 1), T.O({i, j}));
      for (int k = j + 1; k < d; ++k)
        out.emplace_back("O_" + std::to_string(i + 1) + std::to_string(j + 1) + std::to_string(k + 1), T.O({i, j, k}));
    }
  return out;
}

/// Membership in the graded centraliser and graded centrality against `centre_test_set`.
struct CentreVerdict {
  std::string name;
  HCElement value;
  bool in_O = false;
  bool central = false;
  std::string failed_against;  // first generator with nonzero bracket
  HCElement witness;
};

inline CentreVerdict centre_verdict(const Tama& T, const PinGroup& P, std::string name, const HCElement& z) {
  CentreVerdict v;
  v.name = std::move(name);
  v.value = z;
  auto [gen, w] = T.osp().centraliser_witness(z);
  v.in_O = gen.empty();
  if (!v.in_O) {
    v.failed_against = gen;
    v.witness = w;
  }
  v.central = true;
  for (const auto& [label, g] : centre_test_set(T, P)) {
    HCElement b = hc_graded_bracket(T.algebra(), z, g);
    if (!b.is_zero()) {
      v.central = false;
      if (v.in_O) {
        v.failed_against = label;
        v.witness = b;
      }
      break;
    }
  }
  return v;
}

/// The four readings of the second central generator when w0 = -1 on V.
inline std::vector<CentreVerdict> sbb_candidates(const Tama& T, const PinGroup& P) {
  const Algebra& A = T.algebra();
  auto m = A.group().minus_identity();
  if (!m) return {};
  int w0 = *m;
  HCElement plain = hc_group(A, w0);
  HCElement lifted = P.rho(A, PinGroup::make(w0, false));
  const HCElement& S = T.osp().scasimir();
  const HCElement& D = T.dirac();
  return {centre_verdict(T, P, "S (w0 x 1)", T.mul(S, plain)), centre_verdict(T, P, "D (w0 x 1)", T.mul(D, plain)),
          centre_verdict(T, P, "S rho(w0~)", T.mul(S, lifted)), centre_verdict(T, P, "D rho(w0~)", T.mul(D, lifted))};
}

/// P(w0 x 1) + 2 S (w0 x 1), for w0 = -1 on V.
inline HCElement projected_longest_residual(const Tama& T) {
  const Algebra& A = T.algebra();
  auto m = A.group().minus_identity();
  if (!m) throw PreconditionFailed("w0 is not -1 on V", "");
  HCElement w0 = hc_group(A, *m);
  return T.osp().project(w0) + T.mul(T.osp().scasimir(), w0) * Scalar(2);
}

}  // namespace tama
