#pragma once

// Rational Cherednik algebra H_{t,c}(V, W) in PBW normal order x^a y^b w.
// Products are computed by straightening y^b x^c with the Dunkl commutator
//   [y_i, p] = t d_i(p) - sum_{alpha>0} c_alpha <y_i, alpha> ((p - s_alpha p)/alpha) s_alpha,
// memoised per exponent pair.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tama/reflection.hpp"
#include "tama/scalar.hpp"

namespace tama {

/// Exponent vectors over x_1..x_d (or y_1..y_d) reuse the packed monomial type.
using Exps = Mono;

inline std::string exps_to_string(Exps e, int d) {
  std::string out = "(";
  for (int i = 0; i < d; ++i) {
    if (i) out += ",";
    out += std::to_string(e.exp(i));
  }
  return out + ")";
}

/// Cherednik parameters: t = s^2/2 and one value per W-orbit of roots.
struct Parameters {
  Scalar s = Scalar::s();
  Scalar t = Scalar::t();
  std::vector<Scalar> c;  // c[k] is the parameter of orbit label k; c[0] unused
  bool single_c = false;
  bool specialised = false;

  static Parameters symbolic(const RootDatum& rd, bool single_c = false) {
    Parameters p;
    p.single_c = single_c;
    p.c.assign(std::size_t(rd.orbit_count()) + 1, Scalar());
    for (int k = 1; k <= rd.orbit_count(); ++k) p.c[std::size_t(k)] = Scalar::c(single_c ? 1 : k);
    return p;
  }

  /// Rational values; `cs[k-1]` is the value of c_k (a single value is broadcast).
  static Parameters rational(const RootDatum& rd, const Rational& s, const std::vector<Rational>& cs) {
    if (sgn(s) <= 0) throw Error("specialised s must be positive");
    Parameters p;
    p.specialised = true;
    p.s = Scalar(s);
    p.t = Scalar(Rational(s * s / 2));
    p.c.assign(std::size_t(rd.orbit_count()) + 1, Scalar());
    for (int k = 1; k <= rd.orbit_count(); ++k) {
      if (cs.empty()) continue;
      std::size_t idx = cs.size() == 1 ? 0 : std::size_t(k - 1);
      if (idx >= cs.size()) throw Error("missing value for c" + std::to_string(k));
      p.c[std::size_t(k)] = Scalar(cs[idx]);
    }
    return p;
  }

  /// As `rational` but with s a constant of the form q or q*r (used for t = 1, s = r).
  static Parameters specialised_s(const RootDatum& rd, const Scalar& s, const std::vector<Rational>& cs) {
    if (!s.is_constant() || s.is_zero()) throw Error("specialised s must be a nonzero constant");
    Parameters p = rational(rd, Rational(1), cs);
    p.s = s;
    p.t = s * s * Scalar::frac(1, 2);
    return p;
  }

  Parameters with_zero_c() const {
    Parameters p = *this;
    for (auto& v : p.c) v = Scalar();
    return p;
  }

  const Scalar& c_of(const Root& r) const { return c[std::size_t(r.orbit)]; }
};

struct HKey {
  Exps x;
  Exps y;
  int g = 0;
  friend bool operator==(const HKey& a, const HKey& b) { return a.x == b.x && a.y == b.y && a.g == b.g; }
  friend bool operator<(const HKey& a, const HKey& b) {
    if (a.x.bits != b.x.bits) return a.x.bits < b.x.bits;
    if (a.y.bits != b.y.bits) return a.y.bits < b.y.bits;
    return a.g < b.g;
  }
};

struct HCKey {
  Exps x;
  Exps y;
  int g = 0;
  std::uint32_t e = 0;
  HKey h() const { return {x, y, g}; }
  friend bool operator==(const HCKey& a, const HCKey& b) {
    return a.x == b.x && a.y == b.y && a.g == b.g && a.e == b.e;
  }
  friend bool operator<(const HCKey& a, const HCKey& b) {
    if (a.x.bits != b.x.bits) return a.x.bits < b.x.bits;
    if (a.y.bits != b.y.bits) return a.y.bits < b.y.bits;
    if (a.g != b.g) return a.g < b.g;
    return a.e < b.e;
  }
};

struct KeyHash {
  static std::size_t mix(std::uint64_t h) {
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    return std::size_t(h);
  }
  std::size_t operator()(const HKey& k) const {
    return mix(k.x.bits * 0x9e3779b97f4a7c15ULL ^ (k.y.bits + 0x632be59bd9b4e019ULL) ^ (std::uint64_t(k.g) << 48));
  }
  std::size_t operator()(const HCKey& k) const {
    return mix(k.x.bits * 0x9e3779b97f4a7c15ULL ^ (k.y.bits + 0x632be59bd9b4e019ULL) ^ (std::uint64_t(k.g) << 40) ^
               (std::uint64_t(k.e) << 20));
  }
};

/// Finite Scalar-weighted sum of basis monomials; zero coefficients are never stored.
template <class Key>
class Element {
 public:
  using Map = std::unordered_map<Key, Scalar, KeyHash>;

  Element() = default;
  Element(const Key& k, const Scalar& c) { add(k, c); }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Scalar coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar() : it->second;
  }

  Element& operator+=(const Element& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  Element operator-() const {
    Element out = *this;
    for (auto& [k, c] : out.terms_) c = -c;
    return out;
  }
  friend Element operator*(const Scalar& s, const Element& a) {
    Element out;
    if (s.is_zero()) return out;
    for (const auto& [k, c] : a.terms_) out.add(k, s * c);
    return out;
  }
  friend Element operator*(const Element& a, const Scalar& s) { return s * a; }
  Element& operator*=(const Scalar& s) { return *this = s * *this; }

  friend bool operator==(const Element& a, const Element& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [k, c] : a.terms_) {
      auto it = b.terms_.find(k);
      if (it == b.terms_.end() || !(it->second == c)) return false;
    }
    return true;
  }

  /// Terms in a fixed order for serialisation.
  std::vector<std::pair<Key, Scalar>> sorted() const {
    std::vector<std::pair<Key, Scalar>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

 private:
  Map terms_;
};

using HElement = Element<HKey>;
using HCElement = Element<HCKey>;

/// Integer polynomial in x_1..x_d; keys are packed exponents, compared lexicographically.
using XPoly = std::map<std::uint64_t, long, std::greater<>>;

/// The rational Cherednik algebra of a root datum at fixed parameters.
class Algebra {
 public:
  Algebra(RootDatum rd, Parameters params, std::size_t group_bound = 100000)
      : rd_(std::move(rd)), group_(rd_, group_bound), params_(std::move(params)) {
    if (params_.c.size() != std::size_t(rd_.orbit_count()) + 1)
      throw DimensionMismatch("parameter count does not match the number of root orbits");
  }
  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;

  const RootDatum& root_datum() const { return rd_; }
  const WeylGroup& group() const { return group_; }
  const Parameters& params() const { return params_; }
  int dim() const { return rd_.dim(); }
  const Scalar& t() const { return params_.t; }

  /// Signed image of a monomial under a group element.
  std::pair<Exps, int> act(int g, Exps m) const {
    const SignedPerm& w = group_.element(g);
    Exps out;
    int sign = 1;
    for (int i = 0; i < rd_.dim(); ++i) {
      int e = m.exp(i);
      if (e == 0) continue;
      out.bits |= Exps::var(w.target(i), e).bits;
      if (w.sign(i) < 0 && (e & 1)) sign = -sign;
    }
    return {out, sign};
  }

  /// (p - s_alpha p) / alpha for p = x^c, as an integer polynomial.
  XPoly divided_difference(int root, Exps c) const {
    const Root& r = rd_.root(root);
    auto [img, sign] = act(group_.reflection(root), c);
    XPoly p;
    p[c.bits] += 1;
    p[img.bits] -= sign;
    std::erase_if(p, [](const auto& kv) { return kv.second == 0; });
    int lead = 0;
    while (r.v[lead] == 0) ++lead;
    XPoly q;
    while (!p.empty()) {
      auto [bits, a] = *p.begin();
      Exps m{bits};
      if (m.exp(lead) == 0 || a % r.v[lead] != 0)
        throw InternalInconsistency("divided difference left a nonzero remainder");
      Exps qm = m / Exps::var(lead);
      long qc = a / r.v[lead];
      q[qm.bits] += qc;
      for (int k = 0; k < rd_.dim(); ++k) {
        if (r.v[k] == 0) continue;
        auto& slot = p[(qm * Exps::var(k)).bits];
        slot -= qc * r.v[k];
        if (slot == 0) p.erase((qm * Exps::var(k)).bits);
      }
    }
    return q;
  }

  struct Term {
    Exps x;
    Exps y;
    int g;
    Scalar c;
  };
  using Terms = std::vector<Term>;

  /// y^b x^c written in PBW order.
  const Terms& straighten(Exps b, Exps c) const {
    MemoKey key{b.bits, c.bits};
    {
      std::shared_lock lock(memo_mutex_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return *it->second;
    }
    auto computed = std::make_unique<Terms>(compute_straighten(b, c));
    std::unique_lock lock(memo_mutex_);
    auto [it, inserted] = memo_.try_emplace(key, std::move(computed));
    return *it->second;
  }

  /// Product of two PBW monomials, passed to `sink(key, coefficient)`.
  template <class Sink>
  void mul_monomials(const HKey& a, const HKey& b, const Scalar& coeff, Sink&& sink) const {
    auto [c1, s1] = act(a.g, b.x);
    auto [d1, s2] = act(a.g, b.y);
    int sign = s1 * s2;
    int wv = group_.mul(a.g, b.g);
    if (a.y.is_one() || c1.is_one()) {
      sink(HKey{a.x * c1, a.y * d1, wv}, sign > 0 ? coeff : -coeff);
      return;
    }
    for (const Term& t : straighten(a.y, c1)) {
      auto [d2, s3] = act(t.g, d1);
      Scalar c = t.c * coeff;
      if (sign * s3 < 0) c = -c;
      sink(HKey{a.x * t.x, t.y * d2, group_.mul(t.g, wv)}, c);
    }
  }

  HElement h_mul(const HElement& a, const HElement& b) const {
    HElement out;
    for (const auto& [ka, ca] : a.terms())
      for (const auto& [kb, cb] : b.terms())
        mul_monomials(ka, kb, ca * cb, [&](const HKey& k, const Scalar& c) { out.add(k, c); });
    return out;
  }

  HElement h_one() const { return HElement(HKey{{}, {}, group_.identity()}, Scalar(1)); }
  HElement h_x(int i) const { return HElement(HKey{Exps::var(i), {}, group_.identity()}, Scalar(1)); }
  HElement h_y(int i) const { return HElement(HKey{{}, Exps::var(i), group_.identity()}, Scalar(1)); }
  HElement h_group(int g) const { return HElement(HKey{{}, {}, g}, Scalar(1)); }
  HElement h_monomial(Exps x, Exps y, int g = 0) const { return HElement(HKey{x, y, g}, Scalar(1)); }

  /// [y_i, p] for p an x-polynomial given as an HElement with trivial y and group parts.
  HElement dunkl_commutator(int i, const HElement& p) const {
    HElement out;
    for (const auto& [k, coeff] : p.terms()) {
      if (!k.y.is_one() || k.g != group_.identity())
        throw Error("dunkl_commutator expects a polynomial in x");
      int e = k.x.exp(i);
      if (e > 0) out.add(HKey{k.x / Exps::var(i), {}, group_.identity()}, params_.t * Scalar(long(e)) * coeff);
      for (std::size_t r = 0; r < rd_.positive_roots().size(); ++r) {
        const Root& root = rd_.root(int(r));
        if (root.v[i] == 0) continue;
        Scalar weight = -(params_.c_of(root) * Scalar(long(root.v[i])) * coeff);
        if (weight.is_zero()) continue;
        for (const auto& [bits, n] : divided_difference(int(r), k.x))
          out.add(HKey{Exps{bits}, {}, group_.reflection(int(r))}, Scalar(n) * weight);
      }
    }
    return out;
  }

  /// Anti-involution x_i <-> y_i, w -> w^-1, conjugate-linear on scalars.
  HKey star_key(const HKey& k, int& sign) const {
    int winv = group_.inverse(k.g);
    auto [xb, s1] = act(winv, k.y);
    auto [ya, s2] = act(winv, k.x);
    sign = s1 * s2;
    return HKey{xb, ya, winv};
  }

  HElement h_star(const HElement& a) const {
    HElement out;
    for (const auto& [k, c] : a.terms()) {
      int sign = 1;
      HKey sk = star_key(k, sign);
      Scalar v = c.conjugate();
      out.add(sk, sign > 0 ? v : -v);
    }
    return out;
  }

  std::string key_to_string(const HKey& k) const {
    return "x^" + exps_to_string(k.x, dim()) + " y^" + exps_to_string(k.y, dim()) + " " +
           group_.element(k.g).to_string();
  }

  std::size_t memo_size() const {
    std::shared_lock lock(memo_mutex_);
    return memo_.size();
  }

 private:
  struct MemoKey {
    std::uint64_t b;
    std::uint64_t c;
    friend bool operator==(const MemoKey& u, const MemoKey& v) { return u.b == v.b && u.c == v.c; }
  };
  struct MemoHash {
    std::size_t operator()(const MemoKey& k) const { return KeyHash::mix(k.b * 0x9e3779b97f4a7c15ULL ^ k.c); }
  };

  Terms compute_straighten(Exps b, Exps c) const {
    if (b.is_one() || c.is_one()) return Terms{Term{c, b, group_.identity(), Scalar(1)}};
    int i = 0;
    while (b.exp(i) == 0) ++i;
    Exps rest = b / Exps::var(i);
    HElement acc;
    // y^rest x^c y_i, moving y_i through the group part
    for (const Term& t : straighten(rest, c)) {
      const SignedPerm& g = group_.element(t.g);
      Scalar v = g.sign(i) > 0 ? t.c : -t.c;
      acc.add(HKey{t.x, t.y * Exps::var(g.target(i)), t.g}, v);
    }
    // y^rest [y_i, x^c]
    int e = c.exp(i);
    if (e > 0) {
      Scalar f = params_.t * Scalar(long(e));
      for (const Term& t : straighten(rest, c / Exps::var(i))) acc.add(HKey{t.x, t.y, t.g}, f * t.c);
    }
    for (std::size_t r = 0; r < rd_.positive_roots().size(); ++r) {
      const Root& root = rd_.root(int(r));
      if (root.v[i] == 0) continue;
      Scalar weight = -(params_.c_of(root) * Scalar(long(root.v[i])));
      if (weight.is_zero()) continue;
      int s = group_.reflection(int(r));
      for (const auto& [bits, n] : divided_difference(int(r), c)) {
        Scalar f = Scalar(n) * weight;
        for (const Term& t : straighten(rest, Exps{bits})) acc.add(HKey{t.x, t.y, group_.mul(t.g, s)}, f * t.c);
      }
    }
    Terms out;
    out.reserve(acc.size());
    for (auto& [k, v] : acc.sorted()) out.push_back(Term{k.x, k.y, k.g, v});
    return out;
  }

  RootDatum rd_;
  WeylGroup group_;
  Parameters params_;
  mutable std::shared_mutex memo_mutex_;
  mutable std::unordered_map<MemoKey, std::unique_ptr<Terms>, MemoHash> memo_;
};

/// (x,y)-degree of a monomial.
inline int xy_degree(const HKey& k) { return k.x.degree() + k.y.degree(); }

/// First term of [xi, eta]_c - [xi, eta]_0 that is not of lower filtration degree with positive c-degree.
struct FiltrationResult {
  bool ok = true;
  HKey term;
  Scalar coefficient;
  std::string reason;
};

/// `A0` must be the same root datum with every c set to 0.
inline FiltrationResult filtration_check(const Algebra& A, const Algebra& A0, const HKey& xi, const HKey& eta) {
  HElement a(xi, Scalar(1));
  HElement b(eta, Scalar(1));
  HElement diff = (A.h_mul(a, b) - A.h_mul(b, a)) - (A0.h_mul(a, b) - A0.h_mul(b, a));
  int bound = xy_degree(xi) + xy_degree(eta) - 2;
  FiltrationResult r;
  for (const auto& [k, c] : diff.sorted()) {
    if (xy_degree(k) > bound) {
      r = {false, k, c, "filtration degree exceeds m+n-2"};
      break;
    }
    if (c.min_c_degree() < 1) {
      r = {false, k, c, "coefficient has no c-factor"};
      break;
    }
  }
  return r;
}

/// PBW monomial x^a y^b w with total (x,y)-degree at most `max_degree`, drawn from `rng`.
template <class Rng>
HKey random_h_monomial(const Algebra& A, Rng& rng, int max_degree) {
  int d = A.dim();
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> slot(0, 2 * d - 1);
  std::uniform_int_distribution<int> grp(0, int(A.group().size()) - 1);
  HKey k;
  for (int n = deg(rng); n > 0; --n) {
    int v = slot(rng);
    if (v < d)
      k.x = k.x * Exps::var(v);
    else
      k.y = k.y * Exps::var(v - d);
  }
  k.g = grp(rng);
  return k;
}

}  // namespace tama
