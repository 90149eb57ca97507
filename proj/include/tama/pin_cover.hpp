#pragma once

// The double cover W~ inside Pin(V, B): pairs (w, u) with u a product of unit
// root vectors in the Clifford algebra over Q(i, r).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tama/clifford.hpp"
#include "tama/hc_algebra.hpp"
#include "tama/reflection.hpp"

namespace tama {

using PinUnit = CliffordElement<Qir>;

struct PinElement {
  int w = 0;  // index into the WeylGroup
  PinUnit u;

  int parity() const { return u.parity(); }
  friend bool operator==(const PinElement& a, const PinElement& b) { return a.w == b.w && a.u == b.u; }
};

/// gamma(alpha / |alpha|) for a root.
inline PinUnit unit_root_vector(const Root& r, int d) {
  PinUnit out(d);
  for (int j = 0; j < d; ++j) {
    if (r.v[j] == 0) continue;
    // |alpha|^2 is 1 or 2 for the supported families
    Qir c = r.norm2 == 1 ? Qir(long(r.v[j])) : Qir::r() * Qir::frac(r.v[j], 2);
    out.add(Blade(1) << j, c);
  }
  return out;
}

inline PinElement lift_reflection(const RootDatum& rd, const WeylGroup& W, int root) {
  if (root < 0 || std::size_t(root) >= rd.positive_roots().size()) throw Error("not a positive root index");
  return PinElement{W.reflection(root), unit_root_vector(rd.root(root), rd.dim())};
}

/// Concrete model of W~. Element index p = 2 w + k stands for theta^k * lift(w),
/// where lift(w) is the first preimage of w met in breadth-first closure order.
class PinGroup {
 public:
  PinGroup(const RootDatum& rd, const WeylGroup& W) : rd_(rd), W_(W), d_(rd.dim()) {
    std::size_t n = W.size();
    lift_.assign(n, PinUnit());
    std::vector<bool> have(n, false);
    lift_[0] = PinUnit::scalar(d_, Qir(1));
    have[0] = true;
    for (int s : rd.simple_roots()) generators_.push_back(lift_reflection(rd, W, s));
    std::vector<int> queue{0};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      int w = queue[q];
      for (const auto& g : generators_) {
        int v = W.mul(w, g.w);
        if (have[std::size_t(v)]) continue;
        lift_[std::size_t(v)] = lift_[std::size_t(w)] * g.u;
        have[std::size_t(v)] = true;
        queue.push_back(v);
      }
    }
    if (queue.size() != n) throw InternalInconsistency("simple reflection lifts do not reach every group element");
    sign_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        int ab = W.mul(int(a), int(b));
        PinUnit prod = lift_[a] * lift_[b];
        const PinUnit& l = lift_[std::size_t(ab)];
        if (prod == l) {
          sign_[a * n + b] = 1;
        } else if (prod == -l) {
          sign_[a * n + b] = -1;
        } else {
          throw InternalInconsistency("product of lifts is not a lift");
        }
      }
    theta_seen_ = false;
    for (int v : sign_)
      if (v < 0) theta_seen_ = true;
  }

  const RootDatum& root_datum() const { return rd_; }
  const WeylGroup& weyl() const { return W_; }
  int dim() const { return d_; }
  std::size_t size() const { return 2 * W_.size(); }
  static int theta() { return 1; }
  static int identity() { return 0; }
  static int project(int p) { return p / 2; }
  static int make(int w, bool theta) { return 2 * w + (theta ? 1 : 0); }
  /// True when products of generator lifts already reach theta (W~ = p^-1(W) always contains it).
  bool contains_theta() const { return theta_seen_; }

  /// sigma(a, b) with lift(a) lift(b) = sigma lift(ab).
  int cocycle(int a, int b) const { return sign_[std::size_t(a) * W_.size() + std::size_t(b)]; }

  int mul(int p, int q) const {
    int a = p / 2;
    int b = q / 2;
    int k = (p ^ q) & 1;
    if (cocycle(a, b) < 0) k ^= 1;
    return 2 * W_.mul(a, b) + k;
  }
  int inverse(int p) const {
    int a = p / 2;
    int ai = W_.inverse(a);
    int k = p & 1;
    if (cocycle(a, ai) < 0) k ^= 1;
    return 2 * ai + k;
  }
  int parity(int p) const { return W_.element(p / 2).det() < 0 ? 1 : 0; }

  PinElement element(int p) const {
    PinUnit u = lift_[std::size_t(p / 2)];
    if (p & 1) u = -u;
    return PinElement{p / 2, u};
  }
  const PinUnit& lift(int w) const { return lift_[std::size_t(w)]; }
  const std::vector<PinElement>& generators() const { return generators_; }
  int generator_index(std::size_t k) const { return index_of(generators_[k]); }

  int index_of(const PinElement& e) const {
    const PinUnit& l = lift_[std::size_t(e.w)];
    if (e.u == l) return 2 * e.w;
    if (e.u == -l) return 2 * e.w + 1;
    throw InternalInconsistency("not an element of the cover");
  }

  /// Multiplication of concrete pairs, (w1, u1)(w2, u2) = (w1 w2, u1 u2).
  PinElement multiply(const PinElement& a, const PinElement& b) const { return PinElement{W_.mul(a.w, b.w), a.u * b.u}; }

  /// All elements in index order.
  std::vector<PinElement> closure() const {
    std::vector<PinElement> out;
    for (std::size_t p = 0; p < size(); ++p) out.push_back(element(int(p)));
    return out;
  }

  /// u gamma(v) u^-1 = (-1)^{|u|} gamma(w v) for every basis vector v.
  bool twisted_conjugation_holds(const PinElement& e) const {
    PinUnit inv = e.u.reverse();
    if (!(e.u * inv == PinUnit::scalar(d_, Qir(1)))) return false;
    int sign = e.u.parity() == 1 ? -1 : 1;
    const SignedPerm& w = W_.element(e.w);
    for (int i = 0; i < d_; ++i) {
      PinUnit lhs = e.u * PinUnit::generator(d_, i + 1) * inv;
      PinUnit rhs = PinUnit::blade(d_, Blade(1) << w.target(i), Qir(long(sign * w.sign(i))));
      if (!(lhs == rhs)) return false;
    }
    return true;
  }

  /// rho(p) = p(w~) (x) u in HC.
  HCElement rho(const Algebra& A, int p) const {
    PinElement e = element(p);
    HCElement out;
    for (const auto& [b, c] : e.u.terms()) out.add(HCKey{{}, {}, e.w, b}, Scalar(c));
    return out;
  }

  /// Conjugacy classes of W~ (by brute force), or of the even subgroup when `even_only`.
  std::vector<std::vector<int>> classes(bool even_only = false) const {
    std::size_t n = size();
    std::vector<int> cls(n, -1);
    std::vector<std::vector<int>> out;
    for (std::size_t x = 0; x < n; ++x) {
      if (cls[x] >= 0) continue;
      std::vector<int> members;
      for (std::size_t h = 0; h < n; ++h) {
        if (even_only && parity(int(h)) != 0) continue;
        int y = mul(mul(int(h), int(x)), inverse(int(h)));
        if (cls[std::size_t(y)] < 0) {
          cls[std::size_t(y)] = int(out.size());
          members.push_back(y);
        }
      }
      std::sort(members.begin(), members.end());
      out.push_back(std::move(members));
    }
    return out;
  }

 private:
  const RootDatum& rd_;
  const WeylGroup& W_;
  int d_;
  std::vector<PinUnit> lift_;
  std::vector<int> sign_;
  std::vector<PinElement> generators_;
  bool theta_seen_ = false;
};

/// Splitting data for one conjugacy class of W.
struct SplitRow {
  std::string label;
  int representative = 0;  // index in W
  int parity = 0;
  bool splits_in_cover = false;       // lift and theta*lift are not conjugate in W~
  bool splits_in_even_cover = false;  // the W~-class of the lift breaks up under W~_0
};

inline std::vector<SplitRow> split_report(const PinGroup& P) {
  auto full = P.classes(false);
  auto even = P.classes(true);
  std::vector<int> full_of(P.size());
  std::vector<int> even_of(P.size());
  for (std::size_t c = 0; c < full.size(); ++c)
    for (int m : full[c]) full_of[std::size_t(m)] = int(c);
  for (std::size_t c = 0; c < even.size(); ++c)
    for (int m : even[c]) even_of[std::size_t(m)] = int(c);
  std::vector<SplitRow> rows;
  for (const auto& cls : P.weyl().classes()) {
    SplitRow row;
    row.label = cls.label;
    row.representative = cls.representative;
    int lift = PinGroup::make(cls.representative, false);
    row.parity = P.parity(lift);
    row.splits_in_cover = full_of[std::size_t(lift)] != full_of[std::size_t(lift + 1)];
    for (int m : full[std::size_t(full_of[std::size_t(lift)])])
      if (even_of[std::size_t(m)] != even_of[std::size_t(lift)]) row.splits_in_even_cover = true;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace tama
