#pragma once

// Clifford algebra C(V, B) on orthonormal generators e_1..e_d with e_j^2 = 1.
// Basis blades e_A are bitmasks (bit j-1 <-> e_j).

#include <bit>
#include <cstdint>
#include <map>
#include <string>

#include "tama/error.hpp"
#include "tama/scalar.hpp"

namespace tama {

using Blade = std::uint32_t;

/// Sign of e_A e_B relative to e_{A xor B}: (-1)^{#{(a, b) : a in A, b in B, a > b}}.
inline int blade_sign(Blade a, Blade b) {
  int swaps = 0;
  for (Blade rest = b; rest; rest &= rest - 1) {
    int j = std::countr_zero(rest);
    swaps += std::popcount(a >> (j + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

inline int blade_grade(Blade a) { return std::popcount(a); }

/// e_A -> (-1)^{|A|} reverse(e_A) is a sign on each blade.
inline int blade_star_sign(Blade a) {
  int k = blade_grade(a);
  int e = k + k * (k - 1) / 2;
  return (e & 1) ? -1 : 1;
}

inline std::string blade_to_string(Blade a) {
  std::string out = "e{";
  bool first = true;
  for (int j = 0; j < 32; ++j) {
    if (!((a >> j) & 1U)) continue;
    if (!first) out += ",";
    out += std::to_string(j + 1);
    first = false;
  }
  return out + "}";
}

inline Scalar conjugate_of(const Scalar& a) { return a.conjugate(); }
inline Qir conjugate_of(const Qir& a) { return a.conj(); }
inline std::string coeff_string(const Scalar& a) { return a.to_string(); }
inline std::string coeff_string(const Qir& a) { return a.to_string(); }

template <class Coeff>
class CliffordElement {
 public:
  CliffordElement() = default;
  explicit CliffordElement(int d) : dim_(d) {}
  static CliffordElement scalar(int d, const Coeff& c) {
    CliffordElement out(d);
    out.add(0, c);
    return out;
  }
  static CliffordElement blade(int d, Blade a, const Coeff& c = Coeff(1)) {
    CliffordElement out(d);
    out.add(a, c);
    return out;
  }
  static CliffordElement generator(int d, int j) { return blade(d, Blade(1) << (j - 1)); }
  /// gamma(v) = sum_j v_j e_j.
  template <class Vec>
  static CliffordElement vector(int d, const Vec& v) {
    CliffordElement out(d);
    for (int j = 0; j < d; ++j) out.add(Blade(1) << j, Coeff(v[j]));
    return out;
  }

  int dim() const { return dim_; }
  const std::map<Blade, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(Blade a, const Coeff& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(a, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Coeff coefficient(Blade a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? Coeff() : it->second;
  }

  /// 0 or 1 for homogeneous elements, -1 otherwise (zero counts as even).
  int parity() const {
    int p = -1;
    for (const auto& [a, c] : terms_) {
      int q = blade_grade(a) & 1;
      if (p >= 0 && p != q) return -1;
      p = q;
    }
    return p < 0 ? 0 : p;
  }

  CliffordElement operator-() const {
    CliffordElement out = *this;
    for (auto& [a, c] : out.terms_) c = -c;
    return out;
  }
  friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) {
    check(a, b);
    if (a.dim_ == 0) a.dim_ = b.dim_;
    for (const auto& [k, c] : b.terms_) a.add(k, c);
    return a;
  }
  friend CliffordElement operator-(const CliffordElement& a, const CliffordElement& b) { return a + (-b); }
  friend CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
    check(a, b);
    CliffordElement out(a.dim_ ? a.dim_ : b.dim_);
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) {
        Coeff c = ca * cb;
        if (blade_sign(ka, kb) < 0) c = -c;
        out.add(ka ^ kb, c);
      }
    return out;
  }
  CliffordElement scaled(const Coeff& s) const {
    CliffordElement out(dim_);
    for (const auto& [k, c] : terms_) out.add(k, c * s);
    return out;
  }

  friend bool operator==(const CliffordElement& a, const CliffordElement& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const CliffordElement& a, const CliffordElement& b) { return a.terms_ < b.terms_; }

  /// Anti-involution e_A -> (-1)^{|A|} reverse(e_A), conjugate-linear.
  CliffordElement star() const {
    CliffordElement out(dim_);
    for (const auto& [k, c] : terms_) {
      Coeff v = conjugate_of(c);
      out.add(k, blade_star_sign(k) < 0 ? -v : v);
    }
    return out;
  }

  /// Reversal e_{a1}..e_{ak} -> e_{ak}..e_{a1}.
  CliffordElement reverse() const {
    CliffordElement out(dim_);
    for (const auto& [k, c] : terms_) {
      int g = blade_grade(k);
      out.add(k, ((g * (g - 1) / 2) & 1) ? -c : c);
    }
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + coeff_string(c) + ")" + blade_to_string(k);
    }
    return out;
  }

 private:
  static void check(const CliffordElement& a, const CliffordElement& b) {
    if (a.dim_ && b.dim_ && a.dim_ != b.dim_) throw DimensionMismatch("Clifford elements of different dimension");
  }

  int dim_ = 0;
  std::map<Blade, Coeff> terms_;
};

/// i^{k} for integer k.
inline Qir i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0:
      return Qir(1);
    case 1:
      return Qir::i();
    case 2:
      return Qir(-1);
    default:
      return -Qir::i();
  }
}

inline Blade full_blade(int d) { return d >= 32 ? ~Blade(0) : (Blade(1) << d) - 1; }

/// Chirality element i^{d(d-1)/2} e_1 ... e_d.
template <class Coeff = Scalar>
CliffordElement<Coeff> pseudo_scalar(int d) {
  if (d < 1) throw DimensionMismatch("pseudo-scalar needs d >= 1");
  return CliffordElement<Coeff>::blade(d, full_blade(d), Coeff(i_power(d * (d - 1) / 2)));
}

}  // namespace tama
