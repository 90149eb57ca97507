#pragma once

// HC = H_{t,c} (x) C with plain tensor multiplication; H is purely even, so the
// Z2-degree of a term is the parity of its Clifford blade.

#include <string>

#include "tama/cherednik.hpp"
#include "tama/clifford.hpp"

namespace tama {

enum class BracketKind { graded, commutator, anticommutator };

inline HCElement hc_scalar(const Algebra& A, const Scalar& s) {
  return HCElement(HCKey{{}, {}, A.group().identity(), 0}, s);
}
inline HCElement hc_one(const Algebra& A) { return hc_scalar(A, Scalar(1)); }
inline HCElement hc_x(const Algebra& A, int i) { return HCElement(HCKey{Exps::var(i), {}, A.group().identity(), 0}, Scalar(1)); }
inline HCElement hc_y(const Algebra& A, int i) { return HCElement(HCKey{{}, Exps::var(i), A.group().identity(), 0}, Scalar(1)); }
inline HCElement hc_e(const Algebra& A, int j) {
  return HCElement(HCKey{{}, {}, A.group().identity(), Blade(1) << j}, Scalar(1));
}
inline HCElement hc_blade(const Algebra& A, Blade b, const Scalar& c = Scalar(1)) {
  return HCElement(HCKey{{}, {}, A.group().identity(), b}, c);
}
inline HCElement hc_group(const Algebra& A, int g) { return HCElement(HCKey{{}, {}, g, 0}, Scalar(1)); }

inline HCElement hc_from_h(const HElement& h, Blade b = 0) {
  HCElement out;
  for (const auto& [k, c] : h.terms()) out.add(HCKey{k.x, k.y, k.g, b}, c);
  return out;
}

inline HCElement hc_from_clifford(const Algebra& A, const CliffordElement<Scalar>& u) {
  HCElement out;
  for (const auto& [b, c] : u.terms()) out.add(HCKey{{}, {}, A.group().identity(), b}, c);
  return out;
}

template <class Coeff>
HCElement hc_tensor(const HElement& h, const CliffordElement<Coeff>& u) {
  HCElement out;
  for (const auto& [k, c] : h.terms())
    for (const auto& [b, v] : u.terms()) out.add(HCKey{k.x, k.y, k.g, b}, c * Scalar(v));
  return out;
}

inline HCElement hc_mul(const Algebra& A, const HCElement& a, const HCElement& b) {
  HCElement out;
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      Scalar coeff = ca * cb;
      if (blade_sign(ka.e, kb.e) < 0) coeff = -coeff;
      Blade e = ka.e ^ kb.e;
      A.mul_monomials(ka.h(), kb.h(), coeff,
                      [&](const HKey& k, const Scalar& c) { out.add(HCKey{k.x, k.y, k.g, e}, c); });
    }
  return out;
}

/// Product of several factors, left to right.
inline HCElement hc_mul(const Algebra& A, std::initializer_list<const HCElement*> factors) {
  auto it = factors.begin();
  HCElement out = **it;
  for (++it; it != factors.end(); ++it) out = hc_mul(A, out, **it);
  return out;
}

/// 0 (even), 1 (odd), or -1 when both parities occur. Zero is even.
inline int hc_parity(const HCElement& a) {
  int p = -1;
  for (const auto& [k, c] : a.terms()) {
    int q = blade_grade(k.e) & 1;
    if (p >= 0 && p != q) return -1;
    p = q;
  }
  return p < 0 ? 0 : p;
}

inline HCElement hc_part(const HCElement& a, int parity) {
  HCElement out;
  for (const auto& [k, c] : a.terms())
    if ((blade_grade(k.e) & 1) == parity) out.add(k, c);
  return out;
}

inline HCElement hc_bracket(const Algebra& A, const HCElement& a, const HCElement& b, BracketKind kind) {
  HCElement ab = hc_mul(A, a, b);
  HCElement ba = hc_mul(A, b, a);
  switch (kind) {
    case BracketKind::commutator:
      return ab - ba;
    case BracketKind::anticommutator:
      return ab + ba;
    case BracketKind::graded: {
      int pa = hc_parity(a);
      int pb = hc_parity(b);
      if (pa < 0 || pb < 0) throw NotHomogeneous("graded bracket needs Z2-homogeneous arguments");
      return (pa & pb) ? ab + ba : ab - ba;
    }
  }
  return ab;
}

/// Graded bracket extended bilinearly over the homogeneous parts.
inline HCElement hc_graded_bracket(const Algebra& A, const HCElement& a, const HCElement& b) {
  if (hc_parity(a) >= 0 && hc_parity(b) >= 0) return hc_bracket(A, a, b, BracketKind::graded);
  HCElement out;
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q) {
      HCElement ap = hc_part(a, p);
      HCElement bq = hc_part(b, q);
      if (!ap.is_zero() && !bq.is_zero()) out += hc_bracket(A, ap, bq, BracketKind::graded);
    }
  return out;
}

inline HCElement hc_commutator(const Algebra& A, const HCElement& a, const HCElement& b) {
  return hc_bracket(A, a, b, BracketKind::commutator);
}
inline HCElement hc_anticommutator(const Algebra& A, const HCElement& a, const HCElement& b) {
  return hc_bracket(A, a, b, BracketKind::anticommutator);
}

/// The anti-involution (h (x) u)^bullet = h^* (x) u^*.
inline HCElement hc_bullet(const Algebra& A, const HCElement& a) {
  HCElement out;
  for (const auto& [k, c] : a.terms()) {
    int sign = 1;
    HKey sk = A.star_key(k.h(), sign);
    sign *= blade_star_sign(k.e);
    Scalar v = c.conjugate();
    out.add(HCKey{sk.x, sk.y, sk.g, k.e}, sign > 0 ? v : -v);
  }
  return out;
}

inline std::string hc_key_to_string(const Algebra& A, const HCKey& k) {
  return A.key_to_string(k.h()) + " ⊗ " + blade_to_string(k.e);
}

inline std::string hc_term_to_string(const Algebra& A, const HCKey& k, const Scalar& c) {
  return "(" + c.to_string() + ") " + hc_key_to_string(A, k);
}

/// Canonical serialisation: sorted terms joined by " + ".
inline std::string hc_to_string(const Algebra& A, const HCElement& a, std::size_t max_terms = 0) {
  if (a.is_zero()) return "0";
  auto terms = a.sorted();
  std::string out;
  std::size_t n = 0;
  for (const auto& [k, c] : terms) {
    if (max_terms && n == max_terms) {
      out += " + ... (" + std::to_string(terms.size() - n) + " more terms)";
      break;
    }
    if (n++) out += " + ";
    out += hc_term_to_string(A, k, c);
  }
  return out;
}

/// First term in canonical order, used as a failure witness.
inline std::string hc_witness(const Algebra& A, const HCElement& a) {
  if (a.is_zero()) return "";
  auto terms = a.sorted();
  std::string w = hc_term_to_string(A, terms.front().first, terms.front().second);
  if (terms.size() > 1) w += " (+" + std::to_string(terms.size() - 1) + " more terms)";
  return w;
}

}  // namespace tama
