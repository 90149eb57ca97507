#pragma once

// Class sums in the group algebra of W~, the epsilon-centre of CW~_-, admissible
// elements, and the partition criteria for symmetric groups.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "tama/linalg.hpp"
#include "tama/pin_cover.hpp"

namespace tama {

/// Element of CW~: cover index -> coefficient.
using CoverElement = std::map<int, Qir>;

/// Element of CW~_- in the basis rho(lift(w)), w in W.
using MinusElement = std::vector<Qir>;

inline void cover_add(CoverElement& a, int p, const Qir& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = a.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) a.erase(it);
  }
}

inline bool is_zero(const MinusElement& a) {
  return std::all_of(a.begin(), a.end(), [](const Qir& v) { return v.is_zero(); });
}

/// rho restricted to CW~, landing in CW~_- (rho(theta) = -1).
inline MinusElement to_minus(const PinGroup& P, const CoverElement& a) {
  MinusElement out(P.weyl().size(), Qir());
  for (const auto& [p, c] : a) {
    if (p & 1)
      out[std::size_t(p / 2)] -= c;
    else
      out[std::size_t(p / 2)] += c;
  }
  return out;
}

inline MinusElement minus_mul(const PinGroup& P, const MinusElement& a, const MinusElement& b) {
  const WeylGroup& W = P.weyl();
  MinusElement out(W.size(), Qir());
  for (std::size_t u = 0; u < a.size(); ++u) {
    if (a[u].is_zero()) continue;
    for (std::size_t v = 0; v < b.size(); ++v) {
      if (b[v].is_zero()) continue;
      Qir c = a[u] * b[v];
      std::size_t w = std::size_t(W.mul(int(u), int(v)));
      if (P.cocycle(int(u), int(v)) < 0)
        out[w] -= c;
      else
        out[w] += c;
    }
  }
  return out;
}

inline MinusElement minus_basis(const PinGroup& P, int w, const Qir& c = Qir(1)) {
  MinusElement out(P.weyl().size(), Qir());
  out[std::size_t(w)] = c;
  return out;
}

/// rho(lift(w))^bullet = (-1)^{|w|} rho(lift(w)^-1), extended conjugate-linearly.
inline MinusElement minus_bullet(const PinGroup& P, const MinusElement& a) {
  MinusElement out(a.size(), Qir());
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (a[w].is_zero()) continue;
    int inv = P.inverse(PinGroup::make(int(w), false));
    int sign = (inv & 1) ? -1 : 1;
    if (P.parity(inv)) sign = -sign;
    Qir v = a[w].conj();
    out[std::size_t(inv / 2)] += sign > 0 ? v : -v;
  }
  return out;
}

/// 0, 1, or -1 when both parities occur (zero counts as even).
inline int minus_parity(const PinGroup& P, const MinusElement& a) {
  int p = -1;
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (a[w].is_zero()) continue;
    int q = P.parity(PinGroup::make(int(w), false));
    if (p >= 0 && p != q) return -1;
    p = q;
  }
  return p < 0 ? 0 : p;
}

/// The HC image of an element of CW~_-.
inline HCElement minus_to_hc(const PinGroup& P, const MinusElement& a) {
  HCElement out;
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (a[w].is_zero()) continue;
    for (const auto& [b, c] : P.lift(int(w)).terms()) out.add(HCKey{{}, {}, int(w), b}, Scalar(c * a[w]));
  }
  return out;
}

enum class SumKind { T, T_theta };

/// T_g = sum_{w~} w~^-1 g w~, or T^theta_g = sum theta^{|w~|} w~^-1 g w~.
inline CoverElement class_sum(const PinGroup& P, int g, SumKind kind) {
  CoverElement out;
  for (int p = 0; p < int(P.size()); ++p) {
    int conj = P.mul(P.mul(P.inverse(p), g), p);
    if (kind == SumKind::T_theta && P.parity(p)) conj = P.mul(PinGroup::theta(), conj);
    cover_add(out, conj, Qir(1));
  }
  return out;
}

/// Linear conditions a b - eps(b) b a = 0 for b ranging over generator lifts.
inline Matrix<Qir> epsilon_centre_system(const PinGroup& P) {
  std::size_t n = P.weyl().size();
  int d = P.dim();
  Matrix<Qir> rows;
  for (std::size_t k = 0; k < P.generators().size(); ++k) {
    int g = P.generator_index(k);
    int eps = (d % 2 == 0 && P.parity(g)) ? -1 : 1;
    MinusElement b = minus_basis(P, g / 2, (g & 1) ? Qir(-1) : Qir(1));
    // column u: image of basis vector rho(lift(u)) under a -> a b - eps b a
    Matrix<Qir> block = zero_matrix<Qir>(n, n);
    for (std::size_t u = 0; u < n; ++u) {
      MinusElement a = minus_basis(P, int(u));
      MinusElement ab = minus_mul(P, a, b);
      MinusElement ba = minus_mul(P, b, a);
      for (std::size_t r = 0; r < n; ++r) {
        Qir v = eps > 0 ? ab[r] - ba[r] : ab[r] + ba[r];
        block[r][u] = v;
      }
    }
    for (auto& row : block)
      if (std::any_of(row.begin(), row.end(), [](const Qir& v) { return !v.is_zero(); })) rows.push_back(std::move(row));
  }
  return rows;
}

inline std::vector<MinusElement> brute_force_epsilon_centre(const PinGroup& P) {
  Matrix<Qir> sys = epsilon_centre_system(P);
  return nullspace(sys, P.weyl().size());
}

inline bool is_epsilon_central(const PinGroup& P, const MinusElement& a) {
  Matrix<Qir> sys = epsilon_centre_system(P);
  for (const auto& row : sys) {
    Qir acc;
    for (std::size_t k = 0; k < row.size(); ++k)
      if (!row[k].is_zero() && !a[k].is_zero()) acc += row[k] * a[k];
    if (!acc.is_zero()) return false;
  }
  return true;
}

/// One spanning element per conjugacy class of W.
struct ClassElement {
  std::string label;
  int representative = 0;
  int parity = 0;
  bool splits_in_cover = false;
  bool splits_in_even_cover = false;
  SumKind kind = SumKind::T;
  MinusElement value;        // rho of the class sum
  MinusElement admissible;   // value or i * value, whichever is bullet-fixed
  bool nonzero = false;
  bool self_adjoint = false;        // admissible^bullet = admissible
  bool grading_factor_self_adjoint = false;  // i^{|g|} value (d odd) or value (d even) is bullet-fixed
  bool uses_i = false;
  std::string reason;        // why a zero sum vanished
};

/// The spanning set of the epsilon-centre by class sums: rho(T_g) for d odd, rho(T^theta_g) for d even.
inline std::vector<ClassElement> class_elements(const PinGroup& P) {
  int d = P.dim();
  auto split = split_report(P);
  std::vector<ClassElement> out;
  for (const auto& row : split) {
    ClassElement ce;
    ce.label = row.label;
    ce.representative = row.representative;
    ce.parity = row.parity;
    ce.splits_in_cover = row.splits_in_cover;
    ce.splits_in_even_cover = row.splits_in_even_cover;
    ce.kind = d % 2 ? SumKind::T : SumKind::T_theta;
    int g = PinGroup::make(row.representative, false);
    ce.value = to_minus(P, class_sum(P, g, ce.kind));
    ce.nonzero = !is_zero(ce.value);
    if (!ce.nonzero) {
      if (d % 2 == 1)
        ce.reason = "class does not split in the cover";
      else if (ce.parity == 1)
        ce.reason = "odd class";
      else
        ce.reason = "class does not split in the even cover";
    }
    auto times_i = [](MinusElement v) {
      for (auto& x : v) x = x * Qir::i();
      return v;
    };
    MinusElement graded = (d % 2 == 1 && ce.parity == 1) ? times_i(ce.value) : ce.value;
    ce.grading_factor_self_adjoint = minus_bullet(P, graded) == graded;
    ce.admissible = ce.value;
    if (!(minus_bullet(P, ce.admissible) == ce.admissible)) {
      ce.admissible = times_i(ce.value);
      ce.uses_i = true;
    }
    ce.self_adjoint = minus_bullet(P, ce.admissible) == ce.admissible;
    out.push_back(std::move(ce));
  }
  return out;
}

/// Nonzero class elements, checked to be linearly independent.
inline std::vector<MinusElement> epsilon_centre_basis(const PinGroup& P) {
  std::vector<MinusElement> out;
  for (const auto& ce : class_elements(P))
    if (ce.nonzero) out.push_back(ce.admissible);
  if (span_rank(out) != out.size()) throw InternalInconsistency("class-sum spanning set is linearly dependent");
  return out;
}

struct CentreComparison {
  std::size_t class_sum_dim = 0;
  std::size_t brute_force_dim = 0;
  bool spans_equal = false;
};

inline CentreComparison compare_epsilon_centres(const PinGroup& P) {
  CentreComparison c;
  auto basis = epsilon_centre_basis(P);
  auto brute = brute_force_epsilon_centre(P);
  c.class_sum_dim = basis.size();
  c.brute_force_dim = brute.size();
  std::vector<MinusElement> all = basis;
  all.insert(all.end(), brute.begin(), brute.end());
  std::size_t joint = span_rank(all);
  c.spans_equal = joint == basis.size() && joint == brute.size();
  return c;
}

/// Partitions of n in non-increasing order.
inline std::vector<std::vector<int>> partitions(int n, int max_part = -1) {
  if (max_part < 0) max_part = n;
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int k = std::min(n, max_part); k >= 1; --k)
    for (auto rest : partitions(n - k, k)) {
      rest.insert(rest.begin(), k);
      out.push_back(std::move(rest));
    }
  return out;
}

inline std::string partition_label(const std::vector<int>& p) {
  std::string out = "(";
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(p[k]);
  }
  return out + ")";
}

inline bool all_parts_odd(const std::vector<int>& p) {
  return std::all_of(p.begin(), p.end(), [](int v) { return v % 2 == 1; });
}
inline bool distinct_parts(const std::vector<int>& p) { return std::adjacent_find(p.begin(), p.end()) == p.end(); }
inline bool even_permutation(const std::vector<int>& p) {
  int n = 0;
  for (int v : p) n += v;
  return (n - int(p.size())) % 2 == 0;
}

/// Cycle types predicted to carry admissible elements.
struct PartitionPrediction {
  std::vector<std::string> parity_rule;  // d odd: no even parts; d even: distinct parts, even permutation
  std::vector<std::string> schur;      // d odd: all parts odd, or odd permutation with distinct parts; d even: as parity_rule
};

inline PartitionPrediction sn_partition_predictions(int n, int d_parity) {
  PartitionPrediction out;
  for (const auto& p : partitions(n)) {
    std::string label = partition_label(p);
    if (d_parity == 1) {
      if (all_parts_odd(p)) out.parity_rule.push_back(label);
      if (all_parts_odd(p) || (!even_permutation(p) && distinct_parts(p))) out.schur.push_back(label);
    } else if (distinct_parts(p) && even_permutation(p)) {
      out.parity_rule.push_back(label);
      out.schur.push_back(label);
    }
  }
  std::sort(out.parity_rule.begin(), out.parity_rule.end());
  std::sort(out.schur.begin(), out.schur.end());
  return out;
}

/// Cycle types whose class element is nonzero, as labels of the form "(3,1)" (fixed points included).
inline std::vector<std::string> brute_force_admissible_types(const PinGroup& P) {
  std::vector<std::string> out;
  int n = P.root_datum().rank() + 1;
  for (const auto& ce : class_elements(P)) {
    if (!ce.nonzero) continue;
    auto ct = cycle_type(P.weyl().element(ce.representative), n);
    out.push_back(partition_label(ct));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tama
