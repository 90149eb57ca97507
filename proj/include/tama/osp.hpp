#pragma once

// The osp(1|2) realisation inside HC and the projection P onto the graded centraliser.

#include <string>
#include <utility>
#include <vector>

#include "tama/hc_algebra.hpp"

namespace tama {

struct BracketCheck {
  std::string name;   // e.g. "[F+,F-] = H"
  HCElement residual; // lhs - rhs
};

class Osp {
 public:
  explicit Osp(const Algebra& A) : A_(A) {
    int d = A.dim();
    const Scalar& s = A.params().s;
    const Scalar& t = A.params().t;
    Scalar inv_s = Scalar(1) / s;
    Scalar half_inv_t = Scalar(1) / (Scalar(2) * t);
    for (std::size_t r = 0; r < A.root_datum().positive_roots().size(); ++r) {
      const Scalar& c = A.params().c_of(A.root_datum().root(int(r)));
      if (!c.is_zero()) omega_c_ += hc_group(A, A.group().reflection(int(r))) * c;
    }
    HCElement euler;
    for (int p = 0; p < d; ++p) {
      fplus_ += hc_mul(A, hc_x(A, p), hc_e(A, p)) * inv_s;
      fminus_ += hc_mul(A, hc_y(A, p), hc_e(A, p)) * inv_s;
      eplus_ += hc_mul(A, hc_x(A, p), hc_x(A, p)) * half_inv_t;
      eminus_ += hc_mul(A, hc_y(A, p), hc_y(A, p)) * (-half_inv_t);
      euler += hc_mul(A, hc_x(A, p), hc_y(A, p));
    }
    // (1/t)(sum x_p y_p + t d/2 - Omega_c)
    h_ = (euler + hc_scalar(A, t * Scalar::frac(d, 2)) - omega_c_) * (Scalar(1) / t);
    HCElement half = hc_scalar(A, Scalar::frac(1, 2));
    scasimir_ = mul(fminus_, fplus_) - mul(fplus_, fminus_) - half;
    casimir_sl2_ = mul(h_, h_) + (mul(eplus_, eminus_) + mul(eminus_, eplus_)) * Scalar(2);
    casimir_ = casimir_sl2_ - (mul(fplus_, fminus_) - mul(fminus_, fplus_));
  }

  const Algebra& algebra() const { return A_; }
  const HCElement& fplus() const { return fplus_; }
  const HCElement& fminus() const { return fminus_; }
  const HCElement& eplus() const { return eplus_; }
  const HCElement& eminus() const { return eminus_; }
  const HCElement& h() const { return h_; }
  const HCElement& omega_c() const { return omega_c_; }
  const HCElement& scasimir() const { return scasimir_; }
  const HCElement& casimir() const { return casimir_; }
  const HCElement& casimir_sl2() const { return casimir_sl2_; }

  /// The five generators with their names.
  std::vector<std::pair<std::string, const HCElement*>> generators() const {
    return {{"F+", &fplus_}, {"F-", &fminus_}, {"E+", &eplus_}, {"E-", &eminus_}, {"H", &h_}};
  }

  HCElement mul(const HCElement& a, const HCElement& b) const { return hc_mul(A_, a, b); }
  HCElement bracket(const HCElement& a, const HCElement& b) const { return hc_graded_bracket(A_, a, b); }

  /// The ten bracket identities of the osp(1|2) table (the +/- forms listed separately).
  std::vector<BracketCheck> bracket_table() const {
    std::vector<BracketCheck> out;
    auto add = [&](std::string name, const HCElement& lhs, const HCElement& rhs) {
      out.push_back({std::move(name), lhs - rhs});
    };
    add("[F+,F-] = H", bracket(fplus_, fminus_), h_);
    add("[H,F+] = F+", bracket(h_, fplus_), fplus_);
    add("[H,F-] = -F-", bracket(h_, fminus_), -fminus_);
    add("[F+,F+] = 2E+", bracket(fplus_, fplus_), eplus_ * Scalar(2));
    add("[F-,F-] = -2E-", bracket(fminus_, fminus_), eminus_ * Scalar(-2));
    add("[E+,E-] = H", bracket(eplus_, eminus_), h_);
    add("[H,E+] = 2E+", bracket(h_, eplus_), eplus_ * Scalar(2));
    add("[H,E-] = -2E-", bracket(h_, eminus_), eminus_ * Scalar(-2));
    add("[F+,E-] = F-", bracket(fplus_, eminus_), fminus_);
    add("[F-,E+] = F+", bracket(fminus_, eplus_), fplus_);
    return out;
  }

  /// S^2 - Omega_osp - 1/4.
  HCElement scasimir_square_residual() const {
    return mul(scasimir_, scasimir_) - casimir_ - hc_scalar(A_, Scalar::frac(1, 4));
  }

  /// First nonvanishing [a, g] over the five generators; empty name when a is in the centraliser.
  std::pair<std::string, HCElement> centraliser_witness(const HCElement& a, bool even_part_only = false) const {
    for (const auto& [name, g] : generators()) {
      if (even_part_only && name[0] == 'F') continue;
      HCElement b = bracket(a, *g);
      if (!b.is_zero()) return {name, b};
    }
    return {"", HCElement()};
  }
  bool in_centraliser(const HCElement& a) const { return centraliser_witness(a).first.empty(); }

  /// P(a) = a - [F-, [F+, a]] (graded brackets). Throws when a does not commute with E+, E-, H.
  HCElement project(const HCElement& a, bool check = true) const {
    if (check) {
      auto [name, w] = centraliser_witness(a, true);
      if (!name.empty())
        throw PreconditionFailed("argument of P does not commute with " + name, hc_witness(A_, w));
    }
    return a - bracket(fminus_, bracket(fplus_, a));
  }

 private:
  const Algebra& A_;
  HCElement fplus_, fminus_, eplus_, eminus_, h_, omega_c_, scasimir_, casimir_, casimir_sl2_;
};

}  // namespace tama
