#pragma once

// Exact coefficient field K = Q(i, r)(s, c1, ..., c7) with i^2 = -1, r^2 = 2.
// The Cherednik parameter is t = s^2/2, so sqrt(2t) = s stays rational in s.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tama/error.hpp"

namespace tama {

using Rational = mpq_class;

/// Canonical n/d (mpq_class(n, d) alone does not reduce).
inline Rational make_rational(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

/// Element a + b*i + c*r + d*i*r of Q(i, sqrt 2).
class Qir {
 public:
  Qir() = default;
  Qir(long v) : c_{Rational(v), Rational(0), Rational(0), Rational(0)} {}  // NOLINT
  Qir(const Rational& v) : c_{v, Rational(0), Rational(0), Rational(0)} {}  // NOLINT
  Qir(Rational a, Rational b, Rational c, Rational d)
      : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    for (auto& x : c_) x.canonicalize();
  }

  static Qir i() { return {0, 1, 0, 0}; }
  static Qir r() { return {0, 0, 1, 0}; }
  static Qir frac(long num, long den) { return Qir(make_rational(num, den)); }

  const Rational& operator[](int k) const { return c_[k]; }

  bool is_zero() const {
    return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
  }
  bool is_rational() const { return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }
  bool is_one() const { return is_rational() && c_[0] == 1; }

  Qir operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

  Qir& operator+=(const Qir& o) {
    for (int k = 0; k < 4; ++k)
      if (sgn(o.c_[k]) != 0) c_[k] += o.c_[k];
    return *this;
  }
  Qir& operator-=(const Qir& o) {
    for (int k = 0; k < 4; ++k)
      if (sgn(o.c_[k]) != 0) c_[k] -= o.c_[k];
    return *this;
  }
  friend Qir operator+(Qir a, const Qir& b) { return a += b; }
  friend Qir operator-(Qir a, const Qir& b) { return a -= b; }

  friend Qir operator*(const Qir& a, const Qir& b) {
    if (a.is_rational() && b.is_rational()) return Qir(Rational(a.c_[0] * b.c_[0]));
    Qir out;
    // basis products: i*i = -1, r*r = 2, i*r = ir, i*ir = -r, r*ir = 2i, ir*ir = -2
    static constexpr int kTarget[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static constexpr int kFactor[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, 2, 2}, {1, -1, 2, -2}};
    for (int p = 0; p < 4; ++p) {
      if (sgn(a.c_[p]) == 0) continue;
      for (int q = 0; q < 4; ++q) {
        if (sgn(b.c_[q]) == 0) continue;
        Rational prod = a.c_[p] * b.c_[q];
        if (kFactor[p][q] != 1) prod *= Rational(kFactor[p][q]);
        out.c_[kTarget[p][q]] += prod;
      }
    }
    return out;
  }
  Qir& operator*=(const Qir& o) { return *this = *this * o; }

  /// Complex conjugation: i -> -i, r fixed.
  Qir conj() const { return {c_[0], -c_[1], c_[2], -c_[3]}; }

  Qir inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (is_rational()) return Qir(Rational(1 / c_[0]));
    // z * conj(z) = u + v r lies in Q(r); (u + v r)^-1 = (u - v r) / (u^2 - 2 v^2).
    Qir zc = *this * conj();
    const Rational& u = zc.c_[0];
    const Rational& v = zc.c_[2];
    Rational n = u * u - Rational(2) * v * v;
    return conj() * Qir(Rational(u / n), 0, Rational(-v / n), 0);
  }
  friend Qir operator/(const Qir& a, const Qir& b) { return a * b.inverse(); }

  friend bool operator==(const Qir& a, const Qir& b) { return a.c_ == b.c_; }
  friend bool operator<(const Qir& a, const Qir& b) {
    for (int k = 0; k < 4; ++k) {
      if (a.c_[k] != b.c_[k]) return a.c_[k] < b.c_[k];
    }
    return false;
  }

  /// Least common multiple of the component denominators.
  mpz_class denominator_lcm() const {
    mpz_class l = 1;
    for (const auto& x : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
  }

  /// `a+b*i+c*r+d*i*r` with zero components omitted; components must be integers
  /// after multiplying by `scale`.
  std::string to_string(const mpz_class& scale = 1) const {
    static const char* kUnit[4] = {"", "i", "r", "i*r"};
    std::string out;
    for (int k = 0; k < 4; ++k) {
      if (sgn(c_[k]) == 0) continue;
      Rational v = c_[k] * scale;
      std::string num = v.get_num().get_str();
      if (v.get_den() != 1) num += "/" + v.get_den().get_str();
      if (!out.empty() && num[0] != '-') out += "+";
      if (k == 0) {
        out += num;
      } else if (num == "1") {
        out += kUnit[k];
      } else if (num == "-1") {
        out += std::string("-") + kUnit[k];
      } else {
        out += num + "*" + kUnit[k];
      }
    }
    return out.empty() ? "0" : out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Qir& q) { return os << q.to_string(); }

  int nonzero_components() const {
    int n = 0;
    for (const auto& x : c_) n += sgn(x) != 0;
    return n;
  }

 private:
  std::array<Rational, 4> c_{};
};

inline constexpr int kMaxVars = 8;

/// Packed exponent vector over (s, c1, ..., c7); one byte per variable, s in the top byte
/// so that integer comparison is lexicographic with s most significant.
struct Mono {
  std::uint64_t bits = 0;

  static Mono var(int k, int e = 1) { return Mono{std::uint64_t(e) << (8 * (7 - k))}; }
  int exp(int k) const { return int((bits >> (8 * (7 - k))) & 0xffU); }
  int degree() const { return int((bits * 0x0101010101010101ULL) >> 56); }
  bool is_one() const { return bits == 0; }

  friend Mono operator*(Mono a, Mono b) { return Mono{a.bits + b.bits}; }
  bool divides(Mono b) const {
    for (int k = 0; k < kMaxVars; ++k)
      if (exp(k) > b.exp(k)) return false;
    return true;
  }
  friend Mono operator/(Mono a, Mono b) { return Mono{a.bits - b.bits}; }
  static Mono min(Mono a, Mono b) {
    Mono out;
    for (int k = 0; k < kMaxVars; ++k) out.bits |= Mono::var(k, std::min(a.exp(k), b.exp(k))).bits;
    return out;
  }
  static Mono max(Mono a, Mono b) {
    Mono out;
    for (int k = 0; k < kMaxVars; ++k) out.bits |= Mono::var(k, std::max(a.exp(k), b.exp(k))).bits;
    return out;
  }
  friend bool operator==(Mono a, Mono b) { return a.bits == b.bits; }
};

/// Graded-lexicographic order on monomials.
inline bool grlex_less(Mono a, Mono b) {
  int da = a.degree();
  int db = b.degree();
  return da != db ? da < db : a.bits < b.bits;
}

inline std::string variable_name(int k) { return k == 0 ? "s" : "c" + std::to_string(k); }

/// Sparse polynomial over Q(i, r); terms kept strictly descending in grlex order.
class Poly {
 public:
  struct Term {
    Mono m;
    Qir c;
  };

  Poly() = default;
  static Poly constant(const Qir& c) {
    Poly p;
    if (!c.is_zero()) p.terms_.push_back({Mono{}, c});
    return p;
  }
  static Poly monomial(Mono m, const Qir& c) {
    Poly p;
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
  }
  static Poly one() { return constant(Qir(1)); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].m.is_one() && terms_[0].c.is_one(); }
  bool is_monomial() const { return terms_.size() == 1; }
  const Term& lead() const { return terms_.front(); }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k) {
      if (!(a.terms_[k].m == b.terms_[k].m) || !(a.terms_[k].c == b.terms_[k].c)) return false;
    }
    return true;
  }

  Poly operator-() const {
    Poly out = *this;
    for (auto& t : out.terms_) t.c = -t.c;
    return out;
  }

  friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].m, a.terms_[0].c);
    if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].m, b.terms_[0].c);
    std::vector<Term> raw;
    raw.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) raw.push_back({x.m * y.m, x.c * y.c});
    return from_unsorted(std::move(raw));
  }

  Poly mul_term(Mono m, const Qir& c) const {
    if (c.is_zero()) return {};
    Poly out;
    out.terms_.reserve(terms_.size());
    const bool unit = c.is_one();
    for (const auto& t : terms_) out.terms_.push_back({t.m * m, unit ? t.c : t.c * c});
    return out;
  }
  Poly scaled(const Qir& c) const { return mul_term(Mono{}, c); }

  /// Divides every monomial by `m`; `m` must divide all of them.
  Poly div_mono(Mono m) const {
    Poly out = *this;
    for (auto& t : out.terms_) t.m = t.m / m;
    return out;
  }

  /// Greatest monomial dividing every term.
  Mono mono_content() const {
    if (terms_.empty()) return Mono{};
    Mono g = terms_[0].m;
    for (const auto& t : terms_) g = Mono::min(g, t.m);
    return g;
  }

  Poly monic() const {
    if (terms_.empty() || terms_[0].c.is_one()) return *this;
    return scaled(terms_[0].c.inverse());
  }

  Poly conj() const {
    Poly out = *this;
    for (auto& t : out.terms_) t.c = t.c.conj();
    return out;
  }

  /// Exact quotient a / b, or nothing when b does not divide a.
  static std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (b.is_monomial()) {
      const Term& lt = b.lead();
      Poly out;
      out.terms_.reserve(a.terms_.size());
      Qir inv = lt.c.inverse();
      for (const auto& t : a.terms_) {
        if (!lt.m.divides(t.m)) return std::nullopt;
        out.terms_.push_back({t.m / lt.m, t.c * inv});
      }
      return out;
    }
    Poly rem = a;
    std::vector<Term> quot;
    const Term& lt = b.lead();
    Qir inv = lt.c.inverse();
    while (!rem.is_zero()) {
      const Term& r = rem.lead();
      if (!lt.m.divides(r.m)) return std::nullopt;
      Term q{r.m / lt.m, r.c * inv};
      rem = rem - b.mul_term(q.m, q.c);
      quot.push_back(std::move(q));
    }
    return from_unsorted(std::move(quot));
  }

  int degree_in(int v) const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.m.exp(v));
    return d;
  }
  int max_var() const {
    int v = -1;
    for (const auto& t : terms_)
      for (int k = kMaxVars - 1; k > v; --k)
        if (t.m.exp(k) > 0) {
          v = k;
          break;
        }
    return v;
  }
  int total_degree() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.m.degree());
    return d;
  }

  /// Coefficient of v^e, as a polynomial in the remaining variables.
  Poly coefficient_of(int v, int e) const {
    std::vector<Term> raw;
    Mono ve = Mono::var(v, e);
    for (const auto& t : terms_)
      if (t.m.exp(v) == e) raw.push_back({t.m / ve, t.c});
    return from_unsorted(std::move(raw));
  }

  Qir evaluate(std::span<const Qir> values) const {
    Qir acc;
    for (const auto& t : terms_) {
      Qir term = t.c;
      for (int k = 0; k < kMaxVars; ++k) {
        for (int e = t.m.exp(k); e > 0; --e) term *= values[std::size_t(k)];
      }
      acc += term;
    }
    return acc;
  }

  mpz_class denominator_lcm() const {
    mpz_class l = 1;
    for (const auto& t : terms_) {
      mpz_class d = t.c.denominator_lcm();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    return l;
  }

  /// Canonical text: terms in descending grlex order, coefficients scaled by `scale`.
  std::string to_string(const mpz_class& scale = 1) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
      std::string mono;
      for (int k = 0; k < kMaxVars; ++k) {
        int e = t.m.exp(k);
        if (e == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += variable_name(k);
        if (e > 1) mono += "^" + std::to_string(e);
      }
      std::string coeff = t.c.to_string(scale);
      std::string term;
      if (mono.empty()) {
        term = coeff;
      } else if (coeff == "1") {
        term = mono;
      } else if (coeff == "-1") {
        term = "-" + mono;
      } else if (t.c.nonzero_components() > 1) {
        term = "(" + coeff + ")*" + mono;
      } else {
        term = coeff + "*" + mono;
      }
      if (!out.empty() && term[0] != '-') out += "+";
      out += term;
    }
    return out;
  }

  static Poly from_unsorted(std::vector<Term> raw) {
    std::sort(raw.begin(), raw.end(), [](const Term& a, const Term& b) { return grlex_less(b.m, a.m); });
    Poly out;
    out.terms_.reserve(raw.size());
    for (auto& t : raw) {
      if (!out.terms_.empty() && out.terms_.back().m == t.m) {
        out.terms_.back().c += t.c;
      } else {
        if (!out.terms_.empty() && out.terms_.back().c.is_zero()) out.terms_.pop_back();
        out.terms_.push_back(std::move(t));
      }
    }
    if (!out.terms_.empty() && out.terms_.back().c.is_zero()) out.terms_.pop_back();
    return out;
  }

 private:
  static Poly merge(const Poly& a, const Poly& b, bool negate_b) {
    Poly out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && grlex_less(b.terms_[j].m, a.terms_[i].m))) {
        out.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || grlex_less(a.terms_[i].m, b.terms_[j].m)) {
        out.terms_.push_back(b.terms_[j++]);
        if (negate_b) out.terms_.back().c = -out.terms_.back().c;
      } else {
        Qir c = a.terms_[i].c;
        if (negate_b) {
          c -= b.terms_[j].c;
        } else {
          c += b.terms_[j].c;
        }
        if (!c.is_zero()) out.terms_.push_back({a.terms_[i].m, std::move(c)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::vector<Term> terms_;
};

namespace detail {

inline Poly content_in(const Poly& p, int v);
inline Poly poly_gcd(const Poly& a, const Poly& b);

inline Poly exact(const Poly& a, const Poly& b) {
  auto q = Poly::divide_exact(a, b);
  if (!q) throw InternalInconsistency("polynomial division expected to be exact");
  return *q;
}

inline Poly pseudo_remainder(const Poly& a, const Poly& b, int v) {
  int n = b.degree_in(v);
  Poly lcb = b.coefficient_of(v, n);
  Poly r = a;
  for (int k = a.degree_in(v) - n; k >= 0; --k) {
    if (r.is_zero()) break;
    if (r.degree_in(v) == n + k) {
      Poly lcr = r.coefficient_of(v, n + k);
      r = lcb * r - lcr * b.mul_term(Mono::var(v, k), Qir(1));
    } else {
      r = lcb * r;
    }
  }
  return r;
}

inline Poly primitive_in(const Poly& p, int v) { return exact(p, content_in(p, v)); }

inline Poly content_in(const Poly& p, int v) {
  Poly g;
  for (int e = p.degree_in(v); e >= 0; --e) {
    Poly c = p.coefficient_of(v, e);
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : poly_gcd(g, c);
    if (g.is_one()) break;
  }
  return g.is_zero() ? Poly::one() : g;
}

inline Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly::one();
  if (a.is_monomial() && b.is_monomial()) return Poly::monomial(Mono::min(a.lead().m, b.lead().m), Qir(1));
  int v = std::max(a.max_var(), b.max_var());
  if (a.degree_in(v) == 0) return poly_gcd(a, content_in(b, v));
  if (b.degree_in(v) == 0) return poly_gcd(content_in(a, v), b);
  Poly ca = content_in(a, v);
  Poly cb = content_in(b, v);
  Poly g = poly_gcd(ca, cb);
  Poly pa = exact(a, ca);
  Poly pb = exact(b, cb);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  while (true) {
    Poly r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) {
      pb = Poly::one();
      break;
    }
    pa = std::move(pb);
    pb = primitive_in(r, v);
  }
  return (g * primitive_in(pb, v)).monic();
}

}  // namespace detail

/// Monic greatest common divisor of two polynomials.
inline Poly gcd(const Poly& a, const Poly& b) { return detail::poly_gcd(a, b); }

/// Element of K in canonical form: reduced fraction with monic denominator; zero is 0/1.
class Scalar {
 public:
  Scalar() : den_(Poly::one()) {}
  Scalar(long v) : num_(Poly::constant(Qir(v))), den_(Poly::one()) {}  // NOLINT
  Scalar(const Rational& v) : num_(Poly::constant(Qir(v))), den_(Poly::one()) {}  // NOLINT
  Scalar(const Qir& v) : num_(Poly::constant(v)), den_(Poly::one()) {}  // NOLINT
  explicit Scalar(Poly p) : num_(std::move(p)), den_(Poly::one()) {}
  Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    normalize();
  }

  static Scalar frac(long n, long d) { return Scalar(make_rational(n, d)); }
  static Scalar var(int k) { return Scalar(Poly::monomial(Mono::var(k), Qir(1))); }
  static Scalar s() { return var(0); }
  static Scalar c(int k) { return var(k); }
  /// t = s^2 / 2
  static Scalar t() { return Scalar(Poly::monomial(Mono::var(0, 2), Qir::frac(1, 2))); }
  static Scalar i() { return Scalar(Qir::i()); }
  static Scalar r() { return Scalar(Qir::r()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Value of a constant scalar.
  Qir constant_value() const {
    if (!is_constant()) throw Error("scalar is not constant: " + to_string());
    return num_.is_zero() ? Qir() : num_.lead().c;
  }

  Scalar operator-() const {
    Scalar out = *this;
    out.num_ = -out.num_;
    return out;
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.is_one() && b.den_.is_one()) return Scalar(a.num_ + b.num_, Raw{});
    if (a.den_.is_monomial() && b.den_.is_monomial()) {
      Mono ma = a.den_.lead().m;
      Mono mb = b.den_.lead().m;
      Mono l = Mono::max(ma, mb);
      Poly n = a.num_.mul_term(l / ma, Qir(1)) + b.num_.mul_term(l / mb, Qir(1));
      Scalar out(std::move(n), Poly::monomial(l, Qir(1)), Raw{});
      out.normalize_monomial_den();
      return out;
    }
    if (a.den_ == b.den_) return Scalar(a.num_ + b.num_, a.den_);
    return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return Scalar();
    if (a.den_.is_one() && b.den_.is_one()) return Scalar(a.num_ * b.num_, Raw{});
    if (a.den_.is_monomial() && b.den_.is_monomial()) {
      Scalar out(a.num_ * b.num_, Poly::monomial(a.den_.lead().m * b.den_.lead().m, Qir(1)), Raw{});
      out.normalize_monomial_den();
      return out;
    }
    return Scalar(a.num_ * b.num_, a.den_ * b.den_);
  }

  Scalar inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Scalar(den_, num_);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  /// i -> -i; s and the c_k are real parameters.
  Scalar conjugate() const {
    Scalar out = *this;
    out.num_ = num_.conj();
    out.den_ = den_.conj();
    return out;
  }

  /// Substitutes values for (s, c1, ...); throws DivisionByZero if the denominator vanishes.
  Qir evaluate(std::span<const Qir> values) const {
    Qir d = den_.evaluate(values);
    if (d.is_zero()) throw DivisionByZero();
    return num_.evaluate(values) / d;
  }

  /// Substitutes scalars for variables (used to specialise or collapse parameters).
  Scalar substitute(std::span<const Scalar> values) const {
    auto eval = [&](const Poly& p) {
      Scalar acc;
      for (const auto& t : p.terms()) {
        Scalar term(t.c);
        for (int k = 0; k < kMaxVars; ++k)
          for (int e = t.m.exp(k); e > 0; --e) term *= values[std::size_t(k)];
        acc += term;
      }
      return acc;
    };
    return eval(num_) / eval(den_);
  }

  /// Smallest total degree in (c1, ..., c7) over the terms, counting the denominator negatively.
  int min_c_degree() const {
    if (is_zero()) return 1 << 20;
    auto cdeg = [](Mono m) { return m.degree() - m.exp(0); };
    int lo = 1 << 20;
    for (const auto& t : num_.terms()) lo = std::min(lo, cdeg(t.m));
    int dlo = 1 << 20;
    for (const auto& t : den_.terms()) dlo = std::min(dlo, cdeg(t.m));
    return lo - dlo;
  }

  std::string to_string() const {
    mpz_class scale = num_.denominator_lcm();
    mpz_class dl = den_.denominator_lcm();
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), dl.get_mpz_t());
    std::string n = num_.to_string(scale);
    if (den_.is_one() && scale == 1) return n;
    std::string d = den_.to_string(scale);
    if (d == "1") return n;
    auto wrap = [](const std::string& x) {
      return x.find_first_of("+-", 1) != std::string::npos ? "(" + x + ")" : x;
    };
    return wrap(n) + "/" + wrap(d);
  }

 private:
  struct Raw {};
  Scalar(Poly num, Raw) : num_(std::move(num)), den_(Poly::one()) {}
  Scalar(Poly num, Poly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}

  void normalize_monomial_den() {
    if (num_.is_zero()) {
      den_ = Poly::one();
      return;
    }
    Mono dm = den_.lead().m;
    Mono g = Mono::min(num_.mono_content(), dm);
    Qir dc = den_.lead().c;
    if (!g.is_one()) num_ = num_.div_mono(g);
    if (!dc.is_one()) num_ = num_.scaled(dc.inverse());
    den_ = Poly::monomial(dm / g, Qir(1));
  }

  void normalize() {
    if (num_.is_zero()) {
      den_ = Poly::one();
      return;
    }
    if (den_.is_monomial()) {
      normalize_monomial_den();
      return;
    }
    Poly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = detail::exact(num_, g);
      den_ = detail::exact(den_, g);
    }
    Qir lc = den_.lead().c;
    if (!lc.is_one()) {
      Qir inv = lc.inverse();
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  Poly num_;
  Poly den_;
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& a) { return os << a.to_string(); }

}  // namespace tama
