#pragma once

// The polynomial-spinor representation C[V] (x) S of HC, truncated by degree:
// x acts by multiplication, y by Dunkl operators, W by substitution, e_j by spinor matrices.

#include <map>
#include <string>
#include <vector>

#include "tama/admissible.hpp"
#include "tama/linalg.hpp"
#include "tama/tama.hpp"

namespace tama {

using ScalarMatrix = Matrix<Scalar>;

/// Exponent vectors of degree k in d variables, descending lexicographic.
inline std::vector<Exps> monomial_basis(int d, int k) {
  std::vector<Exps> out;
  std::vector<int> e(std::size_t(d), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == d - 1) {
      e[std::size_t(pos)] = left;
      Exps m;
      for (int j = 0; j < d; ++j) m = m * Exps::var(j, e[std::size_t(j)]);
      out.push_back(m);
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[std::size_t(pos)] = v;
      self(self, pos + 1, left - v);
    }
  };
  if (d == 0) return {Exps{}};
  rec(rec, 0, k);
  return out;
}

/// Clifford generators on 2^{floor(d/2)} spinors: tensor products of Pauli matrices,
/// with the extra generator for odd d equal to sigma_3 on every factor.
inline std::vector<Matrix<Qir>> spinor_matrices(int d) {
  int m = d / 2;
  std::size_t n = std::size_t(1) << m;
  Matrix<Qir> s1{{Qir(0), Qir(1)}, {Qir(1), Qir(0)}};
  Matrix<Qir> s2{{Qir(0), -Qir::i()}, {Qir::i(), Qir(0)}};
  Matrix<Qir> s3{{Qir(1), Qir(0)}, {Qir(0), Qir(-1)}};
  Matrix<Qir> id2 = identity_matrix<Qir>(2);
  auto kron = [](const Matrix<Qir>& a, const Matrix<Qir>& b) {
    std::size_t ra = a.size(), rb = b.size();
    Matrix<Qir> out = zero_matrix<Qir>(ra * rb, ra * rb);
    for (std::size_t i = 0; i < ra; ++i)
      for (std::size_t j = 0; j < ra; ++j)
        for (std::size_t k = 0; k < rb; ++k)
          for (std::size_t l = 0; l < rb; ++l) out[i * rb + k][j * rb + l] = a[i][j] * b[k][l];
    return out;
  };
  auto chain = [&](int k, const Matrix<Qir>& mid) {
    Matrix<Qir> out = identity_matrix<Qir>(1);
    for (int q = 0; q < m; ++q) out = kron(out, q < k ? s3 : (q == k ? mid : id2));
    return out;
  };
  std::vector<Matrix<Qir>> out;
  for (int k = 0; k < m; ++k) {
    out.push_back(chain(k, s1));
    out.push_back(chain(k, s2));
  }
  if (d % 2 == 1) out.push_back(chain(m, s3));
  if (out.empty() || out[0].size() != n) {
    if (d != 1) throw InternalInconsistency("spinor construction has the wrong size");
  }
  return out;
}

/// Nonzero Hermitian H with H e_j = -e_j^dagger H for every spinor generator, if one exists.
inline std::optional<Matrix<Qir>> skew_spinor_form(const std::vector<Matrix<Qir>>& es) {
  std::size_t n = es.empty() ? 1 : es[0].size();
  // unknowns H[a][b] at column a*n+b
  Matrix<Qir> sys;
  for (const auto& e : es) {
    Matrix<Qir> ed = adjoint(e, [](const Qir& v) { return v.conj(); });
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        std::vector<Qir> row(n * n, Qir());
        for (std::size_t k = 0; k < n; ++k) {
          row[a * n + k] += e[k][b];   // (H e)[a][b]
          row[k * n + b] += ed[a][k];  // (e^dagger H)[a][b]
        }
        sys.push_back(std::move(row));
      }
  }
  auto ns = nullspace(sys, n * n);
  if (ns.empty()) return std::nullopt;
  Matrix<Qir> h = zero_matrix<Qir>(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) h[a][b] = ns[0][a * n + b];
  if (!(adjoint(h, [](const Qir& v) { return v.conj(); }) == h))
    for (auto& row : h)
      for (auto& v : row) v = v * Qir::i();
  return h;
}

/// Exact sign test for a constant in Q(r): true iff real and positive.
inline bool is_positive_real(const Scalar& v) {
  if (!v.is_constant()) return false;
  Qir q = v.constant_value();
  if (sgn(q[1]) != 0 || sgn(q[3]) != 0) return false;
  const Rational& a = q[0];
  const Rational& b = q[2];
  if (sgn(a) >= 0 && sgn(b) >= 0) return sgn(a) > 0 || sgn(b) > 0;
  if (sgn(a) <= 0 && sgn(b) <= 0) return false;
  Rational a2 = a * a;
  Rational b2 = 2 * b * b;
  return sgn(a) > 0 ? a2 > b2 : b2 > a2;
}

class PolySpinor {
 public:
  explicit PolySpinor(const Algebra& A) : A_(A), d_(A.dim()), spinors_(spinor_matrices(A.dim())) {}

  const Algebra& algebra() const { return A_; }
  std::size_t spinor_dim() const { return spinors_.empty() ? 1 : spinors_[0].size(); }
  const std::vector<Matrix<Qir>>& spinor_generators() const { return spinors_; }
  const std::vector<Exps>& basis(int k) const {
    auto it = basis_.find(k);
    if (it == basis_.end()) it = basis_.emplace(k, monomial_basis(d_, k)).first;
    return it->second;
  }
  std::size_t dim(int k) const { return basis(k).size() * spinor_dim(); }

  /// Matrix of e_B on spinors.
  Matrix<Qir> spinor_matrix(Blade b) const {
    Matrix<Qir> out = identity_matrix<Qir>(spinor_dim());
    for (int j = 0; j < d_; ++j)
      if (b & (Blade(1) << j)) out = matmul(out, spinors_[std::size_t(j)]);
    return out;
  }

  /// Matrix of an H element from degree k_in to degree k_out on polynomials.
  ScalarMatrix poly_matrix(const HElement& h, int k_in, int k_out) const {
    const auto& in = basis(k_in);
    const auto& out = basis(k_out);
    std::map<std::uint64_t, std::size_t> row_of;
    for (std::size_t r = 0; r < out.size(); ++r) row_of[out[r].bits] = r;
    ScalarMatrix m = zero_matrix<Scalar>(out.size(), in.size());
    for (std::size_t col = 0; col < in.size(); ++col) {
      HElement p(HKey{in[col], {}, A_.group().identity()}, Scalar(1));
      HElement img = A_.h_mul(h, p);
      for (const auto& [k, c] : img.terms()) {
        if (k.y.degree() != 0) continue;  // y annihilates the vacuum
        auto it = row_of.find(k.x.bits);
        if (it == row_of.end()) throw NotHomogeneous("element does not map degree " + std::to_string(k_in) + " to degree " + std::to_string(k_out));
        m[it->second][col] += c;
      }
    }
    return m;
  }

  /// Matrix of an HC element from degree k_in to k_out on C[V] (x) S; basis index = monomial * dimS + spinor.
  ScalarMatrix matrix_of(const HCElement& a, int k_in, int k_out) const {
    std::map<Blade, HElement> parts;
    for (const auto& [k, c] : a.terms()) parts[k.e].add(HKey{k.x, k.y, k.g}, c);
    std::size_t ns = spinor_dim();
    ScalarMatrix out = zero_matrix<Scalar>(basis(k_out).size() * ns, basis(k_in).size() * ns);
    for (const auto& [b, h] : parts) {
      ScalarMatrix pm = poly_matrix(h, k_in, k_out);
      Matrix<Qir> sm = spinor_matrix(b);
      for (std::size_t r = 0; r < pm.size(); ++r)
        for (std::size_t c = 0; c < pm[r].size(); ++c) {
          if (pm[r][c].is_zero()) continue;
          for (std::size_t i = 0; i < ns; ++i)
            for (std::size_t j = 0; j < ns; ++j)
              if (!sm[i][j].is_zero()) out[r * ns + i][c * ns + j] += pm[r][c] * Scalar(sm[i][j]);
        }
    }
    return out;
  }
  ScalarMatrix matrix_of(const HCElement& a, int k) const { return matrix_of(a, k, k); }

  /// Fischer pairing on degree k: G[a][b] = vacuum coefficient of star(x^a) x^b.
  ScalarMatrix fischer_gram(int k) const {
    const auto& bs = basis(k);
    ScalarMatrix g = zero_matrix<Scalar>(bs.size(), bs.size());
    for (std::size_t a = 0; a < bs.size(); ++a) {
      HElement ya(HKey{{}, bs[a], A_.group().identity()}, Scalar(1));
      ScalarMatrix col = poly_matrix(ya, k, 0);
      for (std::size_t b = 0; b < bs.size(); ++b) g[a][b] = col[0][b];
    }
    return g;
  }

 private:
  const Algebra& A_;
  int d_;
  std::vector<Matrix<Qir>> spinors_;
  mutable std::map<int, std::vector<Exps>> basis_;
};

inline ScalarMatrix scalar_adjoint(const ScalarMatrix& m) {
  return adjoint(m, [](const Scalar& v) { return v.conjugate(); });
}

inline ScalarMatrix scalar_sub(const ScalarMatrix& a, const ScalarMatrix& b) { return matadd(a, b, Scalar(-1)); }

/// Residual matrix of D^2 - Omega - 1/4 on degree k.
inline ScalarMatrix dirac_square_matrix_residual(const PolySpinor& X, const Tama& T, int k) {
  ScalarMatrix d = X.matrix_of(T.dirac(), k);
  ScalarMatrix om = X.matrix_of(T.osp().casimir(), k);
  ScalarMatrix lhs = matmul(d, d);
  return matadd(scalar_sub(lhs, om), identity_matrix<Scalar>(lhs.size(), Scalar::frac(1, 4)), Scalar(-1));
}

/// One row of the D_omega-cohomology table.
struct CohomologyRow {
  int degree = 0;
  std::size_t dim_x = 0;
  std::size_t dim_ker = 0;
  std::size_t dim_ker_im = 0;  // dim(ker cap im)
  std::size_t dim_h = 0;
  bool cover_invariant = false;       // D_w rho(s~) = eps rho(s~) D_w for the generator lifts
  bool central_character = false;    // (Omega - rho(w)^2 + 1/4) ker in im
};

inline CohomologyRow cohomology_row(const PolySpinor& X, const Tama& T, const PinGroup& P, const MinusElement& omega, int k) {
  const Algebra& A = T.algebra();
  HCElement rw = minus_to_hc(P, omega);
  HCElement Dw = T.dirac() + rw;
  ScalarMatrix m = X.matrix_of(Dw, k);
  std::size_t n = m.size();
  CohomologyRow row;
  row.degree = k;
  row.dim_x = n;
  std::size_t rk = rank_of(m);
  std::size_t rk2 = rank_of(matmul(m, m));
  row.dim_ker = n - rk;
  row.dim_ker_im = (n - rk2) - (n - rk);
  row.dim_h = row.dim_ker - row.dim_ker_im;
  int parity = minus_parity(P, omega);
  row.cover_invariant = true;
  for (std::size_t g = 0; g < P.generators().size(); ++g) {
    int p = P.generator_index(g);
    ScalarMatrix r = X.matrix_of(P.rho(A, p), k);
    int eps = epsilon_of(T.dim(), P.parity(p));
    ScalarMatrix lhs = matmul(m, r);
    ScalarMatrix rhs = matmul(r, m);
    if (!is_zero_matrix(matadd(lhs, rhs, Scalar(long(-eps))))) row.cover_invariant = false;
  }
  (void)parity;
  HCElement z = T.osp().casimir() - T.mul(rw, rw) + T.scalar(Scalar::frac(1, 4));
  ScalarMatrix zm = X.matrix_of(z, k);
  auto ker = nullspace(m, n);
  Matrix<Scalar> cols;  // columns of m as rows, plus the images z v
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Scalar> col(n);
    for (std::size_t r = 0; r < n; ++r) col[r] = m[r][c];
    cols.push_back(std::move(col));
  }
  std::size_t im_rank = span_rank(cols);
  row.central_character = true;
  for (const auto& v : ker) {
    std::vector<Scalar> zv(n, Scalar());
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (!zm[r][c].is_zero() && !v[c].is_zero()) zv[r] += zm[r][c] * v[c];
    Matrix<Scalar> aug = cols;
    aug.push_back(zv);
    if (span_rank(aug) != im_rank) {
      row.central_character = false;
      break;
    }
  }
  return row;
}

/// Hermitian-form data on degree k.
struct HermitianReport {
  int degree = 0;
  bool poly_hermitian = false;       // x_i, y_i, s_alpha on the Fischer pairing
  bool spinor_form_exists = false;   // H with e_j skew-adjoint
  bool spinor_hermitian = false;     // e_j check with that H
  bool poly_positive = false;        // leading minors of the Fischer Gram matrix
  bool spinor_positive = false;      // leading minors of H (never: e_j^bullet e_j = -1)
  std::vector<std::string> minors;
  std::string failure;
};

inline HermitianReport hermitian_form_check(const PolySpinor& X, int k) {
  const Algebra& A = X.algebra();
  HermitianReport rep;
  rep.degree = k;
  int d = A.dim();
  ScalarMatrix g = X.fischer_gram(k);
  rep.poly_hermitian = true;
  auto check = [&](const std::string& name, const ScalarMatrix& lhs, const ScalarMatrix& rhs) {
    if (rep.poly_hermitian && !is_zero_matrix(scalar_sub(lhs, rhs))) {
      rep.poly_hermitian = false;
      rep.failure = name;
    }
  };
  ScalarMatrix gup = X.fischer_gram(k + 1);
  for (int i = 0; i < d; ++i) {
    HElement xi(HKey{Exps::var(i), {}, A.group().identity()}, Scalar(1));
    HElement yi(HKey{{}, Exps::var(i), A.group().identity()}, Scalar(1));
    // (x_i u, v)_{k+1} = (u, y_i v)_k
    check("x" + std::to_string(i + 1), matmul(scalar_adjoint(X.poly_matrix(xi, k, k + 1)), gup), matmul(g, X.poly_matrix(yi, k + 1, k)));
    if (k > 0) {
      ScalarMatrix gdn = X.fischer_gram(k - 1);
      check("y" + std::to_string(i + 1), matmul(scalar_adjoint(X.poly_matrix(yi, k, k - 1)), gdn), matmul(g, X.poly_matrix(xi, k - 1, k)));
    }
  }
  for (std::size_t r = 0; r < A.root_datum().positive_roots().size(); ++r) {
    int w = A.group().reflection(int(r));
    HElement s(HKey{{}, {}, w}, Scalar(1));
    ScalarMatrix sm = X.poly_matrix(s, k, k);
    check("s" + std::to_string(r + 1), matmul(scalar_adjoint(sm), g), matmul(g, sm));
  }
  auto h = skew_spinor_form(X.spinor_generators());
  rep.spinor_form_exists = h.has_value();
  if (h) {
    rep.spinor_hermitian = true;
    for (const auto& e : X.spinor_generators()) {
      Matrix<Qir> lhs = matmul(adjoint(e, [](const Qir& v) { return v.conj(); }), *h);
      Matrix<Qir> rhs = matmul(*h, e);
      if (!is_zero_matrix(matadd(lhs, rhs))) rep.spinor_hermitian = false;
    }
    rep.spinor_positive = true;
    for (const auto& v : leading_minors(*h))
      if (!is_positive_real(Scalar(v))) rep.spinor_positive = false;
  }
  rep.poly_positive = true;
  for (const auto& v : leading_minors(g)) {
    rep.minors.push_back(v.to_string());
    if (!is_positive_real(v)) rep.poly_positive = false;
  }
  return rep;
}

}  // namespace tama
