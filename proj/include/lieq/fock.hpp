#pragma once

// Truncated ladder operators on span{e_0..e_{N-1}}. Exact work happens in the
// monomial basis: B e_m = e_{m+1}, A e_m = {m}_q e_{m-1}. The orthonormal
// picture has irrational entries and is kept to doubles.

#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lieq/errors.hpp"
#include "lieq/exactnum.hpp"
#include "lieq/liealg.hpp"
#include "lieq/linalg.hpp"
#include "lieq/qheis.hpp"
#include "lieq/report.hpp"

namespace lieq {

enum class OperatorBasis { monomial, orthonormal_float };

struct TruncatedOperator {
  SparseMatrix matrix;
  OperatorBasis basis = OperatorBasis::monomial;
  std::size_t size() const { return matrix.rows(); }
};

struct MonomialPair {
  SparseMatrix A;
  SparseMatrix B;
};

/// Matrix-entry budget for Fock constructions; LIEQ_SIZE_CAP overrides.
inline std::size_t size_cap() {
  if (const char* env = std::getenv("LIEQ_SIZE_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 200000;
}

inline void check_size(std::size_t dim) {
  if (dim * dim > size_cap()) {
    throw SizeCap("dimension " + std::to_string(dim) + " needs " + std::to_string(dim * dim) +
                  " entries, cap is " + std::to_string(size_cap()));
  }
}

inline MonomialPair monomial_rep(const GaussRat& q0, std::size_t N) {
  if (N < 2) throw DimensionMismatch("truncation size must be >= 2");
  check_size(N);
  MonomialPair p{SparseMatrix(N, N), SparseMatrix(N, N)};
  for (std::size_t m = 0; m + 1 < N; ++m) p.B.set(m + 1, m, GaussRat(1));
  for (std::size_t m = 1; m < N; ++m) {
    p.A.set(m - 1, m, q_integer(static_cast<unsigned>(m)).eval(q0));
  }
  return p;
}

/// AB - q0 BA - I.
inline SparseMatrix qccr_defect(const SparseMatrix& A, const SparseMatrix& B, const GaussRat& q0) {
  return A * B - q0 * (B * A) - SparseMatrix::identity(A.rows());
}

/// Zero except the (N-1, N-1) corner, which must equal -{N}_{q0}.
inline bool defect_matches_contract(const SparseMatrix& defect, const GaussRat& q0) {
  const std::size_t N = defect.rows();
  SparseMatrix expected(N, N);
  expected.set(N - 1, N - 1, -q_integer(static_cast<unsigned>(N)).eval(q0));
  return defect == expected;
}

/// Diagonal of BA; nullopt when BA is not diagonal.
inline std::optional<std::vector<GaussRat>> number_operator_spectrum(const SparseMatrix& A,
                                                                     const SparseMatrix& B) {
  SparseMatrix n = B * A;
  std::vector<GaussRat> diag(n.rows());
  for (std::size_t r = 0; r < n.rows(); ++r) {
    for (const auto& [c, v] : n.row(r)) {
      if (c != r) return std::nullopt;
      diag[r] = v;
    }
  }
  return diag;
}

/// (1 - q0^m)/(1 - q0), or m at q0 = 1, for m = 0..N-1.
inline std::vector<GaussRat> closed_form_spectrum(const GaussRat& q0, std::size_t N) {
  std::vector<GaussRat> out;
  for (std::size_t m = 0; m < N; ++m) {
    if (q0 == GaussRat(1)) {
      out.emplace_back(static_cast<long>(m));
    } else {
      out.push_back((GaussRat(1) - q0.pow(static_cast<long>(m))) / (GaussRat(1) - q0));
    }
  }
  return out;
}

/// w_m = {1}_q ... {m}_q.
inline std::vector<GaussRat> fock_weights(const GaussRat& q0, std::size_t N) {
  std::vector<GaussRat> w(N);
  GaussRat acc(1);
  for (std::size_t m = 0; m < N; ++m) {
    if (m > 0) acc *= q_integer(static_cast<unsigned>(m)).eval(q0);
    w[m] = acc;
  }
  return w;
}

/// X^dag = W^{-1} X^H W with W = diag(w_m). Involutive for real q0.
inline SparseMatrix weighted_adjoint(const SparseMatrix& X, const GaussRat& q0) {
  const std::size_t N = X.rows();
  if (!X.is_square()) throw DimensionMismatch("adjoint of non-square matrix");
  auto w = fock_weights(q0, N);
  for (std::size_t m = 0; m < N; ++m) {
    if (w[m].is_zero()) {
      throw SingularWeight("weight w_" + std::to_string(m) + " vanishes at q = " + q0.to_string());
    }
  }
  SparseMatrix h = X.conjugate_transpose();
  SparseMatrix out(N, N);
  for (std::size_t r = 0; r < N; ++r) {
    const GaussRat winv = w[r].inverse();
    for (const auto& [c, v] : h.row(r)) out.set(r, c, winv * v * w[c]);
  }
  return out;
}

/// Restriction to rows and columns below `limit`.
inline SparseMatrix leading_block(const SparseMatrix& m, std::size_t limit) {
  SparseMatrix out(limit, limit);
  for (std::size_t r = 0; r < limit; ++r) {
    for (const auto& [c, v] : m.row(r)) {
      if (c < limit) out.set(r, c, v);
    }
  }
  return out;
}

/// Substitutes A, B (and I) into a word polynomial with q = q0.
inline SparseMatrix evaluate_on_matrices(const WordPoly& e, const GaussRat& q0,
                                         const MonomialPair& p) {
  const std::size_t N = p.A.rows();
  SparseMatrix out(N, N);
  for (const auto& [word, coef] : e.terms()) {
    SparseMatrix m = SparseMatrix::identity(N);
    for (char ch : word) {
      if (ch == 'A') {
        m = m * p.A;
      } else if (ch == 'B') {
        m = m * p.B;
      } else if (ch != 'I') {
        throw ParseError(std::string("letter '") + ch + "' has no matrix");
      }
    }
    out = out + coef.eval(q0) * m;
  }
  return out;
}

/// Columns 0..N-1-k agree; a degree-k word is exact on those columns.
inline bool agree_on_interior(const SparseMatrix& x, const SparseMatrix& y, std::size_t k) {
  const std::size_t N = x.rows();
  if (k >= N) return true;
  SparseMatrix d = (x - y).transpose();
  for (std::size_t c = 0; c + k < N; ++c) {
    if (!d.row(c).empty()) return false;
  }
  return true;
}

// ---- shifted pair ---------------------------------------------------------

struct ShiftedPair {
  /// v1 = A = C - alpha, v2 = B = C^dag - conj(beta), v3 = B^dag, v4 = A^dag.
  std::vector<SparseMatrix> ops;
  /// [v_i, v_j] for i <= j, 0-based.
  std::map<std::pair<std::size_t, std::size_t>, SparseMatrix> commutators;
  /// Each commutator is a scalar multiple of I on rows and columns < N-1.
  bool interior_scalar = false;
  /// Structure constants on span{v1..v4, v}, v = I, when interior_scalar.
  std::optional<LieAlgebra> extracted;
  /// alpha == beta makes B = A^dag; only a warning.
  bool alpha_equals_beta = false;
};

inline ShiftedPair shifted_pair(const GaussRat& alpha, const GaussRat& beta, std::size_t N,
                                const GaussRat& q0 = GaussRat(1)) {
  MonomialPair p = monomial_rep(q0, N);
  const SparseMatrix& C = p.A;
  const SparseMatrix Cdag = weighted_adjoint(C, q0);
  auto shift = [&](const SparseMatrix& m, const GaussRat& s) {
    return m - SparseMatrix::scalar(N, s);
  };
  ShiftedPair out;
  out.alpha_equals_beta = alpha == beta;
  out.ops = {shift(C, alpha), shift(Cdag, beta.conj()), shift(C, beta), shift(Cdag, alpha.conj())};
  out.interior_scalar = true;
  LieAlgebra::BracketTable table;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i; j < 4; ++j) {
      SparseMatrix c = out.ops[i] * out.ops[j] - out.ops[j] * out.ops[i];
      SparseMatrix inner = leading_block(c, N - 1);
      GaussRat s = inner.at(0, 0);
      if (!(inner == SparseMatrix::scalar(N - 1, s))) out.interior_scalar = false;
      if (i != j && !s.is_zero()) table[{i, j}] = SparseVec{{4, s}};
      out.commutators.emplace(std::make_pair(i, j), std::move(c));
    }
  }
  if (out.interior_scalar) {
    out.extracted = LieAlgebra(5, {"v1", "v2", "v3", "v4", "v"}, table, true);
  }
  return out;
}

// ---- biorthogonal systems ------------------------------------------------

struct BiorthogonalSystem {
  std::size_t N = 0;
  GaussRat q;
  std::vector<GaussRat> weights;
  std::vector<Vec> phi;
  std::vector<Vec> psi;
  /// <phi_n, psi_m>
  SparseMatrix pairing;
  /// <B_T phi_n, psi_{n+1}> <A_T phi_{n+1}, psi_n>, n = 0..N-2
  std::vector<GaussRat> ladder_squared;
  bool vacuum_annihilated = false;

  bool pairing_is_identity() const { return pairing == SparseMatrix::identity(N); }
  bool ladder_matches() const {
    for (std::size_t n = 0; n < ladder_squared.size(); ++n) {
      if (!(ladder_squared[n] == q_integer(static_cast<unsigned>(n + 1)).eval(q))) return false;
    }
    return true;
  }
};

inline GaussRat inner(std::span<const GaussRat> x, std::span<const GaussRat> y) {
  GaussRat s;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (!x[k].is_zero() && !y[k].is_zero()) s += x[k].conj() * y[k];
  }
  return s;
}

/// phi_n = t_n e_n, psi_n = e_n / t_n, with A_T = T A T^{-1}, B_T = T B T^{-1}
/// for T = diag(t).
inline BiorthogonalSystem biorthogonal_pair(const std::vector<GaussRat>& t, const GaussRat& q0) {
  const std::size_t N = t.size();
  for (std::size_t n = 0; n < N; ++n) {
    if (!t[n].is_real() || sgn(t[n].re()) <= 0) {
      throw NonpositiveWeight("t_" + std::to_string(n) + " = " + t[n].to_string());
    }
  }
  MonomialPair p = monomial_rep(q0, N);
  SparseMatrix T(N, N);
  SparseMatrix Tinv(N, N);
  for (std::size_t n = 0; n < N; ++n) {
    T.set(n, n, t[n]);
    Tinv.set(n, n, t[n].inverse());
  }
  const SparseMatrix AT = T * p.A * Tinv;
  const SparseMatrix BT = T * p.B * Tinv;
  BiorthogonalSystem s;
  s.N = N;
  s.q = q0;
  s.weights = t;
  for (std::size_t n = 0; n < N; ++n) {
    s.phi.push_back(t[n] * unit_vec(N, n));
    s.psi.push_back(t[n].inverse() * unit_vec(N, n));
  }
  s.pairing = SparseMatrix(N, N);
  for (std::size_t n = 0; n < N; ++n) {
    for (std::size_t m = 0; m < N; ++m) s.pairing.set(n, m, inner(s.phi[n], s.psi[m]));
  }
  for (std::size_t n = 0; n + 1 < N; ++n) {
    GaussRat raise = inner(BT.apply(s.phi[n]), s.psi[n + 1]);
    GaussRat lower = inner(AT.apply(s.phi[n + 1]), s.psi[n]);
    s.ladder_squared.push_back(raise * lower);
  }
  // A_T phi_0 = 0 and B_T^H psi_0 = 0 (the standard adjoint of B_T).
  s.vacuum_annihilated = lieq::is_zero(AT.apply(s.phi[0])) &&
                         lieq::is_zero(BT.conjugate_transpose().apply(s.psi[0]));
  return s;
}

// ---- similarity transport -------------------------------------------------

struct SimilarityResult {
  std::vector<SparseMatrix> V;
  std::vector<SparseMatrix> Vdag;
  /// D_V(i,j) = T D_U(i,j) T^{-1} for every pair.
  bool defect_conjugates = false;
  /// Every D_V(i,j) vanishes.
  bool relations_exact = false;
};

/// D(i,j) = X_i X_j^dag - q0 X_j^dag X_i - delta_ij I.
inline SparseMatrix pair_defect(const std::vector<SparseMatrix>& X,
                                const std::vector<SparseMatrix>& Xdag, std::size_t i,
                                std::size_t j, const GaussRat& q0) {
  SparseMatrix d = X[i] * Xdag[j] - q0 * (Xdag[j] * X[i]);
  if (i == j) d = d - SparseMatrix::identity(X[i].rows());
  return d;
}

/// V_i = T U_i T^{-1}, V_i^dag := T U_i^dag T^{-1}.
inline SimilarityResult similarity_transport(const std::vector<SparseMatrix>& U,
                                             const std::vector<SparseMatrix>& Udag,
                                             const SparseMatrix& T, const GaussRat& q0) {
  if (U.size() != Udag.size()) throw DimensionMismatch("operator and adjoint counts differ");
  auto Tinv = try_inverse(T);
  if (!Tinv) throw SingularT("T is not invertible");
  SimilarityResult r;
  for (std::size_t i = 0; i < U.size(); ++i) {
    r.V.push_back(T * U[i] * *Tinv);
    r.Vdag.push_back(T * Udag[i] * *Tinv);
  }
  r.defect_conjugates = true;
  r.relations_exact = true;
  for (std::size_t i = 0; i < U.size(); ++i) {
    for (std::size_t j = 0; j < U.size(); ++j) {
      SparseMatrix dv = pair_defect(r.V, r.Vdag, i, j, q0);
      SparseMatrix du = pair_defect(U, Udag, i, j, q0);
      if (!(dv == T * du * *Tinv)) r.defect_conjugates = false;
      if (!dv.is_zero()) r.relations_exact = false;
    }
  }
  return r;
}

/// The 2x2 fermionic pair C = [[0,1],[0,0]], C^dag = C^T, exact at q = -1.
inline std::pair<SparseMatrix, SparseMatrix> car_pair() {
  SparseMatrix C(2, 2);
  C.set(0, 1, GaussRat(1));
  return {C, C.transpose()};
}

// ---- Cuntz-Toeplitz -------------------------------------------------------

struct CuntzToeplitz {
  std::size_t d = 0;
  std::size_t depth = 0;
  /// Words over {0..d-1} ordered by length, then lexicographically.
  std::vector<std::vector<std::size_t>> words;
  /// l_i w = i w for |w| < depth, else 0.
  std::vector<SparseMatrix> creators;

  std::size_t dim() const { return words.size(); }
  SparseMatrix annihilator(std::size_t i) const { return creators.at(i).transpose(); }
};

inline std::size_t cuntz_dim(std::size_t d, std::size_t L) {
  std::size_t dim = 0;
  std::size_t layer = 1;
  for (std::size_t k = 0; k <= L; ++k) {
    dim += layer;
    layer *= d;
  }
  return dim;
}

inline CuntzToeplitz cuntz_toeplitz(std::size_t d, std::size_t L) {
  if (d == 0) throw DimensionMismatch("need at least one mode");
  check_size(cuntz_dim(d, L));
  CuntzToeplitz ct;
  ct.d = d;
  ct.depth = L;
  std::map<std::vector<std::size_t>, std::size_t> index;
  std::vector<std::vector<std::size_t>> layer{{}};
  for (std::size_t k = 0; k <= L; ++k) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& w : layer) {
      index[w] = ct.words.size();
      ct.words.push_back(w);
      for (std::size_t a = 0; a < d && k < L; ++a) {
        auto v = w;
        v.push_back(a);
        next.push_back(std::move(v));
      }
    }
    layer = std::move(next);
  }
  const std::size_t D = ct.words.size();
  for (std::size_t i = 0; i < d; ++i) {
    SparseMatrix l(D, D);
    for (std::size_t c = 0; c < D; ++c) {
      const auto& w = ct.words[c];
      if (w.size() >= L) continue;
      std::vector<std::size_t> iw{i};
      iw.insert(iw.end(), w.begin(), w.end());
      l.set(index.at(iw), c, GaussRat(1));
    }
    ct.creators.push_back(std::move(l));
  }
  return ct;
}

/// l_i^dag l_j - delta_ij I vanishes on words of length < L and is supported
/// on top-degree rows and columns only.
inline bool cuntz_relations_hold(const CuntzToeplitz& ct, std::size_t i, std::size_t j) {
  const std::size_t D = ct.dim();
  SparseMatrix defect = ct.annihilator(i) * ct.creators[j];
  if (i == j) defect = defect - SparseMatrix::identity(D);
  for (std::size_t r = 0; r < D; ++r) {
    for (const auto& [c, v] : defect.row(r)) {
      if (ct.words[r].size() < ct.depth || ct.words[c].size() < ct.depth) return false;
    }
  }
  return true;
}

// ---- float mode -------------------------------------------------------------

struct FloatMatrix {
  std::size_t n = 0;
  std::vector<double> a;  // row-major
  double& operator()(std::size_t r, std::size_t c) { return a[r * n + c]; }
  double operator()(std::size_t r, std::size_t c) const { return a[r * n + c]; }
};

struct FloatRep {
  FloatMatrix C;
  FloatMatrix Cdag;
  /// max |CC^dag - q C^dag C - I| away from the (N-1, N-1) corner
  double residual_off_corner = 0;
  double corner = 0;
};

/// Orthonormal-basis C with superdiagonal beta_0, beta_1, ...; beta_n^2 = {n+1}_q.
inline FloatRep orthonormal_rep_float(double q0, std::size_t N) {
  if (N < 2) throw DimensionMismatch("truncation size must be >= 2");
  check_size(N);
  FloatRep r;
  r.C = {N, std::vector<double>(N * N, 0.0)};
  r.Cdag = r.C;
  double beta2 = 0;
  double power = 1;
  for (std::size_t n = 0; n + 1 < N; ++n) {
    beta2 += power;  // {n+1}_q
    power *= q0;
    if (beta2 < 0) throw NegativeWeight("beta_" + std::to_string(n) + "^2 < 0");
    r.C(n, n + 1) = std::sqrt(beta2);
    r.Cdag(n + 1, n) = r.C(n, n + 1);
  }
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      double s = 0;
      for (std::size_t k = 0; k < N; ++k) {
        s += r.C(i, k) * r.Cdag(k, j) - q0 * r.Cdag(i, k) * r.C(k, j);
      }
      if (i == j) s -= 1.0;
      if (i == N - 1 && j == N - 1) {
        r.corner = s;
      } else {
        r.residual_off_corner = std::max(r.residual_off_corner, std::abs(s));
      }
    }
  }
  return r;
}

// ---- report -------------------------------------------------------------

/// Defect contract, spectrum, adjoint and a biorthogonal sample at (q0, N).
inline Report fock_verify_report(const GaussRat& q0, std::size_t N) {
  Report r;
  r.command = "fock verify q=" + q0.to_string() + " N=" + std::to_string(N);
  ScopedTimer timer(r);
  MonomialPair p = monomial_rep(q0, N);
  SparseMatrix D = qccr_defect(p.A, p.B, q0);
  r.add("defect zero off corner, corner = -{N}_q",
        (-q_integer(static_cast<unsigned>(N)).eval(q0)).to_string(), D.at(N - 1, N - 1).to_string(),
        defect_matches_contract(D, q0));
  auto spec = number_operator_spectrum(p.A, p.B);
  bool spec_ok = spec && *spec == closed_form_spectrum(q0, N);
  r.add("BA diagonal = (1-q^m)/(1-q)", "closed form", spec_ok ? "closed form" : "differs", spec_ok);
  try {
    bool adj = weighted_adjoint(p.B, q0) == p.A && weighted_adjoint(p.A, q0) == p.B;
    r.add("weighted adjoint B^dag = A", "yes", adj ? "yes" : "no", adj);
  } catch (const SingularWeight&) {
    r.add("weighted adjoint B^dag = A", "skipped (singular weight)", "skipped (singular weight)",
          true);
  }
  std::vector<GaussRat> t;
  for (std::size_t n = 0; n < N; ++n) {
    t.push_back(GaussRat::fraction(static_cast<long>(n % 5 + 1), static_cast<long>(n % 3 + 1)));
  }
  BiorthogonalSystem s = biorthogonal_pair(t, q0);
  r.add("biorthogonal pairing = I", "identity", s.pairing_is_identity() ? "identity" : "differs",
        s.pairing_is_identity());
  r.add("squared ladder = {n+1}_q", "yes", s.ladder_matches() ? "yes" : "no", s.ladder_matches());
  r.add("vacuum annihilated", "yes", s.vacuum_annihilated ? "yes" : "no", s.vacuum_annihilated);
  return r;
}

}  // namespace lieq
