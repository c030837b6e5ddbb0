#pragma once

// Chevalley-Eilenberg cochains C^k(g, V; rho), the degree-raising
// differential, cocycles, coboundaries, cohomology dimensions, derivations
// and the Schur multiplier H^2(g, g; ad).

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lieq/errors.hpp"
#include "lieq/exactnum.hpp"
#include "lieq/liealg.hpp"
#include "lieq/linalg.hpp"

namespace lieq {

enum class RepKind { adjoint, trivial, explicit_matrices };

inline std::string to_string(RepKind k) {
  switch (k) {
    case RepKind::adjoint: return "adjoint";
    case RepKind::trivial: return "trivial";
    case RepKind::explicit_matrices: return "explicit";
  }
  return "?";
}

class Representation {
 public:
  /// Checks rho([e_i, e_j]) = [rho(e_i), rho(e_j)] for all i < j.
  Representation(LieAlgebra source, std::size_t module_dim, std::vector<SparseMatrix> matrices,
                 RepKind kind = RepKind::explicit_matrices)
      : source_(std::move(source)), module_dim_(module_dim), matrices_(std::move(matrices)),
        kind_(kind) {
    if (matrices_.size() != source_.dim()) {
      throw DimensionMismatch("one matrix per basis vector is required");
    }
    for (const auto& m : matrices_) {
      if (m.rows() != module_dim_ || m.cols() != module_dim_) {
        throw DimensionMismatch("representation matrix has wrong size");
      }
    }
    for (std::size_t i = 0; i < source_.dim(); ++i) {
      for (std::size_t j = i + 1; j < source_.dim(); ++j) {
        SparseMatrix lhs(module_dim_, module_dim_);
        for (const auto& [k, c] : source_.basis_bracket(i, j)) lhs = lhs + c * matrices_[k];
        SparseMatrix rhs = matrices_[i] * matrices_[j] - matrices_[j] * matrices_[i];
        if (!(lhs == rhs)) {
          throw NotARepresentation("bracket not preserved on pair (" + std::to_string(i + 1) +
                                   "," + std::to_string(j + 1) + ")");
        }
      }
    }
  }

  const LieAlgebra& source() const { return source_; }
  std::size_t module_dim() const { return module_dim_; }
  const std::vector<SparseMatrix>& matrices() const { return matrices_; }
  const SparseMatrix& matrix(std::size_t i) const { return matrices_.at(i); }
  RepKind kind() const { return kind_; }

 private:
  LieAlgebra source_;
  std::size_t module_dim_;
  std::vector<SparseMatrix> matrices_;
  RepKind kind_;
};

inline Representation adjoint_rep(const LieAlgebra& g) {
  std::vector<SparseMatrix> mats;
  mats.reserve(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) mats.push_back(g.ad_matrix(i));
  return Representation(g, g.dim(), std::move(mats), RepKind::adjoint);
}

inline Representation trivial_rep(const LieAlgebra& g, std::size_t module_dim = 1) {
  std::vector<SparseMatrix> mats(g.dim(), SparseMatrix(module_dim, module_dim));
  return Representation(g, module_dim, std::move(mats), RepKind::trivial);
}

/// Lexicographically ordered k-subsets of {0..n-1} with reverse lookup.
class SubsetIndex {
 public:
  SubsetIndex(std::size_t n, std::size_t k) : n_(n), k_(k) {
    if (k > n) return;
    std::vector<std::size_t> cur(k);
    for (std::size_t t = 0; t < k; ++t) cur[t] = t;
    while (true) {
      index_.emplace(cur, subsets_.size());
      subsets_.push_back(cur);
      // Advance to the next combination.
      std::size_t t = k;
      while (t > 0 && cur[t - 1] == n - k + t - 1) --t;
      if (t == 0) break;
      ++cur[t - 1];
      for (std::size_t u = t; u < k; ++u) cur[u] = cur[u - 1] + 1;
    }
  }

  std::size_t size() const { return subsets_.size(); }
  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  const std::vector<std::size_t>& at(std::size_t idx) const { return subsets_.at(idx); }
  const std::vector<std::vector<std::size_t>>& all() const { return subsets_; }

  std::size_t index_of(const std::vector<std::size_t>& sorted) const {
    auto it = index_.find(sorted);
    if (it == index_.end()) throw DimensionMismatch("not a strictly increasing index tuple");
    return it->second;
  }

 private:
  std::size_t n_;
  std::size_t k_;
  std::vector<std::vector<std::size_t>> subsets_;
  std::map<std::vector<std::size_t>, std::size_t> index_;
};

/// Sorts a tuple of distinct indices; returns the permutation sign, or 0 if
/// an index repeats.
inline int sort_with_sign(std::vector<std::size_t>& t) {
  int sign = 1;
  for (std::size_t a = 1; a < t.size(); ++a) {
    for (std::size_t b = a; b > 0 && t[b - 1] >= t[b]; --b) {
      if (t[b - 1] == t[b]) return 0;
      std::swap(t[b - 1], t[b]);
      sign = -sign;
    }
  }
  return sign;
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

/// Alternating k-linear map g^k -> V in coordinates: only strictly increasing
/// index tuples are stored.
class Cochain {
 public:
  using Coords = std::map<std::vector<std::size_t>, Vec>;

  Cochain(LieAlgebra source, std::size_t degree, std::size_t module_dim)
      : source_(std::move(source)), degree_(degree), module_dim_(module_dim) {
    if (degree_ > source_.dim()) throw DimensionMismatch("cochain degree exceeds dimension");
  }

  const LieAlgebra& source() const { return source_; }
  std::size_t degree() const { return degree_; }
  std::size_t module_dim() const { return module_dim_; }
  const Coords& coords() const { return coords_; }

  /// Sets c(e_{t_1}, ..., e_{t_k}); unsorted tuples are sorted with sign.
  void set(std::vector<std::size_t> tuple, Vec value) {
    check_tuple(tuple);
    if (value.size() != module_dim_) throw DimensionMismatch("cochain value length");
    int sign = sort_with_sign(tuple);
    if (sign == 0) {
      if (!lieq::is_zero(value)) throw DimensionMismatch("alternating cochain on repeated index");
      return;
    }
    if (sign < 0) value = GaussRat(-1) * std::move(value);
    if (lieq::is_zero(value)) {
      coords_.erase(tuple);
    } else {
      coords_[tuple] = std::move(value);
    }
  }

  Vec value(std::vector<std::size_t> tuple) const {
    check_tuple(tuple);
    int sign = sort_with_sign(tuple);
    if (sign == 0) return Vec(module_dim_);
    auto it = coords_.find(tuple);
    if (it == coords_.end()) return Vec(module_dim_);
    return sign > 0 ? it->second : GaussRat(-1) * it->second;
  }

  /// Multilinear evaluation on arbitrary vectors.
  Vec evaluate(const std::vector<Vec>& args) const {
    if (args.size() != degree_) throw DimensionMismatch("cochain arity");
    Vec out(module_dim_);
    for (const auto& [tuple, val] : coords_) {
      // Sum over permutations of the tuple: determinant-like expansion.
      std::vector<std::size_t> perm(tuple);
      std::sort(perm.begin(), perm.end());
      do {
        std::vector<std::size_t> p = perm;
        int s = sort_with_sign(p);
        GaussRat c(s);
        for (std::size_t a = 0; a < degree_ && !c.is_zero(); ++a) c *= args[a].at(perm[a]);
        if (!c.is_zero()) axpy(out, c, val);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
  }

  bool is_zero() const { return coords_.empty(); }

  /// Coordinate vector: subset index (lexicographic) times module_dim plus component.
  Vec to_coordinates() const {
    SubsetIndex idx(source_.dim(), degree_);
    Vec out(idx.size() * module_dim_);
    for (const auto& [tuple, val] : coords_) {
      std::size_t base = idx.index_of(tuple) * module_dim_;
      for (std::size_t a = 0; a < module_dim_; ++a) out[base + a] = val[a];
    }
    return out;
  }

  static Cochain from_coordinates(const LieAlgebra& g, std::size_t degree, std::size_t module_dim,
                                  std::span<const GaussRat> coords) {
    SubsetIndex idx(g.dim(), degree);
    if (coords.size() != idx.size() * module_dim) throw DimensionMismatch("cochain coordinates");
    Cochain c(g, degree, module_dim);
    for (std::size_t s = 0; s < idx.size(); ++s) {
      Vec v(coords.begin() + static_cast<std::ptrdiff_t>(s * module_dim),
            coords.begin() + static_cast<std::ptrdiff_t>((s + 1) * module_dim));
      if (!lieq::is_zero(v)) c.coords_[idx.at(s)] = std::move(v);
    }
    return c;
  }

  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.degree_ == b.degree_ && a.module_dim_ == b.module_dim_ && a.coords_ == b.coords_ &&
           a.source_ == b.source_;
  }

 private:
  void check_tuple(const std::vector<std::size_t>& t) const {
    if (t.size() != degree_) throw DimensionMismatch("cochain tuple arity");
    for (std::size_t x : t) {
      if (x >= source_.dim()) throw DimensionMismatch("cochain index out of range");
    }
  }

  LieAlgebra source_;
  std::size_t degree_;
  std::size_t module_dim_;
  Coords coords_;
};

inline std::size_t cochain_space_dim(std::size_t n, std::size_t k, std::size_t m) {
  return binomial(n, k) * m;
}

/// Matrix of d: C^k -> C^{k+1}, with
/// (dc)(x_1..x_{k+1}) = sum_i (-1)^{i+1} rho(x_i) c(..^x_i..)
///                    + sum_{i<j} (-1)^{i+j} c([x_i,x_j], ..^x_i..^x_j..).
inline SparseMatrix differential_matrix(const Representation& rho, std::size_t k) {
  const LieAlgebra& g = rho.source();
  const std::size_t n = g.dim();
  const std::size_t m = rho.module_dim();
  SubsetIndex src(n, k);
  SubsetIndex dst(n, k + 1);
  SparseMatrix d(dst.size() * m, src.size() * m);
  if (k > n) return d;
  std::vector<std::vector<SparseVec>> ad_rows(m);
  for (std::size_t row = 0; row < dst.size(); ++row) {
    const auto& tup = dst.at(row);
    const std::size_t len = tup.size();
    for (std::size_t p = 0; p < len; ++p) {
      std::vector<std::size_t> rest;
      for (std::size_t u = 0; u < len; ++u) {
        if (u != p) rest.push_back(tup[u]);
      }
      const std::size_t col_base = src.index_of(rest) * m;
      const GaussRat sign(p % 2 == 0 ? 1 : -1);
      const SparseMatrix& rmat = rho.matrix(tup[p]);
      for (std::size_t b = 0; b < m; ++b) {
        for (const auto& [a, v] : rmat.row(b)) d.add_to(row * m + b, col_base + a, sign * v);
      }
    }
    for (std::size_t p = 0; p < len; ++p) {
      for (std::size_t r = p + 1; r < len; ++r) {
        SparseVec br = g.basis_bracket(tup[p], tup[r]);
        if (br.empty()) continue;
        std::vector<std::size_t> rest;
        for (std::size_t u = 0; u < len; ++u) {
          if (u != p && u != r) rest.push_back(tup[u]);
        }
        const GaussRat outer((p + r) % 2 == 0 ? 1 : -1);
        for (const auto& [l, c] : br) {
          std::vector<std::size_t> t;
          t.push_back(l);
          t.insert(t.end(), rest.begin(), rest.end());
          int s = sort_with_sign(t);
          if (s == 0) continue;
          const std::size_t col_base = src.index_of(t) * m;
          const GaussRat coef = outer * c * GaussRat(s);
          for (std::size_t a = 0; a < m; ++a) d.add_to(row * m + a, col_base + a, coef);
        }
      }
    }
  }
  return d;
}

inline void check_source(const Cochain& c, const Representation& rho) {
  if (c.module_dim() != rho.module_dim() || !(c.source() == rho.source())) {
    throw SourceMismatch("cochain and representation disagree on source or module");
  }
}

inline Cochain differential(const Cochain& c, const Representation& rho) {
  check_source(c, rho);
  const std::size_t n = rho.source().dim();
  if (c.degree() >= n) throw DimensionMismatch("C^{k+1} vanishes for k >= dim g");
  Vec image = differential_matrix(rho, c.degree()).apply(c.to_coordinates());
  return Cochain::from_coordinates(rho.source(), c.degree() + 1, rho.module_dim(), image);
}

/// Z^k = ker(d: C^k -> C^{k+1}) in cochain coordinates.
inline Subspace cocycle_space(std::size_t k, const Representation& rho) {
  return nullspace(differential_matrix(rho, k));
}

/// B^k = im(d: C^{k-1} -> C^k); B^0 = 0.
inline Subspace coboundary_space(std::size_t k, const Representation& rho) {
  const std::size_t n = rho.source().dim();
  if (k == 0 || k > n) {
    return Subspace::zero(cochain_space_dim(n, k, rho.module_dim()));
  }
  return column_space(differential_matrix(rho, k - 1));
}

inline std::size_t cohomology_dim(std::size_t k, const Representation& rho) {
  const std::size_t n = rho.source().dim();
  if (k > n) return 0;
  const std::size_t ck = cochain_space_dim(n, k, rho.module_dim());
  const std::size_t z = ck - rank(differential_matrix(rho, k));
  const std::size_t b = k == 0 ? 0 : rank(differential_matrix(rho, k - 1));
  return z - b;
}

/// dim H^k for k = 0..dim g.
inline std::vector<std::size_t> betti_numbers(const Representation& rho) {
  const std::size_t n = rho.source().dim();
  std::vector<std::size_t> ranks(n + 1);
  for (std::size_t k = 0; k <= n; ++k) ranks[k] = rank(differential_matrix(rho, k));
  std::vector<std::size_t> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    out[k] = cochain_space_dim(n, k, rho.module_dim()) - ranks[k] - (k ? ranks[k - 1] : 0);
  }
  return out;
}

/// d_{k+1} d_k = 0.
inline bool d_squared_check(const Representation& rho, std::size_t k) {
  if (k + 1 > rho.source().dim()) return true;
  return (differential_matrix(rho, k + 1) * differential_matrix(rho, k)).is_zero();
}

struct DerivationAlgebra {
  /// Der(g) as a Lie algebra under the commutator, basis = `matrices`.
  LieAlgebra algebra;
  std::vector<SparseMatrix> matrices;
  /// Der(g) and Inn(g) as subspaces of n*n coordinates; D[a][i] sits at i*n + a.
  Subspace derivations;
  Subspace inner;
  std::size_t outer_dim() const { return derivations.dim() - inner.dim(); }
};

inline Vec flatten_endomorphism(const SparseMatrix& d) {
  const std::size_t n = d.rows();
  Vec v(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (const auto& [i, x] : d.row(a)) v[i * n + a] = x;
  }
  return v;
}

inline SparseMatrix unflatten_endomorphism(std::span<const GaussRat> v, std::size_t n) {
  SparseMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < n; ++a) d.add_to(a, i, v[i * n + a]);
  }
  return d;
}

/// Solves D[x,y] = [Dx,y] + [x,Dy] directly over n*n unknowns.
inline DerivationAlgebra derivation_algebra(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  auto unknown = [n](std::size_t a, std::size_t i) { return i * n + a; };
  std::size_t pairs = n * (n - (n ? 1 : 0)) / 2;
  SparseMatrix system(pairs * n, n * n);
  std::size_t eq = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++eq) {
      // D([e_i,e_j]) component k
      for (const auto& [l, c] : g.basis_bracket(i, j)) {
        for (std::size_t k = 0; k < n; ++k) system.add_to(eq * n + k, unknown(k, l), c);
      }
      // -[D e_i, e_j] - [e_i, D e_j]
      for (std::size_t a = 0; a < n; ++a) {
        for (const auto& [k, c] : g.basis_bracket(a, j)) {
          system.add_to(eq * n + k, unknown(a, i), -c);
        }
        for (const auto& [k, c] : g.basis_bracket(i, a)) {
          system.add_to(eq * n + k, unknown(a, j), -c);
        }
      }
    }
  }
  Subspace der = nullspace(system);
  std::vector<Vec> inner_gens;
  for (std::size_t i = 0; i < n; ++i) inner_gens.push_back(flatten_endomorphism(g.ad_matrix(i)));
  Subspace inner = Subspace::span(n * n, inner_gens);

  std::vector<SparseMatrix> mats;
  for (const auto& b : der.basis()) mats.push_back(unflatten_endomorphism(b, n));
  LieAlgebra::BracketTable table;
  for (std::size_t s = 0; s < mats.size(); ++s) {
    for (std::size_t t = s + 1; t < mats.size(); ++t) {
      SparseMatrix comm = mats[s] * mats[t] - mats[t] * mats[s];
      SparseVec coords = to_sparse(der.coordinates(flatten_endomorphism(comm)));
      if (!coords.empty()) table[{s, t}] = std::move(coords);
    }
  }
  std::vector<std::string> labels;
  for (std::size_t s = 1; s <= mats.size(); ++s) labels.push_back("D" + std::to_string(s));
  return {LieAlgebra(mats.size(), std::move(labels), table), std::move(mats), std::move(der),
          std::move(inner)};
}

/// dim M(g) = dim H^2(g, g; ad).
inline std::size_t schur_multiplier_dim(const LieAlgebra& g) {
  return cohomology_dim(2, adjoint_rep(g));
}

/// theta([x,y],z) + theta([z,x],y) + theta([y,z],x) = 0 on all basis triples
/// (the 2-cocycle condition for trivial coefficients).
inline bool is_two_cocycle_trivial_coeffs(const Cochain& theta) {
  if (theta.degree() != 2) throw DimensionMismatch("expected a 2-cochain");
  const LieAlgebra& g = theta.source();
  const std::size_t n = g.dim();
  auto theta_of = [&](const SparseVec& x, std::size_t z) {
    Vec out(theta.module_dim());
    for (const auto& [l, c] : x) {
      if (l != z) axpy(out, c, theta.value({l, z}));
    }
    return out;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec sum = theta_of(g.basis_bracket(i, j), k) + theta_of(g.basis_bracket(k, i), j) +
                  theta_of(g.basis_bracket(j, k), i);
        if (!is_zero(sum)) return false;
      }
    }
  }
  return true;
}

}  // namespace lieq
