#pragma once

// Finite-dimensional Lie algebras given by structure constants, with the
// structural series (lower/upper central, derived), quotients and direct sums.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lieq/errors.hpp"
#include "lieq/exactnum.hpp"
#include "lieq/linalg.hpp"

namespace lieq {

/// Failing basis triple of the Jacobi identity (0-based indices).
struct JacobiWitness {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  Vec residual;
};

class LieAlgebra {
 public:
  /// Key (i, j) with i < j, 0-based.
  using BracketTable = std::map<std::pair<std::size_t, std::size_t>, SparseVec>;

  LieAlgebra() = default;

  /// Builds from brackets of basis pairs. Keys with i > j are folded in with a
  /// sign flip; keys with i == j must carry zero. Throws NotLie if `verify`
  /// is set and the Jacobi identity fails.
  LieAlgebra(std::size_t dim, std::vector<std::string> labels, const BracketTable& brackets,
             bool verify = false)
      : dim_(dim), labels_(std::move(labels)) {
    if (labels_.empty()) labels_ = default_labels(dim);
    if (labels_.size() != dim_) throw DimensionMismatch("label count differs from dimension");
    for (const auto& [key, value] : brackets) {
      auto [i, j] = key;
      if (i >= dim_ || j >= dim_) throw DimensionMismatch("bracket index out of range");
      for (const auto& [k, c] : value) {
        if (k >= dim_) throw DimensionMismatch("bracket output index out of range");
      }
      if (i == j) {
        if (!value.empty()) throw NotLie("[e_i, e_i] must vanish");
        continue;
      }
      if (i < j) {
        add_to(i, j, value, GaussRat(1));
      } else {
        add_to(j, i, value, GaussRat(-1));
      }
    }
    if (verify) {
      if (auto w = check_jacobi()) {
        throw NotLie("Jacobi identity fails on basis triple (" + std::to_string(w->i + 1) + "," +
                     std::to_string(w->j + 1) + "," + std::to_string(w->k + 1) + ")");
      }
      verified_ = true;
    }
  }

  static LieAlgebra abelian(std::size_t n) { return LieAlgebra(n, {}, {}, true); }

  static std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t k = 1; k <= n; ++k) out.push_back("v" + std::to_string(k));
    return out;
  }

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const BracketTable& brackets() const { return brackets_; }
  bool verified() const { return verified_; }

  /// [e_i, e_j] as a sparse vector (antisymmetry applied).
  SparseVec basis_bracket(std::size_t i, std::size_t j) const {
    if (i >= dim_ || j >= dim_) throw DimensionMismatch("basis index out of range");
    if (i == j) return {};
    auto it = brackets_.find({std::min(i, j), std::max(i, j)});
    if (it == brackets_.end()) return {};
    if (i < j) return it->second;
    SparseVec neg = it->second;
    for (auto& [k, c] : neg) c = -c;
    return neg;
  }

  GaussRat structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    for (const auto& [idx, c] : basis_bracket(i, j)) {
      if (idx == k) return c;
    }
    return {};
  }

  Vec bracket(std::span<const GaussRat> x, std::span<const GaussRat> y) const {
    if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("bracket operand length");
    Vec out(dim_);
    for (const auto& [key, value] : brackets_) {
      auto [i, j] = key;
      // x_i y_j - x_j y_i
      GaussRat c = x[i] * y[j] - x[j] * y[i];
      if (!c.is_zero()) axpy(out, c, value);
    }
    return out;
  }

  /// Matrix of ad(e_i): column j holds [e_i, e_j].
  SparseMatrix ad_matrix(std::size_t i) const {
    SparseMatrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      for (const auto& [k, c] : basis_bracket(i, j)) m.add_to(k, j, c);
    }
    return m;
  }

  /// ad(x) for an arbitrary element.
  SparseMatrix ad_matrix(std::span<const GaussRat> x) const {
    SparseMatrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (!x[i].is_zero()) m = m + x[i] * ad_matrix(i);
    }
    return m;
  }

  /// Jacobi sum [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]].
  Vec jacobi_sum(std::size_t i, std::size_t j, std::size_t k) const {
    Vec out(dim_);
    auto accumulate = [&](std::size_t a, std::size_t b, std::size_t c) {
      for (const auto& [l, coef] : basis_bracket(b, c)) {
        axpy(out, coef, basis_bracket(a, l));
      }
    };
    accumulate(i, j, k);
    accumulate(j, k, i);
    accumulate(k, i, j);
    return out;
  }

  /// First failing triple i<j<k in lexicographic order, or nullopt.
  std::optional<JacobiWitness> check_jacobi() const {
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = i + 1; j < dim_; ++j) {
        for (std::size_t k = j + 1; k < dim_; ++k) {
          Vec r = jacobi_sum(i, j, k);
          if (!is_zero(r)) return JacobiWitness{i, j, k, std::move(r)};
        }
      }
    }
    return std::nullopt;
  }

  bool is_abelian() const { return brackets_.empty(); }

  /// Z(g): common kernel of all ad(e_j) viewed as maps x -> [x, e_j].
  Subspace center() const {
    SparseMatrix stacked(dim_ * dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      for (std::size_t i = 0; i < dim_; ++i) {
        for (const auto& [k, c] : basis_bracket(i, j)) stacked.add_to(j * dim_ + k, i, c);
      }
    }
    return nullspace(stacked);
  }

  /// Span of [a, b] for a in s, b in t.
  Subspace bracket_span(const Subspace& s, const Subspace& t) const {
    std::vector<Vec> gens;
    auto sb = s.basis();
    auto tb = t.basis();
    for (const auto& a : sb) {
      for (const auto& b : tb) {
        Vec v = bracket(a, b);
        if (!is_zero(v)) gens.push_back(std::move(v));
      }
    }
    return Subspace::span(dim_, gens);
  }

  Subspace whole() const { return Subspace::full(dim_); }

  Subspace derived_subalgebra() const {
    std::vector<SparseVec> gens;
    for (const auto& [key, value] : brackets_) gens.push_back(value);
    return Subspace::span(dim_, gens);
  }

  bool is_ideal(const Subspace& s) const {
    if (s.ambient_dim() != dim_) return false;
    for (const auto& b : s.basis()) {
      for (std::size_t j = 0; j < dim_; ++j) {
        if (!s.contains(bracket(unit_vec(dim_, j), b))) return false;
      }
    }
    return true;
  }

  bool is_subalgebra(const Subspace& s) const {
    return bracket_span(s, s).is_subspace_of(s);
  }

  /// gamma_1 = g, gamma_{i+1} = [gamma_i, g], stopped at the first repeat.
  std::vector<Subspace> lower_central_series() const {
    std::vector<Subspace> out;
    if (dim_ == 0) return out;
    out.push_back(whole());
    const Subspace g = whole();
    while (true) {
      Subspace next = bracket_span(out.back(), g);
      if (next.dim() == out.back().dim()) break;
      out.push_back(std::move(next));
    }
    return out;
  }

  /// Z_0 = 0, Z_{i+1} = {x : [x, g] in Z_i}, stopped at the first repeat.
  std::vector<Subspace> upper_central_series() const {
    std::vector<Subspace> out;
    if (dim_ == 0) return out;
    out.push_back(Subspace::zero(dim_));
    while (true) {
      Subspace next = centralizer_modulo(out.back());
      if (next.dim() == out.back().dim()) break;
      out.push_back(std::move(next));
    }
    return out;
  }

  /// g^(0) = g, g^(i+1) = [g^(i), g^(i)], stopped at the first repeat.
  std::vector<Subspace> derived_series() const {
    std::vector<Subspace> out;
    if (dim_ == 0) return out;
    out.push_back(whole());
    while (true) {
      Subspace next = bracket_span(out.back(), out.back());
      if (next.dim() == out.back().dim()) break;
      out.push_back(std::move(next));
    }
    return out;
  }

  /// Nilpotency class c (gamma_{c+1} = 0), or nullopt.
  std::optional<std::size_t> nilpotency_class() const {
    auto lcs = lower_central_series();
    if (lcs.empty()) return 0;
    if (lcs.back().dim() != 0) return std::nullopt;
    return lcs.size() - 1;
  }

  /// Class read off the upper central series (Z_c = g).
  std::optional<std::size_t> nilpotency_class_upper() const {
    auto ucs = upper_central_series();
    if (ucs.empty()) return 0;
    if (ucs.back().dim() != dim_) return std::nullopt;
    return ucs.size() - 1;
  }

  /// Derived length l (g^(l) = 0), or nullopt.
  std::optional<std::size_t> solvable_length() const {
    auto ds = derived_series();
    if (ds.empty()) return 0;
    if (ds.back().dim() != 0) return std::nullopt;
    return ds.size() - 1;
  }

  bool is_nilpotent() const { return nilpotency_class().has_value(); }
  bool is_solvable() const { return solvable_length().has_value(); }

  /// {x : [x, e_j] in s for all j}.
  Subspace centralizer_modulo(const Subspace& s) const {
    const auto comp = s.nonpivots();
    SparseMatrix stacked(dim_ * comp.size(), dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) {
        SparseVec b = basis_bracket(i, j);
        if (b.empty()) continue;
        Vec r = s.reduce(to_dense(b, dim_));
        for (std::size_t c = 0; c < comp.size(); ++c) {
          stacked.add_to(j * comp.size() + c, i, r[comp[c]]);
        }
      }
    }
    return nullspace(stacked);
  }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.brackets_ == b.brackets_;
  }

 private:
  void add_to(std::size_t i, std::size_t j, const SparseVec& value, const GaussRat& sign) {
    auto& slot = brackets_[{i, j}];
    Vec dense = to_dense(slot, dim_);
    axpy(dense, sign, value);
    slot = to_sparse(dense);
    if (slot.empty()) brackets_.erase({i, j});
  }

  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  BracketTable brackets_;
  bool verified_ = false;
};

/// Convenience: relation list with 1-based indices, e.g. {{1, 2, {{3, 1}}}}.
struct Relation {
  std::size_t i;
  std::size_t j;
  std::vector<std::pair<std::size_t, GaussRat>> out;
};

inline LieAlgebra from_relations(std::size_t dim, const std::vector<Relation>& rels,
                                 std::vector<std::string> labels = {}) {
  LieAlgebra::BracketTable table;
  for (const auto& r : rels) {
    if (r.i == 0 || r.j == 0) throw DimensionMismatch("relations use 1-based indices");
    Vec v(dim);
    for (const auto& [k, c] : r.out) {
      if (k == 0 || k > dim) throw DimensionMismatch("relation output index out of range");
      v[k - 1] += c;
    }
    std::pair<std::size_t, std::size_t> key{r.i - 1, r.j - 1};
    Vec prev = to_dense(table[key], dim);
    table[key] = to_sparse(prev + v);
  }
  return LieAlgebra(dim, std::move(labels), table, true);
}

struct Quotient {
  LieAlgebra algebra;
  /// dim(g/a) x dim(g) matrix of the projection in the complement coordinates.
  SparseMatrix projection;
  /// Indices of g's basis vectors that form the section of the quotient.
  std::vector<std::size_t> complement;
};

inline Quotient quotient(const LieAlgebra& g, const Subspace& ideal) {
  if (ideal.ambient_dim() != g.dim()) throw DimensionMismatch("ideal ambient dimension");
  if (!g.is_ideal(ideal)) throw NotAnIdeal("subspace is not stable under ad(g)");
  const auto comp = ideal.nonpivots();
  const std::size_t q = comp.size();
  auto project = [&](std::span<const GaussRat> v) {
    Vec r = ideal.reduce(v);
    Vec out(q);
    for (std::size_t c = 0; c < q; ++c) out[c] = r[comp[c]];
    return out;
  };
  LieAlgebra::BracketTable table;
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < q; ++a) {
    labels.push_back(g.labels()[comp[a]]);
    for (std::size_t b = a + 1; b < q; ++b) {
      SparseVec br = g.basis_bracket(comp[a], comp[b]);
      if (br.empty()) continue;
      SparseVec image = to_sparse(project(to_dense(br, g.dim())));
      if (!image.empty()) table[{a, b}] = std::move(image);
    }
  }
  SparseMatrix proj(q, g.dim());
  for (std::size_t j = 0; j < g.dim(); ++j) {
    Vec col = project(unit_vec(g.dim(), j));
    for (std::size_t c = 0; c < q; ++c) proj.add_to(c, j, col[c]);
  }
  return {LieAlgebra(q, std::move(labels), table, g.verified()), std::move(proj), comp};
}

inline LieAlgebra direct_sum(const LieAlgebra& g, const LieAlgebra& h) {
  const std::size_t n = g.dim();
  LieAlgebra::BracketTable table = g.brackets();
  for (const auto& [key, value] : h.brackets()) {
    SparseVec shifted;
    for (const auto& [k, c] : value) shifted.emplace_back(k + n, c);
    table[{key.first + n, key.second + n}] = std::move(shifted);
  }
  std::vector<std::string> labels = g.labels();
  labels.insert(labels.end(), h.labels().begin(), h.labels().end());
  return LieAlgebra(n + h.dim(), std::move(labels), table, g.verified() && h.verified());
}

inline std::vector<std::size_t> series_dims(const std::vector<Subspace>& series) {
  std::vector<std::size_t> out;
  for (const auto& s : series) out.push_back(s.dim());
  return out;
}

}  // namespace lieq
