#pragma once

// Central extensions g_theta = g + V with [x+u, y+v] = [x,y] + theta(x,y),
// the coboundary shift isomorphism and reconstruction of g from g/Z(g).

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lieq/cohomology.hpp"
#include "lieq/errors.hpp"
#include "lieq/liealg.hpp"
#include "lieq/report.hpp"

namespace lieq {

/// Alternating bilinear g x g -> V with trivial action, checked against the
/// cyclic 2-cocycle condition on construction.
class CentralCocycle {
 public:
  using Values = std::map<std::pair<std::size_t, std::size_t>, Vec>;

  CentralCocycle(LieAlgebra source, std::size_t target_dim, const Values& values)
      : source_(std::move(source)), target_dim_(target_dim) {
    if (target_dim_ == 0) throw DimensionMismatch("cocycle target must have dimension >= 1");
    for (const auto& [key, v] : values) {
      auto [i, j] = key;
      if (i >= source_.dim() || j >= source_.dim()) throw DimensionMismatch("cocycle index");
      if (v.size() != target_dim_) throw DimensionMismatch("cocycle value length");
      if (i == j) {
        if (!lieq::is_zero(v)) throw CocycleViolation("theta(x, x) must vanish");
        continue;
      }
      Vec& slot = i < j ? values_[{i, j}] : values_[{j, i}];
      if (slot.empty()) slot = Vec(target_dim_);
      axpy(slot, GaussRat(i < j ? 1 : -1), v);
    }
    std::erase_if(values_, [](const auto& kv) { return lieq::is_zero(kv.second); });
    if (auto t = violation()) {
      throw CocycleViolation("cyclic sum fails on basis triple (" + std::to_string((*t)[0] + 1) +
                             "," + std::to_string((*t)[1] + 1) + "," +
                             std::to_string((*t)[2] + 1) + ")");
    }
  }

  static CentralCocycle zero(const LieAlgebra& g, std::size_t target_dim) {
    return CentralCocycle(g, target_dim, {});
  }

  /// From a trivial-coefficient 2-cochain on g.
  static CentralCocycle from_cochain(const Cochain& c) {
    if (c.degree() != 2) throw DimensionMismatch("expected a 2-cochain");
    Values v;
    for (const auto& [tuple, value] : c.coords()) v[{tuple[0], tuple[1]}] = value;
    return CentralCocycle(c.source(), c.module_dim(), v);
  }

  const LieAlgebra& source() const { return source_; }
  std::size_t target_dim() const { return target_dim_; }
  const Values& values() const { return values_; }

  Vec value(std::size_t i, std::size_t j) const {
    if (i == j) return Vec(target_dim_);
    auto it = values_.find({std::min(i, j), std::max(i, j)});
    if (it == values_.end()) return Vec(target_dim_);
    return i < j ? it->second : GaussRat(-1) * it->second;
  }

  /// theta(x, e_j) for x given sparsely.
  Vec value(const SparseVec& x, std::size_t j) const {
    Vec out(target_dim_);
    for (const auto& [l, c] : x) axpy(out, c, value(l, j));
    return out;
  }

  Cochain to_cochain() const {
    Cochain c(source_, 2, target_dim_);
    for (const auto& [key, v] : values_) c.set({key.first, key.second}, v);
    return c;
  }

  friend bool operator==(const CentralCocycle& a, const CentralCocycle& b) {
    return a.target_dim_ == b.target_dim_ && a.values_ == b.values_ && a.source_ == b.source_;
  }

 private:
  std::optional<std::array<std::size_t, 3>> violation() const {
    const std::size_t n = source_.dim();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
          Vec s = value(source_.basis_bracket(i, j), k) + value(source_.basis_bracket(k, i), j) +
                  value(source_.basis_bracket(j, k), i);
          if (!lieq::is_zero(s)) return std::array<std::size_t, 3>{i, j, k};
        }
      }
    }
    return std::nullopt;
  }

  LieAlgebra source_;
  std::size_t target_dim_;
  Values values_;
};

inline std::vector<std::string> extension_labels(const LieAlgebra& g, std::size_t m) {
  std::vector<std::string> labels = g.labels();
  if (m == 1) {
    labels.emplace_back("w");
  } else {
    for (std::size_t a = 1; a <= m; ++a) labels.push_back("w" + std::to_string(a));
  }
  return labels;
}

/// g_theta on the basis (e_1..e_n, w_1..w_m).
inline LieAlgebra central_extension(const LieAlgebra& g, const CentralCocycle& theta) {
  if (!(theta.source() == g)) throw SourceMismatch("cocycle defined on a different algebra");
  const std::size_t n = g.dim();
  const std::size_t m = theta.target_dim();
  LieAlgebra::BracketTable table = g.brackets();
  for (const auto& [key, v] : theta.values()) {
    Vec full = to_dense(table[key], n + m);
    for (std::size_t a = 0; a < m; ++a) full[n + a] += v[a];
    table[key] = to_sparse(full);
  }
  try {
    return LieAlgebra(n + m, extension_labels(g, m), table, true);
  } catch (const NotLie& e) {
    throw CocycleViolation(e.what());
  }
}

/// theta^+ = {x : theta(x, y) = 0 for all y}.
inline Subspace cocycle_kernel(const CentralCocycle& theta) {
  const std::size_t n = theta.source().dim();
  const std::size_t m = theta.target_dim();
  SparseMatrix stacked(n * m, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      Vec v = theta.value(i, j);
      for (std::size_t a = 0; a < m; ++a) stacked.add_to(j * m + a, i, v[a]);
    }
  }
  return nullspace(stacked);
}

/// theta - c o [.,.] for a linear map c: g -> V given as a 1-cochain.
inline CentralCocycle shift_by_coboundary(const CentralCocycle& theta, const Cochain& c) {
  const LieAlgebra& g = theta.source();
  if (c.degree() != 1 || c.module_dim() != theta.target_dim() || !(c.source() == g)) {
    throw SourceMismatch("shift must be a 1-cochain on g with values in V");
  }
  CentralCocycle::Values v;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      Vec cb(theta.target_dim());
      for (const auto& [l, coef] : g.basis_bracket(i, j)) axpy(cb, coef, c.value({l}));
      v[{i, j}] = theta.value(i, j) - cb;
    }
  }
  return CentralCocycle(g, theta.target_dim(), v);
}

struct ShiftIsomorphism {
  CentralCocycle shifted;
  /// g_{theta'} (source of the map) and g_theta (target).
  LieAlgebra source;
  LieAlgebra target;
  /// (x, v) -> (x, v + c(x)) as an (n+m) x (n+m) matrix.
  SparseMatrix map;
  bool intertwines = false;
};

/// Builds theta' = theta - c o bracket and checks Phi[a,b]' = [Phi a, Phi b]
/// on every basis pair of g_{theta'}.
inline ShiftIsomorphism coboundary_shift_iso(const LieAlgebra& g, const CentralCocycle& theta,
                                             const Cochain& c) {
  if (!(theta.source() == g)) throw SourceMismatch("cocycle defined on a different algebra");
  CentralCocycle shifted = shift_by_coboundary(theta, c);
  LieAlgebra src = central_extension(g, shifted);
  LieAlgebra dst = central_extension(g, theta);
  const std::size_t n = g.dim();
  const std::size_t m = theta.target_dim();
  SparseMatrix phi = SparseMatrix::identity(n + m);
  for (std::size_t i = 0; i < n; ++i) {
    Vec ci = c.value({i});
    for (std::size_t a = 0; a < m; ++a) phi.add_to(n + a, i, ci[a]);
  }
  bool ok = true;
  for (std::size_t i = 0; i < n + m && ok; ++i) {
    for (std::size_t j = i + 1; j < n + m && ok; ++j) {
      Vec lhs = phi.apply(to_dense(src.basis_bracket(i, j), n + m));
      Vec pi = phi.apply(unit_vec(n + m, i));
      Vec pj = phi.apply(unit_vec(n + m, j));
      ok = lhs == dst.bracket(pi, pj);
    }
  }
  return {std::move(shifted), std::move(src), std::move(dst), std::move(phi), ok};
}

struct InducedCocycle {
  Subspace center;
  Quotient quotient;
  /// On the quotient, valued in Z(g) coordinates (the center's RREF basis).
  CentralCocycle theta;
};

/// g/Z(g) with the cocycle theta(x, y) = Z-component of [s x, s y], where s is
/// the section onto the non-pivot coordinates of Z(g).
inline InducedCocycle induced_cocycle(const LieAlgebra& g) {
  Subspace z = g.center();
  if (z.is_zero()) throw TrivialCenter("g has trivial center");
  Quotient q = quotient(g, z);
  const auto& comp = q.complement;
  CentralCocycle::Values values;
  for (std::size_t a = 0; a < comp.size(); ++a) {
    for (std::size_t b = a + 1; b < comp.size(); ++b) {
      SparseVec br = g.basis_bracket(comp[a], comp[b]);
      if (br.empty()) continue;
      Vec v = to_dense(br, g.dim());
      Vec zpart = v - z.reduce(v);
      values[{a, b}] = z.coordinates(zpart);
    }
  }
  CentralCocycle theta(q.algebra, z.dim(), values);
  return {std::move(z), std::move(q), std::move(theta)};
}

/// Checks 0 -> V -> g_theta -> g -> 0: pi o iota = 0, ker pi = im iota,
/// dimensions add, pi is a homomorphism and V is central.
inline Report short_exact_sequence_check(const LieAlgebra& g, const CentralCocycle& theta) {
  Report r;
  r.command = "extend exact-sequence";
  LieAlgebra e = central_extension(g, theta);
  const std::size_t n = g.dim();
  const std::size_t m = theta.target_dim();
  SparseMatrix iota(n + m, m);
  for (std::size_t a = 0; a < m; ++a) iota.set(n + a, a, GaussRat(1));
  SparseMatrix pi(n, n + m);
  for (std::size_t i = 0; i < n; ++i) pi.set(i, i, GaussRat(1));
  r.add("pi o iota = 0", "zero", (pi * iota).is_zero() ? "zero" : "nonzero", (pi * iota).is_zero());
  bool ker = nullspace(pi) == column_space(iota);
  r.add("ker pi = im iota", "equal", ker ? "equal" : "different", ker);
  r.check("dimensions add", std::to_string(n + m), std::to_string(e.dim()));
  bool hom = true;
  for (std::size_t i = 0; i < n + m && hom; ++i) {
    for (std::size_t j = i + 1; j < n + m && hom; ++j) {
      Vec lhs = pi.apply(to_dense(e.basis_bracket(i, j), n + m));
      hom = lhs == g.bracket(pi.apply(unit_vec(n + m, i)), pi.apply(unit_vec(n + m, j)));
    }
  }
  r.add("pi is a homomorphism", "yes", hom ? "yes" : "no", hom);
  bool central = column_space(iota).is_subspace_of(e.center());
  r.add("V inside Z(g_theta)", "yes", central ? "yes" : "no", central);
  return r;
}

}  // namespace lieq
