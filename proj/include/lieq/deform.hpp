#pragma once

// Parameter-graded brackets mu_t = mu + t phi_1 + ... + t^k phi_k, the
// graded Jacobi expansion and rigidity numbers.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lieq/cohomology.hpp"
#include "lieq/errors.hpp"
#include "lieq/exactnum.hpp"
#include "lieq/liealg.hpp"

namespace lieq {

class DeformedBracket {
 public:
  /// Each phi must be a 2-cochain on `base` with values in the algebra itself.
  DeformedBracket(LieAlgebra base, std::vector<Cochain> phis, char param = 't')
      : base_(std::move(base)), phis_(std::move(phis)), param_(param) {
    if (phis_.empty()) throw DimensionMismatch("a deformation needs at least one perturbation");
    levels_.push_back(base_);
    for (const auto& phi : phis_) {
      if (phi.degree() != 2) throw DimensionMismatch("perturbations are 2-cochains");
      if (phi.module_dim() != base_.dim() || !(phi.source() == base_)) {
        throw SourceMismatch("perturbation is not a cochain on the base algebra with values in it");
      }
      LieAlgebra::BracketTable table;
      for (const auto& [tuple, value] : phi.coords()) table[{tuple[0], tuple[1]}] = to_sparse(value);
      // Unverified on purpose: a perturbation need not satisfy Jacobi.
      levels_.emplace_back(base_.dim(), base_.labels(), table, false);
    }
  }

  const LieAlgebra& base() const { return base_; }
  const std::vector<Cochain>& perturbations() const { return phis_; }
  std::size_t order() const { return phis_.size(); }
  char param() const { return param_; }

  /// Level 0 is the base bracket, level i the bracket of phi_i.
  const LieAlgebra& level(std::size_t i) const { return levels_.at(i); }
  std::size_t levels() const { return levels_.size(); }

 private:
  LieAlgebra base_;
  std::vector<Cochain> phis_;
  char param_;
  std::vector<LieAlgebra> levels_;
};

inline DeformedBracket make_linear_deformation(const LieAlgebra& g, const Cochain& phi) {
  return DeformedBracket(g, {phi});
}

/// Bracket table of a LieAlgebra repackaged as a 2-cochain with values in g.
inline Cochain bracket_as_cochain(const LieAlgebra& source, const LieAlgebra& bracket) {
  if (source.dim() != bracket.dim()) throw DimensionMismatch("bracket dimension");
  Cochain c(source, 2, source.dim());
  for (const auto& [key, value] : bracket.brackets()) {
    c.set({key.first, key.second}, to_dense(value, source.dim()));
  }
  return c;
}

using Triple = std::array<std::size_t, 3>;
using PolyVec = std::vector<LaurentPoly>;

/// For each basis triple i<j<k: mu_t(e_i, mu_t(e_j, e_k)) + cyclic, collected
/// by powers of t. All cross terms between levels are kept.
inline std::map<Triple, PolyVec> jacobi_polynomial(const DeformedBracket& d) {
  const LieAlgebra& g = d.base();
  const std::size_t n = g.dim();
  const std::size_t L = d.levels();
  std::map<Triple, PolyVec> out;
  auto term = [&](PolyVec& acc, std::size_t x, std::size_t y, std::size_t z) {
    for (std::size_t b = 0; b < L; ++b) {
      SparseVec inner = d.level(b).basis_bracket(y, z);
      if (inner.empty()) continue;
      for (std::size_t a = 0; a < L; ++a) {
        const LieAlgebra& outer = d.level(a);
        for (const auto& [l, c] : inner) {
          for (const auto& [k, v] : outer.basis_bracket(x, l)) {
            acc[k].add_term(static_cast<int>(a + b), c * v);
          }
        }
      }
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        PolyVec acc(n, LaurentPoly(d.param()));
        term(acc, i, j, k);
        term(acc, j, k, i);
        term(acc, k, i, j);
        out[{i, j, k}] = std::move(acc);
      }
    }
  }
  return out;
}

struct DeformationWitness {
  Triple triple;  // 0-based
  int degree;
  Vec residual;
};

/// First offending triple (lexicographic) and its lowest nonzero t-degree.
inline std::optional<DeformationWitness> deformation_is_lie(const DeformedBracket& d) {
  for (const auto& [triple, poly] : jacobi_polynomial(d)) {
    std::optional<int> low;
    for (const auto& p : poly) {
      if (auto m = p.min_exponent()) low = low ? std::min(*low, *m) : *m;
    }
    if (!low) continue;
    Vec residual;
    for (const auto& p : poly) residual.push_back(p.coeff(*low));
    return DeformationWitness{triple, *low, std::move(residual)};
  }
  return std::nullopt;
}

/// Structure constants mu + sum t0^i phi_i, unverified.
inline LieAlgebra structure_at(const DeformedBracket& d, const GaussRat& t0) {
  const std::size_t n = d.base().dim();
  std::map<std::pair<std::size_t, std::size_t>, Vec> dense;
  GaussRat power(1);
  for (std::size_t a = 0; a < d.levels(); ++a) {
    for (const auto& [key, value] : d.level(a).brackets()) {
      auto [it, fresh] = dense.try_emplace(key, Vec(n));
      axpy(it->second, power, value);
    }
    power *= t0;
  }
  LieAlgebra::BracketTable table;
  for (const auto& [key, v] : dense) {
    SparseVec s = to_sparse(v);
    if (!s.empty()) table[key] = std::move(s);
  }
  return LieAlgebra(n, d.base().labels(), table, false);
}

/// Without the override the product at t0 must satisfy Jacobi (checked via the
/// graded polynomial evaluated at t0) and the result is marked verified.
/// With the override a possibly non-Lie product is returned unverified.
inline LieAlgebra evaluate_at(const DeformedBracket& d, const GaussRat& t0,
                              bool allow_non_lie = false) {
  LieAlgebra g = structure_at(d, t0);
  if (allow_non_lie) return g;
  for (const auto& [triple, poly] : jacobi_polynomial(d)) {
    for (const auto& p : poly) {
      if (!p.eval(t0).is_zero()) {
        throw NotLieAtParameter("Jacobi fails at t = " + t0.to_string() + " on triple (" +
                                std::to_string(triple[0] + 1) + "," +
                                std::to_string(triple[1] + 1) + "," +
                                std::to_string(triple[2] + 1) + ")");
      }
    }
  }
  return LieAlgebra(g.dim(), g.labels(), g.brackets(), true);
}

/// Evaluates every graded Jacobi component at t0.
inline std::map<Triple, Vec> jacobi_polynomial_at(const std::map<Triple, PolyVec>& jp,
                                                  const GaussRat& t0) {
  std::map<Triple, Vec> out;
  for (const auto& [triple, poly] : jp) {
    Vec v;
    for (const auto& p : poly) v.push_back(p.eval(t0));
    out[triple] = std::move(v);
  }
  return out;
}

/// Jacobi sums of an arbitrary (possibly non-Lie) product, by triple.
inline std::map<Triple, Vec> direct_jacobi_residuals(const LieAlgebra& g) {
  std::map<Triple, Vec> out;
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) out[{i, j, k}] = g.jacobi_sum(i, j, k);
    }
  }
  return out;
}

struct DeformationCandidates {
  /// Z^2(g, g; ad) in cochain coordinates.
  Subspace cocycles;
  std::vector<Cochain> basis;
  /// survives[s]: mu + t basis[s] satisfies Jacobi identically in t.
  std::vector<bool> survives;

  std::size_t survivor_count() const {
    return static_cast<std::size_t>(std::count(survives.begin(), survives.end(), true));
  }
};

/// Cocycle candidates plus the full graded filter on each basis cocycle.
inline DeformationCandidates linear_deformation_candidates(const LieAlgebra& g) {
  DeformationCandidates out{cocycle_space(2, adjoint_rep(g)), {}, {}};
  for (const auto& b : out.cocycles.basis()) {
    Cochain phi = Cochain::from_coordinates(g, 2, g.dim(), b);
    out.survives.push_back(!deformation_is_lie(make_linear_deformation(g, phi)));
    out.basis.push_back(std::move(phi));
  }
  return out;
}

struct RigidityReport {
  std::size_t n = 0;
  std::size_t der = 0;
  /// n^2 - dim Der, the dimension of the tangent space to the orbit.
  std::size_t tangent = 0;
  std::size_t b2 = 0;
  std::size_t h2 = 0;
  /// H^2(g, g; ad) = 0.
  bool nr_rigid = false;
  bool tangent_equals_b2 = false;
};

inline RigidityReport rigidity_report(const LieAlgebra& g) {
  RigidityReport r;
  r.n = g.dim();
  r.der = derivation_algebra(g).derivations.dim();
  r.tangent = r.n * r.n - r.der;
  Representation ad = adjoint_rep(g);
  r.b2 = coboundary_space(2, ad).dim();
  r.h2 = cohomology_dim(2, ad);
  r.nr_rigid = r.h2 == 0;
  r.tangent_equals_b2 = r.tangent == r.b2;
  return r;
}

/// Der(g) nilpotent as a Lie algebra. Any g of positive dimension has Der(g)
/// of positive dimension, and the zero algebra is reported as false.
inline bool characteristically_nilpotent(const LieAlgebra& g) {
  if (g.dim() == 0) return false;
  return derivation_algebra(g).algebra.is_nilpotent();
}

}  // namespace lieq
