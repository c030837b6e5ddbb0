// Randomized properties with fixed seeds.
#include <gtest/gtest.h>

#include <random>

#include "lieq/catalog.hpp"
#include "lieq/cohomology.hpp"
#include "lieq/deform.hpp"
#include "lieq/extend.hpp"
#include "lieq/fock.hpp"
#include "lieq/qheis.hpp"
#include "lieq/serialize.hpp"
#include "lieq/signature.hpp"
#include "lieq/verify.hpp"

using namespace lieq;

namespace {

std::mt19937_64& rng() {
  static std::mt19937_64 r(0xC0FFEE);
  return r;
}

GaussRat random_gauss() {
  return detail::random_rational(rng(), 6, 5) + GaussRat::i() * detail::random_rational(rng(), 3, 2);
}

}  // namespace

TEST(Properties, FieldAxioms) {
  for (int k = 0; k < 200; ++k) {
    const GaussRat a = random_gauss(), b = random_gauss(), c = random_gauss();
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), GaussRat(1));
    }
    EXPECT_EQ(GaussRat::parse(a.to_string()), a);
  }
}

TEST(Properties, LaurentEvaluationIsAHomomorphism) {
  for (int k = 0; k < 50; ++k) {
    LaurentPoly p('q'), r('q');
    for (int e = -2; e <= 3; ++e) {
      p.add_term(e, detail::random_rational(rng()));
      r.add_term(e, detail::random_rational(rng()));
    }
    GaussRat x = random_gauss();
    if (x.is_zero()) x = GaussRat(1);
    EXPECT_EQ((p * r).eval(x), p.eval(x) * r.eval(x));
    EXPECT_EQ((p + r).eval(x), p.eval(x) + r.eval(x));
  }
}

TEST(Properties, SignatureIsBasisInvariant) {
  // Conjugating the structure constants by a random invertible matrix keeps
  // every invariant.
  for (const char* name : {"n_4_3", "n_5_6", "n_5_9", "sl2", "a_sh"}) {
    const LieAlgebra g = catalog::get(name).algebra;
    const std::size_t n = g.dim();
    const SparseMatrix P = detail::random_invertible(rng(), n);
    const SparseMatrix Pinv = *try_inverse(P);
    // New basis f_i = P e_i (columns of P).
    LieAlgebra::BracketTable t;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const Vec fi = P.apply(unit_vec(n, i));
        const Vec fj = P.apply(unit_vec(n, j));
        const SparseVec s = to_sparse(Pinv.apply(g.bracket(fi, fj)));
        if (!s.empty()) t[{i, j}] = s;
      }
    }
    const LieAlgebra h(n, {}, t, true);
    EXPECT_EQ(invariant_signature(h, true), invariant_signature(g, true)) << name;
  }
}

TEST(Properties, CoboundariesAreCocycles) {
  for (const char* name : {"h_2", "n_5_5", "n_4_3", "sl2"}) {
    const LieAlgebra g = catalog::get(name).algebra;
    for (const auto& rho : {adjoint_rep(g), trivial_rep(g)}) {
      for (int k = 0; k < 5; ++k) {
        const Cochain c = detail::random_cochain(rng(), g, 1, rho.module_dim(), 0.5);
        const Cochain dc = differential(c, rho);
        EXPECT_TRUE(differential(dc, rho).is_zero()) << name;
        EXPECT_TRUE(cocycle_space(2, rho).contains(dc.to_coordinates())) << name;
      }
    }
  }
}

TEST(Properties, RandomDeformationsGradedConsistency) {
  const auto names = catalog::list();
  for (int k = 0; k < 30; ++k) {
    const LieAlgebra g = catalog::get(names[rng()() % names.size()]).algebra;
    if (g.dim() < 3 || g.dim() > 5) continue;
    const DeformedBracket d(g, {detail::random_cochain(rng(), g, 2, g.dim(), 0.2)});
    const GaussRat t0 = random_gauss();
    EXPECT_EQ(jacobi_polynomial_at(jacobi_polynomial(d), t0),
              direct_jacobi_residuals(structure_at(d, t0)));
    // A vanishing graded polynomial means Lie at every parameter.
    if (!deformation_is_lie(d)) {
      EXPECT_NO_THROW(evaluate_at(d, t0));
    }
  }
}

TEST(Properties, AlgebraJsonRoundTripUnderRandomConstants) {
  // Scaling a nilpotent algebra's constants by random Gaussian rationals keeps
  // Jacobi for the 2-step ones; the document must reproduce them exactly.
  for (int k = 0; k < 20; ++k) {
    LieAlgebra::BracketTable t;
    const GaussRat a = random_gauss(), b = random_gauss();
    t[{0, 1}] = to_sparse(Vec{GaussRat(), GaussRat(), GaussRat(), GaussRat(), a});
    t[{2, 3}] = to_sparse(Vec{GaussRat(), GaussRat(), GaussRat(), GaussRat(), b});
    const LieAlgebra g(5, {}, t, true);
    EXPECT_EQ(algebra_from_json(json::parse(to_json(g).dump())), g);
  }
}

TEST(Properties, RandomNormalOrderingAgrees) {
  const char* letters = "AB";
  for (int k = 0; k < 25; ++k) {
    std::string w;
    const std::size_t len = 1 + rng()() % 7;
    for (std::size_t s = 0; s < len; ++s) w += std::string(1, letters[rng()() % 2]) + (s + 1 < len ? "*" : "");
    const WordPoly e = parse_expression(w);
    EXPECT_EQ(normal_order_random(e, rng()), normal_order(e)) << w;
    // Substituted into the ladder matrices, both sides agree away from the edge.
    const GaussRat q0 = detail::random_rational(rng());
    const MonomialPair p = monomial_rep(q0, 12);
    EXPECT_TRUE(agree_on_interior(evaluate_on_matrices(e, q0, p),
                                  evaluate_on_matrices(normal_order(e).to_wordpoly(), q0, p), len))
        << w;
  }
}

TEST(Properties, SimilarityRandomTruncations) {
  for (const auto& q0 : {GaussRat(0), GaussRat::fraction(1, 3), GaussRat(1), GaussRat(-2)}) {
    const MonomialPair p = monomial_rep(q0, 6);
    for (int k = 0; k < 5; ++k) {
      const SparseMatrix T = detail::random_invertible(rng(), 6);
      EXPECT_TRUE(similarity_transport({p.A}, {p.B}, T, q0).defect_conjugates);
    }
  }
}

TEST(Properties, VerifyIsDeterministicUnderSeed) {
  VerifyOptions opt;
  opt.seed = 99;
  const json a = to_json(criterion_biorthogonal(opt));
  const json b = to_json(criterion_biorthogonal(opt));
  EXPECT_EQ(a.at("items"), b.at("items"));
}
