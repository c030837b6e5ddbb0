#include <gtest/gtest.h>

#include "golden.hpp"
#include "lieq/catalog.hpp"
#include "lieq/cohomology.hpp"

using namespace lieq;

TEST(Cochain, AlternatingStorage) {
  const LieAlgebra g = catalog::abelian(3);
  Cochain c(g, 2, 1);
  c.set({2, 0}, {GaussRat(5)});
  EXPECT_EQ(c.value({0, 2}), Vec{GaussRat(-5)});
  EXPECT_EQ(c.value({2, 0}), Vec{GaussRat(5)});
  EXPECT_THROW(c.set({1, 1}, {GaussRat(1)}), DimensionMismatch);
  EXPECT_THROW(Cochain(g, 4, 1), DimensionMismatch);
  EXPECT_EQ(Cochain::from_coordinates(g, 2, 1, c.to_coordinates()), c);
}

TEST(Cohomology, DifferentialRaisesDegree) {
  const LieAlgebra h = catalog::heisenberg(1);
  Representation triv = trivial_rep(h);
  EXPECT_EQ(differential_matrix(triv, 1).rows(), 3u);  // C^2 has dim 3
  EXPECT_EQ(differential_matrix(triv, 1).cols(), 3u);  // C^1 has dim 3
  // d of the dual of the central element is -(v1^v2) up to sign convention.
  Cochain z(h, 1, 1);
  z.set({2}, {GaussRat(1)});
  const Cochain dz = differential(z, triv);
  EXPECT_FALSE(dz.is_zero());
  EXPECT_EQ(dz.coords().size(), 1u);
  EXPECT_TRUE(dz.coords().count({0, 1}));
}

TEST(Cohomology, Sl2) {
  const LieAlgebra g = catalog::sl2();
  const DerivationAlgebra der = derivation_algebra(g);
  EXPECT_EQ(der.derivations.dim(), 3u);
  EXPECT_EQ(der.inner.dim(), 3u);
  EXPECT_EQ(betti_numbers(adjoint_rep(g)), (std::vector<std::size_t>{0, 0, 0, 0}));
  EXPECT_EQ(betti_numbers(trivial_rep(g)), (std::vector<std::size_t>{1, 0, 0, 1}));
  EXPECT_EQ(schur_multiplier_dim(g), 0u);
  EXPECT_EQ(cocycle_space(2, adjoint_rep(g)).dim(),
            golden().at("extra").at("z2_sl2_adjoint").get<std::size_t>());
}

TEST(Cohomology, DSquaredVanishes) {
  for (const auto& name : catalog::list()) {
    const LieAlgebra g = catalog::get(name).algebra;
    for (std::size_t k = 0; k <= g.dim(); ++k) {
      EXPECT_TRUE(d_squared_check(adjoint_rep(g), k)) << name << " k=" << k;
      EXPECT_TRUE(d_squared_check(trivial_rep(g), k)) << name << " k=" << k;
    }
  }
}

TEST(Cohomology, MatchesOracle) {
  for (const auto& name : catalog::list()) {
    const LieAlgebra g = catalog::get(name).algebra;
    const json& gold = golden_signature(name);
    const Representation ad = adjoint_rep(g);
    EXPECT_EQ(json(cohomology_dim(1, ad)), gold.at("h1")) << name;
    if (g.dim() >= 2) {
      EXPECT_EQ(json(cohomology_dim(2, ad)), gold.at("h2")) << name;
      EXPECT_EQ(json(coboundary_space(2, ad).dim()), gold.at("b2")) << name;
    }
    EXPECT_EQ(json(derivation_algebra(g).inner.dim()), gold.at("inn")) << name;
    if (gold.contains("betti_trivial")) {
      EXPECT_EQ(json(betti_numbers(trivial_rep(g))), gold.at("betti_trivial")) << name;
    }
    if (gold.contains("betti_adjoint")) {
      EXPECT_EQ(json(betti_numbers(ad)), gold.at("betti_adjoint")) << name;
    }
  }
}

TEST(Cohomology, TrivialCoefficientCycleCondition) {
  const LieAlgebra g = catalog::get("n_4_3").algebra;
  Cochain ok(g, 2, 1);
  ok.set({0, 1}, {GaussRat(1)});
  EXPECT_TRUE(is_two_cocycle_trivial_coeffs(ok));
  Cochain bad(g, 2, 1);
  bad.set({2, 3}, {GaussRat(1)});
  EXPECT_FALSE(is_two_cocycle_trivial_coeffs(bad));
  const LieAlgebra h = catalog::heisenberg(1);
  EXPECT_EQ(coboundary_space(2, trivial_rep(h)).dim(),
            golden().at("extra").at("b2_h1_trivial").get<std::size_t>());
  EXPECT_EQ(json(cohomology_dim(2, trivial_rep(h))), golden_signature("h_1").at("betti_trivial").at(2));
  // The multiplier uses adjoint coefficients.
  EXPECT_EQ(json(schur_multiplier_dim(h)), golden_signature("h_1").at("h2"));
}
