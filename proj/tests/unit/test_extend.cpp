#include <gtest/gtest.h>

#include <random>

#include "lieq/catalog.hpp"
#include "lieq/extend.hpp"
#include "lieq/signature.hpp"
#include "lieq/verify.hpp"

using namespace lieq;

TEST(Extend, AbelianPlaneToHeisenberg) {
  const LieAlgebra a = LieAlgebra::abelian(2);
  const CentralCocycle theta(a, 1, {{{0, 1}, {GaussRat(1)}}});
  const LieAlgebra e = central_extension(a, theta);
  EXPECT_EQ(e, catalog::heisenberg(1));
  EXPECT_EQ(e.labels().back(), "w");
  EXPECT_TRUE(short_exact_sequence_check(a, theta).ok());
  EXPECT_TRUE(cocycle_kernel(theta).is_zero());
}

TEST(Extend, RejectsNonCocycle) {
  const LieAlgebra g = catalog::get("n_4_3").algebra;
  EXPECT_THROW(CentralCocycle(g, 1, {{{2, 3}, {GaussRat(1)}}}), CocycleViolation);
  EXPECT_THROW(CentralCocycle(g, 1, {{{1, 1}, {GaussRat(1)}}}), CocycleViolation);
  EXPECT_THROW(CentralCocycle(g, 0, {}), DimensionMismatch);
}

TEST(Extend, AntisymmetryFolding) {
  const LieAlgebra a = LieAlgebra::abelian(2);
  const CentralCocycle theta(a, 1, {{{1, 0}, {GaussRat(3)}}});
  EXPECT_EQ(theta.value(0, 1), Vec{GaussRat(-3)});
}

TEST(Extend, ReconstructionRoundTrip) {
  for (const auto& name : catalog::list()) {
    const LieAlgebra g = catalog::get(name).algebra;
    if (g.center().is_zero()) {
      EXPECT_THROW(induced_cocycle(g), TrivialCenter) << name;
      continue;
    }
    const InducedCocycle ic = induced_cocycle(g);
    EXPECT_EQ(ic.quotient.algebra.dim() + ic.center.dim(), g.dim());
    const LieAlgebra back = central_extension(ic.quotient.algebra, ic.theta);
    EXPECT_EQ(invariant_signature(back), invariant_signature(g)) << name;
    EXPECT_TRUE(short_exact_sequence_check(ic.quotient.algebra, ic.theta).ok()) << name;
  }
}

TEST(Extend, CoboundaryShiftIsAnIsomorphism) {
  std::mt19937_64 rng(11);
  const LieAlgebra g = catalog::get("n_4_3").algebra;
  const CentralCocycle theta(g, 2, {{{0, 3}, {GaussRat(1), GaussRat(0)}},
                                    {{1, 2}, {GaussRat(-1), GaussRat(2)}}});
  for (int k = 0; k < 10; ++k) {
    const Cochain c = detail::random_cochain(rng, g, 1, 2, 0.7);
    const ShiftIsomorphism s = coboundary_shift_iso(g, theta, c);
    EXPECT_TRUE(s.intertwines);
    EXPECT_EQ(invariant_signature(s.source), invariant_signature(s.target));
  }
}

TEST(Extend, SourceMismatch) {
  const CentralCocycle theta(LieAlgebra::abelian(2), 1, {{{0, 1}, {GaussRat(1)}}});
  EXPECT_THROW(central_extension(catalog::heisenberg(1), theta), SourceMismatch);
}
