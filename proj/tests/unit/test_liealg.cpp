#include <gtest/gtest.h>

#include "lieq/catalog.hpp"
#include "lieq/liealg.hpp"

using namespace lieq;

TEST(LieAlgebra, BracketIsAntisymmetric) {
  const LieAlgebra g = catalog::sl2();
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      Vec a = to_dense(g.basis_bracket(i, j), 3);
      Vec b = to_dense(g.basis_bracket(j, i), 3);
      EXPECT_EQ(a, GaussRat(-1) * b);
    }
  }
  EXPECT_EQ(g.structure_constant(2, 0, 0), GaussRat(2));  // [h, e] = 2e
}

TEST(LieAlgebra, JacobiIsEnforced) {
  // [e1,e2] = e1, [e2,e3] = e2, [e1,e3] = 0 is not Lie: J(1,2,3) = [e1,e2] != 0.
  LieAlgebra::BracketTable t;
  t[{0, 1}] = {{0, GaussRat(1)}};
  t[{1, 2}] = {{1, GaussRat(1)}};
  EXPECT_THROW(LieAlgebra(3, {}, t, true), NotLie);
  const LieAlgebra raw(3, {}, t, false);
  const auto w = raw.check_jacobi();
  ASSERT_TRUE(w);
  EXPECT_FALSE(is_zero(raw.jacobi_sum(0, 1, 2)));
}

TEST(LieAlgebra, FromRelations) {
  const LieAlgebra h = from_relations(3, {{1, 2, {{3, GaussRat(1)}}}}, {"x", "y", "z"});
  EXPECT_EQ(h.basis_bracket(1, 0), (SparseVec{{2, GaussRat(-1)}}));
  EXPECT_EQ(h.center().dim(), 1u);
  EXPECT_EQ(h.nilpotency_class(), std::optional<std::size_t>(2));
}

TEST(LieAlgebra, SeriesOfHeisenberg) {
  const LieAlgebra h = catalog::heisenberg(2);
  EXPECT_EQ(series_dims(h.lower_central_series()), (std::vector<std::size_t>{5, 1, 0}));
  EXPECT_EQ(series_dims(h.upper_central_series()), (std::vector<std::size_t>{0, 1, 5}));
  EXPECT_EQ(series_dims(h.derived_series()), (std::vector<std::size_t>{5, 1, 0}));
  EXPECT_TRUE(h.is_nilpotent());
}

TEST(LieAlgebra, Sl2IsPerfect) {
  const LieAlgebra g = catalog::sl2();
  EXPECT_EQ(g.derived_subalgebra().dim(), 3u);
  EXPECT_FALSE(g.is_solvable());
  EXPECT_TRUE(g.center().is_zero());
}

TEST(LieAlgebra, QuotientByCenter) {
  const LieAlgebra h = catalog::heisenberg(1);
  const Quotient q = quotient(h, h.center());
  EXPECT_EQ(q.algebra.dim(), 2u);
  EXPECT_TRUE(q.algebra.is_abelian());
  EXPECT_THROW(quotient(catalog::sl2(), Subspace::span(3, std::vector<Vec>{unit_vec(3, 0)})),
               NotAnIdeal);
}

TEST(LieAlgebra, DirectSum) {
  const LieAlgebra s = direct_sum(catalog::heisenberg(1), LieAlgebra::abelian(2));
  EXPECT_EQ(s.dim(), 5u);
  EXPECT_EQ(s.center().dim(), 3u);
  EXPECT_EQ(s, catalog::get("n_5_2").algebra);
}

TEST(LieAlgebra, RejectsBadInput) {
  LieAlgebra::BracketTable t;
  t[{0, 5}] = {};
  EXPECT_THROW(LieAlgebra(3, {}, t), DimensionMismatch);
  EXPECT_THROW(LieAlgebra(2, {"a"}, {}), DimensionMismatch);
}
