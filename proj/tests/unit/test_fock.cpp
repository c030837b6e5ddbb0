#include <gtest/gtest.h>

#include <cstdlib>

#include "lieq/catalog.hpp"
#include "lieq/fock.hpp"

using namespace lieq;

TEST(Fock, DefectContract) {
  for (const auto& q0 : {GaussRat(-1), GaussRat::fraction(-1, 2), GaussRat(0),
                         GaussRat::fraction(1, 3), GaussRat(1), GaussRat::i()}) {
    for (std::size_t N : {2u, 5u, 16u}) {
      const MonomialPair p = monomial_rep(q0, N);
      const SparseMatrix D = qccr_defect(p.A, p.B, q0);
      EXPECT_TRUE(defect_matches_contract(D, q0)) << q0 << " " << N;
      EXPECT_EQ(D.at(N - 1, N - 1), -q_integer(static_cast<unsigned>(N)).eval(q0));
    }
  }
  // At q = 1 the corner is -N, so the trace of [A, B] vanishes.
  const MonomialPair p = monomial_rep(GaussRat(1), 6);
  EXPECT_EQ(qccr_defect(p.A, p.B, GaussRat(1)).at(5, 5), GaussRat(-6));
}

TEST(Fock, Spectrum) {
  const GaussRat q0 = GaussRat::fraction(1, 2);
  const MonomialPair p = monomial_rep(q0, 6);
  const auto s = number_operator_spectrum(p.A, p.B);
  ASSERT_TRUE(s);
  EXPECT_EQ((*s)[3], GaussRat::fraction(7, 4));
  EXPECT_EQ(*s, closed_form_spectrum(q0, 6));
  EXPECT_FALSE(number_operator_spectrum(p.A + p.B, p.B));
}

TEST(Fock, WeightedAdjoint) {
  for (const auto& q0 : {GaussRat::fraction(1, 3), GaussRat(1), GaussRat(0), GaussRat(2)}) {
    const MonomialPair p = monomial_rep(q0, 7);
    EXPECT_EQ(weighted_adjoint(p.B, q0), p.A);
    EXPECT_EQ(weighted_adjoint(p.A, q0), p.B);
    EXPECT_EQ(weighted_adjoint(weighted_adjoint(p.A + p.B, q0), q0), p.A + p.B);
  }
  // {2}_{-1} = 0 kills every weight from w_2 on.
  EXPECT_THROW(weighted_adjoint(monomial_rep(GaussRat(-1), 4).A, GaussRat(-1)), SingularWeight);
}

TEST(Fock, BiorthogonalPair) {
  const std::vector<GaussRat> t{GaussRat(2), GaussRat::fraction(1, 3), GaussRat(5),
                                GaussRat::fraction(7, 2)};
  const BiorthogonalSystem s = biorthogonal_pair(t, GaussRat::fraction(1, 2));
  EXPECT_TRUE(s.pairing_is_identity());
  EXPECT_TRUE(s.ladder_matches());
  EXPECT_TRUE(s.vacuum_annihilated);
  EXPECT_EQ(s.ladder_squared[2], GaussRat::fraction(7, 4));
  EXPECT_THROW(biorthogonal_pair({GaussRat(1), GaussRat(0)}, GaussRat(1)), NonpositiveWeight);
  EXPECT_THROW(biorthogonal_pair({GaussRat(1), GaussRat::i()}, GaussRat(1)), NonpositiveWeight);
}

TEST(Fock, ShiftedPairGivesShiftedAlgebra) {
  const ShiftedPair sp = shifted_pair(GaussRat(1), GaussRat::i(), 8);
  ASSERT_TRUE(sp.interior_scalar);
  ASSERT_TRUE(sp.extracted);
  EXPECT_EQ(*sp.extracted, catalog::a_sh());
  EXPECT_FALSE(sp.alpha_equals_beta);
  EXPECT_EQ(sp.commutators.size(), 10u);
  EXPECT_TRUE(shifted_pair(GaussRat(2), GaussRat(2), 6).alpha_equals_beta);
}

TEST(Fock, SimilarityTransport) {
  const auto [C, Cdag] = car_pair();
  SparseMatrix T(2, 2);
  T.set(0, 0, GaussRat(1));
  T.set(0, 1, GaussRat(2));
  T.set(1, 1, GaussRat::fraction(-1, 3));
  const SimilarityResult r = similarity_transport({C}, {Cdag}, T, GaussRat(-1));
  EXPECT_TRUE(r.relations_exact);
  EXPECT_TRUE(r.defect_conjugates);
  EXPECT_NE(r.Vdag[0], r.V[0].transpose());  // not the plain adjoint any more
  SparseMatrix S(2, 2);
  S.set(0, 0, GaussRat(1));
  EXPECT_THROW(similarity_transport({C}, {Cdag}, S, GaussRat(-1)), SingularT);
}

TEST(Fock, Cuntz) {
  const CuntzToeplitz ct = cuntz_toeplitz(2, 3);
  EXPECT_EQ(ct.dim(), 15u);
  EXPECT_TRUE(ct.words.front().empty());
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) EXPECT_TRUE(cuntz_relations_hold(ct, i, j));
  }
  // l_1^dag l_1 - I is -1 exactly on the eight words of length 3.
  const SparseMatrix d = ct.annihilator(0) * ct.creators[0] - SparseMatrix::identity(15);
  EXPECT_EQ(d.nonzeros(), 8u);
}

TEST(Fock, SizeCap) {
  ::setenv("LIEQ_SIZE_CAP", "100", 1);
  EXPECT_THROW(monomial_rep(GaussRat(1), 11), SizeCap);
  EXPECT_NO_THROW(monomial_rep(GaussRat(1), 10));
  EXPECT_THROW(cuntz_toeplitz(3, 3), SizeCap);
  ::unsetenv("LIEQ_SIZE_CAP");
  EXPECT_NO_THROW(cuntz_toeplitz(3, 3));
}

TEST(Fock, FloatMode) {
  const FloatRep r = orthonormal_rep_float(0.5, 32);
  EXPECT_LT(r.residual_off_corner, 1e-12 * 32);
  EXPECT_NEAR(r.corner, -(1 - std::pow(0.5, 32)) / 0.5, 1e-12);
  EXPECT_LT(orthonormal_rep_float(-0.5, 16).residual_off_corner, 1e-12 * 16);
  EXPECT_THROW(orthonormal_rep_float(-2.0, 8), NegativeWeight);
}

TEST(Fock, VerifyReport) {
  EXPECT_TRUE(fock_verify_report(GaussRat::fraction(1, 2), 32).ok());
  EXPECT_TRUE(fock_verify_report(GaussRat(-1), 8).ok());
}
