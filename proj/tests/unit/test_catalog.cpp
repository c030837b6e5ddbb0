#include <gtest/gtest.h>

#include "golden.hpp"
#include "lieq/catalog.hpp"
#include "lieq/signature.hpp"

using namespace lieq;

TEST(Catalog, EveryEntryIsLie) {
  for (const auto& name : catalog::list()) {
    EXPECT_FALSE(catalog::get(name).algebra.check_jacobi()) << name;
  }
}

TEST(Catalog, SignaturesMatchOracle) {
  for (const auto& name : catalog::list()) {
    const InvariantSignature s = invariant_signature(catalog::get(name).algebra);
    const json& g = golden_signature(name);
    EXPECT_EQ(json(s.dim), g.at("dim")) << name;
    EXPECT_EQ(json(s.lcs), g.at("lcs")) << name;
    EXPECT_EQ(json(s.ucs), g.at("ucs")) << name;
    EXPECT_EQ(json(s.derived), g.at("derived")) << name;
    EXPECT_EQ(json(s.center), g.at("center")) << name;
    EXPECT_EQ(json(s.der), g.at("der")) << name;
    EXPECT_EQ(json(s.h1), g.at("h1")) << name;
    EXPECT_EQ(json(s.abelian), g.at("abelian")) << name;
    EXPECT_EQ(s.nilpotent_class ? json(*s.nilpotent_class) : json(nullptr), g.at("nilpotent_class"))
        << name;
    EXPECT_EQ(s.solvable_length ? json(*s.solvable_length) : json(nullptr), g.at("solvable_length"))
        << name;
    EXPECT_EQ(json(s.h2), g.at("h2")) << name;
  }
}

TEST(Catalog, Coincidences) {
  auto sig = [](const std::string& n) { return invariant_signature(catalog::get(n).algebra); };
  EXPECT_EQ(sig("n_3_2"), sig("h_1"));
  EXPECT_EQ(sig("n_5_4"), sig("h_2"));
  EXPECT_EQ(sig("a_sh"), sig("n_5_2"));
  EXPECT_NE(sig("a_sh"), sig("h_2"));
}

TEST(Catalog, DimFiveSignaturesSeparate) {
  const auto names = catalog::dim5_nilpotent();
  ASSERT_EQ(names.size(), 9u);
  for (std::size_t a = 0; a < names.size(); ++a) {
    for (std::size_t b = a + 1; b < names.size(); ++b) {
      EXPECT_NE(invariant_signature(catalog::get(names[a]).algebra),
                invariant_signature(catalog::get(names[b]).algebra))
          << names[a] << " " << names[b];
    }
  }
}

TEST(Catalog, ParametricNames) {
  EXPECT_EQ(catalog::get("h(3)").algebra.dim(), 7u);
  EXPECT_EQ(catalog::get("h_3").algebra, catalog::get("h(3)").algebra);
  EXPECT_EQ(catalog::get("abelian(6)").algebra.dim(), 6u);
  EXPECT_THROW(catalog::get("n_9_9"), UnknownName);
  EXPECT_THROW(catalog::get("sl3"), UnknownName);
}

TEST(Catalog, ShiftedAlgebraRelations) {
  // [v1,v2] = [v3,v4] = [v1,v4] = [v3,v2] = v.
  const LieAlgebra a = catalog::a_sh();
  const SparseVec v{{4, GaussRat(1)}};
  EXPECT_EQ(a.basis_bracket(0, 1), v);
  EXPECT_EQ(a.basis_bracket(2, 3), v);
  EXPECT_EQ(a.basis_bracket(0, 3), v);
  EXPECT_EQ(a.basis_bracket(2, 1), v);
  EXPECT_TRUE(a.basis_bracket(0, 2).empty());
  EXPECT_TRUE(a.basis_bracket(1, 3).empty());
}

TEST(Catalog, VerifyAllPasses) {
  const Report r = catalog::verify_all();
  EXPECT_TRUE(r.ok()) << r.to_text();
}
