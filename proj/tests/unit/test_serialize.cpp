#include <gtest/gtest.h>

#include "lieq/catalog.hpp"
#include "lieq/serialize.hpp"

using namespace lieq;

TEST(Serialize, EveryCatalogAlgebraRoundTrips) {
  for (const auto& name : catalog::list()) {
    const LieAlgebra g = catalog::get(name).algebra;
    const LieAlgebra back = algebra_from_json(json::parse(to_json(g).dump()));
    EXPECT_EQ(back, g) << name;
    EXPECT_EQ(back.labels(), g.labels()) << name;
  }
}

TEST(Serialize, AlgebraDocument) {
  const json j = to_json(catalog::get("n_5_4").algebra);
  EXPECT_EQ(j.at("format"), "lieq-1");
  EXPECT_EQ(j.at("dim"), 5);
  EXPECT_EQ(j.at("brackets").size(), 2u);
  EXPECT_EQ(j.at("brackets")[0].at("out").at("5"), "1");
}

TEST(Serialize, ReversedPairsAndGaussianScalars) {
  const json j = json::parse(R"({"dim": 3, "brackets": [
      {"i": 2, "j": 1, "out": {"3": "1/2-i"}}]})");
  const LieAlgebra g = algebra_from_json(j);
  EXPECT_EQ(g.basis_bracket(0, 1), (SparseVec{{2, GaussRat::parse("-1/2+i")}}));
  EXPECT_EQ(g.labels(), LieAlgebra::default_labels(3));
}

TEST(Serialize, RejectsBadDocuments) {
  EXPECT_THROW(algebra_from_json(json::parse(R"({"dim": 2, "brackets": [{"i": 1, "j": 3, "out": {}}]})")),
               ParseError);
  EXPECT_THROW(algebra_from_json(json::parse(R"({"format": "lieq-9", "dim": 1})")), ParseError);
  EXPECT_THROW(algebra_from_json(json::parse(R"({"dim": 2, "brackets": [{"i": 1, "j": 2, "out": {"2": "x"}}]})")),
               ParseError);
  // [e1,e2] = e1, [e2,e3] = e2 fails Jacobi.
  EXPECT_THROW(algebra_from_json(json::parse(R"({"dim": 3, "brackets": [
      {"i": 1, "j": 2, "out": {"1": "1"}}, {"i": 2, "j": 3, "out": {"2": "1"}}]})")),
               NotLie);
}

TEST(Serialize, Cochains) {
  const LieAlgebra g = catalog::get("n_4_3").algebra;
  Cochain c(g, 2, 2);
  c.set({0, 3}, {GaussRat(1), GaussRat::parse("2/3i")});
  c.set({2, 1}, {GaussRat(-1), GaussRat(0)});
  const json j = to_json(c);
  EXPECT_EQ(j.at("coords").at("2,3")[0], "1");
  EXPECT_EQ(cochain_from_json(json::parse(j.dump()), g), c);
  // Unsorted keys fold in with a sign and accumulate.
  const json k = json::parse(R"({"degree": 2, "module_dim": 1, "coords": {"2,1": ["1"], "1,2": ["3"]}})");
  EXPECT_EQ(cochain_from_json(k, g).value({0, 1}), Vec{GaussRat(2)});
  EXPECT_THROW(cochain_from_json(json::parse(R"({"degree": 2, "module_dim": 1, "coords": {"1": ["1"]}})"), g),
               ParseError);
}

TEST(Serialize, MatricesPolynomialsReports) {
  SparseMatrix m(2, 3);
  m.set(0, 2, GaussRat::parse("-5/7"));
  m.set(1, 0, GaussRat::i());
  EXPECT_EQ(matrix_from_json(json::parse(to_json(m).dump())), m);
  const LaurentPoly p = LaurentPoly::param('q', -2) + LaurentPoly(GaussRat::parse("1+i"));
  EXPECT_EQ(poly_from_json(to_json(p)), p);
  EXPECT_EQ(to_json(p).at("-2"), "1");
  Report r;
  r.command = "x";
  r.add("a", "1", "1", true);
  r.add("b", "1", "2", false);
  const json rj = to_json(r);
  EXPECT_EQ(rj.at("status"), "partial");
  EXPECT_EQ(rj.at("items")[1].at("verdict"), "fail");
}
