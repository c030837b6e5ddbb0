#include <gtest/gtest.h>

#include "lieq/exactnum.hpp"

using namespace lieq;

TEST(GaussRat, ArithmeticIsExact) {
  const GaussRat a = GaussRat::parse("1/2+i");
  const GaussRat b = GaussRat::parse("-3/4-2i");
  EXPECT_EQ((a + b).to_string(), "-1/4-i");
  EXPECT_EQ((a * b).to_string(), "13/8-7/4i");
  EXPECT_EQ((a / a).to_string(), "1");
  EXPECT_EQ((a * a.inverse()), GaussRat(1));
  EXPECT_EQ(GaussRat::i() * GaussRat::i(), GaussRat(-1));
}

TEST(GaussRat, CanonicalStrings) {
  EXPECT_EQ(GaussRat::fraction(6, -4).to_string(), "-3/2");
  EXPECT_EQ(GaussRat::parse("2/4").to_string(), "1/2");
  EXPECT_EQ(GaussRat::parse("i").to_string(), "i");
  EXPECT_EQ(GaussRat::parse("-i").to_string(), "-i");
  EXPECT_EQ(GaussRat::parse("3-1/5i").to_string(), "3-1/5i");
  EXPECT_EQ(GaussRat().to_string(), "0");
  for (const char* s : {"0", "7", "-1/3", "2/3i", "5-i", "-1/2+3/7i"}) {
    EXPECT_EQ(GaussRat::parse(GaussRat::parse(s).to_string()), GaussRat::parse(s)) << s;
  }
}

TEST(GaussRat, Errors) {
  EXPECT_THROW(GaussRat().inverse(), DivisionByZero);
  EXPECT_THROW(GaussRat(1) / GaussRat(), DivisionByZero);
  EXPECT_THROW(GaussRat::parse("1/0"), DivisionByZero);
  EXPECT_THROW(GaussRat::parse("abc"), ParseError);
  EXPECT_THROW(GaussRat::parse(""), ParseError);
}

TEST(GaussRat, Powers) {
  EXPECT_EQ(GaussRat(2).pow(-3), GaussRat::fraction(1, 8));
  EXPECT_EQ(GaussRat::i().pow(4), GaussRat(1));
  EXPECT_EQ(GaussRat(5).pow(0), GaussRat(1));
  EXPECT_EQ(GaussRat::parse("1+i").conj(), GaussRat::parse("1-i"));
}

TEST(LaurentPoly, RingOperations) {
  const LaurentPoly q = LaurentPoly::param('q');
  const LaurentPoly one(1);
  const LaurentPoly p = (one + q) * (one - q);
  EXPECT_EQ(p, one - q * q);
  EXPECT_EQ(q.pow(3).coeff(3), GaussRat(1));
  const LaurentPoly inv = LaurentPoly::param('q', -1);
  EXPECT_EQ(q * inv, one);
  EXPECT_EQ(*(inv * inv).min_exponent(), -2);
  EXPECT_TRUE(LaurentPoly(GaussRat(3)).is_constant());
}

TEST(LaurentPoly, EvaluationAndReciprocal) {
  const LaurentPoly q = LaurentPoly::param('q');
  const LaurentPoly p = LaurentPoly(2) + q + LaurentPoly::param('q', -2);
  EXPECT_EQ(p.eval(GaussRat(2)), GaussRat::fraction(17, 4));
  EXPECT_THROW(p.eval(GaussRat()), EvalAtZeroWithNegativeDegree);
  EXPECT_EQ((q + q * q).eval(GaussRat()), GaussRat());
  // p(1/q) evaluated at x equals p evaluated at 1/x.
  EXPECT_EQ(p.reciprocal_param().eval(GaussRat(3)), p.eval(GaussRat::fraction(1, 3)));
}

TEST(LaurentPoly, ExactDivision) {
  const LaurentPoly q = LaurentPoly::param('q');
  const LaurentPoly one(1);
  const LaurentPoly num = one - q.pow(5);
  EXPECT_EQ(divide_exact(num, one - q), one + q + q.pow(2) + q.pow(3) + q.pow(4));
  EXPECT_THROW(divide_exact(num, one + q), NonDivisible);
  EXPECT_THROW(divide_exact(num, LaurentPoly('q')), DivisionByZero);
}

TEST(LaurentPoly, Printing) {
  const LaurentPoly q = LaurentPoly::param('q');
  EXPECT_EQ(LaurentPoly('q').to_string(), "0");
  EXPECT_EQ((LaurentPoly(1) + q).to_string().find("q") != std::string::npos, true);
}
