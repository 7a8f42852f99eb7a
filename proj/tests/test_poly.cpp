#include <gtest/gtest.h>

#include <limits>
#include <stdexcept>
#include <vector>

#include "slidekit/poly.hpp"

using namespace slidekit;

namespace {

Polynomial x(int i) { return Polynomial::variable(i); }

}  // namespace

TEST(Polynomial, Arithmetic) {
  EXPECT_TRUE(add(x(1), scale(x(1), -1)).is_zero());
  auto s = x(1) + x(2);
  EXPECT_EQ(mul(s, s), x(1) * x(1) + (x(1) * x(2)).scaled(2) + x(2) * x(2));
  auto p = x(3) * x(3) * x(1) + x(3) * x(2) * x(1) + x(2) * x(2) * x(1);
  EXPECT_EQ(mul(p, Polynomial::constant(1)), p);
  EXPECT_EQ(p.size(), 3u);
  EXPECT_EQ(p.degree(), 3);
  EXPECT_EQ(Polynomial().degree(), -1);
}

TEST(Polynomial, OverflowIsReported) {
  auto big = Polynomial::constant(std::numeric_limits<coeff_t>::max());
  EXPECT_THROW(big + Polynomial::constant(1), std::overflow_error);
  EXPECT_THROW(big * Polynomial::constant(2), std::overflow_error);
}

TEST(Polynomial, Homogeneity) {
  auto p = x(1) * x(2) + x(3);
  EXPECT_FALSE(p.is_homogeneous());
  EXPECT_EQ(p.homogeneous_part(1), x(3));
  EXPECT_THROW(revlex_leading(p), validation_error);
  EXPECT_THROW(revlex_leading(Polynomial()), validation_error);
}

TEST(Monomial, FromNonincreasingWords) {
  EXPECT_EQ(monomial(std::vector<int>{4, 4, 2}), x(2) * x(4) * x(4));
  EXPECT_EQ(monomial(std::vector<int>{}), Polynomial::constant(1));
  EXPECT_EQ(monomial(std::vector<int>{5, 5, 5, 3, 2, 2}), Polynomial::term(parse_nvector("0,2,1,0,3")));
  EXPECT_THROW(monomial(std::vector<int>{1, 2}), validation_error);
}

TEST(RevlexLeading, PicksTheLargestIndexFirst) {
  EXPECT_EQ(revlex_leading(Polynomial::term(parse_nvector("1,0,2"))), parse_nvector("1,0,2"));
  // x_1 x_3 is revlex-larger than x_2^2.
  EXPECT_EQ(revlex_leading(x(2) * x(2) + x(1) * x(3)), parse_nvector("1,0,1"));
}

TEST(Truncate, DropsTermsOutsideTheWindow) {
  EXPECT_EQ(truncate(x(0) * x(1) + x(1) * x(2), 1, 2), x(1) * x(2));
  auto p = x(2) * x(2) * x(1) + x(3) * x(2) * x(1);
  EXPECT_EQ(truncate(p, 1, 2), x(2) * x(2) * x(1));
  EXPECT_EQ(truncate(Polynomial::constant(5), 1, 2), Polynomial::constant(5));
}

TEST(Shift, MovesVariables) {
  EXPECT_EQ(shift(x(1), 1), x(2));
  auto p = x(2) * x(4) * x(4) - x(-1).scaled(3);
  EXPECT_EQ(shift(shift(p, 3), -3), p);
  EXPECT_EQ(shift(x(2) * x(4) * x(4), -2), x(0) * x(2) * x(2));
}

TEST(Polynomial, TextRoundTrip) {
  auto p = (x(-1) * x(2) * x(2)).scaled(3) - x(1) + Polynomial::constant(7);
  EXPECT_EQ(to_string(p), "3*x(-1)*x(2)^2 - x(1) + 7");
  EXPECT_EQ(parse_polynomial(to_string(p)), p);
  EXPECT_EQ(to_string(Polynomial()), "0");
  EXPECT_EQ(parse_polynomial("x(1)*x(1) + 2*x(1)^2"), (x(1) * x(1)).scaled(3));
  EXPECT_EQ(parse_polynomial("-x(0)"), x(0).scaled(-1));
  EXPECT_THROW(parse_polynomial("x(1) x(2)"), parse_error);
  EXPECT_THROW(parse_polynomial(""), parse_error);
  EXPECT_THROW(parse_polynomial("y(1)"), parse_error);
}

TEST(Polynomial, DescendingGradedRevlexOutput) {
  auto p = x(3) * x(3) * x(1) + x(3) * x(2) * x(1) + x(2) * x(2) * x(1);
  EXPECT_EQ(to_string(p), "x(1)*x(3)^2 + x(1)*x(2)*x(3) + x(1)*x(2)^2");
  EXPECT_EQ(coefficient_sum(p), 3);
}
