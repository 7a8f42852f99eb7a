#include <gtest/gtest.h>

#include <map>
#include <vector>

#include "slidekit/backstable.hpp"
#include "slidekit/oracle.hpp"

using namespace slidekit;

namespace {

using BQ = BackQSymElement;

BQ tensor(const Composition& alpha, const Polynomial& p) {
  BQ out;
  for (const auto& [c, k] : p.terms()) out.add(alpha, c, k);
  return out;
}

BQ x_term(const char* nv, coeff_t k = 1) { return BQ::term({}, parse_nvector(nv), k); }

}  // namespace

TEST(Fundamentals, TruncatedExamples) {
  EXPECT_EQ(fundamental_truncated(Composition({1, 2}), 3),
            parse_polynomial("x(1)*x(2)^2 + x(1)*x(2)*x(3) + x(1)*x(3)^2 + x(2)*x(3)^2"));
  EXPECT_EQ(fundamental_truncated(Composition(), 4), Polynomial::constant(1));
  EXPECT_EQ(fundamental_truncated(Composition({2, 1}), 2), parse_polynomial("x(1)^2*x(2)"));
}

TEST(Fundamentals, WindowsAgreeWithBruteForce) {
  for (const auto& alpha : oracle::compositions(0, 4)) {
    EXPECT_EQ(fundamental_in_window(alpha, -2, 2), oracle::fundamental_in_window(alpha, -2, 2)) << to_string(alpha);
  }
}

TEST(GoodDecompositions, Examples) {
  auto five = good_decompositions(parse_nvector("0,2,0,2"));
  ASSERT_EQ(five.size(), 5u);
  std::vector<Composition> left;
  for (const auto& [d, e] : five) {
    EXPECT_EQ(d + e, parse_nvector("0,2,0,2"));
    left.push_back(flatten(d));
  }
  EXPECT_EQ(left, (std::vector<Composition>{Composition(), Composition({1}), Composition({2}), Composition({2, 1}),
                                            Composition({2, 2})}));
  EXPECT_EQ(good_decompositions(NVector()).size(), 1u);
  EXPECT_EQ(good_decompositions(parse_nvector("0,1")).size(), 2u);
  EXPECT_THROW(good_decompositions(parse_nvector("1|1")), validation_error);
}

TEST(Backslide, FiveTermExpansion) {
  auto sp = [](const char* nv) { return slide_polynomial(parse_nvector(nv)); };
  BQ expected = tensor({}, sp("0,2,0,2")) + tensor(Composition({1}), sp("0,1,0,2")) +
                tensor(Composition({2}), sp("0,0,0,2")) + tensor(Composition({2, 1}), sp("0,0,0,1")) +
                BQ::fundamental(Composition({2, 2}));
  EXPECT_EQ(backslide(parse_nvector("0,2,0,2")), expected);
  EXPECT_EQ(backslide(NVector()), BQ::one());
}

TEST(Backslide, PackedAtNonpositiveIndicesIsAFundamental) {
  EXPECT_EQ(backslide(parse_nvector("2,2|")), BQ::fundamental(Composition({2, 2})));
  EXPECT_EQ(backslide(parse_nvector("1,3|")), BQ::fundamental(Composition({1, 3})));
}

TEST(Backslide, WindowsAgreeWithBruteForce) {
  for (const auto& c : oracle::nvectors(0, 3, -1, 3)) {
    EXPECT_EQ(evaluate_window(backslide(c), -3, 3), oracle::backslide_in_window(c, -3, 3)) << to_string(c);
  }
}

TEST(Eta0, Examples) {
  for (const char* s : {"0,2,0,2", "1,2|0,1", "3|"}) {
    auto c = parse_nvector(s);
    EXPECT_EQ(eta0(backslide(c)), (std::map<Composition, coeff_t>{{flatten(c), 1}})) << s;
  }
  EXPECT_TRUE(eta0(x_term("0,1")).empty());
  auto f = BQ::fundamental(Composition({2})) + BQ::term(Composition({1}), parse_nvector("1"));
  EXPECT_EQ(eta0(f), (std::map<Composition, coeff_t>{{Composition({2}), 1}}));
}

TEST(PiPlus, KillsNonpositiveVariables) {
  EXPECT_EQ(pi_plus(backslide(parse_nvector("0,2,0,2"))), slide_polynomial(parse_nvector("0,2,0,2")));
  EXPECT_TRUE(pi_plus(BQ::fundamental(Composition({1}))).is_zero());
  EXPECT_TRUE(pi_plus(x_term("1|1")).is_zero());
  EXPECT_EQ(pi_plus(BQ::one()), Polynomial::constant(1));
}

TEST(ExpandFShifted, Examples) {
  EXPECT_EQ(expand_F_shifted(Composition(), 3), BQ::one());
  EXPECT_EQ(expand_F_shifted(Composition({1}), 1), BQ::fundamental(Composition({1})) + x_term("1"));
  EXPECT_EQ(expand_F_shifted(Composition({1}), -1), BQ::fundamental(Composition({1})) - x_term("1|"));
}

TEST(ExpandFShifted, WindowOracle) {
  for (const auto& alpha : oracle::compositions(0, 4)) {
    for (int b = -2; b <= 2; ++b) {
      auto lhs = oracle::fundamental_in_window(alpha, -5, b);
      auto rhs = evaluate_window(expand_F_shifted(alpha, b), -5, std::max(b, 0));
      EXPECT_EQ(lhs, rhs) << to_string(alpha) << " b=" << b;
    }
  }
}

TEST(GammaShift, Examples) {
  EXPECT_EQ(gamma_shift(x_term("1"), 1), x_term("0,1"));
  EXPECT_EQ(gamma_shift(BQ::fundamental(Composition({1})), 1), BQ::fundamental(Composition({1})) + x_term("1"));
  auto f = backslide(parse_nvector("1|0,2"));
  EXPECT_EQ(gamma_shift(gamma_shift(f, 2), -2), f);
  EXPECT_EQ(gamma_shift(f, 0), f);
}

TEST(GammaShift, ShiftsBackslideIndices) {
  for (const auto& c : oracle::nvectors(0, 3, -1, 3)) {
    EXPECT_EQ(gamma_shift(backslide(c), 1), backslide(c.shifted(1))) << to_string(c);
    EXPECT_EQ(gamma_shift(backslide(c), -2), backslide(c.shifted(-2))) << to_string(c);
  }
}

TEST(ExpandInBackslideBasis, Examples) {
  auto c = parse_nvector("1|0,2");
  EXPECT_EQ(expand_in_backslide_basis(backslide(c)), (BackSlideExpansion{{c, 1}}));
  EXPECT_EQ(expand_in_backslide_basis(BQ::fundamental(Composition({2, 2}))),
            (BackSlideExpansion{{parse_nvector("2,2|"), 1}}));
  BackSlideExpansion six{{parse_nvector("0,1,0,2"), 1},  {parse_nvector("0,1,2"), -1},
                         {parse_nvector("0,1,1,1"), -1}, {parse_nvector("1,0,0,2"), -1},
                         {parse_nvector("1,0,2"), 1},    {parse_nvector("1,0,1,1"), 1}};
  EXPECT_EQ(expand_in_backslide_basis(x_term("0,1,0,2")), six);
  EXPECT_TRUE(expand_in_backslide_basis(BQ()).empty());
}

TEST(ExpandInBackslideBasis, RoundTripOnRandomElements) {
  std::mt19937 rng(3);
  for (int k = 0; k < 25; ++k) {
    auto f = oracle::random_element(rng, 3, -2, 3);
    EXPECT_EQ(from_backslide_basis(expand_in_backslide_basis(f)), f) << to_string(f);
  }
}

TEST(MultiplyBackslides, ProductOfTwoSlides) {
  BackSlideExpansion expected{{parse_nvector("0,2,0,2"), 1},
                              {parse_nvector("1,1,0,2"), 1},
                              {parse_nvector("1,2,0,1"), 1},
                              {parse_nvector("1,3"), 1}};
  EXPECT_EQ(multiply_backslides(parse_nvector("0,1,0,2"), parse_nvector("0,1")), expected);
  EXPECT_EQ(multiply_backslides(parse_nvector("0,1,0,2"), NVector()),
            (BackSlideExpansion{{parse_nvector("0,1,0,2"), 1}}));
}

TEST(MultiplyBackslides, AgreesWithWindowProducts) {
  for (const auto& c : oracle::nvectors(1, 2, -1, 2)) {
    for (const auto& d : oracle::nvectors(1, 2, -1, 2)) {
      auto prod = from_backslide_basis(multiply_backslides(c, d));
      auto lhs = evaluate_window(prod, -4, 3);
      auto rhs = evaluate_window(backslide(c), -4, 3) * evaluate_window(backslide(d), -4, 3);
      EXPECT_EQ(lhs, rhs) << to_string(c) << " * " << to_string(d);
    }
  }
}

TEST(Multiply, IsCommutativeWithUnit) {
  std::mt19937 rng(9);
  for (int k = 0; k < 10; ++k) {
    auto f = oracle::random_element(rng, 2, -1, 2);
    auto g = oracle::random_element(rng, 2, -1, 2);
    EXPECT_EQ(multiply(f, g), multiply(g, f));
    EXPECT_EQ(multiply(f, BQ::one()), f);
    EXPECT_EQ(pi_plus(multiply(f, g)), pi_plus(f) * pi_plus(g));
  }
}

TEST(BackK, Examples) {
  Word w = parse_word("l(1,2) l(1,1)");
  Poset chain({"u", "v"}, {{0, 1}});
  FlaggedPoset p(chain, w);
  EXPECT_EQ(back_k_expansion(p), (BackSlideExpansion{{parse_nvector("1|1"), 1}}));
  EXPECT_EQ(back_k(p), backslide(parse_nvector("1|1")));
  FlaggedPoset single(Poset({"u"}, {}), {Letter(3, 1)});
  EXPECT_EQ(back_k(single), backslide(parse_nvector("0,0,1")));
  EXPECT_EQ(evaluate_window(back_k(single), -2, 3), parse_polynomial("x(-2) + x(-1) + x(0) + x(1) + x(2) + x(3)"));
}

TEST(BackQSymElement, Rendering) {
  EXPECT_EQ(to_string(BQ()), "0");
  EXPECT_EQ(to_string(BQ::fundamental(Composition({2, 1}))), "F(2,1)");
  EXPECT_EQ(to_string(BQ::term(Composition({1}), parse_nvector("0,1"), -2)), "-2*F(1)|x(2)");
}
