#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "slidekit/backstable.hpp"
#include "slidekit/oracle.hpp"
#include "slidekit/poset.hpp"

using namespace slidekit;

namespace {

// f(a) >= f(b) and f(c) > f(b): a and c are covered by b, with flag values n.
FlaggedPoset three_element(int n) {
  return FlaggedPoset({"a", "b", "c"}, {{"a", "b"}, {"c", "b"}},
                      {{"a", Letter(n, 1)}, {"b", Letter(n, 2)}, {"c", Letter(n, 3)}});
}

FlaggedPoset chain_of(const Word& w) {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> covers;
  for (std::size_t k = 0; k < w.size(); ++k) {
    names.push_back("v" + std::to_string(k + 1));
    if (k > 0) covers.emplace_back(static_cast<int>(k) - 1, static_cast<int>(k));
  }
  return {Poset(names, covers), w};
}

std::vector<PartitionMap> sorted(std::vector<PartitionMap> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(Poset, RejectsMalformedCovers) {
  EXPECT_THROW(Poset({"a", "a"}, {}), validation_error);
  EXPECT_THROW(Poset({"a"}, {{0, 0}}), validation_error);
  EXPECT_THROW(Poset({"a", "b"}, {{0, 1}, {0, 1}}), validation_error);
  EXPECT_THROW(Poset({"a", "b"}, {{0, 1}, {1, 0}}), validation_error);
  EXPECT_THROW(Poset({"a"}, {{0, 3}}), validation_error);
}

TEST(Poset, DropsTransitiveCovers) {
  Poset p({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(p.covers().size(), 2u);
  EXPECT_TRUE(p.less(0, 2));
  EXPECT_TRUE(p.is_chain());
}

TEST(FlaggedPoset, RequiresAnInjectiveFlag) {
  EXPECT_THROW(FlaggedPoset(Poset({"a", "b"}, {}), {Letter(1, 1), Letter(1, 1)}), validation_error);
  EXPECT_THROW(FlaggedPoset(Poset({"a", "b"}, {}), {Letter(1, 1)}), validation_error);
}

TEST(LinearExtensions, Counts) {
  EXPECT_EQ(linear_extensions(three_element(4)).size(), 2u);
  EXPECT_EQ(linear_extensions(chain_of(parse_word("l(1,1) l(2,1) l(3,1) l(4,1)"))).size(), 1u);
  FlaggedPoset antichain(Poset({"a", "b", "c"}, {}), {Letter(1, 1), Letter(2, 1), Letter(3, 1)});
  EXPECT_EQ(linear_extensions(antichain).size(), 6u);
}

TEST(Partitions, SingleElement) {
  FlaggedPoset p(Poset({"u"}, {}), {Letter(3, 1)});
  EXPECT_EQ(enumerate_partitions(p).size(), 3u);
}

TEST(Partitions, ThreeLetterChain) {
  auto p = chain_of(parse_word("l(3,1) l(3,2) l(1,1)"));
  std::vector<PartitionMap> expected{{3, 3, 1}, {3, 2, 1}, {2, 2, 1}};
  EXPECT_EQ(sorted(enumerate_partitions(p)), sorted(expected));
  EXPECT_EQ(k_polynomial(p), parse_polynomial("x(3)^2*x(1) + x(3)*x(2)*x(1) + x(2)^2*x(1)"));
}

TEST(Partitions, VanishingChain) {
  EXPECT_TRUE(k_polynomial(chain_of(parse_word("l(1,2) l(1,1)"))).is_zero());
}

TEST(Partitions, EmptyPoset) { EXPECT_EQ(k_polynomial(FlaggedPoset()), Polynomial::constant(1)); }

TEST(Partitions, RejectsNonpositiveFlags) {
  FlaggedPoset p(Poset({"u"}, {}), {Letter(0, 1)});
  EXPECT_THROW(enumerate_partitions(p), validation_error);
  EXPECT_THROW(k_polynomial(p), validation_error);
}

TEST(Partitions, ThreeElementCountMatchesBruteForce) {
  auto p = three_element(4);
  auto brute = oracle::partitions_in_window(p, 1, 4);
  EXPECT_EQ(static_cast<coeff_t>(enumerate_partitions(p).size()), coefficient_sum(brute));
  EXPECT_EQ(k_polynomial(p), brute);
}

TEST(Partitions, ThreeElementIsAFundamentalSum) {
  for (int n = 1; n <= 6; ++n) {
    auto f = fundamental_truncated(Composition({2, 1}), n) + fundamental_truncated(Composition({1, 2}), n);
    EXPECT_EQ(k_polynomial(three_element(n)), f) << n;
  }
}

TEST(Stanley, ChainIsItsOwnDecomposition) {
  auto p = chain_of(parse_word("l(3,1) l(3,2) l(1,1)"));
  auto blocks = stanley_decomposition(p);
  ASSERT_EQ(blocks.size(), 1u);
  EXPECT_EQ(sorted(blocks[0].partitions), sorted(enumerate_partitions(p)));
}

TEST(Stanley, ThreeElementBlocks) {
  auto p = three_element(4);
  const int a = 0, b = 1, c = 2;
  auto blocks = stanley_decomposition(p);
  ASSERT_EQ(blocks.size(), 2u);
  std::size_t total = 0;
  for (const auto& block : blocks) {
    total += block.partitions.size();
    bool a_first = block.extension[0] == a;
    for (const auto& f : block.partitions) {
      if (a_first) {
        EXPECT_TRUE(f[a] >= f[c] && f[c] > f[b]);
      } else {
        EXPECT_TRUE(f[c] > f[a] && f[a] >= f[b]);
      }
    }
  }
  EXPECT_EQ(total, enumerate_partitions(p).size());
}

TEST(Stanley, RandomFiveElementPosets) {
  std::mt19937 rng(11);
  for (int k = 0; k < 20; ++k) {
    auto p = oracle::random_flagged_poset(rng, 5, 1, 5);
    std::vector<PartitionMap> all;
    for (const auto& block : stanley_decomposition(p)) all.insert(all.end(), block.partitions.begin(), block.partitions.end());
    EXPECT_EQ(sorted(all), sorted(enumerate_partitions(p)));
  }
}

TEST(Labelings, ConstantRestriction) {
  Poset p({"u", "v", "w"}, {{0, 1}, {2, 1}});
  std::vector<int> omega{2, 3, 1};
  std::vector<int> rho{4, 4, 4};
  EXPECT_TRUE(check_ab_flag(p, omega, rho));
  EXPECT_TRUE(check_lf_flag(p, omega, rho));
  auto f = flag_from_omega_rho(p, omega, rho);
  EXPECT_EQ(f.flag(0), Letter(4, 2));
  EXPECT_EQ(f.flag(2), Letter(4, 1));
}

TEST(Labelings, TwoChainStrictCover) {
  Poset p({"u", "v"}, {{0, 1}});
  std::vector<int> omega{2, 1};
  std::vector<int> rho{2, 2};
  auto f = flag_from_omega_rho(p, omega, rho);
  EXPECT_EQ(f.flag(0), Letter(2, 2));
  EXPECT_EQ(f.flag(1), Letter(2, 1));
  EXPECT_TRUE(f.strict(0, 1));
  EXPECT_EQ(enumerate_partitions(f), (std::vector<PartitionMap>{{2, 1}}));
  auto back = omega_rho_from_flag(f);
  EXPECT_EQ(back.omega, omega);
  EXPECT_EQ(back.rho, rho);
}

TEST(Labelings, LfFailsWhenTheLargerRestrictionHasTheSmallerLabel) {
  Poset p({"u", "v"}, {});
  std::vector<int> omega{2, 1};
  std::vector<int> rho{1, 2};
  EXPECT_FALSE(check_lf_flag(p, omega, rho));
}

TEST(Labelings, AbFlagConditionOne) {
  // covers b < a and b < c with rho(b) = 2 < rho(a) = 3.
  Poset p({"a", "b", "c"}, {{1, 0}, {1, 2}});
  std::vector<int> omega{2, 1, 3};
  std::vector<int> rho{3, 2, 2};
  EXPECT_FALSE(check_ab_flag(p, omega, rho));
}

TEST(Labelings, AbFlagsPreservePartitions) {
  // An AB-flag that is not an LF-flag: incomparable elements break (LF).
  Poset p({"a", "b", "c"}, {{0, 1}});
  std::vector<int> omega{2, 1, 3};
  std::vector<int> rho{3, 2, 1};
  ASSERT_TRUE(check_ab_flag(p, omega, rho));
  ASSERT_FALSE(check_lf_flag(p, omega, rho));
  auto f = flag_from_omega_rho(p, omega, rho);
  // Direct (P, omega, rho)-partitions: f(a) >= f(b), strict when omega(a) > omega(b), f <= rho.
  std::set<PartitionMap> direct;
  oracle::for_each_tuple(3, 1, 3, [&](const std::vector<int>& g) {
    if (g[0] > 3 || g[1] > 2 || g[2] > 1) return;
    if (g[0] < g[1] || g[0] == g[1]) return;  // omega(a) = 2 > omega(b) = 1
    direct.insert(g);
  });
  auto parts = enumerate_partitions(f);
  EXPECT_EQ(std::set<PartitionMap>(parts.begin(), parts.end()), direct);
}

TEST(Labelings, RejectsFlagsThatAreNeitherLfNorAb) {
  Poset p({"u", "v"}, {{0, 1}});
  std::vector<int> omega{2, 1};
  std::vector<int> rho{1, 2};
  EXPECT_THROW(flag_from_omega_rho(p, omega, rho), validation_error);
  EXPECT_THROW(flag_from_omega_rho(p, std::vector<int>{1, 1}, rho), validation_error);
}

TEST(Labelings, ReconstructedRestrictionIsLf) {
  std::mt19937 rng(5);
  for (int k = 0; k < 30; ++k) {
    auto p = oracle::random_flagged_poset(rng, 4, 1, 4);
    auto lr = omega_rho_from_flag(p);
    EXPECT_TRUE(check_lf_flag(p.poset(), lr.omega, lr.rho));
  }
}

TEST(DescentComposition, Examples) {
  Poset chain3({"b", "c", "a"}, {{0, 1}, {1, 2}});
  EXPECT_EQ(descent_composition(chain3, std::vector<int>{1, 2, 3}), Composition({3}));
  EXPECT_EQ(descent_composition(chain3, std::vector<int>{3, 2, 1}), Composition({1, 1, 1}));
  EXPECT_EQ(descent_composition(chain3, std::vector<int>{1, 3, 2}), Composition({2, 1}));
  EXPECT_EQ(reverse(Composition({2, 1})), Composition({1, 2}));
  EXPECT_THROW(descent_composition(Poset({"a", "b"}, {}), std::vector<int>{1, 2}), validation_error);
}
