// Runs the acceptance criteria with exact equality and prints one PASS/FAIL
// line per criterion. Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "slidekit/oracle.hpp"
#include "slidekit/slidekit.hpp"
#include "slidekit/verify.hpp"

using namespace slidekit;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

NonincreasingWord nw(const char* s) { return parse_nonincreasing_word(s); }

Outcome slide_examples() {
  Outcome o;
  auto w = parse_word("l(3,1) l(3,2) l(1,1)");
  auto expected = parse_polynomial("x(3)^2*x(1) + x(3)*x(2)*x(1) + x(2)^2*x(1)");
  o.require(slide_series(w) == expected, "slide(l(3,1)l(3,2)l(1,1)) = " + to_string(slide_series(w)));
  o.require(oracle::slide_in_window(w, 1, 3) == expected, "brute force disagrees with the example");
  o.require(slide_series(parse_word("l(1,2) l(1,1)")).is_zero(), "slide(l(1,2)l(1,1)) is not zero");
  o.detail = o.ok ? "slide(W) for both example words" : o.detail;
  return o;
}

Outcome rs_example() {
  Outcome o;
  auto w = parse_word("l(5,1) l(6,5) l(8,3) l(3,2) l(3,1) l(1,2) l(2,1) l(3,3)");
  auto scan = rs_scan(w);
  o.require(scan == std::vector<int>{5, 5, 5, 3, 2, 1, 1, 1}, "U is not 55532111");
  auto c = rs_normalize(w, RsMode::polynomial);
  o.require(c && *c == parse_nvector("3,1,1,0,3"), "c is not (3,1,1,0,3)");
  o.require(c && slide_series(w) == slide_polynomial(*c), "slide(W) differs from the slide of RS(W)");
  if (o.ok) o.detail = "U = 55532111, c = (3,1,1,0,3)";
  return o;
}

Outcome forest_example() {
  Outcome o;
  IndexedForest f({IndexedTree(2, "((.,.),(.,.))")});
  o.require(c_of_forest(f) == parse_nvector("0,2,0,1"), "c(F) is not (0,2,0,1)");
  auto p = forest_polynomial(f);
  auto expected = parse_polynomial(
      "x(2)^2*x(4) + x(1)*x(2)*x(4) + x(1)^2*x(4) + x(2)^2*x(3) + x(1)*x(2)*x(3) + x(1)^2*x(3) + x(1)^2*x(2) + "
      "x(1)*x(2)^2");
  o.require(p == expected, "P_F = " + to_string(p));
  o.require(p.size() == 8, "P_F does not have 8 monomials");
  SlideExpansion slides{{parse_nvector("1,2"), 1}, {parse_nvector("0,2,0,1"), 1}};
  o.require(slide_expansion_of_forest(f) == slides, "slide expansion is " + to_string(slide_expansion_of_forest(f), "S"));
  o.require(expand_in_slide_basis(p) == slides, "slide basis expansion of P_F disagrees");
  if (o.ok) o.detail = "P_F has the 8 listed monomials, = S[1,2] + S[0,2,0,1]";
  return o;
}

Outcome stanley() {
  Outcome o;
  std::mt19937 rng(2024);
  const int count = 240;
  for (int k = 0; k < count && o.ok; ++k) {
    int n = 1 + k % 6;
    auto p = oracle::random_flagged_poset(rng, n, 1, 5);
    auto all = enumerate_partitions(p);
    std::vector<PartitionMap> blocks;
    Polynomial sum;
    for (const auto& block : stanley_decomposition(p)) {
      blocks.insert(blocks.end(), block.partitions.begin(), block.partitions.end());
      sum += slide_series(word_of_extension(p, block.extension));
    }
    std::sort(all.begin(), all.end());
    std::sort(blocks.begin(), blocks.end());
    o.require(all == blocks, "Part(P) is not the union of the blocks, poset " + std::to_string(k));
    auto kp = k_polynomial(p);
    o.require(kp == sum, "K(P) is not the sum of slides over extensions, poset " + std::to_string(k));
    o.require(kp == oracle::partitions_in_window(p, 1, 5), "K(P) differs from brute force, poset " + std::to_string(k));
  }
  if (o.ok) o.detail = std::to_string(count) + " posets with 1..6 elements, flag values <= 5";
  return o;
}

Outcome three_element() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    auto p = verify::three_element_poset(n);
    auto f = oracle::fundamental_in_window(Composition({2, 1}), 1, n) +
             oracle::fundamental_in_window(Composition({1, 2}), 1, n);
    o.require(k_polynomial(p) == f, "N = " + std::to_string(n));
  }
  if (o.ok) o.detail = "K = F(2,1) + F(1,2) on x_1..x_N for N = 1..6";
  return o;
}

Outcome backslide_structure() {
  Outcome o;
  auto sp = [](const char* s) { return slide_polynomial(parse_nvector(s)); };
  auto tensor = [](const Composition& alpha, const Polynomial& p) {
    BackQSymElement out;
    for (const auto& [c, k] : p.terms()) out.add(alpha, c, k);
    return out;
  };
  auto expected = tensor({}, sp("0,2,0,2")) + tensor(Composition({1}), sp("0,1,0,2")) +
                  tensor(Composition({2}), sp("0,0,0,2")) + tensor(Composition({2, 1}), sp("0,0,0,1")) +
                  BackQSymElement::fundamental(Composition({2, 2}));
  BackstableCache cache;
  o.require(cache.backslide(parse_nvector("0,2,0,2")) == expected, "five-term expansion of the back slide 0202");
  int checked = 0;
  for (const auto& c : oracle::nvectors(0, 4, -2, 4)) {
    const auto& f = cache.backslide(c);
    o.require(eta0(f) == std::map<Composition, coeff_t>{{flatten(c), 1}}, "eta0 of " + to_string(c));
    Polynomial plus = c.has_positive_support() ? slide_polynomial(c) : Polynomial{};
    o.require(pi_plus(f) == plus, "pi_plus of " + to_string(c));
    ++checked;
  }
  if (o.ok) o.detail = "0202 expansion; eta0 and pi_plus on " + std::to_string(checked) + " indices";
  return o;
}

Outcome shuffle_product() {
  Outcome o;
  BackSlideExpansion expected{{parse_nvector("0,2,0,2"), 1},
                              {parse_nvector("1,1,0,2"), 1},
                              {parse_nvector("1,2,0,1"), 1},
                              {parse_nvector("1,3"), 1}};
  o.require(multiply_backslides(parse_nvector("0,1,0,2"), parse_nvector("0,1")) == expected,
            "product of 0102 and 01");
  std::mt19937 rng(77);
  auto indices = oracle::nvectors(0, 3, -1, 3);
  std::uniform_int_distribution<std::size_t> pick(0, indices.size() - 1);
  BackstableCache cache;
  for (int k = 0; k < 50 && o.ok; ++k) {
    const auto& c = indices[pick(rng)];
    const auto& d = indices[pick(rng)];
    auto prod = from_backslide_basis(multiply_backslides(c, d), cache);
    o.require(pi_plus(prod) == pi_plus(cache.backslide(c)) * pi_plus(cache.backslide(d)),
              "pi_plus not multiplicative on " + to_string(c) + " * " + to_string(d));
  }
  if (o.ok) o.detail = "0102 times 01 and 50 random pairs";
  return o;
}

Outcome inverse_kostka() {
  Outcome o;
  auto certs = b_set(nw("442"));
  std::vector<std::pair<std::string, std::vector<int>>> got;
  for (const auto& c : certs) got.emplace_back(to_string(c.word), c.marks);
  std::vector<std::pair<std::string, std::vector<int>>> expected{
      {"442", {}}, {"332", {0}}, {"432", {1}}, {"441", {2}}, {"331", {0, 2}}, {"431", {1, 2}}};
  o.require(got == expected, "B_442 or its mark sets");
  Polynomial rhs;
  const std::vector<std::pair<const char*, int>> six{{"442", 1},  {"332", -1}, {"432", -1},
                                                     {"441", -1}, {"331", 1},  {"431", 1}};
  for (const auto& [word, sign] : six) rhs += slide_polynomial(nw(word).nvector()).scaled(sign);
  o.require(rhs == parse_polynomial("x(2)*x(4)^2"), "six-term identity for x_2 x_4^2");
  o.require(join(nw("555322"), nw("664421")) == nw("666622"), "join(555322, 664421)");
  if (o.ok) o.detail = "B_442, x_2 x_4^2 identity, join = 666622";
  return o;
}

Outcome mobius_equivalence() {
  Outcome o;
  long pairs = 0;
  for (int m = 0; m <= 3; ++m) {
    auto words = oracle::nonincreasing_words(m, 0, 4);
    for (const auto& c : words) {
      for (const auto& d : words) {
        if (!leq_m(d, c)) continue;
        ++pairs;
        o.require(mobius(d, c) == mobius_recursive(d, c), "mu(" + to_string(d) + ", " + to_string(c) + ")");
      }
    }
  }
  if (o.ok) o.detail = std::to_string(pairs) + " pairs D <=_m C";
  return o;
}

Outcome round_trips() {
  Outcome o;
  SlideCache slides;
  ForestCache forests;
  BackstableCache back;
  long n = 0;
  for (const auto& c : oracle::nvectors(0, 4, 1, 4)) {
    o.require(expand_in_slide_basis(slides.get(c), slides) == SlideExpansion{{c, 1}}, "slide " + to_string(c));
    o.require(expand_in_forest_basis(forests.get(c), forests) == ForestExpansion{{c, 1}}, "forest " + to_string(c));
    ++n;
  }
  for (const auto& c : oracle::nvectors(0, 4, -2, 4)) {
    o.require(expand_in_backslide_basis(back.backslide(c), back) == BackSlideExpansion{{c, 1}},
              "back slide " + to_string(c));
    ++n;
  }
  std::mt19937 rng(31);
  for (int k = 0; k < 30; ++k) {
    auto p = verify::detail::random_polynomial(rng, 4, 4, 1, 4);
    o.require(from_slide_basis(expand_in_slide_basis(p, slides)) == p, "slide round trip of " + to_string(p));
    o.require(from_forest_basis(expand_in_forest_basis(p, forests)) == p, "forest round trip of " + to_string(p));
    auto f = oracle::random_element(rng, 4, -2, 4);
    o.require(from_backslide_basis(expand_in_backslide_basis(f, back), back) == f, "back round trip of " + to_string(f));
  }
  if (o.ok) o.detail = std::to_string(n) + " basis indices and 30 random samples per basis";
  return o;
}

Outcome truncation_oracle() {
  Outcome o;
  long n = 0;
  for (const auto& alpha : oracle::compositions(0, 4)) {
    for (int b = -2; b <= 2; ++b) {
      auto lhs = oracle::fundamental_in_window(alpha, -5, b);
      auto rhs = evaluate_window(expand_F_shifted(alpha, b), -5, std::max(b, 0));
      o.require(lhs == rhs, "F" + to_string(alpha) + " with b = " + std::to_string(b));
      ++n;
    }
  }
  if (o.ok) o.detail = std::to_string(n) + " pairs (alpha, b)";
  return o;
}

Outcome stabilization() {
  Outcome o;
  std::mt19937 rng(12);
  for (int k = 0; k < 20; ++k) {
    auto f = oracle::random_element(rng, 3, -2, 3);
    Polynomial predicted;
    for (const auto& [alpha, coeff] : eta0(f)) predicted += oracle::fundamental_in_window(alpha, 1, 3).scaled(coeff);
    for (int b = 6; b <= 8; ++b) {
      auto p = truncate(pi_plus(gamma_shift(f, b)), 1, 3);
      o.require(p == predicted, "sample " + std::to_string(k) + " at b = " + std::to_string(b));
    }
  }
  if (o.ok) o.detail = "20 samples agree with eta0 for b = 6..8";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"slide of example words", slide_examples},
      {"RS normalization", rs_example},
      {"forest polynomial (0,2,0,1)", forest_example},
      {"Stanley decomposition", stanley},
      {"three-element fundamental expansion", three_element},
      {"back slide structure", backslide_structure},
      {"shuffle product", shuffle_product},
      {"inverse Kostka", inverse_kostka},
      {"Moebius closed form vs recursion", mobius_equivalence},
      {"basis round trips", round_trips},
      {"shifted fundamental truncation", truncation_oracle},
      {"stabilization", stabilization},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << criteria[k].first << " -- " << o.detail
              << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
