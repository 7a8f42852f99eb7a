#pragma once

// Property suites checked exhaustively over small ranges. Each property
// compares a fast path with a definition-level oracle or with an algebraic
// identity; bounds are adjustable for quicker or deeper runs.

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "slidekit/backstable.hpp"
#include "slidekit/core.hpp"
#include "slidekit/errors.hpp"
#include "slidekit/forest.hpp"
#include "slidekit/kostka.hpp"
#include "slidekit/oracle.hpp"
#include "slidekit/poly.hpp"
#include "slidekit/poset.hpp"
#include "slidekit/slide.hpp"

namespace slidekit::verify {

struct Bounds {
  int weight = 4;         // N-vector and composition weights
  int word_length = 5;    // injective words for the slide/RS property
  int posets = 200;       // size of the generated poset library
  int poset_size = 6;
  int flag_max = 5;
  int samples = 50;       // random cases for the sampled properties
  int kostka_length = 3;  // m for lattice and Moebius checks
  unsigned seed = 7;
};

/// Overrides from "weight=3,posets=50,seed=7" style text.
inline Bounds parse_bounds(std::string_view text, Bounds b = {}) {
  std::map<std::string, int*> ints{{"weight", &b.weight},       {"word_length", &b.word_length},
                                   {"posets", &b.posets},       {"poset_size", &b.poset_size},
                                   {"flag_max", &b.flag_max},   {"samples", &b.samples},
                                   {"kostka_length", &b.kostka_length}};
  for (auto item : slidekit::detail::split_any(text, ", ")) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw parse_error("bound '" + std::string(item) + "' is not key=value");
    std::string key(slidekit::detail::trim(item.substr(0, eq)));
    int value = slidekit::detail::parse_int(item.substr(eq + 1));
    if (key == "seed") {
      b.seed = static_cast<unsigned>(value);
    } else if (auto it = ints.find(key); it != ints.end()) {
      if (value < 0) throw validation_error("bound '" + key + "' must be nonnegative");
      *it->second = value;
    } else {
      throw parse_error("unknown verify bound '" + key + "'");
    }
  }
  return b;
}

/// Collects the first failure of a property and counts checked cases.
class Check {
 public:
  void expect(bool ok, const std::function<std::string()>& what) {
    ++cases_;
    if (!ok && failure_.empty()) failure_ = what();
  }
  void fail(std::string what) {
    if (failure_.empty()) failure_ = std::move(what);
  }
  bool passed() const { return failure_.empty(); }
  long cases() const { return cases_; }
  const std::string& failure() const { return failure_; }

 private:
  long cases_ = 0;
  std::string failure_;
};

struct Property {
  std::string module;
  std::string name;
  std::function<void(const Bounds&, Check&)> run;
};

struct Result {
  std::string module;
  std::string name;
  bool passed = false;
  long cases = 0;
  double seconds = 0;
  std::string failure;
};

namespace detail {

inline std::vector<FlaggedPoset> poset_library(const Bounds& b) {
  std::mt19937 rng(b.seed);
  std::vector<FlaggedPoset> out;
  for (int k = 0; k < b.posets; ++k) {
    int n = 1 + k % std::max(1, b.poset_size);
    out.push_back(oracle::random_flagged_poset(rng, n, 1, b.flag_max));
  }
  return out;
}

inline Polynomial random_polynomial(std::mt19937& rng, int terms, int max_degree, int lo, int hi) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> var(lo, hi);
  Polynomial p;
  for (int t = 0; t < terms; ++t) {
    std::map<int, int> m;
    for (int d = deg(rng); d > 0; --d) ++m[var(rng)];
    p.add_term(NVector::from_map(m), coeff(rng));
  }
  return p;
}

// Every injective word of the given length with values in [1, max_value]:
// all value sequences, with every ordering of tiers among equal values.
inline void for_each_injective_word(int length, int max_value, const std::function<void(const Word&)>& fn) {
  oracle::for_each_tuple(length, 1, max_value, [&](const std::vector<int>& values) {
    std::map<int, std::vector<std::size_t>> positions;
    for (std::size_t k = 0; k < values.size(); ++k) positions[values[k]].push_back(k);
    std::vector<std::vector<int>> tiers;
    for (auto& [v, pos] : positions) {
      std::vector<int> t(pos.size());
      for (std::size_t k = 0; k < t.size(); ++k) t[k] = static_cast<int>(k) + 1;
      tiers.push_back(t);
    }
    auto rec = [&](auto&& self, std::size_t g) -> void {
      if (g == tiers.size()) {
        Word w(values.size());
        std::size_t gi = 0;
        for (auto& [v, pos] : positions) {
          for (std::size_t k = 0; k < pos.size(); ++k) w[pos[k]] = Letter(v, tiers[gi][k]);
          ++gi;
        }
        fn(w);
        return;
      }
      std::sort(tiers[g].begin(), tiers[g].end());
      do {
        self(self, g + 1);
      } while (std::next_permutation(tiers[g].begin(), tiers[g].end()));
    };
    rec(rec, 0);
  });
}

inline std::vector<IndexedForest> forest_corpus(int max_nodes) {
  std::vector<IndexedForest> out;
  for (int n = 0; n <= max_nodes; ++n) {
    auto fs = oracle::forests_in_window(n, 1, 6);
    out.insert(out.end(), fs.begin(), fs.end());
  }
  return out;
}

inline std::string str(const Polynomial& p) { return to_string(p); }

inline Polynomial monomial_of(const NonincreasingWord& w) { return monomial(w.letters()); }

}  // namespace detail

// ---------------------------------------------------------------------------
// core
// ---------------------------------------------------------------------------

inline void standardize_injective(const Bounds&, Check& chk) {
  std::set<Word> seen;
  long count = 0;
  for (int n = 0; n <= 4; ++n) {
    oracle::for_each_tuple(n, 1, 3, [&](const std::vector<int>& w) {
      Word s = standardize(w);
      ++count;
      seen.insert(s);
      chk.expect(is_injective(s), [&] { return "standardize(" + std::to_string(n) + "-letter word) is not injective"; });
    });
  }
  chk.expect(static_cast<long>(seen.size()) == count, [] { return "standardize collides on distinct words"; });
}

inline void word_of_roundtrip(const Bounds&, Check& chk) {
  for (const auto& c : oracle::nvectors(0, 5, -3, 5)) {
    Word w = word_of(c);
    chk.expect(nvector_of_word(w) == c, [&] { return "nvector_of_word(word_of(c)) != c for c = " + to_string(c); });
    chk.expect(rs_normalize(w, RsMode::backstable) == c, [&] { return "backstable RS(W_c) != c for " + to_string(c); });
    auto poly = rs_normalize(w, RsMode::polynomial);
    bool ok = c.has_positive_support() ? poly == c : !poly.has_value();
    chk.expect(ok, [&] { return "polynomial RS(W_c) wrong for " + to_string(c); });
  }
}

inline void composition_laws(const Bounds&, Check& chk) {
  for (const auto& a : oracle::compositions(0, 7)) {
    int r = a.weight();
    chk.expect(subset_composition(composition_subset(a, r), r) == a,
               [&] { return "subset round trip fails for " + to_string(a); });
    if (r == 0) continue;
    Composition t = transpose(a);
    chk.expect(transpose(t) == a, [&] { return "transpose is not an involution on " + to_string(a); });
    chk.expect(t.weight() == r && static_cast<int>(t.length()) == r - static_cast<int>(a.length()) + 1,
               [&] { return "transpose has the wrong shape for " + to_string(a); });
  }
}

// ---------------------------------------------------------------------------
// poly
// ---------------------------------------------------------------------------

inline void ring_axioms(const Bounds& b, Check& chk) {
  std::mt19937 rng(b.seed + 1);
  std::uniform_int_distribution<int> nterms(0, 3);
  for (int k = 0; k < b.samples; ++k) {
    auto p = detail::random_polynomial(rng, nterms(rng), 3, -1, 2);
    auto q = detail::random_polynomial(rng, nterms(rng), 3, -1, 2);
    auto r = detail::random_polynomial(rng, nterms(rng), 3, -1, 2);
    chk.expect((p * q) * r == p * (q * r), [&] { return "multiplication not associative"; });
    chk.expect(p * (q + r) == p * q + p * r, [&] { return "distributivity fails"; });
    chk.expect(p * q == q * p && p + q == q + p, [&] { return "commutativity fails"; });
    chk.expect((p - p).is_zero() && p * Polynomial::constant(1) == p, [&] { return "identity laws fail"; });
  }
}

inline void revlex_total_order(const Bounds&, Check& chk) {
  for (int w = 0; w <= 4; ++w) {
    auto vs = oracle::nvectors(w, w, -2, 4);
    std::sort(vs.begin(), vs.end(), [](const auto& x, const auto& y) { return revlex_compare(x, y) < 0; });
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = 0; j < vs.size(); ++j) {
        auto o = revlex_compare(vs[i], vs[j]);
        auto expected = i < j ? std::strong_ordering::less : i == j ? std::strong_ordering::equal : std::strong_ordering::greater;
        chk.expect(o == expected, [&] { return "revlex not a total order at " + to_string(vs[i]) + ", " + to_string(vs[j]); });
      }
    }
  }
}

inline void slide_triangularity(const Bounds& b, Check& chk) {
  for (const auto& c : oracle::nvectors(0, b.weight, 1, 4)) {
    auto f = slide_polynomial(c);
    chk.expect(revlex_leading(f) == c && f.coeff(c) == 1,
               [&] { return "leading term of slide " + to_string(c) + " is " + to_string(revlex_leading(f)); });
  }
}

// ---------------------------------------------------------------------------
// poset
// ---------------------------------------------------------------------------

inline void stanley_decomposition_exact(const Bounds& b, Check& chk) {
  for (const auto& p : detail::poset_library(b)) {
    auto all = enumerate_partitions(p);
    std::vector<PartitionMap> blocks;
    Polynomial sum;
    for (const auto& block : stanley_decomposition(p)) {
      blocks.insert(blocks.end(), block.partitions.begin(), block.partitions.end());
      sum += k_polynomial(p.chain(block.extension));
    }
    std::sort(all.begin(), all.end());
    std::sort(blocks.begin(), blocks.end());
    auto k = k_polynomial(p);
    chk.expect(all == blocks, [&] { return "Stanley blocks do not partition Part(P) on " + std::to_string(p.size()) + " elements"; });
    chk.expect(k == sum, [&] { return "K(P) differs from the sum over linear extensions"; });
    chk.expect(k == oracle::partitions_in_window(p, 1, b.flag_max), [&] { return "K(P) differs from brute-force enumeration"; });
  }
}

/// The poset with f(a) >= f(b) and f(c) > f(b), all flag values N.
inline FlaggedPoset three_element_poset(int n) {
  return FlaggedPoset({"a", "b", "c"}, {{"a", "b"}, {"c", "b"}},
                      {{"a", Letter(n, 1)}, {"b", Letter(n, 2)}, {"c", Letter(n, 3)}});
}

inline void fundamental_expansion_three_elements(const Bounds&, Check& chk) {
  for (int n = 1; n <= 6; ++n) {
    auto k = k_polynomial(three_element_poset(n));
    auto f = fundamental_truncated(Composition({2, 1}), n) + fundamental_truncated(Composition({1, 2}), n);
    chk.expect(k == f, [&] { return "K != F_21 + F_12 in " + std::to_string(n) + " variables"; });
  }
}

inline void omega_rho_roundtrip(const Bounds& b, Check& chk) {
  for (const auto& p : detail::poset_library(b)) {
    auto lr = omega_rho_from_flag(p);
    auto q = flag_from_omega_rho(p.poset(), lr.omega, lr.rho);
    chk.expect(enumerate_partitions(p) == enumerate_partitions(q), [&] { return "omega/rho round trip changes Part(P)"; });
  }
}

// ---------------------------------------------------------------------------
// slide
// ---------------------------------------------------------------------------

inline void slide_rs_normalization(const Bounds& b, Check& chk) {
  for (int n = 0; n <= b.word_length; ++n) {
    detail::for_each_injective_word(n, 5, [&](const Word& w) {
      auto s = slide_series(w);
      auto c = rs_normalize(w, RsMode::polynomial);
      Polynomial expected = c ? slide_polynomial(*c) : Polynomial{};
      chk.expect(s == expected, [&] { return "slide(" + to_string(w) + ") differs from its RS normal form"; });
      if (n <= 4) {
        chk.expect(s == oracle::slide_in_window(w, 1, 5), [&] { return "slide(" + to_string(w) + ") differs from brute force"; });
      }
    });
  }
}

inline void slide_basis_uniqueness(const Bounds& b, Check& chk) {
  SlideCache cache;
  for (const auto& c : oracle::nvectors(0, b.weight, 1, 4)) {
    chk.expect(expand_in_slide_basis(slide_polynomial(c), cache) == SlideExpansion{{c, 1}},
               [&] { return "slide " + to_string(c) + " does not expand to itself"; });
  }
}

inline void slide_basis_linearity(const Bounds& b, Check& chk) {
  std::mt19937 rng(b.seed + 2);
  SlideCache cache;
  for (int k = 0; k < b.samples; ++k) {
    auto p = detail::random_polynomial(rng, 3, 4, 1, 4);
    auto q = detail::random_polynomial(rng, 3, 4, 1, 4);
    auto ep = expand_in_slide_basis(p, cache);
    auto eq = expand_in_slide_basis(q, cache);
    auto sum = ep;
    sum += eq;
    chk.expect(expand_in_slide_basis(p + q, cache) == sum, [&] { return "slide expansion is not additive"; });
    chk.expect(from_slide_basis(ep) == p, [&] { return "slide round trip fails for " + to_string(p); });
  }
}

inline void slide_kostka_agreement(const Bounds&, Check& chk) {
  SlideCache cache;
  for (int m = 0; m <= 4; ++m) {
    for (const auto& c : oracle::nonincreasing_words(m, 1, 4)) {
      chk.expect(expand_in_slide_basis(detail::monomial_of(c), cache) == monomial_to_slides(c),
                 [&] { return "slide expansion of x(" + to_string(c) + ") disagrees with the B_C formula"; });
    }
  }
}

// ---------------------------------------------------------------------------
// forest
// ---------------------------------------------------------------------------

inline void forest_bijection(const Bounds&, Check& chk) {
  std::set<NVector> seen;
  for (const auto& f : detail::forest_corpus(4)) {
    auto c = c_of_forest(f);
    chk.expect(forest_of_c(c) == f, [&] { return "forest_of_c(c(F)) != F for c = " + to_string(c); });
    chk.expect(seen.insert(c).second, [&] { return "c(F) repeats: " + to_string(c); });
  }
}

inline void forest_polynomials(const Bounds&, Check& chk) {
  for (const auto& f : detail::forest_corpus(4)) {
    auto c = c_of_forest(f);
    auto p = forest_polynomial(f);
    chk.expect(revlex_leading(p) == c && p.coeff(c) == 1, [&] { return "leading term of P_F is not x^c for " + to_string(c); });
    chk.expect(from_slide_basis(slide_expansion_of_forest(f)) == p,
               [&] { return "slide expansion of P_F does not sum back for " + to_string(c); });
    chk.expect(p == oracle::partitions_in_window(flag_of_forest(f), 1, 6),
               [&] { return "P_F differs from brute force for " + to_string(c); });
  }
}

inline void forest_basis_uniqueness(const Bounds& b, Check& chk) {
  ForestCache cache;
  for (const auto& c : oracle::nvectors(0, b.weight, 1, 4)) {
    chk.expect(expand_in_forest_basis(forest_polynomial(forest_of_c(c)), cache) == ForestExpansion{{c, 1}},
               [&] { return "forest polynomial " + to_string(c) + " does not expand to itself"; });
  }
}

// ---------------------------------------------------------------------------
// backstable
// ---------------------------------------------------------------------------

inline void backslide_projections(const Bounds& b, Check& chk) {
  BackstableCache cache;
  for (const auto& c : oracle::nvectors(0, b.weight, -2, 4)) {
    const auto& f = cache.backslide(c);
    Polynomial expected = c.has_positive_support() ? slide_polynomial(c) : Polynomial{};
    chk.expect(pi_plus(f) == expected, [&] { return "pi_plus of back slide " + to_string(c) + " is wrong"; });
    chk.expect(eta0(f) == std::map<Composition, coeff_t>{{flatten(c), 1}},
               [&] { return "eta0 of back slide " + to_string(c) + " is not F_fl(c)"; });
  }
}

inline void backslide_windows(const Bounds& b, Check& chk) {
  BackstableCache cache;
  for (const auto& c : oracle::nvectors(0, b.weight, -2, 4)) {
    int lo = std::min(c.is_zero() ? 0 : c.min_index(), 0) - 2;
    int hi = std::max(c.is_zero() ? 1 : c.max_index(), 1);
    chk.expect(evaluate_window(cache.backslide(c), lo, hi) == oracle::backslide_in_window(c, lo, hi),
               [&] { return "back slide " + to_string(c) + " differs from the series on x_" + std::to_string(lo) + "..x_" + std::to_string(hi); });
  }
}

inline void gamma_equivariance(const Bounds& b, Check& chk) {
  BackstableCache cache;
  for (const auto& c : oracle::nvectors(0, b.weight, -2, 4)) {
    for (int i = -2; i <= 2; ++i) {
      chk.expect(gamma_shift(cache.backslide(c), i) == cache.backslide(c.shifted(i)),
                 [&] { return "gamma^" + std::to_string(i) + " of back slide " + to_string(c) + " is not a back slide"; });
    }
  }
}

inline void stabilization(const Bounds& b, Check& chk) {
  std::mt19937 rng(b.seed + 3);
  for (int k = 0; k < std::min(b.samples, 20); ++k) {
    auto f = oracle::random_element(rng, 3, -2, 3);
    Polynomial predicted;
    for (const auto& [alpha, n] : eta0(f)) predicted += fundamental_truncated(alpha, 3).scaled(n);
    for (int shift = 6; shift <= 8; ++shift) {
      auto p = truncate(pi_plus(gamma_shift(f, shift)), 1, 3);
      chk.expect(p == predicted, [&] { return "pi_plus(gamma^" + std::to_string(shift) + " f) has not stabilized to eta0(f) for f = " + to_string(f); });
    }
  }
}

inline void backslide_basis_roundtrip(const Bounds& b, Check& chk) {
  BackstableCache cache;
  for (const auto& c : oracle::nvectors(0, b.weight, -2, 4)) {
    chk.expect(expand_in_backslide_basis(cache.backslide(c), cache) == BackSlideExpansion{{c, 1}},
               [&] { return "back slide " + to_string(c) + " does not expand to itself"; });
  }
  std::mt19937 rng(b.seed + 4);
  for (int k = 0; k < b.samples; ++k) {
    auto f = oracle::random_element(rng, std::min(b.weight, 4), -2, 3);
    chk.expect(from_backslide_basis(expand_in_backslide_basis(f, cache), cache) == f,
               [&] { return "back slide round trip fails for " + to_string(f); });
  }
}

inline void shifted_fundamentals(const Bounds& b, Check& chk) {
  for (const auto& alpha : oracle::compositions(0, b.weight)) {
    if (alpha.length() > 3) continue;
    for (int shift = -2; shift <= 2; ++shift) {
      auto e = expand_F_shifted(alpha, shift);
      chk.expect(evaluate_window(e, -5, std::max(shift, 0)) == oracle::fundamental_in_window(alpha, -5, shift),
                 [&] { return "F" + to_string(alpha) + "(x_{<=" + std::to_string(shift) + "}) expansion fails the window check"; });
      chk.expect(gamma_shift(BackQSymElement::fundamental(alpha), shift) == e,
                 [&] { return "gamma^" + std::to_string(shift) + " of F" + to_string(alpha) + " disagrees with the direct expansion"; });
    }
  }
}

inline void product_laws(const Bounds& b, Check& chk) {
  std::mt19937 rng(b.seed + 5);
  BackstableCache cache;
  auto small = oracle::nvectors(0, 2, -1, 2);
  auto pairs = oracle::nvectors(0, 3, -1, 3);
  std::uniform_int_distribution<std::size_t> pick_small(0, small.size() - 1);
  std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
  for (int k = 0; k < b.samples; ++k) {
    const auto& c = pairs[pick(rng)];
    const auto& d = pairs[pick(rng)];
    auto prod = multiply(cache.backslide(c), cache.backslide(d), cache);
    auto label = [&] { return to_string(c) + " * " + to_string(d); };
    chk.expect(pi_plus(prod) == pi_plus(cache.backslide(c)) * pi_plus(cache.backslide(d)),
               [&] { return "pi_plus is not multiplicative on " + label(); });
    chk.expect(evaluate_window(prod, -3, 3) ==
                   evaluate_window(cache.backslide(c), -3, 3) * evaluate_window(cache.backslide(d), -3, 3),
               [&] { return "product fails the window check on " + label(); });
    const auto& f = cache.backslide(small[pick_small(rng)]);
    const auto& g = cache.backslide(small[pick_small(rng)]);
    const auto& h = cache.backslide(small[pick_small(rng)]);
    chk.expect(multiply(f, g, cache) == multiply(g, f, cache), [&] { return "multiply is not commutative"; });
    chk.expect(multiply(multiply(f, g, cache), h, cache) == multiply(f, multiply(g, h, cache), cache),
               [&] { return "multiply is not associative"; });
  }
}

// ---------------------------------------------------------------------------
// kostka
// ---------------------------------------------------------------------------

inline void mobius_closed_form(const Bounds& b, Check& chk) {
  for (int m = 0; m <= b.kostka_length; ++m) {
    auto words = oracle::nonincreasing_words(m, 0, 4);
    for (const auto& c : words) {
      for (const auto& d : words) {
        if (!leq_m(d, c)) continue;
        chk.expect(mobius(d, c) == mobius_recursive(d, c),
                   [&] { return "mu(" + to_string(d) + ", " + to_string(c) + ") closed form disagrees with the recursion"; });
      }
    }
  }
}

inline void lattice_laws(const Bounds& b, Check& chk) {
  for (int m = 0; m <= b.kostka_length; ++m) {
    auto words = oracle::nonincreasing_words(m, 0, 4);
    for (const auto& c : words) {
      chk.expect(join(c, c) == c && meet(c, c) == c, [&] { return "join/meet not idempotent at " + to_string(c); });
      for (const auto& d : words) {
        auto j = join(c, d);
        auto mt = meet(c, d);
        auto label = [&] { return to_string(c) + ", " + to_string(d); };
        chk.expect(j == join(d, c) && mt == meet(d, c), [&] { return "join/meet not commutative at " + label(); });
        chk.expect(join(c, meet(c, d)) == c && meet(c, join(c, d)) == c, [&] { return "absorption fails at " + label(); });
        chk.expect(oracle::join(c, d) == j, [&] { return "join(" + label() + ") is not the least upper bound"; });
        int floor = (m == 0 ? 0 : std::min(c[m - 1], d[m - 1])) - static_cast<int>(m);
        chk.expect(oracle::meet(c, d, floor) == mt, [&] { return "meet(" + label() + ") is not the greatest lower bound"; });
      }
    }
    if (m > 2) continue;  // associativity over all triples only for short words
    for (const auto& c : words) {
      for (const auto& d : words) {
        for (const auto& e : words) {
          chk.expect(join(join(c, d), e) == join(c, join(d, e)) && meet(meet(c, d), e) == meet(c, meet(d, e)),
                     [&] { return "join/meet not associative"; });
        }
      }
    }
  }
}

inline void b_set_order_embedding(const Bounds& b, Check& chk) {
  for (int m = 0; m <= b.kostka_length + 1; ++m) {
    for (const auto& c : oracle::nonincreasing_words(m, 0, 4)) {
      auto certs = b_set(c);
      std::set<std::vector<int>> image;
      for (const auto& x : certs) image.insert(x.marks);
      for (const auto& x : certs) {
        chk.expect(leq_m(x.word, c), [&] { return to_string(x.word) + " in B_" + to_string(c) + " is not below it"; });
        for (const auto& y : certs) {
          bool sub = std::includes(x.marks.begin(), x.marks.end(), y.marks.begin(), y.marks.end());
          chk.expect(leq_m(x.word, y.word) == sub, [&] { return "B_" + to_string(c) + " is not order-embedded by marks"; });
        }
        // Lower order ideal: dropping any mark stays in the image.
        for (std::size_t k = 0; k < x.marks.size(); ++k) {
          auto smaller = x.marks;
          smaller.erase(smaller.begin() + static_cast<long>(k));
          chk.expect(image.count(smaller) == 1, [&] { return "mark sets of B_" + to_string(c) + " are not a lower ideal"; });
        }
      }
    }
  }
}

inline void monomial_slide_identity(const Bounds&, Check& chk) {
  for (int m = 0; m <= 4; ++m) {
    for (const auto& c : oracle::nonincreasing_words(m, 1, 4)) {
      Polynomial sum;
      auto expansion = monomial_to_slides(c);
      for (const auto& [d, k] : expansion.terms()) sum += slide_series(word_of(d)).scaled(k);
      chk.expect(sum == detail::monomial_of(c), [&] { return "signed slide sum for x(" + to_string(c) + ") is " + detail::str(sum); });
    }
  }
}

inline void monomial_backslide_identity(const Bounds& b, Check& chk) {
  BackstableCache cache;
  for (int m = 0; m <= b.kostka_length; ++m) {
    for (const auto& c : oracle::nonincreasing_words(m, -1, 3)) {
      auto x = BackQSymElement::from_polynomial(detail::monomial_of(c));
      auto expansion = monomial_to_backslides(c);
      chk.expect(expand_in_backslide_basis(x, cache) == expansion,
                 [&] { return "back slide expansion of x(" + to_string(c) + ") disagrees with the B_C formula"; });
      auto rhs = from_backslide_basis(expansion, cache);
      for (int shift = 0; shift <= 2; ++shift) {
        chk.expect(pi_plus(gamma_shift(x, shift)) == pi_plus(gamma_shift(rhs, shift)),
                   [&] { return "truncated identity for x(" + to_string(c) + ") fails at shift " + std::to_string(shift); });
      }
    }
  }
}

inline void mobius_inversion(const Bounds& b, Check& chk) {
  BackstableCache cache;
  for (int m = 0; m <= b.kostka_length; ++m) {
    for (const auto& c : oracle::nonincreasing_words(m, -1, 3)) {
      int lo = (m == 0 ? 0 : c[m - 1]) - 2;
      int hi = m == 0 ? 0 : c[0];
      Polynomial sum;
      for (const auto& d : oracle::nonincreasing_words(m, lo, hi)) {
        if (leq_m(d, c)) sum += detail::monomial_of(d);
      }
      chk.expect(evaluate_window(cache.backslide(c.nvector()), lo, hi) == sum,
                 [&] { return "back slide of " + to_string(c) + " is not the sum of x(D) over D <= C"; });
    }
  }
}

// ---------------------------------------------------------------------------

inline const std::vector<Property>& properties() {
  static const std::vector<Property> all{
      {"core", "standardize is injective", standardize_injective},
      {"core", "word_of / rs_normalize round trip", word_of_roundtrip},
      {"core", "composition subsets and transpose", composition_laws},
      {"poly", "ring axioms", ring_axioms},
      {"poly", "revlex is a total order", revlex_total_order},
      {"poly", "slides are revlex triangular", slide_triangularity},
      {"poset", "Stanley decomposition", stanley_decomposition_exact},
      {"poset", "three-element fundamental expansion", fundamental_expansion_three_elements},
      {"poset", "omega/rho round trip", omega_rho_roundtrip},
      {"slide", "slide(W) = slide of RS(W)", slide_rs_normalization},
      {"slide", "slide basis uniqueness", slide_basis_uniqueness},
      {"slide", "slide basis linearity", slide_basis_linearity},
      {"slide", "slide expansion of monomials", slide_kostka_agreement},
      {"forest", "forest bijection", forest_bijection},
      {"forest", "forest polynomials", forest_polynomials},
      {"forest", "forest basis uniqueness", forest_basis_uniqueness},
      {"backstable", "pi_plus and eta0 of back slides", backslide_projections},
      {"backstable", "back slides on finite windows", backslide_windows},
      {"backstable", "gamma equivariance", gamma_equivariance},
      {"backstable", "stabilization", stabilization},
      {"backstable", "back slide basis round trip", backslide_basis_roundtrip},
      {"backstable", "shifted fundamentals", shifted_fundamentals},
      {"backstable", "product laws", product_laws},
      {"kostka", "Moebius closed form", mobius_closed_form},
      {"kostka", "lattice laws", lattice_laws},
      {"kostka", "B_C order embedding", b_set_order_embedding},
      {"kostka", "monomials into slides", monomial_slide_identity},
      {"kostka", "monomials into back slides", monomial_backslide_identity},
      {"kostka", "Moebius inversion", mobius_inversion},
  };
  return all;
}

inline Result run_property(const Property& p, const Bounds& b) {
  Check chk;
  auto start = std::chrono::steady_clock::now();
  try {
    p.run(b, chk);
  } catch (const std::exception& e) {
    chk.fail(std::string("exception: ") + e.what());
  }
  std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
  return {p.module, p.name, chk.passed(), chk.cases(), dt.count(), chk.failure()};
}

inline std::vector<Result> run_all(const Bounds& b, const std::string& module = "") {
  std::vector<Result> out;
  for (const auto& p : properties()) {
    if (module.empty() || p.module == module) out.push_back(run_property(p, b));
  }
  return out;
}

}  // namespace slidekit::verify
