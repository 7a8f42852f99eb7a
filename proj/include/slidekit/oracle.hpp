#pragma once

// Brute-force reference implementations and test-case generators. Everything
// here works straight from the definitions by exhaustive enumeration over
// finite boxes, sharing no algorithmic code with the fast paths it checks.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "slidekit/backstable.hpp"
#include "slidekit/core.hpp"
#include "slidekit/forest.hpp"
#include "slidekit/kostka.hpp"
#include "slidekit/poly.hpp"
#include "slidekit/poset.hpp"

namespace slidekit::oracle {

/// Calls fn on every tuple in [lo, hi]^n.
inline void for_each_tuple(int n, int lo, int hi, const std::function<void(const std::vector<int>&)>& fn) {
  if (hi < lo && n > 0) return;
  std::vector<int> t(static_cast<std::size_t>(n), lo);
  while (true) {
    fn(t);
    int k = n - 1;
    while (k >= 0 && t[static_cast<std::size_t>(k)] == hi) t[static_cast<std::size_t>(k--)] = lo;
    if (k < 0) return;
    ++t[static_cast<std::size_t>(k)];
  }
}

inline NVector exponent(const std::vector<int>& t) {
  std::map<int, int> m;
  for (int v : t) ++m[v];
  return NVector::from_map(m);
}

/// Sum of x^f over all maps f: P -> [lo, hi] satisfying the flagged
/// partition conditions on every cover. With lo = 1 this is K_(P,Phi) for
/// large enough hi; with lo <= 0 it is the back stable series in a window.
inline Polynomial partitions_in_window(const FlaggedPoset& p, int lo, int hi) {
  Polynomial out;
  for_each_tuple(p.size(), lo, hi, [&](const std::vector<int>& f) {
    for (int u = 0; u < p.size(); ++u) {
      if (f[static_cast<std::size_t>(u)] > p.flag(u).value) return;
    }
    for (auto [u, v] : p.poset().covers()) {
      int fu = f[static_cast<std::size_t>(u)];
      int fv = f[static_cast<std::size_t>(v)];
      if (fu < fv || (p.flag(u) > p.flag(v) && fu == fv)) return;
    }
    out.add_term(exponent(f), 1);
  });
  return out;
}

/// slide(W) with every index restricted to [lo, hi].
inline Polynomial slide_in_window(std::span<const Letter> w, int lo, int hi) {
  Polynomial out;
  const int r = static_cast<int>(w.size());
  for_each_tuple(r, lo, hi, [&](const std::vector<int>& t) {
    for (int j = 0; j < r; ++j) {
      if (t[static_cast<std::size_t>(j)] > w[static_cast<std::size_t>(j)].value) return;
      if (j + 1 < r) {
        int a = t[static_cast<std::size_t>(j)];
        int b = t[static_cast<std::size_t>(j + 1)];
        if (a < b || (a == b && w[static_cast<std::size_t>(j)] > w[static_cast<std::size_t>(j + 1)])) return;
      }
    }
    out.add_term(exponent(t), 1);
  });
  return out;
}

/// The back stable slide of c with x_i = 0 outside [lo, hi].
inline Polynomial backslide_in_window(const NVector& c, int lo, int hi) {
  auto w = word_of(c);
  return slide_in_window(w, lo, hi);
}

/// F_alpha on x_lo..x_hi from its descent-set definition.
inline Polynomial fundamental_in_window(const Composition& alpha, int lo, int hi) {
  const int r = alpha.weight();
  std::vector<bool> strict(static_cast<std::size_t>(r) + 1, false);
  int acc = 0;
  for (std::size_t k = 0; k + 1 < alpha.length(); ++k) strict[static_cast<std::size_t>(acc += alpha[k])] = true;
  Polynomial out;
  for_each_tuple(r, lo, hi, [&](const std::vector<int>& t) {
    for (int j = 1; j < r; ++j) {
      int a = t[static_cast<std::size_t>(j - 1)];
      int b = t[static_cast<std::size_t>(j)];
      if (a > b || (a == b && strict[static_cast<std::size_t>(j)])) return;
    }
    out.add_term(exponent(t), 1);
  });
  return out;
}

/// Plane binary tree expressions with n internal nodes.
inline std::vector<std::string> tree_shapes(int n) {
  if (n == 0) return {"."};
  std::vector<std::string> out;
  for (int l = 0; l < n; ++l) {
    for (const auto& a : tree_shapes(l)) {
      for (const auto& b : tree_shapes(n - 1 - l)) out.push_back("(" + a + "," + b + ")");
    }
  }
  return out;
}

/// Every indexed forest with n internal nodes whose intervals lie in [lo, hi].
inline std::vector<IndexedForest> forests_in_window(int n, int lo, int hi) {
  std::vector<IndexedForest> out;
  std::vector<IndexedTree> trees;
  auto rec = [&](auto&& self, int start, int left) -> void {
    if (left == 0) {
      out.emplace_back(trees);
      return;
    }
    for (int p = start; p < hi; ++p) {
      for (int k = 1; k <= left && p + k <= hi; ++k) {
        for (const auto& shape : tree_shapes(k)) {
          trees.emplace_back(p, shape);
          self(self, p + k + 1, left - k);
          trees.pop_back();
        }
      }
    }
  };
  rec(rec, lo, n);
  return out;
}

/// Least common upper bound by exhaustive search; letters above the inputs'
/// maximum never help, so the box [max(C_i, D_i), max letter] is complete.
inline std::optional<NonincreasingWord> join(const NonincreasingWord& c, const NonincreasingWord& d) {
  const std::size_t m = c.size();
  if (m == 0) return c;
  int top = std::max(c[0], d[0]);
  std::vector<int> lo(m);
  std::vector<int> hi(m, top);
  for (std::size_t i = 0; i < m; ++i) lo[i] = std::max(c[i], d[i]);
  std::vector<NonincreasingWord> uppers;
  detail::for_each_word_in_box(lo, hi, [&](const NonincreasingWord& e) {
    if (leq_m(c, e) && leq_m(d, e)) uppers.push_back(e);
  });
  for (const auto& e : uppers) {
    if (std::all_of(uppers.begin(), uppers.end(), [&](const auto& u) { return leq_m(e, u); })) return e;
  }
  return std::nullopt;
}

/// Greatest common lower bound among words with letters >= floor.
inline std::optional<NonincreasingWord> meet(const NonincreasingWord& c, const NonincreasingWord& d, int floor) {
  const std::size_t m = c.size();
  if (m == 0) return c;
  std::vector<int> lo(m, floor);
  std::vector<int> hi(m);
  for (std::size_t i = 0; i < m; ++i) hi[i] = std::min(c[i], d[i]);
  std::vector<NonincreasingWord> lowers;
  detail::for_each_word_in_box(lo, hi, [&](const NonincreasingWord& e) {
    if (leq_m(e, c) && leq_m(e, d)) lowers.push_back(e);
  });
  for (const auto& e : lowers) {
    if (std::all_of(lowers.begin(), lowers.end(), [&](const auto& l) { return leq_m(l, e); })) return e;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

/// All N-vectors of weight in [min_weight, max_weight] supported in [lo, hi].
inline std::vector<NVector> nvectors(int min_weight, int max_weight, int lo, int hi) {
  std::vector<NVector> out;
  std::vector<int> counts(static_cast<std::size_t>(std::max(0, hi - lo + 1)), 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == counts.size()) {
      int w = max_weight - left;
      if (w >= min_weight) out.emplace_back(lo, counts);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      counts[i] = k;
      self(self, i + 1, left - k);
    }
    counts[i] = 0;
  };
  rec(rec, 0, max_weight);
  return out;
}

/// All compositions of weight in [min_weight, max_weight].
inline std::vector<Composition> compositions(int min_weight, int max_weight) {
  std::vector<Composition> out;
  for (int r = min_weight; r <= max_weight; ++r) {
    if (r == 0) {
      out.emplace_back();
      continue;
    }
    for (unsigned mask = 0; mask < (1u << (r - 1)); ++mask) {
      std::vector<int> subset;
      for (int s = 1; s < r; ++s) {
        if (mask & (1u << (s - 1))) subset.push_back(s);
      }
      out.push_back(subset_composition(subset, r));
    }
  }
  return out;
}

/// All nonincreasing words of length m with letters in [lo, hi].
inline std::vector<NonincreasingWord> nonincreasing_words(int m, int lo, int hi) {
  std::vector<NonincreasingWord> out;
  detail::for_each_word_in_box(std::vector<int>(static_cast<std::size_t>(m), lo),
                               std::vector<int>(static_cast<std::size_t>(m), hi),
                               [&](const NonincreasingWord& w) { out.push_back(w); });
  return out;
}

/// A random flagged poset on n elements: each pair i < j becomes a relation
/// with probability density, and flag values are drawn from [min_value, max_value]
/// with tiers assigned to keep the flag injective.
inline FlaggedPoset random_flagged_poset(std::mt19937& rng, int n, int min_value, int max_value, double density = 0.35) {
  std::vector<std::string> names;
  for (int u = 0; u < n; ++u) names.push_back("p" + std::to_string(u));
  // Relabel through a random permutation so the lower element is not always the smaller index.
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) perm[static_cast<std::size_t>(u)] = u;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) covers.emplace_back(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    }
  }
  std::uniform_int_distribution<int> value(min_value, max_value);
  std::map<int, int> next_tier;
  std::vector<Letter> flag;
  for (int u = 0; u < n; ++u) {
    int v = value(rng);
    flag.emplace_back(v, ++next_tier[v]);
  }
  std::shuffle(flag.begin(), flag.end(), rng);
  return {Poset(std::move(names), covers), std::move(flag)};
}

/// A random element of the tensor basis span: a few terms of total weight
/// <= max_weight with polynomial part supported in [lo, hi].
inline BackQSymElement random_element(std::mt19937& rng, int max_weight, int lo, int hi, int terms = 3) {
  auto comps = compositions(0, max_weight);
  std::uniform_int_distribution<std::size_t> pick_comp(0, comps.size() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  BackQSymElement f;
  for (int t = 0; t < terms; ++t) {
    const Composition& alpha = comps[pick_comp(rng)];
    auto cs = nvectors(0, max_weight - alpha.weight(), lo, hi);
    std::uniform_int_distribution<std::size_t> pick_c(0, cs.size() - 1);
    f.add(alpha, cs[pick_c(rng)], coeff(rng));
  }
  return f;
}

}  // namespace slidekit::oracle
