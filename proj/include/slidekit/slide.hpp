#pragma once

// Slide polynomials: slide(W) for an injective word W, the basis F_c = slide(W_c),
// and conversion of polynomials into that basis.

#include <algorithm>
#include <map>
#include <span>
#include <vector>

#include "slidekit/core.hpp"
#include "slidekit/expansion.hpp"
#include "slidekit/poly.hpp"

namespace slidekit {

/// Sum over i_1 >= ... >= i_r > 0 with i_j > i_{j+1} when a_j > a_{j+1} and
/// i_j <= val(a_j) of x_{i_1} ... x_{i_r}.
inline Polynomial slide_series(std::span<const Letter> w) {
  require_injective(w);
  const std::size_t r = w.size();
  Polynomial out;
  if (r == 0) return Polynomial::constant(1);
  int top = 0;
  for (const auto& a : w) top = std::max(top, a.value);
  if (top < 1) return out;
  std::vector<int> counts(static_cast<std::size_t>(top), 0);  // counts[v - 1]
  auto rec = [&](auto&& self, std::size_t j, int prev) -> void {
    if (j == r) {
      out.add_term(NVector(1, counts), 1);
      return;
    }
    int ub = w[j].value;
    if (j > 0) ub = std::min(ub, w[j - 1] > w[j] ? prev - 1 : prev);
    for (int v = ub; v >= 1; --v) {
      ++counts[static_cast<std::size_t>(v - 1)];
      self(self, j + 1, v);
      --counts[static_cast<std::size_t>(v - 1)];
    }
  };
  rec(rec, 0, 0);
  return out;
}

inline void require_positive_support(const NVector& c) {
  if (!c.has_positive_support()) throw validation_error("N-vector " + to_string(c) + " has nonpositive support");
}

/// F_c = slide(W_c) for c supported on positive indices.
inline Polynomial slide_polynomial(const NVector& c) {
  require_positive_support(c);
  return slide_series(word_of(c));
}

/// Memoizes slide polynomials for repeated basis changes.
class SlideCache {
 public:
  const Polynomial& get(const NVector& c) {
    auto it = cache_.find(c);
    if (it == cache_.end()) it = cache_.emplace(c, slide_polynomial(c)).first;
    return it->second;
  }

 private:
  std::map<NVector, Polynomial> cache_;
};

inline void require_positive_variables(const Polynomial& p) {
  for (const auto& [c, k] : p.terms()) {
    if (!c.has_positive_support()) throw validation_error("polynomial uses a variable x_i with i <= 0");
  }
}

/// Writes p in the slide basis by repeatedly cancelling the revlex-leading term
/// x^c against F_c, whose leading monomial is x^c with coefficient 1.
inline SlideExpansion expand_in_slide_basis(const Polynomial& p, SlideCache& cache) {
  require_positive_variables(p);
  SlideExpansion out;
  Polynomial rest = p;
  while (!rest.is_zero()) {
    auto [c, k] = *rest.terms().rbegin();
    out.add(c, k);
    rest -= cache.get(c).scaled(k);
  }
  return out;
}

inline SlideExpansion expand_in_slide_basis(const Polynomial& p) {
  SlideCache cache;
  return expand_in_slide_basis(p, cache);
}

/// Sum of k * F_c over the expansion.
inline Polynomial from_slide_basis(const SlideExpansion& e) {
  Polynomial out;
  for (const auto& [c, k] : e.terms()) out += slide_polynomial(c).scaled(k);
  return out;
}

}  // namespace slidekit
