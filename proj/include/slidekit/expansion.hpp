#pragma once

#include <map>
#include <string>

#include "slidekit/core.hpp"
#include "slidekit/poly.hpp"

namespace slidekit {

/// Integer combination of basis elements indexed by N-vectors (slides, back
/// stable slides or forest polynomials). Zero coefficients are never stored.
class Expansion {
 public:
  using Terms = std::map<NVector, coeff_t, GradedRevlexLess>;

  Expansion() = default;
  Expansion(std::initializer_list<std::pair<const NVector, coeff_t>> init) {
    for (const auto& [c, k] : init) add(c, k);
  }

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  coeff_t coeff(const NVector& c) const {
    auto it = terms_.find(c);
    return it == terms_.end() ? 0 : it->second;
  }
  void add(const NVector& c, coeff_t k) { detail::accumulate(terms_, c, k); }

  Expansion& operator+=(const Expansion& other) {
    for (const auto& [c, k] : other.terms_) add(c, k);
    return *this;
  }
  Expansion scaled(coeff_t k) const {
    Expansion out;
    for (const auto& [c, v] : terms_) out.add(c, detail::checked_mul(v, k));
    return out;
  }
  Expansion shifted(int by) const {
    Expansion out;
    for (const auto& [c, k] : terms_) out.add(c.shifted(by), k);
    return out;
  }

  friend bool operator==(const Expansion&, const Expansion&) = default;

 private:
  Terms terms_;
};

using SlideExpansion = Expansion;
using BackSlideExpansion = Expansion;
using ForestExpansion = Expansion;

/// "S[0,1,0,2] - S[0,0,1,1]" style rendering, keys in descending revlex order.
inline std::string to_string(const Expansion& e, const std::string& symbol) {
  return detail::render_signed_sum(e.terms().rbegin(), e.terms().rend(),
                                   [&](const NVector& c) { return symbol + "[" + to_string(c) + "]"; });
}

}  // namespace slidekit
