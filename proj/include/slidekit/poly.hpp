#pragma once

// Sparse multivariate polynomials in variables x_i (i in Z) with exact 64-bit
// integer coefficients. Overflow is detected and reported, never wrapped.

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "slidekit/core.hpp"

namespace slidekit {

using coeff_t = std::int64_t;

namespace detail {

inline coeff_t checked_add(coeff_t a, coeff_t b) {
  coeff_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
  return r;
}

inline coeff_t checked_mul(coeff_t a, coeff_t b) {
  coeff_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
  return r;
}

// Accumulates k into m[key], erasing the entry when it cancels.
template <class Map, class Key>
void accumulate(Map& m, const Key& key, coeff_t k) {
  if (k == 0) return;
  auto [it, inserted] = m.try_emplace(key, k);
  if (!inserted) {
    it->second = checked_add(it->second, k);
    if (it->second == 0) m.erase(it);
  }
}

}  // namespace detail

class Polynomial {
 public:
  // Ascending graded revlex; the last entry is the leading term.
  using Terms = std::map<NVector, coeff_t, GradedRevlexLess>;

  Polynomial() = default;

  static Polynomial constant(coeff_t k) { return term(NVector{}, k); }
  static Polynomial term(const NVector& c, coeff_t k = 1) {
    Polynomial p;
    p.add_term(c, k);
    return p;
  }
  static Polynomial variable(int i) { return term(NVector::unit(i)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  coeff_t coeff(const NVector& c) const {
    auto it = terms_.find(c);
    return it == terms_.end() ? 0 : it->second;
  }

  void add_term(const NVector& c, coeff_t k) { detail::accumulate(terms_, c, k); }

  /// Largest term weight; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.weight(); }

  bool is_homogeneous() const {
    return terms_.empty() || terms_.begin()->first.weight() == terms_.rbegin()->first.weight();
  }

  Polynomial homogeneous_part(int d) const {
    Polynomial out;
    for (const auto& [c, k] : terms_) {
      if (c.weight() == d) out.terms_.emplace_hint(out.terms_.end(), c, k);
    }
    return out;
  }

  Polynomial& operator+=(const Polynomial& q) {
    for (const auto& [c, k] : q.terms_) add_term(c, k);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& q) {
    for (const auto& [c, k] : q.terms_) add_term(c, detail::checked_mul(k, -1));
    return *this;
  }
  Polynomial operator-() const { return scaled(-1); }

  Polynomial scaled(coeff_t k) const {
    Polynomial out;
    if (k == 0) return out;
    for (const auto& [c, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), c, detail::checked_mul(v, k));
    return out;
  }

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    Polynomial out;
    for (const auto& [a, ka] : p.terms_) {
      for (const auto& [b, kb] : q.terms_) out.add_term(a + b, detail::checked_mul(ka, kb));
    }
    return out;
  }
  Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  Terms terms_;
};

inline Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }
inline Polynomial scale(const Polynomial& p, coeff_t k) { return p.scaled(k); }

/// x(C) = x_{C_1} ... x_{C_m} for a nonincreasing word C.
inline Polynomial monomial(std::span<const int> word) {
  std::map<int, int> counts;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k > 0 && word[k] > word[k - 1]) throw validation_error("monomial word must be nonincreasing");
    ++counts[word[k]];
  }
  return Polynomial::term(NVector::from_map(counts));
}

/// Revlex-largest exponent vector of a nonzero homogeneous polynomial.
inline NVector revlex_leading(const Polynomial& p) {
  if (p.is_zero()) throw validation_error("revlex_leading of the zero polynomial");
  if (!p.is_homogeneous()) throw validation_error("revlex_leading requires a homogeneous polynomial");
  return p.terms().rbegin()->first;
}

/// Drops every term that uses a variable outside [lo, hi].
inline Polynomial truncate(const Polynomial& p, int lo, int hi) {
  if (lo > hi) throw validation_error("truncate: empty variable window");
  Polynomial out;
  for (const auto& [c, k] : p.terms()) {
    if (c.is_zero() || (c.min_index() >= lo && c.max_index() <= hi)) out.add_term(c, k);
  }
  return out;
}

/// Substitutes x_j -> x_{j+by}.
inline Polynomial shift(const Polynomial& p, int by) {
  Polynomial out;
  for (const auto& [c, k] : p.terms()) out.add_term(c.shifted(by), k);
  return out;
}

inline coeff_t coefficient_sum(const Polynomial& p) {
  coeff_t s = 0;
  for (const auto& [c, k] : p.terms()) s = detail::checked_add(s, k);
  return s;
}

/// Variables in increasing index order, e.g. "x(-1)*x(2)^2"; "1" for the empty monomial.
inline std::string monomial_string(const NVector& c) {
  if (c.is_zero()) return "1";
  std::string out;
  for (auto [i, n] : c.entries()) {
    if (!out.empty()) out += '*';
    out += "x(" + std::to_string(i) + ")";
    if (n > 1) out += "^" + std::to_string(n);
  }
  return out;
}

namespace detail {

// Renders sum k * label(key) with explicit signs; "0" when empty.
template <class It, class Label>
std::string render_signed_sum(It first, It last, Label label) {
  std::string out;
  for (auto it = first; it != last; ++it) {
    coeff_t k = it->second;
    std::string body = label(it->first);
    bool unit_body = body == "1";
    if (out.empty()) {
      if (k < 0) out += "-";
    } else {
      out += k < 0 ? " - " : " + ";
    }
    coeff_t mag = k < 0 ? -k : k;
    if (unit_body) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += body;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace detail

/// Human-readable form, terms in descending (graded) revlex order.
inline std::string to_string(const Polynomial& p) {
  return detail::render_signed_sum(p.terms().rbegin(), p.terms().rend(), monomial_string);
}

/// Parses the to_string grammar: signed sums of products of integers and x(i)^e.
inline Polynomial parse_polynomial(std::string_view text) {
  detail::Cursor cur(text);
  Polynomial out;
  if (cur.done()) cur.fail("empty polynomial");
  bool first = true;
  while (!cur.done()) {
    coeff_t sign = 1;
    if (cur.accept('-')) {
      sign = -1;
    } else if (!cur.accept('+') && !first) {
      cur.fail("expected '+' or '-'");
    }
    first = false;
    coeff_t k = sign;
    std::map<int, int> exps;
    do {
      char c = cur.peek();
      if (c == 'x') {
        cur.expect('x');
        cur.expect('(');
        int i = cur.integer();
        cur.expect(')');
        int e = 1;
        if (cur.accept('^')) {
          e = cur.integer();
          if (e < 0) cur.fail("negative exponent");
        }
        exps[i] += e;
      } else if (c >= '0' && c <= '9') {
        k = detail::checked_mul(k, cur.integer64());
      } else {
        cur.fail("expected a coefficient or x(i)");
      }
    } while (cur.accept('*'));
    out.add_term(NVector::from_map(exps), k);
  }
  return out;
}

}  // namespace slidekit
