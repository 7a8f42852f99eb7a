#pragma once

// Back stable quasisymmetric functions, represented canonically in the tensor
// basis F_alpha(x_-) * x^c of QSym(x_{<=0}) (x) Z[x_i : i in Z], together with
// back stable slides, the maps eta_0 / pi_+ / gamma, and the shuffle product.

#include <algorithm>
#include <compare>
#include <limits>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "slidekit/core.hpp"
#include "slidekit/expansion.hpp"
#include "slidekit/poly.hpp"
#include "slidekit/poset.hpp"
#include "slidekit/slide.hpp"

namespace slidekit {

struct TensorKey {
  Composition alpha;
  NVector c;
  friend bool operator==(const TensorKey&, const TensorKey&) = default;
};

/// Total degree, then the polynomial factor in graded revlex, then alpha.
struct TensorKeyLess {
  bool operator()(const TensorKey& a, const TensorKey& b) const {
    int da = a.alpha.weight() + a.c.weight();
    int db = b.alpha.weight() + b.c.weight();
    if (da != db) return da < db;
    if (a.c.weight() != b.c.weight()) return a.c.weight() < b.c.weight();
    if (auto o = revlex_compare(a.c, b.c); o != 0) return o < 0;
    return a.alpha < b.alpha;
  }
};

class BackQSymElement {
 public:
  using Terms = std::map<TensorKey, coeff_t, TensorKeyLess>;

  BackQSymElement() = default;

  static BackQSymElement term(const Composition& alpha, const NVector& c, coeff_t k = 1) {
    BackQSymElement f;
    f.add(alpha, c, k);
    return f;
  }
  static BackQSymElement one() { return term({}, {}); }
  /// F_alpha(x_-) (x) 1.
  static BackQSymElement fundamental(const Composition& alpha) { return term(alpha, {}); }
  /// 1 (x) p.
  static BackQSymElement from_polynomial(const Polynomial& p) {
    BackQSymElement f;
    for (const auto& [c, k] : p.terms()) f.add({}, c, k);
    return f;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  coeff_t coeff(const Composition& alpha, const NVector& c) const {
    auto it = terms_.find({alpha, c});
    return it == terms_.end() ? 0 : it->second;
  }

  void add(const Composition& alpha, const NVector& c, coeff_t k) { detail::accumulate(terms_, TensorKey{alpha, c}, k); }

  BackQSymElement& operator+=(const BackQSymElement& g) {
    for (const auto& [key, k] : g.terms_) detail::accumulate(terms_, key, k);
    return *this;
  }
  BackQSymElement& operator-=(const BackQSymElement& g) {
    for (const auto& [key, k] : g.terms_) detail::accumulate(terms_, key, detail::checked_mul(k, -1));
    return *this;
  }
  BackQSymElement scaled(coeff_t k) const {
    BackQSymElement out;
    if (k == 0) return out;
    for (const auto& [key, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), key, detail::checked_mul(v, k));
    return out;
  }
  friend BackQSymElement operator+(BackQSymElement f, const BackQSymElement& g) { return f += g; }
  friend BackQSymElement operator-(BackQSymElement f, const BackQSymElement& g) { return f -= g; }

  /// Multiplies every term by the monomial x^e.
  BackQSymElement times_monomial(const NVector& e) const {
    BackQSymElement out;
    for (const auto& [key, k] : terms_) out.add(key.alpha, key.c + e, k);
    return out;
  }

  /// Largest weight of a polynomial factor; -1 when zero.
  int polynomial_weight() const {
    int w = -1;
    for (const auto& [key, k] : terms_) w = std::max(w, key.c.weight());
    return w;
  }

  friend bool operator==(const BackQSymElement&, const BackQSymElement&) = default;

 private:
  Terms terms_;
};

/// "F(2,1)|x(0)*x(2)^2" tokens; a trivial factor on either side is left out.
inline std::string to_string(const BackQSymElement& f) {
  return detail::render_signed_sum(f.terms().rbegin(), f.terms().rend(), [](const TensorKey& key) {
    if (key.alpha.empty()) return monomial_string(key.c);
    std::string out = "F" + to_string(key.alpha);
    if (!key.c.is_zero()) out += "|" + monomial_string(key.c);
    return out;
  });
}

// ---------------------------------------------------------------------------
// Fundamental quasisymmetric functions on finite windows
// ---------------------------------------------------------------------------

/// F_alpha(x_lo, ..., x_hi): sum over lo <= i_1 <= ... <= i_r <= hi with
/// i_j < i_{j+1} for j in the subset of alpha.
inline Polynomial fundamental_in_window(const Composition& alpha, int lo, int hi) {
  const int r = alpha.weight();
  if (r == 0) return Polynomial::constant(1);
  Polynomial out;
  if (hi < lo) return out;
  auto subset = composition_subset(alpha, r);
  std::vector<bool> strict(static_cast<std::size_t>(r) + 1, false);
  for (int s : subset) strict[static_cast<std::size_t>(s)] = true;
  std::vector<int> counts(static_cast<std::size_t>(hi - lo + 1), 0);
  auto rec = [&](auto&& self, int j, int prev) -> void {
    if (j > r) {
      out.add_term(NVector(lo, counts), 1);
      return;
    }
    int from = j == 1 ? lo : (strict[static_cast<std::size_t>(j - 1)] ? prev + 1 : prev);
    for (int v = from; v <= hi; ++v) {
      ++counts[static_cast<std::size_t>(v - lo)];
      self(self, j + 1, v);
      --counts[static_cast<std::size_t>(v - lo)];
    }
  };
  rec(rec, 1, lo);
  return out;
}

/// F_alpha(x_1, ..., x_n).
inline Polynomial fundamental_truncated(const Composition& alpha, int n) {
  if (n < 0) throw validation_error("variable count must be nonnegative");
  return fundamental_in_window(alpha, 1, n);
}

/// Distinct pairs (beta, gamma) with beta . gamma = alpha, or beta (.) gamma = alpha
/// with both nonempty.
inline std::vector<std::pair<Composition, Composition>> splittings(const Composition& alpha) {
  std::vector<std::pair<Composition, Composition>> out;
  const auto& parts = alpha.parts();
  for (std::size_t k = 0; k <= parts.size(); ++k) {
    out.emplace_back(Composition(std::vector<int>(parts.begin(), parts.begin() + static_cast<long>(k))),
                     Composition(std::vector<int>(parts.begin() + static_cast<long>(k), parts.end())));
    if (k < parts.size()) {
      for (int a = 1; a < parts[k]; ++a) {
        std::vector<int> beta(parts.begin(), parts.begin() + static_cast<long>(k));
        beta.push_back(a);
        std::vector<int> gamma{parts[k] - a};
        gamma.insert(gamma.end(), parts.begin() + static_cast<long>(k) + 1, parts.end());
        out.emplace_back(Composition(std::move(beta)), Composition(std::move(gamma)));
      }
    }
  }
  return out;
}

/// Tensor expansion of F_alpha(x_{<=b}).
///   b >= 1:  sum F_beta(x_-) F_gamma(x_1..x_b)
///   b <= -1: sum (-1)^|gamma| F_beta(x_-) F_{transpose(gamma)}(x_{b+1}..x_0)
inline BackQSymElement expand_F_shifted(const Composition& alpha, int b) {
  if (b == 0) return BackQSymElement::fundamental(alpha);
  BackQSymElement out;
  for (const auto& [beta, gamma] : splittings(alpha)) {
    Polynomial tail = b > 0 ? fundamental_in_window(gamma, 1, b) : fundamental_in_window(transpose(gamma), b + 1, 0);
    coeff_t sign = (b < 0 && gamma.weight() % 2 == 1) ? -1 : 1;
    for (const auto& [c, k] : tail.terms()) out.add(beta, c, detail::checked_mul(sign, k));
  }
  return out;
}

/// gamma^i: x_j -> x_{j+i}, applied as |i| unit shifts.
inline BackQSymElement gamma_shift(const BackQSymElement& f, int i) {
  BackQSymElement cur = f;
  const int step = i > 0 ? 1 : -1;
  for (int n = 0; n < (i > 0 ? i : -i); ++n) {
    BackQSymElement next;
    std::map<Composition, BackQSymElement> unit;
    for (const auto& [key, k] : cur.terms()) {
      auto it = unit.find(key.alpha);
      if (it == unit.end()) it = unit.emplace(key.alpha, expand_F_shifted(key.alpha, step)).first;
      next += it->second.times_monomial(key.c.shifted(step)).scaled(k);
    }
    cur = std::move(next);
  }
  return cur;
}

inline BackQSymElement gamma_shift(const BackQSymElement& f) { return gamma_shift(f, 1); }

// ---------------------------------------------------------------------------
// Back stable slides
// ---------------------------------------------------------------------------

/// Decompositions c = d + e where d takes the lowest |d| units of c (so every
/// index used by d is <= every index used by e). These are exactly the splits
/// with fl(c) = fl(d).fl(e) or fl(d)(.)fl(e) that respect the order of the
/// support; there are |c| + 1 of them, listed by increasing |d|.
inline std::vector<std::pair<NVector, NVector>> good_decompositions(const NVector& c) {
  require_positive_support(c);
  std::vector<std::pair<NVector, NVector>> out;
  std::map<int, int> d;
  out.emplace_back(NVector{}, c);
  for (auto [i, n] : c.entries()) {
    for (int t = 1; t <= n; ++t) {
      d[i] = t;
      NVector dv = NVector::from_map(d);
      out.emplace_back(dv, c - dv);
    }
  }
  return out;
}

/// Memo tables for slides and back stable slides. Not thread-safe; use one per thread.
class BackstableCache {
 public:
  const Polynomial& slide(const NVector& c) { return slides_.get(c); }
  SlideCache& slides() { return slides_; }

  const BackQSymElement& backslide(const NVector& c);

 private:
  SlideCache slides_;
  std::map<NVector, BackQSymElement> backslides_;
};

/// Back stable slide F<-_c in the tensor basis. For positive support this is
/// sum over good c = d + e of F_fl(d)(x_-) F_e(x_+); in general c is shifted
/// into positive support and the result shifted back.
inline const BackQSymElement& BackstableCache::backslide(const NVector& c) {
  auto it = backslides_.find(c);
  if (it != backslides_.end()) return it->second;
  BackQSymElement out;
  if (c.has_positive_support()) {
    for (const auto& [d, e] : good_decompositions(c)) {
      Composition alpha = flatten(d);
      for (const auto& [m, k] : slides_.get(e).terms()) out.add(alpha, m, k);
    }
  } else {
    int s = 1 - c.min_index();
    out = gamma_shift(backslide(c.shifted(s)), -s);
  }
  return backslides_.emplace(c, std::move(out)).first->second;
}

inline BackQSymElement backslide(const NVector& c) {
  BackstableCache cache;
  return cache.backslide(c);
}

/// eta_0: the QSym coefficient of the constant polynomial term.
inline std::map<Composition, coeff_t> eta0(const BackQSymElement& f) {
  std::map<Composition, coeff_t> out;
  for (const auto& [key, k] : f.terms()) {
    if (key.c.is_zero()) out[key.alpha] = k;
  }
  return out;
}

/// pi_+: set x_i = 0 for i <= 0.
inline Polynomial pi_plus(const BackQSymElement& f) {
  Polynomial out;
  for (const auto& [key, k] : f.terms()) {
    if (key.alpha.empty() && key.c.has_positive_support()) out.add_term(key.c, k);
  }
  return out;
}

/// The polynomial obtained by setting x_i = 0 outside [lo, hi].
inline Polynomial evaluate_window(const BackQSymElement& f, int lo, int hi) {
  if (lo > hi) throw validation_error("empty variable window");
  Polynomial out;
  std::map<Composition, Polynomial> fund;
  for (const auto& [key, k] : f.terms()) {
    if (!key.c.is_zero() && (key.c.min_index() < lo || key.c.max_index() > hi)) continue;
    auto it = fund.find(key.alpha);
    if (it == fund.end()) it = fund.emplace(key.alpha, fundamental_in_window(key.alpha, lo, std::min(hi, 0))).first;
    out += (it->second * Polynomial::term(key.c)).scaled(k);
  }
  return out;
}

/// d = (..., 0, alpha | e): alpha packed so that its last part sits at index 0.
inline NVector pack_backslide_index(const Composition& alpha, const NVector& e) {
  std::map<int, int> m;
  const int len = static_cast<int>(alpha.length());
  for (int k = 0; k < len; ++k) m[k - len + 1] = alpha[static_cast<std::size_t>(k)];
  for (auto [i, n] : e.entries()) m[i] = n;
  return NVector::from_map(m);
}

/// Coefficients in the back stable slide basis. After shifting into
/// QSym (x) Z[x_+], each term F_alpha (x) F_e of maximal positive weight is
/// cancelled by F<-_(alpha|e), which agrees with it up to terms of strictly
/// smaller positive weight.
inline BackSlideExpansion expand_in_backslide_basis(const BackQSymElement& f, BackstableCache& cache) {
  BackSlideExpansion out;
  if (f.is_zero()) return out;
  int s = 0;
  for (const auto& [key, k] : f.terms()) {
    if (!key.c.is_zero() && key.c.min_index() < 1) s = std::max(s, 1 - key.c.min_index());
  }
  BackQSymElement rest = gamma_shift(f, s);
  int previous = std::numeric_limits<int>::max();
  while (!rest.is_zero()) {
    std::map<Composition, Polynomial> parts;
    for (const auto& [key, k] : rest.terms()) parts[key.alpha].add_term(key.c, k);
    std::vector<std::pair<NVector, coeff_t>> top;
    int level = -1;
    for (const auto& [alpha, p] : parts) {
      auto slides = expand_in_slide_basis(p, cache.slides());
      for (const auto& [e, k] : slides.terms()) {
        NVector d = pack_backslide_index(alpha, e);
        if (e.weight() > level) {
          level = e.weight();
          top.clear();
        }
        if (e.weight() == level) top.emplace_back(d, k);
      }
    }
    if (level >= previous) throw std::logic_error("back slide reduction did not lower the polynomial weight");
    previous = level;
    for (const auto& [d, k] : top) {
      out.add(d, k);
      rest -= cache.backslide(d).scaled(k);
    }
  }
  return out.shifted(-s);
}

inline BackSlideExpansion expand_in_backslide_basis(const BackQSymElement& f) {
  BackstableCache cache;
  return expand_in_backslide_basis(f, cache);
}

inline BackQSymElement from_backslide_basis(const BackSlideExpansion& e, BackstableCache& cache) {
  BackQSymElement out;
  for (const auto& [c, k] : e.terms()) out += cache.backslide(c).scaled(k);
  return out;
}

inline BackQSymElement from_backslide_basis(const BackSlideExpansion& e) {
  BackstableCache cache;
  return from_backslide_basis(e, cache);
}

/// F<-_c F<-_d = sum over shuffles L of W_c with W_d (letters l(i,j) of W_d
/// renamed l(i, j + c_i)) of F<-_RS(L).
inline BackSlideExpansion multiply_backslides(const NVector& c, const NVector& d) {
  Word wc = word_of(c);
  Word wd = word_of(d);
  for (auto& a : wd) a.tier += c[a.value];
  const std::size_t n = wc.size() + wd.size();
  BackSlideExpansion out;
  std::vector<bool> from_d(n, false);
  std::fill(from_d.end() - static_cast<long>(wd.size()), from_d.end(), true);
  Word shuffle(n);
  do {
    std::size_t ic = 0;
    std::size_t id = 0;
    for (std::size_t k = 0; k < n; ++k) shuffle[k] = from_d[k] ? wd[id++] : wc[ic++];
    out.add(*rs_normalize(shuffle, RsMode::backstable), 1);
  } while (std::next_permutation(from_d.begin(), from_d.end()));
  return out;
}

/// Product in the tensor basis, through the back stable slide basis.
inline BackQSymElement multiply(const BackQSymElement& f, const BackQSymElement& g, BackstableCache& cache) {
  auto ef = expand_in_backslide_basis(f, cache);
  auto eg = expand_in_backslide_basis(g, cache);
  BackSlideExpansion prod;
  for (const auto& [c, kc] : ef.terms()) {
    for (const auto& [d, kd] : eg.terms()) prod += multiply_backslides(c, d).scaled(detail::checked_mul(kc, kd));
  }
  return from_backslide_basis(prod, cache);
}

inline BackQSymElement multiply(const BackQSymElement& f, const BackQSymElement& g) {
  BackstableCache cache;
  return multiply(f, g, cache);
}

/// K<-_(P,Phi) as a sum of back stable slides, one per linear extension.
inline BackSlideExpansion back_k_expansion(const FlaggedPoset& p) {
  BackSlideExpansion out;
  for (const auto& ext : linear_extensions(p)) out.add(*rs_normalize(word_of_extension(p, ext), RsMode::backstable), 1);
  return out;
}

inline BackQSymElement back_k(const FlaggedPoset& p, BackstableCache& cache) {
  return from_backslide_basis(back_k_expansion(p), cache);
}

inline BackQSymElement back_k(const FlaggedPoset& p) {
  BackstableCache cache;
  return back_k(p, cache);
}

}  // namespace slidekit
