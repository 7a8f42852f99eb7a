#pragma once

// Shared combinatorial vocabulary: letters of the augmented alphabet, injective
// words, N-vectors (finitely supported exponent vectors indexed by Z) and
// strong compositions.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "slidekit/detail/text.hpp"
#include "slidekit/errors.hpp"

namespace slidekit {

// ---------------------------------------------------------------------------
// Letters
// ---------------------------------------------------------------------------

/// The letter l(value, tier). Letters are ordered lexicographically, so that
/// value < l(value,1) < l(value,2) < ... < value + 1 when mixed with integers.
struct Letter {
  int value = 0;
  int tier = 1;

  constexpr Letter() = default;
  Letter(int value_, int tier_) : value(value_), tier(tier_) {
    if (tier < 1) throw validation_error("letter tier must be >= 1, got " + std::to_string(tier));
  }

  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
  friend constexpr bool operator==(const Letter&, const Letter&) = default;

  // Comparison against a plain integer n: l(i,j) < n iff i < n; never equal.
  friend constexpr std::strong_ordering operator<=>(const Letter& a, int n) {
    return a.value < n ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  friend constexpr bool operator==(const Letter&, int) { return false; }
};

using Word = std::vector<Letter>;

inline bool is_injective(std::span<const Letter> w) {
  std::vector<Letter> sorted(w.begin(), w.end());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

inline void require_injective(std::span<const Letter> w) {
  if (!is_injective(w)) throw validation_error("word is not injective");
}

/// Labels the occurrences of each value left to right with tiers 1, 2, ...
inline Word standardize(std::span<const int> w) {
  std::map<int, int> seen;
  Word out;
  out.reserve(w.size());
  for (int v : w) out.emplace_back(v, ++seen[v]);
  return out;
}

// ---------------------------------------------------------------------------
// N-vectors
// ---------------------------------------------------------------------------

/// Finitely supported vector of nonnegative counts indexed by Z. Stored densely
/// between the smallest and largest index of the support.
class NVector {
 public:
  NVector() = default;

  /// counts[k] is the entry at index lo + k.
  NVector(int lo, std::vector<int> counts) : lo_(lo), counts_(std::move(counts)) {
    for (int c : counts_) {
      if (c < 0) throw validation_error("N-vector entries must be nonnegative");
      weight_ += c;
    }
    normalize();
  }

  /// Entries at indices 1, 2, ... (weak composition notation).
  static NVector positive(std::initializer_list<int> counts) { return {1, std::vector<int>(counts)}; }
  static NVector positive(std::vector<int> counts) { return {1, std::move(counts)}; }
  static NVector unit(int index, int count = 1) { return {index, {count}}; }

  /// Entries from a map index -> count.
  static NVector from_map(const std::map<int, int>& entries) {
    if (entries.empty()) return {};
    int lo = entries.begin()->first;
    int hi = entries.rbegin()->first;
    std::vector<int> counts(static_cast<std::size_t>(hi - lo + 1), 0);
    for (auto [i, c] : entries) counts[static_cast<std::size_t>(i - lo)] = c;
    return {lo, std::move(counts)};
  }

  int operator[](int index) const {
    if (index < lo_ || index >= lo_ + static_cast<int>(counts_.size())) return 0;
    return counts_[static_cast<std::size_t>(index - lo_)];
  }

  int weight() const { return weight_; }
  bool is_zero() const { return counts_.empty(); }
  // Smallest / largest index of the support. Precondition: nonzero.
  int min_index() const { return lo_; }
  int max_index() const { return lo_ + static_cast<int>(counts_.size()) - 1; }
  bool has_positive_support() const { return is_zero() || lo_ >= 1; }

  /// Support entries (index, count) in increasing index order.
  std::vector<std::pair<int, int>> entries() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t k = 0; k < counts_.size(); ++k) {
      if (counts_[k] > 0) out.emplace_back(lo_ + static_cast<int>(k), counts_[k]);
    }
    return out;
  }

  NVector shifted(int by) const {
    NVector out = *this;
    if (!out.is_zero()) out.lo_ += by;
    return out;
  }

  NVector& operator+=(const NVector& other) {
    if (other.is_zero()) return *this;
    if (is_zero()) return *this = other;
    int lo = std::min(lo_, other.lo_);
    int hi = std::max(max_index(), other.max_index());
    std::vector<int> counts(static_cast<std::size_t>(hi - lo + 1), 0);
    for (int i = lo; i <= hi; ++i) counts[static_cast<std::size_t>(i - lo)] = (*this)[i] + other[i];
    *this = NVector(lo, std::move(counts));
    return *this;
  }
  friend NVector operator+(NVector a, const NVector& b) { return a += b; }

  /// Componentwise difference; throws if some entry would become negative.
  friend NVector operator-(const NVector& a, const NVector& b) {
    if (b.is_zero()) return a;
    int lo = a.is_zero() ? b.lo_ : std::min(a.lo_, b.lo_);
    int hi = a.is_zero() ? b.max_index() : std::max(a.max_index(), b.max_index());
    std::vector<int> counts(static_cast<std::size_t>(hi - lo + 1), 0);
    for (int i = lo; i <= hi; ++i) counts[static_cast<std::size_t>(i - lo)] = a[i] - b[i];
    return {lo, std::move(counts)};
  }

  friend bool operator==(const NVector&, const NVector&) = default;

  // Storage order; arbitrary but total. Use revlex_compare for the algebraic order.
  friend auto operator<=>(const NVector& a, const NVector& b) {
    if (auto c = a.lo_ <=> b.lo_; c != 0) return c;
    return a.counts_ <=> b.counts_;
  }

  std::size_t hash() const {
    std::size_t h = std::hash<int>{}(lo_);
    for (int c : counts_) h = h * 1000003u ^ std::hash<int>{}(c);
    return h;
  }

 private:
  void normalize() {
    auto first = std::find_if(counts_.begin(), counts_.end(), [](int c) { return c != 0; });
    if (first == counts_.end()) {
      counts_.clear();
      lo_ = 0;
      return;
    }
    auto last = std::find_if(counts_.rbegin(), counts_.rend(), [](int c) { return c != 0; }).base();
    lo_ += static_cast<int>(first - counts_.begin());
    counts_ = std::vector<int>(first, last);
  }

  int lo_ = 0;
  std::vector<int> counts_;
  int weight_ = 0;
};

struct NVectorHash {
  std::size_t operator()(const NVector& c) const { return c.hash(); }
};

/// Reverse lexicographic comparison of two N-vectors: at the largest index where
/// they differ, the larger entry wins. A total order on vectors of equal weight.
inline std::strong_ordering revlex_compare(const NVector& a, const NVector& b) {
  if (a.is_zero() && b.is_zero()) return std::strong_ordering::equal;
  int hi = a.is_zero() ? b.max_index() : b.is_zero() ? a.max_index() : std::max(a.max_index(), b.max_index());
  int lo = a.is_zero() ? b.min_index() : b.is_zero() ? a.min_index() : std::min(a.min_index(), b.min_index());
  for (int i = hi; i >= lo; --i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

/// Degree first, then revlex. Used to order polynomial terms.
struct GradedRevlexLess {
  bool operator()(const NVector& a, const NVector& b) const {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return revlex_compare(a, b) < 0;
  }
};

// ---------------------------------------------------------------------------
// Compositions
// ---------------------------------------------------------------------------

/// Strong composition: a finite sequence of positive parts (possibly empty).
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
      if (p < 1) throw validation_error("composition parts must be positive");
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int weight() const {
    int w = 0;
    for (int p : parts_) w += p;
    return w;
  }
  int operator[](std::size_t i) const { return parts_[i]; }

  friend auto operator<=>(const Composition&, const Composition&) = default;
  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

/// The positive entries of c in increasing index order.
inline Composition flatten(const NVector& c) {
  std::vector<int> parts;
  for (auto [i, n] : c.entries()) parts.push_back(n);
  return Composition(std::move(parts));
}

/// W_c: blocks l(i,1)...l(i,c_i) ordered by decreasing i.
inline Word word_of(const NVector& c) {
  Word w;
  w.reserve(static_cast<std::size_t>(c.weight()));
  auto entries = c.entries();
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    for (int j = 1; j <= it->second; ++j) w.emplace_back(it->first, j);
  }
  return w;
}

/// Inverse of word_of: recovers c from a word of the form W_c.
inline NVector nvector_of_word(std::span<const Letter> w) {
  std::map<int, int> counts;
  for (std::size_t k = 0; k < w.size(); ++k) {
    bool new_block = k == 0 || w[k].value != w[k - 1].value;
    bool ok = new_block ? (w[k].tier == 1 && (k == 0 || w[k].value < w[k - 1].value))
                        : w[k].tier == w[k - 1].tier + 1;
    if (!ok) throw validation_error("word is not of the form W_c");
    ++counts[w[k].value];
  }
  return NVector::from_map(counts);
}

enum class RsMode { polynomial, backstable };

/// The nonincreasing integer word U produced by the left-to-right scan:
/// u_{k+1} = min(val(w_{k+1}), u_k - 1) after a descent, u_k otherwise.
inline std::vector<int> rs_scan(std::span<const Letter> w) {
  require_injective(w);
  std::vector<int> u;
  u.reserve(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k == 0) {
      u.push_back(w[0].value);
    } else if (w[k] < w[k - 1]) {
      u.push_back(std::min(w[k].value, u.back() - 1));
    } else {
      u.push_back(u.back());
    }
  }
  return u;
}

/// The N-vector c with standardize(U) = W_c. In polynomial mode, returns
/// nullopt when some letter of U is nonpositive (the slide series vanishes).
inline std::optional<NVector> rs_normalize(std::span<const Letter> w, RsMode mode) {
  auto u = rs_scan(w);
  std::map<int, int> counts;
  for (int v : u) {
    if (mode == RsMode::polynomial && v <= 0) return std::nullopt;
    ++counts[v];
  }
  return NVector::from_map(counts);
}

inline Composition concat(const Composition& a, const Composition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Composition(std::move(parts));
}

/// Merges the last part of a with the first part of b. If either is empty the
/// other is returned.
inline Composition near_concat(const Composition& a, const Composition& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  std::vector<int> parts = a.parts();
  parts.back() += b[0];
  parts.insert(parts.end(), b.parts().begin() + 1, b.parts().end());
  return Composition(std::move(parts));
}

/// {a1, a1+a2, ..., a1+...+a_{l-1}} as a sorted subset of {1..r-1}.
inline std::vector<int> composition_subset(const Composition& alpha, int r) {
  if (alpha.weight() != r) {
    throw validation_error("composition weight " + std::to_string(alpha.weight()) + " does not match " +
                           std::to_string(r));
  }
  std::vector<int> s;
  int sum = 0;
  for (std::size_t i = 0; i + 1 < alpha.length(); ++i) s.push_back(sum += alpha[i]);
  return s;
}

inline Composition subset_composition(std::span<const int> subset, int r) {
  std::set<int> s(subset.begin(), subset.end());
  if (s.size() != subset.size()) throw validation_error("subset has repeated elements");
  if (r < 0 || (!s.empty() && (*s.begin() < 1 || *s.rbegin() > r - 1))) {
    throw validation_error("subset is not contained in {1..r-1}");
  }
  if (r == 0) return {};
  std::vector<int> parts;
  int prev = 0;
  for (int x : s) {
    parts.push_back(x - prev);
    prev = x;
  }
  parts.push_back(r - prev);
  return Composition(std::move(parts));
}

inline Composition reverse(const Composition& alpha) {
  std::vector<int> parts(alpha.parts().rbegin(), alpha.parts().rend());
  return Composition(std::move(parts));
}

/// Conjugate composition: subset {1..r-1} \ {r - s : s in S(alpha)}.
inline Composition transpose(const Composition& alpha) {
  int r = alpha.weight();
  if (r == 0) return {};
  auto s = composition_subset(alpha, r);
  std::set<int> reflected;
  for (int x : s) reflected.insert(r - x);
  std::vector<int> complement;
  for (int i = 1; i < r; ++i) {
    if (!reflected.count(i)) complement.push_back(i);
  }
  return subset_composition(complement, r);
}

// ---------------------------------------------------------------------------
// Text forms
// ---------------------------------------------------------------------------

inline std::string to_string(const Letter& a) {
  return "l(" + std::to_string(a.value) + "," + std::to_string(a.tier) + ")";
}

inline std::string to_string(std::span<const Letter> w) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ' ';
    out += to_string(w[k]);
  }
  return out;
}

inline Letter parse_letter(detail::Cursor& cur) {
  cur.expect('l');
  cur.expect('(');
  int value = cur.integer();
  cur.expect(',');
  int tier = cur.integer();
  cur.expect(')');
  if (tier < 1) cur.fail("tier must be positive");
  return {value, tier};
}

/// Parses a sequence of l(i,j) tokens separated by optional whitespace or commas.
inline Word parse_word(std::string_view text) {
  detail::Cursor cur(text);
  Word w;
  while (!cur.done()) {
    w.push_back(parse_letter(cur));
    cur.accept(',');
  }
  return w;
}

/// Comma-separated counts starting at index 1; a '|' separates index 0 from
/// index 1 when the support reaches nonpositive indices. Zero renders as "0".
inline std::string to_string(const NVector& c) {
  if (c.is_zero()) return "0";
  auto join = [&](int from, int to) {
    std::string out;
    for (int i = from; i <= to; ++i) {
      if (i > from) out += ',';
      out += std::to_string(c[i]);
    }
    return out;
  };
  if (c.min_index() >= 1) return join(1, c.max_index());
  std::string out = join(c.min_index(), 0) + "|";
  if (c.max_index() >= 1) out += join(1, c.max_index());
  return out;
}

inline NVector parse_nvector(std::string_view text) {
  text = detail::trim(text);
  if (text.empty()) throw parse_error("empty N-vector");
  auto counts_of = [](std::string_view part) {
    std::vector<int> counts;
    if (detail::trim(part).empty()) return counts;
    for (auto piece : detail::split_any(part, ",")) {
      int n = detail::parse_int(piece);
      if (n < 0) throw parse_error("N-vector entries must be nonnegative");
      counts.push_back(n);
    }
    return counts;
  };
  auto bar = text.find('|');
  if (bar == std::string_view::npos) return NVector(1, counts_of(text));
  if (text.find('|', bar + 1) != std::string_view::npos) throw parse_error("N-vector has more than one '|'");
  auto left = counts_of(text.substr(0, bar));
  auto right = counts_of(text.substr(bar + 1));
  int lo = 1 - static_cast<int>(left.size());
  left.insert(left.end(), right.begin(), right.end());
  return NVector(lo, std::move(left));
}

inline std::string to_string(const Composition& alpha) {
  std::string out = "(";
  for (std::size_t i = 0; i < alpha.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(alpha[i]);
  }
  return out + ")";
}

inline Composition parse_composition(std::string_view text) {
  text = detail::trim(text);
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw parse_error("unbalanced parentheses in composition");
    text = text.substr(1, text.size() - 2);
  }
  std::vector<int> parts;
  for (auto piece : detail::split_any(text, ", ")) {
    int p = detail::parse_int(piece);
    if (p < 1) throw parse_error("composition parts must be positive");
    parts.push_back(p);
  }
  return Composition(std::move(parts));
}

}  // namespace slidekit

template <>
struct std::hash<slidekit::NVector> {
  std::size_t operator()(const slidekit::NVector& c) const { return c.hash(); }
};
