#pragma once

// The poset P_m of nonincreasing words of length m, its lattice operations and
// Moebius function, and the signed expansion of monomials into slides.

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "slidekit/core.hpp"
#include "slidekit/errors.hpp"
#include "slidekit/expansion.hpp"
#include "slidekit/poly.hpp"

namespace slidekit {

class NonincreasingWord {
 public:
  NonincreasingWord() = default;
  NonincreasingWord(std::initializer_list<int> letters) : NonincreasingWord(std::vector<int>(letters)) {}
  explicit NonincreasingWord(std::vector<int> letters) : letters_(std::move(letters)) {
    for (std::size_t k = 1; k < letters_.size(); ++k) {
      if (letters_[k] > letters_[k - 1]) throw validation_error("word is not nonincreasing");
    }
  }

  /// The word with c_i copies of each letter i.
  static NonincreasingWord of(const NVector& c) {
    std::vector<int> out;
    auto entries = c.entries();
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) out.insert(out.end(), static_cast<std::size_t>(it->second), it->first);
    return NonincreasingWord(std::move(out));
  }

  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }

  /// Block form M_1^{m_1} ... M_t^{m_t} as (M_i, m_i) pairs.
  std::vector<std::pair<int, int>> blocks() const {
    std::vector<std::pair<int, int>> out;
    for (int a : letters_) {
      if (out.empty() || out.back().first != a) out.emplace_back(a, 0);
      ++out.back().second;
    }
    return out;
  }

  NVector nvector() const {
    std::map<int, int> counts;
    for (int a : letters_) ++counts[a];
    return NVector::from_map(counts);
  }

  bool all_positive() const { return letters_.empty() || letters_.back() >= 1; }

  friend auto operator<=>(const NonincreasingWord&, const NonincreasingWord&) = default;

 private:
  std::vector<int> letters_;
};

/// Single-digit letters print compactly ("442"), anything else comma-separated.
inline std::string to_string(const NonincreasingWord& w) {
  if (w.empty()) return "()";
  bool compact = std::all_of(w.letters().begin(), w.letters().end(), [](int a) { return a >= 0 && a <= 9; });
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (!compact && k > 0) out += ',';
    out += std::to_string(w[k]);
  }
  return out;
}

/// "4,4,2", "4 4 2", or a digit string "442" (one letter per digit); "()" is empty.
inline NonincreasingWord parse_nonincreasing_word(std::string_view text) {
  text = detail::trim(text);
  if (text == "()") return {};
  if (text.empty()) throw parse_error("empty word");
  std::vector<int> letters;
  if (text.find_first_of(", \t") == std::string_view::npos &&
      std::all_of(text.begin(), text.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
    for (char ch : text) letters.push_back(ch - '0');
  } else {
    for (auto piece : detail::split_any(text, ", \t")) letters.push_back(detail::parse_int(piece));
  }
  return NonincreasingWord(std::move(letters));
}

namespace detail {

inline void require_same_length(const NonincreasingWord& a, const NonincreasingWord& b) {
  if (a.size() != b.size()) {
    throw validation_error("words " + to_string(a) + " and " + to_string(b) + " have different lengths");
  }
}

// Calls fn on every nonincreasing word E with lo_i <= E_i <= hi_i.
template <class Fn>
void for_each_word_in_box(const std::vector<int>& lo, const std::vector<int>& hi, Fn fn) {
  const std::size_t m = lo.size();
  std::vector<int> cur(m);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == m) {
      fn(NonincreasingWord(cur));
      return;
    }
    int top = i == 0 ? hi[i] : std::min(hi[i], cur[i - 1]);
    for (int v = lo[i]; v <= top; ++v) {
      cur[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace detail

/// D <=_m C: D_i <= C_i everywhere, and D_i > D_{i+1} wherever C_i > C_{i+1}.
inline bool leq_m(const NonincreasingWord& d, const NonincreasingWord& c) {
  detail::require_same_length(d, c);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (d[i] > c[i]) return false;
    if (i + 1 < c.size() && c[i] > c[i + 1] && d[i] == d[i + 1]) return false;
  }
  return true;
}

inline NonincreasingWord join(const NonincreasingWord& c, const NonincreasingWord& d) {
  detail::require_same_length(c, d);
  std::vector<int> out(c.size());
  int held = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i == 0 || (c[i - 1] > c[i] && d[i - 1] > d[i])) held = std::max(c[i], d[i]);
    out[i] = held;
  }
  return NonincreasingWord(std::move(out));
}

/// The join of every common lower bound lying above the floor word
/// k (k-1) ... (k-m+1), k the smallest letter of C and D.
inline NonincreasingWord meet(const NonincreasingWord& c, const NonincreasingWord& d) {
  detail::require_same_length(c, d);
  if (c.empty()) return c;
  thread_local std::map<std::pair<NonincreasingWord, NonincreasingWord>, NonincreasingWord> memo;
  auto key = std::minmax(c, d);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const std::size_t m = c.size();
  const int k = std::min(c[m - 1], d[m - 1]);
  std::vector<int> lo(m);
  std::vector<int> hi(m);
  for (std::size_t i = 0; i < m; ++i) {
    lo[i] = k - static_cast<int>(i);
    hi[i] = std::min(c[i], d[i]);
  }
  NonincreasingWord floor(lo);
  NonincreasingWord acc = floor;
  detail::for_each_word_in_box(lo, hi, [&](const NonincreasingWord& e) {
    if (leq_m(floor, e) && leq_m(e, c) && leq_m(e, d)) acc = join(acc, e);
  });
  memo.emplace(std::pair(key.first, key.second), acc);
  return acc;
}

/// An element D of B_C with its mark set S_C(D) (0-based positions j whose
/// letter drops by one relative to the previous chain value).
struct BSubsetCertificate {
  NonincreasingWord word;
  std::vector<int> marks;
  friend bool operator==(const BSubsetCertificate&, const BSubsetCertificate&) = default;
};

/// B_C: for each block M_i^{m_i}, chains x_0 = M_i, x_{j+1} in {x_j, x_j - 1}
/// of length m_i whose last value exceeds M_{i+1} (no floor for the last block).
/// Sorted by number of marks, then lexicographically by marks.
inline std::vector<BSubsetCertificate> b_set(const NonincreasingWord& c) {
  auto blocks = c.blocks();
  std::vector<BSubsetCertificate> out;
  std::vector<int> letters;
  std::vector<int> marks;
  auto rec = [&](auto&& self, std::size_t b, int j, int x, int offset) -> void {
    if (b == blocks.size()) {
      out.push_back({NonincreasingWord(letters), marks});
      return;
    }
    auto [top, len] = blocks[b];
    if (j == len) {
      int floor = b + 1 < blocks.size() ? blocks[b + 1].first : std::numeric_limits<int>::min();
      if (x > floor) self(self, b + 1, 0, b + 1 < blocks.size() ? blocks[b + 1].first : 0, offset + len);
      return;
    }
    letters.push_back(x);
    self(self, b, j + 1, x, offset);
    letters.back() = x - 1;
    marks.push_back(offset + j);
    self(self, b, j + 1, x - 1, offset);
    marks.pop_back();
    letters.pop_back();
  };
  rec(rec, 0, 0, blocks.empty() ? 0 : blocks[0].first, 0);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.marks.size() != b.marks.size()) return a.marks.size() < b.marks.size();
    return a.marks < b.marks;
  });
  return out;
}

/// The certificate for D in B_C, if D belongs to it.
inline std::optional<BSubsetCertificate> b_certificate(const NonincreasingWord& d, const NonincreasingWord& c) {
  for (auto& cert : b_set(c)) {
    if (cert.word == d) return cert;
  }
  return std::nullopt;
}

namespace detail {

inline void require_leq_m(const NonincreasingWord& d, const NonincreasingWord& c) {
  if (!leq_m(d, c)) throw validation_error(to_string(d) + " is not below " + to_string(c));
}

}  // namespace detail

/// mu(D, C) = (-1)^{|S_C(D)|} for D in B_C, and 0 otherwise.
inline int mobius(const NonincreasingWord& d, const NonincreasingWord& c) {
  detail::require_leq_m(d, c);
  auto cert = b_certificate(d, c);
  if (!cert) return 0;
  return cert->marks.size() % 2 == 0 ? 1 : -1;
}

/// mu(D, C) from sum_{D <= E <= C} mu(E, C) = 0 over the finite interval [D, C].
inline int mobius_recursive(const NonincreasingWord& d, const NonincreasingWord& c) {
  detail::require_leq_m(d, c);
  std::map<NonincreasingWord, int> memo;
  auto mu = [&](auto&& self, const NonincreasingWord& x) -> int {
    if (x == c) return 1;
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    int sum = 0;
    detail::for_each_word_in_box(x.letters(), c.letters(), [&](const NonincreasingWord& e) {
      if (e != x && leq_m(x, e) && leq_m(e, c)) sum -= self(self, e);
    });
    memo.emplace(x, sum);
    return sum;
  };
  return mu(mu, d);
}

/// x(C) = sum over D in B_C of (-1)^{|S_C(D)|} back stable slide of D.
inline BackSlideExpansion monomial_to_backslides(const NonincreasingWord& c) {
  BackSlideExpansion out;
  for (const auto& cert : b_set(c)) out.add(cert.word.nvector(), cert.marks.size() % 2 == 0 ? 1 : -1);
  return out;
}

/// The same signed sum restricted to words with positive letters.
inline SlideExpansion monomial_to_slides(const NonincreasingWord& c) {
  if (!c.all_positive()) throw validation_error("monomial_to_slides needs positive letters, got " + to_string(c));
  SlideExpansion out;
  for (const auto& cert : b_set(c)) {
    if (cert.word.all_positive()) out.add(cert.word.nvector(), cert.marks.size() % 2 == 0 ? 1 : -1);
  }
  return out;
}

}  // namespace slidekit
