#pragma once

// Indexed forests: disjoint integer intervals [a, b], each carrying a plane
// binary tree with b - a internal nodes whose b - a + 1 leaves are labeled
// a..b from left to right. Each internal node v gets the letter l(m, i) where m
// is the leftmost leaf below v and i is v's height on that leaf's left branch.

#include <algorithm>
#include <deque>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "slidekit/core.hpp"
#include "slidekit/expansion.hpp"
#include "slidekit/poly.hpp"
#include "slidekit/poset.hpp"
#include "slidekit/slide.hpp"

namespace slidekit {

/// Plane binary tree over an interval of leaves. Internal nodes are stored in
/// preorder; a child index of -1 denotes a leaf.
class IndexedTree {
 public:
  struct Node {
    int left = -1;
    int right = -1;
    friend bool operator==(const Node&, const Node&) = default;
  };

  /// Tree given by a nested-pair expression such as "((.,.),.)" where "." is a
  /// leaf; the leaves are labeled first, first + 1, ...
  IndexedTree(int first, std::string_view expr) : lo_(first) {
    detail::Cursor cur(expr);
    int root = parse(cur);
    if (!cur.done()) cur.fail("trailing characters after tree");
    if (root < 0) throw validation_error("an indexed tree needs at least one internal node");
    hi_ = lo_ + static_cast<int>(nodes_.size());
  }

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  /// Number of internal nodes, hi - lo.
  int size() const { return static_cast<int>(nodes_.size()); }
  const std::vector<Node>& nodes() const { return nodes_; }

  std::string expression() const { return render(0); }

  /// For every internal node (preorder index): its leftmost leaf label and its
  /// height on that leaf's left branch (1 for the node directly above the leaf).
  std::vector<Letter> letters() const {
    std::vector<Letter> out(nodes_.size());
    int next_leaf = lo_;
    // Postorder so children are labeled first; leaves are met in left-to-right order.
    auto rec = [&](auto&& self, int v) -> void {
      const Node& n = nodes_[static_cast<std::size_t>(v)];
      int leftmost = 0;
      int height = 1;
      if (n.left < 0) {
        leftmost = next_leaf++;
      } else {
        self(self, n.left);
        leftmost = out[static_cast<std::size_t>(n.left)].value;
        height = out[static_cast<std::size_t>(n.left)].tier + 1;
      }
      if (n.right < 0) {
        ++next_leaf;
      } else {
        self(self, n.right);
      }
      out[static_cast<std::size_t>(v)] = Letter(leftmost, height);
    };
    rec(rec, 0);
    return out;
  }

  friend bool operator==(const IndexedTree&, const IndexedTree&) = default;

 private:
  int parse(detail::Cursor& cur) {
    if (cur.accept('.')) return -1;
    cur.expect('(');
    int me = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
    int l = parse(cur);
    cur.expect(',');
    int r = parse(cur);
    cur.expect(')');
    nodes_[static_cast<std::size_t>(me)] = {l, r};
    return me;
  }

  std::string render(int v) const {
    if (v < 0) return ".";
    const Node& n = nodes_[static_cast<std::size_t>(v)];
    return "(" + render(n.left) + "," + render(n.right) + ")";
  }

  int lo_ = 0;
  int hi_ = 0;
  std::vector<Node> nodes_;
};

class IndexedForest {
 public:
  IndexedForest() = default;
  explicit IndexedForest(std::vector<IndexedTree> trees) : trees_(std::move(trees)) {
    std::sort(trees_.begin(), trees_.end(), [](const auto& a, const auto& b) { return a.lo() < b.lo(); });
    for (std::size_t k = 1; k < trees_.size(); ++k) {
      if (trees_[k].lo() <= trees_[k - 1].hi()) {
        throw validation_error("indexed forest intervals overlap: [" + std::to_string(trees_[k - 1].lo()) + "," +
                               std::to_string(trees_[k - 1].hi()) + "] and [" + std::to_string(trees_[k].lo()) +
                               "," + std::to_string(trees_[k].hi()) + "]");
      }
    }
  }

  const std::vector<IndexedTree>& trees() const { return trees_; }
  bool empty() const { return trees_.empty(); }
  /// |F|, the number of internal nodes.
  int size() const {
    int n = 0;
    for (const auto& t : trees_) n += t.size();
    return n;
  }

  friend bool operator==(const IndexedForest&, const IndexedForest&) = default;

 private:
  std::vector<IndexedTree> trees_;
};

/// The poset on internal nodes (child below parent) with the flag Phi_F.
/// Elements are named "t<tree>n<preorder index>".
inline FlaggedPoset flag_of_forest(const IndexedForest& f) {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> covers;
  std::vector<Letter> flag;
  for (std::size_t t = 0; t < f.trees().size(); ++t) {
    const auto& tree = f.trees()[t];
    int base = static_cast<int>(names.size());
    auto letters = tree.letters();
    for (int v = 0; v < tree.size(); ++v) {
      names.push_back("t" + std::to_string(t) + "n" + std::to_string(v));
      flag.push_back(letters[static_cast<std::size_t>(v)]);
      const auto& node = tree.nodes()[static_cast<std::size_t>(v)];
      if (node.left >= 0) covers.emplace_back(base + node.left, base + v);
      if (node.right >= 0) covers.emplace_back(base + node.right, base + v);
    }
  }
  return {Poset(std::move(names), covers), std::move(flag)};
}

/// P_F = K_(F, Phi_F).
inline Polynomial forest_polynomial(const IndexedForest& f) { return k_polynomial(flag_of_forest(f)); }

/// c_i(F): number of internal nodes on the left branch ending at leaf i.
inline NVector c_of_forest(const IndexedForest& f) {
  std::map<int, int> counts;
  for (const auto& tree : f.trees()) {
    for (const auto& a : tree.letters()) ++counts[a.value];
  }
  return NVector::from_map(counts);
}

/// The unique forest with c_of_forest(F) = c. Leaves are processed from right
/// to left; the node chain above leaf i absorbs, one level at a time, the
/// subtree that starts immediately to its right.
inline IndexedForest forest_of_c(const NVector& c) {
  if (c.is_zero()) return {};
  struct Piece {
    int start;
    int end;
    std::string expr;
  };
  std::deque<Piece> pieces;
  for (int p = c.max_index() + 1; p <= c.max_index() + c.weight() + 1; ++p) pieces.push_back({p, p, "."});
  for (int i = c.max_index(); i >= c.min_index(); --i) {
    Piece cur{i, i, "."};
    for (int k = 0; k < c[i]; ++k) {
      Piece right = std::move(pieces.front());
      pieces.pop_front();
      cur = Piece{cur.start, right.end, "(" + cur.expr + "," + right.expr + ")"};
    }
    pieces.push_front(std::move(cur));
  }
  std::vector<IndexedTree> trees;
  for (const auto& piece : pieces) {
    if (piece.start != piece.end) trees.emplace_back(piece.start, piece.expr);
  }
  return IndexedForest(std::move(trees));
}

/// Linear extensions of the forest poset (decreasing labelings), as node
/// sequences bottom to top in the indexing of flag_of_forest.
inline std::vector<std::vector<int>> decreasing_labelings(const IndexedForest& f) {
  return linear_extensions(flag_of_forest(f));
}

/// P_F = sum over decreasing labelings of slide(W(labeling)); each nonzero
/// slide(W) equals F_c for c = RS(W).
inline SlideExpansion slide_expansion_of_forest(const IndexedForest& f) {
  auto poset = flag_of_forest(f);
  detail::require_polynomial_mode(poset);
  SlideExpansion out;
  for (const auto& ext : linear_extensions(poset)) {
    if (auto c = rs_normalize(word_of_extension(poset, ext), RsMode::polynomial)) out.add(*c, 1);
  }
  return out;
}

class ForestCache {
 public:
  const Polynomial& get(const NVector& c) {
    auto it = cache_.find(c);
    if (it == cache_.end()) it = cache_.emplace(c, forest_polynomial(forest_of_c(c))).first;
    return it->second;
  }

 private:
  std::map<NVector, Polynomial> cache_;
};

/// Forest basis coefficients, by triangular elimination on the revlex-leading
/// monomial x^c(F) of P_F.
inline ForestExpansion expand_in_forest_basis(const Polynomial& p, ForestCache& cache) {
  require_positive_variables(p);
  ForestExpansion out;
  Polynomial rest = p;
  while (!rest.is_zero()) {
    auto [c, k] = *rest.terms().rbegin();
    out.add(c, k);
    rest -= cache.get(c).scaled(k);
  }
  return out;
}

inline ForestExpansion expand_in_forest_basis(const Polynomial& p) {
  ForestCache cache;
  return expand_in_forest_basis(p, cache);
}

inline Polynomial from_forest_basis(const ForestExpansion& e) {
  Polynomial out;
  for (const auto& [c, k] : e.terms()) out += forest_polynomial(forest_of_c(c)).scaled(k);
  return out;
}

}  // namespace slidekit
