#pragma once

// Finite posets with labeled flags, their linear extensions and
// (P, Phi)-partitions, and the generating polynomials K_(P,Phi).
//
// Convention: a cover u < v (u below v) forces f(u) >= f(v), strictly when
// Phi(u) > Phi(v), and every value is bounded by f(u) <= val(Phi(u)).

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "slidekit/core.hpp"
#include "slidekit/poly.hpp"

namespace slidekit {

/// Finite poset given by its cover relations. Elements carry string ids and
/// are addressed internally by their index in construction order.
class Poset {
 public:
  Poset() = default;

  /// Covers are (lower, upper) index pairs. Duplicates, self-covers and cycles
  /// are rejected; covers implied by transitivity are dropped.
  Poset(std::vector<std::string> names, const std::vector<std::pair<int, int>>& covers) : names_(std::move(names)) {
    const int n = size();
    std::set<std::string> unique(names_.begin(), names_.end());
    if (static_cast<int>(unique.size()) != n) throw validation_error("poset element ids must be distinct");
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : covers) {
      if (u < 0 || v < 0 || u >= n || v >= n) throw validation_error("cover refers to an unknown element");
      if (u == v) throw validation_error("cover relates an element to itself");
      if (!seen.insert({u, v}).second) {
        throw validation_error("duplicate cover " + names_[u] + " < " + names_[v]);
      }
    }
    // Transitive closure by DFS; a cycle shows up as u reaching itself.
    std::vector<std::vector<int>> succ(n);
    for (auto [u, v] : seen) succ[u].push_back(v);
    below_.assign(n, std::vector<bool>(n, false));
    for (int s = 0; s < n; ++s) {
      std::vector<int> stack(succ[s].begin(), succ[s].end());
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        if (x == s) throw validation_error("covers contain a cycle through " + names_[s]);
        if (below_[s][x]) continue;
        below_[s][x] = true;
        for (int y : succ[x]) stack.push_back(y);
      }
    }
    // Keep (u, v) only if no w with u < w < v.
    lower_.assign(n, {});
    upper_.assign(n, {});
    for (auto [u, v] : seen) {
      bool redundant = false;
      for (int w = 0; w < n && !redundant; ++w) redundant = below_[u][w] && below_[w][v];
      if (!redundant) {
        covers_.emplace_back(u, v);
        lower_[v].push_back(u);
        upper_[u].push_back(v);
      }
    }
    // Smallest-index-first Kahn order: the fixed topological order used by enumeration.
    std::vector<int> indeg(n, 0);
    for (auto [u, v] : covers_) ++indeg[v];
    std::set<int> ready;
    for (int u = 0; u < n; ++u) {
      if (indeg[u] == 0) ready.insert(u);
    }
    while (!ready.empty()) {
      int u = *ready.begin();
      ready.erase(ready.begin());
      topo_.push_back(u);
      for (int v : upper_[u]) {
        if (--indeg[v] == 0) ready.insert(v);
      }
    }
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int u) const { return names_[u]; }
  int index_of(const std::string& id) const {
    auto it = std::find(names_.begin(), names_.end(), id);
    if (it == names_.end()) throw validation_error("unknown poset element '" + id + "'");
    return static_cast<int>(it - names_.begin());
  }

  /// Irredundant covers (lower, upper), sorted.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& lower_covers(int u) const { return lower_[u]; }
  const std::vector<int>& upper_covers(int u) const { return upper_[u]; }
  bool less(int u, int v) const { return below_[u][v]; }
  bool comparable(int u, int v) const { return u == v || below_[u][v] || below_[v][u]; }
  const std::vector<int>& topological_order() const { return topo_; }

  bool is_chain() const {
    for (int u = 0; u < size(); ++u) {
      for (int v = u + 1; v < size(); ++v) {
        if (!comparable(u, v)) return false;
      }
    }
    return true;
  }

  /// The chain ext[0] < ext[1] < ... on the same element ids.
  Poset chain(std::span<const int> ext) const {
    std::vector<std::pair<int, int>> cov;
    for (std::size_t k = 1; k < ext.size(); ++k) cov.emplace_back(ext[k - 1], ext[k]);
    return Poset(names_, cov);
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> lower_;
  std::vector<std::vector<int>> upper_;
  std::vector<std::vector<bool>> below_;
  std::vector<int> topo_;
};

/// A poset together with an injective labeled flag Phi: P -> letters.
class FlaggedPoset {
 public:
  FlaggedPoset() = default;
  FlaggedPoset(Poset poset, std::vector<Letter> flag) : poset_(std::move(poset)), flag_(std::move(flag)) {
    if (static_cast<int>(flag_.size()) != poset_.size()) throw validation_error("flag must cover every element");
    if (!is_injective(flag_)) throw validation_error("labeled flag must be injective");
  }

  /// Convenience constructor from ids, (lower, upper) id pairs and an id -> letter map.
  FlaggedPoset(const std::vector<std::string>& names, const std::vector<std::pair<std::string, std::string>>& covers,
               const std::map<std::string, Letter>& flag) {
    std::map<std::string, int> index;
    for (std::size_t k = 0; k < names.size(); ++k) index[names[k]] = static_cast<int>(k);
    auto lookup = [&](const std::string& id) {
      auto it = index.find(id);
      if (it == index.end()) throw validation_error("unknown poset element '" + id + "'");
      return it->second;
    };
    std::vector<std::pair<int, int>> cov;
    for (const auto& [u, v] : covers) cov.emplace_back(lookup(u), lookup(v));
    std::vector<Letter> letters(names.size());
    if (flag.size() != names.size()) throw validation_error("flag must cover every element");
    for (const auto& [id, a] : flag) letters[lookup(id)] = a;
    *this = FlaggedPoset(Poset(names, cov), std::move(letters));
  }

  const Poset& poset() const { return poset_; }
  int size() const { return poset_.size(); }
  const std::vector<Letter>& flag() const { return flag_; }
  const Letter& flag(int u) const { return flag_[u]; }

  /// Whether the cover u < v imposes f(u) > f(v).
  bool strict(int u, int v) const { return flag_[u] > flag_[v]; }

  bool polynomial_mode() const {
    return std::all_of(flag_.begin(), flag_.end(), [](const Letter& a) { return a.value >= 1; });
  }

  /// The flagged chain given by a linear extension; each element keeps its letter.
  FlaggedPoset chain(std::span<const int> ext) const { return {poset_.chain(ext), flag_}; }

 private:
  Poset poset_;
  std::vector<Letter> flag_;
};

/// f(u) for every element index u.
using PartitionMap = std::vector<int>;

// ---------------------------------------------------------------------------
// Linear extensions
// ---------------------------------------------------------------------------

/// All linear extensions, bottom to top, in lexicographic order of element indices.
inline std::vector<std::vector<int>> linear_extensions(const Poset& p) {
  const int n = p.size();
  std::vector<std::vector<int>> out;
  std::vector<int> missing(n, 0);  // unplaced lower covers
  for (int u = 0; u < n; ++u) missing[u] = static_cast<int>(p.lower_covers(u).size());
  std::vector<int> current;
  std::vector<bool> placed(n, false);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(current.size()) == n) {
      out.push_back(current);
      return;
    }
    for (int u = 0; u < n; ++u) {
      if (placed[u] || missing[u] != 0) continue;
      placed[u] = true;
      current.push_back(u);
      for (int v : p.upper_covers(u)) --missing[v];
      self(self);
      for (int v : p.upper_covers(u)) ++missing[v];
      current.pop_back();
      placed[u] = false;
    }
  };
  rec(rec);
  return out;
}

inline std::vector<std::vector<int>> linear_extensions(const FlaggedPoset& p) { return linear_extensions(p.poset()); }

/// The injective word Phi(v_1) ... Phi(v_r) read along a linear extension.
inline Word word_of_extension(const FlaggedPoset& p, std::span<const int> ext) {
  Word w;
  w.reserve(ext.size());
  for (int u : ext) w.push_back(p.flag(u));
  return w;
}

// ---------------------------------------------------------------------------
// (P, Phi)-partitions
// ---------------------------------------------------------------------------

namespace detail {

inline void require_polynomial_mode(const FlaggedPoset& p) {
  if (!p.polynomial_mode()) throw validation_error("flag values must be >= 1 for polynomial-mode partitions");
}

// Depth-first over the fixed topological order, values descending. The visitor
// receives the full assignment.
template <class Visit>
void for_each_partition(const FlaggedPoset& p, Visit&& visit) {
  const auto& order = p.poset().topological_order();
  const int n = p.size();
  PartitionMap f(n, 0);
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      visit(static_cast<const PartitionMap&>(f));
      return;
    }
    int u = order[depth];
    int ub = p.flag(u).value;
    for (int w : p.poset().lower_covers(u)) ub = std::min(ub, f[w] - (p.strict(w, u) ? 1 : 0));
    for (int val = ub; val >= 1; --val) {
      f[u] = val;
      self(self, depth + 1);
    }
    f[u] = 0;
  };
  rec(rec, 0);
}

inline NVector exponent_of(const PartitionMap& f) {
  std::map<int, int> counts;
  for (int v : f) ++counts[v];
  return NVector::from_map(counts);
}

}  // namespace detail

inline std::vector<PartitionMap> enumerate_partitions(const FlaggedPoset& p) {
  detail::require_polynomial_mode(p);
  std::vector<PartitionMap> out;
  detail::for_each_partition(p, [&](const PartitionMap& f) { out.push_back(f); });
  return out;
}

/// K_(P,Phi): the sum over (P,Phi)-partitions f of prod x_{f(u)}.
inline Polynomial k_polynomial(const FlaggedPoset& p) {
  detail::require_polynomial_mode(p);
  Polynomial out;
  detail::for_each_partition(p, [&](const PartitionMap& f) { out.add_term(detail::exponent_of(f), 1); });
  return out;
}

struct StanleyBlock {
  std::vector<int> extension;
  std::vector<PartitionMap> partitions;
};

/// Part(P,Phi) split as the disjoint union of Part(L,Phi) over linear extensions L.
inline std::vector<StanleyBlock> stanley_decomposition(const FlaggedPoset& p) {
  detail::require_polynomial_mode(p);
  std::vector<StanleyBlock> out;
  for (auto& ext : linear_extensions(p)) {
    StanleyBlock block{ext, enumerate_partitions(p.chain(ext))};
    out.push_back(std::move(block));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Labelings and restrictions
// ---------------------------------------------------------------------------

namespace detail {

inline void require_labeling(const Poset& p, std::span<const int> omega, std::span<const int> rho) {
  const int n = p.size();
  if (static_cast<int>(omega.size()) != n || static_cast<int>(rho.size()) != n) {
    throw validation_error("labeling and restriction must cover every element");
  }
  std::vector<int> sorted(omega.begin(), omega.end());
  std::sort(sorted.begin(), sorted.end());
  for (int k = 0; k < n; ++k) {
    if (sorted[k] != k + 1) throw validation_error("labeling must be a bijection onto {1..#P}");
  }
  for (int r : rho) {
    if (r < 1) throw validation_error("restriction values must be positive");
  }
}

}  // namespace detail

/// (LF): rho(u) > rho(v) implies omega(u) > omega(v), for all u, v.
inline bool check_lf_flag(const Poset& p, std::span<const int> omega, std::span<const int> rho) {
  detail::require_labeling(p, omega, rho);
  for (int u = 0; u < p.size(); ++u) {
    for (int v = 0; v < p.size(); ++v) {
      if (rho[u] > rho[v] && !(omega[u] > omega[v])) return false;
    }
  }
  return true;
}

/// (AB1) u < v covers imply rho(u) >= rho(v); (AB2) and rho(u) > rho(v) implies omega(u) > omega(v).
inline bool check_ab_flag(const Poset& p, std::span<const int> omega, std::span<const int> rho) {
  detail::require_labeling(p, omega, rho);
  for (auto [u, v] : p.covers()) {
    if (rho[u] < rho[v]) return false;
    if (rho[u] > rho[v] && !(omega[u] > omega[v])) return false;
  }
  return true;
}

/// Phi(u) = l(rho(u), omega(u)). Accepted when rho is an LF-flag or an AB-flag
/// for (P, omega); in both cases Part(P, Phi) = Part(P, omega, rho).
inline FlaggedPoset flag_from_omega_rho(const Poset& p, std::span<const int> omega, std::span<const int> rho) {
  if (!check_lf_flag(p, omega, rho) && !check_ab_flag(p, omega, rho)) {
    throw validation_error("restriction is neither an LF-flag nor an AB-flag for the labeling");
  }
  std::vector<Letter> flag;
  for (int u = 0; u < p.size(); ++u) flag.emplace_back(rho[u], omega[u]);
  return {p, std::move(flag)};
}

struct LabelingRestriction {
  std::vector<int> omega;
  std::vector<int> rho;
};

/// omega orders elements like their letters; rho = val o Phi.
inline LabelingRestriction omega_rho_from_flag(const FlaggedPoset& p) {
  const int n = p.size();
  std::vector<int> idx(n);
  for (int u = 0; u < n; ++u) idx[u] = u;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return p.flag(a) < p.flag(b); });
  LabelingRestriction out{std::vector<int>(n), std::vector<int>(n)};
  for (int k = 0; k < n; ++k) out.omega[idx[k]] = k + 1;
  for (int u = 0; u < n; ++u) out.rho[u] = p.flag(u).value;
  return out;
}

/// The composition of r whose subset is des(omega) = {i : omega(v_i) > omega(v_{i+1})}
/// along the chain v_1 < ... < v_r.
inline Composition descent_composition(const Poset& chain, std::span<const int> omega) {
  if (!chain.is_chain()) throw validation_error("descent_composition requires a chain");
  if (static_cast<int>(omega.size()) != chain.size()) throw validation_error("labeling must cover every element");
  const auto& order = chain.topological_order();
  std::vector<int> des;
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (omega[order[i - 1]] > omega[order[i]]) des.push_back(static_cast<int>(i));
  }
  return subset_composition(des, chain.size());
}

}  // namespace slidekit
