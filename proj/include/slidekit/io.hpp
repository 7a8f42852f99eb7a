#pragma once

// JSON documents for posets, forests and back stable elements, and the
// machine-readable output format used by the CLI.

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "slidekit/backstable.hpp"
#include "slidekit/core.hpp"
#include "slidekit/expansion.hpp"
#include "slidekit/forest.hpp"
#include "slidekit/poly.hpp"
#include "slidekit/poset.hpp"

namespace slidekit::io {

using json = nlohmann::json;

inline json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("malformed JSON: ") + e.what());
  }
}

namespace detail {

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw parse_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline int to_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw parse_error(std::string(what) + " must be an integer");
  return j.get<int>();
}

inline Letter letter_of(const json& j) {
  if (j.is_string()) {
    slidekit::detail::Cursor cur(j.get<std::string>());
    Letter a = parse_letter(cur);
    if (!cur.done()) cur.fail("trailing characters after letter");
    return a;
  }
  if (!j.is_array() || j.size() != 2) throw parse_error("flag entries are [value, tier] or \"l(i,j)\"");
  return Letter(to_int(j[0], "flag value"), to_int(j[1], "flag tier"));
}

inline NVector nvector_of(const json& j) {
  if (j.is_string()) return parse_nvector(j.get<std::string>());
  if (!j.is_object()) throw parse_error("exponents are an N-vector string or an index -> count object");
  std::map<int, int> m;
  for (const auto& [k, v] : j.items()) {
    int n = to_int(v, "exponent");
    if (n < 0) throw validation_error("negative exponent");
    m[slidekit::detail::parse_int(k)] += n;
  }
  return NVector::from_map(m);
}

inline json nvector_json(const NVector& c) {
  json out = json::object();
  for (auto [i, n] : c.entries()) out[std::to_string(i)] = n;
  return out;
}

}  // namespace detail

/// {"elements": [...], "covers": [["a","b"], ["c","b","strict"]], "flag": {"a": [4,1]}}.
/// A cover [u, v] means u is covered by v. An optional third entry "strict" or
/// "weak" is checked against the flag; strictness is always derived from it.
inline FlaggedPoset poset_from_json(const json& j) {
  std::vector<std::string> names;
  for (const auto& e : detail::field(j, "elements")) {
    if (!e.is_string()) throw parse_error("element ids must be strings");
    names.push_back(e.get<std::string>());
  }
  std::map<std::string, Letter> flag;
  for (const auto& [id, v] : detail::field(j, "flag").items()) flag.emplace(id, detail::letter_of(v));
  std::vector<std::pair<std::string, std::string>> covers;
  std::vector<std::string> notes;
  const json empty = json::array();
  const json& cov = j.contains("covers") ? j.at("covers") : empty;
  for (const auto& c : cov) {
    if (!c.is_array() || c.size() < 2 || c.size() > 3 || !c[0].is_string() || !c[1].is_string()) {
      throw parse_error("covers are [lower, upper] or [lower, upper, \"strict\"|\"weak\"]");
    }
    covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    notes.push_back(c.size() == 3 ? c[2].get<std::string>() : "");
  }
  FlaggedPoset p(names, covers, flag);
  for (std::size_t k = 0; k < covers.size(); ++k) {
    if (notes[k].empty()) continue;
    if (notes[k] != "strict" && notes[k] != "weak") throw parse_error("unknown cover annotation '" + notes[k] + "'");
    bool strict = flag.at(covers[k].first) > flag.at(covers[k].second);
    if (strict != (notes[k] == "strict")) {
      throw validation_error("cover " + covers[k].first + " < " + covers[k].second + " is annotated " + notes[k] +
                             " but the flag makes it " + (strict ? "strict" : "weak"));
    }
  }
  return p;
}

/// {"trees": [{"interval": [a, b], "tree": "((.,.),.)"}]}.
inline IndexedForest forest_from_json(const json& j) {
  std::vector<IndexedTree> trees;
  for (const auto& t : detail::field(j, "trees")) {
    const json& iv = detail::field(t, "interval");
    if (!iv.is_array() || iv.size() != 2) throw parse_error("interval must be [a, b]");
    int a = detail::to_int(iv[0], "interval start");
    int b = detail::to_int(iv[1], "interval end");
    const json& expr = detail::field(t, "tree");
    if (!expr.is_string()) throw parse_error("tree must be a nested-pair string");
    IndexedTree tree(a, expr.get<std::string>());
    if (tree.hi() != b) {
      throw validation_error("tree " + tree.expression() + " on [" + std::to_string(a) + "," + std::to_string(b) +
                             "] needs " + std::to_string(b - a) + " internal nodes");
    }
    trees.push_back(std::move(tree));
  }
  return IndexedForest(std::move(trees));
}

inline json forest_to_json(const IndexedForest& f) {
  json trees = json::array();
  for (const auto& t : f.trees()) trees.push_back({{"interval", {t.lo(), t.hi()}}, {"tree", t.expression()}});
  return {{"trees", trees}};
}

/// {"terms": [{"F": [2,1], "x": "1|0,1", "coeff": 1}]}; "F" and "x" may be omitted.
inline BackQSymElement element_from_json(const json& j) {
  BackQSymElement f;
  for (const auto& t : detail::field(j, "terms")) {
    std::vector<int> parts;
    if (t.contains("F")) {
      for (const auto& p : t.at("F")) parts.push_back(detail::to_int(p, "composition part"));
    }
    NVector c = t.contains("x") ? detail::nvector_of(t.at("x")) : NVector{};
    coeff_t k = 1;
    if (t.contains("coeff")) {
      if (!t.at("coeff").is_number_integer()) throw parse_error("coeff must be an integer");
      k = t.at("coeff").get<coeff_t>();
    }
    f.add(Composition(parts), c, k);
  }
  return f;
}

inline json to_json(const Polynomial& p) {
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    terms.push_back({{"x", detail::nvector_json(it->first)}, {"coeff", it->second}});
  }
  return {{"type", "polynomial"}, {"terms", terms}};
}

inline json to_json(const Expansion& e, const std::string& basis) {
  json terms = json::array();
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
    terms.push_back({{"index", detail::nvector_json(it->first)}, {"coeff", it->second}});
  }
  return {{"type", "expansion"}, {"basis", basis}, {"terms", terms}};
}

inline json to_json(const BackQSymElement& f) {
  json terms = json::array();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    terms.push_back({{"F", it->first.alpha.parts()}, {"x", detail::nvector_json(it->first.c)}, {"coeff", it->second}});
  }
  return {{"type", "element"}, {"terms", terms}};
}

}  // namespace slidekit::io
