#pragma once

// Command-line front end. run() parses the arguments, dispatches to the
// library, and maps errors to exit codes: 2 for malformed input, 3 for input
// that parses but violates a precondition, 4 for coefficient overflow.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "slidekit/backstable.hpp"
#include "slidekit/core.hpp"
#include "slidekit/errors.hpp"
#include "slidekit/forest.hpp"
#include "slidekit/io.hpp"
#include "slidekit/kostka.hpp"
#include "slidekit/poly.hpp"
#include "slidekit/poset.hpp"
#include "slidekit/slide.hpp"
#include "slidekit/verify.hpp"

namespace slidekit::cli {

inline constexpr const char* verify_bounds_env = "SLIDEKIT_VERIFY_BOUNDS";

struct Window {
  int lo;
  int hi;
};

/// "lo..hi", e.g. "-3..4".
inline Window parse_window(std::string_view text) {
  auto dots = text.find("..");
  if (dots == std::string_view::npos) throw parse_error("--vars expects lo..hi, got '" + std::string(text) + "'");
  Window w{detail::parse_int(text.substr(0, dots)), detail::parse_int(text.substr(dots + 2))};
  if (w.lo > w.hi) throw validation_error("--vars window " + std::string(text) + " is empty");
  return w;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Printer {
 public:
  Printer(std::ostream& out, bool machine, std::optional<Window> window)
      : out_(out), machine_(machine), window_(window) {}

  void polynomial(const Polynomial& p) {
    if (machine_) {
      out_ << io::to_json(p).dump() << '\n';
    } else {
      out_ << to_string(p) << '\n';
    }
  }

  void expansion(const Expansion& e, const std::string& basis, const std::string& symbol) {
    if (machine_) {
      out_ << io::to_json(e, basis).dump() << '\n';
    } else {
      out_ << to_string(e, symbol) << '\n';
    }
  }

  /// A back stable element; with a window it is shown as the truncated polynomial.
  void element(const BackQSymElement& f) {
    if (window_) return polynomial(evaluate_window(f, window_->lo, window_->hi));
    if (machine_) {
      out_ << io::to_json(f).dump() << '\n';
    } else {
      out_ << to_string(f) << '\n';
    }
  }

  /// A back slide expansion; with a window it is shown as the truncated polynomial.
  void back_expansion(const BackSlideExpansion& e) {
    if (window_) return polynomial(evaluate_window(from_backslide_basis(e), window_->lo, window_->hi));
    expansion(e, "backslide", "B");
  }

  void labeled(const std::string& label, const std::function<void()>& body) {
    if (!machine_) out_ << label << ": ";
    body();
  }

  std::ostream& out() { return out_; }
  bool machine() const { return machine_; }

 private:
  std::ostream& out_;
  bool machine_;
  std::optional<Window> window_;
};

inline std::string forest_text(const IndexedForest& f) {
  if (f.empty()) return "empty forest\n";
  std::string out;
  for (const auto& t : f.trees()) {
    out += "[" + std::to_string(t.lo()) + "," + std::to_string(t.hi()) + "] " + t.expression() + "\n";
  }
  return out;
}

inline std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string s;
  for (const auto& t : tokens) s += (s.empty() ? "" : " ") + t;
  return s;
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Flagged P-partitions, slide and forest polynomials, back stable slides"};
  app.name("slidekit");
  app.require_subcommand(1);
  std::string format = "text";
  std::string vars;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--vars", vars, "Truncate back stable output to x_lo..x_hi (lo..hi)");

  std::string file;
  std::string text;
  std::string text2;
  std::vector<std::string> tokens;
  bool back = false;
  bool positive = false;
  std::string module;

  auto* kpoly = app.add_subcommand("kpoly", "K polynomial of a flagged poset file and its slide expansion");
  kpoly->add_option("file", file, "Poset JSON file")->required();
  kpoly->add_flag("--back", back, "Back stable version, as a back slide expansion");

  auto* slide = app.add_subcommand("slide", "Slide polynomials");
  slide->require_subcommand(1);
  auto* slide_word = slide->add_subcommand("word", "slide(W) for a word of letters l(i,j)");
  slide_word->add_option("letters", text, "Word, e.g. \"l(3,1) l(3,2) l(1,1)\"")->required();
  auto* slide_expand = slide->add_subcommand("expand", "Expand a polynomial in the slide basis");
  slide_expand->add_option("poly", text, "Polynomial, e.g. \"x(1)*x(2)^2\"")->required();
  auto* slide_poly = slide->add_subcommand("poly", "The slide polynomial F_c");
  slide_poly->add_option("nvector", text, "N-vector, e.g. 0,2,0,1")->required();

  auto* forest = app.add_subcommand("forest", "Forest polynomials");
  forest->require_subcommand(1);
  auto* forest_poly = forest->add_subcommand("poly", "P_F for a forest file");
  forest_poly->add_option("file", file, "Forest JSON file")->required();
  auto* forest_slides = forest->add_subcommand("slides", "Slide expansion of P_F for a forest file");
  forest_slides->add_option("file", file, "Forest JSON file")->required();
  auto* forest_ofc = forest->add_subcommand("ofc", "The forest with a given c(F)");
  forest_ofc->add_option("nvector", text, "N-vector")->required();
  auto* forest_expand = forest->add_subcommand("expand", "Expand a polynomial in the forest basis");
  forest_expand->add_option("poly", text, "Polynomial")->required();

  auto* backc = app.add_subcommand("back", "Back stable slides");
  backc->require_subcommand(1);
  auto* back_slide = backc->add_subcommand("slide", "A back stable slide in the tensor basis");
  back_slide->add_option("nvector", text, "N-vector, e.g. \"1,2|0,1\"")->required();
  auto* back_mul = backc->add_subcommand("mul", "Product of two back stable slides");
  back_mul->add_option("c", text, "N-vector")->required();
  back_mul->add_option("d", text2, "N-vector")->required();
  auto* back_expand = backc->add_subcommand("expand", "Expand an element file in the back slide basis");
  back_expand->add_option("file", file, "Element JSON file")->required();

  auto* kostka = app.add_subcommand("kostka", "Nonincreasing words, Moebius function, monomial expansions");
  kostka->require_subcommand(1);
  auto* kostka_expand = kostka->add_subcommand("expand", "Signed expansion of the monomial x(C)");
  kostka_expand->add_option("word", tokens, "Word, as letters or one comma-separated token")->required();
  kostka_expand->add_flag("--positive", positive, "Expand into ordinary slides (positive letters only)");
  auto* kostka_bset = kostka->add_subcommand("bset", "The set B_C with mark sets");
  kostka_bset->add_option("word", tokens, "Word")->required();
  auto* kostka_mobius = kostka->add_subcommand("mobius", "mu(D, C)");
  kostka_mobius->add_option("D", text, "Lower word")->required();
  kostka_mobius->add_option("C", text2, "Upper word")->required();
  auto* kostka_join = kostka->add_subcommand("join", "Least upper bound");
  kostka_join->add_option("C", text, "Word")->required();
  kostka_join->add_option("D", text2, "Word")->required();
  auto* kostka_meet = kostka->add_subcommand("meet", "Greatest lower bound");
  kostka_meet->add_option("C", text, "Word")->required();
  kostka_meet->add_option("D", text2, "Word")->required();

  auto* verify = app.add_subcommand("verify", "Run the property suites");
  verify->add_option("--module", module, "Only properties of this module");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "slidekit: " << e.what() << '\n';
    return 2;
  }

  try {
    std::optional<Window> window;
    if (!vars.empty()) window = parse_window(vars);
    Printer print(out, format == "machine", window);

    if (*kpoly) {
      auto p = io::poset_from_json(io::parse_document(read_file(file)));
      if (back) {
        print.back_expansion(back_k_expansion(p));
      } else {
        auto k = k_polynomial(p);
        if (print.machine()) {
          out << nlohmann::json{{"polynomial", io::to_json(k)}, {"slides", io::to_json(expand_in_slide_basis(k), "slide")}}.dump()
              << '\n';
        } else {
          print.labeled("K", [&] { print.polynomial(k); });
          print.labeled("slides", [&] { print.expansion(expand_in_slide_basis(k), "slide", "S"); });
        }
      }
    } else if (*slide_word) {
      print.polynomial(slide_series(parse_word(text)));
    } else if (*slide_expand) {
      print.expansion(expand_in_slide_basis(parse_polynomial(text)), "slide", "S");
    } else if (*slide_poly) {
      print.polynomial(slide_polynomial(parse_nvector(text)));
    } else if (*forest_poly) {
      print.polynomial(forest_polynomial(io::forest_from_json(io::parse_document(read_file(file)))));
    } else if (*forest_slides) {
      print.expansion(slide_expansion_of_forest(io::forest_from_json(io::parse_document(read_file(file)))), "slide", "S");
    } else if (*forest_ofc) {
      auto f = forest_of_c(parse_nvector(text));
      if (print.machine()) {
        out << io::forest_to_json(f).dump() << '\n';
      } else {
        out << forest_text(f);
      }
    } else if (*forest_expand) {
      print.expansion(expand_in_forest_basis(parse_polynomial(text)), "forest", "P");
    } else if (*back_slide) {
      print.element(backslide(parse_nvector(text)));
    } else if (*back_mul) {
      print.back_expansion(multiply_backslides(parse_nvector(text), parse_nvector(text2)));
    } else if (*back_expand) {
      print.back_expansion(expand_in_backslide_basis(io::element_from_json(io::parse_document(read_file(file)))));
    } else if (*kostka_expand) {
      auto c = parse_nonincreasing_word(join_tokens(tokens));
      if (positive) {
        print.expansion(monomial_to_slides(c), "slide", "S");
      } else {
        print.back_expansion(monomial_to_backslides(c));
      }
    } else if (*kostka_bset) {
      auto c = parse_nonincreasing_word(join_tokens(tokens));
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& cert : b_set(c)) {
        if (print.machine()) {
          rows.push_back({{"word", cert.word.letters()}, {"marks", cert.marks}});
        } else {
          std::string marks;
          for (int m : cert.marks) marks += (marks.empty() ? "" : ",") + std::to_string(m);
          out << to_string(cert.word) << " {" << marks << "}\n";
        }
      }
      if (print.machine()) out << rows.dump() << '\n';
    } else if (*kostka_mobius) {
      out << mobius(parse_nonincreasing_word(text), parse_nonincreasing_word(text2)) << '\n';
    } else if (*kostka_join || *kostka_meet) {
      auto c = parse_nonincreasing_word(text);
      auto d = parse_nonincreasing_word(text2);
      auto e = *kostka_join ? join(c, d) : meet(c, d);
      if (print.machine()) {
        out << nlohmann::json(e.letters()).dump() << '\n';
      } else {
        out << to_string(e) << '\n';
      }
    } else if (*verify) {
      const char* env = std::getenv(verify_bounds_env);
      auto bounds = verify::parse_bounds(env ? env : "");
      bool ok = true;
      for (const auto& r : verify::run_all(bounds, module)) {
        ok = ok && r.passed;
        out << (r.passed ? "PASS " : "FAIL ") << r.module << ": " << r.name << " (" << r.cases << " cases)";
        if (!r.passed) out << " -- " << r.failure;
        out << '\n';
      }
      return ok ? 0 : 1;
    }
    return 0;
  } catch (const parse_error& e) {
    err << "slidekit: parse error: " << e.what() << '\n';
    return 2;
  } catch (const validation_error& e) {
    err << "slidekit: invalid input: " << e.what() << '\n';
    return 3;
  } catch (const std::overflow_error& e) {
    err << "slidekit: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    err << "slidekit: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace slidekit::cli
