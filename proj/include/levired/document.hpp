#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "levired/reduce.hpp"

namespace levired {

enum class Mode { SL, GL };

std::string to_string(Mode m);
Mode parse_mode(const std::string& text);

/// A problem as written by a user or a fixture file. GL-mode weights are
/// weakly decreasing integer sequences of length rank + 1.
struct ProblemDocument {
  std::string name;
  std::string group;
  Mode mode = Mode::SL;
  std::vector<IntVec> factors;
  std::optional<IntVec> target;
  std::optional<std::vector<int>> I;  // 1-based, as written
  std::vector<std::string> words;
  std::optional<std::string> w;
  std::optional<Integer> expect_mult;
  std::vector<std::string> expect_reduced;     // SL coordinates, "|" between Levi factors
  std::vector<std::string> expect_reduced_gl;  // GL blocks of size at least two

  SystemPtr system() const;
  bool has_weights() const { return !factors.empty() || target.has_value(); }
  bool has_face() const { return I.has_value() || !words.empty() || w.has_value(); }
  /// Converted to fundamental-weight coordinates; validates GL sums.
  MultiplicityProblem problem() const;
  FaceDatum face() const;
  std::vector<WeylElement> factor_elements() const;
  WeylElement target_element() const;
};

/// Successive differences of a weakly decreasing sequence.
Weight gl_to_sl(const IntVec& glw);

/// Applies x^{-1} to a GL weight (simple reflections swap neighbours), then
/// cuts it into the blocks of consecutive positions joined by nodes of I.
/// Blocks of size one are dropped; the rest match the Levi components.
std::vector<IntVec> gl_restrict(const WeylElement& x, const IntVec& glw, const std::vector<int>& I);

/// "32,28,16|26,10,0".
std::string format_blocks(const std::vector<IntVec>& blocks);

/// "4,2,10" or "4 2 10" or "(4,2,10)".
IntVec parse_int_list(const std::string& text, const std::string& what);
/// Items separated by ';'.
std::vector<std::string> split_items(const std::string& text);

/// Fixture files hold "key: value" lines; blocks are separated by blank lines
/// or "---", and '#' starts a comment.
std::vector<ProblemDocument> parse_documents(std::istream& in, const std::string& source);
std::vector<ProblemDocument> load_documents(const std::string& path);

}  // namespace levired
