#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "levired/rootsys.hpp"

namespace levired {

/// Weyl group element. Stored by its image of rho, which is a faithful
/// invariant; the reduced word is derived from that image. Words list the
/// simple reflections left to right, so word {2, 3} is s_3 s_4 (0-based
/// indices) and acts on a weight by applying s_4 first.
class WeylElement {
 public:
  WeylElement() = default;
  /// Identity element.
  explicit WeylElement(SystemPtr sys);

  static WeylElement from_word(SystemPtr sys, const std::vector<int>& word);
  static WeylElement from_rho_image(SystemPtr sys, IntVec image);
  /// Parses "s3 s4 s2", "s3s4s2", "s_3 s_4", or "e" (1-based indices).
  static WeylElement parse(SystemPtr sys, std::string_view text);
  static WeylElement longest(SystemPtr sys);
  static WeylElement reflection(SystemPtr sys, std::size_t positive_root_index);

  const SystemPtr& system() const { return sys_; }
  const std::vector<int>& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }
  const IntVec& rho_image() const { return rho_image_; }

  Weight act(const Weight& mu) const;
  void act_in_place(IntVec& mu) const;
  /// Action on simple-root coordinates.
  IntVec act_on_root(IntVec root_coords) const;

  WeylElement inverse() const;
  WeylElement operator*(const WeylElement& o) const;

  /// "s3 s4" (1-based), or "e".
  std::string str() const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.rho_image_ == b.rho_image_;
  }
  friend bool operator<(const WeylElement& a, const WeylElement& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.word_ < b.word_;
  }

 private:
  SystemPtr sys_;
  IntVec rho_image_;
  std::vector<int> word_;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const noexcept { return IntVecHash{}(w.rho_image()); }
};

/// Indices (into positive_roots()) of the inversion set {a > 0 : w a < 0}.
std::vector<std::size_t> inversion_set(const WeylElement& w);

/// Same set as root vectors in the simple-root basis.
std::vector<IntVec> inversion_roots(const WeylElement& w);

/// w^{-1}.0 = w^{-1} rho - rho = -(sum of the inversion set of w).
Weight affine_zero_action(const WeylElement& w);

/// Positive roots supported on I, as indices into positive_roots().
std::vector<std::size_t> levi_positive_roots(const RootSystem& sys, const std::vector<int>& I);

/// True iff w has minimal length in w W_I, i.e. Phi_w misses Delta_I^+.
bool is_minimal_coset_rep(const WeylElement& w, const std::vector<int>& I);

/// w = w_min * u with w_min minimal in w W_I, u in W_I and
/// l(w) = l(w_min) + l(u).
std::pair<WeylElement, WeylElement> min_coset_rep(const WeylElement& w, const std::vector<int>& I);

/// Every element of W, by breadth-first search on rho-images. Throws
/// ResourceLimit when |W| exceeds `cap`.
std::vector<WeylElement> enumerate_weyl_group(const SystemPtr& sys, std::size_t cap = 50000);

}  // namespace levired
