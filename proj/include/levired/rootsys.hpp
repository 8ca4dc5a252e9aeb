#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "levired/numeric.hpp"

namespace levired {

enum class Family { A, B, C, D };

struct SimpleType {
  Family family;
  int rank;

  friend bool operator==(const SimpleType&, const SimpleType&) = default;
};

std::string to_string(const SimpleType& t);

/// Parses "A5", "D5", "A2xA2", "B3 x C2". Ranks are validated
/// (A >= 1, B/C >= 2, D >= 3).
std::vector<SimpleType> parse_type_label(std::string_view label);

/// A weight in fundamental-weight coordinates.
class Weight {
 public:
  Weight() = default;
  explicit Weight(IntVec coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<Coord> coords) : coords_(coords) {}

  std::size_t size() const { return coords_.size(); }
  const IntVec& coords() const { return coords_; }
  IntVec& coords() { return coords_; }
  Coord operator[](std::size_t i) const { return coords_[i]; }
  Coord& operator[](std::size_t i) { return coords_[i]; }

  bool is_dominant() const;
  bool is_strictly_dominant() const;
  bool is_zero() const;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight operator*(Coord k) const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  std::string str() const { return "(" + join(coords_) + ")"; }

 private:
  IntVec coords_;
};

/// A vector in the simple-root basis with exact rational entries.
class RootCoords {
 public:
  RootCoords() = default;
  explicit RootCoords(std::vector<Rational> c) : coords_(std::move(c)) {}

  std::size_t size() const { return coords_.size(); }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  bool is_integral() const;
  bool is_zero() const;

  friend bool operator==(const RootCoords&, const RootCoords&) = default;

  std::string str() const;

 private:
  std::vector<Rational> coords_;
};

/// One simple factor of a (possibly reducible) root system. `nodes` lists the
/// ambient simple-root indices in the factor's own Bourbaki labelling order.
struct Component {
  SimpleType type;
  std::vector<int> nodes;
};

class RootSystem;
using SystemPtr = std::shared_ptr<const RootSystem>;

/// Classical root system (product of A/B/C/D factors) given by its Cartan
/// matrix a_ij = <alpha_i, alpha_j^vee>. Row i of the Cartan matrix is
/// alpha_i in fundamental-weight coordinates. Immutable after construction.
class RootSystem {
 public:
  /// Block-diagonal Bourbaki-labelled system for the given factors.
  static SystemPtr build(const std::vector<SimpleType>& factors);
  static SystemPtr build(std::string_view label) { return build(parse_type_label(label)); }

  /// System for an arbitrary classical Cartan matrix (nodes need not be in
  /// Bourbaki order); factors are identified from the Dynkin diagram.
  static SystemPtr from_cartan(std::vector<std::vector<int>> cartan);

  int rank() const { return rank_; }
  const std::vector<Component>& components() const { return components_; }
  /// "A2xA2", "D4", "trivial" for rank 0.
  std::string label() const;

  int cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  const std::vector<std::vector<Rational>>& inverse_cartan_transpose() const { return inv_cartan_t_; }

  /// Relative squared lengths (alpha_i, alpha_i)/2, normalised per component
  /// so the short roots have 1.
  const std::vector<int>& symmetrizer() const { return symmetrizer_; }

  /// Positive roots in the simple-root basis, sorted by height then
  /// lexicographically. Simple roots come first.
  const std::vector<IntVec>& positive_roots() const { return pos_roots_; }
  /// Same roots in fundamental-weight coordinates.
  const std::vector<IntVec>& positive_roots_weight() const { return pos_roots_w_; }
  /// Coroots beta^vee in the simple-coroot basis, so <lambda, beta^vee> is a
  /// plain dot product with lambda's coordinates.
  const std::vector<IntVec>& positive_coroots() const { return pos_coroots_; }
  std::optional<std::size_t> find_positive_root(const IntVec& root_coords) const;

  Weight rho() const { return Weight(IntVec(rank_, 1)); }
  Weight zero() const { return Weight(IntVec(rank_, 0)); }
  Weight simple_root(int i) const { return Weight(IntVec(cartan_[i].begin(), cartan_[i].end())); }

  /// s_i in place on fundamental-weight coordinates.
  void reflect_weight(int i, IntVec& weight) const;
  /// s_i in place on simple-root coordinates.
  void reflect_root(int i, IntVec& root_coords) const;

  /// Moves `weight` into the dominant chamber; returns the number of simple
  /// reflections used, which is the length of the element applied.
  int to_dominant(IntVec& weight) const;

  RootCoords to_root_basis(const Weight& mu) const;
  /// Inverse of to_root_basis; throws InputError if the result is not integral.
  Weight from_root_basis(const RootCoords& c) const;
  Weight from_root_basis(const IntVec& c) const;

  /// N * (simple-root coordinates of mu), with N = scale(); integral.
  IntVec scaled_root_coords(const IntVec& mu) const;
  Coord root_scale() const { return root_scale_; }
  /// True iff mu is a non-negative integral combination of simple roots.
  bool in_positive_root_cone(const IntVec& mu) const;

  /// Invariant form on weights, exact.
  Rational inner(const Weight& a, const Weight& b) const;
  /// Integer matrix G and scale such that scale * (a,b) = a^T G b.
  const std::vector<IntVec>& scaled_form() const { return form_; }

  /// <mu, beta^vee> for the positive root with the given index.
  Coord coroot_pairing(const IntVec& mu, std::size_t root_index) const {
    return dot(mu, pos_coroots_[root_index]);
  }

  Integer weyl_group_order() const;

  /// Sub-system on the nodes I (sorted ambient indices), kept in ambient
  /// order: coordinate t of a Levi weight is ambient coordinate I[t].
  SystemPtr levi(const std::vector<int>& I) const;

  /// Simple system for component c together with its ambient node list.
  SystemPtr component_system(std::size_t c) const;

  /// Identity of the underlying Cartan matrix (used as a cache key).
  const std::string& key() const { return key_; }

 private:
  RootSystem() = default;
  void finish();

  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<Component> components_;
  std::vector<int> symmetrizer_;
  std::vector<std::vector<Rational>> inv_cartan_t_;
  std::vector<IntVec> inv_cartan_t_scaled_;
  Coord root_scale_ = 1;
  std::vector<IntVec> form_;
  std::vector<IntVec> pos_roots_;
  std::vector<IntVec> pos_roots_w_;
  std::vector<IntVec> pos_coroots_;
  std::string key_;
};

/// Number of positive roots for a simple type.
int positive_root_count(const SimpleType& t);

/// Splits an ambient weight into the coordinates of component c (in the
/// component's Bourbaki order).
Weight component_weight(const RootSystem& sys, std::size_t c, const Weight& mu);

/// Formats a weight with "|" between Levi components, e.g. "4,12|16,10".
std::string format_by_components(const RootSystem& sys, const Weight& mu);

}  // namespace levired
