#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

#include "levired/numeric.hpp"
#include "levired/rootsys.hpp"

namespace levired {

/// A decomposed representation: dominant highest weight -> multiplicity.
class Character {
 public:
  using Map = std::map<Weight, Integer>;

  Character() = default;
  explicit Character(Map entries);

  const Map& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  /// Multiplicity of V_mu (0 if absent).
  Integer multiplicity(const Weight& mu) const;
  void add(const Weight& mu, const Integer& m);
  /// Sum of multiplicity * dim over all entries.
  Integer total_dimension(const RootSystem& sys) const;

  friend bool operator==(const Character&, const Character&) = default;

 private:
  Map entries_;
};

/// Freudenthal table for V_lambda: multiplicities of every dominant weight.
/// Weights below lambda in other chambers are looked up through their
/// dominant conjugate.
class WeightMultTable {
 public:
  WeightMultTable(SystemPtr sys, Weight lambda);

  const SystemPtr& system() const { return sys_; }
  const Weight& highest_weight() const { return lambda_; }

  /// Multiplicity of an arbitrary integral weight.
  Integer multiplicity(const IntVec& beta) const;
  Integer multiplicity(const Weight& beta) const { return multiplicity(beta.coords()); }

  /// Dominant weights with their multiplicities, highest first.
  const std::vector<std::pair<IntVec, Integer>>& dominant() const { return dominant_; }
  /// Every weight (all Weyl conjugates), with multiplicities.
  std::vector<std::pair<IntVec, Integer>> all_weights() const;
  std::size_t distinct_weight_count() const;
  Integer dimension() const;

 private:
  SystemPtr sys_;
  Weight lambda_;
  std::vector<std::pair<IntVec, Integer>> dominant_;
  std::unordered_map<IntVec, std::size_t, IntVecHash> index_;
};

/// Shared, memoised table for (system, lambda). Safe for concurrent callers.
std::shared_ptr<const WeightMultTable> weight_table(const SystemPtr& sys, const Weight& lambda);

/// Orbit of a dominant weight.
std::vector<IntVec> weyl_orbit(const RootSystem& sys, const IntVec& dominant);

/// Weyl dimension formula; lambda must be dominant.
Integer weyl_dim(const RootSystem& sys, const Weight& lambda);

/// Multiplicity of beta in V_lambda.
Integer weight_multiplicity(const SystemPtr& sys, const Weight& lambda, const Weight& beta);

/// V_lambda (x) V_mu by the rho-shifted reflection (Klimyk) sum over the
/// weights of the smaller factor. Product systems are decomposed factor-wise.
Character tensor_decompose(const SystemPtr& sys, const Weight& lambda, const Weight& mu);

/// Multiplicity of V_target in V_lambda (x) V_mu from the alternating sum
/// over the W-orbit of target + rho, using the weight table of mu.
Integer pair_multiplicity(const SystemPtr& sys, const Weight& lambda, const Weight& mu, const Weight& target);

/// mult(V_target, V_f1 (x) ... (x) V_fk).
Integer multi_tensor_multiplicity(const SystemPtr& sys, const std::vector<Weight>& factors, const Weight& target);

struct OracleOptions {
  /// Refuse when (#weights of lambda) * (#weights of mu) exceeds this.
  std::size_t max_weight_pairs = 4'000'000;
};

/// Independent check of tensor_decompose: multiplies the full formal
/// characters and peels off highest weights. Throws ResourceLimit above the
/// size cap.
Character character_product_oracle(const SystemPtr& sys, const Weight& lambda, const Weight& mu,
                                   const OracleOptions& opts = {});

/// -w0 lambda, the highest weight of the dual representation.
Weight dual_weight(const SystemPtr& sys, const Weight& lambda);

}  // namespace levired
