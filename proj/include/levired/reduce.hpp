#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "levired/numeric.hpp"
#include "levired/reps.hpp"
#include "levired/rootsys.hpp"
#include "levired/schubert.hpp"
#include "levired/weyl.hpp"

namespace levired {

/// A face of the tensor-product cone: simple roots I (0-based, sorted) and
/// Weyl elements w_1..w_k, w.
struct FaceDatum {
  SystemPtr system;
  std::vector<int> I;
  std::vector<WeylElement> ws;
  WeylElement w;

  /// Normalises and validates I; throws InputError on bad indices or systems.
  static FaceDatum make(SystemPtr sys, std::vector<int> I, std::vector<WeylElement> ws, WeylElement w);
  std::string str() const;
};

/// mult(V_target, V_f1 (x) ... (x) V_fk) over `system`.
struct MultiplicityProblem {
  SystemPtr system;
  std::vector<Weight> factors;
  Weight target;

  /// Throws InputError unless every weight is dominant of the right length.
  void validate() const;
  Integer multiplicity() const { return multi_tensor_multiplicity(system, factors, target); }
};

struct ReducedProblem {
  SystemPtr levi_system;
  std::vector<Weight> factors;
  Weight target;
  FaceDatum provenance;

  MultiplicityProblem as_problem() const { return {levi_system, factors, target}; }
};

struct SpanCheck {
  bool in_span = false;
  RootCoords coords;
};

/// Writes gamma in the simple-root basis; true iff every coordinate outside
/// I vanishes.
SpanCheck in_span_I(const RootSystem& sys, const Weight& gamma, const std::vector<int>& I);

struct FaceReport {
  bool cond_i = false;
  std::vector<bool> minimal;  // per w_i, then w
  bool cond_ii_length = false;
  bool cond_ii_intersection = false;
  Integer intersection = 0;
  std::string intersection_note;
  bool disjoint_inversions = false;
  bool cond_iii = false;
  RootCoords cond_iii_weight;  // sum_i w_i^{-1}.0 - w^{-1}.0 in the root basis

  bool theorem_applies() const { return cond_i && cond_ii_length && cond_ii_intersection; }
  bool all() const { return theorem_applies() && cond_iii; }
};

/// Evaluates the minimal-length, length-sum, intersection-number and
/// shifted-action conditions. Never throws on a failed condition; throws
/// ResourceLimit only if the Schubert computation is refused.
FaceReport check_face_conditions(const FaceDatum& fd, const SchubertOptions& opts = {});

/// sum_i w_i^{-1} mu_i - w^{-1} mu.
Weight face_defect(const FaceDatum& fd, const MultiplicityProblem& prob);

/// True iff face_defect lies in the rational span of I.
bool on_face(const FaceDatum& fd, const MultiplicityProblem& prob);

/// Coordinates at I of w_i^{-1} mu_i and w^{-1} mu, as weights of the Levi.
/// Throws PreconditionFailed when the problem is off the face or some w_i is
/// not a minimal coset representative.
ReducedProblem restrict_problem(const FaceDatum& fd, const MultiplicityProblem& prob);

struct VerifyReport {
  Integer mult_big = 0;
  Integer mult_small = 0;
  bool equal = false;
};

/// Computes both sides independently. Requires the minimal-length and
/// intersection conditions and on_face; the shifted-action condition is not needed.
VerifyReport verify_reduction(const FaceDatum& fd, const MultiplicityProblem& prob, const SchubertOptions& opts = {});

struct BoundReport {
  Integer mult_big = 0;
  Integer mult_small = 0;
  Integer intersection = 0;
  bool bound_holds = false;
};

/// For data whose intersection number is positive but possibly above one:
/// mult_big <= mult_small.
BoundReport reduce_or_bound(const FaceDatum& fd, const MultiplicityProblem& prob, const SchubertOptions& opts = {});

/// Minimal coset representatives of ws and w modulo W_I.
FaceDatum rule_for_subset(const SystemPtr& sys, const std::vector<WeylElement>& ws, const WeylElement& w,
                          const std::vector<int>& I);

/// One datum per subset of the simple roots, ordered by bitmask. Requires the
/// inversion sets of ws to partition that of w.
std::vector<FaceDatum> generate_rules(const SystemPtr& sys, const std::vector<WeylElement>& ws, const WeylElement& w);

/// Splits fd through the codimension-one face with I' = (all roots) \ {j},
/// for a simple root j not in I. The residual datum lives on the Levi of I'
/// (with indices renumbered) and restricting through both equals
/// restricting through fd.
std::pair<FaceDatum, FaceDatum> factor_rule(const FaceDatum& fd, int j);

/// n - |I|.
int face_codimension(const FaceDatum& fd);

struct SampleOptions {
  Coord max_entry = 6;
  bool strictly_dominant = false;
  /// Also require the target to lie below the sum of the factors, which
  /// the nonzero multiplicities need.
  bool below_sum = true;
  std::size_t max_attempts = 200000;
};

/// A random problem with the given number of factors lying on the face of fd.
/// Deterministic given the generator state. Throws ResourceLimit if no
/// sample is found within the attempt budget.
MultiplicityProblem sample_on_face(const FaceDatum& fd, std::mt19937_64& rng, const SampleOptions& opts = {});

}  // namespace levired
