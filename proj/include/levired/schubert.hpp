#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "levired/numeric.hpp"
#include "levired/polynomial.hpp"
#include "levired/rootsys.hpp"
#include "levired/weyl.hpp"

namespace levired {

/// Linear combination of Schubert classes [Omega_v] in H*(G/B), where
/// [Omega_v] has codimension l(v).
class SchubertExpr {
 public:
  SchubertExpr() = default;
  explicit SchubertExpr(SystemPtr sys) : sys_(std::move(sys)) {}
  /// The single class [Omega_w].
  static SchubertExpr schubert_class(const WeylElement& w);

  const SystemPtr& system() const { return sys_; }
  const std::map<WeylElement, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Common codimension, or -1 when empty or mixed.
  int degree() const;
  Rational coefficient(const WeylElement& w) const;
  void add(const WeylElement& w, const Rational& c);

  SchubertExpr operator+(const SchubertExpr& o) const;
  SchubertExpr operator*(const Rational& c) const;
  friend bool operator==(const SchubertExpr& a, const SchubertExpr& b) { return a.terms_ == b.terms_; }

  /// True iff every coefficient is a non-negative integer.
  bool is_positive_integral() const;
  /// "[s4 s3] + 2[s2 s3]"; "0" when empty.
  std::string str() const;

 private:
  SystemPtr sys_;
  std::map<WeylElement, Rational> terms_;
};

struct SchubertOptions {
  /// Largest number of Weyl group elements (all lengths up to the degree
  /// of the requested product) the engine is allowed to enumerate.
  std::size_t max_weyl_size = 5000;
};

/// [Omega_{s_i}] * expr by the Chevalley rule:
/// [Omega_{s_i}][Omega_v] = sum over beta > 0 with l(v s_beta) = l(v) + 1 of
/// <omega_i, beta^vee> [Omega_{v s_beta}].
SchubertExpr chevalley_multiply(int i, const SchubertExpr& expr, const SchubertOptions& opts = {});

/// [Omega_u] written in monomials of the degree-one classes:
/// map from a sorted index multiset to its rational coefficient.
std::map<std::vector<int>, Rational> monomial_expansion(const WeylElement& u, const SchubertOptions& opts = {});

/// prod_i [Omega_{w_i}] in the Schubert basis. Throws InternalError if a
/// coefficient comes out negative or fractional.
SchubertExpr schubert_product(const SystemPtr& sys, const std::vector<WeylElement>& factors,
                              const SchubertOptions& opts = {});

struct IntersectionResult {
  Integer value = 0;
  /// Empty, or a short explanation for a zero that holds for degree reasons.
  std::string note;
};

/// Coefficient of [Omega_w] in prod_i [Omega_{w_i}], i.e. the intersection
/// number of those classes with [X_w].
IntersectionResult intersection(const SystemPtr& sys, const std::vector<WeylElement>& ws, const WeylElement& w,
                                const SchubertOptions& opts = {});
inline Integer intersection_number(const SystemPtr& sys, const std::vector<WeylElement>& ws, const WeylElement& w,
                                   const SchubertOptions& opts = {}) {
  return intersection(sys, ws, w, opts).value;
}

/// True iff the inversion sets of ws partition the inversion set of w.
bool disjoint_inversion_check(const std::vector<WeylElement>& ws, const WeylElement& w);

/// Polynomial representative of [Omega_u] built from its monomial expansion.
Polynomial schubert_polynomial(const WeylElement& u, const SchubertOptions& opts = {});

/// Representative obtained from the top class prod(alpha)/|W| by divided
/// differences; needs the whole group, so only for small systems.
Polynomial schubert_polynomial_top_down(const WeylElement& u);

/// Structure constant from divided differences: d_w(prod_i P_i) where
/// l(w) equals the total degree of the P_i.
Rational divided_difference_coefficient(const WeylElement& w, const std::vector<Polynomial>& factors);

}  // namespace levired
