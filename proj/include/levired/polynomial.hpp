#pragma once

#include <map>
#include <string>
#include <vector>

#include "levired/numeric.hpp"
#include "levired/rootsys.hpp"

namespace levired {

/// Polynomial with rational coefficients in the simple roots alpha_1..alpha_n,
/// viewed as linear coordinates on the Cartan subalgebra.
class Polynomial {
 public:
  using Exponents = std::vector<int>;

  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}
  static Polynomial constant(int nvars, const Rational& c);
  /// sum_j c_j alpha_j
  static Polynomial linear(const std::vector<Rational>& coeffs);

  int nvars() const { return nvars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree, or -1 for the zero polynomial.
  int degree() const;
  /// Constant term.
  Rational constant_term() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& o);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  void add_term(const Exponents& e, const Rational& c);
  std::string str() const;

 private:
  int nvars_ = 0;
  std::map<Exponents, Rational> terms_;
};

/// s_i acting on polynomials in the simple roots.
Polynomial reflect(const RootSystem& sys, int i, const Polynomial& f);

/// (f - s_i f) / alpha_i; the division is exact.
Polynomial divided_difference(const RootSystem& sys, int i, const Polynomial& f);

/// Applies the operators for `word`, last letter first.
Polynomial divided_difference(const RootSystem& sys, const std::vector<int>& word, const Polynomial& f);

/// The fundamental weight omega_i as a linear form in the simple roots.
Polynomial fundamental_weight_polynomial(const RootSystem& sys, int i);

/// prod_{alpha > 0} alpha.
Polynomial positive_root_product(const RootSystem& sys);

}  // namespace levired
