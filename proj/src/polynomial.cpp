#include "levired/polynomial.hpp"

#include "levired/errors.hpp"

namespace levired {

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::linear(const std::vector<Rational>& coeffs) {
  const int n = static_cast<int>(coeffs.size());
  Polynomial p(n);
  for (int j = 0; j < n; ++j) {
    Exponents e(n, 0);
    e[j] = 1;
    p.add_term(e, coeffs[j]);
  }
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Exponents(nvars_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (nvars_ == 0) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r(*this);
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o * Rational(-1); }

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r(std::max(nvars_, o.nvars_));
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e(e1);
      for (std::size_t j = 0; j < e.size(); ++j) e[j] += e2[j];
      r.add_term(e, c1 * c2);
    }
  }
  return r;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + it->second.str() + ")";
    for (std::size_t j = 0; j < it->first.size(); ++j) {
      if (it->first[j] == 0) continue;
      out += "*a" + std::to_string(j + 1);
      if (it->first[j] > 1) out += "^" + std::to_string(it->first[j]);
    }
  }
  return out;
}

namespace {

// (sum_j c_j x_j)^k expanded, as a polynomial.
Polynomial power(const Polynomial& base, int k, int nvars) {
  Polynomial r = Polynomial::constant(nvars, 1);
  for (int t = 0; t < k; ++t) r = r * base;
  return r;
}

}  // namespace

Polynomial reflect(const RootSystem& sys, int i, const Polynomial& f) {
  const int n = sys.rank();
  // s_i(alpha_j) = alpha_j - <alpha_j, alpha_i^vee> alpha_i
  std::vector<Polynomial> image(n);
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> c(n, Rational(0));
    c[j] += 1;
    c[i] -= sys.cartan(j, i);
    image[j] = Polynomial::linear(c);
  }
  Polynomial out(n);
  for (const auto& [e, coeff] : f.terms()) {
    Polynomial term = Polynomial::constant(n, coeff);
    for (int j = 0; j < n; ++j) {
      if (e[j]) term = term * power(image[j], e[j], n);
    }
    out += term;
  }
  return out;
}

Polynomial divided_difference(const RootSystem& sys, int i, const Polynomial& f) {
  const Polynomial diff = f - reflect(sys, i, f);
  Polynomial out(sys.rank());
  for (const auto& [e, c] : diff.terms()) {
    if (e[i] == 0) throw InternalError("divided difference is not divisible by the simple root");
    Polynomial::Exponents lower(e);
    lower[i] -= 1;
    out.add_term(lower, c);
  }
  return out;
}

Polynomial divided_difference(const RootSystem& sys, const std::vector<int>& word, const Polynomial& f) {
  Polynomial g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    g = divided_difference(sys, *it, g);
    if (g.is_zero()) break;
  }
  return g;
}

Polynomial fundamental_weight_polynomial(const RootSystem& sys, int i) {
  IntVec e(sys.rank(), 0);
  e[i] = 1;
  return Polynomial::linear(sys.to_root_basis(Weight(e)).coords());
}

Polynomial positive_root_product(const RootSystem& sys) {
  Polynomial p = Polynomial::constant(sys.rank(), 1);
  for (const auto& beta : sys.positive_roots()) {
    std::vector<Rational> c(beta.begin(), beta.end());
    p = p * Polynomial::linear(c);
  }
  return p;
}

}  // namespace levired
