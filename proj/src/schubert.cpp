#include "levired/schubert.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "levired/errors.hpp"

namespace levired {

// --- SchubertExpr ----------------------------------------------------------

SchubertExpr SchubertExpr::schubert_class(const WeylElement& w) {
  SchubertExpr e(w.system());
  e.add(w, 1);
  return e;
}

int SchubertExpr::degree() const {
  if (terms_.empty()) return -1;
  const int d = terms_.begin()->first.length();
  for (const auto& [w, c] : terms_) {
    if (w.length() != d) return -1;
  }
  return d;
}

Rational SchubertExpr::coefficient(const WeylElement& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SchubertExpr::add(const WeylElement& w, const Rational& c) {
  if (!sys_) sys_ = w.system();
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SchubertExpr SchubertExpr::operator+(const SchubertExpr& o) const {
  SchubertExpr r(*this);
  for (const auto& [w, c] : o.terms_) r.add(w, c);
  return r;
}

SchubertExpr SchubertExpr::operator*(const Rational& c) const {
  SchubertExpr r(sys_);
  for (const auto& [w, v] : terms_) r.add(w, v * c);
  return r;
}

bool SchubertExpr::is_positive_integral() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return kv.second > 0 && denominator(kv.second) == 1; });
}

std::string SchubertExpr::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += c.str();
    out += "[" + w.str() + "]";
  }
  return out;
}

// --- engine ----------------------------------------------------------------

namespace {

using Monomial = std::vector<int>;
using Expansion = std::map<Monomial, Rational>;

struct Cover {
  WeylElement target;
  IntVec coroot;  // beta^vee in the simple-coroot basis
};

class Engine {
 public:
  explicit Engine(SystemPtr sys) : sys_(std::move(sys)) { levels_.push_back({WeylElement(sys_)}); }

  std::mutex mu;

  const SystemPtr& system() const { return sys_; }

  // Elements of length 0..d, refusing when there are more than `cap`.
  void ensure_levels(int d, std::size_t cap) {
    while (static_cast<int>(levels_.size()) <= d && !levels_.back().empty()) {
      std::vector<WeylElement> next;
      std::unordered_set<IntVec, IntVecHash> seen;
      for (const auto& v : levels_.back()) {
        for (int i = 0; i < sys_->rank(); ++i) {
          WeylElement x = v * WeylElement::from_word(sys_, {i});
          if (x.length() == v.length() + 1 && seen.insert(x.rho_image()).second) next.push_back(std::move(x));
        }
      }
      std::sort(next.begin(), next.end());
      levels_.push_back(std::move(next));
    }
    std::size_t total = 0;
    for (int k = 0; k <= d && k < static_cast<int>(levels_.size()); ++k) total += levels_[k].size();
    if (total > cap) {
      throw ResourceLimit("Schubert calculus in degree " + std::to_string(d) + " on " + sys_->label() + " needs " +
                          std::to_string(total) + " Weyl group elements, above the cap of " + std::to_string(cap));
    }
  }

  const std::vector<WeylElement>& level(int d) const {
    static const std::vector<WeylElement> empty;
    return d < static_cast<int>(levels_.size()) ? levels_[d] : empty;
  }

  const std::vector<Cover>& covers(const WeylElement& v) {
    auto it = covers_.find(v.rho_image());
    if (it != covers_.end()) return it->second;
    std::vector<Cover> out;
    const auto& roots = sys_->positive_roots_weight();
    for (std::size_t r = 0; r < roots.size(); ++r) {
      // v s_beta (rho) = v(rho - <rho, beta^vee> beta)
      IntVec img = sys_->rho().coords();
      const Coord k = sys_->coroot_pairing(img, r);
      for (std::size_t j = 0; j < img.size(); ++j) img[j] -= k * roots[r][j];
      v.act_in_place(img);
      WeylElement x = WeylElement::from_rho_image(sys_, std::move(img));
      if (x.length() == v.length() + 1) out.push_back({std::move(x), sys_->positive_coroots()[r]});
    }
    return covers_.emplace(v.rho_image(), std::move(out)).first->second;
  }

  SchubertExpr chevalley(int i, const SchubertExpr& e) {
    SchubertExpr out(sys_);
    for (const auto& [v, c] : e.terms()) {
      for (const auto& cov : covers(v)) {
        if (cov.coroot[i] != 0) out.add(cov.target, c * cov.coroot[i]);
      }
    }
    return out;
  }

  const SchubertExpr& monomial_class(const Monomial& m) {
    auto it = monomials_.find(m);
    if (it != monomials_.end()) return it->second;
    SchubertExpr e = m.empty() ? SchubertExpr::schubert_class(WeylElement(sys_))
                               : chevalley(m.back(), monomial_class(Monomial(m.begin(), m.end() - 1)));
    return monomials_.emplace(m, std::move(e)).first->second;
  }

  const Expansion& expansion(const WeylElement& u, std::size_t cap) {
    const int d = u.length();
    ensure_levels(d, cap);
    auto& table = expansions_[d];
    if (table.empty()) build_expansions(d, table);
    auto it = table.find(u.rho_image());
    if (it == table.end()) throw InternalError("no monomial expansion for [" + u.str() + "]");
    return it->second;
  }

  SchubertExpr apply(const Expansion& ex, const SchubertExpr& e) {
    std::map<Monomial, SchubertExpr> prefix;
    prefix.emplace(Monomial{}, e);
    std::function<const SchubertExpr&(const Monomial&)> get = [&](const Monomial& m) -> const SchubertExpr& {
      auto it = prefix.find(m);
      if (it != prefix.end()) return it->second;
      SchubertExpr r = chevalley(m.back(), get(Monomial(m.begin(), m.end() - 1)));
      return prefix.emplace(m, std::move(r)).first->second;
    };
    SchubertExpr out(sys_);
    for (const auto& [m, c] : ex) out = out + get(m) * c;
    return out;
  }

 private:
  static void monomials_of_degree(int n, int d, Monomial& cur, std::vector<Monomial>& out) {
    if (static_cast<int>(cur.size()) == d) {
      out.push_back(cur);
      return;
    }
    for (int i = cur.empty() ? 0 : cur.back(); i < n; ++i) {
      cur.push_back(i);
      monomials_of_degree(n, d, cur, out);
      cur.pop_back();
    }
  }

  // Gauss-Jordan on the monomial -> Schubert matrix, tracking row combinations.
  void build_expansions(int d, std::unordered_map<IntVec, Expansion, IntVecHash>& table) {
    const auto& cols = level(d);
    const std::size_t N = cols.size();
    std::unordered_map<IntVec, std::size_t, IntVecHash> col_of;
    for (std::size_t c = 0; c < N; ++c) col_of.emplace(cols[c].rho_image(), c);
    std::vector<Monomial> mons;
    Monomial cur;
    monomials_of_degree(sys_->rank(), d, cur, mons);
    const std::size_t M = mons.size();
    std::vector<std::vector<Rational>> a(M, std::vector<Rational>(N, Rational(0)));
    std::vector<std::vector<Rational>> comb(M, std::vector<Rational>(M, Rational(0)));
    for (std::size_t r = 0; r < M; ++r) {
      for (const auto& [w, c] : monomial_class(mons[r]).terms()) a[r][col_of.at(w.rho_image())] = c;
      comb[r][r] = 1;
    }
    std::vector<std::size_t> pivot_row(N);
    std::vector<bool> used(M, false);
    for (std::size_t c = 0; c < N; ++c) {
      std::size_t p = 0;
      while (p < M && (used[p] || a[p][c] == 0)) ++p;
      if (p == M) throw InternalError("degree-" + std::to_string(d) + " classes not spanned by monomials");
      used[p] = true;
      pivot_row[c] = p;
      const Rational inv = Rational(1) / a[p][c];
      for (auto& x : a[p]) x *= inv;
      for (auto& x : comb[p]) x *= inv;
      for (std::size_t r = 0; r < M; ++r) {
        if (r == p || a[r][c] == 0) continue;
        const Rational f = a[r][c];
        for (std::size_t j = 0; j < N; ++j) a[r][j] -= f * a[p][j];
        for (std::size_t j = 0; j < M; ++j) comb[r][j] -= f * comb[p][j];
      }
    }
    for (std::size_t c = 0; c < N; ++c) {
      Expansion ex;
      for (std::size_t j = 0; j < M; ++j) {
        if (comb[pivot_row[c]][j] != 0) ex.emplace(mons[j], comb[pivot_row[c]][j]);
      }
      table.emplace(cols[c].rho_image(), std::move(ex));
    }
  }

  SystemPtr sys_;
  std::vector<std::vector<WeylElement>> levels_;
  std::unordered_map<IntVec, std::vector<Cover>, IntVecHash> covers_;
  std::map<Monomial, SchubertExpr> monomials_;
  std::map<int, std::unordered_map<IntVec, Expansion, IntVecHash>> expansions_;
};

std::shared_ptr<Engine> engine_for(const SystemPtr& sys) {
  static std::mutex mu;
  static std::unordered_map<std::string, std::shared_ptr<Engine>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[sys->key()];
  if (!slot) slot = std::make_shared<Engine>(sys);
  return slot;
}

// Products only make sense within one root system.
void check_same_system(const SystemPtr& sys, const WeylElement& w) {
  if (w.system()->key() != sys->key()) throw InputError("Weyl element [" + w.str() + "] belongs to another system");
}

}  // namespace

SchubertExpr chevalley_multiply(int i, const SchubertExpr& expr, const SchubertOptions&) {
  if (expr.is_zero()) return expr;
  const auto eng = engine_for(expr.system());
  if (i < 0 || i >= expr.system()->rank()) throw InputError("simple root index out of range");
  std::lock_guard<std::mutex> lock(eng->mu);
  return eng->chevalley(i, expr);
}

std::map<std::vector<int>, Rational> monomial_expansion(const WeylElement& u, const SchubertOptions& opts) {
  const auto eng = engine_for(u.system());
  std::lock_guard<std::mutex> lock(eng->mu);
  return eng->expansion(u, opts.max_weyl_size);
}

SchubertExpr schubert_product(const SystemPtr& sys, const std::vector<WeylElement>& factors,
                              const SchubertOptions& opts) {
  if (factors.empty()) return SchubertExpr::schubert_class(WeylElement(sys));
  int total = 0;
  for (const auto& f : factors) {
    check_same_system(sys, f);
    total += f.length();
  }
  const auto eng = engine_for(sys);
  std::lock_guard<std::mutex> lock(eng->mu);
  eng->ensure_levels(total, opts.max_weyl_size);

  // Start from the longest factor; expand the others in monomials.
  std::vector<WeylElement> order(factors);
  std::stable_sort(order.begin(), order.end(),
                   [](const WeylElement& a, const WeylElement& b) { return a.length() > b.length(); });
  SchubertExpr acc = SchubertExpr::schubert_class(order[0]);
  for (std::size_t k = 1; k < order.size() && !acc.is_zero(); ++k) {
    if (order[k].is_identity()) continue;
    acc = eng->apply(eng->expansion(order[k], opts.max_weyl_size), acc);
  }
  if (!acc.is_positive_integral()) {
    throw InternalError("Schubert product has a coefficient that is not a non-negative integer: " + acc.str());
  }
  return acc;
}

IntersectionResult intersection(const SystemPtr& sys, const std::vector<WeylElement>& ws, const WeylElement& w,
                                const SchubertOptions& opts) {
  check_same_system(sys, w);
  int total = 0;
  for (const auto& x : ws) total += x.length();
  if (total != w.length()) {
    return {0, "degree mismatch: sum of lengths " + std::to_string(total) + " but l(w) = " + std::to_string(w.length())};
  }
  const Rational c = schubert_product(sys, ws, opts).coefficient(w);
  return {numerator(c), ""};
}

bool disjoint_inversion_check(const std::vector<WeylElement>& ws, const WeylElement& w) {
  std::vector<std::size_t> seen;
  for (const auto& x : ws) {
    const auto inv = inversion_set(x);
    seen.insert(seen.end(), inv.begin(), inv.end());
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  return seen == inversion_set(w);
}

Polynomial schubert_polynomial(const WeylElement& u, const SchubertOptions& opts) {
  const auto& sys = *u.system();
  std::vector<Polynomial> omega;
  for (int i = 0; i < sys.rank(); ++i) omega.push_back(fundamental_weight_polynomial(sys, i));
  Polynomial out(sys.rank());
  for (const auto& [m, c] : monomial_expansion(u, opts)) {
    Polynomial t = Polynomial::constant(sys.rank(), c);
    for (int i : m) t = t * omega[i];
    out += t;
  }
  return out;
}

Polynomial schubert_polynomial_top_down(const WeylElement& u) {
  const auto& sys = u.system();
  const Integer order = sys->weyl_group_order();
  if (order > 5000) throw ResourceLimit("top-down Schubert polynomials need |W| <= 5000");
  const Polynomial top = positive_root_product(*sys) * Rational(Integer(1), order);
  const WeylElement rest = u.inverse() * WeylElement::longest(sys);
  return divided_difference(*sys, rest.word(), top);
}

Rational divided_difference_coefficient(const WeylElement& w, const std::vector<Polynomial>& factors) {
  const auto& sys = *w.system();
  Polynomial p = Polynomial::constant(sys.rank(), 1);
  for (const auto& f : factors) p = p * f;
  const Polynomial r = divided_difference(sys, w.word(), p);
  if (r.degree() > 0) throw InputError("degree of the product exceeds l(w)");
  return r.constant_term();
}

}  // namespace levired
