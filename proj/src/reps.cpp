#include "levired/reps.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_set>

#include "levired/errors.hpp"

namespace levired {

namespace {

using i128 = __int128;

Coord narrow(i128 v, const char* what) {
  if (v > std::numeric_limits<Coord>::max() || v < std::numeric_limits<Coord>::min()) {
    throw ResourceLimit(std::string(what) + " exceeds 64-bit range");
  }
  return static_cast<Coord>(v);
}

IntVec add(IntVec a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

IntVec sub(IntVec a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

bool is_dom(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](Coord c) { return c >= 0; });
}

void require_dominant(const RootSystem& sys, const Weight& w, const char* role) {
  if (static_cast<int>(w.size()) != sys.rank()) {
    throw InputError(std::string(role) + " " + w.str() + " has " + std::to_string(w.size()) +
                     " coordinates; " + sys.label() + " needs " + std::to_string(sys.rank()));
  }
  if (!w.is_dominant()) throw InputError(std::string(role) + " " + w.str() + " is not dominant");
}

// x^T G y for the scaled invariant form.
Coord form(const RootSystem& sys, const IntVec& x, const IntVec& y) {
  const auto& g = sys.scaled_form();
  i128 s = 0;
  for (int i = 0; i < sys.rank(); ++i) {
    if (x[i] == 0) continue;
    i128 row = 0;
    for (int j = 0; j < sys.rank(); ++j) row += static_cast<i128>(g[i][j]) * y[j];
    s += row * x[i];
  }
  return narrow(s, "inner product");
}

Integer to_integer(Coord v) { return Integer(v); }

}  // namespace

// --- Character -------------------------------------------------------------

Character::Character(Map entries) {
  for (auto& [mu, m] : entries) {
    if (m != 0) entries_.emplace(mu, m);
  }
}

Integer Character::multiplicity(const Weight& mu) const {
  auto it = entries_.find(mu);
  return it == entries_.end() ? Integer(0) : it->second;
}

void Character::add(const Weight& mu, const Integer& m) {
  if (m == 0) return;
  auto [it, inserted] = entries_.emplace(mu, m);
  if (!inserted) {
    it->second += m;
    if (it->second == 0) entries_.erase(it);
  }
}

Integer Character::total_dimension(const RootSystem& sys) const {
  Integer total = 0;
  for (const auto& [mu, m] : entries_) total += m * weyl_dim(sys, mu);
  return total;
}

// --- weight tables ---------------------------------------------------------

WeightMultTable::WeightMultTable(SystemPtr sys, Weight lambda) : sys_(std::move(sys)), lambda_(std::move(lambda)) {
  const RootSystem& rs = *sys_;
  require_dominant(rs, lambda_, "highest weight");
  const int n = rs.rank();
  const auto& roots_w = rs.positive_roots_weight();

  // Dominant weights below lambda: every one is reached from lambda by
  // subtracting positive roots without leaving the dominant chamber.
  std::vector<IntVec> dom{lambda_.coords()};
  std::unordered_set<IntVec, IntVecHash> seen{lambda_.coords()};
  for (std::size_t k = 0; k < dom.size(); ++k) {
    for (const auto& a : roots_w) {
      IntVec nu = sub(dom[k], a);
      if (is_dom(nu) && seen.insert(nu).second) dom.push_back(std::move(nu));
    }
  }
  auto height = [&](const IntVec& mu) {
    const IntVec c = rs.scaled_root_coords(mu);
    return std::accumulate(c.begin(), c.end(), Coord{0});
  };
  std::vector<std::pair<Coord, IntVec>> order;
  order.reserve(dom.size());
  for (auto& mu : dom) order.emplace_back(-height(mu), std::move(mu));
  std::sort(order.begin(), order.end());

  // Freudenthal: (|l+r|^2 - |m+r|^2) m(mu) = 2 sum_{a>0} sum_{k>=1} (mu+ka, a) m(mu+ka).
  std::vector<IntVec> g_alpha;  // G * alpha for each positive root
  std::vector<Coord> alpha_sq;
  for (const auto& a : roots_w) {
    IntVec ga(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) ga[i] += rs.scaled_form()[i][j] * a[j];
    alpha_sq.push_back(dot(a, ga));
    g_alpha.push_back(std::move(ga));
  }
  const IntVec rho = rs.rho().coords();
  const IntVec lr = add(lambda_.coords(), rho);
  const Coord top = form(rs, lr, lr);

  dominant_.reserve(order.size());
  for (auto& [negh, mu] : order) {
    Coord m = 0;
    if (dominant_.empty()) {
      m = 1;
    } else {
      i128 num = 0;
      for (std::size_t r = 0; r < roots_w.size(); ++r) {
        const Coord base = dot(mu, g_alpha[r]);
        IntVec nu = mu;
        for (Coord k = 1;; ++k) {
          for (int i = 0; i < n; ++i) nu[i] += roots_w[r][i];
          IntVec d = nu;
          rs.to_dominant(d);
          auto it = index_.find(d);
          if (it == index_.end()) break;
          num += static_cast<i128>(base + k * alpha_sq[r]) * dominant_[it->second].second.convert_to<Coord>();
        }
      }
      const IntVec mr = add(mu, rho);
      const Coord den = top - form(rs, mr, mr);
      num *= 2;
      if (den <= 0 || num % den != 0) throw InternalError("Freudenthal recursion is not integral at " + join(mu));
      m = narrow(num / den, "weight multiplicity");
    }
    index_.emplace(mu, dominant_.size());
    dominant_.emplace_back(std::move(mu), to_integer(m));
  }
}

Integer WeightMultTable::multiplicity(const IntVec& beta) const {
  if (static_cast<int>(beta.size()) != sys_->rank()) throw InputError("weight dimension mismatch");
  IntVec d = beta;
  sys_->to_dominant(d);
  auto it = index_.find(d);
  return it == index_.end() ? Integer(0) : dominant_[it->second].second;
}

std::vector<std::pair<IntVec, Integer>> WeightMultTable::all_weights() const {
  std::vector<std::pair<IntVec, Integer>> out;
  for (const auto& [mu, m] : dominant_) {
    for (auto& x : weyl_orbit(*sys_, mu)) out.emplace_back(std::move(x), m);
  }
  return out;
}

std::size_t WeightMultTable::distinct_weight_count() const {
  std::size_t total = 0;
  for (const auto& [mu, m] : dominant_) total += weyl_orbit(*sys_, mu).size();
  return total;
}

Integer WeightMultTable::dimension() const { return weyl_dim(*sys_, lambda_); }

std::shared_ptr<const WeightMultTable> weight_table(const SystemPtr& sys, const Weight& lambda) {
  static std::mutex mu;
  static std::unordered_map<std::string, std::shared_ptr<const WeightMultTable>> cache;
  const std::string key = sys->key() + "#" + join(lambda.coords());
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto table = std::make_shared<const WeightMultTable>(sys, lambda);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(table)).first->second;
}

std::vector<IntVec> weyl_orbit(const RootSystem& sys, const IntVec& dom) {
  std::vector<IntVec> orbit{dom};
  std::unordered_set<IntVec, IntVecHash> seen{dom};
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    for (int i = 0; i < sys.rank(); ++i) {
      if (orbit[k][i] <= 0) continue;
      IntVec x = orbit[k];
      sys.reflect_weight(i, x);
      if (seen.insert(x).second) orbit.push_back(std::move(x));
    }
  }
  return orbit;
}

Integer weyl_dim(const RootSystem& sys, const Weight& lambda) {
  require_dominant(sys, lambda, "highest weight");
  Integer num = 1, den = 1;
  for (const auto& cv : sys.positive_coroots()) {
    Coord rho_pair = std::accumulate(cv.begin(), cv.end(), Coord{0});
    num *= dot(lambda.coords(), cv) + rho_pair;
    den *= rho_pair;
  }
  return num / den;
}

Integer weight_multiplicity(const SystemPtr& sys, const Weight& lambda, const Weight& beta) {
  return weight_table(sys, lambda)->multiplicity(beta);
}

Weight dual_weight(const SystemPtr& sys, const Weight& lambda) {
  IntVec v = (-lambda).coords();
  sys->to_dominant(v);
  return Weight(std::move(v));
}

// --- tensor products -------------------------------------------------------

namespace {

Character klimyk(const SystemPtr& sys, const Weight& lambda, const Weight& mu) {
  // Sum over the weights of the smaller factor.
  const bool swap = weyl_dim(*sys, mu) > weyl_dim(*sys, lambda);
  const Weight& big = swap ? mu : lambda;
  const Weight& small = swap ? lambda : mu;
  const auto table = weight_table(sys, small);
  const IntVec shift = add(big.coords(), sys->rho().coords());
  std::unordered_map<IntVec, Integer, IntVecHash> acc;
  for (const auto& [dom, m] : table->dominant()) {
    for (const auto& beta : weyl_orbit(*sys, dom)) {
      IntVec x = add(shift, beta);
      const int steps = sys->to_dominant(x);
      if (std::any_of(x.begin(), x.end(), [](Coord c) { return c == 0; })) continue;
      for (auto& c : x) c -= 1;
      if (steps % 2) acc[x] -= m;
      else acc[x] += m;
    }
  }
  Character out;
  for (auto& [w, m] : acc) {
    if (m < 0) throw InternalError("negative tensor multiplicity at " + join(w));
    out.add(Weight(w), m);
  }
  return out;
}

}  // namespace

Character tensor_decompose(const SystemPtr& sys, const Weight& lambda, const Weight& mu) {
  require_dominant(*sys, lambda, "weight");
  require_dominant(*sys, mu, "weight");
  if (sys->components().size() <= 1) return klimyk(sys, lambda, mu);

  // Factor-wise, then recombine by Cartesian product.
  std::vector<std::pair<IntVec, Integer>> partial{{IntVec(sys->rank(), 0), Integer(1)}};
  for (std::size_t c = 0; c < sys->components().size(); ++c) {
    const auto& nodes = sys->components()[c].nodes;
    const SystemPtr sub_sys = sys->component_system(c);
    const Character part =
        klimyk(sub_sys, component_weight(*sys, c, lambda), component_weight(*sys, c, mu));
    std::vector<std::pair<IntVec, Integer>> next;
    for (const auto& [v, m] : partial) {
      for (const auto& [w, k] : part.entries()) {
        IntVec x = v;
        for (std::size_t t = 0; t < nodes.size(); ++t) x[nodes[t]] = w[t];
        next.emplace_back(std::move(x), m * k);
      }
    }
    partial = std::move(next);
  }
  Character out;
  for (auto& [v, m] : partial) out.add(Weight(std::move(v)), m);
  return out;
}

namespace {

// sum_w sign(w) m_B(w(target + rho) - rho - a) over the orbit of target+rho.
Integer brauer_sum(const RootSystem& sys, const WeightMultTable& table_b, const IntVec& a, const IntVec& target) {
  const IntVec rho = sys.rho().coords();
  const IntVec start = add(target, rho);
  const IntVec shift = add(a, rho);
  std::vector<IntVec> orbit{start};
  std::vector<int> parity{0};
  std::unordered_set<IntVec, IntVecHash> seen{start};
  Integer total = 0;
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    const Integer m = table_b.multiplicity(sub(orbit[k], shift));
    if (m != 0) {
      if (parity[k]) total -= m;
      else total += m;
    }
    for (int i = 0; i < sys.rank(); ++i) {
      if (orbit[k][i] <= 0) continue;
      IntVec x = orbit[k];
      sys.reflect_weight(i, x);
      if (seen.insert(x).second) {
        orbit.push_back(std::move(x));
        parity.push_back(parity[k] ^ 1);
      }
    }
  }
  return total;
}

}  // namespace

Integer pair_multiplicity(const SystemPtr& sys, const Weight& lambda, const Weight& mu, const Weight& target) {
  require_dominant(*sys, lambda, "weight");
  require_dominant(*sys, mu, "weight");
  require_dominant(*sys, target, "target");
  if (sys->rank() == 0) return 1;
  // Quick rejection: target must lie below lambda + mu.
  if (!sys->in_positive_root_cone(sub(add(lambda.coords(), mu.coords()), target.coords()))) return 0;
  const bool swap = weyl_dim(*sys, lambda) < weyl_dim(*sys, mu);
  const Weight& a = swap ? mu : lambda;
  const Weight& b = swap ? lambda : mu;
  const auto table = weight_table(sys, b);
  const Integer m = brauer_sum(*sys, *table, a.coords(), target.coords());
  if (m < 0) throw InternalError("negative tensor multiplicity");
  return m;
}

Integer multi_tensor_multiplicity(const SystemPtr& sys, const std::vector<Weight>& factors, const Weight& target) {
  require_dominant(*sys, target, "target");
  for (const auto& f : factors) require_dominant(*sys, f, "factor");
  if (sys->rank() == 0) return 1;
  if (factors.empty()) return target.is_zero() ? 1 : 0;
  if (factors.size() == 1) return factors[0] == target ? 1 : 0;
  if (factors.size() == 2) return pair_multiplicity(sys, factors[0], factors[1], target);

  // Largest first; the smallest factor is kept for the closing alternating sum.
  std::vector<std::pair<Integer, Weight>> sorted;
  for (const auto& f : factors) sorted.emplace_back(weyl_dim(*sys, f), f);
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) { return x.first > y.first; });

  const std::size_t k = sorted.size();
  // Suffix sums of the remaining highest weights and of their duals.
  std::vector<IntVec> rest(k + 1, IntVec(sys->rank(), 0)), rest_dual(k + 1, IntVec(sys->rank(), 0));
  for (std::size_t j = k; j-- > 0;) {
    rest[j] = add(rest[j + 1], sorted[j].second.coords());
    rest_dual[j] = add(rest_dual[j + 1], dual_weight(sys, sorted[j].second).coords());
  }
  const IntVec& t = target.coords();
  auto viable = [&](const IntVec& kappa, std::size_t next) {
    // target <= kappa + sum(rest) and kappa <= target + sum(dual rest)
    return sys->in_positive_root_cone(sub(add(kappa, rest[next]), t)) &&
           sys->in_positive_root_cone(sub(add(t, rest_dual[next]), kappa));
  };

  Character current;
  current.add(sorted[0].second, 1);
  for (std::size_t j = 1; j + 1 < k; ++j) {
    Character next;
    for (const auto& [kappa, m] : current.entries()) {
      const Character part = tensor_decompose(sys, kappa, sorted[j].second);
      for (const auto& [nu, c] : part.entries()) {
        if (viable(nu.coords(), j + 1)) next.add(nu, m * c);
      }
    }
    current = std::move(next);
  }

  const Weight& smallest = sorted[k - 1].second;
  const auto table = weight_table(sys, smallest);
  Integer total = 0;
  for (const auto& [kappa, m] : current.entries()) {
    // V_target in V_kappa (x) V_smallest needs target - kappa to be a weight.
    if (table->multiplicity(sub(t, kappa.coords())) == 0) continue;
    total += m * brauer_sum(*sys, *table, kappa.coords(), t);
  }
  return total;
}

Character character_product_oracle(const SystemPtr& sys, const Weight& lambda, const Weight& mu,
                                   const OracleOptions& opts) {
  require_dominant(*sys, lambda, "weight");
  require_dominant(*sys, mu, "weight");
  const auto ta = weight_table(sys, lambda);
  const auto tb = weight_table(sys, mu);
  const std::size_t na = ta->distinct_weight_count(), nb = tb->distinct_weight_count();
  if (nb != 0 && na > opts.max_weight_pairs / nb) {
    throw ResourceLimit("character product needs " + std::to_string(na) + " x " + std::to_string(nb) +
                        " weight pairs, above the cap of " + std::to_string(opts.max_weight_pairs));
  }
  // Only dominant weights of the product are needed.
  std::unordered_map<IntVec, Integer, IntVecHash> prod;
  const auto wa = ta->all_weights();
  const auto wb = tb->all_weights();
  for (const auto& [x, mx] : wa) {
    for (const auto& [y, my] : wb) {
      IntVec s = add(x, y);
      if (is_dom(s)) prod[s] += mx * my;
    }
  }
  auto height = [&](const IntVec& v) {
    const IntVec c = sys->scaled_root_coords(v);
    return std::accumulate(c.begin(), c.end(), Coord{0});
  };
  Character out;
  while (true) {
    const IntVec* best = nullptr;
    Coord best_h = 0;
    for (const auto& [v, m] : prod) {
      if (m == 0) continue;
      const Coord h = height(v);
      if (!best || h > best_h || (h == best_h && v > *best)) {
        best = &v;
        best_h = h;
      }
    }
    if (!best) break;
    const IntVec top = *best;
    const Integer c = prod[top];
    if (c < 0) throw InternalError("character peeling produced a negative coefficient");
    out.add(Weight(top), c);
    for (const auto& [v, m] : weight_table(sys, Weight(top))->dominant()) {
      auto it = prod.find(v);
      if (it == prod.end()) throw InternalError("character peeling hit a missing weight");
      it->second -= c * m;
    }
  }
  return out;
}

}  // namespace levired
