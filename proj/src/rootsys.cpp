#include "levired/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "levired/errors.hpp"

namespace levired {

std::string join(const IntVec& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

Coord to_coord(const Rational& q) {
  if (denominator(q) != 1) throw std::domain_error("non-integral rational");
  const Integer n = numerator(q);
  if (n > Integer(std::numeric_limits<Coord>::max()) || n < Integer(std::numeric_limits<Coord>::min())) {
    throw std::overflow_error("coordinate out of range");
  }
  return n.convert_to<Coord>();
}

// --- types -----------------------------------------------------------------

std::string to_string(const SimpleType& t) {
  static const char* names = "ABCD";
  return std::string(1, names[static_cast<int>(t.family)]) + std::to_string(t.rank);
}

int positive_root_count(const SimpleType& t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
  }
  return 0;
}

std::vector<SimpleType> parse_type_label(std::string_view label) {
  std::vector<SimpleType> out;
  std::string s;
  for (char c : label) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw InputError("empty group type");
  std::size_t pos = 0;
  while (pos < s.size()) {
    const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[pos])));
    Family fam;
    switch (f) {
      case 'A': fam = Family::A; break;
      case 'B': fam = Family::B; break;
      case 'C': fam = Family::C; break;
      case 'D': fam = Family::D; break;
      default:
        throw InputError("group type '" + s + "': unsupported family '" + std::string(1, s[pos]) +
                         "' at position " + std::to_string(pos) + " (expected A, B, C or D)");
    }
    ++pos;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw InputError("group type '" + s + "': missing rank at position " + std::to_string(start));
    const int rank = std::stoi(s.substr(start, pos - start));
    const int min_rank = fam == Family::A ? 1 : (fam == Family::D ? 3 : 2);
    if (rank < min_rank) {
      throw InputError("group type '" + s + "': rank " + std::to_string(rank) + " is out of range for " +
                       std::string(1, f) + " (minimum " + std::to_string(min_rank) + ")");
    }
    out.push_back({fam, rank});
    if (pos < s.size()) {
      if (s[pos] != 'x' && s[pos] != 'X' && s[pos] != '*') {
        throw InputError("group type '" + s + "': expected 'x' between factors at position " + std::to_string(pos));
      }
      ++pos;
      if (pos == s.size()) throw InputError("group type '" + s + "': trailing 'x'");
    }
  }
  return out;
}

// --- Weight / RootCoords ---------------------------------------------------

bool Weight::is_dominant() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Coord c) { return c >= 0; });
}
bool Weight::is_strictly_dominant() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Coord c) { return c > 0; });
}
bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Coord c) { return c == 0; });
}

Weight Weight::operator+(const Weight& o) const { Weight r(*this); r += o; return r; }
Weight Weight::operator-(const Weight& o) const { Weight r(*this); r -= o; return r; }
Weight Weight::operator-() const {
  Weight r(*this);
  for (auto& c : r.coords_) c = -c;
  return r;
}
Weight& Weight::operator+=(const Weight& o) {
  if (o.size() != size()) throw InputError("weight dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}
Weight& Weight::operator-=(const Weight& o) {
  if (o.size() != size()) throw InputError("weight dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}
Weight Weight::operator*(Coord k) const {
  Weight r(*this);
  for (auto& c : r.coords_) c *= k;
  return r;
}

bool RootCoords::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return denominator(q) == 1; });
}
bool RootCoords::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
}
std::string RootCoords::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ",";
    out += coords_[i].str();
  }
  return out + ")";
}

// --- construction ----------------------------------------------------------

namespace {

std::vector<std::vector<int>> simple_cartan(const SimpleType& t) {
  const int n = t.rank;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  switch (t.family) {
    case Family::A:
    case Family::B:
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) a[i][i + 1] = a[i + 1][i] = -1;
      if (t.family == Family::B) a[n - 2][n - 1] = -2;  // alpha_n short
      if (t.family == Family::C) a[n - 1][n - 2] = -2;  // alpha_n long
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) a[i][i + 1] = a[i + 1][i] = -1;
      a[n - 3][n - 1] = a[n - 1][n - 3] = -1;
      break;
  }
  return a;
}

// Exact inverse by Gauss-Jordan.
std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw InternalError("singular Cartan matrix");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    const Rational p = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// Identifies a connected classical Dynkin diagram and orders its nodes in
// Bourbaki order. `nodes` are ambient indices.
Component identify(const std::vector<std::vector<int>>& a, const std::vector<int>& nodes,
                   const std::vector<int>& sym) {
  const int k = static_cast<int>(nodes.size());
  if (k == 1) return {{Family::A, 1}, nodes};
  std::map<int, std::vector<int>> adj;
  int double_edges = 0;
  for (int u : nodes) {
    for (int v : nodes) {
      if (u == v || a[u][v] == 0) continue;
      adj[u].push_back(v);
      if (a[u][v] * a[v][u] == 2) ++double_edges;
      if (a[u][v] * a[v][u] > 2) throw InputError("exceptional (non-classical) Cartan matrix is not supported");
    }
  }
  const int edges = static_cast<int>(std::accumulate(adj.begin(), adj.end(), std::size_t{0},
                                                     [](std::size_t s, const auto& kv) { return s + kv.second.size(); }) /
                                     2);
  if (edges != k - 1) throw InputError("Dynkin diagram is not a tree");
  std::vector<int> leaves, branch;
  for (int u : nodes) {
    if (adj[u].size() == 1) leaves.push_back(u);
    if (adj[u].size() >= 3) branch.push_back(u);
  }
  auto walk = [&](int start, int avoid) {
    std::vector<int> path{start};
    int prev = avoid, cur = start;
    while (true) {
      int next = -1;
      for (int v : adj[cur]) {
        if (v != prev && adj[v].size() <= 2) next = v;
      }
      if (next < 0) break;
      path.push_back(next);
      prev = cur;
      cur = next;
    }
    return path;
  };
  if (double_edges / 2 == 1) {
    // Chain with one double bond, which must sit at an end.
    int du = -1, dv = -1;
    for (int u : nodes)
      for (int v : adj[u])
        if (a[u][v] * a[v][u] == 2) du = u, dv = v;
    const int end = adj[du].size() == 1 ? du : (adj[dv].size() == 1 ? dv : -1);
    if (end < 0 || !branch.empty()) throw InputError("non-classical Dynkin diagram");
    const int other_leaf = leaves[0] == end ? leaves[1] : leaves[0];
    std::vector<int> path = walk(other_leaf, -1);
    const int inner = path[path.size() - 2];
    const Family fam = sym[end] < sym[inner] ? Family::B : Family::C;
    if (k == 2) {
      // B2 = C2; order by Bourbaki B2 (long root first).
      if (sym[path[0]] < sym[path[1]]) std::reverse(path.begin(), path.end());
      return {{Family::B, 2}, path};
    }
    return {{fam, k}, path};
  }
  if (double_edges) throw InputError("non-classical Dynkin diagram");
  if (branch.empty()) {
    std::vector<int> path = walk(std::min(leaves[0], leaves[1]), -1);
    return {{Family::A, k}, path};
  }
  if (branch.size() != 1 || adj[branch[0]].size() != 3) throw InputError("non-classical Dynkin diagram");
  const int centre = branch[0];
  // Arms from the centre; D_k needs two arms of length one.
  std::vector<std::vector<int>> arms;
  for (int v : adj[centre]) arms.push_back(walk(v, centre));
  std::sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() > y.size();
    return x < y;
  });
  if (arms[1].size() != 1 || arms[2].size() != 1) throw InputError("exceptional (type E) Dynkin diagram");
  std::vector<int> order(arms[0].rbegin(), arms[0].rend());
  order.push_back(centre);
  order.push_back(std::min(arms[1][0], arms[2][0]));
  order.push_back(std::max(arms[1][0], arms[2][0]));
  return {{Family::D, k}, order};
}

}  // namespace

SystemPtr RootSystem::build(const std::vector<SimpleType>& factors) {
  int n = 0;
  for (const auto& f : factors) n += f.rank;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  int off = 0;
  for (const auto& f : factors) {
    const int min_rank = f.family == Family::A ? 1 : (f.family == Family::D ? 3 : 2);
    if (f.rank < min_rank) throw InputError("rank out of range for " + to_string(f));
    const auto block = simple_cartan(f);
    for (int i = 0; i < f.rank; ++i)
      for (int j = 0; j < f.rank; ++j) a[off + i][off + j] = block[i][j];
    off += f.rank;
  }
  auto sys = std::shared_ptr<RootSystem>(new RootSystem());
  sys->rank_ = n;
  sys->cartan_ = std::move(a);
  sys->finish();
  // Keep the requested labelling (D3 stays "D3", B2 stays "B2").
  off = 0;
  sys->components_.clear();
  for (const auto& f : factors) {
    std::vector<int> nodes(f.rank);
    std::iota(nodes.begin(), nodes.end(), off);
    sys->components_.push_back({f, nodes});
    off += f.rank;
  }
  return sys;
}

SystemPtr RootSystem::from_cartan(std::vector<std::vector<int>> cartan) {
  auto sys = std::shared_ptr<RootSystem>(new RootSystem());
  sys->rank_ = static_cast<int>(cartan.size());
  for (const auto& row : cartan) {
    if (static_cast<int>(row.size()) != sys->rank_) throw InputError("Cartan matrix is not square");
  }
  sys->cartan_ = std::move(cartan);
  sys->finish();
  return sys;
}

void RootSystem::finish() {
  const int n = rank_;
  for (int i = 0; i < n; ++i) {
    if (cartan_[i][i] != 2) throw InputError("Cartan diagonal must be 2");
    for (int j = 0; j < n; ++j) {
      if (i != j && cartan_[i][j] > 0) throw InputError("Cartan off-diagonal entries must be non-positive");
      if ((cartan_[i][j] == 0) != (cartan_[j][i] == 0)) throw InputError("Cartan matrix zero pattern not symmetric");
    }
  }
  key_.clear();
  for (const auto& row : cartan_) {
    for (int v : row) key_ += std::to_string(v) + ",";
    key_ += ";";
  }

  // Components and symmetrizer: d_j = d_i * a_ji / a_ij along edges.
  std::vector<Rational> d(n, Rational(0));
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> comp_nodes;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int c = static_cast<int>(comp_nodes.size());
    comp_nodes.emplace_back();
    std::deque<int> q{s};
    comp[s] = c;
    d[s] = 1;
    while (!q.empty()) {
      const int u = q.front();
      q.pop_front();
      comp_nodes[c].push_back(u);
      for (int v = 0; v < n; ++v) {
        if (v == u || cartan_[u][v] == 0) continue;
        const Rational dv = d[u] * cartan_[v][u] / cartan_[u][v];
        if (comp[v] < 0) {
          comp[v] = c;
          d[v] = dv;
          q.push_back(v);
        } else if (d[v] != dv) {
          throw InputError("Cartan matrix is not symmetrizable");
        }
      }
    }
    std::sort(comp_nodes[c].begin(), comp_nodes[c].end());
    Rational mn = d[comp_nodes[c][0]];
    for (int u : comp_nodes[c]) mn = std::min(mn, d[u]);
    for (int u : comp_nodes[c]) d[u] /= mn;
  }
  symmetrizer_.assign(n, 1);
  for (int i = 0; i < n; ++i) symmetrizer_[i] = static_cast<int>(to_coord(d[i]));
  components_.clear();
  for (const auto& nodes : comp_nodes) components_.push_back(identify(cartan_, nodes, symmetrizer_));

  // Inverse transpose, exact, plus an integral scaled copy.
  std::vector<std::vector<Rational>> at(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) at[i][j] = cartan_[j][i];
  inv_cartan_t_ = n ? invert(at) : std::vector<std::vector<Rational>>{};
  Integer lcm = 1;
  for (const auto& row : inv_cartan_t_)
    for (const auto& q : row) lcm = boost::multiprecision::lcm(lcm, denominator(q));
  root_scale_ = lcm.convert_to<Coord>();
  inv_cartan_t_scaled_.assign(n, IntVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv_cartan_t_scaled_[i][j] = to_coord(inv_cartan_t_[i][j] * root_scale_);

  // Form on weights: (x, y) = sum_j x_j d_j (A^{-T} y)_j. Scale to integers.
  std::vector<std::vector<Rational>> form(n, std::vector<Rational>(n));
  Integer flcm = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      form[i][j] = inv_cartan_t_[i][j] * symmetrizer_[i];
      flcm = boost::multiprecision::lcm(flcm, denominator(form[i][j]));
    }
  form_.assign(n, IntVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      form_[i][j] = to_coord(form[i][j] * flcm);
      if (form[i][j] != form[j][i]) throw InternalError("invariant form is not symmetric");
    }

  // Positive roots by closure: beta + alpha_i is a root iff q > 0 where the
  // alpha_i-string through beta is beta - p alpha_i .. beta + q alpha_i and
  // p - q = <beta, alpha_i^vee>.
  pos_roots_.clear();
  std::set<IntVec> found;
  std::vector<IntVec> layer;
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    layer.push_back(e);
    found.insert(e);
  }
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end());
    for (const auto& r : layer) pos_roots_.push_back(r);
    std::set<IntVec> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < n; ++i) {
        Coord pairing = 0;
        for (int j = 0; j < n; ++j) pairing += beta[j] * cartan_[j][i];
        int p = 0;
        IntVec down = beta;
        while (true) {
          down[i] -= 1;
          if (!found.count(down)) break;
          ++p;
        }
        const Coord q = p - pairing;
        if (q > 0) {
          IntVec up = beta;
          up[i] += 1;
          if (!found.count(up)) next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto& r : layer) found.insert(r);
  }
  pos_roots_w_.clear();
  pos_coroots_.clear();
  for (const auto& beta : pos_roots_) {
    IntVec w(n, 0);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) w[k] += beta[j] * cartan_[j][k];
    pos_roots_w_.push_back(w);
    // beta^vee = sum_j beta_j d_j / d_beta alpha_j^vee with d_beta = (beta,beta)/2.
    Coord len2 = 0;  // 2 * d_beta
    for (int j = 0; j < n; ++j) len2 += beta[j] * symmetrizer_[j] * w[j];
    IntVec cv(n, 0);
    for (int j = 0; j < n; ++j) {
      const Coord num = 2 * beta[j] * symmetrizer_[j];
      if (num % len2 != 0) throw InternalError("non-integral coroot");
      cv[j] = num / len2;
    }
    pos_coroots_.push_back(cv);
  }
}

std::string RootSystem::label() const {
  if (rank_ == 0) return "trivial";
  std::string out;
  for (std::size_t c = 0; c < components_.size(); ++c) {
    if (c) out += "x";
    out += to_string(components_[c].type);
  }
  return out;
}

std::optional<std::size_t> RootSystem::find_positive_root(const IntVec& root_coords) const {
  auto it = std::find(pos_roots_.begin(), pos_roots_.end(), root_coords);
  if (it == pos_roots_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - pos_roots_.begin());
}

void RootSystem::reflect_weight(int i, IntVec& weight) const {
  const Coord c = weight[i];
  if (c == 0) return;
  const auto& row = cartan_[i];
  for (int k = 0; k < rank_; ++k) weight[k] -= c * row[k];
}

void RootSystem::reflect_root(int i, IntVec& root_coords) const {
  Coord pairing = 0;
  for (int j = 0; j < rank_; ++j) pairing += root_coords[j] * cartan_[j][i];
  root_coords[i] -= pairing;
}

int RootSystem::to_dominant(IntVec& weight) const {
  int steps = 0;
  while (true) {
    int i = 0;
    while (i < rank_ && weight[i] >= 0) ++i;
    if (i == rank_) return steps;
    reflect_weight(i, weight);
    ++steps;
  }
}

RootCoords RootSystem::to_root_basis(const Weight& mu) const {
  if (static_cast<int>(mu.size()) != rank_) throw InputError("weight dimension mismatch");
  std::vector<Rational> c(rank_, Rational(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) c[i] += inv_cartan_t_[i][j] * mu[j];
  return RootCoords(std::move(c));
}

Weight RootSystem::from_root_basis(const RootCoords& c) const {
  if (static_cast<int>(c.size()) != rank_) throw InputError("root coordinate dimension mismatch");
  IntVec w(rank_, 0);
  for (int k = 0; k < rank_; ++k) {
    Rational s = 0;
    for (int j = 0; j < rank_; ++j) s += c[j] * cartan_[j][k];
    if (denominator(s) != 1) throw InputError("root coordinates do not give an integral weight");
    w[k] = to_coord(s);
  }
  return Weight(std::move(w));
}

Weight RootSystem::from_root_basis(const IntVec& c) const {
  IntVec w(rank_, 0);
  for (int j = 0; j < rank_; ++j)
    for (int k = 0; k < rank_; ++k) w[k] += c[j] * cartan_[j][k];
  return Weight(std::move(w));
}

IntVec RootSystem::scaled_root_coords(const IntVec& mu) const {
  IntVec c(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) c[i] += inv_cartan_t_scaled_[i][j] * mu[j];
  return c;
}

bool RootSystem::in_positive_root_cone(const IntVec& mu) const {
  for (int i = 0; i < rank_; ++i) {
    Coord s = 0;
    for (int j = 0; j < rank_; ++j) s += inv_cartan_t_scaled_[i][j] * mu[j];
    if (s < 0 || s % root_scale_ != 0) return false;
  }
  return true;
}

Rational RootSystem::inner(const Weight& a, const Weight& b) const {
  Rational s = 0;
  const RootCoords cb = to_root_basis(b);
  for (int j = 0; j < rank_; ++j) s += Rational(a[j]) * symmetrizer_[j] * cb[j];
  return s;
}

Integer RootSystem::weyl_group_order() const {
  Integer order = 1;
  for (const auto& c : components_) {
    const int n = c.type.rank;
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    switch (c.type.family) {
      case Family::A: order *= f * (n + 1); break;
      case Family::B:
      case Family::C: order *= f * (Integer(1) << n); break;
      case Family::D: order *= f * (Integer(1) << (n - 1)); break;
    }
  }
  return order;
}

SystemPtr RootSystem::levi(const std::vector<int>& I) const {
  std::vector<int> nodes(I);
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  for (int i : nodes) {
    if (i < 0 || i >= rank_) throw InputError("simple root index " + std::to_string(i + 1) + " out of range");
  }
  std::vector<std::vector<int>> sub(nodes.size(), std::vector<int>(nodes.size()));
  for (std::size_t a = 0; a < nodes.size(); ++a)
    for (std::size_t b = 0; b < nodes.size(); ++b) sub[a][b] = cartan_[nodes[a]][nodes[b]];
  return from_cartan(std::move(sub));
}

SystemPtr RootSystem::component_system(std::size_t c) const {
  return build(std::vector<SimpleType>{components_.at(c).type});
}

Weight component_weight(const RootSystem& sys, std::size_t c, const Weight& mu) {
  const auto& nodes = sys.components().at(c).nodes;
  IntVec out;
  out.reserve(nodes.size());
  for (int v : nodes) out.push_back(mu[v]);
  return Weight(std::move(out));
}

std::string format_by_components(const RootSystem& sys, const Weight& mu) {
  std::vector<std::vector<int>> groups;
  for (const auto& c : sys.components()) {
    std::vector<int> g = c.nodes;
    std::sort(g.begin(), g.end());
    groups.push_back(g);
  }
  std::sort(groups.begin(), groups.end());
  std::string out;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (g) out += "|";
    for (std::size_t t = 0; t < groups[g].size(); ++t) {
      if (t) out += ",";
      out += std::to_string(mu[groups[g][t]]);
    }
  }
  return out;
}

}  // namespace levired
