#include "levired/reduce.hpp"

#include <algorithm>
#include <sstream>

#include "levired/errors.hpp"

namespace levired {

namespace {

void require_same_system(const SystemPtr& sys, const WeylElement& x) {
  if (!x.system() || x.system()->key() != sys->key()) {
    throw InputError("Weyl element " + x.str() + " belongs to a different root system than " + sys->label());
  }
}

std::string index_set(const std::vector<int>& I) {
  std::string out = "{";
  for (std::size_t t = 0; t < I.size(); ++t) out += (t ? "," : "") + std::to_string(I[t] + 1);
  return out + "}";
}

bool contains(const std::vector<int>& I, int j) { return std::binary_search(I.begin(), I.end(), j); }

Weight restrict_to(const Weight& mu, const std::vector<int>& I) {
  IntVec out;
  out.reserve(I.size());
  for (int i : I) out.push_back(mu[i]);
  return Weight(std::move(out));
}

// Component of lambda annihilated by the coroots of I, in rational
// fundamental-weight coordinates.
std::vector<Rational> a_part(const RootSystem& sys, const RootSystem& levi, const std::vector<int>& I,
                             const Weight& lambda) {
  std::vector<Rational> out(lambda.coords().begin(), lambda.coords().end());
  const auto& inv = levi.inverse_cartan_transpose();
  for (std::size_t s = 0; s < I.size(); ++s) {
    Rational c = 0;
    for (std::size_t t = 0; t < I.size(); ++t) c += inv[s][t] * lambda[I[t]];
    for (int p = 0; p < sys.rank(); ++p) out[p] -= c * sys.cartan(I[s], p);
  }
  return out;
}

std::string describe_outside(const RootCoords& c, const std::vector<int>& I) {
  std::string out;
  for (std::size_t p = 0; p < c.size(); ++p) {
    if (contains(I, static_cast<int>(p)) || c[p] == 0) continue;
    if (!out.empty()) out += ", ";
    out += "alpha" + std::to_string(p + 1) + ": " + c[p].str();
  }
  return out;
}

WeylElement translate(const SystemPtr& levi, const WeylElement& u, const std::vector<int>& nodes) {
  std::vector<int> word;
  word.reserve(u.word().size());
  for (int letter : u.word()) {
    const auto it = std::lower_bound(nodes.begin(), nodes.end(), letter);
    if (it == nodes.end() || *it != letter) throw InternalError("residual element leaves its parabolic subgroup");
    word.push_back(static_cast<int>(it - nodes.begin()));
  }
  return WeylElement::from_word(levi, word);
}

}  // namespace

FaceDatum FaceDatum::make(SystemPtr sys, std::vector<int> I, std::vector<WeylElement> ws, WeylElement w) {
  if (!sys) throw InputError("face datum without a root system");
  std::sort(I.begin(), I.end());
  I.erase(std::unique(I.begin(), I.end()), I.end());
  for (int i : I) {
    if (i < 0 || i >= sys->rank()) {
      throw InputError("simple root index " + std::to_string(i + 1) + " out of range for " + sys->label());
    }
  }
  for (const auto& x : ws) require_same_system(sys, x);
  require_same_system(sys, w);
  return FaceDatum{std::move(sys), std::move(I), std::move(ws), std::move(w)};
}

std::string FaceDatum::str() const {
  std::string out = system->label() + " I=" + index_set(I) + " ws=[";
  for (std::size_t i = 0; i < ws.size(); ++i) out += (i ? "; " : "") + ws[i].str();
  return out + "] w=" + w.str();
}

void MultiplicityProblem::validate() const {
  if (!system) throw InputError("problem without a root system");
  const auto n = static_cast<std::size_t>(system->rank());
  auto check = [&](const Weight& mu, const std::string& what) {
    if (mu.size() != n) {
      throw InputError(what + " " + mu.str() + " has " + std::to_string(mu.size()) + " coordinates, expected " +
                       std::to_string(n));
    }
    if (!mu.is_dominant()) throw InputError(what + " " + mu.str() + " is not dominant");
  };
  for (std::size_t i = 0; i < factors.size(); ++i) check(factors[i], "factor " + std::to_string(i + 1));
  check(target, "target");
}

SpanCheck in_span_I(const RootSystem& sys, const Weight& gamma, const std::vector<int>& I) {
  SpanCheck out;
  out.coords = sys.to_root_basis(gamma);
  out.in_span = true;
  for (std::size_t p = 0; p < out.coords.size(); ++p) {
    if (!contains(I, static_cast<int>(p)) && out.coords[p] != 0) out.in_span = false;
  }
  return out;
}

FaceReport check_face_conditions(const FaceDatum& fd, const SchubertOptions& opts) {
  FaceReport r;
  r.cond_i = true;
  for (const auto& x : fd.ws) r.minimal.push_back(is_minimal_coset_rep(x, fd.I));
  r.minimal.push_back(is_minimal_coset_rep(fd.w, fd.I));
  for (bool m : r.minimal) r.cond_i = r.cond_i && m;

  int total = 0;
  for (const auto& x : fd.ws) total += x.length();
  r.cond_ii_length = total == fd.w.length();

  r.disjoint_inversions = disjoint_inversion_check(fd.ws, fd.w);
  const IntersectionResult ir = intersection(fd.system, fd.ws, fd.w, opts);
  r.intersection = ir.value;
  r.intersection_note = ir.note;
  if (r.disjoint_inversions && ir.value != 1) {
    throw InternalError("inversion sets partition that of " + fd.w.str() + " but the intersection number is " +
                        ir.value.str());
  }
  r.cond_ii_intersection = ir.value == 1;

  Weight shift = fd.system->zero();
  for (const auto& x : fd.ws) shift += affine_zero_action(x);
  shift -= affine_zero_action(fd.w);
  const SpanCheck span = in_span_I(*fd.system, shift, fd.I);
  r.cond_iii_weight = span.coords;
  r.cond_iii = span.in_span && span.coords.is_integral() &&
               std::all_of(span.coords.coords().begin(), span.coords.coords().end(),
                           [](const Rational& q) { return q >= 0; });
  return r;
}

Weight face_defect(const FaceDatum& fd, const MultiplicityProblem& prob) {
  if (prob.system->key() != fd.system->key()) {
    throw InputError("problem is over " + prob.system->label() + " but the face datum is over " + fd.system->label());
  }
  if (prob.factors.size() != fd.ws.size()) {
    throw InputError("problem has " + std::to_string(prob.factors.size()) + " factors but the face datum has " +
                     std::to_string(fd.ws.size()) + " Weyl elements");
  }
  prob.validate();
  Weight gamma = fd.system->zero();
  for (std::size_t i = 0; i < fd.ws.size(); ++i) gamma += fd.ws[i].inverse().act(prob.factors[i]);
  gamma -= fd.w.inverse().act(prob.target);
  return gamma;
}

bool on_face(const FaceDatum& fd, const MultiplicityProblem& prob) {
  return in_span_I(*fd.system, face_defect(fd, prob), fd.I).in_span;
}

ReducedProblem restrict_problem(const FaceDatum& fd, const MultiplicityProblem& prob) {
  const SpanCheck span = in_span_I(*fd.system, face_defect(fd, prob), fd.I);
  if (!span.in_span) {
    throw PreconditionFailed("problem is not on the face " + index_set(fd.I) +
                             "; nonzero root coordinates outside I: " + describe_outside(span.coords, fd.I));
  }
  for (const auto& x : fd.ws) {
    if (!is_minimal_coset_rep(x, fd.I)) {
      throw PreconditionFailed(x.str() + " is not a minimal coset representative for I=" + index_set(fd.I));
    }
  }
  if (!is_minimal_coset_rep(fd.w, fd.I)) {
    throw PreconditionFailed(fd.w.str() + " is not a minimal coset representative for I=" + index_set(fd.I));
  }

  ReducedProblem out{fd.system->levi(fd.I), {}, {}, fd};
  std::vector<Rational> a_sum(fd.system->rank(), Rational(0));
  auto take = [&](const WeylElement& x, const Weight& mu, int sign) {
    const Weight moved = x.inverse().act(mu);
    const auto a = a_part(*fd.system, *out.levi_system, fd.I, moved);
    for (std::size_t p = 0; p < a.size(); ++p) a_sum[p] += sign * a[p];
    Weight small = restrict_to(moved, fd.I);
    if (!small.is_dominant()) throw InternalError("restriction of " + mu.str() + " is not dominant for the Levi");
    return small;
  };
  for (std::size_t i = 0; i < fd.ws.size(); ++i) out.factors.push_back(take(fd.ws[i], prob.factors[i], 1));
  out.target = take(fd.w, prob.target, -1);
  for (const auto& q : a_sum) {
    if (q != 0) throw InternalError("central parts fail to cancel on the face " + index_set(fd.I));
  }
  return out;
}

VerifyReport verify_reduction(const FaceDatum& fd, const MultiplicityProblem& prob, const SchubertOptions& opts) {
  const FaceReport rep = check_face_conditions(fd, opts);
  if (!rep.cond_i) throw PreconditionFailed("minimal-length condition fails for " + fd.str());
  if (!rep.cond_ii_length) throw PreconditionFailed("lengths do not add up for " + fd.str());
  if (!rep.cond_ii_intersection) {
    throw PreconditionFailed("intersection number is " + rep.intersection.str() + ", not 1, for " + fd.str());
  }
  const ReducedProblem small = restrict_problem(fd, prob);
  VerifyReport out;
  out.mult_big = prob.multiplicity();
  out.mult_small = small.as_problem().multiplicity();
  out.equal = out.mult_big == out.mult_small;
  return out;
}

BoundReport reduce_or_bound(const FaceDatum& fd, const MultiplicityProblem& prob, const SchubertOptions& opts) {
  for (const auto& x : fd.ws) {
    if (!is_minimal_coset_rep(x, fd.I)) throw PreconditionFailed("minimal-length condition fails for " + fd.str());
  }
  if (!is_minimal_coset_rep(fd.w, fd.I)) throw PreconditionFailed("minimal-length condition fails for " + fd.str());
  const IntersectionResult ir = intersection(fd.system, fd.ws, fd.w, opts);
  if (ir.value < 1) {
    throw PreconditionFailed("intersection number is 0 for " + fd.str() + (ir.note.empty() ? "" : " (" + ir.note + ")"));
  }
  const ReducedProblem small = restrict_problem(fd, prob);
  BoundReport out;
  out.intersection = ir.value;
  out.mult_big = prob.multiplicity();
  out.mult_small = small.as_problem().multiplicity();
  out.bound_holds = out.mult_big <= out.mult_small;
  return out;
}

FaceDatum rule_for_subset(const SystemPtr& sys, const std::vector<WeylElement>& ws, const WeylElement& w,
                          const std::vector<int>& I) {
  std::vector<WeylElement> reps;
  reps.reserve(ws.size());
  for (const auto& x : ws) reps.push_back(min_coset_rep(x, I).first);
  return FaceDatum::make(sys, I, std::move(reps), min_coset_rep(w, I).first);
}

std::vector<FaceDatum> generate_rules(const SystemPtr& sys, const std::vector<WeylElement>& ws,
                                      const WeylElement& w) {
  for (const auto& x : ws) require_same_system(sys, x);
  require_same_system(sys, w);
  if (!disjoint_inversion_check(ws, w)) {
    throw PreconditionFailed("inversion sets of the factors do not partition the inversion set of " + w.str());
  }
  const int n = sys->rank();
  if (n > 20) throw ResourceLimit("too many subsets of simple roots");
  std::vector<FaceDatum> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> I;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) I.push_back(i);
    }
    out.push_back(rule_for_subset(sys, ws, w, I));
  }
  return out;
}

std::pair<FaceDatum, FaceDatum> factor_rule(const FaceDatum& fd, int j) {
  const int n = fd.system->rank();
  if (j < 0 || j >= n) throw InputError("simple root index " + std::to_string(j + 1) + " out of range");
  if (contains(fd.I, j)) {
    throw InputError("simple root " + std::to_string(j + 1) + " lies in I=" + index_set(fd.I) +
                     "; the cut root must lie outside I");
  }
  std::vector<int> keep;
  for (int i = 0; i < n; ++i) {
    if (i != j) keep.push_back(i);
  }

  std::vector<WeylElement> heads, tails;
  for (const auto& x : fd.ws) {
    auto [head, tail] = min_coset_rep(x, keep);
    heads.push_back(head);
    tails.push_back(tail);
  }
  auto [whead, wtail] = min_coset_rep(fd.w, keep);
  FaceDatum first = FaceDatum::make(fd.system, keep, heads, whead);

  const SystemPtr levi = fd.system->levi(keep);
  std::vector<WeylElement> residual_ws;
  for (const auto& u : tails) residual_ws.push_back(translate(levi, u, keep));
  std::vector<int> residual_I;
  for (int i : fd.I) residual_I.push_back(static_cast<int>(std::lower_bound(keep.begin(), keep.end(), i) - keep.begin()));
  FaceDatum second = FaceDatum::make(levi, residual_I, residual_ws, translate(levi, wtail, keep));
  return {std::move(first), std::move(second)};
}

int face_codimension(const FaceDatum& fd) { return fd.system->rank() - static_cast<int>(fd.I.size()); }

MultiplicityProblem sample_on_face(const FaceDatum& fd, std::mt19937_64& rng, const SampleOptions& opts) {
  const RootSystem& sys = *fd.system;
  const int n = sys.rank();
  const std::size_t k = fd.ws.size();
  const std::size_t nvars = (k + 1) * static_cast<std::size_t>(n);
  const Coord lo = opts.strictly_dominant ? 1 : 0;
  if (opts.max_entry < lo) throw InputError("sampling box is empty");

  // Columns: target coordinates first, so pivots land on the target when possible.
  auto column = [&](std::size_t factor, int t) {
    return factor == k ? static_cast<std::size_t>(t) : static_cast<std::size_t>(n) * (factor + 1) + t;
  };
  std::vector<std::vector<Rational>> rows;
  std::vector<std::vector<IntVec>> images(k + 1, std::vector<IntVec>(n));
  for (std::size_t f = 0; f <= k; ++f) {
    const WeylElement inv = (f == k ? fd.w : fd.ws[f]).inverse();
    for (int t = 0; t < n; ++t) {
      IntVec omega(n, 0);
      omega[t] = 1;
      inv.act_in_place(omega);
      images[f][t] = sys.scaled_root_coords(omega);
    }
  }
  for (int p = 0; p < n; ++p) {
    if (contains(fd.I, p)) continue;
    std::vector<Rational> row(nvars, Rational(0));
    for (std::size_t f = 0; f <= k; ++f) {
      for (int t = 0; t < n; ++t) row[column(f, t)] = Rational(f == k ? -images[f][t][p] : images[f][t][p]);
    }
    rows.push_back(std::move(row));
  }

  // Reduced row echelon form.
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nvars && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rational lead = rows[r][c];
    for (auto& x : rows[r]) x /= lead;
    for (std::size_t q = 0; q < rows.size(); ++q) {
      if (q == r || rows[q][c] == 0) continue;
      const Rational f = rows[q][c];
      for (std::size_t x = 0; x < nvars; ++x) rows[q][x] -= f * rows[r][x];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(nvars, false);
  for (auto c : pivots) is_pivot[c] = true;

  const Coord pivot_cap = opts.max_entry * static_cast<Coord>(4 * (k + 1));
  // Targets on a face are comparable to the sum of the factors.
  std::uniform_int_distribution<Coord> draw(lo, opts.max_entry);
  std::uniform_int_distribution<Coord> draw_target(lo, opts.max_entry * static_cast<Coord>(std::max<std::size_t>(k, 1)));
  std::bernoulli_distribution coin(0.5);
  std::vector<Coord> x(nvars);
  for (std::size_t attempt = 0; attempt < opts.max_attempts; ++attempt) {
    // Faces inside chamber walls force some coordinates to the bound, so
    // every other attempt pins a random subset of free coordinates there.
    const bool sparse = attempt % 2 == 1;
    for (std::size_t c = 0; c < nvars; ++c) {
      if (is_pivot[c]) {
        x[c] = 0;
      } else if (sparse && coin(rng)) {
        x[c] = lo;
      } else {
        x[c] = c < static_cast<std::size_t>(n) ? draw_target(rng) : draw(rng);
      }
    }
    bool ok = true;
    for (std::size_t q = 0; q < pivots.size() && ok; ++q) {
      Rational v = 0;
      for (std::size_t c = 0; c < nvars; ++c) {
        if (!is_pivot[c] && rows[q][c] != 0) v -= rows[q][c] * x[c];
      }
      if (denominator(v) != 1 || v < lo || v > pivot_cap) {
        ok = false;
      } else {
        x[pivots[q]] = to_coord(v);
      }
    }
    if (!ok) continue;
    MultiplicityProblem prob{fd.system, {}, {}};
    for (std::size_t f = 0; f < k; ++f) {
      IntVec mu(n);
      for (int t = 0; t < n; ++t) mu[t] = x[column(f, t)];
      prob.factors.emplace_back(std::move(mu));
    }
    IntVec target(n);
    for (int t = 0; t < n; ++t) target[t] = x[column(k, t)];
    prob.target = Weight(std::move(target));
    if (opts.below_sum) {
      Weight gap = fd.system->zero();
      for (const auto& mu : prob.factors) gap += mu;
      gap -= prob.target;
      if (!sys.in_positive_root_cone(gap.coords())) continue;
    }
    return prob;
  }
  throw ResourceLimit("no on-face sample found in " + std::to_string(opts.max_attempts) + " attempts for " + fd.str());
}

}  // namespace levired
