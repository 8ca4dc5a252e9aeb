#include "doctest.h"

#include <functional>
#include <random>

#include "levired/errors.hpp"
#include "levired/reduce.hpp"

using namespace levired;

namespace {

WeylElement W(const SystemPtr& sys, const char* word) { return WeylElement::parse(sys, word); }

// 1-based I for readability.
FaceDatum face(const SystemPtr& sys, std::vector<int> I, std::vector<const char*> ws, const char* w) {
  for (int& i : I) --i;
  std::vector<WeylElement> xs;
  for (const char* s : ws) xs.push_back(W(sys, s));
  return FaceDatum::make(sys, I, xs, W(sys, w));
}

MultiplicityProblem problem(const SystemPtr& sys, std::vector<Weight> factors, Weight target) {
  return {sys, std::move(factors), std::move(target)};
}

Weight compose(const FaceDatum& first, const FaceDatum& second, const MultiplicityProblem& prob, std::size_t which) {
  const ReducedProblem mid = restrict_problem(first, prob);
  const ReducedProblem last = restrict_problem(second, mid.as_problem());
  return which < last.factors.size() ? last.factors[which] : last.target;
}

using Linear = std::function<bool(const MultiplicityProblem&)>;

// Half random box tuples (almost all off the face), half sampled on it.
void agree_with_span_test(const FaceDatum& fd, const Linear& closed_form, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Coord> box(0, 9);
  const int n = fd.system->rank();
  SampleOptions opts;
  opts.below_sum = false;
  int on = 0;
  for (int trial = 0; trial < 100; ++trial) {
    MultiplicityProblem prob;
    if (trial % 2 == 0) {
      prob = sample_on_face(fd, rng, opts);
    } else {
      prob.system = fd.system;
      for (std::size_t f = 0; f <= fd.ws.size(); ++f) {
        IntVec mu(n);
        for (auto& x : mu) x = box(rng);
        (f == fd.ws.size() ? prob.target : prob.factors.emplace_back()) = Weight(mu);
      }
    }
    const bool generic = on_face(fd, prob);
    on += generic;
    CAPTURE(prob.target.str());
    CHECK(closed_form(prob) == generic);
  }
  CHECK(on >= 50);
}

Coord weighted(const Weight& x) {
  Coord s = 0;
  for (std::size_t r = 0; r < x.size(); ++r) s += static_cast<Coord>(r + 1) * x[r];
  return s;
}

}  // namespace

TEST_CASE("span membership") {
  auto a2 = RootSystem::build("A2");
  CHECK(in_span_I(*a2, a2->zero(), {}).in_span);
  const SpanCheck c = in_span_I(*a2, a2->simple_root(1), {0});
  CHECK(!c.in_span);
  CHECK(c.coords == RootCoords({Rational(0), Rational(1)}));
  CHECK(in_span_I(*a2, a2->simple_root(1), {1}).in_span);
}

TEST_CASE("A5 codimension-one example") {
  auto a5 = RootSystem::build("A5");
  const FaceDatum fd = face(a5, {1, 2, 4, 5}, {"s3", "s3"}, "s4 s3");
  const FaceReport rep = check_face_conditions(fd);
  CHECK(rep.all());
  CHECK(face_codimension(fd) == 1);

  const auto prob = problem(a5, {{4, 2, 10, 6, 10}, {10, 4, 12, 4, 2}}, {10, 22, 1, 1, 25});
  CHECK(on_face(fd, prob));
  const ReducedProblem small = restrict_problem(fd, prob);
  CHECK(small.levi_system->label() == "A2xA2");
  CHECK(format_by_components(*small.levi_system, small.factors[0]) == "4,12|16,10");
  CHECK(format_by_components(*small.levi_system, small.factors[1]) == "10,16|16,2");
  CHECK(format_by_components(*small.levi_system, small.target) == "10,24|1,26");
  const VerifyReport v = verify_reduction(fd, prob);
  CHECK(v.mult_big == 10);
  CHECK(v.mult_small == 10);
  CHECK(v.equal);
  const BoundReport b = reduce_or_bound(fd, prob);
  CHECK(b.bound_holds);
  CHECK(b.mult_big == b.mult_small);

  // the single face equation is the alpha_3 coordinate
  agree_with_span_test(
      fd,
      [](const MultiplicityProblem& p) {
        auto form = [](const Weight& x) { return x[0] + 2 * x[1] + x[2] + 2 * x[3] + x[4]; };
        const Weight& c = p.target;
        return c[0] + 2 * c[1] + c[2] + c[4] == form(p.factors[0]) + form(p.factors[1]);
      },
      42);
}

TEST_CASE("projective-space rules in A5") {
  auto a5 = RootSystem::build("A5");
  const auto chain = [&](int len) {
    std::vector<int> word;
    for (int r = len; r >= 1; --r) word.push_back(r - 1);
    return WeylElement::from_word(a5, word);
  };
  const int n = 5;
  for (auto [i, j] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 3}, {2, 2}, {3, 2}}) {
    const int k = i + j;
    const FaceDatum fd = FaceDatum::make(a5, {1, 2, 3, 4}, {chain(i), chain(j)}, chain(k));
    CAPTURE(i);
    CAPTURE(j);
    CHECK(check_face_conditions(fd).all());
    auto form = [n](const Weight& x, int m) {
      Coord tail = 0;
      for (int r = m + 1; r <= n; ++r) tail += x[r - 1];
      return (n + 1) * tail - weighted(x);
    };
    agree_with_span_test(
        fd,
        [&](const MultiplicityProblem& p) {
          return form(p.target, k) == form(p.factors[0], i) + form(p.factors[1], j);
        },
        100 + i * 10 + j);
  }

  const FaceDatum gh = FaceDatum::make(a5, {1, 2, 3, 4}, {chain(1), chain(1)}, chain(2));
  auto prob = problem(a5, {{3, 1, 3, 2, 1}, {4, 1, 2, 3, 4}}, {1, 1, 8, 3, 4});
  const ReducedProblem small = restrict_problem(gh, prob);
  CHECK(small.factors[0] == Weight{4, 3, 2, 1});
  CHECK(small.factors[1] == Weight{5, 2, 3, 4});
  CHECK(small.target == Weight{1, 9, 3, 4});
  const VerifyReport v = verify_reduction(gh, prob);
  CHECK(v.mult_big == 24);
  CHECK(v.equal);

  prob.target[0] += 1;
  CHECK(!on_face(gh, prob));
  CHECK_THROWS_AS(restrict_problem(gh, prob), PreconditionFailed);
}

TEST_CASE("A4 codimension-two example and its factorisations") {
  auto a4 = RootSystem::build("A4");
  const std::vector<WeylElement> ws{W(a4, "s3 s4 s2"), W(a4, "s4 s2 s3")};
  const WeylElement w = W(a4, "s2 s3 s4 s2 s3 s2");
  const FaceDatum raw = FaceDatum::make(a4, {0, 1}, ws, w);
  CHECK(!check_face_conditions(raw).cond_i);

  const auto rules = generate_rules(a4, ws, w);
  REQUIRE(rules.size() == 16);
  const FaceDatum& fd = rules[0b0011];
  CHECK(fd.I == std::vector<int>{0, 1});
  CHECK(fd.ws[0] == W(a4, "s3 s4"));
  CHECK(fd.ws[1] == W(a4, "s4 s2 s3"));
  CHECK(fd.w == W(a4, "s2 s3 s4 s2 s3"));
  CHECK(check_face_conditions(fd).all());
  CHECK(face_codimension(fd) == 2);
  CHECK(rules[0].ws == ws);
  CHECK(rules[0b1111].w.is_identity());

  const auto prob = problem(a4, {{12, 2, 7, 4}, {3, 6, 4, 15}}, {22, 1, 1, 7});
  const ReducedProblem small = restrict_problem(fd, prob);
  CHECK(small.factors[0] == Weight{12, 9});
  CHECK(small.factors[1] == Weight{9, 19});
  CHECK(small.target == Weight{24, 7});
  const VerifyReport v = verify_reduction(fd, prob);
  CHECK(v.mult_big == 2);
  CHECK(v.equal);

  for (int j : {2, 3}) {
    const auto [first, second] = factor_rule(fd, j);
    CAPTURE(j);
    CHECK(face_codimension(first) == 1);
    CHECK(face_codimension(second) == 1);
    CHECK(check_face_conditions(first).all());
    CHECK(check_face_conditions(second).all());
    CHECK(compose(first, second, prob, 0) == Weight{12, 9});
    CHECK(compose(first, second, prob, 1) == Weight{9, 19});
    CHECK(compose(first, second, prob, 2) == Weight{24, 7});
  }
  CHECK_THROWS_AS(factor_rule(fd, 0), InputError);

  agree_with_span_test(
      fd,
      [](const MultiplicityProblem& p) {
        const Weight &a = p.factors[0], &b = p.factors[1], &c = p.target;
        return 2 * c[0] - c[1] - 4 * c[2] - 2 * c[3] ==
                   (2 * a[0] + 4 * a[1] + a[2] + 3 * a[3]) + (2 * b[0] - b[1] + b[2] - 2 * b[3]) &&
               c[0] - 3 * c[1] - 2 * c[2] - c[3] ==
                   (a[0] + 2 * a[1] - 2 * a[2] - a[3]) + (b[0] + 2 * b[1] + 3 * b[2] - b[3]);
      },
      7);
}

TEST_CASE("quadric rules in D5") {
  auto d5 = RootSystem::build("D5");
  const int n = 5;
  const auto chain = [&](int len) {
    std::vector<int> word;
    for (int r = len; r >= 1; --r) word.push_back(r - 1);
    return WeylElement::from_word(d5, word);
  };
  for (auto [i, j] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}}) {
    const int k = i + j;
    const FaceDatum fd = FaceDatum::make(d5, {1, 2, 3, 4}, {chain(i), chain(j)}, chain(k));
    CAPTURE(i);
    CAPTURE(j);
    CHECK(check_face_conditions(fd).all());
    auto form = [n](const Weight& x, int m) {
      Coord s = x[n - 2] + x[n - 1];
      for (int r = m + 1; r <= n - 2; ++r) s += 2 * x[r - 1];
      return s;
    };
    agree_with_span_test(
        fd,
        [&](const MultiplicityProblem& p) {
          return form(p.target, k) == form(p.factors[0], i) + form(p.factors[1], j);
        },
        200 + i * 10 + j);
  }
  const FaceDatum fd = FaceDatum::make(d5, {1, 2, 3, 4}, {chain(1), chain(1)}, chain(2));
  const auto prob = problem(d5, {{7, 1, 6, 5, 7}, {4, 1, 4, 3, 4}}, {1, 1, 16, 4, 7});
  const ReducedProblem small = restrict_problem(fd, prob);
  CHECK(small.levi_system->label() == "D4");
  CHECK(small.factors[0] == Weight{8, 6, 5, 7});
  CHECK(small.factors[1] == Weight{5, 4, 3, 4});
  CHECK(small.target == Weight{1, 17, 4, 7});
}

TEST_CASE("Lagrangian rule in C5") {
  auto c5 = RootSystem::build("C5");
  const FaceDatum fd = face(c5, {1, 2, 3, 4}, {"s5", "s4 s5"}, "s5 s4 s5");
  const FaceReport rep = check_face_conditions(fd);
  CHECK(rep.all());
  CHECK(rep.cond_iii_weight == RootCoords({0, 0, 0, 2, 0}));
  // s3 s4 s5 carries coefficient two in the product
  const FaceDatum other = face(c5, {1, 2, 3, 4}, {"s5", "s4 s5"}, "s3 s4 s5");
  CHECK(check_face_conditions(other).intersection == 2);
  CHECK(!check_face_conditions(other).cond_ii_intersection);

  const auto prob = problem(c5, {{8, 4, 3, 1, 3}, {3, 2, 1, 6, 1}}, {6, 6, 14, 1, 1});
  const ReducedProblem small = restrict_problem(fd, prob);
  CHECK(small.levi_system->label() == "A4");
  CHECK(small.factors[0] == Weight{8, 4, 3, 7});
  CHECK(small.factors[1] == Weight{3, 2, 7, 8});
  CHECK(small.target == Weight{6, 6, 17, 1});
  const VerifyReport v = verify_reduction(fd, prob);
  CHECK(v.mult_big == 31);
  CHECK(v.equal);

  agree_with_span_test(
      fd,
      [](const MultiplicityProblem& p) {
        const Weight &a = p.factors[0], &b = p.factors[1], &c = p.target;
        return weighted(c) - 2 * c[3] - 4 * c[4] == weighted(a) - 2 * a[4] + weighted(b) - 2 * b[3] - 2 * b[4];
      },
      11);
}

TEST_CASE("trivial face data") {
  auto b3 = RootSystem::build("B3");
  const FaceDatum fd = face(b3, {1, 2, 3}, {"e", "e"}, "e");
  CHECK(check_face_conditions(fd).all());
  const auto prob = problem(b3, {{1, 0, 2}, {0, 1, 1}}, {1, 1, 1});
  const ReducedProblem small = restrict_problem(fd, prob);
  CHECK(small.factors == prob.factors);
  CHECK(small.target == prob.target);
  const VerifyReport v = verify_reduction(fd, prob);
  CHECK(v.equal);
  CHECK(face_codimension(fd) == 0);
}

TEST_CASE("random on-face instances reduce correctly") {
  auto a5 = RootSystem::build("A5");
  auto a4 = RootSystem::build("A4");
  auto d5 = RootSystem::build("D5");
  auto c5 = RootSystem::build("C5");
  const std::vector<FaceDatum> faces{
      face(a5, {1, 2, 4, 5}, {"s3", "s3"}, "s4 s3"),
      face(a5, {2, 3, 4, 5}, {"s1", "s1"}, "s2 s1"),
      face(a4, {1, 2}, {"s3 s4", "s4 s2 s3"}, "s2 s3 s4 s2 s3"),
      face(d5, {2, 3, 4, 5}, {"s1", "s1"}, "s2 s1"),
      face(c5, {1, 2, 3, 4}, {"s5", "s4 s5"}, "s5 s4 s5"),
  };
  std::mt19937_64 rng(2024);
  SampleOptions opts;
  opts.max_entry = 4;
  for (const auto& fd : faces) {
    int nonzero = 0;
    for (int trial = 0; trial < 8; ++trial) {
      const auto prob = sample_on_face(fd, rng, opts);
      CAPTURE(fd.str());
      CAPTURE(prob.target.str());
      REQUIRE(on_face(fd, prob));
      const VerifyReport v = verify_reduction(fd, prob);
      CHECK(v.equal);
      nonzero += v.mult_big != 0;
    }
    CHECK(nonzero > 0);
  }
}

TEST_CASE("restriction preserves strict dominance") {
  auto a5 = RootSystem::build("A5");
  auto c5 = RootSystem::build("C5");
  std::mt19937_64 rng(5);
  SampleOptions opts;
  opts.strictly_dominant = true;
  opts.max_entry = 8;
  for (const auto& fd : {face(a5, {1, 2, 4, 5}, {"s3", "s3"}, "s4 s3"),
                         face(c5, {1, 2, 3, 4}, {"s5", "s4 s5"}, "s5 s4 s5")}) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto prob = sample_on_face(fd, rng, opts);
      REQUIRE(prob.target.is_strictly_dominant());
      const ReducedProblem small = restrict_problem(fd, prob);
      for (const auto& mu : small.factors) CHECK(mu.is_strictly_dominant());
      CHECK(small.target.is_strictly_dominant());
    }
  }
}

TEST_CASE("generated rules satisfy every condition in A3") {
  auto a3 = RootSystem::build("A3");
  const auto all = enumerate_weyl_group(a3);
  int partitions = 0;
  for (const auto& w : all) {
    for (const auto& x : all) {
      for (const auto& y : all) {
        if (!disjoint_inversion_check({x, y}, w)) continue;
        ++partitions;
        for (const auto& fd : generate_rules(a3, {x, y}, w)) {
          const FaceReport rep = check_face_conditions(fd);
          CAPTURE(fd.str());
          CHECK(rep.all());
        }
      }
    }
  }
  CHECK(partitions > 24);
  CHECK_THROWS_AS(generate_rules(a3, {W(a3, "s1"), W(a3, "s1")}, W(a3, "s1 s2")), PreconditionFailed);
}

TEST_CASE("factoring through codimension one is compositional") {
  std::mt19937_64 rng(77);
  int checked = 0;
  for (const char* label : {"A4", "B3", "C3", "D4"}) {
    auto sys = RootSystem::build(label);
    const auto all = enumerate_weyl_group(sys);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    const int n = sys->rank();
    int here = 0;
    while (here < 6) {
      const WeylElement w = all[pick(rng)];
      const WeylElement x = all[pick(rng)];
      if (x.length() > w.length()) continue;
      const WeylElement y = x.inverse() * w;
      if (!disjoint_inversion_check({x, y}, w)) continue;
      const auto rules = generate_rules(sys, {x, y}, w);
      const auto& fd = rules[std::uniform_int_distribution<std::size_t>(0, rules.size() - 1)(rng)];
      if (face_codimension(fd) < 2) continue;
      std::vector<int> outside;
      for (int i = 0; i < n; ++i) {
        if (!std::binary_search(fd.I.begin(), fd.I.end(), i)) outside.push_back(i);
      }
      const int j = outside[std::uniform_int_distribution<std::size_t>(0, outside.size() - 1)(rng)];
      const auto [first, second] = factor_rule(fd, j);
      CAPTURE(fd.str());
      CAPTURE(j);
      CHECK(face_codimension(first) == 1);
      CHECK(face_codimension(second) == face_codimension(fd) - 1);
      CHECK(check_face_conditions(first).all());
      CHECK(check_face_conditions(second).all());
      const auto prob = sample_on_face(fd, rng);
      const ReducedProblem direct = restrict_problem(fd, prob);
      for (std::size_t f = 0; f <= 2; ++f) {
        CHECK(compose(first, second, prob, f) == (f < 2 ? direct.factors[f] : direct.target));
      }
      ++here;
      ++checked;
    }
  }
  CHECK(checked >= 20);

  // a codimension-one datum factors as itself and a trivial residual
  auto a5 = RootSystem::build("A5");
  const FaceDatum fd = face(a5, {1, 2, 4, 5}, {"s3", "s3"}, "s4 s3");
  const auto [first, second] = factor_rule(fd, 2);
  CHECK(first.ws == fd.ws);
  CHECK(first.w == fd.w);
  CHECK(face_codimension(second) == 0);
  CHECK(second.w.is_identity());

  // chains of cuts terminate after exactly codim steps
  auto a4 = RootSystem::build("A4");
  FaceDatum cur = generate_rules(a4, {W(a4, "s3 s4 s2"), W(a4, "s4 s2 s3")}, W(a4, "s2 s3 s4 s2 s3 s2"))[0b0001];
  int steps = 0;
  while (face_codimension(cur) > 0) {
    int j = 0;
    while (std::binary_search(cur.I.begin(), cur.I.end(), j)) ++j;
    cur = factor_rule(cur, j).second;
    ++steps;
  }
  CHECK(steps == 3);
}

TEST_CASE("bound for intersection numbers above one") {
  int found = 0;
  std::mt19937_64 rng(31);
  for (const char* label : {"B2", "C2", "A3", "B3", "C3"}) {
    auto sys = RootSystem::build(label);
    const auto all = enumerate_weyl_group(sys);
    const int n = sys->rank();
    for (unsigned mask = 1; mask + 1 < (1u << n) && found < 12; ++mask) {
      std::vector<int> I;
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) I.push_back(i);
      }
      for (const auto& w : all) {
        if (!is_minimal_coset_rep(w, I)) continue;
        for (const auto& x : all) {
          for (const auto& y : all) {
            if (x.length() + y.length() != w.length() || !(x < y || x == y)) continue;
            if (!is_minimal_coset_rep(x, I) || !is_minimal_coset_rep(y, I)) continue;
            if (intersection_number(sys, {x, y}, w) < 2) continue;
            const FaceDatum fd = FaceDatum::make(sys, I, {x, y}, w);
            CAPTURE(fd.str());
            // some of these faces carry no small instance below the factor sum
            auto sample = [&] {
              SampleOptions opts;
              opts.max_attempts = 20000;
              try {
                return sample_on_face(fd, rng, opts);
              } catch (const ResourceLimit&) {
                opts.below_sum = false;
                return sample_on_face(fd, rng, opts);
              }
            };
            CHECK_THROWS_AS(verify_reduction(fd, sample()), PreconditionFailed);
            for (int trial = 0; trial < 3; ++trial) {
              const BoundReport b = reduce_or_bound(fd, sample());
              CHECK(b.intersection >= 2);
              CHECK(b.bound_holds);
            }
            ++found;
          }
        }
      }
    }
  }
  CHECK(found > 0);

  auto a2 = RootSystem::build("A2");
  const FaceDatum zero = face(a2, {1}, {"s2", "s2"}, "s2");
  CHECK_THROWS_AS(reduce_or_bound(zero, problem(a2, {{0, 0}, {0, 0}}, {0, 0})), PreconditionFailed);
}
