#include "doctest.h"

#include <set>

#include "levired/errors.hpp"
#include "levired/rootsys.hpp"
#include "levired/weyl.hpp"

using namespace levired;

namespace {

Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("type labels parse and reject bad input") {
  auto t = parse_type_label("A2 x A2");
  REQUIRE(t.size() == 2);
  CHECK(t[0] == SimpleType{Family::A, 2});
  CHECK(to_string(parse_type_label("d5")[0]) == "D5");
  CHECK_THROWS_AS(parse_type_label("E6"), InputError);
  CHECK_THROWS_AS(parse_type_label("B1"), InputError);
  CHECK_THROWS_AS(parse_type_label("D2"), InputError);
  CHECK_THROWS_AS(parse_type_label("A"), InputError);
  CHECK_THROWS_AS(parse_type_label("A2x"), InputError);
}

TEST_CASE("cartan conventions") {
  auto b3 = RootSystem::build("B3");
  CHECK(b3->cartan(1, 2) == -2);
  CHECK(b3->cartan(2, 1) == -1);
  CHECK(b3->symmetrizer() == std::vector<int>{2, 2, 1});
  auto c3 = RootSystem::build("C3");
  CHECK(c3->cartan(2, 1) == -2);
  CHECK(c3->symmetrizer() == std::vector<int>{1, 1, 2});
  auto d4 = RootSystem::build("D4");
  CHECK(d4->cartan(1, 3) == -1);
  CHECK(d4->cartan(2, 3) == 0);
}

TEST_CASE("positive root counts and Weyl group orders") {
  for (const char* label : {"A1", "A3", "A5", "B2", "B4", "C3", "C5", "D4", "D5", "A2xB2"}) {
    auto sys = RootSystem::build(label);
    std::size_t expected = 0;
    Integer order = 1;
    for (const auto& c : sys->components()) {
      expected += positive_root_count(c.type);
      const int n = c.type.rank;
      switch (c.type.family) {
        case Family::A: order *= factorial(n + 1); break;
        case Family::B:
        case Family::C: order *= factorial(n) * (Integer(1) << n); break;
        case Family::D: order *= factorial(n) * (Integer(1) << (n - 1)); break;
      }
    }
    CAPTURE(label);
    CHECK(sys->positive_roots().size() == expected);
    CHECK(sys->weyl_group_order() == order);
    if (order <= 4000) CHECK(Integer(enumerate_weyl_group(sys).size()) == order);
  }
}

TEST_CASE("roots pair with their own coroot to 2") {
  for (const char* label : {"B3", "C4", "D5", "A4"}) {
    auto sys = RootSystem::build(label);
    for (std::size_t r = 0; r < sys->positive_roots().size(); ++r) {
      CHECK(sys->coroot_pairing(sys->positive_roots_weight()[r], r) == 2);
    }
  }
}

TEST_CASE("root basis round trip") {
  auto a2 = RootSystem::build("A2");
  auto c = a2->to_root_basis(a2->rho());
  CHECK(c[0] == 1);
  CHECK(c[1] == 1);
  auto a1 = RootSystem::build("A1");
  CHECK(!a1->to_root_basis(Weight{1}).is_integral());
  CHECK_THROWS_AS(a1->from_root_basis(RootCoords({Rational(1, 3)})), InputError);
  auto d5 = RootSystem::build("D5");
  Weight mu{3, -1, 4, 1, -5};
  CHECK(d5->from_root_basis(d5->to_root_basis(mu)) == mu);
  CHECK(d5->in_positive_root_cone(d5->simple_root(3).coords()));
  CHECK(!d5->in_positive_root_cone((-d5->simple_root(3)).coords()));
}

TEST_CASE("invariant form is Weyl invariant") {
  auto sys = RootSystem::build("B3");
  Weight x{1, -2, 3}, y{0, 4, -1};
  for (int i = 0; i < 3; ++i) {
    IntVec sx = x.coords(), sy = y.coords();
    sys->reflect_weight(i, sx);
    sys->reflect_weight(i, sy);
    CHECK(sys->inner(Weight(sx), Weight(sy)) == sys->inner(x, y));
  }
}

TEST_CASE("Weyl words") {
  auto a4 = RootSystem::build("A4");
  auto w = WeylElement::parse(a4, "s3 s4 s2");
  CHECK(w.length() == 3);
  CHECK(WeylElement::parse(a4, "s3s4s2") == w);
  CHECK(WeylElement::parse(a4, "s_3 s_4 s_2") == w);
  CHECK(WeylElement::parse(a4, "e").is_identity());
  CHECK_THROWS_AS(WeylElement::parse(a4, "s7"), InputError);
  CHECK_THROWS_AS(WeylElement::parse(a4, "t1"), InputError);
  CHECK_THROWS_AS(WeylElement::parse(a4, "1"), InputError);
  // s1 s1 cancels
  CHECK(WeylElement::parse(a4, "s1 s1").is_identity());
  // braid relation
  CHECK(WeylElement::parse(a4, "s1 s2 s1") == WeylElement::parse(a4, "s2 s1 s2"));
  CHECK((w * w.inverse()).is_identity());
  // action applies the rightmost letter first
  Weight mu{1, 0, 0, 0};
  auto s12 = WeylElement::parse(a4, "s1 s2");
  IntVec step = mu.coords();
  a4->reflect_weight(1, step);
  a4->reflect_weight(0, step);
  CHECK(s12.act(mu).coords() == step);
}

TEST_CASE("longest element and reflections") {
  for (const char* label : {"A3", "B3", "C3", "D4"}) {
    auto sys = RootSystem::build(label);
    auto w0 = WeylElement::longest(sys);
    CHECK(static_cast<std::size_t>(w0.length()) == sys->positive_roots().size());
    CHECK(inversion_set(w0).size() == sys->positive_roots().size());
    for (std::size_t r = 0; r < sys->positive_roots().size(); ++r) {
      auto s = WeylElement::reflection(sys, r);
      CHECK(s.length() % 2 == 1);
      CHECK((s * s).is_identity());
      CHECK(s.act(Weight(sys->positive_roots_weight()[r])) == -Weight(sys->positive_roots_weight()[r]));
    }
  }
}

TEST_CASE("inversion sets and the shifted action of zero") {
  auto sys = RootSystem::build("C4");
  for (const auto& w : enumerate_weyl_group(sys)) {
    CHECK(inversion_set(w).size() == static_cast<std::size_t>(w.length()));
    // w^{-1}.0 = w^{-1} rho - rho
    CHECK(affine_zero_action(w) == w.inverse().act(sys->rho()) - sys->rho());
  }
}

TEST_CASE("minimal coset representatives") {
  auto a4 = RootSystem::build("A4");
  const std::vector<int> I{0, 1};
  auto [m1, u1] = min_coset_rep(WeylElement::parse(a4, "s3 s4 s2"), I);
  CHECK(m1 == WeylElement::parse(a4, "s3 s4"));
  CHECK(u1 == WeylElement::parse(a4, "s2"));
  auto [m2, u2] = min_coset_rep(WeylElement::parse(a4, "s4 s2 s3"), I);
  CHECK(m2 == WeylElement::parse(a4, "s4 s2 s3"));
  CHECK(u2.is_identity());
  auto [m, u] = min_coset_rep(WeylElement::parse(a4, "s2 s3 s4 s2 s3 s2"), I);
  CHECK(m == WeylElement::parse(a4, "s2 s3 s4 s2 s3"));
  CHECK(is_minimal_coset_rep(m, I));
  CHECK(!is_minimal_coset_rep(WeylElement::parse(a4, "s3 s4 s2"), I));

  // Exhaustive in B3: every element factors uniquely.
  auto b3 = RootSystem::build("B3");
  std::set<std::vector<int>> reps;
  for (const auto& w : enumerate_weyl_group(b3)) {
    auto [wm, wu] = min_coset_rep(w, {1, 2});
    CHECK(wm * wu == w);
    CHECK(wm.length() + wu.length() == w.length());
    reps.insert(wm.word());
  }
  CHECK(reps.size() == 48 / 8);
}

TEST_CASE("Levi subsystems") {
  auto a5 = RootSystem::build("A5");
  auto l = a5->levi({0, 1, 3, 4});
  CHECK(l->label() == "A2xA2");
  CHECK(format_by_components(*l, Weight{4, 12, 16, 10}) == "4,12|16,10");
  CHECK(RootSystem::build("D5")->levi({1, 2, 3, 4})->label() == "D4");
  CHECK(RootSystem::build("D5")->levi({2, 3, 4})->label() == "A3");
  CHECK(RootSystem::build("C5")->levi({0, 1, 2, 3})->label() == "A4");
  CHECK(RootSystem::build("C5")->levi({2, 3, 4})->label() == "C3");
  CHECK(RootSystem::build("B4")->levi({1, 2, 3})->label() == "B3");
  CHECK(RootSystem::build("A3")->levi({})->label() == "trivial");
  // A Levi keeps the ambient order of its nodes.
  auto c3 = RootSystem::build("C5")->levi({2, 3, 4});
  CHECK(c3->cartan(2, 1) == -2);
  CHECK(c3->weyl_group_order() == 48);
}

TEST_CASE("component weights follow Bourbaki order") {
  // B2 given with the short root first.
  auto sys = RootSystem::from_cartan({{2, -1}, {-2, 2}});
  REQUIRE(sys->components().size() == 1);
  CHECK(sys->components()[0].type == SimpleType{Family::B, 2});
  CHECK(sys->components()[0].nodes == std::vector<int>{1, 0});
  CHECK(component_weight(*sys, 0, Weight{5, 7}) == Weight{7, 5});
}
