#include "covlift/covering.hpp"

#include <doctest.h>

#include <cmath>

using namespace covlift;

namespace {

// the trefoil double-cover scene used throughout: (-8)-surgery plus a (-1)
// blow-up downstairs, branch over the pushed-in Seifert surface (S.S = -4)
CoveringScene trefoil_scene() {
  CoveringScene sc;
  sc.m = 2;
  IntMat Ld(2, 2);
  Ld << -8, 0, 0, -1;
  IntVec rd(2);
  rd << 0, 1;
  sc.downstairs = Presentation::make(Ld, rd);
  sc.downstairs_spin = SpinAssignment{0, 1};
  IntMat Lu(3, 3);
  Lu << -4, 0, 0, 0, 1, -2, 0, -2, 1;
  sc.upstairs = Presentation::make(Lu);
  sc.branch = {0};
  sc.correspondence = {{0}, {1, 2}};
  sc.s_dot_s = -4;
  return sc;
}

CoveringScene branch_rule_scene(long long m) {
  CoveringScene sc;
  sc.m = m;
  IntMat Ld(1, 1);
  Ld << Int(-2) * m;  // divisible by m
  sc.downstairs = Presentation::make(Ld);
  IntMat Lu(1, 1);
  Lu << -2;
  sc.upstairs = Presentation::make(Lu);
  sc.branch = {0};
  sc.correspondence = {{0}};
  return sc;
}

}  // namespace

TEST_CASE("cosecant identity: exact value vs floating sum") {
  CHECK(cosecant_sum(1) == 0);
  CHECK(cosecant_sum(2) == 1);
  for (long long m = 2; m <= 50; ++m) {
    Rat exact = cosecant_sum(m);
    double approx = cosecant_sum_float(m);
    double ex = static_cast<double>(numerator(exact).convert_to<long long>()) /
                static_cast<double>(denominator(exact).convert_to<long long>());
    CHECK(std::abs(ex - approx) < 1e-9);
  }
}

TEST_CASE("branch framing lift") {
  CHECK(lift_branch_framing(Int(-8), 2) == -4);
  CHECK_THROWS_WITH_AS(lift_branch_framing(Int(-7), 2),
                       doctest::Contains("NotDivisible"), Error);
}

TEST_CASE("d3 lift golden value") {
  CoveringScene sc = trefoil_scene();
  CHECK(sc.sigma_downstairs() == -2);
  CHECK(sc.sigma_upstairs() == -1);
  CHECK(d3_lift(Rat(-1, 4), sc) == Rat(1, 4));
}

TEST_CASE("sigma overrides take precedence over computed signatures") {
  CoveringScene sc = trefoil_scene();
  sc.sigma_down = -2;
  sc.sigma_up = -1;
  CHECK(d3_lift(Rat(-1, 4), sc) == Rat(1, 4));
}

TEST_CASE("spin lift branch rule table") {
  for (long long m = 2; m <= 5; ++m) {
    CoveringScene sc = branch_rule_scene(m);
    CHECK(spin_lift(sc, {1}) == SpinAssignment{1});  // 1 -> 1 always
    // 0 -> 1 exactly when m is even
    CHECK(spin_lift(sc, {0}) == SpinAssignment{m % 2 == 0 ? 1 : 0});
  }
}

TEST_CASE("spin lift copies free components and checks the result") {
  CoveringScene sc = trefoil_scene();
  CHECK(spin_lift(sc, {0, 1}) == SpinAssignment{1, 1, 1});
  // flipping the free bit makes the lift non-characteristic upstairs
  CHECK_THROWS_WITH_AS(spin_lift(sc, {0, 0}),
                       doctest::Contains("NotCharacteristicUpstairs"), Error);
}

TEST_CASE("scene validation") {
  CoveringScene sc = trefoil_scene();
  sc.correspondence = {{0}, {1}};  // free component must lift to m copies
  CHECK_THROWS_WITH_AS(validate_scene(sc), doctest::Contains("must lift to 2"),
                       Error);
  sc = trefoil_scene();
  sc.correspondence = {{0}, {0, 1}};  // double mapping
  CHECK_THROWS_WITH_AS(validate_scene(sc), doctest::Contains("mapped twice"),
                       Error);
  sc = trefoil_scene();
  sc.branch = {5};
  CHECK_THROWS_WITH_AS(validate_scene(sc), doctest::Contains("IndexError"),
                       Error);
}

TEST_CASE("elliptic verdicts") {
  IntMat L(3, 3);
  L << -2, 1, 0, 1, -4, 1, 0, 1, -2;
  Presentation cover = Presentation::make(L);
  IntVec z = IntVec::Zero(3);
  IntVec e2 = IntVec::Zero(3);
  e2(1) = 1;
  std::vector<KnownTight> known = {
      {"left", Rat(-1, 12), {{0, 0, 0}, -e2}},
      {"middle", Rat(1, 4), {{0, 0, 0}, z}},
      {"right", Rat(-1, 12), {{0, 0, 0}, e2}},
  };
  SpinCClass probe{{0, 0, 0}, z};
  auto v = verdict_elliptic(cover, Rat(1, 4), probe, known, true);
  CHECK(v.verdict == TightnessVerdict::Tight);
  CHECK(v.matched == "middle");

  auto v2 = verdict_elliptic(cover, Rat(7, 4), probe, known, true);
  CHECK(v2.verdict == TightnessVerdict::Overtwisted);
  auto v3 = verdict_elliptic(cover, Rat(7, 4), probe, known, false);
  CHECK(v3.verdict == TightnessVerdict::Inconclusive);

  // right d3 but wrong spin-c class: not a match
  SpinCClass off{{0, 0, 0}, e2};
  auto v4 = verdict_elliptic(cover, Rat(1, 4), off, known, true);
  CHECK(v4.verdict == TightnessVerdict::Overtwisted);
}

TEST_CASE("minimal L-space verdict") {
  CHECK(verdict_minimal_L(Rat(1, 4), Rat(3, 4)).verdict ==
        TightnessVerdict::Tight);
  CHECK(verdict_minimal_L(Rat(-1, 12), Rat(3, 4)).verdict ==
        TightnessVerdict::Overtwisted);
}

TEST_CASE("degree propagation branch table") {
  CHECK(degree_propagation(Rat(3, 4), Rat(3, 4)) ==
        DegreeProp::UpNonvanishingForced);
  CHECK(degree_propagation(Rat(-1, 4), Rat(3, 4)) ==
        DegreeProp::DownstairsVanishes);
  CHECK(degree_propagation(Rat(7, 4), Rat(3, 4)) == DegreeProp::NoConclusion);
  CHECK(std::string(degree_prop_str(DegreeProp::NoConclusion)) ==
        "NoConclusion");
}
