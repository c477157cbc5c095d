#include "covlift/grid.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace covlift;

namespace {

GridDiagram trefoil() {
  return GridDiagram::make({2, 1, 0, 5, 4, 3}, {5, 3, 2, 4, 1, 0}, true);
}

}  // namespace

TEST_CASE("grid validation") {
  CHECK_THROWS_WITH_AS(GridDiagram::make({0, 0}, {1, 0}),
                       doctest::Contains("permutations"), Error);
  CHECK_THROWS_WITH_AS(GridDiagram::make({0, 1}, {0, 1}),
                       doctest::Contains("share"), Error);
  CHECK_THROWS_WITH_AS(
      GridDiagram::make({1, 0}, {0, 1}, false, std::vector<Int>{Int(0), Int(0)}),
      doctest::Contains("framing count"), Error);
}

TEST_CASE("trefoil classical invariants") {
  GridDiagram g = trefoil();
  CHECK(g.ncomp == 1);
  auto inv = classical_invariants(g, 0);
  CHECK(inv.tb == -7);
  CHECK(inv.rot == 0);
  CHECK(inv.writhe == -3);
  CHECK(inv.cusps_up == 4);
  CHECK(inv.cusps_down == 4);
  // every crossing of this front is negative
  for (const auto& cr : crossings(g)) CHECK(cr.sign == -1);
}

TEST_CASE("tb = -1 unknot") {
  GridDiagram g = GridDiagram::make({1, 0}, {0, 1}, true);
  auto inv = classical_invariants(g, 0);
  CHECK(inv.tb == -1);
  CHECK(inv.rot == 0);
  CHECK(inv.writhe == 0);
  CHECK(inv.cusps_up + inv.cusps_down == 2);
}

TEST_CASE("split link and hopf link") {
  GridDiagram split = GridDiagram::make({1, 0, 3, 2}, {0, 1, 2, 3}, true);
  CHECK(split.ncomp == 2);
  CHECK(linking_number(split, 0, 1) == 0);
  CHECK(classical_invariants(split, 0).tb == -1);
  CHECK(classical_invariants(split, 1).tb == -1);

  GridDiagram hopf = GridDiagram::make({2, 3, 0, 1}, {0, 1, 2, 3}, false,
                                       std::vector<Int>{Int(0), Int(0)});
  CHECK(hopf.ncomp == 2);
  CHECK(linking_number(hopf, 0, 1) == 1);
  Presentation p = to_presentation(hopf, FramingMode::Explicit);
  IntMat want(2, 2);
  want << 0, 1, 1, 0;
  CHECK(p.L == want);

  CHECK_THROWS_WITH_AS(linking_number(hopf, 0, 0),
                       doctest::Contains("SameComponent"), Error);
  CHECK_THROWS_WITH_AS(linking_number(hopf, 0, 5),
                       doctest::Contains("UnknownComponent"), Error);
}

TEST_CASE("legendrian surgery presentation of the trefoil") {
  Presentation p = to_presentation(trefoil(), FramingMode::LegendrianSurgery);
  REQUIRE(p.size() == 1);
  CHECK(p.L(0, 0) == -8);  // tb - 1
  CHECK((*p.rot)(0) == 0);
}

TEST_CASE("orientation reversal fixes tb and negates rot") {
  // sweep all small single-component grids so diagrams with rot != 0 occur
  std::vector<int> base{0, 1, 2};
  int checked_nonzero = 0;
  std::vector<int> x = base;
  do {
    std::vector<int> o = base;
    do {
      bool shares = false;
      for (int c = 0; c < 3; ++c)
        if (x[c] == o[c]) shares = true;
      if (shares) continue;
      GridDiagram g = GridDiagram::make(x, o, true);
      if (g.ncomp != 1) continue;
      auto inv = classical_invariants(g, 0);
      GridDiagram r = reverse_component(g, 0);
      auto rinv = classical_invariants(r, 0);
      CHECK(rinv.tb == inv.tb);
      CHECK(rinv.rot == -inv.rot);
      CHECK(rinv.writhe == inv.writhe);
      if (inv.rot != 0) ++checked_nonzero;
    } while (std::next_permutation(o.begin(), o.end()));
  } while (std::next_permutation(x.begin(), x.end()));
  CHECK(checked_nonzero > 0);  // the sweep hit genuinely chiral fronts
}

TEST_CASE("cyclic translation preserves tb and rot") {
  GridDiagram g = trefoil();
  auto inv = classical_invariants(g, 0);
  for (int dr = 0; dr < g.n; ++dr)
    for (int dc = 0; dc < g.n; ++dc) {
      GridDiagram t = translated(g, dr, dc);
      auto tinv = classical_invariants(t, 0);
      CHECK(tinv.tb == inv.tb);
      CHECK(tinv.rot == inv.rot);
    }
}

TEST_CASE("corner types count the cusps") {
  GridDiagram g = trefoil();
  auto ct = corner_types(g);
  auto inv = classical_invariants(g, 0);
  CHECK(Int(std::count(ct.begin(), ct.end(), 1)) == inv.cusps_up);
  CHECK(Int(std::count(ct.begin(), ct.end(), -1)) == inv.cusps_down);
}
