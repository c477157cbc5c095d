#pragma once

#include "covlift/framedlink.hpp"

#include <optional>
#include <vector>

namespace covlift {

// Grid diagram of an oriented link: x[c] / o[c] give the row of the X / O
// marker in column c, row 0 at the top. Vertical segments run X -> O,
// horizontal ones O -> X. Under the front convention (y-axis pointing
// southeast, z-axis northeast) vertical segments cross OVER horizontal ones
// and NW/SE corners are cusps.
struct GridDiagram {
  int n = 0;
  std::vector<int> x, o;  // column -> row, both permutations
  bool legendrian = false;
  std::optional<std::vector<Int>> framings;  // per component, explicit mode

  // derived on construction
  std::vector<int> xc, oc;  // row -> column
  std::vector<int> comp;    // column -> component id
  int ncomp = 0;

  static GridDiagram make(std::vector<int> x, std::vector<int> o,
                          bool legendrian = false,
                          std::optional<std::vector<Int>> framings = {});
};

struct ClassicalInvariants {
  Int tb, rot, writhe;
  Int cusps_up, cusps_down;
};

struct Crossing {
  int col, row;  // column of the vertical strand, row of the horizontal one
  int sign;
};

std::vector<Crossing> crossings(const GridDiagram& g);

Int writhe(const GridDiagram& g, int comp);
// (c_plus, c_minus)
std::pair<Int, Int> cusp_counts(const GridDiagram& g, int comp);
ClassicalInvariants classical_invariants(const GridDiagram& g, int comp);
Int linking_number(const GridDiagram& g, int comp_a, int comp_b);

enum class FramingMode { LegendrianSurgery, Explicit };
Presentation to_presentation(const GridDiagram& g, FramingMode mode);

// Orientation reversal of one component (swaps its X and O markers).
GridDiagram reverse_component(const GridDiagram& g, int comp);

// Cyclic translation on the torus. tb/rot are only preserved when the
// translation keeps every marker's corner type; see corner_types.
GridDiagram translated(const GridDiagram& g, int drow, int dcol);
std::vector<int> corner_types(const GridDiagram& g);

}  // namespace covlift
