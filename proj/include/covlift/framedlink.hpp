#pragma once

#include "covlift/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace covlift {

// Surgery presentation: symmetric linking matrix, framings on the diagonal.
// rot is only present on Legendrian-surgery presentations and is dropped by
// every Kirby move (the moves don't transform it).
struct Presentation {
  IntMat L;
  std::optional<IntVec> rot;
  std::vector<std::string> labels;
  // tripped once a move leaves the almost-complex-fillable regime
  // (+1 blow-up / +1 blow-down)
  bool fillability_lost = false;

  Eigen::Index size() const { return L.rows(); }
  static Presentation make(IntMat L, std::optional<IntVec> rot = {},
                           std::vector<std::string> labels = {});
};

// One w2 bit per component; valid iff L*bits = diag(L) over Z/2.
using SpinAssignment = std::vector<int>;

bool is_characteristic(const IntMat& L, const SpinAssignment& bits);

// All Z/2 solutions of L c = diag(L); count is 2^(mod-2 nullity of L).
std::vector<SpinAssignment> enumerate_spin(const Presentation& p);

struct Move {
  enum Kind { BlowUp, Slide, BlowDown, Contract } kind;
  int sign = 0;     // BlowUp / Slide
  IntVec l;         // BlowUp linkings
  int i = 0, j = 0; // Slide: slide i over j (0-based)
  int k = 0;        // BlowDown / Contract target (0-based)
};
using MoveScript = std::vector<Move>;

std::pair<Presentation, SpinAssignment> blow_up(const Presentation& p,
                                                const SpinAssignment& spin,
                                                int sign, const IntVec& l);
std::pair<Presentation, SpinAssignment> handle_slide(const Presentation& p,
                                                     const SpinAssignment& spin,
                                                     int i, int j, int sign);
std::pair<Presentation, SpinAssignment> blow_down_isolated(
    const Presentation& p, const SpinAssignment& spin, int k);
Presentation contract(const Presentation& p, int k);

std::pair<Presentation, std::optional<SpinAssignment>> apply_script(
    const Presentation& p, std::optional<SpinAssignment> spin,
    const MoveScript& script);

std::string move_str(const Move& m);

}  // namespace covlift
