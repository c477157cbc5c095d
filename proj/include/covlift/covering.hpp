#pragma once

#include "covlift/d3.hpp"

#include <optional>

namespace covlift {

struct KnownTight {
  std::string label;
  Rat d3;
  SpinCClass spinc;  // over the cover's (reduced) presentation
};

// Cyclic m-fold branched covering bookkeeping. The upstairs presentation is
// user-supplied; its matrix is consumed for the signature and for the spin /
// Spin^C checks after the reduction script.
struct CoveringScene {
  long long m = 1;
  Presentation downstairs;
  std::optional<SpinAssignment> downstairs_spin;
  MoveScript downstairs_script;  // rarely needed; applied after d3/Spin^C
  Presentation upstairs;
  MoveScript upstairs_script;
  std::vector<int> branch;  // 0-based downstairs component indices
  // downstairs component -> its upstairs lifts (m copies for free components,
  // one equivariant lift for branch components)
  std::vector<std::vector<int>> correspondence;
  Int s_dot_s = 0;  // branch surface self-intersection
  std::optional<int> sigma_up, sigma_down;  // computed from L when omitted

  std::vector<KnownTight> known_tight;
  bool known_complete = false;
  std::optional<Rat> d_invariant;

  bool is_branch(int i) const {
    for (int b : branch)
      if (b == i) return true;
    return false;
  }
  int sigma_downstairs() const {
    return sigma_down ? *sigma_down : signature(downstairs.L);
  }
  int sigma_upstairs() const {
    return sigma_up ? *sigma_up : signature(upstairs.L);
  }
};

// Validates divisibility / correspondence shape; throws on bad scenes.
void validate_scene(const CoveringScene& scene);

// quotient framing = m * equivariant framing
Int lift_branch_framing(const Int& n, long long m);

// sum_{k=1}^{m-1} csc^2(pi k / m) = (m^2 - 1) / 3, exactly
Rat cosecant_sum(long long m);
double cosecant_sum_float(long long m);

// d3 upstairs = m d3 + 3/4 (m sigma_down - sigma_up - (S.S) (m^2-1)/3)
Rat d3_lift(const Rat& d3_down, const CoveringScene& scene);

// free components copy their bit to every lift; branch components lift
// bit 1 -> 1 and bit 0 -> (m even ? 1 : 0)
SpinAssignment spin_lift(const CoveringScene& scene,
                         const SpinAssignment& spin_down);

struct TightnessVerdict {
  enum Kind { Tight, Overtwisted, Inconclusive } verdict = Inconclusive;
  std::string matched;  // label of the matched structure, when Tight
  std::vector<std::string> reasons;
};
const char* verdict_str(TightnessVerdict::Kind v);

TightnessVerdict verdict_elliptic(const Presentation& cover, const Rat& d3_up,
                                  const SpinCClass& spinc_up,
                                  const std::vector<KnownTight>& known_tight,
                                  bool complete);

// Tight iff d3 + 1/2 equals the externally supplied d invariant.
TightnessVerdict verdict_minimal_L(const Rat& d3_up, const Rat& d_invariant);

enum class DegreeProp { UpNonvanishingForced, DownstairsVanishes, NoConclusion };
DegreeProp degree_propagation(const Rat& deg_up, const Rat& minus_two_h);
const char* degree_prop_str(DegreeProp d);

}  // namespace covlift
