#pragma once

#include "covlift/framedlink.hpp"

namespace covlift {

// Difference class of a Spin^C structure against the one induced by a Spin
// structure, recorded by its evaluations on the surface classes [F_i].
struct SpinCClass {
  SpinAssignment base;
  IntVec delta;
};

// v^T L^{-1} v, exact.
Rat c_squared(const IntVec& v, const Presentation& p);

// d3 = 1/4 (r^T L^{-1} r - 2(n+1) - 3 sigma(L)) on a Legendrian-surgery
// presentation.
Rat d3_legendrian(const Presentation& p);

// delta_i = (r_i + sum_{j : bits_j = 1} L_ij) / 2
SpinCClass spinc_difference(const Presentation& p, const SpinAssignment& spin);

// equality in H^2(Y;Z) = Z^n / L Z^n, after rebasing b onto a's Spin base
bool spinc_equal(const Presentation& p, const SpinCClass& a,
                 const SpinCClass& b);

// deg psi = d3 + 1/2
Rat contact_class_degree(const Rat& d3);

}  // namespace covlift
