#include "covlift/d3.hpp"

namespace covlift {

Rat c_squared(const IntVec& v, const Presentation& p) {
  if (v.size() != p.size()) fail("Parse", "vector length mismatch in c_squared");
  RatVec rv(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) rv(i) = Rat(v(i));
  RatVec x = solve_rational(p.L, rv);
  Rat out = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) out += rv(i) * x(i);
  return out;
}

Rat d3_legendrian(const Presentation& p) {
  const Eigen::Index n = p.size();
  if (n == 0) return Rat(-1, 2);
  if (!p.rot) fail("MissingRotation", "d3 needs rotation numbers");
  for (Eigen::Index i = 0; i < n; ++i)
    if (((*p.rot)(i) - p.L(i, i)) % 2 != 0)
      fail("ParityViolation", "rot_i and framing parity disagree");
  Rat rLr = c_squared(*p.rot, p);
  return (rLr - 2 * (Rat(n) + 1) - 3 * signature(p.L)) / 4;
}

SpinCClass spinc_difference(const Presentation& p, const SpinAssignment& spin) {
  const Eigen::Index n = p.size();
  if (!p.rot) fail("MissingRotation", "spinc_difference needs rotation numbers");
  if (!is_characteristic(p.L, spin))
    fail("NotCharacteristic", "spin bits violate the characteristic condition");
  SpinCClass out;
  out.base = spin;
  out.delta = IntVec(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Int s = (*p.rot)(i);
    for (Eigen::Index j = 0; j < n; ++j)
      if (spin[j]) s += p.L(i, j);
    if (s % 2 != 0)
      fail("ParityViolation", "difference-class evaluation is not even (bug)");
    out.delta(i) = s / 2;
  }
  return out;
}

bool spinc_equal(const Presentation& p, const SpinCClass& a,
                 const SpinCClass& b) {
  const Eigen::Index n = p.size();
  if (static_cast<Eigen::Index>(a.base.size()) != n ||
      static_cast<Eigen::Index>(b.base.size()) != n ||
      a.delta.size() != n || b.delta.size() != n)
    fail("Parse", "spinc classes over different presentations");
  // rebase b onto a's Spin base: shift by the half-sum of L columns over the
  // bit difference; the sign is immaterial mod L Z^n since twice the shift is
  // L applied to the indicator vector
  IntVec shifted = b.delta;
  for (Eigen::Index i = 0; i < n; ++i) {
    Int s = 0;
    for (Eigen::Index j = 0; j < n; ++j)
      if (a.base[j] != b.base[j]) s += p.L(i, j);
    if (s % 2 != 0)
      fail("ParityViolation", "rebasing shift is not integral (bases not both "
                              "characteristic?)");
    shifted(i) += s / 2;
  }
  return integer_coset_equal(p.L, a.delta, shifted);
}

Rat contact_class_degree(const Rat& d3) { return d3 + Rat(1, 2); }

}  // namespace covlift
