#include "covlift/covering.hpp"

#include <cmath>

namespace covlift {

Int lift_branch_framing(const Int& n, long long m) {
  if (m < 1) fail("Parse", "multiplicity must be >= 1");
  if (n % m != 0)
    fail("NotDivisible", "branch framing " + n.str() +
                             " not divisible by multiplicity " +
                             std::to_string(m));
  return n / m;
}

Rat cosecant_sum(long long m) {
  if (m < 1) fail("Parse", "multiplicity must be >= 1");
  return Rat(Int(m) * m - 1, 3);
}

double cosecant_sum_float(long long m) {
  double s = 0;
  const double pi = std::acos(-1.0);
  for (long long k = 1; k < m; ++k) {
    double t = std::sin(pi * static_cast<double>(k) / static_cast<double>(m));
    s += 1.0 / (t * t);
  }
  return s;
}

void validate_scene(const CoveringScene& scene) {
  if (scene.m < 1) fail("Parse", "multiplicity must be >= 1");
  const Eigen::Index nd = scene.downstairs.size();
  const Eigen::Index nu = scene.upstairs.size();
  for (int b : scene.branch) {
    if (b < 0 || b >= nd) fail("IndexError", "branch index out of range");
    lift_branch_framing(scene.downstairs.L(b, b), scene.m);
  }
  if (!scene.correspondence.empty()) {
    if (static_cast<Eigen::Index>(scene.correspondence.size()) != nd)
      fail("Parse", "correspondence must cover every downstairs component");
    std::vector<char> seen(nu, 0);
    for (Eigen::Index i = 0; i < nd; ++i) {
      const auto& ups = scene.correspondence[i];
      size_t want = scene.is_branch(static_cast<int>(i))
                        ? 1
                        : static_cast<size_t>(scene.m);
      if (ups.size() != want)
        fail("Parse", "component " + std::to_string(i + 1) + " must lift to " +
                          std::to_string(want) + " upstairs components");
      for (int u : ups) {
        if (u < 0 || u >= nu) fail("IndexError", "upstairs index out of range");
        if (seen[u]) fail("Parse", "upstairs component mapped twice");
        seen[u] = 1;
      }
    }
  }
}

Rat d3_lift(const Rat& d3_down, const CoveringScene& scene) {
  validate_scene(scene);
  Rat m(scene.m);
  return m * d3_down +
         Rat(3, 4) * (m * scene.sigma_downstairs() - scene.sigma_upstairs() -
                      Rat(scene.s_dot_s) * cosecant_sum(scene.m));
}

SpinAssignment spin_lift(const CoveringScene& scene,
                         const SpinAssignment& spin_down) {
  validate_scene(scene);
  if (scene.correspondence.empty())
    fail("Parse", "spin_lift needs a component correspondence");
  const Eigen::Index nd = scene.downstairs.size();
  if (static_cast<Eigen::Index>(spin_down.size()) != nd)
    fail("NotCharacteristic", "downstairs spin bit count mismatch");
  SpinAssignment up(scene.upstairs.size(), 0);
  for (Eigen::Index i = 0; i < nd; ++i) {
    int bit = spin_down[i];
    if (scene.is_branch(static_cast<int>(i)))
      bit = bit == 1 ? 1 : (scene.m % 2 == 0 ? 1 : 0);
    for (int u : scene.correspondence[i]) up[u] = bit;
  }
  if (!is_characteristic(scene.upstairs.L, up))
    fail("NotCharacteristicUpstairs",
         "lifted bits are not characteristic for the upstairs matrix "
         "(inconsistent scene)");
  return up;
}

const char* verdict_str(TightnessVerdict::Kind v) {
  switch (v) {
    case TightnessVerdict::Tight: return "Tight";
    case TightnessVerdict::Overtwisted: return "Overtwisted";
    default: return "Inconclusive";
  }
}

TightnessVerdict verdict_elliptic(const Presentation& cover, const Rat& d3_up,
                                  const SpinCClass& spinc_up,
                                  const std::vector<KnownTight>& known_tight,
                                  bool complete) {
  TightnessVerdict v;
  for (const auto& kt : known_tight) {
    if (kt.d3 != d3_up) continue;
    if (!spinc_equal(cover, spinc_up, kt.spinc)) continue;
    v.verdict = TightnessVerdict::Tight;
    v.matched = kt.label;
    v.reasons.push_back("d3 and spin-c class match the classified tight "
                        "structure '" + kt.label + "'");
    v.reasons.push_back("on an elliptic cover, homotopic to tight implies "
                        "isotopic to it, hence tight");
    return v;
  }
  if (complete) {
    v.verdict = TightnessVerdict::Overtwisted;
    v.reasons.push_back("classification is complete and no tight structure "
                        "matches (d3, spin-c)");
  } else {
    v.verdict = TightnessVerdict::Inconclusive;
    v.reasons.push_back("no match and the supplied list is not flagged "
                        "complete");
  }
  return v;
}

TightnessVerdict verdict_minimal_L(const Rat& d3_up, const Rat& d_invariant) {
  TightnessVerdict v;
  if (contact_class_degree(d3_up) == d_invariant) {
    v.verdict = TightnessVerdict::Tight;
    v.reasons.push_back("d3 + 1/2 equals the d invariant of the covering "
                        "spin-c structure");
  } else {
    v.verdict = TightnessVerdict::Overtwisted;
    v.reasons.push_back("d3 + 1/2 differs from the d invariant (tightness is "
                        "equivalent to equality here)");
  }
  return v;
}

DegreeProp degree_propagation(const Rat& deg_up, const Rat& minus_two_h) {
  if (deg_up == minus_two_h) return DegreeProp::UpNonvanishingForced;
  if (deg_up < minus_two_h) return DegreeProp::DownstairsVanishes;
  return DegreeProp::NoConclusion;
}

const char* degree_prop_str(DegreeProp d) {
  switch (d) {
    case DegreeProp::UpNonvanishingForced: return "UpNonvanishingForced";
    case DegreeProp::DownstairsVanishes: return "DownstairsVanishes";
    default: return "NoConclusion";
  }
}

}  // namespace covlift
