// Acceptance gate: one pass/fail line per criterion, exact arithmetic
// throughout except the single floating cross-check in criterion 4.
#include "covlift/io.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace covlift;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_fixtures;
int g_failures = 0;

double run_criterion(int num, const std::string& what,
                     const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  auto t0 = Clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = e.what();
  }
  double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  std::ostringstream line;
  line << "Criterion " << num << " [" << what << "]: "
       << (ok ? "PASS" : "FAIL");
  if (!detail.empty()) line << " (" << detail << ")";
  std::cout << line.str() << "\n";
  if (!ok) ++g_failures;
  return ms;
}

std::string fx(const std::string& name) { return g_fixtures + "/" + name; }

Presentation chain_pres(std::initializer_list<int> rot = {}) {
  IntMat L(3, 3);
  L << -2, 1, 0, 1, -4, 1, 0, 1, -2;
  std::optional<IntVec> r;
  if (rot.size()) {
    r = IntVec(3);
    Eigen::Index i = 0;
    for (int v : rot) (*r)(i++) = v;
  }
  return Presentation::make(L, r);
}

IntMat random_symmetric(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> d(-5, 5);
  IntMat M(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) M(i, j) = M(j, i) = d(rng);
  return M;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <fixtures-dir>\n";
    return 2;
  }
  g_fixtures = argv[1];
  auto suite_start = Clock::now();

  double ms1 = run_criterion(1, "classical invariants", [](std::string& d) {
    GridDiagram g = parse_grid_file(fx("trefoil.grid"));
    auto t0 = Clock::now();
    auto inv = classical_invariants(g, 0);
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    if (ms >= 1.0) {
      d = "too slow";
      return false;
    }
    return inv.tb == -7 && inv.rot == 0;
  });
  (void)ms1;

  run_criterion(2, "d3 golden values", [](std::string&) {
    IntMat m8(1, 1);
    m8 << -8;
    IntVec r0 = IntVec::Zero(1);
    return d3_legendrian(Presentation::make(IntMat(0, 0))) == Rat(-1, 2) &&
           d3_legendrian(Presentation::make(m8, r0)) == Rat(-1, 4) &&
           d3_legendrian(chain_pres({0, 0, 0})) == Rat(1, 4) &&
           d3_legendrian(chain_pres({0, 2, 0})) == Rat(-1, 12) &&
           d3_legendrian(chain_pres({0, -2, 0})) == Rat(-1, 12);
  });

  run_criterion(3, "d3 lift", [](std::string&) {
    CoveringScene sc = parse_scene_file(fx("trefoil_to_L12_7.scene"));
    sc.sigma_down = -2;
    sc.sigma_up = -1;
    return sc.m == 2 && sc.s_dot_s == -4 &&
           d3_lift(Rat(-1, 4), sc) == Rat(1, 4);
  });

  run_criterion(4, "cosecant identity", [](std::string& d) {
    auto t0 = Clock::now();
    for (long long m = 2; m <= 50; ++m) {
      Rat exact = cosecant_sum(m);
      double ex =
          static_cast<double>(numerator(exact).convert_to<long long>()) /
          static_cast<double>(denominator(exact).convert_to<long long>());
      if (std::abs(ex - cosecant_sum_float(m)) >= 1e-9) {
        d = "m = " + std::to_string(m);
        return false;
      }
    }
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    if (ms >= 10.0) {
      d = "too slow";
      return false;
    }
    return true;
  });

  run_criterion(5, "spin enumeration", [](std::string&) {
    IntMat m8(1, 1), m1(1, 1);
    m8 << -8;
    m1 << -1;
    if (enumerate_spin(Presentation::make(m8)).size() != 2) return false;
    if (enumerate_spin(Presentation::make(m1)).size() != 1) return false;
    auto sc = enumerate_spin(chain_pres());
    std::sort(sc.begin(), sc.end());
    if (sc != std::vector<SpinAssignment>{{0, 0, 0}, {1, 0, 1}}) return false;
    std::mt19937 rng(61);
    for (int t = 0; t < 200; ++t) {
      int n = 1 + static_cast<int>(rng() % 5);
      auto spins = enumerate_spin(Presentation::make(random_symmetric(rng, n)));
      if ((spins.size() & (spins.size() - 1)) != 0) return false;
    }
    return true;
  });

  run_criterion(6, "spin lifting branch rule", [](std::string&) {
    for (long long m = 2; m <= 5; ++m) {
      CoveringScene sc;
      sc.m = m;
      IntMat Ld(1, 1), Lu(1, 1);
      Ld << Int(-2) * m;
      Lu << -2;
      sc.downstairs = Presentation::make(Ld);
      sc.upstairs = Presentation::make(Lu);
      sc.branch = {0};
      sc.correspondence = {{0}};
      if (spin_lift(sc, {1}) != SpinAssignment{1}) return false;
      if (spin_lift(sc, {0}) != SpinAssignment{m % 2 == 0 ? 1 : 0})
        return false;
    }
    return true;
  });

  run_criterion(7, "kirby move suite", [](std::string& d) {
    auto t0 = Clock::now();
    std::mt19937 rng(67);
    for (int t = 0; t < 500; ++t) {
      int n = 2 + static_cast<int>(rng() % 4);
      Presentation p = Presentation::make(random_symmetric(rng, n));
      auto spins = enumerate_spin(p);
      const SpinAssignment& s = spins[rng() % spins.size()];
      int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
      if (i != j) {
        int sign = (rng() & 1) ? 1 : -1;
        auto [q, bits] = handle_slide(p, s, i, j, sign);
        if (abs(det(q.L)) != abs(det(p.L))) return false;
        if (signature(q.L) != signature(p.L)) return false;
        if (!is_characteristic(q.L, bits)) return false;
      }
      int sign = (rng() & 1) ? 1 : -1;
      auto [q, bits] = blow_up(p, s, sign, IntVec::Zero(n));
      auto [back, bits2] = blow_down_isolated(q, bits, n);
      if (back.L != p.L || bits2 != s) return false;
    }
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    if (ms >= 1000.0) {
      d = "too slow";
      return false;
    }
    return true;
  });

  run_criterion(8, "L(12,7) reduction script", [](std::string&) {
    CoveringScene sc = parse_scene_file(fx("trefoil_to_L12_7.scene"));
    SpinAssignment up = spin_lift(sc, *sc.downstairs_spin);
    auto [red, bits] = apply_script(sc.upstairs, up, sc.upstairs_script);
    IntMat chain(3, 3);
    chain << -2, 1, 0, 1, -4, 1, 0, 1, -2;
    return red.L == chain && bits.has_value() &&
           *bits == SpinAssignment{0, 0, 0};
  });

  run_criterion(9, "spin-c classes", [](std::string&) {
    IntMat m8(1, 1);
    m8 << -8;
    IntVec r0 = IntVec::Zero(1);
    auto sc = spinc_difference(Presentation::make(m8, r0), {0});
    if (sc.delta(0) != 0) return false;
    Presentation chain = chain_pres({0, 0, 0});
    SpinCClass a{{0, 0, 0}, IntVec::Zero(3)};
    SpinCClass b{{1, 0, 1}, IntVec::Zero(3)};
    if (spinc_equal(chain, a, b)) return false;
    if (!spinc_equal(chain, a, a)) return false;
    // brute-force coset oracle over |det| = 12: L(1,0,1)/2 not in L Z^3
    IntVec shift(3);
    for (int i = 0; i < 3; ++i) shift(i) = (chain.L(i, 0) + chain.L(i, 2)) / 2;
    for (int x = -6; x <= 6; ++x)
      for (int y = -6; y <= 6; ++y)
        for (int z = -6; z <= 6; ++z) {
          IntVec v(3);
          v << x, y, z;
          if (chain.L * v == shift) return false;
        }
    // the end-to-end pipeline class equals the matched candidate's
    Report rep = run_pipeline(parse_grid_file(fx("trefoil.grid")),
                              parse_scene_file(fx("trefoil_to_L12_7.scene")));
    return *rep.find("spin_reduced") == "(0 0 0)";
  });

  run_criterion(10, "seifert chain", [](std::string&) {
    SeifertData s = moser_surgery(Int(-2), Int(3), Int(-8), Int(1));
    std::vector<std::pair<Int, Int>> want = {
        {1, -1}, {2, 1}, {2, 1}, {3, 2}};
    if (normalize(s).pairs != want) return false;
    if (euler_number(s) != Rat(-2, 3) || h1_order(s) != 8) return false;
    SeifertData c =
        horizontal_cyclic_cover(s, 2, {Int(1), Int(2), Int(2), Int(1)});
    if (euler_number(c) != Rat(-4, 3)) return false;
    if (euler_number(c) != 2 * euler_number(s)) return false;
    if (h1_order(c) != 12) return false;
    if (lens_from_two_fiber_seifert(c) != LensSpace{Int(12), Int(7)})
      return false;
    return neg_cont_frac(Rat(-12, 7)) == std::vector<Int>{-2, -4, -2};
  });

  run_criterion(11, "localization tables", [](std::string&) {
    for (long long p : {2ll, 3ll, 5ll}) {
      auto ring = CoefficientRing::make(p);
      for (long long total = 0; total <= 8; ++total)
        for (long long fixed = 0; fixed <= total; ++fixed) {
          if (p != 2 && (total - fixed) % 2 != 0) continue;
          auto rep = RepresentationDatum::make(ring, total, fixed);
          long long lo = 0, hi = total + 3;
          auto plain = restriction_rank_table(ring, rep, lo, hi, false);
          auto loc = restriction_rank_table(ring, rep, lo, hi, true);
          for (long long deg = lo; deg < hi; ++deg) {
            bool zero = plain[deg - lo] == RestrictionRank::Zero;
            if (zero != (deg >= fixed && deg < total)) return false;
            if (deg >= total && plain[deg - lo] != RestrictionRank::Iso)
              return false;
            if (loc[deg - lo] != RestrictionRank::Iso) return false;
          }
        }
    }
    return true;
  });

  run_criterion(12, "verdict engine", [](std::string&) {
    Report rep = run_pipeline(parse_grid_file(fx("trefoil.grid")),
                              parse_scene_file(fx("trefoil_to_L12_7.scene")));
    if (*rep.find("verdict") != "Tight (matched: middle)") return false;
    if (verdict_minimal_L(Rat(1, 4), Rat(3, 4)).verdict !=
        TightnessVerdict::Tight)
      return false;
    if (verdict_minimal_L(Rat(-1, 12), Rat(3, 4)).verdict !=
        TightnessVerdict::Overtwisted)
      return false;
    return degree_propagation(Rat(3, 4), Rat(3, 4)) ==
               DegreeProp::UpNonvanishingForced &&
           degree_propagation(Rat(-1, 4), Rat(3, 4)) ==
               DegreeProp::DownstairsVanishes &&
           degree_propagation(Rat(7, 4), Rat(3, 4)) ==
               DegreeProp::NoConclusion;
  });

  run_criterion(13, "whole suite timing", [&](std::string& d) {
    double s = std::chrono::duration<double>(Clock::now() - suite_start).count();
    if (s >= 30.0) {
      d = "took " + std::to_string(s) + " s";
      return false;
    }
    return true;
  });

  std::cout << (g_failures == 0 ? "ALL CRITERIA PASS"
                                : std::to_string(g_failures) + " FAILURES")
            << "\n";
  return g_failures == 0 ? 0 : 1;
}
