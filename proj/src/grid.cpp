#include "covlift/grid.hpp"

#include <algorithm>
#include <numeric>

namespace covlift {

namespace {
// directions in math coordinates (x = column eastward, y = n-1-row northward)
int vdir(const GridDiagram& g, int c) {  // vertical X -> O
  return g.o[c] < g.x[c] ? +1 : -1;     // north iff the O row is smaller
}
int hdir(const GridDiagram& g, int r) {  // horizontal O -> X
  return g.xc[r] > g.oc[r] ? +1 : -1;    // east iff the X column is bigger
}
void check_component(const GridDiagram& g, int comp) {
  if (comp < 0 || comp >= g.ncomp)
    fail("UnknownComponent", "no component " + std::to_string(comp + 1));
}
}  // namespace

GridDiagram GridDiagram::make(std::vector<int> x, std::vector<int> o,
                              bool legendrian,
                              std::optional<std::vector<Int>> framings) {
  GridDiagram g;
  g.n = static_cast<int>(x.size());
  g.x = std::move(x);
  g.o = std::move(o);
  g.legendrian = legendrian;
  g.framings = std::move(framings);
  auto is_perm = [&](const std::vector<int>& p) {
    std::vector<int> s = p;
    std::sort(s.begin(), s.end());
    for (int i = 0; i < g.n; ++i)
      if (s[i] != i) return false;
    return true;
  };
  if (static_cast<int>(g.o.size()) != g.n || !is_perm(g.x) || !is_perm(g.o))
    fail("Parse", "grid markers must be permutations of 0..n-1");
  for (int c = 0; c < g.n; ++c)
    if (g.x[c] == g.o[c]) fail("Parse", "X and O share a cell");
  g.xc.resize(g.n);
  g.oc.resize(g.n);
  for (int c = 0; c < g.n; ++c) {
    g.xc[g.x[c]] = c;
    g.oc[g.o[c]] = c;
  }
  // trace components: vertical X->O in column c, then horizontal O->X in row o[c]
  g.comp.assign(g.n, -1);
  g.ncomp = 0;
  for (int c0 = 0; c0 < g.n; ++c0) {
    if (g.comp[c0] >= 0) continue;
    int c = c0;
    while (g.comp[c] < 0) {
      g.comp[c] = g.ncomp;
      c = g.xc[g.o[c]];
    }
    ++g.ncomp;
  }
  if (g.framings && static_cast<int>(g.framings->size()) != g.ncomp)
    fail("Parse", "explicit framing count must match component count");
  return g;
}

std::vector<Crossing> crossings(const GridDiagram& g) {
  std::vector<Crossing> out;
  for (int c = 0; c < g.n; ++c) {
    auto [r1, r2] = std::minmax(g.x[c], g.o[c]);
    for (int r = 0; r < g.n; ++r) {
      auto [c1, c2] = std::minmax(g.xc[r], g.oc[r]);
      if (r1 < r && r < r2 && c1 < c && c < c2)
        // vertical passes over: sign = det[over under] = -vy*hx
        out.push_back({c, r, -vdir(g, c) * hdir(g, r)});
    }
  }
  return out;
}

Int writhe(const GridDiagram& g, int comp) {
  check_component(g, comp);
  Int w = 0;
  for (const auto& cr : crossings(g))
    if (g.comp[cr.col] == comp && g.comp[g.oc[cr.row]] == comp) w += cr.sign;
  return w;
}

std::pair<Int, Int> cusp_counts(const GridDiagram& g, int comp) {
  check_component(g, comp);
  if (!g.legendrian)
    fail("Parse", "cusp counts need the legendrian front interpretation");
  Int cp = 0, cm = 0;
  auto up = [](int d) { return d > 0; };  // E/N encoded as +1, S/W as -1
  for (int c = 0; c < g.n; ++c) {
    if (g.comp[c] != comp) continue;
    // corner at X: incoming horizontal of row x[c], outgoing vertical of col c
    int din = hdir(g, g.x[c]), dout = vdir(g, c);
    if (up(din) && up(dout)) ++cp;
    if (!up(din) && !up(dout)) ++cm;
    // corner at O: incoming vertical of col c, outgoing horizontal of row o[c]
    din = vdir(g, c);
    dout = hdir(g, g.o[c]);
    if (up(din) && up(dout)) ++cp;
    if (!up(din) && !up(dout)) ++cm;
  }
  return {cp, cm};
}

ClassicalInvariants classical_invariants(const GridDiagram& g, int comp) {
  ClassicalInvariants ci;
  ci.writhe = writhe(g, comp);
  auto [cp, cm] = cusp_counts(g, comp);
  if ((cp + cm) % 2 != 0) fail("Parse", "odd total cusp count (bug)");
  ci.cusps_up = cp;
  ci.cusps_down = cm;
  ci.tb = ci.writhe - (cp + cm) / 2;   // tb = w - c/2
  ci.rot = (cm - cp) / 2;              // rot = (c_minus - c_plus)/2
  return ci;
}

Int linking_number(const GridDiagram& g, int comp_a, int comp_b) {
  check_component(g, comp_a);
  check_component(g, comp_b);
  if (comp_a == comp_b) fail("SameComponent", "linking number needs two components");
  Int tot = 0;
  for (const auto& cr : crossings(g)) {
    int ca = g.comp[cr.col], cb = g.comp[g.oc[cr.row]];
    if ((ca == comp_a && cb == comp_b) || (ca == comp_b && cb == comp_a))
      tot += cr.sign;
  }
  if (tot % 2 != 0) fail("Parse", "odd inter-component crossing sum (bug)");
  return tot / 2;
}

Presentation to_presentation(const GridDiagram& g, FramingMode mode) {
  const int n = g.ncomp;
  IntMat L(n, n);
  std::optional<IntVec> rot;
  if (mode == FramingMode::LegendrianSurgery) {
    if (!g.legendrian)
      fail("Parse", "legendrian-surgery framing needs a legendrian grid");
    rot = IntVec(n);
    for (int k = 0; k < n; ++k) {
      auto ci = classical_invariants(g, k);
      L(k, k) = ci.tb - 1;  // contact framing minus 1
      (*rot)(k) = ci.rot;
    }
  } else {
    if (!g.framings) fail("Parse", "explicit mode needs a framing list");
    for (int k = 0; k < n; ++k) L(k, k) = (*g.framings)[k];
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) L(a, b) = L(b, a) = linking_number(g, a, b);
  std::vector<std::string> labels;
  for (int k = 0; k < n; ++k) labels.push_back("K" + std::to_string(k + 1));
  return Presentation::make(std::move(L), std::move(rot), std::move(labels));
}

GridDiagram reverse_component(const GridDiagram& g, int comp) {
  check_component(g, comp);
  std::vector<int> x = g.x, o = g.o;
  for (int c = 0; c < g.n; ++c)
    if (g.comp[c] == comp) std::swap(x[c], o[c]);
  return GridDiagram::make(std::move(x), std::move(o), g.legendrian, g.framings);
}

GridDiagram translated(const GridDiagram& g, int drow, int dcol) {
  const int n = g.n;
  auto wrap = [n](int v) { return ((v % n) + n) % n; };
  std::vector<int> x(n), o(n);
  for (int c = 0; c < n; ++c) {
    x[wrap(c + dcol)] = wrap(g.x[c] + drow);
    o[wrap(c + dcol)] = wrap(g.o[c] + drow);
  }
  return GridDiagram::make(std::move(x), std::move(o), g.legendrian, g.framings);
}

std::vector<int> corner_types(const GridDiagram& g) {
  // per column: classify (X corner, O corner) as up cusp (+1), down cusp (-1)
  // or smoothed (0); encodes the front's corner structure
  std::vector<int> out;
  for (int c = 0; c < g.n; ++c) {
    int din = hdir(g, g.x[c]), dout = vdir(g, c);
    out.push_back(din > 0 && dout > 0 ? 1 : (din < 0 && dout < 0 ? -1 : 0));
    din = vdir(g, c);
    dout = hdir(g, g.o[c]);
    out.push_back(din > 0 && dout > 0 ? 1 : (din < 0 && dout < 0 ? -1 : 0));
  }
  return out;
}

}  // namespace covlift
