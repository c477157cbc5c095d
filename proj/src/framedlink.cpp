#include "covlift/framedlink.hpp"

#include <sstream>

namespace covlift {

Presentation Presentation::make(IntMat L, std::optional<IntVec> rot,
                                std::vector<std::string> labels) {
  const Eigen::Index n = L.rows();
  if (L.cols() != n) fail("Parse", "linking matrix must be square");
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (L(i, j) != L(j, i)) fail("Parse", "linking matrix must be symmetric");
  if (rot) {
    if (rot->size() != n) fail("Parse", "rot length mismatch");
    for (Eigen::Index i = 0; i < n; ++i)
      if (((*rot)(i) - L(i, i)) % 2 != 0)
        fail("ParityViolation", "rot_i must match framing parity (r + tb odd)");
  }
  if (labels.empty())
    for (Eigen::Index i = 0; i < n; ++i)
      labels.push_back("K" + std::to_string(i + 1));
  if (static_cast<Eigen::Index>(labels.size()) != n)
    fail("Parse", "component label count mismatch");
  Presentation p;
  p.L = std::move(L);
  p.rot = std::move(rot);
  p.labels = std::move(labels);
  return p;
}

bool is_characteristic(const IntMat& L, const SpinAssignment& bits) {
  const Eigen::Index n = L.rows();
  if (static_cast<Eigen::Index>(bits.size()) != n) return false;
  for (Eigen::Index i = 0; i < n; ++i) {
    Int s = 0;
    for (Eigen::Index j = 0; j < n; ++j)
      if (bits[j]) s += L(i, j);
    if ((s - L(i, i)) % 2 != 0) return false;
  }
  return true;
}

std::vector<SpinAssignment> enumerate_spin(const Presentation& p) {
  const int n = static_cast<int>(p.size());
  // GF(2) elimination on [L mod 2 | diag(L) mod 2]
  std::vector<std::vector<int>> A(n, std::vector<int>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      A[i][j] = static_cast<int>(((p.L(i, j) % 2) + 2) % 2);
    A[i][n] = A[i][i];
  }
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < n && r < n; ++c) {
    int pr = -1;
    for (int i = r; i < n; ++i)
      if (A[i][c]) { pr = i; break; }
    if (pr < 0) continue;
    std::swap(A[r], A[pr]);
    for (int i = 0; i < n; ++i)
      if (i != r && A[i][c])
        for (int j = c; j <= n; ++j) A[i][j] ^= A[r][j];
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < n; ++i)
    if (A[i][n])
      fail("NotCharacteristic", "L c = diag(L) unsolvable over Z/2 (impossible "
                                "for a symmetric linking matrix)");
  std::vector<int> free_cols;
  {
    std::vector<char> is_pivot(n, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    for (int c = 0; c < n; ++c)
      if (!is_pivot[c]) free_cols.push_back(c);
  }
  if (free_cols.size() > 20)
    fail("NotCharacteristic", "too many spin structures to enumerate");
  std::vector<SpinAssignment> out;
  for (unsigned long mask = 0; mask < (1ul << free_cols.size()); ++mask) {
    SpinAssignment c(n, 0);
    for (size_t t = 0; t < free_cols.size(); ++t)
      c[free_cols[t]] = static_cast<int>((mask >> t) & 1);
    for (int i = r - 1; i >= 0; --i) {
      int v = A[i][n];
      for (int j = pivot_col[i] + 1; j < n; ++j) v ^= A[i][j] & c[j];
      c[pivot_col[i]] = v;
    }
    out.push_back(std::move(c));
  }
  return out;
}

namespace {
Presentation moved(const Presentation& p, IntMat L,
                   std::vector<std::string> labels) {
  Presentation q;
  q.L = std::move(L);
  q.labels = std::move(labels);
  q.rot = std::nullopt;  // moves never transform rotation numbers
  q.fillability_lost = p.fillability_lost;
  return q;
}
}  // namespace

std::pair<Presentation, SpinAssignment> blow_up(const Presentation& p,
                                                const SpinAssignment& spin,
                                                int sign, const IntVec& l) {
  if (sign != 1 && sign != -1) fail("Parse", "blow-up sign must be +-1");
  const Eigen::Index n = p.size();
  if (l.size() != n) fail("Parse", "blow-up linking vector length mismatch");
  if (static_cast<Eigen::Index>(spin.size()) != n)
    fail("NotCharacteristic", "spin bit count mismatch");
  IntMat L(n + 1, n + 1);
  L.topLeftCorner(n, n) = p.L;
  L.col(n).head(n) = l;
  L.row(n).head(n) = l.transpose();
  L(n, n) = sign;
  auto labels = p.labels;
  labels.push_back("E" + std::to_string(n + 1));
  Presentation q = moved(p, std::move(L), std::move(labels));
  if (sign == +1) q.fillability_lost = true;
  SpinAssignment bits = spin;
  bits.push_back(1);  // the new (+-1)-framed handle always carries bit 1
  return {std::move(q), std::move(bits)};
}

std::pair<Presentation, SpinAssignment> handle_slide(const Presentation& p,
                                                     const SpinAssignment& spin,
                                                     int i, int j, int sign) {
  const Eigen::Index n = p.size();
  if (i < 0 || j < 0 || i >= n || j >= n)
    fail("IndexError", "handle_slide index out of range");
  if (i == j) fail("IndexError", "handle_slide needs i != j");
  if (sign != 1 && sign != -1) fail("Parse", "slide sign must be +-1");
  if (static_cast<Eigen::Index>(spin.size()) != n)
    fail("NotCharacteristic", "spin bit count mismatch");
  const bool was_char = is_characteristic(p.L, spin);
  IntMat L = p.L;
  // F_i <- F_i + sign F_j
  Int newii = p.L(i, i) + p.L(j, j) + 2 * sign * p.L(i, j);
  for (Eigen::Index k = 0; k < n; ++k) {
    if (k == i) continue;
    L(i, k) = p.L(i, k) + sign * p.L(j, k);
    L(k, i) = L(i, k);
  }
  L(i, i) = newii;
  SpinAssignment bits = spin;
  bits[j] ^= spin[i];
  Presentation q = moved(p, std::move(L), p.labels);
  // the bit rule preserves the characteristic condition whenever it held
  if (was_char && !is_characteristic(q.L, bits))
    fail("NotCharacteristic", "slide broke the characteristic condition (bug)");
  return {std::move(q), std::move(bits)};
}

std::pair<Presentation, SpinAssignment> blow_down_isolated(
    const Presentation& p, const SpinAssignment& spin, int k) {
  const Eigen::Index n = p.size();
  if (k < 0 || k >= n) fail("IndexError", "blow-down index out of range");
  if (p.L(k, k) != 1 && p.L(k, k) != -1)
    fail("NotUnitFramed", "blow-down needs framing +-1");
  for (Eigen::Index j = 0; j < n; ++j)
    if (j != k && p.L(k, j) != 0)
      fail("NotIsolated", "blow-down needs an isolated component");
  if (static_cast<Eigen::Index>(spin.size()) != n || spin[k] != 1)
    fail("NotCharacteristic", "isolated unit component must carry bit 1");
  IntMat L(n - 1, n - 1);
  std::vector<std::string> labels;
  SpinAssignment bits;
  for (Eigen::Index a = 0, i2 = 0; a < n; ++a) {
    if (a == k) continue;
    for (Eigen::Index b = 0, j2 = 0; b < n; ++b) {
      if (b == k) continue;
      L(i2, j2++) = p.L(a, b);
    }
    labels.push_back(p.labels[a]);
    bits.push_back(spin[a]);
    ++i2;
  }
  Presentation q = moved(p, std::move(L), std::move(labels));
  if (p.L(k, k) == +1) q.fillability_lost = true;
  return {std::move(q), std::move(bits)};
}

Presentation contract(const Presentation& p, int k) {
  const Eigen::Index n = p.size();
  if (k < 0 || k >= n) fail("IndexError", "contract index out of range");
  if (p.L(k, k) != 1 && p.L(k, k) != -1)
    fail("NotUnitFramed", "contract needs framing +-1");
  IntMat L(n - 1, n - 1);
  std::vector<std::string> labels;
  for (Eigen::Index a = 0, i2 = 0; a < n; ++a) {
    if (a == k) continue;
    for (Eigen::Index b = 0, j2 = 0; b < n; ++b) {
      if (b == k) continue;
      L(i2, j2++) = p.L(a, b) - p.L(a, k) * p.L(b, k) / p.L(k, k);
    }
    labels.push_back(p.labels[a]);
    ++i2;
  }
  return moved(p, std::move(L), std::move(labels));
}

std::pair<Presentation, std::optional<SpinAssignment>> apply_script(
    const Presentation& p, std::optional<SpinAssignment> spin,
    const MoveScript& script) {
  Presentation cur = p;
  size_t pos = 0;
  try {
    for (const Move& m : script) {
      ++pos;
      switch (m.kind) {
        case Move::BlowUp:
          if (!spin) fail("NotCharacteristic", "blow-up needs tracked spin bits");
          std::tie(cur, *spin) = blow_up(cur, *spin, m.sign, m.l);
          break;
        case Move::Slide:
          if (!spin) fail("NotCharacteristic", "slide needs tracked spin bits");
          std::tie(cur, *spin) = handle_slide(cur, *spin, m.i, m.j, m.sign);
          break;
        case Move::BlowDown:
          if (!spin)
            fail("NotCharacteristic", "blow-down needs tracked spin bits");
          std::tie(cur, *spin) = blow_down_isolated(cur, *spin, m.k);
          break;
        case Move::Contract:
          cur = contract(cur, m.k);
          spin.reset();  // bits invalidated; re-derive via explicit slides
          break;
      }
    }
  } catch (const Error& e) {
    fail(e.kind(), "move " + std::to_string(pos) + " (" +
                       move_str(script[pos - 1]) + "): " + e.what());
  }
  return {std::move(cur), std::move(spin)};
}

std::string move_str(const Move& m) {
  std::ostringstream os;
  switch (m.kind) {
    case Move::BlowUp:
      os << "blowup(" << (m.sign > 0 ? "+1" : "-1") << ";";
      for (Eigen::Index t = 0; t < m.l.size(); ++t)
        os << (t ? "," : " ") << m.l(t);
      os << ")";
      break;
    case Move::Slide:
      os << "slide(" << m.i + 1 << "," << m.j + 1 << ","
         << (m.sign > 0 ? "+1" : "-1") << ")";
      break;
    case Move::BlowDown:
      os << "blowdown(" << m.k + 1 << ")";
      break;
    case Move::Contract:
      os << "contract(" << m.k + 1 << ")";
      break;
  }
  return os.str();
}

}  // namespace covlift
