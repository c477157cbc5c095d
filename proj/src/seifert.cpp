#include "covlift/seifert.hpp"

#include <algorithm>
#include <sstream>

namespace covlift {

namespace {
Int floor_div(const Int& a, const Int& b) {  // b > 0
  Int q = a / b, r = a % b;
  if (r != 0 && a < 0) --q;
  return q;
}
Int pos_mod(const Int& a, const Int& b) {  // b > 0
  Int r = a % b;
  if (r < 0) r += b;
  return r;
}
}  // namespace

SeifertData SeifertData::make(long long genus,
                              std::vector<std::pair<Int, Int>> pairs) {
  if (genus < 0) fail("Parse", "genus must be non-negative");
  for (auto& [a, b] : pairs) {
    if (a < 1) fail("Parse", "multiplicities must be positive");
    if (a > 1 && gcd(a, b) != 1)
      fail("NotCoprime", "pair (" + a.str() + "," + b.str() + ") not coprime");
  }
  SeifertData s;
  s.genus = genus;
  s.pairs = std::move(pairs);
  return s;
}

Rat euler_number(const SeifertData& s) {
  Rat e = 0;
  for (const auto& [a, b] : s.pairs) e -= Rat(b, a);
  return e;
}

Int h1_order(const SeifertData& s) {
  if (s.genus != 0) fail("NotQHS", "positive genus base is not a rational "
                                   "homology sphere");
  Rat e = euler_number(s);
  if (e == 0) fail("ZeroEuler", "Euler number zero: not a rational homology "
                                "sphere");
  Rat h = abs(e);
  for (const auto& [a, b] : s.pairs) h *= Rat(a);
  if (denominator(h) != 1) fail("Parse", "|e| prod(alpha) not integral (bug)");
  return numerator(h);
}

SeifertData normalize(const SeifertData& s) {
  Int b0 = 0;
  std::vector<std::pair<Int, Int>> out;
  for (const auto& [a, b] : s.pairs) {
    if (a == 1) {
      b0 += b;
      continue;
    }
    Int bm = pos_mod(b, a);
    b0 += floor_div(b, a);
    out.emplace_back(a, bm);
  }
  std::sort(out.begin(), out.end());
  if (b0 != 0) out.insert(out.begin(), {Int(1), b0});
  SeifertData r;
  r.genus = s.genus;
  r.pairs = std::move(out);
  return r;
}

SeifertData moser_surgery(const Int& r, const Int& s, const Int& p,
                          const Int& q) {
  if (abs(r) < 2 || abs(s) < 2) fail("Parse", "torus knot needs |r|,|s| >= 2");
  if (gcd(r, s) != 1) fail("NotCoprime", "(r,s) must be coprime");
  if (q == 0 || gcd(p, q) != 1) fail("NotCoprime", "p/q must be a reduced "
                                                   "nonzero-denominator slope");
  Int sig = p - q * r * s;
  if (sig == 0) fail("CableCase", "p/q = rs gives a reducible / degenerate "
                                  "surgery");
  // beta1 s + beta2 r = -1 (solutions differ by normalization)
  Int b1 = 0, b2 = 0;
  {
    // extended gcd on (s, r)
    Int a = s, b = r, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (b != 0) {
      Int qq = a / b;
      // evaluate before shifting: the scalars are expression-templated
      Int nb = a - qq * b, nx = x0 - qq * x1, ny = y0 - qq * y1;
      a = b;
      b = nb;
      x0 = x1;
      x1 = nx;
      y0 = y1;
      y1 = ny;
    }
    // a = gcd = +-1 = x0 s + y0 r
    b1 = -x0 / a;
    b2 = -y0 / a;
  }
  if (b1 * s + b2 * r != -1) fail("Parse", "extended gcd failed (bug)");
  std::vector<std::pair<Int, Int>> pairs = {{r, b1}, {s, b2}, {sig, -q}};
  for (auto& [a, b] : pairs)
    if (a < 0) {
      a = -a;
      b = -b;
    }
  SeifertData out = normalize(SeifertData::make(0, std::move(pairs)));
  // guardrails fixed by verifiable consequences
  if (euler_number(out) != Rat(p, r * s * sig))
    fail("Parse", "Euler number check failed (bug)");
  if (p != 0 && h1_order(out) != abs(p))
    fail("Parse", "|H1| check failed (bug)");
  return out;
}

SeifertData horizontal_cyclic_cover(const SeifertData& s, long long n,
                                    const std::vector<Int>& local_degrees) {
  if (s.genus != 0) fail("BadLocalDegree", "only genus-0 downstairs bases are "
                                           "supported");
  if (n < 1) fail("Parse", "multiplicity must be >= 1");
  if (local_degrees.size() != s.pairs.size())
    fail("BadLocalDegree", "need one local degree per exceptional pair");
  Int chi = 2 * Int(n);  // n * chi(S^2), corrected below
  for (size_t i = 0; i < s.pairs.size(); ++i) {
    const Int& d = local_degrees[i];
    if (d < 1 || gcd(Int(n), s.pairs[i].first) % d != 0)
      fail("BadLocalDegree", "local degree must divide gcd(n, alpha)");
    chi -= (Int(n) / d) * (d - 1);
  }
  if (chi % 2 != 0) fail("BadLocalDegree", "Riemann-Hurwitz gives a non-"
                                           "integral genus");
  Int g2 = (2 - chi) / 2;
  if (g2 < 0) fail("NegativeGenus", "cover genus would be negative");
  std::vector<std::pair<Int, Int>> pairs;
  for (size_t i = 0; i < s.pairs.size(); ++i) {
    const auto& [a, b] = s.pairs[i];
    const Int& d = local_degrees[i];
    Int copies = Int(n) / d;
    for (Int c = 0; c < copies; ++c) pairs.emplace_back(a / d, b);
  }
  SeifertData out = SeifertData::make(static_cast<long long>(g2), std::move(pairs));
  if (euler_number(out) != Rat(n) * euler_number(s))
    fail("Parse", "covering Euler number check failed (bug)");
  return out;
}

std::vector<Int> neg_cont_frac(const Rat& pq) {
  if (pq >= -1) fail("OutOfRange", "negative continued fractions need x < -1");
  std::vector<Int> out;
  Rat x = pq;
  for (;;) {
    if (denominator(x) == 1) {
      out.push_back(numerator(x));
      return out;
    }
    Int a = floor_div(numerator(x), denominator(x));
    out.push_back(a);
    x = Rat(1) / (Rat(a) - x);  // lands in x < -1 again
  }
}

namespace {
LensSpace lens_from_chain_any(const std::vector<Int>& f) {
  // tridiagonal determinants from the back: value = D1/D2
  const size_t k = f.size();
  Int d2 = 0, d1 = 1;  // D_{k+2}, D_{k+1}
  for (size_t t = k; t-- > 0;) {
    Int d0 = f[t] * d1 - d2;
    d2 = d1;
    d1 = d0;
  }
  if (d1 == 0) fail("NotQHS", "chain determinant zero: not a rational "
                              "homology sphere");
  Int p = abs(d1);
  if (p == 1) return {Int(1), Int(0)};  // S^3
  Int q = pos_mod(d1 > 0 ? -d2 : d2, p);
  if (q == 0 || gcd(p, q) != 1) fail("Parse", "chain evaluation failed (bug)");
  return {p, q};
}
}  // namespace

LensSpace lens_from_chain(const std::vector<Int>& framings) {
  for (const Int& f : framings)
    if (f > -2) fail("OutOfRange", "chain framings must be <= -2");
  return lens_from_chain_any(framings);
}

LensSpace lens_from_two_fiber_seifert(const SeifertData& s) {
  if (s.genus != 0) fail("NotQHS", "genus-0 base required");
  if (euler_number(s) == 0) fail("NotQHS", "Euler number zero");
  SeifertData ns = normalize(s);
  Int b = 0;
  std::vector<std::pair<Int, Int>> fibers;
  for (const auto& [a, be] : ns.pairs) {
    if (a == 1)
      b = be;
    else
      fibers.emplace_back(a, be);
  }
  if (fibers.size() > 2) fail("TooManyFibers", "lens recognition needs at most "
                                               "two exceptional fibers");
  std::vector<Int> chain;
  if (!fibers.empty()) {
    auto arm1 = neg_cont_frac(Rat(-fibers[0].first, fibers[0].second));
    chain.assign(arm1.rbegin(), arm1.rend());
  }
  chain.push_back(b);
  if (fibers.size() == 2) {
    auto arm2 = neg_cont_frac(Rat(-fibers[1].first, fibers[1].second));
    chain.insert(chain.end(), arm2.begin(), arm2.end());
  }
  LensSpace out = lens_from_chain_any(chain);
  if (out.p != h1_order(ns)) fail("Parse", "|H1| cross-check failed (bug)");
  if (fibers.size() == 2) {
    Int pchk = abs(fibers[0].first * fibers[1].second +
                   fibers[1].first * fibers[0].second +
                   fibers[0].first * fibers[1].first * b);
    if (pchk != out.p) fail("Parse", "two-fiber order cross-check failed (bug)");
  }
  return out;
}

bool lens_equal(const LensSpace& a, const LensSpace& b) {
  if (a.p != b.p) return false;
  if (a.p == 1) return true;
  return pos_mod(a.q - b.q, a.p) == 0 || pos_mod(a.q * b.q - 1, a.p) == 0;
}

std::string seifert_str(const SeifertData& s) {
  std::ostringstream os;
  os << "(genus " << s.genus << ";";
  for (size_t i = 0; i < s.pairs.size(); ++i)
    os << (i ? "," : " ") << "(" << s.pairs[i].first << ","
       << s.pairs[i].second << ")";
  os << ")";
  return os.str();
}

}  // namespace covlift
