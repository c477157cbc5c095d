#pragma once

#include "covlift/rational.hpp"

#include <utility>
#include <vector>

namespace covlift {

// Seifert invariants (genus; (a1,b1), ..., (ak,bk)), base S^2 when genus 0.
struct SeifertData {
  long long genus = 0;
  std::vector<std::pair<Int, Int>> pairs;  // alpha >= 1, gcd(alpha,beta)=1

  static SeifertData make(long long genus, std::vector<std::pair<Int, Int>> pairs);
  bool operator==(const SeifertData&) const = default;
};

struct LensSpace {
  Int p, q;  // 0 < q < p, gcd = 1
  bool operator==(const LensSpace&) const = default;
};

Rat euler_number(const SeifertData& s);

// |e| * prod(alpha) for genus-0 rational homology spheres
Int h1_order(const SeifertData& s);

// Normal form: 0 < beta < alpha for every alpha > 1, quotients absorbed into
// a single leading (1,b) pair (kept only when b != 0); pairs sorted.
SeifertData normalize(const SeifertData& s);

// Seifert invariants of p/q surgery on the (r,s) torus knot.
SeifertData moser_surgery(const Int& r, const Int& s, const Int& p, const Int& q);

// Fibre-preserving n-fold cover with prescribed local degrees.
SeifertData horizontal_cyclic_cover(const SeifertData& s, long long n,
                                    const std::vector<Int>& local_degrees);

// Unique expansion pq = a1 - 1/(a2 - 1/(...)), all entries <= -2.
std::vector<Int> neg_cont_frac(const Rat& pq);

// Chain of unknots with the given framings -> lens space.
LensSpace lens_from_chain(const std::vector<Int>& framings);

LensSpace lens_from_two_fiber_seifert(const SeifertData& s);

// L(p,q) = L(p,q') iff q' = q or q q' = 1 (mod p)
bool lens_equal(const LensSpace& a, const LensSpace& b);

std::string seifert_str(const SeifertData& s);

}  // namespace covlift
