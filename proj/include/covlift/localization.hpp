#pragma once

#include "covlift/rational.hpp"

#include <vector>

namespace covlift {

// Toy graded-module algebra over H*(B Z/p; Z/p):
// p = 2: (Z/2)[u], deg u = 1; p odd: (Z/p)[u,v]/(v^2), deg u = 2, deg v = 1.
struct CoefficientRing {
  long long p = 2;
  static CoefficientRing make(long long p);
};

struct RepresentationDatum {
  long long total_dim = 0;  // real dimension of V
  long long fixed_dim = 0;  // real dimension of V^G
  static RepresentationDatum make(const CoefficientRing& ring, long long total,
                                  long long fixed);
};

// Free rank-1 module; everything in scope is free on one generator.
struct FreeGradedModule {
  long long generator_degree = 0;
  bool localized = false;

  // nonzero in degree d: localized -> everywhere; else d >= generator degree
  bool nonzero_in(long long d) const {
    return localized || d >= generator_degree;
  }
};

// Thom shift: free on one generator in degree dim V (or dim V^G).
FreeGradedModule cohomology_of_rep_sphere(const CoefficientRing& ring,
                                          const RepresentationDatum& rep,
                                          bool use_fixed);

FreeGradedModule localize(FreeGradedModule m);

enum class RestrictionRank { Zero, Iso, Onto };
const char* restriction_str(RestrictionRank r);

// Rank of the restriction map cH^d(V+) -> cH^d((V^G)+) per degree in
// [lo, hi).
std::vector<RestrictionRank> restriction_rank_table(
    const CoefficientRing& ring, const RepresentationDatum& rep, long long lo,
    long long hi, bool localized);

// Euler class of a fixed-point-free summand: never zero.
bool euler_class_is_zero(const CoefficientRing& ring, long long free_part_dim);

}  // namespace covlift
