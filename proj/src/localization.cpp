#include "covlift/localization.hpp"

namespace covlift {

namespace {
bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}
}  // namespace

CoefficientRing CoefficientRing::make(long long p) {
  if (!is_prime(p)) fail("Parse", "coefficient prime required");
  return {p};
}

RepresentationDatum RepresentationDatum::make(const CoefficientRing& ring,
                                              long long total, long long fixed) {
  if (total < 0 || fixed < 0 || fixed > total)
    fail("Parse", "need 0 <= fixed_dim <= total_dim");
  if (ring.p != 2 && (total - fixed) % 2 != 0)
    fail("Parse", "for odd p the non-fixed summands are complex, so "
                  "total_dim - fixed_dim must be even");
  return {total, fixed};
}

FreeGradedModule cohomology_of_rep_sphere(const CoefficientRing&,
                                          const RepresentationDatum& rep,
                                          bool use_fixed) {
  FreeGradedModule m;
  m.generator_degree = use_fixed ? rep.fixed_dim : rep.total_dim;
  return m;
}

FreeGradedModule localize(FreeGradedModule m) {
  m.localized = true;
  return m;
}

const char* restriction_str(RestrictionRank r) {
  switch (r) {
    case RestrictionRank::Zero: return "0";
    case RestrictionRank::Iso: return "iso";
    default: return "onto";
  }
}

std::vector<RestrictionRank> restriction_rank_table(
    const CoefficientRing& ring, const RepresentationDatum& rep, long long lo,
    long long hi, bool localized) {
  FreeGradedModule src = cohomology_of_rep_sphere(ring, rep, false);
  FreeGradedModule dst = cohomology_of_rep_sphere(ring, rep, true);
  if (localized) {
    src = localize(src);
    dst = localize(dst);
  }
  std::vector<RestrictionRank> out;
  for (long long d = lo; d < hi; ++d) {
    if (!src.nonzero_in(d) && dst.nonzero_in(d))
      out.push_back(RestrictionRank::Zero);
    else
      out.push_back(RestrictionRank::Iso);  // both nonzero, or both zero
  }
  return out;
}

bool euler_class_is_zero(const CoefficientRing& ring, long long free_part_dim) {
  if (free_part_dim < 0) fail("Parse", "dimension must be non-negative");
  if (ring.p != 2 && free_part_dim % 2 != 0)
    fail("Parse", "fixed-point-free summands are complex for odd p");
  // e(f) is a power of u up to a unit: a nonzerodivisor, never zero
  return false;
}

}  // namespace covlift
