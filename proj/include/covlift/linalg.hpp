#pragma once

#include "covlift/rational.hpp"

#include <utility>

namespace covlift {

// Signature of a symmetric matrix over Q by exact congruence reduction
// (simultaneous row/column pivoting). Degenerate matrices allowed; zero
// eigenvalues contribute 0.
template <typename Derived>
int signature(const Eigen::MatrixBase<Derived>& M) {
  const auto n = M.rows();
  RatMat A(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) A(i, j) = Rat(M(i, j));
  int pos = 0, neg = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (A(k, k) == 0) {
      // prefer a nonzero diagonal further down: swap it in
      Eigen::Index jd = -1, jo = -1;
      for (Eigen::Index j = k + 1; j < n; ++j) {
        if (jd < 0 && A(j, j) != 0) jd = j;
        if (jo < 0 && A(k, j) != 0) jo = j;
      }
      if (jd >= 0) {
        A.row(k).swap(A.row(jd));
        A.col(k).swap(A.col(jd));
      } else if (jo >= 0) {
        // A(jo,jo) == 0 here, so adding row/col jo makes A(k,k) = 2*A(k,jo) != 0
        A.row(k) += A.row(jo);
        A.col(k) += A.col(jo);
      } else {
        continue;  // row k is zero on the active block: nullity
      }
    }
    if (A(k, k) > 0)
      ++pos;
    else
      ++neg;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (A(i, k) == 0) continue;
      Rat f = A(i, k) / A(k, k);
      A.row(i) -= f * A.row(k);
      A.col(i) -= f * A.col(k);
    }
  }
  return pos - neg;
}

Int det(const IntMat& M);
int nullity(const IntMat& M);

// Exact solve M x = v; throws SingularMatrix when det M = 0.
RatVec solve_rational(const IntMat& M, const RatVec& v);

// Smith-style diagonalization D = U M V over Z (V untracked).
// Returns (diagonal of D, U).
std::pair<IntVec, IntMat> smith_diagonal(const IntMat& M);

// true iff v1 - v2 lies in M Z^n; throws SingularMatrix when det M = 0.
bool integer_coset_equal(const IntMat& M, const IntVec& v1, const IntVec& v2);

}  // namespace covlift
