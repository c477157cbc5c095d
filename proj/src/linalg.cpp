#include "covlift/linalg.hpp"

#include <sstream>

namespace covlift {

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) fail("Parse", "zero denominator in '" + s + "'");
    return Rat(num, den);
  } catch (const std::runtime_error& e) {
    fail("Parse", "bad rational '" + s + "'");
  }
}

namespace {
Eigen::FullPivLU<RatMat> lu_of(const IntMat& M) {
  RatMat A(M.rows(), M.cols());
  for (Eigen::Index i = 0; i < M.rows(); ++i)
    for (Eigen::Index j = 0; j < M.cols(); ++j) A(i, j) = Rat(M(i, j));
  return Eigen::FullPivLU<RatMat>(A);
}
}  // namespace

Int det(const IntMat& M) {
  if (M.rows() == 0) return 1;
  Rat d = lu_of(M).determinant();
  return numerator(d);  // integer matrix: denominator is 1
}

int nullity(const IntMat& M) {
  if (M.rows() == 0) return 0;
  auto lu = lu_of(M);
  lu.setThreshold(Rat(0));
  return static_cast<int>(lu.dimensionOfKernel());
}

RatVec solve_rational(const IntMat& M, const RatVec& v) {
  if (M.rows() == 0) return RatVec(0);
  auto lu = lu_of(M);
  lu.setThreshold(Rat(0));
  if (lu.determinant() == 0) fail("SingularMatrix", "det = 0 in solve_rational");
  return lu.solve(v);
}

std::pair<IntVec, IntMat> smith_diagonal(const IntMat& M) {
  const Eigen::Index n = M.rows();
  IntMat A = M;
  IntMat U = IntMat::Identity(n, n);
  for (Eigen::Index t = 0; t < n; ++t) {
    for (;;) {
      // smallest nonzero entry of the active block to (t,t)
      Eigen::Index bi = -1, bj = -1;
      for (Eigen::Index i = t; i < n; ++i)
        for (Eigen::Index j = t; j < A.cols(); ++j)
          if (A(i, j) != 0 &&
              (bi < 0 || abs(A(i, j)) < abs(A(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi < 0) return {A.diagonal(), U};
      if (bi != t) {
        A.row(t).swap(A.row(bi));
        U.row(t).swap(U.row(bi));
      }
      if (bj != t) A.col(t).swap(A.col(bj));
      bool clean = true;
      for (Eigen::Index i = t + 1; i < n; ++i) {
        Int q = A(i, t) / A(t, t);  // truncated division is fine: loop re-runs
        if (q != 0) {
          A.row(i) -= q * A.row(t);
          U.row(i) -= q * U.row(t);
        }
        if (A(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < A.cols(); ++j) {
        Int q = A(t, j) / A(t, t);
        if (q != 0) A.col(j) -= q * A.col(t);
        if (A(t, j) != 0) clean = false;
      }
      if (clean) break;
    }
  }
  return {A.diagonal(), U};
}

bool integer_coset_equal(const IntMat& M, const IntVec& v1, const IntVec& v2) {
  if (M.rows() > 0 && det(M) == 0)
    fail("SingularMatrix", "det = 0 in integer_coset_equal");
  auto [d, U] = smith_diagonal(M);
  IntVec w = U * (v1 - v2);
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (d(i) == 0) {
      if (w(i) != 0) return false;
    } else if (w(i) % d(i) != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace covlift
