#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace covlift {

// Exact scalars. GMP-backed: arbitrary precision, always lowest terms,
// positive denominator.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMat = Mat<Int>;
using IntVec = Vec<Int>;
using RatMat = Mat<Rat>;
using RatVec = Vec<Rat>;

// Domain errors carry a machine-readable kind ("SingularMatrix", ...)
// on top of the human message.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& msg) {
  throw Error(kind, msg);
}

// Rationals are serialized as "p/q" ("p" when q == 1).
std::string rat_str(const Rat& r);
Rat parse_rat(const std::string& s);

}  // namespace covlift
