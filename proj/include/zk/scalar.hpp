#pragma once

// Exact scalar types and the dense matrix aliases used throughout.
// Expression templates are switched off so the types behave as plain
// value types inside Eigen containers.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <string>

namespace zk {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;
using IntegerMatrix = Matrix<Integer>;
/// Coboundary matrices only ever carry entries in {-1, 0, 1}.
using SignMatrix = Eigen::MatrixXi;

inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace zk
