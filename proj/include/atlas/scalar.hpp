#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <vector>

namespace atlas {

/// Exact scalar types. Expression templates are disabled so the types
/// behave as plain values inside Eigen expressions.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RatMatrix = MatrixX<Rational>;
using RatVector = VectorX<Rational>;
using Index = Eigen::Index;

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) return false;
  return true;
}

/// Product that skips zero entries of the left factor. Lie algebra basis
/// matrices are very sparse, so brackets against them are cheap this way.
template <typename DerivedA, typename DerivedB>
MatrixX<typename DerivedA::Scalar> sparse_product(const Eigen::MatrixBase<DerivedA>& a,
                                                  const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  MatrixX<Scalar> out = MatrixX<Scalar>::Zero(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik == 0) continue;
      for (Index j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) out(i, j) += aik * b(k, j);
    }
  return out;
}

/// Matrix commutator xy - yx.
template <typename DerivedA, typename DerivedB>
MatrixX<typename DerivedA::Scalar> commutator(const Eigen::MatrixBase<DerivedA>& x,
                                              const Eigen::MatrixBase<DerivedB>& y) {
  return sparse_product(x, y) - sparse_product(y, x);
}

template <typename Derived>
MatrixX<typename Derived::Scalar> matrix_power(const Eigen::MatrixBase<Derived>& m, int k) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> out = MatrixX<Scalar>::Identity(m.rows(), m.cols());
  for (int i = 0; i < k; ++i) out = sparse_product(out, m);
  return out;
}

/// Column-major flattening, used to test linear independence of matrices.
template <typename Derived>
VectorX<typename Derived::Scalar> flatten(const Eigen::MatrixBase<Derived>& m) {
  VectorX<typename Derived::Scalar> v(m.size());
  Index k = 0;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) v(k++) = m(i, j);
  return v;
}

/// Stacks flattened matrices as the columns of one matrix.
RatMatrix stack_columns(const std::vector<RatMatrix>& mats);

}  // namespace atlas
