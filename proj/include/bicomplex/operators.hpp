#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include <Eigen/Core>
#include <Eigen/LU>
#include <Eigen/SVD>

#include "bicomplex/module.hpp"

namespace bicomplex {

/// A T-linear operator T^n -> T^m as an m x n matrix of bicomplex entries.
template <typename T>
using TMatrix = Eigen::Matrix<Bicomplex<T>, Eigen::Dynamic, Eigen::Dynamic>;
using TMatrixd = TMatrix<double>;

/// Idempotent components of an operator: T = e1*M1 + e2*M2.
template <typename T>
struct ComplexMatrixPair {
  CMatrix<T> M1;
  CMatrix<T> M2;
};

/// Both operator norms, from the largest singular values s1, s2 of the
/// idempotent components.
///
///   sup_norm  = (1/sqrt2) sup_{|x|<=1} |Tx| = max(s1, s2)/sqrt2
///   idem_norm = sqrt((s1^2 + s2^2)/2)
///
/// They satisfy sup_norm <= idem_norm <= sqrt2 * sup_norm.
template <typename T>
struct NormReport {
  T sup_norm;
  T idem_norm;
  T s1;
  T s2;
};

template <typename T>
TMatrix<T> scalar_matrix(const Bicomplex<T>& w, Eigen::Index n) {
  TMatrix<T> m = TMatrix<T>::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) m(k, k) = w;
  return m;
}

/// 1x1 operator x -> w*x.
template <typename T>
TMatrix<T> multiplier(const Bicomplex<T>& w) {
  return scalar_matrix(w, 1);
}

template <typename T>
TVector<T> apply(const TMatrix<T>& op, const TVector<T>& x) {
  detail::require_same_size(op.cols(), x.size());
  return op * x;
}

template <typename T>
TMatrix<T> compose(const TMatrix<T>& a, const TMatrix<T>& b) {
  detail::require_same_size(a.cols(), b.rows());
  return a * b;
}

template <typename T>
ComplexMatrixPair<T> split_op(const TMatrix<T>& op) {
  ComplexMatrixPair<T> p{CMatrix<T>(op.rows(), op.cols()), CMatrix<T>(op.rows(), op.cols())};
  for (Eigen::Index j = 0; j < op.cols(); ++j) {
    for (Eigen::Index i = 0; i < op.rows(); ++i) {
      const auto h = to_idempotent(op(i, j));
      p.M1(i, j) = h.h1;
      p.M2(i, j) = h.h2;
    }
  }
  return p;
}

template <typename T>
TMatrix<T> merge_op(const ComplexMatrixPair<T>& p) {
  detail::require_same_size(p.M1.rows(), p.M2.rows());
  detail::require_same_size(p.M1.cols(), p.M2.cols());
  TMatrix<T> op(p.M1.rows(), p.M1.cols());
  for (Eigen::Index j = 0; j < op.cols(); ++j) {
    for (Eigen::Index i = 0; i < op.rows(); ++i) {
      op(i, j) = from_idempotent(IdempotentForm<T>{p.M1(i, j), p.M2(i, j)});
    }
  }
  return op;
}

namespace detail {

template <typename T>
T largest_singular_value(const CMatrix<T>& m) {
  if (m.size() == 0) return T(0);
  Eigen::JacobiSVD<CMatrix<T>> svd(m);
  return svd.singularValues()[0];
}

template <typename T>
T singular_ratio(const Eigen::Matrix<T, Eigen::Dynamic, 1>& sv) {
  const T hi = sv[0];
  const T lo = sv[sv.size() - 1];
  if (lo == T(0)) return std::numeric_limits<T>::infinity();
  return hi / lo;
}

}  // namespace detail

template <typename T>
NormReport<T> norms_from_singular_values(T s1, T s2) {
  const T root2 = std::sqrt(T(2));
  return {std::max(s1, s2) / root2, std::sqrt((s1 * s1 + s2 * s2) / T(2)), s1, s2};
}

template <typename T>
NormReport<T> op_norms(const TMatrix<T>& op) {
  const auto p = split_op(op);
  return norms_from_singular_values(detail::largest_singular_value(p.M1),
                                    detail::largest_singular_value(p.M2));
}

/// Least M with |Tx| <= sqrt2 * M * |x| for every x.
template <typename T>
T bound_constant(const TMatrix<T>& op) {
  return op_norms(op).sup_norm;
}

/// Singular values (descending) of each idempotent component.
template <typename T>
std::pair<Eigen::Matrix<T, Eigen::Dynamic, 1>, Eigen::Matrix<T, Eigen::Dynamic, 1>> component_singular_values(
    const TMatrix<T>& op) {
  const auto p = split_op(op);
  return {Eigen::JacobiSVD<CMatrix<T>>(p.M1).singularValues(),
          Eigen::JacobiSVD<CMatrix<T>>(p.M2).singularValues()};
}

template <typename T>
Bicomplex<T> det(const TMatrix<T>& op) {
  if (op.rows() != op.cols()) throw NotSquare(op.rows(), op.cols());
  const auto p = split_op(op);
  return from_idempotent(IdempotentForm<T>{p.M1.determinant(), p.M2.determinant()});
}

namespace detail {

// Throws SingularOperator when a component has condition number above 1/tol.
template <typename T>
void require_invertible(const ComplexMatrixPair<T>& p, T tol) {
  const T c1 = singular_ratio<T>(Eigen::JacobiSVD<CMatrix<T>>(p.M1).singularValues());
  const T c2 = singular_ratio<T>(Eigen::JacobiSVD<CMatrix<T>>(p.M2).singularValues());
  std::vector<int> bad;
  if (!(c1 * tol < T(1))) bad.push_back(1);
  if (!(c2 * tol < T(1))) bad.push_back(2);
  if (!bad.empty()) throw SingularOperator(std::move(bad), static_cast<double>(c1), static_cast<double>(c2));
}

}  // namespace detail

/// Solves op*x = b by solving the two complex systems of the idempotent
/// components. Components with condition number >= 1/tol are rejected.
template <typename T>
TVector<T> solve(const TMatrix<T>& op, const TVector<T>& b, std::type_identity_t<T> tol = T(kDefaultSingularTol)) {
  if (op.rows() != op.cols()) throw NotSquare(op.rows(), op.cols());
  detail::require_same_size(op.rows(), b.size());
  const auto p = split_op(op);
  detail::require_invertible(p, tol);
  const auto rhs = split(b);
  return merge(IdempotentVectorPair<T>{p.M1.partialPivLu().solve(rhs.v1), p.M2.partialPivLu().solve(rhs.v2)});
}

template <typename T>
TMatrix<T> invert(const TMatrix<T>& op, std::type_identity_t<T> tol = T(kDefaultSingularTol)) {
  if (op.rows() != op.cols()) throw NotSquare(op.rows(), op.cols());
  const auto p = split_op(op);
  detail::require_invertible(p, tol);
  return merge_op(ComplexMatrixPair<T>{p.M1.inverse(), p.M2.inverse()});
}

}  // namespace bicomplex
