#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SVD>

#include "bicomplex/scalar.hpp"

namespace bicomplex {

template <typename T>
using TVector = Eigen::Matrix<Bicomplex<T>, Eigen::Dynamic, 1>;
template <typename T>
using CVector = Eigen::Matrix<std::complex<T>, Eigen::Dynamic, 1>;
template <typename T>
using CMatrix = Eigen::Matrix<std::complex<T>, Eigen::Dynamic, Eigen::Dynamic>;

using TVectord = TVector<double>;
using CVectord = CVector<double>;
using CMatrixd = CMatrix<double>;

/// Idempotent components of a vector: x = e1*v1 + e2*v2 with v1, v2 in C(i1)^n.
template <typename T>
struct IdempotentVectorPair {
  CVector<T> v1;
  CVector<T> v2;
};

namespace detail {

inline void require_same_size(Eigen::Index expected, Eigen::Index actual) {
  if (expected != actual) throw DimensionMismatch(expected, actual);
}

}  // namespace detail

template <typename T>
TVector<T> vec_add(const TVector<T>& x, const TVector<T>& y) {
  detail::require_same_size(x.size(), y.size());
  return x + y;
}

template <typename T>
TVector<T> vec_sub(const TVector<T>& x, const TVector<T>& y) {
  detail::require_same_size(x.size(), y.size());
  return x - y;
}

template <typename T>
TVector<T> scalar_mul(const Bicomplex<T>& w, const TVector<T>& x) {
  return x.unaryExpr([&w](const Bicomplex<T>& v) { return w * v; });
}

template <typename T>
IdempotentVectorPair<T> split(const TVector<T>& x) {
  IdempotentVectorPair<T> p{CVector<T>(x.size()), CVector<T>(x.size())};
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    const auto h = to_idempotent(x[k]);
    p.v1[k] = h.h1;
    p.v2[k] = h.h2;
  }
  return p;
}

template <typename T>
TVector<T> merge(const IdempotentVectorPair<T>& p) {
  detail::require_same_size(p.v1.size(), p.v2.size());
  TVector<T> x(p.v1.size());
  for (Eigen::Index k = 0; k < x.size(); ++k) x[k] = from_idempotent(IdempotentForm<T>{p.v1[k], p.v2[k]});
  return x;
}

/// Euclidean norm over the 4n real coefficients. Equals
/// sqrt((|v1|^2 + |v2|^2)/2) for the idempotent components.
template <typename T>
T vec_norm(const TVector<T>& x) {
  T sum(0);
  for (const auto& w : x) sum += w.a() * w.a() + w.b() * w.b() + w.c() * w.c() + w.d() * w.d();
  return std::sqrt(sum);
}

/// Metric on the product module: |x - x'| + |y - y'|.
template <typename T>
T product_metric(const std::pair<TVector<T>, TVector<T>>& p, const std::pair<TVector<T>, TVector<T>>& q) {
  return vec_norm(vec_sub(p.first, q.first)) + vec_norm(vec_sub(p.second, q.second));
}

/// A point together with its F-norm |x| = rho(x, 0) for rho(x, y) = |x - y|.
template <typename T>
struct FMetricPoint {
  TVector<T> point;
  T fnorm;

  explicit FMetricPoint(TVector<T> x) : point(std::move(x)), fnorm(vec_norm(point)) {}

  friend T distance(const FMetricPoint& p, const FMetricPoint& q) {
    return vec_norm(vec_sub(p.point, q.point));
  }
};

/// Submodule of T^n spanned by a set of generators.
///
/// Submodules need not be free (e1*T^n is one), so the submodule is stored as
/// the pair of complex subspaces Y1, Y2 spanned by the generators' idempotent
/// components, each with an orthonormal basis. The submodule is exactly
/// { merge(y1, y2) : y1 in Y1, y2 in Y2 }.
template <typename T>
class Submodule {
 public:
  /// Relative rank cutoff, scaled by the larger component spectrum.
  static constexpr double kRankTol = 1e-12;

  Submodule(Eigen::Index n, std::vector<TVector<T>> generators)
      : n_(n), generators_(std::move(generators)) {
    const auto m = static_cast<Eigen::Index>(generators_.size());
    CMatrix<T> g1(n_, m), g2(n_, m);
    for (Eigen::Index i = 0; i < m; ++i) {
      detail::require_same_size(n_, generators_[i].size());
      auto p = split(generators_[i]);
      g1.col(i) = p.v1;
      g2.col(i) = p.v2;
    }
    if (m == 0) {
      basis1_.resize(n_, 0);
      basis2_.resize(n_, 0);
      return;
    }
    Eigen::JacobiSVD<CMatrix<T>> svd1(g1, Eigen::ComputeThinU);
    Eigen::JacobiSVD<CMatrix<T>> svd2(g2, Eigen::ComputeThinU);
    const T scale = std::max(svd1.singularValues()[0], svd2.singularValues()[0]);
    const T cutoff = T(kRankTol) * T(std::max(n_, m)) * scale;
    basis1_ = leading_columns(svd1, cutoff);
    basis2_ = leading_columns(svd2, cutoff);
  }

  /// The zero submodule of T^n.
  static Submodule zero(Eigen::Index n) { return Submodule(n, {}); }

  /// The whole module T^n, spanned by the standard basis.
  static Submodule full(Eigen::Index n) {
    std::vector<TVector<T>> gens;
    for (Eigen::Index k = 0; k < n; ++k) {
      TVector<T> g = TVector<T>::Zero(n);
      g[k] = Bicomplex<T>(1);
      gens.push_back(std::move(g));
    }
    return Submodule(n, std::move(gens));
  }

  Eigen::Index ambient_dim() const noexcept { return n_; }
  const std::vector<TVector<T>>& generators() const noexcept { return generators_; }
  const CMatrix<T>& basis1() const noexcept { return basis1_; }
  const CMatrix<T>& basis2() const noexcept { return basis2_; }
  Eigen::Index dim1() const noexcept { return basis1_.cols(); }
  Eigen::Index dim2() const noexcept { return basis2_.cols(); }
  /// Generators span all of T^n.
  bool is_fundamental() const noexcept { return dim1() == n_ && dim2() == n_; }

 private:
  static CMatrix<T> leading_columns(const Eigen::JacobiSVD<CMatrix<T>>& svd, T cutoff) {
    Eigen::Index rank = 0;
    const auto& sv = svd.singularValues();
    while (rank < sv.size() && sv[rank] > cutoff) ++rank;
    return svd.matrixU().leftCols(rank);
  }

  Eigen::Index n_;
  std::vector<TVector<T>> generators_;
  CMatrix<T> basis1_;
  CMatrix<T> basis2_;
};

template <typename T>
struct Distance {
  T d;   ///< sqrt((d1^2 + d2^2)/2)
  T d1;  ///< distance of v1 to Y1
  T d2;  ///< distance of v2 to Y2
  TVector<T> proj;
};

/// Distance from x to Y and the nearest point of Y, found by projecting each
/// idempotent component onto its subspace.
template <typename T>
Distance<T> distance_to(const TVector<T>& x, const Submodule<T>& y) {
  detail::require_same_size(y.ambient_dim(), x.size());
  auto p = split(x);
  CVector<T> p1 = y.basis1() * (y.basis1().adjoint() * p.v1);
  CVector<T> p2 = y.basis2() * (y.basis2().adjoint() * p.v2);
  const T d1 = (p.v1 - p1).norm();
  const T d2 = (p.v2 - p2).norm();
  return {std::sqrt((d1 * d1 + d2 * d2) / T(2)), d1, d2, merge(IdempotentVectorPair<T>{p1, p2})};
}

template <typename T>
bool in_span(const TVector<T>& x, const Submodule<T>& y, std::type_identity_t<T> tol = T(1e-10)) {
  return distance_to(x, y).d <= tol * (T(1) + vec_norm(x));
}

/// Supremum of the norms of a finite sample; a finite sample is bounded
/// exactly when this is finite.
template <typename T>
T bounded_sup(std::span<const TVector<T>> points) {
  if (points.empty()) throw EmptyCollection();
  T sup(0);
  for (const auto& x : points) sup = std::max(sup, vec_norm(x));
  return sup;
}

template <typename T>
T bounded_sup(const std::vector<TVector<T>>& points) {
  return bounded_sup(std::span<const TVector<T>>(points));
}

}  // namespace bicomplex
