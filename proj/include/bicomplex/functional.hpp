#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include <Eigen/Core>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "bicomplex/operators.hpp"
#include "bicomplex/random.hpp"

namespace bicomplex {

template <typename T>
using RVector = Eigen::Matrix<T, Eigen::Dynamic, 1>;

/// T-linear functional on T^n, x -> sum_k c_k x_k.
template <typename T>
struct TFunctional {
  TVector<T> coeffs;

  Eigen::Index dim() const noexcept { return coeffs.size(); }
};

using TFunctionald = TFunctional<double>;

/// R-linear functional on the 4n real coordinates of T^n, ordered
/// (a_1, b_1, c_1, d_1, a_2, ...).
template <typename T>
struct RealLinearFunctional {
  RVector<T> coeffs;

  Eigen::Index dim() const noexcept { return coeffs.size() / 4; }
  T operator()(const TVector<T>& x) const;
};

template <typename T>
RVector<T> real_coordinates(const TVector<T>& x) {
  RVector<T> r(4 * x.size());
  for (Eigen::Index k = 0; k < x.size(); ++k) r.template segment<4>(4 * k) << x[k].a(), x[k].b(), x[k].c(), x[k].d();
  return r;
}

template <typename T>
TVector<T> from_real_coordinates(const RVector<T>& r) {
  TVector<T> x(r.size() / 4);
  for (Eigen::Index k = 0; k < x.size(); ++k) x[k] = Bicomplex<T>(r[4 * k], r[4 * k + 1], r[4 * k + 2], r[4 * k + 3]);
  return x;
}

template <typename T>
T RealLinearFunctional<T>::operator()(const TVector<T>& x) const {
  detail::require_same_size(coeffs.size(), 4 * x.size());
  return coeffs.dot(real_coordinates(x));
}

template <typename T>
Bicomplex<T> eval(const TFunctional<T>& f, const TVector<T>& x) {
  detail::require_same_size(f.dim(), x.size());
  Bicomplex<T> sum;
  for (Eigen::Index k = 0; k < x.size(); ++k) sum += f.coeffs[k] * x[k];
  return sum;
}

/// Norms of a functional viewed as a 1 x n operator; s1, s2 are the Euclidean
/// norms of its idempotent coefficient rows.
template <typename T>
NormReport<T> functional_norms(const TFunctional<T>& f) {
  const auto p = split(f.coeffs);
  return norms_from_singular_values(p.v1.norm(), p.v2.norm());
}

template <typename T>
struct RealParts {
  RealLinearFunctional<T> f1;  ///< coefficient of 1
  RealLinearFunctional<T> f2;  ///< coefficient of i1
  RealLinearFunctional<T> f3;  ///< coefficient of i2
  RealLinearFunctional<T> f4;  ///< coefficient of j
};

/// Splits f(y) = f1(y) + i1 f2(y) + i2 f3(y) + j f4(y) into real functionals.
template <typename T>
RealParts<T> real_parts(const TFunctional<T>& f) {
  const Eigen::Index n = f.dim();
  RealParts<T> parts{{RVector<T>(4 * n)}, {RVector<T>(4 * n)}, {RVector<T>(4 * n)}, {RVector<T>(4 * n)}};
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto& c = f.coeffs[k];
    parts.f1.coeffs.template segment<4>(4 * k) << c.a(), -c.b(), -c.c(), c.d();
    parts.f2.coeffs.template segment<4>(4 * k) << c.b(), c.a(), -c.d(), -c.c();
    parts.f3.coeffs.template segment<4>(4 * k) << c.c(), -c.d(), c.a(), -c.b();
    parts.f4.coeffs.template segment<4>(4 * k) << c.d(), c.c(), c.b(), c.a();
  }
  return parts;
}

/// The T-linear functional
///   x -> F(x) - i1 F(i1 x) - i2 F(i2 x) + j F(j x)
/// built from a real functional F. Evaluating the formula on the standard
/// basis gives the coefficients directly.
template <typename T>
TFunctional<T> lift_real(const RealLinearFunctional<T>& real) {
  const Eigen::Index n = real.dim();
  TFunctional<T> f{TVector<T>(n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto c = real.coeffs.template segment<4>(4 * k);
    f.coeffs[k] = Bicomplex<T>(c[0], -c[1], -c[2], c[3]);
  }
  return f;
}

namespace detail {

// Orthonormal basis of Y regarded as a real subspace of R^{4n}, spanned by
// u*g for u in {1, i1, i2, j} and every generator g.
template <typename T>
Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> real_span_basis(const Submodule<T>& y) {
  const Eigen::Index n = y.ambient_dim();
  const auto& gens = y.generators();
  const auto m = static_cast<Eigen::Index>(gens.size());
  if (m == 0) return Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>(4 * n, 0);
  Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> span(4 * n, 4 * m);
  const Bicomplex<T> units[4] = {Bicomplex<T>(1), iota1<T>(), iota2<T>(), unit_j<T>()};
  for (Eigen::Index i = 0; i < m; ++i)
    for (int u = 0; u < 4; ++u) span.col(4 * i + u) = real_coordinates(scalar_mul(units[u], gens[i]));
  Eigen::JacobiSVD<Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>> svd(span, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const T cutoff = T(Submodule<T>::kRankTol) * T(std::max(4 * n, 4 * m)) * sv[0];
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv[rank] > cutoff) ++rank;
  return svd.matrixU().leftCols(rank);
}

}  // namespace detail

/// Minimal-norm real extension of a real functional given on the real span
/// of Y: F = f o P with P the orthogonal projection onto that span. F agrees
/// with f on Y and F(x) <= |f|_Y |x| on the whole space.
template <typename T>
RealLinearFunctional<T> extend_real(const RealLinearFunctional<T>& f, const Submodule<T>& y) {
  detail::require_same_size(4 * y.ambient_dim(), f.coeffs.size());
  const auto q = detail::real_span_basis(y);
  return {q * (q.transpose() * f.coeffs)};
}

/// Euclidean dual norm of f restricted to the real span of Y.
template <typename T>
T real_dual_norm_on(const RealLinearFunctional<T>& f, const Submodule<T>& y) {
  const auto q = detail::real_span_basis(y);
  return (q.transpose() * f.coeffs).norm();
}

template <typename T>
struct ExtensionReport {
  TFunctional<T> extension;
  T restriction_error;
  T x_component_norm1;  ///< |(x*)_1| on the ambient space
  T x_component_norm2;
  T y_component_norm1;  ///< |(y*)_1| on Y_1
  T y_component_norm2;
  NormReport<T> x_norms;
  NormReport<T> y_norms;
};

/// Norm-preserving extension of a functional known by its values on the
/// generators of Y.
///
/// Each idempotent component is extended on its own: the Riesz vector of
/// (y*)_k inside Y_k is the minimal-norm coefficient row reproducing the
/// values, and using it on all of C^n keeps |(x*)_k| = |(y*)_k|.
template <typename T>
ExtensionReport<T> hahn_banach_extend(const std::vector<Bicomplex<T>>& values, const Submodule<T>& y) {
  const auto& gens = y.generators();
  detail::require_same_size(static_cast<Eigen::Index>(gens.size()), static_cast<Eigen::Index>(values.size()));
  const Eigen::Index n = y.ambient_dim();
  const auto m = static_cast<Eigen::Index>(gens.size());

  CMatrix<T> g1(n, m), g2(n, m);
  CVector<T> beta1(m), beta2(m);
  T value_scale(0);
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto p = split(gens[i]);
    g1.col(i) = p.v1;
    g2.col(i) = p.v2;
    const auto h = to_idempotent(values[i]);
    beta1[i] = h.h1;
    beta2[i] = h.h2;
    value_scale = std::max(value_scale, norm(values[i]));
  }

  // Coefficient row c = conj(Q) a with (Q^H G)^T a = beta.
  auto riesz = [](const CMatrix<T>& q, const CMatrix<T>& g, const CVector<T>& beta) -> CVector<T> {
    if (q.cols() == 0) return CVector<T>::Zero(q.rows());
    const CMatrix<T> system = (q.adjoint() * g).transpose();
    const CVector<T> a = system.colPivHouseholderQr().solve(beta);
    return q.conjugate() * a;
  };

  ExtensionReport<T> report;
  const CVector<T> c1 = riesz(y.basis1(), g1, beta1);
  const CVector<T> c2 = riesz(y.basis2(), g2, beta2);
  report.extension.coeffs = merge(IdempotentVectorPair<T>{c1, c2});

  report.restriction_error = T(0);
  for (Eigen::Index i = 0; i < m; ++i) {
    report.restriction_error = std::max(report.restriction_error, norm(eval(report.extension, gens[i]) - values[i]));
  }
  if (report.restriction_error > T(1e-10) * (T(1) + value_scale)) {
    throw InconsistentFunctional(static_cast<double>(report.restriction_error));
  }

  report.x_component_norm1 = c1.norm();
  report.x_component_norm2 = c2.norm();
  report.y_component_norm1 = (y.basis1().transpose() * c1).norm();
  report.y_component_norm2 = (y.basis2().transpose() * c2).norm();
  report.x_norms = norms_from_singular_values(report.x_component_norm1, report.x_component_norm2);
  report.y_norms = norms_from_singular_values(report.y_component_norm1, report.y_component_norm2);
  return report;
}

/// Extension of the restriction to Y of a functional given on all of T^n.
template <typename T>
ExtensionReport<T> hahn_banach_extend(const TFunctional<T>& ystar, const Submodule<T>& y) {
  detail::require_same_size(y.ambient_dim(), ystar.dim());
  std::vector<Bicomplex<T>> values;
  values.reserve(y.generators().size());
  for (const auto& g : y.generators()) values.push_back(eval(ystar, g));
  return hahn_banach_extend(values, y);
}

template <typename T>
struct SeparationResult {
  TFunctional<T> functional;
  NormReport<T> norms;  ///< achieved norms of the functional
  T d;
  T d1;
  T d2;
  T claimed_norm;  ///< 1/d
};

/// Functional vanishing on Y with value 1 at x.
///
/// Requires both component distances to be positive: if x_k lies in Y_k then
/// f(x) has a zero k-th component and cannot equal 1.
template <typename T>
SeparationResult<T> separating_functional(const TVector<T>& x, const Submodule<T>& y) {
  const auto dist = distance_to(x, y);
  const auto p = split(x);
  const auto q = split(dist.proj);
  const T zero1 = T(kDefaultSingularTol) * (T(1) + p.v1.norm());
  const T zero2 = T(kDefaultSingularTol) * (T(1) + p.v2.norm());
  if (dist.d1 <= zero1 || dist.d2 <= zero2) {
    throw ComponentInNullDistance(static_cast<double>(dist.d1), static_cast<double>(dist.d2));
  }
  const CVector<T> r1 = p.v1 - q.v1;
  const CVector<T> r2 = p.v2 - q.v2;
  TFunctional<T> f{merge(IdempotentVectorPair<T>{r1.conjugate() / r1.squaredNorm(), r2.conjugate() / r2.squaredNorm()})};
  auto norms = functional_norms(f);
  return {std::move(f), norms, dist.d, dist.d1, dist.d2, T(1) / dist.d};
}

template <typename T>
struct NormingResult {
  TFunctional<T> functional;
  NormReport<T> norms;
  Bicomplex<T> value;  ///< f(x)
};

/// Functional with f(x) = |x|. Its idem norm is 1 exactly when the two
/// idempotent components of x have equal length.
template <typename T>
NormingResult<T> norming_functional(const TVector<T>& x) {
  const auto p = split(x);
  const T r = vec_norm(x);
  const T zero = T(kDefaultSingularTol) * (T(1) + r);
  if (p.v1.norm() <= zero || p.v2.norm() <= zero) throw NullConeVector();
  TFunctional<T> f{merge(IdempotentVectorPair<T>{CVector<T>(r * p.v1.conjugate() / p.v1.squaredNorm()),
                                                CVector<T>(r * p.v2.conjugate() / p.v2.squaredNorm())})};
  auto norms = functional_norms(f);
  const auto value = eval(f, x);
  return {std::move(f), norms, value};
}

template <typename T>
struct DualityGap {
  T sup_estimate;  ///< max |f(x)| over sampled f with idem norm 1
  T gap;           ///< |x| - sup_estimate
};

/// Samples functionals from the unit idem-norm sphere and measures how close
/// max |f(x)| comes to |x|.
template <typename T>
DualityGap<T> duality_gap(const TVector<T>& x, long trials, std::uint64_t seed) {
  Sampler sampler(seed);
  T best(0);
  TFunctional<T> f{TVector<T>(x.size())};
  for (long t = 0; t < trials; ++t) {
    for (auto& c : f.coeffs) c = Bicomplex<T>(sampler.normal(), sampler.normal(), sampler.normal(), sampler.normal());
    const T scale = functional_norms(f).idem_norm;
    if (scale == T(0)) continue;
    best = std::max(best, norm(eval(f, x)) / scale);
  }
  return {best, vec_norm(x) - best};
}

}  // namespace bicomplex
