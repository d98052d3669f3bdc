#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <ostream>
#include <type_traits>

#include <Eigen/Core>

#include "bicomplex/errors.hpp"

namespace bicomplex {

/// Default relative tolerance for null-cone tests and operator conditioning.
inline constexpr double kDefaultSingularTol = 1e-12;

/// A bicomplex number w = a + b*i1 + c*i2 + d*j with i1^2 = i2^2 = -1 and
/// j = i1*i2, j^2 = 1.
///
/// Storage is the four real coefficients. Equivalently w = z1 + i2*z2 with
/// z1 = a + b*i1 and z2 = c + d*i1, both in C(i1); `z1()` / `z2()` expose that
/// form and `from_complex` builds from it. The idempotent coordinates are
/// derived on demand by `to_idempotent`.
///
/// The public constructors reject NaN and infinity. Results of arithmetic are
/// not re-checked.
template <typename T>
class Bicomplex {
 public:
  using Real = T;
  using Complex = std::complex<T>;

  constexpr Bicomplex() = default;

  // Implicit so that Eigen can form Scalar(0) and Scalar(1).
  Bicomplex(T a) : Bicomplex(a, T(0), T(0), T(0)) {}  // NOLINT(google-explicit-constructor)

  Bicomplex(T a, T b, T c, T d) : a_(a), b_(b), c_(c), d_(d) {
    if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && std::isfinite(d))) {
      throw NonFiniteValue("Bicomplex");
    }
  }

  static Bicomplex from_complex(Complex z1, Complex z2) {
    return Bicomplex(z1.real(), z1.imag(), z2.real(), z2.imag());
  }

  constexpr T a() const noexcept { return a_; }
  constexpr T b() const noexcept { return b_; }
  constexpr T c() const noexcept { return c_; }
  constexpr T d() const noexcept { return d_; }
  Complex z1() const noexcept { return {a_, b_}; }
  Complex z2() const noexcept { return {c_, d_}; }

  Bicomplex& operator+=(const Bicomplex& o) noexcept {
    a_ += o.a_;
    b_ += o.b_;
    c_ += o.c_;
    d_ += o.d_;
    return *this;
  }
  Bicomplex& operator-=(const Bicomplex& o) noexcept {
    a_ -= o.a_;
    b_ -= o.b_;
    c_ -= o.c_;
    d_ -= o.d_;
    return *this;
  }
  Bicomplex& operator*=(const Bicomplex& o) noexcept { return *this = *this * o; }
  Bicomplex& operator*=(T s) noexcept {
    a_ *= s;
    b_ *= s;
    c_ *= s;
    d_ *= s;
    return *this;
  }

  friend Bicomplex operator+(Bicomplex l, const Bicomplex& r) noexcept { return l += r; }
  friend Bicomplex operator-(Bicomplex l, const Bicomplex& r) noexcept { return l -= r; }
  friend Bicomplex operator-(const Bicomplex& w) noexcept {
    return raw(-w.a_, -w.b_, -w.c_, -w.d_);
  }
  friend Bicomplex operator*(Bicomplex w, T s) noexcept { return w *= s; }
  friend Bicomplex operator*(T s, Bicomplex w) noexcept { return w *= s; }

  // i1*i2 = j, i1*j = -i2, i2*j = -i1, j*j = 1.
  friend Bicomplex operator*(const Bicomplex& l, const Bicomplex& r) noexcept {
    return raw(l.a_ * r.a_ - l.b_ * r.b_ - l.c_ * r.c_ + l.d_ * r.d_,
               l.a_ * r.b_ + l.b_ * r.a_ - l.c_ * r.d_ - l.d_ * r.c_,
               l.a_ * r.c_ + l.c_ * r.a_ - l.b_ * r.d_ - l.d_ * r.b_,
               l.a_ * r.d_ + l.d_ * r.a_ + l.b_ * r.c_ + l.c_ * r.b_);
  }

  friend bool operator==(const Bicomplex& l, const Bicomplex& r) noexcept {
    return l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_ && l.d_ == r.d_;
  }
  friend bool operator!=(const Bicomplex& l, const Bicomplex& r) noexcept { return !(l == r); }

  friend std::ostream& operator<<(std::ostream& os, const Bicomplex& w) {
    return os << w.a_ << ' ' << w.b_ << ' ' << w.c_ << ' ' << w.d_;
  }

 private:
  static Bicomplex raw(T a, T b, T c, T d) noexcept {
    Bicomplex w;
    w.a_ = a;
    w.b_ = b;
    w.c_ = c;
    w.d_ = d;
    return w;
  }

  T a_{0};
  T b_{0};
  T c_{0};
  T d_{0};
};

using Bicomplexd = Bicomplex<double>;

/// A hyperbolic number a + d*j; the subring of Bicomplex with b = c = 0.
template <typename T>
struct Hyperbolic {
  T a{0};
  T d{0};

  Bicomplex<T> to_bicomplex() const { return Bicomplex<T>(a, T(0), T(0), d); }

  friend Hyperbolic operator+(const Hyperbolic& l, const Hyperbolic& r) {
    return {l.a + r.a, l.d + r.d};
  }
  friend Hyperbolic operator*(const Hyperbolic& l, const Hyperbolic& r) {
    return {l.a * r.a + l.d * r.d, l.a * r.d + l.d * r.a};
  }
};

/// Coordinates (h1, h2) of w = h1*e1 + h2*e2 in the idempotent basis.
/// Products in the ring act componentwise on this form.
template <typename T>
struct IdempotentForm {
  std::complex<T> h1;
  std::complex<T> h2;

  friend IdempotentForm operator*(const IdempotentForm& l, const IdempotentForm& r) {
    return {l.h1 * r.h1, l.h2 * r.h2};
  }
  friend IdempotentForm operator+(const IdempotentForm& l, const IdempotentForm& r) {
    return {l.h1 + r.h1, l.h2 + r.h2};
  }
};

template <typename T = double>
Bicomplex<T> iota1() {
  return Bicomplex<T>(0, 1, 0, 0);
}
template <typename T = double>
Bicomplex<T> iota2() {
  return Bicomplex<T>(0, 0, 1, 0);
}
template <typename T = double>
Bicomplex<T> unit_j() {
  return Bicomplex<T>(0, 0, 0, 1);
}
/// e1 = (1 + j)/2
template <typename T = double>
Bicomplex<T> e1() {
  return Bicomplex<T>(T(0.5), 0, 0, T(0.5));
}
/// e2 = (1 - j)/2
template <typename T = double>
Bicomplex<T> e2() {
  return Bicomplex<T>(T(0.5), 0, 0, T(-0.5));
}

/// Euclidean norm of the four real coefficients.
template <typename T>
T norm(const Bicomplex<T>& w) {
  return std::sqrt(w.a() * w.a() + w.b() * w.b() + w.c() * w.c() + w.d() * w.d());
}

// h1 = z1 - i1*z2, h2 = z1 + i1*z2, with i1*z2 = -d + c*i1.
template <typename T>
IdempotentForm<T> to_idempotent(const Bicomplex<T>& w) {
  return {{w.a() + w.d(), w.b() - w.c()}, {w.a() - w.d(), w.b() + w.c()}};
}

// z1 = (h1 + h2)/2, z2 = i1*(h1 - h2)/2.
template <typename T>
Bicomplex<T> from_idempotent(const IdempotentForm<T>& h) {
  const std::complex<T> sum = h.h1 + h.h2;
  const std::complex<T> diff = h.h1 - h.h2;
  return Bicomplex<T>(sum.real() / T(2), sum.imag() / T(2), -diff.imag() / T(2),
                      diff.real() / T(2));
}

/// Modulus computed from the idempotent coordinates, sqrt((|h1|^2 + |h2|^2)/2).
/// Agrees with `norm(from_idempotent(h))`.
template <typename T>
T norm_idem(const IdempotentForm<T>& h) {
  return std::sqrt((std::norm(h.h1) + std::norm(h.h2)) / T(2));
}

/// Null-cone test. Component k vanishes when |h_k| <= tol * max(1, sqrt(2)*|w|);
/// tol = 0 is an exact comparison against zero.
template <typename T>
SingularityReport classify(const Bicomplex<T>& w, std::type_identity_t<T> tol = T(kDefaultSingularTol)) {
  const auto h = to_idempotent(w);
  const T threshold = tol * std::max(T(1), std::sqrt(T(2)) * norm(w));
  SingularityReport report;
  report.magnitude1 = static_cast<double>(std::abs(h.h1));
  report.magnitude2 = static_cast<double>(std::abs(h.h2));
  if (std::abs(h.h1) <= threshold) report.vanishing_components.push_back(1);
  if (std::abs(h.h2) <= threshold) report.vanishing_components.push_back(2);
  report.is_singular = !report.vanishing_components.empty();
  return report;
}

template <typename T>
Bicomplex<T> inverse(const Bicomplex<T>& w, std::type_identity_t<T> tol = T(kDefaultSingularTol)) {
  auto report = classify(w, tol);
  if (report.is_singular) throw SingularElement(std::move(report));
  const auto h = to_idempotent(w);
  return from_idempotent(IdempotentForm<T>{T(1) / h.h1, T(1) / h.h2});
}

/// max(|h1|, |h2|) / min(|h1|, |h2|); infinite on the null cone.
template <typename T>
T condition(const Bicomplex<T>& w) {
  const auto h = to_idempotent(w);
  const T lo = std::min(std::abs(h.h1), std::abs(h.h2));
  const T hi = std::max(std::abs(h.h1), std::abs(h.h2));
  if (lo == T(0)) return std::numeric_limits<T>::infinity();
  return hi / lo;
}

}  // namespace bicomplex

namespace Eigen {

template <typename T>
struct NumTraits<bicomplex::Bicomplex<T>> : GenericNumTraits<bicomplex::Bicomplex<T>> {
  using Real = T;
  using NonInteger = bicomplex::Bicomplex<T>;
  using Literal = bicomplex::Bicomplex<T>;
  using Nested = bicomplex::Bicomplex<T>;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 4,
    MulCost = 28
  };

  static inline Real epsilon() { return NumTraits<T>::epsilon(); }
  static inline Real dummy_precision() { return NumTraits<T>::dummy_precision(); }
  static inline int digits10() { return NumTraits<T>::digits10(); }
};

}  // namespace Eigen
