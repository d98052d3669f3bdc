#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "bicomplex/operators.hpp"

namespace bicomplex {

/// Seeded sampler for scalars, vectors and matrices.
///
/// Uniform variates are taken directly from the top 53 bits of mt19937_64 and
/// normals by Box-Muller, so a (seed, stream, block) triple yields the same
/// values on every standard library.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Independent substream, e.g. one per check and block of trials.
  static Sampler substream(std::uint64_t seed, std::uint64_t stream, std::uint64_t block) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                      static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
    Sampler s(0);
    s.engine_.seed(seq);
    return s;
  }

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = unit();
    while (u1 == 0.0) u1 = unit();
    const double u2 = unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * std::numbers::pi * u2);
    has_spare_ = true;
    return r * std::cos(2.0 * std::numbers::pi * u2);
  }

  /// Integer in [lo, hi].
  long integer(long lo, long hi) {
    return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Coefficients uniform in [-1, 1].
  Bicomplexd scalar() { return {uniform(-1, 1), uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)}; }

  std::complex<double> complex() { return {uniform(-1, 1), uniform(-1, 1)}; }

  /// Uniform scalar conditioned on both idempotent magnitudes >= min_component.
  Bicomplexd nonsingular_scalar(double min_component = 1e-3) {
    for (;;) {
      const auto w = scalar();
      const auto h = to_idempotent(w);
      if (std::abs(h.h1) >= min_component && std::abs(h.h2) >= min_component) return w;
    }
  }

  TVectord vector(Eigen::Index n) {
    TVectord x(n);
    for (auto& w : x) w = scalar();
    return x;
  }

  /// Uniform on the unit sphere of R^{4n}.
  TVectord unit_vector(Eigen::Index n) {
    TVectord x(n);
    for (;;) {
      for (auto& w : x) w = Bicomplexd(normal(), normal(), normal(), normal());
      const double r = vec_norm(x);
      if (r > 0) return scalar_mul(Bicomplexd(1.0 / r), x);
    }
  }

  TMatrixd matrix(Eigen::Index m, Eigen::Index n) {
    TMatrixd a(m, n);
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = 0; i < m; ++i) a(i, j) = scalar();
    return a;
  }

  /// Square matrix whose idempotent components both have condition number
  /// at most max_condition.
  TMatrixd well_conditioned_matrix(Eigen::Index n, double max_condition = 1e3) {
    for (;;) {
      auto a = matrix(n, n);
      const auto [sv1, sv2] = component_singular_values(a);
      const double lo = std::min(sv1[n - 1], sv2[n - 1]);
      const double hi = std::max(sv1[0], sv2[0]);
      if (lo > 0 && hi / lo <= max_condition) return a;
    }
  }

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace bicomplex
