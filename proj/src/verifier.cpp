#include "bicomplex/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "bicomplex/functional.hpp"
#include "bicomplex/random.hpp"

namespace bicomplex::verify {

namespace {

constexpr double kRoot2 = std::numbers::sqrt2;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr long kBlock = 1024;

using SampleFn = Witness (*)(Sampler&, const CheckConfig&, long);
using MeasureFn = double (*)(const Witness&, const CheckConfig&);
using BoundFn = double (*)(const CheckConfig&);

struct Check {
  const char* id;
  long trials;
  BoundFn bound;
  SampleFn sample;
  MeasureFn measure;
};

std::uint64_t stream_id(std::string_view id) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : id) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Eigen::Index draw_dim(Sampler& s, const CheckConfig& cfg) { return s.integer(cfg.min_dim, cfg.max_dim); }

double coeff_diff(const Bicomplexd& x, const Bicomplexd& y) {
  return std::max({std::abs(x.a() - y.a()), std::abs(x.b() - y.b()), std::abs(x.c() - y.c()), std::abs(x.d() - y.d())});
}

double coeff_diff(const TVectord& x, const TVectord& y) {
  double worst = 0;
  for (Eigen::Index k = 0; k < x.size(); ++k) worst = std::max(worst, coeff_diff(x[k], y[k]));
  return worst;
}

double use_tol(const CheckConfig& cfg) { return cfg.tol; }

// --- ring-axioms --------------------------------------------------------------

Witness sample_ring(Sampler& s, const CheckConfig&, long) { return {{s.scalar(), s.scalar(), s.scalar()}, {}, {}, {}}; }

double measure_ring(const Witness& w, const CheckConfig&) {
  const auto e1v = e1<double>();
  const auto e2v = e2<double>();
  if (e1v * e1v != e1v || e2v * e2v != e2v || e1v * e2v != Bicomplexd() || e1v + e2v != Bicomplexd(1)) return kInf;
  const auto& x = w.scalars[0];
  const auto& y = w.scalars[1];
  const auto& z = w.scalars[2];
  const auto hx = to_idempotent(x);
  const auto hy = to_idempotent(y);
  const auto hxy = to_idempotent(x * y);
  const auto hprod = hx * hy;
  return std::max({coeff_diff((x * y) * z, x * (y * z)), coeff_diff(x * y, y * x),
                   coeff_diff(x * (y + z), x * y + x * z), std::abs(hxy.h1 - hprod.h1),
                   std::abs(hxy.h2 - hprod.h2)});
}

// --- submult ------------------------------------------------------------------

Witness sample_submult(Sampler& s, const CheckConfig&, long trial) {
  if (trial == 0) return {{e1<double>(), e1<double>()}, {}, {}, {}};
  if (trial == 1) return {{e2<double>(), e2<double>()}, {}, {}, {}};
  return {{s.scalar(), s.scalar()}, {}, {}, {}};
}

double measure_submult(const Witness& w, const CheckConfig&) {
  const double denom = norm(w.scalars[0]) * norm(w.scalars[1]);
  return denom == 0.0 ? 0.0 : norm(w.scalars[0] * w.scalars[1]) / denom;
}

// --- norm-identity ------------------------------------------------------------

Witness sample_scalar(Sampler& s, const CheckConfig&, long) { return {{s.scalar()}, {}, {}, {}}; }

double measure_norm_identity(const Witness& w, const CheckConfig&) {
  const auto& x = w.scalars[0];
  return std::abs(norm(x) - norm_idem(to_idempotent(x))) / (1.0 + norm(x));
}

// --- scalar-homogeneity -------------------------------------------------------

Witness sample_homogeneity(Sampler& s, const CheckConfig& cfg, long trial) {
  const auto n = draw_dim(s, cfg);
  const Bicomplexd alpha(s.uniform(-1, 1), s.uniform(-1, 1), 0, 0);
  if (trial == 0) return {{alpha, e1<double>()}, {scalar_mul(e1<double>(), s.vector(n))}, {}, {}};
  return {{alpha, s.scalar()}, {s.vector(n)}, {}, {}};
}

// |alpha x| = |alpha| |x| for alpha in C(i1); |beta x| <= sqrt2 |beta| |x| in general.
double measure_homogeneity(const Witness& w, const CheckConfig&) {
  const auto& alpha = w.scalars[0];
  const auto& beta = w.scalars[1];
  const auto& x = w.vectors[0];
  const double nx = vec_norm(x);
  const double dev = std::abs(vec_norm(scalar_mul(alpha, x)) - norm(alpha) * nx) / (1.0 + norm(alpha) * nx);
  const double excess = vec_norm(scalar_mul(beta, x)) - kRoot2 * norm(beta) * nx;
  return std::max(dev, excess);
}

// --- translation-invariance ---------------------------------------------------

Witness sample_three_vectors(Sampler& s, const CheckConfig& cfg, long) {
  const auto n = draw_dim(s, cfg);
  return {{}, {s.vector(n), s.vector(n), s.vector(n)}, {}, {}};
}

double rho(const TVectord& x, const TVectord& y) { return vec_norm(vec_sub(x, y)); }

double measure_translation(const Witness& w, const CheckConfig&) {
  const auto& x = w.vectors[0];
  const auto& y = w.vectors[1];
  const auto& a = w.vectors[2];
  const TVectord zero = TVectord::Zero(x.size());
  const TVectord xa = x + a;
  const TVectord ya = y + a;
  const double shifted = std::abs(rho(xa, ya) - rho(x, y));
  const double definitional = std::abs(rho(x, y) - rho(TVectord(x - y), zero));
  const double fnorm = std::abs(FMetricPoint<double>(x).fnorm - rho(x, zero));
  const double symmetry = std::abs(rho(x, y) - rho(y, x));
  const double triangle = rho(x, y) - (rho(x, a) + rho(a, y));
  const double product = std::abs(product_metric<double>({xa, ya}, {TVectord(a + a), xa}) -
                                  product_metric<double>({x, y}, {a, x}));
  return std::max({shifted, definitional, fnorm, symmetry, triangle, product});
}

// --- homeomorphism-Ta ---------------------------------------------------------

double measure_translation_map(const Witness& w, const CheckConfig&) {
  const auto& x = w.vectors[0];
  const auto& y = w.vectors[1];
  const auto& a = w.vectors[2];
  const TVectord tx = a + x;
  const TVectord ty = a + y;
  const double isometry = std::abs(rho(tx, ty) - rho(x, y));
  const TVectord back = tx - a;
  const double inverse_dev = vec_norm(vec_sub(back, x)) / (1.0 + vec_norm(a) + vec_norm(x));
  return std::max(isometry, inverse_dev);
}

// --- homeomorphism-Mlambda ----------------------------------------------------

Witness sample_multiplier(Sampler& s, const CheckConfig& cfg, long) {
  const auto n = draw_dim(s, cfg);
  const auto lambda = s.nonsingular_scalar(1e-3);
  const auto vanishing = s.integer(1, 2);
  const auto h = s.complex();
  const auto mu = vanishing == 1 ? from_idempotent(IdempotentForm<double>{0.0, h})
                                 : from_idempotent(IdempotentForm<double>{h, 0.0});
  return {{lambda, mu}, {s.vector(n)}, {}, {static_cast<double>(vanishing)}};
}

// M_lambda is inverted by M_{lambda^-1}; a null-cone mu kills one component
// of every product, so M_mu is not onto.
double measure_multiplier(const Witness& w, const CheckConfig&) {
  const auto& lambda = w.scalars[0];
  const auto& mu = w.scalars[1];
  const auto& x = w.vectors[0];
  const int vanishing = static_cast<int>(w.reals[0]);
  const double nx = vec_norm(x);
  const TVectord back = scalar_mul(inverse(lambda), scalar_mul(lambda, x));
  const double inverse_dev = vec_norm(vec_sub(back, x)) / (condition(lambda) * (1.0 + nx));
  const double continuity = vec_norm(scalar_mul(lambda, x)) - kRoot2 * norm(lambda) * nx;
  const auto parts = split(scalar_mul(mu, x));
  const double collapse = (vanishing == 1 ? parts.v1 : parts.v2).norm() / (1.0 + norm(mu) * nx);
  bool rejected = false;
  try {
    (void)inverse(mu);
  } catch (const SingularElement&) {
    rejected = true;
  }
  if (!rejected) return kInf;
  return std::max({inverse_dev, continuity, collapse});
}

// --- ubp ----------------------------------------------------------------------

constexpr int kFamilySize = 4;
constexpr int kProbeCount = 4;

Witness sample_ubp(Sampler& s, const CheckConfig& cfg, long) {
  const auto m = draw_dim(s, cfg);
  const auto n = draw_dim(s, cfg);
  Witness w;
  for (int a = 0; a < kFamilySize; ++a) w.matrices.push_back(TMatrixd(s.matrix(m, n) * Bicomplexd(s.uniform(0, 2))));
  for (int p = 0; p < kProbeCount; ++p) w.vectors.push_back(scalar_mul(Bicomplexd(std::ldexp(1.0, -4 * p)), s.vector(n)));
  return w;
}

// A pointwise bounded family satisfies max_a |T_a x| <= sqrt2 * sup_a |T_a| * |x|,
// so T_a x -> 0 uniformly in a as x -> 0.
double measure_ubp(const Witness& w, const CheckConfig&) {
  double family_bound = 0;
  for (const auto& t : w.matrices) family_bound = std::max(family_bound, op_norms(t).sup_norm);
  double worst = -kInf;
  for (const auto& x : w.vectors) {
    double image = 0;
    for (const auto& t : w.matrices) image = std::max(image, vec_norm(apply(t, x)));
    worst = std::max(worst, image - kRoot2 * family_bound * vec_norm(x));
  }
  return worst;
}

// --- continuity-bounded -------------------------------------------------------

constexpr int kBallSamples = 8;

Witness sample_continuity(Sampler& s, const CheckConfig& cfg, long) {
  const auto m = draw_dim(s, cfg);
  const auto n = draw_dim(s, cfg);
  Witness w;
  w.matrices.push_back(s.matrix(m, n));
  for (int p = 0; p < kBallSamples; ++p) w.vectors.push_back(scalar_mul(Bicomplexd(s.unit()), s.unit_vector(n)));
  return w;
}

// Unit vector attaining sup |Tx|: the top right singular vector of the
// dominant idempotent component, scaled by sqrt2, in that component only.
TVectord norm_attaining_vector(const TMatrixd& t) {
  const auto p = split_op(t);
  Eigen::JacobiSVD<CMatrixd> svd1(p.M1, Eigen::ComputeThinV);
  Eigen::JacobiSVD<CMatrixd> svd2(p.M2, Eigen::ComputeThinV);
  const CVectord zero = CVectord::Zero(t.cols());
  if (svd1.singularValues()[0] >= svd2.singularValues()[0]) {
    return merge(IdempotentVectorPair<double>{CVectord(kRoot2 * svd1.matrixV().col(0)), zero});
  }
  return merge(IdempotentVectorPair<double>{zero, CVectord(kRoot2 * svd2.matrixV().col(0))});
}

// The image of the unit ball is bounded by sqrt2 * M and that bound is reached.
double measure_continuity(const Witness& w, const CheckConfig&) {
  const auto& t = w.matrices[0];
  const double bound = kRoot2 * bound_constant(t);
  const TVectord top = norm_attaining_vector(t);
  double worst = std::max(std::abs(vec_norm(apply(t, top)) - bound), std::abs(vec_norm(top) - 1.0));
  for (const auto& x : w.vectors) worst = std::max(worst, vec_norm(apply(t, x)) - bound);
  return worst;
}

// --- limit-operator -----------------------------------------------------------

constexpr int kLimitSteps = 200;

Witness sample_pair_and_vector(Sampler& s, const CheckConfig& cfg, long) {
  const auto m = draw_dim(s, cfg);
  const auto n = draw_dim(s, cfg);
  return {{}, {s.vector(n)}, {s.matrix(m, n), s.matrix(m, n)}, {}};
}

// T_n = T + E/n converges pointwise to T; |T| <= sqrt2 liminf |T_n|, and
// |Tx| <= sqrt2 |T| |x| then gives |Tx| <= 2 liminf |T_n| |x|.
double measure_limit(const Witness& w, const CheckConfig&) {
  const auto& t = w.matrices[0];
  const auto& e = w.matrices[1];
  const auto& x = w.vectors[0];
  double liminf = kInf;
  for (int n = kLimitSteps / 2; n <= kLimitSteps; ++n) {
    const TMatrixd tn = t + e * Bicomplexd(1.0 / n);
    liminf = std::min(liminf, op_norms(tn).sup_norm);
  }
  return std::max(op_norms(t).sup_norm - kRoot2 * liminf, vec_norm(apply(t, x)) - 2.0 * liminf * vec_norm(x));
}

// --- bxy-complete -------------------------------------------------------------

constexpr int kCauchySteps = 24;

// T_n = T + 4^-n E is Cauchy. Checks |T - T_n| <= sqrt2 * eps_n with
// eps_n = 2 max_{m > n} |T_m - T_n|, and that |T - T_N| is negligible.
double measure_complete(const Witness& w, const CheckConfig&) {
  const auto& t = w.matrices[0];
  const auto& e = w.matrices[1];
  std::vector<TMatrixd> seq;
  for (int n = 0; n <= kCauchySteps; ++n) seq.push_back(t + e * Bicomplexd(std::ldexp(1.0, -2 * n)));
  double worst = op_norms(TMatrixd(t - seq.back())).idem_norm;
  for (int n = 0; n < kCauchySteps; ++n) {
    double eps = 0;
    for (int m = n + 1; m <= kCauchySteps; ++m) eps = std::max(eps, op_norms(TMatrixd(seq[m] - seq[n])).sup_norm);
    eps *= 2;
    worst = std::max(worst, op_norms(TMatrixd(t - seq[n])).sup_norm - kRoot2 * eps);
  }
  return worst;
}

// --- open-mapping -------------------------------------------------------------

Witness sample_bijective(Sampler& s, const CheckConfig& cfg, long) {
  const auto n = draw_dim(s, cfg);
  Witness w;
  w.matrices.push_back(s.well_conditioned_matrix(n));
  for (int p = 0; p < kBallSamples; ++p) w.vectors.push_back(s.unit_vector(n));
  return w;
}

// With r the smallest singular value over both components, every y with
// |y| <= r has a preimage of norm <= 1: the unit ball maps onto a set
// containing the r-ball.
double measure_open(const Witness& w, const CheckConfig&) {
  const auto& t = w.matrices[0];
  const auto [sv1, sv2] = component_singular_values(t);
  const double r = std::min(sv1[sv1.size() - 1], sv2[sv2.size() - 1]);
  double worst = -kInf;
  for (const auto& y : w.vectors) {
    const TVectord target = scalar_mul(Bicomplexd(r), y);
    const TVectord x = solve(t, target);
    worst = std::max({worst, vec_norm(x) - 1.0, vec_norm(vec_sub(apply(t, x), target)) / r});
  }
  return worst;
}

// --- closed-graph -------------------------------------------------------------

constexpr int kGraphSteps = 40;

Witness sample_graph(Sampler& s, const CheckConfig& cfg, long) {
  const auto m = draw_dim(s, cfg);
  const auto n = draw_dim(s, cfg);
  return {{}, {s.vector(n), s.vector(n)}, {s.matrix(m, n)}, {}};
}

// x_k = x + 2^-k d -> x and T x_k -> y; the limit point (x, y) is on the graph.
double measure_graph(const Witness& w, const CheckConfig&) {
  const auto& t = w.matrices[0];
  const auto& x = w.vectors[0];
  const auto& d = w.vectors[1];
  const TVectord xk = x + scalar_mul(Bicomplexd(std::ldexp(1.0, -kGraphSteps)), d);
  const TVectord y = apply(t, xk);
  return product_metric<double>({xk, y}, {x, apply(t, x)});
}

// --- two-metric ---------------------------------------------------------------

// rho2(x, y) = |S(x - y)| for bijective S satisfies c rho1 <= rho2 <= C rho1,
// so both metrics have the same convergent sequences.
double measure_two_metric(const Witness& w, const CheckConfig&) {
  const auto& s = w.matrices[0];
  const auto [sv1, sv2] = component_singular_values(s);
  const double lo = std::min(sv1[sv1.size() - 1], sv2[sv2.size() - 1]);
  const double hi = std::max(sv1[0], sv2[0]);
  double worst = -kInf;
  for (const auto& x : w.vectors) {
    const double rho1 = vec_norm(x);
    const double rho2 = vec_norm(apply(s, x));
    worst = std::max({worst, (lo * rho1 - rho2) / rho1, (rho2 - hi * rho1) / rho1});
  }
  return worst;
}

// --- total-family -------------------------------------------------------------

Witness sample_family(Sampler& s, const CheckConfig& cfg, long trial) {
  const auto n = draw_dim(s, cfg);
  if (trial == 0) return {{}, {s.vector(n)}, {TMatrixd(TMatrixd::Identity(n, n))}, {}};
  const auto k = n + s.integer(0, 2);
  return {{}, {s.vector(n)}, {s.matrix(k, n)}, {}};
}

// Rows of F are functionals; the family is total when F x = 0 forces x = 0,
// i.e. both components have a positive smallest singular value. Reports the
// reciprocal margin 1/sigma_min.
double measure_family(const Witness& w, const CheckConfig& cfg) {
  const auto& f = w.matrices[0];
  const auto& x = w.vectors[0];
  const auto [sv1, sv2] = component_singular_values(f);
  const double sigma = std::min(sv1[sv1.size() - 1], sv2[sv2.size() - 1]);
  if (!(sigma > 0.0)) return kInf;
  // |F x| >= sigma |x| on the sample.
  if (sigma * vec_norm(x) - vec_norm(apply(f, x)) > cfg.tol * (1.0 + vec_norm(x))) return kInf;
  return 1.0 / sigma;
}

double reciprocal_tol(const CheckConfig& cfg) { return 1.0 / cfg.tol; }

// --- hahn-banach --------------------------------------------------------------

constexpr int kSubmodulePoints = 4;

Witness sample_hahn_banach(Sampler& s, const CheckConfig& cfg, long) {
  const auto n = draw_dim(s, cfg);
  const auto m = s.integer(0, n + 1);
  Witness w;
  for (long i = 0; i < m; ++i) {
    const auto kind = s.integer(0, 5);
    TVectord g = s.vector(n);
    if (kind == 1) g = scalar_mul(e1<double>(), g);
    if (kind == 2) g = scalar_mul(e2<double>(), g);
    if (kind == 3 && i >= 2) g = w.vectors[i - 1] + scalar_mul(s.scalar(), w.vectors[i - 2]);
    w.vectors.push_back(std::move(g));
  }
  w.vectors.push_back(s.vector(n));  // y* coefficients
  w.vectors.push_back(s.vector(n));  // probe for lift linearity
  for (long i = 0; i < kSubmodulePoints * m; ++i) w.scalars.push_back(s.scalar());
  w.scalars.push_back(s.scalar());
  w.reals.push_back(static_cast<double>(m));
  return w;
}

double measure_hahn_banach(const Witness& w, const CheckConfig&) {
  const auto m = static_cast<std::size_t>(w.reals[0]);
  const auto n = w.vectors[m].size();
  std::vector<TVectord> gens(w.vectors.begin(), w.vectors.begin() + static_cast<long>(m));
  const TFunctionald ystar{w.vectors[m]};
  const auto& probe = w.vectors[m + 1];
  const auto& unit = w.scalars.back();
  const Submodule<double> y(n, gens);

  const auto report = hahn_banach_extend(ystar, y);
  const auto& xstar = report.extension;

  double worst = report.restriction_error;
  for (int p = 0; p < kSubmodulePoints; ++p) {
    TVectord point = TVectord::Zero(n);
    for (std::size_t i = 0; i < m; ++i) point += scalar_mul(w.scalars[p * m + i], gens[i]);
    const auto expected = eval(ystar, point);
    worst = std::max(worst, norm(eval(xstar, point) - expected) / (1.0 + norm(expected)));
  }
  worst = std::max({worst, std::abs(report.x_component_norm1 - report.y_component_norm1),
                    std::abs(report.x_component_norm2 - report.y_component_norm2),
                    std::abs(report.x_norms.idem_norm - report.y_norms.idem_norm)});

  // Real route: extend the real part of y* and lift it back.
  const auto f1 = real_parts(ystar).f1;
  const auto real_ext = extend_real(f1, y);
  worst = std::max(worst, std::abs(real_ext.coeffs.norm() - real_dual_norm_on(f1, y)));
  worst = std::max(worst, coeff_diff(lift_real(real_ext).coeffs, xstar.coeffs));

  // Lift of the real part of x* recovers x* and is T-linear.
  const auto parts = real_parts(xstar);
  const auto lifted = lift_real(parts.f1);
  worst = std::max(worst, coeff_diff(lifted.coeffs, xstar.coeffs));
  worst = std::max(worst, norm(eval(lifted, scalar_mul(unit, probe)) - unit * eval(lifted, probe)));
  worst = std::max({worst, std::abs(parts.f2(probe) + parts.f1(scalar_mul(iota1<double>(), probe))),
                    std::abs(parts.f3(probe) + parts.f1(scalar_mul(iota2<double>(), probe))),
                    std::abs(parts.f4(probe) - parts.f1(scalar_mul(unit_j<double>(), probe)))});
  return worst;
}

// --- norm-sandwich ------------------------------------------------------------

Witness sample_sandwich(Sampler& s, const CheckConfig& cfg, long trial) {
  const auto m = draw_dim(s, cfg);
  const auto n = draw_dim(s, cfg);
  if (trial == 0) return {{}, {}, {TMatrixd(TMatrixd::Identity(n, n))}, {}};
  if (trial == 1) return {{}, {}, {scalar_matrix(e1<double>(), n)}, {}};
  return {{}, {}, {s.matrix(m, n)}, {}};
}

double measure_sandwich(const Witness& w, const CheckConfig&) {
  const auto r = op_norms(w.matrices[0]);
  return std::max(r.sup_norm - r.idem_norm, r.idem_norm - kRoot2 * r.sup_norm);
}

// --- compose-norm -------------------------------------------------------------

Witness sample_compose(Sampler& s, const CheckConfig& cfg, long) {
  const auto m = draw_dim(s, cfg);
  const auto k = draw_dim(s, cfg);
  const auto n = draw_dim(s, cfg);
  return {{}, {}, {s.matrix(m, k), s.matrix(k, n)}, {}};
}

double measure_compose(const Witness& w, const CheckConfig&) {
  const auto a = op_norms(w.matrices[0]);
  const auto b = op_norms(w.matrices[1]);
  const auto ab = op_norms(compose(w.matrices[0], w.matrices[1]));
  return std::max(ab.sup_norm - kRoot2 * a.sup_norm * b.sup_norm, ab.idem_norm - kRoot2 * a.idem_norm * b.idem_norm);
}

// -----------------------------------------------------------------------------

const std::vector<Check>& registry() {
  static const std::vector<Check> checks = {
      {"ring-axioms", 100000, [](const CheckConfig&) { return 1e-13; }, sample_ring, measure_ring},
      {"submult", 1000000, [](const CheckConfig&) { return kRoot2 + 1e-12; }, sample_submult, measure_submult},
      {"norm-identity", 1000000, [](const CheckConfig&) { return 1e-12; }, sample_scalar, measure_norm_identity},
      {"scalar-homogeneity", 10000, use_tol, sample_homogeneity, measure_homogeneity},
      {"translation-invariance", 10000, use_tol, sample_three_vectors, measure_translation},
      {"homeomorphism-Ta", 10000, use_tol, sample_three_vectors, measure_translation_map},
      {"homeomorphism-Mlambda", 10000, use_tol, sample_multiplier, measure_multiplier},
      {"ubp", 1000, use_tol, sample_ubp, measure_ubp},
      {"continuity-bounded", 1000, use_tol, sample_continuity, measure_continuity},
      {"limit-operator", 100, use_tol, sample_pair_and_vector, measure_limit},
      {"bxy-complete", 100, use_tol, sample_pair_and_vector, measure_complete},
      {"open-mapping", 1000, use_tol, sample_bijective, measure_open},
      {"closed-graph", 1000, use_tol, sample_graph, measure_graph},
      {"two-metric", 1000, use_tol, sample_bijective, measure_two_metric},
      {"total-family", 1000, reciprocal_tol, sample_family, measure_family},
      {"hahn-banach", 200, use_tol, sample_hahn_banach, measure_hahn_banach},
      {"norm-sandwich", 1000, [](const CheckConfig&) { return 1e-10; }, sample_sandwich, measure_sandwich},
      {"compose-norm", 1000, [](const CheckConfig&) { return 1e-10; }, sample_compose, measure_compose},
  };
  return checks;
}

const Check& find_check(const std::string& id) {
  for (const auto& c : registry())
    if (id == c.id) return c;
  throw UnknownCheckId(id);
}

void validate(const CheckConfig& cfg) {
  if (cfg.trials < 0) throw std::invalid_argument("trials must be >= 1 (or 0 for the default)");
  if (!(cfg.tol > 0.0)) throw std::invalid_argument("tol must be > 0");
  if (cfg.min_dim < 1 || cfg.max_dim < cfg.min_dim) throw std::invalid_argument("dimension range must satisfy 1 <= min <= max");
}

}  // namespace

io::Json to_json(const Witness& w) {
  io::Json scalars = io::Json::array();
  for (const auto& s : w.scalars) scalars.push_back(io::to_json(s));
  io::Json vectors = io::Json::array();
  for (const auto& v : w.vectors) vectors.push_back(io::to_json(v));
  io::Json matrices = io::Json::array();
  for (const auto& m : w.matrices) matrices.push_back(io::to_json(m));
  return {{"scalars", std::move(scalars)}, {"vectors", std::move(vectors)}, {"matrices", std::move(matrices)}, {"reals", w.reals}};
}

Witness witness_from_json(const io::Json& j) {
  Witness w;
  for (const auto& s : j.at("scalars")) w.scalars.push_back(io::scalar_from_json(s));
  for (const auto& v : j.at("vectors")) w.vectors.push_back(io::vector_from_json(v));
  for (const auto& m : j.at("matrices")) w.matrices.push_back(io::matrix_from_json(m));
  for (const auto& r : j.at("reals")) w.reals.push_back(r.get<double>());
  return w;
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& c : registry()) out.emplace_back(c.id);
    return out;
  }();
  return ids;
}

long default_trials(const std::string& check_id) { return find_check(check_id).trials; }

CheckReport run_check(const CheckConfig& cfg) {
  const auto& check = find_check(cfg.check_id);
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  const long trials = cfg.trials > 0 ? cfg.trials : check.trials;
  const auto stream = stream_id(check.id);

  double worst = -kInf;
  Witness worst_witness;
  for (long block = 0; block * kBlock < trials; ++block) {
    auto sampler = Sampler::substream(cfg.seed, stream, static_cast<std::uint64_t>(block));
    const long end = std::min(trials, (block + 1) * kBlock);
    for (long t = block * kBlock; t < end; ++t) {
      Witness w = check.sample(sampler, cfg, t);
      const double v = check.measure(w, cfg);
      if (t == 0 || v > worst || (std::isnan(v) && !std::isnan(worst))) {
        worst = v;
        worst_witness = std::move(w);
      }
    }
  }

  CheckReport report;
  report.check_id = check.id;
  report.worst_value = worst;
  report.bound = check.bound(cfg);
  report.pass = worst <= report.bound;
  report.worst_witness = to_json(worst_witness);
  report.trials_run = trials;
  report.seed = cfg.seed;
  report.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<CheckReport> run_all(std::uint64_t seed, long trials, double tol) {
  std::vector<CheckReport> reports;
  for (const auto& id : check_ids()) {
    CheckConfig cfg;
    cfg.check_id = id;
    cfg.seed = seed;
    cfg.trials = trials;
    cfg.tol = tol;
    reports.push_back(run_check(cfg));
  }
  return reports;
}

double reevaluate(const CheckConfig& cfg, const io::Json& witness) {
  const auto& check = find_check(cfg.check_id);
  validate(cfg);
  return check.measure(witness_from_json(witness), cfg);
}

io::Json to_json(const CheckReport& report, bool with_elapsed) {
  io::Json j = {{"check_id", report.check_id},
                {"pass", report.pass},
                {"worst_value", report.worst_value},
                {"bound", report.bound},
                {"trials_run", report.trials_run},
                {"seed", report.seed},
                {"worst_witness", report.worst_witness}};
  if (with_elapsed) j["elapsed"] = report.elapsed;
  return j;
}

}  // namespace bicomplex::verify
