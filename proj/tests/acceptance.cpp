// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "bicomplex/functional.hpp"
#include "bicomplex/random.hpp"
#include "bicomplex/verifier.hpp"
#include "oracles.hpp"

using namespace bicomplex;

namespace {

const double kRoot2 = std::sqrt(2.0);

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Largest |R x| over sampled unit vectors: a batch of random directions, then
// rounds of random perturbations around the best vector so far.
double sphere_search(const oracle::RMat& r, Sampler& s, int rounds = 100, int batch = 1000) {
  const auto d = r.cols();
  oracle::RMat x(d, batch);
  oracle::RVec best = oracle::RVec::Zero(d);
  double best_val = 0;
  double sigma = 1.0;
  for (int round = 0; round < rounds; ++round) {
    for (Eigen::Index j = 0; j < batch; ++j) {
      for (Eigen::Index i = 0; i < d; ++i) x(i, j) = (round == 0 ? 0.0 : best[i]) + sigma * s.normal();
      x.col(j).normalize();
    }
    const Eigen::VectorXd vals = (r * x).colwise().norm();
    Eigen::Index arg;
    const double top = vals.maxCoeff(&arg);
    if (top > best_val) {
      best_val = top;
      best = x.col(arg);
    } else {
      sigma *= 0.6;
    }
    if (round == 0) sigma = 0.3;
  }
  return best_val;
}

Outcome idempotent_identities() {
  const auto e1v = e1<double>();
  const auto e2v = e2<double>();
  const bool ok = e1v * e1v == e1v && e2v * e2v == e2v && e1v * e2v == Bicomplexd() && e1v + e2v == Bicomplexd(1) &&
                  oracle::product(e1v, e2v) == Bicomplexd() && oracle::product(e1v, e1v) == e1v &&
                  from_idempotent(IdempotentForm<double>{1.0, 0.0}) == e1v &&
                  from_idempotent(IdempotentForm<double>{0.0, 1.0}) == e2v;
  return {ok, "e1^2 = e1, e2^2 = e2, e1 e2 = 0, e1 + e2 = 1 compared exactly"};
}

Outcome norm_identity() {
  const auto start = std::chrono::steady_clock::now();
  Sampler s(101);
  double worst = 0;
  for (int t = 0; t < 1000000; ++t) {
    const auto w = s.scalar();
    const double n = norm(w);
    worst = std::max(worst, std::abs(n - norm_idem(to_idempotent(w))) / (1 + n));
  }
  const double elapsed = seconds_since(start);
  return {worst <= 1e-12 && elapsed <= 5.0, "max rel dev " + fmt(worst) + " over 1e6 scalars in " + fmt(elapsed) + " s"};
}

Outcome submultiplicativity() {
  Sampler s(102);
  double worst = 0;
  for (int t = 0; t < 1000000; ++t) {
    const auto x = s.scalar();
    const auto y = s.scalar();
    worst = std::max(worst, oracle::norm(oracle::product(x, y)) / (norm(x) * norm(y)));
  }
  const auto e1v = e1<double>();
  const double at_e1 = norm(e1v * e1v) / (norm(e1v) * norm(e1v));
  const bool ok = worst <= kRoot2 + 1e-12 && std::abs(at_e1 - kRoot2) <= 1e-14;
  return {ok, "max ratio " + fmt(worst) + ", ratio at e1 differs from sqrt2 by " + fmt(std::abs(at_e1 - kRoot2))};
}

Outcome inverse_correctness() {
  Sampler s(103);
  double worst = 0;
  for (int t = 0; t < 100000; ++t) {
    const auto w = s.nonsingular_scalar(1e-3);
    worst = std::max(worst, norm(oracle::product(w, inverse(w)) - Bicomplexd(1)) / condition(w));
  }
  return {worst <= 1e-10, "max |w w^-1 - 1| / kappa = " + fmt(worst) + " over 1e5 scalars"};
}

Outcome operator_norm_sandwich() {
  Sampler s(104);
  double sandwich = -INFINITY;
  for (int t = 0; t < 1000; ++t) {
    const auto m = s.matrix(s.integer(1, 8), s.integer(1, 8));
    const auto r = op_norms(m);
    sandwich = std::max({sandwich, r.sup_norm - r.idem_norm, r.idem_norm - (kRoot2 * r.sup_norm + 1e-10)});
  }
  // Sphere oracle on a subset, always including the largest shape.
  double lo = INFINITY, hi = -INFINITY;
  for (int t = 0; t < 40; ++t) {
    const auto rows = t < 10 ? 8 : s.integer(1, 8);
    const auto cols = t < 10 ? 8 : s.integer(1, 8);
    const auto m = s.matrix(rows, cols);
    const double sup = op_norms(m).sup_norm;
    const double est = sphere_search(oracle::real_matrix(m), s) / kRoot2;
    lo = std::min(lo, est / sup);
    hi = std::max(hi, est - sup);
  }
  const bool ok = sandwich <= 0 && lo >= 0.98 && hi <= 1e-9;
  return {ok, "sandwich violation " + fmt(std::max(sandwich, 0.0)) + "; sphere estimate / sup_norm >= " + fmt(lo) +
                  ", excess " + fmt(std::max(hi, 0.0)) + " (40 matrices, 1e5 unit vectors each)"};
}

Outcome bound_constant_contract() {
  Sampler s(105);
  double excess = -INFINITY;
  for (int t = 0; t < 10000; ++t) {
    const auto m = s.matrix(s.integer(1, 8), s.integer(1, 8));
    const auto x = s.vector(m.cols());
    excess = std::max(excess, vec_norm(oracle::apply(m, x)) - (kRoot2 * bound_constant(m) * vec_norm(x) + 1e-10));
  }
  double tight = INFINITY;
  for (int t = 0; t < 20; ++t) {
    const auto m = s.matrix(s.integer(1, 8), s.integer(1, 8));
    tight = std::min(tight, sphere_search(oracle::real_matrix(m), s) / (kRoot2 * bound_constant(m)));
  }
  return {excess <= 0 && tight >= 0.98,
          "max excess " + fmt(excess) + " over 1e4 pairs; maximized ratio reaches " + fmt(tight) + " of the bound"};
}

Outcome composition() {
  Sampler s(106);
  double worst = -INFINITY;
  for (int t = 0; t < 1000; ++t) {
    const auto k = s.integer(1, 8);
    const auto a = s.matrix(s.integer(1, 8), k);
    const auto b = s.matrix(k, s.integer(1, 8));
    const auto na = op_norms(a), nb = op_norms(b), nab = op_norms(compose(a, b));
    worst = std::max({worst, nab.sup_norm - kRoot2 * na.sup_norm * nb.sup_norm,
                      nab.idem_norm - kRoot2 * na.idem_norm * nb.idem_norm});
  }
  return {worst <= 1e-10, "max |AB| - sqrt2 |A||B| = " + fmt(worst) + " over 1e3 compositions"};
}

Outcome linear_solve() {
  Sampler s(107);
  double worst = 0;
  for (int t = 0; t < 200; ++t) {
    const auto n = s.integer(1, 16);
    const auto a = s.well_conditioned_matrix(n);
    const auto b = s.vector(n);
    const auto x = solve(a, b);
    worst = std::max(worst, vec_norm(vec_sub(oracle::apply(a, x), b)) / vec_norm(b));
  }
  bool raised = false;
  try {
    (void)invert(multiplier(e1<double>()));
  } catch (const SingularOperator&) {
    raised = true;
  }
  return {worst <= 1e-9 && raised, "max relative residual " + fmt(worst) + "; invert(M_e1) " +
                                       (raised ? "raised SingularOperator" : "did not raise")};
}

Outcome hahn_banach() {
  Sampler s(108);
  double restriction = 0, component = 0, linearity = 0, round_trip = 0;
  for (int t = 0; t < 200; ++t) {
    const auto n = s.integer(1, 8);
    std::vector<TVectord> gens;
    for (long i = 0, m = s.integer(1, n + 1); i < m; ++i) {
      TVectord g = s.vector(n);
      if (i % 4 == 1) g = scalar_mul(e1<double>(), g);
      if (i % 4 == 2) g = scalar_mul(e2<double>(), g);
      if (i % 4 == 3) g = gens[0] + scalar_mul(s.scalar(), gens[i - 1]);
      gens.push_back(g);
    }
    const Submodule<double> y(n, gens);
    const TFunctionald ystar{s.vector(n)};
    const auto rep = hahn_banach_extend(ystar, y);
    for (int p = 0; p < 100; ++p) {
      TVectord point = TVectord::Zero(n);
      for (const auto& g : gens) {
        const auto w = s.scalar();
        for (Eigen::Index k = 0; k < n; ++k) point[k] = point[k] + oracle::product(w, g[k]);
      }
      Bicomplexd lhs, rhs;
      for (Eigen::Index k = 0; k < n; ++k) {
        lhs = lhs + oracle::product(rep.extension.coeffs[k], point[k]);
        rhs = rhs + oracle::product(ystar.coeffs[k], point[k]);
      }
      restriction = std::max(restriction, norm(lhs - rhs) / (1 + vec_norm(point)));
    }
    const auto py = split(ystar.coeffs);
    component = std::max({component, std::abs(rep.x_component_norm1 - (y.basis1().transpose() * py.v1).norm()),
                          std::abs(rep.x_component_norm2 - (y.basis2().transpose() * py.v2).norm())});

    const auto lifted = lift_real(real_parts(rep.extension).f1);
    const auto x = s.vector(n);
    const auto w = s.scalar();
    Bicomplexd fx, fwx;
    for (Eigen::Index k = 0; k < n; ++k) {
      fx = fx + oracle::product(lifted.coeffs[k], x[k]);
      fwx = fwx + oracle::product(lifted.coeffs[k], oracle::product(w, x[k]));
    }
    linearity = std::max(linearity, norm(fwx - oracle::product(w, fx)));
    const TFunctionald g{s.vector(n)};
    round_trip = std::max(round_trip, (oracle::coords(lift_real(real_parts(g).f1).coeffs) - oracle::coords(g.coeffs))
                                          .lpNorm<Eigen::Infinity>());
  }
  const bool ok = restriction <= 1e-10 && component <= 1e-10 && linearity <= 1e-12 && round_trip <= 1e-12;
  return {ok, "restriction " + fmt(restriction) + ", component norms " + fmt(component) + ", T-linearity " +
                  fmt(linearity) + ", round trip " + fmt(round_trip)};
}

Outcome limit_operator() {
  Sampler s(109);
  double worst = -INFINITY;
  for (int t = 0; t < 100; ++t) {
    const auto m = s.integer(1, 8);
    const auto n = s.integer(1, 8);
    const auto a = s.matrix(m, n);
    const auto e = s.matrix(m, n);
    double liminf = INFINITY;
    for (int k = 100; k <= 200; ++k) {
      const TMatrixd tk = a + e * Bicomplexd(1.0 / k);
      liminf = std::min(liminf, oracle::operator_norm(tk) / kRoot2);
    }
    worst = std::max(worst, op_norms(a).sup_norm - (kRoot2 * liminf + 1e-10));
  }
  return {worst <= 0, "max sup_norm(T) - sqrt2 liminf sup_norm(T_n) - 1e-10 = " + fmt(worst)};
}

Outcome null_cone_norming() {
  Sampler s(110);
  double value_dev = 0, norm_dev = 0;
  for (int t = 0; t < 1000; ++t) {
    const auto n = s.integer(1, 8);
    // Balanced: both idempotent components scaled to the same length.
    auto p = split(s.vector(n));
    p.v2 *= p.v1.norm() / p.v2.norm();
    const auto x = merge(p);
    const auto r = norming_functional(x);
    Bicomplexd value;
    for (Eigen::Index k = 0; k < n; ++k) value = value + oracle::product(r.functional.coeffs[k], x[k]);
    value_dev = std::max(value_dev, norm(value - Bicomplexd(vec_norm(x))));
    norm_dev = std::max(norm_dev, std::abs(r.norms.idem_norm - 1));
  }
  int raised = 0;
  for (int t = 0; t < 100; ++t) {
    const auto g = s.vector(s.integer(1, 8));
    try {
      (void)norming_functional(scalar_mul(t % 2 ? e1<double>() : e2<double>(), g));
    } catch (const NullConeVector&) {
      ++raised;
    }
  }
  const bool ok = value_dev <= 1e-10 && norm_dev <= 1e-10 && raised == 100;
  return {ok, "eval deviation " + fmt(value_dev) + ", idem_norm deviation " + fmt(norm_dev) + ", NullConeVector on " +
                  std::to_string(raised) + "/100 null-cone inputs"};
}

std::pair<int, std::string> run_command(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, out};
  std::array<char, 4096> buf;
  for (std::size_t got; (got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0;) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome full_verify_suite() {
  const std::string cmd = std::string("\"") + BICOMPLEX_CLI + "\" verify --all --seed 42";
  const auto [code1, out1] = run_command(cmd);
  const auto [code2, out2] = run_command(cmd);
  int lines = 0, passes = 0;
  std::istringstream in(out1);
  for (std::string line; std::getline(in, line);) {
    ++lines;
    if (line.find("\"pass\":true") != std::string::npos) ++passes;
  }
  const bool ok = code1 == 0 && code2 == 0 && lines == 18 && passes == 18 && out1 == out2;
  return {ok, "exit " + std::to_string(code1) + "/" + std::to_string(code2) + ", " + std::to_string(passes) + "/" +
                  std::to_string(lines) + " pass reports, outputs " + (out1 == out2 ? "identical" : "differ")};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"idempotent identities", idempotent_identities},
      {"norm representation identity", norm_identity},
      {"submultiplicativity", submultiplicativity},
      {"inverse correctness", inverse_correctness},
      {"operator norm sandwich and sphere oracle", operator_norm_sandwich},
      {"bound constant contract", bound_constant_contract},
      {"composition inequality", composition},
      {"linear solve", linear_solve},
      {"Hahn-Banach pipeline", hahn_banach},
      {"limit operator bound", limit_operator},
      {"null-cone norming behavior", null_cone_norming},
      {"full verify suite", full_verify_suite},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s %2d %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str(), seconds_since(start));
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
