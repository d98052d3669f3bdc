#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bicomplex/random.hpp"
#include "oracles.hpp"

using namespace bicomplex;

namespace {

const double kHalfRoot2 = 1.0 / std::sqrt(2.0);

bool same(const Bicomplexd& x, const Bicomplexd& y, double tol) {
  return std::abs(x.a() - y.a()) <= tol && std::abs(x.b() - y.b()) <= tol && std::abs(x.c() - y.c()) <= tol &&
         std::abs(x.d() - y.d()) <= tol;
}

}  // namespace

TEST_CASE("constructor rejects non-finite coefficients") {
  CHECK_THROWS_AS(Bicomplexd(NAN, 0, 0, 0), NonFiniteValue);
  CHECK_THROWS_AS(Bicomplexd(0, 0, INFINITY, 0), NonFiniteValue);
}

TEST_CASE("complex pair round trip is exact") {
  const Bicomplexd w(0.1, -0.3, 2.5, 1e-7);
  const auto v = Bicomplexd::from_complex(w.z1(), w.z2());
  CHECK(v == w);
}

TEST_CASE("idempotent identities are exact") {
  const auto e1v = e1<double>();
  const auto e2v = e2<double>();
  CHECK(e1v * e1v == e1v);
  CHECK(e2v * e2v == e2v);
  CHECK(e1v * e2v == Bicomplexd());
  CHECK(e1v + e2v == Bicomplexd(1));
  CHECK(unit_j<double>() * unit_j<double>() == Bicomplexd(1));
  CHECK(iota1<double>() * iota1<double>() == Bicomplexd(-1));
  CHECK(iota2<double>() * iota2<double>() == Bicomplexd(-1));
  CHECK(iota1<double>() * iota2<double>() == unit_j<double>());
}

TEST_CASE("product matches the complex-pair oracle") {
  Sampler s(1);
  for (int t = 0; t < 10000; ++t) {
    const auto x = s.scalar();
    const auto y = s.scalar();
    CHECK(same(x * y, oracle::product(x, y), 1e-15));
  }
}

TEST_CASE("ring axioms on random triples") {
  Sampler s(2);
  for (int t = 0; t < 10000; ++t) {
    const auto x = s.scalar();
    const auto y = s.scalar();
    const auto z = s.scalar();
    CHECK(same((x * y) * z, x * (y * z), 1e-13));
    CHECK(same(x * y, y * x, 1e-13));
    CHECK(same(x * (y + z), x * y + x * z, 1e-13));
  }
}

TEST_CASE("idempotent components") {
  const auto hj = to_idempotent(unit_j<double>());
  CHECK(hj.h1 == std::complex<double>(1, 0));
  CHECK(hj.h2 == std::complex<double>(-1, 0));
  const auto he1 = to_idempotent(e1<double>());
  CHECK(he1.h1 == std::complex<double>(1, 0));
  CHECK(he1.h2 == std::complex<double>(0, 0));

  // w = 1 + i2, v = j, expanded by hand: w v = j + i2 j = j - i1.
  const Bicomplexd w(1, 0, 1, 0);
  const Bicomplexd v(0, 0, 0, 1);
  const Bicomplexd wv = oracle::product(w, v);
  CHECK(wv == Bicomplexd(0, -1, 0, 1));
  const auto hp = to_idempotent(w) * to_idempotent(v);
  const auto hwv = to_idempotent(wv);
  CHECK(std::abs(hp.h1 - hwv.h1) == 0.0);
  CHECK(std::abs(hp.h2 - hwv.h2) == 0.0);

  Sampler s(3);
  for (int t = 0; t < 10000; ++t) {
    const auto x = s.scalar();
    const auto y = s.scalar();
    CHECK(same(from_idempotent(to_idempotent(x)), x, 4e-16));
    const auto hprod = to_idempotent(x) * to_idempotent(y);
    const auto hxy = to_idempotent(oracle::product(x, y));
    CHECK(std::abs(hprod.h1 - hxy.h1) <= 1e-13);
    CHECK(std::abs(hprod.h2 - hxy.h2) <= 1e-13);
  }
}

TEST_CASE("norms") {
  CHECK(norm(Bicomplexd(1, 1, 1, 1)) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(norm(e1<double>()) == doctest::Approx(kHalfRoot2).epsilon(1e-15));
  CHECK(norm(e2<double>()) == doctest::Approx(kHalfRoot2).epsilon(1e-15));
  CHECK(norm(Bicomplexd()) == 0.0);
  CHECK(norm_idem(IdempotentForm<double>{1.0, 0.0}) == doctest::Approx(kHalfRoot2).epsilon(1e-15));
  CHECK(norm_idem(IdempotentForm<double>{1.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-15));
  const IdempotentForm<double> h34{3.0, 4.0};
  CHECK(norm_idem(h34) == doctest::Approx(std::sqrt(12.5)).epsilon(1e-15));
  CHECK(norm_idem(h34) == doctest::Approx(oracle::norm(from_idempotent(h34))).epsilon(1e-14));

  Sampler s(4);
  for (int t = 0; t < 10000; ++t) {
    const auto x = s.scalar();
    CHECK(std::abs(norm(x) - oracle::norm(x)) <= 1e-15);
    CHECK(std::abs(norm(x) - norm_idem(to_idempotent(x))) <= 1e-12 * (1 + norm(x)));
  }
}

TEST_CASE("submultiplicativity constant is attained at e1") {
  const auto e1v = e1<double>();
  CHECK(norm(e1v * e1v) / (norm(e1v) * norm(e1v)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  Sampler s(5);
  for (int t = 0; t < 10000; ++t) {
    const auto x = s.scalar();
    const auto y = s.scalar();
    CHECK(oracle::norm(oracle::product(x, y)) <= std::sqrt(2.0) * norm(x) * norm(y) + 1e-12);
  }
}

TEST_CASE("classify") {
  auto r = classify(e1<double>(), 0.0);
  CHECK(r.is_singular);
  CHECK(r.vanishing_components == std::vector<int>{2});
  r = classify(Bicomplexd(1), 0.0);
  CHECK_FALSE(r.is_singular);
  CHECK(r.vanishing_components.empty());
  r = classify(Bicomplexd(1, 0, 0, 1), 0.0);
  CHECK(r.is_singular);
  CHECK(r.vanishing_components == std::vector<int>{2});
  r = classify(e2<double>(), 0.0);
  CHECK(r.vanishing_components == std::vector<int>{1});
  CHECK(classify(Bicomplexd()).vanishing_components == std::vector<int>{1, 2});
  // Near the null cone: exact test says nonsingular, default tolerance says singular.
  const Bicomplexd near(1, 0, 0, 1 - 1e-14);
  CHECK_FALSE(classify(near, 0.0).is_singular);
  CHECK(classify(near).is_singular);
}

TEST_CASE("singularity agrees with 4x4 real solvability") {
  Sampler s(6);
  for (int t = 0; t < 2000; ++t) {
    Bicomplexd w = s.scalar();
    if (t % 3 == 1) w = e1<double>() * w;
    if (t % 3 == 2) w = e2<double>() * w;
    const bool singular = classify(w, 0.0).is_singular;
    const auto lu = oracle::left_mul(w).fullPivLu();
    CHECK(singular == (lu.rank() < 4));
  }
}

TEST_CASE("inverse") {
  const auto e1v = e1<double>();
  const auto e2v = e2<double>();
  const Bicomplexd w = Bicomplexd(2) * e1v + e2v;
  CHECK(same(inverse(w), Bicomplexd(0.5) * e1v + e2v, 1e-16));
  CHECK(inverse(unit_j<double>()) == unit_j<double>());
  CHECK_THROWS_AS(inverse(e1v), SingularElement);
  try {
    (void)inverse(e2v);
  } catch (const SingularElement& e) {
    CHECK(e.report().vanishing_components == std::vector<int>{1});
  }

  Sampler s(7);
  for (int t = 0; t < 10000; ++t) {
    const auto x = s.nonsingular_scalar(1e-3);
    const auto xi = inverse(x);
    CHECK(norm(oracle::product(x, xi) - Bicomplexd(1)) <= 1e-12 * condition(x));
    CHECK(same(xi, oracle::inverse(x), 1e-9 * condition(x) * norm(xi)));
  }
}

TEST_CASE("hyperbolic numbers embed with b = c = 0") {
  const Hyperbolic<double> h{2.0, -3.0};
  const auto w = h.to_bicomplex();
  CHECK(w == Bicomplexd(2, 0, 0, -3));
}
