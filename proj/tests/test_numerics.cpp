#include <doctest.h>

#include <cmath>
#include <random>

#include "hyptr/numerics.hpp"

using namespace hyptr;
using num::LaurentSeries;

namespace {

double agm(double x, double y) {
  for (int i = 0; i < 64 && std::abs(x - y) > 1e-16 * x; ++i) {
    double a = 0.5 * (x + y), g = std::sqrt(x * y);
    x = a;
    y = g;
  }
  return x;
}

LaurentSeries random_series(std::mt19937_64& rng, int lead, int len) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cplx> c(static_cast<size_t>(len));
  for (auto& v : c) v = cplx(u(rng), u(rng));
  return LaurentSeries(lead, std::move(c));
}

}  // namespace

TEST_CASE("endpoint-singular quadrature reproduces the arcsine integral") {
  auto f = [](double t) { return cplx(1.0 / std::sqrt(t * (1.0 - t)), 0.0); };
  auto r = num::integrate01(f, true, true, 1e-12);
  CHECK(r.converged);
  CHECK(std::abs(r.value - cplx(kPi)) < 1e-12);
}

TEST_CASE("smooth quadrature integrates polynomials to machine accuracy") {
  auto f = [](double t) { return cplx(3.0 * t * t, 0.0) + cplx(0.0, 2.0) * t; };
  auto r = num::integrate01(f, false, false, 1e-13);
  CHECK(r.converged);
  CHECK(std::abs(r.value - cplx(1.0, 1.0)) < 1e-13);
}

TEST_CASE("one-sided singular endpoints are regularized") {
  auto f = [](double t) { return cplx(1.0 / std::sqrt(t), 0.0); };
  auto r = num::integrate01(f, true, false, 1e-12);
  CHECK(std::abs(r.value - cplx(2.0)) < 1e-12);

  auto g = [](double t) { return cplx(1.0 / std::sqrt(1.0 - t), 0.0); };
  auto r2 = num::integrate01(g, false, true, 1e-12);
  CHECK(std::abs(r2.value - cplx(2.0)) < 1e-12);
}

TEST_CASE("elliptic period matches the arithmetic-geometric mean") {
  // int_2^3 dx / sqrt((3-x)(x-2)x) = pi / agm(sqrt(3), sqrt(2))
  auto f = [](cplx z) { return 1.0 / std::sqrt((3.0 - z) * (z - 2.0) * z); };
  auto r = num::integrate_segment(f, cplx(2.0), cplx(3.0), true, true, 1e-12);
  CHECK(r.converged);
  double expect = kPi / agm(std::sqrt(3.0), std::sqrt(2.0));
  CHECK(std::abs(r.value - cplx(expect)) < 1e-11 * expect);
}

TEST_CASE("node doubling is stable") {
  auto f = [](double t) { return std::exp(cplx(0.0, 5.0) * t) / std::sqrt(t * (1.0 - t)); };
  auto a = num::integrate01(f, true, true, 1e-13, 64);
  auto b = num::integrate01(f, true, true, 1e-13, 128);
  CHECK(std::abs(a.value - b.value) < 1e-10);
}

TEST_CASE("series arithmetic satisfies ring axioms on the shared window") {
  std::mt19937_64 rng(12345);
  for (int rep = 0; rep < 20; ++rep) {
    auto a = random_series(rng, -2, 8);
    auto b = random_series(rng, 0, 6);
    auto c = random_series(rng, -1, 7);

    auto lhs = (a + b) + c;
    auto rhs = a + (b + c);
    for (int k = lhs.lead_order(); k < lhs.trunc_order(); ++k)
      CHECK(std::abs(lhs.coeff(k) - rhs.coeff(k)) < 1e-14);

    auto p1 = a * b;
    auto p2 = b * a;
    CHECK(p1.lead_order() == p2.lead_order());
    CHECK(p1.trunc_order() == p2.trunc_order());
    for (int k = p1.lead_order(); k < p1.trunc_order(); ++k)
      CHECK(std::abs(p1.coeff(k) - p2.coeff(k)) < 1e-13);

    auto d1 = a * (b + c);
    auto d2 = a * b + a * c;
    int lo = std::max(d1.lead_order(), d2.lead_order());
    int hi = std::min(d1.trunc_order(), d2.trunc_order());
    for (int k = lo; k < hi; ++k) CHECK(std::abs(d1.coeff(k) - d2.coeff(k)) < 1e-13);

    auto m1 = (a * b) * c;
    auto m2 = a * (b * c);
    lo = std::max(m1.lead_order(), m2.lead_order());
    hi = std::min(m1.trunc_order(), m2.trunc_order());
    for (int k = lo; k < hi; ++k) CHECK(std::abs(m1.coeff(k) - m2.coeff(k)) < 1e-12);
  }
}

TEST_CASE("multiplication propagates truncation windows") {
  LaurentSeries a(-2, {cplx(1), cplx(2), cplx(3), cplx(4), cplx(5)});  // orders -2..2
  LaurentSeries b(1, {cplx(1), cplx(-1), cplx(1)});                   // orders 1..3
  auto p = a * b;
  CHECK(p.lead_order() == -1);
  CHECK(p.trunc_order() == 2);  // min(3+1, 4-2)
  CHECK(std::abs(p.coeff(-1) - cplx(1)) < 1e-15);
  CHECK(std::abs(p.coeff(0) - cplx(1)) < 1e-15);   // 2*1 + 1*(-1)
  CHECK(std::abs(p.coeff(1) - cplx(2)) < 1e-15);   // 3*1 + 2*(-1) + 1*1
}

TEST_CASE("series inversion inverts") {
  std::mt19937_64 rng(777);
  for (int rep = 0; rep < 10; ++rep) {
    auto a = random_series(rng, -3 + static_cast<int>(rng() % 6), 9);
    if (std::abs(a.coeff(a.lead_order())) < 0.1) continue;
    auto inv = a.invert();
    auto prod = a * inv;
    CHECK(prod.lead_order() == 0);
    CHECK(std::abs(prod.coeff(0) - cplx(1)) < 1e-12);
    for (int k = 1; k < prod.trunc_order(); ++k) CHECK(std::abs(prod.coeff(k)) < 1e-12);

    auto twice = inv.invert();
    for (int k = a.lead_order(); k < twice.trunc_order(); ++k)
      CHECK(std::abs(twice.coeff(k) - a.coeff(k)) < 1e-11);
  }
}

TEST_CASE("inversion rejects a vanishing lead coefficient") {
  LaurentSeries s(0, {cplx(0), cplx(1)});
  CHECK_THROWS_AS(s.invert(), num::ZeroLeadingCoefficient);
}

TEST_CASE("residue and primitive behave like calculus") {
  LaurentSeries s(-3, {cplx(2), cplx(0), cplx(5), cplx(1), cplx(7)});  // orders -3..1
  CHECK(std::abs(s.residue() - cplx(5)) < 1e-15);

  CHECK(std::abs(s.derivative().residue()) < 1e-15);

  CHECK_THROWS_AS(s.antiderivative(), std::domain_error);

  LaurentSeries t(-3, {cplx(2), cplx(0), cplx(0), cplx(1), cplx(7)});
  auto back = t.antiderivative().derivative();
  for (int k = t.lead_order(); k < back.trunc_order(); ++k)
    CHECK(std::abs(back.coeff(k) - t.coeff(k)) < 1e-15);

  LaurentSeries shallow(2, {cplx(1)});
  CHECK(std::abs(shallow.residue()) < 1e-15);  // window above -1: exactly zero
  LaurentSeries unknown(-5, {cplx(1), cplx(2)});
  CHECK_THROWS_AS(unknown.residue(), num::TruncationTooShallow);
}

TEST_CASE("series evaluation matches closed forms") {
  // 1/(zeta^2 (1 - zeta)) = zeta^{-2} + zeta^{-1} + 1 + zeta + ...
  LaurentSeries geo(0, std::vector<cplx>(20, cplx(1)));
  auto s = geo.shifted(-2);
  cplx z(0.1, 0.05);
  cplx expect = 1.0 / (z * z * (1.0 - z));
  CHECK(std::abs(s.eval(z) - expect) < 1e-9);

  LaurentSeries one = LaurentSeries::constant(cplx(1), 20);
  auto denom = one - LaurentSeries::monomial(cplx(1), 1, 20);
  auto alt = denom.invert().shifted(-2);
  CHECK(std::abs(alt.eval(z) - expect) < 1e-9);
}

TEST_CASE("parity projectors and variable flip") {
  std::mt19937_64 rng(99);
  auto a = random_series(rng, -4, 9);
  auto sum = a.even_part() + a.odd_part();
  for (int k = a.lead_order(); k < a.trunc_order(); ++k)
    CHECK(std::abs(sum.coeff(k) - a.coeff(k)) < 1e-15);
  auto f = a.flipped();
  cplx z(0.3, 0.1);
  CHECK(std::abs(f.eval(z) - a.eval(-z)) < 1e-10);
}

TEST_CASE("square-root continuation follows the branch") {
  // g(t) = exp(2 pi i t) winds once; its continuous root ends at -1
  auto g = [](double t) { return std::exp(cplx(0.0, 2.0 * kPi * t)); };
  num::SqrtTracker w(g, cplx(1.0));
  CHECK(std::abs(w(1.0) - cplx(-1.0)) < 1e-12);
  CHECK(std::abs(w(0.5) - cplx(0.0, 1.0)) < 1e-12);
}

TEST_CASE("polynomial helpers") {
  std::vector<cplx> roots{cplx(1), cplx(-2), cplx(0.0, 1.0)};
  auto c = num::poly_from_roots(roots);
  for (const auto& r : roots) CHECK(std::abs(num::polyval(c, r)) < 1e-13);
  auto d = num::polyder(c);
  cplx z(0.7, -0.2);
  double h = 1e-6;
  cplx fd = (num::polyval(c, z + h) - num::polyval(c, z - h)) / (2.0 * h);
  CHECK(std::abs(num::polyval(d, z) - fd) < 1e-8);
}
