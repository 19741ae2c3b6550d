#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "hyptr/curve.hpp"

using namespace hyptr;
using namespace hyptr::curve;
using hyptr::testutil::random_sextic;

namespace {

// resultant of F (degree 6) and F' (degree 5) via the Sylvester determinant
cplx sylvester_resultant(const std::vector<cplx>& f) {
  auto g = num::polyder(f);
  Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(11, 11);
  for (int row = 0; row < 5; ++row)
    for (int k = 0; k <= 6; ++k) S(row, row + k) = f[static_cast<size_t>(k)];
  for (int row = 0; row < 6; ++row)
    for (int k = 0; k <= 5; ++k) S(5 + row, row + k) = g[static_cast<size_t>(k)];
  return S.determinant();
}

double rel_err(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b))); }

}  // namespace

TEST_CASE("the degree-two invariant matches its coefficient expansion") {
  CHECK(std::abs(invariant_A({cplx(1), 0, 0, 0, 0, 0, cplx(1)}) - cplx(-240)) < 1e-13);
  CHECK(std::abs(invariant_A({cplx(1), 0, 0, cplx(1), 0, 0, 0}) - cplx(6)) < 1e-13);
}

TEST_CASE("discriminant agrees with the Sylvester resultant") {
  std::mt19937_64 rng(2024);
  for (int rep = 0; rep < 100; ++rep) {
    auto c = random_sextic(rng);
    auto I = binary_invariants(c);
    cplx res = sylvester_resultant(c.coeffs);
    // Res(F, F') = -a0 * D
    CHECK(std::abs(res + c.lead() * I.D) < 1e-8 * std::max(1.0, std::abs(res)));
  }
}

TEST_CASE("roots and coefficients round-trip") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 25; ++rep) {
    auto c = random_sextic(rng);
    auto back = roots_of(c.coeffs);
    REQUIRE(back.size() == 6);
    for (size_t i = 0; i < 6; ++i) CHECK(std::abs(back[i] - c.roots[i]) < 1e-10 * c.root_spread());
  }
}

TEST_CASE("absolute invariants are unchanged by fractional-linear substitution") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int done = 0;
  while (done < 10) {
    auto c = random_sextic(rng);
    cplx p(u(rng), u(rng)), q(u(rng), u(rng)), v(u(rng), u(rng)), w(u(rng), u(rng));
    if (std::abs(p * w - q * v) < 0.3) continue;
    AbsoluteInvariants j0, j1;
    try {
      j0 = absolute_invariants(binary_invariants(c));
      auto m = sextic_moebius(c, p, q, v, w);
      j1 = absolute_invariants(binary_invariants(m));
    } catch (const std::exception&) {
      continue;  // substitution degenerated the model; draw again
    }
    CHECK(rel_err(j0.j1, j1.j1) < 1e-8);
    CHECK(rel_err(j0.j2, j1.j2) < 1e-8);
    CHECK(rel_err(j0.j3, j1.j3) < 1e-8);
    ++done;
  }
}

TEST_CASE("degenerate branch points are rejected") {
  std::vector<cplx> roots{cplx(0), cplx(0), cplx(1), cplx(2), cplx(3), cplx(4)};
  CHECK_THROWS_AS(curve_from_roots(Model::Sextic, cplx(1), roots), DegenerateDiscriminant);
}

TEST_CASE("sextic to quintic reduction maps points between the models") {
  std::mt19937_64 rng(55);
  for (int rep = 0; rep < 5; ++rep) {
    auto c = random_sextic(rng);
    cplx c1(0.7, 0.2), c2(-0.4, 0.5);
    auto [q, m] = sextic_to_quintic(c, c1, c2);
    REQUIRE(q.model == Model::Quintic);

    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int k = 0; k < 20; ++k) {
      cplx x(u(rng), u(rng));
      cplx y = std::sqrt(q.F(x));
      auto [X, Y] = m.to_sextic(x, y);
      double scale = std::max(1.0, std::abs(c.F(X)));
      CHECK(std::abs(Y * Y - c.F(X)) < 1e-9 * scale);
      auto [xb, yb] = m.to_quintic(X, Y);
      CHECK(std::abs(xb - x) < 1e-9);
      CHECK(std::abs(yb - y) < 1e-9 * std::max(1.0, std::abs(y)));
    }
  }
}

TEST_CASE("shift collision and origin-at-infinity are rejected") {
  std::mt19937_64 rng(56);
  auto c = random_sextic(rng);
  CHECK_THROWS_AS(sextic_to_quintic(c, cplx(0.3), cplx(0.3)), CoincidentShifts);

  // force the root sent to infinity to sit at the origin
  std::vector<cplx> roots = c.roots;
  roots[0] = cplx(0);
  auto c2 = curve_from_roots(Model::Sextic, cplx(1), roots);
  std::array<int, 6> ord{};
  for (int i = 0; i < 6; ++i) ord[static_cast<size_t>(i)] = i;
  // locate the origin in the sorted roots and put it first
  for (int i = 0; i < 6; ++i)
    if (std::abs(c2.roots[static_cast<size_t>(i)]) == 0.0) std::swap(ord[0], ord[static_cast<size_t>(i)]);
  CHECK_THROWS_AS(to_rosenhain(c2, ord), RootAtZero);
}

TEST_CASE("quintic rescaling acts on roots and keeps the lead") {
  std::mt19937_64 rng(57);
  auto q = testutil::random_quintic(rng);
  cplx s(1.3, -0.2), r(0.4, 0.1);
  auto [qn, sc] = quintic_normalize(q, s, r);
  CHECK(std::abs(qn.lead() - q.lead()) < 1e-14);
  for (const auto& e : q.roots) {
    cplx img = (e - r) / (s * s);
    double best = 1e300;
    for (const auto& e2 : qn.roots) best = std::min(best, std::abs(e2 - img));
    CHECK(best < 1e-10);
  }
  auto [x2, y2] = sc.forward(q.roots[0], cplx(0));
  CHECK(std::abs(qn.F(x2)) < 1e-9);
  CHECK(std::abs(y2) == 0.0);
  CHECK_THROWS_AS(quintic_normalize(q, cplx(0), cplx(0)), ZeroScale);
}

TEST_CASE("Rosenhain reduction pins 0 and 1 and preserves the moduli") {
  std::mt19937_64 rng(58);
  for (int rep = 0; rep < 3; ++rep) {
    auto c = random_sextic(rng);
    auto j0 = absolute_invariants(binary_invariants(c));

    std::array<int, 6> ord{0, 1, 2, 3, 4, 5};
    auto rf = to_rosenhain(c, ord);
    CHECK(std::abs(rf.map.e[1]) < 1e-9);          // image of r2
    CHECK(std::abs(rf.map.e[3] - cplx(1)) < 1e-9);  // image of r4

    // moduli survive the round trip through the quintic model
    auto s = sextic_from_quintic(rf.quintic, cplx(0.37, 0.41));
    auto j1 = absolute_invariants(binary_invariants(s));
    CHECK(rel_err(j0.j1, j1.j1) < 1e-8);
    CHECK(rel_err(j0.j2, j1.j2) < 1e-8);
    CHECK(rel_err(j0.j3, j1.j3) < 1e-8);

    // a different ordering gives different lambdas but the same curve
    std::array<int, 6> ord2{2, 4, 0, 1, 3, 5};
    auto rf2 = to_rosenhain(c, ord2);
    auto s2 = sextic_from_quintic(rf2.quintic, cplx(0.29, -0.33));
    auto j2 = absolute_invariants(binary_invariants(s2));
    CHECK(rel_err(j0.j1, j2.j1) < 1e-8);
    CHECK(rel_err(j0.j2, j2.j2) < 1e-8);
    CHECK(rel_err(j0.j3, j2.j3) < 1e-8);
  }
}
