#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "hyptr/periods.hpp"

using namespace hyptr;
using curve::HyperellipticCurve;

namespace {

double agm(double a, double b) {
  for (int i = 0; i < 60 && std::abs(a - b) > 1e-16 * a; ++i) {
    double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return a;
}

double rh_residual(const periods::PeriodData& pd) {
  Mat4 R = pd.Pi * periods::J4c() * pd.Pi.transpose() - kTwoPiI * periods::J4c();
  return R.cwiseAbs().maxCoeff();
}

HyperellipticCurve spread_sextic() {
  std::vector<cplx> roots = {cplx(-4.0, 0.0),        cplx(-3.0, 0.0),
                             cplx(-0.5, 1.8),        cplx(1.2, -1.1),
                             cplx(2.5, 0.4),         cplx(4.5, -0.9)};
  return curve::curve_from_roots(curve::Model::Sextic, cplx(0.7, 0.3), roots);
}

HyperellipticCurve spread_quintic() {
  std::vector<cplx> roots = {cplx(-1.3, 0.0), cplx(-0.2, 0.9), cplx(0.4, -0.7),
                             cplx(1.1, 0.3), cplx(2.2, -0.5)};
  return curve::curve_from_roots(curve::Model::Quintic, cplx(1.0), roots);
}

// trapezoid quadrature of N(X) dX / (2Y) over a circle |X - c0| = R that
// encloses exactly two branch points; exponentially convergent and entirely
// independent of the segment parametrization used by the library
cplx circle_period(const HyperellipticCurve& c, cplx c0, double R,
                   const std::vector<cplx>& numerator, int m) {
  num::SqrtTracker s(
      [&](double t) {
        cplx X = c0 + R * std::exp(2.0 * M_PI * kI * t);
        return num::polyval(c.coeffs, X);
      },
      std::sqrt(num::polyval(c.coeffs, c0 + R)));
  cplx acc = 0.0;
  for (int j = 0; j < m; ++j) {
    double t = static_cast<double>(j) / m;
    cplx X = c0 + R * std::exp(2.0 * M_PI * kI * t);
    cplx dX = 2.0 * M_PI * kI * R * std::exp(2.0 * M_PI * kI * t);
    acc += num::polyval(numerator, X) * dX / (2.0 * s(t));
  }
  return acc / static_cast<double>(m);
}

}  // namespace

TEST_CASE("period matrices satisfy the bilinear relations") {
  std::mt19937_64 rng(2024);
  for (int rep = 0; rep < 8; ++rep) {
    auto c = testutil::random_sextic(rng);
    auto pd = periods::periods(c);
    double scale = pd.Pi.cwiseAbs().maxCoeff();
    CHECK(rh_residual(pd) < 1e-8 * std::max(1.0, scale * scale));
    CHECK(std::abs(pd.tau(0, 1) - pd.tau(1, 0)) < 1e-9 * (1.0 + pd.tau.cwiseAbs().maxCoeff()));
    CHECK(pd.tau(0, 0).imag() > 0.0);
    CHECK((pd.tau(0, 0).imag() * pd.tau(1, 1).imag() -
           std::pow(0.5 * (pd.tau(0, 1).imag() + pd.tau(1, 0).imag()), 2)) > 0.0);
    Mat2 Q = pd.quasi_period_matrix();
    CHECK(std::abs(Q(0, 1) - Q(1, 0)) < 1e-8 * (1.0 + Q.cwiseAbs().maxCoeff()));
    Mat2 Y = pd.nonholomorphic_shift();
    CHECK(std::abs(Y(0, 1) - Y(1, 0)) < 1e-8 * (1.0 + Y.cwiseAbs().maxCoeff()));
  }
  for (int rep = 0; rep < 4; ++rep) {
    auto c = testutil::random_quintic(rng);
    auto pd = periods::periods(c);
    double scale = pd.Pi.cwiseAbs().maxCoeff();
    CHECK(rh_residual(pd) < 1e-8 * std::max(1.0, scale * scale));
  }
}

TEST_CASE("loop periods match an independent circle-contour quadrature") {
  auto c = spread_sextic();
  auto m = periods::build_marking(c);
  Eigen::MatrixXcd P = periods::loop_periods(c, m.loops, 1e-11);
  auto nums = std::vector<std::vector<cplx>>{{cplx(1.0)}, {cplx(1.0), cplx(0.0)}};
  auto [eta1, eta2] = periods::eta_numerators(c);
  nums.push_back(eta1);
  nums.push_back(eta2);

  int tested = 0;
  for (size_t li = 0; li < m.loops.size(); ++li) {
    cplx ra = c.roots[static_cast<size_t>(m.loops[li].a)];
    cplx rb = c.roots[static_cast<size_t>(m.loops[li].b)];
    cplx c0 = 0.5 * (ra + rb);
    double inner = 0.5 * std::abs(rb - ra);
    double outer = 1e9;
    for (size_t k = 0; k < c.roots.size(); ++k) {
      if (static_cast<int>(k) == m.loops[li].a || static_cast<int>(k) == m.loops[li].b) continue;
      outer = std::min(outer, std::abs(c.roots[k] - c0));
    }
    if (outer < 2.2 * inner) continue;  // circle would pass too close to a root
    double R = std::sqrt(inner * outer);
    for (int j = 0; j < 4; ++j) {
      cplx o512 = circle_period(c, c0, R, nums[static_cast<size_t>(j)], 512);
      cplx o1024 = circle_period(c, c0, R, nums[static_cast<size_t>(j)], 1024);
      REQUIRE(std::abs(o512 - o1024) < 1e-10 * (1.0 + std::abs(o1024)));
      cplx L = P(static_cast<Eigen::Index>(li), j);
      CHECK(std::min(std::abs(L - o1024), std::abs(L + o1024)) <
            1e-8 * (1.0 + std::abs(o1024)));
    }
    ++tested;
  }
  CHECK(tested >= 1);
}

TEST_CASE("a two-elliptic-factor curve reproduces the arithmetic-geometric mean") {
  // Y^2 = (X^2-1)(X^2-2)(X^2-4); under m = X^2 the second holomorphic
  // differential pushes to dm/2Y on Y^2 = (m-1)(m-2)(m-4), so the loop
  // period around [1, sqrt(2)] is a complete elliptic integral
  std::vector<cplx> roots = {1.0, -1.0, std::sqrt(2.0), -std::sqrt(2.0), 2.0, -2.0};
  auto c = curve::curve_from_roots(curve::Model::Sextic, cplx(1.0), roots);
  auto m = periods::build_marking(c);
  int li = -1;
  for (size_t i = 0; i < m.loops.size(); ++i) {
    cplx ra = c.roots[static_cast<size_t>(m.loops[i].a)];
    cplx rb = c.roots[static_cast<size_t>(m.loops[i].b)];
    if (std::min(ra.real(), rb.real()) > 0.9 && std::max(ra.real(), rb.real()) < 1.5)
      li = static_cast<int>(i);
  }
  REQUIRE(li >= 0);
  Eigen::MatrixXcd P = periods::loop_periods(c, m.loops, 1e-12);
  double k2 = 1.0 / 3.0;
  double K = M_PI / (2.0 * agm(1.0, std::sqrt(1.0 - k2)));
  double expected = K / std::sqrt(3.0);
  CHECK(std::abs(std::abs(P(li, 1)) - expected) < 1e-10);
}

TEST_CASE("periods are stable under tolerance tightening") {
  auto c = spread_sextic();
  auto m = periods::build_marking(c);
  auto pd9 = periods::periods(c, m, 1e-9);
  auto pd11 = periods::periods(c, m, 1e-11);
  double scale = pd11.Pi.cwiseAbs().maxCoeff();
  CHECK((pd9.Pi - pd11.Pi).cwiseAbs().maxCoeff() < 1e-9 * std::max(1.0, scale));
}

TEST_CASE("markings from different chain directions differ by an integer symplectic map") {
  std::mt19937_64 rng(77);
  int nontrivial = 0;
  for (int rep = 0; rep < 4; ++rep) {
    auto c = testutil::random_sextic(rng);
    auto m1 = periods::build_marking(c, 0);
    auto m2 = periods::build_marking(c, 3 + rep);
    auto pd1 = periods::periods(c, m1);
    auto pd2 = periods::periods(c, m2);

    Mat4 Sc = pd2.Pi * pd1.Pi.inverse();
    Mat4i S;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        S(i, j) = static_cast<int>(std::lround(Sc(i, j).real()));
        REQUIRE(std::abs(Sc(i, j).real() - S(i, j)) < 1e-6);
        REQUIRE(std::abs(Sc(i, j).imag()) < 1e-6);
      }
    CHECK(Mat4i(S * periods::J4i() * S.transpose()) == periods::J4i());
    if (S != Mat4i(Mat4i::Identity())) ++nontrivial;

    // rows are (A1, A2, B1, B2): new A rows mix via the top blocks of S
    Mat2 p = S.block<2, 2>(0, 0).cast<double>().cast<cplx>();
    Mat2 q = S.block<2, 2>(0, 2).cast<double>().cast<cplx>();
    Mat2 r = S.block<2, 2>(2, 0).cast<double>().cast<cplx>();
    Mat2 s = S.block<2, 2>(2, 2).cast<double>().cast<cplx>();
    Mat2 tau2 = (r + s * pd1.tau) * (p + q * pd1.tau).inverse();
    CHECK((tau2 - pd2.tau).cwiseAbs().maxCoeff() < 1e-8 * (1.0 + pd2.tau.cwiseAbs().maxCoeff()));
  }
  CHECK(nontrivial >= 1);
}

TEST_CASE("root variation formulas match finite differences") {
  auto c = spread_quintic();
  auto pd = periods::periods(c);
  double h = 1e-5;
  Mat2 sum_dtau = Mat2::Zero();

  for (int k = 0; k < 5; ++k) {
    auto rv = periods::rauch_variation(c, pd, k);
    sum_dtau += rv.dtau;

    for (int dir = 0; dir < 2; ++dir) {
      cplx step = (dir == 0) ? cplx(h) : cplx(0.0, h);
      auto shift = [&](cplx s) {
        auto roots = c.roots;
        roots[static_cast<size_t>(k)] += s;
        return curve::curve_from_roots(curve::Model::Quintic, cplx(1.0), roots);
      };
      auto pdp = periods::periods(shift(step), pd.marking);
      auto pdm = periods::periods(shift(-step), pd.marking);
      Mat4 dPi_fd = (pdp.Pi - pdm.Pi) / (2.0 * step);
      Mat2 dtau_fd = (pdp.tau - pdm.tau) / (2.0 * step);
      double ps = std::max(1.0, dPi_fd.cwiseAbs().maxCoeff());
      double ts = std::max(1.0, dtau_fd.cwiseAbs().maxCoeff());
      CHECK((rv.dPi - dPi_fd).cwiseAbs().maxCoeff() < 2e-5 * ps);
      CHECK((rv.dtau - dtau_fd).cwiseAbs().maxCoeff() < 2e-5 * ts);
    }
    CHECK(std::abs(rv.dtau(0, 1) - rv.dtau(1, 0)) <
          1e-8 * (1.0 + rv.dtau.cwiseAbs().maxCoeff()));
  }
  // translating every root leaves the period ratio unchanged
  CHECK(sum_dtau.cwiseAbs().maxCoeff() < 1e-6);
}

TEST_CASE("variation formulas reject unsupported models") {
  auto cs = spread_sextic();
  auto pds = periods::periods(cs);
  CHECK_THROWS_AS(periods::rauch_variation(cs, pds, 0), periods::ModelMismatch);
}

TEST_CASE("doubled branch-point integrals lie in the period lattice") {
  for (int which = 0; which < 2; ++which) {
    auto c = (which == 0) ? spread_sextic() : spread_quintic();
    auto pd = periods::periods(c);
    auto phi = periods::branch_abel_map(c);

    Eigen::Matrix4d Mreal;
    for (int i = 0; i < 4; ++i) {
      Vec2 row(pd.Pi(i, 0), pd.Pi(i, 1));
      Mreal(0, i) = row(0).real();
      Mreal(1, i) = row(0).imag();
      Mreal(2, i) = row(1).real();
      Mreal(3, i) = row(1).imag();
    }
    double scale = pd.Pi.cwiseAbs().maxCoeff();
    for (const auto& p : phi) {
      Eigen::Vector4d rhs(2.0 * p(0).real(), 2.0 * p(0).imag(), 2.0 * p(1).real(),
                          2.0 * p(1).imag());
      Eigen::Vector4d n = Mreal.colPivHouseholderQr().solve(rhs);
      for (int i = 0; i < 4; ++i) CHECK(std::abs(n(i) - std::lround(n(i))) < 1e-6);
      Eigen::Vector4d resid = Mreal * n - rhs;
      CHECK(resid.cwiseAbs().maxCoeff() < 1e-6 * std::max(1.0, scale));
    }
  }
}

TEST_CASE("rescaling the differential frame rescales the period blocks") {
  auto c = spread_sextic();
  auto m = periods::build_marking(c);
  auto pd = periods::periods(c, m);

  std::mt19937_64 rng(4711);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Mat2 g;
  do {
    g << cplx(u(rng), u(rng)), cplx(u(rng), u(rng)), cplx(u(rng), u(rng)), cplx(u(rng), u(rng));
  } while (std::abs(g.determinant()) < 0.3);
  Mat2 git = g.inverse().transpose();

  // first-kind numerators are 1 and x; combine them and the second-kind pair
  auto [n1, n2] = periods::eta_numerators(c);
  auto combine = [](cplx s, const std::vector<cplx>& p, cplx t, const std::vector<cplx>& q) {
    size_t n = std::max(p.size(), q.size());
    std::vector<cplx> out(n, cplx(0.0));
    for (size_t i = 0; i < p.size(); ++i) out[n - p.size() + i] += s * p[i];
    for (size_t i = 0; i < q.size(); ++i) out[n - q.size() + i] += t * q[i];
    return out;
  };
  std::vector<std::vector<cplx>> nums = {
      combine(g(0, 0), {cplx(1.0)}, g(0, 1), {cplx(1.0), cplx(0.0)}),
      combine(g(1, 0), {cplx(1.0)}, g(1, 1), {cplx(1.0), cplx(0.0)}),
      combine(git(0, 0), n1, git(0, 1), n2),
      combine(git(1, 0), n1, git(1, 1), n2),
  };
  Eigen::MatrixXcd P = periods::loop_periods(c, m.loops, nums, 1e-11);
  Mat4 Pi2 = m.cycles.cast<double>().cast<cplx>() * P;

  Mat4 T = Mat4::Zero();
  T.block<2, 2>(0, 0) = g.transpose();
  T.block<2, 2>(2, 2) = g.inverse();
  double scale = pd.Pi.cwiseAbs().maxCoeff();
  CHECK((Pi2 - pd.Pi * T).cwiseAbs().maxCoeff() < 1e-9 * std::max(1.0, scale));

  // the rescaled frame is still dual, so the bilinear identity is unchanged
  Mat4 R = Pi2 * periods::J4c() * Pi2.transpose() - kTwoPiI * periods::J4c();
  CHECK(R.cwiseAbs().maxCoeff() < 1e-7 * std::max(1.0, scale * scale));
}
