#include "hyptr/jacobian.hpp"

#include <algorithm>
#include <cmath>

namespace hyptr::jacobian {

namespace {

double spread(const curve::HyperellipticCurve& c) { return std::max(c.root_spread(), 1.0); }

}  // namespace

CurvePoint infinity_point() {
  CurvePoint p;
  p.at_infinity = true;
  return p;
}

CurvePoint curve_point(const curve::HyperellipticCurve& c, cplx x, int sheet) {
  if (c.model != curve::Model::Quintic)
    throw std::invalid_argument("curve points live on the odd-degree model");
  if (sheet != 1 && sheet != -1) throw std::invalid_argument("sheet must be +1 or -1");
  CurvePoint p;
  p.x = x;
  p.y = static_cast<double>(sheet) * std::sqrt(num::polyval(c.coeffs, x));
  p.sheet = sheet;
  return p;
}

CurvePoint involution(const CurvePoint& p) {
  CurvePoint q = p;
  q.y = -q.y;
  q.sheet = -q.sheet;
  return q;
}

Vec2 reduce_normalized(const Vec2& v, const Mat2& tau) {
  Eigen::Matrix2d Y;
  double off = 0.5 * (tau(0, 1) + tau(1, 0)).imag();
  Y << tau(0, 0).imag(), off, off, tau(1, 1).imag();
  Eigen::Vector2d n = Y.inverse() * Eigen::Vector2d(v(0).imag(), v(1).imag());
  Vec2 w = v - tau * Vec2(std::round(n(0)), std::round(n(1)));
  w(0) -= std::round(w(0).real());
  w(1) -= std::round(w(1).real());
  return w;
}

JacobianPoint abel_jacobi(const CurvePoint& p, const periods::PeriodData& pd, double tol) {
  JacobianPoint J;
  if (!p.at_infinity) {
    J.u = periods::abel_integral(pd.curve, p.x, p.y, tol);
    J.v = pd.PiA_omega().transpose().inverse() * J.u;
  }
  J.v_reduced = reduce_normalized(J.v, pd.tau);
  return J;
}

JacobianPoint abel_jacobi(const CurvePoint& p1, const CurvePoint& p2,
                          const periods::PeriodData& pd, double tol) {
  JacobianPoint a = abel_jacobi(p1, pd, tol), b = abel_jacobi(p2, pd, tol);
  JacobianPoint J;
  J.u = a.u + b.u;
  J.v = a.v + b.v;
  J.v_reduced = reduce_normalized(J.v, pd.tau);
  return J;
}

SigmaFrame sigma_frame(const periods::PeriodData& pd) {
  SigmaFrame fr;
  fr.Q = pd.quasi_period_matrix();
  fr.WAinv = pd.PiA_omega().inverse();
  fr.tau = pd.tau;
  fr.delta = theta::riemann_constant(pd);
  return fr;
}

cplx sigma(const Vec2& u, const SigmaFrame& fr) {
  Vec2 v = fr.WAinv.transpose() * u;
  cplx quad = u.transpose() * fr.Q * u;
  return std::exp(-0.5 * quad) * theta::theta(fr.delta, v, fr.tau).value;
}

cplx sigma(const Vec2& u, const periods::PeriodData& pd) { return sigma(u, sigma_frame(pd)); }

WpValues wp(const Vec2& u, const SigmaFrame& fr) {
  Vec2 v = fr.WAinv.transpose() * u;
  theta::ThetaValue tv = theta::theta(fr.delta, v, fr.tau, 3);
  if (std::abs(tv.value) <= 1e-8 * tv.gradient.norm())
    throw OnThetaDivisor("log-derivatives requested on the sigma divisor");

  cplx th = tv.value;
  Mat2 L2 = tv.hessian / th - (tv.gradient * tv.gradient.transpose()) / (th * th);

  WpValues out;
  out.second = fr.Q - fr.WAinv * L2 * fr.WAinv.transpose();

  auto L3 = [&](int a, int b, int c) {
    return tv.third[static_cast<size_t>(c)](a, b) / th -
           (tv.hessian(a, b) * tv.gradient(c) + tv.hessian(a, c) * tv.gradient(b) +
            tv.hessian(b, c) * tv.gradient(a)) /
               (th * th) +
           2.0 * tv.gradient(a) * tv.gradient(b) * tv.gradient(c) / (th * th * th);
  };
  for (int k = 0; k < 2; ++k) {
    Mat2 t;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        cplx acc = 0.0;
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
              acc += fr.WAinv(i, a) * fr.WAinv(j, b) * fr.WAinv(k, c) * L3(a, b, c);
        t(i, j) = -acc;
      }
    out.third[static_cast<size_t>(k)] = t;
  }
  return out;
}

WpValues wp(const Vec2& u, const periods::PeriodData& pd) { return wp(u, sigma_frame(pd)); }

std::pair<cplx, cplx> restrict_to_curve(const CurvePoint& p, const periods::PeriodData& pd,
                                        double tol) {
  if (p.at_infinity)
    throw WeierstrassPointLimit("the recovery ratios degenerate at the base point");
  double sp = spread(pd.curve);
  for (const cplx& r : pd.curve.roots)
    if (std::abs(p.x - r) < 1e-6 * sp)
      throw WeierstrassPointLimit("the recovery ratios degenerate at a ramification point");

  SigmaFrame fr = sigma_frame(pd);
  JacobianPoint jp = abel_jacobi(p, pd, tol);

  // push the auxiliary point to the base point along a ray; the recovery
  // ratios expand in the uniformizer x^{-1/2}, halved at every step.  The
  // denominator here is p222 alone: in this frame p222 = 2(y1-y2)/(x1-x2)
  constexpr int M = 6;
  std::array<cplx, M> xs{}, ys{};
  bool done = false;
  for (int angle = 0; angle < 5 && !done; ++angle) {
    double th = 0.7 + 1.07 * angle;
    try {
      for (int m = 0; m < M; ++m) {
        cplx A = 60.0 * sp * std::pow(4.0, m) * std::polar(1.0, th);
        auto [aux, yA] = periods::ray_integral(pd.curve, A, tol);
        (void)yA;
        WpValues w = wp(Vec2(jp.u + aux), fr);
        cplx p11 = w.second(0, 0), p12 = w.second(0, 1), p22 = w.second(1, 1);
        cplx p222 = w.third[1](1, 1);
        xs[static_cast<size_t>(m)] = -p12 / p22;
        ys[static_cast<size_t>(m)] = -(p11 * p22 - p12 * p12) / p222;
      }
      done = true;
    } catch (const OnThetaDivisor&) {
      continue;
    } catch (const periods::PathThroughBranchPoint&) {
      continue;
    } catch (const num::QuadratureFailure&) {
      continue;
    }
  }
  if (!done) throw num::QuadratureFailure("no usable auxiliary ray for the restriction limit");

  auto richardson = [](std::array<cplx, M> t) {
    for (int k = 1; k < M; ++k) {
      double w = std::pow(2.0, k);
      for (int m = 0; m + k < M; ++m) t[static_cast<size_t>(m)] =
          (w * t[static_cast<size_t>(m + 1)] - t[static_cast<size_t>(m)]) / (w - 1.0);
    }
    return t[0];
  };
  return {richardson(xs), richardson(ys)};
}

}  // namespace hyptr::jacobian
