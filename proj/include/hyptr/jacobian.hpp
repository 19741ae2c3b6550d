#pragma once

#include "hyptr/periods.hpp"
#include "hyptr/theta.hpp"

namespace hyptr::jacobian {

struct OnThetaDivisor : std::runtime_error {
  explicit OnThetaDivisor(const std::string& w) : std::runtime_error(w) {}
};
struct WeierstrassPointLimit : std::runtime_error {
  explicit WeierstrassPointLimit(const std::string& w) : std::runtime_error(w) {}
};

// point of the quintic model y^2 = f(x); sheet records which square root of
// f(x) the y value is (+1 for the principal one)
struct CurvePoint {
  cplx x = 0.0;
  cplx y = 0.0;
  int sheet = 1;
  bool at_infinity = false;
};

CurvePoint infinity_point();
// builds the point over x on the requested sheet; throws std::invalid_argument
// off the curve model
CurvePoint curve_point(const curve::HyperellipticCurve& c, cplx x, int sheet);
// (x, y) -> (x, -y)
CurvePoint involution(const CurvePoint& p);

// image on the Jacobian: u is the raw integral of the holomorphic pair along
// a tracked path from the base point (infinity), v the normalized coordinate
// whose lattice is Z^2 + tau Z^2, v_reduced the representative with basis
// coefficients in [-1/2, 1/2]
struct JacobianPoint {
  Vec2 u = Vec2::Zero();
  Vec2 v = Vec2::Zero();
  Vec2 v_reduced = Vec2::Zero();
};

// representative of v modulo Z^2 + tau Z^2 with both lattice coefficients
// rounded to [-1/2, 1/2]
Vec2 reduce_normalized(const Vec2& v, const Mat2& tau);

JacobianPoint abel_jacobi(const CurvePoint& p, const periods::PeriodData& pd,
                          double tol = 1e-11);
// image of the unordered pair (sum of the single-point images)
JacobianPoint abel_jacobi(const CurvePoint& p1, const CurvePoint& p2,
                          const periods::PeriodData& pd, double tol = 1e-11);

// constants entering sigma and its log-derivatives, computed once per frame
struct SigmaFrame {
  Mat2 Q;      // quasi-period matrix PiA(omega)^{-1} PiA(eta)
  Mat2 WAinv;  // PiA(omega)^{-1}
  Mat2 tau;
  theta::Char delta;  // odd base characteristic of the branch dictionary
};
SigmaFrame sigma_frame(const periods::PeriodData& pd);

// two-variable sigma: exponential-quadratic prefactor times theta with the
// odd base characteristic; odd in u, vanishes exactly on the curve image
cplx sigma(const Vec2& u, const SigmaFrame& fr);
cplx sigma(const Vec2& u, const periods::PeriodData& pd);

// second and third log-derivatives of sigma with the opposite sign,
// second(i, j) = -d_i d_j log sigma, third[k] = d/du_k of second
struct WpValues {
  Mat2 second;
  std::array<Mat2, 2> third;
};
WpValues wp(const Vec2& u, const SigmaFrame& fr);
WpValues wp(const Vec2& u, const periods::PeriodData& pd);

// recovers (x, y) of a non-branch finite point from ratios of the
// log-derivatives along a limit onto the curve image
std::pair<cplx, cplx> restrict_to_curve(const CurvePoint& p, const periods::PeriodData& pd,
                                        double tol = 1e-11);

}  // namespace hyptr::jacobian
