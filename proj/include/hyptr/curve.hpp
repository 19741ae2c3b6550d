#pragma once

#include <array>
#include <utility>

#include "hyptr/numerics.hpp"

namespace hyptr::curve {

struct DegenerateDiscriminant : std::runtime_error {
  explicit DegenerateDiscriminant(const std::string& w) : std::runtime_error(w) {}
};
struct LeadingCoefficientZero : std::runtime_error {
  explicit LeadingCoefficientZero(const std::string& w) : std::runtime_error(w) {}
};
struct AZero : std::runtime_error {
  explicit AZero(const std::string& w) : std::runtime_error(w) {}
};
struct RootAtZero : std::runtime_error {
  explicit RootAtZero(const std::string& w) : std::runtime_error(w) {}
};
struct CoincidentShifts : std::runtime_error {
  explicit CoincidentShifts(const std::string& w) : std::runtime_error(w) {}
};
struct ZeroScale : std::runtime_error {
  explicit ZeroScale(const std::string& w) : std::runtime_error(w) {}
};

enum class Model { Sextic, Quintic };

// y^2 = F(x) with F of degree 6 (sextic, coeffs a0..a6) or 5 (quintic,
// coeffs b0..b5), descending powers, nonzero lead. roots holds the finite
// branch points sorted lexicographically by (Re, Im); the quintic has its
// sixth branch point at infinity.
struct HyperellipticCurve {
  Model model = Model::Sextic;
  std::vector<cplx> coeffs;
  std::vector<cplx> roots;

  int degree() const { return model == Model::Sextic ? 6 : 5; }
  cplx lead() const { return coeffs[0]; }
  cplx F(cplx x) const { return num::polyval(coeffs, x); }
  cplx dF(cplx x) const { return num::polyval(num::polyder(coeffs), x); }
  double root_spread() const;
};

// deterministic root order: companion-matrix eigenvalues, Newton-polished,
// sorted by (Re, Im)
std::vector<cplx> roots_of(const std::vector<cplx>& coeffs);

HyperellipticCurve curve_from_coeffs(Model model, std::vector<cplx> coeffs);
HyperellipticCurve curve_from_roots(Model model, cplx lead, std::vector<cplx> roots);

// A from its coefficient expansion; defined for any degree-6 coefficient list
cplx invariant_A(const std::vector<cplx>& sextic_coeffs);

struct BinaryInvariants {
  cplx A, B, C, D;
};
BinaryInvariants binary_invariants(const HyperellipticCurve& sextic);

struct AbsoluteInvariants {
  cplx j1, j2, j3;
};
AbsoluteInvariants absolute_invariants(const BinaryInvariants& I);

// X = r0 (x + c1)/(x + c2),  Y = kappa y / (x + c2)^3,  kappa^2 = K / b0,
// K = a0 r0 (c1 - c2) prod_{k=1..5} (r0 - r_k).
// r[0..5] is the branch-point ordering used to build the map; e[k-1] is the
// quintic image of r[k].
struct CoordinateMap {
  std::array<cplx, 6> r{};
  std::array<cplx, 5> e{};
  cplx c1{}, c2{}, K{}, b0{1.0}, kappa{};

  cplx X_of_x(cplx x) const { return r[0] * (x + c1) / (x + c2); }
  cplx x_of_X(cplx X) const { return (r[0] * c1 - c2 * X) / (X - r[0]); }
  std::pair<cplx, cplx> to_sextic(cplx x, cplx y) const {
    cplx d = x + c2;
    return {X_of_x(x), kappa * y / (d * d * d)};
  }
  std::pair<cplx, cplx> to_quintic(cplx X, cplx Y) const {
    cplx x = x_of_X(X);
    cplx d = x + c2;
    return {x, Y * d * d * d / kappa};
  }
};

// kills the branch point r[ordering[0]] to infinity; b0 = 1
std::pair<HyperellipticCurve, CoordinateMap> sextic_to_quintic(
    const HyperellipticCurve& sextic, cplx c1, cplx c2,
    const std::array<int, 6>& ordering = {0, 1, 2, 3, 4, 5});

// x -> s^2 x + r, y -> s^5 y; preserves b0
struct QuinticScaling {
  cplx s, r;
  std::pair<cplx, cplx> forward(cplx x, cplx y) const;   // new coords of an old point
  std::pair<cplx, cplx> backward(cplx x, cplx y) const;
};
std::pair<HyperellipticCurve, QuinticScaling> quintic_normalize(
    const HyperellipticCurve& quintic, cplx s, cplx r);

struct RosenhainForm {
  HyperellipticCurve quintic;      // y^2 = x (x-1) (x-l1) (x-l2) (x-l3)
  std::array<cplx, 3> lambdas;
  CoordinateMap map;
  std::array<int, 6> ordering;
};
RosenhainForm to_rosenhain(const HyperellipticCurve& sextic,
                           const std::array<int, 6>& ordering);

// re-embeds a quintic as a sextic via x = w + 1/X (so x = infinity lands at
// X = 0); w must avoid the branch points
HyperellipticCurve sextic_from_quintic(const HyperellipticCurve& quintic, cplx w);

// X -> (p X + q)/(u X + v) acting on a sextic model
HyperellipticCurve sextic_moebius(const HyperellipticCurve& sextic,
                                  cplx p, cplx q, cplx u, cplx v);

}  // namespace hyptr::curve
