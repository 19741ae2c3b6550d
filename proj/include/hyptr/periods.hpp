#pragma once

#include "hyptr/curve.hpp"

namespace hyptr::periods {

struct BilinearRelationViolated : std::runtime_error {
  explicit BilinearRelationViolated(const std::string& w) : std::runtime_error(w) {}
};
struct ModelMismatch : std::runtime_error {
  explicit ModelMismatch(const std::string& w) : std::runtime_error(w) {}
};
struct MarkingFailure : std::runtime_error {
  explicit MarkingFailure(const std::string& w) : std::runtime_error(w) {}
};
struct PathThroughBranchPoint : std::runtime_error {
  explicit PathThroughBranchPoint(const std::string& w) : std::runtime_error(w) {}
};

inline Mat4i J4i() {
  Mat4i J;
  J << 0, 0, 1, 0,
       0, 0, 0, 1,
      -1, 0, 0, 0,
       0, -1, 0, 0;
  return J;
}
inline Mat4 J4c() { return J4i().cast<double>().cast<cplx>(); }

// loop around the straight segment joining two branch points (root indices)
struct SegmentLoop {
  int a, b;
};

// Homology data. cycles has rows (A1, A2, B1, B2) expressed as integer
// combinations of the segment loops; their intersection matrix is exactly J4,
// i.e. <A_i, B_j> = +delta_ij in the surface orientation.
struct Marking {
  std::vector<SegmentLoop> loops;
  Eigen::Matrix<int, 4, Eigen::Dynamic> cycles;
  Mat4i intersection;
};

// Periods of the holomorphic pair (dx/2y, x dx/2y) and the dual second-kind
// pair. Pi rows are cycles (A1, A2, B1, B2), columns are differentials
// (omega1, omega2, eta1, eta2); tau = PiB(omega) PiA(omega)^{-1}. This row
// order is the one for which Pi J4 Pi^t = 2 pi i J4 and Im tau > 0 hold
// together (the Legendre relation fixes the coupling; putting the B rows
// first would flip the sign of the bilinear identity).
struct PeriodData {
  curve::HyperellipticCurve curve;
  Marking marking;
  Mat4 Pi;
  Mat2 tau;

  Mat2 PiA_omega() const { return Pi.block<2, 2>(0, 0); }
  Mat2 PiA_eta() const { return Pi.block<2, 2>(0, 2); }
  Mat2 PiB_omega() const { return Pi.block<2, 2>(2, 0); }
  Mat2 PiB_eta() const { return Pi.block<2, 2>(2, 2); }

  // PiA(omega)^{-1} PiA(eta); symmetric by the bilinear relations
  Mat2 quasi_period_matrix() const;
  // 2 pi i PiA(omega)^{-1} (tau - conj(tau))^{-1} PiA(omega)^{-T};
  // added to the quasi-period matrix it is invariant under marking change
  Mat2 nonholomorphic_shift() const;
};

// numerators of the second-kind pair for the model, descending coefficients
std::pair<std::vector<cplx>, std::vector<cplx>> eta_numerators(const curve::HyperellipticCurve& c);

// periods of the four differentials over each loop (rows = loops)
Eigen::MatrixXcd loop_periods(const curve::HyperellipticCurve& c,
                              const std::vector<SegmentLoop>& loops, double tol);

// same, for differentials p(x) dx / (2y) with caller-supplied polynomial
// numerators (descending coefficients); columns follow the argument order
Eigen::MatrixXcd loop_periods(const curve::HyperellipticCurve& c,
                              const std::vector<SegmentLoop>& loops,
                              const std::vector<std::vector<cplx>>& numerators, double tol);

// direction_hint selects among the candidate chaining directions for the
// branch points, giving genuinely different (but equivalent) markings
Marking build_marking(const curve::HyperellipticCurve& c, int direction_hint = 0);
PeriodData periods(const curve::HyperellipticCurve& c, const Marking& m, double tol = 1e-11);
PeriodData periods(const curve::HyperellipticCurve& c, double tol = 1e-11);

// d/d(root k) of Pi (same row/column layout as PeriodData.Pi) for a monic
// quintic with fixed other roots, and the induced variation of tau
struct RauchVariation {
  int k;
  Mat4 dPi;
  Mat2 dtau;
};
RauchVariation rauch_variation(const curve::HyperellipticCurve& quintic,
                               const PeriodData& pd, int k);

// Abel images of the finite branch points under the holomorphic pair.
// Sextic: base point roots[0], entries for roots[0..5] (first is zero).
// Quintic: base point at infinity, entries for roots[0..4].
// Each value is one concrete path choice; only its class modulo periods and
// an overall sign is geometric.
std::vector<Vec2> branch_abel_map(const curve::HyperellipticCurve& c, double tol = 1e-11);

// integral of the holomorphic pair from infinity to the end of the ray
// x = A / u^2, u in (0, 1], and the y value the tracked sheet reaches at
// x = A (quintic model)
std::pair<Vec2, cplx> ray_integral(const curve::HyperellipticCurve& c, cplx A,
                                   double tol = 1e-11);

// integral of the holomorphic pair from infinity to the point (x, y) along a
// tracked path staying clear of the branch points (quintic model); exact
// modulo the period lattice, and the sign is resolved so the path ends on
// the sheet of y
Vec2 abel_integral(const curve::HyperellipticCurve& c, cplx x, cplx y, double tol = 1e-11);

}  // namespace hyptr::periods
