#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "hyptr/periods.hpp"

namespace hyptr::theta {

struct NotInSiegelSpace : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CharacteristicResolutionFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DenominatorVanishes : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Theta characteristic (a, b). Everything this library produces has entries
// in multiples of 1/2, but the lattice sum accepts arbitrary real (a, b);
// shifting an entry by an integer changes theta by a sign at most.
struct Char {
  Eigen::Vector2d a = Eigen::Vector2d::Zero();
  Eigen::Vector2d b = Eigen::Vector2d::Zero();

  // label xyzw (one bit each): a = (x, y)/2, b = (z, w)/2
  static Char from_bits(int xyzw);
  int bits() const;      // label of the reduced representative
  Char reduced() const;  // congruent mod 1, entries in {0, 1/2}
  int parity() const;    // 4 a.b mod 2 of the reduced representative
  bool is_even() const { return parity() == 0; }
};

Char operator+(const Char& l, const Char& r);
Char operator-(const Char& l, const Char& r);

// the 10 even / 6 odd half-integer characteristics, ascending label order
const std::array<Char, 10>& even_characteristics();
const std::array<Char, 6>& odd_characteristics();

struct ThetaValue {
  cplx value{};
  Vec2 gradient = Vec2::Zero();
  Mat2 hessian = Mat2::Zero();
  // third[k](i, j) = d_i d_j d_k theta; filled for derivs >= 3
  std::array<Mat2, 2> third = {Mat2::Zero(), Mat2::Zero()};
  int trunc_radius = 0;
};

// Lattice sum for theta[(a,b)](v, tau) with term-wise v-derivatives up to
// order `derivs` (0..3). The sum is centered on the dominant lattice point
// and truncated so the tail is below 1e-14 at unit scale.
ThetaValue theta(const Char& ch, const Vec2& v, const Mat2& tau, int derivs = 0);

// values at v = 0 for the ten even characteristics, in label order
std::array<cplx, 10> theta_constants(const Mat2& tau);

// scalar Siegel forms of weight 4, 6, 10, 12 from theta constants
struct CuspForms {
  cplx e4, e6, chi10, chi12;
};
CuspForms cusp_forms(const Mat2& tau);

// weight-zero invariants (e4 chi10^2/chi12^2, e6 chi10^3/chi12^3, chi10^6/chi12^5);
// for the Jacobian of a curve these equal the curve's absolute invariants
std::array<cplx, 3> modular_invariants(const Mat2& tau);

// branch-point ratios of the degree-five model with roots (0, 1, l1, l2, l3),
// as squares of theta-constant ratios; defined up to the level-two Galois
// action on the marking
std::array<cplx, 3> rosenhain_lambdas(const Mat2& tau);

// characteristic (a, b) of a normalized half-period v = tau a + b;
// throws CharacteristicResolutionFailed if v is farther than tol from the
// half-lattice
Char characteristic_of(const Vec2& v, const Mat2& tau, double tol = 1e-7);

// Abel images of the finite branch points as characteristics (normalized
// coordinates of branch_abel_map values)
std::vector<Char> branch_characteristics(const periods::PeriodData& pd);

// The odd characteristic delta for which every non-base branch
// characteristic minus delta is odd and every pairwise branch sum minus
// delta is even; this shift carries the pairwise sums bijectively onto the
// ten even characteristics. Works for both models (quintic base at
// infinity, sextic base at the first root); unique by construction, else
// CharacteristicResolutionFailed.
Char riemann_constant(const periods::PeriodData& pd);

// quasi-period matrix PiA(omega)^{-1} PiA(eta) from theta hessians at the
// ten shifted pairwise branch half-periods (sextic model, any leading
// coefficient)
Mat2 quasi_period_theta(const periods::PeriodData& pd);

// A-period matrix of the holomorphic frame from theta gradients and
// constants (monic quintic). choice = (k, l, p, q, r) is a permutation of
// the root indices 0..4. The theta phase system determines each gradient
// column only up to a fourth root of unity; both phases are resolved
// against the marking, so distinct choices return the same matrix.
Mat2 period_theta(const periods::PeriodData& pd, const std::array<int, 5>& choice);

}  // namespace hyptr::theta
