#include "hyptr/periods.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace hyptr::periods {

using curve::HyperellipticCurve;
using curve::Model;

namespace {

using NumList = std::vector<std::vector<cplx>>;

// lead * prod_{k != skip1, skip2} (X - r_k): the square of Y with the
// segment-endpoint factors removed
cplx reduced_poly(const HyperellipticCurve& c, cplx X, int skip1, int skip2) {
  cplx p = c.lead();
  for (int k = 0; k < static_cast<int>(c.roots.size()); ++k) {
    if (k == skip1 || k == skip2) continue;
    p *= X - c.roots[k];
  }
  return p;
}

double spread(const HyperellipticCurve& c) { return std::max(c.root_spread(), 1.0); }

double segment_distance(cplx p, cplx a, cplx b) {
  cplx d = b - a;
  double t = std::clamp(((p - a) / d).real(), 0.0, 1.0);
  return std::abs(p - (a + t * d));
}

// distance of the nearest non-endpoint branch point to the segment, relative
// to the root spread
double segment_clearance(const HyperellipticCurve& c, cplx a, cplx b, int skip1, int skip2) {
  double m = std::numeric_limits<double>::infinity();
  for (int k = 0; k < static_cast<int>(c.roots.size()); ++k) {
    if (k == skip1 || k == skip2) continue;
    m = std::min(m, segment_distance(c.roots[static_cast<size_t>(k)], a, b));
  }
  return m / spread(c);
}

bool segment_clear(const HyperellipticCurve& c, cplx a, cplx b, int skip1, int skip2,
                   double rel) {
  return segment_clearance(c, a, b, skip1, skip2) >= rel;
}

NumList omega_numerators() { return {{cplx(1.0)}, {cplx(1.0), cplx(0.0)}}; }

NumList all_numerators(const HyperellipticCurve& c) {
  auto [eta1, eta2] = eta_numerators(c);
  return {{cplx(1.0)}, {cplx(1.0), cplx(0.0)}, eta1, eta2};
}

// integrals of N(X) dX / (2Y) over the straight segment roots[ia] -> roots[ib],
// on the sheet fixed by principal square roots at the start
Eigen::VectorXcd segment_integrals(const HyperellipticCurve& c, int ia, int ib,
                                   const NumList& nums, double tol) {
  cplx ra = c.roots[static_cast<size_t>(ia)];
  cplx d = c.roots[static_cast<size_t>(ib)] - ra;
  if (!segment_clear(c, ra, ra + d, ia, ib, 1e-8))
    throw PathThroughBranchPoint("branch point too close to an integration segment");
  // (X - ra)(X - rb) = -t(1-t) d^2; use the square root i d sqrt(t(1-t))
  cplx cfac = kI * d;
  num::SqrtTracker s([&](double t) { return reduced_poly(c, ra + t * d, ia, ib); },
                     std::sqrt(reduced_poly(c, ra, ia, ib)));
  Eigen::VectorXcd out(static_cast<Eigen::Index>(nums.size()));
  for (size_t j = 0; j < nums.size(); ++j) {
    auto f = [&](double t) {
      cplx X = ra + t * d;
      return num::polyval(nums[j], X) * d / (2.0 * cfac * std::sqrt(t * (1.0 - t)) * s(t));
    };
    auto r = num::integrate01_adaptive(f, true, true, tol);
    if (!r.converged) throw num::QuadratureFailure("segment period integral did not converge");
    out(static_cast<Eigen::Index>(j)) = r.value;
  }
  return out;
}

// integrals of N(X) dX / (2Y) from branch point roots[ia] to a finite regular
// point T (substitution X = ra + u^2 (T - ra)); reports Y at T on the sheet
struct LegResult {
  Eigen::VectorXcd values;
  cplx y_end;
};

LegResult branch_to_point(const HyperellipticCurve& c, int ia, cplx T, const NumList& nums,
                          double tol) {
  cplx ra = c.roots[static_cast<size_t>(ia)];
  cplx d = T - ra;
  if (!segment_clear(c, ra, T, ia, -1, 1e-8))
    throw PathThroughBranchPoint("branch point too close to an integration segment");
  cplx w = std::sqrt(d);
  num::SqrtTracker s([&](double u) { return reduced_poly(c, ra + u * u * d, ia, -1); },
                     std::sqrt(reduced_poly(c, ra, ia, -1)));
  LegResult out;
  out.values.resize(static_cast<Eigen::Index>(nums.size()));
  for (size_t j = 0; j < nums.size(); ++j) {
    auto f = [&](double u) {
      cplx X = ra + u * u * d;
      return num::polyval(nums[j], X) * d / (w * s(u));
    };
    auto r = num::integrate01_adaptive(f, false, false, tol);
    if (!r.converged) throw num::QuadratureFailure("branch leg integral did not converge");
    out.values(static_cast<Eigen::Index>(j)) = r.value;
  }
  out.y_end = w * s(1.0);
  return out;
}

// integrals of the holomorphic pair from infinity to a finite regular point A
// along the ray through A, quintic model (substitution x = A / u^2); reports
// y at A on the sheet
LegResult infinity_to_point(const HyperellipticCurve& c, cplx A, double tol) {
  for (const auto& r : c.roots) {
    cplx q = r / A;
    if (std::abs(q.imag()) * std::abs(A) < 1e-8 * spread(c) && q.real() >= 1.0)
      throw PathThroughBranchPoint("branch point too close to the ray from infinity");
  }
  // f(x) / x^5 = sum_j b_j (u^2 / A)^j, nonzero at u = 0
  auto g = [&](double u) {
    cplx z = u * u / A;
    cplx p = 0.0;
    for (size_t j = 0; j <= 5; ++j) p = p * z + c.coeffs[5 - j];
    return p;
  };
  cplx wA = std::sqrt(A);
  num::SqrtTracker s(g, std::sqrt(c.coeffs[0]));
  LegResult out;
  out.values.resize(2);
  // dx = -2 A u^{-3} du and 1/(2y) = u^5 / (2 A^{5/2} sqrt(g))
  auto f1 = [&](double u) { return -u * u / (wA * wA * wA * s(u)); };
  auto f2 = [&](double u) { return -1.0 / (wA * s(u)); };
  auto r1 = num::integrate01_adaptive(f1, false, false, tol);
  auto r2 = num::integrate01_adaptive(f2, false, false, tol);
  if (!r1.converged || !r2.converged)
    throw num::QuadratureFailure("leg from infinity did not converge");
  out.values(0) = r1.value;
  out.values(1) = r2.value;
  out.y_end = std::pow(wA, 5) * s(1.0);
  return out;
}

// integrals of N(X) dX / (2Y) between regular points along the straight
// segment, with Y tracked from its start value; reports Y at the end
LegResult regular_segment(const HyperellipticCurve& c, cplx S, cplx yS, cplx T,
                          const NumList& nums, double tol) {
  if (!segment_clear(c, S, T, -1, -1, 1e-8))
    throw PathThroughBranchPoint("branch point too close to an integration segment");
  cplx d = T - S;
  num::SqrtTracker s([&](double t) { return num::polyval(c.coeffs, S + t * d); }, yS);
  LegResult out;
  out.values.resize(static_cast<Eigen::Index>(nums.size()));
  for (size_t j = 0; j < nums.size(); ++j) {
    auto f = [&](double t) {
      cplx X = S + t * d;
      return num::polyval(nums[j], X) * d / (2.0 * s(t));
    };
    auto r = num::integrate01_adaptive(f, false, false, tol);
    if (!r.converged) throw num::QuadratureFailure("segment leg integral did not converge");
    out.values(static_cast<Eigen::Index>(j)) = r.value;
  }
  out.y_end = s(1.0);
  return out;
}

// integer kernel vector of an integer matrix of corank one
Eigen::VectorXi integer_kernel(const Eigen::MatrixXi& G) {
  Eigen::MatrixXd Gd = G.cast<double>();
  Eigen::FullPivLU<Eigen::MatrixXd> lu(Gd);
  lu.setThreshold(1e-7);
  Eigen::MatrixXd K = lu.kernel();
  if (K.cols() != 1) throw MarkingFailure("loop lattice does not have a one-dimensional relation");
  Eigen::VectorXd v = K.col(0);
  double m = 0;
  for (int i = 0; i < v.size(); ++i)
    if (std::abs(v(i)) > 1e-6) m = (m == 0) ? std::abs(v(i)) : std::min(m, std::abs(v(i)));
  v /= m;
  Eigen::VectorXi vi(v.size());
  for (int i = 0; i < v.size(); ++i) {
    vi(i) = static_cast<int>(std::lround(v(i)));
    if (std::abs(v(i) - vi(i)) > 1e-6) throw MarkingFailure("loop relation vector is not integral");
  }
  if ((G * vi).cwiseAbs().maxCoeff() != 0)
    throw MarkingFailure("rounded relation vector is not in the kernel");
  return vi;
}

// unimodular U with U G U^T = J4 for an antisymmetric integer G of unit pfaffian
Mat4i symplectic_reduce(const Mat4i& G) {
  Mat4i U = Mat4i::Identity();
  auto form = [&]() { return Mat4i(U * G * U.transpose()); };

  // bring the minimal nonzero entry to +-1 by Euclidean row operations
  for (int guard = 0; guard < 64; ++guard) {
    Mat4i H = form();
    int bi = -1, bj = -1, m = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (H(i, j) != 0 && (m == 0 || std::abs(H(i, j)) < m)) {
          m = std::abs(H(i, j));
          bi = i;
          bj = j;
        }
    if (m == 0) throw MarkingFailure("degenerate intersection form");
    if (m == 1) break;
    bool progressed = false;
    for (int k = 0; k < 4 && !progressed; ++k) {
      if (k == bi || k == bj) continue;
      if (H(bi, k) % H(bi, bj) != 0) {
        U.row(k) -= (H(bi, k) / H(bi, bj)) * U.row(bj);
        progressed = true;
      } else if (H(bj, k) % H(bi, bj) != 0) {
        U.row(k) += (H(bj, k) / H(bi, bj)) * U.row(bi);
        progressed = true;
      }
    }
    if (!progressed) {
      int pk = -1;
      for (int k = 0; k < 4 && pk < 0; ++k)
        for (int l = k + 1; l < 4 && pk < 0; ++l)
          if (k != bi && k != bj && l != bi && l != bj && H(k, l) % m != 0) pk = k;
      if (pk < 0) throw MarkingFailure("intersection form has a non-unit divisor");
      U.row(bi) += U.row(pk);
    }
  }

  Mat4i H = form();
  int i0 = -1, j0 = -1;
  for (int i = 0; i < 4 && i0 < 0; ++i)
    for (int j = i + 1; j < 4 && i0 < 0; ++j)
      if (std::abs(H(i, j)) == 1) {
        i0 = i;
        j0 = j;
      }
  if (i0 < 0) throw MarkingFailure("no unimodular pairing found");
  if (H(i0, j0) == -1) std::swap(i0, j0);

  H = form();
  for (int k = 0; k < 4; ++k) {
    if (k == i0 || k == j0) continue;
    Eigen::RowVector4i nk = U.row(k) - H(k, j0) * U.row(i0) + H(k, i0) * U.row(j0);
    U.row(k) = nk;
  }
  H = form();
  int p = -1, q = -1;
  for (int k = 0; k < 4; ++k)
    if (k != i0 && k != j0) (p < 0 ? p : q) = k;
  if (std::abs(H(p, q)) != 1) throw MarkingFailure("second block pairing is not unimodular");
  if (H(p, q) == -1) std::swap(p, q);

  Mat4i out;
  out.row(0) = U.row(i0);
  out.row(1) = U.row(p);
  out.row(2) = U.row(j0);
  out.row(3) = U.row(q);
  if (Mat4i(out * G * out.transpose()) != J4i())
    throw MarkingFailure("symplectic reduction failed verification");
  return out;
}

}  // namespace

std::pair<std::vector<cplx>, std::vector<cplx>> eta_numerators(const HyperellipticCurve& c) {
  const auto& a = c.coeffs;
  if (c.model == Model::Sextic) {
    return {{4.0 * a[0], 3.0 * a[1], 2.0 * a[2], a[3], cplx(0.0)},
            {2.0 * a[0], a[1], cplx(0.0), cplx(0.0)}};
  }
  return {{3.0 * a[0], 2.0 * a[1], a[2], cplx(0.0)}, {a[0], cplx(0.0), cplx(0.0)}};
}

Eigen::MatrixXcd loop_periods(const HyperellipticCurve& c,
                              const std::vector<SegmentLoop>& loops, double tol) {
  return loop_periods(c, loops, all_numerators(c), tol);
}

Eigen::MatrixXcd loop_periods(const HyperellipticCurve& c, const std::vector<SegmentLoop>& loops,
                              const std::vector<std::vector<cplx>>& numerators, double tol) {
  Eigen::MatrixXcd P(static_cast<Eigen::Index>(loops.size()),
                     static_cast<Eigen::Index>(numerators.size()));
  for (size_t i = 0; i < loops.size(); ++i)
    P.row(static_cast<Eigen::Index>(i)) =
        2.0 * segment_integrals(c, loops[i].a, loops[i].b, numerators, tol).transpose();
  return P;
}

Marking build_marking(const HyperellipticCurve& c, int direction_hint) {
  int n = static_cast<int>(c.roots.size());
  int nloops = n - 1;

  // order the branch points along a generic direction and chain them; among
  // the sampled directions keep the chain whose segments stay farthest from
  // the remaining branch points
  std::vector<SegmentLoop> loops;
  double best_clear = -1.0;
  for (int shift = 0; shift < 12; ++shift) {
    int attempt = direction_hint + shift;
    cplx rot = std::polar(1.0, -0.449 * attempt);
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
      cplx a = rot * c.roots[static_cast<size_t>(i)];
      cplx b = rot * c.roots[static_cast<size_t>(j)];
      if (a.real() != b.real()) return a.real() < b.real();
      return a.imag() < b.imag();
    });
    std::vector<SegmentLoop> cand;
    double clear = std::numeric_limits<double>::infinity();
    for (int i = 0; i + 1 < n; ++i) {
      int ia = order[static_cast<size_t>(i)], ib = order[static_cast<size_t>(i + 1)];
      clear = std::min(clear, segment_clearance(c, c.roots[static_cast<size_t>(ia)],
                                                c.roots[static_cast<size_t>(ib)], ia, ib));
      cand.push_back({ia, ib});
    }
    if (clear > best_clear) {
      best_clear = clear;
      loops = cand;
    }
  }
  if (best_clear < 1e-6)
    throw MarkingFailure("could not chain the branch points along a clear direction");

  Eigen::MatrixXcd P = loop_periods(c, loops, 1e-9);
  Eigen::MatrixXcd Gc = (P * J4c() * P.transpose()) / kTwoPiI;
  Eigen::MatrixXi G(nloops, nloops);
  for (int i = 0; i < nloops; ++i)
    for (int j = 0; j < nloops; ++j) {
      double re = Gc(i, j).real();
      G(i, j) = static_cast<int>(std::lround(re));
      if (std::abs(re - G(i, j)) > 1e-2 || std::abs(Gc(i, j).imag()) > 1e-2)
        throw MarkingFailure("pairing matrix of the loops is not near-integral");
    }
  if (G != Eigen::MatrixXi(-G.transpose()))
    throw MarkingFailure("pairing matrix of the loops is not antisymmetric");

  // a sextic chain of five loops carries one homology relation; a quintic
  // chain of four loops is already a basis
  std::vector<int> keep;
  if (nloops > 4) {
    Eigen::VectorXi rel = integer_kernel(G);
    int drop = -1;
    for (int i = 0; i < nloops; ++i)
      if (std::abs(rel(i)) == 1) {
        drop = i;
        break;
      }
    if (drop < 0) throw MarkingFailure("no loop with unit coefficient in the relation");
    for (int i = 0; i < nloops; ++i)
      if (i != drop) keep.push_back(i);
  } else {
    for (int i = 0; i < nloops; ++i) keep.push_back(i);
  }
  Mat4i G4;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      G4(i, j) = G(keep[static_cast<size_t>(i)], keep[static_cast<size_t>(j)]);

  Mat4i U = symplectic_reduce(G4);

  Marking m;
  m.loops = loops;
  m.cycles = Eigen::Matrix<int, 4, Eigen::Dynamic>::Zero(4, nloops);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m.cycles(i, keep[static_cast<size_t>(j)]) = U(i, j);
  m.intersection = J4i();
  return m;
}

PeriodData periods(const HyperellipticCurve& c, const Marking& m, double tol) {
  Eigen::MatrixXcd P = loop_periods(c, m.loops, tol);
  PeriodData pd;
  pd.curve = c;
  pd.marking = m;
  pd.Pi = m.cycles.cast<double>().cast<cplx>() * P;

  Mat4 R = pd.Pi * J4c() * pd.Pi.transpose() - kTwoPiI * J4c();
  double scale = pd.Pi.cwiseAbs().maxCoeff();
  if (R.cwiseAbs().maxCoeff() > 1e-6 * std::max(1.0, scale * scale))
    throw BilinearRelationViolated("period matrix fails the bilinear relations");

  Mat2 WA = pd.PiA_omega();
  pd.tau = pd.PiB_omega() * WA.inverse();
  if (std::abs(pd.tau(0, 1) - pd.tau(1, 0)) > 1e-7 * (1.0 + pd.tau.cwiseAbs().maxCoeff()))
    throw BilinearRelationViolated("period ratio matrix is not symmetric");
  Eigen::Matrix2d Yim;
  double off = 0.5 * (pd.tau(0, 1).imag() + pd.tau(1, 0).imag());
  Yim << pd.tau(0, 0).imag(), off, off, pd.tau(1, 1).imag();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(Yim);
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw BilinearRelationViolated("imaginary part of the period ratio is not positive");
  return pd;
}

PeriodData periods(const HyperellipticCurve& c, double tol) {
  return periods(c, build_marking(c), tol);
}

Mat2 PeriodData::quasi_period_matrix() const { return PiA_omega().inverse() * PiA_eta(); }

Mat2 PeriodData::nonholomorphic_shift() const {
  Mat2 WA = PiA_omega();
  Mat2 d = tau - tau.conjugate();
  return kTwoPiI * WA.inverse() * d.inverse() * WA.transpose().inverse();
}

RauchVariation rauch_variation(const HyperellipticCurve& c, const PeriodData& pd, int k) {
  if (c.model != Model::Quintic)
    throw ModelMismatch("root variation formulas require the odd-degree model");
  if (std::abs(c.lead() - cplx(1.0)) > 1e-12)
    throw ModelMismatch("root variation formulas require a monic model");
  if (k < 0 || k >= 5) throw std::out_of_range("root index");

  const auto& b = c.coeffs;
  cplx e = c.roots[static_cast<size_t>(k)];
  cplx fp = num::polyval(num::polyder(c.coeffs), e);
  cplx N1e = 3.0 * e * e * e + 2.0 * b[1] * e * e + b[2] * e;

  // Moving the root e with the cycles held fixed differentiates every column
  // integrand into g(x) dx / (4y (x - e)).  Subtracting the exact form
  // d[y/(x - e)] reduces the simple pole back onto the frame: dx/(2y(x - e))
  // has frame coordinates g = (-N1(e), -e^2, 1, e) / f'(e).
  Vec4 g(-N1e, -e * e, cplx(1.0), e);
  g /= fp;

  // dPi = Pi K.  Column j of K holds the frame coordinates of the derivative
  // of column j.  The e1 column also varies through b1 and b2, which
  // contributes -2x^2 - (b1 + e)x on top of the pole reduction.
  Mat4 K;
  K.col(0) = 0.5 * g;
  K.col(1) = 0.5 * e * g + Vec4(0.5, 0.0, 0.0, 0.0);
  K.col(2) = 0.5 * N1e * g + Vec4(0.5 * (3.0 * e * e + 2.0 * b[1] * e + b[2]), 0.5 * e,
                                  cplx(0.0), cplx(-0.5));
  K.col(3) = 0.5 * e * e * g + Vec4(0.5 * e, 0.5, 0.0, 0.0);

  RauchVariation out;
  out.k = k;
  out.dPi = pd.Pi * K;

  // dtau = (E_B - tau E_A) K21 W_A^{-1} with E_B - tau E_A = 2 pi i W_A^{-T}
  // and K21 = U U^T / (2 f'(e)), U = (1, e)^T.
  Mat2 WAi = pd.PiA_omega().inverse();
  Mat2 UU;
  UU << cplx(1.0), e, e, e * e;
  out.dtau = (0.5 * kTwoPiI / fp) * WAi.transpose() * UU * WAi;
  return out;
}

std::vector<Vec2> branch_abel_map(const HyperellipticCurve& c, double tol) {
  NumList nums = omega_numerators();
  int n = static_cast<int>(c.roots.size());
  std::vector<Vec2> phi(static_cast<size_t>(n));

  auto pair_integral = [&](int ia, int ib) -> Vec2 {
    cplx ra = c.roots[static_cast<size_t>(ia)], rb = c.roots[static_cast<size_t>(ib)];
    double direct = segment_clearance(c, ra, rb, ia, ib);
    if (direct > 0.02) {
      Eigen::VectorXcd v = segment_integrals(c, ia, ib, nums, tol);
      return Vec2(v(0), v(1));
    }
    for (int side = 0; side < 8; ++side) {
      double f = (side % 2 == 0 ? 1.0 : -1.0) * (0.4 + 0.25 * (side / 2));
      cplx M = 0.5 * (ra + rb) + f * kI * (rb - ra);
      try {
        LegResult l1 = branch_to_point(c, ia, M, nums, tol);
        LegResult l2 = branch_to_point(c, ib, M, nums, tol);
        cplx sgn = (std::abs(l2.y_end - l1.y_end) <= std::abs(l2.y_end + l1.y_end)) ? 1.0 : -1.0;
        Eigen::VectorXcd v = l1.values - sgn * l2.values;
        return Vec2(v(0), v(1));
      } catch (const PathThroughBranchPoint&) {
        continue;
      } catch (const num::QuadratureFailure&) {
        continue;
      }
    }
    if (direct > 1e-7) {
      // no waypoint worked; let the adaptive splitter fight the direct route
      Eigen::VectorXcd v = segment_integrals(c, ia, ib, nums, tol);
      return Vec2(v(0), v(1));
    }
    throw PathThroughBranchPoint("no clear detour between branch points");
  };

  if (c.model == Model::Sextic) {
    phi[0] = Vec2::Zero();
    for (int k = 1; k < n; ++k) phi[static_cast<size_t>(k)] = pair_integral(0, k);
    return phi;
  }

  double R = 0.0;
  for (auto r : c.roots) R = std::max(R, std::abs(r));
  for (int attempt = 0; attempt < 8; ++attempt) {
    cplx A = (3.0 + attempt) * std::max(R, 1.0) * std::polar(1.0, M_PI / 7 + 0.31 * attempt);
    try {
      LegResult head = infinity_to_point(c, A, tol);
      for (int k = 0; k < n; ++k) {
        LegResult leg = branch_to_point(c, k, A, nums, tol);
        cplx sgn =
            (std::abs(leg.y_end - head.y_end) <= std::abs(leg.y_end + head.y_end)) ? 1.0 : -1.0;
        Eigen::VectorXcd v = head.values - sgn * leg.values;
        phi[static_cast<size_t>(k)] = Vec2(v(0), v(1));
      }
      return phi;
    } catch (const PathThroughBranchPoint&) {
      continue;
    } catch (const num::QuadratureFailure&) {
      continue;
    }
  }
  throw PathThroughBranchPoint("no clear anchor for the leg from infinity");
}

std::pair<Vec2, cplx> ray_integral(const HyperellipticCurve& c, cplx A, double tol) {
  if (c.model != Model::Quintic)
    throw ModelMismatch("the base point at infinity needs the odd-degree model");
  LegResult leg = infinity_to_point(c, A, tol);
  return {Vec2(leg.values(0), leg.values(1)), leg.y_end};
}

Vec2 abel_integral(const HyperellipticCurve& c, cplx x, cplx y, double tol) {
  if (c.model != Model::Quintic)
    throw ModelMismatch("the base point at infinity needs the odd-degree model");
  cplx fx = num::polyval(c.coeffs, x);
  if (std::abs(y * y - fx) > 1e-9 * (std::abs(fx) + std::abs(y * y) + 1e-12))
    throw std::invalid_argument("point does not satisfy the curve equation");
  NumList nums = omega_numerators();

  double R = 1.0;
  for (auto r : c.roots) R = std::max(R, std::abs(r));
  R = std::max(R, std::abs(x));

  int kb = -1;
  for (int k = 0; k < 5; ++k)
    if (std::abs(x - c.roots[static_cast<size_t>(k)]) < 1e-10 * spread(c)) kb = k;
  if (kb >= 0) {
    // ramification target: the final leg starts at the root itself
    for (int attempt = 0; attempt < 12; ++attempt) {
      cplx A = (3.0 + attempt) * R * std::polar(1.0, M_PI / 7 + 0.31 * attempt);
      try {
        LegResult head = infinity_to_point(c, A, tol);
        LegResult leg = branch_to_point(c, kb, A, nums, tol);
        cplx sgn =
            (std::abs(leg.y_end - head.y_end) <= std::abs(leg.y_end + head.y_end)) ? 1.0 : -1.0;
        return Vec2(head.values(0) - sgn * leg.values(0), head.values(1) - sgn * leg.values(1));
      } catch (const PathThroughBranchPoint&) {
        continue;
      } catch (const num::QuadratureFailure&) {
        continue;
      }
    }
    throw PathThroughBranchPoint("no clear anchor for the leg from infinity");
  }

  // reflecting every sheet along the path fixes the base point and negates
  // the integral, so landing on -y just flips the sign
  auto match = [&](const Eigen::VectorXcd& vals, cplx y_end) -> Vec2 {
    double same = std::abs(y_end - y), flip = std::abs(y_end + y);
    if (std::min(same, flip) > 1e-5 * (std::abs(y) + std::abs(y_end) + 1e-12))
      throw num::QuadratureFailure("sheet tracking lost along the path");
    Vec2 v(vals(0), vals(1));
    return same <= flip ? v : Vec2(-v);
  };

  // ray straight through the target first
  try {
    LegResult leg = infinity_to_point(c, x, tol);
    return match(leg.values, leg.y_end);
  } catch (const PathThroughBranchPoint&) {
  } catch (const num::QuadratureFailure&) {
  }

  auto reach = [&](cplx A, cplx yA) -> LegResult {
    double direct = segment_clearance(c, A, x, -1, -1);
    if (direct > 0.02) return regular_segment(c, A, yA, x, nums, tol);
    for (int side = 0; side < 8; ++side) {
      double f = (side % 2 == 0 ? 1.0 : -1.0) * (0.4 + 0.25 * (side / 2));
      cplx M = 0.5 * (A + x) + f * kI * (x - A);
      try {
        LegResult l1 = regular_segment(c, A, yA, M, nums, tol);
        LegResult l2 = regular_segment(c, M, l1.y_end, x, nums, tol);
        l2.values += l1.values;
        return l2;
      } catch (const PathThroughBranchPoint&) {
        continue;
      } catch (const num::QuadratureFailure&) {
        continue;
      }
    }
    if (direct > 1e-7) return regular_segment(c, A, yA, x, nums, tol);
    throw PathThroughBranchPoint("no clear approach to the target point");
  };

  for (int attempt = 0; attempt < 12; ++attempt) {
    cplx A = (3.0 + attempt) * R * std::polar(1.0, M_PI / 7 + 0.31 * attempt);
    try {
      LegResult head = infinity_to_point(c, A, tol);
      LegResult tail = reach(A, head.y_end);
      return match(head.values + tail.values, tail.y_end);
    } catch (const PathThroughBranchPoint&) {
      continue;
    } catch (const num::QuadratureFailure&) {
      continue;
    }
  }
  throw PathThroughBranchPoint("no clear path from infinity to the point");
}

}  // namespace hyptr::periods
