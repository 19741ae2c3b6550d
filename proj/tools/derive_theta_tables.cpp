// Offline derivation of the frozen tables in src/theta_tables.cpp.
//
// The weight-six form is a signed sum of fourth powers of theta-constant
// triple products.  Fourth powers of even theta constants satisfy linear
// relations, so pointwise fits determine the coefficient vector only up to
// the relation space; this tool finds a +-1 vector inside the affine
// solution set by alternating projection and then verifies the result
// globally.  Anchor values come from three independent sources: diagonal
// period matrices (where the form factors into elliptic Eisenstein series),
// symplectic transport of those diagonals, and period matrices of random
// sextic curves (where the absolute-invariant match supplies the value).
// The weight-twelve prefactor is calibrated first, sign-free, from the
// third absolute invariant.
//
// Usage: derive_theta_tables > src/theta_tables.cpp   (diagnostics on stderr)

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include <Eigen/Dense>

#include "hyptr/curve.hpp"
#include "hyptr/periods.hpp"
#include "hyptr/theta.hpp"

using hyptr::cplx;
using hyptr::kI;
using hyptr::kPi;
using hyptr::kTwoPiI;
using hyptr::Mat2;
using hyptr::Mat4i;
namespace theta = hyptr::theta;
namespace curve = hyptr::curve;
namespace periods = hyptr::periods;

namespace {

// ---------------------------------------------------------------- genus one

// theta constants with characteristics [1/2,0], [0,0], [0,1/2]
std::array<cplx, 3> theta1_constants(cplx tau) {
  cplx t2 = 0.0, t3 = 0.0, t4 = 0.0;
  for (int n = -40; n <= 40; ++n) {
    cplx q3 = std::exp(kPi * kI * tau * static_cast<double>(n) * static_cast<double>(n));
    double h = n + 0.5;
    t2 += std::exp(kPi * kI * tau * h * h);
    t3 += q3;
    t4 += (n & 1) ? -q3 : q3;
  }
  return {t2, t3, t4};
}

cplx e4_genus1(cplx tau) {
  auto [t2, t3, t4] = theta1_constants(tau);
  auto p8 = [](cplx z) {
    cplx z2 = z * z, z4 = z2 * z2;
    return z4 * z4;
  };
  return 0.5 * (p8(t2) + p8(t3) + p8(t4));
}

cplx e6_genus1(cplx tau) {
  cplx q = std::exp(kTwoPiI * tau);
  cplx sum = 1.0, qn = 1.0;
  for (int n = 1; n <= 40; ++n) {
    qn *= q;
    double s5 = 0.0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) s5 += std::pow(static_cast<double>(d), 5);
    sum -= 504.0 * s5 * qn;
  }
  return sum;
}

// -------------------------------------------------------------- Sp4 actions

Mat4i sp_S() {
  Mat4i g = Mat4i::Zero();
  g(0, 2) = g(1, 3) = 1;
  g(2, 0) = g(3, 1) = -1;
  return g;
}

Mat4i sp_T(int which, int sign) {
  Mat4i g = Mat4i::Identity();
  if (which == 0) g(0, 2) = sign;
  if (which == 1) g(1, 3) = sign;
  if (which == 2) g(0, 3) = g(1, 2) = sign;
  return g;
}

struct Transported {
  Mat2 tau;
  cplx jfac;  // det(C tau + D)
  bool ok;
};

Transported transport(const Mat4i& g, const Mat2& tau) {
  Mat2 A = g.block<2, 2>(0, 0).cast<double>().cast<cplx>();
  Mat2 B = g.block<2, 2>(0, 2).cast<double>().cast<cplx>();
  Mat2 C = g.block<2, 2>(2, 0).cast<double>().cast<cplx>();
  Mat2 D = g.block<2, 2>(2, 2).cast<double>().cast<cplx>();
  Mat2 M = C * tau + D;
  Transported out;
  out.jfac = M.determinant();
  out.ok = std::abs(out.jfac) > 1e-12;
  if (out.ok) out.tau = (A * tau + B) * M.inverse();
  return out;
}

Mat4i random_word(std::mt19937_64& rng, int maxlen) {
  std::uniform_int_distribution<int> len(1, maxlen), pick(0, 7);
  Mat4i g = Mat4i::Identity();
  int n = len(rng);
  for (int i = 0; i < n; ++i) {
    int p = pick(rng);
    Mat4i f;
    if (p == 0)
      f = sp_S();
    else if (p == 1)
      f = -sp_S();  // S^{-1} = -S
    else
      f = sp_T((p - 2) / 2, (p % 2) ? 1 : -1);
    g = g * f;
  }
  return g;
}

Mat2 random_diag_tau(std::mt19937_64& rng, cplx* tau1, cplx* tau2) {
  std::uniform_real_distribution<double> re(-0.45, 0.45), im(0.9, 1.5);
  *tau1 = cplx(re(rng), im(rng));
  *tau2 = cplx(re(rng), im(rng));
  Mat2 tau = Mat2::Zero();
  tau(0, 0) = *tau1;
  tau(1, 1) = *tau2;
  return tau;
}

Mat2 random_interior_tau(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> re(-0.45, 0.45), d(0.9, 1.5), o(-0.25, 0.25);
  Mat2 tau;
  tau(0, 0) = cplx(re(rng), d(rng));
  tau(1, 1) = cplx(re(rng), d(rng));
  tau(0, 1) = tau(1, 0) = cplx(re(rng), o(rng));
  return tau;
}

double lambda_min(const Mat2& tau) {
  Eigen::Matrix2d Y = 0.5 * (tau.imag() + tau.imag().transpose());
  return Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(Y).eigenvalues()(0);
}

// value of one triple monomial (theta_i theta_j theta_k)^4
cplx monomial(const std::array<cplx, 10>& t, int i, int j, int k) {
  cplx p = t[static_cast<size_t>(i)] * t[static_cast<size_t>(j)] * t[static_cast<size_t>(k)];
  cplx p2 = p * p;
  return p2 * p2;
}

cplx chi10_of(const std::array<cplx, 10>& t) {
  cplx p = 1.0;
  for (const cplx& x : t) p *= x * x;
  return -p / 16384.0;
}

cplx e4_of(const std::array<cplx, 10>& t) {
  cplx s = 0.0;
  for (const cplx& x : t) {
    cplx x2 = x * x, x4 = x2 * x2;
    s += x4 * x4;
  }
  return 0.25 * s;
}

curve::HyperellipticCurve random_sextic(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> box(-2.0, 2.0);
  std::vector<cplx> roots;
  while (roots.size() < 6) {
    cplx cand(box(rng), box(rng));
    bool okc = true;
    for (const cplx& r : roots) okc = okc && std::abs(cand - r) > 0.35;
    if (okc) roots.push_back(cand);
  }
  return curve::curve_from_roots(curve::Model::Sextic, 1.0, roots);
}

}  // namespace

int main() {
  std::mt19937_64 rng(20260819);
  const auto& evens = theta::even_characteristics();

  // ---- combinatorial enumeration -----------------------------------------
  struct Triple {
    int i, j, k;
  };
  std::vector<Triple> triples;
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j)
      for (int k = j + 1; k < 10; ++k)
        if ((evens[static_cast<size_t>(i)] + evens[static_cast<size_t>(j)] +
             evens[static_cast<size_t>(k)])
                .is_even())
          triples.push_back({i, j, k});
  std::cerr << "even-sum even triples: " << triples.size() << "\n";
  if (triples.size() != 60) return 1;

  std::vector<std::array<int, 6>> sextets;
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j)
      for (int k = j + 1; k < 10; ++k)
        for (int l = k + 1; l < 10; ++l) {
          theta::Char s = evens[static_cast<size_t>(i)] + evens[static_cast<size_t>(j)] +
                          evens[static_cast<size_t>(k)] + evens[static_cast<size_t>(l)];
          theta::Char r = s.reduced();
          if (r.a.norm() + r.b.norm() > 1e-12) continue;
          std::array<int, 6> sx;
          size_t n = 0;
          for (int m = 0; m < 10; ++m)
            if (m != i && m != j && m != k && m != l) sx[n++] = m;
          sextets.push_back(sx);
        }
  std::cerr << "zero-sum quadruple complements: " << sextets.size() << "\n";
  if (sextets.size() != 15) return 1;

  auto raw_sextet_sum = [&](const std::array<cplx, 10>& t) {
    cplx s = 0.0;
    for (const auto& sx : sextets) {
      cplx p = 1.0;
      for (int idx : sx) p *= t[static_cast<size_t>(idx)];
      cplx p2 = p * p;
      s += p2 * p2;
    }
    return s;
  };

  // ---- sanity: weight-four transport --------------------------------------
  {
    double worst = 0.0;
    for (int n = 0; n < 15; ++n) {
      cplx t1, t2;
      Mat2 taud = random_diag_tau(rng, &t1, &t2);
      Mat4i g = random_word(rng, 4);
      Transported tr = transport(g, taud);
      if (!tr.ok || lambda_min(tr.tau) < 0.02) {
        --n;
        continue;
      }
      std::array<cplx, 10> t = theta::theta_constants(tr.tau);
      cplx j2 = tr.jfac * tr.jfac;
      cplx want = j2 * j2 * e4_genus1(t1) * e4_genus1(t2);
      worst = std::max(worst, std::abs(e4_of(t) - want) / std::abs(want));
    }
    std::cerr << "weight-four transport check: " << worst << "\n";
    if (worst > 1e-9) return 1;
  }

  // ---- weight-twelve prefactor, sign-free, from the third invariant ------
  //
  // chi10^6 / chi12^5 must reproduce the curve-side invariant j3, which
  // pins the real fifth power of the prefactor; the real fifth root is
  // unique.  The first invariant then cross-checks the weight-four scale.
  struct CurveAnchor {
    Mat2 tau;
    std::array<cplx, 10> t;
    curve::AbsoluteInvariants inv;
  };
  std::vector<CurveAnchor> curves;
  for (int trial = 0; trial < 8; ++trial) {
    CurveAnchor ca;
    curve::HyperellipticCurve c = random_sextic(rng);
    periods::PeriodData pd = periods::periods(c);
    ca.tau = pd.tau;
    ca.t = theta::theta_constants(pd.tau);
    ca.inv = curve::absolute_invariants(curve::binary_invariants(c));
    curves.push_back(ca);
  }

  std::vector<double> c5s;
  double j1_err = 0.0;
  for (const CurveAnchor& ca : curves) {
    cplx chi10 = chi10_of(ca.t);
    cplx S = raw_sextet_sum(ca.t);
    cplx c10_2 = chi10 * chi10;
    cplx c10_3 = c10_2 * chi10;
    cplx S2 = S * S;
    cplx c5 = c10_3 * c10_3 / (S2 * S2 * S * ca.inv.j3);
    if (std::abs(c5.imag()) > 1e-6 * std::abs(c5)) {
      std::cerr << "weight-twelve fifth power not real: " << c5 << "\n";
      return 1;
    }
    c5s.push_back(c5.real());
    double cr = std::copysign(std::pow(std::abs(c5.real()), 0.2), c5.real());
    cplx chi12 = cr * S;
    cplx j1 = e4_of(ca.t) * c10_2 / (chi12 * chi12);
    j1_err = std::max(j1_err, std::abs(j1 - ca.inv.j1) / std::abs(ca.inv.j1));
  }
  double c5_mid = c5s[0];
  double c5_spread = 0.0;
  for (double v : c5s) c5_spread = std::max(c5_spread, std::abs(v - c5_mid) / std::abs(c5_mid));
  double craw = std::copysign(std::pow(std::abs(c5_mid), 0.2), c5_mid);
  std::cerr << "weight-twelve scale " << std::setprecision(17) << craw << " (fifth-power spread "
            << c5_spread << ")\n";
  std::cerr << "first-invariant check: " << j1_err << "\n";
  if (c5_spread > 1e-6 || j1_err > 1e-6) return 1;

  // snap to +-2^p 3^q
  double chi12scale = craw;
  std::string chi12expr;
  for (int p = -30; p <= 6 && chi12expr.empty(); ++p)
    for (int q = -8; q <= 8 && chi12expr.empty(); ++q) {
      double cand = std::ldexp(1.0, p) * std::pow(3.0, q);
      for (double sgn : {1.0, -1.0})
        if (std::abs(sgn * cand - craw) < 1e-7 * std::abs(craw)) {
          chi12scale = sgn * cand;
          std::ostringstream os;
          os << (sgn < 0 ? "-" : "");
          if (p >= 0 && q >= 0)
            os << cand;
          else
            os << "1.0 / " << std::setprecision(17) << 1.0 / cand;
          chi12expr = os.str();
        }
    }
  if (chi12expr.empty()) {
    std::ostringstream os;
    os << std::setprecision(17) << craw;
    chi12expr = os.str();
    std::cerr << "weight-twelve scale did not snap; emitting raw value\n";
  } else {
    std::cerr << "weight-twelve scale snapped: " << chi12expr << "\n";
  }

  // ---- anchor set for the weight-six coefficients -------------------------
  struct Anchor {
    std::array<cplx, 10> t;
    cplx target;
  };
  std::vector<Anchor> anchors;
  for (int n = 0; n < 40; ++n) {
    cplx t1, t2;
    Anchor a;
    a.t = theta::theta_constants(random_diag_tau(rng, &t1, &t2));
    a.target = e6_genus1(t1) * e6_genus1(t2);
    anchors.push_back(a);
  }
  int made = 0;
  while (made < 200) {
    cplx t1, t2;
    Mat2 taud = random_diag_tau(rng, &t1, &t2);
    Mat4i g = random_word(rng, 4);
    Transported tr = transport(g, taud);
    if (!tr.ok || lambda_min(tr.tau) < 0.02) continue;
    cplx j2 = tr.jfac * tr.jfac;
    Anchor a;
    a.t = theta::theta_constants(tr.tau);
    a.target = j2 * j2 * j2 * e6_genus1(t1) * e6_genus1(t2);
    anchors.push_back(a);
    ++made;
  }
  // curve anchors sit away from the diagonal orbit; the second invariant
  // supplies the weight-six value there
  for (const CurveAnchor& ca : curves) {
    cplx chi10 = chi10_of(ca.t);
    cplx chi12 = chi12scale * raw_sextet_sum(ca.t);
    Anchor a;
    a.t = ca.t;
    a.target = ca.inv.j2 * chi12 * chi12 * chi12 / (chi10 * chi10 * chi10);
    anchors.push_back(a);
  }

  size_t rows = anchors.size();
  Eigen::MatrixXd A(2 * rows, 60);
  Eigen::VectorXd y(2 * rows);
  for (size_t r = 0; r < rows; ++r) {
    double rowscale = std::abs(anchors[r].target);
    for (size_t c = 0; c < 60; ++c)
      rowscale = std::max(
          rowscale, std::abs(monomial(anchors[r].t, triples[c].i, triples[c].j, triples[c].k)));
    for (size_t c = 0; c < 60; ++c) {
      cplx m = monomial(anchors[r].t, triples[c].i, triples[c].j, triples[c].k) / rowscale;
      A(static_cast<Eigen::Index>(2 * r), static_cast<Eigen::Index>(c)) = m.real();
      A(static_cast<Eigen::Index>(2 * r + 1), static_cast<Eigen::Index>(c)) = m.imag();
    }
    cplx ty = anchors[r].target / rowscale;
    y(static_cast<Eigen::Index>(2 * r)) = ty.real();
    y(static_cast<Eigen::Index>(2 * r + 1)) = ty.imag();
  }

  Eigen::BDCSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  int rank = 0;
  while (rank < 60 && sv(rank) > 1e-10 * sv(0)) ++rank;
  std::cerr << "anchor matrix rank: " << rank << " of 60\n";
  Eigen::VectorXd z0 = Eigen::VectorXd::Zero(60);
  {
    Eigen::VectorXd uy = svd.matrixU().transpose() * y;
    for (int i = 0; i < rank; ++i) z0 += (uy(i) / sv(i)) * svd.matrixV().col(i);
  }
  double fitresid = (A * z0 - y).norm() / y.norm();
  std::cerr << "anchor fit residual: " << fitresid << "\n";
  if (fitresid > 1e-9) return 1;
  Eigen::MatrixXd N = svd.matrixV().rightCols(60 - rank);

  // ---- +-1 representative by alternating projection ----------------------
  //
  // solution set: z0 + range(N).  Seek v in it with all |entries| equal;
  // alternate between the affine set and the scaled sign vectors.
  std::array<int, 60> signs{};
  double e6scale = 0.0;
  bool found = false;
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int restart = 0; restart < 50 && !found; ++restart) {
    Eigen::VectorXd v = z0;
    if (restart > 0) {
      Eigen::VectorXd w(60 - rank);
      for (int i = 0; i < w.size(); ++i) w(i) = 0.3 * restart * gauss(rng);
      v += N * w;
    }
    for (int iter = 0; iter < 5000; ++iter) {
      double c = v.cwiseAbs().mean();
      Eigen::VectorXd s(60);
      for (int i = 0; i < 60; ++i) s(i) = v(i) >= 0 ? c : -c;
      Eigen::VectorXd vaff = z0 + N * (N.transpose() * s);
      double dev = 0.0;
      for (int i = 0; i < 60; ++i) dev = std::max(dev, std::abs(std::abs(vaff(i)) - c));
      if (dev < 1e-10 * c) {
        for (int i = 0; i < 60; ++i) signs[static_cast<size_t>(i)] = vaff(i) >= 0 ? 1 : -1;
        e6scale = c;
        found = true;
        break;
      }
      v = vaff;
    }
  }
  if (!found) {
    std::cerr << "no equal-magnitude representative found\n";
    return 1;
  }
  std::cerr << "weight-six scale " << std::setprecision(17) << e6scale << "\n";

  bool snapped = false;
  double e6snap = e6scale;
  for (int den = 1; den <= 64 && !snapped; ++den) {
    double num = e6scale * den;
    if (std::abs(num - std::round(num)) < 1e-7 * den) {
      e6snap = std::round(num) / den;
      snapped = true;
    }
  }
  if (!snapped) {
    std::cerr << "weight-six scale did not snap to a small rational\n";
    return 1;
  }
  e6scale = e6snap;

  auto e6_solved = [&](const Mat2& tau) {
    std::array<cplx, 10> t = theta::theta_constants(tau);
    cplx s = 0.0;
    for (size_t c = 0; c < 60; ++c)
      s += static_cast<double>(signs[c]) * monomial(t, triples[c].i, triples[c].j, triples[c].k);
    return e6scale * s;
  };

  // ---- global verification ------------------------------------------------
  {
    double worst = 0.0;
    for (int n = 0; n < 20; ++n) {
      cplx t1, t2;
      Mat2 taud = random_diag_tau(rng, &t1, &t2);
      Mat4i g = random_word(rng, 4);
      Transported tr = transport(g, taud);
      if (!tr.ok || lambda_min(tr.tau) < 0.02) {
        --n;
        continue;
      }
      cplx j2 = tr.jfac * tr.jfac;
      cplx want = j2 * j2 * j2 * e6_genus1(t1) * e6_genus1(t2);
      worst = std::max(worst, std::abs(e6_solved(tr.tau) - want) / std::abs(want));
    }
    std::cerr << "weight-six fresh-anchor check: " << worst << "\n";
    if (worst > 1e-8) return 1;

    worst = 0.0;
    for (int n = 0; n < 20; ++n) {
      Mat2 tau = random_interior_tau(rng);
      Mat4i g = random_word(rng, 4);
      Transported tr = transport(g, tau);
      if (!tr.ok || lambda_min(tr.tau) < 0.02) {
        --n;
        continue;
      }
      cplx j2 = tr.jfac * tr.jfac;
      cplx want = j2 * j2 * j2 * e6_solved(tau);
      worst = std::max(worst, std::abs(e6_solved(tr.tau) - want) / std::abs(want));
    }
    std::cerr << "weight-six interior modularity check: " << worst << "\n";
    if (worst > 1e-8) return 1;

    // fresh curves close the loop on all three invariants
    double j2_err = 0.0;
    for (int trial = 0; trial < 4; ++trial) {
      curve::HyperellipticCurve c = random_sextic(rng);
      periods::PeriodData pd = periods::periods(c);
      curve::AbsoluteInvariants inv = curve::absolute_invariants(curve::binary_invariants(c));
      std::array<cplx, 10> t = theta::theta_constants(pd.tau);
      cplx chi10 = chi10_of(t);
      cplx chi12 = chi12scale * raw_sextet_sum(t);
      cplx j2v = e6_solved(pd.tau) * chi10 * chi10 * chi10 / (chi12 * chi12 * chi12);
      j2_err = std::max(j2_err, std::abs(j2v - inv.j2) / std::abs(inv.j2));
    }
    std::cerr << "second-invariant check on fresh curves: " << j2_err << "\n";
    if (j2_err > 1e-6) return 1;
  }

  // ---- emit the source file ----------------------------------------------
  std::cout << "// Generated by tools/derive_theta_tables; do not edit by hand.\n";
  std::cout << "#include \"theta_tables.hpp\"\n\n";
  std::cout << "namespace hyptr::theta::tables {\n\n";
  std::cout << "const std::array<SignedTriple, 60> kWeightSixTriples = {{\n";
  for (size_t c = 0; c < 60; ++c) {
    const Triple& t = triples[c];
    std::cout << "    {" << t.i << ", " << t.j << ", " << t.k << ", "
              << (signs[c] > 0 ? "1" : "-1") << "},\n";
  }
  std::cout << "}};\n\n";
  std::cout << "const std::array<std::array<int, 6>, 15> kWeightTwelveSextets = {{\n";
  for (const auto& sx : sextets) {
    std::cout << "    {{";
    for (size_t i = 0; i < 6; ++i) std::cout << sx[i] << (i + 1 < 6 ? ", " : "");
    std::cout << "}},\n";
  }
  std::cout << "}};\n\n";
  std::cout << "const double kChi12Scale = " << chi12expr << ";\n\n";
  std::ostringstream e6os;
  if (std::abs(e6scale - 0.25) < 1e-12)
    e6os << "0.25";
  else
    e6os << std::setprecision(17) << e6scale;
  std::cout << "const double kE6Scale = " << e6os.str() << ";\n\n";
  std::cout << "}  // namespace hyptr::theta::tables\n";
  return 0;
}
