#include "hyptr/curve.hpp"

#include <algorithm>
#include <cmath>

namespace hyptr::curve {

namespace {

constexpr double kDegeneracyRel = 1e-10;

double spread_of(const std::vector<cplx>& roots) {
  double m = 0.0;
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j)
      m = std::max(m, std::abs(roots[i] - roots[j]));
  return m > 0.0 ? m : 1.0;
}

void check_separation(const std::vector<cplx>& roots) {
  double spread = spread_of(roots);
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j)
      if (std::abs(roots[i] - roots[j]) < kDegeneracyRel * spread)
        throw DegenerateDiscriminant("branch points collide");
}

void sort_lex(std::vector<cplx>& v) {
  std::sort(v.begin(), v.end(), [](const cplx& a, const cplx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}

}  // namespace

double HyperellipticCurve::root_spread() const { return spread_of(roots); }

std::vector<cplx> roots_of(const std::vector<cplx>& coeffs) {
  if (coeffs.empty() || coeffs[0] == cplx(0))
    throw LeadingCoefficientZero("polynomial lead coefficient vanishes");
  int n = static_cast<int>(coeffs.size()) - 1;
  Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) C(i, i - 1) = cplx(1);
  for (int i = 0; i < n; ++i) C(i, n - 1) = -coeffs[static_cast<size_t>(n - i)] / coeffs[0];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, /*computeEigenvectors=*/false);
  std::vector<cplx> roots(static_cast<size_t>(n));
  auto d = num::polyder(coeffs);
  for (int i = 0; i < n; ++i) {
    cplx z = es.eigenvalues()(i);
    for (int it = 0; it < 3; ++it) {
      cplx fp = num::polyval(d, z);
      if (std::abs(fp) < 1e-300) break;
      z -= num::polyval(coeffs, z) / fp;
    }
    roots[static_cast<size_t>(i)] = z;
  }
  sort_lex(roots);
  return roots;
}

HyperellipticCurve curve_from_coeffs(Model model, std::vector<cplx> coeffs) {
  size_t want = model == Model::Sextic ? 7 : 6;
  if (coeffs.size() != want) throw std::invalid_argument("wrong coefficient count for model");
  HyperellipticCurve c;
  c.model = model;
  c.roots = roots_of(coeffs);
  c.coeffs = std::move(coeffs);
  check_separation(c.roots);
  return c;
}

HyperellipticCurve curve_from_roots(Model model, cplx lead, std::vector<cplx> roots) {
  size_t want = model == Model::Sextic ? 6 : 5;
  if (roots.size() != want) throw std::invalid_argument("wrong root count for model");
  if (lead == cplx(0)) throw LeadingCoefficientZero("vanishing lead coefficient");
  check_separation(roots);
  HyperellipticCurve c;
  c.model = model;
  sort_lex(roots);
  c.roots = std::move(roots);
  c.coeffs = num::poly_from_roots(c.roots);
  for (auto& v : c.coeffs) v *= lead;
  return c;
}

cplx invariant_A(const std::vector<cplx>& a) {
  return 6.0 * a[3] * a[3] - 16.0 * a[2] * a[4] + 40.0 * a[1] * a[5] - 240.0 * a[0] * a[6];
}

BinaryInvariants binary_invariants(const HyperellipticCurve& c) {
  if (c.model != Model::Sextic) throw std::invalid_argument("binary invariants need the sextic model");
  const auto& r = c.roots;
  cplx a0 = c.lead();
  auto d = [&](int i, int j) { return r[static_cast<size_t>(i)] - r[static_cast<size_t>(j)]; };
  auto tri2 = [&](int i, int j, int k) {
    cplx t = d(i, j) * d(j, k) * d(k, i);
    return t * t;
  };

  BinaryInvariants I;
  I.A = invariant_A(c.coeffs);

  // the ten splits of the six branch points into two unordered triples
  cplx B(0), C(0);
  for (int a = 1; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) {
      int t1[3] = {0, a, b};
      int t2[3];
      int n = 0;
      for (int k = 1; k < 6; ++k)
        if (k != a && k != b) t2[n++] = k;
      cplx base = tri2(t1[0], t1[1], t1[2]) * tri2(t2[0], t2[1], t2[2]);
      B += base;
      // the six matchings between the triples
      int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
      for (auto& p : perm) {
        cplx m = d(t1[0], t2[p[0]]) * d(t1[1], t2[p[1]]) * d(t1[2], t2[p[2]]);
        C += base * m * m;
      }
    }
  cplx a02 = a0 * a0;
  cplx a04 = a02 * a02;
  I.B = a04 * B;
  I.C = a04 * a02 * C;

  cplx D(1);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) D *= d(i, j) * d(i, j);
  cplx a05 = a04 * a0;
  I.D = a05 * a05 * D;
  return I;
}

AbsoluteInvariants absolute_invariants(const BinaryInvariants& I) {
  if (std::abs(I.A) == 0.0) throw AZero("absolute invariants undefined at A = 0");
  cplx A2 = I.A * I.A;
  cplx A3 = A2 * I.A;
  cplx A5 = A3 * A2;
  AbsoluteInvariants j;
  j.j1 = 144.0 * I.B / A2;                          // 2^4 3^2
  j.j2 = 1728.0 * (3.0 * I.C - I.A * I.B) / A3;     // 2^6 3^3
  j.j3 = 486.0 * I.D / A5;                          // 2 3^5
  return j;
}

std::pair<HyperellipticCurve, CoordinateMap> sextic_to_quintic(
    const HyperellipticCurve& sextic, cplx c1, cplx c2,
    const std::array<int, 6>& ordering) {
  if (sextic.model != Model::Sextic) throw std::invalid_argument("need a sextic");
  double spread = sextic.root_spread();
  if (std::abs(c1 - c2) < 1e-12 * std::max(1.0, spread))
    throw CoincidentShifts("the two shifts coincide");

  CoordinateMap m;
  for (int i = 0; i < 6; ++i) m.r[static_cast<size_t>(i)] = sextic.roots[static_cast<size_t>(ordering[static_cast<size_t>(i)])];
  if (std::abs(m.r[0]) < 1e-12 * spread) throw RootAtZero("branch point sent to infinity sits at the origin");
  m.c1 = c1;
  m.c2 = c2;
  m.b0 = cplx(1);

  cplx K = sextic.lead() * m.r[0] * (c1 - c2);
  for (int k = 1; k < 6; ++k) {
    cplx dr = m.r[0] - m.r[static_cast<size_t>(k)];
    m.e[static_cast<size_t>(k - 1)] = -(c1 * m.r[0] - c2 * m.r[static_cast<size_t>(k)]) / dr;
    K *= dr;
  }
  m.K = K;
  m.kappa = std::sqrt(K / m.b0);

  std::vector<cplx> e(m.e.begin(), m.e.end());
  HyperellipticCurve q = curve_from_roots(Model::Quintic, m.b0, e);
  return {q, m};
}

std::pair<cplx, cplx> QuinticScaling::forward(cplx x, cplx y) const {
  cplx s2 = s * s;
  return {(x - r) / s2, y / (s2 * s2 * s)};
}

std::pair<cplx, cplx> QuinticScaling::backward(cplx x, cplx y) const {
  cplx s2 = s * s;
  return {s2 * x + r, s2 * s2 * s * y};
}

std::pair<HyperellipticCurve, QuinticScaling> quintic_normalize(
    const HyperellipticCurve& quintic, cplx s, cplx r) {
  if (quintic.model != Model::Quintic) throw std::invalid_argument("need a quintic");
  if (s == cplx(0)) throw ZeroScale("scale must be nonzero");
  QuinticScaling sc{s, r};
  std::vector<cplx> e;
  e.reserve(5);
  for (const auto& root : quintic.roots) e.push_back((root - r) / (s * s));
  return {curve_from_roots(Model::Quintic, quintic.lead(), std::move(e)), sc};
}

RosenhainForm to_rosenhain(const HyperellipticCurve& sextic,
                           const std::array<int, 6>& ordering) {
  std::array<cplx, 6> rr;
  for (int i = 0; i < 6; ++i) rr[static_cast<size_t>(i)] = sextic.roots[static_cast<size_t>(ordering[static_cast<size_t>(i)])];
  if (std::abs(rr[0]) < 1e-12 * sextic.root_spread())
    throw RootAtZero("ordering sends the origin to infinity");
  cplx c2 = -(rr[4] - rr[0]) / (rr[4] - rr[2]);
  cplx c1 = (rr[2] / rr[0]) * c2;
  auto [q, m] = sextic_to_quintic(sextic, c1, c2, ordering);

  RosenhainForm rf;
  rf.quintic = std::move(q);
  rf.map = m;
  rf.ordering = ordering;
  rf.lambdas = {m.e[0], m.e[2], m.e[4]};
  return rf;
}

HyperellipticCurve sextic_from_quintic(const HyperellipticCurve& quintic, cplx w) {
  if (quintic.model != Model::Quintic) throw std::invalid_argument("need a quintic");
  // f(w + u) expanded in ascending powers of u
  std::vector<cplx> beta(6, cplx(0));
  for (int i = 0; i <= 5; ++i) {
    cplx bi = quintic.coeffs[static_cast<size_t>(i)];
    int p = 5 - i;  // power of (w + u)
    std::vector<double> binom(static_cast<size_t>(p) + 1);
    binom[0] = 1;
    for (int j = 1; j <= p; ++j) binom[static_cast<size_t>(j)] = binom[static_cast<size_t>(j - 1)] * (p - j + 1) / j;
    for (int j = 0; j <= p; ++j)
      beta[static_cast<size_t>(j)] += bi * binom[static_cast<size_t>(j)] * std::pow(w, p - j);
  }
  std::vector<cplx> a(7, cplx(0));
  for (int j = 0; j <= 5; ++j) a[static_cast<size_t>(j)] = beta[static_cast<size_t>(j)];
  // a6 = 0: the old point at infinity becomes the branch point at X = 0
  return curve_from_coeffs(Model::Sextic, std::move(a));
}

HyperellipticCurve sextic_moebius(const HyperellipticCurve& sextic,
                                  cplx p, cplx q, cplx u, cplx v) {
  if (p * v - q * u == cplx(0)) throw std::invalid_argument("singular substitution");
  std::vector<cplx> g(7, cplx(0));
  for (int k = 0; k <= 6; ++k) {
    // a_k (p X + q)^{6-k} (u X + v)^k
    std::vector<cplx> term{cplx(1)};
    for (int i = 0; i < 6 - k; ++i) {
      std::vector<cplx> nt(term.size() + 1, cplx(0));
      for (size_t s = 0; s < term.size(); ++s) {
        nt[s] += term[s] * p;
        nt[s + 1] += term[s] * q;
      }
      term = std::move(nt);
    }
    for (int i = 0; i < k; ++i) {
      std::vector<cplx> nt(term.size() + 1, cplx(0));
      for (size_t s = 0; s < term.size(); ++s) {
        nt[s] += term[s] * u;
        nt[s + 1] += term[s] * v;
      }
      term = std::move(nt);
    }
    for (size_t s = 0; s < term.size(); ++s) g[s] += sextic.coeffs[static_cast<size_t>(k)] * term[s];
  }
  return curve_from_coeffs(Model::Sextic, std::move(g));
}

}  // namespace hyptr::curve
