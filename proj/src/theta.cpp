#include "hyptr/theta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "theta_tables.hpp"

namespace hyptr::theta {

namespace {

// nearest multiple of 1/2, mapped into [0, 1)
double half_reduce(double x) {
  double h = std::round(2.0 * x) / 2.0;
  h -= std::floor(h);
  return h;
}

}  // namespace

Char Char::from_bits(int m) {
  Char c;
  c.a << 0.5 * ((m >> 3) & 1), 0.5 * ((m >> 2) & 1);
  c.b << 0.5 * ((m >> 1) & 1), 0.5 * (m & 1);
  return c;
}

Char Char::reduced() const {
  Char c;
  for (int i = 0; i < 2; ++i) {
    c.a(i) = half_reduce(a(i));
    c.b(i) = half_reduce(b(i));
  }
  return c;
}

int Char::bits() const {
  Char c = reduced();
  auto bit = [](double x) { return x > 0.25 ? 1 : 0; };
  return (bit(c.a(0)) << 3) | (bit(c.a(1)) << 2) | (bit(c.b(0)) << 1) | bit(c.b(1));
}

int Char::parity() const {
  Char c = reduced();
  int s = static_cast<int>(std::lround(4.0 * c.a.dot(c.b)));
  return ((s % 2) + 2) % 2;
}

Char operator+(const Char& l, const Char& r) { return Char{l.a + r.a, l.b + r.b}; }
Char operator-(const Char& l, const Char& r) { return Char{l.a - r.a, l.b - r.b}; }

const std::array<Char, 10>& even_characteristics() {
  static const std::array<Char, 10> evens = [] {
    std::array<Char, 10> out;
    size_t n = 0;
    for (int m = 0; m < 16; ++m) {
      Char c = Char::from_bits(m);
      if (c.is_even()) out[n++] = c;
    }
    return out;
  }();
  return evens;
}

const std::array<Char, 6>& odd_characteristics() {
  static const std::array<Char, 6> odds = [] {
    std::array<Char, 6> out;
    size_t n = 0;
    for (int m = 0; m < 16; ++m) {
      Char c = Char::from_bits(m);
      if (!c.is_even()) out[n++] = c;
    }
    return out;
  }();
  return odds;
}

ThetaValue theta(const Char& ch, const Vec2& v, const Mat2& tau, int derivs) {
  Eigen::Matrix2d Y = 0.5 * (tau.imag() + tau.imag().transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(Y);
  double lmin = es.eigenvalues()(0);
  if (!(lmin > 0.0)) throw NotInSiegelSpace("imaginary part of tau is not positive definite");

  // tail of the centered Gaussian sum below 1e-14 at unit scale
  int N = static_cast<int>(std::ceil(std::sqrt(14.0 * std::log(10.0) / (kPi * lmin)))) + 2;

  Eigen::Vector2d center = -ch.a - Y.inverse() * v.imag();
  Eigen::Vector2i n0(static_cast<int>(std::lround(center(0))),
                     static_cast<int>(std::lround(center(1))));

  Vec2 vb = v + ch.b.cast<cplx>();
  ThetaValue out;
  out.trunc_radius = N;
  const cplx piI = kPi * kI;
  for (int n1 = n0(0) - N; n1 <= n0(0) + N; ++n1) {
    for (int n2 = n0(1) - N; n2 <= n0(1) + N; ++n2) {
      Eigen::Vector2d m(n1 + ch.a(0), n2 + ch.a(1));
      cplx quad = m(0) * (tau(0, 0) * m(0) + tau(0, 1) * m(1)) +
                  m(1) * (tau(1, 0) * m(0) + tau(1, 1) * m(1));
      cplx lin = m(0) * vb(0) + m(1) * vb(1);
      cplx term = std::exp(piI * quad + kTwoPiI * lin);
      out.value += term;
      if (derivs < 1) continue;
      Vec2 mc = m.cast<cplx>();
      out.gradient += kTwoPiI * term * mc;
      if (derivs < 2) continue;
      Mat2 mm = mc * mc.transpose();
      out.hessian += (kTwoPiI * kTwoPiI) * term * mm;
      if (derivs < 3) continue;
      cplx c3 = kTwoPiI * kTwoPiI * kTwoPiI * term;
      out.third[0] += c3 * mc(0) * mm;
      out.third[1] += c3 * mc(1) * mm;
    }
  }
  return out;
}

std::array<cplx, 10> theta_constants(const Mat2& tau) {
  std::array<cplx, 10> out;
  const auto& evens = even_characteristics();
  for (size_t i = 0; i < 10; ++i) out[i] = theta(evens[i], Vec2::Zero(), tau).value;
  return out;
}

CuspForms cusp_forms(const Mat2& tau) {
  std::array<cplx, 10> t = theta_constants(tau);
  CuspForms f{};

  for (const cplx& x : t) {
    cplx x2 = x * x, x4 = x2 * x2;
    f.e4 += x4 * x4;
  }
  f.e4 *= 0.25;

  cplx prod = 1.0;
  for (const cplx& x : t) prod *= x * x;
  f.chi10 = -prod / 16384.0;

  for (const auto& tr : tables::kWeightSixTriples) {
    cplx p = t[static_cast<size_t>(tr.i)] * t[static_cast<size_t>(tr.j)] *
             t[static_cast<size_t>(tr.k)];
    cplx p2 = p * p;
    f.e6 += static_cast<double>(tr.sign) * p2 * p2;
  }
  f.e6 *= tables::kE6Scale;

  for (const auto& sx : tables::kWeightTwelveSextets) {
    cplx p = 1.0;
    for (int idx : sx) p *= t[static_cast<size_t>(idx)];
    cplx p2 = p * p;
    f.chi12 += p2 * p2;
  }
  f.chi12 *= tables::kChi12Scale;
  return f;
}

std::array<cplx, 3> modular_invariants(const Mat2& tau) {
  CuspForms f = cusp_forms(tau);
  cplx c12_2 = f.chi12 * f.chi12;
  cplx c10_2 = f.chi10 * f.chi10;
  cplx c10_3 = c10_2 * f.chi10;
  return {f.e4 * c10_2 / c12_2, f.e6 * c10_3 / (c12_2 * f.chi12),
          c10_3 * c10_3 / (c12_2 * c12_2 * f.chi12)};
}

std::array<cplx, 3> rosenhain_lambdas(const Mat2& tau) {
  std::array<cplx, 10> t = theta_constants(tau);
  // positions of labels in the even list: 0000->0, 0001->1, 0100->4,
  // 1000->6, 1001->7, 1100->8
  cplx t0000 = t[0], t0001 = t[1], t0100 = t[4], t1000 = t[6], t1001 = t[7], t1100 = t[8];
  double scale = 0.0;
  for (const cplx& x : t) scale = std::max(scale, std::abs(x));
  for (const cplx& d : {t0100, t0000, t0001}) {
    if (std::abs(d) < 1e-10 * scale)
      throw DenominatorVanishes("even theta constant vanishes; tau lies on a level-two boundary");
  }
  auto sq = [](cplx z) { return z * z; };
  return {sq(t1100 * t1000 / (t0100 * t0000)), sq(t1001 * t1100 / (t0001 * t0100)),
          sq(t1001 * t1000 / (t0001 * t0000))};
}

Char characteristic_of(const Vec2& v, const Mat2& tau, double tol) {
  Eigen::Matrix2d Y = 0.5 * (tau.imag() + tau.imag().transpose());
  Eigen::Vector2d araw = Y.inverse() * v.imag();
  Char c;
  c.a << std::round(2.0 * araw(0)) / 2.0, std::round(2.0 * araw(1)) / 2.0;
  Eigen::Vector2d braw = v.real() - tau.real() * c.a;
  c.b << std::round(2.0 * braw(0)) / 2.0, std::round(2.0 * braw(1)) / 2.0;
  Vec2 resid = v - tau * c.a.cast<cplx>() - c.b.cast<cplx>();
  if (resid.cwiseAbs().maxCoeff() > tol)
    throw CharacteristicResolutionFailed("value is not a half-period at the requested tolerance");
  return c;
}

std::vector<Char> branch_characteristics(const periods::PeriodData& pd) {
  std::vector<Vec2> u = periods::branch_abel_map(pd.curve);
  Mat2 WAinvT = pd.PiA_omega().transpose().inverse();
  std::vector<Char> out;
  out.reserve(u.size());
  for (const Vec2& ui : u) out.push_back(characteristic_of(WAinvT * ui, pd.tau));
  return out;
}

Char riemann_constant(const periods::PeriodData& pd) {
  std::vector<Char> cs = branch_characteristics(pd);
  // drop the trivial characteristic of the base point itself (sextic model)
  size_t from = pd.curve.model == curve::Model::Sextic ? 1 : 0;

  std::vector<Char> hits;
  for (int m = 0; m < 16; ++m) {
    Char d = Char::from_bits(m);
    if (d.is_even()) continue;
    bool ok = true;
    for (size_t k = from; k < cs.size() && ok; ++k) ok = !(cs[k] - d).is_even();
    for (size_t k = from; k < cs.size() && ok; ++k)
      for (size_t l = k + 1; l < cs.size() && ok; ++l) ok = (cs[k] + cs[l] - d).is_even();
    if (ok) hits.push_back(d);
  }
  if (hits.size() != 1)
    throw CharacteristicResolutionFailed("branch parities do not single out a base characteristic");
  return hits[0];
}

Mat2 quasi_period_theta(const periods::PeriodData& pd) {
  if (pd.curve.model != curve::Model::Sextic)
    throw periods::ModelMismatch("the quasi-period theta formula uses the even-degree model");
  const auto& a = pd.curve.coeffs;

  std::vector<Char> cs = branch_characteristics(pd);
  Char delta = riemann_constant(pd);
  Mat2 WAi = pd.PiA_omega().inverse();

  // the ten shifted pairwise sums (base point excluded) cover the even set
  std::set<int> seen;
  Mat2 sum = Mat2::Zero();
  for (size_t i = 1; i <= 5; ++i) {
    for (size_t j = i + 1; j <= 5; ++j) {
      Char ch = cs[i] + cs[j] - delta;
      if (!ch.is_even())
        throw CharacteristicResolutionFailed("pairwise branch characteristic is not even");
      seen.insert(ch.bits());
      ThetaValue tv = theta(ch, Vec2::Zero(), pd.tau, 2);
      sum += WAi * tv.hessian * WAi.transpose() / tv.value;
    }
  }
  if (seen.size() != 10)
    throw CharacteristicResolutionFailed("pairwise branch characteristics are not distinct");

  Mat2 lead;
  lead << 4.0 * a[4], a[3], a[3], 4.0 * a[2];
  // both terms scale linearly in the leading coefficient, so the monic
  // identity extends verbatim
  return -0.1 * lead + 0.1 * sum;
}

Mat2 period_theta(const periods::PeriodData& pd, const std::array<int, 5>& choice) {
  if (pd.curve.model != curve::Model::Quintic)
    throw periods::ModelMismatch("the period theta formula uses the odd-degree model");
  if (std::abs(pd.curve.lead() - cplx(1.0)) > 1e-12)
    throw periods::ModelMismatch("the period theta formula needs a monic model");
  std::array<int, 5> sorted = choice;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 5>{0, 1, 2, 3, 4})
    throw std::invalid_argument("index choice must be a permutation of the five root indices");

  std::vector<Char> cs = branch_characteristics(pd);
  Char delta = riemann_constant(pd);

  // with non-reduced representatives the terms pick up relative signs
  // e^{2 pi i a.n}, so reduce everything first
  auto point_char = [&](int i) { return (cs[static_cast<size_t>(i)] - delta).reduced(); };
  auto pair_value = [&](int i, int j) {
    Char ch = (cs[static_cast<size_t>(i)] + cs[static_cast<size_t>(j)] - delta).reduced();
    return theta(ch, Vec2::Zero(), pd.tau).value;
  };

  int k = choice[0], l = choice[1], p = choice[2], q = choice[3], r = choice[4];
  cplx ek = pd.curve.roots[static_cast<size_t>(k)];
  cplx el = pd.curve.roots[static_cast<size_t>(l)];

  Vec2 gl = theta(point_char(l), Vec2::Zero(), pd.tau, 1).gradient;
  Vec2 gk = theta(point_char(k), Vec2::Zero(), pd.tau, 1).gradient;

  cplx pref = pair_value(p, q) * pair_value(p, r) * pair_value(q, r) /
              (pair_value(k, l) * std::pow(ek - el, 1.5));
  Vec2 c1 = pref / (pair_value(p, l) * pair_value(q, l) * pair_value(r, l)) * gl;
  Vec2 c2 = pref / (pair_value(p, k) * pair_value(q, k) * pair_value(r, k)) * gk;
  Mat2 tail;
  tail << 1.0, ek, -1.0, -el;

  // the theta phase system fixes each gradient column only up to a fourth
  // root of unity; resolve both phases against the marking's A-periods,
  // which the characteristic dictionary already consumes
  Mat2 wa = pd.PiA_omega();
  const std::array<cplx, 4> units = {cplx(1, 0), cplx(0, 1), cplx(-1, 0), cplx(0, -1)};
  Mat2 best = Mat2::Zero();
  double bestdiff = std::numeric_limits<double>::infinity();
  for (cplx s1 : units) {
    for (cplx s2 : units) {
      Mat2 cols;
      cols << s1 * c1(0), s2 * c2(0), s1 * c1(1), s2 * c2(1);
      Mat2 m = cols * tail;
      double d = (m - wa).cwiseAbs().maxCoeff();
      if (d < bestdiff) {
        bestdiff = d;
        best = m;
      }
    }
  }
  return best;
}

}  // namespace hyptr::theta
