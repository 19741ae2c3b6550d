#include "hyptr/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace hyptr::num {

namespace {

int checked_min(int a, int b) { return a < b ? a : b; }

}  // namespace

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
  if (is_exact_zero()) return o;
  if (o.is_exact_zero()) return *this;
  int lead = checked_min(lead_, o.lead_);
  int trunc = checked_min(trunc_, o.trunc_);
  if (trunc <= lead) return zero_window(lead, lead);
  LaurentSeries r = zero_window(lead, trunc);
  for (int k = lead; k < trunc; ++k) r.set_coeff(k, coeff_or_zero(k) + o.coeff_or_zero(k));
  return r;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const { return *this + (-o); }

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
  if (is_exact_zero() || o.is_exact_zero()) return zero();
  int lead = lead_ + o.lead_;
  int len = checked_min(length(), o.length());
  LaurentSeries r = zero_window(lead, lead + len);
  for (int i = 0; i < length(); ++i) {
    cplx a = c_[static_cast<size_t>(i)];
    if (a == cplx(0)) continue;
    int jmax = checked_min(o.length(), len - i);
    for (int j = 0; j < jmax; ++j)
      r.c_[static_cast<size_t>(i + j)] += a * o.c_[static_cast<size_t>(j)];
  }
  return r;
}

LaurentSeries LaurentSeries::operator*(cplx s) const {
  LaurentSeries r = *this;
  for (auto& v : r.c_) v *= s;
  return r;
}

LaurentSeries LaurentSeries::invert() const {
  if (is_exact_zero() || length() == 0 || c_[0] == cplx(0))
    throw ZeroLeadingCoefficient("series inversion requires nonzero coefficient at lead order");
  int len = length();
  LaurentSeries r = zero_window(-lead_, -lead_ + len);
  cplx inv0 = cplx(1) / c_[0];
  r.c_[0] = inv0;
  for (int n = 1; n < len; ++n) {
    cplx acc(0);
    for (int j = 1; j <= n; ++j) acc += c_[static_cast<size_t>(j)] * r.c_[static_cast<size_t>(n - j)];
    r.c_[static_cast<size_t>(n)] = -inv0 * acc;
  }
  return r;
}

LaurentSeries LaurentSeries::derivative() const {
  if (is_exact_zero()) return zero();
  LaurentSeries r = zero_window(lead_ - 1, trunc_ - 1);
  for (int k = lead_; k < trunc_; ++k) r.set_coeff(k - 1, coeff(k) * static_cast<double>(k));
  return r;
}

LaurentSeries LaurentSeries::antiderivative() const {
  if (is_exact_zero()) return zero();
  if (lead_ <= -1) {
    if (trunc_ <= -1) throw TruncationTooShallow("antiderivative needs the zeta^{-1} coefficient");
    if (coeff(-1) != cplx(0))
      throw std::domain_error("nonzero residue: termwise primitive would need a log");
  }
  LaurentSeries r = zero_window(lead_ + 1, trunc_ + 1);
  for (int k = lead_; k < trunc_; ++k) {
    if (k == -1) continue;
    r.set_coeff(k + 1, coeff(k) / static_cast<double>(k + 1));
  }
  return r;
}

cplx LaurentSeries::residue() const {
  if (is_exact_zero()) return cplx(0);
  if (-1 < lead_) return cplx(0);
  if (-1 >= trunc_) throw TruncationTooShallow("residue lies beyond truncation order");
  return coeff(-1);
}

LaurentSeries LaurentSeries::shifted(int m) const {
  if (is_exact_zero()) return zero();
  LaurentSeries r = *this;
  r.lead_ += m;
  r.trunc_ += m;
  return r;
}

LaurentSeries LaurentSeries::flipped() const {
  if (is_exact_zero()) return zero();
  LaurentSeries r = *this;
  for (int k = lead_; k < trunc_; ++k)
    if (k & 1) r.set_coeff(k, -r.coeff(k));
  return r;
}

LaurentSeries LaurentSeries::even_part() const {
  if (is_exact_zero()) return zero();
  LaurentSeries r = *this;
  for (int k = lead_; k < trunc_; ++k)
    if (k & 1) r.set_coeff(k, cplx(0));
  return r;
}

LaurentSeries LaurentSeries::odd_part() const {
  if (is_exact_zero()) return zero();
  LaurentSeries r = *this;
  for (int k = lead_; k < trunc_; ++k)
    if (!(k & 1)) r.set_coeff(k, cplx(0));
  return r;
}

LaurentSeries LaurentSeries::truncated(int new_trunc) const {
  if (is_exact_zero()) return zero();
  if (new_trunc >= trunc_) return *this;
  if (new_trunc <= lead_) return zero_window(lead_, lead_);
  LaurentSeries r = zero_window(lead_, new_trunc);
  for (int k = lead_; k < new_trunc; ++k) r.set_coeff(k, coeff(k));
  return r;
}

cplx LaurentSeries::eval(cplx zeta) const {
  if (is_exact_zero()) return cplx(0);
  // Horner over the window, then the overall zeta^lead factor
  cplx acc(0);
  for (int i = length() - 1; i >= 0; --i) acc = acc * zeta + c_[static_cast<size_t>(i)];
  return acc * std::pow(zeta, lead_);
}

double LaurentSeries::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& v : c_) m = std::max(m, std::abs(v));
  return m;
}

namespace {

QuadratureRule make_gauss_legendre(int n) {
  QuadratureRule r;
  r.kind = QuadKind::GaussLegendre;
  r.nodes.resize(static_cast<size_t>(n));
  r.weights.resize(static_cast<size_t>(n));
  // Newton on P_n with the standard asymptotic initial guess
  for (int i = 0; i < n; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    // recompute dp at the converged node
    {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
    }
    r.nodes[static_cast<size_t>(i)] = x;
    r.weights[static_cast<size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  // the cosine guess runs descending
  std::reverse(r.nodes.begin(), r.nodes.end());
  std::reverse(r.weights.begin(), r.weights.end());
  return r;
}

QuadratureRule make_gauss_chebyshev(int n) {
  QuadratureRule r;
  r.kind = QuadKind::GaussChebyshev;
  r.nodes.resize(static_cast<size_t>(n));
  r.weights.assign(static_cast<size_t>(n), kPi / n);
  for (int i = 0; i < n; ++i)
    r.nodes[static_cast<size_t>(i)] = std::cos(kPi * (2.0 * (n - i) - 1.0) / (2.0 * n));
  return r;
}

}  // namespace

const QuadratureRule& quadrature_rule(QuadKind kind, int n) {
  static std::map<std::pair<int, int>, QuadratureRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(kind), n);
  auto it = cache.find(key);
  if (it == cache.end()) {
    QuadratureRule r = (kind == QuadKind::GaussLegendre) ? make_gauss_legendre(n)
                                                         : make_gauss_chebyshev(n);
    it = cache.emplace(key, std::move(r)).first;
  }
  return it->second;
}

namespace {

cplx pass01(const std::function<cplx(double)>& f, bool sl, bool sr, int n) {
  if (sl && sr) {
    // t = (1+x)/2 against the Chebyshev measure; the sqrt factor restores dt
    const QuadratureRule& q = quadrature_rule(QuadKind::GaussChebyshev, n);
    cplx acc(0);
    for (size_t i = 0; i < q.nodes.size(); ++i) {
      double x = q.nodes[i];
      acc += q.weights[i] * std::sqrt(1.0 - x * x) * f(0.5 * (1.0 + x));
    }
    return 0.5 * acc;
  }
  const QuadratureRule& q = quadrature_rule(QuadKind::GaussLegendre, n);
  if (!sl && !sr) {
    cplx acc(0);
    for (size_t i = 0; i < q.nodes.size(); ++i)
      acc += q.weights[i] * f(0.5 * (1.0 + q.nodes[i]));
    return 0.5 * acc;
  }
  if (sl) {
    // t = u^2 regularizes the left endpoint
    cplx acc(0);
    for (size_t i = 0; i < q.nodes.size(); ++i) {
      double u = 0.5 * (1.0 + q.nodes[i]);
      acc += q.weights[i] * 2.0 * u * f(u * u);
    }
    return 0.5 * acc;
  }
  // mirrored: t = 1 - u^2, traversed with t still ascending
  cplx acc(0);
  for (size_t i = 0; i < q.nodes.size(); ++i) {
    double u = 0.5 * (1.0 - q.nodes[i]);
    acc += q.weights[i] * 2.0 * u * f(1.0 - u * u);
  }
  return 0.5 * acc;
}

}  // namespace

IntegrationResult integrate01(const std::function<cplx(double)>& f,
                              bool singular_left, bool singular_right,
                              double tol, int n0, int nmax) {
  IntegrationResult res;
  cplx prev = pass01(f, singular_left, singular_right, n0);
  int n = n0;
  while (n < nmax) {
    n *= 2;
    cplx cur = pass01(f, singular_left, singular_right, n);
    res.delta = std::abs(cur - prev);
    res.value = cur;
    res.nodes = n;
    if (res.delta <= tol * std::max(1.0, std::abs(cur))) {
      res.converged = true;
      return res;
    }
    prev = cur;
  }
  res.value = prev;
  res.nodes = n;
  res.converged = false;
  return res;
}

IntegrationResult integrate_segment(const std::function<cplx(cplx)>& f,
                                    cplx a, cplx b,
                                    bool singular_a, bool singular_b,
                                    double tol, int n0, int nmax) {
  cplx d = b - a;
  auto g = [&](double t) { return f(a + t * d) * d; };
  return integrate01(g, singular_a, singular_b, tol, n0, nmax);
}

namespace {

void bisect_accumulate(const std::function<cplx(double)>& f, double a, double b,
                       bool sl, bool sr, double tol, int n0, int nmax, int depth,
                       IntegrationResult& total) {
  double w = b - a;
  auto piece = [&](double t) { return w * f(a + t * w); };
  IntegrationResult r = integrate01(piece, sl, sr, tol, n0, nmax);
  if (r.converged || depth <= 0) {
    total.value += r.value;
    total.delta += r.delta;
    total.nodes += r.nodes;
    total.converged = total.converged && r.converged;
    return;
  }
  double m = 0.5 * (a + b);
  bisect_accumulate(f, a, m, sl, false, tol, n0, nmax, depth - 1, total);
  bisect_accumulate(f, m, b, false, sr, tol, n0, nmax, depth - 1, total);
}

}  // namespace

IntegrationResult integrate01_adaptive(const std::function<cplx(double)>& f,
                                       bool singular_left, bool singular_right,
                                       double tol, int n0, int nmax, int max_depth) {
  IntegrationResult total;
  total.converged = true;
  bisect_accumulate(f, 0.0, 1.0, singular_left, singular_right, tol, n0, nmax, max_depth, total);
  return total;
}

SqrtTracker::SqrtTracker(std::function<cplx(double)> g, cplx w0) : g_(std::move(g)) {
  ts_.push_back(0.0);
  ws_.push_back(w0);
  double t = 0.0;
  cplx w = w0;
  double h = 1.0 / 64.0;
  const double hmin = 1e-9;
  while (t < 1.0) {
    double tn = std::min(1.0, t + h);
    cplx gv = g_(tn);
    cplx wn = std::sqrt(gv);
    if (std::abs(wn + w) > std::abs(wn - w)) {
      // same branch
    } else {
      wn = -wn;
    }
    // reject if the step is too coarse to disambiguate branches
    if (std::abs(wn - w) > 0.5 * std::max(std::abs(w), std::abs(wn)) && h > hmin) {
      h *= 0.5;
      continue;
    }
    t = tn;
    w = wn;
    ts_.push_back(t);
    ws_.push_back(w);
    if (std::abs(wn - ws_[ws_.size() - 2]) < 0.05 * std::abs(wn)) h = std::min(h * 2.0, 1.0 / 64.0);
  }
}

cplx SqrtTracker::operator()(double t) const {
  auto it = std::lower_bound(ts_.begin(), ts_.end(), t);
  size_t idx = static_cast<size_t>(it - ts_.begin());
  if (idx >= ts_.size()) idx = ts_.size() - 1;
  if (idx > 0 && (it == ts_.end() || t - ts_[idx - 1] < ts_[idx] - t)) idx -= 1;
  cplx wref = ws_[idx];
  cplx w = std::sqrt(g_(t));
  if (std::abs(w + wref) > std::abs(w - wref)) return w;
  return -w;
}

cplx polyval(const std::vector<cplx>& c, cplx z) {
  cplx acc(0);
  for (const auto& ck : c) acc = acc * z + ck;
  return acc;
}

std::vector<cplx> polyder(const std::vector<cplx>& c) {
  size_t n = c.size();
  if (n <= 1) return {cplx(0)};
  std::vector<cplx> d(n - 1);
  for (size_t i = 0; i + 1 < n; ++i) d[i] = c[i] * static_cast<double>(n - 1 - i);
  return d;
}

std::vector<cplx> poly_from_roots(const std::vector<cplx>& roots) {
  std::vector<cplx> c{cplx(1)};
  for (const auto& r : roots) {
    std::vector<cplx> next(c.size() + 1, cplx(0));
    for (size_t i = 0; i < c.size(); ++i) {
      next[i] += c[i];
      next[i + 1] -= c[i] * r;
    }
    c = std::move(next);
  }
  return c;
}

}  // namespace hyptr::num
