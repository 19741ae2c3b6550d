#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace hyptr {

using cplx = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Vec2 = Eigen::Vector2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec4 = Eigen::Vector4cd;
using Mat4i = Eigen::Matrix<int, 4, 4>;
using Matrix2C = Mat2;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline const cplx kI = cplx(0.0, 1.0);
inline const cplx kTwoPiI = cplx(0.0, 2.0 * kPi);

namespace num {

struct ZeroLeadingCoefficient : std::runtime_error {
  explicit ZeroLeadingCoefficient(const std::string& w) : std::runtime_error(w) {}
};
struct TruncationTooShallow : std::runtime_error {
  explicit TruncationTooShallow(const std::string& w) : std::runtime_error(w) {}
};
struct QuadratureFailure : std::runtime_error {
  explicit QuadratureFailure(const std::string& w) : std::runtime_error(w) {}
};

// Truncated Laurent series in one local coordinate zeta.
// Orders in [lead_order, trunc_order) are known; coefficient of zeta^k is
// coeff(k). Orders below lead_order are exactly zero, orders at or above
// trunc_order are unknown. An exact zero uses the sentinel window at kOrderInf.
class LaurentSeries {
 public:
  static constexpr int kOrderInf = 1 << 20;

  LaurentSeries() : lead_(kOrderInf), trunc_(kOrderInf) {}
  LaurentSeries(int lead_order, std::vector<cplx> coeffs)
      : lead_(lead_order), trunc_(lead_order + static_cast<int>(coeffs.size())),
        c_(std::move(coeffs)) {}

  static LaurentSeries zero() { return LaurentSeries(); }
  static LaurentSeries zero_window(int lead, int trunc) {
    return LaurentSeries(lead, std::vector<cplx>(static_cast<size_t>(trunc - lead), cplx(0)));
  }
  static LaurentSeries constant(cplx v, int trunc) {
    LaurentSeries s = zero_window(0, trunc);
    s.c_[0] = v;
    return s;
  }
  // monomial v * zeta^k, known through trunc
  static LaurentSeries monomial(cplx v, int k, int trunc) {
    LaurentSeries s = zero_window(k, trunc);
    s.c_[0] = v;
    return s;
  }

  int lead_order() const { return lead_; }
  int trunc_order() const { return trunc_; }
  bool is_exact_zero() const { return lead_ >= kOrderInf; }
  int length() const { return static_cast<int>(c_.size()); }

  cplx coeff(int k) const {
    if (k < lead_) return cplx(0);
    if (k >= trunc_) throw TruncationTooShallow("coefficient beyond truncation order");
    return c_[static_cast<size_t>(k - lead_)];
  }
  // like coeff but returns 0 beyond the window instead of throwing
  cplx coeff_or_zero(int k) const {
    if (k < lead_ || k >= trunc_) return cplx(0);
    return c_[static_cast<size_t>(k - lead_)];
  }
  void set_coeff(int k, cplx v) {
    if (k < lead_ || k >= trunc_) throw std::out_of_range("set_coeff outside window");
    c_[static_cast<size_t>(k - lead_)] = v;
  }

  // first order with a nonzero stored coefficient; trunc_order() if none
  int actual_lead() const {
    for (int k = lead_; k < trunc_; ++k)
      if (coeff(k) != cplx(0)) return k;
    return trunc_;
  }

  LaurentSeries operator-() const;
  LaurentSeries operator+(const LaurentSeries& o) const;
  LaurentSeries operator-(const LaurentSeries& o) const;
  LaurentSeries operator*(const LaurentSeries& o) const;
  LaurentSeries operator*(cplx s) const;
  LaurentSeries& operator+=(const LaurentSeries& o) { return *this = *this + o; }
  LaurentSeries& operator-=(const LaurentSeries& o) { return *this = *this - o; }
  LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }

  // 1/this; requires a nonzero coefficient at lead_order
  LaurentSeries invert() const;
  // d/dzeta
  LaurentSeries derivative() const;
  // termwise primitive with zero constant; requires no zeta^{-1} term
  LaurentSeries antiderivative() const;
  // coefficient of zeta^{-1}
  cplx residue() const;

  // multiply by zeta^m
  LaurentSeries shifted(int m) const;
  // zeta -> -zeta
  LaurentSeries flipped() const;
  LaurentSeries even_part() const;
  LaurentSeries odd_part() const;
  // drop all orders >= new_trunc
  LaurentSeries truncated(int new_trunc) const;

  cplx eval(cplx zeta) const;
  double max_abs_coeff() const;

 private:
  int lead_, trunc_;
  std::vector<cplx> c_;
};

inline LaurentSeries operator*(cplx s, const LaurentSeries& a) { return a * s; }

enum class QuadKind { GaussLegendre, GaussChebyshev };

struct QuadratureRule {
  QuadKind kind;
  std::vector<double> nodes;  // ascending, interior of (-1,1)
  std::vector<double> weights;
};

// cached; Chebyshev weights are for the measure dx/sqrt(1-x^2)
const QuadratureRule& quadrature_rule(QuadKind kind, int n);

struct IntegrationResult {
  cplx value{0.0, 0.0};
  int nodes = 0;
  double delta = 0.0;   // |change| at the last doubling
  bool converged = false;
};

// Integral of f over (0,1). Flagged endpoints admit inverse-square-root
// singularities. Nodes are visited in ascending t within each refinement pass.
IntegrationResult integrate01(const std::function<cplx(double)>& f,
                              bool singular_left, bool singular_right,
                              double tol = 1e-11, int n0 = 64, int nmax = 1024);

// integrate01 with recursive bisection where plain doubling stalls, for
// integrands with sharp interior features; deltas of the pieces accumulate
IntegrationResult integrate01_adaptive(const std::function<cplx(double)>& f,
                                       bool singular_left, bool singular_right,
                                       double tol = 1e-11, int n0 = 64, int nmax = 1024,
                                       int max_depth = 7);

// Integral of f along the straight segment from a to b.
IntegrationResult integrate_segment(const std::function<cplx(cplx)>& f,
                                    cplx a, cplx b,
                                    bool singular_a, bool singular_b,
                                    double tol = 1e-11, int n0 = 64, int nmax = 1024);

// Continuous branch of sqrt(g(t)) along t in [0,1], anchored at w0 with
// w0^2 = g(0). g must not vanish on [0,1]. Queries are order-independent.
class SqrtTracker {
 public:
  SqrtTracker(std::function<cplx(double)> g, cplx w0);
  cplx operator()(double t) const;

 private:
  std::function<cplx(double)> g_;
  std::vector<double> ts_;
  std::vector<cplx> ws_;
};

// Horner evaluation of c[0]*z^n + c[1]*z^{n-1} + ... + c[n]
cplx polyval(const std::vector<cplx>& c, cplx z);
// derivative in the same descending-coefficient layout
std::vector<cplx> polyder(const std::vector<cplx>& c);
// monic expansion of prod (z - r_k), descending layout
std::vector<cplx> poly_from_roots(const std::vector<cplx>& roots);

}  // namespace num
}  // namespace hyptr
