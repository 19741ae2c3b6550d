#pragma once

#include <random>

#include "hyptr/curve.hpp"

namespace hyptr::testutil {

inline cplx random_unit_box(std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  double re = u(rng);
  double im = u(rng);
  return {re, im};
}

// well-separated random sextic with complex roots in a box
inline curve::HyperellipticCurve random_sextic(std::mt19937_64& rng, double box = 2.0) {
  std::uniform_real_distribution<double> u(-box, box);
  for (;;) {
    std::vector<cplx> roots(6);
    for (auto& r : roots) r = cplx(u(rng), u(rng));
    double spread = 0.0, minsep = 1e300;
    for (size_t i = 0; i < 6; ++i)
      for (size_t j = i + 1; j < 6; ++j) {
        double d = std::abs(roots[i] - roots[j]);
        spread = std::max(spread, d);
        minsep = std::min(minsep, d);
      }
    if (minsep < 0.08 * spread) continue;
    std::uniform_real_distribution<double> a(0.5, 1.5);
    std::uniform_real_distribution<double> ph(0.0, 2.0 * kPi);
    cplx lead = std::polar(a(rng), ph(rng));
    return curve::curve_from_roots(curve::Model::Sextic, lead, std::move(roots));
  }
}

inline curve::HyperellipticCurve random_quintic(std::mt19937_64& rng, double box = 2.0) {
  std::uniform_real_distribution<double> u(-box, box);
  for (;;) {
    std::vector<cplx> roots(5);
    for (auto& r : roots) r = cplx(u(rng), u(rng));
    double spread = 0.0, minsep = 1e300;
    for (size_t i = 0; i < 5; ++i)
      for (size_t j = i + 1; j < 5; ++j) {
        double d = std::abs(roots[i] - roots[j]);
        spread = std::max(spread, d);
        minsep = std::min(minsep, d);
      }
    if (minsep < 0.08 * spread) continue;
    return curve::curve_from_roots(curve::Model::Quintic, cplx(1), std::move(roots));
  }
}

}  // namespace hyptr::testutil
