#pragma once

#include <array>

// Frozen combinatorial data for the cusp-form expressions. The entries are
// produced by tools/derive_theta_tables and checked by the cusp-form tests;
// regenerate with that tool if the characteristic ordering ever changes.
namespace hyptr::theta::tables {

// labels of the even characteristics, ascending; index order used everywhere
inline constexpr std::array<int, 10> kEvenBits = {0, 1, 2, 3, 4, 6, 8, 9, 12, 15};

// triples of even-characteristic indices whose sum is again even, with the
// sign making the weight-six combination modular
struct SignedTriple {
  int i, j, k, sign;
};
extern const std::array<SignedTriple, 60> kWeightSixTriples;

// complements of the quadruples of even characteristics summing to zero
extern const std::array<std::array<int, 6>, 15> kWeightTwelveSextets;

// prefactor of the weight-twelve sum of sextet fourth powers
extern const double kChi12Scale;

// prefactor of the weight-six triple sum
extern const double kE6Scale;

}  // namespace hyptr::theta::tables
