// Generated by tools/derive_theta_tables; do not edit by hand.
#include "theta_tables.hpp"

namespace hyptr::theta::tables {

const std::array<SignedTriple, 60> kWeightSixTriples = {{
    {0, 1, 2, 1},
    {0, 1, 3, 1},
    {0, 1, 6, -1},
    {0, 1, 7, -1},
    {0, 2, 3, 1},
    {0, 2, 4, -1},
    {0, 2, 5, -1},
    {0, 3, 8, -1},
    {0, 3, 9, -1},
    {0, 4, 5, -1},
    {0, 4, 6, 1},
    {0, 4, 8, 1},
    {0, 5, 7, 1},
    {0, 5, 9, 1},
    {0, 6, 7, -1},
    {0, 6, 8, 1},
    {0, 7, 9, 1},
    {0, 8, 9, -1},
    {1, 2, 3, 1},
    {1, 2, 8, 1},
    {1, 2, 9, 1},
    {1, 3, 4, 1},
    {1, 3, 5, 1},
    {1, 4, 5, -1},
    {1, 4, 7, -1},
    {1, 4, 8, 1},
    {1, 5, 6, -1},
    {1, 5, 9, 1},
    {1, 6, 7, -1},
    {1, 6, 9, -1},
    {1, 7, 8, -1},
    {1, 8, 9, -1},
    {2, 3, 6, 1},
    {2, 3, 7, 1},
    {2, 4, 5, -1},
    {2, 4, 7, -1},
    {2, 4, 9, -1},
    {2, 5, 6, -1},
    {2, 5, 8, -1},
    {2, 6, 7, -1},
    {2, 6, 8, 1},
    {2, 7, 9, 1},
    {2, 8, 9, -1},
    {3, 4, 5, -1},
    {3, 4, 6, 1},
    {3, 4, 9, -1},
    {3, 5, 7, 1},
    {3, 5, 8, -1},
    {3, 6, 7, -1},
    {3, 6, 9, -1},
    {3, 7, 8, -1},
    {3, 8, 9, -1},
    {4, 6, 8, 1},
    {4, 6, 9, 1},
    {4, 7, 8, 1},
    {4, 7, 9, 1},
    {5, 6, 8, 1},
    {5, 6, 9, 1},
    {5, 7, 8, 1},
    {5, 7, 9, 1},
}};

const std::array<std::array<int, 6>, 15> kWeightTwelveSextets = {{
    {{4, 5, 6, 7, 8, 9}},
    {{2, 3, 4, 5, 8, 9}},
    {{1, 3, 6, 7, 8, 9}},
    {{1, 2, 4, 5, 6, 7}},
    {{1, 2, 3, 5, 7, 9}},
    {{1, 2, 3, 4, 6, 8}},
    {{0, 3, 4, 5, 6, 7}},
    {{0, 2, 6, 7, 8, 9}},
    {{0, 2, 3, 5, 6, 9}},
    {{0, 2, 3, 4, 7, 8}},
    {{0, 1, 4, 5, 8, 9}},
    {{0, 1, 3, 5, 6, 8}},
    {{0, 1, 3, 4, 7, 9}},
    {{0, 1, 2, 5, 7, 8}},
    {{0, 1, 2, 4, 6, 9}},
}};

const double kChi12Scale = 1.0 / 393216;

const double kE6Scale = 0.25;

}  // namespace hyptr::theta::tables
