// Generated by tools/three_a6_oracle.py; do not edit by hand.
#include <array>

#include "rotamap/catalog_data.hpp"

namespace rotamap::detail {

const std::array<Point, 18> kThreeA6_a = {1, 2, 0, 6, 7, 8, 11, 9, 10, 13, 14, 12, 15, 16, 17, 5, 3, 4};
const std::array<Point, 18> kThreeA6_z = {17, 15, 16, 3, 4, 5, 6, 7, 8, 13, 14, 12, 11, 9, 10, 1, 2, 0};
const std::array<Point, 18> kThreeA6_b = {0, 1, 2, 12, 13, 14, 15, 16, 17, 3, 4, 5, 8, 6, 7, 10, 11, 9};
const std::array<Point, 18> kThreeA6_c = {1, 2, 0, 4, 5, 3, 7, 8, 6, 10, 11, 9, 13, 14, 12, 16, 17, 15};
const std::array<Point, 18> kThreeA6_ap = {2, 0, 1, 7, 8, 6, 9, 10, 11, 14, 12, 13, 16, 17, 15, 3, 4, 5};

const std::array<std::array<Point, 3>, 6> kThreeA6Blocks = {{
    {3, 4, 5},
    {6, 7, 8},
    {9, 10, 11},
    {12, 13, 14},
    {15, 16, 17},
    {0, 1, 2},
}};

}  // namespace rotamap::detail
