#pragma once

#include <array>

#include "rotamap/perm.hpp"

namespace rotamap::detail {

extern const std::array<Point, 18> kThreeA6_a;
extern const std::array<Point, 18> kThreeA6_z;
extern const std::array<Point, 18> kThreeA6_b;
extern const std::array<Point, 18> kThreeA6_c;
extern const std::array<Point, 18> kThreeA6_ap;
extern const std::array<std::array<Point, 3>, 6> kThreeA6Blocks;

}  // namespace rotamap::detail
