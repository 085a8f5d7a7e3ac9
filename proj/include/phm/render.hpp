#pragma once

#include <string>
#include <vector>

#include "phm/core.hpp"

namespace phm {

/// CSV with header "theta,re,im" and one row per curve point, 7 significant
/// digits. Byte-deterministic for fixed inputs.
std::string curve_to_csv(const std::vector<Complex>& curve);

/// Single closed SVG path of the boundary curve; when with_half_disk is set a
/// reference circle of radius 1/2 is drawn as well.
std::string curve_to_svg(const std::vector<Complex>& curve, bool with_half_disk);

}  // namespace phm
