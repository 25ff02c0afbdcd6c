#pragma once

#include <cmath>

namespace gfflab {

// Height gap constant of the GFF level-set geometry, lambda = sqrt(pi/8).
// All field levels in this project are expressed in the normalization where
// the Green function behaves like (2*pi)^-1 * log(1/|x-y|) near the diagonal.
inline constexpr double kPi = 3.14159265358979323846;
inline const double kLambda = std::sqrt(kPi / 8.0);
inline const double kTwoLambda = 2.0 * kLambda;  // = sqrt(pi/2)

}  // namespace gfflab
