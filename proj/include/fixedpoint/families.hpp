#pragma once

#include "fixedpoint/datum.hpp"

#include <string_view>

namespace fixedpoint {

/// Rotation of the 2-sphere: {a}, {-a}.
Datum sphere2(Weight a);

/// Rotation-type data on the 6-sphere: {-a-b, a, b}, {-a, -b, a+b}.
Datum sphere6(Weight a, Weight b);

/// CP^2-type triple: {a+b, a}, {-a, b}, {-b, -a-b}.
Datum cp2_triple(Weight a, Weight b);

/// Dispatch by family name ("sphere2", "sphere6", "cp2"); b is ignored for
/// sphere2. Throws std::invalid_argument on an unknown name or nonpositive
/// parameters. All generators return canonical data.
Datum family(std::string_view name, Weight a, Weight b = 1);

} // namespace fixedpoint
