#pragma once

#include "arens/multimap.hpp"

#include <string>
#include <vector>

namespace arens {

/// Named maps for command-line checks: group triple convolutions (`z2`, `z3`,
/// `z4`, `s3`, also spelled `z3-conv` etc.), the `poly3-euler` tri-derivation
/// tensor and the `zero` map on (2,2,2) -> 2.
MultiMap map_fixture(const std::string& name);

std::vector<std::string> map_fixture_names();

}  // namespace arens
