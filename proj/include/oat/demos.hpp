#pragma once

#include <string>
#include <vector>

#include "oat/scenario.hpp"

namespace oat {

// Self-contained scenario documents exercising the toolkit end to end.
// Throws UnknownDemo for unlisted names.
Json generate_demo(const std::string& name);

const std::vector<std::string>& demo_names();

}  // namespace oat
