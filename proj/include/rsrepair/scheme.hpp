#pragma once

#include <string>

namespace rsrepair {

/// Repair schemes the simulator and CLI can drive.
enum class Scheme { Naive, GW, DepthOne, DepthTwo };

std::string to_string(Scheme s);
Scheme scheme_from_string(const std::string& name);

}  // namespace rsrepair
