#pragma once

#include <string>
#include <unordered_map>

#include "orthoplan/layout.hpp"

namespace orthoplan {

// Deterministic SVG rendering: one path per module, label at the box
// center, designated module highlighted.
std::string render_svg(const OrthoPlan& plan,
                       const std::unordered_map<Vid, std::string>& labels = {});

} // namespace orthoplan
