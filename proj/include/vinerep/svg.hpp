#pragma once

#include <string>

#include "vinerep/vineyard.hpp"

namespace vinerep {

// Standalone SVG drawing of a vineyard: time on the x-axis, height on the
// y-axis, one color per vine with its birth and death polylines, dashed
// verticals at critical times.
std::string render_svg(const Vineyard& v);

}  // namespace vinerep
