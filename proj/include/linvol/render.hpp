#pragma once

#include <string>
#include <vector>

#include "linvol/involution.hpp"

namespace linvol {

/// Static two-row SVG diagram: proportional interval widths, division ticks
/// and letter labels (uppercase for inverses). `names` maps base letters to
/// display characters; pass {} for the canonical a, b, c, ...
std::string renderSvg(const LinearInvolution& t, const std::vector<char>& names = {});

}  // namespace linvol
