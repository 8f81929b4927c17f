#pragma once

#include <string>

#include "gitstab/xtilde_profile.hpp"

namespace gitstab {

// Staircase of the X~ profile with the virtual profile polyline over it.
std::string render_svg(const MultFiltration& mf, const XTildeProfile& xt);
// Same picture on a character grid; `columns` is clamped to 120.
std::string render_ascii(const MultFiltration& mf, const XTildeProfile& xt, int columns = 100, int rows = 24);

}  // namespace gitstab
