#pragma once

#include <string>

#include "tileworks/atam.hpp"

namespace tw {

struct SvgOptions {
  int scale = 60;  // pixels per cell
  bool show_glues = true;
};

// One square per cell with the tile name centred and glue labels on its
// edges; strength-2 edges are drawn doubled. North is up.
std::string render_svg(const Tas& tas, const Assembly& a, const SvgOptions& options = {});

}  // namespace tw
