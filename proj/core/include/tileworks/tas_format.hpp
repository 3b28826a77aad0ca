#pragma once

// Line-oriented tile set files:
//
//   temperature 2
//   tile NAME N=GLUE:S E=GLUE:S S=GLUE:S W=GLUE:S
//   seed NAME
//
// GLUE is a label or '-' for the null glue (strength 0). '#' starts a comment.

#include <string>
#include <string_view>
#include <vector>

#include "tileworks/atam.hpp"

namespace tw {

struct SourceLocation {
  int line = 0;
  int column = 0;
};

struct TasDocument {
  Tas tas;
  std::vector<SourceLocation> tile_locations;  // parallel to tas.tiles()
  SourceLocation seed_location;
};

// Throws ParseError with the offending line and column.
TasDocument parse_tas(std::string_view text);

// Canonical text; `title`, when given, becomes a leading comment line.
std::string print_tas(const Tas& tas, std::string_view title = {});

TasDocument load_tas_file(const std::string& path);

}  // namespace tw
