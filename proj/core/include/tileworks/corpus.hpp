#pragma once

// Example locally consistent systems, plus two variants that break the class.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tileworks/atam.hpp"

namespace tw::corpus {

// Seed with a strength-2 arm east and north; tD joins the arms cooperatively.
Tas elbow();

// elbow() plus tD2, which shares tD's inputs and adds a north output.
Tas nondet_elbow();

// Zig-zag binary counter. Value rows sit at even y and grow west from the
// least significant bit at x = 0; odd rows return east. width >= 2.
Tas counter(std::size_t width);

// Value of counter row k (the bits on value row y = 2k), if complete.
std::optional<std::uint64_t> counter_row_value(const Tas& tas, const Assembly& a, std::size_t width, int k);

// XOR triangle on an n x n square: cell (x, y) carries C(x + y, x) mod 2.
Tas sierpinski(std::size_t n);

// Bit carried by a sierpinski cell.
std::optional<int> sierpinski_bit(const Tas& tas, const Assembly& a, Position p);

// A loop closing on a tile whose two strength-1 inputs sit on opposite sides.
Tas bridge();

// tD binds with strength 2 from the south but shows a different label west.
Tas mismatch_variant();

// tX binds with strength 4 on its first attachment.
Tas strength_four_variant();

struct Entry {
  std::string name;  // fixture file stem
  std::function<Tas()> make;
  bool locally_consistent = true;
  std::size_t lc_bound = 25;
};

const std::vector<Entry>& entries();

const Entry* find(const std::string& name);

}  // namespace tw::corpus
