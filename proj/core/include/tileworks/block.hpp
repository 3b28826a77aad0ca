#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "tileworks/pad.hpp"

namespace tw {

// Phases advance strictly in this order.
enum class BlockPhase : std::uint8_t {
  Empty,
  InputsPartial,
  Probing,
  TypeDetected,
  Committed,
  Complete,
};

const char* to_string(BlockPhase p);

enum class InputKind : std::uint8_t {
  SingleStrengthTwo,  // one strength-2 input
  OppositePair,       // NS or EW strength-1 inputs
  AdjacentPair,       // NE, NW, ES or SW strength-1 inputs
};

const char* to_string(InputKind k);

// One supertile-sized block of the simulating system.
struct BlockState {
  BlockPhase phase = BlockPhase::Empty;
  // Pads received on this block's sides, already expressed from this block's
  // point of view (a pad arriving from the west neighbour sits on side W).
  std::array<std::optional<Pad>, 4> input_pads{};
  std::optional<InputKind> input_kind;
  BitString random_bits;
  std::optional<std::uint64_t> address;
  std::optional<std::size_t> selected_index;
  std::optional<TileIndex> committed_tile;
  std::array<std::optional<Pad>, 4> output_pads{};

  DirectionSet input_sides() const;
  int input_strength() const;

  std::size_t hash() const;

  friend bool operator==(const BlockState&, const BlockState&) = default;
};

}  // namespace tw
