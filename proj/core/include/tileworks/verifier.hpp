#pragma once

// Checks the three simulation conditions between a source system and its
// compiled block simulation, up to a bound:
//   1. the seed block represents the source seed;
//   2. decoded macro assemblies are exactly the producible ones;
//   3. reachability between producible assemblies is mirrored by the blocks.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tileworks/atam.hpp"
#include "tileworks/encoder.hpp"
#include "tileworks/local_consistency.hpp"
#include "tileworks/macro.hpp"

namespace tw {

// Explorations shared by the coverage and dynamics checks.
struct VerifierInputs {
  std::size_t bound = 0;
  ExplorationResult source;       // at `bound`
  ExplorationResult source_wide;  // at `bound + 1`, for soundness
  MacroExploration macro;         // at `bound` started blocks
};

VerifierInputs prepare_inputs(const CompiledSystem& cs, std::size_t bound, const EngineOptions& options = {});

Verdict check_seed_condition(const CompiledSystem& cs);

Verdict check_coverage(const CompiledSystem& cs, const VerifierInputs& in);
Verdict check_coverage(const CompiledSystem& cs, std::size_t bound, const EngineOptions& options = {});

struct DynamicsStats {
  std::size_t pairs_checked = 0;   // (alpha, alpha') source pairs with alpha' reachable from alpha
  std::size_t one_step_total = 0;  // single-attachment source transitions
  std::size_t one_step_mirrored = 0;
};

Verdict check_dynamics(const CompiledSystem& cs, const VerifierInputs& in, DynamicsStats* stats = nullptr);
Verdict check_dynamics(const CompiledSystem& cs, std::size_t bound, const EngineOptions& options = {});

struct SimulationReport {
  std::size_t bound = 0;
  Verdict condition1;
  Verdict condition2;
  Verdict condition3;
  bool source_truncated = false;
  bool macro_truncated = false;
  std::size_t source_assemblies = 0;
  std::size_t macro_states = 0;
  std::size_t decoded_images = 0;
  DynamicsStats dynamics;
  std::vector<std::string> diagnostics;

  bool passed() const { return condition1.passed && condition2.passed && condition3.passed; }
};

SimulationReport full_report(const CompiledSystem& cs, std::size_t bound, const EngineOptions& options = {});

// Stable line-oriented text form.
std::string to_text(const SimulationReport& report, const Tas& source);

namespace faults {

// Swaps the entries (text and tile lists) of two addresses.
CompiledSystem scramble_entries(const CompiledSystem& cs, std::uint64_t a, std::uint64_t b);

// Replaces the seed block's committed tile, leaving its outputs as they were.
CompiledSystem swap_seed_tile(const CompiledSystem& cs, TileIndex tile);

// Moves the seed block's origin off the first block footprint.
CompiledSystem shift_seed_origin(const CompiledSystem& cs, Position origin);

}  // namespace faults

}  // namespace tw
