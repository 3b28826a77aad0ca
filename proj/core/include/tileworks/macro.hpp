#pragma once

// Block-granularity execution of the simulating system. Each block is a
// state machine: pads arrive from completed neighbours, a strength-2 input
// set triggers probing and type detection, the lookup table picks a tile, and
// the block emits output pads on every non-input side.

#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tileworks/atam.hpp"
#include "tileworks/block.hpp"
#include "tileworks/encoder.hpp"
#include "tileworks/lookup.hpp"

namespace tw {

// Partial map from block coordinates to block states. Block (X, Y) stands
// for source position (X, Y); states are shared between successors.
class MacroAssembly {
 public:
  using Entry = std::pair<Position, std::shared_ptr<const BlockState>>;

  MacroAssembly() = default;

  // Only the compiled seed block at (0, 0).
  static MacroAssembly seeded(const CompiledSystem& cs);

  const BlockState* at(Position p) const;
  MacroAssembly with(Position p, BlockState state) const;

  const std::vector<Entry>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  std::size_t hash() const { return hash_; }

  friend bool operator==(const MacroAssembly& a, const MacroAssembly& b);

 private:
  std::vector<Entry> blocks_;  // sorted by position
  std::size_t hash_ = 0;
};

struct MacroAssemblyHash {
  std::size_t operator()(const MacroAssembly& m) const { return m.hash(); }
};

enum class MacroEventKind : std::uint8_t { Arrive, Probe, Detect, Commit, Complete };

const char* to_string(MacroEventKind k);

struct MacroEvent {
  MacroEventKind kind = MacroEventKind::Arrive;
  Position block;
  Direction side = Direction::N;  // Arrive: receiving side
  std::optional<Pad> pad;         // Arrive: the pad as seen by the receiver
  std::optional<BitString> bits;  // Probe: fixed random bits, else drawn

  friend bool operator==(const MacroEvent&, const MacroEvent&) = default;
};

std::string to_string(const MacroEvent& e);

struct EngineOptions {
  // Fault: probe as soon as any input arrives and commit to the first address
  // whose pads contain the received ones.
  bool commit_without_full_inputs = false;
};

struct MacroTransition {
  std::size_t from = 0;
  std::size_t to = 0;
  MacroEvent event;
  std::uint64_t weight = 1;  // number of random-bit values that take this edge
};

struct MacroExploration {
  std::vector<MacroAssembly> states;  // index 0 is the seeded state
  std::vector<MacroTransition> edges;
  std::unordered_map<MacroAssembly, std::size_t, MacroAssemblyHash> index;
  // r* of each state; nullopt where decoding raised an integrity error.
  std::vector<std::optional<Assembly>> images;
  std::vector<std::string> image_errors;  // parallel to images
  std::vector<bool> terminal;
  std::vector<std::string> diagnostics;  // stuck blocks, sorted and unique
  bool truncated = false;
  std::size_t bound = 0;

  // Distinct decoded images, in first-discovery order.
  std::vector<Assembly> image_set() const;
  std::vector<Assembly> terminal_images() const;
};

struct SimulationRun {
  MacroAssembly final_state;
  std::vector<MacroEvent> events;
  std::vector<std::string> log;  // one line per event
  bool truncated = false;
};

class MacroEngine {
 public:
  explicit MacroEngine(const CompiledSystem& cs, EngineOptions options = {});

  const CompiledSystem& system() const { return cs_; }

  // Enabled events in a fixed order. Probe events are returned without bits.
  // Probes that would push the number of started blocks past `bound` are
  // dropped and reported through `suppressed`.
  std::vector<MacroEvent> frontier(const MacroAssembly& m,
                                   std::size_t bound = std::numeric_limits<std::size_t>::max(),
                                   bool* suppressed = nullptr) const;

  // Applies an enabled event; a Probe without bits draws them from a stream
  // keyed by (rng_seed, block). Throws IllegalEvent otherwise.
  MacroAssembly step(const MacroAssembly& m, const MacroEvent& e, std::uint64_t rng_seed) const;

  // Random-bit values that lead to distinct selections at `block`, each with
  // the number of values it stands for.
  std::vector<std::pair<BitString, std::uint64_t>> bit_classes(const MacroAssembly& m, Position block) const;

  // Closure over every event and every selection class, with at most `bound`
  // blocks past the input stage.
  MacroExploration explore(std::size_t bound) const;

  SimulationRun simulate(std::uint64_t rng_seed, std::size_t max_events,
                         std::size_t bound = std::numeric_limits<std::size_t>::max()) const;

  // Blocks whose received strength exceeds 2, with a short reason each.
  std::vector<std::string> stuck_blocks(const MacroAssembly& m) const;

 private:
  std::optional<std::uint64_t> resolve_address(const BlockState& b) const;
  const std::optional<LookupOutcome>& cached_lookup(std::uint64_t address, std::size_t p) const;
  std::optional<std::size_t> entry_size(std::uint64_t address) const;
  bool probe_ready(const BlockState& b) const;
  std::optional<MacroEvent> enabled(const MacroAssembly& m, Position pos, const BlockState& b) const;
  MacroAssembly apply(const MacroAssembly& m, const MacroEvent& e) const;

  const CompiledSystem& cs_;
  EngineOptions options_;
  mutable std::map<std::pair<std::uint64_t, std::size_t>, std::optional<LookupOutcome>> lookups_;
  mutable std::map<std::uint64_t, std::optional<std::size_t>> entry_sizes_;
};

// Tile represented by a block: the committed tile once phase >= Committed,
// otherwise nothing. Throws RepresentationIntegrity when a completed block's
// outputs disagree with the committed tile.
std::optional<TileIndex> decode_block(const BlockState& b, const CompiledSystem& cs);

Assembly r_star(const MacroAssembly& m, const CompiledSystem& cs);

// Edge string a committed block shows on side `d`.
std::string materialize_edge(const BlockState& b, Direction d, const CompiledSystem& cs);

std::vector<MacroEvent> macro_frontier(const CompiledSystem& cs, const MacroAssembly& m);
MacroAssembly macro_step(const CompiledSystem& cs, const MacroAssembly& m, const MacroEvent& e,
                         std::uint64_t rng_seed);
MacroExploration macro_explore(const CompiledSystem& cs, std::size_t bound);

// One line per event: block, phase change and detail.
std::string describe_event(const MacroAssembly& before, const MacroEvent& e, const MacroAssembly& after,
                           const CompiledSystem& cs);

}  // namespace tw
