#pragma once

// Table lookup: given an address and random bits, select one sub-entry and
// read back its output pads. `direct_lookup` parses w directly and serves as
// the reference; `trace_lookup` sweeps the blank-spliced table column by
// column the way the supertile's zig-zag does, using only counters.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tileworks/encoder.hpp"
#include "tileworks/error.hpp"
#include "tileworks/pad.hpp"

namespace tw {

// Splits an entry ("#" followed by ';'-separated sub-entries) into sub-entries.
std::vector<SubEntry> parse_entry(std::string_view entry, const GlueOrdering& ord);

SubEntry direct_lookup(std::string_view w, const GlueOrdering& ord, std::uint64_t address, std::size_t p);

std::size_t mod_select(const BitString& b, std::size_t n);

enum class SweepPhase : std::uint8_t {
  Seek,        // counting entries up to the address
  CountSub,    // counting sub-entries n inside the matched entry
  CountRest,   // counting entries m left before the middle marker
  Middle,      // crossing "<%%>"; p = b mod n is formed here
  Countdown,   // subtracting m at each entry of the mirrored copy
  Select,      // subtracting p at each sub-entry of the mirrored entry
  Extract,     // reading the selected sub-entry's fields
  Propagate,   // carrying the output pads to the last column
};

const char* to_string(SweepPhase p);

struct ColumnRecord {
  std::size_t column = 0;
  char symbol = kBlank;
  SweepPhase phase = SweepPhase::Seek;
  std::uint64_t counter = 0;  // entry counter (phase 1) or countdown (phase 2)
  std::size_t n = 0;
  std::uint64_t m = 0;
  std::size_t p = 0;  // remaining sub-entry countdown during selection
};

struct PhaseTrace {
  // Phase 1.
  std::uint64_t counter_at_match = 0;
  std::size_t n = 0;
  std::uint64_t m = 0;
  std::size_t match_column = 0;
  // Phase 2.
  std::uint64_t b = 0;
  std::size_t p = 0;  // b mod n, counted in mirrored sub-entry order
  std::size_t countdown_end_column = 0;
  std::size_t selection_column = 0;
  std::size_t selected_index = 0;  // == p
  std::vector<ColumnRecord> columns;  // only when requested
};

struct LookupOutcome {
  SubEntry sub_entry;
  std::vector<TileIndex> tile_candidates;
  std::size_t selected_index = 0;  // index in the original (unmirrored) entry order
};

struct TraceResult {
  LookupOutcome outcome;
  PhaseTrace trace;
};

// Lookup failure that keeps the sweep state reached before the failure.
class LookupError : public Error {
 public:
  LookupError(ErrorKind kind, const std::string& what, PhaseTrace trace)
      : Error(kind, what), trace_(std::move(trace)) {}

  const PhaseTrace& trace() const noexcept { return trace_; }

 private:
  PhaseTrace trace_;
};

struct TraceOptions {
  bool record_columns = false;
};

// Errors: AddressRange and EmptyEntry are raised as LookupError carrying the
// partial trace; TableFormat and EntryFormat for malformed tables.
TraceResult trace_lookup(const LookupTable& table, const GlueOrdering& ord, std::uint64_t address,
                         const BitString& b, const TraceOptions& options = {});

// trace_lookup plus the tile candidates recorded for the address.
TraceResult lookup(const CompiledSystem& cs, std::uint64_t address, const BitString& b,
                   const TraceOptions& options = {});

// Mirrored selection index p maps to sub-entry n - 1 - p of the original entry.
inline std::size_t unmirror(std::size_t p, std::size_t n) { return n - 1 - p; }

std::string render_trace(const PhaseTrace& trace);

}  // namespace tw
