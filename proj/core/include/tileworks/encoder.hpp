#pragma once

// Compiles a locally consistent system into its glue lookup table: addresses
// over input pads, the entry string w, the blank-spliced table, supertile edge
// strings, and the seed block of the simulating system.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tileworks/atam.hpp"
#include "tileworks/block.hpp"
#include "tileworks/pad.hpp"

namespace tw {

// Canonical (first, second) order for two-pad addresses: EN, SE, WS, NW, NS, EW.
inline constexpr std::array<std::pair<Direction, Direction>, 6> kAddressPairOrder{{
    {Direction::E, Direction::N},
    {Direction::S, Direction::E},
    {Direction::W, Direction::S},
    {Direction::N, Direction::W},
    {Direction::N, Direction::S},
    {Direction::E, Direction::W},
}};

struct Address {
  BitString bits;
  std::uint64_t value = 0;
  std::vector<Pad> pads;  // in the order they appear in `bits`

  DirectionSet directions() const;

  friend bool operator==(const Address&, const Address&) = default;
};

// One strength-2 pad, or two strength-1 pads on distinct sides.
Address address_of(std::span<const Pad> pads, const GlueOrdering& ord);

struct AddressEntry {
  Address address;
  std::vector<TileIndex> tiles;  // ascending tile index; the sub-entry order
};

// Every input-side combination of every tile whose strengths sum to exactly 2,
// grouped by address and sorted by address value.
std::vector<AddressEntry> addresses(const Tas& tas, const GlueOrdering& ord);

// "OUT(N),OUT(E),OUT(S),OUT(W)", each a reversed pad encoding or empty.
std::string sub_entry_string(const TileType& t, DirectionSet inputs, const GlueOrdering& ord);

// Entries e_0 .. e_maxA, each '#' followed by ';'-separated sub-entries.
std::string build_w(const Tas& tas, const GlueOrdering& ord);
std::string build_w(const std::vector<AddressEntry>& addrs, const Tas& tas, const GlueOrdering& ord);

inline constexpr char kBlank = '_';

std::string splice_blanks(std::string_view s);
std::string strip_blanks(std::string_view s);

inline constexpr std::string_view kTableStart = ">";
inline constexpr std::string_view kTableMiddle = "<%%>";
inline constexpr std::string_view kTableEnd = "<";

// sb(">" + w + "<%%>" + reverse(w) + "<"), blanks rendered as kBlank.
class LookupTable {
 public:
  LookupTable() = default;
  static LookupTable from_w(std::string_view w);
  // Wraps raw symbols without checking them; see validate().
  static LookupTable from_symbols(std::string symbols);

  const std::string& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }

  // Throws TableFormat unless blanks sit exactly on odd indices and the
  // stripped string has the palindromic ">" w "<%%>" w^R "<" shape.
  void validate() const;

  friend bool operator==(const LookupTable&, const LookupTable&) = default;

 private:
  std::string symbols_;
};

LookupTable build_table(const Tas& tas);

struct CompileParams {
  std::optional<std::size_t> cprime;       // spacer length; default width + 3
  std::optional<std::size_t> random_bits;  // default max(4, 2*ceil(log2 max|T_i|))
  bool force = false;                      // skip the local consistency gate
  std::size_t lc_bound = 25;
};

struct CompiledSystem {
  Tas source;
  GlueOrdering glues;
  std::string w;
  LookupTable table;
  std::vector<AddressEntry> addresses;
  std::uint64_t entry_count = 0;  // 1 + max address value
  std::size_t cprime = 0;
  std::size_t random_bits = 0;
  std::size_t c = 0;  // block side: 2|table| + 2(width+3) + cprime
  // Lower-left corner of the seed block in the simulating system's grid.
  Position seed_origin{0, 0};
  BlockState seed_block;

  const AddressEntry* find_address(std::uint64_t value) const;
};

CompiledSystem compile(const Tas& tas, const CompileParams& params = {});

// T ∘ field ∘ 0^c' ∘ field ∘ T, where field is bin_pad of the side's pad or
// width+3 zeros for a null side. Every direction uses the same layout read in
// its canonical orientation (N/S west to east, E/W south to north).
std::string edge_string(const Tas& tas, TileIndex t, Direction d, std::size_t cprime);
std::string edge_string(const CompiledSystem& cs, TileIndex t, Direction d);
std::string edge_string_for(const CompiledSystem& cs, const std::optional<Pad>& pad);

std::size_t default_random_bits(const std::vector<AddressEntry>& addrs);

// Text artifact with GLUES, TABLE, ADDRESSES, PARAMS and SEED sections.
std::string serialize(const CompiledSystem& cs);

}  // namespace tw
