#pragma once

// Binary pad encoding: glue orderings, (glue, direction, strength) pads and
// their fixed-width bit strings.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tileworks/atam.hpp"

namespace tw {

class BitString {
 public:
  BitString() = default;
  explicit BitString(std::string bits);

  static BitString from_value(std::uint64_t value, std::size_t width);
  static BitString zeros(std::size_t width) { return BitString(std::string(width, '0')); }

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  const std::string& str() const { return bits_; }
  char operator[](std::size_t i) const { return bits_[i]; }

  // Big-endian integer reading; throws if longer than 64 bits.
  std::uint64_t value() const;

  BitString reversed() const;

  friend BitString operator+(const BitString& a, const BitString& b) {
    return BitString(a.bits_ + b.bits_);
  }
  friend bool operator==(const BitString&, const BitString&) = default;
  friend auto operator<=>(const BitString&, const BitString&) = default;

 private:
  std::string bits_;
};

// Null glue first, then the positive-strength glue labels in a fixed order.
struct GlueOrdering {
  std::vector<Glue> glues;
  std::size_t width = 1;  // ceil(log2(|G| + 1)) bits per glue index

  std::optional<std::size_t> index_of(const Glue& g) const;
  std::size_t pad_length() const { return width + 3; }

  friend bool operator==(const GlueOrdering&, const GlueOrdering&) = default;
};

// Ordering over explicit labels, sorted; used directly by tests.
GlueOrdering make_ordering(std::vector<std::string> labels);

// Null first, then every glue used with positive strength in `tas`, sorted.
GlueOrdering glue_ordering(const Tas& tas);

// An encodable pad: a non-null glue on a side with strength 1 or 2.
struct Pad {
  Glue glue;
  Direction direction = Direction::N;
  int strength = 1;

  friend bool operator==(const Pad&, const Pad&) = default;
};

std::string to_string(const Pad& p);

// Pad on side `d` of `t`, or nullopt for a null side.
std::optional<Pad> pad_of(const TileType& t, Direction d);

// width-bit glue index, 2-bit direction (N=00 E=01 S=10 W=11), 1-bit strength.
BitString bin_pad(const Pad& p, const GlueOrdering& ord);
Pad decode_pad(const BitString& bits, const GlueOrdering& ord);

// Output pads of one candidate tile; input and null sides stay empty.
struct SubEntry {
  std::array<std::optional<Pad>, 4> out{};

  const std::optional<Pad>& at(Direction d) const { return out[index_of(d)]; }
  std::optional<Pad>& at(Direction d) { return out[index_of(d)]; }

  friend bool operator==(const SubEntry&, const SubEntry&) = default;
};

std::string to_string(const SubEntry& s);

}  // namespace tw
