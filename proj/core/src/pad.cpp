#include "tileworks/pad.hpp"

#include <algorithm>
#include <set>

#include "tileworks/error.hpp"

namespace tw {

BitString::BitString(std::string bits) : bits_(std::move(bits)) {
  for (char c : bits_)
    if (c != '0' && c != '1') throw Error(ErrorKind::Decode, "bit string contains '" + std::string(1, c) + "'");
}

BitString BitString::from_value(std::uint64_t value, std::size_t width) {
  std::string s(width, '0');
  for (std::size_t i = 0; i < width && i < 64; ++i)
    if ((value >> i) & 1u) s[width - 1 - i] = '1';
  if (width < 64 && (value >> width) != 0)
    throw Error(ErrorKind::Encoding,
                std::to_string(value) + " does not fit in " + std::to_string(width) + " bits");
  return BitString(std::move(s));
}

std::uint64_t BitString::value() const {
  if (bits_.size() > 64) throw Error(ErrorKind::Decode, "bit string longer than 64 bits");
  std::uint64_t v = 0;
  for (char c : bits_) v = (v << 1) | static_cast<std::uint64_t>(c == '1');
  return v;
}

BitString BitString::reversed() const { return BitString(std::string(bits_.rbegin(), bits_.rend())); }

namespace {

std::size_t ceil_log2(std::size_t n) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

GlueOrdering ordering_from(std::set<std::string> labels) {
  GlueOrdering ord;
  ord.glues.push_back(Glue::null());
  for (const std::string& l : labels) ord.glues.emplace_back(l);
  ord.width = std::max<std::size_t>(1, ceil_log2(ord.glues.size() + 1));
  return ord;
}

}  // namespace

std::optional<std::size_t> GlueOrdering::index_of(const Glue& g) const {
  auto it = std::find(glues.begin(), glues.end(), g);
  if (it == glues.end()) return std::nullopt;
  return static_cast<std::size_t>(it - glues.begin());
}

GlueOrdering make_ordering(std::vector<std::string> labels) {
  return ordering_from(std::set<std::string>(labels.begin(), labels.end()));
}

GlueOrdering glue_ordering(const Tas& tas) {
  std::set<std::string> labels;
  for (const TileType& t : tas.tiles())
    for (const SidePad& p : t.sides)
      if (p.strength > 0) labels.insert(p.glue.label());
  return ordering_from(std::move(labels));
}

std::string to_string(const Pad& p) {
  return "(" + p.glue.display() + "," + to_char(p.direction) + "," + std::to_string(p.strength) + ")";
}

std::optional<Pad> pad_of(const TileType& t, Direction d) {
  const SidePad& s = t.side(d);
  if (s.is_null()) return std::nullopt;
  return Pad{s.glue, d, s.strength};
}

BitString bin_pad(const Pad& p, const GlueOrdering& ord) {
  if (p.glue.is_null()) throw Error(ErrorKind::Encoding, "the null glue has no pad encoding");
  if (p.strength != 1 && p.strength != 2)
    throw Error(ErrorKind::Encoding, "pad strength must be 1 or 2, got " + std::to_string(p.strength));
  auto idx = ord.index_of(p.glue);
  if (!idx) throw Error(ErrorKind::Encoding, "glue '" + p.glue.label() + "' is not in the ordering");
  std::string s = BitString::from_value(*idx, ord.width).str();
  s += BitString::from_value(index_of(p.direction), 2).str();
  s += p.strength == 2 ? '1' : '0';
  return BitString(std::move(s));
}

Pad decode_pad(const BitString& bits, const GlueOrdering& ord) {
  if (bits.size() != ord.pad_length())
    throw Error(ErrorKind::Decode, "pad field '" + bits.str() + "' has length " +
                                       std::to_string(bits.size()) + ", expected " +
                                       std::to_string(ord.pad_length()));
  std::uint64_t idx = BitString(bits.str().substr(0, ord.width)).value();
  if (idx >= ord.glues.size())
    throw Error(ErrorKind::Decode, "glue index " + std::to_string(idx) + " out of range");
  if (idx == 0) throw Error(ErrorKind::Decode, "pad field encodes the null glue");
  auto dir = static_cast<Direction>(BitString(bits.str().substr(ord.width, 2)).value());
  int strength = bits[ord.width + 2] == '1' ? 2 : 1;
  return Pad{ord.glues[idx], dir, strength};
}

std::string to_string(const SubEntry& s) {
  std::string out = "{";
  bool first = true;
  for (Direction d : kDirections) {
    if (!s.at(d)) continue;
    if (!first) out += ' ';
    first = false;
    out += std::string(1, to_char(d)) + "=" + s.at(d)->glue.label() + ":" +
           std::to_string(s.at(d)->strength);
  }
  return out + "}";
}

}  // namespace tw
