#include "tileworks/encoder.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "tileworks/error.hpp"
#include "tileworks/local_consistency.hpp"

namespace tw {

DirectionSet Address::directions() const {
  DirectionSet s;
  for (const Pad& p : pads) s.insert(p.direction);
  return s;
}

Address address_of(std::span<const Pad> pads, const GlueOrdering& ord) {
  Address a;
  if (pads.size() == 1) {
    if (pads[0].strength != 2)
      throw Error(ErrorKind::Address, "a single-pad address needs strength 2, got " + to_string(pads[0]));
    a.bits = BitString::zeros(ord.pad_length()) + bin_pad(pads[0], ord);
    a.pads = {pads[0]};
  } else if (pads.size() == 2) {
    if (pads[0].strength != 1 || pads[1].strength != 1)
      throw Error(ErrorKind::Address, "a two-pad address needs two strength-1 pads, got " +
                                          to_string(pads[0]) + " and " + to_string(pads[1]));
    if (pads[0].direction == pads[1].direction)
      throw Error(ErrorKind::Address, "duplicate direction " + std::string(1, to_char(pads[0].direction)) +
                                          " in address");
    const Pad* first = nullptr;
    const Pad* second = nullptr;
    for (auto [d1, d2] : kAddressPairOrder) {
      if (pads[0].direction == d1 && pads[1].direction == d2) {
        first = &pads[0];
        second = &pads[1];
      } else if (pads[1].direction == d1 && pads[0].direction == d2) {
        first = &pads[1];
        second = &pads[0];
      }
    }
    a.bits = bin_pad(*first, ord) + bin_pad(*second, ord);
    a.pads = {*first, *second};
  } else {
    throw Error(ErrorKind::Address, "an address covers 1 or 2 pads, got " + std::to_string(pads.size()));
  }
  a.value = a.bits.value();
  return a;
}

std::vector<AddressEntry> addresses(const Tas& tas, const GlueOrdering& ord) {
  std::map<std::uint64_t, AddressEntry> by_value;
  auto add = [&](std::span<const Pad> pads, TileIndex t) {
    Address a = address_of(pads, ord);
    auto [it, inserted] = by_value.try_emplace(a.value, AddressEntry{a, {}});
    it->second.tiles.push_back(t);
  };
  for (TileIndex t = 0; t < tas.size(); ++t) {
    const TileType& tile = tas.tile(t);
    for (Direction d : kDirections) {
      auto p = pad_of(tile, d);
      if (p && p->strength == 2) add(std::span<const Pad>(&*p, 1), t);
    }
    for (auto [d1, d2] : kAddressPairOrder) {
      auto p1 = pad_of(tile, d1);
      auto p2 = pad_of(tile, d2);
      if (p1 && p2 && p1->strength == 1 && p2->strength == 1) {
        std::array<Pad, 2> pair{*p1, *p2};
        add(pair, t);
      }
    }
  }
  std::vector<AddressEntry> out;
  out.reserve(by_value.size());
  for (auto& [value, entry] : by_value) out.push_back(std::move(entry));
  return out;
}

std::string sub_entry_string(const TileType& t, DirectionSet inputs, const GlueOrdering& ord) {
  std::string s;
  for (Direction d : kDirections) {
    if (d != Direction::N) s += ',';
    auto p = pad_of(t, d);
    if (p && !inputs.contains(d)) s += bin_pad(*p, ord).reversed().str();
  }
  return s;
}

std::string build_w(const std::vector<AddressEntry>& addrs, const Tas& tas, const GlueOrdering& ord) {
  if (addrs.empty()) throw Error(ErrorKind::InvalidTileSet, "tile set has no addresses");
  std::uint64_t max_address = addrs.back().address.value;
  std::string w;
  std::size_t next = 0;
  for (std::uint64_t i = 0; i <= max_address; ++i) {
    w += '#';
    if (next < addrs.size() && addrs[next].address.value == i) {
      const AddressEntry& e = addrs[next++];
      DirectionSet inputs = e.address.directions();
      for (std::size_t k = 0; k < e.tiles.size(); ++k) {
        if (k > 0) w += ';';
        w += sub_entry_string(tas.tile(e.tiles[k]), inputs, ord);
      }
    }
  }
  return w;
}

std::string build_w(const Tas& tas, const GlueOrdering& ord) {
  return build_w(addresses(tas, ord), tas, ord);
}

std::string splice_blanks(std::string_view s) {
  std::string out;
  if (s.empty()) return out;
  out.reserve(2 * s.size() - 1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += kBlank;
    out += s[i];
  }
  return out;
}

std::string strip_blanks(std::string_view s) {
  std::string out;
  out.reserve(s.size() / 2 + 1);
  for (char c : s)
    if (c != kBlank) out += c;
  return out;
}

LookupTable LookupTable::from_w(std::string_view w) {
  std::string raw;
  raw.reserve(2 * w.size() + 6);
  raw += kTableStart;
  raw += w;
  raw += kTableMiddle;
  raw.append(w.rbegin(), w.rend());
  raw += kTableEnd;
  LookupTable t;
  t.symbols_ = splice_blanks(raw);
  return t;
}

LookupTable LookupTable::from_symbols(std::string symbols) {
  LookupTable t;
  t.symbols_ = std::move(symbols);
  return t;
}

void LookupTable::validate() const {
  if (symbols_.empty() || symbols_.size() % 2 == 0)
    throw Error(ErrorKind::TableFormat, "table length must be odd");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    bool blank = symbols_[i] == kBlank;
    if (blank != (i % 2 == 1))
      throw Error(ErrorKind::TableFormat, "blank misplaced at column " + std::to_string(i));
  }
  std::string raw = strip_blanks(symbols_);
  if (raw.size() < kTableStart.size() + kTableMiddle.size() + kTableEnd.size() ||
      raw.substr(0, 1) != kTableStart || raw.substr(raw.size() - 1) != kTableEnd)
    throw Error(ErrorKind::TableFormat, "table must start with '>' and end with '<'");
  std::size_t body = raw.size() - 2 - kTableMiddle.size();
  if (body % 2 != 0) throw Error(ErrorKind::TableFormat, "table halves differ in length");
  std::size_t half = body / 2;
  std::string_view left(raw.data() + 1, half);
  std::string_view middle(raw.data() + 1 + half, kTableMiddle.size());
  std::string_view right(raw.data() + 1 + half + kTableMiddle.size(), half);
  if (middle != kTableMiddle) throw Error(ErrorKind::TableFormat, "table middle marker missing");
  if (!std::equal(left.begin(), left.end(), right.rbegin()))
    throw Error(ErrorKind::TableFormat, "right half is not the reverse of the left half");
}

LookupTable build_table(const Tas& tas) { return LookupTable::from_w(build_w(tas, glue_ordering(tas))); }

const AddressEntry* CompiledSystem::find_address(std::uint64_t value) const {
  auto it = std::lower_bound(addresses.begin(), addresses.end(), value,
                             [](const AddressEntry& e, std::uint64_t v) { return e.address.value < v; });
  if (it == addresses.end() || it->address.value != value) return nullptr;
  return &*it;
}

std::size_t default_random_bits(const std::vector<AddressEntry>& addrs) {
  std::size_t widest = 1;
  for (const AddressEntry& e : addrs) widest = std::max(widest, e.tiles.size());
  std::size_t log = 0;
  while ((std::size_t{1} << log) < widest) ++log;
  return std::max<std::size_t>(4, 2 * log);
}

namespace {

std::string edge_field(const std::optional<Pad>& pad, const GlueOrdering& ord) {
  if (!pad) return std::string(ord.pad_length(), '0');
  return bin_pad(*pad, ord).str();
}

std::string assemble_edge(const LookupTable& table, const std::string& field, std::size_t cprime) {
  std::string s;
  s.reserve(2 * table.size() + 2 * field.size() + cprime);
  s += table.symbols();
  s += field;
  s.append(cprime, '0');
  s += field;
  s += table.symbols();
  return s;
}

}  // namespace

std::string edge_string(const Tas& tas, TileIndex t, Direction d, std::size_t cprime) {
  GlueOrdering ord = glue_ordering(tas);
  LookupTable table = LookupTable::from_w(build_w(tas, ord));
  return assemble_edge(table, edge_field(pad_of(tas.tile(t), d), ord), cprime);
}

std::string edge_string(const CompiledSystem& cs, TileIndex t, Direction d) {
  return edge_string_for(cs, pad_of(cs.source.tile(t), d));
}

std::string edge_string_for(const CompiledSystem& cs, const std::optional<Pad>& pad) {
  return assemble_edge(cs.table, edge_field(pad, cs.glues), cs.cprime);
}

CompiledSystem compile(const Tas& tas, const CompileParams& params) {
  if (!params.force) {
    LcReport lc = verify_locally_consistent(tas, params.lc_bound);
    if (!lc.verdict.passed)
      throw Error(ErrorKind::Class, "system is not locally consistent: " + lc.verdict.witness->explanation);
  }
  GlueOrdering ord = glue_ordering(tas);
  std::vector<AddressEntry> addrs = addresses(tas, ord);
  if (addrs.empty()) throw Error(ErrorKind::InvalidTileSet, "tile set has no addresses; nothing can attach");

  std::string w = build_w(addrs, tas, ord);
  LookupTable table = LookupTable::from_w(w);
  std::uint64_t entry_count = addrs.back().address.value + 1;
  std::size_t cprime = params.cprime.value_or(ord.pad_length());
  std::size_t bits = params.random_bits.value_or(default_random_bits(addrs));
  if (bits == 0 || bits > 62) throw Error(ErrorKind::Selection, "random bit width must be in 1..62");

  BlockState seed;
  seed.phase = BlockPhase::Complete;
  seed.committed_tile = tas.seed();
  for (Direction d : kDirections) seed.output_pads[index_of(d)] = pad_of(tas.tile(tas.seed()), d);

  CompiledSystem cs{tas,          std::move(ord), std::move(w), std::move(table), std::move(addrs),
                    entry_count,  cprime,         bits,         0,                {0, 0},
                    std::move(seed)};
  cs.c = 2 * cs.table.size() + 2 * cs.glues.pad_length() + cs.cprime;
  return cs;
}

std::string serialize(const CompiledSystem& cs) {
  std::ostringstream os;
  os << "tileworks-compiled 1\n";
  os << "GLUES " << cs.glues.glues.size() << '\n';
  for (std::size_t i = 0; i < cs.glues.glues.size(); ++i)
    os << i << ' ' << BitString::from_value(i, cs.glues.width).str() << ' ' << cs.glues.glues[i].display() << '\n';
  os << "TABLE " << cs.table.size() << '\n' << cs.table.symbols() << '\n';
  os << "ADDRESSES " << cs.addresses.size() << '\n';
  for (const AddressEntry& e : cs.addresses) {
    os << e.address.value << ' ' << e.address.bits.str();
    for (TileIndex t : e.tiles) os << ' ' << cs.source.tile(t).name;
    os << '\n';
  }
  os << "PARAMS\n";
  os << "width " << cs.glues.width << '\n';
  os << "pad-length " << cs.glues.pad_length() << '\n';
  os << "entries " << cs.entry_count << '\n';
  os << "cprime " << cs.cprime << '\n';
  os << "random-bits " << cs.random_bits << '\n';
  os << "c " << cs.c << '\n';
  os << "SEED\n";
  os << "origin " << cs.seed_origin.x << ' ' << cs.seed_origin.y << '\n';
  os << "tile " << cs.source.tile(cs.seed_block.committed_tile.value()).name << '\n';
  os << "out";
  for (Direction d : kDirections) {
    const auto& p = cs.seed_block.output_pads[index_of(d)];
    os << ' ' << to_char(d) << '=' << (p ? p->glue.label() + ":" + std::to_string(p->strength) : "-:0");
  }
  os << "\nEND\n";
  return os.str();
}

}  // namespace tw
