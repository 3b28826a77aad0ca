#include "tileworks/corpus.hpp"

#include "tileworks/error.hpp"

namespace tw::corpus {

namespace {

SidePad g(const std::string& label, int strength) { return SidePad::make(Glue(label), strength); }

const SidePad none = SidePad::none();

TileType tile(std::string name, SidePad n, SidePad e, SidePad s, SidePad w) {
  TileType t;
  t.name = std::move(name);
  t.sides = {std::move(n), std::move(e), std::move(s), std::move(w)};
  return t;
}

std::string bit(int b) { return std::to_string(b); }

std::vector<TileType> elbow_tiles() {
  return {
      tile("seed", g("b", 2), g("a", 2), none, none),
      tile("tR", g("c", 1), none, none, g("a", 2)),
      tile("tU", none, g("c", 1), g("b", 2), none),
      tile("tD", none, none, g("c", 1), g("c", 1)),
  };
}

}  // namespace

Tas elbow() { return Tas(elbow_tiles(), 0); }

Tas nondet_elbow() {
  std::vector<TileType> tiles = elbow_tiles();
  tiles.push_back(tile("tD2", g("d", 1), none, g("c", 1), g("c", 1)));
  return Tas(std::move(tiles), 0);
}

Tas counter(std::size_t width) {
  if (width < 2) throw Error(ErrorKind::InvalidTileSet, "counter width must be at least 2");
  const std::size_t msb = width - 1;
  std::vector<TileType> tiles;

  // Row 0: all zeros, grown west from the seed by strength-2 glues.
  tiles.push_back(tile("seed", g("l0", 1), none, none, g("z1", 2)));
  for (std::size_t k = 1; k < msb; ++k)
    tiles.push_back(tile("z" + std::to_string(k), g("i0", 1), g("z" + std::to_string(k), 2), none,
                         g("z" + std::to_string(k + 1), 2)));
  tiles.push_back(tile("zM", g("t0", 2), g("z" + std::to_string(msb), 2), none, none));

  for (int b = 0; b < 2; ++b) {
    // Return row, grown east from the most significant bit.
    tiles.push_back(tile("rM" + bit(b), g("m" + bit(b), 1), g("r", 1), g("t" + bit(b), 2), none));
    if (width > 2) tiles.push_back(tile("r" + bit(b), g("i" + bit(b), 1), g("r", 1), g("i" + bit(b), 1), g("r", 1)));
    tiles.push_back(tile("rL" + bit(b), g("u" + bit(b), 2), none, g("l" + bit(b), 1), g("r", 1)));
  }
  for (int b = 0; b < 2; ++b) {
    // Increment row, grown west from the least significant bit.
    tiles.push_back(tile("iL" + bit(b), g("l" + bit(b ^ 1), 1), none, g("u" + bit(b), 2), g("c" + bit(b), 1)));
    for (int c = 0; c < 2; ++c) {
      if (width > 2)
        tiles.push_back(tile("i" + bit(b) + bit(c), g("i" + bit(b ^ c), 1), g("c" + bit(c), 1), g("i" + bit(b), 1),
                             g("c" + bit(b & c), 1)));
      tiles.push_back(tile("iM" + bit(b) + bit(c), g("t" + bit(b ^ c), 2), g("c" + bit(c), 1), g("m" + bit(b), 1),
                           none));
    }
  }
  return Tas(std::move(tiles), 0);
}

std::optional<std::uint64_t> counter_row_value(const Tas& tas, const Assembly& a, std::size_t width, int k) {
  std::uint64_t value = 0;
  for (std::size_t j = 0; j < width; ++j) {
    auto t = a.at({-static_cast<int>(j), 2 * k});
    if (!t) return std::nullopt;
    const std::string& label = tas.tile(*t).side(Direction::N).glue.label();
    if (label.empty()) return std::nullopt;
    if (label.back() == '1') value |= std::uint64_t{1} << j;
  }
  return value;
}

Tas sierpinski(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidTileSet, "sierpinski size must be at least 2");
  std::vector<TileType> tiles;
  tiles.push_back(tile("seed", g("y1", 2), g("x1", 2), none, none));
  for (std::size_t k = 1; k < n; ++k) {
    std::string here = std::to_string(k);
    std::string next = std::to_string(k + 1);
    bool last = k + 1 == n;
    tiles.push_back(tile("x" + here, g("s1", 1), last ? none : g("x" + next, 2), none, g("x" + here, 2)));
    tiles.push_back(tile("y" + here, last ? none : g("y" + next, 2), g("s1", 1), g("y" + here, 2), none));
  }
  for (int w = 0; w < 2; ++w)
    for (int s = 0; s < 2; ++s)
      tiles.push_back(tile("xor" + bit(w) + bit(s), g("s" + bit(w ^ s), 1), g("s" + bit(w ^ s), 1),
                           g("s" + bit(s), 1), g("s" + bit(w), 1)));
  return Tas(std::move(tiles), 0);
}

std::optional<int> sierpinski_bit(const Tas& tas, const Assembly& a, Position p) {
  auto t = a.at(p);
  if (!t) return std::nullopt;
  if (*t == tas.seed()) return 1;
  const TileType& tile = tas.tile(*t);
  for (Direction d : {Direction::E, Direction::N}) {
    const std::string& label = tile.side(d).glue.label();
    if (label.size() == 2 && label[0] == 's') return label[1] - '0';
  }
  return std::nullopt;
}

Tas bridge() {
  return Tas(
      {
          tile("seed", g("h", 1), g("a", 2), none, none),
          tile("bR", g("b", 2), none, none, g("a", 2)),
          tile("bU", g("c", 2), none, g("b", 2), none),
          tile("bT", none, none, g("c", 2), g("d", 2)),
          tile("bL", none, g("d", 2), g("g", 1), none),
          tile("bM", g("g", 1), none, g("h", 1), none),
      },
      0);
}

Tas mismatch_variant() {
  return Tas(
      {
          tile("seed", g("b", 2), g("a", 2), none, none),
          tile("tR", g("c", 2), none, none, g("a", 2)),
          tile("tU", none, g("b", 1), g("b", 2), none),
          tile("tD", none, none, g("c", 2), g("c", 1)),
      },
      0);
}

Tas strength_four_variant() {
  return Tas(
      {
          tile("seed", g("b", 2), g("a", 2), none, none),
          tile("tR", g("f", 2), none, none, g("a", 2)),
          tile("tU", none, g("e", 2), g("b", 2), none),
          tile("tX", none, none, g("f", 2), g("e", 2)),
      },
      0);
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all{
      {"elbow", elbow, true, 25},
      {"nondet_elbow", nondet_elbow, true, 25},
      {"counter3", [] { return counter(3); }, true, 25},
      {"counter4", [] { return counter(4); }, true, 25},
      {"sierpinski8", [] { return sierpinski(8); }, true, 25},
      {"bridge", bridge, true, 25},
      {"mismatch", mismatch_variant, false, 25},
      {"strength4", strength_four_variant, false, 25},
  };
  return all;
}

const Entry* find(const std::string& name) {
  for (const Entry& e : entries())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace tw::corpus
