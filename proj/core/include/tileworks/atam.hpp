#pragma once

// Temperature-2 abstract Tile Assembly Model: tiles, assemblies, the
// attachment rule and bounded exploration of the producible set.

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace tw {

enum class Direction : std::uint8_t { N = 0, E = 1, S = 2, W = 3 };

inline constexpr std::array<Direction, 4> kDirections{Direction::N, Direction::E,
                                                      Direction::S, Direction::W};

constexpr std::size_t index_of(Direction d) { return static_cast<std::size_t>(d); }

constexpr Direction opposite(Direction d) {
  return static_cast<Direction>((static_cast<int>(d) + 2) % 4);
}

char to_char(Direction d);
std::optional<Direction> direction_from_char(char c);

// Small set of sides, stored as a bitmask over N, E, S, W.
class DirectionSet {
 public:
  constexpr DirectionSet() = default;
  DirectionSet(std::initializer_list<Direction> dirs) {
    for (Direction d : dirs) insert(d);
  }

  constexpr void insert(Direction d) { bits_ |= static_cast<std::uint8_t>(1u << index_of(d)); }
  constexpr bool contains(Direction d) const { return (bits_ >> index_of(d)) & 1u; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint8_t bits() const { return bits_; }

  std::vector<Direction> to_vector() const;
  std::string to_string() const;

  friend constexpr bool operator==(DirectionSet, DirectionSet) = default;

 private:
  std::uint8_t bits_ = 0;
};

struct Position {
  int x = 0;
  int y = 0;

  friend constexpr bool operator==(const Position&, const Position&) = default;
  // Row-major order: by y, then x.
  friend constexpr std::strong_ordering operator<=>(const Position& a, const Position& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

constexpr Position step(Position p, Direction d) {
  switch (d) {
    case Direction::N: return {p.x, p.y + 1};
    case Direction::E: return {p.x + 1, p.y};
    case Direction::S: return {p.x, p.y - 1};
    case Direction::W: return {p.x - 1, p.y};
  }
  return p;
}

std::string to_string(Position p);

// A glue label; the default-constructed value is the null glue.
class Glue {
 public:
  Glue() = default;
  explicit Glue(std::string label);

  static Glue null() { return Glue{}; }

  bool is_null() const { return label_.empty(); }
  const std::string& label() const { return label_; }
  std::string display() const { return is_null() ? std::string("-") : label_; }

  friend bool operator==(const Glue&, const Glue&) = default;
  friend auto operator<=>(const Glue&, const Glue&) = default;

 private:
  std::string label_;
};

struct SidePad {
  Glue glue;
  int strength = 0;

  // Validates strength in {0,1,2} and strength == 0 iff the glue is null.
  static SidePad make(Glue glue, int strength);
  static SidePad none() { return {}; }

  bool is_null() const { return glue.is_null(); }

  friend bool operator==(const SidePad&, const SidePad&) = default;
};

struct TileType {
  std::string name;
  std::array<SidePad, 4> sides{};

  const SidePad& side(Direction d) const { return sides[index_of(d)]; }
  SidePad& side(Direction d) { return sides[index_of(d)]; }

  friend bool operator==(const TileType&, const TileType&) = default;
};

using TileIndex = std::uint32_t;

// A singly seeded temperature-2 tile assembly system.
class Tas {
 public:
  static constexpr int kTemperature = 2;

  Tas(std::vector<TileType> tiles, TileIndex seed);

  const std::vector<TileType>& tiles() const { return tiles_; }
  const TileType& tile(TileIndex i) const { return tiles_.at(i); }
  std::size_t size() const { return tiles_.size(); }
  TileIndex seed() const { return seed_; }
  int temperature() const { return kTemperature; }

  std::optional<TileIndex> find(const std::string& name) const;

  // Tiles whose side `d` carries a positive-strength pad with glue `glue`.
  const std::vector<TileIndex>& tiles_with(Direction d, const Glue& glue) const;

  friend bool operator==(const Tas& a, const Tas& b) {
    return a.tiles_ == b.tiles_ && a.seed_ == b.seed_;
  }

 private:
  std::vector<TileType> tiles_;
  TileIndex seed_;
  std::array<std::unordered_map<std::string, std::vector<TileIndex>>, 4> by_side_;
};

struct Cell {
  Position pos;
  TileIndex tile = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
};

// Partial map from grid positions to tile types. Cells are kept sorted by
// position so that equal assemblies have equal representations.
class Assembly {
 public:
  Assembly() = default;

  static Assembly seed_of(const Tas& tas);

  std::optional<TileIndex> at(Position p) const;
  bool contains(Position p) const { return at(p).has_value(); }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  const std::vector<Cell>& cells() const { return cells_; }

  // Value-returning updates; `*this` is unchanged.
  Assembly with(Position p, TileIndex t) const;
  Assembly without(Position p) const;

  std::size_t hash() const;

  friend bool operator==(const Assembly&, const Assembly&) = default;

 private:
  std::vector<Cell> cells_;
};

struct AssemblyHash {
  std::size_t operator()(const Assembly& a) const { return a.hash(); }
};

std::string describe(const Tas& tas, const Assembly& a);

struct Placement {
  Position pos;
  TileIndex tile = 0;

  friend bool operator==(const Placement&, const Placement&) = default;
};

// Steps applied in order to the seed assembly.
struct AssemblySequence {
  std::vector<Placement> steps;

  friend bool operator==(const AssemblySequence&, const AssemblySequence&) = default;
};

struct Transition {
  std::size_t from = 0;
  std::size_t to = 0;
  Placement placement;
};

struct ExplorationResult {
  std::vector<Assembly> assemblies;  // index 0 is the seed assembly
  std::vector<Transition> edges;
  bool truncated = false;
  std::size_t bound = 0;
  std::unordered_map<Assembly, std::size_t, AssemblyHash> index;
  std::vector<bool> terminal;  // per assembly: frontier is empty

  std::optional<std::size_t> find(const Assembly& a) const;
  std::vector<std::size_t> terminals() const;
  // Shortest attachment sequence producing assemblies[id], along recorded edges.
  AssemblySequence sequence_to(std::size_t id) const;
  // Assemblies reachable from `from` (including itself) along recorded edges.
  std::vector<bool> reachable_from(std::size_t from) const;
};

// Sum of matching pad strengths between tile `t` placed at `pos` and its
// occupied neighbours. Throws OccupiedPosition if `pos` is taken.
int binding_strength(const Tas& tas, const Assembly& a, Position pos, TileIndex t);

// All single attachments legal at temperature 2, sorted by (y, x, tile).
std::vector<Placement> frontier(const Tas& tas, const Assembly& a);

Assembly attach(const Tas& tas, const Assembly& a, Position pos, TileIndex t);

bool is_terminal(const Tas& tas, const Assembly& a);

struct ExploreOptions {
  // When set, each frontier is shuffled with this seed before expansion.
  // The resulting sets are identical; only discovery order changes.
  std::optional<std::uint64_t> shuffle_seed;
};

// Breadth-first closure of the seed under attachment, restricted to
// assemblies with at most `bound` tiles.
ExplorationResult explore(const Tas& tas, std::size_t bound, const ExploreOptions& options = {});

AssemblySequence sample_sequence(const Tas& tas, std::uint64_t rng_seed, std::size_t max_steps);

// Validates every step and returns the resulting assembly. Throws
// IllegalAttachment / OccupiedPosition on the first bad step.
Assembly replay(const Tas& tas, const AssemblySequence& seq);

// Sides on which the tile placed at `pos` had positive matching strength
// when it attached.
DirectionSet in_sides(const Tas& tas, const AssemblySequence& seq, Position pos);

}  // namespace tw
