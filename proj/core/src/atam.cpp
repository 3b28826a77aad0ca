#include "tileworks/atam.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <sstream>

#include "tileworks/error.hpp"

namespace tw {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OccupiedPosition: return "occupied-position";
    case ErrorKind::IllegalAttachment: return "illegal-attachment";
    case ErrorKind::NoAttachmentRecord: return "no-attachment-record";
    case ErrorKind::InvalidTileSet: return "invalid-tile-set";
    case ErrorKind::Encoding: return "encoding";
    case ErrorKind::Decode: return "decode";
    case ErrorKind::Address: return "address";
    case ErrorKind::AddressRange: return "address-range";
    case ErrorKind::EmptyEntry: return "empty-entry";
    case ErrorKind::Selection: return "selection";
    case ErrorKind::EntryFormat: return "entry-format";
    case ErrorKind::TableFormat: return "table-format";
    case ErrorKind::Class: return "class";
    case ErrorKind::RepresentationIntegrity: return "representation-integrity";
    case ErrorKind::IllegalEvent: return "illegal-event";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

char to_char(Direction d) {
  static constexpr char kNames[] = {'N', 'E', 'S', 'W'};
  return kNames[index_of(d)];
}

std::optional<Direction> direction_from_char(char c) {
  switch (c) {
    case 'N': return Direction::N;
    case 'E': return Direction::E;
    case 'S': return Direction::S;
    case 'W': return Direction::W;
    default: return std::nullopt;
  }
}

std::vector<Direction> DirectionSet::to_vector() const {
  std::vector<Direction> out;
  for (Direction d : kDirections)
    if (contains(d)) out.push_back(d);
  return out;
}

std::string DirectionSet::to_string() const {
  std::string s;
  for (Direction d : to_vector()) s += to_char(d);
  return s;
}

std::string to_string(Position p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

Glue::Glue(std::string label) : label_(std::move(label)) {
  if (label_.empty()) throw Error(ErrorKind::InvalidTileSet, "glue label must be nonempty");
}

SidePad SidePad::make(Glue glue, int strength) {
  if (strength < 0 || strength > 2)
    throw Error(ErrorKind::InvalidTileSet, "glue strength must be 0, 1 or 2");
  if ((strength == 0) != glue.is_null())
    throw Error(ErrorKind::InvalidTileSet,
                "strength 0 is reserved for the null glue (glue '" + glue.display() + "')");
  return SidePad{std::move(glue), strength};
}

Tas::Tas(std::vector<TileType> tiles, TileIndex seed) : tiles_(std::move(tiles)), seed_(seed) {
  if (tiles_.empty()) throw Error(ErrorKind::InvalidTileSet, "tile set is empty");
  if (seed_ >= tiles_.size()) throw Error(ErrorKind::InvalidTileSet, "seed index out of range");
  std::set<std::string> names;
  for (TileIndex i = 0; i < tiles_.size(); ++i) {
    const TileType& t = tiles_[i];
    if (t.name.empty()) throw Error(ErrorKind::InvalidTileSet, "tile name must be nonempty");
    if (!names.insert(t.name).second)
      throw Error(ErrorKind::InvalidTileSet, "duplicate tile name '" + t.name + "'");
    for (Direction d : kDirections) {
      const SidePad& p = t.side(d);
      SidePad::make(p.glue, p.strength);  // validates
      if (p.strength > 0) by_side_[index_of(d)][p.glue.label()].push_back(i);
    }
  }
}

std::optional<TileIndex> Tas::find(const std::string& name) const {
  for (TileIndex i = 0; i < tiles_.size(); ++i)
    if (tiles_[i].name == name) return i;
  return std::nullopt;
}

const std::vector<TileIndex>& Tas::tiles_with(Direction d, const Glue& glue) const {
  static const std::vector<TileIndex> kEmpty;
  const auto& m = by_side_[index_of(d)];
  auto it = m.find(glue.label());
  return it == m.end() ? kEmpty : it->second;
}

namespace {

auto cell_less = [](const Cell& c, Position p) { return c.pos < p; };

}  // namespace

Assembly Assembly::seed_of(const Tas& tas) {
  Assembly a;
  a.cells_.push_back({{0, 0}, tas.seed()});
  return a;
}

std::optional<TileIndex> Assembly::at(Position p) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), p, cell_less);
  if (it != cells_.end() && it->pos == p) return it->tile;
  return std::nullopt;
}

Assembly Assembly::with(Position p, TileIndex t) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), p, cell_less);
  if (it != cells_.end() && it->pos == p)
    throw Error(ErrorKind::OccupiedPosition, "position " + to_string(p) + " is occupied");
  Assembly out;
  out.cells_.reserve(cells_.size() + 1);
  out.cells_.insert(out.cells_.end(), cells_.begin(), it);
  out.cells_.push_back({p, t});
  out.cells_.insert(out.cells_.end(), it, cells_.end());
  return out;
}

Assembly Assembly::without(Position p) const {
  Assembly out = *this;
  auto it = std::lower_bound(out.cells_.begin(), out.cells_.end(), p, cell_less);
  if (it != out.cells_.end() && it->pos == p) out.cells_.erase(it);
  return out;
}

std::size_t Assembly::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (const Cell& c : cells_) {
    mix(static_cast<std::uint32_t>(c.pos.x));
    mix(static_cast<std::uint32_t>(c.pos.y));
    mix(c.tile);
  }
  return static_cast<std::size_t>(h);
}

std::string describe(const Tas& tas, const Assembly& a) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const Cell& c : a.cells()) {
    if (!first) os << ' ';
    first = false;
    os << to_string(c.pos) << '=' << tas.tile(c.tile).name;
  }
  os << '}';
  return os.str();
}

std::optional<std::size_t> ExplorationResult::find(const Assembly& a) const {
  auto it = index.find(a);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> ExplorationResult::terminals() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < terminal.size(); ++i)
    if (terminal[i]) out.push_back(i);
  return out;
}

AssemblySequence ExplorationResult::sequence_to(std::size_t id) const {
  // Edges are recorded in BFS order, so the first edge into a node comes from
  // its BFS parent.
  std::vector<std::optional<std::size_t>> parent_edge(assemblies.size());
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (!parent_edge[edges[e].to] && edges[e].to != 0) parent_edge[edges[e].to] = e;
  AssemblySequence seq;
  std::size_t cur = id;
  while (cur != 0) {
    const Transition& t = edges.at(parent_edge.at(cur).value());
    seq.steps.push_back(t.placement);
    cur = t.from;
  }
  std::reverse(seq.steps.begin(), seq.steps.end());
  return seq;
}

std::vector<bool> ExplorationResult::reachable_from(std::size_t from) const {
  std::vector<std::vector<std::size_t>> succ(assemblies.size());
  for (const Transition& e : edges) succ[e.from].push_back(e.to);
  std::vector<bool> seen(assemblies.size(), false);
  std::vector<std::size_t> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v : succ[u])
      if (!seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
  }
  return seen;
}

int binding_strength(const Tas& tas, const Assembly& a, Position pos, TileIndex t) {
  if (a.contains(pos))
    throw Error(ErrorKind::OccupiedPosition, "position " + to_string(pos) + " is occupied");
  const TileType& tile = tas.tile(t);
  int total = 0;
  for (Direction d : kDirections) {
    auto neighbour = a.at(step(pos, d));
    if (!neighbour) continue;
    const SidePad& mine = tile.side(d);
    const SidePad& theirs = tas.tile(*neighbour).side(opposite(d));
    if (mine.strength > 0 && mine == theirs) total += mine.strength;
  }
  return total;
}

std::vector<Placement> frontier(const Tas& tas, const Assembly& a) {
  std::set<Position> empties;
  for (const Cell& c : a.cells())
    for (Direction d : kDirections) {
      Position q = step(c.pos, d);
      if (!a.contains(q)) empties.insert(q);
    }

  std::vector<Placement> out;
  std::vector<TileIndex> candidates;
  for (Position pos : empties) {
    candidates.clear();
    for (Direction d : kDirections) {
      auto neighbour = a.at(step(pos, d));
      if (!neighbour) continue;
      const SidePad& facing = tas.tile(*neighbour).side(opposite(d));
      if (facing.strength == 0) continue;
      for (TileIndex t : tas.tiles_with(d, facing.glue))
        if (tas.tile(t).side(d).strength == facing.strength) candidates.push_back(t);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (TileIndex t : candidates)
      if (binding_strength(tas, a, pos, t) >= Tas::kTemperature) out.push_back({pos, t});
  }
  // `empties` is iterated in (y, x) order and candidates are sorted, so `out`
  // is already in (y, x, tile) order.
  return out;
}

Assembly attach(const Tas& tas, const Assembly& a, Position pos, TileIndex t) {
  if (t >= tas.size()) throw Error(ErrorKind::IllegalAttachment, "tile index out of range");
  int strength = binding_strength(tas, a, pos, t);
  if (strength < Tas::kTemperature)
    throw IllegalAttachmentError("tile '" + tas.tile(t).name + "' at " + to_string(pos) +
                                     " binds with strength " + std::to_string(strength) +
                                     " < 2",
                                 strength);
  return a.with(pos, t);
}

bool is_terminal(const Tas& tas, const Assembly& a) { return frontier(tas, a).empty(); }

ExplorationResult explore(const Tas& tas, std::size_t bound, const ExploreOptions& options) {
  ExplorationResult r;
  r.bound = bound;
  Assembly seed = Assembly::seed_of(tas);
  r.assemblies.push_back(seed);
  r.index.emplace(seed, 0);

  std::optional<std::mt19937_64> shuffler;
  if (options.shuffle_seed) shuffler.emplace(*options.shuffle_seed);

  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t id = queue.front();
    queue.pop_front();
    // Copy: `assemblies` may reallocate while we append successors.
    Assembly current = r.assemblies[id];
    std::vector<Placement> moves = frontier(tas, current);
    r.terminal.resize(r.assemblies.size(), false);
    r.terminal[id] = moves.empty();
    if (current.size() >= bound) {
      if (!moves.empty()) r.truncated = true;
      continue;
    }
    if (shuffler) std::shuffle(moves.begin(), moves.end(), *shuffler);
    for (const Placement& m : moves) {
      Assembly next = current.with(m.pos, m.tile);
      auto [it, inserted] = r.index.emplace(std::move(next), r.assemblies.size());
      if (inserted) {
        r.assemblies.push_back(it->first);
        queue.push_back(it->second);
      }
      r.edges.push_back({id, it->second, m});
    }
  }
  r.terminal.resize(r.assemblies.size(), false);
  return r;
}

AssemblySequence sample_sequence(const Tas& tas, std::uint64_t rng_seed, std::size_t max_steps) {
  std::mt19937_64 rng(rng_seed);
  AssemblySequence seq;
  Assembly current = Assembly::seed_of(tas);
  while (seq.steps.size() < max_steps) {
    std::vector<Placement> moves = frontier(tas, current);
    if (moves.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    const Placement& m = moves[pick(rng)];
    current = current.with(m.pos, m.tile);
    seq.steps.push_back(m);
  }
  return seq;
}

Assembly replay(const Tas& tas, const AssemblySequence& seq) {
  Assembly current = Assembly::seed_of(tas);
  for (const Placement& m : seq.steps) current = attach(tas, current, m.pos, m.tile);
  return current;
}

DirectionSet in_sides(const Tas& tas, const AssemblySequence& seq, Position pos) {
  Assembly current = Assembly::seed_of(tas);
  for (const Placement& m : seq.steps) {
    if (m.pos == pos) {
      DirectionSet sides;
      const TileType& tile = tas.tile(m.tile);
      for (Direction d : kDirections) {
        auto neighbour = current.at(step(pos, d));
        if (!neighbour) continue;
        const SidePad& mine = tile.side(d);
        if (mine.strength > 0 && mine == tas.tile(*neighbour).side(opposite(d))) sides.insert(d);
      }
      return sides;
    }
    current = current.with(m.pos, m.tile);
  }
  throw Error(ErrorKind::NoAttachmentRecord,
              "no attachment recorded at " + to_string(pos) +
                  (pos == Position{0, 0} ? " (seed position)" : ""));
}

}  // namespace tw
