#pragma once

// Reference computations written independently of the library, used to
// derive expected values in tests.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tileworks/atam.hpp"

namespace oracle {

using Cells = std::map<std::pair<int, int>, tw::TileIndex>;

inline Cells cells_of(const tw::Assembly& a) {
  Cells c;
  for (const tw::Cell& cell : a.cells()) c[{cell.pos.x, cell.pos.y}] = cell.tile;
  return c;
}

struct Offset {
  int dx, dy, side, facing;  // side indices N=0 E=1 S=2 W=3
};
inline constexpr Offset kOffsets[4] = {{0, 1, 0, 2}, {1, 0, 1, 3}, {0, -1, 2, 0}, {-1, 0, 3, 1}};

// Sum of matching strengths, by the plain definition.
inline int strength(const tw::Tas& tas, const Cells& cells, int x, int y, tw::TileIndex t) {
  int total = 0;
  for (const Offset& o : kOffsets) {
    auto it = cells.find({x + o.dx, y + o.dy});
    if (it == cells.end()) continue;
    const tw::SidePad& mine = tas.tile(t).sides[o.side];
    const tw::SidePad& theirs = tas.tile(it->second).sides[o.facing];
    if (mine.strength > 0 && mine.glue == theirs.glue && mine.strength == theirs.strength) total += mine.strength;
  }
  return total;
}

inline std::set<std::pair<std::pair<int, int>, tw::TileIndex>> attachments(const tw::Tas& tas, const Cells& cells) {
  std::set<std::pair<std::pair<int, int>, tw::TileIndex>> out;
  for (const auto& [pos, tile] : cells)
    for (const Offset& o : kOffsets) {
      std::pair<int, int> p{pos.first + o.dx, pos.second + o.dy};
      if (cells.count(p)) continue;
      for (tw::TileIndex t = 0; t < tas.size(); ++t)
        if (strength(tas, cells, p.first, p.second, t) >= 2) out.insert({p, t});
    }
  return out;
}

// Every producible assembly with at most `bound` tiles.
inline std::set<Cells> producible(const tw::Tas& tas, std::size_t bound) {
  std::set<Cells> seen{Cells{{{0, 0}, tas.seed()}}};
  std::vector<Cells> work(seen.begin(), seen.end());
  while (!work.empty()) {
    Cells c = work.back();
    work.pop_back();
    if (c.size() >= bound) continue;
    for (const auto& [p, t] : attachments(tas, c)) {
      Cells next = c;
      next[p] = t;
      if (seen.insert(next).second) work.push_back(next);
    }
  }
  return seen;
}

// Abutting pairs whose facing sides show different positive pads.
inline std::vector<std::pair<int, int>> mismatches(const tw::Tas& tas, const Cells& cells) {
  std::vector<std::pair<int, int>> out;
  for (const auto& [pos, tile] : cells)
    for (const Offset& o : kOffsets) {
      auto it = cells.find({pos.first + o.dx, pos.second + o.dy});
      if (it == cells.end()) continue;
      const tw::SidePad& mine = tas.tile(tile).sides[o.side];
      const tw::SidePad& theirs = tas.tile(it->second).sides[o.facing];
      if (mine.strength > 0 && !(mine.glue == theirs.glue && mine.strength == theirs.strength)) out.push_back(pos);
    }
  return out;
}

inline std::string binary(std::uint64_t v, std::size_t width) {
  std::string s;
  for (std::size_t i = 0; i < width; ++i, v /= 2) s.insert(s.begin(), static_cast<char>('0' + v % 2));
  return s;
}

inline std::uint64_t value_of(const std::string& bits) {
  std::uint64_t v = 0;
  for (char c : bits) v = 2 * v + static_cast<std::uint64_t>(c - '0');
  return v;
}

// Smallest w with 2^w >= n (at least 1).
inline std::size_t bits_for(std::size_t n) {
  std::size_t w = 1;
  while ((std::size_t{1} << w) < n) ++w;
  return w;
}

// Pad encoding from the definition: glue index among null + sorted labels,
// two direction bits, one strength bit.
inline std::string encode(const std::vector<std::string>& labels, const std::string& glue, char dir, int strength) {
  std::vector<std::string> sorted(labels);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::size_t width = bits_for(sorted.size() + 2);
  std::size_t index = 1 + static_cast<std::size_t>(std::find(sorted.begin(), sorted.end(), glue) - sorted.begin());
  const std::string dirs = "NESW";
  return binary(index, width) + binary(dirs.find(dir), 2) + (strength == 2 ? "1" : "0");
}

inline std::vector<std::string> labels_of(const tw::Tas& tas) {
  std::set<std::string> s;
  for (const tw::TileType& t : tas.tiles())
    for (const tw::SidePad& p : t.sides)
      if (p.strength > 0) s.insert(p.glue.label());
  return {s.begin(), s.end()};
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out(1);
  for (char c : s) {
    if (c == sep) out.emplace_back();
    else out.back() += c;
  }
  return out;
}

// Entry `index` of w as the list of its sub-entry strings.
inline std::vector<std::string> entry(const std::string& w, std::size_t index) {
  std::vector<std::string> parts = split(w, '#');  // parts[0] is the text before the first '#'
  const std::string& body = parts.at(index + 1);
  if (body.empty()) return {};
  return split(body, ';');
}

// Pascal triangle mod 2 by repeated addition.
inline std::vector<std::vector<int>> pascal_parity(int n) {
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      c[x][y] = (x == 0 || y == 0) ? 1 : (c[x - 1][y] + c[x][y - 1]) % 2;
  return c;
}

}  // namespace oracle
