#include "tileworks/local_consistency.hpp"

#include "tileworks/error.hpp"

namespace tw {

namespace {

// Matching strength of `t` at `pos` against `a`, summed over its in-sides.
int initial_binding(const Tas& tas, const Assembly& a, Position pos, TileIndex t) {
  int total = 0;
  const TileType& tile = tas.tile(t);
  for (Direction d : kDirections) {
    auto neighbour = a.at(step(pos, d));
    if (!neighbour) continue;
    const SidePad& mine = tile.side(d);
    if (mine.strength > 0 && mine == tas.tile(*neighbour).side(opposite(d))) total += mine.strength;
  }
  return total;
}

Witness strength_witness(const Tas& tas, AssemblySequence prefix, const Placement& m, int strength) {
  prefix.steps.push_back(m);
  Witness w;
  w.condition = "strength-exactly-two";
  w.sequence = std::move(prefix);
  w.position = m.pos;
  w.explanation = "tile '" + tas.tile(m.tile).name + "' placed at " + to_string(m.pos) +
                  " initially binds with strength " + std::to_string(strength) + " (expected 2)";
  return w;
}

}  // namespace

Verdict check_strength_exactly_two(const Tas& tas, const AssemblySequence& seq) {
  Assembly current = Assembly::seed_of(tas);
  AssemblySequence prefix;
  for (const Placement& m : seq.steps) {
    int strength = initial_binding(tas, current, m.pos, m.tile);
    if (strength != 2) return Verdict::fail(strength_witness(tas, prefix, m, strength));
    current = attach(tas, current, m.pos, m.tile);
    prefix.steps.push_back(m);
  }
  return Verdict::pass();
}

Verdict check_no_mismatch(const Tas& tas, const Assembly& a) {
  for (const Cell& c : a.cells()) {
    const TileType& here = tas.tile(c.tile);
    for (Direction d : kDirections) {
      auto neighbour = a.at(step(c.pos, d));
      if (!neighbour) continue;
      const SidePad& mine = here.side(d);
      const SidePad& theirs = tas.tile(*neighbour).side(opposite(d));
      if (mine.strength > 0 && mine != theirs) {
        Witness w;
        w.condition = "no-mismatch";
        w.assembly = a;
        w.position = c.pos;
        w.explanation = "side " + std::string(1, to_char(d)) + " of '" + here.name + "' at " +
                        to_string(c.pos) + " carries " + mine.glue.display() + ":" +
                        std::to_string(mine.strength) + " but abuts " +
                        theirs.glue.display() + ":" + std::to_string(theirs.strength) +
                        " on '" + tas.tile(*neighbour).name + "'";
        return Verdict::fail(std::move(w));
      }
    }
  }
  return Verdict::pass();
}

std::string LcReport::coverage_note() const {
  if (!verdict.passed) return "not locally consistent (" + verdict.witness->condition + ")";
  if (truncated) return "locally consistent up to bound " + std::to_string(bound) + " (truncated)";
  return "locally consistent (producible set exhausted at bound " + std::to_string(bound) + ")";
}

LcReport verify_locally_consistent(const Tas& tas, std::size_t bound) {
  return verify_locally_consistent(tas, explore(tas, bound));
}

LcReport verify_locally_consistent(const Tas& tas, const ExplorationResult& explored) {
  LcReport report;
  report.truncated = explored.truncated;
  report.bound = explored.bound;
  report.assemblies = explored.assemblies.size();
  report.placements = explored.edges.size();

  for (const Assembly& a : explored.assemblies) {
    Verdict v = check_no_mismatch(tas, a);
    if (!v.passed) {
      report.verdict = std::move(v);
      return report;
    }
  }
  // Every assembly sequence is a path in the transition graph, so checking
  // each recorded placement covers all sequences.
  for (const Transition& e : explored.edges) {
    const Assembly& from = explored.assemblies[e.from];
    int strength = initial_binding(tas, from, e.placement.pos, e.placement.tile);
    if (strength != 2) {
      report.verdict =
          Verdict::fail(strength_witness(tas, explored.sequence_to(e.from), e.placement, strength));
      return report;
    }
  }
  return report;
}

}  // namespace tw
