#pragma once

// Bounded membership test for the locally consistent class: every tile
// initially binds with strength exactly 2, and no abutting pair of tiles ever
// shows a positive-strength label or strength mismatch.

#include <optional>
#include <string>

#include "tileworks/atam.hpp"

namespace tw {

struct Witness {
  std::string condition;  // e.g. "strength-exactly-two", "no-mismatch", "coverage"
  std::optional<Assembly> assembly;
  std::optional<Assembly> other;  // second endpoint for transition witnesses
  std::optional<AssemblySequence> sequence;
  std::optional<Position> position;
  std::string explanation;
};

struct Verdict {
  bool passed = true;
  std::optional<Witness> witness;  // present iff !passed

  static Verdict pass() { return {}; }
  static Verdict fail(Witness w) { return Verdict{false, std::move(w)}; }
};

Verdict check_strength_exactly_two(const Tas& tas, const AssemblySequence& seq);

Verdict check_no_mismatch(const Tas& tas, const Assembly& a);

struct LcReport {
  Verdict verdict;
  bool truncated = false;
  std::size_t bound = 0;
  std::size_t assemblies = 0;
  std::size_t placements = 0;

  // "locally consistent", "verified up to bound N", or the failed condition.
  std::string coverage_note() const;
};

LcReport verify_locally_consistent(const Tas& tas, std::size_t bound);

// Same check over an exploration the caller already holds.
LcReport verify_locally_consistent(const Tas& tas, const ExplorationResult& explored);

}  // namespace tw
