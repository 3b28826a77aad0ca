#include <doctest.h>

#include "oracles.hpp"
#include "tileworks/corpus.hpp"
#include "tileworks/local_consistency.hpp"

using namespace tw;

namespace {

Tas single_seed() {
  TileType t;
  t.name = "only";
  return Tas({t}, 0);
}

}  // namespace

TEST_CASE("both maximal elbow sequences bind with strength exactly two") {
  Tas tas = corpus::elbow();
  AssemblySequence right_first{{{{1, 0}, 1}, {{0, 1}, 2}, {{1, 1}, 3}}};
  AssemblySequence up_first{{{{0, 1}, 2}, {{1, 0}, 1}, {{1, 1}, 3}}};
  CHECK(check_strength_exactly_two(tas, right_first).passed);
  CHECK(check_strength_exactly_two(tas, up_first).passed);
}

TEST_CASE("strength-four binding is caught at (1,1)") {
  Tas tas = corpus::strength_four_variant();
  AssemblySequence seq{{{{1, 0}, 1}, {{0, 1}, 2}, {{1, 1}, 3}}};
  Verdict v = check_strength_exactly_two(tas, seq);
  REQUIRE_FALSE(v.passed);
  REQUIRE(v.witness);
  CHECK(v.witness->condition == "strength-exactly-two");
  CHECK(v.witness->position == Position{1, 1});
  REQUIRE(v.witness->sequence);
  // Replaying the witness reaches the offending attachment, whose strength an
  // independent count confirms.
  AssemblySequence prefix = *v.witness->sequence;
  Placement last = prefix.steps.back();
  prefix.steps.pop_back();
  Assembly before = replay(tas, prefix);
  CHECK(oracle::strength(tas, oracle::cells_of(before), last.pos.x, last.pos.y, last.tile) == 4);
}

TEST_CASE("a lone seed is vacuously consistent") {
  Tas tas = single_seed();
  CHECK(check_strength_exactly_two(tas, {}).passed);
  CHECK(check_no_mismatch(tas, Assembly::seed_of(tas)).passed);
  LcReport r = verify_locally_consistent(tas, 5);
  CHECK(r.verdict.passed);
  CHECK_FALSE(r.truncated);
}

TEST_CASE("mismatch checks") {
  Tas elbow = corpus::elbow();
  Assembly terminal = explore(elbow, 10).assemblies.back();
  REQUIRE(terminal.size() == 4);
  CHECK(check_no_mismatch(elbow, terminal).passed);

  Tas bad = corpus::mismatch_variant();
  Assembly a = Assembly::seed_of(bad);
  a = attach(bad, a, {1, 0}, 1);
  a = attach(bad, a, {0, 1}, 2);
  CHECK(check_no_mismatch(bad, a).passed);
  a = attach(bad, a, {1, 1}, 3);
  auto expected = oracle::mismatches(bad, oracle::cells_of(a));
  REQUIRE_FALSE(expected.empty());
  Verdict v = check_no_mismatch(bad, a);
  REQUIRE_FALSE(v.passed);
  CHECK(v.witness->condition == "no-mismatch");
  REQUIRE(v.witness->assembly);
  CHECK(*v.witness->assembly == a);
  std::pair<int, int> at{v.witness->position->x, v.witness->position->y};
  CHECK(std::find(expected.begin(), expected.end(), at) != expected.end());
}

TEST_CASE("bounded verification") {
  LcReport elbow = verify_locally_consistent(corpus::elbow(), 10);
  CHECK(elbow.verdict.passed);
  CHECK_FALSE(elbow.truncated);
  CHECK(elbow.assemblies == 5);

  LcReport counter = verify_locally_consistent(corpus::counter(4), 25);
  CHECK(counter.verdict.passed);
  CHECK(counter.truncated);
  CHECK(counter.coverage_note().find("up to bound 25") != std::string::npos);

  LcReport bad = verify_locally_consistent(corpus::mismatch_variant(), 10);
  REQUIRE_FALSE(bad.verdict.passed);
  CHECK(bad.verdict.witness->condition == "no-mismatch");
}

TEST_CASE("failure is monotone in the bound") {
  for (std::size_t b = 4; b <= 12; ++b) {
    CAPTURE(b);
    CHECK_FALSE(verify_locally_consistent(corpus::mismatch_variant(), b).verdict.passed);
    CHECK_FALSE(verify_locally_consistent(corpus::strength_four_variant(), b).verdict.passed);
  }
}

TEST_CASE("corpus classification") {
  for (const auto& entry : corpus::entries()) {
    CAPTURE(entry.name);
    Tas tas = entry.make();
    LcReport r = verify_locally_consistent(tas, entry.lc_bound);
    CHECK(r.verdict.passed == entry.locally_consistent);
    if (r.verdict.passed) continue;
    const Witness& w = *r.verdict.witness;
    if (w.condition == "no-mismatch") {
      REQUIRE(w.assembly);
      CHECK_FALSE(oracle::mismatches(tas, oracle::cells_of(*w.assembly)).empty());
      CHECK(oracle::producible(tas, w.assembly->size()).count(oracle::cells_of(*w.assembly)) == 1);
    } else {
      REQUIRE(w.sequence);
      CHECK_FALSE(check_strength_exactly_two(tas, *w.sequence).passed);
    }
  }
}
