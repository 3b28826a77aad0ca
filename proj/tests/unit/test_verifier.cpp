#include <doctest.h>

#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "tileworks/corpus.hpp"
#include "tileworks/verifier.hpp"

using namespace tw;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Whether `to` is reachable from `from` by legal attachments.
bool source_reaches(const Tas& tas, const Assembly& from, const Assembly& to) {
  ExplorationResult r = explore(tas, to.size());
  auto i = r.find(from);
  auto j = r.find(to);
  if (!i || !j) return false;
  return r.reachable_from(*i)[*j];
}

}  // namespace

TEST_CASE("seed condition") {
  CompiledSystem elbow = compile(corpus::elbow());
  CHECK(check_seed_condition(elbow).passed);
  CHECK(check_seed_condition(compile(corpus::counter(3))).passed);

  Verdict swapped = check_seed_condition(faults::swap_seed_tile(elbow, 1));
  REQUIRE_FALSE(swapped.passed);
  CHECK(swapped.witness->condition == "seed");

  CHECK_FALSE(check_seed_condition(faults::shift_seed_origin(elbow, {1, 0})).passed);
  CHECK_FALSE(check_seed_condition(faults::shift_seed_origin(elbow, {-1, 0})).passed);
}

TEST_CASE("coverage") {
  CompiledSystem elbow = compile(corpus::elbow());
  VerifierInputs in = prepare_inputs(elbow, 6);
  CHECK_FALSE(in.source.truncated);
  CHECK(check_coverage(elbow, in).passed);
  std::set<oracle::Cells> images;
  for (const Assembly& a : in.macro.image_set()) images.insert(oracle::cells_of(a));
  CHECK(images == oracle::producible(elbow.source, 6));

  CompiledSystem nd = compile(corpus::nondet_elbow());
  VerifierInputs nin = prepare_inputs(nd, 6);
  CHECK(check_coverage(nd, nin).passed);
  CHECK(nin.macro.terminal_images().size() == 2);
}

TEST_CASE("scrambled entries produce a decoded assembly that is not producible") {
  CompiledSystem elbow = compile(corpus::elbow());
  CompiledSystem bad = faults::scramble_entries(elbow, 15, 21);
  Verdict v = check_coverage(bad, 6);
  REQUIRE_FALSE(v.passed);
  REQUIRE(v.witness->assembly);
  CHECK(oracle::producible(elbow.source, 7).count(oracle::cells_of(*v.witness->assembly)) == 0);

  CHECK_THROWS_AS(faults::scramble_entries(elbow, 15, 16), Error);
}

TEST_CASE("scrambling counter increment entries") {
  CompiledSystem cs = compile(corpus::counter(3));
  const Tas& tas = cs.source;
  std::uint64_t inc0 = 0, inc1 = 0;
  for (const AddressEntry& e : cs.addresses)
    for (TileIndex t : e.tiles) {
      if (tas.tile(t).name == "i00") inc0 = e.address.value;
      if (tas.tile(t).name == "i10") inc1 = e.address.value;
    }
  REQUIRE(inc0 != 0);
  REQUIRE(inc1 != 0);
  SimulationReport r = full_report(faults::scramble_entries(cs, inc0, inc1), 12);
  CHECK(r.condition1.passed);
  REQUIRE_FALSE(r.condition2.passed);
  REQUIRE(r.condition2.witness->assembly);
  CHECK(oracle::producible(tas, 13).count(oracle::cells_of(*r.condition2.witness->assembly)) == 0);
}

TEST_CASE("dynamics") {
  CompiledSystem elbow = compile(corpus::elbow());
  VerifierInputs in = prepare_inputs(elbow, 6);
  DynamicsStats stats;
  CHECK(check_dynamics(elbow, in, &stats).passed);
  CHECK(stats.one_step_total == in.source.edges.size());
  CHECK(stats.one_step_mirrored == stats.one_step_total);
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < in.source.assemblies.size(); ++i)
    for (bool b : in.source.reachable_from(i)) pairs += b;
  CHECK(stats.pairs_checked == pairs);

  CompiledSystem counter = compile(corpus::counter(4));
  VerifierInputs cin = prepare_inputs(counter, 15);
  CHECK(cin.source.truncated);
  CHECK(cin.macro.truncated);
  CHECK(check_dynamics(counter, cin).passed);
}

TEST_CASE("premature commits break dynamics soundness") {
  CompiledSystem elbow = compile(corpus::elbow());
  EngineOptions fault;
  fault.commit_without_full_inputs = true;
  Verdict v = check_dynamics(elbow, 6, fault);
  REQUIRE_FALSE(v.passed);
  const Witness& w = *v.witness;
  CHECK(w.condition == "dynamics");
  REQUIRE(w.assembly);
  REQUIRE(w.other);
  CHECK_FALSE(source_reaches(elbow.source, *w.assembly, *w.other));
  CHECK_FALSE(full_report(elbow, 6, fault).passed());
}

TEST_CASE("full report") {
  CompiledSystem elbow = compile(corpus::elbow());
  SimulationReport r = full_report(elbow, 6);
  CHECK(r.passed());
  CHECK_FALSE(r.source_truncated);
  std::string text = to_text(r, elbow.source);
  CHECK(text == to_text(full_report(elbow, 6), elbow.source));
  CHECK(text == read_file(std::string(TILEWORKS_GOLDEN_DIR) + "/elbow.report"));

  SimulationReport shifted = full_report(faults::shift_seed_origin(elbow, {3, 0}), 6);
  CHECK_FALSE(shifted.condition1.passed);
  CHECK(shifted.condition2.passed);
  CHECK(shifted.condition3.passed);

  SimulationReport swapped = full_report(faults::swap_seed_tile(elbow, 3), 6);
  CHECK_FALSE(swapped.condition1.passed);

  SimulationReport counter = full_report(compile(corpus::counter(4)), 15);
  CHECK(counter.passed());
  CHECK(counter.source_truncated);
  CHECK(counter.macro_truncated);
}

TEST_CASE("corpus systems pass at bound 6") {
  for (const auto& entry : corpus::entries()) {
    if (!entry.locally_consistent) continue;
    CAPTURE(entry.name);
    CHECK(full_report(compile(entry.make()), 6).passed());
  }
}
