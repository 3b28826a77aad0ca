// Acceptance suite: one PASS/FAIL line per criterion, with its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "tileworks/corpus.hpp"
#include "tileworks/encoder.hpp"
#include "tileworks/local_consistency.hpp"
#include "tileworks/lookup.hpp"
#include "tileworks/macro.hpp"
#include "tileworks/svg.hpp"
#include "tileworks/verifier.hpp"

using namespace tw;

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

CompiledSystem compile_any(const Tas& tas) {
  CompileParams p;
  p.force = true;
  return compile(tas, p);
}

std::set<oracle::Cells> cell_sets(const std::vector<Assembly>& as) {
  std::set<oracle::Cells> out;
  for (const Assembly& a : as) out.insert(oracle::cells_of(a));
  return out;
}

void pad_codec() {
  for (std::size_t n = 1; n <= 7; ++n) {  // |G| = n + 1 counting the null glue
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
    GlueOrdering ord = make_ordering(labels);
    std::size_t width = oracle::bits_for(n + 2);
    expect(ord.width == width, "width for |G|=" + std::to_string(n + 1));
    for (const std::string& l : labels)
      for (Direction d : kDirections)
        for (int s : {1, 2}) {
          Pad p{Glue(l), d, s};
          BitString b = bin_pad(p, ord);
          expect(b.size() == width + 3, "length of " + to_string(p));
          expect(b.str() == oracle::encode(labels, l, to_char(d), s), "bits of " + to_string(p));
          expect(decode_pad(b, ord) == p, "round trip of " + to_string(p));
        }
  }
}

void address_canon() {
  const std::string listed[6] = {"EN", "SE", "WS", "NW", "NS", "EW"};
  for (const auto& entry : corpus::entries()) {
    Tas tas = entry.make();
    GlueOrdering ord = glue_ordering(tas);
    std::vector<std::string> labels = oracle::labels_of(tas);
    for (const std::string& pair : listed)
      for (const std::string& g1 : labels)
        for (const std::string& g2 : labels) {
          Pad first{Glue(g1), *direction_from_char(pair[0]), 1};
          Pad second{Glue(g2), *direction_from_char(pair[1]), 1};
          std::vector<Pad> given{second, first};
          Address a = address_of(given, ord);
          expect(a.bits.str() == oracle::encode(labels, g1, pair[0], 1) + oracle::encode(labels, g2, pair[1], 1),
                 entry.name + " pair " + pair);
        }
    for (const std::string& g : labels)
      for (Direction d : kDirections) {
        std::vector<Pad> single{{Glue(g), d, 2}};
        Address a = address_of(single, ord);
        expect(a.bits.str() == std::string(ord.pad_length(), '0') + oracle::encode(labels, g, to_char(d), 2),
               entry.name + " single " + g);
      }
  }
}

void table_structure() {
  for (const auto& entry : corpus::entries()) {
    CompiledSystem cs = compile_any(entry.make());
    const std::string& s = cs.table.symbols();
    std::string rw(cs.w.rbegin(), cs.w.rend());
    std::string stripped;
    for (std::size_t i = 0; i < s.size(); ++i) {
      expect((s[i] == kBlank) == (i % 2 == 1), entry.name + " blank at " + std::to_string(i));
      if (i % 2 == 0) stripped += s[i];
    }
    expect(stripped == ">" + cs.w + "<%%>" + rw + "<", entry.name + " de-spliced table");
    std::uint64_t max_address = 0;
    for (const AddressEntry& e : cs.addresses) max_address = std::max(max_address, e.address.value);
    auto hashes = static_cast<std::uint64_t>(std::count(cs.w.begin(), cs.w.end(), '#'));
    expect(hashes == 1 + max_address, entry.name + " entry count");
  }
}

void lookup_equivalence() {
  for (const auto& entry : corpus::entries()) {
    CompiledSystem cs = compile_any(entry.make());
    for (std::size_t width = 1; width <= 6; ++width)
      for (const AddressEntry& a : cs.addresses) {
        std::vector<std::string> subs = oracle::entry(cs.w, a.address.value);
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << width); ++v) {
          TraceResult r = trace_lookup(cs.table, cs.glues, a.address.value, BitString::from_value(v, width));
          std::size_t n = subs.size();
          expect(r.trace.n == n, entry.name + " n at " + std::to_string(a.address.value));
          expect(r.trace.p == v % n, entry.name + " p");
          std::size_t original = unmirror(r.trace.p, n);
          expect(r.outcome.selected_index == original, entry.name + " selected index");
          expect(r.outcome.sub_entry == direct_lookup(cs.w, cs.glues, a.address.value, original),
                 entry.name + " outcome at " + std::to_string(a.address.value) + " b=" + std::to_string(v));
        }
      }
  }
}

void fairness() {
  for (const auto& entry : corpus::entries()) {
    CompiledSystem cs = compile_any(entry.make());
    for (std::size_t width = 1; width <= 6; ++width)
      for (const AddressEntry& a : cs.addresses) {
        std::size_t n = a.tiles.size();
        std::uint64_t total = std::uint64_t{1} << width;
        if (total < n) continue;
        if (n == 1) {
          for (std::uint64_t v = 0; v < total; ++v)
            expect(mod_select(BitString::from_value(v, width), 1) == 0, entry.name + " single sub-entry");
          continue;
        }
        std::map<std::size_t, std::uint64_t> counts;
        for (std::uint64_t v = 0; v < total; ++v)
          ++counts[trace_lookup(cs.table, cs.glues, a.address.value, BitString::from_value(v, width))
                       .outcome.selected_index];
        for (std::size_t i = 0; i < n; ++i)
          expect(counts[i] >= total / n && counts[i] <= (total + n - 1) / n, entry.name + " fairness");
      }
  }
  CompiledSystem nd = compile(corpus::nondet_elbow(), {std::nullopt, std::size_t{4}});
  std::map<std::string, int> split;
  for (std::uint64_t v = 0; v < 16; ++v) {
    TraceResult r = lookup(nd, 1948, BitString::from_value(v, 4));
    ++split[nd.source.tile(r.outcome.tile_candidates[r.outcome.selected_index]).name];
  }
  expect(split.size() == 2 && split["tD"] == 8 && split["tD2"] == 8, "nondet elbow 8/8 split");
}

void classifier() {
  for (const char* name : {"elbow", "nondet_elbow", "counter4", "sierpinski8"}) {
    LcReport r = verify_locally_consistent(corpus::find(name)->make(), 25);
    expect(r.verdict.passed, std::string(name) + " should pass");
  }
  {
    Tas tas = corpus::strength_four_variant();
    LcReport r = verify_locally_consistent(tas, 25);
    expect(!r.verdict.passed && r.verdict.witness->sequence, "strength-4 variant should fail with a sequence");
    AssemblySequence seq = *r.verdict.witness->sequence;
    Placement last = seq.steps.back();
    seq.steps.pop_back();
    Assembly before = replay(tas, seq);
    expect(oracle::strength(tas, oracle::cells_of(before), last.pos.x, last.pos.y, last.tile) == 4,
           "strength-4 witness replays");
  }
  {
    Tas tas = corpus::mismatch_variant();
    LcReport r = verify_locally_consistent(tas, 25);
    expect(!r.verdict.passed && r.verdict.witness->assembly, "mismatch variant should fail with an assembly");
    const Assembly& a = *r.verdict.witness->assembly;
    expect(oracle::producible(tas, a.size()).count(oracle::cells_of(a)) == 1, "mismatch witness is producible");
    expect(!oracle::mismatches(tas, oracle::cells_of(a)).empty(), "mismatch witness has a mismatch");
  }
}

void simulation_conditions() {
  for (const char* name : {"elbow", "nondet_elbow"}) {
    SimulationReport r = full_report(compile(corpus::find(name)->make()), 6);
    expect(r.passed(), std::string(name) + " report at bound 6");
  }
  CompiledSystem elbow = compile(corpus::elbow());
  VerifierInputs in = prepare_inputs(elbow, 6);
  expect(!in.source.truncated, "elbow exploration is exhaustive");
  expect(cell_sets(in.macro.image_set()) == cell_sets(in.source.assemblies), "elbow coverage is exact");

  SimulationReport counter = full_report(compile(corpus::counter(4)), 15);
  expect(counter.passed(), "counter4 report at bound 15");
  expect(counter.source_truncated && counter.macro_truncated, "counter4 truncation flags");
}

void nondeterminism_fidelity() {
  CompiledSystem cs = compile(corpus::nondet_elbow());
  MacroExploration m = macro_explore(cs, 6);
  ExplorationResult src = explore(cs.source, 10);
  expect(!src.truncated, "source exploration is exhaustive");
  std::vector<Assembly> terminals;
  for (std::size_t id : src.terminals()) terminals.push_back(src.assemblies[id]);
  expect(terminals.size() == 2, "two source terminals");
  expect(cell_sets(m.terminal_images()) == cell_sets(terminals), "decoded terminals equal source terminals");
  for (const Assembly& a : m.image_set()) expect(src.find(a).has_value(), "no junk image");
}

void determinism() {
  for (const char* name : {"elbow", "nondet_elbow", "counter3", "sierpinski8"}) {
    Tas tas = corpus::find(name)->make();
    for (std::uint64_t seed : {1u, 42u}) {
      AssemblySequence a = sample_sequence(tas, seed, 60);
      expect(a == sample_sequence(tas, seed, 60), std::string(name) + " sample_sequence");
      expect(render_svg(tas, replay(tas, a)) == render_svg(tas, replay(tas, a)), std::string(name) + " svg");
    }
    CompiledSystem cs = compile(tas);
    expect(serialize(cs) == serialize(compile(tas)), std::string(name) + " compiled artifact");
    MacroEngine engine(cs);
    SimulationRun r1 = engine.simulate(7, 400, 8);
    SimulationRun r2 = MacroEngine(compile(tas)).simulate(7, 400, 8);
    expect(r1.events == r2.events && r1.log == r2.log && r1.final_state == r2.final_state,
           std::string(name) + " macro run");
  }
}

void counter_semantics() {
  const std::size_t width = 3;
  Tas tas = corpus::counter(width);
  AssemblySequence seq = sample_sequence(tas, 3, 15 * width - 1);
  Assembly a = replay(tas, seq);
  expect(a.size() == 15 * width, "counter grew 8 value rows");
  std::uint64_t value = 0;  // incremented independently, one row at a time
  for (int k = 0; k <= 7; ++k) {
    auto row = corpus::counter_row_value(tas, a, width, k);
    expect(row.has_value(), "row " + std::to_string(k) + " complete");
    expect(*row == value, "row " + std::to_string(k) + " value");
    value = value + 1;
  }
}

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;
  std::function<void()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "pad codec round trip", 1, pad_codec},
      {2, "address canon", 1, address_canon},
      {3, "table structure", 1, table_structure},
      {4, "lookup oracle equivalence", 10, lookup_equivalence},
      {5, "fair selection", 1, fairness},
      {6, "local consistency classifier", 5, classifier},
      {7, "simulation conditions", 60, simulation_conditions},
      {8, "nondeterminism fidelity", 10, nondeterminism_fidelity},
      {9, "determinism and replay", 5, determinism},
      {10, "counter semantics", 5, counter_semantics},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    bool ok = true;
    auto start = std::chrono::steady_clock::now();
    try {
      c.check();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && seconds > c.limit_seconds) {
      ok = false;
      detail = "over the time limit";
    }
    if (!ok) ++failed;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3fs of %.0fs", seconds, c.limit_seconds);
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.name << " (" << timing << ")";
    if (!detail.empty()) std::cout << ": " << detail;
    std::cout << '\n';
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
