#include "tileworks/verifier.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "tileworks/error.hpp"

namespace tw {

namespace {

constexpr std::ptrdiff_t kNotProducible = -1;
constexpr std::ptrdiff_t kBroken = -2;

std::vector<std::vector<std::size_t>> successors(std::size_t n, const std::vector<MacroTransition>& edges) {
  std::vector<std::vector<std::size_t>> succ(n);
  for (const MacroTransition& e : edges) succ[e.from].push_back(e.to);
  return succ;
}

std::vector<std::vector<std::size_t>> successors(const ExplorationResult& r) {
  std::vector<std::vector<std::size_t>> succ(r.assemblies.size());
  for (const Transition& e : r.edges) succ[e.from].push_back(e.to);
  return succ;
}

// Events along the BFS tree from the seeded state to `id`.
std::string event_path(const MacroExploration& m, std::size_t id) {
  std::vector<std::optional<std::size_t>> parent(m.states.size());
  for (std::size_t e = 0; e < m.edges.size(); ++e)
    if (!parent[m.edges[e].to] && m.edges[e].to != 0) parent[m.edges[e].to] = e;
  std::vector<std::string> steps;
  for (std::size_t cur = id; cur != 0;) {
    const MacroTransition& t = m.edges[parent[cur].value()];
    steps.push_back(to_string(t.event));
    cur = t.from;
  }
  std::reverse(steps.begin(), steps.end());
  std::string out;
  for (const std::string& s : steps) out += (out.empty() ? "" : "; ") + s;
  return out;
}

// Source index of each macro state's image at the verification bound.
std::vector<std::ptrdiff_t> image_ids(const VerifierInputs& in) {
  std::vector<std::ptrdiff_t> ids(in.macro.states.size(), kNotProducible);
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (!in.macro.images[k]) ids[k] = kBroken;
    else if (auto i = in.source.find(*in.macro.images[k])) ids[k] = static_cast<std::ptrdiff_t>(*i);
  }
  return ids;
}

Witness make_witness(std::string condition, std::string explanation) {
  Witness w;
  w.condition = std::move(condition);
  w.explanation = std::move(explanation);
  return w;
}

}  // namespace

VerifierInputs prepare_inputs(const CompiledSystem& cs, std::size_t bound, const EngineOptions& options) {
  if (bound == 0) throw Error(ErrorKind::IllegalEvent, "verification bound must be at least 1");
  VerifierInputs in;
  in.bound = bound;
  in.source = explore(cs.source, bound);
  in.source_wide = explore(cs.source, bound + 1);
  in.macro = MacroEngine(cs, options).explore(bound);
  return in;
}

Verdict check_seed_condition(const CompiledSystem& cs) {
  const Position o = cs.seed_origin;
  const auto c = static_cast<long long>(cs.c);
  if (o.x < 0 || o.y < 0 || o.x + c > c || o.y + c > c)
    return Verdict::fail(make_witness("seed", "seed block at " + to_string(o) + " leaves the first " +
                                                  std::to_string(cs.c) + "x" + std::to_string(cs.c) + " footprint"));
  std::optional<TileIndex> t;
  try {
    t = decode_block(cs.seed_block, cs);
  } catch (const Error& e) {
    return Verdict::fail(make_witness("seed", std::string("seed block does not decode: ") + e.what()));
  }
  if (!t || *t != cs.source.seed()) {
    std::string got = t ? cs.source.tile(*t).name : std::string("nothing");
    return Verdict::fail(make_witness("seed", "seed block decodes to " + got + ", expected " +
                                                  cs.source.tile(cs.source.seed()).name));
  }
  return Verdict::pass();
}

Verdict check_coverage(const CompiledSystem& cs, const VerifierInputs& in) {
  const MacroExploration& m = in.macro;
  for (std::size_t k = 0; k < m.states.size(); ++k) {
    if (!m.images[k])
      return Verdict::fail(make_witness("coverage", "block state does not decode: " + m.image_errors[k] +
                                                        "; reached by: " + event_path(m, k)));
    if (!in.source_wide.find(*m.images[k])) {
      Witness w = make_witness("coverage", "decoded assembly is not producible; reached by: " + event_path(m, k));
      w.assembly = *m.images[k];
      return Verdict::fail(std::move(w));
    }
  }
  std::vector<bool> covered(in.source.assemblies.size(), false);
  for (const auto& img : m.images)
    if (auto i = in.source.find(*img)) covered[*i] = true;
  for (std::size_t i = 0; i < covered.size(); ++i) {
    if (covered[i]) continue;
    Witness w = make_witness("coverage", "producible assembly " + describe(cs.source, in.source.assemblies[i]) +
                                             " has no block representative");
    w.assembly = in.source.assemblies[i];
    w.sequence = in.source.sequence_to(i);
    return Verdict::fail(std::move(w));
  }
  return Verdict::pass();
}

Verdict check_coverage(const CompiledSystem& cs, std::size_t bound, const EngineOptions& options) {
  return check_coverage(cs, prepare_inputs(cs, bound, options));
}

Verdict check_dynamics(const CompiledSystem& cs, const VerifierInputs& in, DynamicsStats* stats) {
  const MacroExploration& m = in.macro;
  const ExplorationResult& src = in.source;
  std::vector<std::ptrdiff_t> ids = image_ids(in);
  auto macro_succ = successors(m.states.size(), m.edges);
  auto src_succ = successors(src);

  std::vector<std::vector<std::size_t>> pre(src.assemblies.size());
  for (std::size_t k = 0; k < ids.size(); ++k)
    if (ids[k] >= 0) pre[static_cast<std::size_t>(ids[k])].push_back(k);

  // Macro states reachable from the pre-images of `i`, optionally restricted
  // to states whose image is in `allowed`.
  auto macro_reach = [&](std::size_t i, const std::vector<std::ptrdiff_t>* allowed) {
    std::vector<bool> seen(m.states.size(), false);
    std::deque<std::size_t> queue;
    for (std::size_t k : pre[i]) {
      seen[k] = true;
      queue.push_back(k);
    }
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v : macro_succ[u]) {
        if (seen[v]) continue;
        if (allowed && std::find(allowed->begin(), allowed->end(), ids[v]) == allowed->end()) continue;
        seen[v] = true;
        queue.push_back(v);
      }
    }
    return seen;
  };
  auto source_reach = [&](std::size_t i) {
    std::vector<bool> seen(src.assemblies.size(), false);
    std::vector<std::size_t> stack{i};
    seen[i] = true;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v : src_succ[u])
        if (!seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
    }
    return seen;
  };

  DynamicsStats local;
  std::optional<Verdict> failure;
  for (std::size_t i = 0; i < src.assemblies.size(); ++i) {
    std::vector<bool> target = source_reach(i);
    std::vector<bool> reached_state = macro_reach(i, nullptr);
    std::vector<bool> reached(src.assemblies.size(), false);
    for (std::size_t k = 0; k < reached_state.size(); ++k) {
      if (!reached_state[k]) continue;
      if (ids[k] >= 0) {
        reached[static_cast<std::size_t>(ids[k])] = true;
        if (target[static_cast<std::size_t>(ids[k])]) continue;
      }
      if (failure) continue;
      Witness w;
      w.condition = "dynamics";
      w.assembly = src.assemblies[i];
      w.sequence = src.sequence_to(i);
      if (ids[k] == kBroken) {
        w.explanation = "from a representative of " + describe(cs.source, src.assemblies[i]) +
                        " the blocks reach a state that does not decode: " + m.image_errors[k];
      } else {
        w.other = *m.images[k];
        w.explanation = "from a representative of " + describe(cs.source, src.assemblies[i]) + " the blocks reach " +
                        describe(cs.source, *m.images[k]) + ", which the source cannot reach";
      }
      w.explanation += "; reached by: " + event_path(m, k);
      failure = Verdict::fail(std::move(w));
    }
    for (std::size_t j = 0; j < target.size(); ++j) {
      if (!target[j]) continue;
      ++local.pairs_checked;
      if (reached[j] || failure) continue;
      Witness w;
      w.condition = "dynamics";
      w.assembly = src.assemblies[i];
      w.other = src.assemblies[j];
      w.sequence = src.sequence_to(j);
      w.explanation = "source reaches " + describe(cs.source, src.assemblies[j]) + " from " +
                      describe(cs.source, src.assemblies[i]) + " but no representative pair is block-reachable";
      failure = Verdict::fail(std::move(w));
    }
  }

  for (const Transition& t : src.edges) {
    ++local.one_step_total;
    std::vector<std::ptrdiff_t> allowed{static_cast<std::ptrdiff_t>(t.from), static_cast<std::ptrdiff_t>(t.to)};
    std::vector<bool> seen = macro_reach(t.from, &allowed);
    for (std::size_t k = 0; k < seen.size(); ++k)
      if (seen[k] && ids[k] == static_cast<std::ptrdiff_t>(t.to)) {
        ++local.one_step_mirrored;
        break;
      }
  }
  if (stats) *stats = local;
  return failure ? *failure : Verdict::pass();
}

Verdict check_dynamics(const CompiledSystem& cs, std::size_t bound, const EngineOptions& options) {
  return check_dynamics(cs, prepare_inputs(cs, bound, options));
}

SimulationReport full_report(const CompiledSystem& cs, std::size_t bound, const EngineOptions& options) {
  VerifierInputs in = prepare_inputs(cs, bound, options);
  SimulationReport r;
  r.bound = bound;
  r.condition1 = check_seed_condition(cs);
  r.condition2 = check_coverage(cs, in);
  r.condition3 = check_dynamics(cs, in, &r.dynamics);
  r.source_truncated = in.source.truncated;
  r.macro_truncated = in.macro.truncated;
  r.source_assemblies = in.source.assemblies.size();
  r.macro_states = in.macro.states.size();
  r.decoded_images = in.macro.image_set().size();
  r.diagnostics = in.macro.diagnostics;
  return r;
}

std::string to_text(const SimulationReport& r, const Tas& source) {
  std::ostringstream os;
  auto yes_no = [](bool b) { return b ? "yes" : "no"; };
  auto verdict = [&](const char* name, const Verdict& v) {
    os << name << ' ' << (v.passed ? "pass" : "fail") << '\n';
    if (!v.witness) return;
    const Witness& w = *v.witness;
    os << "  reason " << w.explanation << '\n';
    if (w.assembly) os << "  assembly " << describe(source, *w.assembly) << '\n';
    if (w.other) os << "  other " << describe(source, *w.other) << '\n';
  };
  os << "simulation-report\n";
  os << "bound " << r.bound << '\n';
  os << "source-assemblies " << r.source_assemblies << " truncated " << yes_no(r.source_truncated) << '\n';
  os << "macro-states " << r.macro_states << " truncated " << yes_no(r.macro_truncated) << '\n';
  os << "decoded-images " << r.decoded_images << '\n';
  verdict("condition1", r.condition1);
  verdict("condition2", r.condition2);
  verdict("condition3", r.condition3);
  os << "reachable-pairs " << r.dynamics.pairs_checked << '\n';
  os << "one-step-mirrored " << r.dynamics.one_step_mirrored << '/' << r.dynamics.one_step_total << '\n';
  os << "diagnostics " << r.diagnostics.size() << '\n';
  for (const std::string& d : r.diagnostics) os << "  " << d << '\n';
  os << "result " << (r.passed() ? "pass" : "fail") << '\n';
  return os.str();
}

namespace faults {

CompiledSystem scramble_entries(const CompiledSystem& cs, std::uint64_t a, std::uint64_t b) {
  auto ia = std::find_if(cs.addresses.begin(), cs.addresses.end(),
                         [&](const AddressEntry& e) { return e.address.value == a; });
  auto ib = std::find_if(cs.addresses.begin(), cs.addresses.end(),
                         [&](const AddressEntry& e) { return e.address.value == b; });
  if (ia == cs.addresses.end() || ib == cs.addresses.end())
    throw Error(ErrorKind::AddressRange, "both scrambled addresses must have entries");

  // Split w into its entries, swap two of them, and rebuild.
  std::vector<std::string> entries;
  for (char ch : cs.w) {
    if (ch == '#') entries.emplace_back();
    else entries.back() += ch;
  }
  std::swap(entries.at(a), entries.at(b));
  CompiledSystem out = cs;
  out.w.clear();
  for (const std::string& e : entries) out.w += '#' + e;
  out.table = LookupTable::from_w(out.w);
  std::swap(out.addresses[static_cast<std::size_t>(ia - cs.addresses.begin())].tiles,
            out.addresses[static_cast<std::size_t>(ib - cs.addresses.begin())].tiles);
  return out;
}

CompiledSystem swap_seed_tile(const CompiledSystem& cs, TileIndex tile) {
  CompiledSystem out = cs;
  out.seed_block.committed_tile = tile;
  return out;
}

CompiledSystem shift_seed_origin(const CompiledSystem& cs, Position origin) {
  CompiledSystem out = cs;
  out.seed_origin = origin;
  return out;
}

}  // namespace faults

}  // namespace tw
