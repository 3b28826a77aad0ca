#include "tileworks/macro.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <random>
#include <set>
#include <unordered_set>

#include "tileworks/error.hpp"

namespace tw {

namespace {

void mix(std::uint64_t& h, std::uint64_t v) { h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2); }

std::uint64_t pad_hash(const std::optional<Pad>& p) {
  if (!p) return 0x51ed27u;
  std::uint64_t h = std::hash<std::string>{}(p->glue.label());
  mix(h, index_of(p->direction));
  mix(h, static_cast<std::uint64_t>(p->strength));
  return h;
}

std::string pad_text(const std::optional<Pad>& p) {
  if (!p) return "-";
  return p->glue.label() + ":" + std::to_string(p->strength);
}

std::size_t started_blocks(const MacroAssembly& m) {
  std::size_t n = 0;
  for (const auto& [pos, b] : m.blocks())
    if (b->phase >= BlockPhase::Probing) ++n;
  return n;
}

BitString draw_bits(std::uint64_t rng_seed, Position block, std::size_t width) {
  std::seed_seq seq{static_cast<std::uint32_t>(rng_seed), static_cast<std::uint32_t>(rng_seed >> 32),
                    static_cast<std::uint32_t>(block.x), static_cast<std::uint32_t>(block.y)};
  std::mt19937_64 gen(seq);
  std::uint64_t mask = width >= 64 ? ~0ull : ((1ull << width) - 1);
  return BitString::from_value(gen() & mask, width);
}

bool same_event(const MacroEvent& a, const MacroEvent& b) {
  return a.kind == b.kind && a.block == b.block && a.side == b.side && a.pad == b.pad;
}

std::vector<Pad> received(const BlockState& b) {
  std::vector<Pad> pads;
  for (Direction d : kDirections)
    if (b.input_pads[index_of(d)]) pads.push_back(*b.input_pads[index_of(d)]);
  return pads;
}

}  // namespace

const char* to_string(BlockPhase p) {
  switch (p) {
    case BlockPhase::Empty: return "empty";
    case BlockPhase::InputsPartial: return "inputs-partial";
    case BlockPhase::Probing: return "probing";
    case BlockPhase::TypeDetected: return "type-detected";
    case BlockPhase::Committed: return "committed";
    case BlockPhase::Complete: return "complete";
  }
  return "?";
}

const char* to_string(InputKind k) {
  switch (k) {
    case InputKind::SingleStrengthTwo: return "single-strength-2";
    case InputKind::OppositePair: return "opposite-pair";
    case InputKind::AdjacentPair: return "adjacent-pair";
  }
  return "?";
}

DirectionSet BlockState::input_sides() const {
  DirectionSet s;
  for (Direction d : kDirections)
    if (input_pads[index_of(d)]) s.insert(d);
  return s;
}

int BlockState::input_strength() const {
  int total = 0;
  for (const auto& p : input_pads)
    if (p) total += p->strength;
  return total;
}

std::size_t BlockState::hash() const {
  std::uint64_t h = static_cast<std::uint64_t>(phase);
  for (const auto& p : input_pads) mix(h, pad_hash(p));
  mix(h, input_kind ? static_cast<std::uint64_t>(*input_kind) + 1 : 0);
  mix(h, std::hash<std::string>{}(random_bits.str()));
  mix(h, address ? *address + 1 : 0);
  mix(h, selected_index ? *selected_index + 1 : 0);
  mix(h, committed_tile ? *committed_tile + 1ull : 0);
  for (const auto& p : output_pads) mix(h, pad_hash(p));
  return static_cast<std::size_t>(h);
}

// MacroAssembly

MacroAssembly MacroAssembly::seeded(const CompiledSystem& cs) {
  return MacroAssembly{}.with({0, 0}, cs.seed_block);
}

const BlockState* MacroAssembly::at(Position p) const {
  auto it = std::lower_bound(blocks_.begin(), blocks_.end(), p,
                             [](const Entry& e, Position q) { return e.first < q; });
  if (it == blocks_.end() || it->first != p) return nullptr;
  return it->second.get();
}

MacroAssembly MacroAssembly::with(Position p, BlockState state) const {
  MacroAssembly out = *this;
  auto it = std::lower_bound(out.blocks_.begin(), out.blocks_.end(), p,
                             [](const Entry& e, Position q) { return e.first < q; });
  auto ptr = std::make_shared<const BlockState>(std::move(state));
  if (it != out.blocks_.end() && it->first == p) it->second = std::move(ptr);
  else out.blocks_.insert(it, {p, std::move(ptr)});

  std::uint64_t h = 0x8f1bbcdcu;
  for (const auto& [pos, b] : out.blocks_) {
    mix(h, static_cast<std::uint32_t>(pos.x));
    mix(h, static_cast<std::uint32_t>(pos.y));
    mix(h, b->hash());
  }
  out.hash_ = static_cast<std::size_t>(h);
  return out;
}

bool operator==(const MacroAssembly& a, const MacroAssembly& b) {
  if (a.hash_ != b.hash_ || a.blocks_.size() != b.blocks_.size()) return false;
  for (std::size_t i = 0; i < a.blocks_.size(); ++i) {
    const auto& [pa, ba] = a.blocks_[i];
    const auto& [pb, bb] = b.blocks_[i];
    if (pa != pb) return false;
    if (ba != bb && !(*ba == *bb)) return false;
  }
  return true;
}

const char* to_string(MacroEventKind k) {
  switch (k) {
    case MacroEventKind::Arrive: return "arrive";
    case MacroEventKind::Probe: return "probe";
    case MacroEventKind::Detect: return "detect";
    case MacroEventKind::Commit: return "commit";
    case MacroEventKind::Complete: return "complete";
  }
  return "?";
}

std::string to_string(const MacroEvent& e) {
  std::string s = std::string(to_string(e.kind)) + " " + to_string(e.block);
  if (e.kind == MacroEventKind::Arrive) s += std::string(" ") + to_char(e.side) + "=" + pad_text(e.pad);
  if (e.bits) s += " bits=" + e.bits->str();
  return s;
}

std::vector<Assembly> MacroExploration::image_set() const {
  std::vector<Assembly> out;
  std::unordered_set<Assembly, AssemblyHash> seen;
  for (const auto& img : images)
    if (img && seen.insert(*img).second) out.push_back(*img);
  return out;
}

std::vector<Assembly> MacroExploration::terminal_images() const {
  std::vector<Assembly> out;
  std::unordered_set<Assembly, AssemblyHash> seen;
  for (std::size_t i = 0; i < states.size(); ++i)
    if (terminal[i] && images[i] && seen.insert(*images[i]).second) out.push_back(*images[i]);
  return out;
}

// MacroEngine

MacroEngine::MacroEngine(const CompiledSystem& cs, EngineOptions options) : cs_(cs), options_(options) {}

std::optional<std::uint64_t> MacroEngine::resolve_address(const BlockState& b) const {
  std::vector<Pad> pads = received(b);
  try {
    std::uint64_t value = address_of(pads, cs_.glues).value;
    if (!options_.commit_without_full_inputs || cs_.find_address(value)) return value;
  } catch (const Error&) {
    if (!options_.commit_without_full_inputs) return std::nullopt;
  }
  for (const AddressEntry& e : cs_.addresses) {
    bool covers = std::all_of(pads.begin(), pads.end(), [&](const Pad& p) {
      return std::find(e.address.pads.begin(), e.address.pads.end(), p) != e.address.pads.end();
    });
    if (covers) return e.address.value;
  }
  return std::nullopt;
}

std::optional<std::size_t> MacroEngine::entry_size(std::uint64_t address) const {
  auto it = entry_sizes_.find(address);
  if (it != entry_sizes_.end()) return it->second;
  std::optional<std::size_t> n;
  try {
    n = trace_lookup(cs_.table, cs_.glues, address, BitString::zeros(cs_.random_bits)).trace.n;
  } catch (const Error&) {
  }
  entry_sizes_.emplace(address, n);
  return n;
}

const std::optional<LookupOutcome>& MacroEngine::cached_lookup(std::uint64_t address, std::size_t p) const {
  auto key = std::make_pair(address, p);
  auto it = lookups_.find(key);
  if (it != lookups_.end()) return it->second;
  std::optional<LookupOutcome> out;
  try {
    out = lookup(cs_, address, BitString::from_value(p, cs_.random_bits)).outcome;
    if (out->selected_index >= out->tile_candidates.size()) out.reset();
  } catch (const Error&) {
  }
  return lookups_.emplace(key, std::move(out)).first->second;
}

bool MacroEngine::probe_ready(const BlockState& b) const {
  if (b.phase != BlockPhase::InputsPartial) return false;
  int s = b.input_strength();
  if (options_.commit_without_full_inputs) return s >= 1 && s <= 2;
  return s == 2;
}

std::optional<MacroEvent> MacroEngine::enabled(const MacroAssembly&, Position pos, const BlockState& b) const {
  switch (b.phase) {
    case BlockPhase::Empty:
    case BlockPhase::Complete:
      return std::nullopt;
    case BlockPhase::InputsPartial:
      if (probe_ready(b)) return MacroEvent{MacroEventKind::Probe, pos, Direction::N, std::nullopt, std::nullopt};
      return std::nullopt;
    case BlockPhase::Probing:
      return MacroEvent{MacroEventKind::Detect, pos, Direction::N, std::nullopt, std::nullopt};
    case BlockPhase::TypeDetected: {
      auto addr = resolve_address(b);
      if (!addr) return std::nullopt;
      auto n = entry_size(*addr);
      if (!n || *n == 0) return std::nullopt;
      if (!cached_lookup(*addr, mod_select(b.random_bits, *n))) return std::nullopt;
      return MacroEvent{MacroEventKind::Commit, pos, Direction::N, std::nullopt, std::nullopt};
    }
    case BlockPhase::Committed:
      return MacroEvent{MacroEventKind::Complete, pos, Direction::N, std::nullopt, std::nullopt};
  }
  return std::nullopt;
}

std::vector<MacroEvent> MacroEngine::frontier(const MacroAssembly& m, std::size_t bound, bool* suppressed) const {
  std::vector<MacroEvent> events;
  bool dropped = false;
  std::size_t started = started_blocks(m);
  for (const auto& [pos, b] : m.blocks()) {
    if (b->phase == BlockPhase::Complete) {
      for (Direction d : kDirections) {
        const auto& out = b->output_pads[index_of(d)];
        if (!out) continue;
        Position target = tw::step(pos, d);
        Direction side = opposite(d);
        const BlockState* t = m.at(target);
        bool open = !t || ((t->phase == BlockPhase::Empty || t->phase == BlockPhase::InputsPartial) &&
                           !t->input_pads[index_of(side)]);
        if (open)
          events.push_back({MacroEventKind::Arrive, target, side, Pad{out->glue, side, out->strength}, std::nullopt});
      }
    }
    if (auto e = enabled(m, pos, *b)) {
      if (e->kind == MacroEventKind::Probe && started >= bound) {
        dropped = true;
        continue;
      }
      events.push_back(*e);
    }
  }
  std::sort(events.begin(), events.end(), [](const MacroEvent& a, const MacroEvent& b) {
    if (a.block != b.block) return a.block < b.block;
    if (a.kind != b.kind) return a.kind < b.kind;
    return index_of(a.side) < index_of(b.side);
  });
  if (suppressed) *suppressed = dropped;
  return events;
}

std::vector<std::string> MacroEngine::stuck_blocks(const MacroAssembly& m) const {
  std::vector<std::string> out;
  for (const auto& [pos, b] : m.blocks())
    if (b->phase == BlockPhase::InputsPartial && b->input_strength() > 2)
      out.push_back("block " + to_string(pos) + " received strength " + std::to_string(b->input_strength()) +
                    " on sides " + b->input_sides().to_string() + "; three-sided inputs are not simulated");
  return out;
}

std::vector<std::pair<BitString, std::uint64_t>> MacroEngine::bit_classes(const MacroAssembly& m,
                                                                         Position block) const {
  const BlockState* b = m.at(block);
  if (!b || !probe_ready(*b))
    throw Error(ErrorKind::IllegalEvent, "block " + to_string(block) + " is not ready to probe");
  std::size_t width = cs_.random_bits;
  std::uint64_t total = 1ull << width;
  std::optional<std::size_t> n;
  if (auto addr = resolve_address(*b)) n = entry_size(*addr);
  std::vector<std::pair<BitString, std::uint64_t>> out;
  if (!n || *n == 0) {
    out.emplace_back(BitString::zeros(width), total);
    return out;
  }
  std::uint64_t classes = std::min<std::uint64_t>(*n, total);
  for (std::uint64_t p = 0; p < classes; ++p) out.emplace_back(BitString::from_value(p, width), (total - 1 - p) / *n + 1);
  return out;
}

MacroAssembly MacroEngine::apply(const MacroAssembly& m, const MacroEvent& e) const {
  const BlockState* current = m.at(e.block);
  BlockState b = current ? *current : BlockState{};
  switch (e.kind) {
    case MacroEventKind::Arrive:
      b.input_pads[index_of(e.side)] = e.pad;
      b.phase = BlockPhase::InputsPartial;
      break;
    case MacroEventKind::Probe:
      if (!e.bits || e.bits->size() != cs_.random_bits)
        throw Error(ErrorKind::IllegalEvent, "probe at " + to_string(e.block) + " needs " +
                                                 std::to_string(cs_.random_bits) + " random bits");
      b.random_bits = *e.bits;
      b.phase = BlockPhase::Probing;
      break;
    case MacroEventKind::Detect: {
      DirectionSet sides = b.input_sides();
      if (sides.size() <= 1) b.input_kind = InputKind::SingleStrengthTwo;
      else if ((sides.contains(Direction::N) && sides.contains(Direction::S)) ||
               (sides.contains(Direction::E) && sides.contains(Direction::W)))
        b.input_kind = InputKind::OppositePair;
      else b.input_kind = InputKind::AdjacentPair;
      b.phase = BlockPhase::TypeDetected;
      break;
    }
    case MacroEventKind::Commit: {
      std::uint64_t addr = *resolve_address(b);
      std::size_t p = mod_select(b.random_bits, *entry_size(addr));
      const LookupOutcome& out = *cached_lookup(addr, p);
      b.address = addr;
      b.selected_index = out.selected_index;
      b.committed_tile = out.tile_candidates[out.selected_index];
      b.phase = BlockPhase::Committed;
      break;
    }
    case MacroEventKind::Complete: {
      std::uint64_t addr = *b.address;
      std::size_t p = mod_select(b.random_bits, *entry_size(addr));
      b.output_pads = cached_lookup(addr, p)->sub_entry.out;
      b.phase = BlockPhase::Complete;
      break;
    }
  }
  return m.with(e.block, std::move(b));
}

MacroAssembly MacroEngine::step(const MacroAssembly& m, const MacroEvent& e, std::uint64_t rng_seed) const {
  std::vector<MacroEvent> events = frontier(m);
  bool ok = std::any_of(events.begin(), events.end(), [&](const MacroEvent& f) { return same_event(e, f); });
  if (!ok) {
    const BlockState* b = m.at(e.block);
    std::string phase = b ? to_string(b->phase) : "empty";
    throw Error(ErrorKind::IllegalEvent, std::string(to_string(e.kind)) + " is not enabled at block " +
                                             to_string(e.block) + " in phase " + phase);
  }
  if (e.kind != MacroEventKind::Probe || e.bits) return apply(m, e);
  MacroEvent drawn = e;
  drawn.bits = draw_bits(rng_seed, e.block, cs_.random_bits);
  return apply(m, drawn);
}

MacroExploration MacroEngine::explore(std::size_t bound) const {
  MacroExploration r;
  r.bound = bound;
  std::set<std::string> diagnostics;

  auto add_state = [&](MacroAssembly s) -> std::pair<std::size_t, bool> {
    auto [it, inserted] = r.index.emplace(std::move(s), r.states.size());
    if (inserted) {
      r.states.push_back(it->first);
      try {
        r.images.push_back(r_star(it->first, cs_));
        r.image_errors.emplace_back();
      } catch (const Error& err) {
        r.images.push_back(std::nullopt);
        r.image_errors.emplace_back(err.what());
      }
      for (std::string& d : stuck_blocks(it->first)) diagnostics.insert(std::move(d));
    }
    return {it->second, inserted};
  };

  add_state(MacroAssembly::seeded(cs_));
  std::deque<std::size_t> queue{0};
  r.terminal.push_back(false);
  while (!queue.empty()) {
    std::size_t id = queue.front();
    queue.pop_front();
    MacroAssembly current = r.states[id];
    bool suppressed = false;
    std::vector<MacroEvent> events = frontier(current, bound, &suppressed);
    if (suppressed) r.truncated = true;
    r.terminal.resize(r.states.size(), false);
    r.terminal[id] = events.empty() && !suppressed;

    auto follow = [&](const MacroEvent& e, std::uint64_t weight) {
      auto [to, inserted] = add_state(apply(current, e));
      if (inserted) queue.push_back(to);
      r.edges.push_back({id, to, e, weight});
    };
    for (const MacroEvent& e : events) {
      if (e.kind != MacroEventKind::Probe) {
        follow(e, 1);
        continue;
      }
      for (auto& [bits, weight] : bit_classes(current, e.block)) {
        MacroEvent with_bits = e;
        with_bits.bits = bits;
        follow(with_bits, weight);
      }
    }
  }
  r.terminal.resize(r.states.size(), false);
  r.diagnostics.assign(diagnostics.begin(), diagnostics.end());
  return r;
}

SimulationRun MacroEngine::simulate(std::uint64_t rng_seed, std::size_t max_events, std::size_t bound) const {
  SimulationRun run;
  run.final_state = MacroAssembly::seeded(cs_);
  std::mt19937_64 rng(rng_seed);
  while (run.events.size() < max_events) {
    bool suppressed = false;
    std::vector<MacroEvent> events = frontier(run.final_state, bound, &suppressed);
    run.truncated = suppressed;
    if (events.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, events.size() - 1);
    MacroEvent e = events[pick(rng)];
    if (e.kind == MacroEventKind::Probe) e.bits = draw_bits(rng_seed, e.block, cs_.random_bits);
    MacroAssembly next = apply(run.final_state, e);
    run.log.push_back(describe_event(run.final_state, e, next, cs_));
    run.events.push_back(std::move(e));
    run.final_state = std::move(next);
  }
  if (run.events.size() >= max_events && !frontier(run.final_state, bound).empty()) run.truncated = true;
  return run;
}

// Representation

std::optional<TileIndex> decode_block(const BlockState& b, const CompiledSystem& cs) {
  if (b.phase < BlockPhase::Committed) return std::nullopt;
  if (!b.committed_tile || *b.committed_tile >= cs.source.size())
    throw Error(ErrorKind::RepresentationIntegrity, "committed block carries no valid tile");
  const TileType& tile = cs.source.tile(*b.committed_tile);
  if (b.phase == BlockPhase::Complete) {
    DirectionSet inputs = b.input_sides();
    for (Direction d : kDirections) {
      if (inputs.contains(d)) continue;
      if (b.output_pads[index_of(d)] != pad_of(tile, d))
        throw Error(ErrorKind::RepresentationIntegrity,
                    "output on side " + std::string(1, to_char(d)) + " is " + pad_text(b.output_pads[index_of(d)]) +
                        " but tile " + tile.name + " has " + pad_text(pad_of(tile, d)));
    }
  }
  return b.committed_tile;
}

Assembly r_star(const MacroAssembly& m, const CompiledSystem& cs) {
  Assembly a;
  for (const auto& [pos, b] : m.blocks()) {
    std::optional<TileIndex> t;
    try {
      t = decode_block(*b, cs);
    } catch (const Error& e) {
      throw Error(e.kind(), "block " + to_string(pos) + ": " + e.what());
    }
    if (t) a = a.with(pos, *t);
  }
  return a;
}

std::string materialize_edge(const BlockState& b, Direction d, const CompiledSystem& cs) {
  auto t = decode_block(b, cs);
  if (!t) throw Error(ErrorKind::RepresentationIntegrity, "block has no committed tile to materialize");
  return edge_string(cs, *t, d);
}

std::vector<MacroEvent> macro_frontier(const CompiledSystem& cs, const MacroAssembly& m) {
  return MacroEngine(cs).frontier(m);
}

MacroAssembly macro_step(const CompiledSystem& cs, const MacroAssembly& m, const MacroEvent& e,
                         std::uint64_t rng_seed) {
  return MacroEngine(cs).step(m, e, rng_seed);
}

MacroExploration macro_explore(const CompiledSystem& cs, std::size_t bound) { return MacroEngine(cs).explore(bound); }

std::string describe_event(const MacroAssembly& before, const MacroEvent& e, const MacroAssembly& after,
                           const CompiledSystem& cs) {
  const BlockState* b0 = before.at(e.block);
  const BlockState* b1 = after.at(e.block);
  std::string line = to_string(e.block) + " " + (b0 ? to_string(b0->phase) : "empty") + " -> " +
                     (b1 ? to_string(b1->phase) : "empty");
  switch (e.kind) {
    case MacroEventKind::Arrive:
      line += std::string(" pad ") + to_char(e.side) + "=" + pad_text(e.pad);
      break;
    case MacroEventKind::Probe:
      line += " bits " + b1->random_bits.str();
      break;
    case MacroEventKind::Detect:
      line += std::string(" kind ") + to_string(*b1->input_kind);
      break;
    case MacroEventKind::Commit:
      line += " address " + std::to_string(*b1->address) + " tile " + cs.source.tile(*b1->committed_tile).name;
      break;
    case MacroEventKind::Complete:
      line += " out";
      for (Direction d : kDirections)
        if (!b1->input_sides().contains(d))
          line += std::string(" ") + to_char(d) + "=" + pad_text(b1->output_pads[index_of(d)]);
      break;
  }
  return line;
}

}  // namespace tw
