#include "tileworks/lookup.hpp"

#include <array>
#include <sstream>

namespace tw {

const char* to_string(SweepPhase p) {
  switch (p) {
    case SweepPhase::Seek: return "seek";
    case SweepPhase::CountSub: return "count-sub";
    case SweepPhase::CountRest: return "count-rest";
    case SweepPhase::Middle: return "middle";
    case SweepPhase::Countdown: return "countdown";
    case SweepPhase::Select: return "select";
    case SweepPhase::Extract: return "extract";
    case SweepPhase::Propagate: return "propagate";
  }
  return "?";
}

namespace {

// Field order of a sub-entry as written in w.
constexpr std::array<Direction, 4> kForwardFields{Direction::N, Direction::E, Direction::S, Direction::W};
// Field order of the same sub-entry read inside the reversed copy of w.
constexpr std::array<Direction, 4> kMirroredFields{Direction::W, Direction::S, Direction::E, Direction::N};

Pad decode_field(const std::string& bits, Direction expected, const GlueOrdering& ord) {
  Pad p;
  try {
    p = decode_pad(BitString(bits), ord);
  } catch (const Error& e) {
    throw Error(ErrorKind::EntryFormat, "undecodable field '" + bits + "': " + e.what());
  }
  if (p.direction != expected)
    throw Error(ErrorKind::EntryFormat, "field for side " + std::string(1, to_char(expected)) +
                                            " encodes direction " + to_char(p.direction));
  return p;
}

}  // namespace

std::vector<SubEntry> parse_entry(std::string_view entry, const GlueOrdering& ord) {
  if (entry.empty() || entry.front() != '#')
    throw Error(ErrorKind::EntryFormat, "entry must start with '#'");
  std::vector<SubEntry> out;
  std::string_view body = entry.substr(1);
  if (body.empty()) return out;

  std::size_t start = 0;
  while (true) {
    std::size_t end = body.find(';', start);
    std::string_view sub = body.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    std::vector<std::string> fields(1);
    for (char c : sub) {
      if (c == ',') fields.emplace_back();
      else if (c == '0' || c == '1') fields.back() += c;
      else throw Error(ErrorKind::EntryFormat, "unexpected symbol '" + std::string(1, c) + "' in sub-entry");
    }
    if (fields.size() != 4)
      throw Error(ErrorKind::EntryFormat, "sub-entry '" + std::string(sub) + "' has " +
                                              std::to_string(fields.size() - 1) + " commas, expected 3");
    SubEntry s;
    for (std::size_t i = 0; i < 4; ++i) {
      if (fields[i].empty()) continue;
      std::string forward(fields[i].rbegin(), fields[i].rend());
      s.at(kForwardFields[i]) = decode_field(forward, kForwardFields[i], ord);
    }
    out.push_back(std::move(s));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

SubEntry direct_lookup(std::string_view w, const GlueOrdering& ord, std::uint64_t address, std::size_t p) {
  std::uint64_t index = 0;
  std::size_t pos = w.find('#');
  while (pos != std::string_view::npos && index < address) {
    pos = w.find('#', pos + 1);
    ++index;
  }
  if (pos == std::string_view::npos)
    throw Error(ErrorKind::AddressRange, "address " + std::to_string(address) + " is beyond the last entry");
  std::size_t end = w.find('#', pos + 1);
  std::string_view entry = w.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
  std::vector<SubEntry> subs = parse_entry(entry, ord);
  if (subs.empty()) throw Error(ErrorKind::EmptyEntry, "entry " + std::to_string(address) + " is empty");
  if (p >= subs.size())
    throw Error(ErrorKind::Selection, "sub-entry " + std::to_string(p) + " requested from an entry of " +
                                          std::to_string(subs.size()));
  return subs[p];
}

std::size_t mod_select(const BitString& b, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::Selection, "cannot select among zero sub-entries");
  return static_cast<std::size_t>(b.value() % n);
}

TraceResult trace_lookup(const LookupTable& table, const GlueOrdering& ord, std::uint64_t address,
                         const BitString& b, const TraceOptions& options) {
  const std::string& sym = table.symbols();
  if (sym.empty() || sym.front() != '>') throw Error(ErrorKind::TableFormat, "table must begin with '>'");

  PhaseTrace trace;
  trace.b = b.value();
  SweepPhase phase = SweepPhase::Seek;
  std::uint64_t counter = 0;
  std::uint64_t countdown = 0;
  std::size_t middle_seen = 0;
  std::size_t select_left = 0;
  std::vector<std::string> fields;
  SubEntry selected;
  bool finished = false;

  auto fail = [&](ErrorKind kind, const std::string& what) -> LookupError {
    return LookupError(kind, what, trace);
  };
  auto record = [&](std::size_t col, char s) {
    if (!options.record_columns) return;
    std::uint64_t shown = phase >= SweepPhase::Middle ? countdown : counter;
    std::size_t left = phase == SweepPhase::Select ? select_left : trace.p;
    trace.columns.push_back({col, s, phase, shown, trace.n, trace.m, left});
  };
  auto finish_fields = [&] {
    if (fields.size() != 4)
      throw fail(ErrorKind::EntryFormat, "selected sub-entry has " + std::to_string(fields.size()) + " fields");
    for (std::size_t i = 0; i < 4; ++i)
      if (!fields[i].empty()) selected.at(kMirroredFields[i]) = decode_field(fields[i], kMirroredFields[i], ord);
  };

  record(0, sym[0]);
  for (std::size_t col = 1; col < sym.size(); ++col) {
    char s = sym[col];
    if ((s == kBlank) != (col % 2 == 1))
      throw fail(ErrorKind::TableFormat, "blank misplaced at column " + std::to_string(col));
    if (s == kBlank) {
      record(col, s);
      continue;
    }
    if (finished) throw fail(ErrorKind::TableFormat, "symbols after the closing '<'");

    switch (phase) {
      case SweepPhase::Seek:
        if (s == '#') {
          if (counter == address) {
            phase = SweepPhase::CountSub;
            trace.counter_at_match = counter;
            trace.match_column = col;
          } else {
            ++counter;
          }
        } else if (s == '<') {
          throw fail(ErrorKind::AddressRange, "address " + std::to_string(address) + " is beyond the last entry (" +
                                                  std::to_string(counter) + " entries)");
        }
        break;

      case SweepPhase::CountSub:
        if (s == '#' || s == '<') {
          if (trace.n == 0) {
            record(col, s);
            throw fail(ErrorKind::EmptyEntry, "entry " + std::to_string(address) + " is empty");
          }
          if (s == '#') {
            trace.m = 1;
            phase = SweepPhase::CountRest;
          } else {
            trace.m = 0;
            phase = SweepPhase::Middle;
            middle_seen = 1;
          }
        } else if (s == ';') {
          ++trace.n;
        } else if (trace.n == 0) {
          trace.n = 1;
        }
        break;

      case SweepPhase::CountRest:
        if (s == '#') {
          ++trace.m;
        } else if (s == '<') {
          phase = SweepPhase::Middle;
          middle_seen = 1;
        }
        break;

      case SweepPhase::Middle:
        if (s != kTableMiddle[middle_seen])
          throw fail(ErrorKind::TableFormat, "malformed middle marker at column " + std::to_string(col));
        if (++middle_seen == kTableMiddle.size()) {
          trace.p = mod_select(b, trace.n);
          trace.selected_index = trace.p;
          countdown = trace.m;
          select_left = trace.p;
          phase = countdown == 0 ? SweepPhase::Select : SweepPhase::Countdown;
          if (countdown == 0) trace.countdown_end_column = col;
        }
        break;

      case SweepPhase::Countdown:
        if (s == '#') {
          if (--countdown == 0) {
            phase = SweepPhase::Select;
            trace.countdown_end_column = col;
          }
        } else if (s == '<') {
          throw fail(ErrorKind::TableFormat, "mirrored copy ended before the countdown reached 0");
        }
        break;

      case SweepPhase::Select:
        if (select_left > 0) {
          if (s == ';') --select_left;
          else if (s == '#' || s == '<') throw fail(ErrorKind::TableFormat, "selection ran past the mirrored entry");
          break;
        }
        phase = SweepPhase::Extract;
        trace.selection_column = col;
        fields.assign(1, std::string());
        [[fallthrough]];

      case SweepPhase::Extract:
        if (s == ';' || s == '#') {
          finish_fields();
          phase = SweepPhase::Propagate;
        } else if (s == ',') {
          fields.emplace_back();
        } else if (s == '0' || s == '1') {
          fields.back() += s;
        } else {
          throw fail(ErrorKind::TableFormat, "unexpected symbol inside the selected sub-entry");
        }
        break;

      case SweepPhase::Propagate:
        if (s == '<' && col == sym.size() - 1) finished = true;
        break;
    }
    record(col, s);
  }
  if (!finished) throw fail(ErrorKind::TableFormat, "sweep ended in phase " + std::string(to_string(phase)));

  TraceResult r;
  r.outcome.sub_entry = selected;
  r.outcome.selected_index = unmirror(trace.p, trace.n);
  r.trace = std::move(trace);
  return r;
}

TraceResult lookup(const CompiledSystem& cs, std::uint64_t address, const BitString& b,
                   const TraceOptions& options) {
  TraceResult r = trace_lookup(cs.table, cs.glues, address, b, options);
  if (const AddressEntry* e = cs.find_address(address)) r.outcome.tile_candidates = e->tiles;
  return r;
}

std::string render_trace(const PhaseTrace& trace) {
  std::ostringstream os;
  os << "match-counter " << trace.counter_at_match << " n " << trace.n << " m " << trace.m << " b " << trace.b
     << " p " << trace.p << '\n';
  for (const ColumnRecord& c : trace.columns)
    os << c.column << ' ' << c.symbol << ' ' << to_string(c.phase) << " counter=" << c.counter << " n=" << c.n
       << " m=" << c.m << " p=" << c.p << '\n';
  return os.str();
}

}  // namespace tw
