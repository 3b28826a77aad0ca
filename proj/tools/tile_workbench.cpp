// tile-workbench: explore, check, compile and simulate temperature-2 tile
// assembly systems.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tileworks/atam.hpp"
#include "tileworks/corpus.hpp"
#include "tileworks/encoder.hpp"
#include "tileworks/error.hpp"
#include "tileworks/local_consistency.hpp"
#include "tileworks/lookup.hpp"
#include "tileworks/macro.hpp"
#include "tileworks/svg.hpp"
#include "tileworks/tas_format.hpp"
#include "tileworks/verifier.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

// FILE may also be "corpus:NAME" for a built-in system.
tw::Tas load(const std::string& source) {
  const std::string prefix = "corpus:";
  if (source.rfind(prefix, 0) == 0) {
    const tw::corpus::Entry* e = tw::corpus::find(source.substr(prefix.size()));
    if (!e) throw tw::ParseError("unknown corpus system '" + source.substr(prefix.size()) + "'", 1, 1);
    return e->make();
  }
  return tw::load_tas_file(source).tas;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw tw::Error(tw::ErrorKind::Parse, "cannot write '" + path + "'");
  out << text;
}

void print_witness(const tw::Tas& tas, const tw::Witness& w) {
  std::cout << "condition: " << w.condition << '\n';
  std::cout << "reason: " << w.explanation << '\n';
  if (w.assembly) std::cout << "assembly: " << tw::describe(tas, *w.assembly) << '\n';
  if (w.other) std::cout << "other: " << tw::describe(tas, *w.other) << '\n';
  if (w.sequence) {
    std::cout << "sequence:";
    for (const tw::Placement& p : w.sequence->steps)
      std::cout << ' ' << tas.tile(p.tile).name << '@' << tw::to_string(p.pos);
    std::cout << '\n';
  }
}

tw::BitString parse_bits(const std::string& text, std::size_t width) {
  if (text.empty() || text.find_first_not_of("01") != std::string::npos)
    throw tw::ParseError("--bits must be a binary string", 1, 1);
  tw::BitString b(text);
  if (b.size() > width)
    throw tw::ParseError("--bits has " + std::to_string(b.size()) + " bits, table uses " + std::to_string(width), 1,
                         1);
  return tw::BitString(std::string(width - b.size(), '0') + b.str());
}

tw::CompileParams compile_params(std::optional<std::size_t> cprime, std::optional<std::size_t> bits, bool force) {
  tw::CompileParams p;
  p.cprime = cprime;
  p.random_bits = bits;
  p.force = force;
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explore, check, compile and simulate temperature-2 tile assembly systems"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string file;
  std::size_t bound = 25;
  std::uint64_t seed = 1;
  std::size_t max_steps = 1000;
  std::string svg_path;
  int scale = 60;

  auto* run = app.add_subcommand("run", "Sample one assembly sequence");
  run->add_option("file", file, "Tile set file or corpus:NAME")->required();
  run->add_option("--seed", seed, "Random seed");
  run->add_option("--max-steps", max_steps, "Stop after this many attachments");
  run->add_option("--svg", svg_path, "Write the final assembly as SVG");

  auto* exp = app.add_subcommand("explore", "Enumerate producible assemblies up to a size bound");
  exp->add_option("file", file, "Tile set file or corpus:NAME")->required();
  exp->add_option("--bound", bound, "Maximum assembly size");

  auto* lc = app.add_subcommand("check-lc", "Check local consistency up to a size bound");
  lc->add_option("file", file, "Tile set file or corpus:NAME")->required();
  lc->add_option("--bound", bound, "Maximum assembly size");

  std::string out_path;
  std::optional<std::size_t> cprime;
  std::optional<std::size_t> random_bits;
  bool force = false;
  auto* comp = app.add_subcommand("compile", "Build the lookup table and block parameters");
  comp->add_option("file", file, "Tile set file or corpus:NAME")->required();
  comp->add_option("--out", out_path, "Write the compiled artifact here instead of stdout");
  comp->add_option("--cprime", cprime, "Spacer length between edge fields");
  comp->add_option("--bits", random_bits, "Random bits per block");
  comp->add_flag("--force", force, "Skip the local consistency check");

  std::uint64_t address = 0;
  std::string bits_text = "0";
  bool show_trace = false;
  auto* look = app.add_subcommand("lookup", "Run one table lookup");
  look->add_option("file", file, "Tile set file or corpus:NAME")->required();
  look->add_option("--addr", address, "Address (entry index)")->required();
  look->add_option("--bits", bits_text, "Random bits, most significant first");
  look->add_flag("--trace", show_trace, "Print the column-by-column sweep");

  std::size_t max_events = 100000;
  auto* sim = app.add_subcommand("simulate", "Run the block simulation and stream its events");
  sim->add_option("file", file, "Tile set file or corpus:NAME")->required();
  sim->add_option("--bound", bound, "Maximum number of started blocks");
  sim->add_option("--seed", seed, "Random seed");
  sim->add_option("--max-events", max_events, "Stop after this many events");
  sim->add_option("--svg", svg_path, "Write the decoded assembly as SVG");

  std::string report_path;
  std::size_t verify_bound = 6;
  auto* ver = app.add_subcommand("verify", "Check the three simulation conditions");
  ver->add_option("file", file, "Tile set file or corpus:NAME")->required();
  ver->add_option("--bound", verify_bound, "Bound in tiles and started blocks");
  ver->add_option("--report", report_path, "Also write the report to this file");

  auto* ren = app.add_subcommand("render", "Grow an assembly and write it as SVG");
  ren->add_option("file", file, "Tile set file or corpus:NAME")->required();
  ren->add_option("--svg", svg_path, "Output file")->required();
  ren->add_option("--seed", seed, "Random seed");
  ren->add_option("--max-steps", max_steps, "Stop after this many attachments");
  ren->add_option("--scale", scale, "Pixels per cell");

  std::string corpus_name;
  auto* cor = app.add_subcommand("corpus", "Print a built-in system in file format");
  cor->add_option("name", corpus_name, "System name; omit to list them");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*cor) {
      if (corpus_name.empty()) {
        for (const auto& e : tw::corpus::entries()) std::cout << e.name << '\n';
        return kOk;
      }
      const tw::corpus::Entry* e = tw::corpus::find(corpus_name);
      if (!e) {
        std::cerr << "unknown corpus system '" << corpus_name << "'\n";
        return kUsage;
      }
      std::cout << tw::print_tas(e->make());
      return kOk;
    }

    tw::Tas tas = load(file);

    if (*run || *ren) {
      tw::AssemblySequence seq = tw::sample_sequence(tas, seed, max_steps);
      tw::Assembly a = tw::replay(tas, seq);
      if (*run) {
        for (const tw::Placement& p : seq.steps) std::cout << tas.tile(p.tile).name << ' ' << tw::to_string(p.pos) << '\n';
        std::cout << "size " << a.size() << (tw::is_terminal(tas, a) ? " terminal" : " growing") << '\n';
      }
      if (!svg_path.empty()) write_file(svg_path, tw::render_svg(tas, a, {scale, true}));
      return kOk;
    }

    if (*exp) {
      tw::ExplorationResult r = tw::explore(tas, bound);
      std::cout << "assemblies " << r.assemblies.size() << '\n';
      std::cout << "transitions " << r.edges.size() << '\n';
      std::cout << "truncated " << (r.truncated ? "yes" : "no") << '\n';
      auto terminals = r.terminals();
      std::cout << "terminal " << terminals.size() << '\n';
      for (std::size_t id : terminals) std::cout << "  " << tw::describe(tas, r.assemblies[id]) << '\n';
      return kOk;
    }

    if (*lc) {
      tw::LcReport r = tw::verify_locally_consistent(tas, bound);
      std::cout << r.coverage_note() << '\n';
      std::cout << "assemblies " << r.assemblies << " placements " << r.placements << '\n';
      if (!r.verdict.passed) {
        print_witness(tas, *r.verdict.witness);
        return kCheckFailed;
      }
      return kOk;
    }

    if (*comp) {
      tw::CompiledSystem cs = tw::compile(tas, compile_params(cprime, random_bits, force));
      std::string text = tw::serialize(cs);
      if (out_path.empty()) std::cout << text;
      else write_file(out_path, text);
      return kOk;
    }

    if (*look) {
      tw::CompiledSystem cs = tw::compile(tas);
      tw::BitString b = parse_bits(bits_text, cs.random_bits);
      tw::TraceResult r = tw::lookup(cs, address, b, {show_trace});
      std::cout << "address " << address << " bits " << b.str() << '\n';
      std::cout << "n " << r.trace.n << " m " << r.trace.m << " p " << r.trace.p << '\n';
      std::cout << "selected " << r.outcome.selected_index;
      if (r.outcome.selected_index < r.outcome.tile_candidates.size())
        std::cout << ' ' << tas.tile(r.outcome.tile_candidates[r.outcome.selected_index]).name;
      std::cout << '\n' << "outputs " << tw::to_string(r.outcome.sub_entry) << '\n';
      if (show_trace) std::cout << tw::render_trace(r.trace);
      return kOk;
    }

    if (*sim) {
      tw::CompiledSystem cs = tw::compile(tas);
      tw::MacroEngine engine(cs);
      tw::SimulationRun r = engine.simulate(seed, max_events, bound);
      for (const std::string& line : r.log) std::cout << line << '\n';
      tw::Assembly a = tw::r_star(r.final_state, cs);
      std::cout << "decoded " << tw::describe(tas, a) << '\n';
      for (const std::string& d : engine.stuck_blocks(r.final_state)) std::cout << "stuck " << d << '\n';
      if (r.truncated) std::cout << "truncated\n";
      if (!svg_path.empty()) write_file(svg_path, tw::render_svg(tas, a, {scale, true}));
      return kOk;
    }

    if (*ver) {
      tw::CompiledSystem cs = tw::compile(tas);
      tw::SimulationReport r = tw::full_report(cs, verify_bound);
      std::string text = tw::to_text(r, tas);
      std::cout << text;
      if (!report_path.empty()) write_file(report_path, text);
      return r.passed() ? kOk : kCheckFailed;
    }
  } catch (const tw::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const tw::Error& e) {
    if (e.kind() == tw::ErrorKind::Parse) {
      std::cerr << "error: " << e.what() << '\n';
      return kUsage;
    }
    std::cerr << "error (" << tw::to_string(e.kind()) << "): " << e.what() << '\n';
    if (auto* le = dynamic_cast<const tw::LookupError*>(&e))
      std::cerr << tw::render_trace(le->trace());
    return kCheckFailed;
  }
  return kUsage;
}
