#include "tileworks/tas_format.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "tileworks/error.hpp"

namespace tw {

namespace {

struct Token {
  std::string text;
  int column = 0;
};

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'' || c == '-';
}

bool joins(char c) { return c == '=' || c == ':'; }

// Whitespace-separated tokens; "N = a : 2" is glued back into "N=a:2".
std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> raw;
  for (std::size_t i = 0; i < line.size();) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    raw.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
  }
  std::vector<Token> out;
  for (Token& t : raw) {
    if (!out.empty() && (joins(out.back().text.back()) || joins(t.text.front()))) out.back().text += t.text;
    else out.push_back(std::move(t));
  }
  return out;
}

void check_name(const Token& t, int line, const char* what) {
  for (char c : t.text)
    if (!name_char(c)) throw ParseError(std::string("invalid character '") + c + "' in " + what, line, t.column);
  if (t.text == "-") throw ParseError(std::string("'-' is not a valid ") + what, line, t.column);
}

SidePad parse_side(const Token& t, std::string_view rest, int line) {
  std::size_t colon = rest.find(':');
  if (colon == std::string_view::npos) throw ParseError("expected GLUE:STRENGTH", line, t.column);
  std::string glue(rest.substr(0, colon));
  std::string strength(rest.substr(colon + 1));
  if (glue.empty()) throw ParseError("missing glue label", line, t.column);
  if (strength.size() != 1 || strength[0] < '0' || strength[0] > '2')
    throw ParseError("strength must be 0, 1 or 2", line, t.column);
  for (char c : glue)
    if (!name_char(c)) throw ParseError(std::string("invalid character '") + c + "' in glue", line, t.column);
  int s = strength[0] - '0';
  if (glue == "-" && s != 0) throw ParseError("the null glue must have strength 0", line, t.column);
  if (glue != "-" && s == 0) throw ParseError("glue '" + glue + "' needs strength 1 or 2", line, t.column);
  return glue == "-" ? SidePad::none() : SidePad::make(Glue(glue), s);
}

}  // namespace

TasDocument parse_tas(std::string_view text) {
  std::vector<TileType> tiles;
  std::vector<SourceLocation> locations;
  std::map<std::string, TileIndex> by_name;
  std::optional<std::pair<Token, int>> seed;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<Token> tokens = tokenize(line);
    if (tokens.empty()) continue;

    const std::string& keyword = tokens[0].text;
    if (keyword == "temperature") {
      if (tokens.size() != 2) throw ParseError("expected 'temperature 2'", line_no, tokens[0].column);
      if (tokens[1].text != "2")
        throw ParseError("only temperature 2 is supported, got " + tokens[1].text, line_no, tokens[1].column);
    } else if (keyword == "tile") {
      if (tokens.size() < 2) throw ParseError("missing tile name", line_no, tokens[0].column);
      check_name(tokens[1], line_no, "tile name");
      if (by_name.count(tokens[1].text))
        throw ParseError("duplicate tile name '" + tokens[1].text + "'", line_no, tokens[1].column);
      TileType tile;
      tile.name = tokens[1].text;
      std::array<bool, 4> seen{};
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        const Token& t = tokens[i];
        auto d = t.text.size() >= 2 && t.text[1] == '=' ? direction_from_char(t.text[0]) : std::nullopt;
        if (!d) throw ParseError("expected SIDE=GLUE:STRENGTH with SIDE in N, E, S, W", line_no, t.column);
        if (seen[index_of(*d)])
          throw ParseError(std::string("side ") + to_char(*d) + " given twice", line_no, t.column);
        seen[index_of(*d)] = true;
        tile.side(*d) = parse_side(t, std::string_view(t.text).substr(2), line_no);
      }
      for (Direction d : kDirections)
        if (!seen[index_of(d)])
          throw ParseError(std::string("tile '") + tile.name + "' is missing side " + to_char(d), line_no,
                           tokens[0].column);
      by_name.emplace(tile.name, static_cast<TileIndex>(tiles.size()));
      tiles.push_back(std::move(tile));
      locations.push_back({line_no, tokens[0].column});
    } else if (keyword == "seed") {
      if (tokens.size() != 2) throw ParseError("expected 'seed NAME'", line_no, tokens[0].column);
      if (seed) throw ParseError("seed given twice", line_no, tokens[0].column);
      seed.emplace(tokens[1], line_no);
    } else {
      throw ParseError("unknown keyword '" + keyword + "'", line_no, tokens[0].column);
    }
  }

  if (!seed) throw ParseError("no seed declared", line_no, 1);
  auto it = by_name.find(seed->first.text);
  if (it == by_name.end())
    throw ParseError("unknown seed tile '" + seed->first.text + "'", seed->second, seed->first.column);
  return TasDocument{Tas(std::move(tiles), it->second), std::move(locations),
                     {seed->second, seed->first.column}};
}

std::string print_tas(const Tas& tas, std::string_view title) {
  std::ostringstream os;
  if (!title.empty()) os << "# " << title << '\n';
  os << "temperature 2\n";
  for (const TileType& t : tas.tiles()) {
    os << "tile " << t.name;
    for (Direction d : kDirections) {
      const SidePad& s = t.side(d);
      os << ' ' << to_char(d) << '=' << (s.is_null() ? std::string("-") : s.glue.label()) << ':' << s.strength;
    }
    os << '\n';
  }
  os << "seed " << tas.tile(tas.seed()).name << '\n';
  return os.str();
}

TasDocument load_tas_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_tas(buf.str());
}

}  // namespace tw
