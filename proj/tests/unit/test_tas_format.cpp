#include <doctest.h>

#include "tileworks/corpus.hpp"
#include "tileworks/error.hpp"
#include "tileworks/tas_format.hpp"

using namespace tw;

namespace {

ParseError parse_error(std::string_view text) {
  try {
    parse_tas(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error for: " << text);
  return ParseError("", 0, 0);
}

}  // namespace

TEST_CASE("the elbow fixture parses") {
  TasDocument doc = load_tas_file(std::string(TILEWORKS_CORPUS_DIR) + "/elbow.tas");
  CHECK(doc.tas.size() == 4);
  CHECK(doc.tas.tile(doc.tas.seed()).name == "seed");
  CHECK(doc.tas == corpus::elbow());
  CHECK(doc.tile_locations.size() == 4);
  CHECK(doc.seed_location.line > doc.tile_locations.back().line);
}

TEST_CASE("round trip over the corpus") {
  for (const auto& entry : corpus::entries()) {
    CAPTURE(entry.name);
    Tas tas = entry.make();
    std::string text = print_tas(tas);
    TasDocument doc = parse_tas(text);
    CHECK(doc.tas == tas);
    CHECK(print_tas(doc.tas) == text);
    CHECK(print_tas(tas, "a title").rfind("# a title\n", 0) == 0);
    CHECK(parse_tas(print_tas(tas, "a title")).tas == tas);
  }
}

TEST_CASE("layout freedom") {
  std::string text =
      "# comment line\n"
      "temperature   2\n"
      "\n"
      "tile seed  E = a : 2   N=b:2 S=-:0 W=-:0   # trailing comment\n"
      "tile   tR W=a:2 N=c:1 E=-:0 S=-:0\n"
      "tile tU S=b:2 E=c:1 N=-:0 W=-:0\n"
      "tile tD W=c:1 S=c:1 N=-:0 E=-:0\n"
      "seed seed\n";
  CHECK(parse_tas(text).tas == corpus::elbow());
}

TEST_CASE("parse errors carry positions") {
  const std::string header = "temperature 2\n";
  ParseError zero = parse_error(header + "tile t N=a:0 E=-:0 S=-:0 W=-:0\nseed t\n");
  CHECK(zero.line() == 2);
  CHECK(zero.column() > 1);

  CHECK_THROWS_AS(parse_tas(""), ParseError);
  CHECK(parse_error("temperature 3\n").line() == 1);
  CHECK(parse_error(header + "tile t N=-:0 E=-:0 S=-:0 W=-:0\nseed u\n").line() == 3);
  CHECK(parse_error(header + "tile t N=-:0 E=-:0 S=-:0\nseed t\n").line() == 2);
  CHECK(parse_error(header + "tile t N=-:0 E=-:0 S=-:0 W=-:0\ntile t N=-:0 E=-:0 S=-:0 W=-:0\nseed t\n").line() == 3);
  CHECK(parse_error(header + "tile t N=-:1 E=-:0 S=-:0 W=-:0\nseed t\n").line() == 2);
  CHECK(parse_error(header + "tile t N=a:3 E=-:0 S=-:0 W=-:0\nseed t\n").line() == 2);
  CHECK(parse_error(header + "tile t N=a:1 N=a:1 S=-:0 W=-:0\nseed t\n").line() == 2);
  CHECK(parse_error(header + "tiles t\n").line() == 2);
  CHECK(parse_error(header + "tile t N=-:0 E=-:0 S=-:0 W=-:0\nseed t\nseed t\n").kind() == ErrorKind::Parse);
  try {
    load_tas_file("/nonexistent/file.tas");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
  }
}
