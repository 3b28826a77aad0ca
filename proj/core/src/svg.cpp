#include "tileworks/svg.hpp"

#include <algorithm>
#include <sstream>

#include "tileworks/error.hpp"

namespace tw {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const Tas& tas, const Assembly& a, const SvgOptions& options) {
  if (a.empty()) throw Error(ErrorKind::InvalidTileSet, "cannot render an empty assembly");
  const int s = std::max(options.scale, 8);
  int min_x = a.cells().front().pos.x, max_x = min_x;
  int min_y = a.cells().front().pos.y, max_y = min_y;
  for (const Cell& c : a.cells()) {
    min_x = std::min(min_x, c.pos.x);
    max_x = std::max(max_x, c.pos.x);
    min_y = std::min(min_y, c.pos.y);
    max_y = std::max(max_y, c.pos.y);
  }
  const int margin = s / 4;
  const int width = (max_x - min_x + 1) * s + 2 * margin;
  const int height = (max_y - min_y + 1) * s + 2 * margin;
  const int font = std::max(6, s / 5);
  const int small = std::max(5, s / 8);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

  for (const Cell& c : a.cells()) {
    const TileType& t = tas.tile(c.tile);
    const int x0 = margin + (c.pos.x - min_x) * s;
    const int y0 = margin + (max_y - c.pos.y) * s;
    const bool is_seed = c.tile == tas.seed() && c.pos == Position{0, 0};
    os << "<g>\n";
    os << "<rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << s << "\" height=\"" << s << "\" fill=\""
       << (is_seed ? "#d9e7f5" : "#f4f4f4") << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    os << "<text x=\"" << x0 + s / 2 << "\" y=\"" << y0 + s / 2 + font / 3 << "\" font-size=\"" << font
       << "\" text-anchor=\"middle\" font-family=\"monospace\">" << escape(t.name) << "</text>\n";

    for (Direction d : kDirections) {
      const SidePad& p = t.side(d);
      if (p.is_null()) continue;
      // Edge endpoints and an inward unit vector for the doubled stroke.
      int ax = x0, ay = y0, bx = x0 + s, by = y0, nx = 0, ny = 1;
      switch (d) {
        case Direction::N: break;
        case Direction::S: ay = by = y0 + s; ny = -1; break;
        case Direction::W: bx = x0; by = y0 + s; nx = 1; ny = 0; break;
        case Direction::E: ax = bx = x0 + s; by = y0 + s; nx = -1; ny = 0; break;
      }
      const int inset = std::max(2, s / 20);
      for (int k = 0; k < p.strength; ++k) {
        int off = (k + 1) * inset;
        os << "<line x1=\"" << ax + nx * off << "\" y1=\"" << ay + ny * off << "\" x2=\"" << bx + nx * off
           << "\" y2=\"" << by + ny * off << "\" stroke=\"#333\" stroke-width=\"1\"/>\n";
      }
      if (!options.show_glues) continue;
      int lx = (ax + bx) / 2 + nx * (4 * inset + small / 2);
      int ly = (ay + by) / 2 + ny * (4 * inset + small / 2) + small / 3;
      os << "<text x=\"" << lx << "\" y=\"" << ly << "\" font-size=\"" << small
         << "\" text-anchor=\"middle\" font-family=\"monospace\" fill=\"#555\">" << escape(p.glue.label()) << ':'
         << p.strength << "</text>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace tw
