#include "knotile/render.hpp"

#include <array>
#include <sstream>

namespace knotile {

namespace {

using Cell = std::array<std::array<const char*, 3>, 3>;

const Cell& ascii_cell(TileKind k) {
  static const Cell blank = {{{" ", " ", " "}, {" ", " ", " "}, {" ", " ", " "}}};
  static const Cell abl = {{{" ", " ", " "}, {"─", "╮", " "}, {" ", "│", " "}}};
  static const Cell abr = {{{" ", " ", " "}, {" ", "╭", "─"}, {" ", "│", " "}}};
  static const Cell atr = {{{" ", "│", " "}, {" ", "╰", "─"}, {" ", " ", " "}}};
  static const Cell atl = {{{" ", "│", " "}, {"─", "╯", " "}, {" ", " ", " "}}};
  static const Cell segh = {{{" ", " ", " "}, {"─", "─", "─"}, {" ", " ", " "}}};
  static const Cell segv = {{{" ", "│", " "}, {" ", "│", " "}, {" ", "│", " "}}};
  static const Cell da = {{{" ", "│", " "}, {"─", "╯", " "}, {" ", "╭", "─"}}};
  static const Cell db = {{{" ", "╰", "─"}, {"─", "╮", " "}, {" ", "│", " "}}};
  static const Cell ca = {{{" ", "│", " "}, {"─", "─", "─"}, {" ", "│", " "}}};
  static const Cell cb = {{{" ", "│", " "}, {"╴", "│", "╶"}, {" ", "│", " "}}};
  switch (k) {
    case TileKind::Blank: return blank;
    case TileKind::ArcBL: return abl;
    case TileKind::ArcBR: return abr;
    case TileKind::ArcTR: return atr;
    case TileKind::ArcTL: return atl;
    case TileKind::SegH: return segh;
    case TileKind::SegV: return segv;
    case TileKind::DoubleArcA: return da;
    case TileKind::DoubleArcB: return db;
    case TileKind::CrossA: return ca;
    case TileKind::CrossB: return cb;
  }
  return blank;
}

std::string fmt(double v) {
  std::ostringstream ss;
  ss << v;
  return ss.str();
}

// quarter-circle centered at the corner the two edges share
std::string arc_path(double x, double y, EdgeSide a, EdgeSide b) {
  EdgeMask m = EdgeMask(edge_bit(a) | edge_bit(b));
  constexpr EdgeMask T = edge_bit(EdgeSide::Top), R = edge_bit(EdgeSide::Right),
                     B = edge_bit(EdgeSide::Bottom), L = edge_bit(EdgeSide::Left);
  if (m == (B | L))
    return "M" + fmt(x) + "," + fmt(y + .5) + " A.5,.5 0 0 1 " + fmt(x + .5) +
           "," + fmt(y + 1);
  if (m == (B | R))
    return "M" + fmt(x + 1) + "," + fmt(y + .5) + " A.5,.5 0 0 0 " +
           fmt(x + .5) + "," + fmt(y + 1);
  if (m == (T | R))
    return "M" + fmt(x + .5) + "," + fmt(y) + " A.5,.5 0 0 0 " + fmt(x + 1) +
           "," + fmt(y + .5);
  // T|L
  return "M" + fmt(x + .5) + "," + fmt(y) + " A.5,.5 0 0 1 " + fmt(x) + "," +
         fmt(y + .5);
}

std::string seg_path(double x, double y, bool horizontal) {
  if (horizontal)
    return "M" + fmt(x) + "," + fmt(y + .5) + " L" + fmt(x + 1) + "," + fmt(y + .5);
  return "M" + fmt(x + .5) + "," + fmt(y) + " L" + fmt(x + .5) + "," + fmt(y + 1);
}

std::string broken_path(double x, double y, bool horizontal) {
  if (horizontal)
    return "M" + fmt(x) + "," + fmt(y + .5) + " L" + fmt(x + .35) + "," +
           fmt(y + .5) + " M" + fmt(x + .65) + "," + fmt(y + .5) + " L" +
           fmt(x + 1) + "," + fmt(y + .5);
  return "M" + fmt(x + .5) + "," + fmt(y) + " L" + fmt(x + .5) + "," +
         fmt(y + .35) + " M" + fmt(x + .5) + "," + fmt(y + .65) + " L" +
         fmt(x + .5) + "," + fmt(y + 1);
}

}  // namespace

std::string render_ascii(const Mosaic& m) {
  const int n = m.size();
  std::string out;
  for (int r = 0; r < n; ++r)
    for (int sub = 0; sub < 3; ++sub) {
      for (int c = 0; c < n; ++c) {
        const Cell& cell = ascii_cell(m.at(r, c));
        for (int k = 0; k < 3; ++k) out += cell[size_t(sub)][size_t(k)];
      }
      out += '\n';
    }
  return out;
}

std::string render_svg(const Mosaic& m) {
  const int n = m.size();
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-0.1 -0.1 "
      << n + 0.2 << " " << n + 0.2 << "\" width=\"" << 48 * n << "\" height=\""
      << 48 * n << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << n << "\" height=\"" << n
      << "\" fill=\"white\" stroke=\"#ccc\" stroke-width=\"0.02\"/>\n";
  out << "<g fill=\"none\" stroke=\"black\" stroke-width=\"0.09\" "
         "stroke-linecap=\"round\">\n";
  using E = EdgeSide;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      double x = c, y = r;
      auto path = [&](const std::string& d) {
        out << "<path d=\"" << d << "\"/>\n";
      };
      switch (m.at(r, c)) {
        case TileKind::Blank: break;
        case TileKind::ArcBL: path(arc_path(x, y, E::Bottom, E::Left)); break;
        case TileKind::ArcBR: path(arc_path(x, y, E::Bottom, E::Right)); break;
        case TileKind::ArcTR: path(arc_path(x, y, E::Top, E::Right)); break;
        case TileKind::ArcTL: path(arc_path(x, y, E::Top, E::Left)); break;
        case TileKind::SegH: path(seg_path(x, y, true)); break;
        case TileKind::SegV: path(seg_path(x, y, false)); break;
        case TileKind::DoubleArcA:
          path(arc_path(x, y, E::Top, E::Left));
          path(arc_path(x, y, E::Bottom, E::Right));
          break;
        case TileKind::DoubleArcB:
          path(arc_path(x, y, E::Bottom, E::Left));
          path(arc_path(x, y, E::Top, E::Right));
          break;
        case TileKind::CrossA:
          path(seg_path(x, y, true));
          path(broken_path(x, y, false));
          break;
        case TileKind::CrossB:
          path(seg_path(x, y, false));
          path(broken_path(x, y, true));
          break;
      }
    }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace knotile
