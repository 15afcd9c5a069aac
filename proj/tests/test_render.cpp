#include <doctest.h>

#include "knotile/render.hpp"
#include "knotile/tiles.hpp"

using namespace knotile;

namespace {

int count_occurrences(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (size_t p = hay.find(needle); p != std::string::npos;
       p = hay.find(needle, p + needle.size()))
    ++n;
  return n;
}

int strand_count(const Mosaic& m) {
  int n = 0;
  for (int r = 0; r < m.size(); ++r)
    for (int c = 0; c < m.size(); ++c)
      n += int(tile_strands(m.at(r, c)).size());
  return n;
}

}  // namespace

TEST_CASE("ascii rendering dimensions") {
  Mosaic m = Mosaic::parse_inline("21/34");
  std::string out = render_ascii(m);
  int lines = count_occurrences(out, "\n");
  CHECK(lines == 6);  // three text rows per tile row
}

TEST_CASE("svg path count equals strand count") {
  for (const char* text : {"21/34", "210/371/034", "0210/2971/3874/0340"}) {
    Mosaic m = Mosaic::parse_inline(text);
    std::string svg = render_svg(m);
    CHECK(count_occurrences(svg, "<path") == strand_count(m));
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
  }
}

TEST_CASE("under-strand gap present in crossing tiles") {
  Mosaic m(1);
  m.set(0, 0, TileKind::CrossA);
  // not suitably connected, but rendering is purely local
  std::string svg = render_svg(m);
  // the under strand is one path with two subpaths
  CHECK(count_occurrences(svg, "<path") == 2);
  CHECK(count_occurrences(svg, "M0.5,0.65") == 1);
}
