#pragma once
// ASCII and SVG renderings of mosaics.

#include <string>

#include "knotile/tiles.hpp"

namespace knotile {

// 3x3 box-drawing cell per tile; the under-strand is broken at the crossing
std::string render_ascii(const Mosaic& m);

// one <path> per strand; under-strands keep a 15%-of-tile gap on each side
// of the over-strand
std::string render_svg(const Mosaic& m);

}  // namespace knotile
