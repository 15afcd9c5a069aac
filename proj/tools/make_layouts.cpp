// Regenerates the bundled layout files from the lemma-system derivation:
// the unique nontrivial space-efficient 4-mosaic layout, the unique
// 5-mosaic layout, and the five 6-mosaic layouts. The derivation yields one
// additional 24-tile grid whose center connection points are absent; its
// fills admit no space-efficient prime knot (every knot fill has at most
// seven crossings, and those knots need at most 22 tiles), so it is not
// written. make_layouts verifies that claim before writing.

#include <fstream>
#include <iostream>

#include "knotile/enumerate.hpp"
#include "knotile/layout.hpp"

using namespace knotile;

namespace {

bool center_connected(const SignatureGrid& g) {
  // the four connection points on the tile edges meeting the board center
  int h = g.n / 2 - 1;
  EdgeMask R = edge_bit(EdgeSide::Right), B = edge_bit(EdgeSide::Bottom);
  return (g.at(h, h) & R) && (g.at(h + 1, h) & R) && (g.at(h, h) & B) &&
         (g.at(h, h + 1) & B);
}

void write_layout(const std::string& path, const Layout& l) {
  std::ofstream out(path);
  out << "# " << l.name << "\n" << l.serialize();
  std::cout << "wrote " << path << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "data/layouts";

  auto l4 = derive_layouts(4);
  if (l4.size() != 1 || l4[0].tile_count() != 12) {
    std::cerr << "unexpected 4-mosaic layout set\n";
    return 1;
  }
  write_layout(dir + "/fig7.layout", l4[0].to_layout("fig7"));

  auto l5 = derive_layouts(5);
  if (l5.size() != 1 || l5[0].tile_count() != 17) {
    std::cerr << "unexpected 5-mosaic layout set\n";
    return 1;
  }
  write_layout(dir + "/fig9.layout", l5[0].to_layout("fig9"));

  auto l6 = derive_layouts(6);
  std::vector<SignatureGrid> keep;
  for (const SignatureGrid& g : l6) {
    if (g.tile_count() == 24 && !center_connected(g)) {
      // the excluded grid: no single-component reduced split-free fill may
      // have eight or more crossings
      SearchConstraints c;
      c.n = g.n;
      c.min_crossings = 8;
      c.require_single_component = true;
      c.require_reduced = true;
      c.forbid_split_trivial = true;
      uint64_t knots = fill_layout(g.to_layout("excluded"), c, {});
      if (knots != 0) {
        std::cerr << "excluded 24-tile grid admits an 8-crossing knot fill\n";
        return 1;
      }
      std::cout << "dropped the center-disconnected 24-tile grid ("
                << "no >=8-crossing knot fills)\n";
      continue;
    }
    keep.push_back(g);
  }
  if (keep.size() != 5) {
    std::cerr << "expected five 6-mosaic layouts, got " << keep.size() << "\n";
    return 1;
  }
  int n22 = 0;
  for (const SignatureGrid& g : keep) {
    std::string name;
    if (g.tile_count() == 22) name = (n22++ == 0) ? "fig11_22a" : "fig11_22b";
    else name = "fig11_" + std::to_string(g.tile_count());
    write_layout(dir + "/" + name + ".layout", g.to_layout(name));
  }
  return 0;
}
