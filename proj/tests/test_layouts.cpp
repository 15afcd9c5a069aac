#include <doctest.h>

#include <set>

#include "knotile/invariants.hpp"
#include "knotile/layout.hpp"

using namespace knotile;

TEST_CASE("layout text round trip") {
  Layout l = resolve_layout("fig9");
  CHECK(l.n == 5);
  Layout back = Layout::parse(l.serialize(), l.name);
  CHECK(back.n == l.n);
  for (int r = 0; r < l.n; ++r)
    for (int c = 0; c < l.n; ++c) {
      CHECK(back.at(r, c).allowed == l.at(r, c).allowed);
      CHECK(back.at(r, c).required == l.at(r, c).required);
    }
  CHECK_THROWS(Layout::parse("0: 0:\n0:\n"));
  CHECK_THROWS(Layout::parse("05:T 0:\n0: 0:\n"));  // blank misses the edge
}

TEST_CASE("fill of an all-blank layout") {
  Layout l = Layout::parse("0: 0:\n0: 0:\n");
  SearchConstraints c;
  c.n = 2;
  uint64_t count = fill_layout(l, c, [&](const Mosaic& m) {
    CHECK(tile_number_of_mosaic(m) == 0);
  });
  CHECK(count == 1);
}

TEST_CASE("nondeterministic slots: arc or blank") {
  // 2x2 grid where all four cells may be blank or the circle arc
  Layout l = Layout::parse("02: 01:\n03: 04:\n");
  std::set<std::string> seen;
  SearchConstraints c;
  c.n = 2;
  fill_layout(l, c, [&](const Mosaic& m) { seen.insert(m.serialize_inline()); });
  CHECK(seen == std::set<std::string>{"00/00", "21/34"});
}

TEST_CASE("required edges restrict fills") {
  // a slot whose kinds all carry the required edges still has to match its
  // neighbors, so the double arc is rejected at the board boundary
  Layout l = Layout::parse("27:BR 1:BL\n3:TR 4:TL\n");
  SearchConstraints c;
  c.n = 2;
  std::set<std::string> seen;
  fill_layout(l, c, [&](const Mosaic& m) { seen.insert(m.serialize_inline()); });
  CHECK(seen == std::set<std::string>{"21/34"});
  // required edges outside every allowed kind are rejected at parse time
  CHECK_THROWS(Layout::parse("02:BR 01:BL\n03:TR 04:TL\n"));
}

TEST_CASE("derived layouts: unique 12-tile and 17-tile grids") {
  auto l4 = derive_layouts(4);
  REQUIRE(l4.size() == 1);
  CHECK(l4[0].tile_count() == 12);

  auto l5 = derive_layouts(5);
  REQUIRE(l5.size() == 1);
  CHECK(l5[0].tile_count() == 17);
  // the five-mosaic layout: caps on all four sides, middle row of five
  Layout lay = l5[0].to_layout("fig9");
  int four_point = 0;
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c)
      if (lay.at(r, c).required == 0xF) ++four_point;
  CHECK(four_point == 7);
}

TEST_CASE("profiles reproduce the admissible tile numbers") {
  CHECK(layout_profiles(4).tile_numbers == std::set<int>{12});
  CHECK(layout_profiles(5).tile_numbers == std::set<int>{17});
  CHECK(layout_profiles(6).tile_numbers == std::set<int>{22, 24, 27, 32});
}

TEST_CASE("six-mosaic grid classes and the excluded 24-tile grid") {
  auto l6 = derive_layouts(6);
  REQUIRE(l6.size() == 6);
  std::multiset<int> tiles;
  for (const auto& g : l6) tiles.insert(g.tile_count());
  CHECK(tiles == std::multiset<int>{22, 22, 24, 24, 27, 32});

  // exactly one 24-tile grid misses the four center connection points; its
  // fills admit no single-component reduced split-free diagram with eight or
  // more crossings, so no fill can be a space-efficient prime knot
  int excluded = 0;
  for (const auto& g : l6) {
    if (g.tile_count() != 24) continue;
    int h = g.n / 2 - 1;
    bool center = (g.at(h, h) & edge_bit(EdgeSide::Right)) &&
                  (g.at(h, h) & edge_bit(EdgeSide::Bottom));
    if (center) continue;
    ++excluded;
    SearchConstraints c;
    c.n = g.n;
    c.min_crossings = 8;
    c.require_single_component = true;
    c.require_reduced = true;
    c.forbid_split_trivial = true;
    CHECK(fill_layout(g.to_layout("x"), c, {}) == 0);
  }
  CHECK(excluded == 1);
}

TEST_CASE("bundled six-mosaic layouts match the derivation") {
  auto l6 = derive_layouts(6);
  std::set<std::string> derived;
  for (const auto& g : l6) derived.insert(g.canonical().serialize());
  for (const std::string& name :
       {"fig11_22a", "fig11_22b", "fig11_24", "fig11_27", "fig11_32"}) {
    Layout lay = resolve_layout(name);
    SignatureGrid g;
    g.n = lay.n;
    g.cells.resize(size_t(lay.n) * lay.n);
    for (int r = 0; r < lay.n; ++r)
      for (int c = 0; c < lay.n; ++c)
        g.cells[size_t(r) * lay.n + c] = lay.at(r, c).required;
    CHECK(derived.count(g.canonical().serialize()) == 1);
  }
}

TEST_CASE("signature of a mosaic") {
  Mosaic m = Mosaic::parse_inline("21/34");
  SignatureGrid g = SignatureGrid::of_mosaic(m);
  CHECK(g.tile_count() == 4);
  CHECK(g.canonical().serialize() == g.canonical().canonical().serialize());
}
