#include <doctest.h>

#include <cstdlib>

#include "knotile/tangle.hpp"
#include "knotile/tiles.hpp"
#include "knotile/trace.hpp"

using namespace knotile;

namespace {

KnotMosaic km(const std::string& inline_text) {
  auto m = KnotMosaic::from(Mosaic::parse_inline(inline_text));
  REQUIRE(m.has_value());
  return *m;
}

// one-crossing unknot on a 3-mosaic (a kink around the center crossing)
Mosaic kink3() {
  Mosaic g(3);
  g.set(0, 0, TileKind::ArcBR);
  g.set(0, 1, TileKind::ArcBL);
  g.set(1, 0, TileKind::ArcTR);
  g.set(1, 1, TileKind::CrossA);
  g.set(1, 2, TileKind::ArcBL);
  g.set(2, 1, TileKind::ArcTR);
  g.set(2, 2, TileKind::ArcTL);
  return g;
}

}  // namespace

TEST_CASE("trace the 2x2 circle") {
  TraceResult t = trace(km("21/34"));
  CHECK(t.component_count() == 1);
  CHECK(t.crossing_count() == 0);
  CHECK(t.diagram.circle_components == 1);
  CHECK(t.components[0].tiles.size() == 4);
}

TEST_CASE("two stacked circles through a double arc") {
  TraceResult t = trace(km("210/371/034"));
  CHECK(t.component_count() == 2);
  CHECK(t.crossing_count() == 0);
  CHECK(split_trivial_components(t).size() == 2);
}

TEST_CASE("one-crossing unknot: traced, split-free, not reduced") {
  auto m = KnotMosaic::from(kink3());
  REQUIRE(m.has_value());
  TraceResult t = trace(*m);
  CHECK(t.component_count() == 1);
  CHECK(t.crossing_count() == 1);
  CHECK(split_trivial_components(t).empty());
  CHECK(!is_reduced(t.diagram));
  CHECK(std::abs(writhe(t.diagram)) == 1);
}

TEST_CASE("strand conservation") {
  Mosaic g = Mosaic::parse_inline("210/371/034");
  TraceResult t = trace(*KnotMosaic::from(g));
  size_t visited_tiles = 0;
  for (const auto& comp : t.components) visited_tiles += comp.tiles.size();
  int strand_ends = 0;
  for (int r = 0; r < g.size(); ++r)
    for (int c = 0; c < g.size(); ++c)
      strand_ends += __builtin_popcount(unsigned(connection_points(g.at(r, c))));
  CHECK(2 * visited_tiles == size_t(strand_ends));
}

TEST_CASE("reducedness") {
  PlanarDiagram trefoil = Tangle::rational({3}, false).numerator_closure();
  CHECK(is_reduced(trefoil));
  CHECK(trefoil.crossings.size() == 3);

  PlanarDiagram empty;
  empty.circle_components = 1;
  CHECK(is_reduced(empty));

  // self-loop arc = removable kink
  CHECK(!is_reduced(PlanarDiagram::parse("X(1,2,2,1)")));
}

TEST_CASE("writhe of the trefoil and its mirror") {
  PlanarDiagram right = Tangle::rational({3}, false).numerator_closure();
  CHECK(std::abs(writhe(right)) == 3);
  PlanarDiagram left = Tangle::rational({-3}, false).numerator_closure();
  CHECK(writhe(left) == -writhe(right));
}

TEST_CASE("pd text round trip") {
  PlanarDiagram d = Tangle::rational({3}, false).numerator_closure();
  std::string text = d.to_string();
  PlanarDiagram back = PlanarDiagram::parse(text);
  CHECK(back.crossings.size() == d.crossings.size());
  CHECK(back.arc_count == d.arc_count);
  CHECK(back.to_string() == text);
  CHECK(back.writhe() == d.writhe());
  CHECK_THROWS(PlanarDiagram::parse("X(1,2,3)"));
  CHECK_THROWS(PlanarDiagram::parse("X(1,2,3,3),X(1,2,4,4)"));
}

TEST_CASE("trace invariants under the dihedral symmetries") {
  Mosaic m = kink3();
  TraceResult t0 = trace(*KnotMosaic::from(m));
  for (const Symmetry& s : kSymmetries) {
    auto ts = KnotMosaic::from(dihedral_transform(m, s));
    REQUIRE(ts.has_value());
    TraceResult t = trace(*ts);
    CHECK(t.component_count() == t0.component_count());
    CHECK(t.crossing_count() == t0.crossing_count());
    CHECK(is_reduced(t.diagram) == is_reduced(t0.diagram));
  }
}
