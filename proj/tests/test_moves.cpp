#include <doctest.h>

#include "knotile/invariants.hpp"
#include "knotile/moves.hpp"
#include "knotile/tiles.hpp"
#include "knotile/trace.hpp"

using namespace knotile;

namespace {

KnotMosaic km(const std::string& text) {
  auto m = KnotMosaic::from(Mosaic::parse_inline(text));
  REQUIRE(m.has_value());
  return *m;
}

int segments(const Mosaic& m) {
  int cnt = 0;
  for (int r = 0; r < m.size(); ++r)
    for (int c = 0; c < m.size(); ++c)
      cnt += m.at(r, c) == TileKind::SegH || m.at(r, c) == TileKind::SegV;
  return cnt;
}

}  // namespace

TEST_CASE("no moves on the tight unknot") {
  CHECK(applicable_moves(km("21/34")).empty());
  CHECK(simplify(km("21/34")).mosaic() == Mosaic::parse_inline("21/34"));
}

TEST_CASE("all-blank board is a fixed point") {
  KnotMosaic blank = *KnotMosaic::from(Mosaic(4));
  CHECK(applicable_moves(blank).empty());
  CHECK(simplify(blank).mosaic() == Mosaic(4));
}

TEST_CASE("line row collapse straightens a stretched circle") {
  // circle stretched over 3 rows: middle row is all vertical segments
  KnotMosaic m = km("210/660/340");
  auto moves = applicable_moves(m);
  REQUIRE(!moves.empty());
  bool has_collapse = false;
  for (const auto& mv : moves) has_collapse |= mv.kind == MoveKind::LineRowCollapse;
  CHECK(has_collapse);
  KnotMosaic out = simplify(m);
  CHECK(tile_number_of_mosaic(out.mosaic()) == 4);
}

TEST_CASE("cap reduce collapses a wide cap with a step") {
  KnotMosaic m = km("251/354/000");
  auto moves = applicable_moves(m);
  bool found = false;
  for (const auto& mv : moves) found |= mv.kind == MoveKind::CapReduce;
  CHECK(found);
  KnotMosaic out = simplify(m);
  CHECK(tile_number_of_mosaic(out.mosaic()) == 4);
}

TEST_CASE("segment collapse absorbs a sideways jog") {
  KnotMosaic m = km("0210/0631/0354/0000");
  auto moves = applicable_moves(m);
  bool found = false;
  for (const auto& mv : moves) found |= mv.kind == MoveKind::SegmentCollapse;
  CHECK(found);
  KnotMosaic out = simplify(m);
  CHECK(tile_number_of_mosaic(out.mosaic()) == 4);
}

TEST_CASE("segment pair elimination retracts a two-segment arch") {
  KnotMosaic m = km("2551/3124/0340/0000");
  auto moves = applicable_moves(m);
  REQUIRE(!moves.empty());
  CHECK(moves.front().kind == MoveKind::SegmentPairElim);
  KnotMosaic stepped = apply_move(m, moves.front());
  CHECK(tile_number_of_mosaic(stepped.mosaic()) ==
        tile_number_of_mosaic(m.mosaic()) - 4);
  CHECK(tile_number_of_mosaic(simplify(m).mosaic()) == 4);
}

TEST_CASE("big rectangle simplifies to the 2x2 circle") {
  KnotMosaic rect = km("2551/6006/6006/3554");
  KnotMosaic out = simplify(rect);
  CHECK(tile_number_of_mosaic(out.mosaic()) == 4);
  TraceResult t = trace(out);
  CHECK(t.component_count() == 1);
  CHECK(t.crossing_count() == 0);
}

TEST_CASE("corner push on the stretched trefoil") {
  // 13-tile knot mosaic with the bottom-right corner occupied
  Mosaic g(4);
  g.set(0, 1, TileKind::ArcBR);
  g.set(0, 2, TileKind::ArcBL);
  g.set(1, 0, TileKind::ArcBR);
  g.set(1, 1, TileKind::CrossA);
  g.set(1, 2, TileKind::CrossB);
  g.set(1, 3, TileKind::ArcBL);
  g.set(2, 0, TileKind::ArcTR);
  g.set(2, 1, TileKind::CrossA);
  g.set(2, 2, TileKind::ArcTL);
  g.set(2, 3, TileKind::SegV);
  g.set(3, 1, TileKind::ArcTR);
  g.set(3, 2, TileKind::SegH);
  g.set(3, 3, TileKind::ArcTL);
  auto stretched = KnotMosaic::from(g);
  REQUIRE(stretched.has_value());
  CHECK(tile_number_of_mosaic(g) == 13);

  auto moves = applicable_moves(*stretched);
  bool has_corner_push = false;
  for (const auto& mv : moves) has_corner_push |= mv.kind == MoveKind::CornerPush;
  CHECK(has_corner_push);

  Laurent before = jones(trace(*stretched).diagram);
  KnotMosaic out = simplify(*stretched);
  CHECK(tile_number_of_mosaic(out.mosaic()) == 12);
  CHECK(jones(trace(out).diagram) == before);
}

TEST_CASE("every move preserves the knot and never increases tiles") {
  std::vector<std::string> cases = {
      "210/660/340",           // stretched circle
      "2551/6006/6006/3554",   // rectangle
      "0210/0631/0354/0000",   // cap with a sideways jog
      "251/354/000",           // wide cap with a segment step
      "2551/3124/0340/0000",   // arch with two segments over turned legs
  };
  for (const auto& text : cases) {
    KnotMosaic m = km(text);
    Laurent before = jones(trace(m).diagram);
    int tiles_before = tile_number_of_mosaic(m.mosaic());
    for (const MoveInstance& mv : applicable_moves(m)) {
      KnotMosaic out = apply_move(m, mv);
      CHECK(is_suitably_connected(out.mosaic()));
      CHECK(tile_number_of_mosaic(out.mosaic()) <= tiles_before);
      CHECK(jones(trace(out).diagram) == before);
    }
  }
}

TEST_CASE("apply_move rejects an inapplicable instance") {
  KnotMosaic m = km("21/34");
  CHECK_THROWS(apply_move(m, MoveInstance{MoveKind::CornerPush, 0, 0, 0}));
}

TEST_CASE("simplify strictly decreases (tiles, segments)") {
  KnotMosaic m = km("2551/6006/6006/3554");
  KnotMosaic cur = m;
  int tiles = tile_number_of_mosaic(cur.mosaic());
  int segs = segments(cur.mosaic());
  int guard = 200;
  while (guard-- > 0) {
    auto moves = applicable_moves(cur);
    if (moves.empty()) break;
    cur = apply_move(cur, moves.front());
    int t = tile_number_of_mosaic(cur.mosaic());
    int s = segments(cur.mosaic());
    CHECK((t < tiles || (t == tiles && s < segs)));
    tiles = t;
    segs = s;
  }
  CHECK(guard > 0);
}
