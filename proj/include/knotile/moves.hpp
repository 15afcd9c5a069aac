#pragma once
// Planar-isotopy rewrite rules and a deterministic greedy simplifier.
// Every rule preserves suitable-connectedness and the traced knot and never
// increases the tile number at fixed board size.

#include <string>
#include <vector>

#include "knotile/tiles.hpp"

namespace knotile {

enum class MoveKind : uint8_t {
  SegmentPairElim,   // retract an arch with two collinear segments (-4 tiles)
  CapReduce,         // collapse arc-segment-arc plus its step to a cap (-2)
  SegmentCollapse,   // absorb the segment jog under a cap sideways (-2)
  LineRowCollapse,   // delete a pass-through row/column of segments
  CornerPush,        // push a corner arc diagonally inward (0 or -1)
};

const char* move_kind_name(MoveKind k);

// A match of a rule pattern. Anchor coordinates are in the frame of the
// board rotated clockwise `rot` quarter turns.
struct MoveInstance {
  MoveKind kind;
  uint8_t rot;
  int r, c;
  bool operator==(const MoveInstance&) const = default;
};

std::vector<MoveInstance> applicable_moves(const KnotMosaic& m);

// Throws std::invalid_argument when the move does not match.
KnotMosaic apply_move(const KnotMosaic& m, const MoveInstance& mv);

// Greedy fixed point: repeatedly applies the first applicable move in
// deterministic order. Terminates because every rule strictly decreases
// (tile number, segment count) lexicographically.
KnotMosaic simplify(const KnotMosaic& m);

}  // namespace knotile
