#include "knotile/moves.hpp"

#include <algorithm>
#include <stdexcept>

namespace knotile {

namespace {

using K = TileKind;

// All patterns are written for one orientation and matched on the board
// rotated by 0..3 clockwise quarter turns.

bool match_corner_push(const Mosaic& m, int r, int c) {
  if (r + 1 >= m.size() || c + 1 >= m.size()) return false;
  K d = m.at(r, c);
  return (d == K::Blank || d == K::ArcTL) && m.at(r, c + 1) == K::SegV &&
         m.at(r + 1, c) == K::SegH && m.at(r + 1, c + 1) == K::ArcTL;
}

void apply_corner_push(Mosaic& m, int r, int c) {
  m.set(r, c, m.at(r, c) == K::Blank ? K::ArcBR : K::DoubleArcA);
  m.set(r, c + 1, K::ArcTL);
  m.set(r + 1, c, K::ArcTL);
  m.set(r + 1, c + 1, K::Blank);
}

// wide top cap [ArcBR SegH ArcBL] whose left leg turns under the segment
bool match_cap_reduce(const Mosaic& m, int r, int c) {
  if (r + 1 >= m.size() || c + 2 >= m.size()) return false;
  return m.at(r, c) == K::ArcBR && m.at(r, c + 1) == K::SegH &&
         m.at(r, c + 2) == K::ArcBL && m.at(r + 1, c) == K::ArcTR &&
         m.at(r + 1, c + 1) == K::SegH;
}

void apply_cap_reduce(Mosaic& m, int r, int c) {
  m.set(r, c, K::Blank);
  m.set(r, c + 1, K::ArcBR);
  m.set(r + 1, c, K::Blank);
  m.set(r + 1, c + 1, K::ArcTR);
}

// cap whose right leg jogs sideways through a segment one row down
bool match_segment_collapse(const Mosaic& m, int r, int c) {
  if (r + 1 >= m.size() || c + 1 >= m.size()) return false;
  return m.at(r, c) == K::ArcBR && m.at(r, c + 1) == K::ArcBL &&
         m.at(r + 1, c) == K::SegV && m.at(r + 1, c + 1) == K::ArcTR;
}

void apply_segment_collapse(Mosaic& m, int r, int c) {
  m.set(r, c, K::Blank);
  m.set(r, c + 1, K::Blank);
  m.set(r + 1, c, K::ArcBR);
  m.set(r + 1, c + 1, K::SegH);
}

// arch with two segments retracting onto the inward-turned legs below
bool match_segment_pair_elim(const Mosaic& m, int r, int c) {
  if (r + 1 >= m.size() || c + 3 >= m.size()) return false;
  return m.at(r, c) == K::ArcBR && m.at(r, c + 1) == K::SegH &&
         m.at(r, c + 2) == K::SegH && m.at(r, c + 3) == K::ArcBL &&
         m.at(r + 1, c) == K::ArcTR && m.at(r + 1, c + 1) == K::ArcBL &&
         m.at(r + 1, c + 2) == K::ArcBR && m.at(r + 1, c + 3) == K::ArcTL;
}

void apply_segment_pair_elim(Mosaic& m, int r, int c) {
  m.set(r, c, K::Blank);
  m.set(r, c + 1, K::ArcBR);
  m.set(r, c + 2, K::ArcBL);
  m.set(r, c + 3, K::Blank);
  m.set(r + 1, c, K::Blank);
  m.set(r + 1, c + 1, K::SegV);
  m.set(r + 1, c + 2, K::SegV);
  m.set(r + 1, c + 3, K::Blank);
}

// row r consists of blanks and vertical segments only (at least one)
bool match_line_row_collapse(const Mosaic& m, int r, int c) {
  if (c != 0) return false;
  bool seg = false;
  for (int cc = 0; cc < m.size(); ++cc) {
    K k = m.at(r, cc);
    if (k == K::SegV) seg = true;
    else if (k != K::Blank) return false;
  }
  return seg;
}

void apply_line_row_collapse(Mosaic& m, int r, int /*c*/) {
  for (int rr = r; rr + 1 < m.size(); ++rr)
    for (int cc = 0; cc < m.size(); ++cc) m.set(rr, cc, m.at(rr + 1, cc));
  for (int cc = 0; cc < m.size(); ++cc) m.set(m.size() - 1, cc, K::Blank);
}

struct Rule {
  MoveKind kind;
  int rotations;
  bool (*match)(const Mosaic&, int, int);
  void (*apply)(Mosaic&, int, int);
};

constexpr Rule kRules[] = {
    {MoveKind::SegmentPairElim, 4, match_segment_pair_elim, apply_segment_pair_elim},
    {MoveKind::CapReduce, 4, match_cap_reduce, apply_cap_reduce},
    {MoveKind::SegmentCollapse, 4, match_segment_collapse, apply_segment_collapse},
    {MoveKind::LineRowCollapse, 2, match_line_row_collapse, apply_line_row_collapse},
    {MoveKind::CornerPush, 4, match_corner_push, apply_corner_push},
};

const Rule& rule_for(MoveKind k) {
  for (const Rule& r : kRules)
    if (r.kind == k) return r;
  throw std::logic_error("unknown move kind");
}

int segment_count(const Mosaic& m) {
  int cnt = 0;
  for (int r = 0; r < m.size(); ++r)
    for (int c = 0; c < m.size(); ++c)
      cnt += m.at(r, c) == K::SegH || m.at(r, c) == K::SegV;
  return cnt;
}

}  // namespace

const char* move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::SegmentPairElim: return "SegmentPairElim";
    case MoveKind::CapReduce: return "CapReduce";
    case MoveKind::SegmentCollapse: return "SegmentCollapse";
    case MoveKind::LineRowCollapse: return "LineRowCollapse";
    case MoveKind::CornerPush: return "CornerPush";
  }
  return "?";
}

std::vector<MoveInstance> applicable_moves(const KnotMosaic& km) {
  const Mosaic& m = km.mosaic();
  std::vector<MoveInstance> out;
  for (const Rule& rule : kRules)
    for (int q = 0; q < rule.rotations; ++q) {
      Mosaic t = dihedral_transform(m, Symmetry{uint8_t(q), false});
      for (int r = 0; r < t.size(); ++r)
        for (int c = 0; c < t.size(); ++c)
          if (rule.match(t, r, c))
            out.push_back({rule.kind, uint8_t(q), r, c});
    }
  return out;
}

KnotMosaic apply_move(const KnotMosaic& km, const MoveInstance& mv) {
  const Rule& rule = rule_for(mv.kind);
  Mosaic t = dihedral_transform(km.mosaic(), Symmetry{mv.rot, false});
  if (!rule.match(t, mv.r, mv.c))
    throw std::invalid_argument("apply_move: move is not applicable");
  rule.apply(t, mv.r, mv.c);
  Mosaic back = dihedral_transform(t, Symmetry{uint8_t((4 - mv.rot) % 4), false});
  auto out = KnotMosaic::from(std::move(back));
  if (!out) throw std::logic_error("apply_move: rewrite broke connectedness");
  return *out;
}

KnotMosaic simplify(const KnotMosaic& km) {
  KnotMosaic cur = km;
  const int n = cur.mosaic().size();
  int guard = 8 * int(sizeof(kRules) / sizeof(kRules[0])) * n * n * n * n + 16;
  while (guard-- > 0) {
    std::vector<MoveInstance> moves = applicable_moves(cur);
    if (moves.empty()) return cur;
    int before_tiles = tile_number_of_mosaic(cur.mosaic());
    int before_segs = segment_count(cur.mosaic());
    KnotMosaic next = apply_move(cur, moves.front());
    int after_tiles = tile_number_of_mosaic(next.mosaic());
    int after_segs = segment_count(next.mosaic());
    if (after_tiles > before_tiles ||
        (after_tiles == before_tiles && after_segs >= before_segs))
      throw std::logic_error("simplify: move did not decrease the measure");
    cur = std::move(next);
  }
  throw std::logic_error("simplify: step bound exceeded");
}

}  // namespace knotile
