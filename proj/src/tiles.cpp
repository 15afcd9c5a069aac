#include "knotile/tiles.hpp"

#include <algorithm>
#include <stdexcept>

namespace knotile {

namespace {

constexpr EdgeMask T = edge_bit(EdgeSide::Top);
constexpr EdgeMask R = edge_bit(EdgeSide::Right);
constexpr EdgeMask B = edge_bit(EdgeSide::Bottom);
constexpr EdgeMask L = edge_bit(EdgeSide::Left);

constexpr std::array<EdgeMask, kTileKindCount> kConn = {
    /*Blank*/ 0,
    /*ArcBL*/ EdgeMask(B | L),
    /*ArcBR*/ EdgeMask(B | R),
    /*ArcTR*/ EdgeMask(T | R),
    /*ArcTL*/ EdgeMask(T | L),
    /*SegH*/ EdgeMask(L | R),
    /*SegV*/ EdgeMask(T | B),
    /*DoubleArcA*/ EdgeMask(T | R | B | L),
    /*DoubleArcB*/ EdgeMask(T | R | B | L),
    /*CrossA*/ EdgeMask(T | R | B | L),
    /*CrossB*/ EdgeMask(T | R | B | L),
};

// Image of each kind under one clockwise quarter turn (edges T->R->B->L->T).
constexpr std::array<TileKind, kTileKindCount> kRotCw = {
    TileKind::Blank,      TileKind::ArcTL,      TileKind::ArcBL,
    TileKind::ArcBR,      TileKind::ArcTR,      TileKind::SegV,
    TileKind::SegH,       TileKind::DoubleArcB, TileKind::DoubleArcA,
    TileKind::CrossB,     TileKind::CrossA,
};

// Image under the left-right mirror (edges L<->R). Axis-aligned reflection
// keeps the drawn over-strand on top, so crossing kinds are fixed.
constexpr std::array<TileKind, kTileKindCount> kMirrorLr = {
    TileKind::Blank,      TileKind::ArcBR,      TileKind::ArcBL,
    TileKind::ArcTL,      TileKind::ArcTR,      TileKind::SegH,
    TileKind::SegV,       TileKind::DoubleArcB, TileKind::DoubleArcA,
    TileKind::CrossA,     TileKind::CrossB,
};

}  // namespace

EdgeMask connection_points(TileKind k) { return kConn[size_t(k)]; }
bool is_blank(TileKind k) { return k == TileKind::Blank; }
TileKind rotate_cw(TileKind k) { return kRotCw[size_t(k)]; }
TileKind mirror_lr(TileKind k) { return kMirrorLr[size_t(k)]; }

char tile_to_char(TileKind k) { return kTileChar[size_t(k)]; }

std::optional<TileKind> tile_from_char(char c) {
  if (c >= '0' && c <= '9') return TileKind(c - '0');
  if (c == 'A' || c == 'a') return TileKind::CrossB;
  return std::nullopt;
}

std::vector<Strand> tile_strands(TileKind k) {
  using E = EdgeSide;
  switch (k) {
    case TileKind::Blank: return {};
    case TileKind::ArcBL: return {{E::Bottom, E::Left}};
    case TileKind::ArcBR: return {{E::Bottom, E::Right}};
    case TileKind::ArcTR: return {{E::Top, E::Right}};
    case TileKind::ArcTL: return {{E::Top, E::Left}};
    case TileKind::SegH: return {{E::Left, E::Right}};
    case TileKind::SegV: return {{E::Top, E::Bottom}};
    case TileKind::DoubleArcA: return {{E::Top, E::Left}, {E::Bottom, E::Right}};
    case TileKind::DoubleArcB: return {{E::Bottom, E::Left}, {E::Top, E::Right}};
    case TileKind::CrossA: return {{E::Left, E::Right}, {E::Top, E::Bottom}};
    case TileKind::CrossB: return {{E::Top, E::Bottom}, {E::Left, E::Right}};
  }
  return {};
}

std::string Mosaic::serialize() const {
  std::string out;
  out.reserve(size_t(n_) * (n_ + 1));
  for (int r = 0; r < n_; ++r) {
    for (int c = 0; c < n_; ++c) out.push_back(tile_to_char(at(r, c)));
    out.push_back('\n');
  }
  return out;
}

std::string Mosaic::serialize_inline() const {
  std::string out;
  for (int r = 0; r < n_; ++r) {
    if (r) out.push_back('/');
    for (int c = 0; c < n_; ++c) out.push_back(tile_to_char(at(r, c)));
  }
  return out;
}

namespace {

Mosaic mosaic_from_lines(const std::vector<std::string>& lines) {
  int n = int(lines.size());
  if (n == 0) throw std::runtime_error("mosaic: empty body");
  Mosaic m(n);
  for (int r = 0; r < n; ++r) {
    if (int(lines[r].size()) != n)
      throw std::runtime_error("mosaic: body is not square");
    for (int c = 0; c < n; ++c) {
      auto k = tile_from_char(lines[r][c]);
      if (!k) throw std::runtime_error("mosaic: bad tile character");
      m.set(r, c, *k);
    }
  }
  return m;
}

}  // namespace

Mosaic Mosaic::parse(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  auto flush = [&] {
    while (!cur.empty() && (cur.back() == '\r' || cur.back() == ' ')) cur.pop_back();
    if (!cur.empty() && cur[0] != '#') lines.push_back(cur);
    cur.clear();
  };
  for (char ch : text) {
    if (ch == '\n') flush();
    else cur.push_back(ch);
  }
  flush();
  return mosaic_from_lines(lines);
}

Mosaic Mosaic::parse_inline(std::string_view text) {
  std::vector<std::string> lines(1);
  for (char ch : text) {
    if (ch == '/') lines.emplace_back();
    else lines.back().push_back(ch);
  }
  return mosaic_from_lines(lines);
}

bool is_suitably_connected(const Mosaic& m) {
  const int n = m.size();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      EdgeMask e = m.conn(r, c);
      if ((e & edge_bit(EdgeSide::Top)) !=
          ((m.conn(r - 1, c) & edge_bit(EdgeSide::Bottom)) ? edge_bit(EdgeSide::Top) : 0))
        return false;
      if ((e & edge_bit(EdgeSide::Left)) !=
          ((m.conn(r, c - 1) & edge_bit(EdgeSide::Right)) ? edge_bit(EdgeSide::Left) : 0))
        return false;
      if ((e & edge_bit(EdgeSide::Bottom)) && r == n - 1) return false;
      if ((e & edge_bit(EdgeSide::Right)) && c == n - 1) return false;
    }
  return true;
}

int tile_number_of_mosaic(const Mosaic& m) {
  int cnt = 0;
  const int n = m.size();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (!is_blank(m.at(r, c))) ++cnt;
  return cnt;
}

std::optional<KnotMosaic> KnotMosaic::from(Mosaic m) {
  if (!is_suitably_connected(m)) return std::nullopt;
  return KnotMosaic(std::move(m));
}

int entry_points_between(const Mosaic& m, BoundaryAxis axis, int index) {
  const int n = m.size();
  if (index < 0 || index >= n - 1)
    throw std::out_of_range("entry_points_between: boundary outside board");
  int cnt = 0;
  for (int i = 0; i < n; ++i) {
    EdgeMask a, b;
    if (axis == BoundaryAxis::Row) {
      a = m.conn(index, i);
      b = m.conn(index + 1, i);
      if ((a & edge_bit(EdgeSide::Bottom)) && (b & edge_bit(EdgeSide::Top))) ++cnt;
    } else {
      a = m.conn(i, index);
      b = m.conn(i, index + 1);
      if ((a & edge_bit(EdgeSide::Right)) && (b & edge_bit(EdgeSide::Left))) ++cnt;
    }
  }
  return cnt;
}

OccupiedSpans occupied_spans(const Mosaic& m) {
  OccupiedSpans out;
  const int n = m.size();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (!is_blank(m.at(r, c))) {
        out.rows.push_back(r);
        break;
      }
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r)
      if (!is_blank(m.at(r, c))) {
        out.cols.push_back(c);
        break;
      }
  return out;
}

Mosaic dihedral_transform(const Mosaic& m, Symmetry s) {
  const int n = m.size();
  Mosaic t = m;
  if (s.reflect) {
    Mosaic f(n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) f.set(r, c, mirror_lr(t.at(r, n - 1 - c)));
    t = std::move(f);
  }
  for (int q = 0; q < s.rot; ++q) {
    Mosaic rot(n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) rot.set(r, c, rotate_cw(t.at(n - 1 - c, r)));
    t = std::move(rot);
  }
  return t;
}

Mosaic canonical_form(const Mosaic& m) {
  Mosaic best = m;
  std::string best_key = m.serialize_inline();
  for (const Symmetry& s : kSymmetries) {
    Mosaic t = dihedral_transform(m, s);
    std::string key = t.serialize_inline();
    if (key < best_key) {
      best_key = std::move(key);
      best = std::move(t);
    }
  }
  return best;
}

std::vector<Cap> find_caps(const Mosaic& m) {
  const int n = m.size();
  std::vector<Cap> out;
  std::vector<char> used(size_t(n) * n, 0);
  auto idx = [n](int r, int c) { return size_t(r) * n + c; };
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      if (used[idx(r, c)]) continue;
      TileKind k = m.at(r, c);
      // horizontal pairs: top cap [ArcBR ArcBL], bottom cap [ArcTR ArcTL]
      if (c + 1 < n && !used[idx(r, c + 1)]) {
        TileKind kr = m.at(r, c + 1);
        if (k == TileKind::ArcBR && kr == TileKind::ArcBL) {
          out.push_back({CapKind::Top, r, c});
          used[idx(r, c)] = used[idx(r, c + 1)] = 1;
          continue;
        }
        if (k == TileKind::ArcTR && kr == TileKind::ArcTL) {
          out.push_back({CapKind::Bottom, r, c});
          used[idx(r, c)] = used[idx(r, c + 1)] = 1;
          continue;
        }
      }
      // vertical pairs: left cap [ArcBR over ArcTR], right cap [ArcBL over ArcTL]
      if (r + 1 < n && !used[idx(r + 1, c)]) {
        TileKind kd = m.at(r + 1, c);
        if (k == TileKind::ArcBR && kd == TileKind::ArcTR) {
          out.push_back({CapKind::Left, r, c});
          used[idx(r, c)] = used[idx(r + 1, c)] = 1;
          continue;
        }
        if (k == TileKind::ArcBL && kd == TileKind::ArcTL) {
          out.push_back({CapKind::Right, r, c});
          used[idx(r, c)] = used[idx(r + 1, c)] = 1;
          continue;
        }
      }
    }
  return out;
}

}  // namespace knotile
