#pragma once
// Mosaic tile alphabet, square boards, connection-point semantics,
// suitable-connectedness, caps, and the dihedral board symmetries.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace knotile {

enum class EdgeSide : uint8_t { Top = 0, Right = 1, Bottom = 2, Left = 3 };

using EdgeMask = uint8_t;  // bit i set <=> connection point on EdgeSide(i)

constexpr EdgeMask edge_bit(EdgeSide e) { return EdgeMask(1u << unsigned(e)); }
constexpr EdgeSide opposite(EdgeSide e) {
  return EdgeSide((unsigned(e) + 2) & 3u);
}

// The eleven tiles, enum value == paper index (T0..T10).
// Single arcs are named by the two edges they join. DoubleArcA carries the
// {Top,Left} and {Bottom,Right} arcs, DoubleArcB the other pair. CrossA has
// the horizontal strand on top, CrossB the vertical one.
enum class TileKind : uint8_t {
  Blank = 0,
  ArcBL,
  ArcBR,
  ArcTR,
  ArcTL,
  SegH,
  SegV,
  DoubleArcA,
  DoubleArcB,
  CrossA,
  CrossB,
};

inline constexpr int kTileKindCount = 11;
inline constexpr std::array<char, kTileKindCount> kTileChar = {
    '0', '1', '2', '3', '4', '5', '6', '7', '8', '9', 'A'};

EdgeMask connection_points(TileKind k);
bool is_blank(TileKind k);
std::optional<TileKind> tile_from_char(char c);
char tile_to_char(TileKind k);

// A strand drawn on a tile, joining two edge midpoints.
struct Strand {
  EdgeSide a, b;
};
// Up to two strands per tile; for crossing tiles strand 0 is the over-strand.
std::vector<Strand> tile_strands(TileKind k);

// One of the eight dihedral symmetries of the board: first mirror (left-right)
// if `reflect`, then rotate clockwise by `rot` quarter turns.
struct Symmetry {
  uint8_t rot = 0;  // 0..3
  bool reflect = false;
};
inline constexpr std::array<Symmetry, 8> kSymmetries = {
    Symmetry{0, false}, {1, false}, {2, false}, {3, false},
    Symmetry{0, true},  {1, true},  {2, true},  {3, true}};

TileKind rotate_cw(TileKind k);
TileKind mirror_lr(TileKind k);

class Mosaic {
 public:
  Mosaic() = default;
  Mosaic(int n, TileKind fill = TileKind::Blank)
      : n_(n), g_(size_t(n) * size_t(n), fill) {}

  int size() const { return n_; }
  TileKind at(int r, int c) const { return g_[size_t(r) * n_ + c]; }
  void set(int r, int c, TileKind k) { g_[size_t(r) * n_ + c] = k; }
  bool in_range(int r, int c) const {
    return r >= 0 && r < n_ && c >= 0 && c < n_;
  }

  // Connection mask of the tile at (r,c); blank outside the board.
  EdgeMask conn(int r, int c) const {
    return in_range(r, c) ? connection_points(at(r, c)) : EdgeMask(0);
  }

  bool operator==(const Mosaic& o) const = default;

  // Text format: n lines of n tile-index characters; '#' comment lines.
  std::string serialize() const;
  // Single-line form with rows joined by '/'.
  std::string serialize_inline() const;
  static Mosaic parse(std::string_view text);          // throws on bad input
  static Mosaic parse_inline(std::string_view text);   // rows joined by '/'

 private:
  int n_ = 0;
  std::vector<TileKind> g_;
};

bool is_suitably_connected(const Mosaic& m);
int tile_number_of_mosaic(const Mosaic& m);

// A suitably connected mosaic. Construction validates.
class KnotMosaic {
 public:
  static std::optional<KnotMosaic> from(Mosaic m);
  const Mosaic& mosaic() const { return m_; }

 private:
  explicit KnotMosaic(Mosaic m) : m_(std::move(m)) {}
  Mosaic m_;
};

// Matched connection points crossing the boundary between row (or column)
// `index` and `index`+1, 0-based; index must be in [0, n-2].
enum class BoundaryAxis { Row, Column };
int entry_points_between(const Mosaic& m, BoundaryAxis axis, int index);

struct OccupiedSpans {
  std::vector<int> rows, cols;  // indices holding at least one non-blank tile
};
OccupiedSpans occupied_spans(const Mosaic& m);

Mosaic dihedral_transform(const Mosaic& m, Symmetry s);
Mosaic canonical_form(const Mosaic& m);

enum class CapKind : uint8_t { Top, Right, Bottom, Left };

// Two adjacent single-arc tiles sharing a connection point whose free ends
// enter the same neighboring row or column; (r,c) is the first tile
// (leftmost for horizontal pairs, topmost for vertical ones).
struct Cap {
  CapKind kind;
  int r, c;
  bool operator==(const Cap&) const = default;
};

// Greedy row-major matching; each arc tile belongs to at most one reported cap.
std::vector<Cap> find_caps(const Mosaic& m);

}  // namespace knotile
