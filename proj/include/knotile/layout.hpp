#pragma once
// Nondeterministic-tile layouts: parsing/serialization, constrained filling,
// and derivation of the admissible space-efficient layouts (and their tile
// numbers) from the lemma system.

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "knotile/enumerate.hpp"
#include "knotile/tiles.hpp"

namespace knotile {

struct LayoutSlot {
  uint16_t allowed = 1;     // bitmask over the 11 tile kinds
  EdgeMask required = 0;    // connection points every fill must carry

  bool allows(TileKind k) const { return allowed >> unsigned(k) & 1u; }
};

struct Layout {
  int n = 0;
  std::vector<LayoutSlot> slots;
  std::string name;

  LayoutSlot& at(int r, int c) { return slots[size_t(r) * n + c]; }
  const LayoutSlot& at(int r, int c) const { return slots[size_t(r) * n + c]; }

  // cell spec `kinds:edges` with tile index characters and TRBL edge
  // letters, whitespace separated, '#' comments
  std::string serialize() const;
  static Layout parse(const std::string& text, const std::string& name = "");
};

Layout load_layout_file(const std::string& path);
// resolves a bundled layout name (fig7, fig9, fig11_22a, fig11_22b,
// fig11_24, fig11_27, fig11_32) or a file path
Layout resolve_layout(const std::string& name_or_path);
std::vector<std::string> bundled_layout_names();

// All assignments of allowed kinds to slots that produce suitably connected
// mosaics carrying every required edge and meeting the constraints.
uint64_t fill_layout(const Layout& layout, const SearchConstraints& c,
                     const std::function<void(const Mosaic&)>& emit);

// A connection-level grid: each cell is an EdgeMask that is blank, one of
// the six two-point signatures, or all four edges.
struct SignatureGrid {
  int n = 0;
  std::vector<EdgeMask> cells;

  EdgeMask at(int r, int c) const { return cells[size_t(r) * n + c]; }
  int tile_count() const;
  std::string serialize() const;
  SignatureGrid canonical() const;
  Layout to_layout(const std::string& name) const;
  static SignatureGrid of_mosaic(const Mosaic& m);
};

// Enumerates the connection-level grids consistent with the lemma system
// for a space-efficient prime-knot mosaic in which every row is occupied,
// deduplicated under the dihedral symmetries.
std::vector<SignatureGrid> derive_layouts(int n);

struct ProfileReport {
  int n = 0;
  std::set<int> tile_numbers;
  std::vector<SignatureGrid> witnesses;  // one per distinct grid class
  std::string to_csv() const;
};
ProfileReport layout_profiles(int n);

// Layout-restricted minimum for a table knot on a 6-board: scans the fills
// of the bundled layouts in increasing tile number (22a, 22b, 24, 27) and
// returns the first tile count realizing the knot.
std::optional<int> min_tile_number_layouts(const std::string& name,
                                           const KnotTable& table);

}  // namespace knotile
