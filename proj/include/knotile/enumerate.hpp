#pragma once
// Exhaustive generation of knot mosaics, transfer-matrix census, per-knot
// tile-number minimization, and the tile-number bounds check.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "knotile/bigint.hpp"
#include "knotile/invariants.hpp"
#include "knotile/tiles.hpp"
#include "knotile/trace.hpp"

namespace knotile {

struct SearchConstraints {
  int n = 0;
  int max_tiles = -1;        // -1: no budget
  int min_crossings = 0;
  bool require_single_component = false;
  bool forbid_split_trivial = false;
  bool require_reduced = false;
  bool canonical_dedup = false;
};

// Depth-first row-major assignment with incremental connection matching and
// tile-budget pruning; yields exactly the suitably connected mosaics meeting
// the constraints, in deterministic order. Returns the number yielded.
// `emit` may be empty (count only).
uint64_t generate(const SearchConstraints& c,
                  const std::function<void(const Mosaic&)>& emit);

// Count of suitably connected n-mosaics by transfer matrix over row-boundary
// connection patterns; independent of `generate`. n <= 8.
BigUInt census(int n);

// Count of `generate` with no filters, sharded over threads.
uint64_t count_all_parallel(int n, int threads);

// One enumeration pass collecting, for every identification the table can
// name (knots, unknot, unlink-k, the two links), the minimum tile number at
// board size n and the canonical-least witness. Only single-component
// mosaics and mosaics whose every component is split-trivial or linked are
// identified; see min_tiles keys for what was found.
struct KnotMinima {
  std::map<std::string, int> min_tiles;
  std::map<std::string, Mosaic> witness;
  // every (identification, tile count, crossings) seen, for lemma suites
  struct Seen {
    std::string id;
    int tiles;
    int crossings;
  };
};
KnotMinima knot_minima(int n, const KnotTable& table, int max_tiles = -1,
                       int threads = 1);

// Minimum tile number over size-n mosaics identifying as `name`
// ("unknot", "3_1", "2^2_1", "unlink-3", ...). Exhaustive for n <= 5.
// For n = 6 the search is restricted to the fill-enumerable bundled
// space-efficient layouts (the two 22-tile ones, the 24 and the 27; the
// 32-tile layout's 4^16 fills stay out of reach), so only prime-knot names
// are answerable there. Throws on an unknown name or unsupported size;
// nullopt when not realizable within the searched space.
std::optional<int> min_tile_number(const std::string& name, int n,
                                   const KnotTable& table, int threads = 1);

struct BoundsRow {
  std::string knot;
  int m, t, lower, upper;
  bool pass;
};
struct BoundsReport {
  std::vector<BoundsRow> rows;
  bool all_pass = true;
  std::string to_csv() const;
};
// lower bound 5m-8; upper m^2-4 (m even) or m^2-8 (m odd); requires m >= 4
BoundsReport verify_bounds(
    const std::vector<std::tuple<std::string, int, int>>& results);

}  // namespace knotile
