#include <doctest.h>

#include <algorithm>
#include <set>

#include "knotile/enumerate.hpp"
#include "knotile/invariants.hpp"

using namespace knotile;

namespace {

// naive oracle: every grid over the full alphabet, filtered by the
// connectivity predicate; usable through n = 2 in unit tests
std::set<std::string> naive_all(int n) {
  std::set<std::string> out;
  size_t cells = size_t(n) * n;
  std::vector<int> odo(cells, 0);
  for (;;) {
    Mosaic m(n);
    for (size_t i = 0; i < cells; ++i)
      m.set(int(i) / n, int(i) % n, TileKind(odo[i]));
    if (is_suitably_connected(m)) out.insert(m.serialize_inline());
    size_t i = 0;
    while (i < cells && ++odo[i] == kTileKindCount) odo[i++] = 0;
    if (i == cells) break;
  }
  return out;
}

}  // namespace

TEST_CASE("generate matches the naive oracle at n=2") {
  std::set<std::string> got;
  SearchConstraints c;
  c.n = 2;
  uint64_t count = generate(c, [&](const Mosaic& m) {
    got.insert(m.serialize_inline());
  });
  CHECK(count == 2);
  CHECK(got == naive_all(2));
  CHECK(got.count("00/00") == 1);
  CHECK(got.count("21/34") == 1);
}

TEST_CASE("census agrees with generate for small boards") {
  CHECK(census(1).to_string() == "1");
  CHECK(census(2).to_string() == "2");
  for (int n = 3; n <= 4; ++n) {
    SearchConstraints c;
    c.n = n;
    uint64_t g = generate(c, {});
    CHECK(census(n).to_string() == std::to_string(g));
  }
  CHECK_THROWS(census(9));
}

TEST_CASE("census n=5 equals the sharded count") {
  CHECK(census(5).to_string() ==
        std::to_string(count_all_parallel(5, 2)));
}

TEST_CASE("every yielded mosaic satisfies the requested filters") {
  SearchConstraints c;
  c.n = 4;
  c.max_tiles = 12;
  c.min_crossings = 2;
  c.require_single_component = true;
  c.require_reduced = true;
  c.forbid_split_trivial = true;
  int checked = 0;
  generate(c, [&](const Mosaic& m) {
    if (++checked % 97 != 0) return;  // spot-check a sample
    auto km = KnotMosaic::from(m);
    REQUIRE(km.has_value());
    TraceResult t = trace(*km);
    CHECK(t.component_count() == 1);
    CHECK(t.crossing_count() >= 2);
    CHECK(is_reduced(t.diagram));
    CHECK(tile_number_of_mosaic(m) <= 12);
  });
  CHECK(checked > 0);
}

TEST_CASE("budget pruning excludes nothing within budget") {
  // mosaics with <= 6 tiles from a pruned run equal the post-filtered
  // unpruned stream
  for (int n = 3; n <= 4; ++n) {
    std::set<std::string> pruned, filtered;
    SearchConstraints c;
    c.n = n;
    c.max_tiles = 6;
    generate(c, [&](const Mosaic& m) { pruned.insert(m.serialize_inline()); });
    SearchConstraints full;
    full.n = n;
    generate(full, [&](const Mosaic& m) {
      if (tile_number_of_mosaic(m) <= 6) filtered.insert(m.serialize_inline());
    });
    CHECK(pruned == filtered);
  }
}

TEST_CASE("canonical dedup is sound") {
  // the orbits of the deduped stream partition the full stream
  SearchConstraints all;
  all.n = 3;
  std::set<std::string> full;
  generate(all, [&](const Mosaic& m) { full.insert(m.serialize_inline()); });

  SearchConstraints dedup = all;
  dedup.canonical_dedup = true;
  std::set<std::string> orbit_union;
  uint64_t classes = generate(dedup, [&](const Mosaic& m) {
    CHECK(canonical_form(m) == m);
    for (const Symmetry& s : kSymmetries)
      orbit_union.insert(dihedral_transform(m, s).serialize_inline());
  });
  CHECK(classes > 0);
  CHECK(classes < full.size());
  CHECK(orbit_union == full);
}

TEST_CASE("knot minima on tiny boards") {
  KnotTable table = load_knot_table(default_table_path());
  KnotMinima m2 = knot_minima(2, table);
  REQUIRE(m2.min_tiles.count("unknot"));
  CHECK(m2.min_tiles.at("unknot") == 4);

  KnotMinima m3 = knot_minima(3, table);
  CHECK(m3.min_tiles.at("unknot") == 4);
  REQUIRE(m3.min_tiles.count("unlink-2"));
  CHECK(m3.min_tiles.at("unlink-2") == 7);

  CHECK(min_tile_number("unknot", 2, table) == 4);
  CHECK(!min_tile_number("3_1", 3, table).has_value());
  CHECK_THROWS(min_tile_number("not_a_knot", 2, table));
}

TEST_CASE("verify_bounds") {
  BoundsReport rep = verify_bounds({{"3_1", 4, 12}, {"4_1", 5, 17}, {"6_3", 6, 22}});
  CHECK(rep.all_pass);
  CHECK(rep.rows[0].lower == 12);
  CHECK(rep.rows[0].upper == 12);
  CHECK(rep.rows[1].lower == 17);
  CHECK(rep.rows[1].upper == 17);
  CHECK(rep.rows[2].lower == 22);
  CHECK(rep.rows[2].upper == 32);
  BoundsReport bad = verify_bounds({{"x", 6, 21}});
  CHECK(!bad.all_pass);
  CHECK_THROWS(verify_bounds({{"x", 3, 4}}));
  CHECK(rep.to_csv().find("3_1,4,12,12,12,pass") != std::string::npos);
}

TEST_CASE("space-efficient 4-mosaic knots are exactly the trefoil") {
  KnotTable t = load_knot_table(default_table_path());
  SearchConstraints c;
  c.n = 4;
  c.max_tiles = 12;
  c.min_crossings = 2;
  c.require_single_component = true;
  c.require_reduced = true;
  c.forbid_split_trivial = true;
  std::set<std::string> names;
  generate(c, [&](const Mosaic& m) {
    TraceResult tr = trace(*KnotMosaic::from(m));
    IdentifyResult id = identify(tr.diagram, t);
    if (id.kind == IdentifyResult::Kind::Matched)
      for (const auto& [name, mirror] : id.matches) names.insert(name);
  });
  CHECK(names == std::set<std::string>{"3_1"});
}

TEST_CASE("census supports boards through n=8") {
  std::string c6 = census(6).to_string();
  std::string c7 = census(7).to_string();
  std::string c8 = census(8).to_string();
  CHECK(c6 == "101393411126");
  CHECK(c7.size() > c6.size());
  CHECK(c8.size() > c7.size());
}

TEST_CASE("layout-restricted minima at n=6") {
  KnotTable t = load_knot_table(default_table_path());
  CHECK(min_tile_number("6_3", 6, t) == 22);
  CHECK_THROWS(min_tile_number("unknot", 6, t));
  CHECK_THROWS(min_tile_number("3_1", 7, t));
}
