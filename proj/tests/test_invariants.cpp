#include <doctest.h>

#include <cstdlib>

#include "knotile/invariants.hpp"
#include "knotile/tangle.hpp"
#include "knotile/trace.hpp"

using namespace knotile;

namespace {

PlanarDiagram rational_knot(std::vector<int> d) {
  return Tangle::rational(d, d.size() % 2 == 0).numerator_closure();
}

// brute-force smoothing oracle: resolves the last crossing recursively,
// straight from the skein definition; independent of the state-sum path
Laurent bracket_oracle(const PlanarDiagram& d) {
  if (d.crossings.empty()) {
    if (d.circle_components == 0) return Laurent::one();
    Laurent out = Laurent::one();
    for (int i = 1; i < d.circle_components; ++i) out = out * bracket_delta();
    return out;
  }
  auto resolve = [](const PlanarDiagram& in, bool a_type) {
    PlanarDiagram out = in;
    PdCrossing x = out.crossings.back();
    out.crossings.pop_back();
    auto merge = [&out](int keep, int gone) {
      if (keep == gone) {
        out.circle_components++;  // an arc merged with itself closes a loop
        return;
      }
      for (auto& c : out.crossings)
        for (auto& a : c.arc)
          if (a == gone) a = keep;
    };
    int p0, p1, q0, q1;
    if (a_type) {
      p0 = x.arc[0]; p1 = x.arc[1]; q0 = x.arc[2]; q1 = x.arc[3];
    } else {
      p0 = x.arc[0]; p1 = x.arc[3]; q0 = x.arc[1]; q1 = x.arc[2];
    }
    merge(p0, p1);
    if (q0 == p1) q0 = p0;
    if (q1 == p1) q1 = p0;
    merge(q0, q1);
    return out;
  };
  Laurent a = bracket_oracle(resolve(d, true));
  Laurent b = bracket_oracle(resolve(d, false));
  return a.shifted(1) + b.shifted(-1);
}

}  // namespace

TEST_CASE("bracket normalization") {
  PlanarDiagram unknot;
  unknot.circle_components = 1;
  CHECK(bracket(unknot) == Laurent::one());
  PlanarDiagram two;
  two.circle_components = 2;
  CHECK(bracket(two) == bracket_delta());
}

TEST_CASE("trefoil bracket matches the brute-force smoothing oracle") {
  PlanarDiagram t = rational_knot({3});
  Laurent b = bracket(t);
  // resolving all crossings leaves loops only; the oracle's base case counts
  // one loop as delta^0, so the two routes agree on the nose
  CHECK(b == bracket_oracle(t));
  Laurent expect = Laurent::parse("-A^5-A^-3+A^-7");
  CHECK((b == expect || b == expect.mirrored()));
}

TEST_CASE("bracket skein recursion on small diagrams") {
  for (auto coeffs :
       {std::vector<int>{3}, {2, 2}, {3, 2}, {2, 1, 1, 2}, {3, 1, 3}}) {
    PlanarDiagram d = rational_knot(coeffs);
    CHECK(bracket(d) == bracket_oracle(d));
  }
}

TEST_CASE("adding a split circle multiplies by delta") {
  PlanarDiagram d = rational_knot({2, 2});
  Laurent before = bracket(d);
  d.circle_components += 1;
  CHECK(bracket(d) == before * bracket_delta());
}

TEST_CASE("jones of the unknot and trefoil") {
  PlanarDiagram unknot;
  unknot.circle_components = 1;
  CHECK(jones(unknot).is_one());

  Laurent v = jones(rational_knot({3}));
  Laurent expect = Laurent::parse("-A^-16+A^-12+A^-4");  // -t^4+t^3+t
  CHECK((v == expect || v == expect.mirrored()));

  Laurent vm = jones(Tangle::rational({-3}, false).numerator_closure());
  CHECK(vm == v.mirrored());
}

TEST_CASE("frozen Jones values for small rational knots") {
  struct Row {
    std::vector<int> coeffs;
    const char* v;  // one chirality, written in A with t = A^-4
  };
  std::vector<Row> rows = {
      {{2, 2}, "A^8-A^4+1-A^-4+A^-8"},
      {{5}, "A^-8+A^-16-A^-20+A^-24-A^-28"},
      {{3, 2}, "A^-4-A^-8+2A^-12-A^-16+A^-20-A^-24"},
      {{4, 2}, "A^8-A^4+2-2A^-4+A^-8-A^-12+A^-16"},
  };
  for (const Row& r : rows) {
    Laurent v = jones(rational_knot(r.coeffs));
    Laurent e = Laurent::parse(r.v);
    CHECK((v == e || v == e.mirrored()));
  }
}

TEST_CASE("crossing cap") {
  CHECK_THROWS(bracket(rational_knot({3}), 2));
}

TEST_CASE("bundled knot table loads and validates") {
  KnotTable table = load_knot_table(default_table_path());
  CHECK(table.records.size() == 84);
  for (const auto& rec : table.records) {
    CHECK(!rec.ambiguous);
    CHECK(int(rec.pd.crossings.size()) == rec.crossing_number);
  }
  CHECK(table.find("3_1") != nullptr);
  CHECK(table.find("9_49") != nullptr);
  CHECK(table.find("knot") == nullptr);
  CHECK(table.links.size() == 2);
}

TEST_CASE("table loader rejects bad records") {
  // arc label appearing once
  CHECK_THROWS(load_knot_table_text("k;1;X(1,2,3,4)\n"));
  // crossing count mismatch
  CHECK_THROWS(load_knot_table_text("k;4;X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)\n"));
  KnotTable empty = load_knot_table_text("# nothing\n");
  CHECK(empty.records.empty());
}

TEST_CASE("identify") {
  KnotTable table = load_knot_table(default_table_path());

  PlanarDiagram unknot;
  unknot.circle_components = 1;
  CHECK(identify(unknot, table).kind == IdentifyResult::Kind::Unknot);

  IdentifyResult t = identify(rational_knot({3}), table);
  REQUIRE(t.kind == IdentifyResult::Kind::Matched);
  REQUIRE(t.matches.size() == 1);
  CHECK(t.matches[0].first == "3_1");

  IdentifyResult seven4 = identify(rational_knot({3, 1, 3}), table);
  REQUIRE(seven4.kind == IdentifyResult::Kind::Matched);
  CHECK(seven4.matches[0].first == "7_4");

  IdentifyResult tm =
      identify(Tangle::rational({-3}, false).numerator_closure(), table);
  REQUIRE(tm.kind == IdentifyResult::Kind::Matched);
  CHECK(tm.matches[0].first == "3_1");
  CHECK(tm.matches[0].second != t.matches[0].second);

  PlanarDiagram hopf = PlanarDiagram::parse("X(2,4,3,1),X(4,2,1,3)");
  IdentifyResult h = identify(hopf, table);
  REQUIRE(h.kind == IdentifyResult::Kind::Matched);
  CHECK(h.matches[0].first == "2^2_1");

  PlanarDiagram unlink2;
  unlink2.circle_components = 2;
  IdentifyResult u = identify(unlink2, table);
  CHECK(u.kind == IdentifyResult::Kind::Unlink);
  CHECK(u.unlink_components == 2);

  IdentifyResult big = identify(rational_knot({11}), table);
  CHECK(big.kind == IdentifyResult::Kind::Unknown);
}

TEST_CASE("table jones values pairwise distinct up to mirror") {
  KnotTable table = load_knot_table(default_table_path());
  for (size_t i = 0; i < table.records.size(); ++i)
    for (size_t j = i + 1; j < table.records.size(); ++j) {
      const Laurent& a = table.records[i].jones;
      const Laurent& b = table.records[j].jones;
      CHECK(a != b);
      CHECK(a != b.mirrored());
    }
}

TEST_CASE("KNOTILE_TABLE overrides the bundled table path") {
  setenv("KNOTILE_TABLE", "/tmp/other_table.txt", 1);
  CHECK(default_table_path() == "/tmp/other_table.txt");
  unsetenv("KNOTILE_TABLE");
  CHECK(default_table_path() != "/tmp/other_table.txt");
}
