// Regenerates data/knot_table.txt: builds a planar diagram for every prime
// knot through 9 crossings (rational knots from their continued-fraction
// twist vectors, Montesinos knots from tangle sums, the remaining knots from
// braid words), audits each diagram, and writes the PD codes.
//
// Audits per record:
//   - determinant |V(-1)| matches the standard value,
//   - Jones span equals 4c for the alternating knots and is smaller for the
//     non-alternating ones (so every alternating diagram really is reduced
//     alternating of minimal crossing number),
//   - all 84 Jones polynomials pairwise distinct up to mirror.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "knotile/invariants.hpp"
#include "knotile/tangle.hpp"

using namespace knotile;

namespace {

struct Entry {
  std::string name;
  int crossings;
  long long det;
  bool alternating;
  // construction: "r" rational (coeffs), "m" montesinos (components + e),
  // "b" braid word (strands + word), "t" tangle braid, "p" PD literal
  char how;
  std::vector<std::vector<int>> parts;
  int extra = 0;  // montesinos integer twists / braid strand count
  std::string pd_text;
};

std::vector<int> digits(const std::string& s) {
  std::vector<int> out;
  int sign = 1;
  for (char c : s) {
    if (c == '-') {
      sign = -1;
      continue;
    }
    out.push_back(sign * (c - '0'));
    sign = 1;
  }
  return out;
}

Entry rat(const std::string& name, long long det, const std::string& conway) {
  std::vector<int> d = digits(conway);
  int c = 0;
  for (int x : d) c += x;
  return {name, c, det, true, 'r', {d}, 0};
}

Entry mont(const std::string& name, long long det,
           const std::vector<std::string>& comps, int e, bool alternating) {
  int c = std::abs(e);
  std::vector<std::vector<int>> parts;
  for (const auto& s : comps) {
    parts.push_back(digits(s));
    for (int x : parts.back()) c += std::abs(x);
  }
  return {name, c, det, alternating, 'm', parts, e};
}

Entry braid(const std::string& name, int crossings, long long det,
            bool alternating, int strands, const std::vector<int>& word) {
  return {name, crossings, det, alternating, 'b', {word}, strands, ""};
}

Entry pd_literal(const std::string& name, int crossings, long long det,
                 bool alternating, const std::string& pd) {
  return {name, crossings, det, alternating, 'p', {}, 0, pd};
}

std::vector<Entry> table_entries();

PlanarDiagram build(const Entry& e) {
  if (e.how == 'r') {
    // the last twist group is horizontal, so the numerator closure realizes
    // the continued fraction of the twist vector
    bool vertical_first = e.parts[0].size() % 2 == 0;
    return Tangle::rational(e.parts[0], vertical_first).numerator_closure();
  }
  if (e.how == 'm') {
    Tangle sum = Tangle::montesinos_component(e.parts[0]);
    for (size_t i = 1; i < e.parts.size(); ++i)
      sum = Tangle::hsum(std::move(sum), Tangle::montesinos_component(e.parts[i]));
    if (e.extra) sum.twist_right(e.extra);
    return sum.numerator_closure();
  }
  if (e.how == 't') {
    // 9_49: a 6*-polyhedron filling; slots alternate between the two braid
    // positions, each slot a one-group rational tangle (k, vertical?)
    std::vector<std::pair<int, Tangle>> letters;
    int pos = 1;
    for (const auto& slot : e.parts) {
      letters.push_back(
          {pos, Tangle::rational({slot[0]}, slot[1] != 0)});
      pos = 3 - pos;
    }
    return braid_closure_tangles(3, letters);
  }
  if (e.how == 'p') return PlanarDiagram::parse(e.pd_text);
  return braid_closure(e.extra, e.parts[0]);
}

}  // namespace

int main(int argc, char** argv) {
  std::string out_path = argc > 1 ? argv[1] : "data/knot_table.txt";
  std::vector<Entry> entries = table_entries();

  int failures = 0;
  std::vector<std::pair<Entry, PlanarDiagram>> built;
  for (const Entry& e : entries) {
    PlanarDiagram pd = build(e);
    std::string err;
    if (pd.component_count() != 1) err = "not a knot";
    Laurent v = jones(pd);
    if (err.empty()) {
      long long det = 0;
      bool div4 = v.exponents_divisible_by(4);
      if (div4) det = std::llabs(v.eval_t_minus_one());
      if (!div4) err = "jones exponents not divisible by 4";
      else if (det != e.det)
        err = "determinant " + std::to_string(det) + " != " +
              std::to_string(e.det);
    }
    if (err.empty()) {
      int span = v.max_exp() - v.min_exp();
      if (e.alternating && span != 4 * e.crossings)
        err = "span " + std::to_string(span) + " != 4c";
      if (!e.alternating && span >= 4 * e.crossings)
        err = "span too wide for a non-alternating knot";
    }
    if (int(pd.crossings.size()) != e.crossings && err.empty())
      err = "diagram has " + std::to_string(pd.crossings.size()) +
            " crossings, expected " + std::to_string(e.crossings);
    if (!err.empty()) {
      std::cerr << "FAIL " << e.name << ": " << err << "\n";
      ++failures;
      continue;
    }
    built.push_back({e, pd});
  }

  // pairwise distinctness up to mirror
  for (size_t i = 0; i < built.size(); ++i) {
    Laurent vi = jones(built[i].second);
    for (size_t j = i + 1; j < built.size(); ++j) {
      Laurent vj = jones(built[j].second);
      if (vi == vj || vi == vj.mirrored()) {
        std::cerr << "FAIL distinctness: " << built[i].first.name << " vs "
                  << built[j].first.name << "\n";
        ++failures;
      }
    }
  }

  if (failures) {
    std::cerr << failures << " audit failures; table not written\n";
    return 1;
  }

  std::ofstream out(out_path);
  out << "# Prime knots through 9 crossings: name;crossings;PD code\n";
  out << "# PD convention: X(a,b,c,d) lists arcs counterclockwise from the\n";
  out << "# incoming under-strand. Chirality is as constructed; identification\n";
  out << "# reports a mirror flag, so either chirality serves.\n";
  for (const auto& [e, pd] : built)
    out << e.name << ";" << e.crossings << ";" << pd.to_string() << "\n";
  std::cout << "wrote " << built.size() << " records to " << out_path << "\n";
  return 0;
}

namespace {

std::vector<Entry> table_entries() {
  std::vector<Entry> t;
  // two-bridge knots: Conway twist vectors
  t.push_back(rat("3_1", 3, "3"));
  t.push_back(rat("4_1", 5, "22"));
  t.push_back(rat("5_1", 5, "5"));
  t.push_back(rat("5_2", 7, "32"));
  t.push_back(rat("6_1", 9, "42"));
  t.push_back(rat("6_2", 11, "312"));
  t.push_back(rat("6_3", 13, "2112"));
  t.push_back(rat("7_1", 7, "7"));
  t.push_back(rat("7_2", 11, "52"));
  t.push_back(rat("7_3", 13, "43"));
  t.push_back(rat("7_4", 15, "313"));
  t.push_back(rat("7_5", 17, "322"));
  t.push_back(rat("7_6", 19, "2212"));
  t.push_back(rat("7_7", 21, "21112"));
  t.push_back(rat("8_1", 13, "62"));
  t.push_back(rat("8_2", 17, "512"));
  t.push_back(rat("8_3", 17, "44"));
  t.push_back(rat("8_4", 19, "413"));
  t.push_back(rat("8_6", 23, "332"));
  t.push_back(rat("8_7", 23, "4112"));
  t.push_back(rat("8_8", 25, "2312"));
  t.push_back(rat("8_9", 25, "3113"));
  t.push_back(rat("8_11", 27, "3212"));
  t.push_back(rat("8_12", 29, "2222"));
  t.push_back(rat("8_13", 29, "31112"));
  t.push_back(rat("8_14", 31, "22112"));
  t.push_back(rat("9_1", 9, "9"));
  t.push_back(rat("9_2", 15, "72"));
  t.push_back(rat("9_3", 19, "63"));
  t.push_back(rat("9_4", 21, "54"));
  t.push_back(rat("9_5", 23, "513"));
  t.push_back(rat("9_6", 27, "522"));
  t.push_back(rat("9_7", 29, "342"));
  t.push_back(rat("9_8", 31, "2412"));
  t.push_back(rat("9_9", 31, "423"));
  t.push_back(rat("9_10", 33, "333"));
  t.push_back(rat("9_11", 33, "4122"));
  t.push_back(rat("9_12", 35, "4212"));
  t.push_back(rat("9_13", 37, "3213"));
  t.push_back(rat("9_14", 37, "41112"));
  t.push_back(rat("9_15", 39, "2322"));
  t.push_back(rat("9_17", 39, "21312"));
  t.push_back(rat("9_18", 41, "3222"));
  t.push_back(rat("9_19", 41, "23112"));
  t.push_back(rat("9_20", 41, "31212"));
  t.push_back(rat("9_21", 43, "31122"));
  t.push_back(rat("9_23", 45, "22122"));
  t.push_back(rat("9_26", 47, "311112"));
  t.push_back(rat("9_27", 49, "212112"));
  t.push_back(rat("9_31", 55, "2111112"));
  // Montesinos knots: tangle sums, optional integer twist
  t.push_back(mont("8_5", 21, {"3", "3", "2"}, 0, true));
  t.push_back(mont("8_10", 27, {"3", "21", "2"}, 0, true));
  t.push_back(mont("8_15", 33, {"21", "21", "2"}, 0, true));
  t.push_back(mont("8_19", 3, {"3", "3", "2"}, -1, false));
  t.push_back(mont("8_20", 9, {"3", "21", "2"}, -1, false));
  t.push_back(mont("8_21", 15, {"21", "21", "2"}, -1, false));
  t.push_back(mont("9_16", 39, {"3", "3", "2"}, 1, true));
  t.push_back(mont("9_22", 43, {"211", "3", "2"}, 0, true));
  t.push_back(mont("9_24", 45, {"3", "21", "2"}, 1, true));
  t.push_back(mont("9_25", 47, {"22", "21", "2"}, 0, true));
  t.push_back(mont("9_28", 51, {"21", "21", "2"}, 1, true));
  t.push_back(mont("9_30", 53, {"211", "21", "2"}, 0, true));
  t.push_back(mont("9_35", 27, {"3", "3", "3"}, 0, true));
  t.push_back(mont("9_36", 37, {"22", "3", "2"}, 0, true));
  t.push_back(mont("9_37", 45, {"3", "21", "21"}, 0, true));
  t.push_back(mont("9_42", 7, {"22", "3", "2"}, -1, false));
  t.push_back(mont("9_43", 13, {"211", "3", "2"}, -1, false));
  t.push_back(mont("9_44", 17, {"22", "21", "2"}, -1, false));
  t.push_back(mont("9_45", 23, {"211", "21", "2"}, -1, false));
  t.push_back(mont("9_46", 9, {"3", "3", "-3"}, 0, false));
  t.push_back(mont("9_48", 27, {"21", "21", "-3"}, 0, false));
  // remaining knots: braid closures and minimal-crossing diagrams pinned by
  // the audits (the Jones span certifies crossing number and alternation,
  // the determinant separates the candidates)
  t.push_back(braid("8_16", 8, 35, true, 3, {1, 1, -2, 1, 1, -2, 1, -2}));
  t.push_back(pd_literal(
      "8_17", 8, 37, true,
      "X(8,2,9,1),X(16,12,1,11),X(12,7,13,8),X(2,13,3,14),X(6,15,7,16),"
      "X(14,3,15,4),X(10,6,11,5),X(4,10,5,9)"));
  t.push_back(braid("8_18", 8, 45, true, 3, {1, -2, 1, -2, 1, -2, 1, -2}));
  t.push_back(pd_literal(
      "9_29", 9, 51, true,
      "X(18,5,1,6),X(8,17,9,18),X(4,10,5,9),X(6,14,7,13),X(12,8,13,7),"
      "X(16,11,17,12),X(10,4,11,3),X(2,15,3,16),X(14,1,15,2)"));
  t.push_back(pd_literal(
      "9_32", 9, 59, true,
      "X(9,18,10,1),X(5,11,6,10),X(11,7,12,6),X(17,5,18,4),X(7,17,8,16),"
      "X(15,12,16,13),X(1,15,2,14),X(3,8,4,9),X(13,3,14,2)"));
  t.push_back(pd_literal(
      "9_33", 9, 61, true,
      "X(11,18,12,1),X(13,11,14,10),X(17,12,18,13),X(9,4,10,5),X(3,17,4,16),"
      "X(15,8,16,9),X(7,3,8,2),X(5,14,6,15),X(1,7,2,6)"));
  t.push_back(pd_literal(
      "9_34", 9, 69, true,
      "X(5,18,6,1),X(17,6,18,7),X(13,5,14,4),X(7,13,8,12),X(11,17,12,16),"
      "X(1,11,2,10),X(3,8,4,9),X(15,2,16,3),X(9,14,10,15)"));
  t.push_back(pd_literal(
      "9_38", 9, 57, true,
      "X(18,12,1,11),X(4,18,5,17),X(12,4,13,3),X(16,6,17,5),X(6,14,7,13),"
      "X(2,8,3,7),X(10,16,11,15),X(14,10,15,9),X(8,2,9,1)"));
  t.push_back(pd_literal(
      "9_39", 9, 55, true,
      "X(18,11,1,12),X(10,1,11,2),X(2,7,3,8),X(6,17,7,18),X(16,3,17,4),"
      "X(8,16,9,15),X(12,5,13,6),X(4,13,5,14),X(14,10,15,9)"));
  // 9_40 is the nine-crossing basic polyhedron: the medial diagram of the
  // triangular prism
  t.push_back(pd_literal(
      "9_40", 9, 75, true,
      "X(7,8,2,1),X(11,12,3,2),X(15,16,1,3),X(4,5,9,10),X(5,6,13,14),"
      "X(6,4,17,18),X(16,17,10,7),X(8,9,14,11),X(12,13,18,15)"));
  t.push_back(pd_literal(
      "9_41", 9, 49, true,
      "X(18,11,1,12),X(10,1,11,2),X(6,17,7,18),X(16,7,17,8),X(2,16,3,15),"
      "X(8,4,9,3),X(14,10,15,9),X(12,5,13,6),X(4,13,5,14)"));
  t.push_back(braid("9_47", 9, 27, false, 4, {1, 2, -3, 2, 1, 2, -3, 2, -3}));
  // 9_49: 6*-polyhedron filling; slots (twists, vertical?) on positions 1,2
  t.push_back(Entry{"9_49", 9, 25, false, 't',
                    {{1, 1}, {-1, 1}, {1, 1}, {2, 1}, {2, 1}, {-2, 0}},
                    0,
                    ""});
  return t;
}

}  // namespace
