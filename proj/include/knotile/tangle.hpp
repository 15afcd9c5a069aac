#pragma once
// Diagram builders: twist tangles, rational tangles from continued-fraction
// coefficients, tangle sums, closures, and braid closures. These mint the
// planar diagrams for the bundled knot table.

#include <string>
#include <vector>

#include "knotile/trace.hpp"

namespace knotile {

class Tangle {
 public:
  // two horizontal strands (NW-NE, SW-SE)
  static Tangle zero();
  // two vertical strands (NW-SW, NE-SE)
  static Tangle infinity();

  // add one crossing on the two right ends (NE,SE); n<0 gives mirrored twists
  Tangle& twist_right(int n);
  // add one crossing on the two bottom ends (SW,SE)
  Tangle& twist_bottom(int n);

  // glue: this.NE-other.NW, this.SE-other.SW
  static Tangle hsum(Tangle a, const Tangle& b);

  // join NW-NE and SW-SE, then orient and emit
  PlanarDiagram numerator_closure() const;

  // Rational tangle for coefficients a1..ak, alternating twist directions.
  // vertical_first starts with bottom twists on the infinity tangle,
  // otherwise right twists on the zero tangle.
  static Tangle rational(const std::vector<int>& coeffs, bool vertical_first);

  // Montesinos component for digits a1..ak: alternating groups chosen so the
  // last group is vertical (fraction 1/[ak;...;a1]).
  static Tangle montesinos_component(const std::vector<int>& coeffs);

 private:
  struct Crossing {
    // terminal ids counterclockwise: NW, SW, SE, NE
    int t[4];
    // 0: NW-SE strand under; 1: SW-NE strand under
    int under_diag;
  };
  std::vector<Crossing> crossings_;
  std::vector<int> uf_;  // terminal merge structure
  int nw_ = -1, ne_ = -1, sw_ = -1, se_ = -1;

  int new_terminal();
  void join(int a, int b);
  int find(int t) const;
  friend PlanarDiagram close_tangle(Tangle, int);
  friend PlanarDiagram braid_closure(int, const std::vector<int>&);
  friend PlanarDiagram braid_closure_tangles(
      int, const std::vector<std::pair<int, Tangle>>&);
};

// closure of a braid word on `strands` strands; letters are +-g for
// generator sigma_g (1-based), positive = NW-SE strand over
PlanarDiagram braid_closure(int strands, const std::vector<int>& word);

// closure of a braid whose letters are whole tangles spliced into adjacent
// strands: letter (g, T) hangs T's NW,NE ports on strands g, g+1
PlanarDiagram braid_closure_tangles(
    int strands, const std::vector<std::pair<int, Tangle>>& letters);

}  // namespace knotile
