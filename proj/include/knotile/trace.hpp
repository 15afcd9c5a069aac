#pragma once
// Extract the underlying link diagram from a knot mosaic: closed components,
// PD code with crossing signs, split trivial components, reducedness, writhe.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "knotile/tiles.hpp"

namespace knotile {

// One crossing of a planar diagram. `arc` lists the four incident arc ids
// counterclockwise starting from the incoming under-strand; `sign` is the
// crossing sign under the diagram's chosen component orientations.
struct PdCrossing {
  std::array<int, 4> arc;
  int sign = 0;
};

struct PlanarDiagram {
  int arc_count = 0;
  std::vector<PdCrossing> crossings;
  std::vector<std::vector<int>> components;  // arc ids along each closed curve
  int circle_components = 0;                 // closed curves meeting no crossing

  int component_count() const {
    return int(components.size()) + circle_components;
  }
  int writhe() const;

  std::string to_string() const;  // "X(a,b,c,d),X(...)" with 1-based arcs
  // Parses the X(...) form, reconstructs component orientations from the
  // incoming-under convention and computes signs. Throws on malformed input,
  // on arc labels not appearing exactly twice, or on inconsistent orientation.
  static PlanarDiagram parse(const std::string& text);
};

struct TraceComponent {
  std::vector<int> arcs;                       // empty for a crossing-free circle
  std::vector<std::pair<int, int>> tiles;      // (row,col) cells visited, in order
};

struct TraceResult {
  PlanarDiagram diagram;
  std::vector<TraceComponent> components;

  int component_count() const { return int(components.size()); }
  int crossing_count() const { return int(diagram.crossings.size()); }
};

TraceResult trace(const KnotMosaic& m);

// Indices of components incident to zero crossings; each such component
// bounds a disk meeting no other strand, hence is an unknotted split piece.
std::vector<int> split_trivial_components(const TraceResult& t);

// True iff no crossing is nugatory. A crossing is nugatory when one of its
// arcs is a loop back to itself or when it is a cut vertex of the 4-valent
// projection multigraph.
bool is_reduced(const PlanarDiagram& d);

int writhe(const PlanarDiagram& d);

}  // namespace knotile
