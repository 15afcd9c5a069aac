#pragma once
// Kauffman bracket state sum, Jones normalization, and identification of
// traced diagrams against the bundled prime-knot table.

#include <optional>
#include <string>
#include <vector>

#include "knotile/laurent.hpp"
#include "knotile/trace.hpp"

namespace knotile {

inline constexpr int kDefaultCrossingCap = 20;

Laurent bracket_delta();  // -A^2 - A^-2, the loop factor

// State sum over all 2^c smoothings; each state contributes
// A^(a-b) * delta^(loops-1). Throws if the crossing count exceeds the cap.
Laurent bracket(const PlanarDiagram& d, int crossing_cap = kDefaultCrossingCap);

// (-A^3)^(-writhe) * bracket
Laurent jones(const PlanarDiagram& d, int crossing_cap = kDefaultCrossingCap);

struct KnotRecord {
  std::string name;
  int crossing_number = 0;
  PlanarDiagram pd;
  Laurent jones;               // computed at load
  std::string chirality_note;  // free text from the table file
  bool ambiguous = false;      // set when the distinctness audit finds a clash
};

// The two split-free links identified besides prime knots (by component
// count, crossing count and raw bracket up to mirror).
struct LinkRecord {
  std::string name;
  int components = 0;
  int crossings = 0;
  Laurent bracket;
};

struct KnotTable {
  std::vector<KnotRecord> records;
  std::vector<LinkRecord> links;
  const KnotRecord* find(const std::string& name) const;
};

// File format: `name;crossing_number;X(a,b,c,d),...[;chirality note]` per
// line, '#' comments. Validation failures throw with the record name.
KnotTable load_knot_table(const std::string& path);
KnotTable load_knot_table_text(const std::string& text);

// KNOTILE_TABLE env var, else the bundled table
std::string default_table_path();

struct IdentifyResult {
  enum class Kind { Empty, Unknot, Unlink, Matched, Unknown };
  Kind kind = Kind::Unknown;
  int unlink_components = 0;                          // for Kind::Unlink
  std::vector<std::pair<std::string, bool>> matches;  // (name, mirror flag)
  std::string to_string() const;
};

IdentifyResult identify(const PlanarDiagram& d, const KnotTable& table,
                        int crossing_cap = kDefaultCrossingCap);

}  // namespace knotile
