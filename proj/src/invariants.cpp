#include "knotile/invariants.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifndef KNOTILE_DATA_DIR
#define KNOTILE_DATA_DIR "data"
#endif

namespace knotile {

Laurent bracket_delta() {
  return Laurent::monomial(2, -1) + Laurent::monomial(-2, -1);
}

namespace {

int uf_find(std::vector<int>& p, int x) {
  while (p[x] != x) {
    p[x] = p[p[x]];
    x = p[x];
  }
  return x;
}

Laurent delta_power(int k) {
  Laurent out = Laurent::one();
  Laurent delta = bracket_delta();
  for (int i = 0; i < k; ++i) out = out * delta;
  return out;
}

}  // namespace

Laurent bracket(const PlanarDiagram& d, int crossing_cap) {
  const int c = int(d.crossings.size());
  if (c > crossing_cap)
    throw std::runtime_error("bracket: crossing cap exceeded");
  const int k0 = d.circle_components;

  if (c == 0) return delta_power(std::max(0, k0 - 1));

  // tally the 2^c states by (#A-smoothings, loop count)
  const int max_loops = d.arc_count;
  std::vector<std::vector<long long>> tally(
      size_t(c) + 1, std::vector<long long>(size_t(max_loops) + 1, 0));

  std::vector<int> parent(d.arc_count);
  for (uint32_t state = 0; state < (1u << c); ++state) {
    for (int i = 0; i < d.arc_count; ++i) parent[i] = i;
    int a_count = 0;
    for (int i = 0; i < c; ++i) {
      const auto& x = d.crossings[i].arc;
      if (state >> i & 1u) {
        // A-smoothing joins (arc0,arc1) and (arc2,arc3)
        ++a_count;
        parent[uf_find(parent, x[0])] = uf_find(parent, x[1]);
        parent[uf_find(parent, x[2])] = uf_find(parent, x[3]);
      } else {
        parent[uf_find(parent, x[0])] = uf_find(parent, x[3]);
        parent[uf_find(parent, x[1])] = uf_find(parent, x[2]);
      }
    }
    int loops = 0;
    for (int i = 0; i < d.arc_count; ++i)
      if (uf_find(parent, i) == i) ++loops;
    tally[size_t(a_count)][size_t(loops)] += 1;
  }

  std::vector<Laurent> dpow(size_t(max_loops) + size_t(k0) + 1);
  dpow[0] = Laurent::one();
  for (size_t i = 1; i < dpow.size(); ++i) dpow[i] = dpow[i - 1] * bracket_delta();

  Laurent out;
  for (int a = 0; a <= c; ++a)
    for (int loops = 1; loops <= max_loops; ++loops) {
      long long cnt = tally[size_t(a)][size_t(loops)];
      if (cnt == 0) continue;
      int exp = a - (c - a);
      out += dpow[size_t(loops + k0 - 1)].shifted(exp) * Laurent::monomial(0, cnt);
    }
  return out;
}

Laurent jones(const PlanarDiagram& d, int crossing_cap) {
  Laurent br = bracket(d, crossing_cap);
  int w = d.writhe();
  // (-A^3)^(-w) = (-1)^w A^(-3w)
  Laurent factor = Laurent::monomial(-3 * w, (w % 2 == 0) ? 1 : -1);
  return br * factor;
}

const KnotRecord* KnotTable::find(const std::string& name) const {
  for (const auto& r : records)
    if (r.name == name) return &r;
  return nullptr;
}

namespace {

// Hopf link and Solomon's knot (the (2,2) and (2,4) torus links), the only
// multi-component targets identified besides unlinks.
constexpr const char* kHopfPd = "X(2,4,3,1),X(4,2,1,3)";
constexpr const char* kSolomonPd = "X(2,4,3,1),X(4,6,5,3),X(6,8,7,5),X(8,2,1,7)";

std::vector<LinkRecord> builtin_links() {
  std::vector<LinkRecord> out;
  PlanarDiagram hopf = PlanarDiagram::parse(kHopfPd);
  PlanarDiagram solomon = PlanarDiagram::parse(kSolomonPd);
  out.push_back({"2^2_1", hopf.component_count(), 2, bracket(hopf)});
  out.push_back({"4^2_1", solomon.component_count(), 4, bracket(solomon)});
  return out;
}

}  // namespace

KnotTable load_knot_table_text(const std::string& text) {
  KnotTable table;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    size_t p1 = line.find(';');
    size_t p2 = (p1 == std::string::npos) ? std::string::npos : line.find(';', p1 + 1);
    if (p2 == std::string::npos)
      throw std::runtime_error("knot table: bad line: " + line);
    size_t p3 = line.find(';', p2 + 1);
    KnotRecord rec;
    rec.name = line.substr(0, p1);
    rec.crossing_number = std::stoi(line.substr(p1 + 1, p2 - p1 - 1));
    std::string pd_text = (p3 == std::string::npos)
                              ? line.substr(p2 + 1)
                              : line.substr(p2 + 1, p3 - p2 - 1);
    if (p3 != std::string::npos) rec.chirality_note = line.substr(p3 + 1);
    try {
      rec.pd = PlanarDiagram::parse(pd_text);
    } catch (const std::exception& e) {
      throw std::runtime_error("knot table: record " + rec.name + ": " + e.what());
    }
    if (int(rec.pd.crossings.size()) != rec.crossing_number)
      throw std::runtime_error("knot table: record " + rec.name +
                               ": crossing count mismatch");
    rec.jones = jones(rec.pd);
    table.records.push_back(std::move(rec));
  }

  // distinctness audit: jones values must differ pairwise, directly and
  // under the mirror substitution; clashes are only downgraded
  for (size_t i = 0; i < table.records.size(); ++i)
    for (size_t j = i + 1; j < table.records.size(); ++j) {
      const Laurent& a = table.records[i].jones;
      const Laurent& b = table.records[j].jones;
      if (a == b || a == b.mirrored()) {
        table.records[i].ambiguous = true;
        table.records[j].ambiguous = true;
      }
    }

  table.links = builtin_links();
  return table;
}

KnotTable load_knot_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("knot table: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_knot_table_text(ss.str());
}

std::string default_table_path() {
  if (const char* env = std::getenv("KNOTILE_TABLE"); env && *env)
    return env;
  return std::string(KNOTILE_DATA_DIR) + "/knot_table.txt";
}

std::string IdentifyResult::to_string() const {
  switch (kind) {
    case Kind::Empty: return "empty";
    case Kind::Unknot: return "unknot";
    case Kind::Unlink: return "unlink-" + std::to_string(unlink_components);
    case Kind::Unknown: return "unknown";
    case Kind::Matched: {
      std::string out;
      for (size_t i = 0; i < matches.size(); ++i) {
        if (i) out.push_back('|');
        out += matches[i].first;
        if (matches[i].second) out += "[mirror]";
      }
      return out;
    }
  }
  return "unknown";
}

IdentifyResult identify(const PlanarDiagram& d, const KnotTable& table,
                        int crossing_cap) {
  IdentifyResult res;
  const int comps = d.component_count();
  if (comps == 0) {
    res.kind = IdentifyResult::Kind::Empty;
    return res;
  }
  Laurent j = jones(d, crossing_cap);
  if (comps == 1) {
    if (j.is_one()) {
      res.kind = IdentifyResult::Kind::Unknot;
      return res;
    }
    Laurent jm = j.mirrored();
    for (const auto& rec : table.records) {
      if (rec.jones == j) res.matches.push_back({rec.name, false});
      else if (rec.jones == jm) res.matches.push_back({rec.name, true});
    }
    res.kind = res.matches.empty() ? IdentifyResult::Kind::Unknown
                                   : IdentifyResult::Kind::Matched;
    return res;
  }

  if (j == delta_power(comps - 1)) {
    res.kind = IdentifyResult::Kind::Unlink;
    res.unlink_components = comps;
    return res;
  }
  const int c = int(d.crossings.size());
  Laurent br = bracket(d, crossing_cap);
  Laurent brm = br.mirrored();
  for (const auto& link : table.links) {
    if (link.components != comps || link.crossings != c) continue;
    if (link.bracket == br) res.matches.push_back({link.name, false});
    else if (link.bracket == brm) res.matches.push_back({link.name, true});
  }
  res.kind = res.matches.empty() ? IdentifyResult::Kind::Unknown
                                 : IdentifyResult::Kind::Matched;
  return res;
}

}  // namespace knotile
