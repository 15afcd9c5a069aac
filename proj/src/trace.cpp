#include "knotile/trace.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace knotile {

namespace {

using E = EdgeSide;

// counterclockwise edge order in standard (y-up) orientation
constexpr E ccw_next(E e) {
  switch (e) {
    case E::Top: return E::Left;
    case E::Left: return E::Bottom;
    case E::Bottom: return E::Right;
    case E::Right: return E::Top;
  }
  return E::Top;
}

struct CrossingBuild {
  std::array<int, 4> slot_arc = {-1, -1, -1, -1};  // indexed by EdgeSide
  int under_in = -1;  // edge where the under-strand enters
  int over_in = -1;   // edge where the over-strand enters
};

int strand_index_for_edge(TileKind k, E e) {
  auto strands = tile_strands(k);
  for (size_t i = 0; i < strands.size(); ++i)
    if (strands[i].a == e || strands[i].b == e) return int(i);
  return -1;
}

}  // namespace

TraceResult trace(const KnotMosaic& km) {
  const Mosaic& m = km.mosaic();
  const int n = m.size();
  TraceResult out;

  // crossing cells -> crossing index, in row-major order
  std::map<std::pair<int, int>, int> crossing_at;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (m.at(r, c) == TileKind::CrossA || m.at(r, c) == TileKind::CrossB)
        crossing_at[{r, c}] = int(crossing_at.size());
  std::vector<CrossingBuild> cross(crossing_at.size());

  // visited[cell][strand]
  std::vector<std::array<char, 2>> visited(size_t(n) * n, {0, 0});
  auto vidx = [n](int r, int c) { return size_t(r) * n + c; };

  int next_arc = 0;

  for (int r0 = 0; r0 < n; ++r0)
    for (int c0 = 0; c0 < n; ++c0) {
      TileKind k0 = m.at(r0, c0);
      auto strands0 = tile_strands(k0);
      for (size_t s0 = 0; s0 < strands0.size(); ++s0) {
        if (visited[vidx(r0, c0)][s0]) continue;

        TraceComponent comp;
        const int first_arc = next_arc;
        int cur_arc = next_arc++;
        std::vector<int> comp_arcs = {cur_arc};
        int crossings_met = 0;

        int r = r0, c = c0;
        E entry = strands0[s0].a;
        while (true) {
          TileKind k = m.at(r, c);
          int si = strand_index_for_edge(k, entry);
          visited[vidx(r, c)][si] = 1;
          comp.tiles.push_back({r, c});

          if (k == TileKind::CrossA || k == TileKind::CrossB) {
            ++crossings_met;
            CrossingBuild& cb = cross[crossing_at[{r, c}]];
            Strand st = tile_strands(k)[si];
            E exit = (st.a == entry) ? st.b : st.a;
            bool under = (si == 1);  // strand 0 is the over-strand
            cb.slot_arc[size_t(entry)] = cur_arc;
            int out_arc = next_arc++;
            cb.slot_arc[size_t(exit)] = out_arc;
            if (under) cb.under_in = int(entry);
            else cb.over_in = int(entry);
            cur_arc = out_arc;
            comp_arcs.push_back(cur_arc);
            // advance
            int dr = (exit == E::Bottom) - (exit == E::Top);
            int dc = (exit == E::Right) - (exit == E::Left);
            r += dr;
            c += dc;
            entry = opposite(exit);
          } else {
            Strand st = tile_strands(k)[si];
            E exit = (st.a == entry) ? st.b : st.a;
            int dr = (exit == E::Bottom) - (exit == E::Top);
            int dc = (exit == E::Right) - (exit == E::Left);
            r += dr;
            c += dc;
            entry = opposite(exit);
          }
          if (r == r0 && c == c0 && entry == strands0[s0].a &&
              strand_index_for_edge(m.at(r, c), entry) == int(s0))
            break;
        }

        if (crossings_met == 0) {
          // crossing-free circle
          next_arc = first_arc;  // recycle the unused id
          out.diagram.circle_components++;
          out.components.push_back(std::move(comp));
        } else {
          // walk closed mid-arc: the last arc is the first arc
          int last_arc = cur_arc;
          next_arc--;
          for (auto& cb : cross)
            for (auto& a : cb.slot_arc)
              if (a == last_arc) a = first_arc;
          comp_arcs.pop_back();
          comp.arcs = std::move(comp_arcs);
          out.diagram.components.push_back(comp.arcs);
          out.components.push_back(std::move(comp));
        }
      }
    }

  out.diagram.arc_count = next_arc;
  out.diagram.crossings.reserve(cross.size());
  for (const CrossingBuild& cb : cross) {
    PdCrossing pc;
    E u = E(cb.under_in);
    E e = u;
    for (int i = 0; i < 4; ++i) {
      pc.arc[i] = cb.slot_arc[size_t(e)];
      e = ccw_next(e);
    }
    // positive crossing: the over-strand enters at the slot one quarter turn
    // clockwise from the under entry (so its direction turned ccw by 90
    // degrees gives the under direction)
    pc.sign = (E(cb.over_in) == ccw_next(u)) ? -1 : +1;
    out.diagram.crossings.push_back(pc);
  }
  return out;
}

std::vector<int> split_trivial_components(const TraceResult& t) {
  std::vector<int> out;
  for (size_t i = 0; i < t.components.size(); ++i)
    if (t.components[i].arcs.empty()) out.push_back(int(i));
  return out;
}

int PlanarDiagram::writhe() const {
  int w = 0;
  for (const auto& x : crossings) w += x.sign;
  return w;
}

int writhe(const PlanarDiagram& d) { return d.writhe(); }

bool is_reduced(const PlanarDiagram& d) {
  const int nc = int(d.crossings.size());
  if (nc == 0) return true;

  // arc -> its two (crossing, slot) endpoints
  std::vector<std::array<int, 2>> ends(d.arc_count, {-1, -1});
  for (int i = 0; i < nc; ++i)
    for (int s = 0; s < 4; ++s) {
      int a = d.crossings[i].arc[s];
      if (ends[a][0] < 0) ends[a][0] = i;
      else ends[a][1] = i;
    }

  // self-loop arc => removable kink
  std::vector<std::vector<int>> adj(nc);
  for (int a = 0; a < d.arc_count; ++a) {
    if (ends[a][0] < 0) continue;
    int u = ends[a][0], v = ends[a][1];
    if (u == v) return false;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }

  // articulation vertices of the 4-valent multigraph (iterative DFS; one
  // traversal edge of each parallel bundle is skipped, the rest count back)
  std::vector<int> disc(nc, -1), low(nc, 0);
  int timer = 0;
  for (int start = 0; start < nc; ++start) {
    if (disc[start] >= 0) continue;
    struct Frame {
      int v, parent;
      size_t i;
      bool skipped_parent_edge;
    };
    std::vector<Frame> st;
    st.push_back({start, -1, 0, false});
    disc[start] = low[start] = timer++;
    int root_children = 0;
    while (!st.empty()) {
      Frame& f = st.back();
      if (f.i < adj[f.v].size()) {
        int to = adj[f.v][f.i++];
        if (to == f.parent && !f.skipped_parent_edge) {
          f.skipped_parent_edge = true;  // multi-edges beyond the first count
          continue;
        }
        if (disc[to] >= 0) {
          low[f.v] = std::min(low[f.v], disc[to]);
        } else {
          disc[to] = low[to] = timer++;
          if (f.v == start) ++root_children;
          st.push_back({to, f.v, 0, false});
        }
      } else {
        int v = f.v, parent = f.parent;
        st.pop_back();
        if (parent >= 0) {
          low[parent] = std::min(low[parent], low[v]);
          if (parent != start && low[v] >= disc[parent]) return false;
        }
      }
    }
    if (root_children > 1) return false;
  }
  return true;
}

std::string PlanarDiagram::to_string() const {
  std::string out;
  for (size_t i = 0; i < crossings.size(); ++i) {
    if (i) out.push_back(',');
    out += "X(";
    for (int s = 0; s < 4; ++s) {
      if (s) out.push_back(',');
      out += std::to_string(crossings[i].arc[s] + 1);
    }
    out.push_back(')');
  }
  return out;
}

PlanarDiagram PlanarDiagram::parse(const std::string& text) {
  PlanarDiagram d;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  std::vector<int> labels;
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] == ',') { ++i; continue; }
    if (text[i] != 'X') throw std::runtime_error("pd: expected X(...)");
    ++i;
    skip_ws();
    if (i >= text.size() || text[i] != '(') throw std::runtime_error("pd: expected (");
    ++i;
    PdCrossing x;
    for (int s = 0; s < 4; ++s) {
      skip_ws();
      size_t st = i;
      while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == st) throw std::runtime_error("pd: expected arc label");
      x.arc[s] = std::stoi(text.substr(st, i - st));
      labels.push_back(x.arc[s]);
      skip_ws();
      if (s < 3) {
        if (i >= text.size() || text[i] != ',') throw std::runtime_error("pd: expected ,");
        ++i;
      }
    }
    if (i >= text.size() || text[i] != ')') throw std::runtime_error("pd: expected )");
    ++i;
    d.crossings.push_back(x);
  }

  // compact labels, check double occurrence
  std::sort(labels.begin(), labels.end());
  std::vector<int> uniq;
  for (size_t j = 0; j < labels.size(); j += 2) {
    if (j + 1 >= labels.size() || labels[j] != labels[j + 1])
      throw std::runtime_error("pd: arc label does not appear exactly twice");
    if (j + 2 < labels.size() && labels[j + 2] == labels[j])
      throw std::runtime_error("pd: arc label appears more than twice");
    uniq.push_back(labels[j]);
  }
  auto compact = [&uniq](int lab) {
    return int(std::lower_bound(uniq.begin(), uniq.end(), lab) - uniq.begin());
  };
  for (auto& x : d.crossings)
    for (auto& a : x.arc) a = compact(a);
  d.arc_count = int(uniq.size());

  // arc occurrences
  std::vector<std::vector<std::pair<int, int>>> occ(d.arc_count);
  for (int ci = 0; ci < int(d.crossings.size()); ++ci)
    for (int s = 0; s < 4; ++s) occ[d.crossings[ci].arc[s]].push_back({ci, s});

  // reconstruct components; orientation anchored at incoming-under slots
  std::vector<char> arc_done(d.arc_count, 0);
  std::vector<std::array<int, 2>> over_in(d.crossings.size(), {-1, -1});
  for (int a0 = 0; a0 < d.arc_count; ++a0) {
    if (arc_done[a0]) continue;
    // find an anchor occurrence: prefer entering some crossing at slot 0
    // (the stored under-orientation); fall back to the first occurrence.
    std::vector<int> comp_arcs_set;
    {
      std::vector<int> stack = {a0};
      std::vector<char> seen(d.arc_count, 0);
      seen[a0] = 1;
      while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        comp_arcs_set.push_back(a);
        for (auto [ci, s] : occ[a]) {
          int b = d.crossings[ci].arc[(s + 2) % 4];
          if (!seen[b]) { seen[b] = 1; stack.push_back(b); }
          int o1 = d.crossings[ci].arc[(s + 1) % 4];  // other strand, skip
          (void)o1;
        }
      }
    }
    std::pair<int, int> anchor{-1, -1};
    for (int a : comp_arcs_set) {
      for (auto [ci, s] : occ[a])
        if (s == 0) { anchor = {ci, 0}; break; }
      if (anchor.first >= 0) break;
    }
    int start_arc;
    std::pair<int, int> at;
    if (anchor.first >= 0) {
      at = anchor;
      start_arc = d.crossings[anchor.first].arc[0];
    } else {
      start_arc = *std::min_element(comp_arcs_set.begin(), comp_arcs_set.end());
      at = occ[start_arc][0];
    }
    std::vector<int> comp;
    int arc = start_arc;
    while (true) {
      comp.push_back(arc);
      arc_done[arc] = 1;
      auto [ci, s] = at;
      if (s == 2)
        throw std::runtime_error("pd: inconsistent under-strand orientation");
      if (s == 1 || s == 3) {
        if (over_in[ci][0] < 0) over_in[ci] = {s, 0};
      }
      int s_out = (s + 2) % 4;
      int next = d.crossings[ci].arc[s_out];
      // other occurrence of `next`
      auto& o = occ[next];
      std::pair<int, int> other =
          (o[0] == std::make_pair(ci, s_out)) ? o[1] : o[0];
      if (next == start_arc) break;
      arc = next;
      at = other;
    }
    d.components.push_back(std::move(comp));
  }

  for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
    int oi = over_in[ci][0];
    if (oi < 0) throw std::runtime_error("pd: crossing never traversed over");
    d.crossings[ci].sign = (oi == 1) ? -1 : +1;
  }
  return d;
}

}  // namespace knotile
