#include "knotile/tangle.hpp"

#include <algorithm>
#include <stdexcept>

namespace knotile {

int Tangle::new_terminal() {
  uf_.push_back(int(uf_.size()));
  return int(uf_.size()) - 1;
}

int Tangle::find(int t) const {
  while (uf_[t] != t) t = uf_[t];
  return t;
}

void Tangle::join(int a, int b) {
  a = find(a);
  b = find(b);
  if (a != b) uf_[a] = b;
}

Tangle Tangle::zero() {
  Tangle t;
  t.nw_ = t.new_terminal();
  t.ne_ = t.new_terminal();
  t.sw_ = t.new_terminal();
  t.se_ = t.new_terminal();
  t.join(t.nw_, t.ne_);
  t.join(t.sw_, t.se_);
  return t;
}

Tangle Tangle::infinity() {
  Tangle t;
  t.nw_ = t.new_terminal();
  t.ne_ = t.new_terminal();
  t.sw_ = t.new_terminal();
  t.se_ = t.new_terminal();
  t.join(t.nw_, t.sw_);
  t.join(t.ne_, t.se_);
  return t;
}

// positive twists put the SW-NE strand under
Tangle& Tangle::twist_right(int n) {
  for (int i = 0; i < std::abs(n); ++i) {
    Crossing x;
    for (int s = 0; s < 4; ++s) x.t[s] = new_terminal();
    x.under_diag = (n > 0) ? 1 : 0;
    join(x.t[0], ne_);  // NW
    join(x.t[1], se_);  // SW
    se_ = x.t[2];       // SE
    ne_ = x.t[3];       // NE
    crossings_.push_back(x);
  }
  return *this;
}

Tangle& Tangle::twist_bottom(int n) {
  for (int i = 0; i < std::abs(n); ++i) {
    Crossing x;
    for (int s = 0; s < 4; ++s) x.t[s] = new_terminal();
    x.under_diag = (n > 0) ? 1 : 0;
    join(x.t[0], sw_);  // NW
    join(x.t[3], se_);  // NE
    sw_ = x.t[1];       // SW
    se_ = x.t[2];       // SE
    crossings_.push_back(x);
  }
  return *this;
}

Tangle Tangle::hsum(Tangle a, const Tangle& b) {
  // import b's terminals and crossings into a with an id offset
  int off = int(a.uf_.size());
  for (int p : b.uf_) a.uf_.push_back(p + off);
  for (Crossing x : b.crossings_) {
    for (int s = 0; s < 4; ++s) x.t[s] += off;
    a.crossings_.push_back(x);
  }
  a.join(a.ne_, b.nw_ + off);
  a.join(a.se_, b.sw_ + off);
  a.ne_ = b.ne_ + off;
  a.se_ = b.se_ + off;
  return a;
}

// Emit the PD of a tangle whose wires are already all closed;
// `circles` counts crossing-free loops formed while closing.
PlanarDiagram close_tangle(Tangle tmp, int circles) {
  PlanarDiagram d;
  d.circle_components = circles;
  const int nc = int(tmp.crossings_.size());
  if (nc == 0) return d;

  // arc id per terminal class
  std::vector<int> arc_of_class(tmp.uf_.size(), -1);
  int arc_count = 0;
  std::vector<std::vector<std::pair<int, int>>> occ;  // arc -> (crossing, slot)
  for (int ci = 0; ci < nc; ++ci)
    for (int s = 0; s < 4; ++s) {
      int cls = tmp.find(tmp.crossings_[ci].t[s]);
      if (arc_of_class[cls] < 0) {
        arc_of_class[cls] = arc_count++;
        occ.emplace_back();
      }
      occ[arc_of_class[cls]].push_back({ci, s});
    }
  for (const auto& o : occ)
    if (o.size() != 2)
      throw std::runtime_error("tangle closure: open strand end");
  d.arc_count = arc_count;

  auto arc_at = [&](int ci, int s) {
    return arc_of_class[tmp.find(tmp.crossings_[ci].t[s])];
  };

  // orient components; record the slot each diagonal is entered at
  std::vector<std::array<int, 2>> entered(nc, {-1, -1});  // per diagonal 0/1
  std::vector<char> arc_done(arc_count, 0);
  for (int a0 = 0; a0 < arc_count; ++a0) {
    if (arc_done[a0]) continue;
    std::vector<int> comp;
    int arc = a0;
    auto at = occ[a0][0];
    while (true) {
      comp.push_back(arc);
      arc_done[arc] = 1;
      auto [ci, s] = at;
      entered[ci][s % 2 == 0 ? 0 : 1] = s;  // diagonal 0 uses slots 0,2
      int s_out = (s + 2) % 4;
      int next = arc_at(ci, s_out);
      auto& o = occ[next];
      auto other = (o[0] == std::make_pair(ci, s_out)) ? o[1] : o[0];
      if (next == a0) break;
      arc = next;
      at = other;
    }
    d.components.push_back(std::move(comp));
  }

  for (int ci = 0; ci < nc; ++ci) {
    const auto& x = tmp.crossings_[ci];
    int u_slot = entered[ci][x.under_diag];
    int o_slot = entered[ci][1 - x.under_diag];
    if (u_slot < 0 || o_slot < 0)
      throw std::runtime_error("tangle closure: crossing not traversed");
    PdCrossing pc;
    for (int k = 0; k < 4; ++k) pc.arc[k] = arc_at(ci, (u_slot + k) % 4);
    pc.sign = (o_slot == (u_slot + 1) % 4) ? -1 : +1;
    d.crossings.push_back(pc);
  }
  return d;
}

PlanarDiagram Tangle::numerator_closure() const {
  Tangle tmp = *this;
  int circles = 0;
  auto close = [&](int a, int b) {
    if (tmp.find(a) == tmp.find(b)) ++circles;
    else tmp.join(a, b);
  };
  close(tmp.nw_, tmp.ne_);
  close(tmp.sw_, tmp.se_);
  return close_tangle(tmp, circles);
}

Tangle Tangle::rational(const std::vector<int>& coeffs, bool vertical_first) {
  Tangle t = vertical_first ? infinity() : zero();
  bool vertical = vertical_first;
  for (int a : coeffs) {
    if (vertical) t.twist_bottom(a);
    else t.twist_right(a);
    vertical = !vertical;
  }
  return t;
}

Tangle Tangle::montesinos_component(const std::vector<int>& coeffs) {
  // last twist group vertical, so a lone digit is a vertical stack
  bool vertical_first = (coeffs.size() % 2 == 1);
  return rational(coeffs, vertical_first);
}

PlanarDiagram braid_closure(int strands, const std::vector<int>& word) {
  Tangle t;  // reuse terminal plumbing; ports unused
  std::vector<int> cur(strands), top(strands);
  for (int i = 0; i < strands; ++i) cur[i] = top[i] = t.new_terminal();
  for (int letter : word) {
    int g = std::abs(letter);
    if (g < 1 || g >= strands) throw std::runtime_error("braid: bad generator");
    Tangle::Crossing x;
    for (int s = 0; s < 4; ++s) x.t[s] = t.new_terminal();
    x.under_diag = (letter > 0) ? 1 : 0;
    t.join(x.t[0], cur[g - 1]);  // NW joins left strand
    t.join(x.t[3], cur[g]);     // NE joins right strand
    cur[g - 1] = x.t[1];        // SW continues on the left
    cur[g] = x.t[2];            // SE on the right
    t.crossings_.push_back(x);
  }
  int circles = 0;
  for (int i = 0; i < strands; ++i) {
    if (t.find(cur[i]) == t.find(top[i])) ++circles;
    else t.join(cur[i], top[i]);
  }
  return close_tangle(t, circles);
}

PlanarDiagram braid_closure_tangles(
    int strands, const std::vector<std::pair<int, Tangle>>& letters) {
  Tangle t;
  std::vector<int> cur(strands), top(strands);
  for (int i = 0; i < strands; ++i) cur[i] = top[i] = t.new_terminal();
  for (const auto& [g, tg] : letters) {
    if (g < 1 || g >= strands) throw std::runtime_error("braid: bad position");
    int off = int(t.uf_.size());
    for (int p : tg.uf_) t.uf_.push_back(p + off);
    for (Tangle::Crossing x : tg.crossings_) {
      for (int s = 0; s < 4; ++s) x.t[s] += off;
      t.crossings_.push_back(x);
    }
    t.join(tg.nw_ + off, cur[g - 1]);
    t.join(tg.ne_ + off, cur[g]);
    cur[g - 1] = tg.sw_ + off;
    cur[g] = tg.se_ + off;
  }
  int circles = 0;
  for (int i = 0; i < strands; ++i) {
    if (t.find(cur[i]) == t.find(top[i])) ++circles;
    else t.join(cur[i], top[i]);
  }
  return close_tangle(t, circles);
}

}  // namespace knotile
