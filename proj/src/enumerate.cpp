#include "knotile/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace knotile {

namespace {

constexpr EdgeMask TB = edge_bit(EdgeSide::Top);
constexpr EdgeMask RB = edge_bit(EdgeSide::Right);
constexpr EdgeMask BB = edge_bit(EdgeSide::Bottom);
constexpr EdgeMask LB = edge_bit(EdgeSide::Left);

// kinds compatible with (needs top, needs left, last row, last col)
struct ChoiceTable {
  std::vector<TileKind> lists[2][2][2][2];
  ChoiceTable() {
    for (int k = 0; k < kTileKindCount; ++k) {
      EdgeMask e = connection_points(TileKind(k));
      for (int nt = 0; nt < 2; ++nt)
        for (int nl = 0; nl < 2; ++nl)
          for (int lr = 0; lr < 2; ++lr)
            for (int lc = 0; lc < 2; ++lc) {
              if (bool(e & TB) != bool(nt)) continue;
              if (bool(e & LB) != bool(nl)) continue;
              if (lr && (e & BB)) continue;
              if (lc && (e & RB)) continue;
              lists[nt][nl][lr][lc].push_back(TileKind(k));
            }
    }
  }
};
const ChoiceTable& choices() {
  static ChoiceTable t;
  return t;
}

struct Dfs {
  int n;
  const SearchConstraints* c;
  const std::function<void(const Mosaic&)>* emit;
  uint64_t found = 0;

  std::vector<TileKind> grid;
  uint32_t above_bits = 0;  // bottom connections of the previous row
  uint32_t cur_bits = 0;    // bottom connections built for the current row
  int tiles = 0;
  int crossings = 0;

  void run_leaf() {
    if (crossings < c->min_crossings) return;
    Mosaic m(n);
    for (int r = 0; r < n; ++r)
      for (int cc = 0; cc < n; ++cc) m.set(r, cc, grid[size_t(r) * n + cc]);
    if (c->require_single_component || c->forbid_split_trivial ||
        c->require_reduced) {
      auto km = KnotMosaic::from(m);
      TraceResult t = trace(*km);
      if (c->require_single_component && t.component_count() != 1) return;
      if (c->forbid_split_trivial && !split_trivial_components(t).empty())
        return;
      if (c->require_reduced && !is_reduced(t.diagram)) return;
    }
    if (c->canonical_dedup && !(canonical_form(m) == m)) return;
    ++found;
    if (*emit) (*emit)(m);
  }

  void cell(int r, int cc, bool left_bit) {
    int nt = (above_bits >> cc) & 1u;
    const auto& list =
        choices().lists[nt][left_bit ? 1 : 0][r == n - 1][cc == n - 1];
    for (TileKind k : list) {
      bool nonblank = k != TileKind::Blank;
      if (nonblank && c->max_tiles >= 0 && tiles + 1 > c->max_tiles) continue;
      grid[size_t(r) * n + cc] = k;
      tiles += nonblank;
      bool is_cross = (k == TileKind::CrossA || k == TileKind::CrossB);
      crossings += is_cross;
      EdgeMask e = connection_points(k);
      uint32_t saved_cur = cur_bits;
      if (e & BB) cur_bits |= 1u << cc;
      if (cc + 1 < n) {
        cell(r, cc + 1, e & RB);
      } else if (r + 1 < n) {
        uint32_t saved_above = above_bits;
        above_bits = cur_bits;
        cur_bits = 0;
        cell(r + 1, 0, false);
        above_bits = saved_above;
      } else {
        run_leaf();
      }
      cur_bits = saved_cur;
      tiles -= nonblank;
      crossings -= is_cross;
    }
  }
};

}  // namespace

uint64_t generate(const SearchConstraints& c,
                  const std::function<void(const Mosaic&)>& emit) {
  if (c.n < 1) throw std::invalid_argument("generate: n must be positive");
  Dfs d;
  d.n = c.n;
  d.c = &c;
  d.emit = &emit;
  d.grid.assign(size_t(c.n) * c.n, TileKind::Blank);
  d.cell(0, 0, false);
  return d.found;
}

namespace {

// number of single-row fills with given top and bottom connection patterns
// and closed left/right ends
std::vector<std::vector<uint64_t>> row_transfer(int n) {
  const uint32_t s = 1u << n;
  std::vector<std::vector<uint64_t>> T(s, std::vector<uint64_t>(s, 0));
  for (uint32_t top = 0; top < s; ++top) {
    // dp over columns: state = (bottom bits so far, carry to next cell)
    std::vector<uint64_t> dp(size_t(s) * 2, 0);
    dp[0] = 1;
    for (int col = 0; col < n; ++col) {
      std::vector<uint64_t> nd(size_t(s) * 2, 0);
      for (uint32_t b = 0; b < (1u << col); ++b)
        for (int carry = 0; carry < 2; ++carry) {
          uint64_t v = dp[size_t(b) * 2 + carry];
          if (!v) continue;
          int nt = (top >> col) & 1;
          for (int k = 0; k < kTileKindCount; ++k) {
            EdgeMask e = connection_points(TileKind(k));
            if (bool(e & TB) != bool(nt)) continue;
            if (bool(e & LB) != bool(carry)) continue;
            if (col == n - 1 && (e & RB)) continue;
            uint32_t nb = b | ((e & BB) ? (1u << col) : 0u);
            nd[size_t(nb) * 2 + ((e & RB) ? 1 : 0)] += v;
          }
        }
      dp = std::move(nd);
    }
    for (uint32_t b = 0; b < s; ++b) T[top][b] = dp[size_t(b) * 2];
  }
  return T;
}

}  // namespace

BigUInt census(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("census: need 1 <= n <= 8");
  auto T = row_transfer(n);
  const uint32_t s = 1u << n;
  std::vector<BigUInt> v(s);
  v[0] = BigUInt(1);
  for (int row = 0; row < n; ++row) {
    std::vector<BigUInt> nv(s);
    for (uint32_t t = 0; t < s; ++t) {
      if (v[t].is_zero()) continue;
      for (uint32_t b = 0; b < s; ++b) {
        if (!T[t][b]) continue;
        nv[b] += v[t] * T[t][b];
      }
    }
    v = std::move(nv);
  }
  return v[0];
}

uint64_t count_all_parallel(int n, int threads) {
  if (n == 1) return 1;
  // shard on the first row's fills: enumerate (row bits, partial grids)
  struct Shard {
    std::vector<TileKind> row;
    uint32_t bits;
  };
  std::vector<Shard> shards;
  {
    std::vector<TileKind> row(n);
    std::function<void(int, bool, uint32_t)> rec = [&](int col, bool carry,
                                                       uint32_t bits) {
      if (col == n) {
        shards.push_back({row, bits});
        return;
      }
      const auto& list = choices().lists[0][carry ? 1 : 0][n == 1][col == n - 1];
      for (TileKind k : list) {
        row[col] = k;
        EdgeMask e = connection_points(k);
        rec(col + 1, e & RB,
            bits | ((e & BB) ? (1u << col) : 0u));
      }
    };
    rec(0, false, 0);
  }
  std::atomic<size_t> next{0};
  std::vector<uint64_t> counts(shards.size(), 0);
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= shards.size()) return;
      SearchConstraints c;
      c.n = n;
      Dfs d;
      d.n = n;
      d.c = &c;
      std::function<void(const Mosaic&)> nop;
      d.emit = &nop;
      d.grid.assign(size_t(n) * n, TileKind::Blank);
      for (int cc = 0; cc < n; ++cc) d.grid[cc] = shards[i].row[cc];
      d.above_bits = shards[i].bits;
      d.tiles = 0;
      if (n > 1) d.cell(1, 0, false);
      else d.run_leaf();
      counts[i] = d.found;
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < std::max(1, threads); ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  uint64_t total = 0;
  for (uint64_t v : counts) total += v;
  return total;
}

namespace {

void account(KnotMinima& out, const std::string& id, int tiles, const Mosaic& m) {
  auto it = out.min_tiles.find(id);
  if (it == out.min_tiles.end() || tiles < it->second) {
    out.min_tiles[id] = tiles;
    out.witness[id] = canonical_form(m);
  } else if (tiles == it->second) {
    Mosaic cf = canonical_form(m);
    if (cf.serialize_inline() < out.witness[id].serialize_inline())
      out.witness[id] = cf;
  }
}

void merge_minima(KnotMinima& into, const KnotMinima& from) {
  for (const auto& [id, t] : from.min_tiles) {
    auto it = into.min_tiles.find(id);
    if (it == into.min_tiles.end() || t < it->second) {
      into.min_tiles[id] = t;
      into.witness[id] = from.witness.at(id);
    } else if (t == it->second &&
               from.witness.at(id).serialize_inline() <
                   into.witness[id].serialize_inline()) {
      into.witness[id] = from.witness.at(id);
    }
  }
}

}  // namespace

KnotMinima knot_minima(int n, const KnotTable& table, int max_tiles,
                       int threads) {
  auto classify = [&table](const Mosaic& m, KnotMinima& out) {
    auto km = KnotMosaic::from(m);
    TraceResult t = trace(*km);
    if (t.component_count() == 0) return;
    IdentifyResult id = identify(t.diagram, table);
    int tiles = tile_number_of_mosaic(m);
    switch (id.kind) {
      case IdentifyResult::Kind::Unknot:
        account(out, "unknot", tiles, m);
        break;
      case IdentifyResult::Kind::Unlink:
        account(out, "unlink-" + std::to_string(id.unlink_components), tiles, m);
        break;
      case IdentifyResult::Kind::Matched:
        for (const auto& [name, mirror] : id.matches)
          account(out, name, tiles, m);
        break;
      case IdentifyResult::Kind::Unknown:
        if (t.component_count() == 1) account(out, "unknown", tiles, m);
        break;
      default:
        break;
    }
  };

  if (threads <= 1 || n <= 2) {
    KnotMinima out;
    SearchConstraints c;
    c.n = n;
    c.max_tiles = max_tiles;
    generate(c, [&](const Mosaic& m) { classify(m, out); });
    return out;
  }

  // shard on first-row fills
  struct Shard {
    std::vector<TileKind> row;
    uint32_t bits;
  };
  std::vector<Shard> shards;
  {
    std::vector<TileKind> row(n);
    std::function<void(int, bool, uint32_t)> rec = [&](int col, bool carry,
                                                       uint32_t bits) {
      if (col == n) {
        shards.push_back({row, bits});
        return;
      }
      const auto& list = choices().lists[0][carry ? 1 : 0][0][col == n - 1];
      for (TileKind k : list) {
        row[col] = k;
        EdgeMask e = connection_points(k);
        rec(col + 1, e & RB, bits | ((e & BB) ? (1u << col) : 0u));
      }
    };
    rec(0, false, 0);
  }
  std::vector<KnotMinima> partial(shards.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= shards.size()) return;
      SearchConstraints c;
      c.n = n;
      c.max_tiles = max_tiles;
      Dfs d;
      d.n = n;
      d.c = &c;
      std::function<void(const Mosaic&)> emit = [&](const Mosaic& m) {
        classify(m, partial[i]);
      };
      d.emit = &emit;
      d.grid.assign(size_t(n) * n, TileKind::Blank);
      int tiles0 = 0;
      for (int cc = 0; cc < n; ++cc) {
        d.grid[cc] = shards[i].row[cc];
        tiles0 += shards[i].row[cc] != TileKind::Blank;
        if (shards[i].row[cc] == TileKind::CrossA ||
            shards[i].row[cc] == TileKind::CrossB)
          d.crossings++;
      }
      if (max_tiles >= 0 && tiles0 > max_tiles) continue;
      d.tiles = tiles0;
      d.above_bits = shards[i].bits;
      d.cell(1, 0, false);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  KnotMinima out;
  for (const auto& p : partial) merge_minima(out, p);
  return out;
}

// defined in layout.cpp; fills the enumerable bundled 6-mosaic layouts
std::optional<int> min_tile_number_layouts(const std::string& name,
                                           const KnotTable& table);

std::optional<int> min_tile_number(const std::string& name, int n,
                                   const KnotTable& table, int threads) {
  bool known = name == "unknot" || name.rfind("unlink-", 0) == 0 ||
               table.find(name) != nullptr;
  for (const auto& link : table.links)
    if (link.name == name) known = true;
  if (!known) throw std::invalid_argument("min_tile_number: unknown knot " + name);
  if (n <= 5) {
    KnotMinima m = knot_minima(n, table, -1, threads);
    auto it = m.min_tiles.find(name);
    if (it == m.min_tiles.end()) return std::nullopt;
    return it->second;
  }
  if (n == 6) {
    if (table.find(name) == nullptr)
      throw std::invalid_argument(
          "min_tile_number: n=6 is layout-restricted and answers prime-knot "
          "names only");
    return min_tile_number_layouts(name, table);
  }
  throw std::invalid_argument("min_tile_number: boards beyond n=6 unsupported");
}

std::string BoundsReport::to_csv() const {
  std::ostringstream ss;
  ss << "knot,m,t,lower,upper,pass\n";
  for (const auto& r : rows)
    ss << r.knot << ',' << r.m << ',' << r.t << ',' << r.lower << ','
       << r.upper << ',' << (r.pass ? "pass" : "fail") << '\n';
  return ss.str();
}

BoundsReport verify_bounds(
    const std::vector<std::tuple<std::string, int, int>>& results) {
  BoundsReport rep;
  for (const auto& [knot, m, t] : results) {
    if (m < 4) throw std::invalid_argument("verify_bounds: m must be >= 4");
    BoundsRow row;
    row.knot = knot;
    row.m = m;
    row.t = t;
    row.lower = 5 * m - 8;
    row.upper = (m % 2 == 0) ? m * m - 4 : m * m - 8;
    row.pass = row.lower <= t && t <= row.upper;
    rep.all_pass = rep.all_pass && row.pass;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace knotile
