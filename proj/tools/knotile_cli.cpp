// knotile: validate, inspect, render, enumerate, census, search, fill
// layouts, and check tile-number bounds for knot mosaics.
//
// Exit codes: 0 success, 1 domain failure, 2 usage or parse error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "knotile/enumerate.hpp"
#include "knotile/invariants.hpp"
#include "knotile/layout.hpp"
#include "knotile/moves.hpp"
#include "knotile/render.hpp"
#include "knotile/tiles.hpp"
#include "knotile/trace.hpp"

using namespace knotile;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_out(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << content;
}

std::string info_record(const std::string& label, const Mosaic& m,
                        const KnotTable& table) {
  auto km = KnotMosaic::from(m);
  std::ostringstream ss;
  ss << "mosaic=" << m.serialize_inline() << " size=" << m.size()
     << " tiles=" << tile_number_of_mosaic(m);
  if (!km) {
    ss << " suitably_connected=false";
    if (!label.empty()) ss << " file=" << label;
    return ss.str();
  }
  TraceResult t = trace(*km);
  Laurent br = bracket(t.diagram);
  Laurent j = jones(t.diagram);
  ss << " suitably_connected=true components=" << t.component_count()
     << " crossings=" << t.crossing_count()
     << " reduced=" << (is_reduced(t.diagram) ? "true" : "false")
     << " writhe=" << t.diagram.writhe() << " bracket=" << br.to_string()
     << " jones=" << j.to_string()
     << " identify=" << identify(t.diagram, table).to_string();
  if (!label.empty()) ss << " file=" << label;
  return ss.str();
}

std::string emit_record(const Mosaic& m, const KnotTable& table) {
  auto km = KnotMosaic::from(m);
  TraceResult t = trace(*km);
  std::ostringstream ss;
  ss << "mosaic=" << m.serialize_inline()
     << " tiles=" << tile_number_of_mosaic(m)
     << " components=" << t.component_count()
     << " crossings=" << t.crossing_count()
     << " identify=" << identify(t.diagram, table).to_string();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knot mosaic engine"};
  app.require_subcommand(1);
  int threads = int(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  app.add_option("--threads", threads, "worker threads for enumeration");

  std::string table_path;
  app.add_option("--table", table_path,
                 "knot table file (default: KNOTILE_TABLE or bundled)");
  auto table = [&]() {
    return load_knot_table(table_path.empty() ? default_table_path()
                                              : table_path);
  };

  std::string file, out_path, format = "ascii";
  int n = 4, max_tiles = -1, min_crossings = 0;
  bool knots_only = false, canonical = false, no_split = false, reduced = false;
  std::string layout_name, knot_name;

  auto* validate = app.add_subcommand("validate", "check suitable-connectedness");
  validate->add_option("file", file)->required();

  auto* info = app.add_subcommand("info", "one-line record for a mosaic file");
  info->add_option("file", file)->required();

  auto* render = app.add_subcommand("render", "draw a mosaic");
  render->add_option("file", file)->required();
  render->add_option("--format", format, "ascii|svg");
  render->add_option("-o,--out", out_path, "output file (default stdout)");

  auto* enumerate = app.add_subcommand("enumerate", "stream knot mosaics");
  enumerate->add_option("--size", n)->required();
  enumerate->add_option("--max-tiles", max_tiles);
  enumerate->add_option("--min-crossings", min_crossings);
  enumerate->add_flag("--knots-only", knots_only, "single component only");
  enumerate->add_flag("--no-split", no_split, "forbid split trivial components");
  enumerate->add_flag("--reduced", reduced, "no nugatory crossings");
  enumerate->add_flag("--canonical", canonical, "canonical forms only");
  enumerate->add_option("-o,--out", out_path);

  auto* census_cmd = app.add_subcommand("census", "count suitably connected mosaics");
  census_cmd->add_option("--size", n)->required();
  census_cmd->add_option("-o,--out", out_path);

  auto* search = app.add_subcommand("search", "minimum tile number of a knot");
  search->add_option("--knot", knot_name)->required();
  search->add_option("--size", n)->required();

  auto* fill = app.add_subcommand("fill-layout", "fill a nondeterministic layout");
  fill->add_option("--layout", layout_name)->required();
  fill->add_option("--max-tiles", max_tiles);
  fill->add_option("--min-crossings", min_crossings);
  fill->add_flag("--knots-only", knots_only);
  fill->add_flag("--no-split", no_split);
  fill->add_flag("--reduced", reduced);
  fill->add_flag("--canonical", canonical);
  fill->add_option("-o,--out", out_path);

  auto* layouts = app.add_subcommand(
      "layouts", "derive admissible space-efficient layouts and tile numbers");
  layouts->add_option("--size", n)->required();
  layouts->add_option("-o,--out", out_path);

  auto* bounds = app.add_subcommand(
      "verify-bounds", "check 5m-8 <= t <= m^2-4 / m^2-8 for knot,m,t lines");
  bounds->add_option("file", file, "CSV lines: knot,m,t (default stdin)");
  bounds->add_option("-o,--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) {
      Mosaic m = Mosaic::parse(slurp(file));
      if (!is_suitably_connected(m)) {
        std::cout << "not suitably connected\n";
        return 1;
      }
      std::cout << "ok\n";
      return 0;
    }
    if (*info) {
      Mosaic m = Mosaic::parse(slurp(file));
      std::cout << info_record(file, m, table()) << "\n";
      return is_suitably_connected(m) ? 0 : 1;
    }
    if (*render) {
      Mosaic m = Mosaic::parse(slurp(file));
      if (format == "ascii") write_out(out_path, render_ascii(m));
      else if (format == "svg") write_out(out_path, render_svg(m));
      else throw CLI::ValidationError("--format", "expected ascii or svg");
      return 0;
    }
    if (*enumerate) {
      KnotTable tab = table();
      SearchConstraints c;
      c.n = n;
      c.max_tiles = max_tiles;
      c.min_crossings = min_crossings;
      c.require_single_component = knots_only;
      c.forbid_split_trivial = no_split;
      c.require_reduced = reduced;
      c.canonical_dedup = canonical;
      std::ostringstream ss;
      uint64_t count = generate(c, [&](const Mosaic& m) {
        ss << emit_record(m, tab) << "\n";
      });
      ss << "count=" << count << "\n";
      write_out(out_path, ss.str());
      return 0;
    }
    if (*census_cmd) {
      std::ostringstream ss;
      ss << "n,count\n" << n << "," << census(n).to_string() << "\n";
      write_out(out_path, ss.str());
      return 0;
    }
    if (*search) {
      auto result = min_tile_number(knot_name, n, table(), threads);
      if (!result) {
        std::cout << knot_name << " not realizable on a " << n << "-mosaic\n";
        return 1;
      }
      std::cout << *result << "\n";
      return 0;
    }
    if (*fill) {
      KnotTable tab = table();
      Layout layout = resolve_layout(layout_name);
      SearchConstraints c;
      c.n = layout.n;
      c.max_tiles = max_tiles;
      c.min_crossings = min_crossings;
      c.require_single_component = knots_only;
      c.forbid_split_trivial = no_split;
      c.require_reduced = reduced;
      c.canonical_dedup = canonical;
      std::ostringstream ss;
      uint64_t count = fill_layout(layout, c, [&](const Mosaic& m) {
        ss << emit_record(m, tab) << "\n";
      });
      ss << "count=" << count << "\n";
      write_out(out_path, ss.str());
      return 0;
    }
    if (*layouts) {
      ProfileReport rep = layout_profiles(n);
      std::ostringstream ss;
      ss << rep.to_csv();
      for (const SignatureGrid& g : rep.witnesses)
        ss << "# layout, " << g.tile_count() << " tiles\n" << g.serialize();
      write_out(out_path, ss.str());
      return 0;
    }
    if (*bounds) {
      std::istringstream in(file.empty() ? std::string() : slurp(file));
      std::istream& src = file.empty() ? std::cin : static_cast<std::istream&>(in);
      std::vector<std::tuple<std::string, int, int>> rows;
      std::string line;
      while (std::getline(src, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("knot,", 0) == 0)
          continue;
        std::istringstream ls(line);
        std::string knot, ms, ts;
        if (!std::getline(ls, knot, ',') || !std::getline(ls, ms, ',') ||
            !std::getline(ls, ts, ','))
          throw std::runtime_error("verify-bounds: bad line: " + line);
        rows.push_back({knot, std::stoi(ms), std::stoi(ts)});
      }
      BoundsReport rep = verify_bounds(rows);
      write_out(out_path, rep.to_csv());
      return rep.all_pass ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
