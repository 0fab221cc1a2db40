// Command-line front end. Exit status: 0 ok / verified, 1 verified false, 2 error.

#include <iostream>
#include <regex>
#include <string>

#include <CLI11.hpp>

#include "barvis/barvis.hpp"

using namespace barvis;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kFalse = 1, kError = 2;

struct Output {
  bool as_json = false;
  json report = json::object();

  void line(const std::string& key, const json& value, const std::string& text) {
    report[key] = value;
    if (!as_json) std::cout << text << "\n";
  }
  void flush() const {
    if (as_json) std::cout << report.dump(2) << "\n";
  }
};

// K<n>, C<n>, S3, or a graph manifest file.
Graph load_graph(const std::string& spec) {
  std::smatch m;
  static const std::regex named("([KC])(\\d+)");
  if (std::regex_match(spec, m, named)) {
    const int n = std::stoi(m[2]);
    return m[1] == "K" ? complete_graph(n) : cycle_graph(n);
  }
  if (spec == "S3") return s3_graph();
  return io::parse<Graph>(io::read_json_file(spec));
}

void save(const std::string& path, const json& j) {
  if (!path.empty()) io::write_text_file(path, j.dump(2) + "\n");
}

json edges_json(const std::vector<Edge>& es) {
  json a = json::array();
  for (const Edge& e : es) a.push_back({e.u, e.v});
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bar visibility layouts, 1-planar and quasi-planar drawings, flow squares"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_flag("--json", out.as_json, "print the report as JSON");
  int rc = kOk;

  std::string in, in2, out_path;
  int k = 1;

  auto* vis = app.add_subcommand("visibility", "strong bar k-visibility graph of a layout");
  vis->add_option("layout", in, "layout file")->required();
  vis->add_option("--k", k, "bars a sight line may cross")->check(CLI::NonNegativeNumber);
  vis->add_option("-o,--out", out_path, "write the graph here");
  vis->callback([&] {
    const Graph g = strong_visibility_graph(io::parse<BarLayout>(io::read_json_file(in)), k);
    out.line("vertices", g.num_vertices(), "vertices " + std::to_string(g.num_vertices()));
    out.line("edges", g.num_edges(), "edges " + std::to_string(g.num_edges()));
    out.report["graph"] = io::to_json(g);
    save(out_path, io::emit(g));
  });

  auto* real = app.add_subcommand("realize", "does the layout weakly k-realize the graph");
  real->add_option("layout", in, "layout file")->required();
  real->add_option("graph", in2, "graph file or K<n>/C<n>/S3")->required();
  real->add_option("--k", k, "bars a sight line may cross")->check(CLI::NonNegativeNumber);
  real->callback([&] {
    const auto r = realizes_weakly(io::parse<BarLayout>(io::read_json_file(in)), load_graph(in2), k);
    out.line("realized", r.realized, r.realized ? "realized" : "not realized");
    out.line("missing", edges_json(r.missing), "missing edges " + std::to_string(r.missing.size()));
    if (!r.realized) rc = kFalse;
  });

  auto* one = app.add_subcommand("oneplanar", "weak bar 1-visibility layout of a 1-planar embedding");
  one->add_option("embedding", in, "embedding file")->required();
  one->add_option("-o,--out", out_path, "write the layout here");
  one->callback([&] {
    const OnePlanarEmbedding e = io::parse<OnePlanarEmbedding>(io::read_json_file(in));
    const Graph g = e.original_graph();
    const WeB1Result r = oneplanar_to_web1(e, g);
    const bool ok = realizes_weakly(r.layout, g, 1).realized;
    out.line("vertices", g.num_vertices(), "vertices " + std::to_string(g.num_vertices()));
    out.line("crossings", e.crossings.size(), "crossings " + std::to_string(e.crossings.size()));
    out.line("kite_changes", r.kites.changes.size(), "kite changes " + std::to_string(r.kites.changes.size()));
    out.line("realized", ok, ok ? "layout realizes the graph" : "layout does NOT realize the graph");
    out.report["layout"] = io::to_json(r.layout);
    save(out_path, io::emit(r.layout));
    if (!ok) rc = kFalse;
  });

  auto* quasi = app.add_subcommand("quasiplanar", "polyline drawing of strong(L,1) and its crossing report");
  quasi->add_option("layout", in, "layout file")->required();
  quasi->add_option("-o,--out", out_path, "write the drawing here");
  quasi->callback([&] {
    const PolylineDrawing d = layout_to_quasiplanar(io::parse<BarLayout>(io::read_json_file(in)));
    std::size_t red = 0;
    for (const auto& e : d.edges) red += e.color == EdgeColor::red;
    const auto clique = max_crossing_clique(d);
    out.line("edges", d.edges.size(), "edges " + std::to_string(d.edges.size()));
    out.line("red", red, "red " + std::to_string(red));
    out.line("max_mutual_crossing", clique.size(), "max mutually crossing edges " + std::to_string(clique.size()));
    out.report["clique"] = clique;
    save(out_path, io::emit(d));
    if (clique.size() > 2) rc = kFalse;
  });

  auto* fsq = app.add_subcommand("flowsquare", "square of a 1-flow network and its weak bar 1-visibility layout");
  fsq->add_option("network", in, "flow network file")->required();
  fsq->add_option("-o,--out", out_path, "write the layout here");
  fsq->callback([&] {
    const FlowSquareResult r = flow_square_to_web1(io::parse<FlowNetwork>(io::read_json_file(in)));
    const bool ok = realizes_weakly(r.layout, r.square, 1).realized;
    out.line("vertices", r.square.num_vertices(), "vertices " + std::to_string(r.square.num_vertices()));
    out.line("square_edges", r.square.num_edges(), "square edges " + std::to_string(r.square.num_edges()));
    out.line("added_arcs", r.augmentation.added.size(), "augmentation arcs " + std::to_string(r.augmentation.added.size()));
    out.line("realized", ok, ok ? "layout realizes the square" : "layout does NOT realize the square");
    out.report["layout"] = io::to_json(r.layout);
    save(out_path, io::emit(r.layout));
    if (!ok) rc = kFalse;
  });

  int m = 52;
  auto* grid = app.add_subcommand("grid", "2-flow grid network whose square beats 6n-20");
  grid->add_option("-m", m, "grid side")->check(CLI::Range(3, 400));
  grid->add_option("-o,--out", out_path, "write the network here");
  grid->callback([&] {
    const GridCounterexample g = grid_2flow_counterexample(m);
    const GridStats& s = g.stats;
    out.line("n", s.n, "n " + std::to_string(s.n));
    out.line("square_edges", s.square_edges, "square edges " + std::to_string(s.square_edges));
    out.line("bound_6n_20", s.bound_6n_20, "6n-20 " + std::to_string(s.bound_6n_20));
    json hist = json::object();
    std::string text = "interior out-degrees";
    for (auto [deg, cnt] : s.interior_out_degree) {
      hist[std::to_string(deg)] = cnt;
      text += " " + std::to_string(deg) + ":" + std::to_string(cnt);
    }
    out.line("interior_out_degree", hist, text);
    const bool exceeds = static_cast<long>(s.square_edges) > s.bound_6n_20;
    out.line("exceeds", exceeds, exceeds ? "square exceeds 6n-20" : "square within 6n-20");
    save(out_path, io::emit(g.network));
    if (!exceeds) rc = kFalse;
  });

  std::string mode = "all-dags";
  auto* orc = app.add_subcommand("oracle", "exhaustive search for a 1-flow preimage of a graph");
  orc->add_option("target", in, "graph file or K<n>/C<n>/S3")->required();
  orc->add_option("--mode", mode, "all-dags, hampath or hampath-planar");
  orc->callback([&] {
    const auto sm = parse_search_mode(mode);
    if (!sm) throw PreconditionError("unknown mode '" + mode + "'");
    const SearchReport r = search_1flow_preimage(load_graph(in), *sm);
    out.line("mode", to_string(r.mode), std::string("mode ") + to_string(r.mode));
    out.line("candidates", r.candidates, "candidates " + std::to_string(r.candidates));
    out.line("witness", r.witness ? io::to_json(*r.witness) : json(nullptr), r.witness ? "witness found" : "no witness");
    out.line("seconds", r.seconds, "seconds " + std::to_string(r.seconds));
    if (!r.witness) rc = kFalse;
  });

  std::string cls = "web1";
  auto* aud = app.add_subcommand("audit", "edge count against a class bound");
  aud->add_option("graph", in, "graph file or K<n>/C<n>/S3")->required();
  aud->add_option("--class", cls, "web1, oneplanar or quasiplanar");
  aud->callback([&] {
    const auto c = parse_audit_class(cls);
    if (!c) throw PreconditionError("unknown class '" + cls + "'");
    const AuditReport r = bound_audit(load_graph(in), *c);
    out.line("class", to_string(r.cls), std::string("class ") + to_string(r.cls));
    out.line("n", r.n, "n " + std::to_string(r.n));
    out.line("m", r.m, "m " + std::to_string(r.m));
    out.line("bound", r.bound ? json(*r.bound) : json(nullptr), "bound " + (r.bound ? std::to_string(*r.bound) : "-"));
    out.line("verdict", to_string(r.verdict), std::string("verdict ") + to_string(r.verdict));
    if (r.verdict == AuditVerdict::bound_exceeded) rc = kFalse;
  });

  auto* ren = app.add_subcommand("render", "SVG of a layout or drawing");
  ren->add_option("object", in, "layout or drawing file")->required();
  ren->add_option("-o,--out", out_path, "SVG path")->required();
  ren->callback([&] {
    const io::Manifest mf = io::parse_manifest(io::read_json_file(in));
    std::string svg;
    if (mf.kind == "layout")
      svg = render_svg(io::layout_from_json(mf.payload));
    else if (mf.kind == "drawing")
      svg = render_svg(io::drawing_from_json(mf.payload));
    else
      throw PreconditionError("cannot render kind '" + mf.kind + "'");
    io::write_text_file(out_path, svg);
    out.line("written", out_path, "wrote " + out_path);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  out.flush();
  return rc;
}
