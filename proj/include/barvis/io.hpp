#ifndef BARVIS_IO_HPP
#define BARVIS_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "barvis/bar_layout.hpp"
#include "barvis/embedding.hpp"
#include "barvis/errors.hpp"
#include "barvis/flow_network.hpp"
#include "barvis/graph.hpp"
#include "barvis/one_planar.hpp"
#include "barvis/quasi_planar.hpp"
#include "barvis/rational.hpp"

namespace barvis {

/// Malformed or mistyped JSON input.
class FormatError : public Error {
 public:
  using Error::Error;
};

namespace io {

using json = nlohmann::json;

inline constexpr int format_version = 1;

/// {format_version, kind, payload}
struct Manifest {
  int version = format_version;
  std::string kind;
  json payload;
};

inline json emit_manifest(const std::string& kind, json payload) {
  return json{{"format_version", format_version}, {"kind", kind}, {"payload", std::move(payload)}};
}

inline Manifest parse_manifest(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("payload"))
    throw FormatError("expected an object with 'kind' and 'payload'");
  Manifest m;
  m.version = j.value("format_version", format_version);
  if (m.version != format_version) throw FormatError("unsupported format_version " + std::to_string(m.version));
  m.kind = j.at("kind").get<std::string>();
  m.payload = j.at("payload");
  return m;
}

inline json expect_kind(const json& j, const std::string& kind) {
  Manifest m = parse_manifest(j);
  if (m.kind != kind) throw FormatError("expected kind '" + kind + "', found '" + m.kind + "'");
  return m.payload;
}

namespace detail {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad ") + what + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("bad ") + what + ": " + e.what());
  }
}

inline json pair(Vertex a, Vertex b) { return json::array({a, b}); }

}  // namespace detail

inline json rational_json(const Rational& r) { return r.str(); }

inline Rational parse_rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) throw FormatError("rational must be a \"p/q\" string or an integer");
  return detail::guarded("rational", [&] { return Rational::parse(j.get<std::string>()); });
}

inline json point_json(const Point& p) { return json::array({rational_json(p.x), rational_json(p.y)}); }

inline Point parse_point(const json& j) {
  if (!j.is_array() || j.size() != 2) throw FormatError("point must be [x, y]");
  return {parse_rational(j[0]), parse_rational(j[1])};
}

// graph

inline json to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back(detail::pair(e.u, e.v));
  return {{"vertices", g.num_vertices()}, {"edges", edges}, {"directed", false}};
}

inline json to_json(const DiGraph& g) {
  json arcs = json::array();
  for (const Arc& a : g.arcs()) arcs.push_back(detail::pair(a.tail, a.head));
  return {{"vertices", g.num_vertices()}, {"edges", arcs}, {"directed", true}};
}

inline Graph graph_from_json(const json& j) {
  return detail::guarded("graph", [&] {
    if (j.value("directed", false)) throw FormatError("expected an undirected graph");
    Graph g(j.at("vertices").get<int>());
    for (const json& e : j.at("edges")) g.add_edge(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
    return g;
  });
}

inline DiGraph digraph_from_json(const json& j) {
  return detail::guarded("digraph", [&] {
    if (!j.value("directed", false)) throw FormatError("expected a directed graph");
    DiGraph g(j.at("vertices").get<int>());
    for (const json& e : j.at("edges")) g.add_arc(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
    return g;
  });
}

// embedding; a plain planar embedding has no crossing vertices

inline json to_json(const OnePlanarEmbedding& e) {
  json crossings = json::array();
  for (const Crossing& c : e.crossings)
    crossings.push_back({{"vertex", c.x},
                         {"first", detail::pair(c.first.u, c.first.v)},
                         {"second", detail::pair(c.second.u, c.second.v)}});
  const auto outer = e.planarization.outer_dart();
  return {{"rotations", e.planarization.rotations()},
          {"outer_face", outer ? detail::pair(outer->from, outer->to) : json(nullptr)},
          {"num_original", e.num_original},
          {"crossing_vertices", crossings}};
}

inline json to_json(const PlanarEmbedding& e) { return to_json(crossing_free(e)); }

inline OnePlanarEmbedding one_planar_from_json(const json& j) {
  return detail::guarded("embedding", [&] {
    auto rot = j.at("rotations").get<std::vector<std::vector<Vertex>>>();
    std::optional<Dart> outer;
    if (j.contains("outer_face") && !j["outer_face"].is_null())
      outer = Dart{j["outer_face"].at(0).get<Vertex>(), j["outer_face"].at(1).get<Vertex>()};
    OnePlanarEmbedding e;
    const int n = static_cast<int>(rot.size());
    e.planarization = PlanarEmbedding(std::move(rot), outer);
    e.num_original = j.value("num_original", n);
    for (const json& c : j.value("crossing_vertices", json::array()))
      e.crossings.push_back({c.at("vertex").get<Vertex>(), Edge(c.at("first").at(0).get<Vertex>(), c.at("first").at(1).get<Vertex>()),
                             Edge(c.at("second").at(0).get<Vertex>(), c.at("second").at(1).get<Vertex>())});
    e.validate();
    return e;
  });
}

inline PlanarEmbedding embedding_from_json(const json& j) {
  OnePlanarEmbedding e = one_planar_from_json(j);
  if (!e.crossings.empty()) throw FormatError("expected an embedding without crossing vertices");
  return e.planarization;
}

// layout

inline json to_json(const BarLayout& l) {
  json bars = json::array();
  for (const Bar& b : l.bars())
    bars.push_back({{"id", b.id}, {"y", rational_json(b.y)}, {"x1", rational_json(b.x_left)}, {"x2", rational_json(b.x_right)}});
  return {{"bars", bars}};
}

inline BarLayout layout_from_json(const json& j) {
  return detail::guarded("layout", [&] {
    std::vector<Bar> bars;
    for (const json& b : j.at("bars"))
      bars.push_back({b.at("id").get<Vertex>(), parse_rational(b.at("y")), parse_rational(b.at("x1")), parse_rational(b.at("x2"))});
    return BarLayout(std::move(bars));
  });
}

// drawing

inline json to_json(const PolylineDrawing& d) {
  json points = json::array();
  for (const Point& p : d.vertex_points) points.push_back(point_json(p));
  json polylines = json::array(), colors = json::array();
  for (const DrawnEdge& e : d.edges) {
    json pts = json::array();
    for (const Point& p : e.polyline) pts.push_back(point_json(p));
    polylines.push_back({{"edge", detail::pair(e.edge.u, e.edge.v)},
                         {"lower", e.lower},
                         {"upper", e.upper},
                         {"bypass", e.bypass ? json(*e.bypass) : json(nullptr)},
                         {"points", pts}});
    colors.push_back(to_string(e.color));
  }
  json shifts = json::array();
  for (const auto& [e, c] : d.params.shift_count) shifts.push_back(json::array({e.u, e.v, c}));
  return {{"points", points},
          {"polylines", polylines},
          {"colors", colors},
          {"params",
           {{"gamma", rational_json(d.params.gamma)},
            {"delta", rational_json(d.params.delta)},
            {"epsilon", rational_json(d.params.epsilon)},
            {"shift_count", shifts}}}};
}

inline PolylineDrawing drawing_from_json(const json& j) {
  return detail::guarded("drawing", [&] {
    PolylineDrawing d;
    for (const json& p : j.at("points")) d.vertex_points.push_back(parse_point(p));
    const json& polylines = j.at("polylines");
    const json& colors = j.at("colors");
    if (polylines.size() != colors.size()) throw FormatError("polylines and colors differ in length");
    for (std::size_t i = 0; i < polylines.size(); ++i) {
      const json& p = polylines[i];
      DrawnEdge e;
      e.edge = Edge(p.at("edge").at(0).get<Vertex>(), p.at("edge").at(1).get<Vertex>());
      const std::string c = colors[i].get<std::string>();
      if (c != "blue" && c != "red") throw FormatError("unknown color '" + c + "'");
      e.color = c == "blue" ? EdgeColor::blue : EdgeColor::red;
      e.lower = p.at("lower").get<Vertex>();
      e.upper = p.at("upper").get<Vertex>();
      if (!p.at("bypass").is_null()) e.bypass = p["bypass"].get<Vertex>();
      for (const json& q : p.at("points")) e.polyline.push_back(parse_point(q));
      d.edges.push_back(std::move(e));
    }
    if (j.contains("params")) {
      const json& pj = j["params"];
      d.params.gamma = parse_rational(pj.at("gamma"));
      d.params.delta = parse_rational(pj.at("delta"));
      d.params.epsilon = parse_rational(pj.at("epsilon"));
      for (const json& s : pj.at("shift_count")) d.params.shift_count[Edge(s.at(0).get<Vertex>(), s.at(1).get<Vertex>())] = s.at(2).get<int>();
    }
    return d;
  });
}

// flow network

inline json to_json(const FlowNetwork& f) {
  json pos = json::array();
  for (const Point& p : f.position) pos.push_back(point_json(p));
  return {{"graph", to_json(f.digraph)}, {"positions", pos}, {"k", f.k}};
}

inline FlowNetwork flow_network_from_json(const json& j) {
  return detail::guarded("flow network", [&] {
    FlowNetwork f;
    f.digraph = digraph_from_json(j.at("graph"));
    for (const json& p : j.at("positions")) f.position.push_back(parse_point(p));
    f.k = j.value("k", 1);
    if (static_cast<int>(f.position.size()) != f.digraph.num_vertices())
      throw FormatError("flow network needs one position per vertex");
    return f;
  });
}

inline constexpr const char* kind_of(const Graph*) { return "graph"; }
inline constexpr const char* kind_of(const DiGraph*) { return "graph"; }
inline constexpr const char* kind_of(const PlanarEmbedding*) { return "embedding"; }
inline constexpr const char* kind_of(const OnePlanarEmbedding*) { return "embedding"; }
inline constexpr const char* kind_of(const BarLayout*) { return "layout"; }
inline constexpr const char* kind_of(const PolylineDrawing*) { return "drawing"; }
inline constexpr const char* kind_of(const FlowNetwork*) { return "flow_network"; }

/// Wraps any domain object in a manifest.
template <class T>
json emit(const T& x) {
  return emit_manifest(kind_of(static_cast<const T*>(nullptr)), to_json(x));
}

template <class T>
T parse(const json& j);

template <>
inline Graph parse<Graph>(const json& j) { return graph_from_json(expect_kind(j, "graph")); }
template <>
inline DiGraph parse<DiGraph>(const json& j) { return digraph_from_json(expect_kind(j, "graph")); }
template <>
inline PlanarEmbedding parse<PlanarEmbedding>(const json& j) { return embedding_from_json(expect_kind(j, "embedding")); }
template <>
inline OnePlanarEmbedding parse<OnePlanarEmbedding>(const json& j) { return one_planar_from_json(expect_kind(j, "embedding")); }
template <>
inline BarLayout parse<BarLayout>(const json& j) { return layout_from_json(expect_kind(j, "layout")); }
template <>
inline PolylineDrawing parse<PolylineDrawing>(const json& j) { return drawing_from_json(expect_kind(j, "drawing")); }
template <>
inline FlowNetwork parse<FlowNetwork>(const json& j) { return flow_network_from_json(expect_kind(j, "flow_network")); }

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  out << text;
}

}  // namespace io
}  // namespace barvis

#endif  // BARVIS_IO_HPP
