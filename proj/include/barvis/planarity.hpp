#ifndef BARVIS_PLANARITY_HPP
#define BARVIS_PLANARITY_HPP

#include <iterator>
#include <optional>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "barvis/embedding.hpp"
#include "barvis/errors.hpp"
#include "barvis/graph.hpp"

namespace barvis {

struct PlanarityResult {
  bool planar = false;
  std::optional<PlanarEmbedding> embedding;  // set when planar
  std::vector<Edge> kuratowski;              // K5/K3,3 subdivision when not
};

/// Boyer-Myrvold test. On success the embedding's outer face is the face
/// left of the first dart of the lowest-numbered non-isolated vertex.
inline PlanarityResult check_planarity(const Graph& g) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                           boost::property<boost::vertex_index_t, int>,
                                           boost::property<boost::edge_index_t, int>>;
  using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;

  const int n = g.num_vertices();
  BoostGraph bg(static_cast<std::size_t>(n));
  int index = 0;
  for (const Edge& e : g.edges()) {
    auto [ed, ok] = boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), bg);
    boost::put(boost::edge_index, bg, ed, index++);
  }

  PlanarityResult result;
  std::vector<std::vector<EdgeDesc>> storage(static_cast<std::size_t>(n));
  auto embedding_map = boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, bg));
  result.planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                                      boost::boyer_myrvold_params::embedding = embedding_map);
  if (result.planar) {
    std::vector<std::vector<Vertex>> rotation(static_cast<std::size_t>(n));
    std::optional<Dart> outer;
    for (int v = 0; v < n; ++v) {
      for (const EdgeDesc& ed : storage[v]) {
        int s = static_cast<int>(boost::source(ed, bg));
        int t = static_cast<int>(boost::target(ed, bg));
        rotation[v].push_back(s == v ? t : s);
      }
      if (!outer && !rotation[v].empty()) outer = Dart{v, rotation[v].front()};
    }
    result.embedding = PlanarEmbedding(std::move(rotation), outer);
    return result;
  }

  std::vector<EdgeDesc> witness;
  boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(witness));
  for (const EdgeDesc& ed : witness)
    result.kuratowski.emplace_back(static_cast<int>(boost::source(ed, bg)), static_cast<int>(boost::target(ed, bg)));
  return result;
}

inline bool is_planar(const Graph& g) { return check_planarity(g).planar; }

struct AugmentedEmbedding {
  PlanarEmbedding embedding;
  std::vector<Edge> added;
};

/// Makes a connected plane graph biconnected by adding edges inside faces:
/// whenever a face has consecutive darts (a,v),(v,b) whose edges lie in
/// different blocks, the chord {a,b} is added inside that face.
inline AugmentedEmbedding biconnect_planar_augment(PlanarEmbedding e) {
  AugmentedEmbedding out;
  {
    const Graph g = e.graph();
    if (!is_connected(g)) throw PreconditionError("biconnectivity augmentation needs a connected graph");
  }
  if (e.num_vertices() <= 2) {
    out.embedding = std::move(e);
    return out;
  }
  while (true) {
    const Graph g = e.graph();
    const BlockDecomposition blocks = block_decomposition(g);
    if (blocks.cut_vertices.empty()) break;
    const auto faces = e.faces();
    bool inserted = false;
    for (const auto& walk : faces.walks) {
      const std::size_t len = walk.size();
      for (std::size_t i = 0; i < len && !inserted; ++i) {
        const Dart in = walk[i];
        const Dart outd = walk[(i + 1) % len];
        const Vertex a = in.from, v = in.to, b = outd.to;
        if (a == b || e.has_edge(a, b)) continue;
        if (blocks.block_of(Edge(a, v)) == blocks.block_of(Edge(v, b))) continue;
        const Dart before_a = walk[(i + len - 1) % len];  // (x, a)
        e.insert_edge(a, before_a.from, b, v);
        out.added.emplace_back(a, b);
        inserted = true;
      }
      if (inserted) break;
    }
    if (!inserted) throw InternalError("biconnectivity augmentation found no insertable chord");
  }
  out.embedding = std::move(e);
  return out;
}

}  // namespace barvis

#endif  // BARVIS_PLANARITY_HPP
