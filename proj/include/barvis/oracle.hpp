#ifndef BARVIS_ORACLE_HPP
#define BARVIS_ORACLE_HPP

#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "barvis/bar_layout.hpp"
#include "barvis/errors.hpp"
#include "barvis/graph.hpp"
#include "barvis/planarity.hpp"

namespace barvis {

enum class SearchMode {
  all_dags,        // every orientation of every subset of pairs, n <= 6
  hampath,         // complete targets: forced path 0->1->...->n-1 plus forward chords, n <= 8
  hampath_planar,  // as hampath, keeping only planar candidates
};

inline const char* to_string(SearchMode m) {
  switch (m) {
    case SearchMode::all_dags: return "all-dags";
    case SearchMode::hampath: return "hampath";
    case SearchMode::hampath_planar: return "hampath-planar";
  }
  return "?";
}

inline std::optional<SearchMode> parse_search_mode(const std::string& s) {
  for (SearchMode m : {SearchMode::all_dags, SearchMode::hampath, SearchMode::hampath_planar})
    if (s == to_string(m)) return m;
  return std::nullopt;
}

struct SearchReport {
  Graph target;
  SearchMode mode = SearchMode::all_dags;
  std::uint64_t candidates = 0;  // size of the search space, pruned branches included
  std::optional<DiGraph> witness;
  double seconds = 0;
};

namespace detail {

using Mask = std::uint32_t;

/// Undirected adjacency masks of the square of the DAG given by out-masks.
template <std::size_t N>
bool square_matches(const std::array<Mask, N>& out, const std::array<Mask, N>& in, int n, const std::vector<Mask>& target) {
  for (int v = 0; v < n; ++v) {
    Mask adj = out[v] | in[v];
    for (Mask m = out[v]; m; m &= m - 1) adj |= out[std::countr_zero(m)];
    for (Mask m = in[v]; m; m &= m - 1) adj |= in[std::countr_zero(m)];
    if (adj != target[v]) return false;
  }
  return true;
}

template <std::size_t N>
bool acyclic(const std::array<Mask, N>& out, int n) {
  Mask left = (Mask{1} << n) - 1;
  while (left) {
    Mask progress = 0;
    for (Mask m = left; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      if ((out[v] & left) == 0) progress |= Mask{1} << v;
    }
    if (!progress) return false;
    left &= ~progress;
  }
  return true;
}

template <std::size_t N>
DiGraph to_digraph(const std::array<Mask, N>& out, int n) {
  DiGraph g(n);
  for (int v = 0; v < n; ++v)
    for (Mask m = out[v]; m; m &= m - 1) g.add_arc(v, std::countr_zero(m));
  return g;
}

inline std::uint64_t pow_u64(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

class AllDagSearch {
 public:
  AllDagSearch(const Graph& target) : n_(target.num_vertices()), target_(static_cast<std::size_t>(n_), 0) {
    for (const Edge& e : target.edges()) {
      target_[e.u] |= Mask{1} << e.v;
      target_[e.v] |= Mask{1} << e.u;
    }
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v) pairs_.push_back({u, v});
  }

  std::uint64_t run(std::optional<DiGraph>& witness) {
    examined_ = 0;
    witness_ = &witness;
    rec(0);
    return examined_;
  }

 private:
  // Subtrees whose prefix already fails are counted without being visited:
  // arcs outside the target or a broken flow bound cannot be repaired by
  // adding more arcs.
  void rec(std::size_t i) {
    if (*witness_) {
      examined_ += pow_u64(3, static_cast<int>(pairs_.size() - i));
      return;
    }
    if (i == pairs_.size()) {
      ++examined_;
      if (acyclic(out_, n_) && square_matches(out_, in_, n_, target_)) *witness_ = to_digraph(out_, n_);
      return;
    }
    const auto [u, v] = pairs_[i];
    rec(i + 1);
    const bool allowed = (target_[u] >> v) & 1;
    for (int dir = 0; dir < 2; ++dir) {
      const Vertex a = dir == 0 ? u : v, b = dir == 0 ? v : u;
      if (!allowed) {
        examined_ += pow_u64(3, static_cast<int>(pairs_.size() - i - 1));
        continue;
      }
      out_[a] |= Mask{1} << b;
      in_[b] |= Mask{1} << a;
      if (flow_ok(a) && flow_ok(b)) {
        rec(i + 1);
      } else {
        examined_ += pow_u64(3, static_cast<int>(pairs_.size() - i - 1));
      }
      out_[a] &= ~(Mask{1} << b);
      in_[b] &= ~(Mask{1} << a);
    }
  }

  bool flow_ok(Vertex v) const { return std::min(std::popcount(out_[v]), std::popcount(in_[v])) <= 1; }

  int n_;
  std::vector<Mask> target_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
  std::array<Mask, 8> out_{}, in_{};
  std::optional<DiGraph>* witness_ = nullptr;
  std::uint64_t examined_ = 0;
};

}  // namespace detail

/// Exhaustive search for a 1-flow DAG whose square is `target`.
inline SearchReport search_1flow_preimage(const Graph& target, SearchMode mode) {
  const auto start = std::chrono::steady_clock::now();
  SearchReport r;
  r.target = target;
  r.mode = mode;
  const int n = target.num_vertices();

  if (mode == SearchMode::all_dags) {
    if (n > 6) throw PreconditionError("all-dags search supports at most 6 vertices, got " + std::to_string(n));
    r.candidates = detail::AllDagSearch(target).run(r.witness);
  } else {
    if (n > 8) throw PreconditionError("hampath search supports at most 8 vertices, got " + std::to_string(n));
    if (target.num_edges() != static_cast<std::size_t>(n) * (n - 1) / 2)
      throw PreconditionError("hampath search needs a complete target graph");
    // In a DAG whose square is complete every pair is comparable, so the
    // topological order is total and consecutive vertices are joined.
    std::vector<std::pair<Vertex, Vertex>> chords;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 2; v < n; ++v) chords.push_back({u, v});
    const std::uint64_t total = std::uint64_t{1} << chords.size();
    const detail::Mask full = n >= 1 ? (detail::Mask{1} << n) - 1 : 0;
    std::vector<detail::Mask> want(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) want[v] = full & ~(detail::Mask{1} << v);
    for (std::uint64_t code = 0; code < total; ++code) {
      ++r.candidates;
      if (r.witness) continue;
      std::array<detail::Mask, 8> out{}, in{};
      for (Vertex v = 0; v + 1 < n; ++v) {
        out[v] |= detail::Mask{1} << (v + 1);
        in[v + 1] |= detail::Mask{1} << v;
      }
      for (std::size_t i = 0; i < chords.size(); ++i)
        if ((code >> i) & 1) {
          out[chords[i].first] |= detail::Mask{1} << chords[i].second;
          in[chords[i].second] |= detail::Mask{1} << chords[i].first;
        }
      bool ok = true;
      for (Vertex v = 0; v < n && ok; ++v) ok = std::min(std::popcount(out[v]), std::popcount(in[v])) <= 1;
      if (!ok || !detail::square_matches(out, in, n, want)) continue;
      DiGraph d = detail::to_digraph(out, n);
      if (mode == SearchMode::hampath_planar && !is_planar(d.underlying())) continue;
      r.witness = std::move(d);
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

struct LayoutSearchReport {
  std::optional<BarLayout> layout;
  int width = 0;                // integer endpoints lie in [0, width]
  std::uint64_t nodes = 0;      // partial layouts visited
};

namespace detail {

class LayoutSearch {
 public:
  LayoutSearch(const Graph& target, int width) : target_(target), n_(target.num_vertices()), width_(width) {}

  std::optional<BarLayout> run(std::uint64_t& nodes) {
    level_vertex_.assign(static_cast<std::size_t>(n_), -1);
    cover_.assign(static_cast<std::size_t>(n_), 0);
    lr_.assign(static_cast<std::size_t>(n_), {0, 0});
    used_ = 0;
    nodes_ = &nodes;
    if (!rec(0)) return std::nullopt;
    std::vector<Bar> bars(static_cast<std::size_t>(n_));
    for (int lvl = 0; lvl < n_; ++lvl) {
      const Vertex v = level_vertex_[lvl];
      bars[v] = Bar{v, Rational(lvl), Rational(lr_[lvl].first), Rational(lr_[lvl].second)};
    }
    return BarLayout(std::move(bars));
  }

 private:
  // Bars of levels below `lvl` are final; the pairs among them already
  // match the target because higher bars never lie between them.
  bool rec(int lvl) {
    ++*nodes_;
    if (lvl == n_) return true;
    for (Vertex v = 0; v < n_; ++v) {
      if ((used_ >> v) & 1) continue;
      for (int l = 0; l < width_; ++l)
        for (int r = l + 1; r <= width_; ++r) {
          Mask cols = 0;
          for (int c = l; c < r; ++c) cols |= Mask{1} << c;
          level_vertex_[lvl] = v;
          cover_[lvl] = cols;
          lr_[lvl] = {l, r};
          if (!consistent(lvl)) continue;
          used_ |= Mask{1} << v;
          if (rec(lvl + 1)) return true;
          used_ &= ~(Mask{1} << v);
        }
    }
    return false;
  }

  bool consistent(int top) const {
    const Vertex v = level_vertex_[top];
    for (int low = 0; low < top; ++low) {
      bool seen = false;
      for (Mask m = cover_[top] & cover_[low]; m && !seen; m &= m - 1) {
        const int c = std::countr_zero(m);
        int between = 0;
        for (int mid = low + 1; mid < top; ++mid) between += (cover_[mid] >> c) & 1;
        seen = between <= 1;
      }
      if (seen != target_.has_edge(v, level_vertex_[low])) return false;
    }
    return true;
  }

  const Graph& target_;
  int n_;
  int width_;
  std::vector<Vertex> level_vertex_;
  std::vector<Mask> cover_;
  std::vector<std::pair<int, int>> lr_;
  Mask used_ = 0;
  std::uint64_t* nodes_ = nullptr;
};

}  // namespace detail

/// Searches bar layouts with one bar per level 0..n-1 and integer endpoints
/// in [0, width] for one whose strong bar 1-visibility graph is `target`,
/// trying widths 1..max_width in turn. The first hit in the fixed search
/// order is returned.
inline LayoutSearchReport search_strong1_layout(const Graph& target, int max_width = 12) {
  const int n = target.num_vertices();
  if (n > 10) throw PreconditionError("layout search supports at most 10 vertices");
  if (max_width > 30) throw PreconditionError("layout search width must be at most 30");
  LayoutSearchReport r;
  for (int w = 1; w <= max_width && !r.layout; ++w) {
    r.width = w;
    r.layout = detail::LayoutSearch(target, w).run(r.nodes);
  }
  if (r.layout) {
    const Graph g = strong_visibility_graph(*r.layout, 1);
    if (g.edges() != target.edges()) throw InternalError("layout search accepted a layout with the wrong graph");
  }
  return r;
}

enum class AuditClass { web1, oneplanar, quasiplanar };
enum class AuditVerdict { consistent, bound_exceeded, not_applicable, informational };

inline const char* to_string(AuditClass c) {
  switch (c) {
    case AuditClass::web1: return "web1";
    case AuditClass::oneplanar: return "oneplanar";
    case AuditClass::quasiplanar: return "quasiplanar";
  }
  return "?";
}

inline const char* to_string(AuditVerdict v) {
  switch (v) {
    case AuditVerdict::consistent: return "consistent";
    case AuditVerdict::bound_exceeded: return "bound-exceeded";
    case AuditVerdict::not_applicable: return "not-applicable";
    case AuditVerdict::informational: return "informational";
  }
  return "?";
}

inline std::optional<AuditClass> parse_audit_class(const std::string& s) {
  for (AuditClass c : {AuditClass::web1, AuditClass::oneplanar, AuditClass::quasiplanar})
    if (s == to_string(c)) return c;
  return std::nullopt;
}

struct AuditReport {
  AuditClass cls = AuditClass::web1;
  long n = 0;
  long m = 0;
  std::optional<long> bound;
  AuditVerdict verdict = AuditVerdict::not_applicable;
};

/// Edge count against the class bound: 6n-20 (web1), 4n-8 (oneplanar), both
/// for n >= 5; the quasi-planar value floor(6.5 n) is only reported.
inline AuditReport bound_audit(const Graph& g, AuditClass cls) {
  AuditReport r;
  r.cls = cls;
  r.n = g.num_vertices();
  r.m = static_cast<long>(g.num_edges());
  switch (cls) {
    case AuditClass::web1: r.bound = 6 * r.n - 20; break;
    case AuditClass::oneplanar: r.bound = 4 * r.n - 8; break;
    case AuditClass::quasiplanar:
      r.bound = 13 * r.n / 2;
      r.verdict = AuditVerdict::informational;
      return r;
  }
  if (r.n < 5) return r;
  r.verdict = r.m > *r.bound ? AuditVerdict::bound_exceeded : AuditVerdict::consistent;
  return r;
}

}  // namespace barvis

#endif  // BARVIS_ORACLE_HPP
