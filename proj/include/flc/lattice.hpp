#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flc/element_set.hpp"
#include "flc/poset.hpp"

namespace flc {

using Vertex = std::size_t;
using VertexSet = boost::dynamic_bitset<>;

/// Hasse-diagram arc from a covering vertex down to the vertex it covers.
struct Arc {
  Vertex upper;
  Vertex lower;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Closed interval [bottom, top] of a host diagram.
struct Interval {
  Vertex bottom;
  Vertex top;
};

/// Hasse diagram of a finite graded lattice with a unique minimum and
/// maximum. Ranks are distances from the minimum. Diagrams built from a
/// poset also carry the filter behind each vertex.
class LatticeDiagram {
 public:
  /// Validates arcs, uniqueness of the extremes and gradedness.
  LatticeDiagram(std::size_t vertex_count, std::vector<Arc> arcs);

  std::size_t size() const { return lower_covers_.size(); }
  std::size_t arc_count() const { return arc_count_; }
  std::vector<Arc> arcs() const;

  /// Vertices covered by v (targets of arcs leaving v).
  std::span<const Vertex> lower_covers(Vertex v) const { return lower_covers_.at(v); }
  /// Vertices covering v (sources of arcs entering v).
  std::span<const Vertex> upper_covers(Vertex v) const { return upper_covers_.at(v); }

  std::size_t rank(Vertex v) const { return rank_.at(v); }
  std::size_t height() const { return rank_.at(maximum_); }
  Vertex minimum() const { return minimum_; }
  Vertex maximum() const { return maximum_; }

  bool is_filter_built() const { return !filters_.empty(); }
  /// Size of the poset the filters come from.
  std::optional<std::size_t> n_source() const { return n_source_; }
  const ElementSet& filter(Vertex v) const { return filters_.at(v); }
  std::optional<Vertex> find_filter(const ElementSet& filter) const;

  /// Bit string of the filter, or "v<id>" for synthetic vertices.
  std::string vertex_label(Vertex v) const;

  /// Same vertices with every arc reversed.
  LatticeDiagram order_dual() const;

 private:
  friend LatticeDiagram filter_lattice(const Poset&, std::size_t);

  std::vector<std::vector<Vertex>> lower_covers_;
  std::vector<std::vector<Vertex>> upper_covers_;
  std::vector<std::size_t> rank_;
  std::size_t arc_count_ = 0;
  Vertex minimum_ = 0;
  Vertex maximum_ = 0;
  std::vector<ElementSet> filters_;
  std::optional<std::size_t> n_source_;
};

/// Reachability table of a diagram: the full order relation as bitsets.
class OrderIndex {
 public:
  explicit OrderIndex(const LatticeDiagram& l);

  bool leq(Vertex a, Vertex b) const { return down_[b].test(a); }
  /// {u : u <= v}
  const VertexSet& down_set(Vertex v) const { return down_.at(v); }
  /// {u : u >= v}
  const VertexSet& up_set(Vertex v) const { return up_.at(v); }

  VertexSet interval(Interval k) const;

 private:
  std::vector<VertexSet> down_;
  std::vector<VertexSet> up_;
};

inline constexpr std::size_t kDefaultLatticeVertexBound = 1u << 20;

/// Filters of p ordered by reverse inclusion. rank(Y) = |p| - |Y|; the
/// minimum is the whole ground set and the maximum is the empty filter.
LatticeDiagram filter_lattice(const Poset& p, std::size_t max_vertices = kDefaultLatticeVertexBound);

/// True iff every maximal chain of l meets the interval k.
bool is_cutting(const LatticeDiagram& l, Interval k);

/// L with a copy K' of the cutting K inserted directly below K. Throws
/// InvalidArgument when k is not an interval or not a cutting.
LatticeDiagram convex_expansion(const LatticeDiagram& l, Interval k);

/// The interval as a lattice of its own; vertices keep host order.
LatticeDiagram interval_diagram(const LatticeDiagram& l, Interval k);

struct UndirectedGraph {
  std::vector<std::vector<Vertex>> adjacency;  // sorted neighbour lists

  std::size_t vertex_count() const { return adjacency.size(); }
  std::size_t edge_count() const;
  bool adjacent(Vertex a, Vertex b) const;
};

UndirectedGraph underlying_graph(const LatticeDiagram& l);

inline constexpr std::size_t kIsoVertexBound = 200;

/// Rank-preserving digraph isomorphism by backtracking. Throws
/// CapacityError above `max_vertices`.
bool iso_check(const LatticeDiagram& a, const LatticeDiagram& b,
               std::size_t max_vertices = kIsoVertexBound);

/// The pieces F(P - x) and the interval standing for F(P * x) inside it,
/// such that F(P) is isomorphic to the expansion of one by the other.
struct ConvexDecomposition {
  Poset without;  // P - x
  Poset star;     // P * x
  LatticeDiagram base;
  Interval cutting;
};

ConvexDecomposition convex_decomposition(const Poset& p, Label x);

/// Graphviz digraph; one node per vertex with a rank attribute.
void write_dot(std::ostream& out, const LatticeDiagram& l, std::string_view graph_name = "lattice");

}  // namespace flc
