#include "flc/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

#include "flc/errors.hpp"

namespace flc {

LatticeDiagram::LatticeDiagram(std::size_t vertex_count, std::vector<Arc> arcs)
    : lower_covers_(vertex_count), upper_covers_(vertex_count), rank_(vertex_count, 0) {
  if (vertex_count == 0) throw InvalidArgument("a lattice has at least one vertex");
  std::sort(arcs.begin(), arcs.end());
  if (std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end()) {
    throw InvalidArgument("duplicate arc in lattice diagram");
  }
  for (const auto& a : arcs) {
    if (a.upper >= vertex_count || a.lower >= vertex_count) {
      throw InvalidArgument("arc endpoint outside the vertex set");
    }
    if (a.upper == a.lower) throw InvalidArgument("lattice diagram contains a loop");
    lower_covers_[a.upper].push_back(a.lower);
    upper_covers_[a.lower].push_back(a.upper);
  }
  arc_count_ = arcs.size();

  std::vector<Vertex> minima;
  std::vector<Vertex> maxima;
  for (Vertex v = 0; v < vertex_count; ++v) {
    if (lower_covers_[v].empty()) minima.push_back(v);
    if (upper_covers_[v].empty()) maxima.push_back(v);
  }
  if (minima.size() != 1) throw InvalidArgument("lattice diagram needs a unique minimum");
  if (maxima.size() != 1) throw InvalidArgument("lattice diagram needs a unique maximum");
  minimum_ = minima.front();
  maximum_ = maxima.front();

  // Ranks in topological order from the minimum; every arc must span one level.
  std::vector<std::size_t> pending(vertex_count);
  for (Vertex v = 0; v < vertex_count; ++v) pending[v] = lower_covers_[v].size();
  std::vector<Vertex> ready{minimum_};
  std::size_t visited = 0;
  while (!ready.empty()) {
    const Vertex v = ready.back();
    ready.pop_back();
    ++visited;
    for (auto u : upper_covers_[v]) {
      if (--pending[u] == 0) {
        const std::size_t r = rank_[lower_covers_[u].front()] + 1;
        for (auto w : lower_covers_[u]) {
          if (rank_[w] + 1 != r) throw InvalidArgument("lattice diagram is not graded");
        }
        rank_[u] = r;
        ready.push_back(u);
      }
    }
  }
  if (visited != vertex_count) throw InvalidArgument("lattice diagram contains a cycle");
}

std::vector<Arc> LatticeDiagram::arcs() const {
  std::vector<Arc> out;
  out.reserve(arc_count_);
  for (Vertex u = 0; u < size(); ++u) {
    for (auto v : lower_covers_[u]) out.push_back({u, v});
  }
  return out;
}

std::optional<Vertex> LatticeDiagram::find_filter(const ElementSet& filter) const {
  for (Vertex v = 0; v < filters_.size(); ++v) {
    if (filters_[v] == filter) return v;
  }
  return std::nullopt;
}

std::string LatticeDiagram::vertex_label(Vertex v) const {
  if (is_filter_built()) return filters_.at(v).to_bit_string(*n_source_);
  return "v" + std::to_string(v);
}

LatticeDiagram LatticeDiagram::order_dual() const {
  std::vector<Arc> reversed;
  reversed.reserve(arc_count_);
  for (const auto& a : arcs()) reversed.push_back({a.lower, a.upper});
  return LatticeDiagram(size(), std::move(reversed));
}

OrderIndex::OrderIndex(const LatticeDiagram& l) {
  const std::size_t n = l.size();
  down_.assign(n, VertexSet(n));
  up_.assign(n, VertexSet(n));
  std::vector<Vertex> by_rank(n);
  std::iota(by_rank.begin(), by_rank.end(), Vertex{0});
  std::stable_sort(by_rank.begin(), by_rank.end(),
                   [&](Vertex a, Vertex b) { return l.rank(a) < l.rank(b); });
  for (auto v : by_rank) {
    down_[v].set(v);
    for (auto w : l.lower_covers(v)) down_[v] |= down_[w];
  }
  for (auto it = by_rank.rbegin(); it != by_rank.rend(); ++it) {
    const Vertex v = *it;
    up_[v].set(v);
    for (auto w : l.upper_covers(v)) up_[v] |= up_[w];
  }
}

VertexSet OrderIndex::interval(Interval k) const {
  if (!leq(k.bottom, k.top)) throw InvalidArgument("interval bottom is not below its top");
  return up_.at(k.bottom) & down_.at(k.top);
}

LatticeDiagram filter_lattice(const Poset& p, std::size_t max_vertices) {
  auto filters = enumerate_filters(p);
  if (filters.size() > max_vertices) {
    throw CapacityError("filter lattice has " + std::to_string(filters.size()) +
                        " vertices, bound is " + std::to_string(max_vertices));
  }
  std::unordered_map<ElementSet, Vertex, ElementSetHash> index;
  index.reserve(filters.size());
  for (Vertex v = 0; v < filters.size(); ++v) index.emplace(filters[v], v);

  std::vector<Arc> arcs;
  for (Vertex v = 0; v < filters.size(); ++v) {
    const ElementSet& y = filters[v];
    // Removing a minimal member of Y gives the filters covering Y.
    for (auto e : y.members()) {
      ElementSet strictly_below = p.down_set(e);
      strictly_below.reset(e);
      if (strictly_below.intersects(y)) continue;
      ElementSet smaller = y;
      smaller.reset(e);
      arcs.push_back({index.at(smaller), v});
    }
  }
  LatticeDiagram l(filters.size(), std::move(arcs));
  for (Vertex v = 0; v < filters.size(); ++v) {
    if (l.rank(v) != p.size() - filters[v].count()) {
      throw std::logic_error("filter lattice rank disagrees with filter size");
    }
  }
  l.filters_ = std::move(filters);
  l.n_source_ = p.size();
  return l;
}

bool is_cutting(const LatticeDiagram& l, Interval k) {
  const OrderIndex order(l);
  const VertexSet inside = order.interval(k);
  if (inside.test(l.maximum()) || inside.test(l.minimum())) return true;
  // Look for a maximum-to-minimum path that avoids the interval.
  std::vector<bool> seen(l.size(), false);
  std::vector<Vertex> stack{l.maximum()};
  seen[l.maximum()] = true;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    if (v == l.minimum()) return false;
    for (auto w : l.lower_covers(v)) {
      if (!seen[w] && !inside.test(w)) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return true;
}

namespace {

// Cover relation of a finite order given by its down-sets (reflexive).
std::vector<Arc> reduce(const std::vector<VertexSet>& down) {
  const std::size_t n = down.size();
  std::vector<VertexSet> strict(down);
  for (Vertex v = 0; v < n; ++v) strict[v].reset(v);
  std::vector<Arc> arcs;
  for (Vertex z = 0; z < n; ++z) {
    VertexSet implied(n);
    for (auto u = strict[z].find_first(); u != VertexSet::npos; u = strict[z].find_next(u)) {
      implied |= strict[u];
    }
    const VertexSet covers = strict[z] - implied;
    for (auto w = covers.find_first(); w != VertexSet::npos; w = covers.find_next(w)) {
      arcs.push_back({z, w});
    }
  }
  return arcs;
}

}  // namespace

LatticeDiagram convex_expansion(const LatticeDiagram& l, Interval k) {
  const OrderIndex order(l);
  const VertexSet inside = order.interval(k);
  if (!is_cutting(l, k)) throw InvalidArgument("convex expansion needs a cutting interval");

  const std::size_t n = l.size();
  std::vector<Vertex> copy_of(n, VertexSet::npos);  // host vertex -> K' vertex
  std::vector<Vertex> members;
  for (auto v = inside.find_first(); v != VertexSet::npos; v = inside.find_next(v)) {
    copy_of[v] = n + members.size();
    members.push_back(v);
  }
  const std::size_t total = n + members.size();

  // Down-sets of the expanded order:
  //   x  <= y   when x <= y in L
  //   x' <  y   when x <= y in L and x in K
  //   x  <  y'  when x <  y in L, y in K and x outside K
  //   x' <= y'  when x <= y in K
  std::vector<VertexSet> down(total, VertexSet(total));
  for (Vertex y = 0; y < n; ++y) {
    const VertexSet& below = order.down_set(y);
    for (auto x = below.find_first(); x != VertexSet::npos; x = below.find_next(x)) {
      down[y].set(x);
      if (inside.test(x)) down[y].set(copy_of[x]);
    }
  }
  for (auto y : members) {
    VertexSet& d = down[copy_of[y]];
    const VertexSet& below = order.down_set(y);
    for (auto x = below.find_first(); x != VertexSet::npos; x = below.find_next(x)) {
      if (inside.test(x)) {
        d.set(copy_of[x]);
      } else {
        d.set(x);
      }
    }
  }
  return LatticeDiagram(total, reduce(down));
}

LatticeDiagram interval_diagram(const LatticeDiagram& l, Interval k) {
  const OrderIndex order(l);
  const VertexSet inside = order.interval(k);
  std::vector<Vertex> local(l.size(), VertexSet::npos);
  std::size_t count = 0;
  for (auto v = inside.find_first(); v != VertexSet::npos; v = inside.find_next(v)) local[v] = count++;
  std::vector<Arc> arcs;
  for (auto v = inside.find_first(); v != VertexSet::npos; v = inside.find_next(v)) {
    for (auto w : l.lower_covers(v)) {
      if (inside.test(w)) arcs.push_back({local[v], local[w]});
    }
  }
  return LatticeDiagram(count, std::move(arcs));
}

std::size_t UndirectedGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nbrs : adjacency) twice += nbrs.size();
  return twice / 2;
}

bool UndirectedGraph::adjacent(Vertex a, Vertex b) const {
  const auto& nbrs = adjacency.at(a);
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

UndirectedGraph underlying_graph(const LatticeDiagram& l) {
  UndirectedGraph g;
  g.adjacency.resize(l.size());
  for (Vertex u = 0; u < l.size(); ++u) {
    for (auto v : l.lower_covers(u)) {
      g.adjacency[u].push_back(v);
      g.adjacency[v].push_back(u);
    }
  }
  for (auto& nbrs : g.adjacency) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  return g;
}

namespace {

using Signature = std::vector<std::size_t>;

// Rank, degrees, and the sorted degree profile of the neighbourhood.
std::vector<Signature> signatures(const LatticeDiagram& l) {
  std::vector<Signature> sig(l.size());
  for (Vertex v = 0; v < l.size(); ++v) {
    Signature s{l.rank(v), l.upper_covers(v).size(), l.lower_covers(v).size()};
    std::vector<std::size_t> profile;
    for (auto u : l.upper_covers(v)) profile.push_back(l.lower_covers(u).size() * 1000 + l.upper_covers(u).size());
    std::sort(profile.begin(), profile.end());
    s.insert(s.end(), profile.begin(), profile.end());
    s.push_back(static_cast<std::size_t>(-1));
    profile.clear();
    for (auto w : l.lower_covers(v)) profile.push_back(l.lower_covers(w).size() * 1000 + l.upper_covers(w).size());
    std::sort(profile.begin(), profile.end());
    s.insert(s.end(), profile.begin(), profile.end());
    sig[v] = std::move(s);
  }
  return sig;
}

class IsoSearch {
 public:
  IsoSearch(const LatticeDiagram& a, const LatticeDiagram& b)
      : a_(a), b_(b), sig_a_(signatures(a)), sig_b_(signatures(b)),
        map_(a.size(), VertexSet::npos), used_(b.size(), false) {
    // Breadth-first from the minimum so each vertex after the first has an
    // already-placed neighbour constraining it.
    std::vector<bool> queued(a.size(), false);
    order_.push_back(a.minimum());
    queued[a.minimum()] = true;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      const Vertex v = order_[i];
      for (auto span : {a.upper_covers(v), a.lower_covers(v)}) {
        for (auto w : span) {
          if (!queued[w]) {
            queued[w] = true;
            order_.push_back(w);
          }
        }
      }
    }
  }

  bool run() {
    if (order_.size() != a_.size()) return false;
    return place(0);
  }

 private:
  bool consistent(Vertex v, Vertex image) const {
    // Arcs between v and already-placed vertices must map exactly.
    std::size_t placed_a = 0;
    for (auto span : {a_.upper_covers(v), a_.lower_covers(v)}) {
      for (auto w : span) {
        if (map_[w] != VertexSet::npos) ++placed_a;
      }
    }
    for (auto w : a_.upper_covers(v)) {
      if (map_[w] == VertexSet::npos) continue;
      const auto ups = b_.upper_covers(image);
      if (std::find(ups.begin(), ups.end(), map_[w]) == ups.end()) return false;
    }
    for (auto w : a_.lower_covers(v)) {
      if (map_[w] == VertexSet::npos) continue;
      const auto downs = b_.lower_covers(image);
      if (std::find(downs.begin(), downs.end(), map_[w]) == downs.end()) return false;
    }
    std::size_t placed_b = 0;
    for (auto span : {b_.upper_covers(image), b_.lower_covers(image)}) {
      for (auto w : span) {
        if (used_[w]) ++placed_b;
      }
    }
    return placed_a == placed_b;
  }

  bool place(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    for (Vertex image = 0; image < b_.size(); ++image) {
      if (used_[image] || sig_b_[image] != sig_a_[v] || !consistent(v, image)) continue;
      map_[v] = image;
      used_[image] = true;
      if (place(depth + 1)) return true;
      map_[v] = VertexSet::npos;
      used_[image] = false;
    }
    return false;
  }

  const LatticeDiagram& a_;
  const LatticeDiagram& b_;
  std::vector<Signature> sig_a_;
  std::vector<Signature> sig_b_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
};

}  // namespace

bool iso_check(const LatticeDiagram& a, const LatticeDiagram& b, std::size_t max_vertices) {
  if (a.size() > max_vertices || b.size() > max_vertices) {
    throw CapacityError("isomorphism check is bounded to " + std::to_string(max_vertices) + " vertices");
  }
  if (a.size() != b.size() || a.arc_count() != b.arc_count() || a.height() != b.height()) return false;
  auto sa = signatures(a);
  auto sb = signatures(b);
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  return IsoSearch(a, b).run();
}

ConvexDecomposition convex_decomposition(const Poset& p, Label x) {
  const Element e = p.index_of(x);
  Poset without = remove_element(p, x);
  Poset star = star_remove(p, x);
  LatticeDiagram base = filter_lattice(without);

  // Element indices of P - x are those of P with e squeezed out.
  auto shift = [e](Element i) { return i < e ? i : i - 1; };
  ElementSet above;  // up(x) - x
  ElementSet not_below;  // (P - x) - down(x)
  for (Element i = 0; i < p.size(); ++i) {
    if (i == e) continue;
    if (p.leq(e, i)) above.set(shift(i));
    if (!p.leq(i, e)) not_below.set(shift(i));
  }
  // Anti-inclusion: the larger filter is the lower vertex.
  const auto bottom = base.find_filter(not_below);
  const auto top = base.find_filter(above);
  if (!bottom || !top) throw std::logic_error("convex decomposition interval endpoints are not filters");
  return ConvexDecomposition{std::move(without), std::move(star), std::move(base), Interval{*bottom, *top}};
}

void write_dot(std::ostream& out, const LatticeDiagram& l, std::string_view graph_name) {
  out << "digraph " << graph_name << " {\n";
  for (Vertex v = 0; v < l.size(); ++v) {
    out << "  n" << v << " [label=\"" << l.vertex_label(v) << "\", rank=" << l.rank(v) << "];\n";
  }
  for (Vertex u = 0; u < l.size(); ++u) {
    auto lowers = std::vector<Vertex>(l.lower_covers(u).begin(), l.lower_covers(u).end());
    std::sort(lowers.begin(), lowers.end());
    for (auto v : lowers) out << "  n" << u << " -> n" << v << ";\n";
  }
  out << "}\n";
}

}  // namespace flc
