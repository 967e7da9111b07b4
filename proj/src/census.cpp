#include "flc/census.hpp"

#include <algorithm>
#include <bit>

#include "flc/errors.hpp"

namespace flc {

namespace {

IntPoly histogram(const std::vector<std::size_t>& values) {
  std::vector<BigInt> counts;
  for (auto v : values) {
    if (v >= counts.size()) counts.resize(v + 1, BigInt{0});
    counts[v] += 1;
  }
  return IntPoly(std::move(counts));
}

void check_bound(const LatticeDiagram& l, std::size_t max_vertices) {
  if (l.size() > max_vertices) {
    throw CapacityError("cube census is bounded to " + std::to_string(max_vertices) + " vertices, got " +
                        std::to_string(l.size()));
  }
}

// Cubes grouped by bottom vertex; subsets of the bottom's upper covers are
// bit masks, joins are built one cover at a time.
struct CubeTable {
  struct Entry {
    std::uint32_t mask;
    Vertex top;
    std::size_t dimension;
  };
  std::vector<std::vector<Entry>> by_bottom;
};

CubeTable build_cubes(const LatticeDiagram& l, const OrderIndex& order) {
  CubeTable table;
  table.by_bottom.resize(l.size());
  for (Vertex a = 0; a < l.size(); ++a) {
    const auto covers = l.upper_covers(a);
    const std::size_t d = covers.size();
    if (d >= 32) throw CapacityError("vertex with 32 or more upper covers");
    const std::uint32_t full = (std::uint32_t{1} << d) - 1;
    std::vector<Vertex> join(std::size_t{1} << d, VertexSet::npos);
    join[0] = a;
    auto& out = table.by_bottom[a];
    out.push_back({0, a, 0});
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      const std::size_t last = static_cast<std::size_t>(std::bit_width(mask) - 1);
      const std::uint32_t rest = mask & ~(1U << last);
      const Vertex prev = join[rest];
      if (prev == VertexSet::npos) continue;
      const Vertex s = covers[last];
      Vertex found = VertexSet::npos;
      if (rest == 0) {
        found = s;
      } else {
        for (auto c : l.upper_covers(prev)) {
          if (order.leq(s, c)) {
            found = c;
            break;
          }
        }
      }
      if (found == VertexSet::npos) continue;
      const std::size_t k = static_cast<std::size_t>(std::popcount(mask));
      if (l.rank(found) != l.rank(a) + k) continue;
      if (k >= 2 && (order.up_set(a) & order.down_set(found)).count() != (std::size_t{1} << k)) continue;
      join[mask] = found;
      out.push_back({mask, found, k});
    }
  }
  return table;
}

}  // namespace

IntPoly rank_polynomial(const LatticeDiagram& l) {
  std::vector<std::size_t> ranks(l.size());
  for (Vertex v = 0; v < l.size(); ++v) ranks[v] = l.rank(v);
  return histogram(ranks);
}

std::vector<CubeInterval> enumerate_cubes(const LatticeDiagram& l, std::size_t max_vertices) {
  check_bound(l, max_vertices);
  const OrderIndex order(l);
  const CubeTable table = build_cubes(l, order);
  std::vector<CubeInterval> cubes;
  for (Vertex a = 0; a < l.size(); ++a) {
    for (const auto& e : table.by_bottom[a]) cubes.push_back({a, e.top, e.dimension});
  }
  return cubes;
}

IntPoly cube_polynomial(const LatticeDiagram& l) {
  std::vector<std::size_t> dims;
  for (const auto& c : enumerate_cubes(l)) dims.push_back(c.dimension);
  return histogram(dims);
}

IntPoly maximal_cube_polynomial(const LatticeDiagram& l, std::size_t max_vertices) {
  check_bound(l, max_vertices);
  const OrderIndex order(l);
  const CubeTable table = build_cubes(l, order);
  std::vector<std::size_t> dims;
  for (Vertex a = 0; a < l.size(); ++a) {
    for (const auto& cube : table.by_bottom[a]) {
      const std::size_t next = cube.dimension + 1;
      auto contains_cube = [&](Vertex bottom) {
        for (const auto& other : table.by_bottom[bottom]) {
          if (other.dimension == next && order.leq(bottom, a) && order.leq(cube.top, other.top)) return true;
        }
        return false;
      };
      bool maximal = !contains_cube(a);
      for (auto b : l.lower_covers(a)) {
        if (!maximal) break;
        maximal = !contains_cube(b);
      }
      if (maximal) dims.push_back(cube.dimension);
    }
  }
  return histogram(dims);
}

IntPoly degree_polynomial(const LatticeDiagram& l) {
  std::vector<std::size_t> deg(l.size());
  for (Vertex v = 0; v < l.size(); ++v) deg[v] = l.upper_covers(v).size() + l.lower_covers(v).size();
  return histogram(deg);
}

IntPoly indegree_polynomial(const LatticeDiagram& l) {
  std::vector<std::size_t> deg(l.size());
  for (Vertex v = 0; v < l.size(); ++v) deg[v] = l.upper_covers(v).size();
  return histogram(deg);
}

IntPoly outdegree_polynomial(const LatticeDiagram& l) {
  std::vector<std::size_t> deg(l.size());
  for (Vertex v = 0; v < l.size(); ++v) deg[v] = l.lower_covers(v).size();
  return histogram(deg);
}

namespace {

// Backtracking bijection from `chosen` onto the k-cube {0,1}^k.
bool is_hypercube(const UndirectedGraph& g, const std::vector<Vertex>& chosen) {
  const std::size_t m = chosen.size();
  std::vector<std::size_t> image(m, 0);
  std::vector<bool> used(m, false);
  auto place = [&](auto&& self, std::size_t i) -> bool {
    if (i == m) return true;
    for (std::size_t c = 0; c < m; ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        const bool cube_edge = std::popcount(c ^ image[j]) == 1;
        ok = cube_edge == g.adjacent(chosen[i], chosen[j]);
      }
      if (!ok) continue;
      used[c] = true;
      image[i] = c;
      if (self(self, i + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  return place(place, 0);
}

}  // namespace

BigInt generic_cube_count(const UndirectedGraph& g, std::size_t k) {
  if (g.vertex_count() > 30 || k > 3) {
    throw CapacityError("generic cube count is bounded to 30 vertices and k <= 3");
  }
  const std::size_t m = std::size_t{1} << k;
  const std::size_t n = g.vertex_count();
  BigInt total = 0;
  std::vector<Vertex> chosen;
  std::vector<std::size_t> inner_degree;  // induced degree of each chosen vertex

  auto extend = [&](auto&& self, Vertex from) -> void {
    if (chosen.size() == m) {
      if (is_hypercube(g, chosen)) total += 1;
      return;
    }
    for (Vertex v = from; v + (m - chosen.size()) <= n; ++v) {
      std::size_t dv = 0;
      bool ok = true;
      for (std::size_t i = 0; i < chosen.size(); ++i) {
        if (g.adjacent(v, chosen[i])) {
          ++dv;
          if (inner_degree[i] + 1 > k) ok = false;
        }
      }
      if (!ok || dv > k) continue;
      for (std::size_t i = 0; i < chosen.size(); ++i) {
        if (g.adjacent(v, chosen[i])) ++inner_degree[i];
      }
      chosen.push_back(v);
      inner_degree.push_back(dv);
      self(self, v + 1);
      chosen.pop_back();
      inner_degree.pop_back();
      for (std::size_t i = 0; i < chosen.size(); ++i) {
        if (g.adjacent(v, chosen[i])) --inner_degree[i];
      }
    }
  };
  extend(extend, 0);
  return total;
}

PolynomialCensus take_census(const LatticeDiagram& l) {
  PolynomialCensus c;
  c.vertices = l.size();
  c.edges = l.arc_count();
  c.rank = rank_polynomial(l);
  c.cube = cube_polynomial(l);
  c.maxcube = maximal_cube_polynomial(l);
  c.degree = degree_polynomial(l);
  c.indegree = indegree_polynomial(l);
  c.outdegree = outdegree_polynomial(l);
  return c;
}

}  // namespace flc
