#pragma once

// Definition-level counts on a lattice diagram. Nothing here uses a formula,
// recurrence or generating function: these are the reference values the rest
// of the library is checked against.

#include <cstddef>
#include <vector>

#include "flc/int_poly.hpp"
#include "flc/lattice.hpp"

namespace flc {

/// Boolean interval [bottom, top] of dimension k (2^k vertices).
struct CubeInterval {
  Vertex bottom;
  Vertex top;
  std::size_t dimension;
};

inline constexpr std::size_t kCensusVertexBound = 1u << 16;

IntPoly rank_polynomial(const LatticeDiagram& l);

/// Every induced hypercube once, as (bottom, subset of the bottom's upper
/// covers). Each interval is checked to have rank span k and 2^k vertices.
/// Ordered by bottom vertex, then by subset.
std::vector<CubeInterval> enumerate_cubes(const LatticeDiagram& l,
                                          std::size_t max_vertices = kCensusVertexBound);

IntPoly cube_polynomial(const LatticeDiagram& l);

/// Cubes whose vertex set lies in no other cube's vertex set. A cube inside
/// a larger cube is inside one of the next dimension, whose bottom is the
/// same vertex or one of its lower covers; only those are searched.
IntPoly maximal_cube_polynomial(const LatticeDiagram& l,
                                std::size_t max_vertices = kCensusVertexBound);

/// Degrees in the underlying undirected graph.
IntPoly degree_polynomial(const LatticeDiagram& l);

/// Indegree of v = number of vertices covering v.
IntPoly indegree_polynomial(const LatticeDiagram& l);

/// Outdegree of v = number of vertices v covers.
IntPoly outdegree_polynomial(const LatticeDiagram& l);

/// Number of induced subgraphs of g isomorphic to the k-cube, by subset
/// search. Independent of any lattice structure. |V| <= 30 and k <= 3.
BigInt generic_cube_count(const UndirectedGraph& g, std::size_t k);

/// All census polynomials of one diagram.
struct PolynomialCensus {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  IntPoly rank;
  IntPoly cube;
  IntPoly maxcube;
  IntPoly degree;
  IntPoly indegree;
  IntPoly outdegree;
};

PolynomialCensus take_census(const LatticeDiagram& l);

}  // namespace flc
