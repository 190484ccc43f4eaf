#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kbound/boundance.hpp"
#include "kbound/complex.hpp"

namespace kbound::graph {

// Graphs are complexes with n = 1: vertices are 0-simplices, edges are
// 1-simplices, and parallel edges are allowed. Vertices and edges are
// addressed by table index.

/// w0, e1, w1, ..., et, wt with pairwise distinct edges. A single vertex
/// and no edges is the trivial path.
struct Path {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> edges;

  friend bool operator==(const Path&, const Path&) = default;
};

struct VertexPair {
  std::size_t a = 0;
  std::size_t b = 0;
};

/// Throws DimensionMismatch unless g is 1-dimensional.
void require_graph(const Complex& g);

/// Throws BadArgument if `p` is not a path of `g`.
void require_path(const Complex& g, const Path& p);

/// Sum of the path's edges.
Chain path_to_chain(const Complex& g, const Path& p);

/// A u-v path using only edges of `h`. Requires boundary(h) = u + v (or
/// zero when u == v, which yields the trivial path). Among shortest paths
/// returns the one with the lexicographically smallest edge sequence.
Path extract_path(const Complex& g, const Chain& h, std::size_t u,
                  std::size_t v);

/// Maximum number of pairwise edge-disjoint u-v paths, stopping early once
/// `limit` is reached. Unit-capacity augmenting paths; independent of the
/// chain machinery.
std::size_t edge_disjoint_paths(const Complex& g, std::size_t u, std::size_t v,
                                std::size_t limit);

/// Every vertex is k-edge-connected to itself.
bool k_edge_connected_flow(const Complex& g, std::size_t u, std::size_t v,
                           std::size_t k);

/// The 0-cycle a + b (trivial when a == b).
Chain pair_cycle(const Complex& g, VertexPair p);

/// k-boundance of the list of 0-cycles a_i + b_i.
bool pairs_boundant(const Complex& g, std::span<const VertexPair> pairs,
                    std::size_t k, Method method = Method::primal);

}  // namespace kbound::graph
