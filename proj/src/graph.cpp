#include "kbound/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "kbound/errors.hpp"

namespace kbound::graph {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

void require_vertex(const Complex& g, std::size_t v) {
  if (v >= g.size(0)) {
    throw Error(ErrorKind::UnknownVertex,
                "vertex index " + std::to_string(v) + " out of range");
  }
}

std::size_t other_end(const Simplex& edge, std::size_t w) {
  return edge.vertices[0] == w ? edge.vertices[1] : edge.vertices[0];
}

}  // namespace

void require_graph(const Complex& g) {
  if (g.top_dim() != 1) {
    throw Error(ErrorKind::DimensionMismatch,
                "expected a graph (n = 1), got n = " +
                    std::to_string(g.top_dim()));
  }
}

void require_path(const Complex& g, const Path& p) {
  require_graph(g);
  if (p.vertices.size() != p.edges.size() + 1) {
    throw Error(ErrorKind::BadArgument, "path needs one more vertex than edges");
  }
  for (auto v : p.vertices) require_vertex(g, v);
  const auto edges = g.table(1);
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (p.edges[i] >= edges.size()) {
      throw Error(ErrorKind::UnknownSimplex,
                  "edge index " + std::to_string(p.edges[i]) + " out of range");
    }
    const auto& e = edges[p.edges[i]];
    const auto a = p.vertices[i];
    const auto b = p.vertices[i + 1];
    const bool joins = (e.vertices[0] == a && e.vertices[1] == b) ||
                       (e.vertices[0] == b && e.vertices[1] == a);
    if (!joins) {
      throw Error(ErrorKind::BadArgument,
                  "edge '" + e.id + "' does not join consecutive path vertices");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (p.edges[j] == p.edges[i]) {
        throw Error(ErrorKind::BadArgument, "path repeats edge '" + e.id + "'");
      }
    }
  }
}

Chain path_to_chain(const Complex& g, const Path& p) {
  require_path(g, p);
  Chain c = g.zero_chain(1);
  for (auto e : p.edges) c.support.flip(e);
  return c;
}

Path extract_path(const Complex& g, const Chain& h, std::size_t u,
                  std::size_t v) {
  require_graph(g);
  require_vertex(g, u);
  require_vertex(g, v);
  if (h.dim != 1 || h.support.size() != g.size(1)) {
    throw Error(ErrorKind::DimensionMismatch, "expected a 1-chain of the graph");
  }
  Chain ends = g.zero_chain(0);
  ends.support.flip(u);
  ends.support.flip(v);
  if (g.boundary(h) != ends) {
    throw Error(ErrorKind::BoundaryMismatch,
                "the chain's boundary is not the endpoint sum");
  }
  if (u == v) return Path{{u}, {}};

  const auto edges = g.table(1);
  std::vector<std::vector<std::size_t>> incident(g.size(0));
  for (auto e : h.support.ones()) {
    incident[edges[e].vertices[0]].push_back(e);
    incident[edges[e].vertices[1]].push_back(e);
  }

  // Distances to v inside the support; then walk greedily from u along the
  // smallest edge that gets one step closer.
  std::vector<std::size_t> dist(g.size(0), kUnreached);
  std::queue<std::size_t> queue;
  dist[v] = 0;
  queue.push(v);
  while (!queue.empty()) {
    const auto w = queue.front();
    queue.pop();
    for (auto e : incident[w]) {
      const auto x = other_end(edges[e], w);
      if (dist[x] == kUnreached) {
        dist[x] = dist[w] + 1;
        queue.push(x);
      }
    }
  }
  if (dist[u] == kUnreached) {
    throw Error(ErrorKind::NoPath, "no path inside the chain's support");
  }

  Path p{{u}, {}};
  for (std::size_t w = u; w != v;) {
    for (auto e : incident[w]) {  // ascending edge order
      const auto x = other_end(edges[e], w);
      if (dist[x] + 1 == dist[w]) {
        p.edges.push_back(e);
        p.vertices.push_back(x);
        w = x;
        break;
      }
    }
  }
  return p;
}

std::size_t edge_disjoint_paths(const Complex& g, std::size_t u, std::size_t v,
                                std::size_t limit) {
  require_graph(g);
  require_vertex(g, u);
  require_vertex(g, v);
  if (u == v) return limit;

  // Arc 2i runs from the edge's first vertex to its second, arc 2i+1 back;
  // each is the other's reverse and both start with capacity 1.
  const auto edges = g.table(1);
  std::vector<int> residual(2 * edges.size(), 1);
  std::vector<std::vector<std::size_t>> out(g.size(0));
  auto head = [&](std::size_t arc) {
    const auto& e = edges[arc / 2];
    return arc % 2 == 0 ? e.vertices[1] : e.vertices[0];
  };
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out[edges[i].vertices[0]].push_back(2 * i);
    out[edges[i].vertices[1]].push_back(2 * i + 1);
  }

  std::size_t flow = 0;
  while (flow < limit) {
    std::vector<std::size_t> via(g.size(0), kUnreached);
    std::vector<bool> seen(g.size(0), false);
    std::queue<std::size_t> queue;
    seen[u] = true;
    queue.push(u);
    while (!queue.empty() && !seen[v]) {
      const auto w = queue.front();
      queue.pop();
      for (auto arc : out[w]) {
        const auto x = head(arc);
        if (residual[arc] > 0 && !seen[x]) {
          seen[x] = true;
          via[x] = arc;
          queue.push(x);
        }
      }
    }
    if (!seen[v]) break;
    for (auto x = v; x != u;) {
      const auto arc = via[x];
      residual[arc] -= 1;
      residual[arc ^ 1] += 1;
      x = head(arc ^ 1);
    }
    ++flow;
  }
  return flow;
}

bool k_edge_connected_flow(const Complex& g, std::size_t u, std::size_t v,
                           std::size_t k) {
  return edge_disjoint_paths(g, u, v, k) >= k;
}

Chain pair_cycle(const Complex& g, VertexPair p) {
  require_graph(g);
  require_vertex(g, p.a);
  require_vertex(g, p.b);
  Chain c = g.zero_chain(0);
  c.support.flip(p.a);
  c.support.flip(p.b);
  return c;
}

bool pairs_boundant(const Complex& g, std::span<const VertexPair> pairs,
                    std::size_t k, Method method) {
  std::vector<Chain> cycles;
  cycles.reserve(pairs.size());
  for (const auto& p : pairs) cycles.push_back(pair_cycle(g, p));
  return is_k_boundant(g, cycles, k, method);
}

}  // namespace kbound::graph
