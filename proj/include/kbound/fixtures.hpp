#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "kbound/complex.hpp"

namespace kbound::fixtures {

/// Seeded generator with a fixed output sequence on every platform: only
/// the raw mt19937_64 stream is used, never the std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1) with 53 bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  /// Uniform-ish in [0, bound); bound must be positive.
  std::size_t below(std::size_t bound) { return next() % bound; }
  /// Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) {
    return lo + below(hi - lo + 1);
  }
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

/// Vertices 1,2,3, edges e12,e13,e23 and k triangles T1..Tk over them.
Complex sheets(std::size_t k);
/// Vertices u,v and k parallel edges e1..ek.
Complex par_edges(std::size_t k);
/// Boundary of the (n+1)-simplex on vertices 1..n+2: an n-sphere.
Complex hollow_simplex(int n);
/// Three 2-disks A, B+C+D, E+F+G sharing the boundary circle 1-2-3, plus
/// the vertices 4 and 5 as cone points.
Complex tetra2();
/// tetra2 with D = 234 split at a new vertex x into 23x, 24x, 34x.
Complex tetra2_subdiv();
/// Every (n+1)-subset of v vertices becomes a top simplex with probability
/// `density`, and is then doubled with probability 0.1. Faces are created.
Complex random_complex(int n, std::size_t v, double density,
                       std::uint64_t seed);

/// `top_count` top simplices over random vertex tuples of `vertices`
/// vertices; roughly one in five repeats an earlier tuple.
Complex random_sized(int n, std::size_t vertices, std::size_t top_count,
                     Rng& rng);
/// Multigraph on `vertices` vertices with `edges` random non-loop edges.
Complex random_multigraph(std::size_t vertices, std::size_t edges, Rng& rng);

/// A random (n-1)-cycle: mostly boundaries of random top chains, sometimes
/// a random element of the cycle space, rarely the trivial cycle.
Chain random_cycle(const Complex& k, Rng& rng);
std::vector<Chain> random_cycle_list(const Complex& k, std::size_t length,
                                     Rng& rng);

/// One instance of the randomized equivalence corpus: n in 1..3, at most
/// eight top simplices over few vertices, k in 1..4, and a list of k cycles.
struct CorpusInstance {
  std::uint64_t seed = 0;
  Complex complex;
  std::vector<Chain> cycles;
  std::size_t k = 0;
};

CorpusInstance corpus_instance(std::uint64_t seed);

}  // namespace kbound::fixtures
