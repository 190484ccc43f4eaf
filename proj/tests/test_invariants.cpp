#include <algorithm>
#include <vector>

#include "doctest.h"
#include "kbound/boundance.hpp"
#include "kbound/errors.hpp"
#include "kbound/fixtures.hpp"
#include "kbound/invariants.hpp"
#include "oracles.hpp"

using kbound::Chain;
using kbound::Complex;
namespace fx = kbound::fixtures;

namespace {

std::vector<std::string> ids_in(const Complex& k, const kbound::SimplexMasks& masks, int d) {
  std::vector<std::string> out;
  for (auto i : masks[static_cast<std::size_t>(d)].ones()) out.push_back(k.table(d)[i].id);
  return out;
}

// Homology dimension from brute-force ranks of boundary columns.
std::size_t brute_homology(const Complex& k, int d) {
  auto column_rank = [&](int dim) -> std::size_t {
    if (dim == 0) return k.size(0) > 0 ? 1 : 0;
    if (dim > k.top_dim()) return 0;
    std::vector<oracle::Mask> cols;
    for (std::size_t i = 0; i < k.size(dim); ++i) {
      cols.push_back(oracle::boundary(k, dim, oracle::Mask{1} << i));
    }
    return oracle::rank(cols);
  };
  return k.size(d) - column_rank(d) - column_rank(d + 1);
}

}  // namespace

TEST_CASE("degree strata") {
  const auto t = fx::tetra2();
  const auto s = kbound::stratify(t);
  REQUIRE(s.buckets.size() == 2);
  CHECK(s.buckets.at(3).size() == 3);
  CHECK(s.buckets.at(2).size() == 6);
  const auto y3 = kbound::upper_stratum(t, 3);
  CHECK(ids_in(t, y3, 1) == std::vector<std::string>{"e12", "e13", "e23"});
  CHECK(ids_in(t, y3, 0) == std::vector<std::string>{"1", "2", "3"});
  CHECK(y3[2].none());
  const auto x2 = kbound::stratum(t, 2);
  CHECK(x2[2].count() == 7);
  CHECK(x2[1].count() == 9);
  CHECK(kbound::subcomplex(t, y3).top_dim() == 1);

  const auto s4 = fx::sheets(4);
  CHECK(kbound::stratify(s4).buckets.at(4).size() == 3);

  const auto sphere = fx::hollow_simplex(2);
  const auto ss = kbound::stratify(sphere);
  CHECK(ss.buckets.size() == 1);
  CHECK(ss.buckets.at(2).size() == 6);
  for (const auto& m : kbound::upper_stratum(sphere, 3)) CHECK(m.none());
}

TEST_CASE("irregularity skeleton") {
  const auto sphere = kbound::irregularity_skeleton(fx::hollow_simplex(2));
  CHECK(sphere.size(0) == 4);
  CHECK(sphere.size(1) == 0);

  const auto t = kbound::irregularity_skeleton(fx::tetra2());
  CHECK(t.top_dim() == 1);
  CHECK(t.size(0) == 5);
  CHECK(t.size(1) == 3);
  CHECK(t.find("e12").has_value());
  CHECK_FALSE(t.find("e14").has_value());

  const auto s3 = kbound::irregularity_skeleton(fx::sheets(3));
  CHECK(s3.size(0) == 3);
  CHECK(s3.size(1) == 3);
}

TEST_CASE("homology") {
  const auto sphere = fx::hollow_simplex(2);
  CHECK(kbound::homology_dim(sphere, 2) == 1);
  CHECK(kbound::homology_dim(sphere, 1) == 0);
  CHECK(kbound::homology_dim(sphere, 0) == 0);
  CHECK(kbound::homology_dim(sphere, 0, false) == 1);
  CHECK(kbound::homology_dim(fx::tetra2(), 2) == 2);
  const auto circle = fx::hollow_simplex(1);
  CHECK(kbound::homology_dim(circle, 1) == 1);
  CHECK(kbound::homology_dim(circle, 0) == 0);
  CHECK_THROWS_AS(kbound::homology_dim(circle, 2), kbound::Error);

  for (int n = 1; n <= 3; ++n) {
    const auto h = fx::hollow_simplex(n);
    for (int d = 0; d <= n; ++d) {
      CHECK(kbound::homology_dim(h, d) == (d == n ? 1u : 0u));
      CHECK(brute_homology(h, d) == kbound::homology_dim(h, d));
    }
  }
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto k = fx::corpus_instance(seed).complex;
    for (int d = 0; d <= k.top_dim(); ++d) {
      CHECK(brute_homology(k, d) == kbound::homology_dim(k, d));
    }
  }
}

TEST_CASE("Gamma") {
  const auto t = fx::tetra2();
  const auto g = kbound::gamma_basis(t);
  REQUIRE(g.size() == 1);
  CHECK(g[0] == t.chain(1, {"e12", "e13", "e23"}));
  CHECK(kbound::gamma_basis(fx::hollow_simplex(2)).empty());
  const auto s3 = fx::sheets(3);
  CHECK(kbound::gamma_basis(s3) == std::vector{s3.chain(1, {"e12", "e13", "e23"})});

  const auto g3 = kbound::gamma_k(t, 3);
  CHECK(g3.closed_under_addition);
  CHECK(g3.elements.size() == 2);
  REQUIRE(g3.gamma_k_basis.has_value());
  CHECK(g3.gamma_k_basis->size() == 1);
  const auto g4 = kbound::gamma_k(t, 4);
  CHECK(g4.closed_under_addition);
  CHECK(g4.elements.size() == 1);
  CHECK(g4.gamma_k_basis->empty());

  const auto s5 = fx::sheets(5);
  CHECK(kbound::gamma_k(s5, 5).gamma_k_basis->size() == 1);
  CHECK(kbound::gamma_k(s5, 6).gamma_k_basis->empty());
  CHECK_THROWS_AS(kbound::gamma_k(t, 0), kbound::Error);
}

TEST_CASE("Gamma properties over fixtures and the corpus") {
  std::vector<Complex> complexes{fx::tetra2(), fx::tetra2_subdiv(), fx::sheets(4),
                                 fx::hollow_simplex(3)};
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    complexes.push_back(fx::corpus_instance(seed).complex);
  }
  for (const auto& k : complexes) {
    const int n = k.top_dim();
    const auto basis = kbound::gamma_basis(k);
    const auto y3 = kbound::upper_stratum(k, 3);
    for (const auto& z : basis) {
      CHECK(k.is_cycle(z));
      CHECK(oracle::bounds(k, oracle::to_mask(z), oracle::all_tops(k)));
      for (auto f : z.support.ones()) CHECK(y3[static_cast<std::size_t>(n) - 1].test(f));
    }

    const auto degrees = k.degrees();
    std::vector<Chain> previous;
    for (std::size_t count = 1; count <= 4; ++count) {
      const auto r = kbound::gamma_k(k, count);
      CHECK(r.elements.size() <= (std::size_t{1} << basis.size()));
      if (count == 1) CHECK(r.elements.size() == (std::size_t{1} << basis.size()));
      for (const auto& e : r.elements) {
        if (count > 1) CHECK(std::find(previous.begin(), previous.end(), e) != previous.end());
        for (auto f : e.support.ones()) CHECK(degrees[f] >= count);
      }
      previous = r.elements;
    }
  }
}

TEST_CASE("invariance under subdivision of one triangle") {
  const auto a = fx::tetra2();
  const auto b = fx::tetra2_subdiv();
  CHECK(kbound::gamma_basis(a).size() == kbound::gamma_basis(b).size());
  for (std::size_t k : {3, 4}) {
    CHECK(kbound::gamma_k(a, k).gamma_k_basis->size() ==
          kbound::gamma_k(b, k).gamma_k_basis->size());
  }
}
