#include "doctest.h"
#include "kbound/errors.hpp"
#include "kbound/fixtures.hpp"
#include "kbound/io.hpp"

namespace fx = kbound::fixtures;

TEST_CASE("rng stream is the standard engine") {
  fx::Rng rng(5489);
  std::uint64_t x = 0;
  for (int i = 0; i < 10000; ++i) x = rng.next();
  CHECK(x == 9981545732273789042ull);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(rng.below(7) < 7);
    const auto b = rng.between(3, 5);
    CHECK(b >= 3);
    CHECK(b <= 5);
  }
}

TEST_CASE("fixture shapes") {
  const auto s = fx::sheets(3);
  CHECK(s.size(0) == 3);
  CHECK(s.size(1) == 3);
  CHECK(s.size(2) == 3);
  const auto p = fx::par_edges(4);
  CHECK(p.top_dim() == 1);
  CHECK(p.size(1) == 4);

  const std::size_t binomial[4][5] = {{3, 3}, {4, 6, 4}, {5, 10, 10, 5}};
  for (int n = 1; n <= 3; ++n) {
    const auto h = fx::hollow_simplex(n);
    for (int d = 0; d <= n; ++d) {
      CHECK(h.size(d) == binomial[n - 1][static_cast<std::size_t>(d)]);
    }
  }
  CHECK(fx::hollow_simplex(2).find("t123").has_value());
  CHECK(fx::hollow_simplex(8).find("e1-10").has_value());

  const auto t = fx::tetra2();
  CHECK(t.size(0) == 5);
  CHECK(t.size(1) == 9);
  CHECK(t.size(2) == 7);
  const auto sub = fx::tetra2_subdiv();
  CHECK(sub.size(0) == 6);
  CHECK(sub.size(1) == 12);
  CHECK(sub.size(2) == 9);
  CHECK_FALSE(sub.find("D").has_value());
}

TEST_CASE("random complexes are deterministic and closed") {
  const auto a = kbound::io::dump(kbound::io::to_json(fx::random_complex(2, 6, 0.4, 7)));
  const auto b = kbound::io::dump(kbound::io::to_json(fx::random_complex(2, 6, 0.4, 7)));
  const auto c = kbound::io::dump(kbound::io::to_json(fx::random_complex(2, 6, 0.4, 8)));
  CHECK(a == b);
  CHECK(a != c);
  CHECK(fx::random_complex(3, 6, 0.0, 1).size(3) == 0);
  CHECK(fx::random_complex(1, 5, 1.0, 1).size(1) >= 10);
  CHECK_THROWS_AS(fx::random_complex(2, 2, 0.5, 1), kbound::Error);
  CHECK_THROWS_AS(fx::random_complex(2, 6, 1.5, 1), kbound::Error);

  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const auto inst = fx::corpus_instance(seed);
    const auto& k = inst.complex;
    CHECK(k.top_dim() >= 1);
    CHECK(k.top_dim() <= 3);
    CHECK(k.size(k.top_dim()) >= 1);
    CHECK(k.size(k.top_dim()) <= 8);
    CHECK(inst.k >= 1);
    CHECK(inst.k <= 4);
    CHECK(inst.cycles.size() == inst.k);
    for (const auto& z : inst.cycles) CHECK(k.is_cycle(z));
    CHECK(kbound::io::to_json(fx::corpus_instance(seed).complex) == kbound::io::to_json(k));
  }
}
