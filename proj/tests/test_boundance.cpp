#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "kbound/boundance.hpp"
#include "kbound/errors.hpp"
#include "kbound/fixtures.hpp"
#include "kbound/io.hpp"
#include "oracles.hpp"

using kbound::Chain;
using kbound::Complex;
using kbound::Method;
using kbound::SimplexRef;
namespace fx = kbound::fixtures;

namespace {

Chain triangle_cycle(const Complex& k) { return k.chain(1, {"e12", "e13", "e23"}); }

std::vector<Chain> copies(const Chain& c, std::size_t count) {
  return std::vector<Chain>(count, c);
}

std::vector<std::string> ids_of(const Complex& k, const std::vector<SimplexRef>& refs) {
  std::vector<std::string> out;
  for (auto r : refs) out.push_back(k.simplex(r).id);
  std::sort(out.begin(), out.end());
  return out;
}

// Fixed point: a lower simplex joins once every simplex it is a face of has
// joined, provided it is a face of at least one.
std::set<SimplexRef> brute_closure(const Complex& k, const Chain& p) {
  std::set<SimplexRef> in;
  const int n = k.top_dim();
  for (auto i : p.support.ones()) in.insert({n, i});
  bool grew = true;
  while (grew) {
    grew = false;
    for (int d = 0; d < n; ++d) {
      for (std::size_t f = 0; f < k.size(d); ++f) {
        if (in.contains({d, f})) continue;
        std::size_t cofaces = 0;
        bool all_in = true;
        for (std::size_t s = 0; s < k.size(d + 1); ++s) {
          const auto& faces = k.table(d + 1)[s].faces;
          if (std::find(faces.begin(), faces.end(), f) == faces.end()) continue;
          ++cofaces;
          all_in = all_in && in.contains({d + 1, s});
        }
        if (cofaces > 0 && all_in) {
          in.insert({d, f});
          grew = true;
        }
      }
    }
  }
  return in;
}

Complex load_reproducer(const char* name, std::vector<Chain>& cycles, std::size_t& k) {
  const auto j = kbound::io::read_json_file(std::string(KBOUND_TEST_DATA) + "/" + name);
  auto complex = Complex::build(kbound::io::parse_complex(j["complex"]));
  cycles = kbound::io::parse_cycle_list(complex, j);
  k = j["k"].get<std::size_t>();
  return complex;
}

}  // namespace

TEST_CASE("bounding chains") {
  const auto t = fx::tetra2();
  CHECK(kbound::bounding_chain(t, t.zero_chain(1)) == t.zero_chain(2));
  const auto p = kbound::bounding_chain(t, triangle_cycle(t));
  REQUIRE(p.has_value());
  CHECK(t.boundary(*p) == triangle_cycle(t));

  kbound::RawComplex bare{2, {"1", "2", "3"}, {}};
  for (const auto& [id, a, b] : {std::tuple{"e12", "1", "2"}, {"e13", "1", "3"}, {"e23", "2", "3"}}) {
    bare.simplices.push_back({1, id, {a, b}, std::nullopt});
  }
  const auto empty_top = Complex::build(bare);
  CHECK_FALSE(kbound::bounding_chain(empty_top, triangle_cycle(empty_top)).has_value());
}

TEST_CASE("disjoint chains on tetra2") {
  const auto t = fx::tetra2();
  const auto c = triangle_cycle(t);
  const auto w = kbound::disjoint_chains(t, copies(c, 1), 3);
  REQUIRE(w.has_value());
  REQUIRE(w->chains.size() == 3);
  CHECK(w->chains[0] == t.chain(2, {"A"}));
  CHECK(w->chains[1] == t.chain(2, {"B", "C", "D"}));
  CHECK(w->chains[2] == t.chain(2, {"E", "F", "G"}));
  CHECK(w->assignment == std::vector<std::size_t>{0, 0, 0});
  CHECK(oracle::disjoint_chains(t, copies(c, 3), 3));
  CHECK_FALSE(kbound::disjoint_chains(t, copies(c, 4), 4).has_value());
  CHECK_FALSE(oracle::disjoint_chains(t, copies(c, 4), 4));
}

TEST_CASE("disjoint chains on sheets and with the trivial cycle") {
  const auto s2 = fx::sheets(2);
  CHECK_FALSE(kbound::disjoint_chains(s2, copies(triangle_cycle(s2), 3), 3).has_value());
  CHECK_FALSE(oracle::disjoint_chains(s2, copies(triangle_cycle(s2), 3), 3));

  const auto t = fx::tetra2();
  const std::vector<Chain> with_trivial{triangle_cycle(t), t.zero_chain(1)};
  const auto w = kbound::disjoint_chains(t, with_trivial, 5);
  REQUIRE(w.has_value());
  CHECK(w->chains.size() == 5);
  for (const auto& ch : w->chains) CHECK(ch.empty());
  CHECK(w->assignment == std::vector<std::size_t>(5, 1));
}

TEST_CASE("robust under deletion") {
  const auto t = fx::tetra2();
  const auto c = triangle_cycle(t);
  CHECK(kbound::robust_under_deletion(t, copies(c, 3), 3));
  CHECK_FALSE(kbound::robust_under_deletion(t, copies(c, 4), 4));
  // Deleting A, B and E removes every triangle on edge 12.
  const auto cut = t.delete_top_simplices(std::vector{*t.find("A"), *t.find("B"), *t.find("E")});
  CHECK_FALSE(kbound::bounding_chain(cut, cut.transfer(c, t)).has_value());

  for (std::size_t k = 1; k <= 5; ++k) {
    const auto s = fx::sheets(k);
    const auto sc = triangle_cycle(s);
    CHECK(kbound::robust_under_deletion(s, copies(sc, k), k));
    CHECK_FALSE(kbound::robust_under_deletion(s, copies(sc, k + 1), k + 1));
    CHECK(oracle::robust_under_deletion(s, copies(sc, k), k));
  }
  CHECK_THROWS_AS(kbound::robust_under_deletion(t, copies(c, 1), 0), kbound::Error);
}

TEST_CASE("dispatch and max boundance") {
  const auto s3 = fx::sheets(3);
  const auto c = triangle_cycle(s3);
  CHECK(kbound::is_k_boundant(s3, copies(c, 3), 3, Method::all));
  CHECK_FALSE(kbound::is_k_boundant(s3, copies(c, 4), 4, Method::all));
  for (std::size_t k = 1; k <= 6; ++k) {
    CHECK(kbound::is_k_boundant(s3, std::vector{s3.zero_chain(1)}, k, Method::all));
  }

  const auto s5 = fx::sheets(5);
  CHECK(kbound::max_boundance(s5, copies(triangle_cycle(s5), 1)) == 5);
  CHECK(kbound::max_boundance(s5, copies(triangle_cycle(s5), 1), Method::dual) == 5);
  const auto t = fx::tetra2();
  CHECK(kbound::max_boundance(t, copies(triangle_cycle(t), 1)) == 3);
  CHECK(kbound::max_boundance(t, std::vector{triangle_cycle(t), t.zero_chain(1)}) ==
        kbound::kUnbounded);
  CHECK_THROWS_AS(kbound::max_boundance(t, std::vector<Chain>{}), kbound::Error);

  // Two edge-disjoint paths join 1 and 2 on a triangle; a non-bounding
  // cycle is not even 1-boundant.
  const auto circle = fx::hollow_simplex(1);
  CHECK(kbound::max_boundance(circle, copies(circle.chain(0, {"1", "2"}), 1)) == 2);
  const auto cut = circle.delete_top_simplices(std::vector{SimplexRef{1, 0}, SimplexRef{1, 1}});
  CHECK(kbound::max_boundance(cut, copies(cut.chain(0, {"1", "2"}), 1)) == 0);

  CHECK_THROWS_AS(kbound::is_k_boundant(t, copies(t.chain(1, {"e12"}), 1), 1), kbound::Error);
  CHECK_THROWS_AS(kbound::is_k_boundant(t, std::vector{triangle_cycle(t), t.chain(1, {"e14", "e24", "e12"})},
                                        2, Method::recursive),
                  kbound::Error);
}

TEST_CASE("cobordance") {
  const auto t = fx::tetra2();
  const auto c = triangle_cycle(t);
  for (std::size_t k = 1; k <= 5; ++k) CHECK(kbound::cobordant(t, c, c, k));
  const auto bd_b = t.boundary(t.chain(2, {"B"}));
  const auto bd_c = t.boundary(t.chain(2, {"C"}));
  CHECK(kbound::cobordant(t, bd_b, bd_c, 2));
  CHECK(oracle::disjoint_chains(t, copies(bd_b + bd_c, 2), 2));

  const auto s2 = fx::sheets(2);
  CHECK_FALSE(kbound::cobordant(s2, triangle_cycle(s2), s2.zero_chain(1), 3));

  std::vector<Chain> bounding;
  for (std::size_t mask = 0; mask < (1u << 7); mask += 5) {
    Chain p = t.zero_chain(2);
    for (std::size_t i = 0; i < 7; ++i) p.support.set(i, (mask >> i) & 1);
    bounding.push_back(t.boundary(p));
  }
  CHECK(kbound::cobordance_classes(t, bounding, 1).size() == 1);
  CHECK(kbound::cobordance_classes(t, std::vector{c}, 3).size() == 1);
  const auto classes =
      kbound::cobordance_classes(s2, std::vector{triangle_cycle(s2), s2.zero_chain(1)}, 3);
  CHECK(classes == std::vector<std::vector<std::size_t>>{{0}, {1}});
}

TEST_CASE("closure sets and surgery") {
  const auto t = fx::tetra2();
  CHECK(kbound::closure_set(t, t.zero_chain(2)).empty());

  const auto s2 = fx::sheets(2);
  CHECK(ids_of(s2, kbound::closure_set(s2, s2.chain(2, {"T1"}))) ==
        std::vector<std::string>{"T1"});

  const auto efg = t.chain(2, {"E", "F", "G"});
  const auto closure = kbound::closure_set(t, efg);
  CHECK(ids_of(t, closure) ==
        std::vector<std::string>{"5", "E", "F", "G", "e15", "e25", "e35"});
  const auto brute = brute_closure(t, efg);
  CHECK(std::set<SimplexRef>(closure.begin(), closure.end()) == brute);

  CHECK(kbound::surgery(t, t.zero_chain(2), t.zero_chain(1)) == t);

  const auto peeled = kbound::surgery(s2, s2.chain(2, {"T1"}), triangle_cycle(s2));
  CHECK(peeled.size(2) == 1);
  CHECK(peeled.find("T2").has_value());
  CHECK(peeled.size(1) == 3);
  CHECK(peeled.size(0) == 3);

  const auto cut = kbound::surgery(t, efg, triangle_cycle(t));
  CHECK(cut.size(2) == 4);
  CHECK(cut.size(1) == 6);
  CHECK(cut.size(0) == 4);
  for (const char* gone : {"E", "F", "G", "e15", "e25", "e35", "5"}) {
    CHECK_FALSE(cut.find(gone).has_value());
  }
  CHECK(Complex::build(cut.to_raw()) == cut);

  CHECK_THROWS_AS(kbound::surgery(t, t.chain(2, {"A"}), t.zero_chain(1)), kbound::Error);
}

TEST_CASE("recursive boundance") {
  const auto s3 = fx::sheets(3);
  const auto c = triangle_cycle(s3);
  CHECK(kbound::recursive_boundant(s3, c, 0));
  CHECK(kbound::recursive_boundant(s3, c, 3));
  CHECK_FALSE(kbound::recursive_boundant(s3, c, 4));
  const auto t = fx::tetra2();
  CHECK(kbound::recursive_boundant(t, triangle_cycle(t), 3));
  CHECK_FALSE(kbound::recursive_boundant(t, triangle_cycle(t), 4));
}

TEST_CASE("the list form of the deletion characterization fails") {
  std::vector<Chain> cycles;
  std::size_t k = 0;
  const auto g = load_reproducer("list_counterexample.json", cycles, k);
  CHECK(k == 4);
  CHECK_FALSE(oracle::disjoint_chains(g, cycles, k));
  CHECK(oracle::robust_under_deletion(g, cycles, k));
  CHECK_FALSE(kbound::is_k_boundant(g, cycles, k, Method::primal));
  CHECK(kbound::is_k_boundant(g, cycles, k, Method::dual));
  CHECK_THROWS_AS(kbound::is_k_boundant(g, cycles, k, Method::all), kbound::MethodDisagreement);
}

TEST_CASE("the single-cycle form fails too, and so does transitivity") {
  std::vector<Chain> cycles;
  std::size_t k = 0;
  const auto x = load_reproducer("single_counterexample.json", cycles, k);
  CHECK(k == 2);
  const Chain c = cycles[0];
  CHECK_FALSE(oracle::disjoint_chains(x, cycles, k));
  CHECK(oracle::robust_under_deletion(x, cycles, k));
  CHECK_FALSE(kbound::recursive_boundant(x, c, 2));
  try {
    kbound::is_k_boundant(x, cycles, k, Method::all);
    FAIL("expected a disagreement");
  } catch (const kbound::MethodDisagreement& e) {
    const auto repro = kbound::io::Json::parse(e.reproducer());
    CHECK(repro["verdicts"]["primal"] == false);
    CHECK(repro["verdicts"]["dual"] == true);
    CHECK(repro["k"] == 2);
  }

  // 0 ~ b and b ~ c for the boundary b of triangle 1-3-4, yet not 0 ~ c.
  const auto b = x.chain(1, {"1-3", "3-4", "1-4"});
  const auto zero = x.zero_chain(1);
  CHECK(kbound::cobordant(x, zero, b, 2));
  CHECK(kbound::cobordant(x, b, c, 2));
  CHECK_FALSE(kbound::cobordant(x, zero, c, 2));
  CHECK(oracle::disjoint_chains(x, copies(b, 2), 2));
  CHECK(oracle::disjoint_chains(x, copies(b + c, 2), 2));
  CHECK_THROWS_AS(kbound::cobordance_classes(x, std::vector{zero, b, c}, 2),
                  kbound::TheoremViolation);
}

TEST_CASE("corpus: implementations agree with brute force") {
  std::size_t yes = 0;
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    const auto inst = fx::corpus_instance(seed);
    const auto& k = inst.complex;
    const auto w = kbound::disjoint_chains(k, inst.cycles, inst.k);
    CHECK(w.has_value() == oracle::disjoint_chains(k, inst.cycles, inst.k));
    CHECK(kbound::robust_under_deletion(k, inst.cycles, inst.k) ==
          oracle::robust_under_deletion(k, inst.cycles, inst.k));
    if (w) {
      ++yes;
      CHECK_FALSE(kbound::witness_defect(k, inst.cycles, *w, inst.k).has_value());
      // Independent re-check of the witness.
      oracle::Mask used = 0;
      for (std::size_t i = 0; i < w->chains.size(); ++i) {
        const auto m = oracle::to_mask(w->chains[i]);
        CHECK((used & m) == 0);
        used |= m;
        CHECK(oracle::boundary(k, k.top_dim(), m) ==
              oracle::to_mask(inst.cycles[w->assignment[i]]));
      }
      // Monotone in k.
      if (inst.k > 1) CHECK(kbound::is_k_boundant(k, inst.cycles, inst.k - 1));
    }
  }
  CHECK(yes > 100);
  CHECK(yes < 400);
}

TEST_CASE("corpus: degree bound and parallel copies") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto inst = fx::corpus_instance(seed);
    const auto& k = inst.complex;
    const int n = k.top_dim();
    const auto& c = inst.cycles[0];
    if (c.empty()) continue;
    const auto b = kbound::max_boundance(k, copies(c, 1));
    const auto degrees = k.degrees();
    for (auto f : c.support.ones()) CHECK(degrees[f] >= b);

    // Doubling a top simplex (same faces) never lowers max boundance.
    auto raw = k.to_raw();
    const auto& first = k.table(n)[0];
    kbound::RawSimplex twin{n, first.id + "'", {}, std::vector<std::string>{}};
    for (auto v : first.vertices) twin.vertices.push_back(k.vertex_id(v));
    for (auto f : first.faces) twin.faces->push_back(k.table(n - 1)[f].id);
    raw.simplices.push_back(twin);
    const auto bigger = Complex::build(raw);
    CHECK(kbound::max_boundance(bigger, copies(bigger.transfer(c, k), 1)) >= b);
  }
}
