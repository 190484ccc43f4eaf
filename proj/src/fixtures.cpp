#include "kbound/fixtures.hpp"

#include <algorithm>
#include <numeric>

#include "kbound/errors.hpp"

namespace kbound::fixtures {

namespace {

RawSimplex make(std::string id, std::vector<std::string> vertices) {
  const int dim = static_cast<int>(vertices.size()) - 1;
  return RawSimplex{dim, std::move(id), std::move(vertices), std::nullopt};
}

std::vector<std::string> numbered(std::size_t count, const std::string& prefix,
                                  std::size_t first = 1) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(prefix + std::to_string(first + i));
  }
  return out;
}

RawComplex tetra2_raw() {
  RawComplex raw{2, numbered(5, ""), {}};
  for (const char* e : {"12", "13", "14", "15", "23", "24", "25", "34", "35"}) {
    raw.simplices.push_back(make(std::string("e") + e,
                                 {std::string(1, e[0]), std::string(1, e[1])}));
  }
  const std::pair<const char*, const char*> triangles[] = {
      {"A", "123"}, {"B", "124"}, {"C", "134"}, {"D", "234"},
      {"E", "125"}, {"F", "135"}, {"G", "235"}};
  for (const auto& [id, t] : triangles) {
    raw.simplices.push_back(
        make(id, {std::string(1, t[0]), std::string(1, t[1]), std::string(1, t[2])}));
  }
  return raw;
}

std::string tuple_id(const std::vector<std::size_t>& t,
                     const std::vector<std::string>& names, bool separate) {
  std::string id;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (separate && i > 0) id += "-";
    id += names[t[i]];
  }
  return id;
}

// Random (n+1)-subset of 0..v-1, sorted.
std::vector<std::size_t> random_tuple(std::size_t v, std::size_t size, Rng& rng) {
  std::vector<std::size_t> pool(v);
  std::iota(pool.begin(), pool.end(), 0);
  for (std::size_t i = 0; i < size; ++i) {
    std::swap(pool[i], pool[i + rng.below(v - i)]);
  }
  pool.resize(size);
  std::sort(pool.begin(), pool.end());
  return pool;
}

RawSimplex top_record(std::string id, const std::vector<std::size_t>& t,
                      const std::vector<std::string>& names) {
  std::vector<std::string> vs;
  for (auto i : t) vs.push_back(names[i]);
  return make(std::move(id), std::move(vs));
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::BadArgument, what);
}

}  // namespace

Complex sheets(std::size_t k) {
  RawComplex raw{2, {"1", "2", "3"}, {}};
  raw.simplices.push_back(make("e12", {"1", "2"}));
  raw.simplices.push_back(make("e13", {"1", "3"}));
  raw.simplices.push_back(make("e23", {"2", "3"}));
  for (const auto& id : numbered(k, "T")) {
    RawSimplex t = make(id, {"1", "2", "3"});
    t.faces = std::vector<std::string>{"e23", "e13", "e12"};
    raw.simplices.push_back(std::move(t));
  }
  return Complex::build(raw);
}

Complex par_edges(std::size_t k) {
  RawComplex raw{1, {"u", "v"}, {}};
  for (const auto& id : numbered(k, "e")) raw.simplices.push_back(make(id, {"u", "v"}));
  return Complex::build(raw);
}

Complex hollow_simplex(int n) {
  require(n >= 1 && n <= 12, "hollow-simplex needs 1 <= n <= 12");
  const std::size_t count = static_cast<std::size_t>(n) + 2;
  RawComplex raw{n, numbered(count, ""), {}};
  const bool separate = count > 9;
  for (int d = 1; d <= n; ++d) {
    const std::string prefix = d == 1   ? "e"
                               : d == 2 ? "t"
                               : d == 3 ? "k"
                                        : "s" + std::to_string(d) + "_";
    // Subsets of size d+1 in lexicographic order via a selection mask.
    std::vector<bool> pick(count, false);
    std::fill(pick.begin(), pick.begin() + d + 1, true);
    do {
      std::vector<std::size_t> t;
      for (std::size_t i = 0; i < count; ++i) {
        if (pick[i]) t.push_back(i);
      }
      raw.simplices.push_back(
          top_record(prefix + tuple_id(t, raw.vertices, separate), t, raw.vertices));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return Complex::build(raw);
}

Complex tetra2() { return Complex::build(tetra2_raw()); }

Complex tetra2_subdiv() {
  RawComplex raw = tetra2_raw();
  std::erase_if(raw.simplices, [](const RawSimplex& s) { return s.id == "D"; });
  raw.vertices.push_back("x");
  for (const char* v : {"2", "3", "4"}) {
    raw.simplices.push_back(make(std::string("e") + v + "x", {v, "x"}));
  }
  raw.simplices.push_back(make("23x", {"2", "3", "x"}));
  raw.simplices.push_back(make("24x", {"2", "4", "x"}));
  raw.simplices.push_back(make("34x", {"3", "4", "x"}));
  return Complex::build(raw);
}

Complex random_complex(int n, std::size_t v, double density,
                       std::uint64_t seed) {
  require(n >= 1, "random needs n >= 1");
  require(v >= static_cast<std::size_t>(n) + 1 && v <= 64,
          "random needs n+1 <= v <= 64");
  require(density >= 0.0 && density <= 1.0, "density must lie in [0, 1]");
  Rng rng(seed);
  RawComplex raw{n, numbered(v, ""), {}};
  std::size_t next_id = 1;
  std::vector<bool> pick(v, false);
  std::fill(pick.begin(), pick.begin() + n + 1, true);
  do {
    if (!rng.chance(density)) continue;
    std::vector<std::size_t> t;
    for (std::size_t i = 0; i < v; ++i) {
      if (pick[i]) t.push_back(i);
    }
    const int copies = rng.chance(0.1) ? 2 : 1;
    for (int c = 0; c < copies; ++c) {
      raw.simplices.push_back(
          top_record("s" + std::to_string(next_id++), t, raw.vertices));
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return Complex::build(raw, {.create_missing_faces = true});
}

Complex random_sized(int n, std::size_t vertices, std::size_t top_count,
                     Rng& rng) {
  require(n >= 1, "random complex needs n >= 1");
  require(vertices >= static_cast<std::size_t>(n) + 1,
          "random complex needs at least n+1 vertices");
  RawComplex raw{n, numbered(vertices, ""), {}};
  std::vector<std::vector<std::size_t>> tuples;
  for (std::size_t i = 0; i < top_count; ++i) {
    if (!tuples.empty() && rng.chance(0.2)) {
      tuples.push_back(tuples[rng.below(tuples.size())]);
    } else {
      tuples.push_back(random_tuple(vertices, static_cast<std::size_t>(n) + 1, rng));
    }
    raw.simplices.push_back(
        top_record("s" + std::to_string(i + 1), tuples.back(), raw.vertices));
  }
  return Complex::build(raw, {.create_missing_faces = true});
}

Complex random_multigraph(std::size_t vertices, std::size_t edges, Rng& rng) {
  require(vertices >= 2, "multigraph needs two vertices");
  RawComplex raw{1, numbered(vertices, "v", 0), {}};
  for (std::size_t i = 0; i < edges; ++i) {
    const auto t = random_tuple(vertices, 2, rng);
    raw.simplices.push_back(top_record("e" + std::to_string(i + 1), t, raw.vertices));
  }
  return Complex::build(raw);
}

Chain random_cycle(const Complex& k, Rng& rng) {
  const int n = k.top_dim();
  const double roll = rng.unit();
  if (roll < 0.05) return k.zero_chain(n - 1);
  if (roll < 0.75 && k.size(n) > 0) {
    // Boundary of a sparse or dense random top chain.
    const double p = rng.chance(0.5) ? 0.25 : 0.5;
    Chain top = k.zero_chain(n);
    for (std::size_t i = 0; i < k.size(n); ++i) {
      if (rng.chance(p)) top.support.set(i);
    }
    if (top.empty()) top.support.set(rng.below(k.size(n)));
    return k.boundary(top);
  }
  Chain c = k.zero_chain(n - 1);
  for (const auto& z : nullspace_basis(k.boundary_matrix(n - 1))) {
    if (rng.chance(0.5)) c.support ^= z;
  }
  return c;
}

std::vector<Chain> random_cycle_list(const Complex& k, std::size_t length,
                                     Rng& rng) {
  std::vector<Chain> out;
  for (std::size_t i = 0; i < length; ++i) {
    if (!out.empty() && rng.chance(0.15)) {
      out.push_back(out[rng.below(out.size())]);
    } else {
      out.push_back(random_cycle(k, rng));
    }
  }
  return out;
}

CorpusInstance corpus_instance(std::uint64_t seed) {
  Rng rng(seed);
  const int n = static_cast<int>(rng.between(1, 3));
  const auto vertices = rng.between(static_cast<std::size_t>(n) + 1,
                                    static_cast<std::size_t>(n) + 3);
  const auto tops = rng.between(1, 8);
  CorpusInstance inst{seed, random_sized(n, vertices, tops, rng), {}, 0};
  inst.k = rng.between(1, 4);
  inst.cycles = random_cycle_list(inst.complex, inst.k, rng);
  return inst;
}

}  // namespace kbound::fixtures
