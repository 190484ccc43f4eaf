#include "kbound/boundance.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

#include "kbound/errors.hpp"
#include "kbound/io.hpp"

namespace kbound {

std::optional<Method> parse_method(std::string_view name) {
  if (name == "primal") return Method::primal;
  if (name == "dual") return Method::dual;
  if (name == "recursive") return Method::recursive;
  if (name == "all") return Method::all;
  return std::nullopt;
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::primal: return "primal";
    case Method::dual: return "dual";
    case Method::recursive: return "recursive";
    case Method::all: return "all";
  }
  return "unknown";
}

void require_cycle_list(const Complex& k, std::span<const Chain> cycles) {
  const int n = k.top_dim();
  if (n < 1) {
    throw Error(ErrorKind::DimensionMismatch,
                "boundance needs a complex of dimension at least 1");
  }
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const Chain& c = cycles[i];
    if (c.dim != n - 1 || c.support.size() != k.size(n - 1)) {
      throw Error(ErrorKind::DimensionMismatch,
                  "list entry " + std::to_string(i) + " is not an " +
                      std::to_string(n - 1) + "-chain of this complex");
    }
    if (!k.is_cycle(c)) {
      throw Error(ErrorKind::NotACycle,
                  "list entry " + std::to_string(i) + " has nonzero boundary");
    }
  }
}

namespace {

// Distinct entries in first-occurrence order, with their first index.
struct Targets {
  std::vector<Gf2Vector> vectors;
  std::vector<std::size_t> first_index;
  std::optional<std::size_t> trivial;  // index of a trivial entry, if any
};

Targets distinct_targets(std::span<const Chain> cycles) {
  Targets t;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const auto& v = cycles[i].support;
    if (v.none()) {
      if (!t.trivial) t.trivial = i;
      continue;
    }
    if (std::find(t.vectors.begin(), t.vectors.end(), v) == t.vectors.end()) {
      t.vectors.push_back(v);
      t.first_index.push_back(i);
    }
  }
  return t;
}

std::string reproducer(const Complex& k, std::span<const Chain> cycles,
                       std::size_t count, const io::Json& extra) {
  io::Json j = {{"complex", io::to_json(k)},
                {"cycles", io::cycle_list_to_json(k, cycles)["cycles"]},
                {"k", count}};
  for (const auto& [key, value] : extra.items()) j[key] = value;
  return j.dump();
}

// Backtracking search for `count` pairwise disjoint top chains, each with
// boundary in `targets`. Only chains whose columns are linearly independent
// are generated: any bounding chain contains such a chain with the same
// boundary, and shrinking a chain never breaks disjointness.
//
// Chains are produced in increasing order of their smallest simplex, and
// within one slot in lexicographic order of their sorted index sequence.
// A subtree is entered only if some target is still reachable with the
// remaining allowed columns, which is an exact span-membership test.
class PackingSearch {
 public:
  PackingSearch(const Complex& k, std::vector<Gf2Vector> targets)
      : complex_(k),
        columns_(k.boundary_matrix(k.top_dim()).columns()),
        targets_(std::move(targets)),
        rows_(k.size(k.top_dim() - 1)) {}

  bool run(std::size_t count) {
    Gf2Vector allowed(columns_.size());
    for (std::size_t j = 0; j < columns_.size(); ++j) allowed.set(j);
    return fill(count, 0, allowed);
  }

  const std::vector<Gf2Vector>& chains() const { return chains_; }

 private:
  struct Slot {
    std::size_t remaining;
    const Gf2Vector& allowed;
    std::vector<Gf2Basis> suffix;  // suffix[j]: span of allowed columns >= j
  };

  bool fill(std::size_t remaining, std::size_t start, const Gf2Vector& allowed) {
    if (remaining == 0) return true;
    if (!enough_room(remaining, start, allowed)) return false;

    std::string key = std::to_string(remaining) + ":" + std::to_string(start);
    for (auto w : allowed.words()) key += ":" + std::to_string(w);
    if (failed_.contains(key)) return false;

    const std::size_t m = columns_.size();
    Slot slot{remaining, allowed, std::vector<Gf2Basis>(m + 1, Gf2Basis(rows_))};
    for (std::size_t j = m; j-- > start;) {
      slot.suffix[j] = slot.suffix[j + 1];
      if (allowed.test(j)) slot.suffix[j].insert(columns_[j]);
    }

    for (std::size_t j = start; j < m; ++j) {
      if (!allowed.test(j) || columns_[j].none()) continue;
      if (!reachable(slot.suffix[j + 1], columns_[j])) continue;
      Gf2Vector chain(m);
      chain.set(j);
      Gf2Basis independent(rows_);
      independent.insert(columns_[j]);
      if (extend(slot, chain, columns_[j], independent, j, j)) return true;
    }
    failed_.insert(std::move(key));
    return false;
  }

  bool extend(const Slot& slot, const Gf2Vector& chain, const Gf2Vector& image,
              const Gf2Basis& independent, std::size_t first, std::size_t last) {
    if (std::find(targets_.begin(), targets_.end(), image) != targets_.end()) {
      chains_.push_back(chain);
      Gf2Vector rest = slot.allowed;
      rest.subtract(chain);
      if (fill(slot.remaining - 1, first + 1, rest)) return true;
      chains_.pop_back();
    }
    for (std::size_t j = last + 1; j < columns_.size(); ++j) {
      if (!slot.allowed.test(j)) continue;
      if (independent.reduce(columns_[j]).none()) continue;
      Gf2Vector next_image = image ^ columns_[j];
      if (!reachable(slot.suffix[j + 1], next_image)) continue;
      Gf2Basis next_independent = independent;
      next_independent.insert(columns_[j]);
      Gf2Vector next_chain = chain;
      next_chain.set(j);
      if (extend(slot, next_chain, next_image, next_independent, first, j)) {
        return true;
      }
    }
    return false;
  }

  bool reachable(const Gf2Basis& span, const Gf2Vector& image) const {
    return std::any_of(targets_.begin(), targets_.end(), [&](const auto& t) {
      return span.contains(t ^ image);
    });
  }

  // Every later chain bounding target t must use a top simplex incident to
  // each face of t. Picking the scarcest face per target and taking the
  // union gives an upper bound on how many disjoint chains still fit.
  bool enough_room(std::size_t remaining, std::size_t start,
                   const Gf2Vector& allowed) const {
    std::size_t free = 0;
    for (auto j : allowed.ones()) free += j >= start ? 1 : 0;
    if (free < remaining) return false;

    Gf2Vector usable(columns_.size());
    for (const auto& t : targets_) {
      std::optional<Gf2Vector> best;
      for (auto f : t.ones()) {
        Gf2Vector incident(columns_.size());
        for (auto s : complex_.cofaces(f)) {
          if (s >= start && allowed.test(s)) incident.set(s);
        }
        if (!best || incident.count() < best->count()) best = std::move(incident);
      }
      if (best) {
        best->subtract(usable);
        usable ^= *best;
      }
    }
    return usable.count() >= remaining;
  }

  const Complex& complex_;
  std::vector<Gf2Vector> columns_;
  std::vector<Gf2Vector> targets_;
  std::size_t rows_;
  std::vector<Gf2Vector> chains_;
  std::unordered_set<std::string> failed_;
};

class RecursiveSearch {
 public:
  bool run(const Complex& k, const Chain& cycle, std::size_t count) {
    if (count == 0 || cycle.empty()) return true;
    const int n = k.top_dim();
    const Gf2Matrix boundary = k.boundary_matrix(n);
    const auto base = solve(boundary, cycle.support);
    if (!base) return false;
    if (count == 1) return true;

    const std::string key = fingerprint(k, count);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const auto kernel = nullspace_basis(boundary);
    if (kernel.size() > 24) {
      throw Error(ErrorKind::DimensionTooLarge,
                  "recursive search over 2^" + std::to_string(kernel.size()) +
                      " bounding chains");
    }
    // Gray-code walk over base + span(kernel): every chain with the right
    // boundary, one kernel vector toggled per step.
    Chain p{n, *base};
    bool found = false;
    const std::uint64_t total = std::uint64_t{1} << kernel.size();
    for (std::uint64_t step = 0; step < total && !found; ++step) {
      if (step > 0) p.support ^= kernel[static_cast<std::size_t>(std::countr_zero(step))];
      const Complex rest = surgery(k, p, cycle);
      found = run(rest, rest.transfer(cycle, k), count - 1);
    }
    memo_.emplace(key, found);
    return found;
  }

 private:
  static std::string fingerprint(const Complex& k, std::size_t count) {
    std::string key = std::to_string(count);
    for (int d = 0; d <= k.top_dim(); ++d) {
      std::vector<std::string> ids;
      for (const auto& s : k.table(d)) ids.push_back(s.id);
      std::sort(ids.begin(), ids.end());
      key += "|";
      for (const auto& id : ids) key += id + ",";
    }
    return key;
  }

  std::unordered_map<std::string, bool> memo_;
};

}  // namespace

std::optional<Chain> bounding_chain(const Complex& k, const Chain& cycle) {
  const Chain list[] = {cycle};
  require_cycle_list(k, list);
  const int n = k.top_dim();
  if (cycle.empty()) return k.zero_chain(n);
  auto x = solve(k.boundary_matrix(n), cycle.support);
  if (!x) return std::nullopt;
  return Chain{n, std::move(*x)};
}

std::optional<BoundanceWitness> disjoint_chains(const Complex& k,
                                                std::span<const Chain> cycles,
                                                std::size_t count) {
  require_cycle_list(k, cycles);
  const int n = k.top_dim();
  BoundanceWitness w;
  if (count == 0) return w;

  const Targets t = distinct_targets(cycles);
  if (t.trivial) {
    w.chains.assign(count, k.zero_chain(n));
    w.assignment.assign(count, *t.trivial);
    return w;
  }
  if (t.vectors.empty()) return std::nullopt;

  PackingSearch search(k, t.vectors);
  if (!search.run(count)) return std::nullopt;

  const Gf2Matrix boundary = k.boundary_matrix(n);
  for (const auto& support : search.chains()) {
    const Gf2Vector image = boundary * support;
    const auto pos = std::find(t.vectors.begin(), t.vectors.end(), image);
    w.chains.push_back(Chain{n, support});
    w.assignment.push_back(t.first_index[static_cast<std::size_t>(pos - t.vectors.begin())]);
  }
  return w;
}

bool robust_under_deletion(const Complex& k, std::span<const Chain> cycles,
                           std::size_t count) {
  require_cycle_list(k, cycles);
  if (count == 0) {
    throw Error(ErrorKind::BadArgument, "deletion robustness needs k >= 1");
  }
  const Targets t = distinct_targets(cycles);
  if (t.trivial) return true;
  if (t.vectors.empty()) return false;

  const int n = k.top_dim();
  const auto columns = k.boundary_matrix(n).columns();
  const std::size_t m = columns.size();
  const std::size_t removed = std::min(count - 1, m);
  const std::size_t rows = k.size(n - 1);

  // Deleting fewer simplices only enlarges the image, so it suffices to
  // visit the subsets of exactly `removed` simplices, in lexicographic order.
  std::vector<std::size_t> subset(removed);
  for (std::size_t i = 0; i < removed; ++i) subset[i] = i;
  while (true) {
    Gf2Basis span(rows);
    std::size_t next = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (next < removed && subset[next] == j) {
        ++next;
        continue;
      }
      span.insert(columns[j]);
    }
    const bool survives = std::any_of(t.vectors.begin(), t.vectors.end(),
                                      [&](const auto& v) { return span.contains(v); });
    if (!survives) return false;

    std::size_t i = removed;
    while (i > 0 && subset[i - 1] == m - removed + (i - 1)) --i;
    if (i == 0) return true;
    ++subset[i - 1];
    for (std::size_t j = i; j < removed; ++j) subset[j] = subset[j - 1] + 1;
  }
}

bool recursive_boundant(const Complex& k, const Chain& cycle,
                        std::size_t count) {
  const Chain list[] = {cycle};
  require_cycle_list(k, list);
  RecursiveSearch search;
  return search.run(k, cycle, count);
}

bool is_k_boundant(const Complex& k, std::span<const Chain> cycles,
                   std::size_t count, Method method) {
  require_cycle_list(k, cycles);
  if (count == 0) return true;

  const Targets t = distinct_targets(cycles);
  const bool recursive_applies = t.trivial || t.vectors.size() == 1;
  auto recursive = [&] {
    if (t.trivial) return true;
    if (!recursive_applies) {
      throw Error(ErrorKind::BadArgument,
                  "the recursive method needs a list with one distinct cycle");
    }
    return recursive_boundant(k, cycles[t.first_index.front()], count);
  };

  switch (method) {
    case Method::primal: return disjoint_chains(k, cycles, count).has_value();
    case Method::dual: return robust_under_deletion(k, cycles, count);
    case Method::recursive: return recursive();
    case Method::all: break;
  }

  const bool primal = disjoint_chains(k, cycles, count).has_value();
  const bool dual = robust_under_deletion(k, cycles, count);
  io::Json verdicts = {{"primal", primal}, {"dual", dual}};
  bool agree = primal == dual;
  if (recursive_applies) {
    const bool rec = recursive();
    verdicts["recursive"] = rec;
    agree = agree && rec == primal;
  }
  if (!agree) {
    throw MethodDisagreement(
        "characterizations of " + std::to_string(count) +
            "-boundance disagree: " + verdicts.dump(),
        reproducer(k, cycles, count, {{"verdicts", verdicts}}));
  }
  return primal;
}

std::size_t max_boundance(const Complex& k, std::span<const Chain> cycles,
                          Method method) {
  if (cycles.empty()) throw Error(ErrorKind::EmptyList, "empty cycle list");
  require_cycle_list(k, cycles);
  if (distinct_targets(cycles).trivial) return kUnbounded;
  // Each chain needs at least one top simplex, so this terminates by
  // |S_n| + 1.
  std::size_t count = 1;
  while (is_k_boundant(k, cycles, count, method)) ++count;
  return count - 1;
}

bool cobordant(const Complex& k, const Chain& c1, const Chain& c2,
               std::size_t count, Method method) {
  const Chain pair[] = {c1, c2};
  require_cycle_list(k, pair);
  const std::vector<Chain> copies(std::max<std::size_t>(count, 1), c1 + c2);
  return is_k_boundant(k, copies, count, method);
}

std::vector<std::vector<std::size_t>> cobordance_classes(
    const Complex& k, std::span<const Chain> cycles, std::size_t count) {
  require_cycle_list(k, cycles);
  const std::size_t m = cycles.size();

  std::unordered_map<Gf2Vector, bool> by_sum;
  std::vector<std::vector<bool>> related(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      const Gf2Vector sum = cycles[i].support ^ cycles[j].support;
      auto it = by_sum.find(sum);
      if (it == by_sum.end()) {
        it = by_sum.emplace(sum, cobordant(k, cycles[i], cycles[j], count)).first;
      }
      related[i][j] = related[j][i] = it->second;
    }
  }

  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> class_of(m);
  for (std::size_t i = 0; i < m; ++i) {
    auto home = std::find_if(classes.begin(), classes.end(),
                             [&](const auto& c) { return related[c.front()][i]; });
    class_of[i] = static_cast<std::size_t>(home - classes.begin());
    if (home == classes.end()) {
      classes.push_back({i});
    } else {
      home->push_back(i);
    }
  }

  for (std::size_t i = 0; i < m; ++i) {
    if (!related[i][i]) {
      throw TheoremViolation(
          "cobordance is not reflexive at cycle " + std::to_string(i),
          reproducer(k, cycles, count, {{"cycle", i}}));
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (related[i][j] == (class_of[i] == class_of[j])) continue;
      // Some pair disagrees with the partition, so transitivity fails;
      // report a concrete triple a~b, b~c, not a~c.
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
          for (std::size_t c = 0; c < m; ++c) {
            if (related[a][b] && related[b][c] && !related[a][c]) {
              throw TheoremViolation(
                  "cobordance is not transitive: " + std::to_string(a) + "~" +
                      std::to_string(b) + ", " + std::to_string(b) + "~" +
                      std::to_string(c) + ", but not " + std::to_string(a) +
                      "~" + std::to_string(c),
                  reproducer(k, cycles, count, {{"triple", {a, b, c}}}));
            }
          }
        }
      }
      throw TheoremViolation("cobordance classes are inconsistent",
                             reproducer(k, cycles, count, {}));
    }
  }
  return classes;
}

std::vector<SimplexRef> closure_set(const Complex& k, const Chain& top_chain) {
  const int n = k.top_dim();
  if (top_chain.dim != n || top_chain.support.size() != k.size(n)) {
    throw Error(ErrorKind::DimensionMismatch,
                "closure set needs a chain of the top dimension");
  }
  Gf2Vector level = top_chain.support;
  std::vector<SimplexRef> out;
  for (auto i : level.ones()) out.push_back({n, i});

  for (int d = n - 1; d >= 0; --d) {
    const auto upper = k.table(d + 1);
    // A face qualifies when every (d+1)-simplex having it is in the set.
    Gf2Vector touched(k.size(d));
    Gf2Vector blocked(k.size(d));
    for (std::size_t s = 0; s < upper.size(); ++s) {
      for (auto f : upper[s].faces) {
        if (level.test(s)) {
          touched.set(f);
        } else {
          blocked.set(f);
        }
      }
    }
    touched.subtract(blocked);
    for (auto i : touched.ones()) out.push_back({d, i});
    level = std::move(touched);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Complex surgery(const Complex& k, const Chain& top_chain, const Chain& cycle) {
  const int n = k.top_dim();
  if (n < 1 || cycle.dim != n - 1 || cycle.support.size() != k.size(n - 1)) {
    throw Error(ErrorKind::DimensionMismatch,
                "surgery needs an (n-1)-chain of this complex");
  }
  if (k.boundary(top_chain) != cycle) {
    throw Error(ErrorKind::BoundaryMismatch,
                "the chain does not bound the given cycle");
  }

  std::vector<Gf2Vector> keep;
  for (int d = 0; d <= n; ++d) {
    Gf2Vector all(k.size(d));
    for (std::size_t i = 0; i < k.size(d); ++i) all.set(i);
    keep.push_back(std::move(all));
  }

  // Downward closure of the cycle survives.
  std::vector<Gf2Vector> protect;
  for (int d = 0; d <= n; ++d) protect.emplace_back(k.size(d));
  protect[static_cast<std::size_t>(n) - 1] = cycle.support;
  for (int d = n - 1; d >= 1; --d) {
    for (auto i : protect[static_cast<std::size_t>(d)].ones()) {
      for (auto f : k.table(d)[i].faces) protect[static_cast<std::size_t>(d) - 1].set(f);
    }
  }

  for (const auto& ref : closure_set(k, top_chain)) {
    if (!protect[static_cast<std::size_t>(ref.dim)].test(ref.index)) {
      keep[static_cast<std::size_t>(ref.dim)].set(ref.index, false);
    }
  }
  return k.restrict_to(keep, n);
}

std::optional<std::string> witness_defect(const Complex& k,
                                          std::span<const Chain> cycles,
                                          const BoundanceWitness& witness,
                                          std::size_t count) {
  const int n = k.top_dim();
  if (witness.chains.size() != count) {
    return "expected " + std::to_string(count) + " chains, got " +
           std::to_string(witness.chains.size());
  }
  if (witness.assignment.size() != count) return "assignment has wrong length";
  for (std::size_t i = 0; i < count; ++i) {
    const Chain& p = witness.chains[i];
    if (p.dim != n || p.support.size() != k.size(n)) {
      return "chain " + std::to_string(i) + " is not a top chain";
    }
    if (witness.assignment[i] >= cycles.size()) {
      return "chain " + std::to_string(i) + " is assigned outside the list";
    }
    if (k.boundary(p) != cycles[witness.assignment[i]]) {
      return "chain " + std::to_string(i) + " does not bound its cycle";
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (p.support.intersects(witness.chains[j].support)) {
        return "chains " + std::to_string(j) + " and " + std::to_string(i) +
               " share a simplex";
      }
    }
  }
  return std::nullopt;
}

}  // namespace kbound
