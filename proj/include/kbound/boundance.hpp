#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kbound/complex.hpp"

namespace kbound {

// A cycle list is an ordered sequence of (n-1)-cycles; repetitions and the
// trivial cycle are allowed. Only the set of distinct entries matters for
// boundance, since a sublist may repeat any element.

enum class Method { primal, dual, recursive, all };

std::optional<Method> parse_method(std::string_view name);
std::string_view to_string(Method m);

inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

/// k pairwise simplex-disjoint top chains; chains[i] bounds
/// cycles[assignment[i]].
struct BoundanceWitness {
  std::vector<Chain> chains;
  std::vector<std::size_t> assignment;
};

/// Throws NotACycle / DimensionMismatch unless every entry is an
/// (n-1)-cycle of `k`.
void require_cycle_list(const Complex& k, std::span<const Chain> cycles);

/// Some top chain whose boundary is `cycle`; the empty chain for the
/// trivial cycle.
std::optional<Chain> bounding_chain(const Complex& k, const Chain& cycle);

/// Primal test: k pairwise disjoint chains, each bounding some list entry.
/// The search returns the witness whose chains are lexicographically
/// smallest by simplex index, slot by slot.
std::optional<BoundanceWitness> disjoint_chains(const Complex& k,
                                                std::span<const Chain> cycles,
                                                std::size_t count);

/// Dual test: after deleting any count-1 top simplices some entry still
/// bounds. Requires count >= 1.
bool robust_under_deletion(const Complex& k, std::span<const Chain> cycles,
                           std::size_t count);

/// Surgery-based test for a single cycle: peel off a bounding chain and ask
/// for (count-1)-boundance in what remains.
bool recursive_boundant(const Complex& k, const Chain& cycle,
                        std::size_t count);

/// Dispatches to the chosen characterization. Method::all runs every
/// applicable one and throws MethodDisagreement if they differ. The
/// recursive method needs a list with a single distinct cycle.
bool is_k_boundant(const Complex& k, std::span<const Chain> cycles,
                   std::size_t count, Method method = Method::primal);

/// Largest k for which the list is k-boundant; kUnbounded when the list
/// contains the trivial cycle. Throws EmptyList on an empty list.
std::size_t max_boundance(const Complex& k, std::span<const Chain> cycles,
                          Method method = Method::primal);

/// True iff the list of `count` copies of c1 + c2 is count-boundant.
bool cobordant(const Complex& k, const Chain& c1, const Chain& c2,
               std::size_t count, Method method = Method::primal);

/// Partition of `cycles` (by index) under count-cobordance. Every pair is
/// checked against the partition; a failure of reflexivity, symmetry or
/// transitivity throws TheoremViolation.
std::vector<std::vector<std::size_t>> cobordance_classes(
    const Complex& k, std::span<const Chain> cycles, std::size_t count);

/// The top simplices of `top_chain` plus, dimension by dimension, every
/// face that is a face of no other simplex outside the set. Sorted.
std::vector<SimplexRef> closure_set(const Complex& k, const Chain& top_chain);

/// K - P + c: removes closure_set(P) except the simplices of `cycle` and
/// their faces. Requires boundary(P) == cycle.
Complex surgery(const Complex& k, const Chain& top_chain, const Chain& cycle);

/// Re-checks a witness from scratch. Returns a description of the first
/// defect, or nullopt when the witness is valid for `count`.
std::optional<std::string> witness_defect(const Complex& k,
                                          std::span<const Chain> cycles,
                                          const BoundanceWitness& witness,
                                          std::size_t count);

}  // namespace kbound
