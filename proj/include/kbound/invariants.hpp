#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "kbound/complex.hpp"
#include "kbound/gf2.hpp"

namespace kbound {

/// (n-1)-simplices bucketed by degree. Points inside an (n-1)-simplex of
/// degree d have degree d; points inside a top simplex have degree 2.
/// Points of lower simplices are not classified.
struct Stratification {
  int n = 0;
  std::map<std::size_t, std::vector<std::size_t>> buckets;
};

/// A subcomplex given by one membership mask per dimension 0..n.
using SimplexMasks = std::vector<Gf2Vector>;

Stratification stratify(const Complex& k);

/// Closure of the degree-d stratum (X_d). For d == 2 this includes every
/// top simplex and its faces.
SimplexMasks stratum(const Complex& k, std::size_t d);
/// Closure of the points of degree >= d (Y_d).
SimplexMasks upper_stratum(const Complex& k, std::size_t d);
/// Materializes a face-closed mask set as a complex of the highest
/// dimension that has a member (0 when empty).
Complex subcomplex(const Complex& k, const SimplexMasks& masks);

/// K': drops all top simplices and all (n-1)-simplices of degree 2.
Complex irregularity_skeleton(const Complex& k);

/// dim Cycle_d / Bound_d over F2. For d == 0, `reduced` selects the
/// augmentation map as the boundary of 0-chains; otherwise it is zero.
std::size_t homology_dim(const Complex& k, int d, bool reduced = true);

/// Canonical basis of the (n-1)-cycles supported in Y_3 that bound in K,
/// as chains of K.
std::vector<Chain> gamma_basis(const Complex& k);

struct GammaReport {
  std::vector<Chain> gamma_basis;
  std::size_t k = 0;
  // Elements of the span of gamma_basis that are k-boundant, in order of
  // their coefficient bitmask over gamma_basis.
  std::vector<Chain> elements;
  bool closed_under_addition = false;
  std::optional<std::vector<Chain>> gamma_k_basis;
};

inline constexpr std::size_t kMaxGammaDim = 20;

/// Tests every element of Gamma for k-boundance in K. Throws
/// DimensionTooLarge when dim Gamma exceeds kMaxGammaDim.
GammaReport gamma_k(const Complex& k, std::size_t count);

}  // namespace kbound
