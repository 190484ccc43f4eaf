#include "kbound/invariants.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

#include "kbound/boundance.hpp"
#include "kbound/errors.hpp"

namespace kbound {

namespace {

void require_positive_dim(const Complex& k) {
  if (k.top_dim() < 1) {
    throw Error(ErrorKind::DimensionMismatch,
                "degree strata need a complex of dimension at least 1");
  }
}

SimplexMasks empty_masks(const Complex& k) {
  SimplexMasks masks;
  for (int d = 0; d <= k.top_dim(); ++d) masks.emplace_back(k.size(d));
  return masks;
}

void close_downward(const Complex& k, SimplexMasks& masks) {
  for (int d = k.top_dim(); d >= 1; --d) {
    const auto table = k.table(d);
    for (auto i : masks[static_cast<std::size_t>(d)].ones()) {
      for (auto f : table[i].faces) masks[static_cast<std::size_t>(d) - 1].set(f);
    }
  }
}

template <typename Pred>
SimplexMasks degree_closure(const Complex& k, Pred wanted, bool with_top) {
  require_positive_dim(k);
  const int n = k.top_dim();
  SimplexMasks masks = empty_masks(k);
  const auto degrees = k.degrees();
  for (std::size_t f = 0; f < degrees.size(); ++f) {
    if (wanted(degrees[f])) masks[static_cast<std::size_t>(n) - 1].set(f);
  }
  if (with_top) {
    for (std::size_t s = 0; s < k.size(n); ++s) masks[static_cast<std::size_t>(n)].set(s);
  }
  close_downward(k, masks);
  return masks;
}

bool contained_in(const SimplexMasks& a, const SimplexMasks& b) {
  for (std::size_t d = 0; d < a.size(); ++d) {
    if (d >= b.size()) {
      if (a[d].any()) return false;
      continue;
    }
    Gf2Vector rest = a[d];
    rest.subtract(b[d]);
    if (rest.any()) return false;
  }
  return true;
}

}  // namespace

Stratification stratify(const Complex& k) {
  require_positive_dim(k);
  Stratification s;
  s.n = k.top_dim();
  const auto degrees = k.degrees();
  for (std::size_t f = 0; f < degrees.size(); ++f) s.buckets[degrees[f]].push_back(f);
  return s;
}

SimplexMasks stratum(const Complex& k, std::size_t d) {
  return degree_closure(k, [d](std::size_t deg) { return deg == d; }, d == 2);
}

SimplexMasks upper_stratum(const Complex& k, std::size_t d) {
  return degree_closure(k, [d](std::size_t deg) { return deg >= d; }, d <= 2);
}

Complex subcomplex(const Complex& k, const SimplexMasks& masks) {
  int top = 0;
  for (int d = 0; d < static_cast<int>(masks.size()); ++d) {
    if (masks[static_cast<std::size_t>(d)].any()) top = d;
  }
  return k.restrict_to(masks, top);
}

Complex irregularity_skeleton(const Complex& k) {
  require_positive_dim(k);
  const int n = k.top_dim();
  SimplexMasks masks = empty_masks(k);
  for (int d = 0; d < n - 1; ++d) {
    for (std::size_t i = 0; i < k.size(d); ++i) masks[static_cast<std::size_t>(d)].set(i);
  }
  const auto degrees = k.degrees();
  for (std::size_t f = 0; f < degrees.size(); ++f) {
    if (degrees[f] != 2) masks[static_cast<std::size_t>(n) - 1].set(f);
  }
  if (!contained_in(upper_stratum(k, 3), masks)) {
    throw std::logic_error("Y_3 is not contained in the irregularity skeleton");
  }
  return k.restrict_to(masks, n - 1);
}

std::size_t homology_dim(const Complex& k, int d, bool reduced) {
  if (d < 0 || d > k.top_dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "homology dimension " + std::to_string(d) + " outside 0.." +
                    std::to_string(k.top_dim()));
  }
  std::size_t boundary_rank = 0;
  if (d > 0) {
    boundary_rank = rank(k.boundary_matrix(d));
  } else if (reduced && k.size(0) > 0) {
    boundary_rank = 1;
  }
  const std::size_t cycles = k.size(d) - boundary_rank;
  const std::size_t bounds = d < k.top_dim() ? rank(k.boundary_matrix(d + 1)) : 0;
  return cycles - bounds;
}

std::vector<Chain> gamma_basis(const Complex& k) {
  require_positive_dim(k);
  const int n = k.top_dim();
  const std::size_t faces = k.size(n - 1);
  const auto in_y3 = upper_stratum(k, 3)[static_cast<std::size_t>(n) - 1].ones();

  // Cycles of Y_3: kernel of the (n-1)-boundary restricted to Y_3's columns,
  // re-embedded into K's coordinates.
  const Gf2Matrix lower = k.boundary_matrix(n - 1);
  const auto all_columns = lower.columns();
  std::vector<Gf2Vector> y3_columns;
  for (auto f : in_y3) y3_columns.push_back(all_columns[f]);
  std::vector<Gf2Vector> cycles;
  for (const auto& z :
       nullspace_basis(Gf2Matrix::from_columns(y3_columns, lower.rows()))) {
    Gf2Vector embedded(faces);
    for (auto i : z.ones()) embedded.set(in_y3[i]);
    cycles.push_back(std::move(embedded));
  }

  const auto boundaries = k.boundary_matrix(n).columns();
  std::vector<Chain> out;
  for (auto& v : intersect_subspaces(cycles, boundaries)) {
    out.push_back(Chain{n - 1, std::move(v)});
  }
  return out;
}

GammaReport gamma_k(const Complex& k, std::size_t count) {
  if (count == 0) throw Error(ErrorKind::BadArgument, "Gamma_k needs k >= 1");
  GammaReport report;
  report.k = count;
  report.gamma_basis = gamma_basis(k);
  const std::size_t dim = report.gamma_basis.size();
  if (dim > kMaxGammaDim) {
    throw Error(ErrorKind::DimensionTooLarge,
                "dim Gamma = " + std::to_string(dim) + " exceeds " +
                    std::to_string(kMaxGammaDim));
  }

  const int n = k.top_dim();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dim); ++mask) {
    Chain h = k.zero_chain(n - 1);
    for (std::size_t i = 0; i < dim; ++i) {
      if ((mask >> i) & 1u) h += report.gamma_basis[i];
    }
    const Chain single[] = {h};
    if (is_k_boundant(k, single, count)) report.elements.push_back(std::move(h));
  }

  std::vector<Gf2Vector> supports;
  for (const auto& e : report.elements) supports.push_back(e.support);
  auto basis = canonical_basis(supports);
  report.closed_under_addition =
      report.elements.size() == (std::size_t{1} << basis.size());
  if (report.closed_under_addition) {
    std::vector<Chain> chains;
    for (auto& v : basis) chains.push_back(Chain{n - 1, std::move(v)});
    report.gamma_k_basis = std::move(chains);
  }
  return report;
}

}  // namespace kbound
