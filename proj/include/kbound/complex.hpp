#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kbound/gf2.hpp"

namespace kbound {

/// Position of a simplex in the table of its dimension.
struct SimplexRef {
  int dim = 0;
  std::size_t index = 0;

  friend auto operator<=>(const SimplexRef&, const SimplexRef&) = default;
};

struct Simplex {
  std::string id;
  // Indices into the vertex table, strictly increasing.
  std::vector<std::size_t> vertices;
  // faces[i] is a simplex one dimension down whose vertex tuple is
  // `vertices` with entry i removed. Empty for vertices.
  std::vector<std::size_t> faces;

  friend bool operator==(const Simplex&, const Simplex&) = default;
};

/// A d-chain over F2. Dimension -1 is the augmentation target F2 itself
/// (support of length 1), so the boundary of a 0-chain is still a Chain.
struct Chain {
  int dim = 0;
  Gf2Vector support;

  bool empty() const noexcept { return support.none(); }

  Chain& operator+=(const Chain& other);
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend bool operator==(const Chain&, const Chain&) = default;
};

/// Unvalidated complex description, as read from a file.
struct RawSimplex {
  int dim = 0;
  std::string id;
  std::vector<std::string> vertices;
  std::optional<std::vector<std::string>> faces;

  friend bool operator==(const RawSimplex&, const RawSimplex&) = default;
};

struct RawComplex {
  int n = 0;
  std::vector<std::string> vertices;
  std::vector<RawSimplex> simplices;

  friend bool operator==(const RawComplex&, const RawComplex&) = default;
};

struct BuildOptions {
  // Create one simplex for every face tuple that has no simplex yet,
  // instead of failing with MissingFace.
  bool create_missing_faces = false;
};

/// A finite n-dimensional simplicial complex in which several simplices may
/// share one vertex tuple. Every simplex carries explicit references to its
/// faces, so the boundary map is well defined under multiplicity.
///
/// Immutable once built; all queries are const and thread-safe.
class Complex {
 public:
  /// Validates and binds faces. Faces omitted in a record are bound to the
  /// unique simplex with the required vertex tuple. Throws kbound::Error.
  static Complex build(const RawComplex& raw, BuildOptions options = {});

  int top_dim() const noexcept { return n_; }
  std::size_t size(int dim) const;
  std::span<const Simplex> table(int dim) const;
  const Simplex& simplex(SimplexRef ref) const;
  std::optional<SimplexRef> find(std::string_view id) const;
  const std::string& vertex_id(std::size_t index) const {
    return tables_[0][index].id;
  }

  /// Number of top simplices having the (n-1)-simplex `f` as a face.
  std::size_t degree(SimplexRef f) const;
  std::vector<std::size_t> degrees() const;
  /// Top simplices having (n-1)-simplex `index` as a face, ascending.
  std::span<const std::size_t> cofaces(std::size_t index) const;

  /// Matrix of the boundary map from dimension d to d-1 (rows S_{d-1},
  /// columns S_d). d = 0 gives the 1 x |S_0| augmentation row.
  Gf2Matrix boundary_matrix(int d) const;
  Chain boundary(const Chain& c) const;
  bool is_cycle(const Chain& c) const;

  Chain zero_chain(int dim) const;
  Chain chain(int dim, std::initializer_list<std::string_view> ids) const;
  Chain chain(int dim, std::span<const std::string> ids) const;
  std::vector<std::string> ids(const Chain& c) const;
  /// Re-expresses a chain of `from` in this complex, matching simplices by id.
  Chain transfer(const Chain& c, const Complex& from) const;

  /// Removes the given top simplices; lower tables are untouched.
  Complex delete_top_simplices(std::span<const SimplexRef> refs) const;
  /// Subcomplex with the flagged simplices of dimensions 0..new_n. The kept
  /// set must be closed under faces.
  Complex restrict_to(const std::vector<Gf2Vector>& keep, int new_n) const;

  /// Description with explicit face ids; building it again yields an equal
  /// complex.
  RawComplex to_raw() const;

  friend bool operator==(const Complex& a, const Complex& b) {
    return a.n_ == b.n_ && a.tables_ == b.tables_;
  }

 private:
  void index_ids();
  void compute_cofaces();
  void require_chain(const Chain& c) const;

  int n_ = 0;
  std::vector<std::vector<Simplex>> tables_;
  std::unordered_map<std::string, SimplexRef> by_id_;
  std::vector<std::vector<std::size_t>> cofaces_;
};

}  // namespace kbound
