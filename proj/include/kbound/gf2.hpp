#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kbound {

/// Fixed-length bit vector over the two-element field. Addition is XOR.
class Gf2Vector {
 public:
  Gf2Vector() = default;
  explicit Gf2Vector(std::size_t length);

  /// Parses a string of '0'/'1' characters, index 0 first.
  static Gf2Vector from_string(std::string_view bits);
  static Gf2Vector from_indices(std::size_t length,
                                std::span<const std::size_t> ones);

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept {
    return (words_[i / 64] >> (i % 64)) & 1u;
  }
  void set(std::size_t i, bool value = true) noexcept;
  void flip(std::size_t i) noexcept { words_[i / 64] ^= bit(i); }

  bool none() const noexcept;
  bool any() const noexcept { return !none(); }
  std::size_t count() const noexcept;
  bool intersects(const Gf2Vector& other) const;

  /// Lowest set index, if any.
  std::optional<std::size_t> first() const noexcept;
  std::vector<std::size_t> ones() const;

  Gf2Vector& operator^=(const Gf2Vector& other);
  Gf2Vector& operator&=(const Gf2Vector& other);
  /// Clears every bit set in `other`.
  Gf2Vector& subtract(const Gf2Vector& other);

  friend Gf2Vector operator^(Gf2Vector a, const Gf2Vector& b) { return a ^= b; }
  friend Gf2Vector operator&(Gf2Vector a, const Gf2Vector& b) { return a &= b; }

  friend bool operator==(const Gf2Vector&, const Gf2Vector&) = default;
  // Orders by length, then by packed words. Only meant for use as a key.
  friend std::strong_ordering operator<=>(const Gf2Vector& a,
                                          const Gf2Vector& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.words_ <=> b.words_;
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::string to_string() const;

 private:
  static std::uint64_t bit(std::size_t i) noexcept {
    return std::uint64_t{1} << (i % 64);
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Dense row-major bit matrix.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);

  static Gf2Matrix identity(std::size_t n);
  static Gf2Matrix from_rows(std::vector<Gf2Vector> rows, std::size_t cols);
  static Gf2Matrix from_columns(std::span<const Gf2Vector> columns,
                                std::size_t rows);
  static Gf2Matrix from_strings(std::initializer_list<std::string_view> rows);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].test(c); }
  void set(std::size_t r, std::size_t c, bool value = true) {
    rows_[r].set(c, value);
  }
  const Gf2Vector& row(std::size_t r) const { return rows_[r]; }
  Gf2Vector column(std::size_t c) const;
  std::vector<Gf2Vector> columns() const;

  Gf2Matrix transpose() const;
  bool is_zero() const noexcept;

  Gf2Vector operator*(const Gf2Vector& x) const;
  Gf2Matrix operator*(const Gf2Matrix& other) const;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  std::vector<Gf2Vector> rows_;
  std::size_t cols_ = 0;
};

/// Incrementally built echelon basis of a subspace. Each stored vector has a
/// distinct pivot (its lowest set index); vectors are kept sorted by pivot.
class Gf2Basis {
 public:
  explicit Gf2Basis(std::size_t length = 0) : length_(length) {}

  /// Returns true when `v` was independent of the current span.
  bool insert(Gf2Vector v);
  Gf2Vector reduce(Gf2Vector v) const;
  bool contains(const Gf2Vector& v) const { return reduce(v).none(); }

  std::size_t dimension() const noexcept { return vectors_.size(); }
  std::size_t length() const noexcept { return length_; }
  const std::vector<Gf2Vector>& vectors() const noexcept { return vectors_; }

 private:
  std::size_t length_;
  std::vector<std::size_t> pivots_;
  std::vector<Gf2Vector> vectors_;
};

std::size_t rank(const Gf2Matrix& m);

/// Some x with m*x = b, or nullopt. Pivots on the leftmost column with a
/// remaining nonzero, using the topmost unused row; free variables are 0.
std::optional<Gf2Vector> solve(const Gf2Matrix& m, const Gf2Vector& b);

/// Basis of {x : m*x = 0}, one vector per free column in ascending order.
std::vector<Gf2Vector> nullspace_basis(const Gf2Matrix& m);

/// Reduced row-echelon basis of span(vectors); canonical for the span.
std::vector<Gf2Vector> canonical_basis(std::span<const Gf2Vector> vectors);

/// Canonical basis of span(a) ∩ span(b).
std::vector<Gf2Vector> intersect_subspaces(std::span<const Gf2Vector> a,
                                           std::span<const Gf2Vector> b);

}  // namespace kbound

template <>
struct std::hash<kbound::Gf2Vector> {
  std::size_t operator()(const kbound::Gf2Vector& v) const noexcept;
};
