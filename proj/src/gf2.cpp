#include "kbound/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace kbound {

namespace {

std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

void require_same_length(const Gf2Vector& a, const Gf2Vector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("Gf2Vector length mismatch: " +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
  }
}

struct Echelon {
  std::vector<Gf2Vector> rows;
  std::vector<std::size_t> pivot_cols;
};

// Gauss-Jordan elimination. When `rhs` is given it is carried along as an
// augmented column.
Echelon eliminate(const Gf2Matrix& m, Gf2Vector* rhs) {
  Echelon e;
  e.rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) e.rows.push_back(m.row(r));

  std::size_t next = 0;
  for (std::size_t c = 0; c < m.cols() && next < e.rows.size(); ++c) {
    std::size_t pivot = next;
    while (pivot < e.rows.size() && !e.rows[pivot].test(c)) ++pivot;
    if (pivot == e.rows.size()) continue;

    if (pivot != next) {
      std::swap(e.rows[pivot], e.rows[next]);
      if (rhs != nullptr) {
        const bool tmp = rhs->test(pivot);
        rhs->set(pivot, rhs->test(next));
        rhs->set(next, tmp);
      }
    }
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
      if (r != next && e.rows[r].test(c)) {
        e.rows[r] ^= e.rows[next];
        if (rhs != nullptr && rhs->test(next)) rhs->flip(r);
      }
    }
    e.pivot_cols.push_back(c);
    ++next;
  }
  return e;
}

}  // namespace

Gf2Vector::Gf2Vector(std::size_t length)
    : size_(length), words_(word_count(length), 0) {}

Gf2Vector Gf2Vector::from_string(std::string_view bits) {
  Gf2Vector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bit string may only contain 0 and 1");
    }
  }
  return v;
}

Gf2Vector Gf2Vector::from_indices(std::size_t length,
                                  std::span<const std::size_t> ones) {
  Gf2Vector v(length);
  for (std::size_t i : ones) {
    if (i >= length) throw std::out_of_range("bit index out of range");
    v.set(i);
  }
  return v;
}

void Gf2Vector::set(std::size_t i, bool value) noexcept {
  if (value) {
    words_[i / 64] |= bit(i);
  } else {
    words_[i / 64] &= ~bit(i);
  }
}

bool Gf2Vector::none() const noexcept {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

std::size_t Gf2Vector::count() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool Gf2Vector::intersects(const Gf2Vector& other) const {
  require_same_length(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

std::optional<std::size_t> Gf2Vector::first() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) {
      return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> Gf2Vector::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    while (w != 0) {
      out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

Gf2Vector& Gf2Vector::operator^=(const Gf2Vector& other) {
  require_same_length(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

Gf2Vector& Gf2Vector::operator&=(const Gf2Vector& other) {
  require_same_length(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

Gf2Vector& Gf2Vector::subtract(const Gf2Vector& other) {
  require_same_length(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::string Gf2Vector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (test(i)) s[i] = '1';
  }
  return s;
}

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows, Gf2Vector(cols)), cols_(cols) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

Gf2Matrix Gf2Matrix::from_rows(std::vector<Gf2Vector> rows, std::size_t cols) {
  for (const auto& r : rows) {
    if (r.size() != cols) {
      throw std::invalid_argument("row length does not match column count");
    }
  }
  Gf2Matrix m;
  m.rows_ = std::move(rows);
  m.cols_ = cols;
  return m;
}

Gf2Matrix Gf2Matrix::from_columns(std::span<const Gf2Vector> columns,
                                  std::size_t rows) {
  Gf2Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) {
      throw std::invalid_argument("column length does not match row count");
    }
    for (std::size_t r : columns[c].ones()) m.set(r, c);
  }
  return m;
}

Gf2Matrix Gf2Matrix::from_strings(std::initializer_list<std::string_view> rows) {
  std::vector<Gf2Vector> parsed;
  for (auto r : rows) parsed.push_back(Gf2Vector::from_string(r));
  const std::size_t cols = parsed.empty() ? 0 : parsed.front().size();
  return from_rows(std::move(parsed), cols);
}

Gf2Vector Gf2Matrix::column(std::size_t c) const {
  Gf2Vector v(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].test(c)) v.set(r);
  }
  return v;
}

std::vector<Gf2Vector> Gf2Matrix::columns() const {
  std::vector<Gf2Vector> out(cols_, Gf2Vector(rows_.size()));
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c : rows_[r].ones()) out[c].set(r);
  }
  return out;
}

Gf2Matrix Gf2Matrix::transpose() const {
  return from_rows(columns(), rows_.size());
}

bool Gf2Matrix::is_zero() const noexcept {
  return std::all_of(rows_.begin(), rows_.end(),
                     [](const Gf2Vector& r) { return r.none(); });
}

Gf2Vector Gf2Matrix::operator*(const Gf2Vector& x) const {
  if (x.size() != cols_) {
    throw std::invalid_argument("matrix-vector dimension mismatch");
  }
  Gf2Vector y(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if ((rows_[r] & x).count() % 2 == 1) y.set(r);
  }
  return y;
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& other) const {
  if (other.rows() != cols_) {
    throw std::invalid_argument("matrix-matrix dimension mismatch");
  }
  Gf2Matrix out(rows_.size(), other.cols());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t k : rows_[r].ones()) out.rows_[r] ^= other.rows_[k];
  }
  return out;
}

bool Gf2Basis::insert(Gf2Vector v) {
  if (v.size() != length_) {
    throw std::invalid_argument("basis vector length mismatch");
  }
  v = reduce(std::move(v));
  const auto pivot = v.first();
  if (!pivot) return false;
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), *pivot);
  const auto offset = pos - pivots_.begin();
  pivots_.insert(pos, *pivot);
  vectors_.insert(vectors_.begin() + offset, std::move(v));
  return true;
}

Gf2Vector Gf2Basis::reduce(Gf2Vector v) const {
  if (v.size() != length_) {
    throw std::invalid_argument("basis vector length mismatch");
  }
  // Stored vectors have no bits below their pivot, so an ascending sweep
  // never reintroduces a pivot that was already cleared.
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    if (v.test(pivots_[i])) v ^= vectors_[i];
  }
  return v;
}

std::size_t rank(const Gf2Matrix& m) {
  return eliminate(m, nullptr).pivot_cols.size();
}

std::optional<Gf2Vector> solve(const Gf2Matrix& m, const Gf2Vector& b) {
  if (b.size() != m.rows()) {
    throw std::invalid_argument("solve: right-hand side has length " +
                                std::to_string(b.size()) + ", expected " +
                                std::to_string(m.rows()));
  }
  Gf2Vector rhs = b;
  const Echelon e = eliminate(m, &rhs);
  for (std::size_t r = e.pivot_cols.size(); r < e.rows.size(); ++r) {
    if (rhs.test(r)) return std::nullopt;
  }
  Gf2Vector x(m.cols());
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
    if (rhs.test(r)) x.set(e.pivot_cols[r]);
  }
  return x;
}

std::vector<Gf2Vector> nullspace_basis(const Gf2Matrix& m) {
  const Echelon e = eliminate(m, nullptr);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;

  std::vector<Gf2Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Gf2Vector v(m.cols());
    v.set(f);
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
      if (e.rows[r].test(f)) v.set(e.pivot_cols[r]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Gf2Vector> canonical_basis(std::span<const Gf2Vector> vectors) {
  if (vectors.empty()) return {};
  const std::size_t length = vectors.front().size();
  const auto m =
      Gf2Matrix::from_rows({vectors.begin(), vectors.end()}, length);
  Echelon e = eliminate(m, nullptr);
  e.rows.resize(e.pivot_cols.size());
  return std::move(e.rows);
}

std::vector<Gf2Vector> intersect_subspaces(std::span<const Gf2Vector> a,
                                           std::span<const Gf2Vector> b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t length = a.front().size();
  std::vector<Gf2Vector> generators;
  generators.reserve(a.size() + b.size());
  for (const auto* side : {&a, &b}) {
    for (const auto& v : *side) {
      if (v.size() != length) {
        throw std::invalid_argument("intersect_subspaces: length mismatch");
      }
      generators.push_back(v);
    }
  }

  // (alpha, beta) in the kernel of [A | B] means sum(alpha_i a_i) equals
  // sum(beta_j b_j); the common value lies in both spans.
  const auto joined = Gf2Matrix::from_columns(generators, length);
  std::vector<Gf2Vector> common;
  for (const auto& k : nullspace_basis(joined)) {
    Gf2Vector v(length);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (k.test(i)) v ^= a[i];
    }
    if (v.any()) common.push_back(std::move(v));
  }
  return canonical_basis(common);
}

}  // namespace kbound

std::size_t std::hash<kbound::Gf2Vector>::operator()(
    const kbound::Gf2Vector& v) const noexcept {
  std::size_t h = v.size() * 0x9e3779b97f4a7c15ULL;
  for (auto w : v.words()) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  }
  return h;
}
