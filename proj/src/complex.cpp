#include "kbound/complex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "kbound/errors.hpp"

namespace kbound {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::RepeatedVertex: return "RepeatedVertex";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::MissingFace: return "MissingFace";
    case ErrorKind::AmbiguousFace: return "AmbiguousFace";
    case ErrorKind::BadFaceBinding: return "BadFaceBinding";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::UnknownSimplex: return "UnknownSimplex";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotACycle: return "NotACycle";
    case ErrorKind::BoundaryMismatch: return "BoundaryMismatch";
    case ErrorKind::EmptyList: return "EmptyList";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::NoPath: return "NoPath";
    case ErrorKind::BadArgument: return "BadArgument";
  }
  return "Unknown";
}

Chain& Chain::operator+=(const Chain& other) {
  if (dim != other.dim) {
    throw Error(ErrorKind::DimensionMismatch,
                "cannot add chains of dimension " + std::to_string(dim) +
                    " and " + std::to_string(other.dim));
  }
  support ^= other.support;
  return *this;
}

namespace {

using Tuple = std::vector<std::size_t>;

struct Pending {
  std::string id;
  Tuple tuple;
  std::optional<std::vector<std::string>> faces;
};

Tuple without(const Tuple& t, std::size_t i) {
  Tuple out;
  out.reserve(t.size() - 1);
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (j != i) out.push_back(t[j]);
  }
  return out;
}

std::string describe(const Tuple& t, const std::vector<std::string>& names) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) s += ",";
    s += names[t[i]];
  }
  return s + ")";
}

std::string generated_id(const Tuple& t, const std::vector<std::string>& names,
                         const std::set<std::string>& taken) {
  std::string base;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) base += "-";
    base += names[t[i]];
  }
  std::string id = base;
  for (int suffix = 2; taken.contains(id); ++suffix) {
    id = base + "#" + std::to_string(suffix);
  }
  return id;
}

}  // namespace

Complex Complex::build(const RawComplex& raw, BuildOptions options) {
  if (raw.n < 0) {
    throw Error(ErrorKind::DimensionMismatch, "top dimension must be >= 0");
  }
  const int n = raw.n;

  std::set<std::string> ids;
  std::unordered_map<std::string, std::size_t> vertex_index;
  for (std::size_t i = 0; i < raw.vertices.size(); ++i) {
    if (!ids.insert(raw.vertices[i]).second) {
      throw Error(ErrorKind::DuplicateId, "id '" + raw.vertices[i] + "'");
    }
    vertex_index.emplace(raw.vertices[i], i);
  }

  std::vector<std::vector<Pending>> pending(static_cast<std::size_t>(n) + 1);
  for (const auto& r : raw.simplices) {
    if (r.dim < 1 || r.dim > n) {
      throw Error(ErrorKind::DimensionMismatch,
                  "simplex '" + r.id + "' has dimension " +
                      std::to_string(r.dim) + "; expected 1.." +
                      std::to_string(n));
    }
    if (r.vertices.size() != static_cast<std::size_t>(r.dim) + 1) {
      throw Error(ErrorKind::DimensionMismatch,
                  "simplex '" + r.id + "' of dimension " +
                      std::to_string(r.dim) + " lists " +
                      std::to_string(r.vertices.size()) + " vertices");
    }
    Tuple t;
    for (const auto& v : r.vertices) {
      auto it = vertex_index.find(v);
      if (it == vertex_index.end()) {
        throw Error(ErrorKind::UnknownVertex,
                    "simplex '" + r.id + "' uses vertex '" + v + "'");
      }
      t.push_back(it->second);
    }
    std::sort(t.begin(), t.end());
    if (std::adjacent_find(t.begin(), t.end()) != t.end()) {
      throw Error(ErrorKind::RepeatedVertex,
                  "simplex '" + r.id + "' repeats a vertex");
    }
    if (!ids.insert(r.id).second) {
      throw Error(ErrorKind::DuplicateId, "id '" + r.id + "'");
    }
    pending[static_cast<std::size_t>(r.dim)].push_back({r.id, std::move(t), r.faces});
  }

  if (options.create_missing_faces) {
    for (int d = n; d >= 2; --d) {
      auto& lower = pending[static_cast<std::size_t>(d) - 1];
      std::set<Tuple> present;
      for (const auto& p : lower) present.insert(p.tuple);
      for (const auto& p : pending[static_cast<std::size_t>(d)]) {
        if (p.faces) continue;
        for (std::size_t i = 0; i < p.tuple.size(); ++i) {
          Tuple f = without(p.tuple, i);
          if (present.contains(f)) continue;
          std::string id = generated_id(f, raw.vertices, ids);
          ids.insert(id);
          present.insert(f);
          lower.push_back({std::move(id), std::move(f), std::nullopt});
        }
      }
    }
  }

  Complex k;
  k.n_ = n;
  k.tables_.resize(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < raw.vertices.size(); ++i) {
    k.tables_[0].push_back({raw.vertices[i], {i}, {}});
    k.by_id_.emplace(raw.vertices[i], SimplexRef{0, i});
  }

  for (int d = 1; d <= n; ++d) {
    const auto& lower_table = k.tables_[static_cast<std::size_t>(d) - 1];
    std::map<Tuple, std::vector<std::size_t>> by_tuple;
    for (std::size_t j = 0; j < lower_table.size(); ++j) {
      by_tuple[lower_table[j].vertices].push_back(j);
    }

    auto& table = k.tables_[static_cast<std::size_t>(d)];
    for (auto& p : pending[static_cast<std::size_t>(d)]) {
      Simplex s{p.id, p.tuple, std::vector<std::size_t>(p.tuple.size())};
      if (!p.faces) {
        for (std::size_t i = 0; i < p.tuple.size(); ++i) {
          const Tuple f = without(p.tuple, i);
          auto it = by_tuple.find(f);
          if (it == by_tuple.end()) {
            throw Error(ErrorKind::MissingFace,
                        "simplex '" + p.id + "' needs a face over " +
                            describe(f, raw.vertices));
          }
          if (it->second.size() > 1) {
            throw Error(ErrorKind::AmbiguousFace,
                        "simplex '" + p.id + "': " +
                            std::to_string(it->second.size()) +
                            " simplices lie over " + describe(f, raw.vertices) +
                            "; list its faces explicitly");
          }
          s.faces[i] = it->second.front();
        }
      } else {
        if (p.faces->size() != p.tuple.size()) {
          throw Error(ErrorKind::BadFaceBinding,
                      "simplex '" + p.id + "' lists " +
                          std::to_string(p.faces->size()) + " faces, needs " +
                          std::to_string(p.tuple.size()));
        }
        std::vector<bool> bound(p.tuple.size(), false);
        for (const auto& fid : *p.faces) {
          auto it = k.by_id_.find(fid);
          if (it == k.by_id_.end() || it->second.dim != d - 1) {
            throw Error(ErrorKind::BadFaceBinding,
                        "simplex '" + p.id + "' names face '" + fid +
                            "', which is not a " + std::to_string(d - 1) +
                            "-simplex");
          }
          const auto& face = lower_table[it->second.index];
          bool placed = false;
          for (std::size_t i = 0; i < p.tuple.size() && !placed; ++i) {
            if (!bound[i] && face.vertices == without(p.tuple, i)) {
              s.faces[i] = it->second.index;
              bound[i] = true;
              placed = true;
            }
          }
          if (!placed) {
            throw Error(ErrorKind::BadFaceBinding,
                        "face '" + fid + "' over " +
                            describe(face.vertices, raw.vertices) +
                            " does not fit simplex '" + p.id + "' over " +
                            describe(p.tuple, raw.vertices));
          }
        }
      }
      k.by_id_.emplace(p.id, SimplexRef{d, table.size()});
      table.push_back(std::move(s));
    }
  }

  k.compute_cofaces();
  return k;
}

void Complex::index_ids() {
  by_id_.clear();
  for (std::size_t d = 0; d < tables_.size(); ++d) {
    for (std::size_t i = 0; i < tables_[d].size(); ++i) {
      by_id_.emplace(tables_[d][i].id, SimplexRef{static_cast<int>(d), i});
    }
  }
}

void Complex::compute_cofaces() {
  cofaces_.clear();
  if (n_ < 1) return;
  cofaces_.resize(size(n_ - 1));
  const auto& top = tables_[static_cast<std::size_t>(n_)];
  for (std::size_t s = 0; s < top.size(); ++s) {
    for (auto f : top[s].faces) cofaces_[f].push_back(s);
  }
}

std::size_t Complex::size(int dim) const {
  if (dim < 0 || dim > n_) return 0;
  return tables_[static_cast<std::size_t>(dim)].size();
}

std::span<const Simplex> Complex::table(int dim) const {
  if (dim < 0 || dim > n_) return {};
  return tables_[static_cast<std::size_t>(dim)];
}

const Simplex& Complex::simplex(SimplexRef ref) const {
  if (ref.dim < 0 || ref.dim > n_ || ref.index >= size(ref.dim)) {
    throw Error(ErrorKind::UnknownSimplex,
                "no simplex at dimension " + std::to_string(ref.dim) +
                    ", index " + std::to_string(ref.index));
  }
  return tables_[static_cast<std::size_t>(ref.dim)][ref.index];
}

std::optional<SimplexRef> Complex::find(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

std::size_t Complex::degree(SimplexRef f) const {
  if (n_ < 1 || f.dim != n_ - 1) {
    throw Error(ErrorKind::DimensionMismatch,
                "degree is defined for simplices of dimension n-1 = " +
                    std::to_string(n_ - 1));
  }
  if (f.index >= cofaces_.size()) {
    throw Error(ErrorKind::UnknownSimplex,
                "index " + std::to_string(f.index) + " out of range");
  }
  return cofaces_[f.index].size();
}

std::vector<std::size_t> Complex::degrees() const {
  std::vector<std::size_t> out;
  out.reserve(cofaces_.size());
  for (const auto& c : cofaces_) out.push_back(c.size());
  return out;
}

std::span<const std::size_t> Complex::cofaces(std::size_t index) const {
  return cofaces_.at(index);
}

Gf2Matrix Complex::boundary_matrix(int d) const {
  if (d < 0 || d > n_) {
    throw Error(ErrorKind::DimensionMismatch,
                "boundary matrix of dimension " + std::to_string(d) +
                    " in a complex of dimension " + std::to_string(n_));
  }
  if (d == 0) {
    Gf2Matrix m(1, size(0));
    for (std::size_t j = 0; j < size(0); ++j) m.set(0, j);
    return m;
  }
  Gf2Matrix m(size(d - 1), size(d));
  const auto& t = tables_[static_cast<std::size_t>(d)];
  for (std::size_t j = 0; j < t.size(); ++j) {
    for (auto f : t[j].faces) m.set(f, j, !m.get(f, j));
  }
  return m;
}

void Complex::require_chain(const Chain& c) const {
  const std::size_t expected = c.dim == -1 ? 1 : size(c.dim);
  if (c.dim < -1 || c.dim > n_ || c.support.size() != expected) {
    throw Error(ErrorKind::DimensionMismatch,
                "chain of dimension " + std::to_string(c.dim) + " with " +
                    std::to_string(c.support.size()) +
                    " coordinates does not belong to this complex");
  }
}

Chain Complex::boundary(const Chain& c) const {
  require_chain(c);
  if (c.dim < 0) {
    throw Error(ErrorKind::DimensionMismatch,
                "the augmentation target has no boundary");
  }
  Chain out = zero_chain(c.dim - 1);
  if (c.dim == 0) {
    if (c.support.count() % 2 == 1) out.support.set(0);
    return out;
  }
  const auto& t = tables_[static_cast<std::size_t>(c.dim)];
  for (auto j : c.support.ones()) {
    for (auto f : t[j].faces) out.support.flip(f);
  }
  return out;
}

bool Complex::is_cycle(const Chain& c) const { return boundary(c).empty(); }

Chain Complex::zero_chain(int dim) const {
  if (dim < -1 || dim > n_) {
    throw Error(ErrorKind::DimensionMismatch,
                "no chains of dimension " + std::to_string(dim));
  }
  return Chain{dim, Gf2Vector(dim == -1 ? 1 : size(dim))};
}

Chain Complex::chain(int dim, std::initializer_list<std::string_view> ids) const {
  std::vector<std::string> v(ids.begin(), ids.end());
  return chain(dim, v);
}

Chain Complex::chain(int dim, std::span<const std::string> ids) const {
  Chain c = zero_chain(dim);
  for (const auto& id : ids) {
    auto ref = find(id);
    if (!ref || ref->dim != dim) {
      throw Error(ErrorKind::UnknownSimplex,
                  "'" + id + "' is not a " + std::to_string(dim) + "-simplex");
    }
    c.support.flip(ref->index);
  }
  return c;
}

std::vector<std::string> Complex::ids(const Chain& c) const {
  require_chain(c);
  std::vector<std::string> out;
  if (c.dim < 0) return out;
  for (auto j : c.support.ones()) {
    out.push_back(tables_[static_cast<std::size_t>(c.dim)][j].id);
  }
  return out;
}

Chain Complex::transfer(const Chain& c, const Complex& from) const {
  if (c.dim < 0) return c;
  return chain(c.dim, from.ids(c));
}

Complex Complex::delete_top_simplices(std::span<const SimplexRef> refs) const {
  std::vector<Gf2Vector> keep;
  for (int d = 0; d <= n_; ++d) {
    Gf2Vector all(size(d));
    for (std::size_t i = 0; i < size(d); ++i) all.set(i);
    keep.push_back(std::move(all));
  }
  for (const auto& r : refs) {
    if (r.dim != n_) {
      throw Error(ErrorKind::DimensionMismatch,
                  "only top simplices (dimension " + std::to_string(n_) +
                      ") can be deleted");
    }
    if (r.index >= size(n_)) {
      throw Error(ErrorKind::UnknownSimplex,
                  "top simplex index " + std::to_string(r.index) +
                      " out of range");
    }
    keep[static_cast<std::size_t>(n_)].set(r.index, false);
  }
  return restrict_to(keep, n_);
}

Complex Complex::restrict_to(const std::vector<Gf2Vector>& keep,
                             int new_n) const {
  if (new_n < 0 || new_n > n_ ||
      keep.size() < static_cast<std::size_t>(new_n) + 1) {
    throw std::invalid_argument("restrict_to: bad target dimension");
  }
  Complex out;
  out.n_ = new_n;
  out.tables_.resize(static_cast<std::size_t>(new_n) + 1);
  std::vector<std::size_t> prev_map;
  std::vector<std::size_t> vertex_map;
  for (int d = 0; d <= new_n; ++d) {
    const auto& mask = keep[static_cast<std::size_t>(d)];
    if (mask.size() != size(d)) {
      throw std::invalid_argument("restrict_to: mask length mismatch");
    }
    constexpr auto kDropped = static_cast<std::size_t>(-1);
    std::vector<std::size_t> map(size(d), kDropped);
    auto& table = out.tables_[static_cast<std::size_t>(d)];
    for (auto i : mask.ones()) {
      Simplex s = tables_[static_cast<std::size_t>(d)][i];
      for (auto& f : s.faces) {
        if (prev_map[f] == kDropped) {
          throw std::logic_error("restrict_to: '" + s.id +
                                 "' kept without one of its faces");
        }
        f = prev_map[f];
      }
      if (d == 0) {
        s.vertices = {table.size()};
      } else {
        for (auto& v : s.vertices) v = vertex_map[v];
      }
      map[i] = table.size();
      table.push_back(std::move(s));
    }
    if (d == 0) vertex_map = map;
    prev_map = std::move(map);
  }
  out.index_ids();
  out.compute_cofaces();
  return out;
}

RawComplex Complex::to_raw() const {
  RawComplex raw;
  raw.n = n_;
  for (const auto& v : tables_[0]) raw.vertices.push_back(v.id);
  for (int d = 1; d <= n_; ++d) {
    const auto& lower = tables_[static_cast<std::size_t>(d) - 1];
    for (const auto& s : tables_[static_cast<std::size_t>(d)]) {
      RawSimplex r;
      r.dim = d;
      r.id = s.id;
      for (auto v : s.vertices) r.vertices.push_back(tables_[0][v].id);
      std::vector<std::string> faces;
      for (auto f : s.faces) faces.push_back(lower[f].id);
      r.faces = std::move(faces);
      raw.simplices.push_back(std::move(r));
    }
  }
  return raw;
}

}  // namespace kbound
