#pragma once

// Dense linear algebra over a prime field GF(p).
//
// Vectors are plain std::vector<Elem>; matrices are row-major. Subspaces are
// kept in reduced column-echelon form, so two Subspace values span the same
// space exactly when their bases compare equal.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace amt {

using Elem = std::uint32_t;
using Vec = std::vector<Elem>;

class Field {
 public:
  static constexpr std::uint32_t kTableLimit = 1u << 16;
  static constexpr std::uint32_t kMaxCharacteristic = (1u << 31) - 1;

  explicit Field(std::uint32_t p) : p_(p) {
    if (!is_prime(p) || p > kMaxCharacteristic) {
      throw std::invalid_argument("field characteristic " + std::to_string(p) +
                                  " is not a supported prime");
    }
    if (p < kTableLimit) {
      auto table = std::make_shared<std::vector<Elem>>(p, 0);
      (*table)[1] = 1;
      // inv(i) = -(p / i) * inv(p % i)
      for (std::uint32_t i = 2; i < p; ++i) {
        std::uint64_t q = p / i;
        (*table)[i] = static_cast<Elem>(
            (p - (q * (*table)[p % i]) % p) % p);
      }
      inverses_ = std::move(table);
    }
  }

  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  std::uint32_t characteristic() const { return p_; }

  Elem reduce(std::int64_t v) const {
    std::int64_t m = v % static_cast<std::int64_t>(p_);
    return static_cast<Elem>(m < 0 ? m + p_ : m);
  }
  Elem add(Elem a, Elem b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Elem>(s >= p_ ? s - p_ : s);
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + (p_ - b); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((std::uint64_t{a} * b) % p_);
  }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero in GF(p)");
    if (inverses_) return (*inverses_)[a];
    return pow(a, p_ - 2);
  }
  Elem pow(Elem a, std::uint64_t e) const {
    Elem result = 1;
    while (e) {
      if (e & 1) result = mul(result, a);
      a = mul(a, a);
      e >>= 1;
    }
    return result;
  }

  friend bool operator==(const Field& x, const Field& y) { return x.p_ == y.p_; }

 private:
  std::uint32_t p_;
  std::shared_ptr<const std::vector<Elem>> inverses_;
};

class Mat {
 public:
  Mat(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Mat identity(const Field& field, std::size_t n) {
    Mat m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
    return m;
  }

  static Mat from_rows(const Field& field,
                       std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    std::vector<std::vector<std::int64_t>> v;
    for (const auto& r : rows) v.emplace_back(r);
    return from_rows(field, v, v.empty() ? 0 : v.front().size());
  }

  static Mat from_rows(const Field& field, const std::vector<std::vector<std::int64_t>>& rows,
                       std::size_t cols) {
    Mat m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
  }

  static Mat from_columns(const Field& field, std::size_t rows, std::span<const Vec> columns) {
    Mat m(field, rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw std::invalid_argument("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m.data_[i * m.cols_ + j] = columns[j][i];
    }
    return m;
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::span<const Elem> data() const { return data_; }

  Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, std::int64_t v) { data_[i * cols_ + j] = field_.reduce(v); }
  void set_elem(std::size_t i, std::size_t j, Elem v) { data_[i * cols_ + j] = v; }

  Vec row(std::size_t i) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  Vec column(std::size_t j) const {
    Vec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = data_[i * cols_ + j];
    return c;
  }
  std::vector<Vec> columns() const {
    std::vector<Vec> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
  }
  std::vector<Vec> row_vectors() const {
    std::vector<Vec> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  Mat transpose() const {
    Mat t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = data_[i * cols_ + j];
    return t;
  }

  Vec apply(std::span<const Elem> v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    Vec out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      Elem acc = 0;
      for (std::size_t j = 0; j < cols_; ++j)
        if (v[j]) acc = field_.add(acc, field_.mul(data_[i * cols_ + j], v[j]));
      out[i] = acc;
    }
    return out;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    if (!(a.field_ == b.field_)) throw std::invalid_argument("matrix product field mismatch");
    Mat c(a.field_, a.rows_, b.cols_);
    const Field& f = a.field_;
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        Elem x = a(i, k);
        if (!x) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          c.data_[i * c.cols_ + j] = f.add(c.data_[i * c.cols_ + j], f.mul(x, b(k, j)));
      }
    return c;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

inline std::ostream& operator<<(std::ostream& os, const Mat& m) {
  os << "GF(" << m.field().characteristic() << ") " << m.rows() << "x" << m.cols() << " [";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
  }
  return os << "]";
}

namespace detail {

inline bool is_zero(std::span<const Elem> v) {
  return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
}

// dst -= factor * src, starting at column `from`.
inline void axpy_sub(const Field& f, Vec& dst, const Vec& src, Elem factor, std::size_t from = 0) {
  if (!factor) return;
  for (std::size_t k = from; k < dst.size(); ++k)
    if (src[k]) dst[k] = f.sub(dst[k], f.mul(factor, src[k]));
}

// Gauss-Jordan elimination of a list of row vectors of length `width`.
// On return `rows` holds the nonzero rows of the reduced row-echelon form,
// sorted by pivot; the returned vector lists the pivot columns.
inline std::vector<std::size_t> row_reduce(const Field& f, std::vector<Vec>& rows, std::size_t width) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < width && next < rows.size(); ++col) {
    std::size_t sel = next;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[next], rows[sel]);
    Elem scale = f.inv(rows[next][col]);
    for (std::size_t k = col; k < width; ++k) rows[next][k] = f.mul(rows[next][k], scale);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != next) axpy_sub(f, rows[i], rows[next], rows[i][col], col);
    pivots.push_back(col);
    ++next;
  }
  rows.resize(next);
  return pivots;
}

// Incremental echelon system. Each stored row may carry a tag vector that
// records a linear combination; reducing a vector reports the accumulated
// tag, which is how coordinates modulo a subspace are read off.
class TaggedEchelon {
 public:
  TaggedEchelon(Field field, std::size_t width, std::size_t tag_width)
      : field_(std::move(field)), width_(width), tag_width_(tag_width), slot_(width, npos) {}

  struct Reduction {
    Vec remainder;
    Vec tag;
  };

  // v = remainder + (combination of stored rows whose tags sum to tag)
  Reduction reduce(Vec v) const {
    Vec tag(tag_width_, 0);
    for (std::size_t col = 0; col < width_; ++col) {
      if (!v[col] || slot_[col] == npos) continue;
      const auto& entry = entries_[slot_[col]];
      Elem factor = v[col];
      axpy_sub(field_, v, entry.row, factor, col);
      axpy_sub(field_, tag, entry.tag, field_.neg(factor));
    }
    return {std::move(v), std::move(tag)};
  }

  // Adds v (with its tag) unless it is dependent on the rows already stored.
  bool insert(Vec v, Vec tag) {
    auto red = reduce(std::move(v));
    std::size_t col = 0;
    while (col < width_ && red.remainder[col] == 0) ++col;
    if (col == width_) return false;
    for (std::size_t k = 0; k < tag_width_; ++k) tag[k] = field_.sub(tag[k], red.tag[k]);
    Elem scale = field_.inv(red.remainder[col]);
    for (auto& x : red.remainder) x = field_.mul(x, scale);
    for (auto& x : tag) x = field_.mul(x, scale);
    slot_[col] = entries_.size();
    entries_.push_back({std::move(red.remainder), std::move(tag)});
    return true;
  }

  std::size_t rank() const { return entries_.size(); }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  struct Entry {
    Vec row;
    Vec tag;
  };
  Field field_;
  std::size_t width_;
  std::size_t tag_width_;
  std::vector<std::size_t> slot_;
  std::vector<Entry> entries_;
};

}  // namespace detail

// Raised by quotient_dim when W is not contained in U.
class ContainmentError : public std::invalid_argument {
 public:
  ContainmentError(std::size_t column, Vec witness)
      : std::invalid_argument("subspace containment violated: column " + std::to_string(column) +
                              " of the sub-basis lies outside the ambient subspace"),
        column_(column),
        witness_(std::move(witness)) {}
  std::size_t column() const { return column_; }
  const Vec& witness() const { return witness_; }

 private:
  std::size_t column_;
  Vec witness_;
};

class Subspace {
 public:
  static Subspace zero(const Field& field, std::size_t ambient_dim) {
    return Subspace(field, ambient_dim, {}, {});
  }
  static Subspace full(const Field& field, std::size_t ambient_dim) {
    std::vector<Vec> e;
    for (std::size_t i = 0; i < ambient_dim; ++i) {
      Vec v(ambient_dim, 0);
      v[i] = 1;
      e.push_back(std::move(v));
    }
    return span(field, ambient_dim, std::move(e));
  }
  static Subspace span(const Field& field, std::size_t ambient_dim, std::vector<Vec> vectors) {
    for (const auto& v : vectors)
      if (v.size() != ambient_dim) throw std::invalid_argument("spanning vector has wrong length");
    auto pivots = detail::row_reduce(field, vectors, ambient_dim);
    return Subspace(field, ambient_dim, std::move(vectors), std::move(pivots));
  }
  static Subspace column_span(const Mat& m) { return span(m.field(), m.rows(), m.columns()); }

  const Field& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return vectors_.size(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  // Basis vectors in reduced echelon form, ordered by pivot.
  const std::vector<Vec>& vectors() const { return vectors_; }
  Mat basis() const { return Mat::from_columns(field_, ambient_dim_, vectors_); }

  Vec reduce(Vec v) const {
    if (v.size() != ambient_dim_) throw std::invalid_argument("vector has wrong length");
    for (std::size_t i = 0; i < vectors_.size(); ++i)
      detail::axpy_sub(field_, v, vectors_[i], v[pivots_[i]], pivots_[i]);
    return v;
  }
  bool contains(std::span<const Elem> v) const {
    return detail::is_zero(reduce(Vec(v.begin(), v.end())));
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.field_ == b.field_ && a.ambient_dim_ == b.ambient_dim_ && a.vectors_ == b.vectors_;
  }

 private:
  Subspace(Field field, std::size_t ambient_dim, std::vector<Vec> vectors, std::vector<std::size_t> pivots)
      : field_(std::move(field)), ambient_dim_(ambient_dim), vectors_(std::move(vectors)), pivots_(std::move(pivots)) {}

  Field field_;
  std::size_t ambient_dim_;
  std::vector<Vec> vectors_;
  std::vector<std::size_t> pivots_;
};

inline std::size_t mat_rank(const Mat& m) {
  auto rows = m.row_vectors();
  return detail::row_reduce(m.field(), rows, m.cols()).size();
}

inline Subspace kernel_basis(const Mat& m) {
  const Field& f = m.field();
  auto rows = m.row_vectors();
  auto pivots = detail::row_reduce(f, rows, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> kernel;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(rows[i][free]);
    kernel.push_back(std::move(v));
  }
  return Subspace::span(f, m.cols(), std::move(kernel));
}

namespace detail {
inline void require_conforming(const Subspace& u, const Subspace& v, const char* op) {
  if (u.ambient_dim() != v.ambient_dim())
    throw std::invalid_argument(std::string(op) + ": ambient dimension mismatch (" +
                                std::to_string(u.ambient_dim()) + " vs " +
                                std::to_string(v.ambient_dim()) + ")");
  if (!(u.field() == v.field())) throw std::invalid_argument(std::string(op) + ": field mismatch");
}
}  // namespace detail

inline Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  detail::require_conforming(u, v, "subspace_sum");
  std::vector<Vec> all = u.vectors();
  all.insert(all.end(), v.vectors().begin(), v.vectors().end());
  return Subspace::span(u.field(), u.ambient_dim(), std::move(all));
}

inline Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  detail::require_conforming(u, v, "subspace_intersect");
  const Field& f = u.field();
  const std::size_t n = u.ambient_dim(), du = u.dim(), dv = v.dim();
  // kernel of [U | -V]: pairs (x, y) with Ux = Vy
  Mat joined(f, n, du + dv);
  for (std::size_t j = 0; j < du; ++j)
    for (std::size_t i = 0; i < n; ++i) joined.set_elem(i, j, u.vectors()[j][i]);
  for (std::size_t j = 0; j < dv; ++j)
    for (std::size_t i = 0; i < n; ++i) joined.set_elem(i, du + j, f.neg(v.vectors()[j][i]));
  auto ker = kernel_basis(joined);
  std::vector<Vec> meet;
  for (const auto& xy : ker.vectors()) {
    Vec w(n, 0);
    for (std::size_t j = 0; j < du; ++j)
      if (xy[j]) {
        Vec col = u.vectors()[j];
        for (std::size_t i = 0; i < n; ++i) w[i] = f.add(w[i], f.mul(xy[j], col[i]));
      }
    meet.push_back(std::move(w));
  }
  return Subspace::span(f, n, std::move(meet));
}

inline Subspace subspace_image(const Mat& m, const Subspace& u) {
  if (m.cols() != u.ambient_dim())
    throw std::invalid_argument("subspace_image: matrix has " + std::to_string(m.cols()) +
                                " columns but subspace lives in dimension " +
                                std::to_string(u.ambient_dim()));
  std::vector<Vec> images;
  for (const auto& b : u.vectors()) images.push_back(m.apply(b));
  return Subspace::span(m.field(), m.rows(), std::move(images));
}

inline std::size_t quotient_dim(const Subspace& u, const Subspace& w) {
  detail::require_conforming(u, w, "quotient_dim");
  for (std::size_t j = 0; j < w.dim(); ++j)
    if (!u.contains(w.vectors()[j])) throw ContainmentError(j, w.vectors()[j]);
  return u.dim() - w.dim();
}

// Columns of U that complete a basis of W to one of U, i.e. representatives
// of a basis of U/W. Requires W ⊆ U.
inline Mat complement_basis(const Subspace& u, const Subspace& w) {
  quotient_dim(u, w);
  detail::TaggedEchelon ech(u.field(), u.ambient_dim(), 0);
  for (const auto& v : w.vectors()) ech.insert(v, {});
  std::vector<Vec> picked;
  for (const auto& v : u.vectors())
    if (ech.insert(v, {})) picked.push_back(v);
  return Mat::from_columns(u.field(), u.ambient_dim(), picked);
}

}  // namespace amt
