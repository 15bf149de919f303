#pragma once

// Finite simplicial complexes with exact vertex values, their lower-star and
// upper-star level subcomplexes, and simplicial homology over GF(p).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "amt/fpla.hpp"
#include "amt/level.hpp"

namespace amt {

// Sorted internal vertex indices.
using Simplex = std::vector<std::size_t>;

class ComplexError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct VertexSpec {
  std::int64_t id;
  Level value;
};

class FilteredComplex {
 public:
  static constexpr std::size_t kDefaultMaxDimension = 8;

  // `simplices` are given by vertex id. Every declared vertex is a 0-simplex;
  // listing it again in `simplices` is allowed.
  FilteredComplex(Field field, std::vector<VertexSpec> vertices,
                  const std::vector<std::vector<std::int64_t>>& simplices,
                  std::size_t max_dimension = kDefaultMaxDimension)
      : data_(build(std::move(field), std::move(vertices), simplices, max_dimension)) {}

  const Field& field() const { return data_->field; }
  std::size_t vertex_count() const { return data_->vertices.size(); }
  const VertexSpec& vertex(std::size_t i) const { return data_->vertices[i]; }
  const Level& value(std::size_t vertex) const { return data_->vertices[vertex].value; }

  // -1 for the empty complex.
  int dimension() const { return static_cast<int>(data_->simplices.size()) - 1; }
  std::size_t count(int r) const {
    return r < 0 || r > dimension() ? 0 : data_->simplices[static_cast<std::size_t>(r)].size();
  }
  std::size_t total_count() const {
    std::size_t n = 0;
    for (const auto& s : data_->simplices) n += s.size();
    return n;
  }
  const Simplex& simplex(int r, std::size_t i) const { return data_->simplices[static_cast<std::size_t>(r)][i]; }
  std::optional<std::size_t> index_of(const Simplex& s) const {
    if (s.empty() || s.size() > data_->simplices.size()) return std::nullopt;
    const auto& lookup = data_->index[s.size() - 1];
    auto it = lookup.find(s);
    if (it == lookup.end()) return std::nullopt;
    return it->second;
  }
  const Level& max_value(int r, std::size_t i) const { return data_->max_value[static_cast<std::size_t>(r)][i]; }
  const Level& min_value(int r, std::size_t i) const { return data_->min_value[static_cast<std::size_t>(r)][i]; }

  // Distinct vertex values in increasing order.
  const std::vector<Level>& distinct_values() const { return data_->distinct_values; }

  FilteredComplex with_field(const Field& field) const {
    FilteredComplex copy = *this;
    auto d = std::make_shared<Data>(*data_);
    d->field = field;
    copy.data_ = std::move(d);
    return copy;
  }

  // Same simplices, vertex values replaced by their negatives.
  FilteredComplex negated() const {
    FilteredComplex copy = *this;
    auto d = std::make_shared<Data>(*data_);
    for (auto& v : d->vertices) v.value = -v.value;
    fill_values(*d);
    copy.data_ = std::move(d);
    return copy;
  }

  bool same_as(const FilteredComplex& other) const { return data_ == other.data_; }

 private:
  struct Data {
    Field field;
    std::vector<VertexSpec> vertices;
    std::vector<std::vector<Simplex>> simplices;
    std::vector<std::map<Simplex, std::size_t>> index;
    std::vector<std::vector<Level>> max_value;
    std::vector<std::vector<Level>> min_value;
    std::vector<Level> distinct_values;
  };

  static void fill_values(Data& d) {
    d.max_value.assign(d.simplices.size(), {});
    d.min_value.assign(d.simplices.size(), {});
    for (std::size_t r = 0; r < d.simplices.size(); ++r)
      for (const auto& s : d.simplices[r]) {
        Level hi = d.vertices[s.front()].value, lo = hi;
        for (auto v : s) {
          hi = std::max(hi, d.vertices[v].value);
          lo = std::min(lo, d.vertices[v].value);
        }
        d.max_value[r].push_back(hi);
        d.min_value[r].push_back(lo);
      }
    std::vector<Level> values;
    for (const auto& v : d.vertices) values.push_back(v.value);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    d.distinct_values = std::move(values);
  }

  static std::string describe(const std::vector<std::int64_t>& ids) {
    std::string s = "[";
    for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + std::to_string(ids[i]);
    return s + "]";
  }

  static std::shared_ptr<const Data> build(Field field, std::vector<VertexSpec> vertices,
                                           const std::vector<std::vector<std::int64_t>>& simplices,
                                           std::size_t max_dimension) {
    auto d = std::make_shared<Data>(Data{std::move(field), {}, {}, {}, {}, {}, {}});
    std::sort(vertices.begin(), vertices.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < vertices.size(); ++i)
      if (vertices[i].id == vertices[i - 1].id)
        throw ComplexError("duplicate vertex id " + std::to_string(vertices[i].id));
    for (const auto& v : vertices)
      if (!v.value.is_finite()) throw ComplexError("vertex " + std::to_string(v.id) + " has a non-finite value");
    d->vertices = std::move(vertices);

    std::map<std::int64_t, std::size_t> by_id;
    for (std::size_t i = 0; i < d->vertices.size(); ++i) by_id[d->vertices[i].id] = i;

    std::vector<std::set<Simplex>> sets(d->vertices.empty() ? 0 : 1);
    for (std::size_t i = 0; i < d->vertices.size(); ++i) sets[0].insert(Simplex{i});

    for (const auto& ids : simplices) {
      if (ids.empty()) throw ComplexError("empty simplex");
      std::vector<std::int64_t> sorted_ids = ids;
      std::sort(sorted_ids.begin(), sorted_ids.end());
      if (std::adjacent_find(sorted_ids.begin(), sorted_ids.end()) != sorted_ids.end())
        throw ComplexError("simplex " + describe(ids) + " repeats a vertex");
      if (sorted_ids.size() - 1 > max_dimension)
        throw ComplexError("simplex " + describe(ids) + " exceeds the dimension cap " + std::to_string(max_dimension));
      Simplex s;
      for (auto id : sorted_ids) {
        auto it = by_id.find(id);
        if (it == by_id.end()) throw ComplexError("face missing: [" + std::to_string(id) + "] of simplex " + describe(ids));
        s.push_back(it->second);
      }
      if (sets.size() < s.size()) sets.resize(s.size());
      sets[s.size() - 1].insert(std::move(s));
    }

    // face closure: every codimension-one face must be listed
    for (std::size_t r = 1; r < sets.size(); ++r)
      for (const auto& s : sets[r])
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
          Simplex face;
          for (std::size_t k = 0; k < s.size(); ++k)
            if (k != drop) face.push_back(s[k]);
          if (!sets[r - 1].count(face)) {
            std::vector<std::int64_t> face_ids, simplex_ids;
            for (auto v : face) face_ids.push_back(d->vertices[v].id);
            for (auto v : s) simplex_ids.push_back(d->vertices[v].id);
            throw ComplexError("face missing: " + describe(face_ids) + " of simplex " + describe(simplex_ids));
          }
        }
    while (!sets.empty() && sets.back().empty()) sets.pop_back();

    for (auto& level : sets) {
      d->simplices.emplace_back(level.begin(), level.end());
      auto& lookup = d->index.emplace_back();
      for (std::size_t i = 0; i < d->simplices.back().size(); ++i) lookup.emplace(d->simplices.back()[i], i);
    }
    fill_values(*d);
    return d;
  }

  std::shared_ptr<const Data> data_;
};

enum class Side { Below, Above };

class Subcomplex {
 public:
  Subcomplex(FilteredComplex parent, std::vector<std::vector<char>> members)
      : parent_(std::move(parent)), members_(std::move(members)) {
    members_.resize(static_cast<std::size_t>(parent_.dimension() + 1));
    for (int r = 0; r <= parent_.dimension(); ++r) {
      auto& m = members_[static_cast<std::size_t>(r)];
      if (m.empty()) m.assign(parent_.count(r), 0);
      if (m.size() != parent_.count(r)) throw std::invalid_argument("membership vector has wrong length");
    }
    for (int r = 1; r <= parent_.dimension(); ++r)
      for (std::size_t i = 0; i < parent_.count(r); ++i) {
        if (!contains(r, i)) continue;
        const Simplex& s = parent_.simplex(r, i);
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
          Simplex face = s;
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
          if (!contains(r - 1, *parent_.index_of(face)))
            throw ComplexError("subcomplex is not closed under faces");
        }
      }
  }

  static Subcomplex whole(const FilteredComplex& k) {
    std::vector<std::vector<char>> m;
    for (int r = 0; r <= k.dimension(); ++r) m.emplace_back(k.count(r), 1);
    return Subcomplex(k, std::move(m));
  }
  static Subcomplex empty(const FilteredComplex& k) { return Subcomplex(k, {}); }

  const FilteredComplex& parent() const { return parent_; }
  bool contains(int r, std::size_t i) const { return members_[static_cast<std::size_t>(r)][i] != 0; }
  const std::vector<std::vector<char>>& members() const { return members_; }

  // Parent indices of the r-simplices in this subcomplex, increasing.
  std::vector<std::size_t> simplices(int r) const {
    std::vector<std::size_t> out;
    if (r < 0 || r > parent_.dimension()) return out;
    for (std::size_t i = 0; i < parent_.count(r); ++i)
      if (contains(r, i)) out.push_back(i);
    return out;
  }
  std::size_t count(int r) const { return simplices(r).size(); }
  bool is_empty() const { return count(0) == 0; }

  bool subset_of(const Subcomplex& other) const {
    if (!parent_.same_as(other.parent_)) return false;
    for (std::size_t r = 0; r < members_.size(); ++r)
      for (std::size_t i = 0; i < members_[r].size(); ++i)
        if (members_[r][i] && !other.members_[r][i]) return false;
    return true;
  }

  friend bool operator==(const Subcomplex& a, const Subcomplex& b) {
    return a.parent_.same_as(b.parent_) && a.members_ == b.members_;
  }

 private:
  FilteredComplex parent_;
  std::vector<std::vector<char>> members_;
};

// below: max vertex value <= a (< a if strict); above: min vertex value >= a (> a if strict).
inline Subcomplex level_subcomplex(const FilteredComplex& k, const Level& a, Side side, bool strict) {
  std::vector<std::vector<char>> m;
  for (int r = 0; r <= k.dimension(); ++r) {
    auto& row = m.emplace_back(k.count(r), 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (side == Side::Below) {
        const Level& v = k.max_value(r, i);
        row[i] = strict ? v < a : v <= a;
      } else {
        const Level& v = k.min_value(r, i);
        row[i] = strict ? v > a : v >= a;
      }
    }
  }
  return Subcomplex(k, std::move(m));
}

namespace detail {

// Boundary of the r-simplices `cols` against the (r-1)-simplices `rows`
// (both lists of parent indices). Faces outside `rows` are dropped, which
// is exactly the relative boundary when `rows` excludes a subcomplex.
inline Mat boundary_block(const FilteredComplex& k, int r, const std::vector<std::size_t>& rows,
                          const std::vector<std::size_t>& cols) {
  const Field& f = k.field();
  Mat m(f, rows.size(), cols.size());
  if (r <= 0 || rows.empty() || cols.empty()) return m;
  std::map<std::size_t, std::size_t> row_of;
  for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = i;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Simplex& s = k.simplex(r, cols[j]);
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
      auto it = row_of.find(*k.index_of(face));
      if (it == row_of.end()) continue;
      m.set_elem(it->second, j, drop % 2 == 0 ? 1 : f.neg(1));
    }
  }
  return m;
}

inline Vec embed(const Vec& local, const std::vector<std::size_t>& positions, std::size_t width) {
  Vec out(width, 0);
  for (std::size_t i = 0; i < positions.size(); ++i) out[positions[i]] = local[i];
  return out;
}

}  // namespace detail

// Matrix of ∂_r: rows are the (r-1)-simplices of s, columns its r-simplices,
// both in parent order. Unreduced: ∂_0 has no rows.
inline Mat boundary_matrix(const Subcomplex& s, int r) {
  if (r < 0) throw std::invalid_argument("negative degree");
  return detail::boundary_block(s.parent(), r, s.simplices(r - 1), s.simplices(r));
}

// Basis of H_r of a subcomplex. Chains are written in the parent complex's
// r-chain coordinates, so inclusions act as the identity on chains.
class HomologyBasis {
 public:
  HomologyBasis(const Subcomplex& s, int r) : degree_(r), boundary_space_(Subspace::zero(s.parent().field(), 0)) {
    const FilteredComplex& k = s.parent();
    const Field& f = k.field();
    const std::size_t width = k.count(r);
    auto here = s.simplices(r);

    std::vector<Vec> boundaries;
    auto above = s.simplices(r + 1);
    Mat up = detail::boundary_block(k, r + 1, here, above);
    for (std::size_t j = 0; j < up.cols(); ++j) boundaries.push_back(detail::embed(up.column(j), here, width));
    boundary_space_ = Subspace::span(f, width, std::move(boundaries));

    Subspace cycles = kernel_basis(boundary_matrix(s, r));
    std::vector<Vec> reps;
    detail::TaggedEchelon probe(f, width, 0);
    for (const auto& b : boundary_space_.vectors()) probe.insert(b, {});
    for (const auto& z : cycles.vectors()) {
      Vec full = detail::embed(z, here, width);
      if (probe.insert(full, {})) reps.push_back(std::move(full));
    }

    auto reader = std::make_shared<detail::TaggedEchelon>(f, width, reps.size());
    for (const auto& b : boundary_space_.vectors()) reader->insert(b, Vec(reps.size(), 0));
    for (std::size_t i = 0; i < reps.size(); ++i) {
      Vec tag(reps.size(), 0);
      tag[i] = 1;
      reader->insert(reps[i], std::move(tag));
    }
    reader_ = std::move(reader);
    cycle_reps_ = std::make_shared<Mat>(Mat::from_columns(f, width, reps));
  }

  int degree() const { return degree_; }
  std::size_t dim() const { return cycle_reps_->cols(); }
  const Mat& cycle_reps() const { return *cycle_reps_; }
  const Subspace& boundary_space() const { return boundary_space_; }

  // Coordinates of the class of `cycle` in this basis.
  Vec coordinates(const Vec& cycle) const {
    auto red = reader_->reduce(cycle);
    if (!detail::is_zero(red.remainder))
      throw std::logic_error("chain does not reduce to a homology class of the target subcomplex");
    return std::move(red.tag);
  }

 private:
  int degree_;
  std::shared_ptr<const Mat> cycle_reps_;
  Subspace boundary_space_;
  std::shared_ptr<const detail::TaggedEchelon> reader_;
};

inline HomologyBasis homology_basis(const Subcomplex& s, int r) { return HomologyBasis(s, r); }

inline std::size_t relative_homology_dim(const Subcomplex& k, const Subcomplex& l, int r) {
  if (!l.subset_of(k)) throw ComplexError("relative homology: subcomplex is not contained in the ambient complex");
  if (r < 0) return 0;
  auto relative = [&](int d) {
    std::vector<std::size_t> out;
    if (d < 0) return out;
    for (auto i : k.simplices(d))
      if (!l.contains(d, i)) out.push_back(i);
    return out;
  };
  const FilteredComplex& parent = k.parent();
  auto cells = relative(r);
  std::size_t out_rank = mat_rank(detail::boundary_block(parent, r, relative(r - 1), cells));
  std::size_t in_rank = mat_rank(detail::boundary_block(parent, r + 1, cells, relative(r + 1)));
  return cells.size() - out_rank - in_rank;
}

// Matrix of H_r(from) -> H_r(to) in the two chosen bases.
inline Mat induced_map(const HomologyBasis& from, const HomologyBasis& to) {
  if (from.degree() != to.degree()) throw std::invalid_argument("induced map between different degrees");
  const Field& f = from.cycle_reps().field();
  Mat m(f, to.dim(), from.dim());
  for (std::size_t j = 0; j < from.dim(); ++j) {
    Vec c = to.coordinates(from.cycle_reps().column(j));
    for (std::size_t i = 0; i < c.size(); ++i) m.set_elem(i, j, c[i]);
  }
  return m;
}

inline Mat induced_map(const Subcomplex& l, const Subcomplex& k, int r) {
  if (!l.subset_of(k)) throw ComplexError("induced map: subcomplex is not contained in the target");
  return induced_map(homology_basis(l, r), homology_basis(k, r));
}

}  // namespace amt
