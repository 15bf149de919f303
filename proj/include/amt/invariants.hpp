#pragma once

// The barcode invariants of a function on a finite simplicial complex:
// δ̂_r(a,b), ⁺γ̂_r(a,b), ⁺μ̂_r(a), ⁺λ̂_r(a), the box modules built from the
// same subspaces, and the resulting barcode.
//
// Every space is a subspace of a fixed coordinate space: the images I_a,
// I^b and the F-spaces live in H_r(X) (coordinates from the basis of the
// whole complex), the kernels T(a,b) live in H_r(X_a). Limits over ε are
// evaluated exactly: X_{<a} and X^{>b} are themselves subcomplexes
// (max vertex value < a, min vertex value > b), equal to the level
// subcomplexes at the neighbouring vertex values.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "amt/fpla.hpp"
#include "amt/level.hpp"
#include "amt/scomplex.hpp"

namespace amt {

class OrderError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct VSDim {
  std::size_t dim = 0;
  std::optional<Mat> witness_basis;
};

using CriticalSet = std::vector<Level>;

enum class BoxOrientation { Right, Left };

struct DegreeSupport {
  int degree = 0;
  std::map<std::pair<Level, Level>, std::size_t> delta;
  std::map<std::pair<Level, Level>, std::size_t> gamma;
  std::map<Level, std::size_t> mu;
  std::map<Level, std::size_t> lambda;
};

struct BarcodeSupport {
  CriticalSet critical_values;
  std::vector<DegreeSupport> degrees;

  const DegreeSupport* at(int r) const {
    for (const auto& d : degrees)
      if (d.degree == r) return &d;
    return nullptr;
  }
  std::size_t delta(int r, const Level& a, const Level& b) const { return lookup(r, &DegreeSupport::delta, std::pair{a, b}); }
  std::size_t gamma(int r, const Level& a, const Level& b) const { return lookup(r, &DegreeSupport::gamma, std::pair{a, b}); }
  std::size_t mu(int r, const Level& a) const { return lookup(r, &DegreeSupport::mu, a); }
  std::size_t lambda(int r, const Level& a) const { return lookup(r, &DegreeSupport::lambda, a); }

 private:
  template <typename Map, typename Key>
  std::size_t lookup(int r, Map DegreeSupport::*table, const Key& key) const {
    const DegreeSupport* d = at(r);
    if (!d) return 0;
    auto it = (d->*table).find(key);
    return it == (d->*table).end() ? 0 : it->second;
  }
};

enum class BarKind { Closed, Open, ClosedOpen };

inline const char* to_string(BarKind k) {
  switch (k) {
    case BarKind::Closed: return "closed";
    case BarKind::Open: return "open";
    case BarKind::ClosedOpen: return "closed-open";
  }
  return "?";
}

struct Bar {
  int degree;
  BarKind kind;
  Level left;
  Level right;
  std::size_t multiplicity;

  friend bool operator==(const Bar&, const Bar&) = default;
};

struct BarList {
  std::vector<Bar> bars;
};

class Invariants {
 public:
  explicit Invariants(FilteredComplex k) : complex_(std::move(k)), cache_(std::make_shared<Cache>()) {}

  const FilteredComplex& complex() const { return complex_; }
  const Field& field() const { return complex_.field(); }
  int dimension() const { return complex_.dimension(); }

  // ---- level subcomplexes and their homology (memoized) ----

  Subcomplex sublevel(const Level& a, bool strict = false) const { return level(a, Side::Below, strict); }
  Subcomplex superlevel(const Level& b, bool strict = false) const { return level(b, Side::Above, strict); }
  Subcomplex whole() const { return Subcomplex::whole(complex_); }

  std::shared_ptr<const HomologyBasis> homology(const Subcomplex& s, int r) const {
    std::lock_guard lock(cache_->mutex);
    auto key = std::make_pair(s.members(), r);
    auto it = cache_->homology.find(key);
    if (it != cache_->homology.end()) return it->second;
    auto basis = std::make_shared<const HomologyBasis>(s, r);
    cache_->homology.emplace(std::move(key), basis);
    return basis;
  }

  Mat induced(const Subcomplex& from, const Subcomplex& to, int r) const {
    if (!from.subset_of(to)) throw ComplexError("induced map: subcomplex is not contained in the target");
    return induced_map(*homology(from, r), *homology(to, r));
  }

  std::size_t relative_dim(const Subcomplex& k, const Subcomplex& l, int r) const {
    std::lock_guard lock(cache_->mutex);
    auto key = std::make_tuple(k.members(), l.members(), r);
    auto it = cache_->relative.find(key);
    if (it != cache_->relative.end()) return it->second;
    std::size_t d = relative_homology_dim(k, l, r);
    cache_->relative.emplace(std::move(key), d);
    return d;
  }

  // dim H_r(X_a, X_{<a})
  std::size_t sublevel_jump(int r, const Level& a) const { return relative_dim(sublevel(a), sublevel(a, true), r); }
  // dim H_r(X^a, X^{>a})
  std::size_t superlevel_jump(int r, const Level& a) const {
    return relative_dim(superlevel(a), superlevel(a, true), r);
  }

  // ---- critical values ----

  bool is_critical(const Level& a) const {
    for (int r = 0; r <= dimension(); ++r)
      if (sublevel_jump(r, a) || superlevel_jump(r, a)) return true;
    return false;
  }

  CriticalSet critical_values() const {
    CriticalSet out;
    for (const auto& a : complex_.distinct_values())
      if (is_critical(a)) out.push_back(a);
    return out;
  }

  // ---- I- and F-spaces, inside H_r(X) ----

  Subspace image_in_total(const Level& a, Side side, bool strict, int r) const {
    return Subspace::column_span(induced(level(a, side, strict), whole(), r));
  }

  Subspace f_space(const Level& a, const Level& b, bool strict_a, bool strict_b, int r) const {
    return subspace_intersect(image_in_total(a, Side::Below, strict_a, r),
                              image_in_total(b, Side::Above, strict_b, r));
  }

  VSDim delta(int r, const Level& a, const Level& b, bool witness = false) const {
    Subspace top = f_space(a, b, false, false, r);
    Subspace bottom = subspace_sum(f_space(a, b, true, false, r), f_space(a, b, false, true, r));
    return quotient(top, bottom, witness);
  }

  // I^∞ = ∩_y I^y. The family decreases in y and is constant past the
  // largest vertex value, where the superlevel subcomplex is empty.
  Subspace image_at_top(int r) const {
    Subspace acc = image_in_total(Level::pos_inf(), Side::Above, false, r);
    for (const auto& y : complex_.distinct_values())
      acc = subspace_intersect(acc, image_in_total(y, Side::Above, false, r));
    return acc;
  }

  VSDim mu(int r, const Level& a, bool witness = false) const {
    Subspace top = image_at_top(r);
    return quotient(subspace_intersect(image_in_total(a, Side::Below, false, r), top),
                    subspace_intersect(image_in_total(a, Side::Below, true, r), top), witness);
  }

  // ---- T-spaces, inside H_r(X_a) or H_r(X_{<a}) ----

  Subspace t_space(const Level& a, const Level& b, bool strict_a, bool strict_b, int r) const {
    if (strict_b ? !(a < b) : !(a <= b))
      throw OrderError("T-space needs a " + std::string(strict_b ? "<" : "<=") + " b, got a=" + a.to_string() +
                       ", b=" + b.to_string());
    return kernel_basis(induced(sublevel(a, strict_a), sublevel(b, strict_b), r));
  }

  // Image of T(from, b) under H_r(X_from) -> H_r(X_to) (either end optionally strict).
  Subspace pushed_kernel(const Level& from, bool strict_from, const Level& to, bool strict_to, const Level& b,
                         int r) const {
    Subspace t = t_space(from, b, strict_from, false, r);
    return subspace_image(induced(sublevel(from, strict_from), sublevel(to, strict_to), r), t);
  }

  VSDim gamma(int r, const Level& a, const Level& b, bool witness = false) const {
    if (!(a < b)) throw OrderError("gamma needs a < b, got a=" + a.to_string() + ", b=" + b.to_string());
    Subspace top = t_space(a, b, false, false, r);
    Subspace bottom = subspace_sum(pushed_kernel(a, true, a, false, b, r), t_space(a, b, false, true, r));
    return quotient(top, bottom, witness);
  }

  // Image of T(-∞, a) in T(<a, a). T(t, a) is constant for t below every
  // vertex value, where the sublevel subcomplex is empty.
  VSDim lambda(int r, const Level& a, bool witness = false) const {
    const Level bottom = Level::neg_inf();
    Subspace t = t_space(bottom, a, false, false, r);
    Subspace image = subspace_image(induced(sublevel(bottom), sublevel(a, true), r), t);
    Subspace zero = Subspace::zero(field(), image.ambient_dim());
    return quotient(image, zero, witness);
  }

  // ---- box modules ----

  // F_r(a×[x,y)) = F(a,x) / (F(<a,x) + F(a,y)), for x <= y.
  std::size_t box_f(int r, const Level& a, const Level& x, const Level& y) const {
    if (y < x) throw OrderError("box_f needs x <= y, got x=" + x.to_string() + ", y=" + y.to_string());
    Subspace top = f_space(a, x, false, false, r);
    Subspace bottom = subspace_sum(f_space(a, x, true, false, r), f_space(a, y, false, false, r));
    return quotient_dim(top, bottom);
  }

  // Right: T_r(a×(x,y]) = T(a,y) / (iT(<a,y) + T(a,x)), for a <= x <= y.
  // Left:  T_r((x,y]×b) = T(y,b) / (iT(x,b) + T(y,<b)), for x <= y < b.
  std::size_t box_t(int r, BoxOrientation orientation, const Level& fixed, const Level& x, const Level& y) const {
    if (y < x) throw OrderError("box_t needs x <= y, got x=" + x.to_string() + ", y=" + y.to_string());
    if (orientation == BoxOrientation::Right) {
      const Level& a = fixed;
      if (x < a) throw OrderError("right box needs a <= x, got a=" + a.to_string() + ", x=" + x.to_string());
      if (x == y) return 0;
      Subspace top = t_space(a, y, false, false, r);
      Subspace bottom = subspace_sum(pushed_kernel(a, true, a, false, y, r), t_space(a, x, false, false, r));
      return quotient_dim(top, bottom);
    }
    const Level& b = fixed;
    if (!(y < b)) throw OrderError("left box needs y < b, got y=" + y.to_string() + ", b=" + b.to_string());
    if (x == y) return 0;
    Subspace top = t_space(y, b, false, false, r);
    Subspace bottom = subspace_sum(pushed_kernel(x, false, y, false, b, r), t_space(y, b, false, true, r));
    return quotient_dim(top, bottom);
  }

  // ---- barcode ----

  // Nonzero values of all four invariants over CR(f). Degrees 0..max_degree
  // (default: the dimension of the complex).
  BarcodeSupport barcode_support(std::optional<int> max_degree = std::nullopt) const {
    BarcodeSupport out;
    out.critical_values = critical_values();
    const int top = std::min(dimension(), max_degree.value_or(dimension()));
    const auto& cr = out.critical_values;
    for (int r = 0; r <= top; ++r) {
      DegreeSupport d;
      d.degree = r;
      for (const auto& a : cr) {
        for (const auto& b : cr) {
          if (auto v = delta(r, a, b).dim) d.delta[{a, b}] = v;
          if (a < b)
            if (auto v = gamma(r, a, b).dim) d.gamma[{a, b}] = v;
        }
        if (auto v = mu(r, a).dim) d.mu[a] = v;
        if (auto v = lambda(r, a).dim) d.lambda[a] = v;
      }
      out.degrees.push_back(std::move(d));
    }
    return out;
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::pair<std::vector<std::vector<char>>, int>, std::shared_ptr<const HomologyBasis>> homology;
    std::map<std::tuple<std::vector<std::vector<char>>, std::vector<std::vector<char>>, int>, std::size_t> relative;
  };

  Subcomplex level(const Level& a, Side side, bool strict) const { return level_subcomplex(complex_, a, side, strict); }

  VSDim quotient(const Subspace& top, const Subspace& bottom, bool witness) const {
    VSDim out;
    out.dim = quotient_dim(top, bottom);
    if (witness) out.witness_basis = complement_basis(top, bottom);
    return out;
  }

  FilteredComplex complex_;
  std::shared_ptr<Cache> cache_;
};

inline BarList classify_bars(const BarcodeSupport& s) {
  BarList out;
  for (const auto& d : s.degrees) {
    for (const auto& [ab, m] : d.delta) {
      const auto& [a, b] = ab;
      if (a <= b)
        out.bars.push_back({d.degree, BarKind::Closed, a, b, m});
      else
        out.bars.push_back({d.degree - 1, BarKind::Open, b, a, m});
    }
    for (const auto& [ab, m] : d.gamma) out.bars.push_back({d.degree, BarKind::ClosedOpen, ab.first, ab.second, m});
  }
  std::sort(out.bars.begin(), out.bars.end(), [](const Bar& x, const Bar& y) {
    return std::tie(x.degree, x.left, x.right, x.kind) < std::tie(y.degree, y.left, y.right, y.kind);
  });
  return out;
}

}  // namespace amt
