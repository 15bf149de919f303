#pragma once

// The chain complex assembled from a barcode, its threshold filtration, the
// Hodge-type numerical invariants of a finite chain complex, and the
// dimension-level checks that tie the barcode back to the homology of the
// level subcomplexes.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "amt/fpla.hpp"
#include "amt/invariants.hpp"
#include "amt/level.hpp"

namespace amt {

enum class Block { Minus, Homology, Plus };

inline const char* to_string(Block b) {
  switch (b) {
    case Block::Minus: return "minus";
    case Block::Homology: return "homology";
    case Block::Plus: return "plus";
  }
  return "?";
}

enum class Source { Delta, Mu, Gamma };

inline const char* to_string(Source s) {
  switch (s) {
    case Source::Delta: return "delta";
    case Source::Mu: return "mu";
    case Source::Gamma: return "gamma";
  }
  return "?";
}

// One basis vector of a chain group, labelled by the support point it comes
// from. `copy` distinguishes the units of a multiplicity. For Mu, b == a.
struct Generator {
  Source source;
  int source_degree;
  Level a;
  Level b;
  std::size_t copy;

  auto label() const { return std::tie(source, source_degree, a, b, copy); }
  friend bool operator==(const Generator& x, const Generator& y) { return x.label() == y.label(); }
  friend bool operator<(const Generator& x, const Generator& y) { return x.label() < y.label(); }
};

struct ChainGroup {
  int degree = 0;
  std::vector<Generator> minus;
  std::vector<Generator> homology;
  std::vector<Generator> plus;

  std::size_t dim() const { return minus.size() + homology.size() + plus.size(); }
  // Generators in block order minus, homology, plus.
  std::vector<Generator> ordered() const {
    std::vector<Generator> out = minus;
    out.insert(out.end(), homology.begin(), homology.end());
    out.insert(out.end(), plus.begin(), plus.end());
    return out;
  }
};

// Dimensions plus boundary matrices; boundaries[n] maps C_n -> C_{n-1}
// (boundaries[0] has no rows).
struct ChainComplex {
  Field field;
  std::vector<std::size_t> dims;
  std::vector<Mat> boundaries;
};

namespace detail {

inline ChainComplex assemble(const Field& field, const std::vector<ChainGroup>& groups) {
  ChainComplex c{field, {}, {}};
  std::vector<std::vector<Generator>> bases;
  for (const auto& g : groups) {
    bases.push_back(g.ordered());
    c.dims.push_back(g.dim());
  }
  for (std::size_t n = 0; n < groups.size(); ++n) {
    std::size_t below = n == 0 ? 0 : c.dims[n - 1];
    Mat d(field, below, c.dims[n]);
    if (n > 0) {
      std::map<Generator, std::size_t> plus_row;
      const auto& lower = groups[n - 1];
      std::size_t offset = lower.minus.size() + lower.homology.size();
      for (std::size_t i = 0; i < lower.plus.size(); ++i) plus_row.emplace(lower.plus[i], offset + i);
      for (std::size_t j = 0; j < groups[n].minus.size(); ++j) {
        auto it = plus_row.find(groups[n].minus[j]);
        if (it == plus_row.end())
          throw std::logic_error("minus generator in degree " + std::to_string(n) + " has no partner one degree down");
        d.set_elem(it->second, j, 1);
      }
    }
    c.boundaries.push_back(std::move(d));
  }
  return c;
}

}  // namespace detail

class AMTComplex {
 public:
  AMTComplex(Field field, std::vector<ChainGroup> groups) : field_(std::move(field)), groups_(std::move(groups)) {}

  const Field& field() const { return field_; }
  const std::vector<ChainGroup>& groups() const { return groups_; }
  std::size_t degree_count() const { return groups_.size(); }
  const ChainGroup& group(int n) const { return groups_[static_cast<std::size_t>(n)]; }
  std::size_t dim(int n) const {
    return n < 0 || static_cast<std::size_t>(n) >= groups_.size() ? 0 : group(n).dim();
  }

  ChainComplex chain() const { return detail::assemble(field_, groups_); }

 private:
  Field field_;
  std::vector<ChainGroup> groups_;
};

// One generator per unit of multiplicity. Degrees run 0..top+1 where top is
// the highest degree present in the support.
inline AMTComplex build_amt_complex(const Field& field, const BarcodeSupport& s) {
  int top = -1;
  for (const auto& d : s.degrees) top = std::max(top, d.degree);
  std::vector<ChainGroup> groups(top < 0 ? 0 : static_cast<std::size_t>(top + 2));
  for (std::size_t n = 0; n < groups.size(); ++n) groups[n].degree = static_cast<int>(n);
  for (const auto& d : s.degrees) {
    const auto r = static_cast<std::size_t>(d.degree);
    for (const auto& [ab, m] : d.delta)
      for (std::size_t c = 0; c < m; ++c) groups[r].homology.push_back({Source::Delta, d.degree, ab.first, ab.second, c});
    for (const auto& [a, m] : d.mu)
      for (std::size_t c = 0; c < m; ++c) groups[r].homology.push_back({Source::Mu, d.degree, a, a, c});
    for (const auto& [ab, m] : d.gamma)
      for (std::size_t c = 0; c < m; ++c) {
        Generator g{Source::Gamma, d.degree, ab.first, ab.second, c};
        groups[r].plus.push_back(g);
        groups[r + 1].minus.push_back(g);
      }
  }
  return AMTComplex(field, std::move(groups));
}

// The stage C(t) of the threshold filtration. A γ_n generator of C⁺_n with
// a <= t < b is selected but plays the role of a homology generator.
class FilteredAMTComplex {
 public:
  FilteredAMTComplex(std::shared_ptr<const AMTComplex> base, Level t) : base_(std::move(base)), threshold_(t) {
    for (const auto& g : base_->groups()) {
      ChainGroup sel;
      sel.degree = g.degree;
      for (const auto& x : g.minus)
        if (x.b <= t) sel.minus.push_back(x);
      for (const auto& x : g.homology)
        if (x.a <= t) sel.homology.push_back(x);
      for (const auto& x : g.plus) {
        if (x.b <= t)
          sel.plus.push_back(x);
        else if (x.a <= t)
          sel.homology.push_back(x);
      }
      selected_.push_back(std::move(sel));
    }
  }

  const AMTComplex& base() const { return *base_; }
  const Level& threshold() const { return threshold_; }
  const std::vector<ChainGroup>& groups() const { return selected_; }
  const ChainGroup& group(int n) const { return selected_[static_cast<std::size_t>(n)]; }
  std::size_t dim(int n) const {
    return n < 0 || static_cast<std::size_t>(n) >= selected_.size() ? 0 : group(n).dim();
  }

  ChainComplex chain() const { return detail::assemble(base_->field(), selected_); }

  // Every selected generator, in base order, per degree.
  std::vector<std::vector<Generator>> generator_sets() const {
    std::vector<std::vector<Generator>> out;
    for (const auto& g : selected_) {
      auto v = g.ordered();
      std::sort(v.begin(), v.end());
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  std::shared_ptr<const AMTComplex> base_;
  Level threshold_;
  std::vector<ChainGroup> selected_;
};

inline FilteredAMTComplex filtered_subcomplex(std::shared_ptr<const AMTComplex> c, const Level& t) {
  return FilteredAMTComplex(std::move(c), t);
}

struct HodgeRow {
  int degree;
  std::size_t c;
  std::size_t beta;
  std::size_t rank_out;  // rank ∂_n
  std::size_t rank_in;   // rank ∂_{n+1}
};

struct HodgeReport {
  std::vector<HodgeRow> rows;
};

// Throws std::logic_error if ∂∂ ≠ 0 or c_n ≠ β_n + rank ∂_n + rank ∂_{n+1}.
inline HodgeReport hodge_report(const ChainComplex& c) {
  HodgeReport out;
  const std::size_t n_deg = c.dims.size();
  std::vector<std::size_t> ranks(n_deg + 1, 0);
  for (std::size_t n = 0; n < n_deg; ++n) ranks[n] = mat_rank(c.boundaries[n]);
  for (std::size_t n = 1; n < n_deg; ++n) {
    Mat dd = c.boundaries[n - 1] * c.boundaries[n];
    if (mat_rank(dd) != 0) throw std::logic_error("boundary squares to a nonzero map in degree " + std::to_string(n));
  }
  for (std::size_t n = 0; n < n_deg; ++n) {
    std::size_t kernel = kernel_basis(c.boundaries[n]).dim();
    HodgeRow row{static_cast<int>(n), c.dims[n], kernel - ranks[n + 1], ranks[n], ranks[n + 1]};
    if (row.c != row.beta + row.rank_out + row.rank_in)
      throw std::logic_error("Hodge identity fails in degree " + std::to_string(n));
    out.rows.push_back(row);
  }
  return out;
}

inline HodgeReport hodge_report(const AMTComplex& c) { return hodge_report(c.chain()); }
inline HodgeReport hodge_report(const FilteredAMTComplex& c) { return hodge_report(c.chain()); }

// Homology dimensions of a finite chain complex.
inline std::vector<std::size_t> homology_dims(const ChainComplex& c) {
  std::vector<std::size_t> out;
  for (const auto& row : hodge_report(c).rows) out.push_back(row.beta);
  return out;
}

// ---- verification reports ----

struct Report {
  std::string claim;
  std::size_t lhs = 0;
  std::size_t rhs = 0;
  bool pass = false;
  int degree = 0;
  Level level;
};

inline Report make_report(std::string claim, std::size_t lhs, std::size_t rhs, int degree, const Level& level) {
  return Report{std::move(claim), lhs, rhs, lhs == rhs, degree, level};
}

// Checks the decompositions of relative and absolute homology in terms of the
// invariants. Sums range over every distinct vertex value: between vertex
// values the level subcomplexes do not change, so every invariant evaluated
// off the vertex values vanishes identically.
class Verifier {
 public:
  explicit Verifier(Invariants inv) : inv_(std::move(inv)) {}
  explicit Verifier(FilteredComplex k) : inv_(std::move(k)) {}

  const Invariants& invariants() const { return inv_; }

  // dim H_r(X_a, X_{<a}) against
  //   Σ_t δ_r(a,t) + μ_r(a) + Σ_{t<a} γ_{r-1}(t,a) + λ_{r-1}(a) + Σ_{t>a} γ_r(a,t).
  Report verify_t44_item1(int r, const Level& a) const {
    std::size_t lhs = r < 0 ? 0 : inv_.sublevel_jump(r, a);
    std::size_t rhs = 0;
    if (r >= 0 && r <= inv_.dimension()) {
      for (const auto& t : values()) rhs += delta(r, a, t);
      rhs += inv_.mu(r, a).dim;
      for (const auto& t : values())
        if (a < t) rhs += gamma(r, a, t);
    }
    if (r >= 1 && r - 1 <= inv_.dimension()) {
      for (const auto& t : values())
        if (t < a) rhs += gamma(r - 1, t, a);
      rhs += inv_.lambda(r - 1, a).dim;
    }
    return make_report("relative homology of (X_a, X_<a) splits into delta, mu, gamma, lambda", lhs, rhs, r, a);
  }

  // Finite t: dim H_r(X_t) against Σ_{a<=t} δ_r(a,·) + Σ_{a<=t<b} γ_r(a,b) + Σ_{a<=t} μ_r(a).
  // t = +inf: dim H_r(X) against Σ δ_r + Σ μ_r.
  Report verify_t44_item2(int r, const Level& t) const {
    std::size_t lhs = 0, rhs = 0;
    if (r >= 0 && r <= inv_.dimension()) {
      lhs = inv_.homology(inv_.sublevel(t), r)->dim();
      for (const auto& a : values()) {
        if (t < a) continue;
        for (const auto& b : values()) {
          rhs += delta(r, a, b);
          if (t.is_finite() && t < b) rhs += gamma(r, a, b);
        }
        rhs += inv_.mu(r, a).dim;
      }
    }
    std::string claim = t.is_finite() ? "homology of X_t from delta, alive gamma and mu"
                                      : "homology of X from delta and mu";
    return make_report(std::move(claim), lhs, rhs, r, t);
  }

 private:
  const std::vector<Level>& values() const { return inv_.complex().distinct_values(); }

  std::size_t delta(int r, const Level& a, const Level& b) const {
    auto key = std::make_tuple(r, a, b);
    if (auto it = delta_.find(key); it != delta_.end()) return it->second;
    return delta_[key] = inv_.delta(r, a, b).dim;
  }
  std::size_t gamma(int r, const Level& a, const Level& b) const {
    auto key = std::make_tuple(r, a, b);
    if (auto it = gamma_.find(key); it != gamma_.end()) return it->second;
    return gamma_[key] = inv_.gamma(r, a, b).dim;
  }

  Invariants inv_;
  mutable std::map<std::tuple<int, Level, Level>, std::size_t> delta_;
  mutable std::map<std::tuple<int, Level, Level>, std::size_t> gamma_;
};

// Per degree r of the filtered complex at t: dim C_r(t) against
// Σ_{a<=t, a critical} dim H_r(X_a, X_{<a}), and the homology of C(t)
// against dim H_r(X_t). Two reports per degree.
inline std::vector<Report> morse_dims_check(const Invariants& inv, const BarcodeSupport& s,
                                            const std::shared_ptr<const AMTComplex>& c, const Level& t) {
  FilteredAMTComplex stage(c, t);
  auto chain = stage.chain();
  auto betti = homology_dims(chain);
  std::vector<Report> out;
  const int top = std::max<int>(static_cast<int>(chain.dims.size()) - 1, inv.dimension() + 1);
  for (int r = 0; r <= top; ++r) {
    std::size_t cells = stage.dim(r);
    std::size_t jumps = 0;
    for (const auto& a : s.critical_values)
      if (a <= t) jumps += inv.sublevel_jump(r, a);
    out.push_back(make_report("chain group dimension equals summed relative homology", cells, jumps, r, t));
    std::size_t h_chain = static_cast<std::size_t>(r) < betti.size() ? betti[static_cast<std::size_t>(r)] : 0;
    std::size_t h_space = r <= inv.dimension() ? inv.homology(inv.sublevel(t), r)->dim() : 0;
    out.push_back(make_report("homology of the filtered chain complex equals homology of X_t", h_chain, h_space, r, t));
  }
  return out;
}

inline std::vector<Report> morse_dims_check(const Invariants& inv, const Level& t) {
  auto s = inv.barcode_support();
  auto c = std::make_shared<const AMTComplex>(build_amt_complex(inv.field(), s));
  return morse_dims_check(inv, s, c, t);
}

}  // namespace amt
