#pragma once

// Standard sublevel-set persistence by left-to-right column reduction of
// the full boundary matrix. Shares nothing with the invariant machinery
// beyond field arithmetic, which is what makes it useful as a cross-check.

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "amt/fpla.hpp"
#include "amt/invariants.hpp"
#include "amt/level.hpp"
#include "amt/scomplex.hpp"

namespace amt {

struct DegreePairs {
  int degree = 0;
  std::vector<std::pair<Level, Level>> finite_pairs;  // sorted
  std::vector<Level> essential_births;                // sorted
};

struct PersistencePairs {
  std::vector<DegreePairs> degrees;

  const DegreePairs* at(int r) const {
    for (const auto& d : degrees)
      if (d.degree == r) return &d;
    return nullptr;
  }
};

inline PersistencePairs standard_reduction(const FilteredComplex& k) {
  const Field& f = k.field();
  struct Cell {
    Level value;
    int dim;
    std::size_t index;
  };
  std::vector<Cell> order;
  for (int r = 0; r <= k.dimension(); ++r)
    for (std::size_t i = 0; i < k.count(r); ++i) order.push_back({k.max_value(r, i), r, i});
  // (value, dimension, lexicographic vertex list); faces always precede cofaces
  std::sort(order.begin(), order.end(), [&](const Cell& x, const Cell& y) {
    if (x.value != y.value) return x.value < y.value;
    if (x.dim != y.dim) return x.dim < y.dim;
    return k.simplex(x.dim, x.index) < k.simplex(y.dim, y.index);
  });

  std::map<std::pair<int, std::size_t>, std::size_t> position;
  for (std::size_t p = 0; p < order.size(); ++p) position[{order[p].dim, order[p].index}] = p;

  using Column = std::map<std::size_t, Elem>;  // filtration position -> coefficient
  std::vector<Column> columns(order.size());
  for (std::size_t p = 0; p < order.size(); ++p) {
    const Cell& c = order[p];
    if (c.dim == 0) continue;
    const Simplex& s = k.simplex(c.dim, c.index);
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
      std::size_t row = position.at({c.dim - 1, *k.index_of(face)});
      columns[p][row] = drop % 2 == 0 ? 1 : f.neg(1);
    }
  }

  std::map<std::size_t, std::size_t> owner_of_low;
  std::vector<bool> negative(order.size(), false), paired(order.size(), false);
  for (std::size_t p = 0; p < order.size(); ++p) {
    Column& col = columns[p];
    while (!col.empty()) {
      std::size_t low = col.rbegin()->first;
      auto owner = owner_of_low.find(low);
      if (owner == owner_of_low.end()) break;
      const Column& other = columns[owner->second];
      Elem factor = f.mul(col.at(low), f.inv(other.at(low)));
      for (const auto& [row, v] : other) {
        Elem updated = f.sub(col[row], f.mul(factor, v));
        if (updated)
          col[row] = updated;
        else
          col.erase(row);
      }
    }
    if (!col.empty()) {
      std::size_t low = col.rbegin()->first;
      owner_of_low[low] = p;
      negative[p] = true;
      paired[low] = true;
    }
  }

  PersistencePairs out;
  for (int r = 0; r <= k.dimension(); ++r) out.degrees.push_back({r, {}, {}});
  for (const auto& [low, p] : owner_of_low) {
    const Level& birth = order[low].value;
    const Level& death = order[p].value;
    if (birth < death) out.degrees[static_cast<std::size_t>(order[low].dim)].finite_pairs.emplace_back(birth, death);
  }
  for (std::size_t p = 0; p < order.size(); ++p)
    if (!negative[p] && !paired[p])
      out.degrees[static_cast<std::size_t>(order[p].dim)].essential_births.push_back(order[p].value);
  for (auto& d : out.degrees) {
    std::sort(d.finite_pairs.begin(), d.finite_pairs.end());
    std::sort(d.essential_births.begin(), d.essential_births.end());
  }
  return out;
}

struct CrosscheckDegree {
  int degree = 0;
  bool pairs_match = true;
  bool essentials_match = true;
  // Finite pairs present on one side only, with the excess multiplicity.
  std::vector<std::tuple<Level, Level, std::size_t>> only_in_oracle;
  std::vector<std::tuple<Level, Level, std::size_t>> only_in_support;
  // Levels where essential births and Σ_b δ(a,b) + μ(a) disagree: (a, oracle, support).
  std::vector<std::tuple<Level, std::size_t, std::size_t>> essential_mismatches;
};

struct CrosscheckReport {
  bool pass = true;
  std::vector<CrosscheckDegree> degrees;
};

inline CrosscheckReport crosscheck(const PersistencePairs& oracle, const BarcodeSupport& s) {
  CrosscheckReport out;
  int top = -1;
  for (const auto& d : oracle.degrees) top = std::max(top, d.degree);
  for (const auto& d : s.degrees) top = std::max(top, d.degree);
  for (int r = 0; r <= top; ++r) {
    CrosscheckDegree row;
    row.degree = r;
    std::map<std::pair<Level, Level>, std::size_t> from_oracle, from_support;
    std::map<Level, std::size_t> born_oracle, born_support;
    if (const auto* d = oracle.at(r)) {
      for (const auto& p : d->finite_pairs) ++from_oracle[p];
      for (const auto& a : d->essential_births) ++born_oracle[a];
    }
    if (const auto* d = s.at(r)) {
      for (const auto& [ab, m] : d->gamma) from_support[ab] += m;
      for (const auto& [ab, m] : d->delta) born_support[ab.first] += m;
      for (const auto& [a, m] : d->mu) born_support[a] += m;
    }
    for (const auto& [ab, m] : from_oracle) {
      std::size_t other = from_support.count(ab) ? from_support[ab] : 0;
      if (m > other) row.only_in_oracle.emplace_back(ab.first, ab.second, m - other);
    }
    for (const auto& [ab, m] : from_support) {
      std::size_t other = from_oracle.count(ab) ? from_oracle[ab] : 0;
      if (m > other) row.only_in_support.emplace_back(ab.first, ab.second, m - other);
    }
    std::map<Level, std::pair<std::size_t, std::size_t>> births;
    for (const auto& [a, m] : born_oracle) births[a].first = m;
    for (const auto& [a, m] : born_support) births[a].second = m;
    for (const auto& [a, counts] : births)
      if (counts.first != counts.second) row.essential_mismatches.emplace_back(a, counts.first, counts.second);
    row.pairs_match = row.only_in_oracle.empty() && row.only_in_support.empty();
    row.essentials_match = row.essential_mismatches.empty();
    out.pass = out.pass && row.pairs_match && row.essentials_match;
    out.degrees.push_back(std::move(row));
  }
  return out;
}

inline CrosscheckReport crosscheck(const FilteredComplex& k, const BarcodeSupport& s) {
  return crosscheck(standard_reduction(k), s);
}

}  // namespace amt
