#pragma once

// Fixtures and the random corpus shared by the unit and acceptance suites.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "amt/scomplex.hpp"

namespace amt::testing {

inline std::vector<VertexSpec> values(std::initializer_list<std::int64_t> vals) {
  std::vector<VertexSpec> out;
  std::int64_t id = 0;
  for (auto v : vals) out.push_back({id++, Level(v)});
  return out;
}

// Closure of a list of maximal simplices, as vertex-id lists.
inline std::vector<std::vector<std::int64_t>> closure(const std::vector<std::vector<std::int64_t>>& maximal) {
  std::set<std::vector<std::int64_t>> all;
  for (auto s : maximal) {
    std::sort(s.begin(), s.end());
    const std::size_t n = s.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<std::int64_t> face;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) face.push_back(s[i]);
      all.insert(face);
    }
  }
  return {all.begin(), all.end()};
}

// Circle: triangle boundary with values 0, 1, 2.
inline FilteredComplex s1(std::uint32_t p = 2) {
  return FilteredComplex(Field(p), values({0, 1, 2}), {{0, 1}, {1, 2}, {0, 2}});
}

// Path v0 - v2 - v1 with values 0, 1, 2: two components merging at 2.
inline FilteredComplex merge(std::uint32_t p = 2) {
  return FilteredComplex(Field(p), values({0, 1, 2}), {{0, 2}, {1, 2}});
}

// Boundary of the tetrahedron with values 0..3.
inline FilteredComplex s2(std::uint32_t p = 2) {
  return FilteredComplex(Field(p), values({0, 1, 2, 3}), closure({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}));
}

// Six-vertex projective plane with values 0..5.
inline FilteredComplex rp2(std::uint32_t p = 2) {
  return FilteredComplex(Field(p), values({0, 1, 2, 3, 4, 5}),
                         closure({{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
                                  {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}}));
}

inline FilteredComplex point(std::int64_t value = 5, std::uint32_t p = 2) {
  return FilteredComplex(Field(p), values({value}), {});
}

// Random filtered complex: up to 8 vertices, dimension up to 3, values drawn
// from a small grid of halves so that ties are common.
inline FilteredComplex random_complex(std::mt19937_64& rng, std::uint32_t p) {
  std::uniform_int_distribution<int> nverts(1, 8), dim(0, 3), nmax(1, 6), value(-4, 8), denom(1, 2);
  const int n = nverts(rng);
  std::vector<VertexSpec> vertices;
  for (int i = 0; i < n; ++i) vertices.push_back({i, Level(value(rng), denom(rng))});
  std::vector<std::vector<std::int64_t>> maximal;
  const int count = nmax(rng);
  std::vector<std::int64_t> ids(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ids[static_cast<std::size_t>(i)] = i;
  for (int m = 0; m < count; ++m) {
    int size = std::min(dim(rng) + 1, n);
    std::shuffle(ids.begin(), ids.end(), rng);
    maximal.emplace_back(ids.begin(), ids.begin() + size);
  }
  return FilteredComplex(Field(p), std::move(vertices), closure(maximal));
}

struct CorpusEntry {
  FilteredComplex complex;
  std::uint32_t p;
};

inline std::vector<CorpusEntry> random_corpus(std::size_t size, std::uint64_t seed = 20261016) {
  std::mt19937_64 rng(seed);
  const std::uint32_t primes[] = {2, 3, 5};
  std::vector<CorpusEntry> out;
  for (std::size_t i = 0; i < size; ++i) {
    std::uint32_t p = primes[i % 3];
    out.push_back({random_complex(rng, p), p});
  }
  return out;
}

}  // namespace amt::testing
