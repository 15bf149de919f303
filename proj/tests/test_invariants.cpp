#include <gtest/gtest.h>

#include "amt/invariants.hpp"
#include "properties.hpp"
#include "support.hpp"

using namespace amt;
using namespace amt::testing;

namespace {

using Points = std::map<std::pair<Level, Level>, std::size_t>;

Points pts(std::initializer_list<std::tuple<std::int64_t, std::int64_t, std::size_t>> list) {
  Points out;
  for (auto [a, b, m] : list) out[{Level(a), Level(b)}] = m;
  return out;
}

}  // namespace

TEST(CriticalValues, Examples) {
  EXPECT_EQ(Invariants(s1()).critical_values(), (CriticalSet{Level(0), Level(2)}));
  EXPECT_EQ(Invariants(merge()).critical_values(), (CriticalSet{Level(0), Level(1), Level(2)}));
  EXPECT_EQ(Invariants(point()).critical_values(), (CriticalSet{Level(5)}));
  EXPECT_EQ(Invariants(s2()).critical_values(), (CriticalSet{Level(0), Level(3)}));
}

TEST(ImageInTotal, Examples) {
  Invariants m(merge());
  EXPECT_EQ(m.image_in_total(Level(1), Side::Below, false, 0).dim(), 1u);
  EXPECT_EQ(m.image_in_total(Level(-1), Side::Below, false, 0).dim(), 0u);
  Invariants s(s1());
  auto arc = s.image_in_total(Level(1), Side::Below, false, 1);
  EXPECT_EQ(arc.dim(), 0u);
  EXPECT_EQ(arc.ambient_dim(), 1u);
}

TEST(FSpace, Examples) {
  Invariants s(s1());
  EXPECT_EQ(s.f_space(Level(2), Level(0), false, false, 1).dim(), 1u);
  EXPECT_EQ(s.f_space(Level(1), Level(0), false, false, 1).dim(), 0u);
  EXPECT_EQ(s.f_space(Level(-3), Level(0), false, false, 0).dim(), 0u);
}

TEST(Delta, Examples) {
  Invariants s(s1());
  EXPECT_EQ(s.delta(0, Level(0), Level(2)).dim, 1u);
  EXPECT_EQ(s.delta(1, Level(2), Level(0)).dim, 1u);
  Invariants m(merge());
  for (const auto& b : probe_levels(m.complex())) EXPECT_EQ(m.delta(0, Level(1), b).dim, 0u) << b;
  EXPECT_EQ(s.delta(0, Level(1), Level(2)).dim, 0u);
  EXPECT_EQ(s.delta(1, Level(1), Level(0)).dim, 0u);
}

TEST(Delta, WitnessHasDimColumns) {
  Invariants s(s1(3));
  auto v = s.delta(1, Level(2), Level(0), true);
  ASSERT_TRUE(v.witness_basis.has_value());
  EXPECT_EQ(v.witness_basis->cols(), v.dim);
  EXPECT_EQ(mat_rank(*v.witness_basis), v.dim);
  EXPECT_FALSE(s.delta(1, Level(2), Level(0)).witness_basis.has_value());
}

TEST(TSpace, Examples) {
  Invariants m(merge());
  EXPECT_EQ(m.t_space(Level(1), Level(2), false, false, 0).dim(), 1u);
  EXPECT_EQ(m.t_space(Level(1), Level(1), false, false, 0).dim(), 0u);
  Invariants s(s1());
  EXPECT_EQ(s.t_space(Level(1), Level(2), false, false, 0).dim(), 0u);
  EXPECT_THROW(s.t_space(Level(2), Level(1), false, false, 0), OrderError);
  EXPECT_THROW(s.t_space(Level(1), Level(1), false, true, 0), OrderError);
}

TEST(Gamma, Examples) {
  Invariants m(merge());
  EXPECT_EQ(m.gamma(0, Level(1), Level(2)).dim, 1u);
  EXPECT_EQ(m.gamma(0, Level(0), Level(2)).dim, 0u);
  Invariants s(s1());
  for (int r = 0; r <= 1; ++r)
    for (const auto& a : probe_levels(s.complex()))
      for (const auto& b : probe_levels(s.complex()))
        if (a < b) {
          EXPECT_EQ(s.gamma(r, a, b).dim, 0u);
        }
  EXPECT_EQ(m.gamma(0, Level(3, 2), Level(2)).dim, 0u);
  EXPECT_THROW(m.gamma(0, Level(2), Level(2)), OrderError);
  EXPECT_THROW(m.gamma(0, Level(2), Level(1)), OrderError);
}

TEST(MuLambda, VanishOnFixtures) {
  for (const auto& k : {s1(), merge(), s2(), rp2(), point()}) {
    Invariants inv(k);
    for (const auto& a : probe_levels(k))
      for (int r = 0; r <= k.dimension(); ++r) {
        EXPECT_EQ(inv.mu(r, a).dim, 0u);
        EXPECT_EQ(inv.lambda(r, a).dim, 0u);
      }
  }
}

TEST(BoxF, Examples) {
  Invariants s(s1());
  EXPECT_EQ(s.box_f(0, Level(0), Level(2), Level(3)), 1u);
  EXPECT_EQ(s.box_f(0, Level(0), Level(0), Level(2)), 0u);
  EXPECT_EQ(s.box_f(0, Level(0), Level(0), Level(3)), 1u);
  EXPECT_EQ(s.box_f(0, Level(0), Level(3), Level(4)), 0u);
  EXPECT_EQ(s.box_f(0, Level(1), Level(2), Level(3)), 0u);
  EXPECT_EQ(s.box_f(0, Level(0), Level(2), Level(2)), 0u);
  EXPECT_THROW(s.box_f(0, Level(0), Level(2), Level(1)), OrderError);
}

TEST(BoxT, Examples) {
  Invariants m(merge());
  EXPECT_EQ(m.box_t(0, BoxOrientation::Right, Level(1), Level(1), Level(2)), 1u);
  EXPECT_EQ(m.box_t(0, BoxOrientation::Left, Level(2), Level(0), Level(1)), 1u);
  EXPECT_EQ(m.box_t(0, BoxOrientation::Right, Level(1), Level(3, 2), Level(3, 2)), 0u);
  EXPECT_EQ(m.box_t(0, BoxOrientation::Left, Level(2), Level(1), Level(1)), 0u);
  EXPECT_THROW(m.box_t(0, BoxOrientation::Right, Level(1), Level(0), Level(2)), OrderError);
  EXPECT_THROW(m.box_t(0, BoxOrientation::Left, Level(2), Level(0), Level(2)), OrderError);
  EXPECT_THROW(m.box_t(0, BoxOrientation::Right, Level(1), Level(2), Level(1)), OrderError);
}

TEST(BarcodeSupport, S1) {
  auto s = Invariants(s1()).barcode_support();
  ASSERT_EQ(s.degrees.size(), 2u);
  EXPECT_EQ(s.degrees[0].delta, pts({{0, 2, 1}}));
  EXPECT_EQ(s.degrees[1].delta, pts({{2, 0, 1}}));
  for (const auto& d : s.degrees) {
    EXPECT_TRUE(d.gamma.empty());
    EXPECT_TRUE(d.mu.empty());
    EXPECT_TRUE(d.lambda.empty());
  }
}

TEST(BarcodeSupport, Merge) {
  auto s = Invariants(merge()).barcode_support();
  EXPECT_EQ(s.degrees[0].delta, pts({{0, 2, 1}}));
  EXPECT_EQ(s.degrees[0].gamma, pts({{1, 2, 1}}));
  EXPECT_TRUE(s.degrees[1].delta.empty());
  EXPECT_TRUE(s.degrees[1].gamma.empty());
  EXPECT_EQ(s.gamma(0, Level(1), Level(2)), 1u);
  EXPECT_EQ(s.gamma(3, Level(1), Level(2)), 0u);
}

TEST(BarcodeSupport, S2) {
  auto s = Invariants(s2()).barcode_support();
  ASSERT_EQ(s.degrees.size(), 3u);
  EXPECT_EQ(s.degrees[0].delta, pts({{0, 3, 1}}));
  EXPECT_TRUE(s.degrees[1].delta.empty());
  EXPECT_EQ(s.degrees[2].delta, pts({{3, 0, 1}}));
  for (const auto& d : s.degrees) EXPECT_TRUE(d.gamma.empty());
}

TEST(BarcodeSupport, MaxDegreeTruncates) {
  auto s = Invariants(s2()).barcode_support(1);
  EXPECT_EQ(s.degrees.size(), 2u);
}

TEST(BarcodeSupport, Rp2DependsOnField) {
  for (auto [p, betti] : {std::pair{2u, std::vector<std::size_t>{1, 1, 1}}, std::pair{3u, std::vector<std::size_t>{1, 0, 0}}}) {
    auto s = Invariants(rp2(p)).barcode_support();
    for (int r = 0; r <= 2; ++r) {
      std::size_t total = 0;
      for (const auto& [ab, m] : s.degrees[static_cast<std::size_t>(r)].delta) total += m;
      EXPECT_EQ(total, betti[static_cast<std::size_t>(r)]) << "p=" << p << " r=" << r;
    }
  }
}

TEST(ClassifyBars, Examples) {
  auto bars = classify_bars(Invariants(s1()).barcode_support()).bars;
  ASSERT_EQ(bars.size(), 2u);
  EXPECT_EQ(bars[0], (Bar{0, BarKind::Closed, Level(0), Level(2), 1}));
  EXPECT_EQ(bars[1], (Bar{0, BarKind::Open, Level(0), Level(2), 1}));

  auto m = classify_bars(Invariants(merge()).barcode_support()).bars;
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m[0], (Bar{0, BarKind::Closed, Level(0), Level(2), 1}));
  EXPECT_EQ(m[1], (Bar{0, BarKind::ClosedOpen, Level(1), Level(2), 1}));

  auto sphere = classify_bars(Invariants(s2()).barcode_support()).bars;
  ASSERT_EQ(sphere.size(), 2u);
  EXPECT_EQ(sphere[1], (Bar{1, BarKind::Open, Level(0), Level(3), 1}));
}

TEST(ClassifyBars, KindsRespectEndpointOrder) {
  for (const auto& [k, p] : random_corpus(30, 11))
    for (const auto& b : classify_bars(Invariants(k).barcode_support()).bars) {
      if (b.kind == BarKind::Closed)
        EXPECT_LE(b.left, b.right);
      else
        EXPECT_LT(b.left, b.right);
      EXPECT_GT(b.multiplicity, 0u);
    }
}

// ---- support properties on fixtures and a slice of the corpus ----

TEST(SupportProperties, Fixtures) {
  for (auto p : {2u, 3u})
    for (const auto& k : {s1(p), merge(p), s2(p), rp2(p), point(5, p)}) {
      Invariants inv(k);
      auto s = inv.barcode_support();
      Failures f;
      check_support_in_cr(s, f);
      check_regular_emptiness(inv, s.critical_values, f);
      check_vanishing(inv, f);
      check_negation_symmetry(inv, s, f);
      EXPECT_TRUE(f.ok()) << f.summary();
    }
}

TEST(SupportProperties, RandomCorpus) {
  for (const auto& [k, p] : random_corpus(40, 99)) {
    Invariants inv(k);
    auto s = inv.barcode_support();
    Failures f;
    check_support_in_cr(s, f);
    check_regular_emptiness(inv, s.critical_values, f);
    check_vanishing(inv, f);
    check_negation_symmetry(inv, s, f);
    EXPECT_TRUE(f.ok()) << "p=" << p << "\n" << f.summary();
  }
}

TEST(Invariants, CopiesShareTheCache) {
  Invariants a(s2());
  Invariants b = a;
  auto h1 = a.homology(a.whole(), 2);
  auto h2 = b.homology(b.whole(), 2);
  EXPECT_EQ(h1.get(), h2.get());
}
