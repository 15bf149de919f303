#include <functional>

#include <gtest/gtest.h>

#include "amt/invariants.hpp"
#include "properties.hpp"
#include "support.hpp"

using namespace amt;
using namespace amt::testing;

namespace {

using Check = std::function<void(const Invariants&, const BarcodeSupport&, Failures&)>;

struct Named {
  const char* name;
  Check check;
};

std::vector<Named> checks() {
  return {
      {"additivity", [](auto& inv, auto& s, auto& f) { check_box_additivity(inv, s.critical_values, f); }},
      {"jumps", [](auto& inv, auto& s, auto& f) { check_jumps(inv, s.critical_values, f); }},
      {"decompositions", [](auto& inv, auto& s, auto& f) { check_interval_decompositions(inv, s.critical_values, f); }},
      {"splittings", [](auto& inv, auto& s, auto& f) { check_splittings(inv, s.critical_values, f); }},
      {"bounds", [](auto& inv, auto& s, auto& f) { check_bounds(inv, s, f); }},
  };
}

}  // namespace

TEST(BoxModules, MergeHandValues) {
  Invariants m(merge());
  const Level inf = Level::pos_inf();
  // [0,2) then [2,∞): the δ_0(0,2) class only appears in the second piece
  EXPECT_EQ(m.box_f(0, Level(0), Level(0), Level(2)), 0u);
  EXPECT_EQ(m.box_f(0, Level(0), Level(2), inf), 1u);
  EXPECT_EQ(m.box_f(0, Level(0), Level(0), inf), 1u);
  // right boxes along a = 1
  EXPECT_EQ(m.box_t(0, BoxOrientation::Right, Level(1), Level(1), Level(3, 2)), 0u);
  EXPECT_EQ(m.box_t(0, BoxOrientation::Right, Level(1), Level(3, 2), Level(2)), 1u);
  EXPECT_EQ(m.box_t(0, BoxOrientation::Right, Level(1), Level(2), Level(5)), 0u);
  // left boxes below b = 2
  EXPECT_EQ(m.box_t(0, BoxOrientation::Left, Level(2), Level::neg_inf(), Level(0)), 0u);
  EXPECT_EQ(m.box_t(0, BoxOrientation::Left, Level(2), Level(1, 2), Level(1)), 1u);
  EXPECT_EQ(m.box_t(0, BoxOrientation::Left, Level(2), Level(1), Level(3, 2)), 0u);
}

TEST(BoxModules, S2TopClass) {
  Invariants s(s2(3));
  EXPECT_EQ(s.box_f(2, Level(3), Level(0), Level(1)), 1u);
  EXPECT_EQ(s.box_f(2, Level(3), Level(1), Level::pos_inf()), 0u);
  EXPECT_EQ(s.box_f(2, Level(2), Level(0), Level(1)), 0u);
}

TEST(BoxModules, JumpsUseAdjacentCriticalValues) {
  Invariants m(merge());
  const auto cr = m.critical_values();
  EXPECT_EQ(next_critical(cr, Level(2)), Level::pos_inf());
  EXPECT_EQ(previous_critical(cr, Level(0)), Level::neg_inf());
  EXPECT_EQ(previous_critical(cr, Level(2)), Level(1));
  EXPECT_EQ(m.box_f(0, Level(0), Level(2), next_critical(cr, Level(2))), m.delta(0, Level(0), Level(2)).dim);
  EXPECT_EQ(m.box_t(0, BoxOrientation::Right, Level(1), Level(1), Level(2)), m.gamma(0, Level(1), Level(2)).dim);
  EXPECT_EQ(m.box_t(0, BoxOrientation::Left, Level(2), Level(0), Level(1)), m.gamma(0, Level(1), Level(2)).dim);
}

TEST(BoxModules, FixturesSatisfyEveryCheck) {
  for (auto p : {2u, 3u, 5u})
    for (const auto& k : {s1(p), merge(p), s2(p), rp2(p), point(5, p)}) {
      Invariants inv(k);
      auto s = inv.barcode_support();
      for (const auto& [name, check] : checks()) {
        Failures f;
        check(inv, s, f);
        EXPECT_TRUE(f.ok()) << name << " p=" << p << "\n" << f.summary();
      }
    }
}

class BoxCorpus : public ::testing::TestWithParam<std::size_t> {};

TEST_P(BoxCorpus, RandomComplexesSatisfyCheck) {
  const auto named = checks()[GetParam()];
  for (const auto& [k, p] : random_corpus(30, 31)) {
    Invariants inv(k);
    auto s = inv.barcode_support();
    Failures f;
    named.check(inv, s, f);
    EXPECT_TRUE(f.ok()) << named.name << " p=" << p << "\n" << f.summary();
  }
}

INSTANTIATE_TEST_SUITE_P(AllChecks, BoxCorpus, ::testing::Range<std::size_t>(0, 5),
                         [](const auto& info) { return std::string(checks()[info.param].name); });
