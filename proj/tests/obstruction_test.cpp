#include "swfold/obstruction.hpp"

#include <gtest/gtest.h>

#include <random>

#include "support/generators.hpp"
#include "swfold/error.hpp"

namespace swfold {
namespace {

ThreeManifold knot_pair(const char* knot) {
  return fiber_sum_with_knot(
      fiber_sum_with_knot(three_torus(), knot_lookup(knot), "m1"),
      knot_lookup(knot), "m2");
}

TEST(TaubesReportTest, FigureEightPairByFourIsObstructed) {
  ThreeManifold m = knot_pair("4_1");
  for (const char* chi : {"4*m1", "-4*m1", "4*m2", "-4*m2"}) {
    ObstructionReport r = taubes_report(fold(m, EulerClass::parse(chi, m.basis)), m);
    EXPECT_TRUE(r.obstructed) << chi;
    EXPECT_TRUE(r.unit_classes.empty());
    EXPECT_TRUE(r.fibered_orbit);
  }
}

TEST(TaubesReportTest, ProductCaseHasUnitCorners) {
  ThreeManifold m = knot_pair("4_1");
  ObstructionReport r = taubes_report_product(m);
  EXPECT_FALSE(r.obstructed);
  EXPECT_EQ(r.unit_classes.size(), 4u);
}

TEST(TaubesReportTest, SurfaceTimesCircleExtremesAreUnits) {
  for (int g = 1; g <= 5; ++g) {
    ObstructionReport r = taubes_report_product(surface_times_circle(g));
    EXPECT_FALSE(r.obstructed) << g;
  }
}

TEST(TaubesReportTest, MatchesDirectScan) {
  std::mt19937_64 rng(17);
  Basis b = testing::basis_of_rank(2);
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly p = testing::random_poly(rng, b, {6, 4, 3});
    ThreeManifold m{"random", b, 3, p, false, "random"};
    EulerClass chi(b, testing::random_nonzero_vector(rng, 2, 3));
    FoldedSW f = fold(m, chi);
    bool any_unit = false;
    for (const auto& [e, c] : f.poly.terms()) any_unit = any_unit || c == 1 || c == -1;
    EXPECT_EQ(taubes_report(f, m).obstructed, !any_unit);
  }
}

TEST(EulerCandidatesTest, OnePerAntipodalPair) {
  for (std::size_t rank = 1; rank <= 3; ++rank) {
    for (std::int64_t box = 1; box <= 4; ++box) {
      auto c = euler_candidates(rank, box);
      std::int64_t side = 2 * box + 1;
      std::int64_t total = 1;
      for (std::size_t i = 0; i < rank; ++i) total *= side;
      EXPECT_EQ(static_cast<std::int64_t>(c.size()), (total - 1) / 2);
      std::set<ExponentVector> seen(c.begin(), c.end());
      EXPECT_EQ(seen.size(), c.size());
      for (const auto& v : c) {
        ExponentVector neg(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
        EXPECT_EQ(seen.count(neg), 0u);
      }
      EXPECT_TRUE(std::is_sorted(c.begin(), c.end()));
    }
  }
}

TEST(EulerSearchTest, FiveTwoPairAllObstructed) {
  ThreeManifold m = knot_pair("5_2");
  SearchResult r = euler_search(m, 5);
  EXPECT_EQ(r.entries.size(), 665u);
  EXPECT_TRUE(r.all_obstructed);
  for (const auto& e : r.entries) {
    if (e.chi.vector() == ExponentVector{1, 1, 0}) {
      EXPECT_EQ(e.digest, "{-12,-12,4,4,17}");
      EXPECT_FALSE(e.injective);
    }
    if (e.chi.vector() == ExponentVector{2, 1, 0}) {
      EXPECT_EQ(e.digest, "{-6,-6,-2,-2,4,4,9}");
    }
  }
}

TEST(EulerSearchTest, FigureEightPairNotAllObstructed) {
  ThreeManifold m = knot_pair("4_1");
  SearchResult r = euler_search(m, 5);
  EXPECT_FALSE(r.all_obstructed);
  for (const auto& e : r.entries) {
    if (e.chi.vector() == ExponentVector{1, 0, 0}) {
      EXPECT_EQ(e.digest, "{-1,-1,3}");
      EXPECT_FALSE(e.obstructed);
    }
    if (e.chi.vector() == ExponentVector{4, 0, 0} ||
        e.chi.vector() == ExponentVector{0, 4, 0}) {
      EXPECT_TRUE(e.obstructed);
    }
  }
}

TEST(EulerSearchTest, FastPathAndThreadingDoNotChangeResults) {
  for (const char* knot : {"4_1", "5_2", "3_1"}) {
    ThreeManifold m = knot_pair(knot);
    SearchResult slow = euler_search(m, 4, {false, 1});
    SearchResult fast = euler_search(m, 4, {true, 1});
    SearchResult parallel = euler_search(m, 4, {true, 8});
    ASSERT_EQ(slow.entries.size(), fast.entries.size());
    for (std::size_t i = 0; i < slow.entries.size(); ++i) {
      const auto& a = slow.entries[i];
      for (const SearchEntry* b : {&fast.entries[i], &parallel.entries[i]}) {
        EXPECT_EQ(a.chi, b->chi);
        EXPECT_EQ(a.obstructed, b->obstructed);
        EXPECT_EQ(a.injective, b->injective);
        EXPECT_EQ(a.digest, b->digest);
        EXPECT_EQ(a.unit_classes, b->unit_classes);
      }
    }
    EXPECT_EQ(slow.all_obstructed, fast.all_obstructed);
    EXPECT_EQ(slow.all_obstructed, parallel.all_obstructed);
  }
}

TEST(EulerSearchTest, Errors) {
  EXPECT_THROW(euler_search(knot_pair("5_2"), 0), DomainError);
  ThreeManifold low = knot_pair("5_2");
  low.b1 = 2;
  EXPECT_THROW(euler_search(low, 2), HypothesisError);
}

TEST(StabilizationNoteTest, FiveTwoPair) {
  ThreeManifold m = knot_pair("5_2");
  StabilizationNote note = stabilization_note(m, 5);
  EXPECT_FALSE(note.unfolded_has_units);
  EXPECT_TRUE(note.box_covers_collisions());
  EXPECT_EQ(note.max_colliding_coordinate, 4);
  std::string text = note.text(m.basis);
  EXPECT_NE(text.find("unfolded coefficients {4,-6,9}: no units; all "
                      "injective folds obstructed"),
            std::string::npos)
      << text;
  // Every colliding class really collides, every other class in a wider box
  // folds injectively.
  std::set<ExponentVector> colliding(note.colliding.begin(), note.colliding.end());
  for (const auto& chi : euler_candidates(3, 6)) {
    EXPECT_EQ(is_injective_fold(m, EulerClass(m.basis, chi)),
              colliding.count(chi) == 0);
  }
}

TEST(StabilizationNoteTest, FigureEightPair) {
  ThreeManifold m = knot_pair("4_1");
  std::string text = stabilization_note(m, 5).text(m.basis);
  EXPECT_NE(text.find("has units; injective folds not obstructed"),
            std::string::npos);
}

TEST(StabilizationNoteTest, SingleMonomial) {
  Basis b = testing::basis_of_rank(3);
  ThreeManifold m{"mono", b, 3, monomial(b, 2, {1, 1, 1}), false, "mono"};
  StabilizationNote note = stabilization_note(m, 1);
  EXPECT_TRUE(note.colliding.empty());
  EXPECT_NE(note.text(b).find("every fold injective"), std::string::npos);
}

TEST(StabilizationNoteTest, CollisionsOutsideTheBoxAreListed) {
  ThreeManifold m = knot_pair("5_2");
  std::string text = stabilization_note(m, 2).text(m.basis);
  EXPECT_NE(text.find("outside box 2"), std::string::npos) << text;
  EXPECT_NE(text.find("[4*m1]"), std::string::npos) << text;
}

}  // namespace
}  // namespace swfold
