// Randomized algebraic laws, fixed seeds. Each suite uses its own seed so a
// failure reproduces in isolation.

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support/generators.hpp"
#include "swfold/fold.hpp"
#include "swfold/manifolds.hpp"

namespace swfold {
namespace {

using testing::basis_of_rank;
using testing::random_poly;

Basis random_basis(std::mt19937_64& rng) {
  return basis_of_rank(static_cast<std::size_t>(testing::uniform(rng, 1, 3)));
}

TEST(RingAxiomsTest, HoldOnRandomTriples) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    Basis b = random_basis(rng);
    LaurentPoly p = random_poly(rng, b);
    LaurentPoly q = random_poly(rng, b);
    LaurentPoly r = random_poly(rng, b);
    LaurentPoly zero(b);
    LaurentPoly one = LaurentPoly::constant(b, 1);
    EXPECT_EQ(p + q, q + p);
    EXPECT_EQ((p + q) + r, p + (q + r));
    EXPECT_EQ(p + zero, p);
    EXPECT_EQ(p + negate(p), zero);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * one, p);
    EXPECT_EQ(p * zero, zero);
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_EQ(p - q, p + negate(q));
  }
}

TEST(HomomorphismTest, ConjugateAndEvalOnes) {
  std::mt19937_64 rng(102);
  for (int trial = 0; trial < 300; ++trial) {
    Basis b = random_basis(rng);
    LaurentPoly p = random_poly(rng, b);
    LaurentPoly q = random_poly(rng, b);
    EXPECT_EQ(conjugate(p * q), conjugate(p) * conjugate(q));
    EXPECT_EQ(conjugate(p + q), conjugate(p) + conjugate(q));
    EXPECT_EQ(conjugate(conjugate(p)), p);
    EXPECT_EQ(eval_ones(p * q), eval_ones(p) * eval_ones(q));
    EXPECT_EQ(eval_ones(p + q), eval_ones(p) + eval_ones(q));
    EXPECT_EQ(eval_ones(conjugate(p)), eval_ones(p));
  }
}

TEST(TextPropertyTest, RoundTripAndDeterminism) {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 300; ++trial) {
    Basis b = random_basis(rng);
    LaurentPoly p = random_poly(rng, b);
    std::string text = to_text(p);
    EXPECT_EQ(from_text(text, b), p) << text;
    EXPECT_EQ(to_text(from_text(text, b)), text);
    // Building the same terms in reverse order gives the same text.
    PolyBuilder rev(b);
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
      rev.add(it->first, it->second);
    }
    EXPECT_EQ(to_text(std::move(rev).build()), text);
  }
}

TEST(FoldPropertyTest, MatchesBruteForceOracle) {
  std::mt19937_64 rng(104);
  for (int trial = 0; trial < 250; ++trial) {
    Basis b = random_basis(rng);
    std::int64_t width = testing::uniform(rng, 0, 12);
    LaurentPoly p = testing::random_poly_in_window(rng, b, width, 10, 9);
    EulerClass chi(b, testing::random_nonzero_vector(rng, b.rank(), 6));
    EXPECT_EQ(fold_polynomial(p, QuotientLattice(chi)),
              fold_bruteforce_polynomial(p, chi))
        << to_text(p) << " mod " << chi.to_text();
  }
}

TEST(FoldPropertyTest, ConservationSymmetryLinearity) {
  std::mt19937_64 rng(105);
  for (int trial = 0; trial < 300; ++trial) {
    Basis b = random_basis(rng);
    LaurentPoly p = random_poly(rng, b);
    LaurentPoly q = random_poly(rng, b);
    EulerClass chi(b, testing::random_nonzero_vector(rng, b.rank(), 6));
    QuotientLattice quot(chi);
    LaurentPoly fp = fold_polynomial(p, quot);
    EXPECT_EQ(eval_ones(fp), eval_ones(p));
    EXPECT_EQ(fold_polynomial(p, QuotientLattice(chi.negated())), fp);
    EXPECT_EQ(fold_polynomial(p + q, quot), fp + fold_polynomial(q, quot));
    EXPECT_EQ(fold_polynomial(fp, quot), fp);
    for (const auto& [e, c] : fp.terms()) EXPECT_TRUE(quot.is_canonical(e));
  }
}

TEST(FoldPropertyTest, InjectiveFoldKeepsCoefficientMultiset) {
  std::mt19937_64 rng(106);
  int injective_seen = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Basis b = random_basis(rng);
    LaurentPoly p = random_poly(rng, b);
    EulerClass chi(b, testing::random_nonzero_vector(rng, b.rank(), 6));
    if (!is_injective_fold(p, chi)) continue;
    ++injective_seen;
    LaurentPoly f = fold_polynomial(p, QuotientLattice(chi));
    std::vector<Coefficient> before, after;
    for (const auto& [e, c] : p.terms()) before.push_back(c);
    for (const auto& [e, c] : f.terms()) after.push_back(c);
    std::sort(before.begin(), before.end());
    std::sort(after.begin(), after.end());
    EXPECT_EQ(before, after);
  }
  EXPECT_GT(injective_seen, 50);
}

TEST(FoldPropertyTest, CompatibleWithConjugation) {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 300; ++trial) {
    Basis b = random_basis(rng);
    LaurentPoly p = random_poly(rng, b);
    EulerClass chi(b, testing::random_nonzero_vector(rng, b.rank(), 6));
    QuotientLattice quot(chi);
    LaurentPoly f = fold_polynomial(p, quot);
    LaurentPoly fc = fold_polynomial(conjugate(p), quot);
    for (const auto& [e, c] : f.terms()) {
      ExponentVector neg(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
      EXPECT_EQ(fc.coefficient(quot.canonical_rep(neg)), c);
    }
    EXPECT_EQ(fc.size(), f.size());
  }
}

TEST(CircleBundlePropertyTest, ClosedFormMatchesDirectFold) {
  for (std::int64_t g = 1; g <= 5; ++g) {
    for (std::int64_t n = -10; n <= 10; ++n) {
      if (n == 0) continue;
      FoldedSW direct = circle_bundle_sw_direct(g, n);
      FoldedSW closed = circle_bundle_sw_closed_form(g, n);
      EXPECT_TRUE(equal_up_to_sign(direct, closed)) << "g=" << g << " n=" << n;
      // Independent oracle: shift search over (t - 1/t)^(2g-2) directly.
      Basis t{"t"};
      LaurentPoly base(t, [&] {
        std::map<ExponentVector, Coefficient> m;
        for (const auto& [e, c] : testing::pascal_alternating(int(2 * g - 2))) {
          m[{e}] = c;
        }
        return m;
      }());
      LaurentPoly oracle = fold_bruteforce_polynomial(base, EulerClass(t, {n}));
      EXPECT_TRUE(direct.poly == oracle || direct.poly == negate(oracle))
          << "g=" << g << " n=" << n;
    }
  }
}

}  // namespace
}  // namespace swfold
