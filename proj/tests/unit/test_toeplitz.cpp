#include <gtest/gtest.h>

#include <set>

#include "groupoidal/error.hpp"
#include "groupoidal/toeplitz.hpp"

using namespace groupoidal;

namespace {

const SearchWindow kWin{10};

ConePair zn() { return ConePair::naturals(1); }

// t in Dom(beta_{x1} ... beta_{xn}) by applying the translations right to left
bool in_word_domain(const ConePair& cp, const std::vector<Vec>& xs, Vec t) {
  if (!cp.in_cone(t)) return false;
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) {
    t = add(t, *it);
    if (!cp.in_cone(t)) return false;
  }
  return true;
}

std::vector<Vec> letters(std::size_t d) {
  std::vector<Vec> out;
  for (const auto& x : box_points(d, 1))
    if (x != Vec(d, 0)) out.push_back(x);
  return out;
}

std::vector<std::vector<Vec>> words_upto(std::size_t d, std::size_t len) {
  std::vector<std::vector<Vec>> out{{}};
  std::vector<std::vector<Vec>> frontier{{}};
  for (std::size_t l = 0; l < len; ++l) {
    std::vector<std::vector<Vec>> next;
    for (const auto& w : frontier)
      for (const auto& x : letters(d)) {
        auto v = w;
        v.push_back(x);
        next.push_back(v);
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

bool same(const ConePair& cp, const ToeplitzElement& a, const ToeplitzElement& b) {
  return te_equal(cp, a, b, kWin).equal;
}

}  // namespace

TEST(ToeplitzElement, BetaDomainsOverNaturals) {
  auto cp = zn();
  auto b1 = te_beta(cp, {1}, kWin);
  ASSERT_FALSE(b1.is_zero());
  EXPECT_EQ(b1.translation(), Vec{1});
  EXPECT_EQ(b1.markers(), (std::vector<Vec>{{0}, {1}}));
  EXPECT_TRUE(b1.in_domain(cp, {0}));
  EXPECT_FALSE(b1.in_domain(cp, {-1}));
  auto bm1 = te_beta(cp, {-1}, kWin);
  EXPECT_FALSE(bm1.in_domain(cp, {0}));
  EXPECT_TRUE(bm1.in_domain(cp, {1}));
}

TEST(ToeplitzElement, ParityConeContainsDiagonal) {
  auto cp = ConePair::parity_cone();
  EXPECT_TRUE(cp.in_cone({1, 1}));
  EXPECT_FALSE(te_beta(cp, {1, 1}, kWin).is_zero());
}

TEST(ToeplitzElement, ProductsOfShifts) {
  auto cp = zn();
  auto b1 = te_beta(cp, {1}, kWin), bm1 = te_beta(cp, {-1}, kWin);
  auto p = te_mul(cp, bm1, b1, kWin);
  EXPECT_TRUE(same(cp, p, te_beta(cp, {0}, kWin)));
  auto q = te_mul(cp, b1, bm1, kWin);
  EXPECT_EQ(q.translation(), Vec{0});
  EXPECT_FALSE(q.in_domain(cp, {0}));
  EXPECT_TRUE(q.in_domain(cp, {1}));
  EXPECT_FALSE(same(cp, q, te_beta(cp, {0}, kWin)));
  EXPECT_TRUE(te_mul(cp, b1, ToeplitzElement::zero(1), kWin).is_zero());
}

TEST(ToeplitzElement, EqualityExamples) {
  auto cp = ConePair::naturals(2);
  auto eps = te_beta(cp, {0, 0}, kWin);
  EXPECT_TRUE(same(cp, eps, eps));
  EXPECT_TRUE(same(cp, ToeplitzElement::zero(2), ToeplitzElement::zero(2)));
  // marker (1,0) is implied by 0, marker (-1,0) cuts the domain
  EXPECT_TRUE(same(cp, eps, ToeplitzElement::make(cp, {0, 0}, {{1, 0}})));
  EXPECT_FALSE(same(cp, eps, ToeplitzElement::make(cp, {0, 0}, {{-1, 0}})));
}

TEST(ToeplitzElement, NonvoidWitnessExamples) {
  auto cp = zn();
  std::vector<Vec> xs{{5}, {-3}};
  Vec t = nonvoid_witness(cp, xs, kWin);
  EXPECT_TRUE(in_word_domain(cp, xs, t));
  EXPECT_TRUE(in_word_domain(cp, xs, {3}));
  EXPECT_EQ(nonvoid_witness(cp, {}, kWin), Vec{0});
  auto n2 = ConePair::naturals(2);
  Vec u = nonvoid_witness(n2, {{-1, 0}}, kWin);
  EXPECT_TRUE(in_word_domain(n2, {{-1, 0}}, u));
}

TEST(ToeplitzElement, UniqueMajorantExamples) {
  auto cp = zn();
  auto q = te_mul(cp, te_beta(cp, {1}, kWin), te_beta(cp, {-1}, kWin), kWin);
  EXPECT_EQ(unique_majorant(cp, q, kWin), Vec{0});
  EXPECT_EQ(unique_majorant(cp, te_beta(cp, {4}, kWin), kWin), Vec{4});
  auto w = te_word(cp, {{2}, {-1}, {3}}, kWin);
  EXPECT_EQ(unique_majorant(cp, w, kWin), Vec{4});
}

class ToeplitzCones : public ::testing::TestWithParam<int> {
 protected:
  ConePair cone() const {
    switch (GetParam()) {
      case 0: return ConePair::naturals(1);
      case 1: return ConePair::naturals(2);
      default: return ConePair::parity_cone();
    }
  }
};

TEST_P(ToeplitzCones, WordDomainsMatchDirectSimulation) {
  auto cp = cone();
  for (const auto& w : words_upto(cp.d, 3)) {
    auto a = te_word(cp, w, kWin);
    ASSERT_FALSE(a.is_zero());
    for (const auto& t : box_points(cp.d, 6)) ASSERT_EQ(a.in_domain(cp, t), in_word_domain(cp, w, t));
  }
}

TEST_P(ToeplitzCones, InverseSemigroupAxiomsOnWords) {
  auto cp = cone();
  auto ws = words_upto(cp.d, 2);
  std::vector<ToeplitzElement> els;
  for (const auto& w : ws) els.push_back(te_word(cp, w, kWin));
  for (const auto& a : els) {
    ASSERT_TRUE(same(cp, te_star(cp, te_star(cp, a)), a));
    ASSERT_TRUE(same(cp, te_mul(cp, te_mul(cp, a, te_star(cp, a), kWin), a, kWin), a));
  }
  for (std::size_t i = 0; i < els.size(); i += 3)
    for (std::size_t j = 0; j < els.size(); j += 2) {
      const auto &a = els[i], &b = els[j];
      auto ab = te_mul(cp, a, b, kWin);
      ASSERT_TRUE(same(cp, te_star(cp, ab), te_mul(cp, te_star(cp, b), te_star(cp, a), kWin)));
      if (!ab.is_zero()) {
        ASSERT_EQ(unique_majorant(cp, ab, kWin),
                  add(unique_majorant(cp, a, kWin), unique_majorant(cp, b, kWin)));
      }
      for (std::size_t k = 0; k < els.size(); k += 5)
        ASSERT_TRUE(same(cp, te_mul(cp, ab, els[k], kWin), te_mul(cp, a, te_mul(cp, b, els[k], kWin), kWin)));
    }
}

TEST_P(ToeplitzCones, PsiZeroSeparatesOmegaPatterns) {
  auto cp = cone();
  WindowBox box{cp.d, -2, 2};
  auto cc = character_comparison(cp, 1, box);
  EXPECT_TRUE(cc.separation_verified);
}

INSTANTIATE_TEST_SUITE_P(Cones, ToeplitzCones, ::testing::Values(0, 1, 2));

TEST(OmegaPatterns, NaturalsHaveKPlusOnePatterns) {
  auto cp = zn();
  for (std::int64_t k = 1; k <= 6; ++k) {
    WindowBox box{1, -k, k};
    // (t - N) cut to [-k, k] for t = 0 .. 2k
    std::set<std::vector<bool>> oracle;
    for (std::int64_t t = 0; t <= 2 * k + 3; ++t) {
      std::vector<bool> bits;
      for (std::int64_t y = -k; y <= k; ++y) bits.push_back(t - y >= 0);
      oracle.insert(bits);
    }
    auto o = omega_patterns(cp, box, 3 * k);
    EXPECT_EQ(o.patterns.size(), static_cast<std::size_t>(k + 1));
    EXPECT_EQ(o.patterns.size(), oracle.size());
    EXPECT_TRUE(o.stabilized);
  }
}

TEST(OmegaPatterns, ZeroWindowAndProductCone) {
  EXPECT_EQ(omega_patterns(zn(), {1, 0, 0}, 4).patterns.size(), 1u);
  // per axis 2 patterns on [-1, 1]
  EXPECT_EQ(omega_patterns(ConePair::naturals(2), {2, -1, 1}, 6).patterns.size(), 4u);
}

TEST(WienerHopf, NaturalsOnSmallWindow) {
  auto cp = zn();
  std::vector<ToeplitzElement> els;
  for (std::int64_t x = -2; x <= 2; ++x) els.push_back(te_beta(cp, {x}, kWin));
  auto wh = wiener_hopf_groupoid(cp, {1, -3, 3}, els, 9);
  ASSERT_TRUE(wh.groupoid.has_value());
  EXPECT_TRUE(wh.ok()) << (wh.failures.empty() ? "" : wh.failures.front());
  EXPECT_TRUE(wh.pair_groupoid);
  const auto& g = *wh.groupoid;
  std::size_t unit_arrows = 0;
  for (ArrowId a = 0; a < g.arrow_count(); ++a) unit_arrows += g.is_unit(a);
  EXPECT_EQ(unit_arrows, wh.units.size());
  EXPECT_EQ(g.arrow_count(), wh.units.size() * wh.units.size());
}

TEST(WienerHopf, ScanSmallerThanWindowRejected) {
  EXPECT_THROW(wiener_hopf_groupoid(zn(), {1, -3, 3}, {}, 2), StructuralError);
}

TEST(CharacterComparison, QuasiLatticeConesMatch) {
  auto a = character_comparison(zn(), 3, {1, -3, 3});
  EXPECT_EQ(a.unmatched, 0u);
  EXPECT_TRUE(a.surjective());
  auto b = character_comparison(ConePair::naturals(2), 2, {2, -3, 3});
  EXPECT_EQ(b.unmatched, 0u);
  EXPECT_TRUE(b.surjective());
}

TEST(CharacterComparison, NaturalsBSetIsTheMaximum) {
  // B-set of a word is m - N with m = max(0, -x_1, ..., -x_n)
  auto cc = character_comparison(zn(), 2, {1, -3, 3});
  for (const auto& b : cc.bsets) {
    std::int64_t m = 0;
    for (const auto& x : b.word) m = std::max(m, -x[0]);
    EXPECT_EQ(b.lower, Vec{m});
    EXPECT_EQ(b.minimum, Vec{m});
  }
}

TEST(CharacterComparison, ParityConeWitnessIsGenuine) {
  auto cp = ConePair::parity_cone();
  WindowBox box{2, -4, 4};
  auto cc = character_comparison(cp, 2, box);
  ASSERT_GT(cc.unmatched, 0u);
  ASSERT_TRUE(cc.witness.has_value());
  // recompute the B-set on the window by brute force
  std::vector<Vec> s;
  for (const auto& t : box_points(2, 14)) {
    bool in = cp.in_cone(t);
    for (const auto& x : cc.witness->word) in = in && cp.in_cone(add(t, x));
    if (in) s.push_back(t);
  }
  std::vector<bool> b;
  for (const auto& y : box.points()) {
    bool all = true;
    for (const auto& t : s) all = all && cp.in_cone(sub(t, y));
    b.push_back(all);
  }
  EXPECT_EQ(b, cc.witness->pattern);
  for (const auto& t : box_points(2, 24))
    if (cp.in_cone(t)) ASSERT_NE(dense_pattern(cp, box, t), b) << vec_string(t);
}

TEST(QuasiLattice, PairProductsOverNaturals) {
  auto cp = zn();
  PairElement a{false, {1}, {0}}, b{false, {0}, {1}};
  EXPECT_EQ(qlo_multiply(cp, a, b, 8), (PairElement{false, {1}, {1}}));
  EXPECT_EQ(qlo_multiply(cp, b, a, 8), (PairElement{false, {0}, {0}}));
  auto q = quasi_lattice_check(cp, 3, 10);
  EXPECT_TRUE(q.quasi_lattice);
  for (const auto& [st, sigma] : q.sigma_pairs) EXPECT_EQ(sigma[0], std::max(st.first[0], st.second[0]));
}

TEST(QuasiLattice, ProductConeUsesCoordinatewiseMax) {
  auto q = quasi_lattice_check(ConePair::naturals(2), 2, 8);
  EXPECT_TRUE(q.quasi_lattice);
  for (const auto& [st, sigma] : q.sigma_pairs)
    EXPECT_EQ(sigma, (Vec{std::max(st.first[0], st.second[0]), std::max(st.first[1], st.second[1])}));
}

TEST(QuasiLattice, ParityConeIsNot) {
  auto q = quasi_lattice_check(ConePair::parity_cone(), 2, 8);
  EXPECT_FALSE(q.quasi_lattice);
  ASSERT_TRUE(q.counterexample.has_value());
  EXPECT_GE(q.counterexample_minimal_bounds.size(), 2u);
}

TEST(QuasiLattice, PresentationOverNaturals) {
  auto r = qlo_presentation(zn(), 2, 3, 12);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.elements, 9u);
}

TEST(ObviousAction, FourPointsGivePairGroupoid) {
  auto r = obvious_action_groupoid(zn(), 4, 3);
  EXPECT_EQ(r.points, 4u);
  EXPECT_TRUE(r.pair_groupoid);
  EXPECT_EQ(r.algebra_dimension, 16u);
  EXPECT_TRUE(r.full_matrix_units);
  EXPECT_TRUE(r.axioms.ok());
}

TEST(ObviousAction, DegenerateCases) {
  auto one = obvious_action_groupoid(zn(), 1, 3);
  EXPECT_EQ(one.points, 1u);
  EXPECT_EQ(one.arrows, 1u);
  auto none = obvious_action_groupoid(zn(), 4, 0);
  EXPECT_EQ(none.arrows, 4u);
  EXPECT_FALSE(none.pair_groupoid);
}

TEST(ConePair, ValidationAndInterior) {
  ConePair bad{2, {{1}}};
  EXPECT_THROW(bad.validate(), StructuralError);
  EXPECT_TRUE(ConePair::parity_cone().interior_point().has_value());
}
