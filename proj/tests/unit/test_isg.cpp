#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "groupoidal/error.hpp"
#include "groupoidal/isg.hpp"

using namespace groupoidal;

namespace {

PartialBijection pb(std::size_t n, std::vector<std::pair<Point, Point>> pairs) {
  return PartialBijection::from_pairs(n, pairs);
}

InverseSemigroup closure(std::size_t n, std::vector<PartialBijection> gens) {
  return generate_closure(n, gens);
}

// naive closure: repeat products of all pairs until nothing new appears
std::set<PartialBijection> naive_closure(std::size_t n, const std::vector<PartialBijection>& gens) {
  std::set<PartialBijection> s{PartialBijection::identity(n)};
  for (const auto& g : gens) {
    s.insert(g);
    s.insert(star(g));
  }
  while (true) {
    std::set<PartialBijection> next = s;
    for (const auto& a : s)
      for (const auto& b : s) next.insert(compose(a, b));
    if (next.size() == s.size()) return s;
    s = std::move(next);
  }
}

ElementId id_of(const InverseSemigroup& s, const PartialBijection& f) {
  auto i = s.find(f);
  EXPECT_TRUE(i.has_value()) << f.to_string();
  return i.value_or(0);
}

}  // namespace

TEST(Closure, ShiftOnTwoPoints) {
  auto s = closure(2, {pb(2, {{0, 1}})});
  EXPECT_EQ(s.size(), 6u);
  std::set<PartialBijection> expected{PartialBijection::identity(2), pb(2, {{0, 1}}), pb(2, {{1, 0}}),
                                      pb(2, {{0, 0}}), pb(2, {{1, 1}}), PartialBijection::void_map(2)};
  EXPECT_EQ(std::set<PartialBijection>(s.elements().begin(), s.elements().end()), expected);
  ASSERT_TRUE(s.zero().has_value());
}

TEST(Closure, NoGeneratorsGivesUnit) {
  auto s = closure(3, {});
  EXPECT_EQ(s.size(), 1u);
  EXPECT_TRUE(s.element(0).is_identity());
}

TEST(Closure, BijectiveGeneratorGivesGroup) {
  auto s = closure(2, {pb(2, {{0, 1}, {1, 0}})});
  EXPECT_EQ(s.size(), 2u);
  EXPECT_FALSE(s.zero().has_value());
}

TEST(Closure, CapRaisesGrowthError) {
  std::vector<PartialBijection> gens{pb(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), pb(4, {{0, 1}})};
  try {
    generate_closure(4, gens, 5);
    FAIL() << "expected GrowthError";
  } catch (const GrowthError& e) {
    EXPECT_EQ(e.partial_size(), 5u);
  }
}

TEST(Closure, DeterministicOrder) {
  std::vector<PartialBijection> gens{pb(3, {{0, 1}, {1, 2}}), pb(3, {{2, 0}})};
  auto a = generate_closure(3, gens);
  auto b = generate_closure(3, gens);
  EXPECT_EQ(a.elements(), b.elements());
}

TEST(ClosureProperty, MatchesNaiveClosure) {
  std::mt19937_64 rng(7);
  for (std::size_t n = 2; n <= 4; ++n) {
    auto all = all_partial_bijections(n);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<PartialBijection> gens{all[rng() % all.size()], all[rng() % all.size()]};
      auto s = generate_closure(n, gens);
      auto naive = naive_closure(n, gens);
      ASSERT_EQ(std::set<PartialBijection>(s.elements().begin(), s.elements().end()), naive);
      for (ElementId a = 0; a < s.size(); ++a) {
        ASSERT_EQ(s.mul(s.mul(a, s.star(a)), a), a);
        for (ElementId b = 0; b < s.size(); ++b)
          if (s.is_idempotent(a) && s.is_idempotent(b)) ASSERT_EQ(s.mul(a, b), s.mul(b, a));
      }
    }
  }
}

TEST(Semilattice, IdempotentsOfShiftClosure) {
  auto s = closure(2, {pb(2, {{0, 1}})});
  auto e = idempotent_semilattice(s);
  std::set<PartialBijection> expected{PartialBijection::identity(2), pb(2, {{0, 0}}), pb(2, {{1, 1}}),
                                      PartialBijection::void_map(2)};
  EXPECT_EQ(std::set<PartialBijection>(e.elements().begin(), e.elements().end()), expected);
}

TEST(Semilattice, GroupAndSemilatticeCases) {
  auto g = closure(3, {pb(3, {{0, 1}, {1, 2}, {2, 0}})});
  EXPECT_EQ(idempotent_semilattice(g).size(), 1u);
  auto sl = closure(3, {pb(3, {{0, 0}, {1, 1}}), pb(3, {{1, 1}, {2, 2}})});
  EXPECT_EQ(idempotent_semilattice(sl).size(), sl.size());
}

TEST(FTilde, ShiftClosureMaximalStructure) {
  auto s = closure(2, {pb(2, {{0, 1}})});
  auto v = classify_f_tilde(s);
  ASSERT_TRUE(v.is_f_tilde());
  const auto& ms = v.structure();
  ASSERT_EQ(ms.size(), 3u);
  auto e = ms.index_of(id_of(s, PartialBijection::identity(2))).value();
  auto x = ms.index_of(id_of(s, pb(2, {{0, 1}}))).value();
  auto xi = ms.index_of(id_of(s, pb(2, {{1, 0}}))).value();
  EXPECT_EQ(ms.unit, e);
  EXPECT_EQ(partial_product(ms, x, xi), e);
  EXPECT_EQ(partial_product(ms, xi, x), e);
  EXPECT_FALSE(partial_product(ms, x, x).has_value());
  for (MIndex y = 0; y < 3; ++y) EXPECT_EQ(partial_product(ms, e, y), y);
  EXPECT_EQ(ms.inverse[x], xi);
}

TEST(FTilde, TwoCycleWithTailIsNotFTilde) {
  auto beta = pb(4, {{0, 1}, {1, 0}, {2, 3}});
  auto s = closure(4, {beta});
  auto v = classify_f_tilde(s);
  ASSERT_FALSE(v.is_f_tilde());
  const auto& w = v.witness();
  EXPECT_EQ(s.element(w.element), pb(4, {{0, 1}, {1, 0}}));
  EXPECT_EQ(power(beta, 3), pb(4, {{0, 1}, {1, 0}}));
  std::set<PartialBijection> majorants{s.element(w.first_majorant), s.element(w.second_majorant)};
  EXPECT_EQ(majorants, (std::set<PartialBijection>{beta, star(beta)}));
  EXPECT_THROW(require_f_tilde(s), StructuralError);
}

TEST(FTilde, GroupsAreFTildeWithWholeGroupMaximal) {
  auto g = closure(4, {pb(4, {{0, 0}, {1, 3}, {2, 2}, {3, 1}}), pb(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})});
  auto v = classify_f_tilde(g);
  ASSERT_TRUE(v.is_f_tilde());
  EXPECT_EQ(v.structure().size(), g.size());
  EXPECT_EQ(g.size(), 8u);
}

TEST(SinglyGenerated, LiteralPredictionExamples) {
  EXPECT_FALSE(singly_generated_prediction(pb(4, {{0, 1}, {1, 0}, {2, 3}})));
  EXPECT_TRUE(singly_generated_prediction(pb(2, {{0, 1}})));
  EXPECT_TRUE(singly_generated_prediction(pb(3, {{0, 1}, {1, 2}, {2, 0}})));
}

TEST(SinglyGeneratedProperty, ExactCriterionMatchesClosureUpTo4) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& beta : all_partial_bijections(n)) {
      bool truth = classify_f_tilde(closure(n, {beta})).is_f_tilde();
      ASSERT_EQ(singly_generated_exact(beta), truth) << beta.to_string();
    }
}

TEST(PartialGroupProperty, LawsHoldForEveryFTildeClosureUpTo3) {
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 3; ++n) {
    auto all = all_partial_bijections(n);
    for (std::size_t i = 0; i < all.size(); ++i) {
      std::vector<PartialBijection> gens{all[i], all[rng() % all.size()]};
      auto s = closure(n, gens);
      auto v = classify_f_tilde(s);
      if (!v.is_f_tilde()) continue;
      EXPECT_TRUE(check_partial_group_laws(s, v.structure()).empty());
    }
  }
}

TEST(PartialGroupProperty, WithoutZeroMaximalElementsFormAGroupImage) {
  // transposition and a projection on 3 points: no zero
  auto s = closure(3, {pb(3, {{0, 1}, {1, 0}, {2, 2}}), pb(3, {{0, 0}, {1, 1}})});
  ASSERT_FALSE(s.zero().has_value());
  auto ms = require_f_tilde(s);
  for (MIndex x = 0; x < ms.size(); ++x)
    for (MIndex y = 0; y < ms.size(); ++y) EXPECT_TRUE(ms.multiply(x, y).has_value());
  for (ElementId a = 0; a < s.size(); ++a)
    for (ElementId b = 0; b < s.size(); ++b)
      EXPECT_EQ(ms.majorant[s.mul(a, b)], static_cast<std::int32_t>(*ms.multiply(ms.majorant[a], ms.majorant[b])));
}

TEST(Characters, ShiftClosureSemilattice) {
  auto e = idempotent_semilattice(closure(2, {pb(2, {{0, 1}})}));
  auto chars = semilattice_characters(e);
  ASSERT_EQ(chars.size(), 3u);
  std::set<PartialBijection> principals;
  for (const auto& c : chars) principals.insert(e.element(c.principal));
  EXPECT_EQ(principals, (std::set<PartialBijection>{PartialBijection::identity(2), pb(2, {{0, 0}}), pb(2, {{1, 1}})}));
}

TEST(Characters, TrivialAndChain) {
  EXPECT_EQ(semilattice_characters(closure(2, {})).size(), 1u);
  auto chain = closure(3, {pb(3, {{0, 0}, {1, 1}}), pb(3, {{0, 0}})});
  ASSERT_FALSE(chain.zero().has_value());
  EXPECT_EQ(semilattice_characters(chain).size(), 3u);
}

TEST(Characters, RejectsNonSemilattice) {
  EXPECT_THROW(semilattice_characters(closure(2, {pb(2, {{0, 1}})})), StructuralError);
}

TEST(CharactersProperty, CountAndInjectivity) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2 + trial % 3;
    std::vector<PartialBijection> gens;
    for (int k = 0; k < 3; ++k) {
      std::vector<Point> pts;
      for (Point p = 0; p < n; ++p)
        if (rng() % 2) pts.push_back(p);
      gens.push_back(PartialBijection::identity_on(n, pts));
    }
    auto e = closure(n, gens);
    auto chars = semilattice_characters(e);
    EXPECT_EQ(chars.size(), e.size() - (e.zero() ? 1 : 0));
    std::set<std::vector<bool>> distinct;
    for (const auto& c : chars) {
      distinct.insert(c.values);
      // multiplicative {0,1}-valued with value 1 at the unit
      EXPECT_TRUE(c.values[e.unit()]);
      for (ElementId a = 0; a < e.size(); ++a)
        for (ElementId b = 0; b < e.size(); ++b)
          EXPECT_EQ(c.values[e.mul(a, b)], c.values[a] && c.values[b]);
    }
    EXPECT_EQ(distinct.size(), chars.size());
  }
}
