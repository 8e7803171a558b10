#include <gtest/gtest.h>

#include "common.hpp"
#include "groupoidal/clifford.hpp"
#include "groupoidal/conjugation.hpp"
#include "groupoidal/cuntz_krieger.hpp"
#include "groupoidal/error.hpp"
#include "groupoidal/odometer.hpp"
#include "groupoidal/reilly.hpp"

using namespace groupoidal;
using namespace testing_support;

TEST(Clifford, CyclicChain) {
  auto c = clifford(cyclic_group(4), {{0, 1, 2, 3}, {0, 2}, {0}});
  EXPECT_EQ(c.table.size(), 7u);
  EXPECT_TRUE(c.f_inverse);
  EXPECT_TRUE(c.maximal_matches);
  EXPECT_EQ(c.predicted_maximal.size(), 4u);
  auto v = classify_f_tilde(c.semigroup);
  ASSERT_TRUE(v.is_f_tilde());
  EXPECT_EQ(v.structure().size(), 4u);
}

TEST(Clifford, SingleTermIsTheGroup) {
  auto c = clifford(cyclic_group(3), {{0, 1, 2}});
  EXPECT_EQ(c.table.size(), 3u);
  EXPECT_TRUE(c.maximal_matches);
  auto t = clifford(cyclic_group(1), {{0}, {0}});
  EXPECT_EQ(t.table.size(), 2u);
  EXPECT_TRUE(t.maximal_matches);
}

TEST(Clifford, ChainMustDescend) {
  EXPECT_THROW(clifford(cyclic_group(4), {{0, 2}, {0, 1, 2, 3}}), StructuralError);
  EXPECT_THROW(clifford(cyclic_group(4), {{0, 1}}), StructuralError);
}

TEST(Reilly, BicyclicProducts) {
  ReillyFragment f(cyclic_group(1), {0}, 3);
  EXPECT_EQ(f.multiply({1, 0, 0}, {0, 0, 1}), (ReillyElement{1, 0, 1}));
  EXPECT_EQ(f.multiply({0, 0, 1}, {1, 0, 0}), (ReillyElement{0, 0, 0}));
  EXPECT_EQ(f.star({2, 0, 1}), (ReillyElement{1, 0, 2}));
  EXPECT_TRUE(reilly_audit(f).ok());
}

TEST(Reilly, GroupPartMultipliesWithIdentitySigma) {
  ReillyFragment f(cyclic_group(2), {0, 1}, 2);
  for (std::uint32_t x = 0; x < 2; ++x)
    for (std::uint32_t y = 0; y < 2; ++y)
      EXPECT_EQ(f.multiply({0, x, 1}, {1, y, 0}), (ReillyElement{0, (x + y) % 2, 0}));
  EXPECT_TRUE(reilly_audit(f).ok());
}

TEST(Reilly, MaximalAreMinZero) {
  ReillyFragment f(cyclic_group(4), {0, 3, 2, 1}, 3);
  auto r = reilly_audit(f);
  EXPECT_EQ(r.elements, 64u);
  EXPECT_TRUE(r.ok());
  for (auto i : r.maximal) EXPECT_EQ(std::min(f.element(i).m, f.element(i).n), 0u);
  EXPECT_THROW(ReillyFragment(cyclic_group(4), {0, 2, 0, 2}, 2), StructuralError);
}

TEST(Odometer, DigitsRoundTrip) {
  Radices r{{2, 3}};
  EXPECT_EQ(r.at(3), 3u);
  EXPECT_EQ(truncated_points(r, 3), 12u);
  for (Point p = 0; p < 12; ++p) EXPECT_EQ(point_of(r, digits(r, 3, p)), p);
}

TEST(Odometer, BetaIsPredecessor) {
  Radices r{{2, 3}};
  auto b = odometer(r, 2);
  EXPECT_FALSE(b.defined_at(0));
  for (Point p = 1; p < 6; ++p) EXPECT_EQ(b.image(p), p - 1);
  auto bbs = compose(b, star(b));
  EXPECT_EQ(bbs, PartialBijection::identity_on(6, std::vector<Point>{0, 1, 2, 3, 4}));
}

TEST(Odometer, PairGroupoidOfSquaredDimension) {
  auto o = build_odometer({{2, 2}}, 2);
  auto rep = odometer_report(o);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.points, 4u);
  EXPECT_EQ(rep.arrows, 16u);
  EXPECT_TRUE(is_pair_groupoid(o.bundle.groupoid));
}

TEST(Glimm, GammaOnEqualPrefixIsIdempotent) {
  Radices r{{2, 2}};
  auto g = glimm_gamma(r, 3, {1, 0}, {1, 0});
  EXPECT_EQ(compose(g, g), g);
  auto h = glimm_gamma(r, 3, {0}, {1});
  EXPECT_EQ(compose(h, h), PartialBijection::void_map(8));
}

TEST(Glimm, MatchesOdometerGroupoid) {
  for (std::size_t depth = 1; depth <= 3; ++depth) {
    auto g = build_glimm({{2, 2}}, depth);
    auto o = build_odometer({{2, 2}}, depth);
    auto rep = glimm_report(g, o);
    EXPECT_TRUE(rep.ok()) << depth << (rep.failures.empty() ? "" : rep.failures.front());
    EXPECT_TRUE(same_principal_groupoid(g.bundle.groupoid, o.bundle.groupoid));
    EXPECT_TRUE(free_localization_audit(g.bundle).ok());
  }
}

TEST(Glimm, MaximalElementsDifferAtTheTop) {
  Radices r{{2, 3}};
  auto g = build_glimm(r, 2);
  const auto& ms = g.bundle.ms;
  for (auto m : ms.maximal) {
    const auto& f = g.semigroup->element(m);
    if (f == PartialBijection::identity(f.ground_size())) continue;
    bool matched = false;
    for (const auto& [u, v] : g.generators)
      if (glimm_gamma(r, 2, u, v) == f) matched = u.back() != v.back();
    EXPECT_TRUE(matched) << f.to_string();
  }
}

namespace {
CKMatrix golden() { return CKMatrix({{1, 1}, {1, 0}}); }
}  // namespace

TEST(CuntzKrieger, MatrixValidation) {
  EXPECT_THROW(CKMatrix({{0, 1}, {1, 0}}), StructuralError);
  EXPECT_THROW(CKMatrix({{1, 0}, {0, 1}}), StructuralError);
  EXPECT_THROW(CKMatrix({{1, 2}, {1, 0}}), StructuralError);
  EXPECT_NO_THROW(golden());
}

TEST(CuntzKrieger, GoldenMeanRelations) {
  auto a = golden();
  auto rel = ck_relations(a);
  EXPECT_TRUE(rel.ok());
  EXPECT_EQ(pm_beta(a, 1).domain(a), pm_beta(a, 0).range(a));
  EXPECT_EQ(pm_beta(a, 1).domain(a), CylinderSet::of(a, {{0}}));
  EXPECT_TRUE(pm_beta(a, 0).domain(a).is_everything());
}

TEST(CuntzKrieger, FullShiftDomainsAreEverything) {
  CKMatrix a({{1, 1}, {1, 1}});
  for (std::uint32_t i = 0; i < 2; ++i) EXPECT_TRUE(pm_beta(a, i).domain(a).is_everything());
  EXPECT_TRUE(ck_relations(a).ok());
}

TEST(CuntzKrieger, WordExamples) {
  auto a = golden();
  FreeWord g22{{1, 1}, {}};
  EXPECT_FALSE(in_MA(a, g22));
  EXPECT_TRUE(beta_of(a, g22).zero);
  FreeWord g1g2inv{{0}, {1}};
  EXPECT_TRUE(in_MA(a, g1g2inv));
  EXPECT_FALSE(beta_of(a, g1g2inv).zero);
  auto p = free_product({{0}, {1}}, {{1}, {}});
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(*p, (FreeWord{{0}, {}}));
}

TEST(CuntzKrieger, WordCriterionUpToLengthThree) {
  EXPECT_TRUE(ck_semigroup(golden(), 3).ok());
  EXPECT_TRUE(ck_semigroup(CKMatrix({{1, 1}, {1, 1}}), 3).ok());
}

TEST(CuntzKrieger, NotFree) {
  auto f = ck_freeness(golden(), 2);
  EXPECT_FALSE(f.free);
  EXPECT_TRUE(f.witness.has_value());
}

TEST(CuntzKrieger, PrefixMapAlgebra) {
  auto a = golden();
  auto b0 = pm_beta(a, 0);
  auto e = pm_compose(a, pm_star(b0), b0);
  EXPECT_TRUE(pm_idempotent(e));
  EXPECT_TRUE(pm_leq(a, pm_compose(a, b0, pm_star(b0)), pm_identity()));
  EXPECT_EQ(pm_compose(a, pm_compose(a, b0, pm_star(b0)), b0), b0);
}

TEST(Conjugation, ShiftClosure) {
  auto s = closure_ptr(2, {pb(2, {{0, 1}})});
  auto c = conjugation_action(s);
  EXPECT_EQ(c.characters.size(), 3u);
  auto r = conjugation_report(c);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.psi.rank, 5u);
}

TEST(Conjugation, GroupActsOnOnePoint) {
  auto s = closure_ptr(2, {pb(2, {{0, 1}, {1, 0}})});
  auto c = conjugation_action(s);
  EXPECT_EQ(c.characters.size(), 1u);
  auto r = conjugation_report(c);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.arrows, 2u);
}

TEST(Conjugation, SemilatticeGivesUnitSpace) {
  auto s = closure_ptr(3, {pb(3, {{0, 0}}), pb(3, {{0, 0}, {1, 1}})});
  auto c = conjugation_action(s);
  auto r = conjugation_report(c);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.arrows, r.characters);
  EXPECT_EQ(r.characters, 3u);
}

TEST(Conjugation, CliffordChain) {
  auto cl = clifford(cyclic_group(4), {{0, 1, 2, 3}, {0, 2}, {0}});
  auto s = std::make_shared<const InverseSemigroup>(cl.semigroup);
  EXPECT_TRUE(conjugation_report(conjugation_action(s)).ok());
}
