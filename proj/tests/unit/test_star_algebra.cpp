#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "common.hpp"
#include "groupoidal/exel.hpp"
#include "groupoidal/kumjian.hpp"
#include "groupoidal/star_algebra.hpp"

using namespace groupoidal;
using namespace testing_support;

namespace {

struct ShiftFixture {
  std::shared_ptr<const InverseSemigroup> s = closure_ptr(2, {pb(2, {{0, 1}})});
  ActionBundle b = tautological_bundle(s);
  Label e = b.ms.unit;
  Label x = label_of(*s, b.ms, pb(2, {{0, 1}}));
  Label xi = label_of(*s, b.ms, pb(2, {{1, 0}}));
  ArrowId arrow(Label l, Point w) const { return *b.groupoid.find(l, w); }
  PsiContext ctx() const { return {&b.action, &b.ms, &b.groupoid}; }
};

AlgebraElement delta(ArrowId a) { return {{a, QComplex(1)}}; }

// Dense matrix of left convolution by f on the arrow basis, built from
// the composition table rather than from convolve.
std::vector<std::vector<double>> left_matrix(const Groupoid& g, const AlgebraElement& f) {
  std::size_t n = g.arrow_count();
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (const auto& [a, c] : f)
    for (ArrowId h = 0; h < n; ++h)
      if (auto ah = g.compose(a, h)) m[*ah][h] += c.re.get_d();
  return m;
}

}  // namespace

TEST(Convolution, MatrixUnitsOfThePairGroupoid) {
  ShiftFixture f;
  const auto& g = f.b.groupoid;
  EXPECT_EQ(convolve(g, delta(f.arrow(f.x, 0)), delta(f.arrow(f.xi, 1))), delta(f.arrow(f.e, 1)));
  EXPECT_TRUE(convolve(g, delta(f.arrow(f.x, 0)), delta(f.arrow(f.x, 0))).empty());
  AlgebraElement h = sum(delta(f.arrow(f.x, 0)), scaled(delta(f.arrow(f.e, 1)), QComplex(Rational(3, 2), 1)));
  EXPECT_EQ(convolve(g, unit_indicator(g), h), h);
  EXPECT_EQ(convolve(g, h, unit_indicator(g)), h);
}

TEST(Convolution, InvolutionConjugatesAndInverts) {
  ShiftFixture f;
  const auto& g = f.b.groupoid;
  AlgebraElement h = scaled(delta(f.arrow(f.x, 0)), QComplex(2, 3));
  AlgebraElement expected = scaled(delta(f.arrow(f.xi, 1)), QComplex(2, -3));
  EXPECT_EQ(involution(g, h), expected);
}

TEST(RegularRepresentation, PairGroupoidNorms) {
  ShiftFixture f;
  RegularRepresentation rep(f.b.groupoid);
  EXPECT_EQ(rep.dimension(), 4u);
  EXPECT_NEAR(rep.operator_norm(delta(f.arrow(f.x, 0))), 1.0, 1e-10);
  EXPECT_NEAR(rep.operator_norm(unit_indicator(f.b.groupoid)), 1.0, 1e-10);
}

TEST(RegularRepresentation, GroupAlgebraOfZ2OnAPoint) {
  auto s = closure_ptr(2, {pb(2, {{0, 1}, {1, 0}})});
  Action a{s, GroundSet::of_size(1), {}};
  for (ElementId i = 0; i < s->size(); ++i) a.phi.push_back(PartialBijection::identity(1));
  auto b = action_bundle(a);
  ASSERT_EQ(b.groupoid.arrow_count(), 2u);
  AlgebraElement f;
  for (ArrowId i = 0; i < 2; ++i) f[i] = QComplex(1);
  // spectrum of 1 + s is {0, 2}
  EXPECT_NEAR(RegularRepresentation(b.groupoid).operator_norm(f), 2.0, 1e-10);
}

TEST(RegularRepresentation, UnitSpaceIsCommutative) {
  auto s = closure_ptr(3, {pb(3, {{0, 0}})});
  auto b = tautological_bundle(s);
  const auto& g = b.groupoid;
  EXPECT_EQ(g.arrow_count(), 3u);
  for (ArrowId i = 0; i < 3; ++i)
    for (ArrowId j = 0; j < 3; ++j) EXPECT_EQ(convolve(g, delta(i), delta(j)), convolve(g, delta(j), delta(i)));
}

TEST(RegularRepresentation, MatrixMatchesCompositionTable) {
  ShiftFixture f;
  const auto& g = f.b.groupoid;
  AlgebraElement h = sum(delta(f.arrow(f.x, 0)), scaled(delta(f.arrow(f.e, 0)), QComplex(5)));
  auto m = RegularRepresentation(g).matrix(h);
  auto oracle = left_matrix(g, h);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) EXPECT_NEAR(m[i][j].real(), oracle[i][j], 1e-12);
}

TEST(Psi, UnitGoesToUnitIndicator) {
  ShiftFixture f;
  EXPECT_EQ(psi(f.ctx(), {{f.s->unit(), QComplex(1)}}), unit_indicator(f.b.groupoid));
}

TEST(Psi, ShiftClosureIsSurjectiveNotInjective) {
  ShiftFixture f;
  PsiReport r = psi_report(f.ctx());
  EXPECT_EQ(r.semigroup_dimension, 5u);
  EXPECT_EQ(r.groupoid_dimension, 4u);
  EXPECT_EQ(r.rank, 4u);
  EXPECT_TRUE(r.surjective);
  EXPECT_FALSE(r.injective);
  EXPECT_TRUE(r.multiplicative);
  EXPECT_TRUE(r.star_preserving);
  EXPECT_TRUE(r.graded);
  EXPECT_TRUE(r.expectation_kills_nonidempotents);
}

TEST(ConditionalExpectation, Examples) {
  ShiftFixture f;
  const auto& g = f.b.groupoid;
  EXPECT_TRUE(conditional_expectation(g, delta(f.arrow(f.x, 0))).empty());
  EXPECT_EQ(conditional_expectation(g, unit_indicator(g)), unit_indicator(g));
  ElementId beta = *f.s->find(pb(2, {{0, 1}}));
  EXPECT_TRUE(conditional_expectation(g, psi(f.ctx(), {{beta, QComplex(1)}})).empty());
}

TEST(PsiRestriction, ShiftLabelIsRankOneIsometry) {
  ShiftFixture f;
  auto r = psi_x_restriction(f.ctx(), f.x, 1);
  EXPECT_EQ(r.rank, 1u);
  EXPECT_NEAR(r.max_ratio, 1.0, 1e-9);
  EXPECT_TRUE(r.contractive);
  auto u = psi_x_restriction(f.ctx(), f.e, 1);
  EXPECT_TRUE(u.contractive);
  EXPECT_EQ(u.domain_dimension, 3u);  // epsilon, id{0}, id{1}
}

TEST(AlgebraAudit, RandomGroupoidsSatisfyCStarIdentity) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 15; ++trial) {
    std::size_t n = 2 + trial % 3;
    auto all = all_partial_bijections(n);
    auto s = closure_ptr(n, {all[rng() % all.size()], all[rng() % all.size()]});
    if (!classify_f_tilde(*s).is_f_tilde()) continue;
    auto b = tautological_bundle(s);
    auto a = audit_algebra(b.groupoid, trial);
    EXPECT_TRUE(a.associative);
    EXPECT_TRUE(a.involution_anti);
    EXPECT_TRUE(a.representation_homomorphic);
    EXPECT_TRUE(a.submultiplicative);
    EXPECT_LE(a.max_cstar_defect, 1e-8);
  }
}

TEST(Exel, ShiftOnTwoPoints) {
  auto r = exel_build_and_iso(GroundSet::of_size(2), pb(2, {{0, 1}}));
  EXPECT_TRUE(r.nilpotent);
  EXPECT_EQ(r.exel_dimension, 4u);
  EXPECT_EQ(r.groupoid_dimension, 4u);
  EXPECT_EQ(r.degree_dimensions, (std::map<long, std::size_t>{{-1, 1}, {0, 2}, {1, 1}}));
  EXPECT_TRUE(r.ok());
}

TEST(Exel, FullCycleCoversEveryDegree) {
  auto beta = pb(3, {{0, 1}, {1, 2}, {2, 0}});
  auto r = exel_build_and_iso(GroundSet::of_size(3), beta);
  EXPECT_FALSE(r.nilpotent);
  for (long n = -r.degree_window; n <= r.degree_window; ++n) EXPECT_EQ(r.degree_dimensions.at(n), 3u);
  EXPECT_TRUE(r.ok());
}

TEST(Exel, VoidMapGivesFunctions) {
  auto r = exel_build_and_iso(GroundSet::of_size(3), PartialBijection::void_map(3));
  EXPECT_EQ(r.exel_dimension, 3u);
  EXPECT_EQ(r.degree_dimensions, (std::map<long, std::size_t>{{0, 3}}));
  EXPECT_TRUE(r.ok());
}

TEST(ExelProperty, DegreeDimensionsAreDomainSizes) {
  for (const auto& beta : all_partial_bijections(3)) {
    auto r = exel_build_and_iso(GroundSet::of_size(3), beta);
    ASSERT_TRUE(r.ok()) << beta.to_string();
    for (const auto& [n, d] : r.degree_dimensions) EXPECT_EQ(d, power(beta, n).domain_size());
  }
}

TEST(Kumjian, ShiftClosureKernel) {
  ShiftFixture f;
  std::string why;
  ASSERT_TRUE(is_localization(f.b.action, &why)) << why;
  auto k = kumjian_rho(f.b.action, f.b.ms, f.b.groupoid, 3);
  EXPECT_EQ(k.d_dimension, 6u);
  EXPECT_EQ(k.groupoid_dimension, 4u);
  EXPECT_EQ(k.kernel_dimension, 2u);
  EXPECT_EQ(k.ideal_dimension, 2u);
  EXPECT_TRUE(k.ok());
}

TEST(Kumjian, CoherentPairLiesInTheKernel) {
  ShiftFixture f;
  ElementId id0 = *f.s->find(pb(2, {{0, 0}}));
  CoherentFamily fam;
  fam.terms = {{f.s->unit(), {{0, Rational(1)}}}, {id0, {{0, Rational(-1)}}}};
  fam.open_sets = {{0}, {0}};
  EXPECT_TRUE(is_coherent(f.b.action, fam));
  auto blocks = majorant_partition(f.b.ms, fam);
  ASSERT_EQ(blocks.size(), 1u);
  EXPECT_EQ(blocks[0].size(), 2u);
}

TEST(Kumjian, NonLocalizationIsNamed) {
  auto s = closure_ptr(2, {pb(2, {{0, 1}, {1, 0}})});
  std::string why;
  EXPECT_FALSE(is_localization(Action::tautological(s), &why));
  EXPECT_FALSE(why.empty());
}
