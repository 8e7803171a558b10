#include <gtest/gtest.h>

#include "common.hpp"
#include "groupoidal/error.hpp"
#include "groupoidal/serialize.hpp"

using namespace groupoidal;
using namespace testing_support;

TEST(Serialize, PartialBijectionRoundTrip) {
  for (const auto& f : all_partial_bijections(3)) {
    json j = f;
    EXPECT_EQ(j.get<PartialBijection>(), f);
  }
  json j = json::parse(R"({"size": 3, "pairs": [[0, 2], [2, 1]]})");
  EXPECT_EQ(j.get<PartialBijection>(), pb(3, {{0, 2}, {2, 1}}));
  EXPECT_THROW(json::parse(R"({"size": 3})").get<PartialBijection>(), StructuralError);
  EXPECT_THROW(json::parse(R"({"size": 2, "pairs": [[0, 1], [1, 1]]})").get<PartialBijection>(), StructuralError);
}

TEST(Serialize, ConePairRoundTrip) {
  json j = json::parse(R"({"d": 2, "constraints": [[2, -1], [0, 1]]})");
  ConePair cp = j.get<ConePair>();
  EXPECT_EQ(cp.d, 2u);
  EXPECT_TRUE(cp.in_cone({1, 2}));
  EXPECT_FALSE(cp.in_cone({1, 3}));
  EXPECT_EQ(json(cp), j);
}

TEST(Serialize, SemigroupDump) {
  auto s = closure_ptr(2, {pb(2, {{0, 1}})});
  json d = semigroup_dump(*s);
  EXPECT_EQ(d["elements"].size(), 6u);
  EXPECT_EQ(d["mult"].size(), 6u);
  EXPECT_EQ(d["unit"], s->unit());
  EXPECT_EQ(d["zero"], *s->zero());
}

TEST(Serialize, AlgebraElementTriples) {
  AlgebraElement f{{2, QComplex(Rational(1, 2), -3)}};
  json j = algebra_to_json(f);
  EXPECT_EQ(j.dump(), R"([[2,"1/2","-3"]])");
}

TEST(Serialize, ReportsAreStable) {
  auto s = closure_ptr(2, {pb(2, {{0, 1}})});
  auto b = tautological_bundle(s);
  PsiReport p = psi_report({&b.action, &b.ms, &b.groupoid});
  EXPECT_EQ(json(p).dump(), json(psi_report({&b.action, &b.ms, &b.groupoid})).dump());
  json g = groupoid_summary(b.groupoid, true);
  EXPECT_EQ(g["arrows"], 4);
  EXPECT_EQ(g["arrow_list"].size(), 4u);
}
