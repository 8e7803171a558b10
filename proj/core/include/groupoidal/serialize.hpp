#pragma once

#include <nlohmann/json.hpp>

#include "groupoidal/clifford.hpp"
#include "groupoidal/conjugation.hpp"
#include "groupoidal/cuntz_krieger.hpp"
#include "groupoidal/exel.hpp"
#include "groupoidal/groupoid.hpp"
#include "groupoidal/isg.hpp"
#include "groupoidal/kumjian.hpp"
#include "groupoidal/odometer.hpp"
#include "groupoidal/pbij.hpp"
#include "groupoidal/reilly.hpp"
#include "groupoidal/star_algebra.hpp"
#include "groupoidal/toeplitz.hpp"

namespace groupoidal {

using nlohmann::json;

// {"size": n, "pairs": [[t, f(t)], ...]}
void to_json(json& j, const PartialBijection& f);
void from_json(const json& j, PartialBijection& f);

void to_json(json& j, const ConePair& cp);
void from_json(const json& j, ConePair& cp);
void to_json(json& j, const ToeplitzElement& e);

void to_json(json& j, const Rational& q);
void to_json(json& j, const QComplex& c);
// sparse (arrow-id, re, im) triples
json algebra_to_json(const AlgebraElement& f);

void to_json(json& j, const ValidationReport& r);
void to_json(json& j, const PsiReport& r);
void to_json(json& j, const ContractivityReport& r);
void to_json(json& j, const AlgebraAudit& r);
void to_json(json& j, const ExelReport& r);
void to_json(json& j, const KumjianReport& r);
void to_json(json& j, const WienerHopfReport& r);
void to_json(json& j, const CharacterComparison& r);
void to_json(json& j, const QuasiLatticeReport& r);
void to_json(json& j, const QloReport& r);
void to_json(json& j, const ObviousActionReport& r);
void to_json(json& j, const ReillyReport& r);
void to_json(json& j, const OdometerReport& r);
void to_json(json& j, const GlimmReport& r);
void to_json(json& j, const CKSemigroupReport& r);
void to_json(json& j, const CKRelationsReport& r);
void to_json(json& j, const CKFreenessReport& r);
void to_json(json& j, const FreeLocalizationReport& r);
void to_json(json& j, const ConjugationReport& r);
void to_json(json& j, const LawViolation& v);

// elements as pair lists, mult and star tables, unit and zero indices
json semigroup_dump(const InverseSemigroup& s);
// [[s, t], ...] on a ground set of the given size
PartialBijection pbij_from_pairs(std::size_t n, const json& pairs);

json groupoid_summary(const Groupoid& g, bool list_arrows = false);
json maximal_summary(const InverseSemigroup& s, const MaximalStructure& ms);
json omega_to_json(const WindowBox& box, const OmegaPatterns& o);

}  // namespace groupoidal
