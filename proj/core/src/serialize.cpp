#include "groupoidal/serialize.hpp"

#include "groupoidal/error.hpp"

namespace groupoidal {

namespace {

json vec_json(const Vec& v) { return json(v); }

json words_json(const std::vector<Vec>& ws) {
  json a = json::array();
  for (const auto& w : ws) a.push_back(vec_string(w));
  return a;
}

}  // namespace

void to_json(json& j, const PartialBijection& f) {
  json pairs = json::array();
  for (auto [s, t] : f.pairs()) pairs.push_back({s, t});
  j = {{"size", f.ground_size()}, {"pairs", pairs}};
}

PartialBijection pbij_from_pairs(std::size_t n, const json& pairs) {
  if (!pairs.is_array()) throw StructuralError("pairs must be an array");
  std::vector<std::pair<Point, Point>> out;
  for (const auto& p : pairs) {
    if (!p.is_array() || p.size() != 2) throw StructuralError("each pair must be [source, target]");
    out.emplace_back(p[0].get<Point>(), p[1].get<Point>());
  }
  return PartialBijection::from_pairs(n, out);
}

void from_json(const json& j, PartialBijection& f) {
  if (!j.is_object() || !j.contains("size") || !j.contains("pairs"))
    throw StructuralError("partial bijection needs \"size\" and \"pairs\"");
  f = pbij_from_pairs(j.at("size").get<std::size_t>(), j.at("pairs"));
}

void to_json(json& j, const ConePair& cp) {
  j = {{"d", cp.d}, {"constraints", cp.constraints}};
}

void from_json(const json& j, ConePair& cp) {
  if (!j.is_object() || !j.contains("d") || !j.contains("constraints"))
    throw StructuralError("cone needs \"d\" and \"constraints\"");
  cp.d = j.at("d").get<std::size_t>();
  cp.constraints = j.at("constraints").get<std::vector<Vec>>();
  cp.validate();
}

void to_json(json& j, const ToeplitzElement& e) {
  if (e.is_zero()) {
    j = "0";
    return;
  }
  j = {{"translation", vec_json(e.translation())}, {"markers", words_json(e.markers())},
       {"bound", vec_json(e.bound())}};
}

void to_json(json& j, const Rational& q) { j = q.get_str(); }

void to_json(json& j, const QComplex& c) { j = {{"re", c.re.get_str()}, {"im", c.im.get_str()}}; }

json algebra_to_json(const AlgebraElement& f) {
  json a = json::array();
  for (const auto& [id, c] : f) a.push_back({id, c.re.get_str(), c.im.get_str()});
  return a;
}

void to_json(json& j, const ValidationReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) v.push_back({{"rule", x.rule}, {"witnesses", x.witnesses}, {"detail", x.detail}});
  j = {{"ok", r.ok()}, {"violations", v}};
}

void to_json(json& j, const PsiReport& r) {
  j = {{"semigroup_dimension", r.semigroup_dimension},
       {"groupoid_dimension", r.groupoid_dimension},
       {"rank", r.rank},
       {"injective", r.injective},
       {"surjective", r.surjective},
       {"multiplicative", r.multiplicative},
       {"star_preserving", r.star_preserving},
       {"graded", r.graded},
       {"expectation_kills_nonidempotents", r.expectation_kills_nonidempotents},
       {"failures", r.failures}};
}

void to_json(json& j, const ContractivityReport& r) {
  j = {{"label", r.label},         {"domain_dimension", r.domain_dimension},
       {"rank", r.rank},           {"max_ratio", r.max_ratio},
       {"samples", r.samples},     {"contractive", r.contractive}};
}

void to_json(json& j, const AlgebraAudit& r) {
  j = {{"dimension", r.dimension},
       {"associative", r.associative},
       {"involution_anti", r.involution_anti},
       {"representation_homomorphic", r.representation_homomorphic},
       {"max_cstar_defect", r.max_cstar_defect},
       {"submultiplicative", r.submultiplicative},
       {"failures", r.failures}};
}

void to_json(json& j, const ExelReport& r) {
  json dims = json::object();
  for (const auto& [n, d] : r.degree_dimensions) dims[std::to_string(n)] = d;
  j = {{"nilpotent", r.nilpotent},
       {"degree_window", r.degree_window},
       {"degree_dimensions", dims},
       {"exel_dimension", r.exel_dimension},
       {"groupoid_dimension", r.groupoid_dimension},
       {"bijective", r.bijective},
       {"multiplicative", r.multiplicative},
       {"star_preserving", r.star_preserving},
       {"matches_finite_groupoid", r.matches_finite_groupoid},
       {"pairs_checked", r.pairs_checked},
       {"counterexample", r.counterexample ? json(*r.counterexample) : json(nullptr)},
       {"ok", r.ok()}};
}

void to_json(json& j, const KumjianReport& r) {
  j = {{"localization", r.localization},
       {"d_dimension", r.d_dimension},
       {"groupoid_dimension", r.groupoid_dimension},
       {"rho_rank", r.rho_rank},
       {"rho_surjective", r.rho_surjective},
       {"rho_homomorphism", r.rho_homomorphism},
       {"kernel_dimension", r.kernel_dimension},
       {"ideal_generators", r.ideal_generators},
       {"ideal_dimension", r.ideal_dimension},
       {"ideal_in_kernel", r.ideal_in_kernel},
       {"kernel_in_ideal", r.kernel_in_ideal},
       {"kernel_equals_ideal", r.kernel_equals_ideal()},
       {"families_tested", r.families_tested},
       {"partition_blocks_sum_to_zero", r.partition_blocks_sum_to_zero},
       {"partition_blocks_disjoint", r.partition_blocks_disjoint},
       {"inequality_samples", r.inequality_samples},
       {"inequality_holds", r.inequality_holds},
       {"failures", r.failures},
       {"ok", r.ok()}};
}

void to_json(json& j, const WienerHopfReport& r) {
  json units = json::array();
  for (const auto& u : r.units) units.push_back(vec_string(u));
  j = {{"units", units},
       {"arrows", r.groupoid ? r.groupoid->arrow_count() : 0},
       {"axioms", r.axioms},
       {"principal", r.principal},
       {"pair_groupoid", r.pair_groupoid},
       {"domains_consistent", r.domains_consistent},
       {"translation_consistent", r.translation_consistent},
       {"failures", r.failures},
       {"ok", r.ok()}};
}

namespace {

json bset_json(const BSetResult& b) {
  return {{"word", words_json(b.word)},
          {"lower", vec_json(b.lower)},
          {"minimum", vec_json(b.minimum)},
          {"decided", b.decided},
          {"matched", b.matched}};
}

}  // namespace

void to_json(json& j, const CharacterComparison& r) {
  json by_len = json::object();
  for (const auto& [l, c] : r.unmatched_by_length) by_len[std::to_string(l)] = c;
  j = {{"word_length", r.word_length},
       {"omega_pattern_count", r.omega_pattern_count},
       {"omega_stabilized", r.omega_stabilized},
       {"bsets", r.bsets.size()},
       {"distinct_bpatterns", r.distinct_bpatterns},
       {"unmatched", r.unmatched},
       {"undecided", r.undecided},
       {"unmatched_by_length", by_len},
       {"witness", r.witness ? bset_json(*r.witness) : json(nullptr)},
       {"separation_verified", r.separation_verified},
       {"surjective", r.surjective()}};
}

void to_json(json& j, const QuasiLatticeReport& r) {
  json pairs = json::array();
  for (const auto& [k, v] : r.sigma_pairs) pairs.push_back({vec_string(k.first), vec_string(k.second), vec_string(v)});
  json ce = nullptr;
  if (r.counterexample)
    ce = {{"pair", {vec_string(r.counterexample->first), vec_string(r.counterexample->second)}},
          {"minimal_upper_bounds", words_json(r.counterexample_minimal_bounds)}};
  j = {{"pointed", r.pointed},
       {"quasi_lattice", r.quasi_lattice},
       {"pairs_checked", r.pairs_checked},
       {"sigma_pairs", pairs},
       {"counterexample", ce}};
}

void to_json(json& j, const QloReport& r) {
  j = {{"quasi_lattice", r.quasi_lattice},
       {"elements", r.elements},
       {"products_checked", r.products_checked},
       {"homomorphism", r.homomorphism},
       {"star_preserving", r.star_preserving},
       {"injective", r.injective},
       {"failures", r.failures},
       {"ok", r.ok()}};
}

void to_json(json& j, const ObviousActionReport& r) {
  j = {{"points", r.points},
       {"semigroup_size", r.semigroup_size},
       {"arrows", r.arrows},
       {"algebra_dimension", r.algebra_dimension},
       {"pair_groupoid", r.pair_groupoid},
       {"full_matrix_units", r.full_matrix_units},
       {"axioms", r.axioms}};
}

void to_json(json& j, const ReillyReport& r) {
  j = {{"elements", r.elements},
       {"overflow_pairs", r.overflow_pairs},
       {"inverse_axioms", r.inverse_axioms},
       {"associative", r.associative},
       {"maximal", r.maximal.size()},
       {"predicted_maximal", r.predicted_maximal.size()},
       {"unique_majorants", r.unique_majorants},
       {"maximal_matches", r.maximal_matches},
       {"failures", r.failures},
       {"ok", r.ok()}};
}

void to_json(json& j, const OdometerReport& r) {
  j = {{"points", r.points},
       {"semigroup_size", r.semigroup_size},
       {"arrows", r.arrows},
       {"pair_groupoid", r.pair_groupoid},
       {"beta_beta_star_identity_off_top", r.beta_beta_star_identity_off_top},
       {"successor_correct", r.successor_correct},
       {"axioms", r.axioms},
       {"ok", r.ok()}};
}

void to_json(json& j, const GlimmReport& r) {
  j = {{"points", r.points},
       {"semigroup_size", r.semigroup_size},
       {"arrows", r.arrows},
       {"f_tilde", r.f_tilde},
       {"maximal_matches", r.maximal_matches},
       {"localization", r.localization},
       {"pair_groupoid", r.pair_groupoid},
       {"same_groupoid_as_odometer", r.same_groupoid_as_odometer},
       {"intersection_size", r.intersection_size},
       {"intersection_as_expected", r.intersection_as_expected},
       {"failures", r.failures},
       {"ok", r.ok()}};
}

void to_json(json& j, const CKSemigroupReport& r) {
  j = {{"word_length", r.word_length},
       {"fragment_size", r.fragment_size},
       {"localization", r.localization},
       {"f_tilde", r.f_tilde},
       {"words_tested", r.words_tested},
       {"ma_size", r.ma_size},
       {"lemma_matches", r.lemma_matches},
       {"maximal_are_beta_x", r.maximal_are_beta_x},
       {"free_product_consistent", r.free_product_consistent},
       {"table", r.table},
       {"failures", r.failures},
       {"ok", r.ok()}};
}

void to_json(json& j, const CKRelationsReport& r) {
  j = {{"ranges_disjoint", r.ranges_disjoint},
       {"domains_decompose", r.domains_decompose},
       {"domains", r.domains},
       {"ranges", r.ranges},
       {"failures", r.failures},
       {"ok", r.ok()}};
}

void to_json(json& j, const CKFreenessReport& r) {
  j = {{"free", r.free}, {"witness", r.witness ? json(*r.witness) : json(nullptr)}};
}

void to_json(json& j, const FreeLocalizationReport& r) {
  j = {{"localization", r.localization},
       {"free", r.free},
       {"fixed_points_idempotent", r.fixed_points_idempotent},
       {"principal", r.principal},
       {"witness", r.witness ? json(*r.witness) : json(nullptr)},
       {"ok", r.ok()}};
}

void to_json(json& j, const ConjugationReport& r) {
  j = {{"characters", r.characters}, {"arrows", r.arrows},           {"action", r.action},
       {"psi0_identity", r.psi0_identity}, {"psi", r.psi}, {"full_rank", r.full_rank()},
       {"ok", r.ok()}};
}

void to_json(json& j, const LawViolation& v) { j = {{"law", v.law}, {"witnesses", v.witnesses}}; }

json semigroup_dump(const InverseSemigroup& s) {
  json elements = json::array(), names = json::array(), mult = json::array();
  for (ElementId a = 0; a < s.size(); ++a) {
    json pairs = json::array();
    for (auto [x, y] : s.element(a).pairs()) pairs.push_back({x, y});
    elements.push_back(pairs);
    names.push_back(s.name(a));
    json row = json::array();
    for (ElementId b = 0; b < s.size(); ++b) row.push_back(s.mul(a, b));
    mult.push_back(row);
  }
  json star = json::array();
  for (ElementId a = 0; a < s.size(); ++a) star.push_back(s.star(a));
  return {{"ground_size", s.ground_size()}, {"elements", elements}, {"names", names},
          {"mult", mult},  {"star", star},  {"unit", s.unit()},
          {"zero", s.zero() ? json(*s.zero()) : json(nullptr)}};
}

json groupoid_summary(const Groupoid& g, bool list_arrows) {
  json j = {{"units", g.unit_count()},
            {"arrows", g.arrow_count()},
            {"labels", g.labels().size()},
            {"composable_pairs", g.composable_pair_count()},
            {"principal", is_principal(g)},
            {"pair_groupoid", is_pair_groupoid(g)}};
  if (list_arrows) {
    json a = json::array();
    for (ArrowId id = 0; id < g.arrow_count(); ++id)
      a.push_back({{"id", id}, {"label", g.labels().name(g.arrow(id).label)},
                   {"source", g.arrow(id).source}, {"target", g.arrow(id).target}});
    j["arrow_list"] = a;
  }
  return j;
}

json maximal_summary(const InverseSemigroup& s, const MaximalStructure& ms) {
  json names = json::array();
  for (auto e : ms.maximal) names.push_back(s.name(e));
  return {{"size", ms.size()}, {"maximal", names}, {"unit", s.name(ms.maximal[ms.unit])}};
}

json omega_to_json(const WindowBox& box, const OmegaPatterns& o) {
  json ps = json::array();
  for (const auto& [p, t] : o.representative)
    ps.push_back({{"pattern", pattern_string(box, p)}, {"representative", vec_string(t)}});
  return {{"window", {box.lo, box.hi}},
          {"count", o.patterns.size()},
          {"scan_radius", o.scan_radius},
          {"stabilized", o.stabilized},
          {"patterns", ps}};
}

}  // namespace groupoidal
