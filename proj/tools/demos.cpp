#include <map>

#include "groupoidal/error.hpp"
#include "groupoidal/isg.hpp"
#include "groupoidal/reilly.hpp"
#include "groupoidal/serialize.hpp"
#include "groupoidal/toeplitz.hpp"
#include "jobs.hpp"

namespace groupoidal::cli {

namespace {

Report singly_generated_demo() {
  Report r("singly generated semigroups on up to 3 points");
  std::size_t total = 0, f_tilde = 0, literal_wrong = 0, exact_wrong = 0;
  json literal_witnesses = json::array();
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& beta : all_partial_bijections(n)) {
      std::vector<PartialBijection> gens{beta};
      bool truth = classify_f_tilde(generate_closure(n, gens)).is_f_tilde();
      ++total;
      f_tilde += truth;
      if (singly_generated_exact(beta) != truth) ++exact_wrong;
      if (singly_generated_prediction(beta) != truth) {
        ++literal_wrong;
        if (literal_witnesses.size() < 4) literal_witnesses.push_back({{"beta", beta}, {"f_tilde", truth}});
      }
    }
  }
  r.info("maps: " + std::to_string(total) + ", F~: " + std::to_string(f_tilde));
  r.info("literal criterion disagreements: " + std::to_string(literal_wrong));
  for (const auto& w : literal_witnesses) r.info("  " + w.dump());
  r.check("exact criterion (2k - 1 <= p) agrees on every map", exact_wrong == 0,
          json{{"disagreements", exact_wrong}});
  r.set("maps", total);
  r.set("f_tilde", f_tilde);
  r.set("literal_disagreements", literal_wrong);
  r.set("literal_witnesses", literal_witnesses);
  return r;
}

Report reilly_demo() {
  Report r("Reilly semigroup over Z/4 with x -> -x");
  ReillyFragment f(cyclic_group(4), {0, 3, 2, 1}, 3);
  ReillyReport rep = reilly_audit(f);
  r.set("reilly", rep);
  r.info("fragment " + std::to_string(rep.elements) + " elements, " + std::to_string(rep.overflow_pairs) +
         " products leave the fragment");
  json fail = rep.failures.empty() ? json(nullptr) : json(rep.failures);
  r.check("inverse semigroup axioms where defined", rep.inverse_axioms && rep.associative, fail);
  r.check("unique maximal majorants", rep.unique_majorants, fail);
  r.check("maximal elements are those with min(m, n) = 0", rep.maximal_matches,
          json{{"maximal", rep.maximal.size()}, {"predicted", rep.predicted_maximal.size()}});
  return r;
}

Report obvious_action_demo() {
  Report r("truncated translation action of N on 4 points");
  ObviousActionReport o = obvious_action_groupoid(ConePair::naturals(1), 4, 3);
  r.set("obvious_action", o);
  r.info("semigroup " + std::to_string(o.semigroup_size) + " elements, " + std::to_string(o.arrows) + " arrows");
  r.check("pair groupoid on the 4 points", o.pair_groupoid && o.axioms.ok());
  r.check("16-dimensional full matrix algebra", o.algebra_dimension == 16 && o.full_matrix_units,
          json{{"dimension", o.algebra_dimension}});
  return r;
}

json pb(std::size_t n, std::vector<std::pair<Point, Point>> pairs) {
  return PartialBijection::from_pairs(n, pairs);
}

}  // namespace

const std::vector<Demo>& demo_registry() {
  static const std::vector<Demo> registry = {
      {"singly-generated", "F~ criterion for singly generated semigroups", nullptr},
      {"clifford", "Clifford semigroup from a subgroup chain of Z/4",
       {{"kind", "conjugation"},
        {"parameters", {{"clifford", {{"group_order", 4}, {"chain", {{0, 1, 2, 3}, {0, 2}, {0}}}}}}}}},
      {"reilly", "Reilly semigroup fragment", nullptr},
      {"wiener-hopf", "Wiener-Hopf groupoid of (Z, N)",
       {{"kind", "toeplitz"},
        {"parameters", {{"cone", "naturals"}, {"d", 1}, {"window", 2}, {"word_length", 3}, {"expected_patterns", 3}}}}},
      {"odometer", "odometer map and its covariance algebra",
       {{"kind", "odometer"}, {"parameters", {{"radices", {2, 3}}, {"depth", 2}}}}},
      {"glimm", "Glimm localization against the odometer",
       {{"kind", "glimm"}, {"parameters", {{"radices", {2, 2}}, {"depth", 3}}}}},
      {"cuntz-krieger", "golden mean Cuntz-Krieger localization",
       {{"kind", "cuntz-krieger"}, {"parameters", {{"matrix", {{1, 1}, {1, 0}}}, {"word_length", 3}}}}},
      {"quasi-lattice", "quasi-lattice ordered (Z^2, N^2)",
       {{"kind", "toeplitz"},
        {"parameters", {{"cone", "naturals"}, {"d", 2}, {"window", 2}, {"word_length", 2}, {"wiener_hopf", false}}}}},
      {"parity-cone", "cone {0 <= t2 <= 2 t1}: characters not all of the form psi0",
       {{"kind", "toeplitz"},
        {"parameters",
         {{"cone", "parity"}, {"window", 4}, {"word_length", 2}, {"expect_faithful", false}, {"wiener_hopf", false}}}}},
      {"conjugation", "conjugation action on the characters of the idempotents",
       {{"kind", "conjugation"}, {"parameters", {{"generators", {pb(3, {{0, 1}, {1, 2}})}}}}}},
      {"obvious-action", "truncated translations of N", nullptr},
  };
  return registry;
}

Report run_demo(const Demo& demo, const Settings& flags) {
  if (!demo.job.is_null()) return run_job(demo.job, flags);
  if (demo.name == "singly-generated") return singly_generated_demo();
  if (demo.name == "reilly") return reilly_demo();
  if (demo.name == "obvious-action") return obvious_action_demo();
  throw InputError("", "demo '" + demo.name + "' has no runner");
}

}  // namespace groupoidal::cli
