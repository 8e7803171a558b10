#include "jobs.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

#include "groupoidal/clifford.hpp"
#include "groupoidal/conjugation.hpp"
#include "groupoidal/cuntz_krieger.hpp"
#include "groupoidal/error.hpp"
#include "groupoidal/exel.hpp"
#include "groupoidal/kumjian.hpp"
#include "groupoidal/odometer.hpp"
#include "groupoidal/serialize.hpp"
#include "groupoidal/star_algebra.hpp"
#include "groupoidal/toeplitz.hpp"

namespace groupoidal::cli {

namespace {

constexpr double kCstarTolerance = 1e-8;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

void Report::check(const std::string& name, bool ok, json witness) {
  lines_.push_back(std::string(ok ? "[PASS] " : "[FAIL] ") + name);
  if (!ok && !witness.is_null()) lines_.push_back("         witness: " + witness.dump());
  json c = {{"check", name}, {"ok", ok}};
  if (!witness.is_null()) c["witness"] = std::move(witness);
  checks_.push_back(std::move(c));
  if (!ok) failed_ = true;
}

void Report::undecided(const std::string& what) {
  lines_.push_back("[UNDECIDED] " + what);
  checks_.push_back({{"check", "window"}, {"ok", nullptr}, {"undecided", what}});
  undecided_ = true;
}

int Report::exit_code() const {
  if (failed_) return kAuditFailure;
  if (undecided_) return kUndecided;
  return kPass;
}

std::string Report::text() const {
  std::ostringstream os;
  os << title_ << "\n";
  for (const auto& l : lines_) os << l << "\n";
  static const char* verdict[] = {"pass", "audit failure", "undecided at window"};
  os << "result: " << verdict[exit_code()] << "\n";
  return os.str();
}

json Report::to_json() const {
  return {{"title", title_}, {"exit_code", exit_code()}, {"checks", checks_}, {"data", data_}};
}

namespace {

class Params {
 public:
  Params(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw InputError(path_, "expected an object");
  }

  bool has(const char* key) const { return j_.contains(key); }
  std::string path(const char* key) const { return path_ + "/" + key; }

  const json& at(const char* key) const {
    if (!j_.contains(key)) throw InputError(path(key), "missing required field");
    return j_.at(key);
  }

  template <class T>
  T get(const char* key) const {
    try {
      return at(key).get<T>();
    } catch (const json::exception&) {
      throw InputError(path(key), "wrong type");
    }
  }

  template <class T>
  T get_or(const char* key, T fallback) const {
    return has(key) ? get<T>(key) : fallback;
  }

  std::size_t positive(const char* key, std::size_t lo, std::size_t hi) const {
    const json& v = at(key);
    if (!v.is_number_integer() || v.get<std::int64_t>() < static_cast<std::int64_t>(lo) ||
        v.get<std::int64_t>() > static_cast<std::int64_t>(hi))
      throw InputError(path(key), "expected an integer in [" + std::to_string(lo) + ", " +
                                      std::to_string(hi) + "]");
    return v.get<std::size_t>();
  }

 private:
  const json& j_;
  std::string path_;
};

PartialBijection parse_pbij(const json& j, const std::string& path, std::optional<std::size_t> n) {
  try {
    if (j.is_array() && !j.empty() && j.front().is_array()) {
      if (!n) throw InputError(path, "pair lists need \"ground_size\"");
      return pbij_from_pairs(*n, j);
    }
    if (j.is_array()) {
      std::vector<Point> images;
      for (const auto& v : j) images.push_back(v.is_null() ? kNoPoint : v.get<Point>());
      return PartialBijection::from_images(std::move(images));
    }
    return j.get<PartialBijection>();
  } catch (const json::exception& e) {
    throw InputError(path, std::string("malformed partial bijection: ") + e.what());
  } catch (const StructuralError& e) {
    throw InputError(path, e.what());
  }
}

std::vector<PartialBijection> parse_generators(const Params& p) {
  const json& gens = p.at("generators");
  if (!gens.is_array() || gens.empty()) throw InputError(p.path("generators"), "expected a nonempty array");
  std::optional<std::size_t> size;
  if (p.has("ground_size")) size = p.positive("ground_size", 1, 64);
  std::vector<PartialBijection> out;
  for (std::size_t i = 0; i < gens.size(); ++i)
    out.push_back(parse_pbij(gens[i], p.path("generators") + "/" + std::to_string(i), size));
  std::size_t n = size.value_or(out.front().ground_size());
  for (std::size_t i = 0; i < out.size(); ++i)
    if (out[i].ground_size() != n)
      throw InputError(p.path("generators") + "/" + std::to_string(i), "ground size mismatch");
  return out;
}

std::shared_ptr<const InverseSemigroup> closure_of(const std::vector<PartialBijection>& gens,
                                                   const Settings& s) {
  std::size_t cap = s.cap.value_or(default_element_cap());
  return std::make_shared<const InverseSemigroup>(
      generate_closure(gens.front().ground_size(), gens, cap));
}

json laws_json(const std::vector<LawViolation>& v) {
  json a = json::array();
  for (std::size_t i = 0; i < v.size() && i < 16; ++i) a.push_back(v[i]);
  return a;
}

void describe_closure(Report& r, const std::vector<PartialBijection>& gens, const InverseSemigroup& s) {
  std::size_t idem = 0;
  for (ElementId a = 0; a < s.size(); ++a) idem += s.is_idempotent(a);
  r.info("ground size: " + std::to_string(s.ground_size()));
  r.info("elements: " + std::to_string(s.size()) + ", idempotents: " + std::to_string(idem));
  r.set("closure", {{"ground_size", s.ground_size()}, {"elements", s.size()}, {"idempotents", idem},
                    {"generators", gens}});
}

// Returns the maximal structure when F~.
std::optional<MaximalStructure> audit_f_tilde(Report& r, const std::vector<PartialBijection>& gens,
                                              const InverseSemigroup& s, bool required) {
  FTildeVerdict v = classify_f_tilde(s);
  if (gens.size() == 1) {
    bool literal = singly_generated_prediction(gens.front());
    bool exact = singly_generated_exact(gens.front());
    r.info("singly generated, literal criterion predicts F~: " + yes_no(literal));
    r.check("singly generated exact criterion agrees with closure", exact == v.is_f_tilde(),
            json{{"generator", gens.front()}});
  }
  if (!v.is_f_tilde()) {
    const auto& w = v.witness();
    json wit = {{"element", s.element(w.element)},
                {"majorants", {s.element(w.first_majorant), s.element(w.second_majorant)}}};
    r.set("f_tilde", false);
    r.set("not_f_tilde_witness", wit);
    if (required)
      r.check("F~-inverse", false, wit);
    else
      r.info("not F~-inverse: " + s.element(w.element).to_string() + " has majorants " +
             s.element(w.first_majorant).to_string() + " and " + s.element(w.second_majorant).to_string());
    return std::nullopt;
  }
  const auto& ms = v.structure();
  r.set("f_tilde", true);
  r.set("maximal", maximal_summary(s, ms));
  r.info("F~-inverse with " + std::to_string(ms.size()) + " maximal elements");
  auto laws = check_partial_group_laws(s, ms);
  r.check("partial group laws on the maximal elements", laws.empty(), laws.empty() ? json(nullptr) : laws_json(laws));
  return ms;
}

void audit_bundle(Report& r, const ActionBundle& b, bool list_arrows) {
  auto action = validate_action(b.action);
  r.check("action axioms", action.ok(), action.ok() ? json(nullptr) : json(action));
  auto axioms = validate_groupoid(b.groupoid);
  r.check("groupoid axioms", axioms.ok(), axioms.ok() ? json(nullptr) : json(axioms));
  auto ample = check_ample_map(b.action, b.ms, b.groupoid);
  r.check("ample map is a homomorphism onto G-sets", ample.ok(), ample.ok() ? json(nullptr) : json(ample));
  r.set("groupoid", groupoid_summary(b.groupoid, list_arrows));
  r.info("groupoid: " + std::to_string(b.groupoid.unit_count()) + " units, " +
         std::to_string(b.groupoid.arrow_count()) + " arrows, principal: " +
         yes_no(is_principal(b.groupoid)));
}

void audit_psi(Report& r, const ActionBundle& b) {
  PsiContext ctx{&b.action, &b.ms, &b.groupoid};
  PsiReport p = psi_report(ctx);
  r.set("psi", p);
  r.info("psi: dim C[S] = " + std::to_string(p.semigroup_dimension) + ", dim C_c(G) = " +
         std::to_string(p.groupoid_dimension) + ", rank " + std::to_string(p.rank));
  json fail = p.failures.empty() ? json(nullptr) : json(p.failures);
  r.check("psi multiplicative", p.multiplicative, fail);
  r.check("psi star preserving", p.star_preserving, fail);
  r.check("psi graded", p.graded, fail);
  r.check("conditional expectation kills non-idempotents", p.expectation_kills_nonidempotents, fail);
  r.check("psi surjective", p.surjective, json{{"rank", p.rank}});
}

void audit_convolution(Report& r, const Groupoid& g, const Settings& s) {
  AlgebraAudit a = audit_algebra(g, s.seed);
  r.set("algebra", a);
  r.info("convolution algebra dimension: " + std::to_string(a.dimension));
  json fail = a.failures.empty() ? json(nullptr) : json(a.failures);
  r.check("convolution associative", a.associative, fail);
  r.check("involution is anti-multiplicative", a.involution_anti, fail);
  r.check("regular representation is a homomorphism", a.representation_homomorphic, fail);
  r.check("C*-identity within 1e-8", a.max_cstar_defect <= kCstarTolerance,
          json{{"max_defect", a.max_cstar_defect}});
}

void audit_kumjian(Report& r, const ActionBundle& b, const Settings& s) {
  std::string why;
  if (!is_localization(b.action, &why)) {
    r.info("not a localization (" + why + "), kernel audit skipped");
    return;
  }
  KumjianReport k = kumjian_rho(b.action, b.ms, b.groupoid, s.seed);
  r.set("kumjian", k);
  r.info("rho: dim D(S) = " + std::to_string(k.d_dimension) + ", kernel " +
         std::to_string(k.kernel_dimension) + ", ideal " + std::to_string(k.ideal_dimension));
  json fail = k.failures.empty() ? json(nullptr) : json(k.failures);
  r.check("rho surjective homomorphism", k.rho_surjective && k.rho_homomorphism, fail);
  r.check("kernel of rho equals the ideal I(S)", k.kernel_equals_ideal(), fail);
  r.check("coherent families split by majorant", k.partition_blocks_sum_to_zero && k.partition_blocks_disjoint, fail);
  r.check("norm inequality on samples", k.inequality_holds, fail);
}

void audit_exel(Report& r, const PartialBijection& beta) {
  ExelReport e = exel_build_and_iso(GroundSet::of_size(beta.ground_size()), beta);
  r.set("exel", e);
  std::string dims;
  for (const auto& [n, d] : e.degree_dimensions) dims += (dims.empty() ? "" : " ") + std::to_string(n) + ":" + std::to_string(d);
  r.info("covariance algebra dimension " + std::to_string(e.exel_dimension) + ", groupoid algebra dimension " +
         std::to_string(e.groupoid_dimension) + (e.nilpotent ? "" : " (degree window " + std::to_string(e.degree_window) + ")"));
  r.info("degree dimensions " + dims);
  r.check("covariance algebra is *-isomorphic to the groupoid algebra", e.ok(),
          e.counterexample ? json(*e.counterexample) : json(nullptr));
}

// kinds

Report run_closure(const Params& p, const Settings& s) {
  Report r("closure");
  auto gens = parse_generators(p);
  auto sg = closure_of(gens, s);
  describe_closure(r, gens, *sg);
  if (p.get_or("dump", false)) r.set("semigroup", semigroup_dump(*sg));
  audit_f_tilde(r, gens, *sg, false);
  return r;
}

Report run_groupoid(const Params& p, const Settings& s) {
  Report r("groupoid of the tautological action");
  auto gens = parse_generators(p);
  auto sg = closure_of(gens, s);
  describe_closure(r, gens, *sg);
  if (!audit_f_tilde(r, gens, *sg, true)) return r;
  auto b = tautological_bundle(sg);
  audit_bundle(r, b, p.get_or("list_arrows", false));
  std::string why;
  if (is_localization(b.action, &why)) {
    auto f = free_localization_audit(b);
    r.set("free_localization", f);
    r.check("localization is free and its groupoid principal", f.ok(),
            f.witness ? json(*f.witness) : json(nullptr));
  }
  return r;
}

Report run_algebra(const Params& p, const Settings& s) {
  Report r("convolution algebra");
  auto gens = parse_generators(p);
  auto sg = closure_of(gens, s);
  describe_closure(r, gens, *sg);
  if (!audit_f_tilde(r, gens, *sg, true)) return r;
  auto b = tautological_bundle(sg);
  audit_bundle(r, b, false);
  audit_psi(r, b);
  audit_convolution(r, b.groupoid, s);
  audit_kumjian(r, b, s);
  if (gens.size() == 1) audit_exel(r, gens.front());
  return r;
}

ConePair parse_cone(const Params& p) {
  const json& c = p.at("cone");
  try {
    if (c.is_string()) {
      auto name = c.get<std::string>();
      if (name == "naturals") return ConePair::naturals(p.positive("d", 1, 3));
      if (name == "parity") return ConePair::parity_cone();
      throw InputError(p.path("cone"), "unknown cone name '" + name + "' (naturals, parity)");
    }
    return c.get<ConePair>();
  } catch (const json::exception& e) {
    throw InputError(p.path("cone"), std::string("malformed cone: ") + e.what());
  } catch (const StructuralError& e) {
    throw InputError(p.path("cone"), e.what());
  }
}

std::vector<ToeplitzElement> letter_elements(const ConePair& cp, std::int64_t radius) {
  SearchWindow w{std::max<std::int64_t>(8, 4 * radius)};
  std::vector<ToeplitzElement> out;
  for (const auto& x : box_points(cp.d, radius)) out.push_back(te_beta(cp, x, w));
  std::vector<ToeplitzElement> pairs;
  for (const auto& a : out)
    for (const auto& b : out) pairs.push_back(te_mul(cp, a, b, w));
  out.insert(out.end(), pairs.begin(), pairs.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Report run_toeplitz(const Params& p, const Settings& s) {
  Report r("Wiener-Hopf and Toeplitz audit");
  ConePair cp = parse_cone(p);
  std::int64_t k = s.window.value_or(p.get_or<std::int64_t>("window", 2));
  if (k < 1 || k > 8) throw InputError(p.path("window"), "window must be in [1, 8]");
  std::size_t L = s.word_length.value_or(p.get_or<std::size_t>("word_length", 2));
  if (L > 4) throw InputError(p.path("word_length"), "word length must be at most 4");
  WindowBox box{cp.d, -k, k};
  r.info("cone " + cp.to_string() + ", window [" + std::to_string(-k) + ", " + std::to_string(k) + "]^" +
         std::to_string(cp.d));
  try {
    std::int64_t scan = p.get_or<std::int64_t>("scan_radius", 3 * k + 2);
    if (scan < k) throw InputError(p.path("scan_radius"), "scan radius must be at least the window");
    OmegaPatterns o = omega_patterns(cp, box, scan);
    r.set("omega", omega_to_json(box, o));
    r.info("omega patterns on the window: " + std::to_string(o.patterns.size()));
    r.check("omega pattern set stable under doubling the scan", o.stabilized);
    if (p.has("expected_patterns"))
      r.check("omega pattern count", o.patterns.size() == p.get<std::size_t>("expected_patterns"),
              json{{"found", o.patterns.size()}});

    CharacterComparison cc = character_comparison(cp, L, box);
    r.set("characters", cc);
    r.info("B-sets from words of length <= " + std::to_string(L) + ": " + std::to_string(cc.bsets.size()) +
           ", distinct patterns " + std::to_string(cc.distinct_bpatterns));
    if (cc.undecided > 0) r.undecided(std::to_string(cc.undecided) + " B-set minima not settled");
    bool expect = p.get_or("expect_faithful", true);
    bool bijective = cc.surjective() && cc.separation_verified;
    json wit = cc.witness ? json(cc) ["witness"] : json(nullptr);
    if (expect) {
      r.check("psi0 bijective on the window", bijective, wit);
    } else {
      r.check("unmatched character pattern found", cc.unmatched > 0, nullptr);
      if (cc.witness) r.info("witness B-set: " + wit.dump());
    }

    QuasiLatticeReport q = quasi_lattice_check(cp, p.get_or<std::int64_t>("sample_radius", 2), scan);
    r.set("quasi_lattice", q);
    r.info("quasi-lattice ordered: " + yes_no(q.quasi_lattice));
    if (q.quasi_lattice) {
      QloReport qr = qlo_presentation(cp, p.get_or<std::int64_t>("pair_radius", cp.d == 1 ? 2 : 1), std::min<std::size_t>(L + 1, 3), 3 * k + 6);
      r.set("qlo", qr);
      r.check("pair presentation agrees with Toeplitz arithmetic", qr.ok(),
              qr.failures.empty() ? json(nullptr) : json(qr.failures));
    } else if (q.counterexample) {
      r.info("pair without least upper bound: " + json(q)["counterexample"].dump());
    }

    if (p.get_or("wiener_hopf", cp.d == 1)) {
      auto els = letter_elements(cp, 1);
      WienerHopfReport wh = wiener_hopf_groupoid(cp, box, els, scan);
      r.set("wiener_hopf", wh);
      r.info("Wiener-Hopf groupoid: " + std::to_string(wh.units.size()) + " units, " +
             std::to_string(wh.groupoid ? wh.groupoid->arrow_count() : 0) + " arrows");
      r.check("Wiener-Hopf groupoid axioms and consistency", wh.ok(),
              wh.failures.empty() ? json(nullptr) : json(wh.failures));
    }
  } catch (const UndecidedError& e) {
    r.undecided(e.what());
  }
  return r;
}

Radices parse_radices(const Params& p) {
  Radices r;
  const json& v = p.at("radices");
  if (!v.is_array() || v.empty()) throw InputError(p.path("radices"), "expected a nonempty array");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number_integer() || v[i].get<std::int64_t>() < 2 || v[i].get<std::int64_t>() > 16)
      throw InputError(p.path("radices") + "/" + std::to_string(i), "radix must be an integer in [2, 16]");
    r.values.push_back(v[i].get<std::uint32_t>());
  }
  return r;
}

std::size_t total_points(const Radices& r, std::size_t depth) { return truncated_points(r, depth); }

Report run_odometer(const Params& p, const Settings& s) {
  Report r("odometer");
  Radices rad = parse_radices(p);
  std::size_t depth = p.positive("depth", 1, 6);
  if (total_points(rad, depth) > 64) throw InputError(p.path("depth"), "truncation has more than 64 points");
  OdometerSystem o = build_odometer(rad, depth);
  OdometerReport rep = odometer_report(o);
  r.set("odometer", rep);
  r.info("points " + std::to_string(rep.points) + ", semigroup " + std::to_string(rep.semigroup_size) +
         ", arrows " + std::to_string(rep.arrows));
  r.check("successor map", rep.successor_correct);
  r.check("beta beta* is the identity off the top point", rep.beta_beta_star_identity_off_top);
  r.check("groupoid is the pair groupoid", rep.pair_groupoid && rep.axioms.ok(),
          rep.axioms.ok() ? json(nullptr) : json(rep.axioms));
  r.check("algebra dimension is the square of the point count", rep.arrows == rep.points * rep.points,
          json{{"arrows", rep.arrows}, {"points", rep.points}});
  audit_convolution(r, o.bundle.groupoid, s);
  audit_exel(r, odometer(rad, depth));
  return r;
}

Report run_glimm(const Params& p, const Settings& s) {
  Report r("Glimm localization");
  Radices rad = parse_radices(p);
  std::size_t depth = p.positive("depth", 1, 5);
  if (total_points(rad, depth) > 64) throw InputError(p.path("depth"), "truncation has more than 64 points");
  GlimmSystem g = build_glimm(rad, depth);
  OdometerSystem o = build_odometer(rad, depth);
  GlimmReport rep = glimm_report(g, o);
  r.set("glimm", rep);
  r.info("points " + std::to_string(rep.points) + ", semigroup " + std::to_string(rep.semigroup_size) +
         ", arrows " + std::to_string(rep.arrows));
  json fail = rep.failures.empty() ? json(nullptr) : json(rep.failures);
  r.check("F~-inverse with the predicted maximal elements", rep.f_tilde && rep.maximal_matches, fail);
  r.check("localization", rep.localization, fail);
  r.check("same groupoid as the odometer", rep.same_groupoid_as_odometer && rep.pair_groupoid, fail);
  r.check("intersection with the odometer semigroup", rep.intersection_as_expected,
          json{{"size", rep.intersection_size}});
  audit_kumjian(r, g.bundle, s);
  return r;
}

Report run_cuntz_krieger(const Params& p, const Settings& s) {
  Report r("Cuntz-Krieger");
  std::vector<std::vector<int>> entries;
  try {
    entries = p.at("matrix").get<std::vector<std::vector<int>>>();
  } catch (const json::exception&) {
    throw InputError(p.path("matrix"), "expected a square 0/1 array");
  }
  std::optional<CKMatrix> a;
  try {
    a.emplace(entries);
  } catch (const StructuralError& e) {
    throw InputError(p.path("matrix"), e.what());
  }
  std::size_t L = s.word_length.value_or(p.get_or<std::size_t>("word_length", 3));
  if (L < 1 || L > 5) throw InputError(p.path("word_length"), "word length must be in [1, 5]");
  CKRelationsReport rel = ck_relations(*a);
  r.set("relations", rel);
  for (std::size_t i = 0; i < rel.domains.size(); ++i)
    r.info("generator " + std::to_string(i + 1) + ": domain " + rel.domains[i] + ", range " + rel.ranges[i]);
  json rf = rel.failures.empty() ? json(nullptr) : json(rel.failures);
  r.check("ranges pairwise disjoint", rel.ranges_disjoint, rf);
  r.check("domains are unions of the allowed ranges", rel.domains_decompose, rf);
  CKSemigroupReport sg = ck_semigroup(*a, L);
  r.set("semigroup", sg);
  r.info("fragment of " + std::to_string(sg.fragment_size) + " elements, " + std::to_string(sg.words_tested) +
         " reduced words, " + std::to_string(sg.ma_size) + " in M_A");
  for (const auto& line : sg.table) r.info(line);
  json sf = sg.failures.empty() ? json(nullptr) : json(sg.failures);
  r.check("cylinders of length <= L are domains", sg.localization, sf);
  r.check("unique maximal majorants in the fragment", sg.f_tilde, sf);
  r.check("word criterion matches maximality", sg.lemma_matches && sg.maximal_are_beta_x, sf);
  r.check("free group product consistent", sg.free_product_consistent, sf);
  CKFreenessReport fr = ck_freeness(*a, L);
  r.set("freeness", fr);
  r.info("action free: " + yes_no(fr.free) + (fr.witness ? " (" + *fr.witness + ")" : ""));
  return r;
}

GroupTable parse_group(const Params& p) {
  if (p.has("group_order")) return cyclic_group(static_cast<std::uint32_t>(p.positive("group_order", 1, 32)));
  try {
    GroupTable g = p.at("group").get<GroupTable>();
    validate_group(g);
    return g;
  } catch (const json::exception&) {
    throw InputError(p.path("group"), "expected a group table");
  } catch (const StructuralError& e) {
    throw InputError(p.path("group"), e.what());
  }
}

std::shared_ptr<const InverseSemigroup> clifford_semigroup(Report& r, const Params& p) {
  GroupTable g = parse_group(p);
  std::vector<std::vector<std::uint32_t>> chain;
  try {
    chain = p.at("chain").get<std::vector<std::vector<std::uint32_t>>>();
  } catch (const json::exception&) {
    throw InputError(p.path("chain"), "expected an array of subgroups");
  }
  try {
    CliffordSemigroup c = clifford(g, chain);
    r.info("Clifford semigroup of " + std::to_string(c.table.size()) + " elements");
    r.check("maximal elements match the chain formula", c.maximal_matches);
    return std::make_shared<const InverseSemigroup>(std::move(c.semigroup));
  } catch (const StructuralError& e) {
    throw InputError(p.path("chain"), e.what());
  }
}

Report run_conjugation(const Params& p, const Settings& s) {
  Report r("conjugation action on characters");
  std::shared_ptr<const InverseSemigroup> sg;
  if (p.has("clifford")) {
    sg = clifford_semigroup(r, Params(p.at("clifford"), p.path("clifford")));
  } else {
    auto gens = parse_generators(p);
    sg = closure_of(gens, s);
    describe_closure(r, gens, *sg);
  }
  if (!classify_f_tilde(*sg).is_f_tilde()) {
    r.check("F~-inverse", false);
    return r;
  }
  ConjugationAction c = conjugation_action(sg);
  ConjugationReport rep = conjugation_report(c);
  r.set("conjugation", rep);
  r.info("characters " + std::to_string(rep.characters) + ", arrows " + std::to_string(rep.arrows));
  r.check("conjugation is an action", rep.action.ok(), rep.action.ok() ? json(nullptr) : json(rep.action));
  r.check("psi0 is the identity on characters", rep.psi0_identity);
  r.check("psi is a linear isomorphism", rep.full_rank(), json{{"rank", rep.psi.rank}});
  return r;
}

}  // namespace

Report run_job(const json& job, const Settings& flags) {
  if (!job.is_object()) throw InputError("", "job must be an object");
  Params top(job, "");
  std::string kind = top.get<std::string>("kind");
  Settings s = flags;
  if (!s.window && top.has("window")) s.window = top.get<std::int64_t>("window");
  if (!s.cap && top.has("cap")) s.cap = top.positive("cap", 1, 10000000);
  static const json kEmpty = json::object();
  Params p(top.has("parameters") ? job.at("parameters") : kEmpty, "/parameters");
  if (kind == "closure") return run_closure(p, s);
  if (kind == "groupoid") return run_groupoid(p, s);
  if (kind == "algebra") return run_algebra(p, s);
  if (kind == "toeplitz") return run_toeplitz(p, s);
  if (kind == "odometer") return run_odometer(p, s);
  if (kind == "glimm") return run_glimm(p, s);
  if (kind == "cuntz-krieger") return run_cuntz_krieger(p, s);
  if (kind == "conjugation") return run_conjugation(p, s);
  throw InputError("/kind", "unknown kind '" + kind +
                                "' (closure, groupoid, algebra, toeplitz, odometer, glimm, cuntz-krieger, conjugation)");
}

}  // namespace groupoidal::cli
