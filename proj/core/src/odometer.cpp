#include "groupoidal/odometer.hpp"

#include <algorithm>
#include <set>

#include "groupoidal/error.hpp"
#include "groupoidal/kumjian.hpp"

namespace groupoidal {

void Radices::validate() const {
  if (values.empty()) throw StructuralError("empty radix list");
  for (auto v : values)
    if (v == 0) throw StructuralError("radix must be positive");
}

std::size_t truncated_points(const Radices& r, std::size_t depth) {
  r.validate();
  if (depth == 0) throw StructuralError("depth must be at least 1");
  std::size_t n = 1;
  for (std::size_t i = 0; i < depth; ++i) n *= r.at(i);
  return n;
}

std::vector<std::uint32_t> digits(const Radices& r, std::size_t depth, Point p) {
  std::vector<std::uint32_t> w(depth);
  for (std::size_t i = 0; i < depth; ++i) {
    w[i] = p % r.at(i);
    p /= r.at(i);
  }
  return w;
}

Point point_of(const Radices& r, const std::vector<std::uint32_t>& w) {
  Point p = 0;
  for (std::size_t i = w.size(); i-- > 0;) p = p * r.at(i) + w[i];
  return p;
}

PartialBijection odometer(const Radices& r, std::size_t depth) {
  const std::size_t n = truncated_points(r, depth);
  std::vector<std::pair<Point, Point>> pairs;
  for (Point p = 0; p + 1 < n; ++p) pairs.emplace_back(p + 1, p);
  return PartialBijection::from_pairs(n, pairs);
}

PartialBijection glimm_gamma(const Radices& r, std::size_t depth, const std::vector<std::uint32_t>& u,
                             const std::vector<std::uint32_t>& v) {
  const std::size_t n = truncated_points(r, depth);
  if (u.size() != v.size() || u.empty() || u.size() > depth)
    throw StructuralError("gamma needs prefixes of equal length between 1 and the depth");
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] >= r.at(i) || v[i] >= r.at(i)) throw StructuralError("gamma letter exceeds its radix");
  std::vector<std::pair<Point, Point>> pairs;
  for (Point p = 0; p < n; ++p) {
    auto w = digits(r, depth, p);
    if (!std::equal(v.begin(), v.end(), w.begin())) continue;
    std::copy(u.begin(), u.end(), w.begin());
    pairs.emplace_back(p, point_of(r, w));
  }
  return PartialBijection::from_pairs(n, pairs);
}

namespace {

std::string word_string(const std::vector<std::uint32_t>& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s;
}

// all words of length len over the radices
std::vector<std::vector<std::uint32_t>> prefixes(const Radices& r, std::size_t len) {
  std::vector<std::vector<std::uint32_t>> out{{}};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& w : out)
      for (std::uint32_t a = 0; a < r.at(i); ++a) {
        auto x = w;
        x.push_back(a);
        next.push_back(std::move(x));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

OdometerSystem build_odometer(const Radices& r, std::size_t depth) {
  const std::size_t n = truncated_points(r, depth);
  PartialBijection gens[] = {odometer(r, depth)};
  auto s = std::make_shared<const InverseSemigroup>(generate_closure(n, gens));
  return OdometerSystem{r, depth, s, tautological_bundle(s)};
}

GlimmSystem build_glimm(const Radices& r, std::size_t depth) {
  const std::size_t n = truncated_points(r, depth);
  std::vector<PartialBijection> gens;
  std::vector<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>> labels;
  for (std::size_t len = 1; len <= depth; ++len) {
    auto ws = prefixes(r, len);
    for (const auto& u : ws)
      for (const auto& v : ws) {
        gens.push_back(glimm_gamma(r, depth, u, v));
        labels.emplace_back(u, v);
      }
  }
  auto closure = generate_closure(n, gens);
  std::vector<std::string> names(closure.size());
  for (ElementId a = 0; a < closure.size(); ++a) names[a] = closure.element(a).to_string();
  for (std::size_t i = 0; i < gens.size(); ++i)
    names[*closure.find(gens[i])] =
        "gamma(" + word_string(labels[i].first) + ";" + word_string(labels[i].second) + ")";
  names[closure.unit()] = "eps";
  if (closure.zero()) names[*closure.zero()] = "theta";
  closure.set_names(std::move(names));
  auto s = std::make_shared<const InverseSemigroup>(std::move(closure));
  return GlimmSystem{r, depth, s, tautological_bundle(s), std::move(labels)};
}

OdometerReport odometer_report(const OdometerSystem& o) {
  OdometerReport rep;
  const Groupoid& g = o.bundle.groupoid;
  rep.points = g.unit_count();
  rep.semigroup_size = o.semigroup->size();
  rep.arrows = g.arrow_count();
  rep.pair_groupoid = is_pair_groupoid(g);
  rep.axioms = validate_groupoid(g);
  PartialBijection beta = odometer(o.radices, o.depth);
  PartialBijection succ = star(beta);
  const Point top = static_cast<Point>(rep.points - 1);
  rep.successor_correct = true;
  for (Point p = 0; p < rep.points; ++p) {
    if (p == top) {
      rep.successor_correct = rep.successor_correct && !succ.defined_at(p);
      continue;
    }
    // add (1,0,0,...) with carry to the right
    auto w = digits(o.radices, o.depth, p);
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (++w[i] < o.radices.at(i)) break;
      w[i] = 0;
    }
    rep.successor_correct = rep.successor_correct && succ.image(p) == point_of(o.radices, w);
  }
  std::vector<Point> off_top;
  for (Point p = 0; p < top; ++p) off_top.push_back(p);
  rep.beta_beta_star_identity_off_top =
      compose(beta, succ) == PartialBijection::identity_on(rep.points, off_top);
  return rep;
}

bool same_principal_groupoid(const Groupoid& a, const Groupoid& b) {
  if (a.unit_count() != b.unit_count() || a.arrow_count() != b.arrow_count()) return false;
  if (!is_principal(a) || !is_principal(b)) return false;
  std::map<std::pair<Point, Point>, ArrowId> in_b;
  for (ArrowId h = 0; h < b.arrow_count(); ++h) in_b[{b.arrow(h).source, b.arrow(h).target}] = h;
  std::vector<ArrowId> f(a.arrow_count());
  for (ArrowId g = 0; g < a.arrow_count(); ++g) {
    auto it = in_b.find({a.arrow(g).source, a.arrow(g).target});
    if (it == in_b.end()) return false;
    f[g] = it->second;
  }
  for (ArrowId g = 0; g < a.arrow_count(); ++g)
    for (ArrowId h : a.arrows_into(a.arrow(g).source)) {
      auto gh = a.compose(g, h);
      auto fgh = b.compose(f[g], f[h]);
      if (!gh || !fgh || f[*gh] != *fgh) return false;
    }
  return true;
}

GlimmReport glimm_report(const GlimmSystem& gs, const OdometerSystem& o) {
  GlimmReport rep;
  const auto& s = *gs.semigroup;
  const Groupoid& g = gs.bundle.groupoid;
  rep.points = g.unit_count();
  rep.semigroup_size = s.size();
  rep.arrows = g.arrow_count();
  rep.f_tilde = true;
  rep.pair_groupoid = is_pair_groupoid(g);
  rep.localization = is_localization(gs.bundle.action);

  std::set<ElementId> predicted{s.unit()};
  for (const auto& [u, v] : gs.generators)
    if (u.back() != v.back()) predicted.insert(*s.find(glimm_gamma(gs.radices, gs.depth, u, v)));
  std::set<ElementId> found(gs.bundle.ms.maximal.begin(), gs.bundle.ms.maximal.end());
  rep.maximal_matches = predicted == found;
  if (!rep.maximal_matches) rep.failures.push_back("maximal elements differ from the prediction");

  rep.same_groupoid_as_odometer = same_principal_groupoid(o.bundle.groupoid, g);
  if (!rep.same_groupoid_as_odometer) rep.failures.push_back("odometer and glimm groupoids differ");

  std::size_t expected = 0;
  for (const auto& f : o.semigroup->elements()) {
    if (!s.find(f)) continue;
    ++rep.intersection_size;
    if (f.is_identity() || f.is_void() || f.domain_size() == 1) ++expected;
  }
  rep.intersection_as_expected = expected == rep.intersection_size &&
                                 rep.intersection_size == 2 + rep.points * rep.points - (rep.points == 1 ? 1 : 0);
  return rep;
}

}  // namespace groupoidal
