#include "groupoidal/groupoid.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "groupoidal/error.hpp"

namespace groupoidal {

LabelStructure LabelStructure::from_maximal(const InverseSemigroup& s, const MaximalStructure& ms) {
  LabelStructure l;
  const std::size_t m = ms.size();
  l.product_ = ms.product;
  l.inverse_ = ms.inverse;
  l.unit_ = ms.unit;
  for (MIndex x = 0; x < m; ++x) l.names_.push_back(s.name(ms.maximal[x]));
  return l;
}

LabelStructure LabelStructure::from_group_table(
    const std::vector<std::vector<std::uint32_t>>& table) {
  const std::size_t n = table.size();
  if (n == 0) throw StructuralError("empty group table");
  for (const auto& row : table) {
    if (row.size() != n) throw StructuralError("group table is not square");
    for (auto v : row)
      if (v >= n) throw StructuralError("group table entry out of range");
  }
  LabelStructure l;
  std::optional<Label> e;
  for (Label x = 0; x < n && !e; ++x) {
    bool ok = true;
    for (Label y = 0; y < n && ok; ++y) ok = table[x][y] == y && table[y][x] == y;
    if (ok) e = x;
  }
  if (!e) throw StructuralError("group table has no unit");
  l.unit_ = *e;
  l.inverse_.resize(n);
  for (Label x = 0; x < n; ++x) {
    std::optional<Label> inv;
    for (Label y = 0; y < n; ++y)
      if (table[x][y] == *e && table[y][x] == *e) inv = y;
    if (!inv) throw StructuralError("group table element " + std::to_string(x) + " has no inverse");
    l.inverse_[x] = *inv;
    l.names_.push_back("g" + std::to_string(x));
  }
  for (Label x = 0; x < n; ++x)
    for (Label y = 0; y < n; ++y)
      for (Label z = 0; z < n; ++z)
        if (table[table[x][y]][z] != table[x][table[y][z]])
          throw StructuralError("group table is not associative");
  l.product_.resize(n * n);
  for (Label x = 0; x < n; ++x)
    for (Label y = 0; y < n; ++y) l.product_[x * n + y] = static_cast<std::int32_t>(table[x][y]);
  return l;
}

LabelStructure LabelStructure::integer_interval(long bound) {
  if (bound < 0) throw StructuralError("negative interval bound");
  LabelStructure l;
  const long n = 2 * bound + 1;
  l.unit_ = static_cast<Label>(bound);
  l.inverse_.resize(n);
  l.product_.assign(n * n, -1);
  for (long i = 0; i < n; ++i) {
    long a = i - bound;
    l.inverse_[i] = static_cast<Label>(-a + bound);
    l.names_.push_back(std::to_string(a));
    for (long j = 0; j < n; ++j) {
      long c = a + (j - bound);
      if (c >= -bound && c <= bound) l.product_[i * n + j] = static_cast<std::int32_t>(c + bound);
    }
  }
  return l;
}

LabelStructure LabelStructure::from_partial_table(std::vector<std::int32_t> product,
                                                 std::vector<Label> inverse, Label unit,
                                                 std::vector<std::string> names) {
  const std::size_t n = inverse.size();
  if (n == 0 || unit >= n) throw StructuralError("label table has no unit");
  if (product.size() != n * n || names.size() != n) throw StructuralError("label table size mismatch");
  for (Label x = 0; x < n; ++x) {
    if (inverse[x] >= n) throw StructuralError("label inverse out of range");
    if (product[unit * n + x] != static_cast<std::int32_t>(x) ||
        product[x * n + unit] != static_cast<std::int32_t>(x))
      throw StructuralError("label unit is not neutral");
    if (product[x * n + inverse[x]] != static_cast<std::int32_t>(unit))
      throw StructuralError("label inverse fails at " + names[x]);
  }
  for (auto z : product)
    if (z < -1 || z >= static_cast<std::int32_t>(n)) throw StructuralError("label product out of range");
  LabelStructure l;
  l.product_ = std::move(product);
  l.inverse_ = std::move(inverse);
  l.unit_ = unit;
  l.names_ = std::move(names);
  return l;
}

std::optional<Label> LabelStructure::multiply(Label x, Label y) const {
  std::int32_t z = product_[x * size() + y];
  if (z < 0) return std::nullopt;
  return static_cast<Label>(z);
}

bool LabelStructure::is_total() const {
  return std::none_of(product_.begin(), product_.end(), [](std::int32_t z) { return z < 0; });
}

Action Action::tautological(std::shared_ptr<const InverseSemigroup> s) {
  Action a;
  a.omega = GroundSet::of_size(s->ground_size());
  a.phi = s->elements();
  a.semigroup = std::move(s);
  return a;
}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream os;
  os << violations.size() << " violation(s); first: " << violations.front().rule;
  if (!violations.front().detail.empty()) os << " (" << violations.front().detail << ")";
  return os.str();
}

ValidationReport validate_action(const Action& a) {
  ValidationReport rep;
  const auto& s = *a.semigroup;
  if (a.phi.size() != s.size()) {
    rep.violations.push_back({"phi defined on every element", {a.phi.size(), s.size()}, ""});
    return rep;
  }
  for (ElementId i = 0; i < s.size(); ++i)
    if (a.phi[i].ground_size() != a.omega.size) {
      rep.violations.push_back({"phi values act on Omega", {i}, ""});
      return rep;
    }
  if (!a.phi[s.unit()].is_identity())
    rep.violations.push_back({"phi(unit) is the identity on Omega", {s.unit()}, a.phi[s.unit()].to_string()});
  if (auto z = s.zero(); z && !a.phi[*z].is_void())
    rep.violations.push_back({"phi(zero) is the void map", {*z}, a.phi[*z].to_string()});
  for (ElementId i = 0; i < s.size(); ++i) {
    if (star(a.phi[i]) != a.phi[s.star(i)])
      rep.violations.push_back({"phi(a*) = phi(a)*", {i}, ""});
    for (ElementId j = 0; j < s.size(); ++j)
      if (compose(a.phi[i], a.phi[j]) != a.phi[s.mul(i, j)])
        rep.violations.push_back({"phi(ab) = phi(a)phi(b)", {i, j}, s.name(i) + " * " + s.name(j)});
  }
  return rep;
}

Groupoid::Groupoid(LabelStructure labels, std::size_t unit_count,
                   std::vector<PartialBijection> label_maps)
    : labels_(std::move(labels)), unit_count_(unit_count), label_maps_(std::move(label_maps)) {
  if (label_maps_.size() != labels_.size())
    throw StructuralError("one partial bijection per label is required");
  lookup_.assign(labels_.size() * unit_count_, -1);
  fibers_.resize(labels_.size());
  by_target_.resize(unit_count_);
  for (Label x = 0; x < labels_.size(); ++x) {
    if (label_maps_[x].ground_size() != unit_count_) throw StructuralError("label map ground mismatch");
    for (Point w : label_maps_[x].domain()) {
      ArrowId id = static_cast<ArrowId>(arrows_.size());
      Point r = label_maps_[x].image(w);
      arrows_.push_back({x, w, r});
      lookup_[x * unit_count_ + w] = static_cast<std::int32_t>(id);
      fibers_[x].push_back(id);
      by_target_[r].push_back(id);
    }
  }
  for (Point w = 0; w < unit_count_; ++w)
    if (lookup_[labels_.unit() * unit_count_ + w] < 0)
      throw StructuralError("unit label must act as the identity on every unit");
}

std::optional<ArrowId> Groupoid::find(Label x, Point source) const {
  if (x >= labels_.size() || source >= unit_count_) return std::nullopt;
  std::int32_t id = lookup_[x * unit_count_ + source];
  if (id < 0) return std::nullopt;
  return static_cast<ArrowId>(id);
}

ArrowId Groupoid::unit_arrow(Point w) const { return *find(labels_.unit(), w); }

ArrowId Groupoid::inverse(ArrowId g) const {
  const Arrow& a = arrows_[g];
  auto inv = find(labels_.inverse(a.label), a.target);
  if (!inv) throw StructuralError("missing inverse arrow for " + arrow_name(g));
  return *inv;
}

std::optional<ArrowId> Groupoid::compose(ArrowId g, ArrowId h) const {
  const Arrow& a = arrows_[g];
  const Arrow& b = arrows_[h];
  if (a.source != b.target) return std::nullopt;
  auto xy = labels_.multiply(a.label, b.label);
  if (!xy) throw WindowTooSmallError("label product undefined for composable arrows " +
                                     arrow_name(g) + ", " + arrow_name(h));
  auto c = find(*xy, b.source);
  if (!c) throw StructuralError("composite of " + arrow_name(g) + " and " + arrow_name(h) +
                                " is not an arrow");
  return c;
}

std::span<const ArrowId> Groupoid::fiber(Label x) const { return fibers_[x]; }
std::span<const ArrowId> Groupoid::arrows_into(Point w) const { return by_target_[w]; }

std::size_t Groupoid::composable_pair_count() const {
  std::size_t n = 0;
  for (const auto& a : arrows_) n += by_target_[a.source].size();
  return n;
}

std::string Groupoid::arrow_name(ArrowId g) const {
  const Arrow& a = arrows_[g];
  return "(" + labels_.name(a.label) + "," + std::to_string(a.source) + ")";
}

static Groupoid build_from_labels(const Action& a, LabelStructure labels,
                                  const std::vector<ElementId>& label_elements) {
  ValidationReport v = validate_action(a);
  if (!v.ok()) throw StructuralError("invalid action: " + v.summary());
  std::vector<PartialBijection> maps;
  for (ElementId e : label_elements) maps.push_back(a.phi[e]);
  Groupoid g(std::move(labels), a.omega.size, std::move(maps));
  // composable products land in arrows with the right d and r
  for (ArrowId x = 0; x < g.arrow_count(); ++x)
    for (ArrowId y : g.arrows_into(g.arrow(x).source)) {
      ArrowId z = *g.compose(x, y);
      if (g.arrow(z).source != g.arrow(y).source || g.arrow(z).target != g.arrow(x).target)
        throw StructuralError("composition lands on the wrong arrow");
    }
  return g;
}

Groupoid build_groupoid(const Action& a, const MaximalStructure& ms) {
  return build_from_labels(a, LabelStructure::from_maximal(*a.semigroup, ms), ms.maximal);
}

Groupoid build_graded_groupoid(const Action& a, const LabelStructure& group,
                               const std::vector<ElementId>& grade) {
  const auto& s = *a.semigroup;
  if (grade.size() != group.size()) throw StructuralError("grade must cover every group element");
  auto fail = [&](const std::string& cond, const std::string& detail) {
    throw StructuralError("grading condition '" + cond + "' fails: " + detail);
  };
  if (grade[group.unit()] != s.unit()) fail("beta_e = unit", s.name(grade[group.unit()]));
  for (Label x = 0; x < group.size(); ++x) {
    if (grade[group.inverse(x)] != s.star(grade[x]))
      fail("beta_{x^-1} = beta_x*", "x=" + group.name(x));
    for (Label y = 0; y < group.size(); ++y) {
      ElementId p = s.mul(grade[x], grade[y]);
      auto xy = group.multiply(x, y);
      if (!xy) {
        if (!s.is_zero(p))
          throw WindowTooSmallError("label window too small: beta_" + group.name(x) + " beta_" +
                                    group.name(y) + " is nonzero");
        continue;
      }
      if (!s.leq(p, grade[*xy]))
        fail("beta_x beta_y <= beta_xy", "x=" + group.name(x) + ", y=" + group.name(y));
    }
  }
  for (ElementId e = 0; e < s.size(); ++e) {
    bool covered = false;
    for (Label x = 0; x < group.size() && !covered; ++x) covered = s.leq(e, grade[x]);
    if (!covered) fail("every element lies below some beta_x", s.name(e));
  }
  return build_from_labels(a, group, grade);
}

ActionBundle action_bundle(Action a) {
  MaximalStructure ms = require_f_tilde(*a.semigroup);
  Groupoid g = build_groupoid(a, ms);
  return ActionBundle{std::move(a), std::move(ms), std::move(g)};
}

ActionBundle tautological_bundle(std::shared_ptr<const InverseSemigroup> s) {
  return action_bundle(Action::tautological(std::move(s)));
}

std::map<Label, std::vector<ArrowId>> decompose_by_fiber(const Groupoid& g) {
  std::map<Label, std::vector<ArrowId>> out;
  for (Label x = 0; x < g.labels().size(); ++x) {
    auto f = g.fiber(x);
    if (!f.empty()) out.emplace(x, std::vector<ArrowId>(f.begin(), f.end()));
  }
  return out;
}

bool is_gset(const Groupoid& g, const GSet& a) {
  std::set<Point> d, r;
  for (ArrowId x : a) {
    if (!d.insert(g.arrow(x).source).second) return false;
    if (!r.insert(g.arrow(x).target).second) return false;
  }
  return true;
}

GSet gset_product(const Groupoid& g, const GSet& a, const GSet& b) {
  std::set<ArrowId> out;
  for (ArrowId x : a)
    for (ArrowId y : b)
      if (auto z = g.compose(x, y)) out.insert(*z);
  return {out.begin(), out.end()};
}

GSet gset_inverse(const Groupoid& g, const GSet& a) {
  GSet out;
  for (ArrowId x : a) out.push_back(g.inverse(x));
  std::sort(out.begin(), out.end());
  return out;
}

GSet ample_map(const Action& a, const MaximalStructure& ms, const Groupoid& g, ElementId alpha) {
  const auto& s = *a.semigroup;
  if (alpha >= s.size()) throw StructuralError("element index out of range");
  if (s.is_zero(alpha)) return {};
  std::int32_t x = ms.majorant[alpha];
  if (x < 0) throw StructuralError("element has no unique majorant: " + s.name(alpha));
  GSet out;
  for (Point w : a.phi[alpha].domain()) out.push_back(*g.find(static_cast<Label>(x), w));
  std::sort(out.begin(), out.end());
  return out;
}

ValidationReport check_ample_map(const Action& a, const MaximalStructure& ms, const Groupoid& g) {
  ValidationReport rep;
  const auto& s = *a.semigroup;
  std::vector<GSet> img(s.size());
  for (ElementId e = 0; e < s.size(); ++e) {
    img[e] = ample_map(a, ms, g, e);
    if (!is_gset(g, img[e])) rep.violations.push_back({"A(a) is a G-set", {e}, s.name(e)});
  }
  GSet units;
  for (Point w = 0; w < g.unit_count(); ++w) units.push_back(g.unit_arrow(w));
  std::sort(units.begin(), units.end());
  if (img[s.unit()] != units) rep.violations.push_back({"A(unit) = unit space", {s.unit()}, ""});
  for (ElementId e = 0; e < s.size(); ++e) {
    if (gset_inverse(g, img[e]) != img[s.star(e)])
      rep.violations.push_back({"A(a)^-1 = A(a*)", {e}, s.name(e)});
    for (ElementId f = 0; f < s.size(); ++f)
      if (gset_product(g, img[e], img[f]) != img[s.mul(e, f)])
        rep.violations.push_back({"A(a)A(b) = A(ab)", {e, f}, s.name(e) + " * " + s.name(f)});
  }
  return rep;
}

ValidationReport validate_groupoid(const Groupoid& g) {
  ValidationReport rep;
  const std::size_t n = g.arrow_count();
  for (ArrowId x = 0; x < n; ++x) {
    ArrowId xi = g.inverse(x);
    if (g.inverse(xi) != x) rep.violations.push_back({"(g^-1)^-1 = g", {x}, g.arrow_name(x)});
    auto l = g.compose(x, xi);
    auto r = g.compose(xi, x);
    if (!l || *l != g.unit_arrow(g.arrow(x).target))
      rep.violations.push_back({"g g^-1 = r(g)", {x}, g.arrow_name(x)});
    if (!r || *r != g.unit_arrow(g.arrow(x).source))
      rep.violations.push_back({"g^-1 g = d(g)", {x}, g.arrow_name(x)});
    if (g.compose(g.unit_arrow(g.arrow(x).target), x) != x ||
        g.compose(x, g.unit_arrow(g.arrow(x).source)) != x)
      rep.violations.push_back({"units act neutrally", {x}, g.arrow_name(x)});
    for (ArrowId y : g.arrows_into(g.arrow(x).source)) {
      ArrowId xy = *g.compose(x, y);
      if (g.arrow(xy).source != g.arrow(y).source || g.arrow(xy).target != g.arrow(x).target)
        rep.violations.push_back({"d(gh)=d(h), r(gh)=r(g)", {x, y}, ""});
      for (ArrowId z : g.arrows_into(g.arrow(y).source)) {
        auto lhs = g.compose(xy, z);
        auto yz = g.compose(y, z);
        auto rhs = g.compose(x, *yz);
        if (lhs != rhs) rep.violations.push_back({"associativity", {x, y, z}, ""});
      }
    }
  }
  return rep;
}

bool is_principal(const Groupoid& g) {
  std::set<std::pair<Point, Point>> seen;
  for (const auto& a : g.arrows())
    if (!seen.emplace(a.source, a.target).second) return false;
  return true;
}

bool is_pair_groupoid(const Groupoid& g) {
  return is_principal(g) && g.arrow_count() == g.unit_count() * g.unit_count();
}

std::vector<std::pair<Point, Point>> orbit_edges(const Groupoid& g) {
  std::set<std::pair<Point, Point>> edges;
  for (const auto& a : g.arrows())
    if (a.source != a.target) edges.emplace(a.source, a.target);
  return {edges.begin(), edges.end()};
}

std::string to_graphviz(const Groupoid& g) {
  std::ostringstream os;
  os << "digraph orbits {\n";
  for (Point w = 0; w < g.unit_count(); ++w) os << "  " << w << ";\n";
  for (auto [s, t] : orbit_edges(g)) os << "  " << s << " -> " << t << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace groupoidal
