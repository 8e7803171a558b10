#include "groupoidal/toeplitz.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

#include "groupoidal/error.hpp"
#include "groupoidal/isg.hpp"
#include "groupoidal/star_algebra.hpp"

namespace groupoidal {

namespace {

std::int64_t dot(const Vec& a, const Vec& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::int64_t max_norm(const Vec& v) {
  std::int64_t m = 0;
  for (auto c : v) m = std::max(m, c < 0 ? -c : c);
  return m;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  // b > 0
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

bool geq(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

// box points ordered by max-norm, then lexicographically
std::vector<Vec> by_norm(std::size_t d, std::int64_t radius) {
  auto pts = box_points(d, radius);
  std::stable_sort(pts.begin(), pts.end(),
                   [](const Vec& a, const Vec& b) { return max_norm(a) < max_norm(b); });
  return pts;
}

// pairs of opposite rows, which pin a linear functional to a single value on P
std::vector<std::pair<std::size_t, std::size_t>> opposite_rows(const ConePair& cp) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < cp.constraints.size(); ++i)
    for (std::size_t j = i + 1; j < cp.constraints.size(); ++j)
      if (cp.constraints[i] == neg(cp.constraints[j])) out.emplace_back(i, j);
  return out;
}

Vec bound_of(const ConePair& cp, const std::vector<Vec>& markers) {
  Vec b(cp.constraints.size(), 0);
  bool first = true;
  for (const auto& c : markers) {
    Vec ac = cp.apply(c);
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = first ? -ac[i] : std::max(b[i], -ac[i]);
    first = false;
  }
  return b;
}

// {t : A t >= b}: a point, nullopt when certainly empty, throws when undecided
std::optional<Vec> polyhedron_point(const ConePair& cp, const Vec& b, const SearchWindow& w) {
  for (auto [i, j] : opposite_rows(cp))
    if (b[i] + b[j] > 0) return std::nullopt;
  if (auto p = cp.interior_point()) {
    Vec ap = cp.apply(*p);
    std::int64_t lambda = 0;
    for (std::size_t i = 0; i < b.size(); ++i) lambda = std::max(lambda, ceil_div(b[i], ap[i]));
    Vec t(cp.d);
    for (std::size_t k = 0; k < cp.d; ++k) t[k] = lambda * (*p)[k];
    return t;
  }
  for (const auto& t : by_norm(cp.d, w.radius))
    if (geq(cp.apply(t), b)) return t;
  throw UndecidedError("domain emptiness undecided at window radius " + std::to_string(w.radius));
}

std::vector<Vec> normalize_markers(const ConePair& cp, const Vec& x, std::vector<Vec> markers) {
  markers.push_back(Vec(cp.d, 0));
  markers.push_back(x);
  std::sort(markers.begin(), markers.end());
  markers.erase(std::unique(markers.begin(), markers.end()), markers.end());
  const Vec zero(cp.d, 0);
  std::vector<bool> keep(markers.size(), true);
  for (std::size_t k = 0; k < markers.size(); ++k) {
    if (markers[k] == zero || markers[k] == x) continue;
    std::vector<Vec> others;
    for (std::size_t j = 0; j < markers.size(); ++j)
      if (j != k && keep[j]) others.push_back(markers[j]);
    Vec rest = bound_of(cp, others);
    Vec ac = cp.apply(markers[k]);
    bool implied = true;
    for (std::size_t i = 0; i < ac.size() && implied; ++i) implied = -ac[i] <= rest[i];
    if (implied) keep[k] = false;
  }
  std::vector<Vec> out;
  for (std::size_t k = 0; k < markers.size(); ++k)
    if (keep[k]) out.push_back(markers[k]);
  return out;
}

std::vector<Vec> minimal_upper_bounds(const ConePair& cp, const Vec& s, const Vec& t,
                                      std::int64_t radius) {
  std::vector<Vec> ub;
  for (const auto& u : box_points(cp.d, radius))
    if (cp.in_cone(sub(u, s)) && cp.in_cone(sub(u, t))) ub.push_back(u);
  std::vector<Vec> minimal;
  for (const auto& u : ub) {
    bool is_min = true;
    for (const auto& v : ub)
      if (v != u && cp.in_cone(sub(u, v))) {
        is_min = false;
        break;
      }
    if (is_min) minimal.push_back(u);
  }
  return minimal;
}

std::optional<Vec> least_upper_bound(const ConePair& cp, const Vec& s, const Vec& t,
                                     std::int64_t radius) {
  auto m = minimal_upper_bounds(cp, s, t, radius);
  if (m.size() == 1) return m.front();
  if (m.empty()) return std::nullopt;
  throw StructuralError("no least upper bound for " + vec_string(s) + ", " + vec_string(t));
}

}  // namespace

ConePair ConePair::naturals(std::size_t d) {
  ConePair cp;
  cp.d = d;
  for (std::size_t i = 0; i < d; ++i) {
    Vec row(d, 0);
    row[i] = 1;
    cp.constraints.push_back(row);
  }
  return cp;
}

ConePair ConePair::parity_cone() {
  ConePair cp;
  cp.d = 2;
  cp.constraints = {{0, 1}, {2, -1}};
  return cp;
}

void ConePair::validate() const {
  if (d == 0) throw StructuralError("cone dimension must be positive");
  for (const auto& row : constraints)
    if (row.size() != d) throw StructuralError("constraint row has wrong length");
}

Vec ConePair::apply(const Vec& t) const {
  Vec out(constraints.size());
  for (std::size_t i = 0; i < constraints.size(); ++i) out[i] = dot(constraints[i], t);
  return out;
}

bool ConePair::in_cone(const Vec& t) const {
  for (const auto& row : constraints)
    if (dot(row, t) < 0) return false;
  return true;
}

std::optional<Vec> ConePair::interior_point() const {
  for (const auto& t : by_norm(d, 4)) {
    bool ok = true;
    for (const auto& row : constraints)
      if (dot(row, t) < 1) {
        ok = false;
        break;
      }
    if (ok) return t;
  }
  return std::nullopt;
}

std::string ConePair::to_string() const {
  std::ostringstream os;
  os << "{t in Z^" << d << " :";
  for (std::size_t i = 0; i < constraints.size(); ++i)
    os << (i ? ", " : " ") << vec_string(constraints[i]) << ".t >= 0";
  os << "}";
  return os.str();
}

Vec add(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec neg(const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

std::string vec_string(const Vec& v) {
  if (v.size() == 1) return std::to_string(v[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::vector<Vec> box_points(std::size_t d, std::int64_t radius) {
  std::vector<Vec> out;
  Vec cur(d, -radius);
  while (true) {
    out.push_back(cur);
    std::size_t k = d;
    while (k > 0) {
      --k;
      if (cur[k] < radius) {
        ++cur[k];
        break;
      }
      cur[k] = -radius;
      if (k == 0) return out;
    }
  }
}

ToeplitzElement ToeplitzElement::zero(std::size_t d) {
  ToeplitzElement e;
  e.x_ = Vec(d, 0);
  return e;
}

ToeplitzElement ToeplitzElement::make(const ConePair& cp, Vec x, std::vector<Vec> markers) {
  if (x.size() != cp.d) throw StructuralError("translation has wrong dimension");
  for (const auto& c : markers)
    if (c.size() != cp.d) throw StructuralError("marker has wrong dimension");
  ToeplitzElement e;
  e.zero_ = false;
  e.markers_ = normalize_markers(cp, x, std::move(markers));
  e.bound_ = bound_of(cp, e.markers_);
  e.x_ = std::move(x);
  return e;
}

bool ToeplitzElement::in_domain(const ConePair& cp, const Vec& t) const {
  return !zero_ && geq(cp.apply(t), bound_);
}

std::string ToeplitzElement::to_string() const {
  if (zero_) return "0";
  std::string s = "(" + vec_string(x_) + ", {";
  for (std::size_t i = 0; i < markers_.size(); ++i) s += (i ? "," : "") + vec_string(markers_[i]);
  return s + "})";
}

bool in_difference_set(const ConePair& cp, const Vec& x, const SearchWindow& w) {
  Vec b = bound_of(cp, {Vec(cp.d, 0), x});
  return polyhedron_point(cp, b, w).has_value();
}

std::optional<Vec> domain_point(const ConePair& cp, const ToeplitzElement& a, const SearchWindow& w) {
  if (a.is_zero()) return std::nullopt;
  return polyhedron_point(cp, a.bound(), w);
}

ToeplitzElement te_beta(const ConePair& cp, const Vec& x, const SearchWindow& w) {
  auto e = ToeplitzElement::make(cp, x, {});
  return domain_point(cp, e, w) ? e : ToeplitzElement::zero(cp.d);
}

ToeplitzElement te_mul(const ConePair& cp, const ToeplitzElement& a, const ToeplitzElement& b,
                       const SearchWindow& w) {
  if (a.is_zero() || b.is_zero()) return ToeplitzElement::zero(cp.d);
  const Vec& y = b.translation();
  std::vector<Vec> markers = b.markers();
  for (const auto& c : a.markers()) markers.push_back(add(c, y));
  auto e = ToeplitzElement::make(cp, add(a.translation(), y), std::move(markers));
  return domain_point(cp, e, w) ? e : ToeplitzElement::zero(cp.d);
}

ToeplitzElement te_star(const ConePair& cp, const ToeplitzElement& a) {
  if (a.is_zero()) return a;
  const Vec& x = a.translation();
  std::vector<Vec> markers;
  for (const auto& c : a.markers()) markers.push_back(sub(c, x));
  return ToeplitzElement::make(cp, neg(x), std::move(markers));
}

ToeplitzElement te_word(const ConePair& cp, const std::vector<Vec>& xs, const SearchWindow& w) {
  auto out = ToeplitzElement::make(cp, Vec(cp.d, 0), {});
  for (const auto& x : xs) out = te_mul(cp, out, te_beta(cp, x, w), w);
  return out;
}

EqualityVerdict te_equal(const ConePair& cp, const ToeplitzElement& a, const ToeplitzElement& b,
                         const SearchWindow& w) {
  if (a.is_zero() || b.is_zero()) return {a.is_zero() && b.is_zero(), true};
  if (a.translation() != b.translation()) return {false, true};
  if (a.bound() == b.bound()) return {true, true};
  for (const auto& t : box_points(cp.d, w.radius))
    if (a.in_domain(cp, t) != b.in_domain(cp, t)) return {false, true};
  return {true, false};
}

bool te_leq(const ConePair& cp, const ToeplitzElement& a, const ToeplitzElement& b,
            const SearchWindow& w) {
  if (a.is_zero()) return true;
  if (b.is_zero() || a.translation() != b.translation()) return false;
  if (geq(a.bound(), b.bound())) return true;
  for (const auto& t : box_points(cp.d, w.radius))
    if (a.in_domain(cp, t) && !b.in_domain(cp, t)) return false;
  return true;
}

Vec nonvoid_witness(const ConePair& cp, const std::vector<Vec>& xs, const SearchWindow& w) {
  Vec zero(cp.d, 0);
  if (xs.empty()) return zero;
  // y = s - t with s, t in P
  auto split = [&](const Vec& y) -> std::pair<Vec, Vec> {
    if (cp.in_cone(y)) return {y, zero};
    if (auto p = cp.interior_point()) {
      Vec ay = cp.apply(y), ap = cp.apply(*p);
      std::int64_t lambda = 0;
      for (std::size_t i = 0; i < ay.size(); ++i) lambda = std::max(lambda, ceil_div(-ay[i], ap[i]));
      Vec t(cp.d);
      for (std::size_t k = 0; k < cp.d; ++k) t[k] = lambda * (*p)[k];
      return {add(y, t), t};
    }
    for (const auto& t : by_norm(cp.d, w.radius))
      if (cp.in_cone(t) && cp.in_cone(add(y, t))) return {add(y, t), t};
    throw UndecidedError("no decomposition of " + vec_string(y) + " in P - P at window radius " +
                         std::to_string(w.radius));
  };
  const std::size_t n = xs.size();
  Vec t = zero;
  Vec s_next;
  for (std::size_t j = n; j-- > 0;) {
    Vec y = j + 1 == n ? xs[j] : add(xs[j], s_next);
    auto [s, tj] = split(y);
    t = add(t, tj);
    s_next = s;
  }
  // every suffix sum shifted by t must land in P
  Vec suffix = zero;
  if (!cp.in_cone(t)) throw StructuralError("witness " + vec_string(t) + " is not in P");
  for (std::size_t j = n; j-- > 0;) {
    suffix = add(suffix, xs[j]);
    if (!cp.in_cone(add(suffix, t)))
      throw StructuralError("witness " + vec_string(t) + " fails suffix " + vec_string(suffix));
  }
  return t;
}

Vec unique_majorant(const ConePair& cp, const ToeplitzElement& a, const SearchWindow& w) {
  if (a.is_zero()) throw StructuralError("zero has no majorant");
  auto t = domain_point(cp, a, w);
  if (!t) throw UndecidedError("empty domain at window");
  Vec image = add(a.translation(), *t);
  if (!cp.in_cone(image)) throw StructuralError("image of domain point leaves P");
  Vec x = sub(image, *t);
  if (x != a.translation()) throw StructuralError("majorant cross-check failed");
  return x;
}

std::vector<Vec> WindowBox::points() const {
  std::vector<Vec> out;
  Vec cur(d, lo);
  if (hi < lo) return out;
  while (true) {
    out.push_back(cur);
    std::size_t k = d;
    while (k > 0) {
      --k;
      if (cur[k] < hi) {
        ++cur[k];
        break;
      }
      cur[k] = lo;
      if (k == 0) return out;
    }
  }
}

bool WindowBox::contains(const Vec& v) const {
  if (v.size() != d) return false;
  return std::all_of(v.begin(), v.end(), [&](std::int64_t c) { return c >= lo && c <= hi; });
}

std::string pattern_string(const WindowBox& box, const WindowPattern& p) {
  auto pts = box.points();
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (p[i]) {
      s += (first ? "" : ",") + vec_string(pts[i]);
      first = false;
    }
  return s + "}";
}

WindowPattern dense_pattern(const ConePair& cp, const WindowBox& box, const Vec& t) {
  auto pts = box.points();
  WindowPattern p(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) p[i] = cp.in_cone(sub(t, pts[i]));
  return p;
}

namespace {

std::int64_t box_extent(const WindowBox& box) {
  return std::max(box.lo < 0 ? -box.lo : box.lo, box.hi < 0 ? -box.hi : box.hi);
}

std::map<WindowPattern, Vec> scan_patterns(const ConePair& cp, const WindowBox& box,
                                           std::int64_t radius) {
  std::map<WindowPattern, Vec> out;
  for (const auto& t : by_norm(cp.d, radius))
    if (cp.in_cone(t)) out.try_emplace(dense_pattern(cp, box, t), t);
  return out;
}

}  // namespace

OmegaPatterns omega_patterns(const ConePair& cp, const WindowBox& box, std::int64_t scan_radius) {
  cp.validate();
  if (box.d != cp.d) throw StructuralError("window dimension differs from the cone");
  if (scan_radius < box_extent(box)) throw StructuralError("scan radius smaller than the window");
  OmegaPatterns out;
  out.scan_radius = scan_radius;
  out.representative = scan_patterns(cp, box, scan_radius);
  for (const auto& [p, t] : out.representative) out.patterns.insert(p);
  auto wider = scan_patterns(cp, box, 2 * scan_radius);
  out.stabilized = wider.size() == out.representative.size();
  return out;
}

WienerHopfReport wiener_hopf_groupoid(const ConePair& cp, const WindowBox& box,
                                      const std::vector<ToeplitzElement>& elements,
                                      std::int64_t scan_radius) {
  cp.validate();
  if (scan_radius < box_extent(box)) throw StructuralError("scan radius smaller than the window");
  auto pts = box.points();
  std::map<Vec, std::size_t> window_index;
  for (std::size_t i = 0; i < pts.size(); ++i) window_index[pts[i]] = i;

  std::vector<Vec> scanned;
  std::map<WindowPattern, std::vector<Vec>> by_pattern;
  std::map<Vec, WindowPattern> trace;
  for (const auto& t : by_norm(cp.d, scan_radius))
    if (cp.in_cone(t)) {
      scanned.push_back(t);
      trace[t] = dense_pattern(cp, box, t);
      by_pattern[trace[t]].push_back(t);
    }

  WienerHopfReport rep;
  for (const auto& t : scanned)
    if (by_pattern[trace[t]].size() == 1) rep.units.push_back(t);
  if (rep.units.empty())
    throw WindowTooSmallError("window " + std::to_string(box.lo) + ".." + std::to_string(box.hi) +
                              " separates no point of P");
  std::sort(rep.units.begin(), rep.units.end());
  std::map<Vec, Point> unit_index;
  for (std::size_t i = 0; i < rep.units.size(); ++i) {
    unit_index[rep.units[i]] = static_cast<Point>(i);
    rep.unit_patterns.push_back(trace[rep.units[i]]);
  }

  std::set<Vec> label_set;
  for (const auto& t : rep.units)
    for (const auto& u : rep.units) label_set.insert(sub(u, t));
  std::vector<Vec> labels(label_set.begin(), label_set.end());
  std::map<Vec, std::int32_t> label_index;
  for (std::size_t i = 0; i < labels.size(); ++i) label_index[labels[i]] = static_cast<std::int32_t>(i);
  const std::size_t m = labels.size();
  std::vector<std::int32_t> product(m * m, -1);
  std::vector<Label> inverse(m);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) {
    names.push_back(vec_string(labels[i]));
    inverse[i] = static_cast<Label>(label_index.at(neg(labels[i])));
    for (std::size_t j = 0; j < m; ++j) {
      auto it = label_index.find(add(labels[i], labels[j]));
      if (it != label_index.end()) product[i * m + j] = it->second;
    }
  }
  Label unit = static_cast<Label>(label_index.at(Vec(cp.d, 0)));
  auto ls = LabelStructure::from_partial_table(std::move(product), std::move(inverse), unit,
                                               std::move(names));

  // (x, t - P) with x in (t - P)^-1, i.e. x + t in P; restricted to the units
  const std::size_t n = rep.units.size();
  std::vector<PartialBijection> maps;
  for (const auto& x : labels) {
    std::vector<std::pair<Point, Point>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
      Vec r = add(rep.units[i], x);
      if (!cp.in_cone(r)) continue;
      auto it = unit_index.find(r);
      if (it != unit_index.end()) pairs.emplace_back(static_cast<Point>(i), it->second);
    }
    maps.push_back(PartialBijection::from_pairs(n, pairs));
  }
  rep.groupoid.emplace(std::move(ls), n, std::move(maps));
  rep.axioms = validate_groupoid(*rep.groupoid);
  rep.principal = is_principal(*rep.groupoid);
  rep.pair_groupoid = is_pair_groupoid(*rep.groupoid);

  for (const auto& a : elements) {
    if (a.is_zero()) continue;
    std::vector<std::size_t> marker_bits;
    for (const auto& c : a.markers()) {
      auto it = window_index.find(neg(c));
      if (it == window_index.end())
        throw WindowTooSmallError("marker " + vec_string(c) + " of " + a.to_string() +
                                  " lies outside the window");
      marker_bits.push_back(it->second);
    }
    for (const auto& t : scanned) {
      const auto& p = trace[t];
      bool in_marker_domain =
          std::all_of(marker_bits.begin(), marker_bits.end(), [&](std::size_t i) { return p[i]; });
      if (in_marker_domain != a.in_domain(cp, t)) {
        rep.domains_consistent = false;
        rep.failures.push_back("domain of " + a.to_string() + " disagrees at " + vec_string(t));
        break;
      }
    }
    const Vec& x = a.translation();
    for (const auto& t : scanned) {
      if (!a.in_domain(cp, t)) continue;
      auto it = trace.find(add(t, x));
      if (it == trace.end()) continue;
      const auto& src = trace[t];
      const auto& dst = it->second;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        auto from = window_index.find(sub(pts[i], x));
        if (from == window_index.end()) continue;
        if (dst[i] != src[from->second]) {
          rep.translation_consistent = false;
          rep.failures.push_back("translation by " + vec_string(x) + " breaks at " + vec_string(t));
          break;
        }
      }
      if (!rep.translation_consistent) break;
    }
  }
  if (!rep.axioms.ok()) rep.failures.push_back("groupoid axioms: " + rep.axioms.summary());
  return rep;
}

CharacterComparison character_comparison(const ConePair& cp, std::size_t word_length,
                                         const WindowBox& box, std::int64_t letter_radius,
                                         std::int64_t scan_radius) {
  cp.validate();
  if (box.d != cp.d) throw StructuralError("window dimension differs from the cone");
  const std::int64_t extent =
      box_extent(box) + static_cast<std::int64_t>(word_length) * letter_radius;
  if (scan_radius <= 0) scan_radius = 3 * extent + 2;
  SearchWindow w{scan_radius};

  CharacterComparison out;
  out.word_length = word_length;
  auto omega = omega_patterns(cp, box, scan_radius);
  out.omega_pattern_count = omega.patterns.size();
  out.omega_stabilized = omega.stabilized;
  auto pts = box.points();

  std::vector<Vec> letters;
  for (const auto& x : box_points(cp.d, letter_radius))
    if (max_norm(x) > 0 && in_difference_set(cp, x, w)) letters.push_back(x);

  const auto scan = by_norm(cp.d, scan_radius);
  const std::size_t rows = cp.constraints.size();
  std::set<WindowPattern> bpatterns;

  std::vector<std::size_t> idx;
  auto visit = [&]() {
    BSetResult r;
    for (auto i : idx) r.word.push_back(letters[i]);
    // D = P cap (-x_1 + P) cap ... = {s : A s >= b}
    r.lower.assign(rows, 0);
    for (const auto& x : r.word) {
      Vec ax = cp.apply(x);
      for (std::size_t j = 0; j < rows; ++j) r.lower[j] = std::max(r.lower[j], -ax[j]);
    }
    // x + P contains D iff A x <= mu, mu_j = min over D of (A s)_j
    r.minimum.assign(rows, 0);
    for (std::size_t j = 0; j < rows; ++j) {
      std::optional<std::int64_t> best;
      for (const auto& s : scan) {
        Vec as = cp.apply(s);
        if (!geq(as, r.lower)) continue;
        if (!best || as[j] < *best) best = as[j];
        if (*best == r.lower[j]) break;
      }
      if (!best) {
        r.decided = false;
        r.minimum[j] = r.lower[j];
      } else {
        r.minimum[j] = *best;
        if (*best != r.lower[j]) r.decided = false;
      }
    }
    r.pattern.assign(pts.size(), false);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      Vec ax = cp.apply(pts[i]);
      bool below = true;
      for (std::size_t j = 0; j < rows && below; ++j) below = ax[j] <= r.minimum[j];
      if (below) {
        try {
          r.pattern[i] = in_difference_set(cp, pts[i], w);
        } catch (const UndecidedError&) {
          r.decided = false;
        }
      }
    }
    r.matched = omega.patterns.count(r.pattern) > 0;
    bpatterns.insert(r.pattern);
    if (!r.decided) {
      ++out.undecided;
    } else if (!r.matched) {
      ++out.unmatched;
      ++out.unmatched_by_length[r.word.size()];
      if (!out.witness) out.witness = r;
    }
    out.bsets.push_back(std::move(r));
  };
  // multisets of letters, by size
  for (std::size_t len = 0; len <= word_length; ++len) {
    if (len > 0 && letters.empty()) break;
    idx.assign(len, 0);
    while (true) {
      visit();
      std::size_t k = len;
      while (k > 0 && idx[k - 1] + 1 == letters.size()) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < len; ++j) idx[j] = idx[k - 1];
    }
  }
  out.distinct_bpatterns = bpatterns.size();

  // distinct patterns differ at some w with beta_{-w} nonzero; its domain
  // {A : w in A} separates them
  std::vector<WindowPattern> ps(omega.patterns.begin(), omega.patterns.end());
  std::vector<bool> separating(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    try {
      separating[i] = in_difference_set(cp, neg(pts[i]), w);
    } catch (const UndecidedError&) {
      separating[i] = false;
    }
  }
  out.separation_verified = true;
  for (std::size_t a = 0; a < ps.size() && out.separation_verified; ++a)
    for (std::size_t b = a + 1; b < ps.size(); ++b) {
      bool sep = false;
      for (std::size_t i = 0; i < pts.size() && !sep; ++i) sep = separating[i] && ps[a][i] != ps[b][i];
      if (!sep) {
        out.separation_verified = false;
        break;
      }
    }
  return out;
}

QuasiLatticeReport quasi_lattice_check(const ConePair& cp, std::int64_t sample_radius,
                                       std::int64_t scan_radius) {
  cp.validate();
  QuasiLatticeReport rep;
  rep.pointed = true;
  for (const auto& t : box_points(cp.d, scan_radius))
    if (max_norm(t) > 0 && cp.in_cone(t) && cp.in_cone(neg(t))) {
      rep.pointed = false;
      break;
    }
  std::vector<Vec> sample;
  for (const auto& t : box_points(cp.d, sample_radius))
    if (cp.in_cone(t)) sample.push_back(t);
  rep.quasi_lattice = rep.pointed;
  for (std::size_t i = 0; i < sample.size(); ++i)
    for (std::size_t j = i; j < sample.size(); ++j) {
      ++rep.pairs_checked;
      auto m = minimal_upper_bounds(cp, sample[i], sample[j], scan_radius);
      if (m.size() == 1) {
        rep.sigma_pairs[{sample[i], sample[j]}] = m.front();
      } else if (m.size() > 1) {
        rep.quasi_lattice = false;
        if (!rep.counterexample) {
          rep.counterexample = std::make_pair(sample[i], sample[j]);
          rep.counterexample_minimal_bounds = m;
        }
      }
    }
  const Vec zero(cp.d, 0);
  for (const auto& x : box_points(cp.d, sample_radius)) {
    auto m = minimal_upper_bounds(cp, zero, x, scan_radius);
    if (m.size() == 1) {
      rep.sigma_elements[x] = m.front();
    } else if (m.size() > 1) {
      rep.quasi_lattice = false;
      if (!rep.counterexample) {
        rep.counterexample = std::make_pair(zero, x);
        rep.counterexample_minimal_bounds = m;
      }
    }
  }
  return rep;
}

PairElement qlo_multiply(const ConePair& cp, const PairElement& a, const PairElement& b,
                         std::int64_t scan_radius) {
  if (a.zero || b.zero) return {true, {}, {}};
  auto sigma = least_upper_bound(cp, a.t, b.s, scan_radius);
  if (!sigma) return {true, {}, {}};
  return {false, add(sub(a.s, a.t), *sigma), add(sub(b.t, b.s), *sigma)};
}

QloReport qlo_presentation(const ConePair& cp, std::int64_t pair_radius, std::size_t word_length,
                           std::int64_t scan_radius) {
  QloReport rep;
  auto ql = quasi_lattice_check(cp, pair_radius, scan_radius);
  rep.quasi_lattice = ql.quasi_lattice;
  if (!rep.quasi_lattice) {
    rep.failures.push_back("not quasi-lattice ordered on the window");
    return rep;
  }
  SearchWindow w{scan_radius};
  std::vector<Vec> p;
  for (const auto& t : box_points(cp.d, pair_radius))
    if (cp.in_cone(t)) p.push_back(t);
  std::vector<PairElement> elems;
  for (const auto& s : p)
    for (const auto& t : p) elems.push_back({false, s, t});
  rep.elements = elems.size();

  auto to_te = [&](const PairElement& e) {
    if (e.zero) return ToeplitzElement::zero(cp.d);
    return te_mul(cp, te_beta(cp, e.s, w), te_star(cp, te_beta(cp, e.t, w)), w);
  };
  std::vector<ToeplitzElement> images;
  for (const auto& e : elems) images.push_back(to_te(e));

  for (std::size_t i = 0; i < elems.size(); ++i) {
    PairElement st{false, elems[i].t, elems[i].s};
    if (!te_equal(cp, to_te(st), te_star(cp, images[i]), w).equal) {
      rep.star_preserving = false;
      rep.failures.push_back("star fails at (" + vec_string(elems[i].s) + "," + vec_string(elems[i].t) + ")");
    }
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (te_equal(cp, images[i], images[j], w).equal) {
        rep.injective = false;
        rep.failures.push_back("pairs " + std::to_string(i) + " and " + std::to_string(j) +
                               " have the same image");
      }
  }

  std::vector<std::size_t> idx;
  for (std::size_t len = 2; len <= word_length; ++len) {
    idx.assign(len, 0);
    while (true) {
      PairElement acc = elems[idx[0]];
      ToeplitzElement te = images[idx[0]];
      for (std::size_t k = 1; k < len; ++k) {
        acc = qlo_multiply(cp, acc, elems[idx[k]], scan_radius);
        te = te_mul(cp, te, images[idx[k]], w);
      }
      ++rep.products_checked;
      if (!te_equal(cp, to_te(acc), te, w).equal) {
        rep.homomorphism = false;
        if (rep.failures.size() < 16) {
          std::string word;
          for (auto i : idx) word += "(" + vec_string(elems[i].s) + "," + vec_string(elems[i].t) + ")";
          rep.failures.push_back("product mismatch on " + word);
        }
      }
      std::size_t k = len;
      while (k > 0 && idx[k - 1] + 1 == elems.size()) idx[--k] = 0;
      if (k == 0) break;
      ++idx[k - 1];
    }
  }
  return rep;
}

ObviousActionReport obvious_action_groupoid(const ConePair& cp, std::int64_t truncation,
                                            std::int64_t translation_radius) {
  cp.validate();
  if (truncation < 1) throw StructuralError("truncation must be positive");
  ObviousActionReport rep;
  std::vector<Vec> pts;
  for (const auto& t : box_points(cp.d, truncation - 1))
    if (cp.in_cone(t)) pts.push_back(t);
  std::map<Vec, Point> index;
  for (std::size_t i = 0; i < pts.size(); ++i) index[pts[i]] = static_cast<Point>(i);
  rep.points = pts.size();

  std::vector<PartialBijection> gens;
  for (const auto& x : box_points(cp.d, translation_radius)) {
    std::vector<std::pair<Point, Point>> pairs;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      auto it = index.find(add(pts[i], x));
      if (it != index.end()) pairs.emplace_back(static_cast<Point>(i), it->second);
    }
    gens.push_back(PartialBijection::from_pairs(pts.size(), pairs));
  }
  auto s = std::make_shared<const InverseSemigroup>(generate_closure(pts.size(), gens));
  rep.semigroup_size = s->size();
  auto verdict = classify_f_tilde(*s);
  if (!verdict.is_f_tilde()) throw StructuralError("truncated translations do not form an F~ semigroup");
  Action act = Action::tautological(s);
  Groupoid g = build_groupoid(act, verdict.structure());
  rep.arrows = g.arrow_count();
  rep.algebra_dimension = g.arrow_count();
  rep.axioms = validate_groupoid(g);
  rep.pair_groupoid = is_pair_groupoid(g);

  // e_{ij} e_{kl} = [j == k] e_{il}
  rep.full_matrix_units = rep.pair_groupoid;
  for (ArrowId a = 0; a < g.arrow_count() && rep.full_matrix_units; ++a)
    for (ArrowId b = 0; b < g.arrow_count(); ++b) {
      AlgebraElement fa{{a, QComplex(1)}}, fb{{b, QComplex(1)}};
      AlgebraElement expected;
      if (g.arrow(a).source == g.arrow(b).target) {
        for (ArrowId c = 0; c < g.arrow_count(); ++c)
          if (g.arrow(c).target == g.arrow(a).target && g.arrow(c).source == g.arrow(b).source)
            expected[c] = QComplex(1);
      }
      if (convolve(g, fa, fb) != expected) {
        rep.full_matrix_units = false;
        break;
      }
    }
  return rep;
}

}  // namespace groupoidal
