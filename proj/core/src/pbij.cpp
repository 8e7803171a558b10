#include "groupoidal/pbij.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "groupoidal/error.hpp"

namespace groupoidal {

GroundSet GroundSet::of_size(std::size_t n) {
  GroundSet g;
  g.size = n;
  g.validate();
  return g;
}

GroundSet GroundSet::labelled(std::vector<std::string> labels) {
  GroundSet g;
  g.size = labels.size();
  g.labels = std::move(labels);
  g.validate();
  return g;
}

std::string GroundSet::label(Point p) const {
  if (p < labels.size()) return labels[p];
  return std::to_string(p);
}

void GroundSet::validate() const {
  if (size == 0) throw StructuralError("ground set must have at least one point");
  if (!labels.empty() && labels.size() != size)
    throw StructuralError("ground set labels must match its size");
}

PartialBijection::PartialBijection(std::size_t ground_size) : image_(ground_size, kNoPoint) {}

PartialBijection PartialBijection::void_map(std::size_t n) { return PartialBijection(n); }

PartialBijection PartialBijection::identity(std::size_t n) {
  PartialBijection f(n);
  std::iota(f.image_.begin(), f.image_.end(), Point{0});
  return f;
}

PartialBijection PartialBijection::identity_on(std::size_t n, std::span<const Point> points) {
  PartialBijection f(n);
  for (Point p : points) {
    if (p >= n) throw StructuralError("point outside ground set");
    f.image_[p] = p;
  }
  return f;
}

PartialBijection PartialBijection::from_pairs(std::size_t n,
                                              std::span<const std::pair<Point, Point>> pairs) {
  PartialBijection f(n);
  std::vector<bool> hit(n, false);
  for (auto [s, t] : pairs) {
    if (s >= n || t >= n) throw StructuralError("pair point outside ground set");
    if (f.image_[s] != kNoPoint) throw StructuralError("repeated source " + std::to_string(s));
    if (hit[t]) throw StructuralError("repeated target " + std::to_string(t));
    f.image_[s] = t;
    hit[t] = true;
  }
  return f;
}

PartialBijection PartialBijection::from_images(std::vector<Point> images) {
  std::vector<bool> hit(images.size(), false);
  for (Point t : images) {
    if (t == kNoPoint) continue;
    if (t >= images.size()) throw StructuralError("image outside ground set");
    if (hit[t]) throw StructuralError("image map is not injective");
    hit[t] = true;
  }
  PartialBijection f;
  f.image_ = std::move(images);
  return f;
}

std::optional<Point> PartialBijection::operator()(Point t) const {
  Point s = image(t);
  if (s == kNoPoint) return std::nullopt;
  return s;
}

std::vector<Point> PartialBijection::domain() const {
  std::vector<Point> out;
  for (Point t = 0; t < image_.size(); ++t)
    if (image_[t] != kNoPoint) out.push_back(t);
  return out;
}

std::vector<Point> PartialBijection::range() const {
  std::vector<Point> out;
  for (Point s : image_)
    if (s != kNoPoint) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<Point, Point>> PartialBijection::pairs() const {
  std::vector<std::pair<Point, Point>> out;
  for (Point t = 0; t < image_.size(); ++t)
    if (image_[t] != kNoPoint) out.emplace_back(t, image_[t]);
  return out;
}

std::size_t PartialBijection::domain_size() const {
  return static_cast<std::size_t>(
      std::count_if(image_.begin(), image_.end(), [](Point s) { return s != kNoPoint; }));
}

bool PartialBijection::is_void() const {
  return std::all_of(image_.begin(), image_.end(), [](Point s) { return s == kNoPoint; });
}

bool PartialBijection::is_identity() const {
  for (Point t = 0; t < image_.size(); ++t)
    if (image_[t] != t) return false;
  return true;
}

bool PartialBijection::is_idempotent() const {
  for (Point t = 0; t < image_.size(); ++t)
    if (image_[t] != kNoPoint && image_[t] != t) return false;
  return true;
}

std::string PartialBijection::to_string(const GroundSet* ground) const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto [s, t] : pairs()) {
    if (!first) os << ',';
    first = false;
    if (ground)
      os << ground->label(s) << "->" << ground->label(t);
    else
      os << s << "->" << t;
  }
  os << '}';
  return os.str();
}

std::strong_ordering operator<=>(const PartialBijection& a, const PartialBijection& b) {
  if (auto c = a.image_.size() <=> b.image_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.image_.begin(), a.image_.end(),
                                                b.image_.begin(), b.image_.end());
}

std::size_t PartialBijectionHash::operator()(const PartialBijection& f) const noexcept {
  std::size_t h = f.ground_size() * 0x9e3779b97f4a7c15ULL;
  for (Point s : f.images()) h = (h ^ s) * 0x100000001b3ULL + (h >> 29);
  return h;
}

static void require_same_ground(const PartialBijection& f, const PartialBijection& g) {
  if (f.ground_size() != g.ground_size())
    throw StructuralError("ground-set mismatch: " + std::to_string(f.ground_size()) + " vs " +
                          std::to_string(g.ground_size()));
}

PartialBijection compose(const PartialBijection& f, const PartialBijection& g) {
  require_same_ground(f, g);
  std::vector<Point> img(g.ground_size(), kNoPoint);
  for (Point t = 0; t < img.size(); ++t) {
    Point s = g.image(t);
    if (s != kNoPoint) img[t] = f.image(s);
  }
  return PartialBijection::from_images(std::move(img));
}

PartialBijection star(const PartialBijection& f) {
  std::vector<Point> img(f.ground_size(), kNoPoint);
  for (auto [s, t] : f.pairs()) img[t] = s;
  return PartialBijection::from_images(std::move(img));
}

PartialBijection power(const PartialBijection& f, long n) {
  PartialBijection base = n < 0 ? star(f) : f;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  PartialBijection acc = PartialBijection::identity(f.ground_size());
  while (e > 0) {
    if (e & 1UL) acc = compose(acc, base);
    base = compose(base, base);
    e >>= 1;
  }
  return acc;
}

bool natural_leq(const PartialBijection& f, const PartialBijection& g) {
  require_same_ground(f, g);
  for (Point t = 0; t < f.ground_size(); ++t) {
    Point s = f.image(t);
    if (s != kNoPoint && g.image(t) != s) return false;
  }
  return true;
}

bool natural_leq_algebraic(const PartialBijection& f, const PartialBijection& g) {
  require_same_ground(f, g);
  PartialBijection sf = star(f);
  return compose(star(g), f) == compose(sf, f);
}

DynamicsReport classify_point_dynamics(const PartialBijection& f) {
  const std::size_t n = f.ground_size();
  DynamicsReport rep;
  std::vector<bool> on_cycle(n, false);
  std::size_t period = 1;
  std::vector<bool> seen(n, false);
  for (Point t = 0; t < n; ++t) {
    if (seen[t]) continue;
    // t lies on a cycle iff its forward orbit returns to t
    Point s = f.image(t);
    std::size_t len = 1;
    while (s != kNoPoint && s != t && len <= n) {
      s = f.image(s);
      ++len;
    }
    if (s == t) {
      Point u = t;
      do {
        on_cycle[u] = true;
        seen[u] = true;
        u = f.image(u);
      } while (u != t);
      period = std::lcm(period, len);
    }
  }
  for (Point t = 0; t < n; ++t) (on_cycle[t] ? rep.t_infinite : rep.t_finite).push_back(t);

  if (!rep.t_infinite.empty()) {
    rep.core_period = period;
    rep.core_nonconstant = period > 1;
  }
  std::size_t k = 0;
  for (Point t : rep.t_finite) {
    std::size_t steps = 0;
    Point s = t;
    while (s != kNoPoint) {
      s = f.image(s);
      ++steps;
    }
    k = std::max(k, steps);
  }
  rep.nilpotency_index = k;
  return rep;
}

std::vector<PartialBijection> all_partial_bijections(std::size_t n) {
  std::vector<PartialBijection> out;
  std::vector<Point> img(n, kNoPoint);
  std::vector<bool> used(n, false);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      out.push_back(PartialBijection::from_images(img));
      return;
    }
    img[i] = kNoPoint;
    rec(i + 1);
    for (Point t = 0; t < n; ++t) {
      if (used[t]) continue;
      used[t] = true;
      img[i] = t;
      rec(i + 1);
      used[t] = false;
    }
    img[i] = kNoPoint;
  };
  rec(0);
  return out;
}

}  // namespace groupoidal
