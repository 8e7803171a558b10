#include "groupoidal/isg.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>

#include "groupoidal/error.hpp"

namespace groupoidal {

std::size_t default_element_cap() {
  if (const char* env = std::getenv("GROUPOIDAL_MAX_ELEMENTS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return 100000;
}

InverseSemigroup InverseSemigroup::from_closed_elements(std::vector<PartialBijection> elements) {
  if (elements.empty()) throw StructuralError("empty element list");
  InverseSemigroup s;
  s.ground_size_ = elements.front().ground_size();
  s.elements_ = std::move(elements);
  const std::size_t n = s.elements_.size();
  s.index_.reserve(n);
  for (ElementId i = 0; i < n; ++i) {
    if (s.elements_[i].ground_size() != s.ground_size_) throw StructuralError("ground-set mismatch");
    if (!s.index_.emplace(s.elements_[i], i).second)
      throw StructuralError("duplicate element " + s.elements_[i].to_string());
  }
  auto lookup = [&](const PartialBijection& f) {
    auto it = s.index_.find(f);
    if (it == s.index_.end()) throw StructuralError("element set not closed: " + f.to_string());
    return it->second;
  };
  s.mult_.resize(n * n);
  s.star_.resize(n);
  for (ElementId a = 0; a < n; ++a) {
    s.star_[a] = lookup(groupoidal::star(s.elements_[a]));
    for (ElementId b = 0; b < n; ++b)
      s.mult_[a * n + b] = lookup(compose(s.elements_[a], s.elements_[b]));
  }
  s.unit_ = lookup(PartialBijection::identity(s.ground_size_));
  if (auto it = s.index_.find(PartialBijection::void_map(s.ground_size_)); it != s.index_.end())
    s.zero_ = it->second;
  return s;
}

std::optional<ElementId> InverseSemigroup::find(const PartialBijection& f) const {
  auto it = index_.find(f);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<ElementId> InverseSemigroup::basis() const {
  std::vector<ElementId> out;
  for (ElementId a = 0; a < size(); ++a)
    if (!is_zero(a)) out.push_back(a);
  return out;
}

void InverseSemigroup::set_names(std::vector<std::string> names) {
  if (names.size() != size()) throw StructuralError("name count must match element count");
  names_ = std::move(names);
}

std::string InverseSemigroup::name(ElementId a) const {
  if (a < names_.size()) return names_[a];
  return elements_[a].to_string();
}

InverseSemigroup generate_closure(std::size_t ground_size,
                                  std::span<const PartialBijection> generators,
                                  std::size_t cap) {
  if (ground_size == 0) throw StructuralError("ground set must have at least one point");
  std::vector<PartialBijection> moves;
  for (const auto& g : generators) {
    if (g.ground_size() != ground_size) throw StructuralError("generator ground-set mismatch");
    moves.push_back(g);
    moves.push_back(star(g));
  }
  std::vector<PartialBijection> elements;
  std::unordered_map<PartialBijection, ElementId, PartialBijectionHash> seen;
  std::deque<ElementId> queue;
  auto admit = [&](PartialBijection f) {
    if (seen.count(f)) return;
    if (elements.size() >= cap)
      throw GrowthError("closure exceeded cap of " + std::to_string(cap) + " elements",
                        elements.size());
    ElementId id = static_cast<ElementId>(elements.size());
    seen.emplace(f, id);
    elements.push_back(std::move(f));
    queue.push_back(id);
  };
  admit(PartialBijection::identity(ground_size));
  for (const auto& m : moves) admit(m);
  // Breadth-first by right multiplication; words in generators and their
  // stars cover the closure since the star of a word is again such a word.
  while (!queue.empty()) {
    ElementId cur = queue.front();
    queue.pop_front();
    std::vector<PartialBijection> next;
    next.reserve(moves.size());
    for (const auto& m : moves) next.push_back(compose(elements[cur], m));
    std::sort(next.begin(), next.end());
    for (auto& f : next) admit(std::move(f));
  }
  return InverseSemigroup::from_closed_elements(std::move(elements));
}

InverseSemigroup idempotent_semilattice(const InverseSemigroup& s) {
  std::vector<PartialBijection> idem;
  std::vector<std::string> names;
  for (ElementId a = 0; a < s.size(); ++a) {
    if (!s.is_idempotent(a)) continue;
    idem.push_back(s.element(a));
    names.push_back(s.name(a));
  }
  InverseSemigroup e = InverseSemigroup::from_closed_elements(std::move(idem));
  if (!s.names().empty()) e.set_names(std::move(names));
  for (ElementId a = 0; a < e.size(); ++a)
    for (ElementId b = 0; b < e.size(); ++b)
      if (e.mul(a, b) != e.mul(b, a)) throw StructuralError("idempotents do not commute");
  return e;
}

std::optional<MIndex> MaximalStructure::multiply(MIndex x, MIndex y) const {
  std::int32_t z = product[x * maximal.size() + y];
  if (z < 0) return std::nullopt;
  return static_cast<MIndex>(z);
}

std::optional<MIndex> MaximalStructure::index_of(ElementId a) const {
  auto it = std::find(maximal.begin(), maximal.end(), a);
  if (it == maximal.end()) return std::nullopt;
  return static_cast<MIndex>(it - maximal.begin());
}

const MaximalStructure& FTildeVerdict::structure() const {
  if (!is_f_tilde()) throw StructuralError("semigroup is not F~-inverse");
  return std::get<MaximalStructure>(v_);
}

const NotFTildeWitness& FTildeVerdict::witness() const {
  if (is_f_tilde()) throw StructuralError("semigroup is F~-inverse, no witness");
  return std::get<NotFTildeWitness>(v_);
}

std::vector<ElementId> maximal_elements(const InverseSemigroup& s) {
  std::vector<ElementId> out;
  for (ElementId a = 0; a < s.size(); ++a) {
    bool maximal = true;
    for (ElementId b = 0; b < s.size() && maximal; ++b)
      if (b != a && s.leq(a, b)) maximal = false;
    if (maximal) out.push_back(a);
  }
  return out;
}

FTildeVerdict classify_f_tilde(const InverseSemigroup& s) {
  MaximalStructure ms;
  ms.maximal = maximal_elements(s);
  // theta is only maximal when S = {theta}; unit is always maximal
  ms.majorant.assign(s.size(), -1);
  for (ElementId a = 0; a < s.size(); ++a) {
    if (s.is_zero(a)) continue;
    std::int32_t found = -1;
    for (MIndex x = 0; x < ms.maximal.size(); ++x) {
      if (!s.leq(a, ms.maximal[x])) continue;
      if (found >= 0)
        return FTildeVerdict(NotFTildeWitness{a, ms.maximal[found], ms.maximal[x]});
      found = static_cast<std::int32_t>(x);
    }
    ms.majorant[a] = found;
  }
  const std::size_t m = ms.maximal.size();
  ms.unit = static_cast<MIndex>(ms.majorant[s.unit()]);
  ms.product.assign(m * m, -1);
  ms.inverse.resize(m);
  for (MIndex x = 0; x < m; ++x) {
    ms.inverse[x] = static_cast<MIndex>(ms.majorant[s.star(ms.maximal[x])]);
    for (MIndex y = 0; y < m; ++y) {
      ElementId p = s.mul(ms.maximal[x], ms.maximal[y]);
      if (!s.is_zero(p)) ms.product[x * m + y] = ms.majorant[p];
    }
  }
  return FTildeVerdict(std::move(ms));
}

MaximalStructure require_f_tilde(const InverseSemigroup& s) {
  FTildeVerdict v = classify_f_tilde(s);
  if (!v.is_f_tilde()) {
    const auto& w = v.witness();
    throw StructuralError("not F~-inverse: " + s.name(w.element) + " lies below " +
                          s.name(w.first_majorant) + " and " + s.name(w.second_majorant));
  }
  return v.structure();
}

bool singly_generated_prediction(const PartialBijection& beta) {
  DynamicsReport d = classify_point_dynamics(beta);
  bool fails = !d.t_finite.empty() && !d.t_infinite.empty() && d.core_periodic &&
               d.core_nonconstant && d.transient_nilpotent;
  return !fails;
}

bool singly_generated_exact(const PartialBijection& beta) {
  DynamicsReport d = classify_point_dynamics(beta);
  if (d.t_finite.empty() || d.t_infinite.empty()) return true;
  return 2 * d.nilpotency_index - 1 <= d.core_period;
}

std::optional<MIndex> partial_product(const MaximalStructure& ms, MIndex x, MIndex y) {
  return ms.multiply(x, y);
}

std::vector<LawViolation> check_partial_group_laws(const InverseSemigroup& s,
                                                   const MaximalStructure& ms) {
  std::vector<LawViolation> out;
  const MIndex m = static_cast<MIndex>(ms.size());
  const MIndex e = ms.unit;
  for (MIndex x = 0; x < m; ++x) {
    if (ms.multiply(e, x) != x || ms.multiply(x, e) != x) out.push_back({"unit", {x}});
    MIndex xi = ms.inverse[x];
    if (ms.inverse[xi] != x) out.push_back({"involution", {x}});
    if (ms.multiply(xi, x) != e || ms.multiply(x, xi) != e) out.push_back({"inverse", {x}});
  }
  for (MIndex x = 0; x < m; ++x) {
    for (MIndex y = 0; y < m; ++y) {
      auto xy = ms.multiply(x, y);
      if (xy) {
        MIndex z = *xy;
        if (ms.multiply(ms.inverse[x], z) != y || ms.multiply(z, ms.inverse[y]) != x)
          out.push_back({"division", {x, y}});
        if (ms.multiply(ms.inverse[y], ms.inverse[x]) != ms.inverse[z])
          out.push_back({"inverse of product", {x, y}});
      }
      for (MIndex y2 = 0; y2 < m; ++y2) {
        if (y2 == y) continue;
        auto xy2 = ms.multiply(x, y2);
        if (xy && xy2 && *xy == *xy2) out.push_back({"left cancellation", {x, y, y2}});
        auto yx = ms.multiply(y, x);
        auto y2x = ms.multiply(y2, x);
        if (yx && y2x && *yx == *y2x) out.push_back({"right cancellation", {y, y2, x}});
      }
      if (!xy) continue;
      ElementId bxy = s.mul(ms.maximal[x], ms.maximal[y]);
      for (MIndex z = 0; z < m; ++z) {
        // M^(3): beta_x beta_y beta_z != theta
        if (s.is_zero(s.mul(bxy, ms.maximal[z]))) continue;
        auto yz = ms.multiply(y, z);
        auto l = ms.multiply(*xy, z);
        auto r = yz ? ms.multiply(x, *yz) : std::nullopt;
        if (!l || !r || *l != *r) out.push_back({"partial associativity", {x, y, z}});
      }
    }
  }
  return out;
}

std::vector<Character> semilattice_characters(const InverseSemigroup& e) {
  for (ElementId a = 0; a < e.size(); ++a)
    if (!e.is_idempotent(a)) throw StructuralError("not a semilattice: " + e.name(a));
  std::vector<Character> out;
  for (ElementId g = 0; g < e.size(); ++g) {
    if (e.is_zero(g)) continue;
    Character c;
    c.principal = g;
    c.values.resize(e.size());
    for (ElementId h = 0; h < e.size(); ++h) c.values[h] = e.leq(g, h);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace groupoidal
