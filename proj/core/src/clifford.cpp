#include "groupoidal/clifford.hpp"

#include <algorithm>
#include <set>

#include "groupoidal/error.hpp"

namespace groupoidal {

GroupTable cyclic_group(std::uint32_t n) {
  if (n == 0) throw StructuralError("cyclic group of order 0");
  GroupTable t(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

std::uint32_t validate_group(const GroupTable& g) {
  const std::size_t n = g.size();
  if (n == 0) throw StructuralError("empty group table");
  for (const auto& row : g) {
    if (row.size() != n) throw StructuralError("group table is not square");
    for (auto v : row)
      if (v >= n) throw StructuralError("group table entry out of range");
  }
  std::optional<std::uint32_t> e;
  for (std::uint32_t x = 0; x < n && !e; ++x) {
    bool ok = true;
    for (std::uint32_t y = 0; y < n && ok; ++y) ok = g[x][y] == y && g[y][x] == y;
    if (ok) e = x;
  }
  if (!e) throw StructuralError("group table has no unit");
  for (std::uint32_t x = 0; x < n; ++x) {
    bool has = false;
    for (std::uint32_t y = 0; y < n && !has; ++y) has = g[x][y] == *e && g[y][x] == *e;
    if (!has) throw StructuralError("element " + std::to_string(x) + " has no inverse");
    for (std::uint32_t y = 0; y < n; ++y)
      for (std::uint32_t z = 0; z < n; ++z)
        if (g[g[x][y]][z] != g[x][g[y][z]]) throw StructuralError("group table is not associative");
  }
  return *e;
}

bool is_subgroup(const GroupTable& g, const std::vector<std::uint32_t>& h) {
  if (h.empty()) return false;
  std::set<std::uint32_t> hs(h.begin(), h.end());
  for (auto x : hs)
    if (x >= g.size()) return false;
  for (auto x : hs)
    for (auto y : hs)
      if (!hs.count(g[x][y])) return false;
  // finite and closed under products
  return true;
}

InverseSemigroup vagner_preston(const SemigroupTable& t) {
  const std::size_t n = t.size();
  if (n == 0) throw StructuralError("empty semigroup table");
  if (t.mul.size() != n) throw StructuralError("multiplication table size mismatch");
  std::vector<PartialBijection> images;
  for (std::uint32_t a = 0; a < n; ++a) {
    std::uint32_t e = t.mul[t.star[a]][a];
    std::vector<std::pair<Point, Point>> pairs;
    for (std::uint32_t s = 0; s < n; ++s)
      if (t.mul[e][s] == s) pairs.emplace_back(s, t.mul[a][s]);
    images.push_back(PartialBijection::from_pairs(n, pairs));
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    if (star(images[a]) != images[t.star[a]])
      throw StructuralError("representation does not preserve star at " + std::to_string(a));
    for (std::uint32_t b = 0; b < n; ++b)
      if (compose(images[a], images[b]) != images[t.mul[a][b]])
        throw StructuralError("representation is not multiplicative");
  }
  auto s = InverseSemigroup::from_closed_elements(images);
  if (s.size() != n) throw StructuralError("representation is not faithful");
  if (t.names.size() == n) s.set_names(t.names);
  return s;
}

CliffordSemigroup clifford(const GroupTable& g, const std::vector<std::vector<std::uint32_t>>& chain) {
  const std::uint32_t e = validate_group(g);
  if (chain.empty()) throw StructuralError("empty subgroup chain");
  std::vector<std::uint32_t> full(g.size());
  for (std::uint32_t x = 0; x < g.size(); ++x) full[x] = x;
  std::vector<std::set<std::uint32_t>> levels;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    if (!is_subgroup(g, chain[k])) throw StructuralError("chain term " + std::to_string(k) + " is not a subgroup");
    levels.emplace_back(chain[k].begin(), chain[k].end());
    if (k == 0 && levels[0].size() != g.size()) throw StructuralError("chain must start with G");
    if (k > 0 && !std::includes(levels[k - 1].begin(), levels[k - 1].end(), levels[k].begin(), levels[k].end()))
      throw StructuralError("chain is not descending at " + std::to_string(k));
  }
  const std::size_t last = levels.size() - 1;

  CliffordSemigroup out;
  std::vector<std::pair<std::uint32_t, std::size_t>> elems;
  for (std::size_t k = 0; k < levels.size(); ++k)
    for (auto x : levels[k]) elems.emplace_back(x, k);
  const std::size_t n = elems.size();
  auto index = [&](std::uint32_t x, std::size_t k) {
    return static_cast<std::uint32_t>(
        std::find(elems.begin(), elems.end(), std::make_pair(x, k)) - elems.begin());
  };
  auto& t = out.table;
  t.mul.assign(n, std::vector<std::uint32_t>(n));
  t.star.resize(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    auto [x, m] = elems[a];
    std::uint32_t inv = 0;
    while (g[x][inv] != e) ++inv;
    t.star[a] = index(inv, m);
    t.names.push_back("(" + std::to_string(x) + "," + (m == last ? std::string("inf") : std::to_string(m)) + ")");
    out.group_part.push_back(x);
    out.level.push_back(m);
    for (std::uint32_t b = 0; b < n; ++b) {
      auto [y, k] = elems[b];
      t.mul[a][b] = index(g[x][y], std::min(m, k));
    }
  }
  out.semigroup = vagner_preston(t);
  for (std::uint32_t a = 0; a < n; ++a) out.image.push_back(a);

  for (std::uint32_t a = 0; a < n; ++a) {
    auto [x, m] = elems[a];
    if (m == last || !levels[m + 1].count(x)) out.predicted_maximal.push_back(a);
  }
  auto verdict = classify_f_tilde(out.semigroup);
  out.f_inverse = verdict.is_f_tilde() && !out.semigroup.zero();
  if (verdict.is_f_tilde()) {
    std::vector<std::size_t> found(verdict.structure().maximal.begin(), verdict.structure().maximal.end());
    std::sort(found.begin(), found.end());
    out.maximal_matches = found == out.predicted_maximal;
  }
  return out;
}

}  // namespace groupoidal
