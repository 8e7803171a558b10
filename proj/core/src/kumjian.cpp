#include "groupoidal/kumjian.hpp"
#include "groupoidal/star_algebra.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "groupoidal/error.hpp"

namespace groupoidal {

LocalizationAlgebra::LocalizationAlgebra(const Action& a) : action_(&a) {
  const auto& s = *a.semigroup;
  const std::size_t n = a.omega.size;
  lookup_.assign(s.size() * n, -1);
  for (ElementId e = 0; e < s.size(); ++e)
    for (Point w : a.phi[e].domain()) {
      lookup_[e * n + w] = static_cast<std::int64_t>(basis_.size());
      basis_.emplace_back(e, w);
    }
}

std::optional<std::size_t> LocalizationAlgebra::index_of(ElementId alpha, Point w) const {
  std::int64_t i = lookup_[alpha * action_->omega.size + w];
  if (i < 0) return std::nullopt;
  return static_cast<std::size_t>(i);
}

SparseVector LocalizationAlgebra::multiply(const SparseVector& x, const SparseVector& y) const {
  const auto& s = *action_->semigroup;
  SparseVector out;
  for (const auto& [i, cx] : x) {
    auto [a1, w1] = basis_[i];
    for (const auto& [j, cy] : y) {
      auto [a2, w2] = basis_[j];
      // g(w) = f1(a2 w) f2(w): nonzero only at w = w2 with a2(w2) = w1
      if (action_->phi[a2].image(w2) != w1) continue;
      auto k = index_of(s.mul(a1, a2), w2);
      if (!k) throw StructuralError("product left D(S)");
      axpy(out, cx * cy, SparseVector{{*k, Rational(1)}});
    }
  }
  return out;
}

SparseVector LocalizationAlgebra::adjoint(const SparseVector& x) const {
  const auto& s = *action_->semigroup;
  SparseVector out;
  for (const auto& [i, c] : x) {
    auto [a, w] = basis_[i];
    // h(v) = f(a* v), supported at v = a(w)
    auto k = index_of(s.star(a), action_->phi[a].image(w));
    axpy(out, c, SparseVector{{*k, Rational(1)}});
  }
  return out;
}

SparseVector LocalizationAlgebra::embed(const LocalTerm& t) const {
  SparseVector out;
  for (const auto& [w, c] : t.f) {
    if (sgn(c) == 0) continue;
    auto k = index_of(t.alpha, w);
    if (!k) throw StructuralError("term support outside Dom(alpha)");
    axpy(out, c, SparseVector{{*k, Rational(1)}});
  }
  return out;
}

bool is_localization(const Action& a, std::string* why) {
  // on a discrete space the domains form a basis iff every singleton is a domain
  std::vector<bool> singleton(a.omega.size, false);
  for (const auto& f : a.phi)
    if (f.domain_size() == 1) singleton[f.domain().front()] = true;
  for (Point w = 0; w < a.omega.size; ++w)
    if (!singleton[w]) {
      if (why) *why = "no domain equals the singleton {" + a.omega.label(w) + "}";
      return false;
    }
  return true;
}

bool is_coherent(const Action& a, const CoherentFamily& fam) {
  if (fam.open_sets.size() != fam.terms.size()) return false;
  for (std::size_t i = 0; i < fam.terms.size(); ++i) {
    const auto& phi = a.phi[fam.terms[i].alpha];
    std::set<Point> u(fam.open_sets[i].begin(), fam.open_sets[i].end());
    for (Point w : u)
      if (!phi.defined_at(w)) return false;
    for (const auto& [w, c] : fam.terms[i].f)
      if (sgn(c) != 0 && !u.count(w)) return false;
  }
  for (std::size_t i = 0; i < fam.terms.size(); ++i)
    for (std::size_t j = i + 1; j < fam.terms.size(); ++j) {
      std::set<Point> uj(fam.open_sets[j].begin(), fam.open_sets[j].end());
      for (Point w : fam.open_sets[i])
        if (uj.count(w) &&
            a.phi[fam.terms[i].alpha].image(w) != a.phi[fam.terms[j].alpha].image(w))
          return false;
    }
  return true;
}

std::vector<std::vector<std::size_t>> majorant_partition(const MaximalStructure& ms,
                                                          const CoherentFamily& fam) {
  std::map<std::int32_t, std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < fam.terms.size(); ++i)
    blocks[ms.majorant[fam.terms[i].alpha]].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [x, b] : blocks) out.push_back(std::move(b));
  return out;
}

namespace {

std::map<Point, Rational> family_sum(const CoherentFamily& fam, const std::vector<std::size_t>& idx) {
  std::map<Point, Rational> out;
  for (std::size_t i : idx)
    for (const auto& [w, c] : fam.terms[i].f) out[w] += c;
  std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

// Random coherent family; when zero_sum is set the coefficients are
// adjusted pointwise so that sum_a f_a = 0.
std::optional<CoherentFamily> random_family(const Action& a, const std::vector<ElementId>& pool,
                                            bool zero_sum, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> size(2, 4);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> num(-5, 5);
  CoherentFamily fam;
  int k = size(rng);
  for (int i = 0; i < k; ++i) {
    LocalTerm t;
    t.alpha = pool[pick(rng)];
    std::vector<Point> u;
    for (Point w : a.phi[t.alpha].domain())
      if (coin(rng)) u.push_back(w);
    for (Point w : u) t.f[w] = Rational(num(rng), 1 + coin(rng));
    fam.terms.push_back(std::move(t));
    fam.open_sets.push_back(std::move(u));
  }
  if (!is_coherent(a, fam)) return std::nullopt;
  if (zero_sum) {
    std::map<Point, std::vector<std::size_t>> cover;
    for (std::size_t i = 0; i < fam.terms.size(); ++i)
      for (Point w : fam.open_sets[i]) cover[w].push_back(i);
    for (auto& [w, idx] : cover) {
      if (idx.size() < 2) {
        fam.terms[idx.front()].f.erase(w);
        continue;
      }
      Rational total = 0;
      for (std::size_t i : idx) total += fam.terms[i].f[w];
      fam.terms[idx.front()].f[w] -= total;
    }
  }
  return fam;
}

}  // namespace

KumjianReport kumjian_rho(const Action& a, const MaximalStructure& ms, const Groupoid& g,
                          std::uint64_t seed, std::size_t samples) {
  const auto& s = *a.semigroup;
  KumjianReport rep;
  std::string why;
  rep.localization = is_localization(a, &why);
  if (!rep.localization) throw StructuralError("not a localization: " + why);

  LocalizationAlgebra d(a);
  rep.d_dimension = d.dimension();
  rep.groupoid_dimension = g.arrow_count();

  auto rho = [&](const SparseVector& x) {
    SparseVector out;
    for (const auto& [i, c] : x) {
      auto [alpha, w] = d.basis(i);
      auto arrow = g.find(static_cast<Label>(ms.majorant[alpha]), w);
      if (!arrow) throw StructuralError("rho lands outside the groupoid");
      axpy(out, c, SparseVector{{*arrow, Rational(1)}});
    }
    return out;
  };
  auto to_algebra = [](const SparseVector& v) {
    AlgebraElement f;
    for (const auto& [k, c] : v) f[static_cast<ArrowId>(k)] = QComplex(c);
    return f;
  };

  std::vector<SparseVector> columns;
  for (std::size_t i = 0; i < d.dimension(); ++i) columns.push_back(rho({{i, Rational(1)}}));
  rep.rho_rank = rank_of(columns);
  rep.rho_surjective = rep.rho_rank == g.arrow_count();

  for (std::size_t i = 0; i < d.dimension(); ++i) {
    SparseVector ei{{i, Rational(1)}};
    if (to_algebra(rho(d.adjoint(ei))) != involution(g, to_algebra(columns[i]))) {
      rep.rho_homomorphism = false;
      rep.failures.push_back("rho(x*) != rho(x)* at basis " + std::to_string(i));
    }
    for (std::size_t j = 0; j < d.dimension(); ++j) {
      SparseVector ej{{j, Rational(1)}};
      if (to_algebra(rho(d.multiply(ei, ej))) !=
          convolve(g, to_algebra(columns[i]), to_algebra(columns[j]))) {
        rep.rho_homomorphism = false;
        rep.failures.push_back("rho(xy) != rho(x)rho(y) at basis " + std::to_string(i) + ", " +
                               std::to_string(j));
      }
    }
  }

  std::vector<SparseVector> kernel = kernel_of(columns);
  rep.kernel_dimension = kernel.size();

  // Spanning set of I(S): point families and domain-pair families.
  SpanBuilder ideal;
  std::vector<SparseVector> generators;
  for (std::size_t i = 0; i < d.dimension(); ++i)
    for (std::size_t j = i + 1; j < d.dimension(); ++j) {
      auto [a1, w1] = d.basis(i);
      auto [a2, w2] = d.basis(j);
      if (w1 != w2 || a.phi[a1].image(w1) != a.phi[a2].image(w2)) continue;
      generators.push_back({{i, Rational(1)}, {j, Rational(-1)}});
    }
  for (ElementId e = 0; e < s.size(); ++e) {
    if (!s.is_idempotent(e) || s.is_zero(e)) continue;
    std::vector<Point> u = a.phi[e].domain();
    for (ElementId a1 = 0; a1 < s.size(); ++a1)
      for (ElementId a2 = a1 + 1; a2 < s.size(); ++a2) {
        bool agree = true;
        for (Point w : u)
          agree = agree && a.phi[a1].defined_at(w) && a.phi[a1].image(w) == a.phi[a2].image(w);
        if (!agree) continue;
        CoherentFamily fam;
        LocalTerm t1{a1, {}}, t2{a2, {}};
        for (Point w : u) {
          t1.f[w] = 1;
          t2.f[w] = -1;
        }
        fam.terms = {t1, t2};
        fam.open_sets = {u, u};
        if (!is_coherent(a, fam)) {
          rep.failures.push_back("domain-pair family not coherent");
          continue;
        }
        SparseVector v = d.embed(t1);
        axpy(v, Rational(1), d.embed(t2));
        generators.push_back(std::move(v));
      }
  }
  rep.ideal_generators = generators.size();
  for (const auto& v : generators) {
    ideal.insert(v);
    if (!rho(v).empty()) {
      rep.ideal_in_kernel = false;
      rep.failures.push_back("coherent zero-sum family outside ker rho");
    }
  }
  rep.ideal_dimension = ideal.rank();
  for (const auto& k : kernel) {
    SparseVector v;
    for (const auto& [i, c] : k) axpy(v, c, SparseVector{{i, Rational(1)}});
    if (!ideal.contains(v)) {
      rep.kernel_in_ideal = false;
      rep.failures.push_back("kernel vector outside I(S)");
    }
  }

  std::vector<ElementId> pool = s.basis();
  std::mt19937_64 rng(seed);
  std::size_t attempts = 0;
  while (rep.families_tested < samples && attempts < samples * 200 && !pool.empty()) {
    ++attempts;
    auto fam = random_family(a, pool, true, rng);
    if (!fam) continue;
    ++rep.families_tested;
    auto blocks = majorant_partition(ms, *fam);
    for (const auto& b : blocks)
      if (!family_sum(*fam, b).empty()) {
        rep.partition_blocks_sum_to_zero = false;
        rep.failures.push_back("partition block with nonzero sum");
      }
    for (std::size_t i = 0; i < fam->terms.size(); ++i)
      for (std::size_t j = 0; j < fam->terms.size(); ++j) {
        if (ms.majorant[fam->terms[i].alpha] == ms.majorant[fam->terms[j].alpha]) continue;
        for (Point w : fam->open_sets[i])
          if (std::count(fam->open_sets[j].begin(), fam->open_sets[j].end(), w)) {
            rep.partition_blocks_disjoint = false;
            rep.failures.push_back("open sets of different majorants intersect");
          }
      }
  }

  // |rho(xi)(x,w)| <= sum_b |sum_a f_{a,b}(w)| for xi a sum of coherent families
  attempts = 0;
  while (rep.inequality_samples < samples && attempts < samples * 200 && !pool.empty()) {
    ++attempts;
    std::vector<CoherentFamily> fams;
    for (int b = 0; b < 3; ++b)
      if (auto f = random_family(a, pool, false, rng)) fams.push_back(std::move(*f));
    if (fams.empty()) continue;
    ++rep.inequality_samples;
    SparseVector xi;
    for (const auto& f : fams)
      for (const auto& t : f.terms) axpy(xi, Rational(1), d.embed(t));
    SparseVector image = rho(xi);
    Rational sup_bound = 0;
    std::vector<std::map<Point, Rational>> sums;
    for (const auto& f : fams) {
      std::vector<std::size_t> all(f.terms.size());
      for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
      sums.push_back(family_sum(f, all));
      Rational m = 0;
      for (const auto& [w, c] : sums.back()) m = std::max(m, Rational(abs(c)));
      sup_bound += m;
    }
    Rational sup_image = 0;
    for (const auto& [arrow, c] : image) {
      Point w = g.arrow(static_cast<ArrowId>(arrow)).source;
      Rational bound = 0;
      for (const auto& sm : sums)
        if (auto it = sm.find(w); it != sm.end()) bound += abs(it->second);
      if (abs(c) > bound) {
        rep.inequality_holds = false;
        rep.failures.push_back("pointwise bound violated at arrow " + std::to_string(arrow));
      }
      sup_image = std::max(sup_image, Rational(abs(c)));
    }
    if (sup_image > sup_bound) {
      rep.inequality_holds = false;
      rep.failures.push_back("sup-norm bound violated");
    }
  }
  return rep;
}

}  // namespace groupoidal
