#include "groupoidal/exel.hpp"

#include <memory>
#include <set>

#include "groupoidal/error.hpp"
#include "groupoidal/groupoid.hpp"
#include "groupoidal/isg.hpp"
#include "groupoidal/star_algebra.hpp"

namespace groupoidal {

namespace {

void accumulate(GradedFunction& f, long n, Point w, const QComplex& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = f.try_emplace({n, w}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) f.erase(it);
  }
}

// Non-real scalar so that conjugation mistakes show up.
const QComplex kProbe{Rational(2, 3), Rational(1, 5)};

std::string describe(long n, Point w) {
  return "(" + std::to_string(n) + "," + std::to_string(w) + ")";
}

}  // namespace

PowerTable::PowerTable(PartialBijection beta) : beta_(std::move(beta)) {
  PartialBijection cur = PartialBijection::identity(beta_.ground_size());
  for (long m = 1; m <= static_cast<long>(beta_.ground_size()) + 1; ++m) {
    cur = compose(beta_, cur);
    if (cur.is_void()) {
      nilpotency_ = m;
      break;
    }
  }
}

const PartialBijection& PowerTable::power(long n) {
  auto it = cache_.find(n);
  if (it != cache_.end()) return it->second;
  return cache_.emplace(n, groupoidal::power(beta_, n)).first->second;
}

GradedFunction exel_product(PowerTable& p, const GradedFunction& a, const GradedFunction& b) {
  GradedFunction out;
  for (const auto& [ka, fa] : a) {
    auto [n, w] = ka;
    // g(w) = f_n(w) f_m(b^n w) on Dom(b^n) and Dom(b^{n+m})
    Point bw = p.power(n).image(w);
    if (bw == kNoPoint) continue;
    for (const auto& [kb, fb] : b) {
      auto [m, v] = kb;
      if (v != bw || !p.power(n + m).defined_at(w)) continue;
      accumulate(out, n + m, w, fa * fb);
    }
  }
  return out;
}

GradedFunction exel_star(PowerTable& p, const GradedFunction& a) {
  GradedFunction out;
  for (const auto& [k, f] : a) {
    auto [n, w] = k;
    // h(v) = conj f_n(b^{-n} v) on Dom(b^{-n}); v = b^n w
    Point v = p.power(n).image(w);
    if (v == kNoPoint) continue;
    accumulate(out, -n, v, f.conj());
  }
  return out;
}

GradedFunction graded_convolution(PowerTable& p, const GradedFunction& a, const GradedFunction& b) {
  GradedFunction out;
  for (const auto& [ka, fa] : a) {
    auto [n, u] = ka;
    for (const auto& [kb, fb] : b) {
      auto [m, w] = kb;
      // (n, u)(m, w) defined iff u = b^m w; result (n + m, w)
      if (p.power(m).image(w) != u) continue;
      if (!p.power(n + m).defined_at(w))
        throw StructuralError("composite arrow missing at " + describe(n + m, w));
      accumulate(out, n + m, w, fa * fb);
    }
  }
  return out;
}

GradedFunction graded_involution(PowerTable& p, const GradedFunction& a) {
  GradedFunction out;
  for (const auto& [k, f] : a) {
    auto [n, w] = k;
    Point r = p.power(n).image(w);
    if (r == kNoPoint) throw StructuralError("not an arrow: " + describe(n, w));
    accumulate(out, -n, r, f.conj());
  }
  return out;
}

GradedFunction gamma_map(PowerTable& p, const GradedFunction& a) {
  GradedFunction out;
  for (const auto& [k, f] : a) {
    auto [n, w] = k;
    // Gamma_n(delta_w) = delta_{b^n w} on label -n
    Point v = p.power(n).image(w);
    if (v == kNoPoint) throw StructuralError("coefficient outside Dom(b^n) at " + describe(n, w));
    accumulate(out, -n, v, f);
  }
  return out;
}

ExelReport exel_build_and_iso(const GroundSet& omega, const PartialBijection& beta,
                              std::optional<long> window) {
  omega.validate();
  if (beta.ground_size() != omega.size) throw StructuralError("beta does not act on Omega");
  PowerTable p(beta);
  ExelReport rep;
  rep.nilpotent = p.nilpotency_index().has_value();
  if (rep.nilpotent) {
    rep.degree_window = *p.nilpotency_index() - 1;
  } else {
    rep.degree_window = window.value_or(static_cast<long>(omega.size));
  }
  const long N = rep.degree_window;

  // basis of the covariance algebra: delta_w delta_n, w in Dom(b^n)
  std::vector<std::pair<long, Point>> basis;
  for (long n = -N; n <= N; ++n) {
    std::size_t dim = 0;
    for (Point w : p.power(n).domain()) {
      basis.emplace_back(n, w);
      ++dim;
    }
    rep.degree_dimensions[n] = dim;
    rep.exel_dimension += dim;
  }

  // groupoid side, arrows (n, w) with w in Dom(b^n)
  std::set<std::pair<long, Point>> arrows;
  for (long n = -N; n <= N; ++n)
    for (Point w : p.power(n).domain()) arrows.emplace(n, w);
  rep.groupoid_dimension = arrows.size();

  std::set<std::pair<long, Point>> images;
  for (const auto& [n, w] : basis) {
    GradedFunction img = gamma_map(p, GradedFunction{{{n, w}, QComplex(1)}});
    if (img.size() != 1 || !arrows.count(img.begin()->first)) {
      rep.bijective = false;
      rep.counterexample = "basis element " + describe(n, w) + " does not map to an arrow";
      break;
    }
    images.insert(img.begin()->first);
  }
  if (images.size() != basis.size() || images.size() != arrows.size()) rep.bijective = false;

  for (const auto& ka : basis) {
    GradedFunction a{{ka, kProbe}};
    if (gamma_map(p, exel_star(p, a)) != graded_involution(p, gamma_map(p, a))) {
      rep.star_preserving = false;
      if (!rep.counterexample) rep.counterexample = "star fails at " + describe(ka.first, ka.second);
    }
    for (const auto& kb : basis) {
      GradedFunction b{{kb, QComplex(1)}};
      ++rep.pairs_checked;
      GradedFunction lhs = gamma_map(p, exel_product(p, a, b));
      GradedFunction rhs = graded_convolution(p, gamma_map(p, a), gamma_map(p, b));
      if (lhs != rhs) {
        rep.multiplicative = false;
        if (!rep.counterexample)
          rep.counterexample = "product fails at " + describe(ka.first, ka.second) + " * " +
                               describe(kb.first, kb.second);
      }
    }
  }

  if (rep.nilpotent) {
    // Cross-check the lazy convolution against the groupoid built from the
    // graded action of the closure of b, labels -N..N.
    PartialBijection gens[] = {beta};
    auto s = std::make_shared<const InverseSemigroup>(generate_closure(omega.size, gens));
    Action act = Action::tautological(s);
    std::vector<ElementId> grade;
    for (long n = -N; n <= N; ++n) grade.push_back(*s->find(p.power(n)));
    Groupoid g = build_graded_groupoid(act, LabelStructure::integer_interval(N), grade);
    if (g.arrow_count() != rep.groupoid_dimension) rep.matches_finite_groupoid = false;
    auto to_graded = [&](const AlgebraElement& f) {
      GradedFunction out;
      for (const auto& [id, c] : f)
        accumulate(out, static_cast<long>(g.arrow(id).label) - N, g.arrow(id).source, c);
      return out;
    };
    for (ArrowId x = 0; x < g.arrow_count() && rep.matches_finite_groupoid; ++x)
      for (ArrowId y = 0; y < g.arrow_count(); ++y) {
        AlgebraElement fx{{x, QComplex(1)}}, fy{{y, QComplex(1)}};
        if (to_graded(convolve(g, fx, fy)) != graded_convolution(p, to_graded(fx), to_graded(fy))) {
          rep.matches_finite_groupoid = false;
          if (!rep.counterexample)
            rep.counterexample = "graded groupoid mismatch at " + g.arrow_name(x) + ", " + g.arrow_name(y);
          break;
        }
      }
  }
  return rep;
}

}  // namespace groupoidal
