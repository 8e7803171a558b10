#include "groupoidal/star_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "groupoidal/error.hpp"
#include "groupoidal/linalg.hpp"

namespace groupoidal {

namespace {

constexpr double kNormTolerance = 1e-10;

Eigen::MatrixXcd to_eigen(const std::vector<std::vector<std::complex<double>>>& m) {
  const Eigen::Index n = static_cast<Eigen::Index>(m.size());
  const Eigen::Index k = n == 0 ? 0 : static_cast<Eigen::Index>(m.front().size());
  Eigen::MatrixXcd out(n, k);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < k; ++j) out(i, j) = m[i][j];
  return out;
}

double largest_singular_value(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()(0);
}

void check_support(const Groupoid& g, const AlgebraElement& f) {
  for (const auto& [a, c] : f)
    if (a >= g.arrow_count()) throw StructuralError("support outside arrows: " + std::to_string(a));
}

QComplex random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

}  // namespace

void add_to(AlgebraElement& f, ArrowId a, const QComplex& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = f.try_emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) f.erase(it);
  }
}

AlgebraElement indicator(const GSet& set) {
  AlgebraElement f;
  for (ArrowId a : set) f[a] = QComplex(1);
  return f;
}

AlgebraElement unit_indicator(const Groupoid& g) {
  AlgebraElement f;
  for (Point w = 0; w < g.unit_count(); ++w) f[g.unit_arrow(w)] = QComplex(1);
  return f;
}

AlgebraElement scaled(const AlgebraElement& f, const QComplex& c) {
  AlgebraElement out;
  for (const auto& [a, v] : f) add_to(out, a, v * c);
  return out;
}

AlgebraElement sum(const AlgebraElement& f, const AlgebraElement& g) {
  AlgebraElement out = f;
  for (const auto& [a, v] : g) add_to(out, a, v);
  return out;
}

AlgebraElement convolve(const Groupoid& g, const AlgebraElement& f, const AlgebraElement& h) {
  check_support(g, f);
  check_support(g, h);
  AlgebraElement out;
  for (const auto& [a, fa] : f) {
    Point d = g.arrow(a).source;
    for (const auto& [b, hb] : h) {
      if (g.arrow(b).target != d) continue;
      add_to(out, *g.compose(a, b), fa * hb);
    }
  }
  return out;
}

AlgebraElement involution(const Groupoid& g, const AlgebraElement& f) {
  check_support(g, f);
  AlgebraElement out;
  for (const auto& [a, v] : f) add_to(out, g.inverse(a), v.conj());
  return out;
}

AlgebraElement conditional_expectation(const Groupoid& g, const AlgebraElement& f) {
  check_support(g, f);
  AlgebraElement out;
  for (const auto& [a, v] : f)
    if (g.is_unit(a)) out[a] = v;
  return out;
}

std::vector<std::vector<std::complex<double>>> RegularRepresentation::matrix(
    const AlgebraElement& f) const {
  const std::size_t n = g_->arrow_count();
  std::vector<std::vector<std::complex<double>>> m(n, std::vector<std::complex<double>>(n));
  for (ArrowId h = 0; h < n; ++h)
    for (const auto& [a, c] : f)
      if (auto ah = g_->compose(a, h)) m[*ah][h] += c.to_double();
  return m;
}

double RegularRepresentation::operator_norm(const AlgebraElement& f) const {
  return largest_singular_value(to_eigen(matrix(f)));
}

double semigroup_regular_norm(const InverseSemigroup& s, const SemigroupVector& v) {
  std::vector<ElementId> basis = s.basis();
  std::vector<std::int64_t> pos(s.size(), -1);
  for (std::size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = static_cast<std::int64_t>(i);
  const Eigen::Index n = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& [a, c] : v) {
    if (s.is_zero(a)) continue;
    ElementId aa = s.mul(s.star(a), a);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      ElementId b = basis[j];
      ElementId bb = s.mul(b, s.star(b));
      if (s.mul(aa, bb) != bb) continue;
      m(pos[s.mul(a, b)], static_cast<Eigen::Index>(j)) += c.to_double();
    }
  }
  return largest_singular_value(m);
}

AlgebraElement psi(const PsiContext& ctx, const SemigroupVector& v) {
  AlgebraElement out;
  for (const auto& [a, c] : v) {
    if (ctx.action->semigroup->is_zero(a)) continue;
    for (ArrowId arrow : ample_map(*ctx.action, *ctx.ms, *ctx.groupoid, a)) add_to(out, arrow, c);
  }
  return out;
}

PsiReport psi_report(const PsiContext& ctx) {
  const auto& s = *ctx.action->semigroup;
  const Groupoid& g = *ctx.groupoid;
  PsiReport rep;
  std::vector<ElementId> basis = s.basis();
  rep.semigroup_dimension = basis.size();
  rep.groupoid_dimension = g.arrow_count();
  std::vector<AlgebraElement> img(s.size());
  std::vector<SparseVector> columns;
  for (ElementId a : basis) {
    img[a] = psi(ctx, SemigroupVector{{a, QComplex(1)}});
    SparseVector col;
    for (const auto& [arrow, c] : img[a]) col[arrow] = c.re;
    columns.push_back(std::move(col));
  }
  rep.rank = rank_of(columns);
  rep.injective = rep.rank == rep.semigroup_dimension;
  rep.surjective = rep.rank == rep.groupoid_dimension;
  for (ElementId a : basis) {
    if (involution(g, img[a]) != img[s.star(a)]) {
      rep.star_preserving = false;
      rep.failures.push_back("psi(a*) != psi(a)* at " + s.name(a));
    }
    Label x = static_cast<Label>(ctx.ms->majorant[a]);
    for (const auto& [arrow, c] : img[a])
      if (g.arrow(arrow).label != x) {
        rep.graded = false;
        rep.failures.push_back("psi(a) leaves the fiber of its majorant at " + s.name(a));
        break;
      }
    if (!s.is_idempotent(a) && !conditional_expectation(g, img[a]).empty()) {
      rep.expectation_kills_nonidempotents = false;
      rep.failures.push_back("P(psi(a)) != 0 at " + s.name(a));
    }
    for (ElementId b : basis)
      if (convolve(g, img[a], img[b]) != img[s.mul(a, b)]) {
        rep.multiplicative = false;
        rep.failures.push_back("psi(ab) != psi(a)psi(b) at " + s.name(a) + ", " + s.name(b));
      }
  }
  return rep;
}

ContractivityReport psi_x_restriction(const PsiContext& ctx, MIndex x, std::uint64_t seed,
                                      std::size_t random_samples) {
  const auto& s = *ctx.action->semigroup;
  ContractivityReport rep;
  rep.label = x;
  std::vector<ElementId> below;
  for (ElementId a : s.basis())
    if (ctx.ms->majorant[a] == static_cast<std::int32_t>(x)) below.push_back(a);
  rep.domain_dimension = below.size();
  std::vector<SparseVector> columns;
  for (ElementId a : below) {
    SparseVector col;
    for (const auto& [arrow, c] : psi(ctx, SemigroupVector{{a, QComplex(1)}})) col[arrow] = c.re;
    columns.push_back(std::move(col));
  }
  rep.rank = rank_of(columns);
  RegularRepresentation reg(*ctx.groupoid);
  auto sample = [&](const SemigroupVector& v) {
    double denom = semigroup_regular_norm(s, v);
    double num = reg.operator_norm(psi(ctx, v));
    ++rep.samples;
    if (denom < kNormTolerance) {
      if (num > 1e-9) rep.contractive = false;
      return;
    }
    rep.max_ratio = std::max(rep.max_ratio, num / denom);
  };
  for (ElementId a : below) sample(SemigroupVector{{a, QComplex(1)}});
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < random_samples && !below.empty(); ++i) {
    SemigroupVector v;
    for (ElementId a : below) v[a] = random_rational(rng);
    sample(v);
  }
  if (rep.max_ratio > 1.0 + 1e-9) rep.contractive = false;
  return rep;
}

AlgebraAudit audit_algebra(const Groupoid& g, std::uint64_t seed, std::size_t samples,
                           std::size_t max_arrows) {
  AlgebraAudit rep;
  const std::size_t n = g.arrow_count();
  rep.dimension = n;
  auto basis = [](ArrowId a) { return AlgebraElement{{a, QComplex(1)}}; };
  if (n <= max_arrows) {
    for (ArrowId a = 0; a < n; ++a)
      for (ArrowId b = 0; b < n; ++b) {
        AlgebraElement ab = convolve(g, basis(a), basis(b));
        if (involution(g, ab) != convolve(g, involution(g, basis(b)), involution(g, basis(a)))) {
          rep.involution_anti = false;
          rep.failures.push_back("(ab)* != b*a* at " + g.arrow_name(a) + ", " + g.arrow_name(b));
        }
        if (ab.empty()) continue;
        // only composable pairs can contribute; triples through the middle arrow
        for (ArrowId c : g.arrows_into(g.arrow(b).source))
          if (convolve(g, ab, basis(c)) != convolve(g, basis(a), convolve(g, basis(b), basis(c)))) {
            rep.associative = false;
            rep.failures.push_back("associativity at " + g.arrow_name(a) + ", " +
                                   g.arrow_name(b) + ", " + g.arrow_name(c));
          }
      }
  }
  RegularRepresentation reg(g);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    AlgebraElement f, h;
    for (ArrowId a = 0; a < n; ++a) {
      add_to(f, a, random_rational(rng));
      add_to(h, a, random_rational(rng));
    }
    Eigen::MatrixXcd lf = to_eigen(reg.matrix(f));
    Eigen::MatrixXcd lh = to_eigen(reg.matrix(h));
    Eigen::MatrixXcd lfh = to_eigen(reg.matrix(convolve(g, f, h)));
    Eigen::MatrixXcd lfs = to_eigen(reg.matrix(involution(g, f)));
    double scale = 1.0 + lf.norm() * lh.norm();
    if ((lfh - lf * lh).norm() > 1e-9 * scale || (lfs - lf.adjoint()).norm() > 1e-9 * scale) {
      rep.representation_homomorphic = false;
      rep.failures.push_back("regular representation is not a *-homomorphism on sample " +
                             std::to_string(i));
    }
    double nf = largest_singular_value(lf);
    double nh = largest_singular_value(lh);
    double nfsf = reg.operator_norm(convolve(g, involution(g, f), f));
    rep.max_cstar_defect = std::max(rep.max_cstar_defect, std::abs(nfsf - nf * nf) / (1.0 + nf * nf));
    if (largest_singular_value(lfh) > nf * nh * (1 + kNormTolerance) + kNormTolerance)
      rep.submultiplicative = false;
  }
  return rep;
}

}  // namespace groupoidal
