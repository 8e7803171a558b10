#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "groupoidal/groupoid.hpp"
#include "groupoidal/isg.hpp"
#include "groupoidal/rational.hpp"

namespace groupoidal {

// Finitely supported function on the arrows of a groupoid.
using AlgebraElement = std::map<ArrowId, QComplex>;

void add_to(AlgebraElement& f, ArrowId a, const QComplex& c);
AlgebraElement indicator(const GSet& set);
AlgebraElement unit_indicator(const Groupoid& g);
AlgebraElement scaled(const AlgebraElement& f, const QComplex& c);
AlgebraElement sum(const AlgebraElement& f, const AlgebraElement& g);

AlgebraElement convolve(const Groupoid& g, const AlgebraElement& f, const AlgebraElement& h);
AlgebraElement involution(const Groupoid& g, const AlgebraElement& f);
AlgebraElement conditional_expectation(const Groupoid& g, const AlgebraElement& f);

// Left regular representation on l^2 of the arrows:
// L(f) delta_h = sum_{d(a) = r(h)} f(a) delta_{ah}.
class RegularRepresentation {
 public:
  explicit RegularRepresentation(const Groupoid& g) : g_(&g) {}

  std::size_t dimension() const { return g_->arrow_count(); }
  std::vector<std::vector<std::complex<double>>> matrix(const AlgebraElement& f) const;
  double operator_norm(const AlgebraElement& f) const;

 private:
  const Groupoid* g_;
};

// Formal vector of C[S] on the basis S \ {theta}.
using SemigroupVector = std::map<ElementId, QComplex>;

// lambda(a) delta_b = delta_{ab} if bb* <= a*a, else 0, on l^2(S \ {theta}).
double semigroup_regular_norm(const InverseSemigroup& s, const SemigroupVector& v);

struct PsiContext {
  const Action* action;
  const MaximalStructure* ms;
  const Groupoid* groupoid;
};

AlgebraElement psi(const PsiContext& ctx, const SemigroupVector& v);

struct PsiReport {
  std::size_t semigroup_dimension = 0;   // |S \ {theta}|
  std::size_t groupoid_dimension = 0;    // arrows
  std::size_t rank = 0;
  bool injective = false;
  bool surjective = false;
  bool multiplicative = true;
  bool star_preserving = true;
  bool graded = true;
  bool expectation_kills_nonidempotents = true;
  std::vector<std::string> failures;
};

PsiReport psi_report(const PsiContext& ctx);

struct ContractivityReport {
  MIndex label = 0;
  std::size_t domain_dimension = 0;
  std::size_t rank = 0;
  double max_ratio = 0.0;  // sup ||psi(v)|| / ||v|| over sampled v
  std::size_t samples = 0;
  bool contractive = true;
};

ContractivityReport psi_x_restriction(const PsiContext& ctx, MIndex x, std::uint64_t seed,
                                      std::size_t random_samples = 32);

struct AlgebraAudit {
  std::size_t dimension = 0;
  bool associative = true;
  bool involution_anti = true;
  bool representation_homomorphic = true;
  double max_cstar_defect = 0.0;  // max | ||f*f|| - ||f||^2 |
  bool submultiplicative = true;
  std::vector<std::string> failures;
};

// Exhaustive on basis elements (associativity skipped above max_arrows),
// C*-identity on seeded random rational elements.
AlgebraAudit audit_algebra(const Groupoid& g, std::uint64_t seed, std::size_t samples = 8,
                           std::size_t max_arrows = 200);

}  // namespace groupoidal
