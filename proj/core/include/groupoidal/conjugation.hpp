#pragma once

#include <memory>
#include <string>
#include <vector>

#include "groupoidal/groupoid.hpp"
#include "groupoidal/isg.hpp"
#include "groupoidal/star_algebra.hpp"

namespace groupoidal {

struct ConjugationAction {
  std::vector<Character> characters;  // Z, indexed like the points of the action
  std::vector<ElementId> idempotents; // semilattice index -> element of S
  ActionBundle bundle;
};

// S acts on the characters of its idempotent semilattice:
// Dom Phi(a) = {z : z(a* a) = 1}, Phi(a)(z)(g) = z(a* g a).
ConjugationAction conjugation_action(std::shared_ptr<const InverseSemigroup> s);

struct ConjugationReport {
  std::size_t characters = 0;
  std::size_t arrows = 0;
  ValidationReport action;
  bool psi0_identity = false;
  PsiReport psi;
  bool full_rank() const { return psi.injective && psi.surjective; }
  bool ok() const { return action.ok() && psi0_identity && full_rank(); }
};

ConjugationReport conjugation_report(const ConjugationAction& c);

}  // namespace groupoidal
