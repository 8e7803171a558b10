#include "groupoidal/conjugation.hpp"

#include <map>

#include "groupoidal/error.hpp"

namespace groupoidal {

ConjugationAction conjugation_action(std::shared_ptr<const InverseSemigroup> s) {
  require_f_tilde(*s);
  InverseSemigroup e = idempotent_semilattice(*s);
  std::vector<Character> chars = semilattice_characters(e);
  std::vector<ElementId> idem;
  for (ElementId i = 0; i < e.size(); ++i) idem.push_back(*s->find(e.element(i)));
  std::map<std::vector<bool>, Point> index;
  for (Point z = 0; z < chars.size(); ++z) index[chars[z].values] = z;
  std::map<ElementId, ElementId> to_e;
  for (ElementId i = 0; i < e.size(); ++i) to_e[idem[i]] = i;

  const std::size_t nz = chars.size();
  Action act;
  act.semigroup = s;
  act.omega = GroundSet::of_size(nz);
  for (ElementId a = 0; a < s->size(); ++a) {
    ElementId as = s->star(a);
    ElementId src = to_e.at(s->mul(as, a));
    std::vector<std::pair<Point, Point>> pairs;
    for (Point z = 0; z < nz; ++z) {
      const auto& zeta = chars[z].values;
      if (!zeta[src]) continue;
      std::vector<bool> image(e.size());
      for (ElementId g = 0; g < e.size(); ++g)
        image[g] = zeta[to_e.at(s->mul(s->mul(as, idem[g]), a))];
      auto it = index.find(image);
      if (it == index.end()) throw StructuralError("conjugate of a character is not a character");
      pairs.emplace_back(z, it->second);
    }
    act.phi.push_back(PartialBijection::from_pairs(nz, pairs));
  }
  return ConjugationAction{std::move(chars), std::move(idem), action_bundle(std::move(act))};
}

ConjugationReport conjugation_report(const ConjugationAction& c) {
  ConjugationReport rep;
  const auto& b = c.bundle;
  rep.characters = c.characters.size();
  rep.arrows = b.groupoid.arrow_count();
  rep.action = validate_action(b.action);
  // psi0(z)(g) = [z in Dom Phi(g)]
  rep.psi0_identity = true;
  for (Point z = 0; z < rep.characters; ++z)
    for (std::size_t g = 0; g < c.idempotents.size(); ++g)
      if (b.action.phi[c.idempotents[g]].defined_at(z) != c.characters[z].values[g])
        rep.psi0_identity = false;
  PsiContext ctx{&b.action, &b.ms, &b.groupoid};
  rep.psi = psi_report(ctx);
  return rep;
}

}  // namespace groupoidal
