#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "groupoidal/isg.hpp"

namespace groupoidal {

using GroupTable = std::vector<std::vector<std::uint32_t>>;

GroupTable cyclic_group(std::uint32_t n);
// unit, inverses, associativity; throws StructuralError
std::uint32_t validate_group(const GroupTable& g);
bool is_subgroup(const GroupTable& g, const std::vector<std::uint32_t>& h);

// Abstract inverse semigroup given by tables.
struct SemigroupTable {
  std::vector<std::vector<std::uint32_t>> mul;
  std::vector<std::uint32_t> star;
  std::vector<std::string> names;

  std::size_t size() const { return star.size(); }
};

// Left Vagner-Preston representation: lambda_a on a*S, s -> a s. Throws
// StructuralError if the tables do not give a faithful homomorphism.
InverseSemigroup vagner_preston(const SemigroupTable& t);

struct CliffordSemigroup {
  SemigroupTable table;
  InverseSemigroup semigroup;          // faithful image, same element order as names
  std::vector<std::uint32_t> group_part;
  std::vector<std::size_t> level;      // chain index; the last index stands for infinity
  std::vector<ElementId> image;        // table index -> semigroup element
  std::vector<std::size_t> predicted_maximal;  // table indices from the M formula
  bool f_inverse = false;
  bool maximal_matches = false;
};

// chain[0] = G, chain[k+1] subgroup of chain[k]; the last term is G_infinity.
CliffordSemigroup clifford(const GroupTable& g, const std::vector<std::vector<std::uint32_t>>& chain);

}  // namespace groupoidal
