#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "groupoidal/pbij.hpp"

namespace groupoidal {

using ElementId = std::uint32_t;
using MIndex = std::uint32_t;
inline constexpr std::int32_t kUndefined = -1;

std::size_t default_element_cap();

// Finite inverse semigroup given by a faithful representation in I_T
// together with its multiplication and star tables.
class InverseSemigroup {
 public:
  InverseSemigroup() = default;

  // Builds tables for a set already closed under compose and star.
  static InverseSemigroup from_closed_elements(std::vector<PartialBijection> elements);

  std::size_t size() const { return elements_.size(); }
  std::size_t ground_size() const { return ground_size_; }
  const PartialBijection& element(ElementId i) const { return elements_[i]; }
  const std::vector<PartialBijection>& elements() const { return elements_; }

  ElementId mul(ElementId a, ElementId b) const { return mult_[a * elements_.size() + b]; }
  ElementId star(ElementId a) const { return star_[a]; }
  ElementId unit() const { return unit_; }
  std::optional<ElementId> zero() const { return zero_; }
  bool is_zero(ElementId a) const { return zero_ && *zero_ == a; }
  std::optional<ElementId> find(const PartialBijection& f) const;

  bool is_idempotent(ElementId a) const { return mul(a, a) == a; }
  // natural order via table: b* a == a* a
  bool leq(ElementId a, ElementId b) const { return mul(star(b), a) == mul(star(a), a); }

  // C[S] basis: S without theta
  std::vector<ElementId> basis() const;

  const std::vector<std::string>& names() const { return names_; }
  void set_names(std::vector<std::string> names);
  std::string name(ElementId a) const;

 private:
  std::size_t ground_size_ = 0;
  std::vector<PartialBijection> elements_;
  std::unordered_map<PartialBijection, ElementId, PartialBijectionHash> index_;
  std::vector<ElementId> mult_;
  std::vector<ElementId> star_;
  ElementId unit_ = 0;
  std::optional<ElementId> zero_;
  std::vector<std::string> names_;
};

InverseSemigroup generate_closure(std::size_t ground_size,
                                  std::span<const PartialBijection> generators,
                                  std::size_t cap = default_element_cap());

// Sub-table of idempotents; elements keep their partial-bijection form.
InverseSemigroup idempotent_semilattice(const InverseSemigroup& s);

struct MaximalStructure {
  std::vector<ElementId> maximal;               // M-index -> element
  MIndex unit = 0;
  std::vector<std::int32_t> majorant;           // element -> M-index, -1 for theta
  std::vector<std::int32_t> product;            // |M|x|M|, -1 undefined
  std::vector<MIndex> inverse;

  std::size_t size() const { return maximal.size(); }
  std::optional<MIndex> multiply(MIndex x, MIndex y) const;
  std::optional<MIndex> index_of(ElementId a) const;
};

struct NotFTildeWitness {
  ElementId element = 0;
  ElementId first_majorant = 0;
  ElementId second_majorant = 0;
};

class FTildeVerdict {
 public:
  explicit FTildeVerdict(MaximalStructure ms) : v_(std::move(ms)) {}
  explicit FTildeVerdict(NotFTildeWitness w) : v_(w) {}

  bool is_f_tilde() const { return std::holds_alternative<MaximalStructure>(v_); }
  const MaximalStructure& structure() const;
  const NotFTildeWitness& witness() const;

 private:
  std::variant<MaximalStructure, NotFTildeWitness> v_;
};

std::vector<ElementId> maximal_elements(const InverseSemigroup& s);
FTildeVerdict classify_f_tilde(const InverseSemigroup& s);
// Throws StructuralError with the witness when s is not F~.
MaximalStructure require_f_tilde(const InverseSemigroup& s);

// Singly generated criterion taken literally: not F~ exactly when T_f and
// T_inf are nonempty, beta|T_inf is periodic and nonconstant and
// beta|T_f is nilpotent. Returns true when F~ is predicted.
bool singly_generated_prediction(const PartialBijection& beta);
// Exact criterion on finite sets: not F~ iff T_f, T_inf nonempty and
// 2k - 1 > p (k nilpotency index on T_f, p period on T_inf).
bool singly_generated_exact(const PartialBijection& beta);

std::optional<MIndex> partial_product(const MaximalStructure& ms, MIndex x, MIndex y);

struct LawViolation {
  std::string law;
  std::vector<MIndex> witnesses;
};

// Partial associativity, unit, involution, division and cancellation laws
// on M, checked over every pair and triple.
std::vector<LawViolation> check_partial_group_laws(const InverseSemigroup& s,
                                                   const MaximalStructure& ms);

struct Character {
  ElementId principal = 0;    // gamma with zeta = zeta_gamma
  std::vector<bool> values;   // indexed by element of E
};

std::vector<Character> semilattice_characters(const InverseSemigroup& e);

}  // namespace groupoidal
