#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "groupoidal/groupoid.hpp"
#include "groupoidal/isg.hpp"
#include "groupoidal/linalg.hpp"
#include "groupoidal/rational.hpp"

namespace groupoidal {

// One term (alpha, f) of D(S), f supported in Dom(alpha).
struct LocalTerm {
  ElementId alpha = 0;
  std::map<Point, Rational> f;
};

// A family of terms with the open sets U_a witnessing coherence.
struct CoherentFamily {
  std::vector<LocalTerm> terms;
  std::vector<std::vector<Point>> open_sets;
};

// Finite-dimensional model of D(S) for a semigroup acting on a finite
// discrete space: basis (alpha, delta_w), w in Dom(alpha).
class LocalizationAlgebra {
 public:
  explicit LocalizationAlgebra(const Action& a);

  std::size_t dimension() const { return basis_.size(); }
  const std::pair<ElementId, Point>& basis(std::size_t i) const { return basis_[i]; }
  std::optional<std::size_t> index_of(ElementId alpha, Point w) const;

  // (a1, f1)(a2, f2) = (a1 a2, g), g(w) = f1(a2 w) f2(w)
  SparseVector multiply(const SparseVector& x, const SparseVector& y) const;
  // (a, f)* = (a*, h), h(w) = f(a* w)
  SparseVector adjoint(const SparseVector& x) const;
  SparseVector embed(const LocalTerm& t) const;

 private:
  const Action* action_;
  std::vector<std::pair<ElementId, Point>> basis_;
  std::vector<std::int64_t> lookup_;  // alpha * |Omega| + w
};

bool is_localization(const Action& a, std::string* why = nullptr);
bool is_coherent(const Action& a, const CoherentFamily& fam);

// Blocks of terms grouped by majorant.
std::vector<std::vector<std::size_t>> majorant_partition(const MaximalStructure& ms,
                                                          const CoherentFamily& fam);

struct KumjianReport {
  bool localization = false;
  std::size_t d_dimension = 0;
  std::size_t groupoid_dimension = 0;
  std::size_t rho_rank = 0;
  bool rho_surjective = false;
  bool rho_homomorphism = true;
  std::size_t kernel_dimension = 0;
  std::size_t ideal_generators = 0;
  std::size_t ideal_dimension = 0;
  bool ideal_in_kernel = true;
  bool kernel_in_ideal = true;
  std::size_t families_tested = 0;
  bool partition_blocks_sum_to_zero = true;
  bool partition_blocks_disjoint = true;
  std::size_t inequality_samples = 0;
  bool inequality_holds = true;
  std::vector<std::string> failures;

  bool kernel_equals_ideal() const {
    return kernel_dimension == ideal_dimension && ideal_in_kernel && kernel_in_ideal;
  }
  bool ok() const {
    return localization && rho_surjective && rho_homomorphism && kernel_equals_ideal() &&
           partition_blocks_sum_to_zero && partition_blocks_disjoint && inequality_holds;
  }
};

KumjianReport kumjian_rho(const Action& a, const MaximalStructure& ms, const Groupoid& g,
                          std::uint64_t seed, std::size_t samples = 64);

}  // namespace groupoidal
