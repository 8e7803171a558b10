#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "groupoidal/pbij.hpp"
#include "groupoidal/rational.hpp"

namespace groupoidal {

// Z-graded finitely supported functions, key (degree, point). Used both for
// the covariance algebra (f_n delta_n with supp f_n in Dom(b^n)) and for
// C_c of the singly generated groupoid {(n, w) : w in Dom(b^n)}.
using GradedFunction = std::map<std::pair<long, Point>, QComplex>;

// Lazily cached powers b^n, n in Z.
class PowerTable {
 public:
  explicit PowerTable(PartialBijection beta);

  const PartialBijection& power(long n);
  const PartialBijection& beta() const { return beta_; }
  // smallest m >= 1 with b^m void, if any
  std::optional<long> nilpotency_index() const { return nilpotency_; }

 private:
  PartialBijection beta_;
  std::map<long, PartialBijection> cache_;
  std::optional<long> nilpotency_;
};

GradedFunction exel_product(PowerTable& p, const GradedFunction& a, const GradedFunction& b);
GradedFunction exel_star(PowerTable& p, const GradedFunction& a);
GradedFunction graded_convolution(PowerTable& p, const GradedFunction& a, const GradedFunction& b);
GradedFunction graded_involution(PowerTable& p, const GradedFunction& a);
// f_n delta_n -> chi_{-n} (x) Gamma_n(f_n), Gamma_n(f)(w) = f(b^{-n} w) on Dom(b^{-n})
GradedFunction gamma_map(PowerTable& p, const GradedFunction& a);

struct ExelReport {
  bool nilpotent = false;
  long degree_window = 0;                       // |n| <= degree_window tested
  std::map<long, std::size_t> degree_dimensions;  // dim D^_n inside the window
  std::size_t exel_dimension = 0;
  std::size_t groupoid_dimension = 0;
  bool bijective = true;
  bool multiplicative = true;
  bool star_preserving = true;
  bool matches_finite_groupoid = true;  // lazy convolution vs the built groupoid (nilpotent case)
  std::size_t pairs_checked = 0;
  std::optional<std::string> counterexample;

  bool ok() const {
    return bijective && multiplicative && star_preserving && matches_finite_groupoid;
  }
};

// Builds both algebras and verifies the map is a *-isomorphism on every
// basis pair. For nilpotent b all degrees are covered; otherwise degrees
// |n| <= window (default: ground size) are tested and reported.
ExelReport exel_build_and_iso(const GroundSet& omega, const PartialBijection& beta,
                              std::optional<long> window = std::nullopt);

}  // namespace groupoidal
