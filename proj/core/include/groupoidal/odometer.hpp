#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "groupoidal/groupoid.hpp"
#include "groupoidal/isg.hpp"

namespace groupoidal {

// Radices n_0, n_1, ..., repeated cyclically past the given list.
struct Radices {
  std::vector<std::uint32_t> values;

  std::uint32_t at(std::size_t i) const { return values[i % values.size()]; }
  void validate() const;
};

// Points of prod_{i<depth} {0..n_i - 1}, w_0 least significant.
std::size_t truncated_points(const Radices& r, std::size_t depth);
std::vector<std::uint32_t> digits(const Radices& r, std::size_t depth, Point p);
Point point_of(const Radices& r, const std::vector<std::uint32_t>& w);

// beta, the inverse of the restricted odometer beta* (add 1 with carry,
// undefined at the top element).
PartialBijection odometer(const Radices& r, std::size_t depth);

// gamma(u_0..u_j; v_0..v_j): on {w : w_i = v_i, i <= j}, replace the prefix by u.
PartialBijection glimm_gamma(const Radices& r, std::size_t depth, const std::vector<std::uint32_t>& u,
                             const std::vector<std::uint32_t>& v);

struct OdometerSystem {
  Radices radices;
  std::size_t depth = 0;
  std::shared_ptr<const InverseSemigroup> semigroup;
  ActionBundle bundle;
};

struct GlimmSystem {
  Radices radices;
  std::size_t depth = 0;
  std::shared_ptr<const InverseSemigroup> semigroup;
  ActionBundle bundle;
  std::vector<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>> generators;
};

OdometerSystem build_odometer(const Radices& r, std::size_t depth);
GlimmSystem build_glimm(const Radices& r, std::size_t depth);

struct OdometerReport {
  std::size_t points = 0;
  std::size_t semigroup_size = 0;
  std::size_t arrows = 0;
  bool pair_groupoid = false;
  bool beta_beta_star_identity_off_top = false;
  bool successor_correct = false;
  ValidationReport axioms;
  bool ok() const { return pair_groupoid && beta_beta_star_identity_off_top && successor_correct && axioms.ok(); }
};

OdometerReport odometer_report(const OdometerSystem& o);

struct GlimmReport {
  std::size_t points = 0;
  std::size_t semigroup_size = 0;
  std::size_t arrows = 0;
  bool f_tilde = false;
  bool maximal_matches = false;  // epsilon and gamma with u_j != v_j at the top index
  bool localization = false;
  bool pair_groupoid = false;
  bool same_groupoid_as_odometer = false;
  std::size_t intersection_size = 0;
  // truncation leaves single-point maps in both semigroups besides epsilon and theta
  bool intersection_as_expected = false;
  std::vector<std::string> failures;
  bool ok() const {
    return f_tilde && maximal_matches && localization && pair_groupoid && same_groupoid_as_odometer &&
           intersection_as_expected;
  }
};

GlimmReport glimm_report(const GlimmSystem& g, const OdometerSystem& o);

// (d, r) pairs agree and composition is respected; both groupoids principal.
bool same_principal_groupoid(const Groupoid& a, const Groupoid& b);

}  // namespace groupoidal
