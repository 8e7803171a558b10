#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "groupoidal/groupoid.hpp"

namespace groupoidal {

using Vec = std::vector<std::int64_t>;

// P = {t in Z^d : A t >= 0}; additive notation throughout.
struct ConePair {
  std::size_t d = 1;
  std::vector<Vec> constraints;  // rows of A

  static ConePair naturals(std::size_t d);  // N^d
  static ConePair parity_cone();            // {0 <= t2 <= 2 t1}

  void validate() const;
  Vec apply(const Vec& t) const;  // A t
  bool in_cone(const Vec& t) const;
  // some t with A t >= 1 in every row, searched in a small box
  std::optional<Vec> interior_point() const;
  std::string to_string() const;
};

Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec neg(const Vec& a);
std::string vec_string(const Vec& v);

// Box [-radius, radius]^d
std::vector<Vec> box_points(std::size_t d, std::int64_t radius);

class ToeplitzElement {
 public:
  static ToeplitzElement zero(std::size_t d);
  // (x, C), C normalized to contain 0 and x, redundant markers dropped
  static ToeplitzElement make(const ConePair& cp, Vec x, std::vector<Vec> markers);

  bool is_zero() const { return zero_; }
  const Vec& translation() const { return x_; }
  const std::vector<Vec>& markers() const { return markers_; }
  // Dom = {t : A t >= bound}
  const Vec& bound() const { return bound_; }
  bool in_domain(const ConePair& cp, const Vec& t) const;
  std::string to_string() const;

  friend bool operator==(const ToeplitzElement&, const ToeplitzElement&) = default;
  friend auto operator<=>(const ToeplitzElement&, const ToeplitzElement&) = default;

 private:
  bool zero_ = true;
  Vec x_;
  std::vector<Vec> markers_;
  Vec bound_;
};

struct SearchWindow {
  std::int64_t radius = 8;  // scan box [-radius, radius]^d
};

// x in P - P, decided by scan; throws UndecidedError when not found.
bool in_difference_set(const ConePair& cp, const Vec& x, const SearchWindow& w);
// some t in Dom, or nullopt when the domain is certainly empty; throws
// UndecidedError when neither can be established.
std::optional<Vec> domain_point(const ConePair& cp, const ToeplitzElement& a, const SearchWindow& w);

ToeplitzElement te_beta(const ConePair& cp, const Vec& x, const SearchWindow& w);
ToeplitzElement te_mul(const ConePair& cp, const ToeplitzElement& a, const ToeplitzElement& b,
                       const SearchWindow& w);
ToeplitzElement te_star(const ConePair& cp, const ToeplitzElement& a);
ToeplitzElement te_word(const ConePair& cp, const std::vector<Vec>& xs, const SearchWindow& w);

struct EqualityVerdict {
  bool equal = false;
  bool exact = false;  // false: agreement only verified on the window
};
EqualityVerdict te_equal(const ConePair& cp, const ToeplitzElement& a, const ToeplitzElement& b,
                         const SearchWindow& w);
bool te_leq(const ConePair& cp, const ToeplitzElement& a, const ToeplitzElement& b,
            const SearchWindow& w);

// t in Dom(beta_{x1} ... beta_{xn}) by backward substitution: x_n = s_n - t_n,
// x_j + s_{j+1} = s_j - t_j, t = sum t_j.
Vec nonvoid_witness(const ConePair& cp, const std::vector<Vec>& xs, const SearchWindow& w);

// x with a <= beta_x, cross-checked against a(t) - t at a domain point.
Vec unique_majorant(const ConePair& cp, const ToeplitzElement& a, const SearchWindow& w);

struct WindowBox {
  std::size_t d = 1;
  std::int64_t lo = -2;
  std::int64_t hi = 2;

  std::vector<Vec> points() const;
  bool contains(const Vec& v) const;
};

// bits indexed like WindowBox::points()
using WindowPattern = std::vector<bool>;

std::string pattern_string(const WindowBox& box, const WindowPattern& p);

// (t - P) cut to the window
WindowPattern dense_pattern(const ConePair& cp, const WindowBox& box, const Vec& t);

struct OmegaPatterns {
  std::set<WindowPattern> patterns;
  std::map<WindowPattern, Vec> representative;  // some t producing each pattern
  std::int64_t scan_radius = 0;
  bool stabilized = false;  // same set at scan radius 2r
};

OmegaPatterns omega_patterns(const ConePair& cp, const WindowBox& box, std::int64_t scan_radius);

struct WienerHopfReport {
  std::vector<Vec> units;  // dense points t - P used as units, identified by their traces
  std::vector<WindowPattern> unit_patterns;
  std::optional<Groupoid> groupoid;
  ValidationReport axioms;
  bool principal = false;
  bool pair_groupoid = false;
  bool domains_consistent = true;      // marker domains vs window traces, per element
  bool translation_consistent = true;  // Phi(alpha)(A) = x + A on the window
  std::vector<std::string> failures;
  bool ok() const {
    return axioms.ok() && principal && domains_consistent && translation_consistent;
  }
};

// Reduction of the Wiener-Hopf groupoid {(x, A) : x in A^-1} to the dense
// points whose window traces are not shared with any other scanned point.
WienerHopfReport wiener_hopf_groupoid(const ConePair& cp, const WindowBox& box,
                                      const std::vector<ToeplitzElement>& elements,
                                      std::int64_t scan_radius);

struct BSetResult {
  std::vector<Vec> word;
  Vec lower;              // b
  Vec minimum;            // mu
  bool decided = true;
  WindowPattern pattern;
  bool matched = false;
};

struct CharacterComparison {
  std::size_t word_length = 0;
  std::size_t omega_pattern_count = 0;
  bool omega_stabilized = false;
  std::vector<BSetResult> bsets;
  std::size_t distinct_bpatterns = 0;
  std::size_t unmatched = 0;
  std::size_t undecided = 0;
  std::map<std::size_t, std::size_t> unmatched_by_length;
  std::optional<BSetResult> witness;
  bool separation_verified = false;  // psi0 injective on the window
  bool surjective() const { return unmatched == 0 && undecided == 0; }
};

CharacterComparison character_comparison(const ConePair& cp, std::size_t word_length,
                                         const WindowBox& box, std::int64_t letter_radius = 1,
                                         std::int64_t scan_radius = 0);

struct QuasiLatticeReport {
  bool pointed = false;  // P cap -P = {0} on the window
  bool quasi_lattice = false;
  std::size_t pairs_checked = 0;
  std::map<std::pair<Vec, Vec>, Vec> sigma_pairs;
  std::map<Vec, Vec> sigma_elements;
  std::optional<std::pair<Vec, Vec>> counterexample;
  std::vector<Vec> counterexample_minimal_bounds;
};

QuasiLatticeReport quasi_lattice_check(const ConePair& cp, std::int64_t sample_radius,
                                       std::int64_t scan_radius);

struct PairElement {
  bool zero = false;
  Vec s, t;
  friend bool operator==(const PairElement&, const PairElement&) = default;
};

struct QloReport {
  bool quasi_lattice = false;
  std::size_t elements = 0;
  std::size_t products_checked = 0;
  bool homomorphism = true;
  bool star_preserving = true;
  bool injective = true;
  std::vector<std::string> failures;
  bool ok() const { return quasi_lattice && homomorphism && star_preserving && injective; }
};

PairElement qlo_multiply(const ConePair& cp, const PairElement& a, const PairElement& b,
                         std::int64_t scan_radius);
QloReport qlo_presentation(const ConePair& cp, std::int64_t pair_radius, std::size_t word_length,
                           std::int64_t scan_radius);

struct ObviousActionReport {
  std::size_t points = 0;
  std::size_t semigroup_size = 0;
  std::size_t arrows = 0;
  std::size_t algebra_dimension = 0;
  bool pair_groupoid = false;
  bool full_matrix_units = false;
  ValidationReport axioms;
};

ObviousActionReport obvious_action_groupoid(const ConePair& cp, std::int64_t truncation,
                                            std::int64_t translation_radius);

}  // namespace groupoidal
