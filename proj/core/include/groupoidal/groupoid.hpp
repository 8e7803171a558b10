#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "groupoidal/isg.hpp"
#include "groupoidal/pbij.hpp"

namespace groupoidal {

using Label = std::uint32_t;
using ArrowId = std::uint32_t;

// Labels of arrows: a set with a unit, inverses and a partially defined
// product. Either the maximal elements of an F~ semigroup, a finite group
// table, or an integer interval under truncated addition.
class LabelStructure {
 public:
  static LabelStructure from_maximal(const InverseSemigroup& s, const MaximalStructure& ms);
  static LabelStructure from_group_table(const std::vector<std::vector<std::uint32_t>>& table);
  // labels -n..n stored at index n + k
  static LabelStructure integer_interval(long bound);
  // product[x * n + y] = xy or -1 when undefined
  static LabelStructure from_partial_table(std::vector<std::int32_t> product, std::vector<Label> inverse,
                                           Label unit, std::vector<std::string> names);

  std::size_t size() const { return inverse_.size(); }
  Label unit() const { return unit_; }
  Label inverse(Label x) const { return inverse_[x]; }
  std::optional<Label> multiply(Label x, Label y) const;
  const std::string& name(Label x) const { return names_[x]; }
  bool is_total() const;

 private:
  std::vector<std::int32_t> product_;
  std::vector<Label> inverse_;
  std::vector<std::string> names_;
  Label unit_ = 0;
};

struct Action {
  std::shared_ptr<const InverseSemigroup> semigroup;
  GroundSet omega;
  std::vector<PartialBijection> phi;  // indexed by ElementId

  static Action tautological(std::shared_ptr<const InverseSemigroup> s);
};

struct Violation {
  std::string rule;
  std::vector<std::size_t> witnesses;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

ValidationReport validate_action(const Action& a);

struct Arrow {
  Label label;
  Point source;  // d
  Point target;  // r
};

class Groupoid {
 public:
  // label_maps[x] is the partial bijection on the unit space attached to label x
  Groupoid(LabelStructure labels, std::size_t unit_count, std::vector<PartialBijection> label_maps);

  std::size_t arrow_count() const { return arrows_.size(); }
  std::size_t unit_count() const { return unit_count_; }
  const Arrow& arrow(ArrowId g) const { return arrows_[g]; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const LabelStructure& labels() const { return labels_; }
  const PartialBijection& label_map(Label x) const { return label_maps_[x]; }

  std::optional<ArrowId> find(Label x, Point source) const;
  ArrowId unit_arrow(Point w) const;
  bool is_unit(ArrowId g) const { return arrows_[g].label == labels_.unit(); }
  ArrowId inverse(ArrowId g) const;
  // g h, defined iff d(g) == r(h)
  std::optional<ArrowId> compose(ArrowId g, ArrowId h) const;
  std::span<const ArrowId> fiber(Label x) const;
  // arrows with given range
  std::span<const ArrowId> arrows_into(Point w) const;

  std::size_t composable_pair_count() const;
  std::string arrow_name(ArrowId g) const;

 private:
  LabelStructure labels_;
  std::size_t unit_count_;
  std::vector<PartialBijection> label_maps_;
  std::vector<Arrow> arrows_;
  std::vector<std::int32_t> lookup_;              // label * units + point
  std::vector<std::vector<ArrowId>> fibers_;
  std::vector<std::vector<ArrowId>> by_target_;
};

Groupoid build_groupoid(const Action& a, const MaximalStructure& ms);

// Tautological action of an F~ semigroup together with its groupoid.
struct ActionBundle {
  Action action;
  MaximalStructure ms;
  Groupoid groupoid;
};

ActionBundle tautological_bundle(std::shared_ptr<const InverseSemigroup> s);
ActionBundle action_bundle(Action a);

// Groupoid graded by a group of labels; grade[x] is the element attached to label x.
Groupoid build_graded_groupoid(const Action& a, const LabelStructure& group,
                               const std::vector<ElementId>& grade);

std::map<Label, std::vector<ArrowId>> decompose_by_fiber(const Groupoid& g);

using GSet = std::vector<ArrowId>;  // sorted

bool is_gset(const Groupoid& g, const GSet& a);
GSet gset_product(const Groupoid& g, const GSet& a, const GSet& b);
GSet gset_inverse(const Groupoid& g, const GSet& a);

GSet ample_map(const Action& a, const MaximalStructure& ms, const Groupoid& g, ElementId alpha);
// exhaustive check of A(a)A(b) = A(ab), A(a)^-1 = A(a*), A(eps) = units
ValidationReport check_ample_map(const Action& a, const MaximalStructure& ms, const Groupoid& g);

ValidationReport validate_groupoid(const Groupoid& g);
bool is_principal(const Groupoid& g);
bool is_pair_groupoid(const Groupoid& g);

// Orbits of the unit space under the groupoid, as an edge list d -> r.
std::vector<std::pair<Point, Point>> orbit_edges(const Groupoid& g);
std::string to_graphviz(const Groupoid& g);

}  // namespace groupoidal
