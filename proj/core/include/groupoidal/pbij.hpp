#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace groupoidal {

using Point = std::uint32_t;
inline constexpr Point kNoPoint = static_cast<Point>(-1);

struct GroundSet {
  std::size_t size = 1;
  std::vector<std::string> labels;

  static GroundSet of_size(std::size_t n);
  static GroundSet labelled(std::vector<std::string> labels);

  std::string label(Point p) const;
  void validate() const;
};

// Injective partial self-map of {0..n-1}, stored as a dense image array
// (kNoPoint where undefined). Composition convention everywhere:
// compose(f, g)(t) = f(g(t)), the right factor acts first.
class PartialBijection {
 public:
  PartialBijection() = default;
  explicit PartialBijection(std::size_t ground_size);

  static PartialBijection void_map(std::size_t n);
  static PartialBijection identity(std::size_t n);
  static PartialBijection identity_on(std::size_t n, std::span<const Point> points);
  static PartialBijection from_pairs(std::size_t n, std::span<const std::pair<Point, Point>> pairs);
  static PartialBijection from_images(std::vector<Point> images);

  std::size_t ground_size() const { return image_.size(); }
  Point image(Point t) const { return t < image_.size() ? image_[t] : kNoPoint; }
  bool defined_at(Point t) const { return image(t) != kNoPoint; }
  std::optional<Point> operator()(Point t) const;

  std::span<const Point> images() const { return image_; }
  std::vector<Point> domain() const;
  std::vector<Point> range() const;
  std::vector<std::pair<Point, Point>> pairs() const;
  std::size_t domain_size() const;

  bool is_void() const;
  bool is_identity() const;
  bool is_idempotent() const;

  std::string to_string(const GroundSet* ground = nullptr) const;

  friend bool operator==(const PartialBijection&, const PartialBijection&) = default;
  friend std::strong_ordering operator<=>(const PartialBijection& a, const PartialBijection& b);

 private:
  std::vector<Point> image_;
};

struct PartialBijectionHash {
  std::size_t operator()(const PartialBijection& f) const noexcept;
};

PartialBijection compose(const PartialBijection& f, const PartialBijection& g);
PartialBijection star(const PartialBijection& f);
PartialBijection power(const PartialBijection& f, long n);

// Restriction test.
bool natural_leq(const PartialBijection& f, const PartialBijection& g);
// star(g) o f == star(f) o f
bool natural_leq_algebraic(const PartialBijection& f, const PartialBijection& g);

struct DynamicsReport {
  std::vector<Point> t_infinite;
  std::vector<Point> t_finite;
  // lcm of cycle lengths on T_inf, 0 when T_inf is empty
  std::size_t core_period = 0;
  bool core_periodic = true;
  bool core_nonconstant = false;
  // smallest k >= 1 with f^k void on T_f, 0 when T_f is empty
  std::size_t nilpotency_index = 0;
  bool transient_nilpotent = true;
};

DynamicsReport classify_point_dynamics(const PartialBijection& f);

// Every partial bijection on n points, in a fixed order.
std::vector<PartialBijection> all_partial_bijections(std::size_t n);

}  // namespace groupoidal
