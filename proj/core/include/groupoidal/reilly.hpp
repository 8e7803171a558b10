#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "groupoidal/clifford.hpp"

namespace groupoidal {

struct ReillyElement {
  std::uint32_t m = 0;
  std::uint32_t x = 0;
  std::uint32_t n = 0;
  friend bool operator==(const ReillyElement&, const ReillyElement&) = default;
};

// (m,x,n)(p,y,q) = (m - n + k, s^{k-n}(x) s^{k-p}(y), q - p + k), k = max(n, p)
class ReillyFragment {
 public:
  ReillyFragment(GroupTable g, std::vector<std::uint32_t> sigma, std::uint32_t bound);

  std::size_t size() const { return elements_.size(); }
  const ReillyElement& element(std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> index_of(const ReillyElement& e) const;

  ReillyElement multiply(const ReillyElement& a, const ReillyElement& b) const;  // unbounded
  ReillyElement star(const ReillyElement& a) const;
  // product inside the fragment, nullopt on overflow
  std::optional<std::size_t> product(std::size_t a, std::size_t b) const;
  // a <= b via b* a = a* a (unbounded arithmetic)
  bool leq(const ReillyElement& a, const ReillyElement& b) const;

  std::size_t overflow_pairs() const { return overflow_; }
  std::string name(const ReillyElement& e) const;

 private:
  std::uint32_t apply_sigma(std::uint32_t x, std::uint32_t times) const;

  GroupTable g_;
  std::vector<std::uint32_t> sigma_;
  std::vector<std::uint32_t> inverse_;
  std::uint32_t bound_;
  std::vector<ReillyElement> elements_;
  std::size_t overflow_ = 0;
};

struct ReillyReport {
  std::size_t elements = 0;
  std::size_t overflow_pairs = 0;
  bool inverse_axioms = true;      // a a* a = a, (ab)* = b* a*, where defined
  bool associative = true;         // where all products stay in the fragment
  std::vector<std::size_t> maximal;          // by the natural order on the fragment
  std::vector<std::size_t> predicted_maximal;  // min(m, n) = 0
  bool unique_majorants = true;
  bool maximal_matches = false;
  std::vector<std::string> failures;
  bool ok() const { return inverse_axioms && associative && unique_majorants && maximal_matches; }
};

ReillyReport reilly_audit(const ReillyFragment& f);

}  // namespace groupoidal
