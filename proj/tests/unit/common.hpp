#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "groupoidal/groupoid.hpp"
#include "groupoidal/isg.hpp"
#include "groupoidal/pbij.hpp"

namespace testing_support {

using namespace groupoidal;

inline PartialBijection pb(std::size_t n, std::vector<std::pair<Point, Point>> pairs) {
  return PartialBijection::from_pairs(n, pairs);
}

inline std::shared_ptr<const InverseSemigroup> closure_ptr(std::size_t n, std::vector<PartialBijection> gens) {
  return std::make_shared<const InverseSemigroup>(generate_closure(n, gens));
}

inline Label label_of(const InverseSemigroup& s, const MaximalStructure& ms, const PartialBijection& f) {
  return *ms.index_of(*s.find(f));
}

}  // namespace testing_support
