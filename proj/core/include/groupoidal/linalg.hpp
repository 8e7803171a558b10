#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "groupoidal/rational.hpp"

namespace groupoidal {

using SparseVector = std::map<std::size_t, Rational>;

void axpy(SparseVector& y, const Rational& a, const SparseVector& x);
bool is_zero(const SparseVector& v);

// Incremental exact row echelon basis of a subspace of Q^n.
class SpanBuilder {
 public:
  // Returns true when v was independent of the current span.
  bool insert(const SparseVector& v);
  bool contains(const SparseVector& v) const;
  std::size_t rank() const { return rows_.size(); }
  SparseVector reduce(SparseVector v) const;

 private:
  std::map<std::size_t, SparseVector> rows_;  // pivot column -> row with leading 1
};

std::size_t rank_of(const std::vector<SparseVector>& vectors);

// Basis of {c : sum_i c_i v_i = 0}, each kernel vector indexed by input position.
std::vector<SparseVector> kernel_of(const std::vector<SparseVector>& vectors);

}  // namespace groupoidal
