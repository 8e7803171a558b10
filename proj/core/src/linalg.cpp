#include "groupoidal/linalg.hpp"

namespace groupoidal {

void axpy(SparseVector& y, const Rational& a, const SparseVector& x) {
  if (sgn(a) == 0) return;
  for (const auto& [k, v] : x) {
    auto [it, inserted] = y.try_emplace(k, 0);
    it->second += a * v;
    if (sgn(it->second) == 0) y.erase(it);
  }
}

bool is_zero(const SparseVector& v) {
  for (const auto& [k, x] : v)
    if (sgn(x) != 0) return false;
  return true;
}

SparseVector SpanBuilder::reduce(SparseVector v) const {
  for (auto it = v.begin(); it != v.end();) {
    if (sgn(it->second) == 0) {
      it = v.erase(it);
      continue;
    }
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    std::size_t pivot = it->first;
    Rational c = -it->second;
    axpy(v, c, row->second);
    it = v.upper_bound(pivot);
  }
  return v;
}

bool SpanBuilder::insert(const SparseVector& v) {
  SparseVector r = reduce(v);
  if (r.empty()) return false;
  // eliminate the new pivot from existing rows to keep the basis reduced
  std::size_t pivot = r.begin()->first;
  Rational lead = r.begin()->second;
  for (auto& [k, x] : r) x /= lead;
  for (auto& [p, row] : rows_) {
    auto hit = row.find(pivot);
    if (hit != row.end()) {
      Rational c = -hit->second;
      axpy(row, c, r);
    }
  }
  rows_.emplace(pivot, std::move(r));
  return true;
}

bool SpanBuilder::contains(const SparseVector& v) const { return reduce(v).empty(); }

std::size_t rank_of(const std::vector<SparseVector>& vectors) {
  SpanBuilder sb;
  for (const auto& v : vectors) sb.insert(v);
  return sb.rank();
}

std::vector<SparseVector> kernel_of(const std::vector<SparseVector>& vectors) {
  // Track combinations: each echelon row carries the coefficients that produced it.
  struct Row {
    SparseVector value;
    SparseVector combo;
  };
  std::map<std::size_t, Row> rows;
  std::vector<SparseVector> kernel;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    Row cur{vectors[i], SparseVector{{i, Rational(1)}}};
    for (auto it = cur.value.begin(); it != cur.value.end();) {
      auto row = rows.find(it->first);
      if (row == rows.end()) {
        ++it;
        continue;
      }
      std::size_t pivot = it->first;
      Rational c = -it->second / row->second.value.at(pivot);
      axpy(cur.value, c, row->second.value);
      axpy(cur.combo, c, row->second.combo);
      it = cur.value.upper_bound(pivot);
    }
    if (cur.value.empty()) {
      kernel.push_back(std::move(cur.combo));
    } else {
      std::size_t pivot = cur.value.begin()->first;
      rows.emplace(pivot, std::move(cur));
    }
  }
  return kernel;
}

}  // namespace groupoidal
