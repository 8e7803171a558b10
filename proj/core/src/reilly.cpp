#include "groupoidal/reilly.hpp"

#include <algorithm>

#include "groupoidal/error.hpp"

namespace groupoidal {

ReillyFragment::ReillyFragment(GroupTable g, std::vector<std::uint32_t> sigma, std::uint32_t bound)
    : g_(std::move(g)), sigma_(std::move(sigma)), bound_(bound) {
  const std::uint32_t e = validate_group(g_);
  const std::size_t n = g_.size();
  if (sigma_.size() != n) throw StructuralError("automorphism has wrong length");
  std::vector<bool> hit(n);
  for (auto v : sigma_) {
    if (v >= n || hit[v]) throw StructuralError("sigma is not a bijection");
    hit[v] = true;
  }
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      if (sigma_[g_[x][y]] != g_[sigma_[x]][sigma_[y]]) throw StructuralError("sigma is not a homomorphism");
  inverse_.resize(n);
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      if (g_[x][y] == e) inverse_[x] = y;
  for (std::uint32_t m = 0; m <= bound_; ++m)
    for (std::uint32_t x = 0; x < n; ++x)
      for (std::uint32_t q = 0; q <= bound_; ++q) elements_.push_back({m, x, q});
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b)
      if (!product(a, b)) ++overflow_;
}

std::uint32_t ReillyFragment::apply_sigma(std::uint32_t x, std::uint32_t times) const {
  for (std::uint32_t i = 0; i < times; ++i) x = sigma_[x];
  return x;
}

std::optional<std::size_t> ReillyFragment::index_of(const ReillyElement& e) const {
  if (e.m > bound_ || e.n > bound_ || e.x >= g_.size()) return std::nullopt;
  return (static_cast<std::size_t>(e.m) * g_.size() + e.x) * (bound_ + 1) + e.n;
}

ReillyElement ReillyFragment::multiply(const ReillyElement& a, const ReillyElement& b) const {
  const std::uint32_t k = std::max(a.n, b.m);
  return {a.m - a.n + k, g_[apply_sigma(a.x, k - a.n)][apply_sigma(b.x, k - b.m)], b.n - b.m + k};
}

ReillyElement ReillyFragment::star(const ReillyElement& a) const {
  return {a.n, inverse_[a.x], a.m};
}

std::optional<std::size_t> ReillyFragment::product(std::size_t a, std::size_t b) const {
  return index_of(multiply(elements_[a], elements_[b]));
}

bool ReillyFragment::leq(const ReillyElement& a, const ReillyElement& b) const {
  return multiply(star(b), a) == multiply(star(a), a);
}

std::string ReillyFragment::name(const ReillyElement& e) const {
  return "(" + std::to_string(e.m) + "," + std::to_string(e.x) + "," + std::to_string(e.n) + ")";
}

ReillyReport reilly_audit(const ReillyFragment& f) {
  ReillyReport rep;
  rep.elements = f.size();
  rep.overflow_pairs = f.overflow_pairs();
  for (std::size_t a = 0; a < f.size(); ++a) {
    const auto& x = f.element(a);
    if (f.multiply(f.multiply(x, f.star(x)), x) != x) {
      rep.inverse_axioms = false;
      rep.failures.push_back("a a* a != a at " + f.name(x));
    }
    for (std::size_t b = 0; b < f.size(); ++b) {
      const auto& y = f.element(b);
      if (f.star(f.multiply(x, y)) != f.multiply(f.star(y), f.star(x))) {
        rep.inverse_axioms = false;
        rep.failures.push_back("(ab)* != b* a* at " + f.name(x) + f.name(y));
      }
      auto ab = f.product(a, b);
      if (!ab) continue;
      for (std::size_t c = 0; c < f.size(); ++c) {
        auto bc = f.product(b, c);
        if (!bc) continue;
        auto l = f.product(*ab, c);
        auto r = f.product(a, *bc);
        if (l && r && *l != *r) {
          rep.associative = false;
          rep.failures.push_back("associativity at " + f.name(x) + f.name(y) + f.name(f.element(c)));
        }
      }
    }
  }
  for (std::size_t a = 0; a < f.size(); ++a) {
    const auto& x = f.element(a);
    bool maximal = true;
    for (std::size_t b = 0; b < f.size() && maximal; ++b)
      if (b != a && f.leq(x, f.element(b))) maximal = false;
    if (maximal) rep.maximal.push_back(a);
    if (std::min(x.m, x.n) == 0) rep.predicted_maximal.push_back(a);
  }
  for (std::size_t a = 0; a < f.size(); ++a) {
    std::size_t majorants = 0;
    for (auto b : rep.maximal)
      if (f.leq(f.element(a), f.element(b))) ++majorants;
    if (majorants != 1) {
      rep.unique_majorants = false;
      rep.failures.push_back(f.name(f.element(a)) + " has " + std::to_string(majorants) + " maximal majorants");
    }
  }
  rep.maximal_matches = rep.maximal == rep.predicted_maximal;
  return rep;
}

}  // namespace groupoidal
