#include "groupoidal/cuntz_krieger.hpp"

#include <algorithm>
#include <map>

#include "groupoidal/error.hpp"
#include "groupoidal/kumjian.hpp"

namespace groupoidal {

namespace {

bool is_prefix(const Word& p, const Word& w) {
  return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::set<Word> normalize(const CKMatrix& a, std::set<Word> words) {
  for (auto it = words.begin(); it != words.end();)
    it = a.admissible(*it) ? std::next(it) : words.erase(it);
  bool changed = true;
  while (changed) {
    changed = false;
    if (words.count(Word{})) return {Word{}};
    for (auto it = words.begin(); it != words.end();) {
      bool covered = false;
      for (std::size_t k = 0; k < it->size() && !covered; ++k)
        covered = words.count(Word(it->begin(), it->begin() + k)) > 0;
      it = covered ? words.erase(it) : std::next(it);
    }
    std::map<Word, std::size_t> children;
    for (const auto& w : words) ++children[Word(w.begin(), w.end() - 1)];
    for (const auto& [parent, count] : children) {
      auto succ = a.successors(parent);
      if (count != succ.size()) continue;
      bool all = std::all_of(succ.begin(), succ.end(),
                             [&](std::uint32_t l) { return words.count(concat(parent, {l})) > 0; });
      if (!all) continue;
      for (auto l : succ) words.erase(concat(parent, {l}));
      words.insert(parent);
      changed = true;
      break;
    }
  }
  return words;
}

}  // namespace

CKMatrix::CKMatrix(std::vector<std::vector<int>> entries) : a_(std::move(entries)) {
  const std::size_t n = a_.size();
  if (n == 0) throw StructuralError("empty matrix");
  for (const auto& row : a_) {
    if (row.size() != n) throw StructuralError("matrix is not square");
    for (int v : row)
      if (v != 0 && v != 1) throw StructuralError("matrix entries must be 0 or 1");
  }
  // reachability by paths of positive length
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) reach[i][j] = a_[i][j] == 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!reach[i][j]) throw StructuralError("matrix is not irreducible");
  bool permutation = true;
  for (std::size_t i = 0; i < n && permutation; ++i) {
    int row = 0, col = 0;
    for (std::size_t j = 0; j < n; ++j) {
      row += a_[i][j];
      col += a_[j][i];
    }
    permutation = row == 1 && col == 1;
  }
  if (permutation) throw StructuralError("matrix is a permutation matrix");
}

bool CKMatrix::admissible(const Word& w) const {
  for (auto l : w)
    if (l >= size()) return false;
  for (std::size_t k = 0; k + 1 < w.size(); ++k)
    if (!allowed(w[k], w[k + 1])) return false;
  return true;
}

std::vector<std::uint32_t> CKMatrix::successors(const Word& w) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t l = 0; l < size(); ++l)
    if (w.empty() || allowed(w.back(), l)) out.push_back(l);
  return out;
}

std::string word_string(const Word& w) {
  if (w.empty()) return "()";
  std::string s;
  for (auto l : w) s += std::to_string(l + 1);
  return s;
}

CylinderSet CylinderSet::everything() {
  CylinderSet c;
  c.words_ = {Word{}};
  return c;
}

CylinderSet CylinderSet::of(const CKMatrix& a, std::set<Word> words) {
  CylinderSet c;
  c.words_ = normalize(a, std::move(words));
  return c;
}

std::string CylinderSet::to_string() const {
  if (empty()) return "{}";
  std::string s = "{";
  bool first = true;
  for (const auto& w : words_) {
    s += (first ? "[" : ",[") + (w.empty() ? std::string("X") : word_string(w)) + "]";
    first = false;
  }
  return s + "}";
}

CylinderSet cyl_union(const CKMatrix& a, const CylinderSet& x, const CylinderSet& y) {
  std::set<Word> w = x.words();
  w.insert(y.words().begin(), y.words().end());
  return CylinderSet::of(a, std::move(w));
}

CylinderSet cyl_intersection(const CKMatrix& a, const CylinderSet& x, const CylinderSet& y) {
  std::set<Word> out;
  for (const auto& p : x.words())
    for (const auto& q : y.words()) {
      if (is_prefix(p, q)) out.insert(q);
      else if (is_prefix(q, p)) out.insert(p);
    }
  return CylinderSet::of(a, std::move(out));
}

CylinderSet cyl_quotient(const CKMatrix& a, const CylinderSet& x, const Word& p) {
  CylinderSet cur = x;
  for (auto l : p) {
    std::set<Word> out;
    for (const auto& w : cur.words()) {
      if (w.empty() || (w.size() == 1 && w[0] == l)) {
        for (auto m : a.successors({l})) out.insert({m});
      } else if (w[0] == l) {
        out.insert(Word(w.begin() + 1, w.end()));
      }
    }
    cur = CylinderSet::of(a, std::move(out));
  }
  return cur;
}

CylinderSet cyl_prefix(const CKMatrix& a, const CylinderSet& x, const Word& p) {
  if (p.empty()) return x;
  std::set<Word> out;
  for (const auto& w : x.words()) out.insert(concat(p, w));
  return CylinderSet::of(a, std::move(out));
}

CylinderSet cyl_followers(const CKMatrix& a, const Word& w) {
  std::set<Word> out;
  for (auto l : a.successors(w)) out.insert({l});
  return CylinderSet::of(a, std::move(out));
}

CylinderSet PrefixMap::domain(const CKMatrix& a) const {
  return zero ? CylinderSet{} : cyl_prefix(a, tails, v);
}

CylinderSet PrefixMap::range(const CKMatrix& a) const {
  return zero ? CylinderSet{} : cyl_prefix(a, tails, u);
}

std::string PrefixMap::to_string() const {
  if (zero) return "theta";
  return "[" + word_string(v) + " -> " + word_string(u) + " on " + tails.to_string() + "]";
}

PrefixMap pm_identity() {
  return PrefixMap{false, {}, {}, CylinderSet::everything()};
}

PrefixMap pm_make(const CKMatrix& a, Word u, Word v, CylinderSet tails) {
  PrefixMap f;
  if (!a.admissible(u) || !a.admissible(v)) return f;
  tails = cyl_intersection(a, tails, cyl_followers(a, u));
  tails = cyl_intersection(a, tails, cyl_followers(a, v));
  // push a common first letter of all tails into u and v
  for (std::size_t guard = 0; !tails.empty(); ++guard) {
    if (guard > 4 * a.size() + 64) throw StructuralError("prefix normalization does not terminate");
    std::set<std::uint32_t> first;
    if (tails.is_everything()) {
      for (std::uint32_t l = 0; l < a.size(); ++l) first.insert(l);
    } else {
      for (const auto& w : tails.words()) first.insert(w[0]);
    }
    if (first.size() != 1) break;
    std::uint32_t l = *first.begin();
    tails = cyl_quotient(a, tails, {l});
    u.push_back(l);
    v.push_back(l);
  }
  if (tails.empty()) return f;
  f.zero = false;
  f.u = std::move(u);
  f.v = std::move(v);
  f.tails = std::move(tails);
  return f;
}

PrefixMap pm_beta(const CKMatrix& a, std::uint32_t m) {
  if (m >= a.size()) throw StructuralError("generator index out of range");
  return pm_make(a, {m}, {}, CylinderSet::everything());
}

PrefixMap pm_compose(const CKMatrix& a, const PrefixMap& f, const PrefixMap& g) {
  if (f.zero || g.zero) return {};
  if (is_prefix(g.u, f.v)) {
    Word r(f.v.begin() + g.u.size(), f.v.end());
    return pm_make(a, f.u, concat(g.v, r), cyl_intersection(a, f.tails, cyl_quotient(a, g.tails, r)));
  }
  if (is_prefix(f.v, g.u)) {
    Word r(g.u.begin() + f.v.size(), g.u.end());
    return pm_make(a, concat(f.u, r), g.v, cyl_intersection(a, g.tails, cyl_quotient(a, f.tails, r)));
  }
  return {};
}

PrefixMap pm_star(const PrefixMap& f) {
  if (f.zero) return f;
  return PrefixMap{false, f.v, f.u, f.tails};
}

bool pm_idempotent(const PrefixMap& f) {
  return f.zero || f.u == f.v;
}

bool pm_leq(const CKMatrix& a, const PrefixMap& f, const PrefixMap& g) {
  if (f.zero) return true;
  return pm_compose(a, g, pm_compose(a, pm_star(f), f)) == f;
}

std::string FreeWord::to_string() const {
  std::string s;
  for (auto l : positive) s += "g" + std::to_string(l + 1);
  for (std::size_t k = negative.size(); k-- > 0;) s += "g" + std::to_string(negative[k] + 1) + "^-1";
  return s.empty() ? "e" : s;
}

bool in_MA(const CKMatrix& a, const FreeWord& x) {
  const auto& p = x.positive;
  const auto& q = x.negative;
  if (!p.empty() && !q.empty() && p.back() == q.back()) return false;
  if (!a.admissible(p) || !a.admissible(q)) return false;
  if (!p.empty() && !q.empty()) {
    bool common = false;
    for (std::uint32_t l = 0; l < a.size() && !common; ++l) common = a.allowed(p.back(), l) && a.allowed(q.back(), l);
    if (!common) return false;
  }
  return true;
}

PrefixMap beta_of(const CKMatrix& a, const FreeWord& x) {
  PrefixMap f = pm_identity();
  for (auto i : x.positive) f = pm_compose(a, f, pm_beta(a, i));
  for (std::size_t k = x.negative.size(); k-- > 0;) f = pm_compose(a, f, pm_star(pm_beta(a, x.negative[k])));
  return f;
}

std::optional<FreeWord> free_product(const FreeWord& x, const FreeWord& y) {
  // x y = P1 N1^-1 P2 N2^-1; cancel N1^-1 P2 from the middle
  Word n1 = x.negative, p2 = y.positive;
  std::size_t k = 0;
  while (k < n1.size() && k < p2.size() && n1[k] == p2[k]) ++k;
  n1.erase(n1.begin(), n1.begin() + k);
  p2.erase(p2.begin(), p2.begin() + k);
  if (!n1.empty() && !p2.empty()) return std::nullopt;
  FreeWord out;
  out.positive = concat(x.positive, p2);
  out.negative = concat(y.negative, n1);
  while (!out.positive.empty() && !out.negative.empty() && out.positive.back() == out.negative.back()) {
    out.positive.pop_back();
    out.negative.pop_back();
  }
  return out;
}

namespace {

std::vector<Word> all_words(std::size_t n, std::size_t len) {
  std::vector<Word> out{{}};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (std::uint32_t l = 0; l < n; ++l) next.push_back(concat(w, {l}));
    out = std::move(next);
  }
  return out;
}

// reduced words P N^-1 with |P| + |N| <= len
std::vector<FreeWord> reduced_words(std::size_t n, std::size_t len) {
  std::vector<FreeWord> out;
  for (std::size_t p = 0; p <= len; ++p)
    for (std::size_t q = 0; p + q <= len; ++q)
      for (const auto& pw : all_words(n, p))
        for (const auto& qw : all_words(n, q)) {
          if (p > 0 && q > 0 && pw.back() == qw.back()) continue;
          out.push_back({pw, qw});
        }
  return out;
}

// products of at most len generators and their stars
std::vector<PrefixMap> fragment(const CKMatrix& a, std::size_t len) {
  std::vector<PrefixMap> moves;
  for (std::uint32_t m = 0; m < a.size(); ++m) {
    moves.push_back(pm_beta(a, m));
    moves.push_back(pm_star(pm_beta(a, m)));
  }
  std::set<PrefixMap> seen{pm_identity()};
  std::vector<PrefixMap> frontier{pm_identity()};
  for (std::size_t step = 0; step < len; ++step) {
    std::vector<PrefixMap> next;
    for (const auto& f : frontier)
      for (const auto& m : moves) {
        auto g = pm_compose(a, f, m);
        if (seen.insert(g).second) next.push_back(g);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

CKSemigroupReport ck_semigroup(const CKMatrix& a, std::size_t word_length) {
  CKSemigroupReport rep;
  rep.word_length = word_length;
  auto frag = fragment(a, word_length);
  rep.fragment_size = frag.size();

  for (std::size_t len = 1; len <= word_length; ++len)
    for (const auto& w : all_words(a.size(), len)) {
      if (!a.admissible(w)) continue;
      FreeWord x{{}, w};
      std::set<Word> cyl{w};
      if (beta_of(a, x).domain(a) != CylinderSet::of(a, cyl)) {
        rep.localization = false;
        rep.failures.push_back("cylinder [" + word_string(w) + "] is not the domain of " + x.to_string());
      }
    }

  std::vector<bool> maximal(frag.size(), false);
  for (std::size_t i = 0; i < frag.size(); ++i) {
    if (frag[i].zero) continue;
    bool is_max = true;
    for (std::size_t j = 0; j < frag.size() && is_max; ++j)
      if (j != i && pm_leq(a, frag[i], frag[j])) is_max = false;
    maximal[i] = is_max;
  }
  for (std::size_t i = 0; i < frag.size(); ++i) {
    if (frag[i].zero) continue;
    std::size_t majorants = 0;
    for (std::size_t j = 0; j < frag.size(); ++j)
      if (maximal[j] && pm_leq(a, frag[i], frag[j])) ++majorants;
    if (majorants != 1) {
      rep.f_tilde = false;
      rep.failures.push_back(frag[i].to_string() + " has " + std::to_string(majorants) + " maximal majorants");
    }
  }
  auto is_maximal = [&](const PrefixMap& f) {
    auto it = std::lower_bound(frag.begin(), frag.end(), f);
    return it != frag.end() && *it == f && maximal[it - frag.begin()];
  };

  std::set<PrefixMap> from_ma;
  std::vector<FreeWord> ma;
  for (const auto& x : reduced_words(a.size(), word_length)) {
    ++rep.words_tested;
    bool in = in_MA(a, x);
    PrefixMap b = beta_of(a, x);
    bool direct = !b.zero && is_maximal(b);
    if (in) {
      ++rep.ma_size;
      ma.push_back(x);
      from_ma.insert(b);
    }
    rep.table.push_back(x.to_string() + ": " + (in ? "in M_A" : "not in M_A") + ", " +
                        (b.zero ? "theta" : (direct ? "maximal" : "not maximal")));
    if (in != direct) {
      rep.lemma_matches = false;
      rep.failures.push_back("word " + x.to_string() + " disagrees with the order");
    }
  }
  for (std::size_t i = 0; i < frag.size(); ++i)
    if (maximal[i] && !from_ma.count(frag[i])) {
      rep.maximal_are_beta_x = false;
      rep.failures.push_back("maximal " + frag[i].to_string() + " is not beta_x for x in M_A");
    }

  for (const auto& x : ma)
    for (const auto& y : ma) {
      if (x.positive.size() + x.negative.size() + y.positive.size() + y.negative.size() > word_length) continue;
      PrefixMap p = pm_compose(a, beta_of(a, x), beta_of(a, y));
      if (p.zero) continue;
      auto xy = free_product(x, y);
      if (!xy || !in_MA(a, *xy) || !pm_leq(a, p, beta_of(a, *xy))) {
        rep.free_product_consistent = false;
        rep.failures.push_back("product " + x.to_string() + " * " + y.to_string());
      }
    }
  return rep;
}

CKRelationsReport ck_relations(const CKMatrix& a) {
  CKRelationsReport rep;
  const std::size_t n = a.size();
  std::vector<CylinderSet> dom, ran;
  for (std::uint32_t i = 0; i < n; ++i) {
    PrefixMap b = pm_beta(a, i);
    dom.push_back(b.domain(a));
    ran.push_back(b.range(a));
    rep.domains.push_back(dom.back().to_string());
    rep.ranges.push_back(ran.back().to_string());
  }
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (!cyl_intersection(a, ran[i], ran[j]).empty()) {
        rep.ranges_disjoint = false;
        rep.failures.push_back("Ran(beta_" + std::to_string(i + 1) + ") meets Ran(beta_" + std::to_string(j + 1) + ")");
      }
  for (std::uint32_t i = 0; i < n; ++i) {
    CylinderSet sum;
    for (std::uint32_t j = 0; j < n; ++j)
      if (a.allowed(i, j)) {
        if (!cyl_intersection(a, sum, ran[j]).empty()) rep.domains_decompose = false;
        sum = cyl_union(a, sum, ran[j]);
      }
    if (sum != dom[i]) {
      rep.domains_decompose = false;
      rep.failures.push_back("Dom(beta_" + std::to_string(i + 1) + ") = " + dom[i].to_string() + " but sum is " +
                             sum.to_string());
    }
  }
  return rep;
}

CKFreenessReport ck_freeness(const CKMatrix& a, std::size_t word_length) {
  CKFreenessReport rep;
  for (const auto& f0 : fragment(a, word_length)) {
    if (f0.zero || f0.u == f0.v) continue;
    for (const auto& f : {f0, pm_star(f0)}) {
      if (f.u.size() <= f.v.size() || !is_prefix(f.v, f.u)) continue;
      Word r(f.u.begin() + f.v.size(), f.u.end());
      if (!a.admissible(r) || !a.allowed(r.back(), r.front())) continue;
      // r r r ... must lie in the tail set
      bool inside = false;
      for (const auto& t : f.tails.words()) {
        Word periodic;
        while (periodic.size() < t.size()) periodic = concat(periodic, r);
        if (is_prefix(t, periodic)) inside = true;
      }
      if (!inside) continue;
      rep.free = false;
      rep.witness = f0.to_string() + " fixes " + word_string(f.v) + "(" + word_string(r) + ")^inf";
      return rep;
    }
  }
  return rep;
}

FreeLocalizationReport free_localization_audit(const ActionBundle& b) {
  FreeLocalizationReport rep;
  std::string why;
  rep.localization = is_localization(b.action, &why);
  if (!rep.localization) rep.witness = why;
  rep.free = true;
  const auto& s = *b.action.semigroup;
  for (ElementId x = 0; x < s.size(); ++x) {
    const auto& f = b.action.phi[x];
    bool fixed = false;
    for (Point w : f.domain()) fixed = fixed || f.image(w) == w;
    if (fixed && !s.is_idempotent(x)) {
      rep.fixed_points_idempotent = false;
      if (!rep.witness) rep.witness = s.name(x) + " has a fixed point but is not idempotent";
    }
  }
  rep.principal = is_principal(b.groupoid);
  return rep;
}

}  // namespace groupoidal
