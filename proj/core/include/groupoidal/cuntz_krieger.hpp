#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "groupoidal/groupoid.hpp"
#include "groupoidal/isg.hpp"

namespace groupoidal {

// Letters are 0-based internally and printed 1-based.
using Word = std::vector<std::uint32_t>;

class CKMatrix {
 public:
  // validates: square 0/1, irreducible, not a permutation matrix
  explicit CKMatrix(std::vector<std::vector<int>> entries);

  std::size_t size() const { return a_.size(); }
  bool allowed(std::uint32_t i, std::uint32_t j) const { return a_[i][j] != 0; }
  bool admissible(const Word& w) const;
  // letters allowed after w (all letters for the empty word)
  std::vector<std::uint32_t> successors(const Word& w) const;
  const std::vector<std::vector<int>>& entries() const { return a_; }

 private:
  std::vector<std::vector<int>> a_;
};

std::string word_string(const Word& w);

// Clopen subset of X_A as a union of cylinders V_w. Normalized: admissible
// words only, an antichain, and no node whose admissible children are all
// present. The empty word stands for X_A.
class CylinderSet {
 public:
  CylinderSet() = default;
  static CylinderSet everything();
  static CylinderSet of(const CKMatrix& a, std::set<Word> words);

  const std::set<Word>& words() const { return words_; }
  bool empty() const { return words_.empty(); }
  bool is_everything() const { return words_.size() == 1 && words_.begin()->empty(); }
  std::string to_string() const;

  friend bool operator==(const CylinderSet&, const CylinderSet&) = default;
  friend auto operator<=>(const CylinderSet&, const CylinderSet&) = default;

 private:
  std::set<Word> words_;
};

CylinderSet cyl_union(const CKMatrix& a, const CylinderSet& x, const CylinderSet& y);
CylinderSet cyl_intersection(const CKMatrix& a, const CylinderSet& x, const CylinderSet& y);
// {w : p w in x}
CylinderSet cyl_quotient(const CKMatrix& a, const CylinderSet& x, const Word& p);
// {p w : w in x}, restricted to admissible sequences
CylinderSet cyl_prefix(const CKMatrix& a, const CylinderSet& x, const Word& p);
// sequences whose first letter may follow the last letter of w
CylinderSet cyl_followers(const CKMatrix& a, const Word& w);

// v w -> u w for w in tails; theta when zero. Kept in canonical form.
struct PrefixMap {
  bool zero = true;
  Word u, v;
  CylinderSet tails;

  CylinderSet domain(const CKMatrix& a) const;
  CylinderSet range(const CKMatrix& a) const;
  std::string to_string() const;
  friend bool operator==(const PrefixMap&, const PrefixMap&) = default;
  friend auto operator<=>(const PrefixMap&, const PrefixMap&) = default;
};

PrefixMap pm_identity();
PrefixMap pm_beta(const CKMatrix& a, std::uint32_t m);
PrefixMap pm_make(const CKMatrix& a, Word u, Word v, CylinderSet tails);
// (f g)(s) = f(g(s))
PrefixMap pm_compose(const CKMatrix& a, const PrefixMap& f, const PrefixMap& g);
PrefixMap pm_star(const PrefixMap& f);
bool pm_leq(const CKMatrix& a, const PrefixMap& f, const PrefixMap& g);
bool pm_idempotent(const PrefixMap& f);

// reduced word g_{i_1} ... g_{i_p} g_{j_q}^-1 ... g_{j_1}^-1
struct FreeWord {
  Word positive;  // i_1..i_p
  Word negative;  // j_1..j_q
  std::string to_string() const;
  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;
};

bool in_MA(const CKMatrix& a, const FreeWord& x);
// beta_{i_1} ... beta_{i_p} beta_{j_q}^* ... beta_{j_1}^*
PrefixMap beta_of(const CKMatrix& a, const FreeWord& x);
// product in the free group, nullopt when the result is not of the form above
std::optional<FreeWord> free_product(const FreeWord& x, const FreeWord& y);

struct CKSemigroupReport {
  std::size_t word_length = 0;
  std::size_t fragment_size = 0;
  bool localization = true;   // every cylinder V_w, |w| <= L, is a domain
  bool f_tilde = true;        // unique maximal majorant inside the fragment
  std::size_t words_tested = 0;
  std::size_t ma_size = 0;
  bool lemma_matches = true;  // x in M_A iff beta_x nonzero and maximal
  bool maximal_are_beta_x = true;
  bool free_product_consistent = true;
  std::vector<std::string> table;  // "word: in M_A / maximal" lines
  std::vector<std::string> failures;
  bool ok() const {
    return localization && f_tilde && lemma_matches && maximal_are_beta_x && free_product_consistent;
  }
};

CKSemigroupReport ck_semigroup(const CKMatrix& a, std::size_t word_length);

struct CKRelationsReport {
  bool ranges_disjoint = true;
  bool domains_decompose = true;
  std::vector<std::string> domains;  // Dom(beta_i) as cylinder sets
  std::vector<std::string> ranges;
  std::vector<std::string> failures;
  bool ok() const { return ranges_disjoint && domains_decompose; }
};

CKRelationsReport ck_relations(const CKMatrix& a);

struct CKFreenessReport {
  bool free = true;
  std::optional<std::string> witness;  // element and its periodic fixed point
};

// An element v w -> v r w fixes v r r r ...; such a point has no neighborhood
// on which the map is the identity.
CKFreenessReport ck_freeness(const CKMatrix& a, std::size_t word_length);

struct FreeLocalizationReport {
  bool localization = false;
  bool free = false;
  bool fixed_points_idempotent = true;
  bool principal = false;
  std::optional<std::string> witness;
  bool ok() const { return localization && free && fixed_points_idempotent && principal; }
};

// Finite discrete space: open sets are arbitrary, so a localization is free.
FreeLocalizationReport free_localization_audit(const ActionBundle& b);

}  // namespace groupoidal
