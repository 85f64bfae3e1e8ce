#pragma once

// Words over the letter alphabet and the monoid they generate: commutation of
// letters at distance >= 2, cancellation ts = st = s for t ⊆ s (including
// t = s), and the strong rewriting that also splits s·s into proper subletters.
//
// Every operation returning a Word returns it in normal form: adjacent
// commuting letters appear in increasing order.  Equality of monoid elements
// is therefore equality of normal forms.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "psn/alphabet.hpp"
#include "psn/ordinal.hpp"

namespace psn {

class Word {
 public:
  explicit Word(int n) : n_(n) { check_dimension(n); }
  Word(int n, std::vector<Letter> letters);

  // Letters joined by "."; the empty word is "1".
  static Word parse(std::string_view text, int n);
  std::string to_string() const;

  int dim() const { return n_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  void push_back(Letter s);
  // Plain concatenation, no reduction.
  Word operator+(const Word& other) const;

  // Letter-by-letter equality (not equivalence).
  bool operator==(const Word&) const = default;

 private:
  int n_;
  std::vector<Letter> letters_;
};

bool is_reduced(const Word& u);
Word reduce(const Word& u);
Word normal_form(const Word& u);
bool equivalent(const Word& u, const Word& v);
Word inverse(const Word& u);
IndexSet support(const Word& u);

struct FinalSegment {
  Word remainder;
  Word segment;
};
FinalSegment final_segment(const Word& u);

IndexSet left_stabilizer(const Word& v);
IndexSet right_stabilizer(const Word& v);

// Position in v of the unique letter absorbing s from the left (s is
// contained in it and commutes with every earlier letter), if any.
std::optional<std::size_t> left_absorber(const Word& v, Letter s);
std::optional<std::size_t> right_absorber(const Word& u, Letter s);

// u is absorbed by v from the left: support(u) ⊆ sL(v).
bool absorbs_left(const Word& v, const Word& u);
// v is absorbed by u from the right: support(v) ⊆ sr(u).
bool absorbs_right(const Word& u, const Word& v);
// Every letter of u is absorbed by a strictly larger letter of v.
bool properly_absorbs_left(const Word& v, const Word& u);
bool properly_absorbs_right(const Word& u, const Word& v);

struct Split {
  Word u1;
  Word u2;
};
// u ≈ u1·u2 where u2 collects, from the right end inwards, the letters
// contained in S that commute through to the end.
Split split_absorbed(const Word& u, IndexSet S);

// u ≈ u1·u_prime (·w), v ≈ (w·) v_prime·v1 and reduce(u·v) ≈ u1·(w·)v1.
// w is empty for the fine decomposition.
struct FineDecomposition {
  Word u1;
  Word u_prime;
  Word v_prime;
  Word v1;
  Word w;
};
FineDecomposition decompose_fine(const Word& u, const Word& v);
FineDecomposition decompose_symmetric(const Word& u, const Word& v);

Word concat_reduce(const Word& u, const Word& v);
IndexSet wobbling(const Word& u, const Word& v);

inline constexpr std::size_t kDefaultPrecCap = 12;

// u ≺ v: a permutation of u arises from v by replacing at least one letter
// with a (possibly empty) product of proper subletters.  This is the
// one-step relation itself; it is already transitive, so no closure is taken.
// Throws search-bound-exceeded when |u| + |v| > cap.
bool prec(const Word& u, const Word& v, std::size_t cap = kDefaultPrecCap);
// u ⪯ v.
bool prec_or_equivalent(const Word& u, const Word& v,
                        std::size_t cap = kDefaultPrecCap);

CnfOrdinal ord_rank(const Word& u);
// Closed form of the rank for reduced words whose letter sizes can be
// arranged non-increasingly (the check is up to commutation).
CnfOrdinal rd_closed_form(const Word& u);

// Strong reduction, bounded.

enum class SearchStatus { complete, budget_exhausted };

struct StrongReducts {
  std::vector<Word> reducts;  // sorted by text, all in normal form
  SearchStatus status = SearchStatus::complete;
  std::size_t steps = 0;
};

inline constexpr std::size_t kDefaultSplitLen = 3;
inline constexpr std::size_t kDefaultMaxSteps = 50000;

StrongReducts strong_reducts_bounded(const Word& u,
                                     std::size_t max_split_len = kDefaultSplitLen,
                                     std::size_t max_steps = kDefaultMaxSteps);

enum class TargetStatus { found, not_found, budget_exhausted };

// Goal-directed variant: does u strongly reduce to target?  States that
// cannot lie ⪰ target are pruned, which keeps the search small.
// not_found means the bounded search space was exhausted.
TargetStatus strong_reduces_to_bounded(const Word& u, const Word& target,
                                       std::size_t max_split_len = kDefaultSplitLen,
                                       std::size_t max_steps = kDefaultMaxSteps);

// Reduced products of length <= max_len over proper subletters of s, in
// normal form, each class once.
std::vector<Word> split_products(int n, Letter s, std::size_t max_len);

enum class DivideStatus { found, none, bound_exhausted };

struct DivideResult {
  DivideStatus status = DivideStatus::none;
  std::optional<Word> quotient;
};

// Search for a reduced w with concat_reduce(u, w) ≈ v and |w| <= max_len.
// none: no such w exists at all (the pruned search space ran dry before
// the bound); bound_exhausted: the bound cut the search off.
DivideResult divides_left_bounded(const Word& u, const Word& v,
                                  std::optional<std::size_t> max_len = {});

}  // namespace psn
