#pragma once

// Flags (full level paths a_0 - ... - a_N), weak and global flag operations,
// reduced flag paths and the independence calculus built on their words.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "psn/space.hpp"
#include "psn/word.hpp"

namespace psn {

// vertex at level i in position i.
using Flag = std::vector<VertexId>;

void check_flag(const ColoredSpace& space, const Flag& F);
std::string flag_to_string(const Flag& F);  // "[0,1,2]"

// A flag modulo a set of levels: only the vertices outside the modulus count.
struct FlagClass {
  Flag flag;
  IndexSet modulus;

  bool operator==(const FlagClass& other) const;
};
// Every flag in `finer` is in `coarser`: larger modulus, agreement outside it.
bool refines(const FlagClass& finer, const FlagClass& coarser);
// F and G agree at every level outside A.
bool equivalent_mod(const Flag& F, const Flag& G, IndexSet A);

struct FlagPath {
  std::vector<Flag> flags;  // flags.size() == word.size() + 1
  Word word;
};

VertexSet path_vertices(const FlagPath& P);

std::vector<Flag> enumerate_flags(const ColoredSpace& space,
                                  const std::optional<VertexSet>& within = std::nullopt);

IndexSet difference(const Flag& F, const Flag& G);
Word weak_word(int n, const Flag& F, const Flag& G);
// Weak path realising weak_word(F, G): one maximal interval at a time.
FlagPath weak_path(int n, const Flag& F, const Flag& G);

// F and G must differ exactly at the levels of s.  Global when the new
// vertices cannot reach F between the bounding anchors.
bool is_global_step(const ColoredSpace& space, const Flag& F, const Flag& G, Letter s);

struct PathOptions {
  // 0 picks the first candidate at every choice point; other values shuffle
  // the order in which non-global steps and reducible pairs are handled.
  std::uint64_t strategy_seed = 0;
};

// Reduced flag path from F to G, word in normal form.
FlagPath flag_path(const ColoredSpace& space, const Flag& F, const Flag& G,
                   const PathOptions& options = {});

// Every step global and the word reduced.
bool is_reduced_path(const ColoredSpace& space, const FlagPath& P);

// The unique path with the same endpoints whose word is `target`.
FlagPath permute_path(const FlagPath& P, const Word& target);

struct Basepoint {
  Flag flag;
  Word word;
};
Basepoint basepoint(const ColoredSpace& space, const Flag& F, const VertexSet& X);

bool indep(const ColoredSpace& space, const Flag& F, const Flag& G, const Flag& H);
bool indep_over_set(const ColoredSpace& space, const Flag& F, const Flag& G,
                    const VertexSet& X);
FlagClass canonical_base(const ColoredSpace& space, const Flag& F, const VertexSet& X);

// Applies α-steps along inverse(u) starting at G; returns the far flag F,
// which is joined to G by a reduced path with word u.
Flag realize_type(ColoredSpace& space, const Flag& G, const Word& u);

struct TypeRank {
  std::optional<CnfOrdinal> u_rank;
  CnfOrdinal ord_bound;
};
TypeRank type_rank(const Word& u);

struct CheckRecord {
  std::string check;
  bool pass = false;
  std::string witness;
};

std::vector<CheckRecord> ample_report(int n);

}  // namespace psn
