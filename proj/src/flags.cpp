#include "psn/flags.hpp"

#include <algorithm>
#include <random>

#include "psn/error.hpp"

namespace psn {

void check_flag(const ColoredSpace& space, const Flag& F) {
  const auto n = static_cast<std::size_t>(space.dim());
  if (F.size() != n + 1) {
    throw Error(Errc::invalid_flag, "flag " + flag_to_string(F) + " needs " +
                                        std::to_string(n + 1) + " vertices");
  }
  for (std::size_t i = 0; i <= n; ++i) {
    if (F[i] >= space.num_vertices() || space.level(F[i]) != static_cast<int>(i)) {
      throw Error(Errc::invalid_flag, "flag " + flag_to_string(F) + ": position " +
                                          std::to_string(i) + " is not a level-" +
                                          std::to_string(i) + " vertex");
    }
    if (i > 0 && !space.adjacent(F[i - 1], F[i])) {
      throw Error(Errc::invalid_flag, "flag " + flag_to_string(F) + ": " +
                                          std::to_string(F[i - 1]) + " and " +
                                          std::to_string(F[i]) + " are not adjacent");
    }
  }
}

std::string flag_to_string(const Flag& F) {
  std::string out = "[";
  for (std::size_t i = 0; i < F.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(F[i]);
  }
  return out + "]";
}

bool equivalent_mod(const Flag& F, const Flag& G, IndexSet A) {
  if (F.size() != G.size()) return false;
  for (std::size_t i = 0; i < F.size(); ++i) {
    if (!A.contains(static_cast<int>(i)) && F[i] != G[i]) return false;
  }
  return true;
}

bool FlagClass::operator==(const FlagClass& other) const {
  return modulus == other.modulus && equivalent_mod(flag, other.flag, modulus);
}

bool refines(const FlagClass& finer, const FlagClass& coarser) {
  return finer.modulus.subset_of(coarser.modulus) &&
         equivalent_mod(finer.flag, coarser.flag, coarser.modulus);
}

VertexSet path_vertices(const FlagPath& P) {
  VertexSet out;
  for (const Flag& F : P.flags) out.insert(out.end(), F.begin(), F.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Flag> enumerate_flags(const ColoredSpace& space,
                                  const std::optional<VertexSet>& within) {
  std::vector<char> mask(space.num_vertices(), 1);
  if (within) mask = mask_of(space, *within);
  const int n = space.dim();
  std::vector<Flag> out;
  Flag cur;
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == n + 1) {
      out.push_back(cur);
      return;
    }
    std::vector<VertexId> next;
    if (cur.empty()) {
      next = space.at_level(0);
    } else {
      for (VertexId w : space.neighbors(cur.back())) {
        if (space.level(w) == static_cast<int>(cur.size())) next.push_back(w);
      }
    }
    std::sort(next.begin(), next.end());
    for (VertexId w : next) {
      if (!mask[w]) continue;
      cur.push_back(w);
      self(self);
      cur.pop_back();
    }
  };
  extend(extend);
  return out;
}

IndexSet difference(const Flag& F, const Flag& G) {
  IndexSet out;
  for (std::size_t i = 0; i < F.size() && i < G.size(); ++i) {
    if (F[i] != G[i]) out.insert(static_cast<int>(i));
  }
  return out;
}

namespace {

std::vector<Letter> intervals(IndexSet A, int n) {
  std::vector<Letter> out;
  for (int i = 0; i <= n; ++i) {
    if (!A.contains(i)) continue;
    int j = i;
    while (j + 1 <= n && A.contains(j + 1)) ++j;
    out.push_back({i, j});
    i = j;
  }
  return out;
}

Anchor lower_anchor(const Flag& F, Letter s) {
  return s.lo == 0 ? Anchor::bottom() : Anchor::real(F[static_cast<std::size_t>(s.lo - 1)]);
}

Anchor upper_anchor(const Flag& F, Letter s, int n) {
  return s.hi == n ? Anchor::top() : Anchor::real(F[static_cast<std::size_t>(s.hi + 1)]);
}

}  // namespace

Word weak_word(int n, const Flag& F, const Flag& G) {
  return Word(n, intervals(difference(F, G), n));
}

FlagPath weak_path(int n, const Flag& F, const Flag& G) {
  FlagPath P{{F}, weak_word(n, F, G)};
  Flag cur = F;
  for (Letter s : P.word) {
    for (int i = s.lo; i <= s.hi; ++i) {
      cur[static_cast<std::size_t>(i)] = G[static_cast<std::size_t>(i)];
    }
    P.flags.push_back(cur);
  }
  return P;
}

bool is_global_step(const ColoredSpace& space, const Flag& F, const Flag& G, Letter s) {
  check_flag(space, F);
  check_flag(space, G);
  if (difference(F, G) != s.levels()) {
    throw Error(Errc::difference_mismatch,
                "flags " + flag_to_string(F) + " and " + flag_to_string(G) +
                    " differ at " + difference(F, G).to_string() + ", not at " + to_string(s));
  }
  const int n = space.dim();
  auto inside = mask_of(space, between(space, lower_anchor(F, s), upper_anchor(F, s, n)));
  std::vector<VertexId> fresh;
  for (int i = s.lo; i <= s.hi; ++i) fresh.push_back(G[static_cast<std::size_t>(i)]);
  auto dist = bfs(space, fresh, s, &inside);
  for (int i = s.lo; i <= s.hi; ++i) {
    if (dist[F[static_cast<std::size_t>(i)]] != kInfinite) return false;
  }
  return true;
}

namespace {

// A flag equal to F outside s that contains the adjacent vertices x, y
// (both between the anchors bounding s).
Flag flag_through(const ColoredSpace& space, const Flag& F, Letter s, VertexId x,
                  VertexId y) {
  if (space.level(x) > space.level(y)) std::swap(x, y);
  Flag H = F;
  auto lower = climb_to(space, lower_anchor(F, s), x);
  auto upper = climb_from(space, y, upper_anchor(F, s, space.dim()));
  std::size_t pos = static_cast<std::size_t>(s.lo);
  for (VertexId v : lower) H[pos++] = v;
  H[pos++] = y;
  for (VertexId v : upper) H[pos++] = v;
  return H;
}

// Replaces the non-global step F -s-> G by a weak path whose letters are
// proper subletters of s.  A shortest path b_0 .. b_m between the anchors
// joins a vertex of F to a new vertex of G; consecutive flags through the
// edges b_i b_{i+1} share a vertex, hence differ at proper subletters only.
FlagPath refine_step(const ColoredSpace& space, const Flag& F, const Flag& G, Letter s) {
  const int n = space.dim();
  auto inside = mask_of(space, between(space, lower_anchor(F, s), upper_anchor(F, s, n)));
  std::vector<VertexId> fresh;
  for (int i = s.lo; i <= s.hi; ++i) fresh.push_back(G[static_cast<std::size_t>(i)]);
  auto dist = bfs(space, fresh, s, &inside);
  VertexId start = kNoVertex;
  for (int i = s.lo; i <= s.hi; ++i) {
    VertexId v = F[static_cast<std::size_t>(i)];
    if (dist[v] != kInfinite && (start == kNoVertex || dist[v] < dist[start])) start = v;
  }
  if (start == kNoVertex) {
    throw Error(Errc::precondition_violated, "refine_step called on a global step");
  }
  std::vector<VertexId> chain{start};
  while (dist[chain.back()] > 0) {
    for (VertexId w : space.neighbors(chain.back())) {
      int l = space.level(w);
      if (inside[w] && l >= s.lo && l <= s.hi && dist[w] + 1 == dist[chain.back()]) {
        chain.push_back(w);
        break;
      }
    }
  }
  std::vector<Flag> stations{F};
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    stations.push_back(flag_through(space, F, s, chain[i], chain[i + 1]));
  }
  stations.push_back(G);
  FlagPath out{{F}, Word(n)};
  for (std::size_t i = 0; i + 1 < stations.size(); ++i) {
    FlagPath piece = weak_path(n, stations[i], stations[i + 1]);
    for (std::size_t k = 0; k < piece.word.size(); ++k) {
      out.word.push_back(piece.word[k]);
      out.flags.push_back(piece.flags[k + 1]);
    }
  }
  return out;
}

// Exchanges the commuting steps k and k+1.
void swap_steps(FlagPath& P, std::size_t k) {
  std::vector<Letter> w = P.word.letters();
  const Letter t = w[k + 1];
  Flag mid = P.flags[k];
  for (int i = t.lo; i <= t.hi; ++i) {
    mid[static_cast<std::size_t>(i)] = P.flags[k + 2][static_cast<std::size_t>(i)];
  }
  P.flags[k + 1] = std::move(mid);
  std::swap(w[k], w[k + 1]);
  P.word = Word(P.word.dim(), std::move(w));
}

void splice(FlagPath& P, std::size_t from_step, std::size_t to_step, const FlagPath& piece) {
  // Replaces steps [from_step, to_step) by the steps of piece.
  std::vector<Letter> w;
  std::vector<Flag> flags(P.flags.begin(),
                          P.flags.begin() + static_cast<std::ptrdiff_t>(from_step) + 1);
  w.insert(w.end(), P.word.begin(), P.word.begin() + static_cast<std::ptrdiff_t>(from_step));
  for (std::size_t k = 0; k < piece.word.size(); ++k) {
    w.push_back(piece.word[k]);
    flags.push_back(piece.flags[k + 1]);
  }
  for (std::size_t k = to_step; k < P.word.size(); ++k) {
    w.push_back(P.word[k]);
    flags.push_back(P.flags[k + 1]);
  }
  P.word = Word(P.word.dim(), std::move(w));
  P.flags = std::move(flags);
}

struct Reducible {
  std::size_t mover;   // step that travels
  std::size_t target;  // step it travels to
};

std::vector<Reducible> reducible_pairs(const Word& w) {
  std::vector<Reducible> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (contains(w[j], w[i])) {
        out.push_back({i, j});
        break;
      }
      if (!commutes(w[i], w[j])) break;
    }
    for (std::size_t j = i; j-- > 0;) {
      if (contains(w[j], w[i], true)) {
        out.push_back({i, j});
        break;
      }
      if (!commutes(w[i], w[j])) break;
    }
  }
  return out;
}

}  // namespace

FlagPath flag_path(const ColoredSpace& space, const Flag& F, const Flag& G,
                   const PathOptions& options) {
  check_flag(space, F);
  check_flag(space, G);
  const int n = space.dim();
  std::mt19937_64 rng(options.strategy_seed);
  auto pick = [&](std::size_t count) -> std::size_t {
    if (options.strategy_seed == 0 || count == 1) return 0;
    return static_cast<std::size_t>(rng() % count);
  };
  FlagPath P = weak_path(n, F, G);
  // Every pass lowers ord(word) strictly, so the loop is finite; the guard
  // only protects against a broken invariant.
  for (std::size_t guard = 0;; ++guard) {
    if (guard > 100000) {
      throw Error(Errc::precondition_violated, "flag_path refinement does not terminate");
    }
    std::vector<std::size_t> weak_steps;
    for (std::size_t k = 0; k < P.word.size(); ++k) {
      if (!is_global_step(space, P.flags[k], P.flags[k + 1], P.word[k])) weak_steps.push_back(k);
    }
    if (!weak_steps.empty()) {
      std::size_t k = weak_steps[pick(weak_steps.size())];
      splice(P, k, k + 1, refine_step(space, P.flags[k], P.flags[k + 1], P.word[k]));
      continue;
    }
    auto pairs = reducible_pairs(P.word);
    if (pairs.empty()) break;
    Reducible r = pairs[pick(pairs.size())];
    // Bring the mover next to its target, then merge the two steps into
    // the weak path between the outer flags.
    std::size_t k = r.mover;
    if (r.mover < r.target) {
      for (; k + 1 < r.target; ++k) swap_steps(P, k);
      splice(P, k, k + 2, weak_path(n, P.flags[k], P.flags[k + 2]));
    } else {
      for (; k > r.target + 1; --k) swap_steps(P, k - 1);
      splice(P, k - 1, k + 1, weak_path(n, P.flags[k - 1], P.flags[k + 1]));
    }
  }
  return permute_path(P, normal_form(P.word));
}

bool is_reduced_path(const ColoredSpace& space, const FlagPath& P) {
  if (!is_reduced(P.word)) return false;
  for (std::size_t k = 0; k < P.word.size(); ++k) {
    if (difference(P.flags[k], P.flags[k + 1]) != P.word[k].levels()) return false;
    if (!is_global_step(space, P.flags[k], P.flags[k + 1], P.word[k])) return false;
  }
  return true;
}

FlagPath permute_path(const FlagPath& P, const Word& target) {
  if (!equivalent(P.word, target)) {
    throw Error(Errc::not_a_permutation,
                target.to_string() + " is not a permutation of " + P.word.to_string());
  }
  FlagPath Q = P;
  for (std::size_t k = 0; k < target.size(); ++k) {
    std::size_t p = k;
    while (Q.word[p] != target[k]) {
      if (!commutes(Q.word[p], target[k])) {
        throw Error(Errc::not_a_permutation, target.to_string() + " is not a permutation of " +
                                                 P.word.to_string());
      }
      ++p;
    }
    for (; p > k; --p) swap_steps(Q, p - 1);
  }
  return Q;
}

Basepoint basepoint(const ColoredSpace& space, const Flag& F, const VertexSet& X) {
  check_flag(space, F);
  std::vector<Flag> candidates = enumerate_flags(space, X);
  if (candidates.empty()) {
    throw Error(Errc::no_flag_in_X, "the set contains no flag");
  }
  CheckResult nice = is_nice(space, X);
  if (!nice.ok) {
    throw Error(Errc::precondition_violated, "basepoint: set is not nice (" + nice.witness + ")");
  }
  // ≺ strictly lowers ord, and a ⪯-minimum exists, so the minimum is
  // exactly the set of words of least ord.
  std::vector<Basepoint> found;
  std::vector<CnfOrdinal> ords;
  for (const Flag& G : candidates) {
    found.push_back({G, flag_path(space, F, G).word});
    ords.push_back(ord_rank(found.back().word));
  }
  const std::size_t lead =
      static_cast<std::size_t>(std::min_element(ords.begin(), ords.end()) - ords.begin());
  for (std::size_t k = 0; k < found.size(); ++k) {
    if (ords[k] == ords[lead] && !equivalent(found[k].word, found[lead].word)) {
      throw Error(Errc::precondition_violated,
                  "no ⪯-least connecting word: " + found[k].word.to_string() + " vs " +
                      found[lead].word.to_string());
    }
  }
  return found[lead];
}

bool indep(const ColoredSpace& space, const Flag& F, const Flag& G, const Flag& H) {
  Word u = flag_path(space, F, G).word;
  Word v = flag_path(space, G, H).word;
  Word w = flag_path(space, F, H).word;
  return equivalent(concat_reduce(u, v), w);
}

bool indep_over_set(const ColoredSpace& space, const Flag& F, const Flag& G,
                    const VertexSet& X) {
  check_flag(space, G);
  for (VertexId v : G) {
    if (!std::binary_search(X.begin(), X.end(), v)) {
      throw Error(Errc::G_not_in_X, "flag " + flag_to_string(G) + " is not inside the set");
    }
  }
  return equivalent(flag_path(space, F, G).word, basepoint(space, F, X).word);
}

FlagClass canonical_base(const ColoredSpace& space, const Flag& F, const VertexSet& X) {
  Basepoint b = basepoint(space, F, X);
  return {b.flag, right_stabilizer(b.word)};
}

Flag realize_type(ColoredSpace& space, const Flag& G, const Word& u) {
  check_flag(space, G);
  if (u.dim() != space.dim()) {
    throw Error(Errc::dimension_mismatch, "word and space have different N");
  }
  if (!is_reduced(u)) throw Error(Errc::not_reduced, u.to_string() + " is not reduced");
  Flag cur = G;
  for (std::size_t k = u.size(); k-- > 0;) {
    const Letter s = u[k];
    auto created =
        space.apply_alpha(s, lower_anchor(cur, s), upper_anchor(cur, s, space.dim()));
    for (int i = s.lo; i <= s.hi; ++i) {
      cur[static_cast<std::size_t>(i)] = created[static_cast<std::size_t>(i - s.lo)];
    }
  }
  return cur;
}

TypeRank type_rank(const Word& u) {
  if (!is_reduced(u)) throw Error(Errc::not_reduced, u.to_string() + " is not reduced");
  TypeRank out{std::nullopt, ord_rank(u)};
  try {
    out.u_rank = rd_closed_form(u);
  } catch (const Error& e) {
    if (e.code() != Errc::not_monotone) throw;
  }
  return out;
}

std::vector<CheckRecord> ample_report(int n) {
  if (n < 1) throw Error(Errc::precondition_violated, "ample_report needs N >= 1");
  std::vector<CheckRecord> out;
  auto check = [&](const Word& u, IndexSet expected, int kept_level) {
    IndexSet got = right_stabilizer(u);
    out.push_back({"sr(" + u.to_string() + ") = " + expected.to_string(), got == expected,
                   got.to_string()});
    // Realise the type over a fresh flag G and read off the canonical base:
    // it must be G modulo `expected`, i.e. the single vertex of G at level
    // kept_level.
    ColoredSpace space(n);
    auto g = space.apply_alpha({0, n}, Anchor::bottom(), Anchor::top());
    Flag G(g.begin(), g.end());
    Flag F = realize_type(space, G, u);
    VertexSet X(G.begin(), G.end());
    std::sort(X.begin(), X.end());
    FlagClass cb = canonical_base(space, F, X);
    IndexSet rest = IndexSet::full(n) - cb.modulus;
    bool pass = cb == FlagClass{G, expected} &&
                rest == IndexSet::interval(kept_level, kept_level);
    out.push_back({"canonical base of " + u.to_string() + " over G is its level-" +
                       std::to_string(kept_level) + " vertex",
                   pass,
                   "basepoint " + flag_to_string(cb.flag) + " modulo " +
                       cb.modulus.to_string()});
  };
  for (int i = 1; i < n; ++i) {
    Word u(n, {{0, i}, {i + 1, n}});
    check(u, IndexSet::interval(0, i - 1) | IndexSet::interval(i + 1, n), i);
  }
  check(Word(n, {{0, n - 1}, {1, n}}), IndexSet::interval(1, n), 0);
  return out;
}

}  // namespace psn
