#include <doctest.h>

#include <algorithm>
#include <deque>
#include <functional>
#include <random>

#include "psn/error.hpp"
#include "psn/flags.hpp"

using namespace psn;

namespace {

Word W(const char* text, int n) { return Word::parse(text, n); }

std::string code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.name();
  }
  return "";
}

Flag fresh_flag(ColoredSpace& space) {
  auto ids = space.apply_alpha({0, space.dim()}, Anchor::bottom(), Anchor::top());
  return Flag(ids.begin(), ids.end());
}

VertexSet set_of(std::initializer_list<Flag> flags) {
  VertexSet out;
  for (const Flag& F : flags) out.insert(out.end(), F.begin(), F.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Step check written from the definitions: consecutive flags differ exactly
// at the letter's levels, and the new vertices cannot reach the old flag
// through vertices strictly between the bounding anchors at those levels.
bool step_is_global(const ColoredSpace& space, const Flag& F, const Flag& G, Letter s) {
  const int n = space.dim();
  for (int i = 0; i <= n; ++i) {
    if ((F[static_cast<std::size_t>(i)] != G[static_cast<std::size_t>(i)]) != (s.lo <= i && i <= s.hi)) {
      return false;
    }
  }
  const Anchor lo = s.lo == 0 ? Anchor::bottom() : Anchor::real(F[static_cast<std::size_t>(s.lo - 1)]);
  const Anchor hi = s.hi == n ? Anchor::top() : Anchor::real(F[static_cast<std::size_t>(s.hi + 1)]);
  const VertexSet inside = between(space, lo, hi);
  auto allowed = [&](VertexId v) {
    const int l = space.level(v);
    return l >= s.lo && l <= s.hi && std::binary_search(inside.begin(), inside.end(), v);
  };
  std::vector<char> seen(space.num_vertices(), 0);
  std::deque<VertexId> queue;
  for (int i = s.lo; i <= s.hi; ++i) {
    VertexId v = G[static_cast<std::size_t>(i)];
    seen[v] = 1;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : space.neighbors(v)) {
      if (seen[w] || !allowed(w)) continue;
      seen[w] = 1;
      queue.push_back(w);
    }
  }
  for (int i = s.lo; i <= s.hi; ++i) {
    if (seen[F[static_cast<std::size_t>(i)]]) return false;
  }
  return true;
}

bool path_checks_out(const ColoredSpace& space, const FlagPath& P) {
  if (P.flags.size() != P.word.size() + 1) return false;
  if (!is_reduced(P.word)) return false;
  for (std::size_t k = 0; k < P.word.size(); ++k) {
    if (!step_is_global(space, P.flags[k], P.flags[k + 1], P.word[k])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("enumerating flags") {
  ColoredSpace empty(2);
  CHECK(enumerate_flags(empty).empty());
  ColoredSpace space(2);
  const Flag F = fresh_flag(space);
  CHECK(enumerate_flags(space) == std::vector<Flag>{F});
  auto b = space.apply_alpha({1, 1}, Anchor::real(F[0]), Anchor::real(F[2]));
  const Flag G{F[0], b[0], F[2]};
  CHECK(enumerate_flags(space) == std::vector<Flag>{F, G});
  CHECK(enumerate_flags(space, VertexSet{F[0], F[2], b[0]}) == std::vector<Flag>{G});
  CHECK_NOTHROW(check_flag(space, G));
  CHECK(code_of([&] { check_flag(space, Flag{F[0], F[2], b[0]}); }) == "invalid-flag");
  CHECK(flag_to_string(F) == "[0,1,2]");
}

TEST_CASE("weak words") {
  CHECK(weak_word(3, {0, 1, 2, 3}, {0, 1, 2, 3}) == W("1", 3));
  CHECK(weak_word(3, {0, 1, 2, 3}, {0, 9, 2, 3}) == W("[1]", 3));
  CHECK(weak_word(3, {0, 1, 2, 3}, {7, 1, 8, 9}) == W("[0].[2,3]", 3));
  CHECK(difference({0, 1, 2, 3}, {7, 1, 8, 9}) == IndexSet::parse("{0,2,3}", 3));
  const FlagPath P = weak_path(3, {0, 1, 2, 3}, {7, 1, 8, 9});
  CHECK(P.flags.front() == Flag{0, 1, 2, 3});
  CHECK(P.flags.back() == Flag{7, 1, 8, 9});
  CHECK(P.word == W("[0].[2,3]", 3));
}

TEST_CASE("global steps") {
  ColoredSpace space(2);
  const Flag F = fresh_flag(space);
  const VertexId b1 = space.apply_alpha({1, 1}, Anchor::real(F[0]), Anchor::real(F[2]))[0];
  const Flag G{F[0], b1, F[2]};
  CHECK(is_global_step(space, F, G, {1, 1}));

  // c0 sits under b1 only, so a1 and b1 still meet through a0 below a2.
  const VertexId c0 = space.apply_alpha({0, 0}, Anchor::bottom(), Anchor::real(b1))[0];
  const Flag H{c0, b1, F[2]};
  CHECK_FALSE(is_global_step(space, F, H, {0, 1}));
  CHECK(step_is_global(space, G, H, {0, 0}));
  const FlagPath P = flag_path(space, F, H);
  CHECK(P.word == W("[1].[0]", 2));
  CHECK(path_checks_out(space, P));

  CHECK(code_of([&] { is_global_step(space, F, F, {1, 1}); }) == "difference-mismatch");
  CHECK(code_of([&] { is_global_step(space, F, G, {0, 1}); }) == "difference-mismatch");
}

TEST_CASE("flag paths") {
  ColoredSpace space(2);
  const Flag G = fresh_flag(space);
  const Flag F = realize_type(space, G, W("[1,2]", 2));
  CHECK(flag_path(space, F, G).word == W("[1,2]", 2));
  CHECK(flag_path(space, F, F).word.empty());
  CHECK(flag_path(space, F, F).flags == std::vector<Flag>{F});

  ColoredSpace two(2);
  const Flag A = fresh_flag(two), B = fresh_flag(two);
  const FlagPath P = flag_path(two, A, B);
  CHECK(P.word == W("[0,2]", 2));
  CHECK(P.flags == std::vector<Flag>{A, B});
  CHECK(is_reduced_path(two, P));
}

TEST_CASE("permuting a path") {
  ColoredSpace space(2);
  const Flag G = fresh_flag(space);
  const Flag F = realize_type(space, G, W("[0].[2]", 2));
  const FlagPath P = flag_path(space, F, G);
  REQUIRE(P.word == W("[0].[2]", 2));
  const FlagPath Q = permute_path(P, W("[2].[0]", 2));
  CHECK(Q.word == W("[2].[0]", 2));
  CHECK(Q.flags.front() == F);
  CHECK(Q.flags.back() == G);
  CHECK(Q.flags[1] != P.flags[1]);
  CHECK(Q.flags[1] == Flag{F[0], F[1], G[2]});
  CHECK(path_vertices(Q) == path_vertices(P));
  CHECK(is_reduced_path(space, Q));
  CHECK(permute_path(P, P.word).flags == P.flags);

  const Flag H = realize_type(space, G, W("[0].[1]", 2));
  const FlagPath R = flag_path(space, H, G);
  CHECK(code_of([&] { permute_path(R, W("[1].[0]", 2)); }) == "not-a-permutation");
  CHECK(code_of([&] { permute_path(R, W("[0]", 2)); }) == "not-a-permutation");
}

TEST_CASE("basepoints") {
  ColoredSpace space(2);
  const Flag G = fresh_flag(space);
  const Flag F = realize_type(space, G, W("[1,2]", 2));
  const VertexSet X = set_of({G});
  auto bp = basepoint(space, F, X);
  CHECK(bp.flag == G);
  CHECK(bp.word == W("[1,2]", 2));

  const VertexId b1 = space.apply_alpha({1, 1}, Anchor::real(G[0]), Anchor::real(G[2]))[0];
  const Flag G2{G[0], b1, G[2]};
  const Flag E = fresh_flag(space);
  auto tie = basepoint(space, E, set_of({G, G2}));
  CHECK(tie.word == W("[0,2]", 2));
  CHECK(tie.flag == std::min(G, G2));

  auto inside = basepoint(space, G2, set_of({G, G2}));
  CHECK(inside.flag == G2);
  CHECK(inside.word.empty());

  CHECK(code_of([&] { basepoint(space, F, VertexSet{G[0]}); }) == "no-flag-in-X");
  CHECK(code_of([&] { basepoint(space, F, VertexSet{G[1], b1, G[2]}); }) != "");
}

TEST_CASE("independence of flags") {
  ColoredSpace space(3);
  const Flag G = fresh_flag(space);
  const Flag F = realize_type(space, G, W("[0]", 3));
  const Flag H = realize_type(space, G, W("[2]", 3));
  CHECK(flag_path(space, F, H).word == W("[0].[2]", 3));
  CHECK(indep(space, F, G, H));

  const Flag F2 = realize_type(space, G, W("[1,2]", 3));
  const Flag F3 = realize_type(space, G, W("[1,2]", 3));
  CHECK(flag_path(space, F2, F3).word == W("[1,2]", 3));
  CHECK(indep(space, F2, G, F3));

  CHECK_FALSE(indep(space, F, G, F));
  CHECK(indep(space, F, F, F));
}

TEST_CASE("independence over a set") {
  ColoredSpace space(2);
  const Flag G = fresh_flag(space);
  const Flag F = realize_type(space, G, W("[0,1]", 2));
  CHECK(indep_over_set(space, F, G, set_of({G})));

  const VertexId b0 = space.apply_alpha({0, 0}, Anchor::bottom(), Anchor::real(G[1]))[0];
  const Flag G2{b0, G[1], G[2]};
  const VertexSet X = set_of({G, G2});
  const Flag K = realize_type(space, G2, W("[1,2]", 2));
  CHECK(indep_over_set(space, K, G2, X));
  CHECK_FALSE(indep_over_set(space, K, G, X));
  CHECK(flag_path(space, K, G).word.size() > flag_path(space, K, G2).word.size());

  CHECK(indep_over_set(space, G2, G2, X));
  CHECK(code_of([&] { indep_over_set(space, K, F, X); }) == "G-not-in-X");
}

TEST_CASE("canonical bases") {
  {
    ColoredSpace space(2);
    const Flag G = fresh_flag(space);
    const Flag F = realize_type(space, G, W("[0,1].[1,2]", 2));
    const FlagClass cb = canonical_base(space, F, set_of({G}));
    CHECK(cb.modulus == IndexSet::interval(1, 2));
    CHECK(cb == FlagClass{G, IndexSet::interval(1, 2)});
    CHECK(cb == FlagClass{{G[0], 99, 98}, IndexSet::interval(1, 2)});
    CHECK_FALSE(cb == FlagClass{G, IndexSet::interval(0, 2)});
    CHECK(refines(FlagClass{G, {}}, cb));
    CHECK_FALSE(refines(cb, FlagClass{G, {}}));
  }
  {
    ColoredSpace space(3);
    const Flag G = fresh_flag(space);
    const Flag F = realize_type(space, G, W("[0,1].[2,3]", 3));
    const FlagClass cb = canonical_base(space, F, set_of({G}));
    CHECK(cb.modulus == IndexSet::parse("{0,2,3}", 3));
    CHECK(cb.flag[1] == G[1]);
  }
  {
    ColoredSpace space(2);
    const Flag G = fresh_flag(space);
    const FlagClass cb = canonical_base(space, G, set_of({G}));
    CHECK(cb.modulus.empty());
    CHECK(cb.flag == G);
  }
}

TEST_CASE("realizing types") {
  ColoredSpace space(2);
  const Flag G = fresh_flag(space);
  const Flag F = realize_type(space, G, W("[1]", 2));
  CHECK(F[0] == G[0]);
  CHECK(F[2] == G[2]);
  CHECK(F[1] != G[1]);
  const Flag H = realize_type(space, G, W("[0,1].[1,2]", 2));
  const FlagPath P = flag_path(space, H, G);
  CHECK(P.word == W("[0,1].[1,2]", 2));
  CHECK(path_checks_out(space, P));
  CHECK(realize_type(space, G, W("1", 2)) == G);
  CHECK(code_of([&] { realize_type(space, G, W("[1].[1]", 2)); }) == "not-reduced");
  CHECK(code_of([&] { realize_type(space, G, W("[1]", 3)); }) == "dimension-mismatch");
}

TEST_CASE("type ranks") {
  auto a = type_rank(W("[0,2]", 2));
  REQUIRE(a.u_rank.has_value());
  CHECK(a.u_rank->to_string() == "w^2");
  auto b = type_rank(W("[0,1].[1,3]", 3));
  CHECK_FALSE(b.u_rank.has_value());
  CHECK(b.ord_bound.to_string() == "w^2+w");
  auto c = type_rank(W("1", 2));
  REQUIRE(c.u_rank.has_value());
  CHECK(c.u_rank->is_zero());
  CHECK(code_of([] { type_rank(W("[0].[0,1]", 2)); }) == "not-reduced");
}

TEST_CASE("ample report") {
  for (int n = 1; n <= 4; ++n) {
    const auto report = ample_report(n);
    CHECK(report.size() == static_cast<std::size_t>(2 * n));
    for (const CheckRecord& r : report) {
      CAPTURE(r.check);
      CHECK(r.pass);
    }
  }
  CHECK(ample_report(1).front().check == "sr([0].[1]) = {1}");
  CHECK(code_of([] { ample_report(0); }) == "precondition-violated");
}

TEST_CASE("paths in random realizations") {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 200; ++k) {
    const int n = 1 + static_cast<int>(rng() % 3);
    ColoredSpace space(n);
    std::vector<Flag> made{fresh_flag(space)};
    const auto letters = all_letters(n);
    for (int j = 0; j < 4; ++j) {
      Word u(n);
      for (std::size_t len = rng() % 4; len > 0; --len) u.push_back(letters[rng() % letters.size()]);
      made.push_back(realize_type(space, made[rng() % made.size()], reduce(u)));
    }
    const auto flags = enumerate_flags(space);
    for (int j = 0; j < 6; ++j) {
      const Flag& F = flags[rng() % flags.size()];
      const Flag& G = flags[rng() % flags.size()];
      const FlagPath P = flag_path(space, F, G);
      CAPTURE(flag_to_string(F));
      CAPTURE(flag_to_string(G));
      CHECK(P.flags.front() == F);
      CHECK(P.flags.back() == G);
      CHECK(path_checks_out(space, P));
      CHECK(normal_form(P.word) == P.word);
      CHECK(equivalent(flag_path(space, G, F).word, inverse(P.word)));
      CHECK(flag_path(space, F, G, {7}).word == P.word);
      CHECK(weak_word(n, F, G) == normal_form(weak_word(n, F, G)));
      CHECK(support(weak_word(n, F, G)) == difference(F, G));
    }
  }
}
