// Flag suites: reduced paths on the random spaces of the space suite, and
// independence on configurations grown by realize_type.

#include <algorithm>
#include <set>

#include "oracle_internal.hpp"
#include "psn/error.hpp"
#include "psn/error.hpp"

namespace psn::oracle {

namespace {

Word path_word(const ColoredSpace& space, const Flag& F, const Flag& G) {
  return flag_path(space, F, G).word;
}

VertexSet vertices_of(std::initializer_list<const Flag*> flags, const VertexSet& extra = {}) {
  VertexSet D = extra;
  for (const Flag* F : flags) D.insert(D.end(), F->begin(), F->end());
  std::sort(D.begin(), D.end());
  D.erase(std::unique(D.begin(), D.end()), D.end());
  return D;
}

VertexSet merge(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool has(const VertexSet& D, VertexId v) { return std::binary_search(D.begin(), D.end(), v); }

std::string flags_text(const std::vector<Flag>& flags) {
  std::string out;
  for (const Flag& F : flags) out += (out.empty() ? "" : " ") + flag_to_string(F);
  return out;
}

Word prefix(const Word& w, std::size_t k) {
  Word out(w.dim());
  for (std::size_t i = 0; i < k; ++i) out.push_back(w[i]);
  return out;
}

Word suffix(const Word& w, std::size_t k) {
  Word out(w.dim());
  for (std::size_t i = k; i < w.size(); ++i) out.push_back(w[i]);
  return out;
}

// Letters (l,r) whose anchors are taken from the last flag and whose pair
// is open in D.
std::set<Letter> open_letters_at(const ColoredSpace& space, const VertexSet& D, const Flag& G) {
  const int n = space.dim();
  auto level_in_G = [&](Anchor a) -> std::optional<int> {
    if (a.kind() == Anchor::Kind::bottom) return -1;
    if (a.kind() == Anchor::Kind::top) return n + 1;
    int l = space.level(a.vertex());
    if (G[static_cast<std::size_t>(l)] != a.vertex()) return std::nullopt;
    return l;
  };
  std::set<Letter> out;
  for (auto [a, b] : open_pairs(space, D)) {
    auto la = level_in_G(a), lb = level_in_G(b);
    if (la && lb && *la + 1 <= *lb - 1) out.insert(Letter{*la + 1, *lb - 1});
  }
  return out;
}

// A reduced path inside D, searched within the induced space and checked
// against the full space.
bool reduced_path_inside(const ColoredSpace& space, const InducedSpace& I, const Flag& F,
                         const Flag& G) {
  Flag f, g;
  for (VertexId v : F) f.push_back(I.global_to_local[v]);
  for (VertexId v : G) g.push_back(I.global_to_local[v]);
  std::optional<FlagPath> local;
  try {
    local = flag_path(I.space, f, g);
  } catch (const Error&) {
    return false;
  }
  FlagPath P{{}, local->word};
  for (const Flag& h : local->flags) {
    Flag x;
    for (VertexId v : h) x.push_back(I.local_to_global[v]);
    P.flags.push_back(std::move(x));
  }
  return is_reduced_path(space, P);
}

}  // namespace

void suite_flags_paths(const SuiteConfig& config, Recorder& rec, std::size_t& cases) {
  const std::string kReduced = "flag_path returns a reduced path in normal form";
  const std::string kClosed = "no nontrivial closed reduced path";
  const std::string kOrder = "path word independent of search order";
  const std::string kReverse = "reverse path has the inverse word";
  const std::string kScaffoldNice = "path vertices form a nice set";
  const std::string kScaffold = "open pairs at the last flag are the final segment";
  const std::string kClosure = "every flag in a path's vertices lies on a permutation";
  const std::string kWobble = "same-word paths agree modulo wobbling";
  const std::string kNiceChar = "union of flags nice iff pairwise joined inside";
  const std::string kPermute = "permuted path keeps endpoints and vertices";
  const std::string kNoError = "no operation raises an error";
  for (std::size_t c = 0; c < config.cases; ++c, ++cases) {
    std::string context = "case " + std::to_string(c);
    try {
    Rng rng(config.seed, c);
    const ColoredSpace space = case_space(config, c, rng);
    const std::string in = show_space(space);
    context = in;
    const std::vector<Flag> flags = enumerate_flags(space);
    if (flags.empty()) continue;
    const Flag& any = rng.pick(flags);
    rec.check(kClosed, path_word(space, any, any).empty(), in + " F=" + flag_to_string(any));
    for (int pair = 0; pair < 3; ++pair) {
      const Flag& F = rng.pick(flags);
      const Flag& G = rng.pick(flags);
      const std::string pin = in + " F=" + flag_to_string(F) + " G=" + flag_to_string(G);
      const FlagPath P = flag_path(space, F, G);
      const std::string po = P.word.to_string() + " via " + flags_text(P.flags);
      rec.check(kReduced, P.flags.front() == F && P.flags.back() == G &&
                              P.word == normal_form(P.word) && is_reduced_path(space, P),
                pin, po);
      std::set<Flag> distinct(P.flags.begin(), P.flags.end());
      rec.check(kClosed, distinct.size() == P.flags.size(), pin, po);
      std::optional<FlagPath> other;
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        FlagPath Q = flag_path(space, F, G, {seed * 7919 + c});
        rec.check(kOrder, equivalent(Q.word, P.word), pin,
                  Q.word.to_string() + " vs " + P.word.to_string());
        if (!other && equivalent(Q.word, P.word)) other = std::move(Q);
      }
      const Word back = path_word(space, G, F);
      rec.check(kReverse, equivalent(back, inverse(P.word)), pin, back.to_string());

      const VertexSet D = path_vertices(P);
      auto nice = is_nice(space, D);
      rec.check(kScaffoldNice, nice.ok, pin, nice.witness);
      const auto fs = final_segment(P.word).segment;
      const std::set<Letter> expect(fs.begin(), fs.end());
      const std::set<Letter> got = open_letters_at(space, D, G);
      std::string got_text;
      for (Letter s : got) got_text += to_string(s);
      rec.check(kScaffold, got == expect, pin, po + " open " + got_text);

      std::set<Flag> on_perms;
      const std::vector<Word> perms = linear_extensions(P.word, 5000);
      for (const Word& e : perms) {
        FlagPath Q = permute_path(P, e);
        on_perms.insert(Q.flags.begin(), Q.flags.end());
      }
      for (const Flag& K : enumerate_flags(space, D)) {
        rec.check(kClosure, on_perms.count(K) == 1, pin, "flag " + flag_to_string(K));
      }

      if (other) {
        const FlagPath Q = permute_path(*other, P.word);
        bool ok = true;
        for (std::size_t i = 0; i < P.flags.size(); ++i) {
          IndexSet wob = wobbling(prefix(P.word, i), suffix(P.word, i));
          ok = ok && equivalent_mod(P.flags[i], Q.flags[i], wob);
        }
        rec.check(kWobble, ok, pin, po + " / " + flags_text(Q.flags));
      }

      const Word& target = rng.pick(perms);
      const FlagPath T = permute_path(P, target);
      bool ok = T.word == target && T.flags.front() == F && T.flags.back() == G &&
                path_vertices(T) == D;
      for (std::size_t k = 0; ok && k < T.word.size(); ++k) {
        ok = difference(T.flags[k], T.flags[k + 1]) == T.word[k].levels();
      }
      rec.check(kPermute, ok, pin + " target=" + target.to_string(), flags_text(T.flags));
    }

    // Niceness of a small union of flags against pairwise reduced paths.
    VertexSet A;
    std::size_t picks = 1 + rng.below(3);
    for (std::size_t k = 0; k < picks; ++k) {
      const Flag& F = rng.pick(flags);
      A.insert(A.end(), F.begin(), F.end());
    }
    std::sort(A.begin(), A.end());
    A.erase(std::unique(A.begin(), A.end()), A.end());
    const InducedSpace I = induced(space, A);
    const std::vector<Flag> inside = enumerate_flags(space, A);
    bool joined = true;
    for (std::size_t i = 0; i < inside.size() && joined; ++i) {
      for (std::size_t j = i + 1; j < inside.size() && joined; ++j) {
        joined = reduced_path_inside(space, I, inside[i], inside[j]);
      }
    }
    auto nice = is_nice(space, A);
    rec.check(kNiceChar, nice.ok == joined, in + " A=" + flags_text(inside),
              std::string("nice ") + (nice.ok ? "yes" : "no") + ", joined " +
                  (joined ? "yes" : "no"));
    } catch (const Error& e) {
      rec.check(kNoError, false, context, e.what());
    }
  }
}

void suite_flags_forking(const SuiteConfig& config, Recorder& rec, std::size_t& cases) {
  const std::string kRealize = "realized flags connect back with their word";
  const std::string kChain = "chained realization composes without splitting";
  const std::string kFresh = "independent realizations are independent";
  const std::string kOverSet = "independence over a nice set iff over each of its flags";
  const std::string kPathIndep = "independence over the path to the basepoint";
  const std::string kTrans = "restricted transitivity";
  const std::string kConverse = "converse along a reduced path";
  const std::string kCounter = "unreduced converse fails on the counterexample";
  const std::string kAlpha = "basepoint path is a chain of global operations";
  const std::string kFoot = "a flag of the set on the path fixes the rest of the word";
  const std::string kCanon = "canonical base independent of the basepoint";
  const std::string kBasepoint = "a basepoint exists over a nice set";
  const std::string kTwo = "two realizations fix the middle flag modulo sr(u)";
  const std::string kNoError = "no operation raises an error";
  for (std::size_t c = 0; c < config.cases; ++c, ++cases) {
    std::string context = "case " + std::to_string(c);
    try {
    Rng rng(config.seed, c);
    const int n = rng.between(1, config.n_max);
    ColoredSpace space = random_space(rng, n, 3);
    const Flag G0 = rng.pick(enumerate_flags(space));
    const Word u = random_reduced(rng, n, 3);
    const Word v = random_reduced(rng, n, 3);
    const Word h = random_reduced(rng, n, 3);
    const Flag F1 = realize_type(space, G0, u);
    const Flag F2 = realize_type(space, F1, v);
    const Flag H = realize_type(space, G0, h);
    const Flag F1b = realize_type(space, G0, u);
    const std::string in = show_space(space) + " u=" + u.to_string() + " v=" + v.to_string() +
                           " h=" + h.to_string();
    context = in + " G0=" + flag_to_string(G0);

    rec.check(kRealize, equivalent(path_word(space, F1, G0), u) &&
                            equivalent(path_word(space, F2, F1), v) &&
                            equivalent(path_word(space, H, G0), h),
              in);
    const Word w20 = path_word(space, F2, G0);
    rec.check(kChain, indep(space, F2, F1, G0) && equivalent(w20, concat_reduce(v, u)), in,
              w20.to_string());
    rec.check(kFresh, indep(space, F1, G0, H) && indep(space, H, G0, F1) &&
                          indep(space, F1, G0, F1b),
              in);

    // X: the vertices of the reduced path from F1 down to G0.
    const VertexSet X = path_vertices(flag_path(space, F1, G0));
    const std::vector<Flag> in_X = enumerate_flags(space, X);
    for (const Flag* base : {&F1, &rng.pick(in_X)}) {
      bool each = true;
      for (const Flag& K : in_X) each = each && indep(space, F2, *base, K);
      const bool over = indep_over_set(space, F2, *base, X);
      rec.check(kOverSet, over == each, in + " base=" + flag_to_string(*base),
                std::string("over set ") + (over ? "yes" : "no"));
      if (base == &F1) rec.check(kPathIndep, over && each, in);
    }

    // Restricted transitivity on random quadruples from the configuration.
    const std::vector<Flag> pool{G0, F1, F2, H, F1b};
    for (int k = 0; k < 4; ++k) {
      const Flag& F = rng.pick(pool);
      const Flag& A0 = rng.pick(pool);
      const Flag& B0 = rng.pick(pool);
      const Flag& C = rng.pick(pool);
      const std::string qin = in + " F=" + flag_to_string(F) + " F0=" + flag_to_string(A0) +
                              " H0=" + flag_to_string(B0) + " H=" + flag_to_string(C);
      const bool left = indep(space, F, A0, B0), right = indep(space, F, B0, C);
      const bool whole = indep(space, F, A0, C);
      if (left && right) rec.check(kTrans, whole, qin);
      if (is_reduced(path_word(space, A0, B0) + path_word(space, B0, C)) && whole) {
        rec.check(kConverse, left && right, qin);
      }
    }

    // The counterexample: F0 -s- H0 -s- H, F0 -t- H, F -s- F0, F -t- H0,
    // F -s- H with s the full letter and t a proper subletter.
    {
      ColoredSpace m(n);
      auto ids = m.apply_alpha({0, n}, Anchor::bottom(), Anchor::top());
      const Flag A0(ids.begin(), ids.end());
      int lo = rng.between(0, n), hi = rng.between(lo, n);
      if (lo == 0 && hi == n) (rng.coin() && n > 0) ? ++lo : --hi;
      const Letter t{lo, hi};
      auto below = [&](const Flag& K) {
        return t.lo == 0 ? Anchor::bottom() : Anchor::real(K[static_cast<std::size_t>(t.lo - 1)]);
      };
      auto above = [&](const Flag& K) {
        return t.hi == n ? Anchor::top() : Anchor::real(K[static_cast<std::size_t>(t.hi + 1)]);
      };
      auto child = [&](const Flag& K) {
        auto made = m.apply_alpha(t, below(K), above(K));
        Flag out = K;
        for (int i = t.lo; i <= t.hi; ++i) out[static_cast<std::size_t>(i)] = made[static_cast<std::size_t>(i - t.lo)];
        return out;
      };
      const Flag Hc = child(A0);
      auto ids2 = m.apply_alpha({0, n}, Anchor::bottom(), Anchor::top());
      const Flag B0(ids2.begin(), ids2.end());
      const Flag Fc = child(B0);
      const std::string cin = "N=" + std::to_string(n) + " t=" + to_string(t);
      const bool a = indep(m, Fc, A0, Hc), b = indep(m, Fc, B0, Hc), bad = indep(m, Fc, A0, B0);
      const bool unreduced = !is_reduced(path_word(m, A0, B0) + path_word(m, B0, Hc));
      rec.check(kCounter, a && b && !bad && unreduced, cin,
                std::string("F|F0 H: ") + (a ? "1" : "0") + ", F|H0 H: " + (b ? "1" : "0") +
                    ", F|F0 H0: " + (bad ? "1" : "0"));
    }

    // Basepoint over a nice set holding G0 and the path to H.
    const VertexSet Y = path_vertices(flag_path(space, G0, H));
    std::optional<Basepoint> found;
    try {
      found = basepoint(space, F2, Y);
    } catch (const Error& e) {
      rec.check(kBasepoint, false, in + " F=" + flag_to_string(F2) + " G0=" + flag_to_string(G0) + " H=" + flag_to_string(H), e.what());
      continue;
    }
    const Basepoint& bp = *found;
    const FlagPath P = flag_path(space, F2, bp.flag);
    const std::string bin = in + " basepoint " + flag_to_string(bp.flag) + " word " +
                            bp.word.to_string();
    {
      bool ok = equivalent(P.word, bp.word);
      VertexSet rest = Y;
      for (std::size_t i = P.word.size(); ok && i >= 1; --i) {
        rest = merge(rest, vertices_of({&P.flags[i]}));
        const Letter s = P.word[i - 1];
        const Flag& prev = P.flags[i - 1];
        const Flag& at = P.flags[i];
        Anchor lo = s.lo == 0 ? Anchor::bottom() : Anchor::real(at[static_cast<std::size_t>(s.lo - 1)]);
        Anchor hi = s.hi == n ? Anchor::top() : Anchor::real(at[static_cast<std::size_t>(s.hi + 1)]);
        std::vector<char> mask = mask_of(space, between(space, lo, hi));
        std::vector<VertexId> fresh;
        for (int l = s.lo; l <= s.hi; ++l) fresh.push_back(prev[static_cast<std::size_t>(l)]);
        for (VertexId x : fresh) ok = ok && !has(rest, x);
        auto dist = bfs(space, fresh, s, &mask);
        for (VertexId y : rest) {
          int l = space.level(y);
          if (l >= s.lo && l <= s.hi && dist[y] != kInfinite) ok = false;
        }
      }
      VertexSet all = merge(Y, path_vertices(P));
      ok = ok && is_nice(space, all).ok;
      rec.check(kAlpha, ok, bin, flags_text(P.flags));
    }
    {
      const std::vector<Flag> in_Y = enumerate_flags(space, Y);
      bool ok = true;
      std::string where;
      for (std::size_t k = 0; k <= P.word.size(); ++k) {
        const Flag& Hk = P.flags[k];
        IndexSet A;
        for (int l = 0; l <= n; ++l) {
          if (!has(Y, Hk[static_cast<std::size_t>(l)])) A.insert(l);
        }
        bool in_class = std::any_of(in_Y.begin(), in_Y.end(),
                                    [&](const Flag& K) { return equivalent_mod(Hk, K, A); });
        if (in_class && !support(suffix(P.word, k)).subset_of(A)) {
          ok = false;
          where = "k=" + std::to_string(k) + " A=" + A.to_string();
        }
      }
      rec.check(kFoot, ok, bin, where);
      const IndexSet sr = right_stabilizer(bp.word);
      bool same = true;
      for (const Flag& K : in_Y) {
        if (equivalent(path_word(space, F2, K), bp.word)) {
          same = same && equivalent_mod(K, bp.flag, sr);
        }
      }
      rec.check(kCanon, same, bin);
    }

    // Two realizations of u over G0.
    {
      const FinalSegment fs = final_segment(u);
      const Word& u1 = fs.remainder;
      const Word target = u1 + fs.segment + inverse(u1);
      const FlagPath Q = flag_path(space, F1, F1b);
      const std::string tin = in + " path " + Q.word.to_string();
      if (!equivalent(Q.word, target)) {
        rec.check(kTwo, false, tin, "word is not u1·segment·u1^-1 = " + target.to_string());
      } else {
        const FlagPath R = permute_path(Q, target);
        const Flag& mid = R.flags[u1.size() + fs.segment.size()];
        rec.check(kTwo, equivalent_mod(mid, G0, right_stabilizer(u)), tin,
                  "middle " + flag_to_string(mid));
      }
    }
    } catch (const Error& e) {
      rec.check(kNoError, false, context, e.what());
    }
  }
}

}  // namespace psn::oracle
