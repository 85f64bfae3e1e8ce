// Space suite: replays every random build script op by op.

#include <algorithm>
#include <numeric>

#include "oracle_internal.hpp"
#include "psn/error.hpp"
#include "psn/space_io.hpp"

namespace psn::oracle {

namespace {

bool adjacent_levels_are_forests(const ColoredSpace& space, std::string& witness) {
  for (int i = 0; i < space.dim(); ++i) {
    std::vector<VertexId> parent(space.num_vertices());
    std::iota(parent.begin(), parent.end(), VertexId{0});
    auto find = [&](VertexId x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (auto [a, b] : space.edges()) {
      int la = space.level(a), lb = space.level(b);
      if (std::min(la, lb) != i) continue;
      VertexId ra = find(a), rb = find(b);
      if (ra == rb) {
        witness = "cycle through edge " + std::to_string(a) + "-" + std::to_string(b);
        return false;
      }
      parent[ra] = rb;
    }
  }
  return true;
}

VertexSet random_subset(Rng& rng, const ColoredSpace& space) {
  VertexSet D;
  for (VertexId v = 0; v < space.num_vertices(); ++v) {
    if (rng.coin()) D.push_back(v);
  }
  return D;
}

VertexSet union_of(const std::vector<Flag>& flags) {
  VertexSet D;
  for (const Flag& F : flags) D.insert(D.end(), F.begin(), F.end());
  std::sort(D.begin(), D.end());
  D.erase(std::unique(D.begin(), D.end()), D.end());
  return D;
}

std::string set_text(const VertexSet& D) {
  std::string out = "{";
  for (VertexId v : D) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

}  // namespace

void suite_space_axioms(const SuiteConfig& config, Recorder& rec, std::size_t& cases) {
  const std::string kSimply = "built spaces are simply connected";
  const std::string kComplete = "built spaces are complete";
  const std::string kStable = "distances survive every operation";
  const std::string kWunderbar = "the old space is wunderbar in the new one";
  const std::string kForest = "adjacent levels form a forest";
  const std::string kJson = "space export round-trips";
  const std::string kHull = "nice hull is nice and contains its input";
  const std::string kNiceWunderbar = "nice iff wunderbar";
  const std::string kAmalgam = "independent operations commute up to isomorphism";
  const std::string kNoError = "no operation raises an error";
  for (std::size_t c = 0; c < config.cases; ++c, ++cases) {
    std::string context = "case " + std::to_string(c);
    try {
    Rng rng(config.seed, c);
    const ColoredSpace space = case_space(config, c, rng);
    const std::string in = show_space(space);
    context = in;
    const int n = space.dim();

    auto sc = is_simply_connected(space);
    rec.check(kSimply, sc.ok, in,
              sc.witness ? "anchors " + sc.witness->a.to_string() + "," + sc.witness->b.to_string()
                         : "");
    rec.check(kComplete, is_complete(space, all_vertices(space)), in);
    std::string forest;
    rec.check(kForest, adjacent_levels_are_forests(space, forest), in, forest);

    // Replay, comparing distances before and after each operation.
    ColoredSpace cur(n);
    for (std::size_t k = 0; k < space.build_log().size(); ++k) {
      const BuildStep& step = space.build_log()[k];
      ColoredSpace next = cur;
      next.apply_alpha(step.letter, step.lo, step.hi);
      bool same = true;
      std::string where;
      for (int lo = 0; lo <= n && same; ++lo) {
        for (int hi = lo; hi <= n && same; ++hi) {
          const Letter t{lo, hi};
          for (VertexId x = 0; x < cur.num_vertices() && same; ++x) {
            if (cur.level(x) < lo || cur.level(x) > hi) continue;
            auto before = bfs(cur, {x}, t);
            auto after = bfs(next, {x}, t);
            for (VertexId y = 0; y < cur.num_vertices(); ++y) {
              if (before[y] != after[y]) {
                same = false;
                where = "op " + std::to_string(k) + " x=" + std::to_string(x) +
                        " y=" + std::to_string(y) + " t=" + to_string(t);
                break;
              }
            }
          }
        }
      }
      rec.check(kStable, same, in, where);
      auto w = is_wunderbar(next, all_vertices(cur));
      rec.check(kWunderbar, w.ok, in + " op " + std::to_string(k), w.witness);
      cur = std::move(next);
    }

    bool json_ok = false;
    try {
      const nlohmann::json j = space_to_json(space);
      const ColoredSpace back = space_from_json(nlohmann::json::parse(j.dump()));
      json_ok = space_to_json(back) == j && back.edges() == space.edges();
    } catch (const std::exception&) {
      json_ok = false;
    }
    rec.check(kJson, json_ok, in);

    const std::vector<Flag> flags = enumerate_flags(space);
    if (!flags.empty()) {
      const Flag& F = rng.pick(flags);
      VertexSet A(F.begin(), F.end());
      std::sort(A.begin(), A.end());
      const auto b = static_cast<VertexId>(rng.below(space.num_vertices()));
      for (const VertexSet& base : {A, VertexSet{}}) {
        const VertexSet H = nice_hull(space, base, b);
        auto nice = is_nice(space, H);
        bool covers = std::includes(H.begin(), H.end(), base.begin(), base.end()) &&
                      std::binary_search(H.begin(), H.end(), b);
        rec.check(kHull, nice.ok && covers,
                  in + " A=" + set_text(base) + " b=" + std::to_string(b),
                  set_text(H) + " " + nice.witness);
      }
    }
    std::vector<VertexSet> samples{random_subset(rng, space), random_subset(rng, space)};
    if (flags.size() >= 2) {
      samples.push_back(union_of({rng.pick(flags), rng.pick(flags)}));
      samples.push_back(union_of({rng.pick(flags), rng.pick(flags), rng.pick(flags)}));
    }
    for (const VertexSet& D : samples) {
      auto a = is_nice(space, D);
      auto b = is_wunderbar(space, D);
      rec.check(kNiceWunderbar, a.ok == b.ok, in + " D=" + set_text(D),
                "nice: " + (a.ok ? std::string("yes") : a.witness) +
                    "; wunderbar: " + (b.ok ? std::string("yes") : b.witness));
    }

    // Amalgam: two operations on the same base, applied in both orders.
    const AlphaOp p = random_op(rng, space);
    const AlphaOp q = random_op(rng, space);
    ColoredSpace one = space, two = space;
    auto p1 = one.apply_alpha(p.s, p.lo, p.hi);
    auto q1 = one.apply_alpha(q.s, q.lo, q.hi);
    auto q2 = two.apply_alpha(q.s, q.lo, q.hi);
    auto p2 = two.apply_alpha(p.s, p.lo, p.hi);
    std::vector<VertexId> map(one.num_vertices());
    std::iota(map.begin(), map.end(), VertexId{0});
    for (std::size_t i = 0; i < p1.size(); ++i) map[p1[i]] = p2[i];
    for (std::size_t i = 0; i < q1.size(); ++i) map[q1[i]] = q2[i];
    bool iso = one.num_vertices() == two.num_vertices();
    for (VertexId v = 0; iso && v < one.num_vertices(); ++v) iso = one.level(v) == two.level(map[v]);
    auto mapped = one.edges();
    for (auto& [a, b] : mapped) {
      a = map[a];
      b = map[b];
      if (a > b) std::swap(a, b);
    }
    std::sort(mapped.begin(), mapped.end());
    iso = iso && mapped == two.edges();
    rec.check(kAmalgam, iso, in + " ops " + to_string(p.s) + "," + to_string(q.s));
    } catch (const Error& e) {
      rec.check(kNoError, false, context, e.what());
    }
  }
}

}  // namespace psn::oracle
