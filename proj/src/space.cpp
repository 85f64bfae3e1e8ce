#include "psn/space.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

#include "psn/error.hpp"

namespace psn {

std::string Anchor::to_string() const {
  switch (kind_) {
    case Kind::bottom: return "bottom";
    case Kind::top: return "top";
    case Kind::real: break;
  }
  return std::to_string(id_);
}

ColoredSpace::ColoredSpace(int n) : n_(n) {
  check_dimension(n);
  by_level_.resize(static_cast<std::size_t>(n) + 1);
}

void ColoredSpace::check_vertex(VertexId v) const {
  if (v >= level_.size()) {
    throw Error(Errc::unknown_vertex, "no vertex " + std::to_string(v));
  }
}

int ColoredSpace::level(VertexId v) const {
  check_vertex(v);
  return level_[v];
}

const std::vector<VertexId>& ColoredSpace::neighbors(VertexId v) const {
  check_vertex(v);
  return adj_[v];
}

const std::vector<VertexId>& ColoredSpace::at_level(int i) const {
  static const std::vector<VertexId> kNone;
  if (i < 0 || i > n_) return kNone;
  return by_level_[static_cast<std::size_t>(i)];
}

bool ColoredSpace::adjacent(VertexId a, VertexId b) const {
  const auto& na = neighbors(a);
  return std::find(na.begin(), na.end(), b) != na.end();
}

std::vector<std::pair<VertexId, VertexId>> ColoredSpace::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId a = 0; a < level_.size(); ++a) {
    for (VertexId b : adj_[a]) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int ColoredSpace::anchor_level(Anchor a) const {
  switch (a.kind()) {
    case Anchor::Kind::bottom: return -1;
    case Anchor::Kind::top: return n_ + 1;
    case Anchor::Kind::real: break;
  }
  return level(a.vertex());
}

VertexId ColoredSpace::add_vertex(int lvl) {
  if (lvl < 0 || lvl > n_) {
    throw Error(Errc::invalid_letter, "level " + std::to_string(lvl) + " outside [0," +
                                          std::to_string(n_) + "]");
  }
  auto v = static_cast<VertexId>(level_.size());
  level_.push_back(lvl);
  adj_.emplace_back();
  by_level_[static_cast<std::size_t>(lvl)].push_back(v);
  ++raw_edits_;
  return v;
}

void ColoredSpace::add_edge(VertexId a, VertexId b) {
  if (std::abs(level(a) - level(b)) != 1) {
    throw Error(Errc::precondition_violated, "edge " + std::to_string(a) + "-" +
                                                 std::to_string(b) +
                                                 " does not join adjacent levels");
  }
  if (adjacent(a, b)) return;
  adj_[a].push_back(b);
  adj_[b].push_back(a);
  ++raw_edits_;
}

std::vector<VertexId> ColoredSpace::apply_alpha(Letter s, Anchor lo, Anchor hi) {
  if (!s.valid_for(n_)) {
    throw Error(Errc::invalid_letter, to_string(s) + " is not a letter for N=" +
                                          std::to_string(n_));
  }
  for (Anchor a : {lo, hi}) {
    if (a.is_real()) check_vertex(a.vertex());
  }
  if (anchor_level(lo) != s.lo - 1 || anchor_level(hi) != s.hi + 1) {
    throw Error(Errc::anchor_level_mismatch,
                "anchors " + lo.to_string() + "," + hi.to_string() + " are at levels " +
                    std::to_string(anchor_level(lo)) + "," +
                    std::to_string(anchor_level(hi)) + "; " + to_string(s) + " needs " +
                    std::to_string(s.lo - 1) + "," + std::to_string(s.hi + 1));
  }
  if (lo.is_real() && hi.is_real() && !lies_over(*this, lo, hi)) {
    throw Error(Errc::anchors_not_over,
                hi.to_string() + " does not lie over " + lo.to_string());
  }
  const std::size_t saved = raw_edits_;
  std::vector<VertexId> created;
  for (int i = s.lo; i <= s.hi; ++i) {
    VertexId v = add_vertex(i);
    if (!created.empty()) add_edge(created.back(), v);
    created.push_back(v);
  }
  if (lo.is_real()) add_edge(lo.vertex(), created.front());
  if (hi.is_real()) add_edge(created.back(), hi.vertex());
  raw_edits_ = saved;
  log_.push_back({s, lo, hi, created});
  return created;
}

std::vector<char> mask_of(const ColoredSpace& space, const VertexSet& D) {
  std::vector<char> mask(space.num_vertices(), 0);
  for (VertexId v : D) {
    space.check_vertex(v);
    mask[v] = 1;
  }
  return mask;
}

VertexSet all_vertices(const ColoredSpace& space) {
  VertexSet out(space.num_vertices());
  for (VertexId v = 0; v < out.size(); ++v) out[v] = v;
  return out;
}

std::vector<char> cone(const ColoredSpace& space, Anchor a, bool above,
                       const std::vector<char>* within) {
  const std::size_t nv = space.num_vertices();
  std::vector<char> out(nv, 0);
  auto allowed = [&](VertexId v) { return within == nullptr || (*within)[v]; };
  if (!a.is_real()) {
    bool everything = above == (a.kind() == Anchor::Kind::bottom);
    if (everything) {
      for (VertexId v = 0; v < nv; ++v) out[v] = allowed(v) ? 1 : 0;
    }
    return out;
  }
  const int step = above ? 1 : -1;
  std::vector<VertexId> stack{a.vertex()};
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : space.neighbors(v)) {
      if (out[w] || !allowed(w) || space.level(w) != space.level(v) + step) continue;
      out[w] = 1;
      stack.push_back(w);
    }
  }
  return out;
}

bool lies_over(const ColoredSpace& space, Anchor a, Anchor b) {
  if (space.anchor_level(a) >= space.anchor_level(b)) return false;
  if (!a.is_real() || !b.is_real()) return true;
  return cone(space, a, true)[b.vertex()] != 0;
}

bool lies_over_within(const ColoredSpace& space, const std::vector<char>& mask, Anchor a,
                      Anchor b) {
  if (space.anchor_level(a) >= space.anchor_level(b)) return false;
  if (!a.is_real() || !b.is_real()) return true;
  return cone(space, a, true, &mask)[b.vertex()] != 0;
}

std::vector<std::size_t> bfs(const ColoredSpace& space, const std::vector<VertexId>& sources,
                             Letter t, const std::vector<char>* mask) {
  std::vector<std::size_t> dist(space.num_vertices(), kInfinite);
  std::deque<VertexId> queue;
  auto ok = [&](VertexId v) {
    int l = space.level(v);
    return l >= t.lo && l <= t.hi && (mask == nullptr || (*mask)[v]);
  };
  for (VertexId s : sources) {
    if (ok(s) && dist[s] == kInfinite) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : space.neighbors(v)) {
      if (dist[w] != kInfinite || !ok(w)) continue;
      dist[w] = dist[v] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

std::optional<std::size_t> distance(const ColoredSpace& space, VertexId x, VertexId y,
                                    Letter t) {
  if (!t.valid_for(space.dim())) {
    throw Error(Errc::invalid_letter, to_string(t) + " is not a level interval");
  }
  for (VertexId v : {x, y}) {
    int l = space.level(v);
    if (l < t.lo || l > t.hi) {
      throw Error(Errc::level_not_in_t, "vertex " + std::to_string(v) + " at level " +
                                            std::to_string(l) + " is outside " +
                                            to_string(t));
    }
  }
  std::size_t d = bfs(space, {x}, t)[y];
  if (d == kInfinite) return std::nullopt;
  return d;
}

namespace {

std::vector<char> between_mask(const ColoredSpace& space, Anchor a, Anchor b) {
  std::vector<char> up = cone(space, a, true);
  std::vector<char> down = cone(space, b, false);
  for (std::size_t v = 0; v < up.size(); ++v) up[v] = up[v] && down[v];
  return up;
}

VertexSet members(const std::vector<char>& mask) {
  VertexSet out;
  for (VertexId v = 0; v < mask.size(); ++v) {
    if (mask[v]) out.push_back(v);
  }
  return out;
}

Letter full_levels(const ColoredSpace& space) { return {0, space.dim()}; }

// Component label per vertex of the subgraph induced by mask at levels t;
// -1 outside.
std::vector<int> components(const ColoredSpace& space, Letter t,
                            const std::vector<char>* mask) {
  std::vector<int> label(space.num_vertices(), -1);
  int next = 0;
  for (VertexId v = 0; v < space.num_vertices(); ++v) {
    int l = space.level(v);
    if (label[v] >= 0 || l < t.lo || l > t.hi || (mask && !(*mask)[v])) continue;
    auto dist = bfs(space, {v}, t, mask);
    for (VertexId w = 0; w < dist.size(); ++w) {
      if (dist[w] != kInfinite) label[w] = next;
    }
    ++next;
  }
  return label;
}

}  // namespace

VertexSet between(const ColoredSpace& space, Anchor a, Anchor b) {
  if (!lies_over(space, a, b)) {
    throw Error(Errc::not_over, b.to_string() + " does not lie over " + a.to_string());
  }
  return members(between_mask(space, a, b));
}

SubspaceView between_subgraph(const ColoredSpace& space, Anchor a, Anchor b) {
  SubspaceView view;
  view.vertices = between(space, a, b);
  view.level_offset = space.anchor_level(a) + 1;
  std::vector<char> mask = mask_of(space, view.vertices);
  for (auto [x, y] : space.edges()) {
    if (mask[x] && mask[y]) view.edges.emplace_back(x, y);
  }
  return view;
}

SimplyConnectedResult is_simply_connected(const ColoredSpace& space) {
  const int n = space.dim();
  const std::size_t nv = space.num_vertices();
  std::vector<Anchor> anchors{Anchor::bottom()};
  for (VertexId v = 0; v < nv; ++v) anchors.push_back(Anchor::real(v));
  anchors.push_back(Anchor::top());
  std::vector<std::vector<char>> down(anchors.size());
  for (std::size_t k = 0; k < anchors.size(); ++k) {
    down[k] = cone(space, anchors[k], false);
  }
  for (std::size_t ia = 0; ia + 1 < anchors.size(); ++ia) {
    const Anchor a = anchors[ia];
    const std::vector<char> up = cone(space, a, true);
    for (std::size_t ib = 1; ib < anchors.size(); ++ib) {
      const Anchor b = anchors[ib];
      if (!a.is_real() && !b.is_real()) continue;
      if (!lies_over(space, a, b)) continue;
      std::vector<char> inside(nv, 0);
      std::vector<char> avoid(nv, 1);
      for (VertexId v = 0; v < nv; ++v) inside[v] = up[v] && down[ib][v];
      if (a.is_real()) avoid[a.vertex()] = 0;
      if (b.is_real()) avoid[b.vertex()] = 0;
      const int l = space.anchor_level(a);
      const int r = space.anchor_level(b);
      // t ranges over intervals inside [l,r] ∩ [0,N] that meet (l,r); t may
      // include the anchor levels themselves.
      for (int tl = std::max(l, 0); tl <= std::min(r, n); ++tl) {
        for (int th = tl; th <= std::min(r, n); ++th) {
          if (th <= l || tl >= r) continue;
          const Letter t{tl, th};
          std::vector<VertexId> xs;
          for (VertexId v = 0; v < nv; ++v) {
            if (inside[v] && space.level(v) >= tl && space.level(v) <= th) xs.push_back(v);
          }
          if (xs.size() < 2) continue;
          for (std::size_t i = 0; i < xs.size(); ++i) {
            auto d_avoid = bfs(space, {xs[i]}, t, &avoid);
            auto d_inside = bfs(space, {xs[i]}, t, &inside);
            for (std::size_t j = i + 1; j < xs.size(); ++j) {
              const VertexId y = xs[j];
              if (d_avoid[y] == kInfinite) continue;
              if (d_inside[y] != kInfinite && d_inside[y] <= d_avoid[y]) continue;
              SimplyConnectedWitness w;
              w.a = a;
              w.b = b;
              w.t = t;
              w.x = xs[i];
              w.y = y;
              w.avoiding = d_avoid[y];
              if (d_inside[y] != kInfinite) w.inside = d_inside[y];
              return {false, w};
            }
          }
        }
      }
    }
  }
  return {};
}

bool is_complete(const ColoredSpace& space, const VertexSet& D) {
  const std::vector<char> mask = mask_of(space, D);
  const int n = space.dim();
  std::vector<char> reach_down(space.num_vertices(), 0), reach_up(space.num_vertices(), 0);
  for (int i = 0; i <= n; ++i) {
    for (VertexId v : space.at_level(i)) {
      if (!mask[v]) continue;
      if (i == 0) {
        reach_down[v] = 1;
        continue;
      }
      for (VertexId w : space.neighbors(v)) {
        if (mask[w] && space.level(w) == i - 1 && reach_down[w]) reach_down[v] = 1;
      }
    }
  }
  for (int i = n; i >= 0; --i) {
    for (VertexId v : space.at_level(i)) {
      if (!mask[v]) continue;
      if (i == n) {
        reach_up[v] = 1;
        continue;
      }
      for (VertexId w : space.neighbors(v)) {
        if (mask[w] && space.level(w) == i + 1 && reach_up[w]) reach_up[v] = 1;
      }
    }
  }
  for (VertexId v : D) {
    if (!reach_down[v] || !reach_up[v]) return false;
  }
  return true;
}

namespace {

// Condition shared by nice and wunderbar: between-sets computed inside D agree
// with those computed in the whole space.  Between-sets are cut out by the
// "lies beneath" relation, so it suffices that a beneath x in M implies a
// beneath x inside D for all a, x in D.
CheckResult check_between_sets(const ColoredSpace& space, const VertexSet& D,
                               const std::vector<char>& mask) {
  for (VertexId a : D) {
    auto in_m = cone(space, Anchor::real(a), true);
    auto in_d = cone(space, Anchor::real(a), true, &mask);
    for (VertexId x : D) {
      if (in_m[x] && !in_d[x]) {
        return {false, "between-sets: " + std::to_string(x) + " lies over " +
                           std::to_string(a) + " in the space but not inside the set"};
      }
    }
  }
  return {};
}

CheckResult check_distances(const ColoredSpace& space, const VertexSet& D, bool exact) {
  const std::vector<char> mask = mask_of(space, D);
  CheckResult res = check_between_sets(space, D, mask);
  if (!res.ok) return res;
  const int n = space.dim();
  for (int tl = 0; tl <= n; ++tl) {
    for (int th = tl; th <= n; ++th) {
      const Letter t{tl, th};
      std::vector<VertexId> xs;
      for (VertexId v : D) {
        if (space.level(v) >= tl && space.level(v) <= th) xs.push_back(v);
      }
      if (xs.size() < 2) continue;
      if (!exact) {
        auto in_m = components(space, t, nullptr);
        auto in_d = components(space, t, &mask);
        std::vector<std::pair<int, VertexId>> seen(space.num_vertices() + 1, {-1, 0});
        for (VertexId x : xs) {
          auto& slot = seen[static_cast<std::size_t>(in_m[x])];
          if (slot.first < 0) {
            slot = {in_d[x], x};
          } else if (slot.first != in_d[x]) {
            return {false, "distance: " + std::to_string(slot.second) + " and " +
                               std::to_string(x) + " are connected at levels " +
                               to_string(t) + " but not inside the set"};
          }
        }
        continue;
      }
      for (std::size_t i = 0; i < xs.size(); ++i) {
        auto d_m = bfs(space, {xs[i]}, t);
        auto d_d = bfs(space, {xs[i]}, t, &mask);
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
          if (d_m[xs[j]] != d_d[xs[j]]) {
            auto show = [](std::size_t d) {
              return d == kInfinite ? std::string("inf") : std::to_string(d);
            };
            return {false, "distance: " + std::to_string(xs[i]) + "," +
                               std::to_string(xs[j]) + " at levels " + to_string(t) +
                               " have distance " + show(d_m[xs[j]]) +
                               " in the space and " + show(d_d[xs[j]]) + " inside the set"};
          }
        }
      }
    }
  }
  return {};
}

VertexSet hull_step(const ColoredSpace& space, VertexSet A, VertexId b, std::size_t depth) {
  if (std::binary_search(A.begin(), A.end(), b)) return A;
  if (depth > 4 * space.num_vertices() + 16) {
    throw Error(Errc::precondition_violated, "nice hull recursion does not terminate");
  }
  // Width: the lowest A-vertex over b and the highest A-vertex beneath b.
  const auto over_b = cone(space, Anchor::real(b), true);
  const auto under_b = cone(space, Anchor::real(b), false);
  Anchor hi = Anchor::top();
  Anchor lo = Anchor::bottom();
  for (VertexId a : A) {
    if (over_b[a] && space.level(a) < space.anchor_level(hi)) hi = Anchor::real(a);
    if (under_b[a] && space.level(a) > space.anchor_level(lo)) lo = Anchor::real(a);
  }
  auto inside = between_mask(space, lo, hi);
  auto dist = bfs(space, {b}, full_levels(space), &inside);
  VertexId nearest = kNoVertex;
  for (VertexId a : A) {
    if (dist[a] != kInfinite && (nearest == kNoVertex || dist[a] < dist[nearest])) {
      nearest = a;
    }
  }
  if (nearest == kNoVertex) {
    // Infinite distance: adjoin one full path lo .. b .. hi.
    auto lower = climb_to(space, lo, b);
    auto upper = climb_from(space, b, hi);
    A.insert(A.end(), lower.begin(), lower.end());
    A.insert(A.end(), upper.begin(), upper.end());
    std::sort(A.begin(), A.end());
    A.erase(std::unique(A.begin(), A.end()), A.end());
    return A;
  }
  // Walk back from the nearest A-vertex to the neighbour of b on a shortest path.
  VertexId cur = nearest;
  while (dist[cur] > 1) {
    for (VertexId w : space.neighbors(cur)) {
      if (inside[w] && dist[w] + 1 == dist[cur]) {
        cur = w;
        break;
      }
    }
  }
  VertexSet B = hull_step(space, std::move(A), cur, depth + 1);
  return hull_step(space, std::move(B), b, depth + 1);
}

}  // namespace

// Monotone path climbing from `from` to the vertex `to`, excluding `from`,
// including `to`.  Bottom starts anywhere on level 0.
std::vector<VertexId> climb_to(const ColoredSpace& space, Anchor from, VertexId to) {
  const std::vector<char> over = cone(space, from, true);
  std::vector<VertexId> path{to};
  VertexId cur = to;
  while (space.level(cur) > space.anchor_level(from) + 1) {
    VertexId next = kNoVertex;
    for (VertexId w : space.neighbors(cur)) {
      if (space.level(w) == space.level(cur) - 1 && over[w]) {
        next = w;
        break;
      }
    }
    if (next == kNoVertex) throw Error(Errc::not_over, "no monotone path");
    path.push_back(next);
    cur = next;
  }
  if (from.is_real() && !space.adjacent(cur, from.vertex())) {
    throw Error(Errc::not_over, "no monotone path");
  }
  std::reverse(path.begin(), path.end());
  return path;
}

// Monotone path climbing from the vertex `from` to `to`, excluding both.
std::vector<VertexId> climb_from(const ColoredSpace& space, VertexId from, Anchor to) {
  const std::vector<char> under = cone(space, to, false);
  std::vector<VertexId> path;
  VertexId cur = from;
  while (space.level(cur) < space.anchor_level(to) - 1) {
    VertexId next = kNoVertex;
    for (VertexId w : space.neighbors(cur)) {
      if (space.level(w) == space.level(cur) + 1 && under[w]) {
        next = w;
        break;
      }
    }
    if (next == kNoVertex) throw Error(Errc::not_over, "no monotone path");
    path.push_back(next);
    cur = next;
  }
  return path;
}

CheckResult is_nice(const ColoredSpace& space, const VertexSet& D) {
  return check_distances(space, D, false);
}

CheckResult is_wunderbar(const ColoredSpace& space, const VertexSet& D) {
  return check_distances(space, D, true);
}

VertexSet nice_hull(const ColoredSpace& space, const VertexSet& A, VertexId b) {
  space.check_vertex(b);
  VertexSet sorted = A;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  CheckResult nice = is_nice(space, sorted);
  if (!nice.ok) {
    throw Error(Errc::precondition_violated, "nice_hull: A is not nice (" + nice.witness + ")");
  }
  return hull_step(space, std::move(sorted), b, 0);
}

std::vector<std::pair<Anchor, Anchor>> open_pairs(const ColoredSpace& space,
                                                  const VertexSet& D) {
  std::vector<Anchor> anchors{Anchor::bottom()};
  for (VertexId v : D) anchors.push_back(Anchor::real(v));
  anchors.push_back(Anchor::top());
  const std::vector<char> mask = mask_of(space, D);
  std::vector<std::pair<Anchor, Anchor>> out;
  for (Anchor a : anchors) {
    for (Anchor b : anchors) {
      if (!lies_over(space, a, b)) continue;
      auto inside = between_mask(space, a, b);
      VertexId first = kNoVertex;
      std::vector<std::size_t> dist;
      for (VertexId v : D) {
        if (!inside[v]) continue;
        if (first == kNoVertex) {
          first = v;
          dist = bfs(space, {v}, full_levels(space), &inside);
        } else if (dist[v] == kInfinite) {
          out.emplace_back(a, b);
          break;
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

InducedSpace induced(const ColoredSpace& space, const VertexSet& D) {
  InducedSpace out{ColoredSpace(space.dim()), {}, {}};
  out.global_to_local.assign(space.num_vertices(), kNoVertex);
  for (VertexId v : D) {
    space.check_vertex(v);
    if (out.global_to_local[v] != kNoVertex) continue;
    out.global_to_local[v] = out.space.add_vertex(space.level(v));
    out.local_to_global.push_back(v);
  }
  for (auto [x, y] : space.edges()) {
    if (out.global_to_local[x] != kNoVertex && out.global_to_local[y] != kNoVertex) {
      out.space.add_edge(out.global_to_local[x], out.global_to_local[y]);
    }
  }
  return out;
}

}  // namespace psn
