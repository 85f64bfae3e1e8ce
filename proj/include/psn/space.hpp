#pragma once

// Finite colored N-spaces: graphs with vertices on levels 0..N and edges only
// between adjacent levels, grown from the empty space by α_s operations.
// Two imaginary anchors complete the picture: Bottom at level -1 lies
// beneath every vertex, Top at level N+1 lies over every vertex.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "psn/alphabet.hpp"

namespace psn {

using VertexId = std::uint32_t;
// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;

class Anchor {
 public:
  enum class Kind : std::uint8_t { bottom, real, top };

  static Anchor bottom() { return Anchor(Kind::bottom, 0); }
  static Anchor top() { return Anchor(Kind::top, 0); }
  static Anchor real(VertexId v) { return Anchor(Kind::real, v); }

  Kind kind() const { return kind_; }
  bool is_real() const { return kind_ == Kind::real; }
  VertexId vertex() const { return id_; }

  // "bottom", "top" or the decimal id.
  std::string to_string() const;

  bool operator==(const Anchor&) const = default;
  auto operator<=>(const Anchor&) const = default;

 private:
  Anchor(Kind k, VertexId v) : kind_(k), id_(v) {}
  Kind kind_;
  VertexId id_;
};

struct BuildStep {
  Letter letter;
  Anchor lo;
  Anchor hi;
  std::vector<VertexId> created;
};

class ColoredSpace {
 public:
  explicit ColoredSpace(int n);

  int dim() const { return n_; }
  std::size_t num_vertices() const { return level_.size(); }
  int level(VertexId v) const;
  const std::vector<VertexId>& neighbors(VertexId v) const;
  const std::vector<VertexId>& at_level(int i) const;
  bool adjacent(VertexId a, VertexId b) const;
  std::vector<std::pair<VertexId, VertexId>> edges() const;
  const std::vector<BuildStep>& build_log() const { return log_; }
  // True when the space was produced purely by apply_alpha.
  bool built_by_alpha() const { return raw_edits_ == 0; }

  int anchor_level(Anchor a) const;

  // Adjoins a fresh path at the levels of s between lo and hi.
  std::vector<VertexId> apply_alpha(Letter s, Anchor lo, Anchor hi);

  // Raw construction, for hand-built (possibly non-pseudospace) examples.
  VertexId add_vertex(int level);
  void add_edge(VertexId a, VertexId b);

  void check_vertex(VertexId v) const;

 private:
  int n_;
  std::vector<int> level_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<std::vector<VertexId>> by_level_;
  std::vector<BuildStep> log_;
  std::size_t raw_edits_ = 0;
};

// Characteristic vector of a vertex set.
std::vector<char> mask_of(const ColoredSpace& space, const VertexSet& D);
VertexSet all_vertices(const ColoredSpace& space);

// a lies beneath b: level(a) < level(b) and a monotone path climbs from a to b.
bool lies_over(const ColoredSpace& space, Anchor a, Anchor b);
// Same, with the monotone path confined to the vertices of mask.
bool lies_over_within(const ColoredSpace& space, const std::vector<char>& mask,
                      Anchor a, Anchor b);

// Vertices strictly over a (above = true) or strictly beneath a.
std::vector<char> cone(const ColoredSpace& space, Anchor a, bool above,
                       const std::vector<char>* within = nullptr);

inline constexpr std::size_t kInfinite = static_cast<std::size_t>(-1);

// Shortest path length from x to y inside the subgraph induced on the levels
// of t (a letter used as a level interval); nullopt when unreachable.
std::optional<std::size_t> distance(const ColoredSpace& space, VertexId x, VertexId y,
                                    Letter t);

// Breadth-first distances from sources, moving only through vertices allowed
// by mask (nullptr allows all) at levels in [t.lo, t.hi].  kInfinite marks
// unreached vertices.
std::vector<std::size_t> bfs(const ColoredSpace& space, const std::vector<VertexId>& sources,
                             Letter t, const std::vector<char>* mask = nullptr);

struct SubspaceView {
  VertexSet vertices;
  std::vector<std::pair<VertexId, VertexId>> edges;
  int level_offset = 0;  // view level = space level - level_offset
};

// Vertices strictly between a and b with their induced edges.
VertexSet between(const ColoredSpace& space, Anchor a, Anchor b);
SubspaceView between_subgraph(const ColoredSpace& space, Anchor a, Anchor b);

struct SimplyConnectedWitness {
  Anchor a = Anchor::bottom();
  Anchor b = Anchor::top();
  Letter t;
  VertexId x = 0;
  VertexId y = 0;
  std::size_t avoiding = 0;                 // shortest t-path avoiding a and b
  std::optional<std::size_t> inside;        // shortest t-path between a and b
};

struct SimplyConnectedResult {
  bool ok = true;
  std::optional<SimplyConnectedWitness> witness;
};

SimplyConnectedResult is_simply_connected(const ColoredSpace& space);

bool is_complete(const ColoredSpace& space, const VertexSet& D);

struct CheckResult {
  bool ok = true;
  std::string witness;  // empty when ok
};

CheckResult is_nice(const ColoredSpace& space, const VertexSet& D);
CheckResult is_wunderbar(const ColoredSpace& space, const VertexSet& D);

// A nice superset of A ∪ {b}.  Throws precondition-violated unless A is nice.
VertexSet nice_hull(const ColoredSpace& space, const VertexSet& A, VertexId b);

std::vector<std::pair<Anchor, Anchor>> open_pairs(const ColoredSpace& space,
                                                  const VertexSet& D);

// Monotone path from the anchor `from` up to the vertex `to`, without
// `from` and ending with `to`.  Bottom starts anywhere on level 0.
std::vector<VertexId> climb_to(const ColoredSpace& space, Anchor from, VertexId to);
// Monotone path from the vertex `from` up to the anchor `to`, excluding both.
std::vector<VertexId> climb_from(const ColoredSpace& space, VertexId from, Anchor to);

// Subgraph induced on D as a standalone space.  local_to_global maps new ids
// back; the result has no build log.
struct InducedSpace {
  ColoredSpace space;
  std::vector<VertexId> local_to_global;
  std::vector<VertexId> global_to_local;  // kNoVertex when absent
};
inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);
InducedSpace induced(const ColoredSpace& space, const VertexSet& D);

}  // namespace psn
