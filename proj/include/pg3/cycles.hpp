// Cycle enumeration, the cycle-nonadjacency membership test, and the
// interior/exterior partition a cycle induces on a plane graph.
//
// All cycle operations require a simple graph and throw
// MultigraphUnsupported otherwise.
#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pg3/plane_graph.hpp"

namespace pg3 {

// A simple cycle: verts[i] -> verts[i+1] (indices mod length) are adjacent
// and darts[i] realizes that step.
struct Cycle {
  std::vector<VertexId> verts;
  std::vector<DartId> darts;

  int length() const { return static_cast<int>(verts.size()); }
  bool contains(VertexId v) const;
  int index_of(VertexId v) const;  // -1 when absent
  bool has_edge(VertexId u, VertexId v) const;
  // Rotation and reflection invariant identity.
  std::vector<VertexId> canonical_key() const;
};

// Validates that verts traces a simple cycle of g and attaches the darts.
Cycle make_cycle(const PlaneGraph& g, const std::vector<VertexId>& verts);

// Every simple cycle of length <= max_len, each exactly once, in
// deterministic search order (lowest vertex first, then lexicographic).
std::vector<Cycle> enumerate_cycles(const PlaneGraph& g, int max_len);

// A shortest cycle of g, if g has any cycle. Deterministic tie-break.
std::optional<Cycle> shortest_cycle(const PlaneGraph& g);

// Edges of g joining two non-consecutive vertices of c.
std::vector<std::pair<VertexId, VertexId>> chords(const PlaneGraph& g, const Cycle& c);

// Which cycle-length pairs may not share an edge, and how long a cycle the
// membership test must consider.
class NonadjacencySpec {
public:
  // Forbids {i, j} with 3 <= i <= j and i + j <= 10, plus {5, 6}.
  static NonadjacencySpec defaults();
  // Comma-separated "i-j" pairs, e.g. "3-3,3-4,5-6", or "default".
  static NonadjacencySpec parse(std::string_view text);

  bool forbids(int a, int b) const;
  int lmax() const { return lmax_; }
  void set_lmax(int l);
  const std::set<std::pair<int, int>>& pairs() const { return pairs_; }
  std::string to_string() const;

private:
  std::set<std::pair<int, int>> pairs_;  // normalized first <= second
  int lmax_ = 7;
};

struct ClassVerdict {
  bool member = true;
  // witness for a refusal: two cycles of forbidden lengths sharing an edge
  int len1 = 0, len2 = 0;
  std::pair<VertexId, VertexId> shared_edge{-1, -1};
  std::vector<VertexId> cycle1, cycle2;
};

ClassVerdict check_class(const PlaneGraph& g, const NonadjacencySpec& spec);

// One-line refusal description ("cycles of lengths ... share edge ..."),
// empty for members.
std::string class_witness(const ClassVerdict& v);

// Sides of a cycle. On-cycle vertices are neither interior nor exterior;
// the outer face is always exterior.
struct RegionPartition {
  std::vector<char> on_cycle;       // by vertex
  std::vector<char> interior;      // by vertex
  std::vector<char> exterior;      // by vertex
  std::vector<char> interior_face;  // by face
};

RegionPartition region_partition(const PlaneGraph& g, const Cycle& c);

// True when vertices lie strictly on both sides.
bool is_separating(const PlaneGraph& g, const Cycle& c);

struct CycleContact {
  int count = 0;          // neighbors of v on the cycle
  bool consecutive = false;  // two of them adjacent along the cycle
};

CycleContact neighbors_on_cycle(const PlaneGraph& g, VertexId v, const Cycle& c);

// Vertices from u to v inclusive, following the cycle's stored orientation.
std::vector<VertexId> segment(const Cycle& c, VertexId u, VertexId v);

}  // namespace pg3
