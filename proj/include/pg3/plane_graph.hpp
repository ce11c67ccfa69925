// Combinatorial plane graphs: rotation systems, dart-based face tracing,
// embedding-preserving surgeries, and the pgr text format.
//
// pgr v1 format:
//   # comment lines and blank lines are ignored
//   pgr <n> <m>
//   <i>: <j1> <j2> ... <jk>      one line per vertex i in 1..n, neighbors in
//                                clockwise order; parallel edges repeat the
//                                neighbor, loops are rejected
//   outer: <u> <v> [k]           the face containing the k-th (default first)
//                                dart u->v is the outer face
//
// Parallel copies pair up in reversed occurrence order (the k-th u->v dart
// twins the (c+1-k)-th v->u dart), the nesting that keeps parallel bundles
// planar; anything of higher genus fails Euler validation.
#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pg3/error.hpp"

namespace pg3 {

using VertexId = int;  // 0-based everywhere in memory, 1-based in files/reports
using DartId = int;
using FaceId = int;

struct GraphDoc {
  int n = 0;
  int m = 0;
  std::vector<std::vector<int>> rot;  // rot[i] lists 1-based neighbors of i+1, clockwise
  int outer_u = 1, outer_v = 1, outer_k = 1;  // 1-based marker; ignored when n == 1
};

GraphDoc parse_pgr(std::string_view text);
std::string serialize_pgr(const GraphDoc& doc);

struct Dart {
  VertexId tail = -1;
  VertexId head = -1;
  DartId twin = -1;
  DartId next = -1;  // next dart at the same tail, clockwise
};

class PlaneGraph;

// Every surgery returns a fresh graph plus where the old vertices went;
// vertex_map[v] == -1 means v was deleted.
struct Surgery;

class PlaneGraph {
public:
  // Validates: no loops, symmetric adjacency, connectivity, Euler n-m+f == 2,
  // resolvable outer marker. The face successor of dart d is next(twin(d)).
  static PlaneGraph build(const GraphDoc& doc);
  static PlaneGraph from_pgr(std::string_view text) { return build(parse_pgr(text)); }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(darts_.size()) / 2; }
  int dart_count() const { return static_cast<int>(darts_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }

  const Dart& dart(DartId d) const { return darts_[d]; }
  std::span<const DartId> out_darts(VertexId v) const { return rot_[v]; }
  int degree(VertexId v) const { return static_cast<int>(rot_[v].size()); }

  FaceId face_of(DartId d) const { return face_of_[d]; }
  std::span<const DartId> face_walk(FaceId f) const { return faces_[f]; }
  int face_degree(FaceId f) const { return static_cast<int>(faces_[f].size()); }
  FaceId outer_face() const { return outer_; }
  bool is_inner_face(FaceId f) const { return f != outer_; }

  // Boundary vertices of a face in walk order (tails of the walk darts).
  std::vector<VertexId> face_vertices(FaceId f) const;
  bool on_outer(VertexId v) const { return on_outer_[v]; }
  // Vertices of the outer face boundary walk, deduplicated, in first-visit order.
  std::vector<VertexId> outer_boundary() const;
  // True when the outer boundary walk is a simple cycle (each vertex once).
  bool outer_is_cycle() const;

  bool adjacent(VertexId u, VertexId v) const;
  int multiplicity(VertexId u, VertexId v) const;
  bool is_simple() const { return parallel_pair_ == std::nullopt; }
  std::optional<std::pair<VertexId, VertexId>> parallel_pair() const { return parallel_pair_; }
  std::span<const VertexId> neighbors(VertexId v) const { return nbr_sets_[v]; }  // sorted, deduped

  // First dart u->v, or -1.
  DartId dart_between(VertexId u, VertexId v) const;

  // Surgeries. Graphs are immutable; these build fresh ones.
  Surgery identify_vertices(VertexId u, VertexId v, FaceId bridge_face) const;
  Surgery delete_vertices(const std::vector<VertexId>& doomed) const;
  Surgery add_edge_in_face(VertexId u, VertexId v, FaceId f) const;
  Surgery delete_edge(VertexId u, VertexId v) const;
  PlaneGraph with_outer_face(FaceId f) const;  // redraw: same map, new outer face

  // Growth operations for graph generation. A corner is a position in the
  // face walk; the vertex acted on is the tail of the walk dart there. The
  // vertex a growth op adds is the highest id of the result graph.
  Surgery grow_leaf(FaceId f, int corner) const;
  Surgery grow_chord(FaceId f, int corner_a, int corner_b) const;
  Surgery grow_subdivide(VertexId u, VertexId v) const;

  GraphDoc to_doc() const;
  std::string to_pgr() const { return serialize_pgr(to_doc()); }
  std::string to_dot() const;

private:
  friend class EmbeddingBuilder;
  friend struct Surgery;
  friend struct ReductionStep;
  PlaneGraph() = default;
  void derive(DartId outer_anchor);

  int n_ = 0;
  std::vector<Dart> darts_;
  std::vector<std::vector<DartId>> rot_;
  std::vector<std::vector<DartId>> faces_;
  std::vector<FaceId> face_of_;
  FaceId outer_ = 0;
  std::vector<char> on_outer_;
  std::vector<std::vector<VertexId>> nbr_sets_;
  std::optional<std::pair<VertexId, VertexId>> parallel_pair_;
};

struct Surgery {
  PlaneGraph graph;
  std::vector<int> vertex_map;  // old vertex -> new vertex, -1 deleted
};

}  // namespace pg3
