#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pg3/coloring.hpp"
#include "pg3/cycles.hpp"
#include "pg3/plane_graph.hpp"

namespace pg3 {

enum class ReductionKind {
  ChordDelete,       // delete a chord of the outer cycle
  FourFaceIdentify,  // identify opposite corners of an inner 4-face
  SixFaceIdentify,   // fold an inner 6-face onto a path, two identifications
  FiveFaceEdgeAdd,   // drop a degree-2 boundary corner, join its neighbors
  FiveFaceIdentify,  // identify two corners of a 5-face that sit one apart
};

const char* to_cstring(ReductionKind k);

// One verified surgery. `after` already carries the relocated outer face and
// passed every post-check; vertex_map is before -> after, -1 for deleted.
struct ReductionStep {
  ReductionKind kind{};
  PlaneGraph before;
  PlaneGraph after;
  std::vector<VertexId> vertex_map;

  FaceId face = -1;            // matched inner face, -1 for ChordDelete
  std::vector<VertexId> role;  // ChordDelete {x,y}; FourFaceIdentify {v1,v3};
                               // SixFaceIdentify {v1,v2,v4,v5};
                               // FiveFace* {v1,v2,v3}

  // Vertices removed outright, with what pull_back needs to recolor them.
  std::vector<VertexId> deleted;
  std::vector<std::vector<VertexId>> deleted_neighbors;
  std::vector<int> deleted_precolor;  // 0 = was uncolored

  std::vector<std::string> guards;  // checks that passed, in order
};

// "kind params |V| a->b |E| c->d", vertices 1-based, faces 0-based.
std::string to_line(const ReductionStep& step);

// First applicable reduction: chords of the outer cycle, then inner 4-faces,
// 6-faces, 5-faces; faces in id order, corners in walk order. A candidate is
// kept only when the result is simple, still in class, keeps the mapped
// boundary as its outer cycle, and leaves that cycle chordless. The 5-face
// cases read `precoloring`: both corner colors set and different picks the
// edge-add, equal picks the corner identification, otherwise the uncolored
// identification is tried. Throws NotInClass when g itself is not a member;
// nullopt when the boundary is not a cycle or nothing fires.
std::optional<ReductionStep> find_reduction(const PlaneGraph& g,
                                            const Coloring& precoloring,
                                            const NonadjacencySpec& spec);

// Replays a found step. Throws GuardFailed unless g equals step.before.
PlaneGraph apply(const ReductionStep& step, const PlaneGraph& g);

// Maps a coloring of `before` onto `after`; colors of deleted vertices are
// dropped. Throws ImproperPrecoloring when merged vertices disagree.
Coloring push_forward(const ReductionStep& step, const Coloring& c);

// Lifts a proper total coloring of `after` back onto `before`, giving each
// deleted vertex its recorded precolor when still legal, else the smallest
// legal color. Throws PullBackImproper when the lift is not proper; that
// signals a guard bug, not bad input.
Coloring pull_back(const ReductionStep& step, const Coloring& star);

}  // namespace pg3
