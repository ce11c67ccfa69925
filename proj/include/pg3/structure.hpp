// Detectors for the structural configurations the analysis tracks: bad
// vertices, tetrads, near-tetrad runs, and the fifteen-property checklist.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pg3/cycles.hpp"
#include "pg3/plane_graph.hpp"

namespace pg3 {

// Inner vertices of degree 3 lying on some 3-cycle.
std::vector<VertexId> bad_vertices(const PlaneGraph& g);

// Four bad vertices consecutive on the boundary of a face of degree >= 6,
// with a triangle on the first edge and on the last edge. The triangles
// touch the face boundary only at those edges.
struct TetradMatch {
  FaceId face = -1;
  std::array<VertexId, 4> run{};
  VertexId apex12 = -1;  // triangle on run[0]run[1]
  VertexId apex34 = -1;  // triangle on run[2]run[3]
};

std::vector<TetradMatch> find_tetrads(const PlaneGraph& g);

// Longest cyclic run of bad vertices along an inner face's boundary.
int max_consecutive_bad(const PlaneGraph& g, FaceId f);

// A maximal boundary run v1..vk (k >= 3) of consecutive inner 3-vertices
// with a triangle on v1v2. v0 precedes the run; w2 is v3's neighbor off the
// boundary; d is the v0-w2 distance in the graph minus the run (absent when
// disconnected). The asserted conclusion: d <= 7, k == 3, and w2, v3, v4
// consecutive on the boundary of a face of degree at most 5.
struct SimiTetradMatch {
  FaceId face = -1;
  std::vector<VertexId> run;
  VertexId v0 = -1;
  VertexId w1 = -1;  // triangle apex on v1v2
  VertexId w2 = -1;
  VertexId v4 = -1;  // boundary successor of v3
  std::optional<int> distance;
  bool conclusion_holds = false;
};

std::vector<SimiTetradMatch> find_simitetrads(const PlaneGraph& g);

enum class PropStatus { Holds, Violated, NotApplicable };

struct PropertyResult {
  PropStatus status = PropStatus::Holds;
  std::string witness;  // set when violated; may annotate not-applicable
};

// Statuses for the fifteen minimal-configuration properties, indexed 1..15.
struct ChecklistReport {
  std::array<PropertyResult, 15> props;
  PropertyResult& at(int i) { return props[i - 1]; }
  const PropertyResult& at(int i) const { return props[i - 1]; }
  bool all_hold() const;
};

struct StructureOptions {
  bool facial_only = false;  // restrict P7/P8 to facial cycles
};

ChecklistReport checklist(const PlaneGraph& g, const StructureOptions& opts = {});

std::string to_text(const ChecklistReport& report);

}  // namespace pg3
