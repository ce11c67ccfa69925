// Proper 3-coloring verification, the exact backtracking solver, and the
// brute-force counting oracle the property tests compare against.
#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "pg3/plane_graph.hpp"

namespace pg3 {

// Vertex colors take values 1..3; 0 marks an uncolored vertex.
struct Coloring {
  std::vector<int> color;

  Coloring() = default;
  explicit Coloring(int n) : color(n, 0) {}

  int size() const { return static_cast<int>(color.size()); }
  int operator[](VertexId v) const { return color[v]; }
  int& operator[](VertexId v) { return color[v]; }
  bool total() const;
  bool operator==(const Coloring&) const = default;
};

// First edge whose endpoints share a color, or nullopt when c is proper.
// c must color every vertex of g; throws UncoloredVertex otherwise.
std::optional<std::pair<VertexId, VertexId>> verify(const PlaneGraph& g,
                                                    const Coloring& c);

// True when no edge of g joins two equal nonzero colors.
bool proper_so_far(const PlaneGraph& g, const Coloring& c);

// Completes partial to a proper 3-coloring, or nullopt when none exists.
// Backtracking with forward checking and most-constrained-vertex ordering
// (fewest remaining colors, lowest id on ties). An improper partial has no
// proper completion and yields nullopt. Deterministic.
std::optional<Coloring> exact_3color(const PlaneGraph& g,
                                     const Coloring& partial = {});

// Exact number of proper 3-colorings completing partial. Plain exhaustive
// branching in vertex-id order, independent of exact_3color's pruning, so
// the two can serve as oracles for each other.
long long count_3colorings(const PlaneGraph& g, const Coloring& partial = {});

// Calls fn with every proper coloring of the subgraph induced on verts
// (vertices outside verts stay 0), in lexicographic color order along
// verts. fn returning false stops the scan. Returns the number of
// colorings fn saw. verts must be distinct.
long long for_each_proper_coloring_of_subset(
    const PlaneGraph& g, const std::vector<VertexId>& verts,
    const std::function<bool(const Coloring&)>& fn);

}  // namespace pg3
