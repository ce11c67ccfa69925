#pragma once

#include <string>
#include <vector>

#include "pg3/coloring.hpp"
#include "pg3/cycles.hpp"
#include "pg3/plane_graph.hpp"

namespace pg3 {

// A boundary coloring task: complete `precoloring`, given on exactly the
// vertices of the outer cycle, to all of `graph`.
struct ExtensionProblem {
  PlaneGraph graph;
  Coloring precoloring;
  NonadjacencySpec spec = NonadjacencySpec::defaults();
};

// Extends the boundary precoloring to a proper 3-coloring of the whole
// graph: reduce until nothing fires, solve the residual exactly, pull the
// answer back through the step stack. The result is verified proper and
// equals the precoloring on the boundary.
//
// Requires a class member whose outer boundary is a cycle of length at most
// 11, and a precoloring that is proper on the subgraph induced by that
// cycle, covers it, and colors nothing else. Throws NotInClass,
// InvalidCycle, OuterTooLarge, UncoloredVertex, or ImproperPrecoloring
// when those preconditions fail, and LemmaFalsified when exact search
// proves no extension exists; LemmaFalsified firing on a valid input is a
// release blocker.
//
// `trace`, when given, collects one line per reduction step plus notes on
// any fallback taken.
Coloring extend(const ExtensionProblem& p,
                std::vector<std::string>* trace = nullptr);

// Properly 3-colors a class member. Finds a shortest cycle; with girth six
// or more (or no cycle at all) falls back to exact search. A facial
// shortest cycle becomes the outer boundary by redrawing, then every proper
// coloring of it is tried through extend until one completes. A separating
// shortest cycle is colored first: both closed sides inherit the cycle
// coloring and extend independently, and the side colorings are merged.
// Throws NotInClass, or ColoringFailed when every branch exhausts;
// ColoringFailed on a member is a release blocker.
Coloring color_planar(const PlaneGraph& g,
                      const NonadjacencySpec& spec = NonadjacencySpec::defaults(),
                      std::vector<std::string>* trace = nullptr);

}  // namespace pg3
