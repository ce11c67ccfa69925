#include "pg3/extension.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "pg3/error.hpp"
#include "pg3/reductions.hpp"

namespace pg3 {

namespace {

void note(std::vector<std::string>* trace, std::string line) {
  if (trace) trace->push_back(std::move(line));
}

void require_member(const PlaneGraph& g, const NonadjacencySpec& spec) {
  auto verdict = check_class(g, spec);
  if (!verdict.member) throw Error(Errc::NotInClass, class_witness(verdict));
}

// Validates the problem shape and returns the outer cycle: class member,
// outer boundary a cycle of length <= 11, precoloring covering exactly that
// cycle and proper on the subgraph it induces.
Cycle checked_boundary(const ExtensionProblem& p) {
  require_member(p.graph, p.spec);
  if (!p.graph.outer_is_cycle())
    throw Error(Errc::InvalidCycle, "outer boundary is not a cycle");
  Cycle c0 = make_cycle(p.graph, p.graph.outer_boundary());
  if (c0.length() > 11) {
    std::ostringstream os;
    os << "outer cycle has length " << c0.length() << ", limit 11";
    throw Error(Errc::OuterTooLarge, os.str());
  }

  const int n = p.graph.vertex_count();
  const Coloring& pre = p.precoloring;
  if (pre.size() != n) {
    std::ostringstream os;
    os << "precoloring sized " << pre.size() << " for " << n << " vertices";
    throw Error(Errc::ImproperPrecoloring, os.str());
  }
  for (VertexId v = 0; v < n; ++v) {
    if (pre[v] < 0 || pre[v] > 3) {
      std::ostringstream os;
      os << "vertex " << v + 1 << " color " << pre[v] << " not in 0..3";
      throw Error(Errc::ImproperPrecoloring, os.str());
    }
    if (c0.contains(v)) {
      if (pre[v] == 0) {
        std::ostringstream os;
        os << "boundary vertex " << v + 1 << " is uncolored";
        throw Error(Errc::UncoloredVertex, os.str());
      }
    } else if (pre[v] != 0) {
      std::ostringstream os;
      os << "vertex " << v + 1 << " lies off the boundary yet is colored";
      throw Error(Errc::ImproperPrecoloring, os.str());
    }
  }
  for (VertexId u : c0.verts)
    for (VertexId v : p.graph.neighbors(u)) {
      if (u < v && c0.contains(v) && pre[u] == pre[v]) {
        std::ostringstream os;
        os << "edge " << u + 1 << "-" << v + 1
           << " is monochrome in the precoloring";
        throw Error(Errc::ImproperPrecoloring, os.str());
      }
    }
  return c0;
}

// Face walked by exactly the cycle, or -1. c must be chordless, so a face
// on precisely these vertices can only walk the cycle itself.
FaceId face_bounded_by(const PlaneGraph& g, const Cycle& c) {
  std::vector<VertexId> want = c.verts;
  std::sort(want.begin(), want.end());
  for (FaceId f = 0; f < g.face_count(); ++f) {
    if (g.face_degree(f) != c.length()) continue;
    auto fv = g.face_vertices(f);
    std::sort(fv.begin(), fv.end());
    if (fv == want) return f;
  }
  return -1;
}

// One closed side of a separating cycle, redrawn so the face left by the
// removed side is the outer boundary.
struct Side {
  PlaneGraph graph;
  std::vector<int> vertex_map;      // original vertex -> side vertex, -1 cut
  std::vector<VertexId> cycle;      // cycle image, in original walk order
};

Side make_side(const PlaneGraph& g, const Cycle& c,
               const std::vector<VertexId>& doomed) {
  Surgery cut = g.delete_vertices(doomed);
  std::vector<VertexId> image;
  image.reserve(c.verts.size());
  for (VertexId v : c.verts) image.push_back(cut.vertex_map[v]);
  FaceId f = face_bounded_by(cut.graph, make_cycle(cut.graph, image));
  if (f < 0)
    throw Error(Errc::ColoringFailed,
                "separating cycle bounds no face after the cut");
  return {cut.graph.with_outer_face(f), std::move(cut.vertex_map),
          std::move(image)};
}

}  // namespace

Coloring extend(const ExtensionProblem& p, std::vector<std::string>* trace) {
  Cycle c0 = checked_boundary(p);

  std::vector<ReductionStep> steps;
  PlaneGraph cur = p.graph;
  Coloring col = p.precoloring;
  while (auto step = find_reduction(cur, col, p.spec)) {
    note(trace, to_line(*step));
    cur = apply(*step, cur);
    col = push_forward(*step, col);
    steps.push_back(std::move(*step));
  }

  Coloring full;
  if (auto residual = exact_3color(cur, col)) {
    full = *residual;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it)
      full = pull_back(*it, full);
  } else if (auto direct = exact_3color(p.graph, p.precoloring)) {
    // A reduction may discard completions; only the unreduced problem can
    // prove there are none at all.
    note(trace, "residual unsatisfiable; exact search on the original recovered");
    full = *direct;
  } else {
    throw Error(Errc::LemmaFalsified,
                "proper boundary precoloring admits no extension");
  }

  if (auto bad = verify(p.graph, full)) {
    std::ostringstream os;
    os << "edge " << bad->first + 1 << "-" << bad->second + 1
       << " monochrome after extension";
    throw Error(Errc::ColoringFailed, os.str());
  }
  for (VertexId v : c0.verts) {
    if (full[v] != p.precoloring[v]) {
      std::ostringstream os;
      os << "extension recolored boundary vertex " << v + 1;
      throw Error(Errc::ColoringFailed, os.str());
    }
  }
  return full;
}

Coloring color_planar(const PlaneGraph& g, const NonadjacencySpec& spec,
                      std::vector<std::string>* trace) {
  require_member(g, spec);

  auto cyc = shortest_cycle(g);
  if (!cyc || cyc->length() >= 6) {
    note(trace, cyc ? "girth at least six; exact search"
                    : "acyclic; exact search");
    auto col = exact_3color(g);
    if (!col)
      throw Error(Errc::ColoringFailed, "exact search found no 3-coloring");
    return *col;
  }

  if (is_separating(g, *cyc)) {
    note(trace, "separating shortest cycle of length " +
                    std::to_string(cyc->length()) + "; coloring both sides");
    RegionPartition part = region_partition(g, *cyc);
    std::vector<VertexId> inside, outside;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (part.interior[v]) inside.push_back(v);
      if (part.exterior[v]) outside.push_back(v);
    }
    Side in_side = make_side(g, *cyc, outside);
    Side out_side = make_side(g, *cyc, inside);

    // Try on one side with the cycle coloring pinned; LemmaFalsified there
    // just rules out that cycle coloring.
    auto try_side = [&](const Side& s,
                        const Coloring& pre) -> std::optional<Coloring> {
      Coloring sp(s.graph.vertex_count());
      for (int i = 0; i < cyc->length(); ++i)
        sp[s.cycle[i]] = pre[cyc->verts[i]];
      try {
        return extend({s.graph, sp, spec}, trace);
      } catch (const Error& e) {
        if (e.code() == Errc::LemmaFalsified) return std::nullopt;
        throw;
      }
    };

    Coloring full(g.vertex_count());
    bool done = false;
    for_each_proper_coloring_of_subset(g, cyc->verts, [&](const Coloring& pre) {
      auto ci = try_side(in_side, pre);
      if (!ci) return true;
      auto co = try_side(out_side, pre);
      if (!co) return true;
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        full[v] = in_side.vertex_map[v] >= 0 ? (*ci)[in_side.vertex_map[v]]
                                             : (*co)[out_side.vertex_map[v]];
      }
      done = true;
      return false;
    });
    if (!done)
      throw Error(Errc::ColoringFailed,
                  "no cycle coloring extends to both sides");
    if (auto bad = verify(g, full)) {
      std::ostringstream os;
      os << "edge " << bad->first + 1 << "-" << bad->second + 1
         << " monochrome after merging the sides";
      throw Error(Errc::ColoringFailed, os.str());
    }
    return full;
  }

  FaceId f = face_bounded_by(g, *cyc);
  if (f < 0)
    throw Error(Errc::ColoringFailed,
                "shortest cycle neither separates nor bounds a face");
  note(trace, "facial shortest cycle of length " +
                  std::to_string(cyc->length()) +
                  "; redrawing it as the outer boundary");
  PlaneGraph h = g.with_outer_face(f);

  Coloring full;
  bool done = false;
  for_each_proper_coloring_of_subset(h, cyc->verts, [&](const Coloring& pre) {
    try {
      full = extend({h, pre, spec}, trace);
      done = true;
      return false;
    } catch (const Error& e) {
      if (e.code() == Errc::LemmaFalsified) return true;
      throw;
    }
  });
  if (!done)
    throw Error(Errc::ColoringFailed,
                "no boundary coloring of the facial cycle extends");
  if (auto bad = verify(g, full)) {
    std::ostringstream os;
    os << "edge " << bad->first + 1 << "-" << bad->second + 1
       << " monochrome after the facial extension";
    throw Error(Errc::ColoringFailed, os.str());
  }
  return full;
}

}  // namespace pg3
