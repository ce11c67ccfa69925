#include "pg3/reductions.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

#include "pg3/error.hpp"

namespace pg3 {

const char* to_cstring(ReductionKind k) {
  switch (k) {
    case ReductionKind::ChordDelete: return "chord-delete";
    case ReductionKind::FourFaceIdentify: return "4-face-identify";
    case ReductionKind::SixFaceIdentify: return "6-face-identify";
    case ReductionKind::FiveFaceEdgeAdd: return "5-face-edge-add";
    case ReductionKind::FiveFaceIdentify: return "5-face-identify";
  }
  return "?";
}

namespace {

std::vector<VertexId> compose(const std::vector<VertexId>& a,
                              const std::vector<VertexId>& b) {
  std::vector<VertexId> out(a.size(), -1);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] >= 0) out[i] = b[a[i]];
  return out;
}

// Image of the outer cycle: deleted vertices drop out, a merged pair that
// lands adjacent on the walk keeps one copy.
std::vector<VertexId> mapped_boundary(const Cycle& c0,
                                      const std::vector<VertexId>& vmap) {
  std::vector<VertexId> out;
  out.reserve(c0.verts.size());
  for (VertexId v : c0.verts) {
    VertexId w = vmap[v];
    if (w < 0) continue;
    if (!out.empty() && out.back() == w) continue;
    out.push_back(w);
  }
  while (out.size() > 1 && out.front() == out.back()) out.pop_back();
  return out;
}

// Re-checks on the surgered graph what the lemma promises: simple, the
// mapped boundary bounds a face, membership holds, that boundary is
// chordless. Returns the graph redrawn with the matched face outer.
std::optional<PlaneGraph> verify_candidate(const PlaneGraph& cand,
                                           const std::vector<VertexId>& expected,
                                           const NonadjacencySpec& spec,
                                           std::vector<std::string>& guards) {
  if (!cand.is_simple() || expected.size() < 3) return std::nullopt;
  std::optional<Cycle> want;
  try {
    want = make_cycle(cand, expected);
  } catch (const Error&) {
    return std::nullopt;
  }
  auto want_key = want->canonical_key();
  std::vector<VertexId> sorted_want = expected;
  std::sort(sorted_want.begin(), sorted_want.end());
  for (FaceId f = 0; f < cand.face_count(); ++f) {
    if (cand.face_degree(f) != static_cast<int>(expected.size())) continue;
    auto fv = cand.face_vertices(f);
    std::sort(fv.begin(), fv.end());
    if (fv != sorted_want) continue;
    PlaneGraph redrawn = cand.with_outer_face(f);
    if (!redrawn.outer_is_cycle()) continue;
    Cycle c0 = make_cycle(redrawn, redrawn.outer_boundary());
    if (c0.canonical_key() != want_key) continue;
    if (!check_class(redrawn, spec).member) return std::nullopt;
    if (!chords(redrawn, c0).empty()) return std::nullopt;
    guards.push_back("boundary cycle preserved");
    guards.push_back("result in class");
    guards.push_back("result boundary chordless");
    return redrawn;
  }
  return std::nullopt;
}

ReductionStep assemble(ReductionKind kind, const PlaneGraph& g, PlaneGraph after,
                       std::vector<VertexId> vmap, FaceId face,
                       std::vector<VertexId> role, std::vector<std::string> guards) {
  ReductionStep step;
  step.kind = kind;
  step.before = g;
  step.after = std::move(after);
  step.vertex_map = std::move(vmap);
  step.face = face;
  step.role = std::move(role);
  step.guards = std::move(guards);
  return step;
}

std::optional<ReductionStep> try_chord(const PlaneGraph& g, const Cycle& c0,
                                       const NonadjacencySpec& spec) {
  for (auto [x, y] : chords(g, c0)) {
    std::vector<std::string> guards{"endpoints on the boundary, nonconsecutive"};
    std::optional<Surgery> op;
    try {
      op = g.delete_edge(x, y);
    } catch (const Error&) {
      continue;
    }
    auto fin = verify_candidate(op->graph, mapped_boundary(c0, op->vertex_map),
                                spec, guards);
    if (!fin) continue;
    return assemble(ReductionKind::ChordDelete, g, std::move(*fin),
                    op->vertex_map, -1, {x, y}, std::move(guards));
  }
  return std::nullopt;
}

std::optional<ReductionStep> try_four_face(const PlaneGraph& g, const Cycle& c0,
                                           FaceId f, const NonadjacencySpec& spec) {
  auto fv = g.face_vertices(f);
  for (int s = 0; s < 2; ++s) {
    VertexId a = fv[s], b = fv[s + 2];
    if (g.adjacent(a, b)) continue;
    if (g.on_outer(a) && g.on_outer(b)) continue;
    std::vector<std::string> guards{"diagonal nonadjacent",
                                    "diagonal not across the boundary"};
    std::optional<Surgery> op;
    try {
      op = g.identify_vertices(a, b, f);
    } catch (const Error&) {
      continue;
    }
    auto fin = verify_candidate(op->graph, mapped_boundary(c0, op->vertex_map),
                                spec, guards);
    if (!fin) continue;
    return assemble(ReductionKind::FourFaceIdentify, g, std::move(*fin),
                    op->vertex_map, f, {a, b}, std::move(guards));
  }
  return std::nullopt;
}

std::optional<ReductionStep> try_six_face(const PlaneGraph& g, const Cycle& c0,
                                          FaceId f, const NonadjacencySpec& spec) {
  auto fv = g.face_vertices(f);
  for (int s = 0; s < 6; ++s) {
    VertexId v1 = fv[s], v2 = fv[(s + 1) % 6], v3 = fv[(s + 2) % 6],
             v4 = fv[(s + 3) % 6], v5 = fv[(s + 4) % 6];
    if (g.on_outer(v1) || g.on_outer(v2)) continue;
    if (g.adjacent(v1, v5) || g.adjacent(v2, v4)) continue;
    std::vector<std::string> guards{"v1 v2 off the boundary",
                                    "v1 v5 and v2 v4 nonadjacent"};
    std::optional<Surgery> first;
    try {
      first = g.identify_vertices(v1, v5, f);
    } catch (const Error&) {
      continue;
    }
    const auto& m = first->vertex_map;
    // the fold leaves a quadrilateral m(v1) m(v2) m(v3) m(v4)
    std::vector<VertexId> key{m[v1], m[v2], m[v3], m[v4]};
    std::sort(key.begin(), key.end());
    FaceId folded = -1;
    for (FaceId q = 0; q < first->graph.face_count(); ++q) {
      if (q == first->graph.outer_face() || first->graph.face_degree(q) != 4)
        continue;
      auto qv = first->graph.face_vertices(q);
      std::sort(qv.begin(), qv.end());
      if (qv == key) {
        folded = q;
        break;
      }
    }
    if (folded < 0) continue;
    if (first->graph.adjacent(m[v2], m[v4])) continue;
    std::optional<Surgery> second;
    try {
      second = first->graph.identify_vertices(m[v2], m[v4], folded);
    } catch (const Error&) {
      continue;
    }
    auto vmap = compose(first->vertex_map, second->vertex_map);
    auto fin = verify_candidate(second->graph, mapped_boundary(c0, vmap), spec,
                                guards);
    if (!fin) continue;
    return assemble(ReductionKind::SixFaceIdentify, g, std::move(*fin),
                    std::move(vmap), f, {v1, v2, v4, v5}, std::move(guards));
  }
  return std::nullopt;
}

// Rotations placing v1, v2, v3 consecutively on the boundary with v2 of
// degree two and both corner colors set; want_equal selects between joining
// v1 v3 by an edge (colors differ) and identifying them (colors equal).
std::optional<ReductionStep> try_five_boundary(const PlaneGraph& g, const Cycle& c0,
                                               const Coloring& pre, FaceId f,
                                               bool want_equal,
                                               const NonadjacencySpec& spec) {
  auto fv = g.face_vertices(f);
  for (int s = 0; s < 5; ++s) {
    VertexId v1 = fv[s], v2 = fv[(s + 1) % 5], v3 = fv[(s + 2) % 5];
    if (!g.on_outer(v1) || !g.on_outer(v2) || !g.on_outer(v3)) continue;
    if (!c0.has_edge(v1, v2) || !c0.has_edge(v2, v3)) continue;
    if (g.degree(v2) != 2) continue;
    if (g.adjacent(v1, v3)) continue;
    int c1 = pre[v1], c3 = pre[v3];
    if (c1 == 0 || c3 == 0) continue;
    if ((c1 == c3) != want_equal) continue;
    std::optional<Surgery> del;
    try {
      del = g.delete_vertices({v2});
    } catch (const Error&) {
      continue;
    }
    VertexId a = del->vertex_map[v1], b = del->vertex_map[v3];
    for (FaceId mf = 0; mf < del->graph.face_count(); ++mf) {
      auto mfv = del->graph.face_vertices(mf);
      if (std::find(mfv.begin(), mfv.end(), a) == mfv.end()) continue;
      if (std::find(mfv.begin(), mfv.end(), b) == mfv.end()) continue;
      std::vector<std::string> guards{
          "v1 v2 v3 consecutive on the boundary, v2 of degree two",
          "v1 v3 nonadjacent",
          want_equal ? "corner colors equal" : "corner colors differ"};
      std::optional<Surgery> op;
      try {
        op = want_equal ? del->graph.identify_vertices(a, b, mf)
                        : del->graph.add_edge_in_face(a, b, mf);
      } catch (const Error&) {
        continue;
      }
      auto vmap = compose(del->vertex_map, op->vertex_map);
      auto fin = verify_candidate(op->graph, mapped_boundary(c0, vmap), spec,
                                  guards);
      if (!fin) continue;
      auto step = assemble(want_equal ? ReductionKind::FiveFaceIdentify
                                      : ReductionKind::FiveFaceEdgeAdd,
                           g, std::move(*fin), std::move(vmap), f, {v1, v2, v3},
                           std::move(guards));
      step.deleted = {v2};
      auto nb = g.neighbors(v2);
      step.deleted_neighbors = {std::vector<VertexId>(nb.begin(), nb.end())};
      step.deleted_precolor = {pre[v2]};
      return step;
    }
  }
  return std::nullopt;
}

// Rotations whose first corner sits off the boundary: identify it with the
// corner two further along the face.
std::optional<ReductionStep> try_five_inner(const PlaneGraph& g, const Cycle& c0,
                                            const Coloring& pre, FaceId f,
                                            const NonadjacencySpec& spec) {
  auto fv = g.face_vertices(f);
  for (int s = 0; s < 5; ++s) {
    VertexId v1 = fv[s], v2 = fv[(s + 1) % 5], v3 = fv[(s + 2) % 5];
    if (g.on_outer(v1) && g.on_outer(v3)) continue;
    if (g.on_outer(v1)) std::swap(v1, v3);
    if (pre[v1] != 0 && pre[v3] != 0 && pre[v1] != pre[v3]) continue;
    if (g.adjacent(v1, v3)) continue;
    std::vector<std::string> guards{"v1 off the boundary", "v1 v3 nonadjacent",
                                    "corner colors compatible"};
    std::optional<Surgery> op;
    try {
      op = g.identify_vertices(v1, v3, f);
    } catch (const Error&) {
      continue;
    }
    auto fin = verify_candidate(op->graph, mapped_boundary(c0, op->vertex_map),
                                spec, guards);
    if (!fin) continue;
    return assemble(ReductionKind::FiveFaceIdentify, g, std::move(*fin),
                    op->vertex_map, f, {v1, v2, v3}, std::move(guards));
  }
  return std::nullopt;
}

std::vector<FaceId> inner_faces_of_degree(const PlaneGraph& g, int deg) {
  std::vector<FaceId> out;
  for (FaceId f = 0; f < g.face_count(); ++f)
    if (f != g.outer_face() && g.face_degree(f) == deg) out.push_back(f);
  return out;
}

}  // namespace

std::optional<ReductionStep> find_reduction(const PlaneGraph& g,
                                            const Coloring& precoloring,
                                            const NonadjacencySpec& spec) {
  auto verdict = check_class(g, spec);
  if (!verdict.member) throw Error(Errc::NotInClass, class_witness(verdict));
  if (!g.outer_is_cycle()) return std::nullopt;
  Cycle c0 = make_cycle(g, g.outer_boundary());

  Coloring pre = precoloring;
  pre.color.resize(g.vertex_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (pre[v] < 0 || pre[v] > 3) {
      std::ostringstream os;
      os << "vertex " << v + 1 << " color " << pre[v] << " not in 0..3";
      throw Error(Errc::ImproperPrecoloring, os.str());
    }
  }

  if (auto step = try_chord(g, c0, spec)) return step;
  for (FaceId f : inner_faces_of_degree(g, 4))
    if (auto step = try_four_face(g, c0, f, spec)) return step;
  for (FaceId f : inner_faces_of_degree(g, 6))
    if (auto step = try_six_face(g, c0, f, spec)) return step;
  auto fives = inner_faces_of_degree(g, 5);
  for (FaceId f : fives)
    if (auto step = try_five_boundary(g, c0, pre, f, false, spec)) return step;
  for (FaceId f : fives) {
    if (auto step = try_five_boundary(g, c0, pre, f, true, spec)) return step;
    if (auto step = try_five_inner(g, c0, pre, f, spec)) return step;
  }
  return std::nullopt;
}

PlaneGraph apply(const ReductionStep& step, const PlaneGraph& g) {
  if (g.to_pgr() != step.before.to_pgr())
    throw Error(Errc::GuardFailed, "graph changed since matching");
  return step.after;
}

Coloring push_forward(const ReductionStep& step, const Coloring& c) {
  Coloring in = c;
  in.color.resize(step.before.vertex_count(), 0);
  Coloring out(step.after.vertex_count());
  for (VertexId v = 0; v < step.before.vertex_count(); ++v) {
    VertexId w = step.vertex_map[v];
    if (w < 0 || in[v] == 0) continue;
    if (out[w] != 0 && out[w] != in[v]) {
      std::ostringstream os;
      os << "vertex " << w + 1 << " inherits colors " << out[w] << " and "
         << in[v];
      throw Error(Errc::ImproperPrecoloring, os.str());
    }
    out[w] = in[v];
  }
  return out;
}

Coloring pull_back(const ReductionStep& step, const Coloring& star) {
  Coloring in = star;
  in.color.resize(step.after.vertex_count(), 0);
  Coloring c(step.before.vertex_count());
  for (VertexId v = 0; v < step.before.vertex_count(); ++v)
    if (step.vertex_map[v] >= 0) c[v] = in[step.vertex_map[v]];
  for (size_t i = 0; i < step.deleted.size(); ++i) {
    bool used[4] = {false, false, false, false};
    for (VertexId u : step.deleted_neighbors[i]) {
      int cu = c[u];
      if (cu >= 1 && cu <= 3) used[cu] = true;
    }
    int pick = step.deleted_precolor[i];
    if (pick < 1 || pick > 3 || used[pick]) {
      pick = 0;
      for (int k = 1; k <= 3; ++k) {
        if (!used[k]) {
          pick = k;
          break;
        }
      }
    }
    if (pick == 0) {
      std::ostringstream os;
      os << "no legal color for restored vertex " << step.deleted[i] + 1;
      throw Error(Errc::PullBackImproper, os.str());
    }
    c[step.deleted[i]] = pick;
  }
  if (auto bad = verify(step.before, c)) {
    std::ostringstream os;
    os << "edge " << bad->first + 1 << "-" << bad->second + 1
       << " monochrome after pull-back";
    throw Error(Errc::PullBackImproper, os.str());
  }
  return c;
}

std::string to_line(const ReductionStep& step) {
  std::ostringstream os;
  os << to_cstring(step.kind);
  const auto& r = step.role;
  switch (step.kind) {
    case ReductionKind::ChordDelete:
      os << " x=" << r[0] + 1 << " y=" << r[1] + 1;
      break;
    case ReductionKind::FourFaceIdentify:
      os << " f=" << step.face << " v1=" << r[0] + 1 << " v3=" << r[1] + 1;
      break;
    case ReductionKind::SixFaceIdentify:
      os << " f=" << step.face << " v1=" << r[0] + 1 << " v2=" << r[1] + 1
         << " v4=" << r[2] + 1 << " v5=" << r[3] + 1;
      break;
    case ReductionKind::FiveFaceEdgeAdd:
    case ReductionKind::FiveFaceIdentify:
      os << " f=" << step.face << " v1=" << r[0] + 1 << " v2=" << r[1] + 1
         << " v3=" << r[2] + 1;
      break;
  }
  os << " |V| " << step.before.vertex_count() << "->"
     << step.after.vertex_count() << " |E| " << step.before.edge_count() << "->"
     << step.after.edge_count();
  return os.str();
}

}  // namespace pg3
