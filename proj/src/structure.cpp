#include "pg3/structure.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace pg3 {
namespace {

// Witness text speaks the file format's 1-based language.
std::string vname(VertexId v) { return std::to_string(v + 1); }

std::string vlist(const std::vector<VertexId>& vs) {
  std::string s = "(";
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ' ';
    s += vname(vs[i]);
  }
  return s + ")";
}

bool on_triangle(const PlaneGraph& g, VertexId v) {
  auto nbrs = g.neighbors(v);
  for (size_t i = 0; i < nbrs.size(); ++i)
    for (size_t j = i + 1; j < nbrs.size(); ++j)
      if (g.adjacent(nbrs[i], nbrs[j])) return true;
  return false;
}

std::vector<char> bad_mask(const PlaneGraph& g) {
  std::vector<char> bad(g.vertex_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    bad[v] = !g.on_outer(v) && g.degree(v) == 3 && on_triangle(g, v);
  return bad;
}

// Maximal cyclic runs of marked positions; empty when every position is
// marked (no run boundary exists).
std::vector<std::vector<int>> cyclic_runs(const std::vector<char>& mark) {
  int len = static_cast<int>(mark.size());
  std::vector<std::vector<int>> runs;
  if (std::find(mark.begin(), mark.end(), 0) == mark.end()) return runs;
  for (int s = 0; s < len; ++s) {
    if (!mark[s] || mark[(s + len - 1) % len]) continue;
    std::vector<int> run;
    for (int i = s; mark[i % len]; ++i) run.push_back(i % len);
    runs.push_back(std::move(run));
  }
  return runs;
}

// Smallest common neighbor w of (a, b) whose edges wa, wb avoid the given
// boundary edge set.
VertexId triangle_apex(const PlaneGraph& g, VertexId a, VertexId b,
                       const std::set<std::pair<VertexId, VertexId>>& boundary) {
  auto edge = [](VertexId u, VertexId v) { return std::minmax(u, v); };
  for (VertexId w : g.neighbors(a)) {
    if (w == b || !g.adjacent(w, b)) continue;
    if (boundary.count(edge(w, a)) || boundary.count(edge(w, b))) continue;
    return w;
  }
  return -1;
}

std::set<std::pair<VertexId, VertexId>> boundary_edges(const PlaneGraph& g, FaceId f) {
  std::set<std::pair<VertexId, VertexId>> edges;
  for (DartId d : g.face_walk(f))
    edges.insert(std::minmax(g.dart(d).tail, g.dart(d).head));
  return edges;
}

std::optional<int> bfs_distance(const PlaneGraph& g, VertexId from, VertexId to,
                                const std::vector<char>& removed) {
  if (removed[from] || removed[to]) return std::nullopt;
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<VertexId> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    if (u == to) return dist[u];
    for (VertexId w : g.neighbors(u)) {
      if (removed[w] || dist[w] >= 0) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

// True when the triple (a, b, c) appears consecutively, in either direction,
// on the boundary walk of some face of degree at most 5.
bool on_small_face(const PlaneGraph& g, VertexId a, VertexId b, VertexId c) {
  for (FaceId f = 0; f < g.face_count(); ++f) {
    if (g.face_degree(f) > 5) continue;
    std::vector<VertexId> w = g.face_vertices(f);
    int len = static_cast<int>(w.size());
    if (len < 3) continue;
    for (int i = 0; i < len; ++i) {
      VertexId p = w[i], q = w[(i + 1) % len], r = w[(i + 2) % len];
      if (q != b) continue;
      if ((p == a && r == c) || (p == c && r == a)) return true;
    }
  }
  return false;
}

}  // namespace

std::vector<VertexId> bad_vertices(const PlaneGraph& g) {
  std::vector<VertexId> out;
  std::vector<char> bad = bad_mask(g);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (bad[v]) out.push_back(v);
  return out;
}

std::vector<TetradMatch> find_tetrads(const PlaneGraph& g) {
  std::vector<TetradMatch> out;
  std::vector<char> bad = bad_mask(g);
  for (FaceId f = 0; f < g.face_count(); ++f) {
    if (g.face_degree(f) < 6) continue;
    std::vector<VertexId> w = g.face_vertices(f);
    int len = static_cast<int>(w.size());
    auto edges = boundary_edges(g, f);
    for (int i = 0; i < len; ++i) {
      std::array<VertexId, 4> run{w[i], w[(i + 1) % len], w[(i + 2) % len],
                                  w[(i + 3) % len]};
      bool ok = true;
      for (int a = 0; a < 4 && ok; ++a) {
        ok = bad[run[a]];
        for (int b = a + 1; b < 4 && ok; ++b) ok = run[a] != run[b];
      }
      if (!ok) continue;
      VertexId apex12 = triangle_apex(g, run[0], run[1], edges);
      if (apex12 < 0) continue;
      VertexId apex34 = triangle_apex(g, run[2], run[3], edges);
      if (apex34 < 0) continue;
      out.push_back({f, run, apex12, apex34});
    }
  }
  return out;
}

int max_consecutive_bad(const PlaneGraph& g, FaceId f) {
  if (f == g.outer_face()) throw Error(Errc::OuterFace, "outer face has no bad vertices");
  std::vector<char> bad = bad_mask(g);
  std::vector<VertexId> w = g.face_vertices(f);
  int len = static_cast<int>(w.size());
  std::vector<char> mark(len);
  for (int i = 0; i < len; ++i) mark[i] = bad[w[i]];
  auto runs = cyclic_runs(mark);
  if (runs.empty())
    return std::find(mark.begin(), mark.end(), 1) == mark.end() ? 0 : len;
  int best = 0;
  for (const auto& r : runs) best = std::max(best, static_cast<int>(r.size()));
  return best;
}

std::vector<SimiTetradMatch> find_simitetrads(const PlaneGraph& g) {
  std::vector<SimiTetradMatch> out;
  std::vector<char> inner3(g.vertex_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    inner3[v] = !g.on_outer(v) && g.degree(v) == 3;

  for (FaceId f = 0; f < g.face_count(); ++f) {
    std::vector<VertexId> w = g.face_vertices(f);
    int len = static_cast<int>(w.size());
    if (len < 4) continue;
    std::vector<char> mark(len);
    for (int i = 0; i < len; ++i) mark[i] = inner3[w[i]];

    for (const auto& run : cyclic_runs(mark)) {
      int k = static_cast<int>(run.size());
      if (k < 3) continue;
      // Forward orientation starts at the run's first position, reverse at
      // its last; the pattern anchors a triangle on the leading edge.
      for (int dir : {+1, -1}) {
        int start = dir > 0 ? run.front() : run.back();
        auto at = [&](int step) { return w[((start + dir * step) % len + len) % len]; };
        VertexId v0 = at(-1), v1 = at(0), v2 = at(1), v3 = at(2), v4 = at(3);
        std::vector<VertexId> rv;
        for (int i = 0; i < k; ++i) rv.push_back(at(i));
        bool distinct = std::set<VertexId>(rv.begin(), rv.end()).size() == rv.size();
        if (!distinct || std::count(rv.begin(), rv.end(), v0)) continue;

        VertexId apex = triangle_apex(g, v1, v2, {});
        if (apex < 0) continue;
        SimiTetradMatch m;
        m.face = f;
        m.run = rv;
        m.v0 = v0;
        m.w1 = apex;
        m.v4 = v4;
        for (VertexId u : g.neighbors(v3))
          if (u != v2 && u != v4) m.w2 = u;
        if (m.w2 < 0 || std::count(rv.begin(), rv.end(), m.w2)) continue;

        std::vector<char> removed(g.vertex_count(), 0);
        for (VertexId u : rv) removed[u] = 1;
        m.distance = bfs_distance(g, v0, m.w2, removed);
        m.conclusion_holds = k == 3 && m.distance && *m.distance <= 7 &&
                             on_small_face(g, m.w2, v3, v4);
        out.push_back(std::move(m));
      }
    }
  }
  return out;
}

bool ChecklistReport::all_hold() const {
  return std::none_of(props.begin(), props.end(), [](const PropertyResult& p) {
    return p.status == PropStatus::Violated;
  });
}

namespace {

void check_two_connected(const PlaneGraph& g, PropertyResult& out) {
  int n = g.vertex_count();
  if (n < 3) {
    out = {PropStatus::Violated, "fewer than three vertices"};
    return;
  }
  // Lowpoint articulation search from vertex 0; the graph is connected.
  std::vector<int> depth(n, -1), low(n, 0);
  std::vector<VertexId> parent(n, -1);
  std::vector<std::pair<VertexId, size_t>> stack{{0, 0}};
  int root_children = 0;
  depth[0] = 0;
  while (!stack.empty()) {
    VertexId v = stack.back().first;
    size_t i = stack.back().second;
    auto nbrs = g.neighbors(v);
    if (i == 0) low[v] = depth[v];
    if (i < nbrs.size()) {
      stack.back().second = i + 1;
      VertexId u = nbrs[i];
      if (depth[u] < 0) {
        depth[u] = depth[v] + 1;
        parent[u] = v;
        if (v == 0) ++root_children;
        stack.push_back({u, 0});
      } else if (u != parent[v]) {
        low[v] = std::min(low[v], depth[u]);
      }
    } else {
      stack.pop_back();
      if (stack.empty()) continue;
      VertexId p = stack.back().first;
      low[p] = std::min(low[p], low[v]);
      if (p != 0 && low[v] >= depth[p]) {
        out = {PropStatus::Violated, "cut vertex " + vname(p)};
        return;
      }
    }
  }
  if (root_children > 1)
    out = {PropStatus::Violated, "cut vertex " + vname(0)};
}

// Cycles the interior-contact properties quantify over: every cycle of
// length <= 11, or just the facial ones under the cheap option.
std::vector<Cycle> contact_cycles(const PlaneGraph& g, bool facial_only,
                                  const std::vector<Cycle>& all11) {
  if (!facial_only) return all11;
  std::vector<Cycle> out;
  std::set<std::vector<VertexId>> seen;
  for (FaceId f = 0; f < g.face_count(); ++f) {
    if (g.face_degree(f) > 11 || g.face_degree(f) < 3) continue;
    std::vector<VertexId> w = g.face_vertices(f);
    if (std::set<VertexId>(w.begin(), w.end()).size() != w.size()) continue;
    Cycle c = make_cycle(g, w);
    if (seen.insert(c.canonical_key()).second) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

ChecklistReport checklist(const PlaneGraph& g, const StructureOptions& opts) {
  ChecklistReport r;
  const PropertyResult na_multigraph{PropStatus::NotApplicable, "requires a simple graph"};

  if (auto pp = g.parallel_pair())
    r.at(1) = {PropStatus::Violated,
               "parallel edge (" + vname(pp->first) + "," + vname(pp->second) + ")"};

  bool interior_seen = false;
  for (VertexId v = 0; v < g.vertex_count() && !interior_seen; ++v)
    interior_seen = !g.on_outer(v);
  if (!interior_seen) r.at(2) = {PropStatus::Violated, "no interior vertex"};

  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.on_outer(v) || g.degree(v) >= 3) continue;
    r.at(3) = {PropStatus::Violated, "interior vertex " + vname(v) +
                                         " has degree " + std::to_string(g.degree(v))};
    break;
  }

  check_two_connected(g, r.at(4));

  if (!g.is_simple()) {
    for (int p : {5, 6, 7, 8, 12, 13, 14, 15}) r.at(p) = na_multigraph;
  } else {
    std::vector<Cycle> cycles11 = enumerate_cycles(g, 11);

    for (const Cycle& c : cycles11) {
      if (!is_separating(g, c)) continue;
      r.at(5) = {PropStatus::Violated, "separating cycle " + vlist(c.verts)};
      break;
    }

    if (!g.outer_is_cycle()) {
      r.at(6) = {PropStatus::NotApplicable, "outer boundary is not a cycle"};
    } else {
      const Cycle c0 = make_cycle(g, g.outer_boundary());
      auto ch = chords(g, c0);
      if (!ch.empty()) {
        r.at(6) = {PropStatus::Violated, "chord (" + vname(ch[0].first) + "," +
                                             vname(ch[0].second) + ")"};
      } else {
        // The mirror face, an inner face tracing the whole outer cycle, is
        // exempt: a bare cycle violates only the interior-vertex property.
        std::set<VertexId> rim(c0.verts.begin(), c0.verts.end());
        for (FaceId f = 0; f < g.face_count(); ++f) {
          if (!g.is_inner_face(f)) continue;
          std::vector<VertexId> w = g.face_vertices(f);
          if (std::any_of(w.begin(), w.end(),
                          [&](VertexId v) { return !g.on_outer(v); }))
            continue;
          if (std::set<VertexId>(w.begin(), w.end()) == rim) continue;
          r.at(6) = {PropStatus::Violated,
                     "inner face " + vlist(w) + " lies entirely on the outer cycle"};
          break;
        }
      }
    }

    for (const Cycle& c : contact_cycles(g, opts.facial_only, cycles11)) {
      RegionPartition rp = region_partition(g, c);
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!rp.interior[v]) continue;
        CycleContact cc = neighbors_on_cycle(g, v, c);
        if (cc.count > 2 && r.at(7).status == PropStatus::Holds)
          r.at(7) = {PropStatus::Violated,
                     "vertex " + vname(v) + " has " + std::to_string(cc.count) +
                         " neighbors on cycle " + vlist(c.verts)};
        bool allowed = cc.count <= 1 ||
                       (cc.count == 2 && c.length() == 11 && cc.consecutive);
        if (!allowed && r.at(8).status == PropStatus::Holds)
          r.at(8) = {PropStatus::Violated,
                     "vertex " + vname(v) + " has " + std::to_string(cc.count) +
                         " neighbors on cycle " + vlist(c.verts)};
      }
    }

    std::vector<Cycle> sevens;
    for (const Cycle& c : cycles11)
      if (c.length() == 7) sevens.push_back(c);
    auto seven_cycle_meets = [&](VertexId a1, VertexId a2, VertexId b1, VertexId b2,
                                 VertexId c1, VertexId c2) {
      for (const Cycle& c : sevens)
        if (c.has_edge(a1, a2) || c.has_edge(b1, b2) || c.has_edge(c1, c2)) return true;
      return false;
    };

    // Five-face configurations, each labeling of each inner 5-face. The
    // on-outer pattern picks which statement applies; the asserted 7-cycle
    // must meet one of the three far edges.
    for (FaceId f = 0; f < g.face_count(); ++f) {
      if (!g.is_inner_face(f) || g.face_degree(f) != 5) continue;
      std::vector<VertexId> w = g.face_vertices(f);
      if (std::set<VertexId>(w.begin(), w.end()).size() != 5) continue;
      for (int dir : {+1, -1}) {
        for (int s = 0; s < 5; ++s) {
          auto at = [&](int i) { return w[((s + dir * i) % 5 + 5) % 5]; };
          VertexId v1 = at(0), v3 = at(2), v4 = at(3), v5 = at(4);
          bool hit = seven_cycle_meets(v3, v4, v4, v5, v5, v1);
          bool m14 = g.on_outer(v1) && g.on_outer(v3) && !g.on_outer(v4) &&
                     !g.on_outer(v5);
          bool m15 = !g.on_outer(v1) || !g.on_outer(v3);
          std::string label = "5-face " + vlist(w) + " labeled from " + vname(v1);
          if (m14 && !hit && r.at(14).status == PropStatus::Holds)
            r.at(14) = {PropStatus::Violated, label + ": no 7-cycle meets the far edges"};
          if (m15 && !hit && r.at(15).status == PropStatus::Holds)
            r.at(15) = {PropStatus::Violated, label + ": no 7-cycle meets the far edges"};
        }
      }
    }

    for (FaceId f = 0; f < g.face_count(); ++f) {
      if (!g.is_inner_face(f)) continue;
      int deg = g.face_degree(f);
      if (deg == 4 && r.at(12).status == PropStatus::Holds)
        r.at(12) = {PropStatus::Violated, "inner 4-face " + vlist(g.face_vertices(f))};
      if (deg == 6 && r.at(13).status == PropStatus::Holds)
        r.at(13) = {PropStatus::Violated, "inner 6-face " + vlist(g.face_vertices(f))};
    }
  }

  for (const SimiTetradMatch& m : find_simitetrads(g)) {
    if (m.conclusion_holds || r.at(9).status != PropStatus::Holds) continue;
    std::string d = m.distance ? std::to_string(*m.distance) : "unreachable";
    r.at(9) = {PropStatus::Violated,
               "run " + vlist(m.run) + " on face boundary " +
                   vlist(g.face_vertices(m.face)) + ": k=" +
                   std::to_string(m.run.size()) + ", distance " + d};
  }

  auto tetrads = find_tetrads(g);
  if (!tetrads.empty()) {
    const TetradMatch& t = tetrads.front();
    r.at(10) = {PropStatus::Violated,
                "tetrad " + vlist({t.run.begin(), t.run.end()}) + " on face boundary " +
                    vlist(g.face_vertices(t.face))};
  }

  for (FaceId f = 0; f < g.face_count(); ++f) {
    if (!g.is_inner_face(f)) continue;
    int run = max_consecutive_bad(g, f);
    if (run < 5) continue;
    r.at(11) = {PropStatus::Violated,
                std::to_string(run) + " consecutive bad vertices on face boundary " +
                    vlist(g.face_vertices(f))};
    break;
  }

  return r;
}

std::string to_text(const ChecklistReport& report) {
  std::ostringstream out;
  for (int i = 1; i <= 15; ++i) {
    const PropertyResult& p = report.at(i);
    out << 'P' << i << ' ';
    switch (p.status) {
      case PropStatus::Holds: out << "Holds"; break;
      case PropStatus::Violated: out << "Violated"; break;
      case PropStatus::NotApplicable: out << "NotApplicable"; break;
    }
    if (!p.witness.empty()) out << ' ' << p.witness;
    out << '\n';
  }
  return out.str();
}

}  // namespace pg3
