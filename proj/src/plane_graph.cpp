// Rotation-system plane graphs: validation, face tracing, surgeries, pgr I/O.
#include "pg3/plane_graph.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <sstream>

namespace pg3 {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::AsymmetricAdjacency: return "AsymmetricAdjacency";
    case Errc::EulerViolation: return "EulerViolation";
    case Errc::BadOuterMarker: return "BadOuterMarker";
    case Errc::AdjacentEndpoints: return "AdjacentEndpoints";
    case Errc::NotOnCommonFace: return "NotOnCommonFace";
    case Errc::Disconnects: return "Disconnects";
    case Errc::DeletesAll: return "DeletesAll";
    case Errc::NotOnFace: return "NotOnFace";
    case Errc::MultigraphUnsupported: return "MultigraphUnsupported";
    case Errc::VertexNotInterior: return "VertexNotInterior";
    case Errc::VertexNotOnCycle: return "VertexNotOnCycle";
    case Errc::InvalidCycle: return "InvalidCycle";
    case Errc::OuterFace: return "OuterFace";
    case Errc::NotInClass: return "NotInClass";
    case Errc::OuterTooLarge: return "OuterTooLarge";
    case Errc::ImproperPrecoloring: return "ImproperPrecoloring";
    case Errc::UncoloredVertex: return "UncoloredVertex";
    case Errc::GuardFailed: return "GuardFailed";
    case Errc::PullBackImproper: return "PullBackImproper";
    case Errc::LemmaFalsified: return "LemmaFalsified";
    case Errc::ColoringFailed: return "ColoringFailed";
    case Errc::BoundsInfeasible: return "BoundsInfeasible";
  }
  return "UnknownError";
}

namespace {

[[noreturn]] void syntax_error(int line_no, const std::string& msg) {
  throw Error(Errc::SyntaxError, "line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

GraphDoc parse_pgr(std::string_view text) {
  GraphDoc doc;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool have_header = false, have_outer = false;
  std::vector<char> seen;

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank

    if (!have_header) {
      if (tok != "pgr") syntax_error(line_no, "expected 'pgr <n> <m>' header");
      if (!(ls >> doc.n >> doc.m) || doc.n < 1 || doc.m < 0)
        syntax_error(line_no, "bad header counts");
      std::string extra;
      if (ls >> extra) syntax_error(line_no, "trailing tokens after header");
      doc.rot.assign(doc.n, {});
      seen.assign(doc.n, 0);
      have_header = true;
      continue;
    }
    if (tok == "outer:") {
      if (have_outer) syntax_error(line_no, "duplicate outer line");
      if (!(ls >> doc.outer_u >> doc.outer_v)) syntax_error(line_no, "outer needs 'u v [k]'");
      if (!(ls >> doc.outer_k)) doc.outer_k = 1;
      if (doc.outer_k < 1) syntax_error(line_no, "outer copy index must be >= 1");
      std::string extra;
      if (ls >> extra) syntax_error(line_no, "trailing tokens after outer line");
      have_outer = true;
      continue;
    }
    if (have_outer) syntax_error(line_no, "content after outer line");

    // vertex line "<i>: j1 j2 ..."
    if (tok.empty() || tok.back() != ':') syntax_error(line_no, "expected '<i>:' vertex line");
    int i = 0;
    try {
      size_t pos = 0;
      i = std::stoi(tok.substr(0, tok.size() - 1), &pos);
      if (pos != tok.size() - 1) syntax_error(line_no, "bad vertex id '" + tok + "'");
    } catch (const std::logic_error&) {
      syntax_error(line_no, "bad vertex id '" + tok + "'");
    }
    if (i < 1 || i > doc.n) syntax_error(line_no, "vertex id out of range");
    if (seen[i - 1]) syntax_error(line_no, "duplicate line for vertex " + std::to_string(i));
    seen[i - 1] = 1;
    int j;
    while (ls >> j) {
      if (j < 1 || j > doc.n) syntax_error(line_no, "neighbor id out of range");
      if (j == i) syntax_error(line_no, "self-neighbor at vertex " + std::to_string(i));
      doc.rot[i - 1].push_back(j);
    }
    if (!ls.eof()) syntax_error(line_no, "bad neighbor token");
  }

  if (!have_header) syntax_error(line_no, "missing 'pgr' header");
  for (int i = 0; i < doc.n; ++i)
    if (!seen[i]) syntax_error(line_no, "missing line for vertex " + std::to_string(i + 1));
  if (doc.n > 1 && !have_outer) syntax_error(line_no, "missing outer line");
  size_t total = 0;
  for (auto& r : doc.rot) total += r.size();
  if (total != 2 * static_cast<size_t>(doc.m))
    syntax_error(line_no, "adjacency lists disagree with header edge count");
  return doc;
}

std::string serialize_pgr(const GraphDoc& doc) {
  std::ostringstream out;
  out << "pgr " << doc.n << ' ' << doc.m << '\n';
  for (int i = 0; i < doc.n; ++i) {
    out << (i + 1) << ':';
    for (int j : doc.rot[i]) out << ' ' << j;
    out << '\n';
  }
  if (doc.n > 1) {
    out << "outer: " << doc.outer_u << ' ' << doc.outer_v;
    if (doc.outer_k != 1) out << ' ' << doc.outer_k;
    out << '\n';
  }
  return out.str();
}

// Mutable staging area for surgeries. Dart ids stay stable; dead darts keep
// tail == -1. The anchor is a live dart whose face is the outer face.
class EmbeddingBuilder {
public:
  explicit EmbeddingBuilder(const PlaneGraph& g) {
    n_ = g.vertex_count();
    alive_.assign(n_, 1);
    rot_.resize(n_);
    for (VertexId v = 0; v < n_; ++v)
      rot_[v].assign(g.out_darts(v).begin(), g.out_darts(v).end());
    tail_.resize(g.dart_count());
    head_.resize(g.dart_count());
    twin_.resize(g.dart_count());
    for (DartId d = 0; d < g.dart_count(); ++d) {
      tail_[d] = g.dart(d).tail;
      head_[d] = g.dart(d).head;
      twin_[d] = g.dart(d).twin;
    }
    anchor_ = g.face_count() ? g.face_walk(g.outer_face())[0] : -1;
  }

  bool dart_alive(DartId d) const { return tail_[d] >= 0; }
  VertexId head(DartId d) const { return head_[d]; }
  VertexId tail(DartId d) const { return tail_[d]; }
  DartId twin(DartId d) const { return twin_[d]; }

  DartId rot_next(DartId d) const {
    const auto& r = rot_[tail_[d]];
    auto it = std::find(r.begin(), r.end(), d);
    assert(it != r.end());
    ++it;
    return it == r.end() ? r.front() : *it;
  }
  // Face successor under the current embedding.
  DartId face_next(DartId d) const { return rot_next(twin_[d]); }

  std::vector<DartId> face_walk_from(DartId d0) const {
    std::vector<DartId> walk;
    DartId d = d0;
    do {
      walk.push_back(d);
      d = face_next(d);
    } while (d != d0);
    return walk;
  }

  // First dart of the walk whose tail is v, or -1.
  DartId corner_of(const std::vector<DartId>& walk, VertexId v) const {
    for (DartId d : walk)
      if (tail_[d] == v) return d;
    return -1;
  }

  int multiplicity(VertexId u, VertexId v) const {
    int c = 0;
    for (DartId d : rot_[u])
      if (head_[d] == v) ++c;
    return c;
  }

  // Inserts the new dart pair u->v, v->u with u's end immediately before
  // before_u in u's rotation and v's end immediately before before_v.
  // Splits the face those corners share.
  std::pair<DartId, DartId> add_edge_at(VertexId u, DartId before_u, VertexId v, DartId before_v) {
    DartId e = new_dart(u, v), et = new_dart(v, u);
    twin_[e] = et;
    twin_[et] = e;
    insert_before(u, before_u, e);
    insert_before(v, before_v, et);
    return {e, et};
  }

  // Removes one u-v edge given its dart. Faces on both sides merge. The
  // anchor moves to another dart of the merged face when it dies.
  void delete_edge_by_dart(DartId d) {
    DartId dt = twin_[d];
    if (anchor_ == d || anchor_ == dt) {
      DartId repl = -1;
      for (DartId w : face_walk_from(d))
        if (w != d && w != dt) { repl = w; break; }
      if (repl < 0)
        for (DartId w : face_walk_from(dt))
          if (w != d && w != dt) { repl = w; break; }
      if (repl < 0) throw Error(Errc::DeletesAll, "removing the only edge of the graph");
      anchor_ = repl;
    }
    erase_from(tail_[d], d);
    erase_from(tail_[dt], dt);
    kill(d);
    kill(dt);
  }

  void delete_vertex(VertexId v) {
    // Faces incident to v merge into one; if the anchor dies, any surviving
    // dart of a face that touched v lies on the merged face.
    if (anchor_ >= 0 && (tail_[anchor_] == v || head_[anchor_] == v)) {
      DartId repl = -1;
      std::vector<DartId> seeds = rot_[v];
      for (DartId s : seeds) {
        for (DartId w : face_walk_from(s))
          if (tail_[w] != v && head_[w] != v) { repl = w; break; }
        if (repl >= 0) break;
        for (DartId w : face_walk_from(twin_[s]))
          if (tail_[w] != v && head_[w] != v) { repl = w; break; }
        if (repl >= 0) break;
      }
      anchor_ = repl;  // may stay -1 when the survivor is a single vertex
    }
    for (DartId d : std::vector<DartId>(rot_[v].begin(), rot_[v].end())) {
      DartId dt = twin_[d];
      erase_from(tail_[dt], dt);
      kill(d);
      kill(dt);
    }
    rot_[v].clear();
    alive_[v] = 0;
  }

  // Merges v into u across the given face walk. Caller guarantees u, v
  // nonadjacent and both on the walk. Collapses the parallel edges that
  // common neighbors produce.
  void identify(VertexId u, VertexId v, const std::vector<DartId>& bridge_walk) {
    DartId cu = corner_of(bridge_walk, u), cv = corner_of(bridge_walk, v);
    if (cu < 0 || cv < 0) throw Error(Errc::NotOnCommonFace, "identification endpoints not on the bridge face");
    std::vector<DartId> merged;
    append_rotation_from(merged, u, cu);
    append_rotation_from(merged, v, cv);
    rot_[u] = merged;
    for (DartId d : rot_[u]) {
      tail_[d] = u;
      // retarget darts that pointed at v
      DartId dt = twin_[d];
      head_[dt] = u;
    }
    rot_[v].clear();
    alive_[v] = 0;
    collapse_parallel_at(u);
  }

  void attach_leaf(VertexId u, DartId before_u, VertexId w) {
    DartId e = new_dart(u, w), et = new_dart(w, u);
    twin_[e] = et;
    twin_[et] = e;
    insert_before(u, before_u, e);
    rot_[w] = {et};
  }

  void subdivide_edge(DartId d, VertexId fresh) {
    // d: u->v becomes u->fresh, and a new pair fresh<->v takes d's slot at v.
    DartId dt = twin_[d];
    VertexId v = head_[d];
    DartId e = new_dart(fresh, v), et = new_dart(v, fresh);
    twin_[e] = et;
    twin_[et] = e;
    head_[d] = fresh;
    tail_[dt] = fresh;
    rot_[fresh] = {dt, e};
    // et replaces dt in v's rotation
    auto& rv = rot_[v];
    *std::find(rv.begin(), rv.end(), dt) = et;
  }

  VertexId add_vertex() {
    rot_.emplace_back();
    alive_.push_back(1);
    return n_++;
  }

  void set_anchor(DartId d) { anchor_ = d; }
  DartId anchor() const { return anchor_; }
  bool vertex_alive(VertexId v) const { return alive_[v]; }

  // True when the live graph is connected (vertexless graphs are vacuously so).
  bool connected_if_removed(const std::vector<char>& removed) const {
    int live = 0;
    VertexId start = -1;
    for (VertexId v = 0; v < n_; ++v)
      if (alive_[v] && !removed[v]) { ++live; start = v; }
    if (live <= 1) return live == 1;
    std::vector<char> seen(n_, 0);
    std::vector<VertexId> stack{start};
    seen[start] = 1;
    int found = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (DartId d : rot_[v]) {
        VertexId w = head_[d];
        if (!removed[w] && !seen[w]) {
          seen[w] = 1;
          ++found;
          stack.push_back(w);
        }
      }
    }
    return found == live;
  }

  // Compacts into a fresh validated PlaneGraph.
  Surgery finish() const {
    std::vector<int> vmap(n_, -1);
    GraphDoc doc;
    for (VertexId v = 0; v < n_; ++v)
      if (alive_[v]) vmap[v] = doc.n++;
    doc.rot.assign(doc.n, {});
    size_t total = 0;
    for (VertexId v = 0; v < n_; ++v) {
      if (!alive_[v]) continue;
      for (DartId d : rot_[v]) doc.rot[vmap[v]].push_back(vmap[head_[d]] + 1);
      total += rot_[v].size();
    }
    doc.m = static_cast<int>(total / 2);
    if (doc.n > 1) {
      if (anchor_ < 0 || !dart_alive(anchor_))
        throw Error(Errc::BadOuterMarker, "outer face anchor lost during surgery");
      VertexId au = tail_[anchor_], av = head_[anchor_];
      doc.outer_u = vmap[au] + 1;
      doc.outer_v = vmap[av] + 1;
      int k = 0;
      for (DartId d : rot_[au]) {
        if (head_[d] == av) ++k;
        if (d == anchor_) break;
      }
      doc.outer_k = k;
    }
    Surgery s{PlaneGraph::build(doc), std::move(vmap)};
    return s;
  }

private:
  DartId new_dart(VertexId t, VertexId h) {
    tail_.push_back(t);
    head_.push_back(h);
    twin_.push_back(-1);
    return static_cast<DartId>(tail_.size()) - 1;
  }
  void kill(DartId d) { tail_[d] = head_[d] = twin_[d] = -1; }
  void erase_from(VertexId v, DartId d) {
    auto& r = rot_[v];
    r.erase(std::find(r.begin(), r.end(), d));
  }
  void insert_before(VertexId v, DartId before, DartId d) {
    auto& r = rot_[v];
    r.insert(std::find(r.begin(), r.end(), before), d);
  }
  void append_rotation_from(std::vector<DartId>& out, VertexId v, DartId start) {
    const auto& r = rot_[v];
    auto it = std::find(r.begin(), r.end(), start);
    out.insert(out.end(), it, r.end());
    out.insert(out.end(), r.begin(), it);
  }
  // Keeps the first copy of each parallel bundle at u, drops the rest.
  void collapse_parallel_at(VertexId u) {
    for (;;) {
      DartId victim = -1;
      std::vector<char> seen(n_, 0);
      for (DartId d : rot_[u]) {
        if (seen[head_[d]]) { victim = d; break; }
        seen[head_[d]] = 1;
      }
      if (victim < 0) return;
      delete_edge_by_dart(victim);
    }
  }

  int n_ = 0;
  std::vector<char> alive_;
  std::vector<std::vector<DartId>> rot_;
  std::vector<VertexId> tail_, head_;
  std::vector<DartId> twin_;
  DartId anchor_ = -1;
};

PlaneGraph PlaneGraph::build(const GraphDoc& doc) {
  if (doc.n < 1) throw Error(Errc::SyntaxError, "graph needs at least one vertex");
  PlaneGraph g;
  g.n_ = doc.n;
  g.rot_.assign(doc.n, {});

  // occurrence lists per ordered pair, for twin pairing
  std::map<std::pair<int, int>, std::vector<DartId>> occ;
  for (int u = 0; u < doc.n; ++u) {
    for (int j : doc.rot[u]) {
      if (j < 1 || j > doc.n) throw Error(Errc::SyntaxError, "neighbor id out of range");
      int v = j - 1;
      if (v == u) throw Error(Errc::LoopEdge, "vertex " + std::to_string(u + 1) + " lists itself");
      DartId d = static_cast<DartId>(g.darts_.size());
      g.darts_.push_back(Dart{u, v, -1, -1});
      g.rot_[u].push_back(d);
      occ[{u, v}].push_back(d);
    }
  }
  for (auto& [key, fwd] : occ) {
    auto [u, v] = key;
    if (u > v) continue;
    auto it = occ.find({v, u});
    size_t back_count = it == occ.end() ? 0 : it->second.size();
    if (back_count != fwd.size())
      throw Error(Errc::AsymmetricAdjacency,
                  "edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1) +
                      " listed " + std::to_string(fwd.size()) + " vs " + std::to_string(back_count) + " times");
    const auto& bwd = it->second;
    size_t c = fwd.size();
    for (size_t k = 0; k < c; ++k) {
      DartId a = fwd[k], b = bwd[c - 1 - k];  // reversed nesting for parallel bundles
      g.darts_[a].twin = b;
      g.darts_[b].twin = a;
    }
  }
  for (int u = 0; u < doc.n; ++u) {
    auto& r = g.rot_[u];
    for (size_t i = 0; i < r.size(); ++i) g.darts_[r[i]].next = r[(i + 1) % r.size()];
  }

  // connectivity
  {
    std::vector<char> seen(doc.n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int found = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (DartId d : g.rot_[v]) {
        int w = g.darts_[d].head;
        if (!seen[w]) { seen[w] = 1; ++found; stack.push_back(w); }
      }
    }
    if (found != doc.n)
      throw Error(Errc::EulerViolation, "graph is disconnected (" + std::to_string(found) + " of " +
                                            std::to_string(doc.n) + " vertices reachable)");
  }

  // resolve outer marker to a dart before tracing
  DartId anchor = -1;
  if (doc.n == 1) {
    anchor = -1;
  } else {
    int u = doc.outer_u - 1, v = doc.outer_v - 1;
    if (u < 0 || u >= doc.n || v < 0 || v >= doc.n)
      throw Error(Errc::BadOuterMarker, "outer marker vertex out of range");
    int k = 0;
    for (DartId d : g.rot_[u]) {
      if (g.darts_[d].head == v && ++k == doc.outer_k) { anchor = d; break; }
    }
    if (anchor < 0)
      throw Error(Errc::BadOuterMarker, "no dart " + std::to_string(doc.outer_u) + "->" +
                                            std::to_string(doc.outer_v) + " copy " + std::to_string(doc.outer_k));
  }

  g.derive(anchor);
  return g;
}

void PlaneGraph::derive(DartId anchor) {
  faces_.clear();
  face_of_.assign(darts_.size(), -1);
  for (DartId d0 = 0; d0 < static_cast<DartId>(darts_.size()); ++d0) {
    if (face_of_[d0] >= 0) continue;
    FaceId f = static_cast<FaceId>(faces_.size());
    faces_.emplace_back();
    DartId d = d0;
    do {
      face_of_[d] = f;
      faces_[f].push_back(d);
      d = darts_[darts_[d].twin].next;
    } while (d != d0);
  }
  int f_count = face_count();
  if (n_ == 1) f_count = 1;  // a lone vertex bounds the one face
  if (n_ - edge_count() + f_count != 2)
    throw Error(Errc::EulerViolation, "rotation system is not spherical: V-E+F = " +
                                          std::to_string(n_ - edge_count() + f_count));
  outer_ = (anchor >= 0) ? face_of_[anchor] : 0;

  on_outer_.assign(n_, n_ == 1);
  if (anchor >= 0)
    for (DartId d : faces_[outer_]) on_outer_[darts_[d].tail] = 1;

  nbr_sets_.assign(n_, {});
  parallel_pair_.reset();
  for (VertexId v = 0; v < n_; ++v) {
    auto& s = nbr_sets_[v];
    for (DartId d : rot_[v]) s.push_back(darts_[d].head);
    std::sort(s.begin(), s.end());
    for (size_t i = 0; i + 1 < s.size(); ++i)
      if (s[i] == s[i + 1] && !parallel_pair_) parallel_pair_ = std::pair{std::min(v, s[i]), std::max(v, s[i])};
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
}

std::vector<VertexId> PlaneGraph::face_vertices(FaceId f) const {
  std::vector<VertexId> out;
  out.reserve(faces_[f].size());
  for (DartId d : faces_[f]) out.push_back(darts_[d].tail);
  return out;
}

std::vector<VertexId> PlaneGraph::outer_boundary() const {
  std::vector<VertexId> out;
  std::vector<char> seen(n_, 0);
  if (face_count() == 0) {  // single vertex
    out.push_back(0);
    return out;
  }
  for (DartId d : faces_[outer_]) {
    VertexId v = darts_[d].tail;
    if (!seen[v]) { seen[v] = 1; out.push_back(v); }
  }
  return out;
}

bool PlaneGraph::outer_is_cycle() const {
  if (face_count() == 0) return false;
  auto walk = face_vertices(outer_);
  if (walk.size() < 3) return false;
  std::vector<char> seen(n_, 0);
  for (VertexId v : walk) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool PlaneGraph::adjacent(VertexId u, VertexId v) const {
  const auto& s = nbr_sets_[u];
  return std::binary_search(s.begin(), s.end(), v);
}

int PlaneGraph::multiplicity(VertexId u, VertexId v) const {
  int c = 0;
  for (DartId d : rot_[u])
    if (darts_[d].head == v) ++c;
  return c;
}

DartId PlaneGraph::dart_between(VertexId u, VertexId v) const {
  for (DartId d : rot_[u])
    if (darts_[d].head == v) return d;
  return -1;
}

Surgery PlaneGraph::identify_vertices(VertexId u, VertexId v, FaceId bridge_face) const {
  if (u == v) throw Error(Errc::AdjacentEndpoints, "cannot identify a vertex with itself");
  if (adjacent(u, v)) throw Error(Errc::AdjacentEndpoints, "identification endpoints are adjacent");
  EmbeddingBuilder b(*this);
  std::vector<DartId> walk(faces_[bridge_face].begin(), faces_[bridge_face].end());
  if (b.corner_of(walk, u) < 0 || b.corner_of(walk, v) < 0)
    throw Error(Errc::NotOnCommonFace, "identification endpoints must lie on the bridge face");
  b.identify(u, v, walk);
  Surgery s = b.finish();
  s.vertex_map[v] = s.vertex_map[u];
  return s;
}

Surgery PlaneGraph::delete_vertices(const std::vector<VertexId>& doomed) const {
  std::vector<char> removed(n_, 0);
  int cnt = 0;
  for (VertexId v : doomed) {
    if (v < 0 || v >= n_) throw Error(Errc::SyntaxError, "vertex id out of range");
    if (!removed[v]) { removed[v] = 1; ++cnt; }
  }
  if (cnt == n_) throw Error(Errc::DeletesAll, "deletion would leave no vertices");
  EmbeddingBuilder b(*this);
  if (!b.connected_if_removed(removed))
    throw Error(Errc::Disconnects, "vertex deletion would disconnect the graph");
  // Faces sharing a doomed vertex fuse; the class holding the outer face is
  // the outer face of the result. Park the anchor on a surviving dart of
  // that class up front: the stepwise relocation inside delete_vertex can
  // strand it in a pocket of the doomed region.
  DartId a = b.anchor();
  if (a >= 0 && (removed[darts_[a].tail] || removed[darts_[a].head])) {
    std::vector<FaceId> parent(face_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](FaceId f) {
      while (parent[f] != f) f = parent[f] = parent[parent[f]];
      return f;
    };
    for (VertexId v = 0; v < n_; ++v) {
      if (!removed[v]) continue;
      FaceId into = -1;
      for (DartId d : rot_[v]) {
        FaceId f = find(face_of_[d]);
        if (into < 0) into = f;
        else if (f != into) parent[f] = into;
      }
    }
    FaceId cls = find(face_of_[a]);
    for (DartId d = 0; d < dart_count(); ++d)
      if (!removed[darts_[d].tail] && !removed[darts_[d].head] &&
          find(face_of_[d]) == cls) {
        b.set_anchor(d);
        break;
      }
    // No survivor dart on the fused face only when one vertex remains;
    // finish() skips the marker for single-vertex graphs.
  }
  for (VertexId v = 0; v < n_; ++v)
    if (removed[v]) b.delete_vertex(v);
  return b.finish();
}

Surgery PlaneGraph::add_edge_in_face(VertexId u, VertexId v, FaceId f) const {
  if (u == v) throw Error(Errc::LoopEdge, "edge endpoints coincide");
  EmbeddingBuilder b(*this);
  std::vector<DartId> walk(faces_[f].begin(), faces_[f].end());
  DartId cu = b.corner_of(walk, u), cv = b.corner_of(walk, v);
  if (cu < 0 || cv < 0) throw Error(Errc::NotOnFace, "edge endpoints must lie on the target face");
  b.add_edge_at(u, cu, v, cv);
  return b.finish();
}

Surgery PlaneGraph::delete_edge(VertexId u, VertexId v) const {
  DartId d = dart_between(u, v);
  if (d < 0) throw Error(Errc::NotOnFace, "no such edge");
  if (face_of_[d] == face_of_[darts_[d].twin])
    throw Error(Errc::Disconnects, "edge is a bridge");
  EmbeddingBuilder b(*this);
  b.delete_edge_by_dart(d);
  return b.finish();
}

Surgery PlaneGraph::grow_leaf(FaceId f, int corner) const {
  EmbeddingBuilder b(*this);
  DartId at = faces_[f][corner];
  VertexId w = b.add_vertex();
  b.attach_leaf(darts_[at].tail, at, w);
  return b.finish();
}

Surgery PlaneGraph::grow_chord(FaceId f, int corner_a, int corner_b) const {
  DartId da = faces_[f][corner_a], db = faces_[f][corner_b];
  VertexId u = darts_[da].tail, v = darts_[db].tail;
  if (u == v) throw Error(Errc::LoopEdge, "chord corners share a vertex");
  EmbeddingBuilder b(*this);
  b.add_edge_at(u, da, v, db);
  return b.finish();
}

Surgery PlaneGraph::grow_subdivide(VertexId u, VertexId v) const {
  DartId d = dart_between(u, v);
  if (d < 0) throw Error(Errc::NotOnFace, "no such edge");
  EmbeddingBuilder b(*this);
  b.subdivide_edge(d, b.add_vertex());
  return b.finish();
}

PlaneGraph PlaneGraph::with_outer_face(FaceId f) const {
  PlaneGraph g = *this;
  g.outer_ = f;
  g.on_outer_.assign(n_, n_ == 1);
  if (g.face_count())
    for (DartId d : g.faces_[f]) g.on_outer_[g.darts_[d].tail] = 1;
  return g;
}

GraphDoc PlaneGraph::to_doc() const {
  GraphDoc doc;
  doc.n = n_;
  doc.m = edge_count();
  doc.rot.assign(n_, {});
  for (VertexId v = 0; v < n_; ++v)
    for (DartId d : rot_[v]) doc.rot[v].push_back(darts_[d].head + 1);
  if (face_count() && n_ > 1) {
    DartId a = faces_[outer_][0];
    doc.outer_u = darts_[a].tail + 1;
    doc.outer_v = darts_[a].head + 1;
    int k = 0;
    for (DartId d : rot_[darts_[a].tail]) {
      if (darts_[d].head == darts_[a].head) ++k;
      if (d == a) break;
    }
    doc.outer_k = k;
  }
  return doc;
}

std::string PlaneGraph::to_dot() const {
  std::ostringstream out;
  out << "graph g {\n  layout=neato;\n";
  for (VertexId v = 0; v < n_; ++v) {
    out << "  v" << (v + 1);
    if (on_outer_[v]) out << " [shape=doublecircle]";
    out << ";\n";
  }
  for (DartId d = 0; d < dart_count(); ++d) {
    if (d < darts_[d].twin)
      out << "  v" << (darts_[d].tail + 1) << " -- v" << (darts_[d].head + 1) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace pg3
