// Cycle enumeration, class membership, and cycle-side partitions.
#include "pg3/cycles.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <tuple>

namespace pg3 {

namespace {

void require_simple(const PlaneGraph& g) {
  if (auto p = g.parallel_pair())
    throw Error(Errc::MultigraphUnsupported,
                "cycle operations need a simple graph; vertices " + std::to_string(p->first + 1) +
                    " and " + std::to_string(p->second + 1) + " are joined twice");
}

}  // namespace

bool Cycle::contains(VertexId v) const {
  return std::find(verts.begin(), verts.end(), v) != verts.end();
}

int Cycle::index_of(VertexId v) const {
  auto it = std::find(verts.begin(), verts.end(), v);
  return it == verts.end() ? -1 : static_cast<int>(it - verts.begin());
}

bool Cycle::has_edge(VertexId u, VertexId v) const {
  int n = length();
  for (int i = 0; i < n; ++i) {
    VertexId a = verts[i], b = verts[(i + 1) % n];
    if ((a == u && b == v) || (a == v && b == u)) return true;
  }
  return false;
}

std::vector<VertexId> Cycle::canonical_key() const {
  int n = length();
  std::vector<VertexId> best;
  for (int dir : {+1, -1}) {
    for (int s = 0; s < n; ++s) {
      std::vector<VertexId> cand(n);
      for (int i = 0; i < n; ++i) cand[i] = verts[((s + dir * i) % n + n) % n];
      if (best.empty() || cand < best) best = std::move(cand);
    }
  }
  return best;
}

Cycle make_cycle(const PlaneGraph& g, const std::vector<VertexId>& verts) {
  require_simple(g);
  int n = static_cast<int>(verts.size());
  if (n < 3) throw Error(Errc::InvalidCycle, "cycle needs at least 3 vertices");
  std::set<VertexId> uniq(verts.begin(), verts.end());
  if (static_cast<int>(uniq.size()) != n) throw Error(Errc::InvalidCycle, "repeated cycle vertex");
  Cycle c;
  c.verts = verts;
  for (int i = 0; i < n; ++i) {
    VertexId a = verts[i], b = verts[(i + 1) % n];
    if (a < 0 || a >= g.vertex_count()) throw Error(Errc::InvalidCycle, "cycle vertex out of range");
    DartId d = g.dart_between(a, b);
    if (d < 0)
      throw Error(Errc::InvalidCycle, "cycle step " + std::to_string(a + 1) + "-" +
                                          std::to_string(b + 1) + " is not an edge");
    c.darts.push_back(d);
  }
  return c;
}

std::vector<Cycle> enumerate_cycles(const PlaneGraph& g, int max_len) {
  require_simple(g);
  std::vector<Cycle> out;
  std::vector<VertexId> path;
  std::vector<char> in_path(g.vertex_count(), 0);

  // Paths grow only through vertices above the start, so each cycle appears
  // once its minimum vertex leads; verts[1] < verts.back() fixes direction.
  auto dfs = [&](auto&& self, VertexId s, VertexId v) -> void {
    for (VertexId w : g.neighbors(v)) {
      if (w == s && path.size() >= 3) {
        if (path[1] < path.back()) out.push_back(make_cycle(g, path));
        continue;
      }
      if (w <= s || in_path[w] || static_cast<int>(path.size()) >= max_len) continue;
      path.push_back(w);
      in_path[w] = 1;
      self(self, s, w);
      path.pop_back();
      in_path[w] = 0;
    }
  };

  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    path = {s};
    in_path.assign(g.vertex_count(), 0);
    in_path[s] = 1;
    if (max_len >= 3) dfs(dfs, s, s);
  }
  return out;
}

std::optional<Cycle> shortest_cycle(const PlaneGraph& g) {
  require_simple(g);
  // For each edge, the shortest cycle through it is that edge plus a
  // shortest path between its ends that avoids it.
  std::optional<Cycle> best;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (VertexId v : g.neighbors(u)) {
      if (v < u) continue;
      std::vector<int> parent(g.vertex_count(), -2);
      std::vector<VertexId> queue{u};
      parent[u] = -1;
      for (size_t qi = 0; qi < queue.size() && parent[v] == -2; ++qi) {
        VertexId x = queue[qi];
        for (VertexId w : g.neighbors(x)) {
          if (x == u && w == v) continue;
          if (parent[w] == -2) {
            parent[w] = x;
            queue.push_back(w);
          }
        }
      }
      if (parent[v] == -2) continue;
      std::vector<VertexId> path;
      for (VertexId x = v; x != -1; x = parent[x]) path.push_back(x);
      if (!best || static_cast<int>(path.size()) < best->length())
        best = make_cycle(g, path);
    }
  }
  return best;
}

std::vector<std::pair<VertexId, VertexId>> chords(const PlaneGraph& g, const Cycle& c) {
  require_simple(g);
  std::vector<std::pair<VertexId, VertexId>> out;
  int n = c.length();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      VertexId u = c.verts[i], v = c.verts[j];
      bool consecutive = (j == i + 1) || (i == 0 && j == n - 1);
      if (!consecutive && g.adjacent(u, v)) out.emplace_back(std::min(u, v), std::max(u, v));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

NonadjacencySpec NonadjacencySpec::defaults() {
  NonadjacencySpec s;
  for (int i = 3; i <= 7; ++i)
    for (int j = i; i + j <= 10; ++j) s.pairs_.insert({i, j});
  s.pairs_.insert({5, 6});
  s.lmax_ = 7;
  return s;
}

NonadjacencySpec NonadjacencySpec::parse(std::string_view text) {
  if (text == "default") return defaults();
  NonadjacencySpec s;
  std::string item;
  std::istringstream in{std::string(text)};
  int widest = 0;
  while (std::getline(in, item, ',')) {
    auto dash = item.find('-');
    if (dash == std::string::npos)
      throw Error(Errc::SyntaxError, "pair spec wants 'i-j', got '" + item + "'");
    int a = 0, b = 0;
    try {
      a = std::stoi(item.substr(0, dash));
      b = std::stoi(item.substr(dash + 1));
    } catch (const std::logic_error&) {
      throw Error(Errc::SyntaxError, "pair spec wants numbers in '" + item + "'");
    }
    if (a < 3 || b < 3) throw Error(Errc::SyntaxError, "cycle lengths start at 3");
    s.pairs_.insert({std::min(a, b), std::max(a, b)});
    widest = std::max({widest, a, b});
  }
  if (s.pairs_.empty()) throw Error(Errc::SyntaxError, "empty pair spec");
  s.lmax_ = widest;
  return s;
}

bool NonadjacencySpec::forbids(int a, int b) const {
  return pairs_.count({std::min(a, b), std::max(a, b)}) > 0;
}

void NonadjacencySpec::set_lmax(int l) {
  if (l < 3) throw Error(Errc::SyntaxError, "lmax must be at least 3");
  lmax_ = l;
}

std::string NonadjacencySpec::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (auto& [a, b] : pairs_) {
    if (!first) out << ',';
    out << a << '-' << b;
    first = false;
  }
  out << " lmax=" << lmax_;
  return out.str();
}

ClassVerdict check_class(const PlaneGraph& g, const NonadjacencySpec& spec) {
  std::vector<Cycle> cycles = enumerate_cycles(g, spec.lmax());
  std::map<std::pair<VertexId, VertexId>, std::vector<int>> through;
  for (int i = 0; i < static_cast<int>(cycles.size()); ++i) {
    const Cycle& c = cycles[i];
    for (int k = 0; k < c.length(); ++k) {
      VertexId a = c.verts[k], b = c.verts[(k + 1) % c.length()];
      through[{std::min(a, b), std::max(a, b)}].push_back(i);
    }
  }
  // The smallest offending length pair wins, ties broken by the smallest
  // shared edge; the verdict never depends on cycle enumeration order.
  ClassVerdict best;
  std::tuple<int, int, VertexId, VertexId> best_key;
  for (auto& [edge, idx] : through) {
    for (size_t i = 0; i < idx.size(); ++i) {
      for (size_t j = i + 1; j < idx.size(); ++j) {
        int l1 = cycles[idx[i]].length(), l2 = cycles[idx[j]].length();
        if (!spec.forbids(l1, l2)) continue;
        const Cycle& a = l1 <= l2 ? cycles[idx[i]] : cycles[idx[j]];
        const Cycle& b = l1 <= l2 ? cycles[idx[j]] : cycles[idx[i]];
        std::tuple<int, int, VertexId, VertexId> key{a.length(), b.length(),
                                                     edge.first, edge.second};
        if (!best.member && best_key <= key) continue;
        best.member = false;
        best.len1 = a.length();
        best.len2 = b.length();
        best.shared_edge = edge;
        best.cycle1 = a.verts;
        best.cycle2 = b.verts;
        best_key = key;
      }
    }
  }
  return best;
}

std::string class_witness(const ClassVerdict& v) {
  if (v.member) return "";
  std::ostringstream os;
  os << "cycles of lengths " << v.len1 << " and " << v.len2 << " share edge "
     << v.shared_edge.first + 1 << "-" << v.shared_edge.second + 1;
  return os.str();
}

RegionPartition region_partition(const PlaneGraph& g, const Cycle& c) {
  RegionPartition rp;
  rp.on_cycle.assign(g.vertex_count(), 0);
  rp.interior.assign(g.vertex_count(), 0);
  rp.exterior.assign(g.vertex_count(), 0);
  rp.interior_face.assign(g.face_count(), 1);
  for (VertexId v : c.verts) rp.on_cycle[v] = 1;

  std::vector<char> blocked(g.dart_count(), 0);
  for (DartId d : c.darts) {
    blocked[d] = 1;
    blocked[g.dart(d).twin] = 1;
  }
  std::vector<FaceId> queue{g.outer_face()};
  rp.interior_face[g.outer_face()] = 0;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    for (DartId d : g.face_walk(queue[qi])) {
      if (blocked[d]) continue;
      FaceId nf = g.face_of(g.dart(d).twin);
      if (rp.interior_face[nf]) {
        rp.interior_face[nf] = 0;
        queue.push_back(nf);
      }
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (rp.on_cycle[v]) continue;
    // all faces around a non-cycle vertex sit on one side
    bool inside = rp.interior_face[g.face_of(g.out_darts(v)[0])];
#ifndef NDEBUG
    for (DartId d : g.out_darts(v)) assert(rp.interior_face[g.face_of(d)] == inside);
#endif
    (inside ? rp.interior : rp.exterior)[v] = 1;
  }
  return rp;
}

bool is_separating(const PlaneGraph& g, const Cycle& c) {
  RegionPartition rp = region_partition(g, c);
  bool has_in = std::find(rp.interior.begin(), rp.interior.end(), 1) != rp.interior.end();
  bool has_out = std::find(rp.exterior.begin(), rp.exterior.end(), 1) != rp.exterior.end();
  return has_in && has_out;
}

CycleContact neighbors_on_cycle(const PlaneGraph& g, VertexId v, const Cycle& c) {
  CycleContact out;
  std::vector<char> hit(c.length(), 0);
  for (VertexId w : g.neighbors(v)) {
    int i = c.index_of(w);
    if (i >= 0) {
      ++out.count;
      hit[i] = 1;
    }
  }
  for (int i = 0; i < c.length(); ++i)
    if (hit[i] && hit[(i + 1) % c.length()]) out.consecutive = true;
  return out;
}

std::vector<VertexId> segment(const Cycle& c, VertexId u, VertexId v) {
  int i = c.index_of(u), j = c.index_of(v);
  if (i < 0 || j < 0) throw Error(Errc::VertexNotOnCycle, "segment endpoint not on the cycle");
  std::vector<VertexId> out;
  for (int k = i;; k = (k + 1) % c.length()) {
    out.push_back(c.verts[k]);
    if (k == j) break;
  }
  return out;
}

}  // namespace pg3
