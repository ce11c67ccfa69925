#include "pg3/harness.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "pg3/error.hpp"

namespace pg3 {

namespace {

PlaneGraph seed_edge() {
  return PlaneGraph::from_pgr("pgr 2 1\n1: 2\n2: 1\nouter: 1 2\n");
}

}  // namespace

std::vector<GrowthOp> growth_ops(const PlaneGraph& g) {
  std::vector<GrowthOp> out;
  for (FaceId f = 0; f < g.face_count(); ++f) {
    int deg = g.face_degree(f);
    for (int c = 0; c < deg; ++c)
      out.push_back({.kind = GrowthOp::Kind::AddVertexInFace, .face = f,
                     .corner_a = c});
    auto fv = g.face_vertices(f);
    for (int a = 0; a < deg; ++a)
      for (int b = a + 1; b < deg; ++b) {
        if (fv[a] == fv[b] || g.adjacent(fv[a], fv[b])) continue;
        out.push_back({.kind = GrowthOp::Kind::SplitFaceWithEdge, .face = f,
                       .corner_a = a, .corner_b = b});
      }
  }
  for (DartId d = 0; d < g.dart_count(); ++d) {
    const Dart& dd = g.dart(d);
    if (dd.tail < dd.head)
      out.push_back({.kind = GrowthOp::Kind::SubdivideEdge, .u = dd.tail,
                     .v = dd.head});
  }
  return out;
}

PlaneGraph apply(const GrowthOp& op, const PlaneGraph& g) {
  switch (op.kind) {
    case GrowthOp::Kind::AddVertexInFace:
      return g.grow_leaf(op.face, op.corner_a).graph;
    case GrowthOp::Kind::SplitFaceWithEdge:
      return g.grow_chord(op.face, op.corner_a, op.corner_b).graph;
    case GrowthOp::Kind::SubdivideEdge:
      return g.grow_subdivide(op.u, op.v).graph;
  }
  throw Error(Errc::SyntaxError, "unknown growth op");
}

std::string canonical_code(const PlaneGraph& g) {
  const int n = g.vertex_count();
  const int dart_count = g.dart_count();
  if (n > 250)
    throw Error(Errc::BoundsInfeasible, "canonical code caps at 250 vertices");
  if (dart_count == 0) return std::string(1, '\1');

  std::vector<int> pos(dart_count);
  for (VertexId v = 0; v < n; ++v) {
    auto rot = g.out_darts(v);
    for (int i = 0; i < static_cast<int>(rot.size()); ++i) pos[rot[i]] = i;
  }
  auto spin = [&](DartId d, int dir) {
    auto rot = g.out_darts(g.dart(d).tail);
    int k = static_cast<int>(rot.size());
    return rot[(pos[d] + (dir > 0 ? 1 : k - 1)) % k];
  };

  std::string best;
  std::vector<int> label(n);
  std::vector<DartId> entry(n);
  std::vector<VertexId> order;
  order.reserve(n);
  for (DartId s = 0; s < dart_count; ++s)
    for (int dir : {+1, -1}) {
      std::fill(label.begin(), label.end(), -1);
      order.clear();
      VertexId root = g.dart(s).tail;
      label[root] = 0;
      entry[root] = s;
      order.push_back(root);
      std::string code;
      code.reserve(dart_count + n);
      for (size_t i = 0; i < order.size(); ++i) {
        VertexId v = order[i];
        DartId d = entry[v];
        for (int k = 0; k < g.degree(v); ++k) {
          VertexId u = g.dart(d).head;
          if (label[u] < 0) {
            label[u] = static_cast<int>(order.size());
            entry[u] = g.dart(d).twin;
            order.push_back(u);
          }
          code.push_back(static_cast<char>(label[u] + 1));
          d = spin(d, dir);
        }
        code.push_back('\0');
      }
      if (best.empty() || code < best) best = std::move(code);
    }
  return best;
}

namespace {

void enumerate_impl(const PlaneGraph& g, int n_max, int m_max,
                    const NonadjacencySpec* members_only,
                    const std::function<void(const PlaneGraph&)>& fn,
                    std::unordered_set<std::string>& seen) {
  fn(g);
  if (g.edge_count() >= m_max) return;
  for (const GrowthOp& op : growth_ops(g)) {
    bool adds_vertex = op.kind != GrowthOp::Kind::SplitFaceWithEdge;
    if (adds_vertex && g.vertex_count() >= n_max) continue;
    PlaneGraph child = apply(op, g);
    if (!seen.insert(canonical_code(child)).second) continue;
    if (members_only && !check_class(child, *members_only).member) continue;
    enumerate_impl(child, n_max, m_max, members_only, fn, seen);
  }
}

void enumerate_from_seed(int n_max, int m_max,
                         const NonadjacencySpec* members_only,
                         const std::function<void(const PlaneGraph&)>& fn) {
  if (n_max < 2 || m_max < 1) return;
  PlaneGraph root = seed_edge();
  std::unordered_set<std::string> seen;
  seen.insert(canonical_code(root));
  enumerate_impl(root, n_max, m_max, members_only, fn, seen);
}

}  // namespace

void enumerate_plane_graphs(int n_max, int m_max,
                            const std::function<void(const PlaneGraph&)>& fn) {
  enumerate_from_seed(n_max, m_max, nullptr, fn);
}

void enumerate_class_members(int n_max, int m_max, const NonadjacencySpec& spec,
                             const std::function<void(const PlaneGraph&)>& fn) {
  enumerate_from_seed(n_max, m_max, &spec, fn);
}

namespace {

// m is validated against the simple-planar edge bound; n = 2 admits only
// the seed edge itself.
void require_feasible(int n, int m) {
  if (n < 2) throw Error(Errc::BoundsInfeasible, "need at least two vertices");
  long long cap = n >= 3 ? 3LL * n - 6 : 1;
  if (m < n - 1 || m > cap) {
    std::ostringstream os;
    os << "m=" << m << " outside [" << n - 1 << ", " << cap << "] for n=" << n;
    throw Error(Errc::BoundsInfeasible, os.str());
  }
}

// Ops eligible now: vertex growth only while vertices are missing, chords
// only while edges outrun the missing vertices (every op adds one edge, so
// edges-missing >= vertices-missing stays true and both targets land).
std::vector<GrowthOp> eligible_ops(const PlaneGraph& g, int n, int m) {
  int nd = n - g.vertex_count();
  int md = m - g.edge_count();
  std::vector<GrowthOp> out;
  for (GrowthOp& op : growth_ops(g)) {
    bool adds_vertex = op.kind != GrowthOp::Kind::SplitFaceWithEdge;
    if (adds_vertex ? nd > 0 : md > nd) out.push_back(op);
  }
  return out;
}

}  // namespace

PlaneGraph random_plane_graph(int n, int m, std::uint64_t seed) {
  require_feasible(n, m);
  std::mt19937_64 rng(seed);
  PlaneGraph g = seed_edge();
  while (g.vertex_count() < n || g.edge_count() < m) {
    auto ops = eligible_ops(g, n, m);
    if (ops.empty())
      throw Error(Errc::BoundsInfeasible, "growth stuck before the bounds");
    g = apply(ops[rng() % ops.size()], g);
  }
  return g;
}

PlaneGraph random_class_member(int n, int m, std::uint64_t seed,
                               const NonadjacencySpec& spec) {
  require_feasible(n, m);
  std::mt19937_64 rng(seed);
  PlaneGraph g = seed_edge();
  while (g.vertex_count() < n || g.edge_count() < m) {
    auto ops = eligible_ops(g, n, m);
    bool advanced = false;
    while (!ops.empty()) {
      size_t i = rng() % ops.size();
      PlaneGraph child = apply(ops[i], g);
      if (check_class(child, spec).member) {
        g = std::move(child);
        advanced = true;
        break;
      }
      ops[i] = ops.back();
      ops.pop_back();
    }
    if (!advanced) break;
  }
  return g;
}

std::vector<PlaneGraph> Corpus::members() const {
  std::vector<PlaneGraph> out;
  for (const CorpusEntry& e : entries)
    if (e.member) out.push_back(PlaneGraph::build(e.doc));
  return out;
}

Corpus filter_class(const std::vector<PlaneGraph>& graphs,
                    const NonadjacencySpec& spec) {
  Corpus c;
  int idx = 0;
  for (const PlaneGraph& g : graphs) {
    auto verdict = check_class(g, spec);
    std::ostringstream name;
    name << 'g' << std::setw(4) << std::setfill('0') << ++idx << ".pgr";
    c.entries.push_back({g.to_doc(), name.str(), g.vertex_count(),
                         g.edge_count(), verdict.member,
                         class_witness(verdict), 0});
  }
  return c;
}

void save_corpus(const Corpus& c, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  std::ofstream manifest(fs::path(dir) / "manifest.tsv");
  if (!manifest)
    throw Error(Errc::SyntaxError, "cannot write " + dir + "/manifest.tsv");
  for (const CorpusEntry& e : c.entries) {
    std::ofstream out(fs::path(dir) / e.name);
    if (!out) throw Error(Errc::SyntaxError, "cannot write " + dir + "/" + e.name);
    out << serialize_pgr(e.doc);
    manifest << e.name << '\t' << e.n << '\t' << e.m << '\t' << (e.member ? 1 : 0)
             << '\t' << e.witness << '\n';
  }
}

Corpus load_corpus(const std::string& dir, const NonadjacencySpec& spec) {
  namespace fs = std::filesystem;
  std::ifstream manifest(fs::path(dir) / "manifest.tsv");
  if (!manifest)
    throw Error(Errc::SyntaxError, "cannot read " + dir + "/manifest.tsv");
  Corpus c;
  std::string line;
  while (std::getline(manifest, line)) {
    if (line.empty()) continue;
    std::vector<std::string> col;
    size_t from = 0;
    while (col.size() < 4) {
      size_t tab = line.find('\t', from);
      if (tab == std::string::npos) break;
      col.push_back(line.substr(from, tab - from));
      from = tab + 1;
    }
    col.push_back(line.substr(from));
    if (col.size() != 5)
      throw Error(Errc::SyntaxError, "manifest row needs 5 columns: " + line);
    int n = 0, m = 0, member = 0;
    try {
      n = std::stoi(col[1]);
      m = std::stoi(col[2]);
      member = std::stoi(col[3]);
    } catch (const std::exception&) {
      throw Error(Errc::SyntaxError, "manifest row has bad numbers: " + line);
    }
    if (member != 0 && member != 1)
      throw Error(Errc::SyntaxError, "manifest member flag must be 0 or 1");

    std::ifstream in(fs::path(dir) / col[0]);
    if (!in) throw Error(Errc::SyntaxError, "cannot read " + dir + "/" + col[0]);
    std::stringstream ss;
    ss << in.rdbuf();
    GraphDoc doc = parse_pgr(ss.str());
    PlaneGraph g = PlaneGraph::build(doc);
    if (g.vertex_count() != n || g.edge_count() != m)
      throw Error(Errc::GuardFailed, "manifest counts stale for " + col[0]);
    if (check_class(g, spec).member != (member == 1))
      throw Error(Errc::GuardFailed, "manifest member flag stale for " + col[0]);
    c.entries.push_back(
        {std::move(doc), col[0], n, m, member == 1, col[4], 0});
  }
  return c;
}

}  // namespace pg3
