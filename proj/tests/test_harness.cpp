#include "pg3/harness.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "pg3/error.hpp"

using namespace pg3;

namespace {

PlaneGraph load(const std::string& name) {
  std::ifstream in(std::string(PG3_FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  return PlaneGraph::from_pgr(
      std::string{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()});
}

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  REQUIRE(false);
  return Errc::SyntaxError;
}

GraphDoc relabel(const GraphDoc& doc, const std::vector<int>& perm) {
  GraphDoc out = doc;
  out.rot.assign(doc.n, {});
  for (int v = 0; v < doc.n; ++v)
    for (int w : doc.rot[v]) out.rot[perm[v]].push_back(perm[w - 1] + 1);
  out.outer_u = perm[doc.outer_u - 1] + 1;
  out.outer_v = perm[doc.outer_v - 1] + 1;
  return out;
}

GraphDoc mirror(GraphDoc doc) {
  for (auto& r : doc.rot) std::reverse(r.begin(), r.end());
  return doc;
}

std::vector<PlaneGraph> collect(int n_max, int m_max) {
  std::vector<PlaneGraph> out;
  enumerate_plane_graphs(n_max, m_max,
                         [&](const PlaneGraph& g) { out.push_back(g); });
  return out;
}

bool two_connected(const PlaneGraph& g) {
  if (g.vertex_count() < 3) return false;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    try {
      g.delete_vertices({v});
    } catch (const Error&) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("growth op arithmetic") {
  PlaneGraph g = load("theta57.pgr");
  auto ops = growth_ops(g);
  int leaves = 0, chords = 0, subdivisions = 0;
  for (const GrowthOp& op : ops) {
    PlaneGraph h = apply(op, g);
    CHECK(h.to_pgr() == PlaneGraph::from_pgr(h.to_pgr()).to_pgr());
    CHECK(h.edge_count() == g.edge_count() + 1);
    switch (op.kind) {
      case GrowthOp::Kind::AddVertexInFace:
        ++leaves;
        CHECK(h.vertex_count() == g.vertex_count() + 1);
        CHECK(h.degree(h.vertex_count() - 1) == 1);
        break;
      case GrowthOp::Kind::SplitFaceWithEdge:
        ++chords;
        CHECK(h.vertex_count() == g.vertex_count());
        CHECK(h.face_count() == g.face_count() + 1);
        break;
      case GrowthOp::Kind::SubdivideEdge:
        ++subdivisions;
        CHECK(h.vertex_count() == g.vertex_count() + 1);
        CHECK(h.degree(h.vertex_count() - 1) == 2);
        break;
    }
  }
  // one leaf per corner, one subdivision per edge
  CHECK(leaves == 2 * g.edge_count());
  CHECK(subdivisions == g.edge_count());
  CHECK(chords > 0);
}

TEST_CASE("canonical code") {
  SUBCASE("invariant under relabeling") {
    GraphDoc doc = load("theta57.pgr").to_doc();
    std::string code = canonical_code(PlaneGraph::build(doc));
    std::vector<int> rev(doc.n), rot(doc.n);
    for (int i = 0; i < doc.n; ++i) {
      rev[i] = doc.n - 1 - i;
      rot[i] = (i + 3) % doc.n;
    }
    CHECK(canonical_code(PlaneGraph::build(relabel(doc, rev))) == code);
    CHECK(canonical_code(PlaneGraph::build(relabel(doc, rot))) == code);
  }
  SUBCASE("invariant under reflection") {
    for (const char* name : {"theta57.pgr", "cube.pgr", "w5.pgr"}) {
      GraphDoc doc = load(name).to_doc();
      CHECK(canonical_code(PlaneGraph::build(mirror(doc))) ==
            canonical_code(PlaneGraph::build(doc)));
    }
  }
  SUBCASE("invariant under outer face choice") {
    PlaneGraph g = load("theta57.pgr");
    std::string code = canonical_code(g);
    for (FaceId f = 0; f < g.face_count(); ++f)
      CHECK(canonical_code(g.with_outer_face(f)) == code);
  }
  SUBCASE("separates non-isomorphic graphs") {
    CHECK(canonical_code(PlaneGraph::from_pgr(
              "pgr 5 4\n1: 2\n2: 1 3\n3: 2 4\n4: 3 5\n5: 4\nouter: 1 2\n")) !=
          canonical_code(PlaneGraph::from_pgr(
              "pgr 5 4\n1: 2 3 4 5\n2: 1\n3: 1\n4: 1\n5: 1\nouter: 1 2\n")));
    CHECK(canonical_code(load("k4.pgr")) != canonical_code(load("diamond.pgr")));
  }
  SUBCASE("separates distinct embeddings of one graph") {
    // triangle 1-2-3 with two pendants at 1: both pendants in one corner
    // wedge versus split across two wedges
    PlaneGraph a = PlaneGraph::from_pgr(
        "pgr 5 5\n1: 2 3 4 5\n2: 3 1\n3: 1 2\n4: 1\n5: 1\nouter: 1 4\n");
    PlaneGraph b = PlaneGraph::from_pgr(
        "pgr 5 5\n1: 2 4 3 5\n2: 3 1\n3: 1 2\n4: 1\n5: 1\nouter: 1 5\n");
    CHECK(canonical_code(a) != canonical_code(b));
  }
}

TEST_CASE("exhaustive enumeration") {
  SUBCASE("everything on up to three vertices") {
    auto all = collect(3, 3);
    REQUIRE(all.size() == 3);
    std::set<std::pair<int, int>> sizes;
    for (const PlaneGraph& g : all) sizes.insert({g.vertex_count(), g.edge_count()});
    CHECK(sizes == std::set<std::pair<int, int>>{{2, 1}, {3, 2}, {3, 3}});
  }
  SUBCASE("nine embeddings on up to four vertices") {
    auto all = collect(4, 6);
    CHECK(all.size() == 9);
    // the 2-connected graphs on four vertices: C4, the diamond, K4
    std::vector<int> m2c;
    for (const PlaneGraph& g : all)
      if (g.vertex_count() == 4 && two_connected(g)) m2c.push_back(g.edge_count());
    std::sort(m2c.begin(), m2c.end());
    CHECK(m2c == std::vector<int>{4, 5, 6});
  }
  SUBCASE("no duplicates, all valid") {
    std::set<std::string> codes;
    long long count = 0;
    enumerate_plane_graphs(5, 9, [&](const PlaneGraph& g) {
      ++count;
      CHECK(codes.insert(canonical_code(g)).second);
      CHECK(PlaneGraph::from_pgr(g.to_pgr()).to_pgr() == g.to_pgr());
    });
    CHECK(count == 34);
  }
  SUBCASE("census on up to six vertices") {
    auto spec = NonadjacencySpec::defaults();
    long long total = 0, members = 0;
    enumerate_plane_graphs(6, 12, [&](const PlaneGraph& g) {
      ++total;
      if (check_class(g, spec).member) ++members;
    });
    CHECK(total == 213);
    CHECK(members == 52);
    long long pruned = 0;
    enumerate_class_members(6, 12, spec, [&](const PlaneGraph& g) {
      ++pruned;
      CHECK(check_class(g, spec).member);
    });
    CHECK(pruned == members);
  }
}

TEST_CASE("random growth") {
  SUBCASE("seed determines the graph exactly") {
    PlaneGraph a = random_plane_graph(20, 30, 1);
    PlaneGraph b = random_plane_graph(20, 30, 1);
    CHECK(a.vertex_count() == 20);
    CHECK(a.edge_count() == 30);
    CHECK(a.to_pgr() == b.to_pgr());
    CHECK(a.to_pgr() != random_plane_graph(20, 30, 2).to_pgr());
  }
  SUBCASE("bounds are rejected up front") {
    CHECK(code_of([] { random_plane_graph(5, 10, 1); }) == Errc::BoundsInfeasible);
    CHECK(code_of([] { random_plane_graph(5, 3, 1); }) == Errc::BoundsInfeasible);
    CHECK(code_of([] { random_plane_graph(1, 0, 1); }) == Errc::BoundsInfeasible);
  }
  SUBCASE("members stay members across seeds") {
    auto spec = NonadjacencySpec::defaults();
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      PlaneGraph g = random_class_member(12, 14, seed, spec);
      CHECK(check_class(g, spec).member);
      CHECK(g.vertex_count() <= 12);
      CHECK(g.edge_count() <= 14);
      CHECK(g.to_pgr() == random_class_member(12, 14, seed, spec).to_pgr());
    }
  }
}

TEST_CASE("corpus filtering and disk round trip") {
  std::vector<PlaneGraph> graphs;
  graphs.push_back(load("c5.pgr"));
  graphs.push_back(load("diamond.pgr"));
  graphs.push_back(load("theta57.pgr"));
  auto spec = NonadjacencySpec::defaults();
  Corpus corpus = filter_class(graphs, spec);

  SUBCASE("members kept, rejects carry a witness") {
    REQUIRE(corpus.entries.size() == 3);
    CHECK(corpus.entries[0].name == "g0001.pgr");
    CHECK(corpus.entries[1].name == "g0002.pgr");
    CHECK(corpus.entries[2].name == "g0003.pgr");
    CHECK(corpus.entries[0].member);
    CHECK_FALSE(corpus.entries[1].member);
    CHECK(corpus.entries[2].member);
    CHECK(corpus.entries[0].witness.empty());
    CHECK(corpus.entries[1].witness == "cycles of lengths 3 and 3 share edge 1-3");
    auto members = corpus.members();
    REQUIRE(members.size() == 2);
    CHECK(members[0].vertex_count() == 5);
    CHECK(members[1].vertex_count() == 10);
  }

  SUBCASE("save and load agree") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "pg3_corpus_test";
    fs::remove_all(dir);
    save_corpus(corpus, dir.string());
    Corpus back = load_corpus(dir.string(), spec);
    REQUIRE(back.entries.size() == corpus.entries.size());
    for (size_t i = 0; i < back.entries.size(); ++i) {
      CHECK(back.entries[i].name == corpus.entries[i].name);
      CHECK(back.entries[i].n == corpus.entries[i].n);
      CHECK(back.entries[i].m == corpus.entries[i].m);
      CHECK(back.entries[i].member == corpus.entries[i].member);
      CHECK(back.entries[i].witness == corpus.entries[i].witness);
      CHECK(serialize_pgr(back.entries[i].doc) == serialize_pgr(corpus.entries[i].doc));
    }
    fs::remove_all(dir);
  }

  SUBCASE("stale member flag is refused") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "pg3_corpus_tamper";
    fs::remove_all(dir);
    save_corpus(corpus, dir.string());
    std::ifstream in(dir / "manifest.tsv");
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    in.close();
    size_t at = text.find("g0001.pgr\t5\t5\t1");
    REQUIRE(at != std::string::npos);
    text.replace(at, 15, "g0001.pgr\t5\t5\t0");
    std::ofstream(dir / "manifest.tsv") << text;
    CHECK(code_of([&] { load_corpus(dir.string(), spec); }) == Errc::GuardFailed);
    fs::remove_all(dir);
  }

  SUBCASE("missing directory is refused") {
    CHECK(code_of([&] { load_corpus("/nonexistent/pg3", spec); }) == Errc::SyntaxError);
  }
}
