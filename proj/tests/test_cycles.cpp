#include "pg3/cycles.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <string>

#include "doctest.h"

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

int count_of_length(const std::vector<Cycle>& cs, int len) {
  return static_cast<int>(std::count_if(cs.begin(), cs.end(),
                                        [&](const Cycle& c) { return c.length() == len; }));
}

}  // namespace

TEST_CASE("cycle enumeration counts") {
  SUBCASE("k4 has 4 triangles and 3 quadrilaterals") {
    PlaneGraph g = load("k4.pgr");
    CHECK(enumerate_cycles(g, 3).size() == 4);
    auto all = enumerate_cycles(g, 4);
    CHECK(all.size() == 7);
    CHECK(count_of_length(all, 4) == 3);
  }
  SUBCASE("cube has 6 quadrilaterals and 16 hexagons") {
    PlaneGraph g = load("cube.pgr");
    CHECK(enumerate_cycles(g, 4).size() == 6);
    auto all = enumerate_cycles(g, 7);
    CHECK(all.size() == 22);
    CHECK(count_of_length(all, 6) == 16);
    CHECK(count_of_length(all, 5) == 0);
  }
  SUBCASE("c5 is its only cycle") {
    PlaneGraph g = load("c5.pgr");
    CHECK(enumerate_cycles(g, 4).empty());
    CHECK(enumerate_cycles(g, 7).size() == 1);
  }
  SUBCASE("theta graph cycles appear as the cap admits") {
    PlaneGraph g = load("theta56.pgr");
    CHECK(enumerate_cycles(g, 7).size() == 2);
    CHECK(enumerate_cycles(g, 9).size() == 3);
  }
  SUBCASE("each cycle appears exactly once") {
    PlaneGraph g = load("cube.pgr");
    auto all = enumerate_cycles(g, 8);
    std::set<std::vector<VertexId>> keys;
    for (const Cycle& c : all) keys.insert(c.canonical_key());
    CHECK(keys.size() == all.size());
    CHECK(all.size() == 28);
  }
}

TEST_CASE("canonical key ignores rotation and reflection") {
  PlaneGraph g = load("c5.pgr");
  Cycle a = make_cycle(g, {0, 1, 2, 3, 4});
  Cycle b = make_cycle(g, {2, 3, 4, 0, 1});
  Cycle c = make_cycle(g, {3, 2, 1, 0, 4});
  CHECK(a.canonical_key() == b.canonical_key());
  CHECK(a.canonical_key() == c.canonical_key());
}

TEST_CASE("cycle validation") {
  PlaneGraph g = load("k4.pgr");
  CHECK(code_of([&] { make_cycle(g, {0, 1}); }) == Errc::InvalidCycle);
  CHECK(code_of([&] { make_cycle(g, {0, 1, 1}); }) == Errc::InvalidCycle);
  PlaneGraph c5 = load("c5.pgr");
  CHECK(code_of([&] { make_cycle(c5, {0, 1, 3}); }) == Errc::InvalidCycle);
  PlaneGraph multi = PlaneGraph::from_pgr("pgr 2 2\n1: 2 2\n2: 1 1\nouter: 1 2\n");
  CHECK(code_of([&] { enumerate_cycles(multi, 7); }) == Errc::MultigraphUnsupported);
}

TEST_CASE("shortest cycle") {
  CHECK(shortest_cycle(load("cube.pgr"))->length() == 4);
  CHECK(shortest_cycle(load("theta56.pgr"))->length() == 5);
  CHECK(shortest_cycle(load("k4.pgr"))->length() == 3);
  PlaneGraph path = PlaneGraph::from_pgr("pgr 3 2\n1: 2\n2: 1 3\n3: 2\nouter: 1 2\n");
  CHECK_FALSE(shortest_cycle(path).has_value());
}

TEST_CASE("chords") {
  PlaneGraph d = load("diamond.pgr");
  Cycle outer = make_cycle(d, d.outer_boundary());
  auto ch = chords(d, outer);
  REQUIRE(ch.size() == 1);
  CHECK(ch[0] == std::pair{0, 2});
  PlaneGraph c5 = load("c5.pgr");
  CHECK(chords(c5, make_cycle(c5, c5.outer_boundary())).empty());
}

TEST_CASE("nonadjacency spec") {
  NonadjacencySpec s = NonadjacencySpec::defaults();
  CHECK(s.lmax() == 7);
  CHECK(s.pairs().size() == 10);
  CHECK(s.forbids(3, 3));
  CHECK(s.forbids(7, 3));
  CHECK(s.forbids(5, 6));
  CHECK(s.forbids(6, 5));
  CHECK_FALSE(s.forbids(5, 7));
  CHECK_FALSE(s.forbids(4, 7));
  CHECK_FALSE(s.forbids(6, 6));

  NonadjacencySpec p = NonadjacencySpec::parse("3-3,6-5");
  CHECK(p.forbids(5, 6));
  CHECK(p.forbids(3, 3));
  CHECK_FALSE(p.forbids(3, 4));
  CHECK(p.lmax() == 6);
  CHECK(NonadjacencySpec::parse("default").pairs() == s.pairs());
  CHECK(code_of([] { NonadjacencySpec::parse("banana"); }) == Errc::SyntaxError);
  CHECK(code_of([] { NonadjacencySpec::parse("2-5"); }) == Errc::SyntaxError);
}

TEST_CASE("class membership") {
  NonadjacencySpec spec = NonadjacencySpec::defaults();
  SUBCASE("graphs with one cycle or none are members") {
    CHECK(check_class(load("triangle.pgr"), spec).member);
    CHECK(check_class(load("c5.pgr"), spec).member);
    PlaneGraph path = PlaneGraph::from_pgr("pgr 3 2\n1: 2\n2: 1 3\n3: 2\nouter: 1 2\n");
    CHECK(check_class(path, spec).member);
  }
  SUBCASE("k4 and the cube fail with a genuine witness") {
    for (const char* name : {"k4.pgr", "cube.pgr"}) {
      CAPTURE(name);
      PlaneGraph g = load(name);
      ClassVerdict v = check_class(g, spec);
      CHECK_FALSE(v.member);
      CHECK(spec.forbids(v.len1, v.len2));
      CHECK(static_cast<int>(v.cycle1.size()) == v.len1);
      CHECK(static_cast<int>(v.cycle2.size()) == v.len2);
      CHECK(make_cycle(g, v.cycle1).has_edge(v.shared_edge.first, v.shared_edge.second));
      CHECK(make_cycle(g, v.cycle2).has_edge(v.shared_edge.first, v.shared_edge.second));
    }
  }
  SUBCASE("theta 5-6 fails exactly on the hub edge") {
    ClassVerdict v = check_class(load("theta56.pgr"), spec);
    CHECK_FALSE(v.member);
    CHECK(v.len1 == 5);
    CHECK(v.len2 == 6);
    CHECK(v.shared_edge == std::pair{0, 1});
  }
  SUBCASE("theta 5-7 is a member") {
    CHECK(check_class(load("theta57.pgr"), spec).member);
  }
  SUBCASE("a custom spec flips the verdict") {
    NonadjacencySpec only56 = NonadjacencySpec::parse("5-6");
    CHECK(check_class(load("k4.pgr"), only56).member);
    CHECK_FALSE(check_class(load("theta56.pgr"), only56).member);
  }
}

TEST_CASE("cycle sides") {
  PlaneGraph w5 = load("w5.pgr");
  Surgery grown = w5.grow_leaf(w5.outer_face(), 0);
  const PlaneGraph& g = grown.graph;
  Cycle rim = make_cycle(g, {0, 1, 2, 3, 4});

  SUBCASE("rim separates hub from leaf") {
    RegionPartition rp = region_partition(g, rim);
    CHECK(rp.interior[5]);
    CHECK(rp.exterior[6]);
    CHECK_FALSE(rp.interior[6]);
    for (VertexId v = 0; v < 5; ++v) {
      CHECK(rp.on_cycle[v]);
      CHECK_FALSE(rp.interior[v]);
      CHECK_FALSE(rp.exterior[v]);
    }
    CHECK(is_separating(g, rim));
  }
  SUBCASE("without the leaf the rim has an empty outside") {
    Cycle r2 = make_cycle(w5, {0, 1, 2, 3, 4});
    RegionPartition rp = region_partition(w5, r2);
    CHECK(rp.interior[5]);
    CHECK_FALSE(is_separating(w5, r2));
  }
  SUBCASE("facial cycles enclose nothing") {
    PlaneGraph cube = load("cube.pgr");
    Cycle inner = make_cycle(cube, {4, 5, 6, 7});
    RegionPartition rp = region_partition(cube, inner);
    for (VertexId v = 0; v < 4; ++v) CHECK(rp.exterior[v]);
    CHECK_FALSE(is_separating(cube, inner));
    CHECK(rp.interior_face[cube.face_of(cube.dart_between(4, 5))] +
              rp.interior_face[cube.face_of(cube.dart_between(5, 4))] ==
          1);
  }
  SUBCASE("contact counts") {
    CycleContact hub = neighbors_on_cycle(g, 5, rim);
    CHECK(hub.count == 5);
    CHECK(hub.consecutive);
    CycleContact leaf = neighbors_on_cycle(g, 6, rim);
    CHECK(leaf.count == 1);
    CHECK_FALSE(leaf.consecutive);
  }
}

TEST_CASE("alternating spokes touch the cycle without consecutive contact") {
  PlaneGraph g = PlaneGraph::from_pgr(
      "pgr 7 9\n1: 2 7 6\n2: 3 1\n3: 4 7 2\n4: 5 3\n5: 6 7 4\n6: 1 5\n7: 1 3 5\nouter: 1 2\n");
  CHECK(g.face_count() == 4);
  Cycle hex = make_cycle(g, {0, 1, 2, 3, 4, 5});
  CycleContact hub = neighbors_on_cycle(g, 6, hex);
  CHECK(hub.count == 3);
  CHECK_FALSE(hub.consecutive);
}

TEST_CASE("segments follow the stored orientation") {
  PlaneGraph c5 = load("c5.pgr");
  Cycle c = make_cycle(c5, {0, 1, 2, 3, 4});
  CHECK(segment(c, 0, 3) == std::vector<VertexId>{0, 1, 2, 3});
  CHECK(segment(c, 3, 0) == std::vector<VertexId>{3, 4, 0});
  CHECK(segment(c, 2, 2) == std::vector<VertexId>{2});
  CHECK(code_of([&] { segment(c, 0, 5); }) == Errc::VertexNotOnCycle);
}
