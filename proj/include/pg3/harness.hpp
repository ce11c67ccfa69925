#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pg3/cycles.hpp"
#include "pg3/plane_graph.hpp"

namespace pg3 {

// One planarity-preserving construction move, acting inside a named face or
// on a named edge. Corners are face-walk positions, as in the growth
// surgeries.
struct GrowthOp {
  enum class Kind {
    AddVertexInFace,    // attach a new degree-1 vertex at a corner
    SplitFaceWithEdge,  // add an edge between two corners of one face
    SubdivideEdge,      // replace edge u-v by a length-2 path
  };
  Kind kind{};
  FaceId face = -1;
  int corner_a = -1;
  int corner_b = -1;
  VertexId u = -1;
  VertexId v = -1;
};

// Every op applicable to g whose result stays simple, in deterministic
// order: per face all corners, then all corner pairs, then all edges.
std::vector<GrowthOp> growth_ops(const PlaneGraph& g);

PlaneGraph apply(const GrowthOp& op, const PlaneGraph& g);

// Embedding identity: minimal lexicographic breadth-first walk signature
// over all starting darts, both spin directions. Equal exactly for
// isomorphic embeddings (reflections included); ignores which face is
// outer. Vertex count is capped at 250 by the byte encoding.
std::string canonical_code(const PlaneGraph& g);

// Every connected simple plane graph within bounds, each embedding once,
// grown from a single edge. Deterministic depth-first emission order.
void enumerate_plane_graphs(int n_max, int m_max,
                            const std::function<void(const PlaneGraph&)>& fn);

// As above, restricted to class members. Pruning at non-members is
// complete: membership is closed under subgraphs, so every member is
// reachable through members only.
void enumerate_class_members(int n_max, int m_max, const NonadjacencySpec& spec,
                             const std::function<void(const PlaneGraph&)>& fn);

// Random connected simple plane graph with exactly n vertices and m edges,
// grown from a single edge by seeded choices. Deterministic for a fixed
// seed. Throws BoundsInfeasible unless n >= 2 and n-1 <= m <= 3n-6 (m = 1
// for n = 2).
PlaneGraph random_plane_graph(int n, int m, std::uint64_t seed);

// Random class member grown the same way; n and m are ceilings, growth
// stops early when no op preserves membership. Deterministic for a fixed
// seed.
PlaneGraph random_class_member(int n, int m, std::uint64_t seed,
                               const NonadjacencySpec& spec);

// One catalogued graph: its document plus the metadata the manifest keeps.
struct CorpusEntry {
  GraphDoc doc;
  std::string name;     // filename without directory
  int n = 0;
  int m = 0;
  bool member = false;
  std::string witness;  // refusal reason, empty for members
  std::uint64_t seed = 0;  // provenance, 0 for enumerated graphs
};

struct Corpus {
  std::vector<CorpusEntry> entries;

  // Rebuilt graphs of the member entries, in entry order.
  std::vector<PlaneGraph> members() const;
};

// Catalogues every graph with its membership verdict; rejects stay in the
// corpus carrying their witness. Names are g0001, g0002, ... in input
// order.
Corpus filter_class(const std::vector<PlaneGraph>& graphs,
                    const NonadjacencySpec& spec);

// Writes dir/<name> per entry plus dir/manifest.tsv with columns
// filename, n, m, member, witness. Creates dir if needed.
void save_corpus(const Corpus& c, const std::string& dir);

// Reads a saved corpus back, re-validating every entry: the file must
// parse and build, and counts and membership must match the manifest.
// Throws SyntaxError for unreadable input, GuardFailed for stale rows.
Corpus load_corpus(const std::string& dir, const NonadjacencySpec& spec);

}  // namespace pg3
