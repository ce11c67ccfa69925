#include "pg3/coloring.hpp"

#include <bit>
#include <string>

#include "pg3/error.hpp"

namespace pg3 {

namespace {

constexpr int kAllColors = 0b111;

int color_bit(int c) { return 1 << (c - 1); }

// Pads or trims partial to n entries and rejects colors outside 0..3.
Coloring normalize(const Coloring& partial, int n) {
  Coloring c = partial;
  c.color.resize(n, 0);
  for (VertexId v = 0; v < n; ++v)
    if (c[v] < 0 || c[v] > 3)
      throw Error(Errc::ImproperPrecoloring,
                  "vertex " + std::to_string(v + 1) + " color " +
                      std::to_string(c[v]) + " not in 0..3");
  return c;
}

// Picks the uncolored vertex with the fewest remaining colors (lowest id on
// ties), tries each, and prunes when a neighbor's domain empties.
bool search(const PlaneGraph& g, std::vector<int>& color,
            std::vector<int>& domain, int left) {
  if (left == 0) return true;
  int v = -1;
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    if (color[u] == 0 &&
        (v < 0 || std::popcount(static_cast<unsigned>(domain[u])) <
                      std::popcount(static_cast<unsigned>(domain[v]))))
      v = u;
  for (int c = 1; c <= 3; ++c) {
    if (!(domain[v] & color_bit(c))) continue;
    color[v] = c;
    std::vector<std::pair<VertexId, int>> trail;
    bool wiped = false;
    for (VertexId u : g.neighbors(v)) {
      if (color[u] != 0 || !(domain[u] & color_bit(c))) continue;
      trail.emplace_back(u, domain[u]);
      domain[u] &= ~color_bit(c);
      if (domain[u] == 0) {
        wiped = true;
        break;
      }
    }
    if (!wiped && search(g, color, domain, left - 1)) return true;
    for (const auto& [u, saved] : trail) domain[u] = saved;
    color[v] = 0;
  }
  return false;
}

// Exhaustive id-order branching; each assignment is checked against every
// currently colored neighbor, nothing else.
long long count_from(const PlaneGraph& g, Coloring& c, VertexId v) {
  while (v < g.vertex_count() && c[v] != 0) ++v;
  if (v == g.vertex_count()) return 1;
  long long total = 0;
  for (int k = 1; k <= 3; ++k) {
    bool clash = false;
    for (VertexId u : g.neighbors(v)) clash = clash || c[u] == k;
    if (clash) continue;
    c[v] = k;
    total += count_from(g, c, v + 1);
    c[v] = 0;
  }
  return total;
}

}  // namespace

bool Coloring::total() const {
  for (int c : color)
    if (c == 0) return false;
  return true;
}

std::optional<std::pair<VertexId, VertexId>> verify(const PlaneGraph& g,
                                                    const Coloring& c) {
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (v >= c.size() || c[v] == 0)
      throw Error(Errc::UncoloredVertex,
                  "vertex " + std::to_string(v + 1) + " has no color");
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (VertexId u : g.neighbors(v))
      if (u > v && c[u] == c[v]) return std::make_pair(v, u);
  return std::nullopt;
}

bool proper_so_far(const PlaneGraph& g, const Coloring& c) {
  for (VertexId v = 0; v < g.vertex_count() && v < c.size(); ++v) {
    if (c[v] == 0) continue;
    for (VertexId u : g.neighbors(v))
      if (u > v && u < c.size() && c[u] == c[v]) return false;
  }
  return true;
}

std::optional<Coloring> exact_3color(const PlaneGraph& g,
                                     const Coloring& partial) {
  const int n = g.vertex_count();
  Coloring c = normalize(partial, n);
  if (!proper_so_far(g, c)) return std::nullopt;

  std::vector<int> domain(n, kAllColors);
  int left = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (c[v] != 0) continue;
    ++left;
    for (VertexId u : g.neighbors(v))
      if (c[u] != 0) domain[v] &= ~color_bit(c[u]);
    if (domain[v] == 0) return std::nullopt;
  }
  if (!search(g, c.color, domain, left)) return std::nullopt;
  return c;
}

long long count_3colorings(const PlaneGraph& g, const Coloring& partial) {
  Coloring c = normalize(partial, g.vertex_count());
  if (!proper_so_far(g, c)) return 0;
  return count_from(g, c, 0);
}

long long for_each_proper_coloring_of_subset(
    const PlaneGraph& g, const std::vector<VertexId>& verts,
    const std::function<bool(const Coloring&)>& fn) {
  Coloring c(g.vertex_count());
  long long seen = 0;
  bool stop = false;

  // Lexicographic along verts: position i branches only after 0..i-1 are set.
  auto step = [&](auto&& self, std::size_t i) -> void {
    if (stop) return;
    if (i == verts.size()) {
      ++seen;
      if (!fn(c)) stop = true;
      return;
    }
    const VertexId v = verts[i];
    for (int k = 1; k <= 3 && !stop; ++k) {
      bool clash = false;
      for (std::size_t j = 0; j < i; ++j)
        clash = clash || (c[verts[j]] == k && g.adjacent(verts[j], v));
      if (clash) continue;
      c[v] = k;
      self(self, i + 1);
      c[v] = 0;
    }
  };
  step(step, 0);
  return seen;
}

}  // namespace pg3
