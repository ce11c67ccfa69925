// Exact-rational discharging. Initial charges w(v) = deg(v) - 4,
// w(f) = deg(f) - 4 for inner faces, w(f0) = deg(f0) + 4; the rules R1-R5
// move charge in one simultaneous pass whose guards read the graph only.
// Totals are conserved exactly. Negative final charges are informative on
// arbitrary graphs; the theorems forbid them on a minimal counterexample.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pg3/plane_graph.hpp"

namespace pg3 {

// Every amount the rules move is a multiple of 1/15.
using Charge = boost::multiprecision::cpp_rational;

struct EntityRef {
  bool is_face = false;
  int id = -1;

  friend bool operator==(const EntityRef&, const EntityRef&) = default;
};

inline EntityRef vertex_ref(VertexId v) { return {false, v}; }
inline EntityRef face_ref(FaceId f) { return {true, f}; }

// One rule firing; a rule fires once per (entity, counterpart) incidence.
struct Transfer {
  std::string rule;  // R1, R2, R3, R4a..R4g, R5a..R5d
  EntityRef from;
  EntityRef to;
  Charge amount;  // > 0
};

// Charges indexed by vertex and face id. An edgeless graph carries one
// virtual entry for its degree-0 outer face so totals still balance.
struct ChargeState {
  std::vector<Charge> vertex;
  std::vector<Charge> face;

  Charge total() const;
};

// R4g's send clause reads "each incident 5+-face", yet the same clause has
// those 5-faces paying the vertex. Default sends to 7+-faces only
// (mirroring R2); FivePlus keeps the literal reading auditable.
enum class R4gTarget { SevenPlus, FivePlus };

// R4e's "the incident face adjacent to the 3-face" names two corners at a
// degree-4 vertex. Default charges both; Single charges one of them.
enum class R4eAdjacent { Both, Single };

struct DischargeOptions {
  R4gTarget r4g = R4gTarget::SevenPlus;
  R4eAdjacent r4e = R4eAdjacent::Both;
};

ChargeState initial_charges(const PlaneGraph& g);

// One pass from `initial`. Ledger order: R1 by face id ascending, then
// R2-R5 grouped by vertex id ascending; deterministic for a given graph.
std::pair<ChargeState, std::vector<Transfer>> apply_rules(
    const PlaneGraph& g, const ChargeState& initial,
    const DischargeOptions& opts = {});

struct AuditReport {
  ChargeState initial;
  ChargeState final;
  std::vector<Transfer> ledger;
  std::vector<EntityRef> negatives;       // final charge < 0, vertices then faces
  std::vector<std::string> notes;         // entity situations no rule covers
};

AuditReport audit(const PlaneGraph& g, const DischargeOptions& opts = {});

// Ledger entries touching `e`, in ledger order.
std::vector<Transfer> firings_affecting(const AuditReport& report, EntityRef e);

// Totals, entity lines (`vertex <id> initial <q> final <q>` with trailing
// `negative` / `outer` markers), ledger lines (`rule from to amount`), then
// notes. Vertex ids are 1-based as in pgr files; face ids are 0-based.
std::string to_text(const PlaneGraph& g, const AuditReport& report,
                    bool with_ledger = true);

}  // namespace pg3
