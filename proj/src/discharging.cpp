#include "pg3/discharging.hpp"

#include <sstream>

namespace pg3 {

Charge ChargeState::total() const {
  Charge sum = 0;
  for (const Charge& q : vertex) sum += q;
  for (const Charge& q : face) sum += q;
  return sum;
}

ChargeState initial_charges(const PlaneGraph& g) {
  ChargeState st;
  st.vertex.reserve(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    st.vertex.emplace_back(g.degree(v) - 4);
  if (g.face_count() == 0) {
    st.face.emplace_back(4);  // lone vertex: the one face has degree 0
    return st;
  }
  st.face.reserve(g.face_count());
  for (FaceId f = 0; f < g.face_count(); ++f)
    st.face.emplace_back(g.is_inner_face(f) ? g.face_degree(f) - 4
                                            : g.face_degree(f) + 4);
  return st;
}

namespace {

// Corner faces of v in rotation order; corner i sits between out-darts
// i-1 and i, so the face opposite corner i at a degree-4 vertex is corner
// (i+2) % 4 and the adjacent ones are (i+1) % 4 and (i+3) % 4.
std::vector<FaceId> corner_faces(const PlaneGraph& g, VertexId v) {
  std::vector<FaceId> out;
  out.reserve(g.degree(v));
  for (DartId d : g.out_darts(v)) out.push_back(g.face_of(d));
  return out;
}

}  // namespace

std::pair<ChargeState, std::vector<Transfer>> apply_rules(
    const PlaneGraph& g, const ChargeState& initial,
    const DischargeOptions& opts) {
  std::vector<Transfer> ledger;
  auto emit = [&ledger](const char* rule, EntityRef from, EntityRef to,
                        Charge amount) {
    ledger.push_back({rule, from, to, std::move(amount)});
  };

  if (g.face_count() > 0) {
    const FaceId outer = g.outer_face();

    for (FaceId f = 0; f < g.face_count(); ++f) {
      if (f == outer || g.face_degree(f) != 3) continue;
      for (DartId d : g.face_walk(f))
        emit("R1", vertex_ref(g.dart(d).tail), face_ref(f), Charge(1, 3));
    }

    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      const std::vector<FaceId> corners = corner_faces(g, v);
      const int deg = g.degree(v);

      if (deg == 5)
        for (FaceId f : corners)
          if (g.face_degree(f) >= 7)
            emit("R2", vertex_ref(v), face_ref(f), Charge(1, 15));
      if (deg >= 6)
        for (FaceId f : corners)
          emit("R3", vertex_ref(v), face_ref(f), Charge(1, 3));

      if (!g.on_outer(v)) {
        if (deg == 3) {
          bool has3 = false, has5 = false;
          for (FaceId f : corners) {
            has3 = has3 || g.face_degree(f) == 3;
            has5 = has5 || g.face_degree(f) == 5;
          }
          if (has3)
            for (FaceId f : corners)
              if (g.face_degree(f) != 3)
                emit("R4a", face_ref(f), vertex_ref(v), Charge(2, 3));
          if (has5)
            for (FaceId f : corners)
              emit("R4b", face_ref(f), vertex_ref(v),
                   g.face_degree(f) == 5 ? Charge(1, 5) : Charge(2, 5));
          if (!has3 && !has5)
            for (FaceId f : corners)
              emit("R4c", face_ref(f), vertex_ref(v), Charge(1, 3));
        } else if (deg == 4) {
          int count3 = 0, i3 = -1;
          bool has5 = false;
          for (int i = 0; i < 4; ++i) {
            if (g.face_degree(corners[i]) == 3) { ++count3; i3 = i; }
            has5 = has5 || g.face_degree(corners[i]) == 5;
          }
          if (count3 == 1 && !has5) {
            emit("R4d", face_ref(corners[(i3 + 2) % 4]), vertex_ref(v),
                 Charge(1, 3));
          } else if (count3 == 1 && has5) {
            emit("R4e", face_ref(corners[(i3 + 1) % 4]), vertex_ref(v),
                 Charge(1, 15));
            if (opts.r4e == R4eAdjacent::Both)
              emit("R4e", face_ref(corners[(i3 + 3) % 4]), vertex_ref(v),
                   Charge(1, 15));
            for (FaceId f : corners)
              if (g.face_degree(f) == 5)
                emit("R4e", face_ref(f), vertex_ref(v), Charge(1, 5));
          } else if (count3 == 2) {
            for (FaceId f : corners)
              if (g.face_degree(f) != 3)
                emit("R4f", face_ref(f), vertex_ref(v), Charge(1, 3));
          } else if (count3 == 0 && has5) {
            for (FaceId f : corners)
              if (g.face_degree(f) == 5)
                emit("R4g", face_ref(f), vertex_ref(v), Charge(1, 5));
            const int cut = opts.r4g == R4gTarget::SevenPlus ? 7 : 5;
            for (FaceId f : corners)
              if (g.face_degree(f) >= cut)
                emit("R4g", vertex_ref(v), face_ref(f), Charge(1, 15));
          }
        }
      } else {
        if (deg == 2) {
          // An outer vertex keeps at least one corner on the outer face,
          // so a degree-2 vertex has at most one inner corner.
          FaceId fi = -1;
          for (FaceId f : corners)
            if (f != outer) fi = f;
          if (fi >= 0) {
            const int fd = g.face_degree(fi);
            if (fd == 5) {
              emit("R5a", face_ref(fi), vertex_ref(v), Charge(3, 5));
              emit("R5a", face_ref(outer), vertex_ref(v), Charge(7, 5));
            } else if (fd >= 7) {
              emit("R5b", face_ref(fi), vertex_ref(v), Charge(2, 3));
              emit("R5b", face_ref(outer), vertex_ref(v), Charge(4, 3));
            }
            // inner face of degree 3, 4, or 6: no rule; audit() notes it
          }
        } else if (deg == 3) {
          emit("R5c", face_ref(outer), vertex_ref(v), Charge(4, 3));
        } else if (deg == 4) {
          emit("R5d", face_ref(outer), vertex_ref(v), Charge(2, 3));
        }
      }
    }
  }

  ChargeState out = initial;
  for (const Transfer& t : ledger) {
    Charge& from = t.from.is_face ? out.face[t.from.id] : out.vertex[t.from.id];
    Charge& to = t.to.is_face ? out.face[t.to.id] : out.vertex[t.to.id];
    from -= t.amount;
    to += t.amount;
  }
  return {std::move(out), std::move(ledger)};
}

AuditReport audit(const PlaneGraph& g, const DischargeOptions& opts) {
  AuditReport r;
  r.initial = initial_charges(g);
  auto [after, ledger] = apply_rules(g, r.initial, opts);
  r.final = std::move(after);
  r.ledger = std::move(ledger);

  for (size_t v = 0; v < r.final.vertex.size(); ++v)
    if (r.final.vertex[v] < 0) r.negatives.push_back(vertex_ref(static_cast<VertexId>(v)));
  for (size_t f = 0; f < r.final.face.size(); ++f)
    if (r.final.face[f] < 0) r.negatives.push_back(face_ref(static_cast<FaceId>(f)));

  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!g.on_outer(v)) continue;
    const int deg = g.degree(v);
    if (deg == 2) {
      FaceId fi = -1;
      for (DartId d : g.out_darts(v))
        if (g.face_of(d) != g.outer_face()) fi = g.face_of(d);
      if (fi < 0)
        r.notes.push_back("vertex " + std::to_string(v + 1) +
                          " outer degree 2 with no inner face: no R5 rule");
      else if (const int fd = g.face_degree(fi); fd == 3 || fd == 4 || fd == 6)
        r.notes.push_back("vertex " + std::to_string(v + 1) +
                          " outer degree 2 with inner face of degree " +
                          std::to_string(fd) + ": no R5 rule");
    } else if (deg < 2 || deg > 4) {
      r.notes.push_back("vertex " + std::to_string(v + 1) + " outer degree " +
                        std::to_string(deg) + ": no R5 rule");
    }
  }
  return r;
}

std::vector<Transfer> firings_affecting(const AuditReport& report,
                                        EntityRef e) {
  std::vector<Transfer> out;
  for (const Transfer& t : report.ledger)
    if (t.from == e || t.to == e) out.push_back(t);
  return out;
}

namespace {

std::string entity_name(EntityRef e) {
  return e.is_face ? "face " + std::to_string(e.id)
                   : "vertex " + std::to_string(e.id + 1);
}

}  // namespace

std::string to_text(const PlaneGraph& g, const AuditReport& report,
                    bool with_ledger) {
  std::ostringstream os;
  os << "total initial " << report.initial.total() << "\n";
  os << "total final " << report.final.total() << "\n";
  for (size_t v = 0; v < report.initial.vertex.size(); ++v) {
    os << "vertex " << v + 1 << " initial " << report.initial.vertex[v]
       << " final " << report.final.vertex[v];
    if (report.final.vertex[v] < 0) os << " negative";
    os << "\n";
  }
  for (size_t f = 0; f < report.initial.face.size(); ++f) {
    os << "face " << f << " initial " << report.initial.face[f] << " final "
       << report.final.face[f];
    if (g.face_count() == 0 || static_cast<FaceId>(f) == g.outer_face())
      os << " outer";
    if (report.final.face[f] < 0) os << " negative";
    os << "\n";
  }
  if (with_ledger)
    for (const Transfer& t : report.ledger)
      os << t.rule << " " << entity_name(t.from) << " " << entity_name(t.to)
         << " " << t.amount << "\n";
  for (const std::string& note : report.notes) os << "note " << note << "\n";
  return os.str();
}

}  // namespace pg3
