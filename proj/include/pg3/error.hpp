// Error codes shared by every pg3 module.
#pragma once

#include <stdexcept>
#include <string>

namespace pg3 {

enum class Errc {
  // parsing / construction
  SyntaxError,
  LoopEdge,
  AsymmetricAdjacency,
  EulerViolation,
  BadOuterMarker,
  // surgeries
  AdjacentEndpoints,
  NotOnCommonFace,
  Disconnects,
  DeletesAll,
  NotOnFace,
  // cycle analysis
  MultigraphUnsupported,
  VertexNotInterior,
  VertexNotOnCycle,
  InvalidCycle,
  OuterFace,
  // coloring / reductions
  NotInClass,
  OuterTooLarge,
  ImproperPrecoloring,
  UncoloredVertex,
  GuardFailed,
  PullBackImproper,
  LemmaFalsified,
  ColoringFailed,
  // harness
  BoundsInfeasible,
};

const char* errc_name(Errc c);

// Single exception type; code() tells callers which contract broke.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

}  // namespace pg3
