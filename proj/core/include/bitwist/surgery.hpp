#pragma once

// Rolfsen-twist reduction of the chain surgery diagram of a bi-twist
// manifold, tracking the rational tangle formed by the north-south axis.
//
// Level j carries three unknotted surgery curves:
//   O_j  coefficient 0, the handle curve,
//   L_j  coefficient 1/l_j, linking O_j and O_{j-1} (only O_0 when j = 0),
//   M_j  coefficient 1/m_j (infinite when m_j = 0), encircling two axis strands.
// Curves are removed in the order M_k, L_k, O_k, M_{k-1}, ..., O_0.

#include <optional>
#include <string>
#include <vector>

#include "bitwist/cfrac.hpp"

namespace bitwist {

enum class CurveKind { kO, kL, kM };

struct CurveId {
  CurveKind kind = CurveKind::kO;
  std::size_t level = 0;

  /// "O3", "L0", "M2"
  std::string to_string() const;
  friend bool operator==(const CurveId&, const CurveId&) = default;
};

struct SurgeryCurve {
  ProjectiveFraction coeff;
  bool present = true;

  friend bool operator==(const SurgeryCurve&, const SurgeryCurve&) = default;
};

struct ChainLevel {
  SurgeryCurve o;
  SurgeryCurve l;
  SurgeryCurve m;

  friend bool operator==(const ChainLevel&, const ChainLevel&) = default;
};

/// Twist counts accumulated on the axis, in the order they were made
/// (innermost first). Horizontal and vertical entries alternate once the
/// tangle has started.
struct TangleCF {
  std::vector<Integer> terms;

  friend bool operator==(const TangleCF&, const TangleCF&) = default;
};

class ChainDiagram {
 public:
  explicit ChainDiagram(std::vector<ChainLevel> levels) : levels_(std::move(levels)) {}

  /// levels()[j] is level j; the reduction walks them from the back.
  const std::vector<ChainLevel>& levels() const { return levels_; }
  const TangleCF& tangle() const { return tangle_; }

  const SurgeryCurve& curve(CurveId id) const;
  SurgeryCurve& curve(CurveId id);
  TangleCF& tangle() { return tangle_; }

  /// No surgery curve left: the manifold is S^3.
  bool is_empty() const;

  friend bool operator==(const ChainDiagram&, const ChainDiagram&) = default;

 private:
  std::vector<ChainLevel> levels_;
  TangleCF tangle_;
};

struct CoefficientUpdate {
  CurveId curve;
  ProjectiveFraction before;
  ProjectiveFraction after;
};

struct Move {
  enum class Kind { kTwist, kRemove };

  Kind kind = Kind::kTwist;
  CurveId curve;
  Integer twist;  // 0 for kRemove
  std::vector<CoefficientUpdate> updates;
  std::optional<Integer> tangle_delta;
};

struct ReductionTrace {
  std::vector<Move> moves;

  std::size_t twist_count() const;
};

struct Reduction {
  TangleCF tangle;
  ReductionTrace trace;
  ChainDiagram final_state;
};

namespace surgery {

/// O_j = 0, L_j = 1/l_j, M_j = 1/m_j (1/0 when m_j = 0).
ChainDiagram build_chain(const MultiplierFunction& mf);

/// p/q -> p/(q + n p), reduced; infinity stays infinity.
ProjectiveFraction rolfsen_twist(const ProjectiveFraction& coeff, const Integer& n);

/// Reduces a freshly built diagram to the empty diagram. Throws
/// MalformedState if the diagram is not in its initial state or a move
/// would act on a removed curve.
Reduction reduce(const ChainDiagram& diagram);

/// Re-applies every move of a trace to an initial diagram, checking each
/// recorded coefficient before it is overwritten. Throws MalformedState on
/// any mismatch.
ChainDiagram replay(const ChainDiagram& initial, const ReductionTrace& trace);

/// c/d = 1/[t_last, ..., t_first], the denominator closure of the axis
/// tangle. Throws DivisionUndefined when the tangle is empty.
ProjectiveFraction denominator_fraction(const TangleCF& tangle);

/// a/b = -d/c, the numerator-closure invariant of the axis knot. Throws
/// DivisionUndefined when c = 0 (the axis is the unknot).
ProjectiveFraction closure_fraction(const TangleCF& tangle);

}  // namespace surgery
}  // namespace bitwist
