#include "bitwist/surgery.hpp"

#include <algorithm>

#include "bitwist/errors.hpp"

namespace bitwist {

std::string CurveId::to_string() const {
  const char* prefix = kind == CurveKind::kO ? "O" : kind == CurveKind::kL ? "L" : "M";
  return prefix + std::to_string(level);
}

const SurgeryCurve& ChainDiagram::curve(CurveId id) const {
  if (id.level >= levels_.size()) throw MalformedState("no curve " + id.to_string());
  const ChainLevel& lv = levels_[id.level];
  return id.kind == CurveKind::kO ? lv.o : id.kind == CurveKind::kL ? lv.l : lv.m;
}

SurgeryCurve& ChainDiagram::curve(CurveId id) {
  return const_cast<SurgeryCurve&>(std::as_const(*this).curve(id));
}

bool ChainDiagram::is_empty() const {
  return std::none_of(levels_.begin(), levels_.end(), [](const ChainLevel& lv) {
    return lv.o.present || lv.l.present || lv.m.present;
  });
}

std::size_t ReductionTrace::twist_count() const {
  return static_cast<std::size_t>(std::count_if(
      moves.begin(), moves.end(), [](const Move& m) { return m.kind == Move::Kind::kTwist; }));
}

namespace surgery {
namespace {

CurveId O(std::size_t j) { return {CurveKind::kO, j}; }
CurveId L(std::size_t j) { return {CurveKind::kL, j}; }
CurveId M(std::size_t j) { return {CurveKind::kM, j}; }

// r + n for a linked curve with linking number +-1.
ProjectiveFraction add_integer(const ProjectiveFraction& r, const Integer& n) {
  if (r.is_infinite()) return r;
  return ProjectiveFraction(r.num() + n * r.den(), r.den());
}

// Performs and records moves on a working copy of the diagram.
class Reducer {
 public:
  explicit Reducer(ChainDiagram diagram) : diagram_(std::move(diagram)) {}

  void twist(CurveId id, const Integer& n, const std::vector<CurveId>& linked) {
    SurgeryCurve& target = live(id);
    Move move;
    move.kind = Move::Kind::kTwist;
    move.curve = id;
    move.twist = n;
    const ProjectiveFraction after = rolfsen_twist(target.coeff, n);
    move.updates.push_back({id, target.coeff, after});
    target.coeff = after;
    for (const CurveId& other : linked) {
      SurgeryCurve& c = live(other);
      const ProjectiveFraction updated = add_integer(c.coeff, n);
      move.updates.push_back({other, c.coeff, updated});
      c.coeff = updated;
    }
    if (!target.coeff.is_infinite()) {
      throw MalformedState(id.to_string() + " did not reach coefficient infinity");
    }
    target.present = false;
    trace_.moves.push_back(std::move(move));
  }

  void remove(CurveId id) {
    SurgeryCurve& target = live(id);
    if (!target.coeff.is_infinite()) {
      throw MalformedState(id.to_string() + " removed with finite coefficient");
    }
    target.present = false;
    Move move;
    move.kind = Move::Kind::kRemove;
    move.curve = id;
    trace_.moves.push_back(std::move(move));
  }

  void record_tangle(const Integer& term) {
    diagram_.tangle().terms.push_back(term);
    trace_.moves.back().tangle_delta = term;
  }

  bool tangle_started() const { return !diagram_.tangle().terms.empty(); }
  const ChainDiagram& diagram() const { return diagram_; }
  ReductionTrace& trace() { return trace_; }

 private:
  SurgeryCurve& live(CurveId id) {
    SurgeryCurve& c = diagram_.curve(id);
    if (!c.present) throw MalformedState("move on removed curve " + id.to_string());
    return c;
  }

  ChainDiagram diagram_;
  ReductionTrace trace_;
};

}  // namespace

ChainDiagram build_chain(const MultiplierFunction& mf) {
  std::vector<ChainLevel> levels;
  levels.reserve(mf.levels());
  for (std::size_t j = 0; j < mf.levels(); ++j) {
    ChainLevel lv;
    lv.o.coeff = ProjectiveFraction(0, 1);
    lv.l.coeff = ProjectiveFraction(1, mf.lat()[j]);
    lv.m.coeff = ProjectiveFraction(1, static_cast<long>(mf.lon()[j]));
    levels.push_back(lv);
  }
  return ChainDiagram(std::move(levels));
}

ProjectiveFraction rolfsen_twist(const ProjectiveFraction& coeff, const Integer& n) {
  if (coeff.is_infinite()) return coeff;
  return ProjectiveFraction(coeff.num(), coeff.den() + n * coeff.num());
}

Reduction reduce(const ChainDiagram& diagram) {
  if (diagram.levels().empty()) throw MalformedState("diagram has no levels");
  if (!diagram.tangle().terms.empty()) throw MalformedState("diagram already carries a tangle");

  // Read the multipliers back off the initial coefficients.
  std::vector<Integer> lat, lon;
  for (const ChainLevel& lv : diagram.levels()) {
    const bool fresh = lv.o.present && lv.l.present && lv.m.present && lv.o.coeff == 0 &&
                       lv.l.coeff.den() == 1 && abs(lv.l.coeff.num()) == 1 &&
                       abs(lv.m.coeff.num()) == 1;
    if (!fresh) throw MalformedState("diagram is not freshly built");
    lat.push_back(lv.l.coeff.num());
    // 1/m is stored as sign(m)/|m|, and 1/0 as infinity.
    lon.push_back(lv.m.coeff.num() * lv.m.coeff.den());
  }

  Reducer r(diagram);
  for (std::size_t j = diagram.levels().size(); j-- > 0;) {
    // M_j encircles two axis strands and no other surgery curve.
    if (lon[j] == 0) {
      r.remove(M(j));
      if (r.tangle_started()) r.record_tangle(0);
    } else {
      r.twist(M(j), -lon[j], {});
      r.record_tangle(-2 * lon[j]);
    }

    // While the tangle is still empty these two twists leave the axis alone.
    const bool affects_axis = r.tangle_started();
    std::vector<CurveId> o_pair{O(j)};
    if (j > 0) o_pair.push_back(O(j - 1));
    r.twist(L(j), -lat[j], o_pair);
    std::vector<CurveId> below;
    if (j > 0) below.push_back(O(j - 1));
    r.twist(O(j), lat[j], below);
    if (affects_axis) r.record_tangle(-2 * lat[j]);
  }

  if (!r.diagram().is_empty()) throw MalformedState("reduction left curves behind");
  return {r.diagram().tangle(), std::move(r.trace()), r.diagram()};
}

ChainDiagram replay(const ChainDiagram& initial, const ReductionTrace& trace) {
  ChainDiagram state = initial;
  for (const Move& move : trace.moves) {
    SurgeryCurve& target = state.curve(move.curve);
    if (!target.present) throw MalformedState("replay acts on removed " + move.curve.to_string());
    if (move.kind == Move::Kind::kTwist) {
      if (move.updates.empty() || !(move.updates.front().curve == move.curve) ||
          !(move.updates.front().after == rolfsen_twist(target.coeff, move.twist))) {
        throw MalformedState("recorded twist on " + move.curve.to_string() +
                             " disagrees with the Rolfsen rule");
      }
      for (const CoefficientUpdate& u : move.updates) {
        SurgeryCurve& c = state.curve(u.curve);
        if (!c.present || !(c.coeff == u.before)) {
          throw MalformedState("recorded coefficient of " + u.curve.to_string() + " is stale");
        }
        c.coeff = u.after;
      }
    }
    if (!target.coeff.is_infinite()) {
      throw MalformedState(move.curve.to_string() + " removed with finite coefficient");
    }
    target.present = false;
    if (move.tangle_delta) state.tangle().terms.push_back(*move.tangle_delta);
  }
  return state;
}

ProjectiveFraction denominator_fraction(const TangleCF& tangle) {
  if (tangle.terms.empty()) throw DivisionUndefined("empty tangle: the axis is the unknot");
  std::vector<Integer> outermost_first(tangle.terms.rbegin(), tangle.terms.rend());
  return cfrac::eval_cf(std::span<const Integer>(outermost_first)).reciprocal();
}

ProjectiveFraction closure_fraction(const TangleCF& tangle) {
  const ProjectiveFraction cd = denominator_fraction(tangle);
  if (cd.num() == 0) throw DivisionUndefined("denominator closure numerator is 0: unknot");
  return ProjectiveFraction(-cd.den(), cd.num());
}

}  // namespace surgery
}  // namespace bitwist
