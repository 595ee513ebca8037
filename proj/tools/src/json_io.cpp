#include "bitwist_cli/json_io.hpp"

#include <string>

#include "bitwist/errors.hpp"

namespace bitwist::cli {
namespace {

CurveId curve_from_json(const Json& j) {
  const std::string text = j.get<std::string>();
  if (text.size() < 2) throw MalformedInput("bad curve name " + text);
  CurveId id;
  switch (text[0]) {
    case 'O':
      id.kind = CurveKind::kO;
      break;
    case 'L':
      id.kind = CurveKind::kL;
      break;
    case 'M':
      id.kind = CurveKind::kM;
      break;
    default:
      throw MalformedInput("bad curve name " + text);
  }
  id.level = std::stoul(text.substr(1));
  return id;
}

}  // namespace

Json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw MalformedInput("expected an integer, got " + j.dump());
}

Json fraction_to_json(const ProjectiveFraction& x) { return x.to_string(); }

ProjectiveFraction fraction_from_json(const Json& j) {
  return ProjectiveFraction::parse(j.get<std::string>());
}

Json abelian_to_json(const AbelianInvariants& g) {
  Json torsion = Json::array();
  for (const Integer& d : g.torsion) torsion.push_back(integer_to_json(d));
  return Json{{"free_rank", g.free_rank}, {"torsion", torsion}};
}

AbelianInvariants abelian_from_json(const Json& j) {
  AbelianInvariants g;
  g.free_rank = j.at("free_rank").get<std::size_t>();
  for (const Json& d : j.at("torsion")) g.torsion.push_back(integer_from_json(d));
  return g;
}

Json polynomial_to_json(const LaurentPolynomial& p) {
  Json out = Json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = integer_to_json(c);
  return out;
}

LaurentPolynomial polynomial_from_json(const Json& j) {
  LaurentPolynomial::Terms terms;
  for (const auto& [e, c] : j.items()) terms[std::stoll(e)] = integer_from_json(c);
  return LaurentPolynomial(terms);
}

Json multipliers_to_json(const MultiplierFunction& mf) {
  return Json{{"lat", mf.lat()}, {"lon", mf.lon()}};
}

MultiplierFunction multipliers_from_json(const Json& j) {
  return MultiplierFunction(j.at("lat").get<std::vector<int>>(),
                            j.at("lon").get<std::vector<std::int64_t>>());
}

Json trace_to_json(const ReductionTrace& trace) {
  Json moves = Json::array();
  for (const Move& m : trace.moves) {
    Json move{{"kind", m.kind == Move::Kind::kTwist ? "twist" : "remove"},
              {"curve", m.curve.to_string()}};
    if (m.kind == Move::Kind::kTwist) {
      move["twist"] = integer_to_json(m.twist);
      Json updates = Json::array();
      for (const CoefficientUpdate& u : m.updates) {
        updates.push_back(Json{{"curve", u.curve.to_string()},
                               {"before", fraction_to_json(u.before)},
                               {"after", fraction_to_json(u.after)}});
      }
      move["updates"] = updates;
    }
    move["tangle_term"] = m.tangle_delta ? integer_to_json(*m.tangle_delta) : Json(nullptr);
    moves.push_back(std::move(move));
  }
  return moves;
}

ReductionTrace trace_from_json(const Json& j) {
  ReductionTrace trace;
  for (const Json& move : j) {
    Move m;
    const std::string kind = move.at("kind").get<std::string>();
    if (kind != "twist" && kind != "remove") throw MalformedInput("bad move kind " + kind);
    m.kind = kind == "twist" ? Move::Kind::kTwist : Move::Kind::kRemove;
    m.curve = curve_from_json(move.at("curve"));
    if (m.kind == Move::Kind::kTwist) {
      m.twist = integer_from_json(move.at("twist"));
      for (const Json& u : move.at("updates")) {
        m.updates.push_back({curve_from_json(u.at("curve")), fraction_from_json(u.at("before")),
                             fraction_from_json(u.at("after"))});
      }
    }
    if (move.contains("tangle_term") && !move.at("tangle_term").is_null()) {
      m.tangle_delta = integer_from_json(move.at("tangle_term"));
    }
    trace.moves.push_back(std::move(m));
  }
  return trace;
}

}  // namespace bitwist::cli
