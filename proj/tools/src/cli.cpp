#include "bitwist_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "bitwist/abelian.hpp"
#include "bitwist/coset.hpp"
#include "bitwist/errors.hpp"
#include "bitwist/presentation.hpp"
#include "bitwist/surgery.hpp"
#include "bitwist/verification.hpp"
#include "bitwist_cli/json_io.hpp"

namespace bitwist::cli {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  return s.substr(first, s.find_last_not_of(" \t") - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string piece;
  std::istringstream in(s);
  while (std::getline(in, piece, sep)) out.push_back(trim(piece));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

long long parse_integer(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw UsageError(what + ": '" + text + "' is not an integer", exit_code::kUsage);
  }
  if (used != text.size()) throw UsageError(what + ": '" + text + "' is not an integer", exit_code::kUsage);
  return value;
}

std::uint32_t parse_positive(const std::string& text, const std::string& what) {
  const long long v = parse_integer(trim(text), what);
  if (v < 1 || v > 1000000) throw UsageError(what + " must be in 1..1000000", exit_code::kUsage);
  return static_cast<std::uint32_t>(v);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string bracket(const std::vector<Integer>& xs) {
  std::vector<std::string> parts;
  for (const Integer& x : xs) parts.push_back(x.get_str());
  return "[" + join(parts, ", ") + "]";
}

Json integers_to_json(const std::vector<Integer>& xs) {
  Json out = Json::array();
  for (const Integer& x : xs) out.push_back(integer_to_json(x));
  return out;
}

// One command's output before formatting. Scalar results go in `fields`,
// tabular ones in `columns` and `rows`; `result` is the JSON payload.
struct Report {
  Json input = Json::object();
  Json result = Json::object();
  std::vector<std::string> refs;
  std::vector<std::pair<std::string, std::string>> fields;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  int status = exit_code::kOk;
};

std::string command_name(Command c) {
  switch (c) {
    case Command::kInvariant:
      return "invariant";
    case Command::kRealize:
      return "realize";
    case Command::kPresent:
      return "present";
    case Command::kHomology:
      return "homology";
    case Command::kPeriod:
      return "period";
    case Command::kOrder:
      return "order";
    case Command::kSurgeryReduce:
      return "surgery-reduce";
    case Command::kTable:
      return "table";
    case Command::kVerify:
      return "verify";
  }
  return "unknown";
}

void render(const RunConfig& config, const Report& report, std::ostream& out) {
  switch (config.format) {
    case Format::kJson: {
      Json doc{{"command", command_name(config.command)},
               {"input", report.input},
               {"result", report.result},
               {"refs", report.refs}};
      out << doc.dump(2) << '\n';
      return;
    }
    case Format::kTsv:
      for (const auto& [k, v] : report.fields) out << k << '\t' << v << '\n';
      if (!report.columns.empty()) {
        out << join(report.columns, "\t") << '\n';
        for (const auto& row : report.rows) out << join(row, "\t") << '\n';
      }
      return;
    case Format::kText: {
      for (const auto& [k, v] : report.fields) out << k << ": " << v << '\n';
      if (report.columns.empty()) return;
      std::vector<std::size_t> width(report.columns.size());
      for (std::size_t c = 0; c < width.size(); ++c) {
        width[c] = report.columns[c].size();
        for (const auto& row : report.rows) width[c] = std::max(width[c], row[c].size());
      }
      auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t c = 0; c < cells.size(); ++c) {
          s += cells[c];
          if (c + 1 < cells.size()) s += std::string(width[c] - cells[c].size() + 2, ' ');
        }
        out << s << '\n';
      };
      line(report.columns);
      for (const auto& row : report.rows) line(row);
      return;
    }
  }
}

Json multiplier_input(const RunConfig& config) {
  return Json{{"multipliers", config.multipliers->to_string()}};
}

Report do_invariant(const RunConfig& config) {
  const MultiplierFunction& mf = *config.multipliers;
  const ProjectiveFraction x = cfrac::invariant_of_multipliers(mf);
  const auto terms = cfrac::multiplier_terms(mf);
  const bool normalized = cfrac::is_normalized(mf);
  Report r;
  r.input = multiplier_input(config);
  r.result = {{"fraction", fraction_to_json(x)},
              {"terms", integers_to_json(terms)},
              {"normalized", normalized}};
  r.refs = {"cfrac::invariant_of_multipliers", "cfrac::multiplier_terms"};
  r.fields = {{"invariant", x.to_string()},
              {"terms", bracket(terms)},
              {"normalized", normalized ? "yes" : "no"}};
  return r;
}

Report do_realize(const RunConfig& config) {
  const ProjectiveFraction& x = *config.fraction;
  const auto realizations = cfrac::realize_knot(x);
  // Schubert pair (a, b) with a > 0.
  const Integer a = abs(x.num());
  const Integer b = x.num() < 0 ? Integer(-x.den()) : x.den();
  Integer b_squared_mod_a = (b * b) % a;
  if (b_squared_mod_a < 0) b_squared_mod_a += a;
  const bool unique = b_squared_mod_a == 1;

  Report r;
  r.input = {{"fraction", fraction_to_json(x)}};
  Json list = Json::array();
  std::vector<std::string> names;
  for (const auto& mf : realizations) {
    list.push_back(mf.to_string());
    names.push_back(mf.to_string());
  }
  r.result = {{"realizations", list}, {"count", realizations.size()}, {"unique", unique}};
  r.refs = {"cfrac::realize_knot", "cfrac::even_cf_expansion"};
  r.fields = {{"count", std::to_string(realizations.size())},
              {"unique", unique ? "yes (b^2 = 1 mod a)" : "no (b^2 != 1 mod a)"}};
  for (std::size_t i = 0; i < names.size(); ++i) r.fields.emplace_back("realization", names[i]);
  return r;
}

struct NamedPresentation {
  std::string label;
  CyclicPresentation cyclic;
};

NamedPresentation selected_presentation(const RunConfig& config) {
  switch (config.group) {
    case GroupSource::kFibonacci:
      return {"F(" + std::to_string(config.n_first) + ")",
              presentation::fibonacci_presentation(config.n_first)};
    case GroupSource::kSieradski:
      return {"Sieradski(" + std::to_string(config.n_first) + ")",
              presentation::sieradski_presentation(config.n_first)};
    case GroupSource::kCover:
      break;
  }
  const MultiplierFunction& mf = *config.multipliers;
  const auto pres = presentation::branched_cover_relators(mf, config.n_first);
  return {"cover(" + mf.to_string() + ", n=" + std::to_string(config.n_first) + ")",
          presentation::eliminate_to_cyclic(pres, mf, config.n_first)};
}

Json group_input(const RunConfig& config) {
  switch (config.group) {
    case GroupSource::kFibonacci:
      return {{"fibonacci", config.n_first}};
    case GroupSource::kSieradski:
      return {{"sieradski", config.n_first}};
    case GroupSource::kCover:
      break;
  }
  return {{"multipliers", config.multipliers->to_string()}, {"n", config.n_first}};
}

Report do_present(const RunConfig& config) {
  const NamedPresentation named = selected_presentation(config);
  const FinitePresentation expanded = named.cyclic.expand();
  Report r;
  r.input = group_input(config);
  Json relators = Json::array();
  for (const Word& w : expanded.relators) relators.push_back(w.to_string());
  r.result = {{"group", named.label},
              {"generators", named.cyclic.n},
              {"word", named.cyclic.defining_word.to_string()},
              {"relators", relators}};
  r.refs = {"presentation::branched_cover_relators", "presentation::eliminate_to_cyclic"};
  r.fields = {{"group", named.label},
              {"generators", std::to_string(named.cyclic.n)},
              {"word", named.cyclic.defining_word.to_string()}};
  for (const Word& w : expanded.relators) r.fields.emplace_back("relator", w.to_string());
  return r;
}

Report homology_rows(const RunConfig& config, bool concurrent) {
  const MultiplierFunction& mf = *config.multipliers;
  std::vector<std::uint32_t> ns;
  for (std::uint32_t n = config.n_first; n <= config.n_last; ++n) ns.push_back(n);
  std::vector<AbelianInvariants> groups(ns.size());
  if (concurrent) {
    std::vector<std::future<AbelianInvariants>> parts;
    for (std::uint32_t n : ns) {
      parts.push_back(std::async(std::launch::async, [&mf, n] { return abelian::homology(mf, n); }));
    }
    for (std::size_t i = 0; i < parts.size(); ++i) groups[i] = parts[i].get();
  } else {
    for (std::size_t i = 0; i < ns.size(); ++i) groups[i] = abelian::homology(mf, ns[i]);
  }

  Report r;
  r.input = {{"multipliers", mf.to_string()},
             {"n", std::to_string(config.n_first) + ".." + std::to_string(config.n_last)}};
  r.result = Json::array();
  r.columns = {"n", "H1", "order"};
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const Integer order = groups[i].order();
    r.result.push_back(Json{{"n", ns[i]},
                            {"homology", abelian_to_json(groups[i])},
                            {"order", integer_to_json(order)}});
    r.rows.push_back({std::to_string(ns[i]), groups[i].to_string(), order.get_str()});
  }
  r.refs = {"abelian::exponent_polynomial_via_Q", "abelian::circulant", "smith_normal_form"};
  return r;
}

Report do_period(const RunConfig& config) {
  const LaurentPolynomial p = abelian::exponent_polynomial_via_Q(*config.multipliers);
  const auto period = abelian::detect_period(p, config.max_period);
  Report r;
  r.input = multiplier_input(config);
  r.input["max_period"] = config.max_period;
  r.result = {{"polynomial", p.to_string()}, {"coefficients", polynomial_to_json(p)}};
  r.fields = {{"polynomial", p.to_string()}};
  if (period) {
    r.result["content"] = integer_to_json(period->content);
    r.result["period"] = period->period;
    r.fields.emplace_back("content", period->content.get_str());
    r.fields.emplace_back("period", std::to_string(period->period));
  } else {
    r.result["content"] = nullptr;
    r.result["period"] = nullptr;
    r.fields.emplace_back("period", "none <= " + std::to_string(config.max_period));
  }
  r.refs = {"abelian::exponent_polynomial_via_Q", "abelian::detect_period"};
  return r;
}

Report do_order(const RunConfig& config) {
  const NamedPresentation named = selected_presentation(config);
  const auto result = coset::enumerate(named.cyclic.expand(), config.max_cosets);
  Report r;
  r.input = group_input(config);
  r.input["max_cosets"] = config.max_cosets;
  r.refs = {"coset::enumerate"};
  r.fields = {{"group", named.label}};
  if (const auto* done = std::get_if<coset::Enumerated>(&result)) {
    r.result = {{"group", named.label}, {"status", "finite"}, {"order", done->order}};
    r.fields.emplace_back("order", std::to_string(done->order));
  } else {
    r.result = {{"group", named.label}, {"status", "exceeded"}, {"order", nullptr}};
    r.fields.emplace_back("order", "exceeded " + std::to_string(config.max_cosets) + " cosets");
    r.status = exit_code::kCosetsExceeded;
  }
  return r;
}

Report do_surgery(const RunConfig& config) {
  const MultiplierFunction& mf = *config.multipliers;
  const Reduction red = surgery::reduce(surgery::build_chain(mf));
  Report r;
  r.input = multiplier_input(config);
  r.result = {{"tangle_terms", integers_to_json(red.tangle.terms)},
              {"moves", red.trace.moves.size()},
              {"twists", red.trace.twist_count()}};
  r.fields = {{"tangle terms", bracket(red.tangle.terms)},
              {"moves", std::to_string(red.trace.moves.size())},
              {"twists", std::to_string(red.trace.twist_count())}};
  try {
    const ProjectiveFraction cd = surgery::denominator_fraction(red.tangle);
    r.result["denominator_fraction"] = fraction_to_json(cd);
    r.fields.emplace_back("denominator closure", cd.to_string());
  } catch (const DivisionUndefined&) {
    r.result["denominator_fraction"] = nullptr;
  }
  try {
    const ProjectiveFraction x = surgery::closure_fraction(red.tangle);
    r.result["fraction"] = fraction_to_json(x);
    r.result["unknot"] = false;
    r.fields.emplace_back("fraction", x.to_string());
  } catch (const DivisionUndefined&) {
    // The axis is the unknot: a valid, trivial answer.
    r.result["fraction"] = nullptr;
    r.result["unknot"] = true;
    r.fields.emplace_back("fraction", "unknot");
  }
  if (config.trace) {
    r.result["trace"] = trace_to_json(red.trace);
    for (const Move& m : red.trace.moves) {
      std::string line = m.kind == Move::Kind::kTwist
                             ? "twist " + m.curve.to_string() + " by " + m.twist.get_str()
                             : "remove " + m.curve.to_string();
      for (std::size_t i = 1; i < m.updates.size(); ++i) {
        line += ", " + m.updates[i].curve.to_string() + " " + m.updates[i].before.to_string() +
                " -> " + m.updates[i].after.to_string();
      }
      if (m.tangle_delta) line += ", tangle term " + m.tangle_delta->get_str();
      r.fields.emplace_back("move", line);
    }
  }
  r.refs = {"surgery::build_chain", "surgery::reduce", "surgery::closure_fraction"};
  return r;
}

Report do_verify(const RunConfig& config) {
  const auto results = verification::run_all();
  Report r;
  r.result = Json::array();
  r.columns = {"criterion", "status", "title", "detail"};
  if (config.timings) r.columns.push_back("seconds");
  bool all = true;
  for (const auto& c : results) {
    all = all && c.passed;
    Json row{{"id", c.id}, {"title", c.title}, {"passed", c.passed}, {"detail", c.detail}};
    std::vector<std::string> cells{std::to_string(c.id), c.passed ? "PASS" : "FAIL", c.title,
                                   c.detail};
    if (config.timings) {
      row["seconds"] = c.seconds;
      std::ostringstream s;
      s.precision(3);
      s << std::fixed << c.seconds;
      cells.push_back(s.str());
    }
    r.result.push_back(std::move(row));
    r.rows.push_back(std::move(cells));
  }
  r.refs = {"verification::run_all"};
  r.status = all ? exit_code::kOk : exit_code::kVerifyFailed;
  return r;
}

Report dispatch(const RunConfig& config) {
  switch (config.command) {
    case Command::kInvariant:
      return do_invariant(config);
    case Command::kRealize:
      return do_realize(config);
    case Command::kPresent:
      return do_present(config);
    case Command::kHomology:
      return homology_rows(config, false);
    case Command::kPeriod:
      return do_period(config);
    case Command::kOrder:
      return do_order(config);
    case Command::kSurgeryReduce:
      return do_surgery(config);
    case Command::kTable:
      return homology_rows(config, true);
    case Command::kVerify:
      return do_verify(config);
  }
  throw InvalidArgument("unknown command");
}

}  // namespace

MultiplierFunction parse_multipliers(const std::string& text) {
  std::vector<int> lat;
  std::vector<std::int64_t> lon;
  for (const std::string& level : split(text, ';')) {
    const auto pair = split(level, ',');
    if (pair.size() != 2) {
      throw UsageError("multiplier level '" + level + "' must be 'l,m'", exit_code::kUsage);
    }
    const long long l = parse_integer(pair[0], "latitudinal multiplier");
    if (l != 1 && l != -1) {
      throw UsageError("latitudinal multiplier must be 1 or -1, got " + pair[0], exit_code::kUsage);
    }
    lat.push_back(static_cast<int>(l));
    lon.push_back(parse_integer(pair[1], "longitudinal multiplier"));
  }
  if (lat.empty()) throw UsageError("empty multiplier function", exit_code::kUsage);
  try {
    return MultiplierFunction(std::move(lat), std::move(lon));
  } catch (const Error& e) {
    throw UsageError(e.what(), exit_code::kUsage);
  }
}

std::pair<std::uint32_t, std::uint32_t> parse_n_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const std::uint32_t n = parse_positive(text, "n");
    return {n, n};
  }
  const std::uint32_t lo = parse_positive(text.substr(0, dots), "n range start");
  const std::uint32_t hi = parse_positive(text.substr(dots + 2), "n range end");
  if (lo > hi) throw UsageError("empty n range " + text, exit_code::kUsage);
  return {lo, hi};
}

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig config;
  if (const char* env = std::getenv("BITWIST_MAX_COSETS"); env != nullptr && *env != '\0') {
    const long long v = parse_integer(env, "BITWIST_MAX_COSETS");
    if (v < 1) throw UsageError("BITWIST_MAX_COSETS must be positive", exit_code::kUsage);
    config.max_cosets = static_cast<std::size_t>(v);
  }

  CLI::App app{"Bi-twist manifold invariants: two-bridge knots, covers, groups, surgery"};
  app.name("bitwist");
  app.require_subcommand(1);

  std::string multipliers, fraction, n_text, format = "text", output;
  std::optional<std::uint32_t> fibonacci, sieradski;
  std::size_t max_cosets = config.max_cosets;
  std::uint64_t max_period = config.max_period;
  bool trace = false, timings = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "tsv", "json"}));
    sub->add_option("-o,--output", output, "Write the result to this file");
  };
  auto add_multipliers = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("-m,--multipliers", multipliers,
                                "Multiplier function 'l0,m0;l1,m1;...' with l = +-1");
    opt->allow_extra_args(false);
    if (required) opt->required();
    return opt;
  };

  struct Entry {
    Command command;
    CLI::App* app;
  };
  std::vector<Entry> subs;
  auto sub = [&](Command c, const std::string& desc) {
    CLI::App* s = app.add_subcommand(command_name(c), desc);
    add_common(s);
    subs.push_back({c, s});
    return s;
  };

  add_multipliers(sub(Command::kInvariant, "Two-bridge knot fraction of a multiplier function"), true);

  sub(Command::kRealize, "Normalized multiplier functions realizing a knot a/b")
      ->add_option("-x,--fraction", fraction, "Knot fraction a/b with a odd")
      ->required();

  for (Command c : {Command::kPresent, Command::kOrder}) {
    CLI::App* s = sub(c, c == Command::kPresent ? "Cyclic presentation of a cover or named group"
                                                : "Group order by coset enumeration");
    auto* m = add_multipliers(s, false);
    auto* n = s->add_option("--n", n_text, "Cover degree");
    auto* f = s->add_option("--fibonacci", fibonacci, "Fibonacci group F(r)");
    auto* g = s->add_option("--sieradski", sieradski, "Sieradski group on n generators");
    m->needs(n);
    f->excludes(m)->excludes(g);
    g->excludes(m);
    if (c == Command::kOrder) {
      s->add_option("--max-cosets", max_cosets, "Coset bound (default 100000 or BITWIST_MAX_COSETS)")
          ->check(CLI::PositiveNumber);
    }
  }

  for (Command c : {Command::kHomology, Command::kTable}) {
    CLI::App* s = sub(c, c == Command::kHomology ? "First homology of the n-fold branched covers"
                                                 : "Homology table over an n range, computed concurrently");
    add_multipliers(s, true);
    s->add_option("--n", n_text, "Degree or range 'a..b'")->required();
  }

  CLI::App* period = sub(Command::kPeriod, "Period of the cover homology sequence");
  add_multipliers(period, true);
  period->add_option("--max-period", max_period, "Largest period searched")
      ->check(CLI::PositiveNumber);

  CLI::App* surgery_cmd = sub(Command::kSurgeryReduce, "Reduce the chain surgery diagram to S^3");
  add_multipliers(surgery_cmd, true);
  surgery_cmd->add_flag("--trace", trace, "Include every move");

  sub(Command::kVerify, "Run the acceptance suite")
      ->add_flag("--timings", timings, "Report seconds per criterion");

  // CLI11 consumes a vector argument list from the back.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int status = app.exit(e, out, err);
    const std::string message = out.str() + err.str();
    throw UsageError(message.empty() ? e.what() : message, status == 0 ? 0 : exit_code::kUsage);
  }

  for (const Entry& e : subs) {
    if (e.app->parsed()) config.command = e.command;
  }
  config.format = format == "json" ? Format::kJson : format == "tsv" ? Format::kTsv : Format::kText;
  if (!output.empty()) config.output_path = output;
  config.max_cosets = max_cosets;
  config.max_period = max_period;
  config.trace = trace;
  config.timings = timings;
  if (!multipliers.empty()) config.multipliers = parse_multipliers(multipliers);
  if (!fraction.empty()) {
    try {
      config.fraction = ProjectiveFraction::parse(fraction);
    } catch (const Error& e) {
      throw UsageError(std::string("bad fraction: ") + e.what(), exit_code::kUsage);
    }
  }
  if (!n_text.empty()) std::tie(config.n_first, config.n_last) = parse_n_range(n_text);

  if (config.command == Command::kPresent || config.command == Command::kOrder) {
    if (fibonacci) {
      if (*fibonacci < 1) throw UsageError("--fibonacci needs r >= 1", exit_code::kUsage);
      config.group = GroupSource::kFibonacci;
      config.n_first = config.n_last = *fibonacci;
    } else if (sieradski) {
      if (*sieradski < 1) throw UsageError("--sieradski needs n >= 1", exit_code::kUsage);
      config.group = GroupSource::kSieradski;
      config.n_first = config.n_last = *sieradski;
    } else if (!config.multipliers) {
      throw UsageError("need -m with --n, --fibonacci or --sieradski", exit_code::kUsage);
    } else if (config.n_first != config.n_last) {
      throw UsageError("--n must be a single degree here", exit_code::kUsage);
    }
  }
  return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const Report report = dispatch(config);
    if (config.output_path) {
      std::ofstream file(*config.output_path);
      if (!file) {
        err << "error: cannot open " << *config.output_path << '\n';
        return exit_code::kMalformedInput;
      }
      render(config, report, file);
    } else {
      render(config, report, out);
    }
    if (report.status == exit_code::kCosetsExceeded) {
      err << "coset enumeration exceeded " << config.max_cosets << " cosets (inconclusive)\n";
    }
    return report.status;
  } catch (const NotAKnot& e) {
    err << "not a knot: " << e.what() << '\n';
    return exit_code::kNotAKnot;
  } catch (const NotExpandable& e) {
    err << "no even expansion: " << e.what() << '\n';
    return exit_code::kNotExpandable;
  } catch (const DivisionUndefined& e) {
    err << "division undefined: " << e.what() << '\n';
    return exit_code::kDivisionUndefined;
  } catch (const MalformedInput& e) {
    err << "malformed input: " << e.what() << '\n';
    return exit_code::kMalformedInput;
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return exit_code::kMalformedInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_code::kInternal;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_args(args);
  } catch (const UsageError& e) {
    const std::string message = e.what();
    (e.exit_status() == 0 ? out : err) << message
                                       << (message.empty() || message.back() != '\n' ? "\n" : "");
    return e.exit_status();
  }
  return run(config, out, err);
}

}  // namespace bitwist::cli
