#include "bitwist/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <future>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "bitwist/abelian.hpp"
#include "bitwist/cfrac.hpp"
#include "bitwist/coset.hpp"
#include "bitwist/errors.hpp"
#include "bitwist/matrix.hpp"
#include "bitwist/presentation.hpp"
#include "bitwist/surgery.hpp"

namespace bitwist::verification {
namespace {

// Empty string means the check held; otherwise the first counterexample.
using Outcome = std::string;

// Multiplier function whose level digits, read in base 2 * m_values.size(),
// form `index`: digit d gives l = (d % 2 ? -1 : 1), m = m_values[d / 2].
MultiplierFunction decode(std::uint64_t index, std::size_t levels,
                          const std::vector<std::int64_t>& m_values) {
  const std::uint64_t base = 2 * m_values.size();
  std::vector<int> lat(levels);
  std::vector<std::int64_t> lon(levels);
  for (std::size_t i = 0; i < levels; ++i) {
    const std::uint64_t d = index % base;
    index /= base;
    lat[i] = d % 2 == 1 ? -1 : 1;
    lon[i] = m_values[d / 2];
  }
  return MultiplierFunction(std::move(lat), std::move(lon));
}

std::uint64_t power(std::uint64_t base, std::size_t e) {
  std::uint64_t out = 1;
  while (e-- > 0) out *= base;
  return out;
}

// Runs check over every multiplier function with 1..max_levels levels and
// m in m_values, split across hardware threads. Returns the lowest-indexed
// counterexample found by any worker.
Outcome sweep_multipliers(std::size_t max_levels, const std::vector<std::int64_t>& m_values,
                          const std::function<Outcome(const MultiplierFunction&)>& check,
                          std::uint64_t* checked) {
  const std::size_t workers = std::max(1U, std::thread::hardware_concurrency());
  std::uint64_t total = 0;
  for (std::size_t levels = 1; levels <= max_levels; ++levels) {
    const std::uint64_t count = power(2 * m_values.size(), levels);
    total += count;
    const std::uint64_t chunk = (count + workers - 1) / workers;
    std::vector<std::future<Outcome>> parts;
    for (std::uint64_t lo = 0; lo < count; lo += chunk) {
      const std::uint64_t hi = std::min(count, lo + chunk);
      parts.push_back(std::async(std::launch::async, [=, &check, &m_values] {
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
          Outcome o = check(decode(idx, levels, m_values));
          if (!o.empty()) return o;
        }
        return Outcome{};
      }));
    }
    Outcome first;
    for (auto& p : parts) {
      Outcome o = p.get();
      if (first.empty() && !o.empty()) first = std::move(o);
    }
    if (!first.empty()) return first;
  }
  if (checked != nullptr) *checked = total;
  return {};
}

std::vector<std::int64_t> range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(hi - lo + 1));
  std::iota(out.begin(), out.end(), lo);
  return out;
}

LaurentPolynomial poly(std::initializer_list<long> ascending) {
  LaurentPolynomial::Terms terms;
  std::int64_t e = 0;
  for (long c : ascending) terms[e++] = c;
  return LaurentPolynomial(terms);
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

// ---------------------------------------------------------------------------

Outcome trefoil_and_figure_eight(std::string& summary) {
  const auto trefoil = cfrac::invariant_of_multipliers(MultiplierFunction({-1}, {1}));
  const auto figure_eight = cfrac::invariant_of_multipliers(MultiplierFunction({1}, {1}));
  summary = "trefoil " + trefoil.to_string() + ", figure-eight " + figure_eight.to_string();
  if (!(trefoil == ProjectiveFraction(-3, 2))) return "trefoil data gave " + trefoil.to_string();
  if (!(figure_eight == ProjectiveFraction(5, 2))) {
    return "figure-eight data gave " + figure_eight.to_string();
  }
  return {};
}

Outcome surgery_matches_invariant(std::string& summary) {
  std::uint64_t checked = 0;
  Outcome o = sweep_multipliers(
      5, range(-3, 3),
      [](const MultiplierFunction& mf) -> Outcome {
        const ProjectiveFraction expected = cfrac::invariant_of_multipliers(mf);
        const Reduction red = surgery::reduce(surgery::build_chain(mf));
        try {
          const ProjectiveFraction got = surgery::closure_fraction(red.tangle);
          if (got == expected) return {};
          return mf.to_string() + ": surgery " + got.to_string() + " vs " + expected.to_string();
        } catch (const DivisionUndefined&) {
          // The unknot sentinel agrees exactly with an infinite invariant.
          if (expected.is_infinite()) return {};
          return mf.to_string() + ": surgery gave the unknot, invariant " + expected.to_string();
        }
      },
      &checked);
  summary = std::to_string(checked) + " multiplier functions";
  return o;
}

Outcome realization_count(std::string& summary) {
  std::uint64_t checked = 0;
  for (long a = 3; a <= 199; a += 2) {
    for (long b = -a + 1; b < a; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const auto realizations = cfrac::realize_knot(ProjectiveFraction(a, b));
      const bool unique = ((b * b) % a + a) % a == 1;
      if ((realizations.size() == 1) != unique || realizations.empty() || realizations.size() > 2) {
        return std::to_string(a) + "/" + std::to_string(b) + ": " +
               std::to_string(realizations.size()) + " realizations";
      }
      ++checked;
    }
  }
  summary = std::to_string(checked) + " fractions";
  return {};
}

Outcome fibonacci_orders(std::string& summary) {
  const long expected[] = {1, 1, 4, 5, 11, 16, 29, 45, 76, 121};
  const LaurentPolynomial word_poly = poly({1, 1, -1});
  for (std::uint32_t n = 1; n <= 10; ++n) {
    const Integer order = abelian::fibonacci_order(n);
    const IntMatrix circ = abelian::circulant(word_poly, n);
    const Integer det = abs(determinant(circ));
    const Integer snf_order = smith_normal_form(circ).order();
    if (order != expected[n - 1] || det != order || snf_order != order) {
      return "n=" + std::to_string(n) + ": order " + order.get_str() + ", |det| " + det.get_str() +
             ", SNF order " + snf_order.get_str();
    }
  }
  summary = "n = 1..10";
  return {};
}

Outcome trefoil_homology_period(std::string& summary) {
  const AbelianInvariants z2{{}, 2};
  const AbelianInvariants pattern[6] = {
      z2,                           // n = 0 mod 6
      AbelianInvariants{{}, 0},     // 1
      AbelianInvariants{{3}, 0},    // 2
      AbelianInvariants{{2, 2}, 0}, // 3
      AbelianInvariants{{3}, 0},    // 4
      AbelianInvariants{{}, 0},     // 5
  };
  const MultiplierFunction trefoil({-1}, {1});
  for (std::uint32_t n = 1; n <= 18; ++n) {
    const AbelianInvariants h = abelian::homology(trefoil, n);
    if (!(h == pattern[n % 6])) {
      return "n=" + std::to_string(n) + ": " + h.to_string() + " expected " +
             pattern[n % 6].to_string();
    }
  }
  const auto period = abelian::detect_period(poly({1, -1, 1}), 200);
  if (!period || !(*period == Periodicity{1, 6})) return "1 - t + t^2 is not periodic with period 6";
  summary = "n = 1..18, period 6";
  return {};
}

Outcome five_half_twist(std::string& summary) {
  const LaurentPolynomial target = poly({1, -1, 1, -1, 1});
  const auto period = abelian::detect_period(target, 200);
  if (!period || !(*period == Periodicity{1, 10})) return "period of the braid polynomial is not 10";
  const LaurentPolynomial via_q =
      abelian::exponent_polynomial_via_Q(MultiplierFunction({-1, -1}, {1, 1}));
  if (!(via_q == target)) return "Q route gave " + via_q.to_string();
  summary = target.to_string() + ", period 10";
  return {};
}

Outcome coset_orders(std::string& summary) {
  struct Case {
    std::string label;
    FinitePresentation pres;
    std::optional<std::size_t> order;  // nullopt: must exceed the bound
    std::size_t bound;
  };
  const std::vector<Case> cases = {
      {"F(5)", presentation::fibonacci_presentation(5).expand(), 11, 100000},
      {"Sieradski n=1", presentation::sieradski_presentation(1).expand(), 1, 100000},
      {"Sieradski n=2", presentation::sieradski_presentation(2).expand(), 3, 100000},
      {"Sieradski n=3", presentation::sieradski_presentation(3).expand(), 8, 100000},
      {"F(4)", presentation::fibonacci_presentation(4).expand(), 5, 100000},
      {"Sieradski n=6", presentation::sieradski_presentation(6).expand(), std::nullopt, 20000},
  };
  std::ostringstream out;
  for (const Case& c : cases) {
    const auto result = coset::enumerate(c.pres, c.bound);
    const auto* done = std::get_if<coset::Enumerated>(&result);
    if (c.order) {
      if (done == nullptr) return c.label + ": exceeded " + std::to_string(c.bound);
      if (done->order != *c.order || !done->table.is_consistent_with(c.pres)) {
        return c.label + ": order " + std::to_string(done->order);
      }
      out << c.label << "=" << done->order << " ";
    } else {
      if (done != nullptr) return c.label + ": closed with order " + std::to_string(done->order);
      out << c.label << " exceeded";
    }
  }
  summary = out.str();
  return {};
}

Outcome two_route_homology(std::string& summary) {
  std::uint64_t checked = 0;
  Outcome o = sweep_multipliers(
      4, range(-2, 2),
      [](const MultiplierFunction& mf) -> Outcome {
        for (std::uint32_t n = 1; n <= 8; ++n) {
          const AbelianInvariants via_q = abelian::homology(mf, n);
          const AbelianInvariants via_word = abelian::homology_via_presentation(mf, n);
          if (!(via_q == via_word)) {
            return mf.to_string() + " n=" + std::to_string(n) + ": " + via_q.to_string() +
                   " vs " + via_word.to_string();
          }
        }
        return {};
      },
      &checked);
  summary = std::to_string(checked) + " multiplier functions x n = 1..8";
  return o;
}

Outcome triangle_groups(std::string& summary) {
  const Word x = Word::parse("x0");
  const Word y = Word::parse("x1");
  for (long n = 2; n <= 30; ++n) {
    const FinitePresentation pres{2, {x.power(2), y.power(3), (x * y).power(n)}};
    const AbelianInvariants got = abelian::abelianization(pres);
    const long g = std::gcd(6L, n);
    const AbelianInvariants expected = g == 1 ? AbelianInvariants{{}, 0}
                                              : AbelianInvariants{{Integer(g)}, 0};
    if (!(got == expected)) return "n=" + std::to_string(n) + ": " + got.to_string();
  }
  summary = "n = 2..30";
  return {};
}

Outcome property_suites(std::string& summary) {
  // Round trip over odd numerators |p| <= 1000 and even denominators <= 1000.
  std::uint64_t round_trips = 0;
  for (long p = -999; p <= 999; p += 2) {
    for (long q = 2; q <= 1000; q += 2) {
      if (std::gcd(p, q) != 1) continue;
      const ProjectiveFraction x(p, q);
      const EvenCF cf = cfrac::even_cf_expansion(x);
      const bool shape = cf.terms.size() % 2 == 0 && !cf.terms.empty() && cf.terms.back() != 0 &&
                         std::all_of(cf.terms.begin(), cf.terms.end(), [](const Integer& t) {
                           return mpz_even_p(t.get_mpz_t()) != 0;
                         });
      if (!shape || !(cfrac::eval_cf(std::span<const Integer>(cf.terms)) == x)) {
        return "even expansion round trip fails for " + x.to_string();
      }
      ++round_trips;
    }
  }

  for (std::uint32_t seed = 0; seed < 1000; ++seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> entry(-9, 9);
    IntMatrix a(4, 4);
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) a(r, c) = entry(rng);
    }
    const SmithDecomposition snf = smith_decomposition(a);
    const auto& d = snf.diagonal;
    bool ok = snf.left * a * snf.right == d && abs(determinant(snf.left)) == 1 &&
              abs(determinant(snf.right)) == 1;
    Integer product = 1;
    for (std::size_t i = 0; ok && i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) ok = ok && (i == j || d(i, j) == 0);
      ok = ok && d(i, i) >= 0;
      if (i + 1 < 4) ok = ok && (d(i + 1, i + 1) == 0 || (d(i, i) != 0 && d(i + 1, i + 1) % d(i, i) == 0));
      product *= d(i, i);
    }
    if (!ok || product != abs(determinant(a))) return "Smith form check fails for seed " + std::to_string(seed);
  }

  std::mt19937 rng(20261019);
  std::uniform_int_distribution<int> levels_dist(1, 6);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  std::uniform_int_distribution<std::int64_t> m_dist(-4, 4);
  for (int trial = 0; trial < 500; ++trial) {
    const auto levels = static_cast<std::size_t>(levels_dist(rng));
    std::vector<int> lat(levels);
    std::vector<std::int64_t> lon(levels);
    for (std::size_t i = 0; i < levels; ++i) {
      lat[i] = sign_dist(rng) == 1 ? 1 : -1;
      lon[i] = m_dist(rng);
    }
    while (lon.back() == 0) lon.back() = m_dist(rng);
    // Force the normalization rule from the top level down.
    for (std::size_t i = levels - 1; i-- > 0;) {
      if (lon[i] == 0) lat[i] = lat[i + 1];
    }
    const MultiplierFunction mf(std::move(lat), std::move(lon));
    if (!cfrac::is_normalized(mf)) return "generator produced non-normalized " + mf.to_string();
    const ProjectiveFraction x = cfrac::invariant_of_multipliers(mf);
    if (x.is_infinite() || mpz_even_p(x.num().get_mpz_t()) || mpz_odd_p(x.den().get_mpz_t())) {
      return mf.to_string() + " has invariant " + x.to_string();
    }
  }
  summary = std::to_string(round_trips) + " round trips, 1000 Smith forms, 500 parity samples";
  return {};
}

struct Criterion {
  int id;
  const char* title;
  Outcome (*check)(std::string&);
  double budget_seconds;  // 0 means no explicit budget
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "trefoil and figure-eight invariants", trefoil_and_figure_eight, 0},
      {2, "surgery reduction reproduces the multiplier invariant", surgery_matches_invariant, 60},
      {3, "knots realized once exactly when b^2 = 1 mod a", realization_count, 0},
      {4, "Fibonacci group abelianization orders", fibonacci_orders, 0},
      {5, "trefoil cover homology has period 6", trefoil_homology_period, 0},
      {6, "five-half-twist braid polynomial and period 10", five_half_twist, 0},
      {7, "group orders by coset enumeration", coset_orders, 10},
      {8, "Q-polynomial and presentation routes agree", two_route_homology, 120},
      {9, "triangle group abelianization", triangle_groups, 0},
      {10, "property suites", property_suites, 0},
  };
  return all;
}

}  // namespace

std::vector<int> criterion_ids() {
  std::vector<int> out;
  for (const Criterion& c : criteria()) out.push_back(c.id);
  return out;
}

CriterionResult run_criterion(int id) {
  const auto& all = criteria();
  const auto it = std::find_if(all.begin(), all.end(), [id](const Criterion& c) { return c.id == id; });
  if (it == all.end()) throw InvalidArgument("unknown criterion " + std::to_string(id));

  CriterionResult result;
  result.id = id;
  result.title = it->title;
  const auto start = std::chrono::steady_clock::now();
  std::string summary;
  Outcome failure;
  try {
    failure = it->check(summary);
  } catch (const std::exception& e) {
    failure = std::string("exception: ") + e.what();
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (failure.empty() && it->budget_seconds > 0 && result.seconds > it->budget_seconds) {
    failure = "took " + fmt_seconds(result.seconds) + ", budget " + fmt_seconds(it->budget_seconds);
  }
  result.passed = failure.empty();
  result.detail = result.passed ? summary : failure;
  return result;
}

std::vector<CriterionResult> run_all() {
  std::vector<CriterionResult> out;
  for (int id : criterion_ids()) out.push_back(run_criterion(id));
  return out;
}

std::string format_line(const CriterionResult& r) {
  char id[8];
  std::snprintf(id, sizeof id, "%2d", r.id);
  return std::string(r.passed ? "PASS" : "FAIL") + " [" + id + "] " + r.title + " (" +
         fmt_seconds(r.seconds) + "): " + r.detail;
}

}  // namespace bitwist::verification
