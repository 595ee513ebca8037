#include "bitwist/cfrac.hpp"

#include <algorithm>
#include <sstream>

#include "bitwist/errors.hpp"

namespace bitwist {

MultiplierFunction::MultiplierFunction(std::vector<int> lat, std::vector<std::int64_t> lon)
    : lat_(std::move(lat)), lon_(std::move(lon)) {
  if (lat_.empty()) throw InvalidArgument("multiplier function needs at least one level");
  if (lat_.size() != lon_.size()) {
    throw InvalidArgument("latitudinal and longitudinal multiplier counts differ");
  }
  for (int l : lat_) {
    if (l != 1 && l != -1) {
      throw InvalidArgument("latitudinal multiplier " + std::to_string(l) + " is not +1 or -1");
    }
  }
}

std::string MultiplierFunction::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < lat_.size(); ++i) {
    if (i) out << ';';
    out << lat_[i] << ',' << lon_[i];
  }
  return out.str();
}

ProjectiveFraction::ProjectiveFraction(Integer num, Integer den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_ == 0 && den_ == 0) throw InvalidArgument("0/0 is not a projective fraction");
  Integer g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  num_ /= g;
  den_ /= g;
  if (den_ < 0 || (den_ == 0 && num_ < 0)) {
    num_ = -num_;
    den_ = -den_;
  }
}

ProjectiveFraction ProjectiveFraction::operator-() const {
  if (is_infinite()) return *this;
  return ProjectiveFraction(-num_, den_);
}

ProjectiveFraction ProjectiveFraction::reciprocal() const {
  return ProjectiveFraction(den_, num_);
}

std::string ProjectiveFraction::to_string() const {
  return num_.get_str() + "/" + den_.get_str();
}

ProjectiveFraction ProjectiveFraction::parse(const std::string& text) {
  if (text == "inf" || text == "oo") return infinity();
  const auto slash = text.find('/');
  Integer num, den(1);
  try {
    if (slash == std::string::npos) {
      num = Integer(text);
    } else {
      num = Integer(text.substr(0, slash));
      den = Integer(text.substr(slash + 1));
    }
  } catch (const std::invalid_argument&) {
    throw InvalidArgument("cannot parse fraction '" + text + "'");
  }
  return ProjectiveFraction(num, den);
}

namespace cfrac {
namespace {

template <typename T>
ProjectiveFraction eval_terms(std::span<const T> terms) {
  if (terms.empty()) throw InvalidArgument("continued fraction needs at least one term");
  // (p, q) represents p/q; folding in a term a from the left maps the tail
  // value p/q to a + q/p = (a p + q)/p.
  Integer p(terms.back());
  Integer q(1);
  for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) {
    Integer next = Integer(*it) * p + q;
    q = std::move(p);
    p = std::move(next);
  }
  return ProjectiveFraction(p, q);
}

Integer mod_positive(const Integer& x, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer inverse_mod(const Integer& x, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw InvalidArgument("denominator is not invertible modulo the numerator");
  }
  return r;
}

// Schubert normal form: a > 0 and b carrying the sign of the fraction.
std::pair<Integer, Integer> schubert_pair(const ProjectiveFraction& x) {
  if (x.is_infinite()) throw InvalidArgument("infinite fraction has no two-bridge knot");
  if (x.num() < 0) return {-x.num(), -x.den()};
  return {x.num(), x.den()};
}

}  // namespace

ProjectiveFraction eval_cf(std::span<const Integer> terms) { return eval_terms(terms); }
ProjectiveFraction eval_cf(std::span<const long> terms) { return eval_terms(terms); }

std::vector<Integer> multiplier_terms(const MultiplierFunction& mf) {
  std::vector<Integer> terms;
  terms.reserve(2 * mf.levels());
  for (std::size_t i = 0; i < mf.levels(); ++i) {
    terms.emplace_back(2 * mf.lat()[i]);
    terms.push_back(Integer(2) * Integer(static_cast<long>(mf.lon()[i])));
  }
  return terms;
}

ProjectiveFraction invariant_of_multipliers(const MultiplierFunction& mf) {
  const auto terms = multiplier_terms(mf);
  return eval_cf(std::span<const Integer>(terms));
}

bool is_normalized(const MultiplierFunction& mf) {
  const auto k = mf.k();
  if (mf.lon()[k] == 0) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (mf.lon()[i] == 0 && mf.lat()[i] != mf.lat()[i + 1]) return false;
  }
  return true;
}

MultiplierFunction mirror(const MultiplierFunction& mf) {
  std::vector<int> lat(mf.lat());
  std::vector<std::int64_t> lon(mf.lon());
  for (auto& l : lat) l = -l;
  for (auto& m : lon) m = -m;
  return MultiplierFunction(std::move(lat), std::move(lon));
}

EvenCF even_cf_expansion(const ProjectiveFraction& x) {
  if (x.is_infinite() || x.den() == 0) throw NotExpandable("infinity has no even expansion");
  if (mpz_even_p(x.num().get_mpz_t()) || mpz_odd_p(x.den().get_mpz_t())) {
    throw NotExpandable("even expansion needs an odd numerator over an even denominator, got " +
                        x.to_string());
  }
  EvenCF cf;
  Integer p = x.num();
  Integer q = x.den();
  // Invariant: p/q is never an odd integer, so exactly one even integer lies
  // strictly within distance 1 of it and the remainder |p - 2a q| < |q|.
  while (q != 0) {
    // Even integer nearest p/q: 2 * floor(p/(2q) + 1/2).
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), Integer(p + q).get_mpz_t(), Integer(2 * q).get_mpz_t());
    Integer term = 2 * a;
    Integer rem = p - term * q;
    if (abs(rem) >= abs(q)) {
      throw NotExpandable("no even quotient leaves a small remainder for " + x.to_string());
    }
    cf.terms.push_back(term);
    p = std::move(q);
    q = std::move(rem);
  }
  return cf;
}

MultiplierFunction multipliers_from_even_cf(const EvenCF& cf) {
  if (cf.terms.empty() || cf.terms.size() % 2 != 0) {
    throw InvalidArgument("even continued fraction must have even, non-zero length");
  }
  std::vector<int> lat;
  std::vector<std::int64_t> lon;
  for (std::size_t i = 0; i < cf.terms.size(); i += 2) {
    const Integer& lat_term = cf.terms[i];
    const Integer& lon_term = cf.terms[i + 1];
    if (mpz_odd_p(lat_term.get_mpz_t()) || mpz_odd_p(lon_term.get_mpz_t())) {
      throw InvalidArgument("continued fraction term is odd");
    }
    if (lat_term == 0) throw InvalidArgument("zero latitudinal term cannot be realized");
    const Integer half = lat_term / 2;
    const int sign = half > 0 ? 1 : -1;
    const long count = Integer(abs(half)).get_si();
    for (long c = 1; c < count; ++c) {
      lat.push_back(sign);
      lon.push_back(0);
    }
    lat.push_back(sign);
    const Integer lon_half = lon_term / 2;
    if (!lon_half.fits_slong_p()) throw InvalidArgument("longitudinal multiplier overflows");
    lon.push_back(lon_half.get_si());
  }
  return MultiplierFunction(std::move(lat), std::move(lon));
}

std::vector<MultiplierFunction> realize_knot(const ProjectiveFraction& x) {
  if (x.is_infinite()) throw InvalidArgument("infinity does not describe a nontrivial knot");
  if (mpz_even_p(x.num().get_mpz_t())) {
    throw NotAKnot("numerator " + x.num().get_str() + " is even; the closure is a link");
  }
  const auto [a, b] = schubert_pair(x);
  if (a < 3) throw InvalidArgument("|numerator| < 3 gives the unknot");

  std::vector<MultiplierFunction> out;
  for (const Integer& residue : {mod_positive(b, a), inverse_mod(b, a)}) {
    // Of residue and residue - a exactly one is even, and both lie in (-a, a).
    Integer rep = mpz_even_p(residue.get_mpz_t()) ? residue : Integer(residue - a);
    auto mf = multipliers_from_even_cf(even_cf_expansion(ProjectiveFraction(a, rep)));
    if (std::find(out.begin(), out.end(), mf) == out.end()) out.push_back(std::move(mf));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool knots_equivalent(const ProjectiveFraction& x, const ProjectiveFraction& y,
                      bool include_mirror) {
  if (x.is_infinite() || y.is_infinite() || mpz_even_p(x.num().get_mpz_t()) ||
      mpz_even_p(y.num().get_mpz_t())) {
    throw NotAKnot("knot equivalence needs finite fractions with odd numerators");
  }
  const auto [ax, bx] = schubert_pair(x);
  const auto [ay, by] = schubert_pair(y);
  if (ax != ay) return false;
  const Integer target = mod_positive(by, ax);
  const Integer forward = mod_positive(bx, ax);
  const Integer backward = inverse_mod(bx, ax);
  for (const Integer& candidate : {forward, backward}) {
    if (candidate == target) return true;
    if (include_mirror && mod_positive(-candidate, ax) == target) return true;
  }
  return false;
}

}  // namespace cfrac
}  // namespace bitwist
