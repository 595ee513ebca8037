#include "bitwist/presentation.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include "bitwist/errors.hpp"

namespace bitwist {

Word& Word::operator*=(const Word& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out));
}

Word Word::power(std::int64_t e) const {
  const Word base = e < 0 ? inverse() : *this;
  Word out;
  for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) out *= base;
  return out;
}

Word Word::freely_reduced() const {
  std::vector<Letter> stack;
  stack.reserve(letters_.size());
  for (const Letter& l : letters_) {
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

Word Word::cyclically_reduced() const {
  const Word reduced = freely_reduced();
  const auto& ls = reduced.letters_;
  std::size_t lo = 0;
  std::size_t hi = ls.size();
  while (hi - lo >= 2 && ls[lo] == ls[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(ls.begin() + static_cast<std::ptrdiff_t>(lo),
                                  ls.begin() + static_cast<std::ptrdiff_t>(hi)));
}

std::uint32_t Word::generator_bound() const {
  std::uint32_t bound = 0;
  for (const Letter& l : letters_) bound = std::max(bound, l.gen + 1);
  return bound;
}

std::string Word::to_string() const {
  std::string out;
  for (const Letter& l : letters_) {
    if (!out.empty()) out += ' ';
    out += l.exp > 0 ? 'x' : 'X';
    out += std::to_string(l.gen);
  }
  return out.empty() ? "1" : out;
}

Word Word::parse(const std::string& text) {
  std::istringstream in(text);
  std::string token;
  Word w;
  while (in >> token) {
    if (token == "1") continue;
    if (token.size() < 2 || (token[0] != 'x' && token[0] != 'X')) {
      throw InvalidArgument("bad letter '" + token + "' in word");
    }
    std::uint32_t gen = 0;
    for (std::size_t i = 1; i < token.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(token[i]))) {
        throw InvalidArgument("bad letter '" + token + "' in word");
      }
      gen = gen * 10 + static_cast<std::uint32_t>(token[i] - '0');
    }
    w.push({gen, token[0] == 'x' ? 1 : -1});
  }
  return w;
}

void FinitePresentation::validate() const {
  for (const Word& r : relators) {
    if (r.generator_bound() > generator_count) {
      throw InvalidArgument("relator '" + r.to_string() + "' uses a generator beyond " +
                            std::to_string(generator_count));
    }
  }
}

FinitePresentation CyclicPresentation::expand() const {
  FinitePresentation out{n, {}};
  out.relators.reserve(n);
  for (std::uint32_t j = 0; j < n; ++j) out.relators.push_back(presentation::shift(defining_word, n, j));
  return out;
}

namespace presentation {
namespace {

Word gen(std::uint32_t id) { return Word({Letter{id, 1}}); }

// [x(a) x(b)^{-1}]
Word block(std::uint32_t a, std::uint32_t b) { return Word({Letter{a, 1}, Letter{b, -1}}); }

}  // namespace

Word shift(const Word& w, std::uint32_t n, std::int64_t j) {
  if (n == 0) throw InvalidArgument("shift needs n >= 1");
  const std::int64_t step = ((j % n) + n) % n;
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const Letter& l : w.letters()) {
    if (l.gen >= n) throw InvalidArgument("generator id beyond n in shift");
    out.push_back({static_cast<std::uint32_t>((l.gen + step) % n), l.exp});
  }
  return Word(std::move(out));
}

std::uint32_t generator_id(std::size_t i, std::int64_t j, std::uint32_t n) {
  const std::int64_t col = (((j - 1) % n) + n) % n;
  return static_cast<std::uint32_t>(i * n + static_cast<std::size_t>(col));
}

FinitePresentation branched_cover_relators(const MultiplierFunction& mf, std::uint32_t n) {
  if (n == 0) throw InvalidArgument("cover degree must be positive");
  const std::size_t k = mf.k();
  const auto& l = mf.lat();
  const auto& m = mf.lon();
  auto x = [n](std::size_t i, std::int64_t j) { return generator_id(i, j, n); };

  FinitePresentation pres;
  pres.generator_count = static_cast<std::uint32_t>((k + 1) * n);
  pres.relators.reserve((k + 1) * n);
  for (std::size_t i = 0; i <= k; ++i) {
    for (std::int64_t j = 1; j <= static_cast<std::int64_t>(n); ++j) {
      Word r;
      // Equator edge on the type-0 faces, edge to the row below otherwise.
      if (i == 0) {
        r *= gen(x(0, j)).power(l[0]);
      } else {
        r *= block(x(i, j), x(i - 1, j)).power(l[i]);
      }
      r *= block(x(i, j), x(i, j + 1)).power(m[i]);
      if (i < k) r *= block(x(i, j), x(i + 1, j)).power(l[i + 1]);
      r *= block(x(i, j), x(i, j - 1)).power(m[i]);
      pres.relators.push_back(std::move(r));
    }
  }
  return pres;
}

CyclicPresentation eliminate_to_cyclic(const FinitePresentation& pres,
                                       const MultiplierFunction& mf, std::uint32_t n) {
  if (n == 0) throw InvalidArgument("cover degree must be positive");
  const std::size_t k = mf.k();
  const std::size_t total = (k + 1) * n;
  if (pres.generator_count != total || pres.relators.size() != total) {
    throw MalformedInput("presentation does not have (k+1)n generators and relators");
  }
  pres.validate();

  // expr[g] is generator g rewritten over x(0, 1..n), whose ids are 0..n-1.
  std::vector<std::optional<Word>> expr(total);
  for (std::uint32_t j = 0; j < n; ++j) expr[j] = gen(j);

  auto substitute = [&](const std::vector<Letter>& letters) {
    Word out;
    for (const Letter& letter : letters) {
      const auto& e = expr[letter.gen];
      if (!e) throw MalformedInput("relator mentions a generator that is not yet eliminated");
      out *= letter.exp > 0 ? *e : e->inverse();
    }
    return out.freely_reduced();
  };

  for (std::size_t i = 1; i <= k; ++i) {
    for (std::int64_t j = 1; j <= static_cast<std::int64_t>(n); ++j) {
      const std::uint32_t unknown = generator_id(i, j, n);
      const auto& letters = pres.relators[generator_id(i - 1, j, n)].letters();
      std::optional<std::size_t> at;
      for (std::size_t p = 0; p < letters.size(); ++p) {
        if (letters[p].gen != unknown) continue;
        if (at) throw MalformedInput("x(" + std::to_string(i) + "," + std::to_string(j) +
                                     ") occurs more than once in its solving relator");
        at = p;
      }
      if (!at) {
        throw MalformedInput("x(" + std::to_string(i) + "," + std::to_string(j) +
                             ") does not occur in its solving relator");
      }
      const auto split = letters.begin() + static_cast<std::ptrdiff_t>(*at);
      const Word before = substitute({letters.begin(), split});
      const Word after = substitute({split + 1, letters.end()});
      // before * y^e * after = 1
      Word solved = letters[*at].exp > 0 ? before.inverse() * after.inverse() : after * before;
      expr[unknown] = solved.freely_reduced();
    }
  }

  const auto& top = pres.relators[generator_id(k, 1, n)].letters();
  CyclicPresentation out;
  out.n = n;
  out.defining_word = substitute(top).cyclically_reduced();
  return out;
}

CyclicPresentation fibonacci_presentation(std::uint32_t r) {
  if (r == 0) throw InvalidArgument("Fibonacci group needs r >= 1");
  return {r, Word({Letter{0, 1}, Letter{1 % r, 1}, Letter{2 % r, -1}})};
}

CyclicPresentation sieradski_presentation(std::uint32_t n) {
  if (n == 0) throw InvalidArgument("Sieradski group needs n >= 1");
  return {n, Word({Letter{0, -1}, Letter{n - 1, 1}, Letter{1 % n, 1}})};
}

}  // namespace presentation
}  // namespace bitwist
