#pragma once

// BS(1,n) = <a, t | t^-1 a t = a^n> through its faithful affine action on Z[1/n]:
// the element (q, d) is the map x -> n^-d x + q, a = (1, 0), t = (0, 1), and
// products compose in word order (g1 g2 is the matrix product).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>

#include "palwidth/certificate.hpp"
#include "palwidth/core.hpp"
#include "palwidth/freeword.hpp"
#include "palwidth/widthsearch.hpp"

namespace palwidth {

/// q = num / n^den_exp in lowest terms (n does not divide num when den_exp > 0).
struct BSElement {
  std::int64_t num = 0;
  std::int64_t den_exp = 0;
  std::int64_t dil = 0;
  std::int64_t n = 2;

  friend bool operator==(const BSElement&, const BSElement&) = default;
};

inline void require_valid_n(std::int64_t n) {
  if (n > -2 && n < 2) throw PreconditionError("BS(1,n) needs |n| >= 2, got n = " + std::to_string(n));
}

namespace detail {

struct NAdic {
  std::int64_t num = 0;
  std::int64_t den_exp = 0;
};

inline NAdic normalize(NAdic q, std::int64_t n) {
  if (q.num == 0) return {};
  while (q.den_exp > 0 && q.num % n == 0) {
    q.num /= n;
    --q.den_exp;
  }
  return q;
}

/// q * n^-d.
inline NAdic scale(NAdic q, std::int64_t d, std::int64_t n) {
  const std::int64_t e = checked::add(q.den_exp, d);
  if (e >= 0) return normalize({q.num, e}, n);
  return {checked::mul(q.num, checked::pow(n, checked::neg(e))), 0};
}

inline NAdic add(NAdic p, NAdic q, std::int64_t n) {
  const std::int64_t e = std::max(p.den_exp, q.den_exp);
  const std::int64_t lhs = checked::mul(p.num, checked::pow(n, e - p.den_exp));
  const std::int64_t rhs = checked::mul(q.num, checked::pow(n, e - q.den_exp));
  return normalize({checked::add(lhs, rhs), e}, n);
}

}  // namespace detail

inline BSElement bs_identity(std::int64_t n) {
  require_valid_n(n);
  return {0, 0, 0, n};
}

inline BSElement bs_make(std::int64_t num, std::int64_t den_exp, std::int64_t dil, std::int64_t n) {
  require_valid_n(n);
  if (den_exp < 0) throw PreconditionError("BS element: den_exp must be non-negative");
  const auto q = detail::normalize({num, den_exp}, n);
  return {q.num, q.den_exp, dil, n};
}

/// (q1, d1)(q2, d2) = (q1 + n^-d1 q2, d1 + d2).
inline BSElement bs_mul(const BSElement& g1, const BSElement& g2) {
  if (g1.n != g2.n) throw PreconditionError("bs_mul: elements of different groups");
  const auto q = detail::add({g1.num, g1.den_exp}, detail::scale({g2.num, g2.den_exp}, g1.dil, g1.n), g1.n);
  return {q.num, q.den_exp, checked::add(g1.dil, g2.dil), g1.n};
}

/// (q, d)^-1 = (-n^d q, -d).
inline BSElement bs_inv(const BSElement& g) {
  const auto q = detail::scale({checked::neg(g.num), g.den_exp}, checked::neg(g.dil), g.n);
  return {q.num, q.den_exp, checked::neg(g.dil), g.n};
}

inline void require_alphabet_at(const Word& w, const char* who) {
  if (!(w.alphabet() == alphabet_at()))
    throw AlphabetError(std::string(who) + " expects a word over {a,t}, got {" + w.alphabet().names() + "}");
}

inline BSElement bs_eval(const Word& w, std::int64_t n) {
  require_alphabet_at(w, "bs_eval");
  BSElement g = bs_identity(n);
  for (Letter x : w.letters()) {
    const std::int64_t e = x.inverse ? -1 : 1;
    if (x.generator == 0) {
      // g a^e: translation part gains n^-d e
      const auto q = detail::add({g.num, g.den_exp}, detail::scale({e, 0}, g.dil, n), n);
      g.num = q.num;
      g.den_exp = q.den_exp;
    } else {
      g.dil = checked::add(g.dil, e);
    }
  }
  return g;
}

/// g = t^k a^l t^-m with k, m >= 0.
struct BSNormalForm {
  std::int64_t k = 0;
  std::int64_t l = 0;
  std::int64_t m = 0;

  friend bool operator==(const BSNormalForm&, const BSNormalForm&) = default;
};

/// t^k a^l t^-m evaluates to (l n^-k, k - m), so k must cover both the
/// denominator exponent and the dilation. Taking k = max(den_exp, dil, 0)
/// gives the minimal form: when k, m > 0 we have k = den_exp and n does not divide l.
inline BSNormalForm bs_normal_form(const BSElement& g) {
  const std::int64_t k = std::max({g.den_exp, g.dil, std::int64_t{0}});
  const std::int64_t m = checked::sub(k, g.dil);
  const std::int64_t l = checked::mul(g.num, checked::pow(g.n, k - g.den_exp));
  return {k, l, m};
}

inline Word render(const BSNormalForm& nf) {
  const Alphabet& at = alphabet_at();
  return generator_power(at, 't', nf.k) * generator_power(at, 'a', nf.l) * generator_power(at, 't', checked::neg(nf.m));
}

/// g = (t^k a^l t^k) (t^-(m+k)), two palindromes.
inline Decomposition<BSElement> bs_two_pal_decomposition(const BSElement& g) {
  const Alphabet& at = alphabet_at();
  const BSNormalForm nf = bs_normal_form(g);
  Decomposition<BSElement> d;
  d.target = g;
  d.alphabet = at;
  const Word first = generator_power(at, 't', nf.k) * generator_power(at, 'a', nf.l) * generator_power(at, 't', nf.k);
  const Word second = generator_power(at, 't', checked::neg(checked::add(nf.m, nf.k)));
  for (const Word* f : {&first, &second})
    if (!f->empty()) d.factors.push_back(*f);
  const auto outcome = validate(d, [&](const Word& w) { return bs_eval(w, g.n); });
  if (!outcome.valid || d.length() > 2) throw VerificationError("bs_two_pal_decomposition: " + outcome.reason);
  return d;
}

/// Shortlex-first palindrome of length <= max_len evaluating to g, if any.
/// A negative answer only covers the searched lengths.
inline std::optional<Word> bs_is_palindrome_bounded(const BSElement& g, int max_len) {
  std::optional<Word> found;
  for_each_palindrome(alphabet_at(), max_len, [&](const Word& p) {
    if (!found && bs_eval(p, g.n) == g) found = p;
  });
  return found;
}

struct BSGroup {
  using Element = BSElement;

  std::int64_t n = 2;

  explicit BSGroup(std::int64_t n_) : n(n_) { require_valid_n(n); }

  const Alphabet& alphabet() const { return alphabet_at(); }
  std::string label() const { return "bs:" + std::to_string(n); }
  Element identity() const { return bs_identity(n); }
  Element eval(const Word& w) const { return bs_eval(w, n); }
  Element multiply(const Element& x, const Element& y) const { return bs_mul(x, y); }
  Element inverse(const Element& x) const { return bs_inv(x); }
  std::string encode(const Element& x) const {
    return std::to_string(x.num) + '/' + std::to_string(x.den_exp) + '/' + std::to_string(x.dil);
  }
  std::string describe(const Element& x) const {
    return "{\"num\":" + std::to_string(x.num) + ",\"den_exp\":" + std::to_string(x.den_exp) +
           ",\"dil\":" + std::to_string(x.dil) + ",\"n\":" + std::to_string(x.n) + "}";
  }
};

}  // namespace palwidth
