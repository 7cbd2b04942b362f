#pragma once

// The free nilpotent group of class 2 on {a, b}, in Malcev coordinates
// (x, y, z) <-> a^x b^y [b,a]^z, where [b,a] = b^-1 a^-1 b a is central.

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <utility>

#include "palwidth/certificate.hpp"
#include "palwidth/core.hpp"
#include "palwidth/freeword.hpp"
#include "palwidth/wreath.hpp"

namespace palwidth {

struct HeisElement {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t z = 0;

  friend bool operator==(const HeisElement&, const HeisElement&) = default;
};

/// Collecting b^y1 a^x2 = a^x2 b^y1 [b,a]^(x2 y1) gives the cross term.
inline HeisElement h_mul(const HeisElement& g1, const HeisElement& g2) {
  return {checked::add(g1.x, g2.x), checked::add(g1.y, g2.y),
          checked::add(checked::add(g1.z, g2.z), checked::mul(g2.x, g1.y))};
}

inline HeisElement h_inv(const HeisElement& g) {
  return {checked::neg(g.x), checked::neg(g.y), checked::sub(checked::mul(g.x, g.y), g.z)};
}

/// Image under the reversal anti-automorphism fixing a and b.
inline HeisElement h_reversal(const HeisElement& g) {
  return {g.x, g.y, checked::sub(checked::mul(g.x, g.y), g.z)};
}

inline HeisElement h_eval(const Word& w) {
  require_alphabet_ab(w, "h_eval");
  HeisElement g;
  for (Letter letter : w.letters()) {
    const std::int64_t e = letter.inverse ? -1 : 1;
    if (letter.generator == 0) {
      // (x, y, z) a^e = (x + e, y, z + e y)
      g.z = checked::add(g.z, checked::mul(e, g.y));
      g.x = checked::add(g.x, e);
    } else {
      g.y = checked::add(g.y, e);
    }
  }
  return g;
}

/// The quotient Z wr Z -> N(2,2): a_i -> (1, 0, -i), b -> (0, 1, 0).
inline HeisElement wreath_to_heis(const WreathElement& g) {
  HeisElement h;
  for (const auto& [i, n] : g.tail) {
    h.x = checked::add(h.x, n);
    h.z = checked::sub(h.z, checked::mul(i, n));
  }
  h.y = g.shift;
  return h;
}

/// Palindromes have images fixed by reversal, i.e. 2z = xy; every such
/// element is attained by b^(y/2) a^x b^(y/2) or a^(x/2) b^y a^(x/2).
inline bool is_pal_image(const HeisElement& h) { return checked::mul(2, h.z) == checked::mul(h.x, h.y); }

/// A palindromic word evaluating to h, when is_pal_image(h).
inline std::optional<Word> pal_image_word(const HeisElement& h) {
  if (!is_pal_image(h)) return std::nullopt;
  const Alphabet& ab = alphabet_ab();
  Word w(ab);
  if (h.y % 2 == 0) {
    w = generator_power(ab, 'b', h.y / 2) * generator_power(ab, 'a', h.x) * generator_power(ab, 'b', h.y / 2);
  } else {
    w = generator_power(ab, 'a', h.x / 2) * generator_power(ab, 'b', h.y) * generator_power(ab, 'a', h.x / 2);
  }
  if (!is_palindrome(w) || !(h_eval(w) == h)) throw VerificationError("pal_image_word: witness does not evaluate to target");
  return w;
}

struct TwoPalWitness {
  Word first;
  Word second;
};

namespace detail {

struct Bezout {
  std::int64_t g, s, t;  // s*a + t*b = g = gcd(a, b) >= 0
};

inline Bezout extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, checked::sub(old_r, checked::mul(q, r)));
    std::tie(old_s, s) = std::make_pair(s, checked::sub(old_s, checked::mul(q, s)));
    std::tie(old_t, t) = std::make_pair(t, checked::sub(old_t, checked::mul(q, t)));
  }
  if (old_r < 0) return {checked::neg(old_r), checked::neg(old_s), checked::neg(old_t)};
  return {old_r, old_s, old_t};
}

inline bool even(std::int64_t v) { return v % 2 == 0; }

/// Parity side conditions: both factors must be palindrome images.
inline bool split_ok(const HeisElement& h, std::int64_t x1, std::int64_t y1) {
  const std::int64_t x2 = checked::sub(h.x, x1);
  const std::int64_t y2 = checked::sub(h.y, y1);
  return (even(x1) || even(y1)) && (even(x2) || even(y2));
}

inline std::optional<TwoPalWitness> make_two_pal(const HeisElement& h, std::int64_t x1, std::int64_t y1) {
  const HeisElement p1{x1, y1, checked::mul(x1, y1) / 2};
  const HeisElement p2{checked::sub(h.x, x1), checked::sub(h.y, y1), checked::mul(checked::sub(h.x, x1), checked::sub(h.y, y1)) / 2};
  TwoPalWitness w{*pal_image_word(p1), *pal_image_word(p2)};
  if (!(h_eval(w.first * w.second) == h)) throw VerificationError("two_pal_product_decide: witness pair does not multiply to target");
  return w;
}

}  // namespace detail

/// Decides whether h is a product of two palindrome images.
///
/// With P1 = (x1, y1, x1 y1 / 2) and P2 = (X - x1, Y - y1, ...) the z-coordinate
/// condition collapses to the linear equation X y1 - Y x1 = 2Z - XY, subject to
/// x1 y1 and x2 y2 being even. Solutions form the family
/// (x1, y1) + t (X, Y) / gcd(X, Y), and the parity conditions only depend on
/// t mod 2, so checking t in {0, 1} is exhaustive.
inline std::optional<TwoPalWitness> two_pal_product_decide(const HeisElement& h) {
  const std::int64_t rhs = checked::sub(checked::mul(2, h.z), checked::mul(h.x, h.y));
  if (h.x == 0 && h.y == 0) {
    if (rhs != 0) return std::nullopt;
    return detail::make_two_pal(h, 0, 0);
  }
  // X * y1 + (-Y) * x1 = rhs
  const auto bz = detail::extended_gcd(h.x, checked::neg(h.y));
  if (rhs % bz.g != 0) return std::nullopt;
  const std::int64_t scale = rhs / bz.g;
  const std::int64_t y1 = checked::mul(bz.s, scale);
  const std::int64_t x1 = checked::mul(bz.t, scale);
  const std::int64_t step_x = h.x / bz.g;
  const std::int64_t step_y = h.y / bz.g;
  for (std::int64_t t = 0; t < 2; ++t) {
    const std::int64_t cx = checked::add(x1, checked::mul(t, step_x));
    const std::int64_t cy = checked::add(y1, checked::mul(t, step_y));
    if (detail::split_ok(h, cx, cy)) return detail::make_two_pal(h, cx, cy);
  }
  return std::nullopt;
}

/// Same decision by scanning one full period of the solution family:
/// x1 over [0, 2|X|) when X != 0 (y1 is then forced), else y1 over [0, 2).
inline std::optional<TwoPalWitness> two_pal_product_search(const HeisElement& h) {
  const std::int64_t rhs = checked::sub(checked::mul(2, h.z), checked::mul(h.x, h.y));
  if (h.x == 0 && h.y == 0) return rhs == 0 ? detail::make_two_pal(h, 0, 0) : std::nullopt;
  if (h.x != 0) {
    for (std::int64_t x1 = 0; x1 < checked::mul(2, checked::abs(h.x)); ++x1) {
      const std::int64_t num = checked::add(rhs, checked::mul(h.y, x1));
      if (num % h.x != 0) continue;
      const std::int64_t y1 = num / h.x;
      if (detail::split_ok(h, x1, y1)) return detail::make_two_pal(h, x1, y1);
    }
    return std::nullopt;
  }
  // X = 0: -Y x1 = rhs forces x1; y1 is free.
  if (rhs % h.y != 0) return std::nullopt;
  const std::int64_t x1 = checked::neg(rhs / h.y);
  for (std::int64_t y1 = 0; y1 < 2; ++y1)
    if (detail::split_ok(h, x1, y1)) return detail::make_two_pal(h, x1, y1);
  return std::nullopt;
}

/// Exact palindromic length in N(2,2): 0 for the identity, 1 for palindrome
/// images, 2 when two_pal_product_decide succeeds, otherwise 3.
inline int heis_pal_length(const HeisElement& h) {
  if (h == HeisElement{}) return 0;
  if (is_pal_image(h)) return 1;
  if (two_pal_product_decide(h)) return 2;
  return 3;
}

/// Lifts h to Z wr Z along wreath_to_heis: a_0^(x+z) a_1^(-z) b^y.
inline WreathElement heis_lift(const HeisElement& h) {
  SupportVector tail;
  tail.add(0, checked::add(h.x, h.z));
  tail.add(1, checked::neg(h.z));
  return {tail, h.y};
}

/// Shortest palindromic factorization of h. Lengths 1 and 2 come from the
/// closed forms above; otherwise the three-factor certificate of a lift to
/// Z wr Z is pushed down, since the quotient map sends palindromes to palindromes.
inline Decomposition<HeisElement> heis_decomposition(const HeisElement& h) {
  Decomposition<HeisElement> d;
  d.target = h;
  d.alphabet = alphabet_ab();
  if (h == HeisElement{}) return d;
  if (auto p = pal_image_word(h)) {
    d.factors.push_back(*p);
  } else if (auto pair = two_pal_product_decide(h)) {
    for (const Word* f : {&pair->first, &pair->second})
      if (!f->empty()) d.factors.push_back(*f);
  } else {
    d.factors = three_pal_decomposition(heis_lift(h)).factors;
  }
  const auto outcome = validate(d, [](const Word& w) { return h_eval(w); });
  if (!outcome.valid) throw VerificationError("heis_decomposition: " + outcome.reason);
  return d;
}

struct HeisGroup {
  using Element = HeisElement;

  const Alphabet& alphabet() const { return alphabet_ab(); }
  std::string label() const { return "heis"; }
  Element identity() const { return {}; }
  Element eval(const Word& w) const { return h_eval(w); }
  Element multiply(const Element& p, const Element& q) const { return h_mul(p, q); }
  Element inverse(const Element& p) const { return h_inv(p); }
  std::string encode(const Element& p) const {
    return std::to_string(p.x) + ',' + std::to_string(p.y) + ',' + std::to_string(p.z);
  }
  std::string describe(const Element& p) const {
    return '[' + std::to_string(p.x) + ", " + std::to_string(p.y) + ", " + std::to_string(p.z) + ']';
  }
};

}  // namespace palwidth
