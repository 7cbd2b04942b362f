#pragma once

// Word-level palindromic factorizations valid in any group: powers of
// palindromes, conjugates and commutators of palindrome products, powers of
// two-palindrome products, and coset concatenation. Every construction
// returns a certificate that has passed `validate`.

#include <cstdint>
#include <span>
#include <vector>

#include "palwidth/certificate.hpp"
#include "palwidth/freeword.hpp"

namespace palwidth {

namespace detail {

inline void require_palindrome(const Word& p, const char* what) {
  if (!is_palindrome(p)) throw PreconditionError(std::string(what) + " is not a palindrome: \"" + format(p) + "\"");
}

inline void push_factor(PalindromicDecomposition& d, const Word& factor) {
  if (!factor.empty()) d.factors.push_back(factor);
}

inline PalindromicDecomposition finish(PalindromicDecomposition d, const char* construction) {
  const auto outcome = validate(d);
  if (!outcome.valid) throw VerificationError(std::string(construction) + ": " + outcome.reason);
  return d;
}

inline Word concat(std::initializer_list<const Word*> parts, const Alphabet& alphabet) {
  Word w(alphabet);
  for (const Word* p : parts) w *= *p;
  return w;
}

}  // namespace detail

/// p^m for a palindrome p; the result is again a palindrome.
inline Word pal_power(const Word& p, std::int64_t m) {
  detail::require_palindrome(p, "pal_power input");
  Word result = power(p, m);
  if (!is_palindrome(result)) throw VerificationError("pal_power produced a non-palindrome");
  return result;
}

/// Certificate for u^-1 (p_1 ... p_k) u.
///
/// Consecutive palindromes are paired as (u^-1 p_i rev(u^-1)) (rev(u) p_{i+1} u);
/// rev(u^-1) rev(u) cancels, so each pair multiplies to u^-1 p_i p_{i+1} u.
/// An unpaired last palindrome costs one extra factor rev(u) u.
/// At most k factors for even k and k + 1 for odd k.
inline PalindromicDecomposition conjugate_decomposition(const Word& u, std::span<const Word> pals) {
  if (pals.empty()) throw PreconditionError("conjugate_decomposition needs at least one palindrome");
  const Alphabet& alphabet = u.alphabet();
  for (const Word& p : pals) {
    u.require_same_alphabet(p);
    detail::require_palindrome(p, "conjugate_decomposition factor");
  }
  const Word u_inv = invert(u);
  const Word left = reverse(u_inv);   // rev(u^-1)
  const Word right = reverse(u);      // rev(u)

  PalindromicDecomposition d;
  d.alphabet = alphabet;
  Word product(alphabet);
  for (const Word& p : pals) product *= p;
  d.target = detail::concat({&u_inv, &product, &u}, alphabet);

  std::size_t i = 0;
  for (; i + 1 < pals.size(); i += 2) {
    detail::push_factor(d, detail::concat({&u_inv, &pals[i], &left}, alphabet));
    detail::push_factor(d, detail::concat({&right, &pals[i + 1], &u}, alphabet));
  }
  if (i < pals.size()) {
    detail::push_factor(d, detail::concat({&u_inv, &pals[i], &left}, alphabet));
    detail::push_factor(d, detail::concat({&right, &u}, alphabet));
  }
  return detail::finish(std::move(d), "conjugate_decomposition");
}

/// Certificate for [u, p_1 ... p_k] = u^-1 (p_k^-1 ... p_1^-1) u p_1 ... p_k
/// with at most 2k + (k mod 2) factors. A trivial commutator gets the empty certificate.
inline PalindromicDecomposition commutator_decomposition(const Word& u, std::span<const Word> pals) {
  if (pals.empty()) throw PreconditionError("commutator_decomposition needs at least one palindrome");
  for (const Word& p : pals) detail::require_palindrome(p, "commutator_decomposition factor");

  std::vector<Word> inverses;
  inverses.reserve(pals.size());
  for (auto it = pals.rbegin(); it != pals.rend(); ++it) inverses.push_back(invert(*it));

  PalindromicDecomposition d = conjugate_decomposition(u, inverses);
  Word product(u.alphabet());
  for (const Word& p : pals) product *= p;
  d.target *= product;
  if (d.target.empty()) {
    d.factors.clear();
    return d;
  }
  for (const Word& p : pals) detail::push_factor(d, p);
  return detail::finish(std::move(d), "commutator_decomposition");
}

/// Two-factor certificate for (pq)^m: (pq)^(m-1) p, then q. Negative m uses
/// (pq)^-1 = q^-1 p^-1, itself a product of the two palindromes q^-1, p^-1.
inline PalindromicDecomposition pal_pair_power(const Word& p, const Word& q, std::int64_t m) {
  detail::require_palindrome(p, "pal_pair_power p");
  detail::require_palindrome(q, "pal_pair_power q");
  p.require_same_alphabet(q);

  PalindromicDecomposition d;
  d.alphabet = p.alphabet();
  d.target = power(p * q, m);
  if (m == 0) return d;

  const Word first = m > 0 ? p : invert(q);
  const Word second = m > 0 ? q : invert(p);
  const std::int64_t count = m > 0 ? m : checked::neg(m);
  detail::push_factor(d, power(first * second, count - 1) * first);
  detail::push_factor(d, second);
  return detail::finish(std::move(d), "pal_pair_power");
}

/// Concatenates a certificate for h with one for a coset representative g,
/// giving a certificate for h g whose length is the sum of both lengths.
inline PalindromicDecomposition combine_coset_decomposition(const PalindromicDecomposition& d_h,
                                                            const PalindromicDecomposition& d_rep) {
  if (!(d_h.alphabet == d_rep.alphabet)) throw AlphabetError("combine_coset_decomposition: alphabet mismatch");
  for (const auto* d : {&d_h, &d_rep}) {
    const auto outcome = validate(*d);
    if (!outcome.valid) throw PreconditionError("combine_coset_decomposition: invalid input certificate: " + outcome.reason);
  }
  PalindromicDecomposition d;
  d.alphabet = d_h.alphabet;
  d.target = d_h.target * d_rep.target;
  d.factors = d_h.factors;
  d.factors.insert(d.factors.end(), d_rep.factors.begin(), d_rep.factors.end());
  return detail::finish(std::move(d), "combine_coset_decomposition");
}

/// Single-factor certificate for a palindrome (empty certificate for the empty word).
inline PalindromicDecomposition trivial_decomposition(const Word& p) {
  detail::require_palindrome(p, "trivial_decomposition input");
  PalindromicDecomposition d;
  d.alphabet = p.alphabet();
  d.target = p;
  detail::push_factor(d, p);
  return d;
}

}  // namespace palwidth
