#pragma once

// Palindromic factorization certificates and their checker.
//
// The checker deliberately does not reuse Word's reduction or palindrome
// test: it works on raw letter codes with its own stack reduction, so a bug
// in freeword cannot certify itself.

#include <cstddef>
#include <string>
#include <vector>

#include "palwidth/freeword.hpp"

namespace palwidth {

/// `target` is the element the factors multiply to; `Element` is Word for
/// free-group certificates and a group element type otherwise.
template <class Element>
struct Decomposition {
  Element target{};
  std::vector<Word> factors;
  Alphabet alphabet;

  std::size_t length() const noexcept { return factors.size(); }

  Word product() const {
    Word w(alphabet);
    for (const Word& f : factors) w *= f;
    return w;
  }
};

using PalindromicDecomposition = Decomposition<Word>;

namespace check {

inline std::vector<unsigned> reduced_codes(const std::vector<unsigned>& raw) {
  std::vector<unsigned> stack;
  for (unsigned c : raw) {
    if (!stack.empty() && (stack.back() ^ 1u) == c) {
      stack.pop_back();
    } else {
      stack.push_back(c);
    }
  }
  return stack;
}

inline std::vector<unsigned> codes_of(const Word& w) {
  std::vector<unsigned> out;
  out.reserve(w.size());
  for (Letter x : w.letters()) out.push_back(x.code());
  return out;
}

inline bool symmetric(const std::vector<unsigned>& s) {
  for (std::size_t i = 0, j = s.size(); i < j--; ++i)
    if (s[i] != s[j]) return false;
  return true;
}

/// Reduces a factor and tests letter-for-letter symmetry.
inline bool factor_is_palindrome(const Word& w) { return symmetric(reduced_codes(codes_of(w))); }

inline std::vector<unsigned> product_codes(const std::vector<Word>& factors) {
  std::vector<unsigned> raw;
  for (const Word& f : factors) {
    const auto c = codes_of(f);
    raw.insert(raw.end(), c.begin(), c.end());
  }
  return reduced_codes(raw);
}

struct Outcome {
  bool valid = false;
  std::string reason;
};

inline bool same_alphabet(const std::vector<Word>& factors, const Alphabet& alphabet) {
  for (const Word& f : factors)
    if (!(f.alphabet() == alphabet)) return false;
  return true;
}

}  // namespace check

/// Free-group certificate: every factor a palindrome and the product reduces to the target.
inline check::Outcome validate(const PalindromicDecomposition& d) {
  if (!check::same_alphabet(d.factors, d.alphabet) || !(d.target.alphabet() == d.alphabet))
    return {false, "alphabet mismatch"};
  for (std::size_t i = 0; i < d.factors.size(); ++i)
    if (!check::factor_is_palindrome(d.factors[i])) return {false, "factor " + std::to_string(i) + " is not a palindrome"};
  if (check::product_codes(d.factors) != check::reduced_codes(check::codes_of(d.target)))
    return {false, "product of factors differs from target"};
  return {true, {}};
}

/// Group certificate: factors palindromic, and `evaluate` (a homomorphism from
/// words) sends their concatenation to the target.
template <class Element, class Evaluate>
check::Outcome validate(const Decomposition<Element>& d, Evaluate&& evaluate) {
  if (!check::same_alphabet(d.factors, d.alphabet)) return {false, "alphabet mismatch"};
  for (std::size_t i = 0; i < d.factors.size(); ++i)
    if (!check::factor_is_palindrome(d.factors[i])) return {false, "factor " + std::to_string(i) + " is not a palindrome"};
  Word w(d.alphabet);
  for (const Word& f : d.factors) w *= f;
  if (!(evaluate(w) == d.target)) return {false, "product of factors does not evaluate to target"};
  return {true, {}};
}

}  // namespace palwidth
