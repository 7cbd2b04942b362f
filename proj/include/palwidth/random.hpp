#pragma once

// Seeded randomness for the property suites.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the
// standard. Bounded draws use rejection sampling instead of the
// implementation-defined std::uniform_int_distribution, so a seed produces
// the same cases on every platform.

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "palwidth/freeword.hpp"

namespace palwidth {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());  // full 64-bit range
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + r % span);
  }

  bool coin() { return uniform(0, 1) == 1; }

  std::uint64_t next() { return engine_(); }

  /// Reduced word of length exactly `length`, uniformly among reduced words.
  Word reduced_word(const Alphabet& alphabet, std::size_t length) {
    const auto letters = alphabet.letters();
    Word w(alphabet);
    while (w.size() < length) {
      Letter x = letters[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(letters.size()) - 1))];
      if (!w.empty() && cancels(w[w.size() - 1], x)) continue;
      w.push_back(x);
    }
    return w;
  }

  /// Uniform letter sequence of length `length`, then reduced (may come out shorter).
  Word random_word(const Alphabet& alphabet, std::size_t length) {
    const auto letters = alphabet.letters();
    std::vector<Letter> raw;
    raw.reserve(length);
    for (std::size_t i = 0; i < length; ++i)
      raw.push_back(letters[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(letters.size()) - 1))]);
    return reduce(raw, alphabet);
  }

  /// Reduced palindrome of length exactly `length`.
  Word palindrome(const Alphabet& alphabet, std::size_t length) {
    const Word half = reduced_word(alphabet, length / 2);
    Word w = half;
    if (length % 2 != 0) {
      const auto letters = alphabet.letters();
      Letter c;
      do {
        c = letters[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(letters.size()) - 1))];
      } while (!half.empty() && cancels(half[half.size() - 1], c));
      w.push_back(c);
    }
    return w * reverse(half);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace palwidth
