#pragma once

// Freely reduced words over a finite alphabet of named generators.
//
// A Word always holds a freely reduced letter sequence together with the
// alphabet it was built over. Generators are single lowercase ASCII letters;
// in text the uppercase letter denotes the inverse generator.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "palwidth/core.hpp"

namespace palwidth {

/// Upper bound on the number of letters a single word may expand to.
inline constexpr std::size_t kMaxWordLength = std::size_t{1} << 22;

struct Letter {
  std::uint8_t generator = 0;
  bool inverse = false;

  constexpr Letter inverted() const noexcept { return Letter{generator, !inverse}; }

  /// Position in the shortlex order a < a^-1 < b < b^-1 < ...
  constexpr unsigned code() const noexcept { return 2u * generator + (inverse ? 1u : 0u); }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter x, Letter y) noexcept { return x.code() <=> y.code(); }
};

constexpr bool cancels(Letter x, Letter y) noexcept {
  return x.generator == y.generator && x.inverse != y.inverse;
}

class Alphabet {
 public:
  Alphabet() = default;

  /// `names` lists the generators in order, e.g. "ab" or "at".
  explicit Alphabet(std::string_view names) : names_(names) {
    if (names_.empty()) throw AlphabetError("alphabet must declare at least one generator");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      const char c = names_[i];
      if (c < 'a' || c > 'z') throw AlphabetError(std::string("generator names must be lowercase letters, got '") + c + "'");
      if (names_.find(c, i + 1) != std::string::npos) throw AlphabetError(std::string("duplicate generator '") + c + "'");
    }
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& names() const noexcept { return names_; }
  char name(std::uint8_t generator) const { return names_.at(generator); }

  std::optional<std::uint8_t> index(char name) const noexcept {
    const auto pos = names_.find(name);
    if (pos == std::string::npos) return std::nullopt;
    return static_cast<std::uint8_t>(pos);
  }

  Letter letter(char name, bool inverse = false) const {
    const auto i = index(name);
    if (!i) throw AlphabetError(std::string("generator '") + name + "' not in alphabet {" + names_ + "}");
    return Letter{*i, inverse};
  }

  bool contains(Letter x) const noexcept { return x.generator < names_.size(); }

  /// All signed letters in shortlex order.
  std::vector<Letter> letters() const {
    std::vector<Letter> out;
    out.reserve(2 * names_.size());
    for (std::uint8_t g = 0; g < names_.size(); ++g) {
      out.push_back(Letter{g, false});
      out.push_back(Letter{g, true});
    }
    return out;
  }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string names_;
};

class Word;
Word reduce(std::span<const Letter> raw, const Alphabet& alphabet);

class Word {
 public:
  Word() = default;
  explicit Word(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  /// Appends one letter, cancelling against the last letter when possible.
  void push_back(Letter x) {
    if (!alphabet_.contains(x)) throw AlphabetError("letter outside alphabet {" + alphabet_.names() + "}");
    if (!letters_.empty() && cancels(letters_.back(), x)) {
      letters_.pop_back();
      return;
    }
    if (letters_.size() >= kMaxWordLength) throw WordLengthError("word exceeds maximum length");
    letters_.push_back(x);
  }

  /// Appends x^count (count >= 0) letter by letter.
  void append_power(Letter x, std::int64_t count) {
    if (count < 0) {
      x = x.inverted();
      count = checked::neg(count);
    }
    if (static_cast<std::uint64_t>(count) > kMaxWordLength) throw WordLengthError("word exceeds maximum length");
    for (std::int64_t i = 0; i < count; ++i) push_back(x);
  }

  Word& operator*=(const Word& rhs) {
    require_same_alphabet(rhs);
    for (Letter x : rhs.letters_) push_back(x);
    return *this;
  }

  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  friend bool operator==(const Word&, const Word&) = default;

  /// Shortlex: shorter words first, then lexicographic on letter codes.
  friend std::strong_ordering operator<=>(const Word& u, const Word& v) {
    if (u.size() != v.size()) return u.size() <=> v.size();
    return std::lexicographical_compare_three_way(u.letters_.begin(), u.letters_.end(), v.letters_.begin(),
                                                  v.letters_.end());
  }

  void require_same_alphabet(const Word& other) const {
    if (!(alphabet_ == other.alphabet_))
      throw AlphabetError("alphabet mismatch: {" + alphabet_.names() + "} vs {" + other.alphabet_.names() + "}");
  }

 private:
  friend Word reduce(std::span<const Letter> raw, const Alphabet& alphabet);

  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

/// Free reduction by a single left-to-right stack pass.
inline Word reduce(std::span<const Letter> raw, const Alphabet& alphabet) {
  Word w(alphabet);
  w.letters_.reserve(raw.size());
  for (Letter x : raw) w.push_back(x);
  return w;
}

inline Word reverse(const Word& w) {
  std::vector<Letter> letters(w.letters().rbegin(), w.letters().rend());
  return reduce(letters, w.alphabet());
}

inline Word invert(const Word& w) {
  std::vector<Letter> letters;
  letters.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) letters.push_back(it->inverted());
  return reduce(letters, w.alphabet());
}

inline bool is_palindrome(const Word& w) {
  const auto s = w.letters();
  return std::equal(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(s.size() / 2), s.rbegin());
}

/// w^m, reduced.
inline Word power(const Word& w, std::int64_t m) {
  const Word base = m < 0 ? invert(w) : w;
  const std::uint64_t count = m < 0 ? static_cast<std::uint64_t>(checked::neg(m)) : static_cast<std::uint64_t>(m);
  Word out(w.alphabet());
  if (base.empty() || count == 0) return out;
  if (count > kMaxWordLength) throw WordLengthError("word exceeds maximum length");
  for (std::uint64_t i = 0; i < count; ++i) out *= base;
  return out;
}

/// The word consisting of generator `name` raised to `exponent`.
inline Word generator_power(const Alphabet& alphabet, char name, std::int64_t exponent) {
  Word w(alphabet);
  w.append_power(alphabet.letter(name), exponent);
  return w;
}

// ---------------------------------------------------------------------------
// Text form.
//
//   word    := { ws token }
//   token   := gen [ "^" int ] | gen "⁻¹"
//   gen     := lowercase name in the alphabet | its uppercase (inverse)
//   int     := [ "+" | "-" ] digits
// ---------------------------------------------------------------------------

inline Word parse(std::string_view text, const Alphabet& alphabet) {
  Word w(alphabet);
  std::size_t pos = 0;
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (pos < text.size()) {
    const char c = text[pos];
    if (is_space(c)) {
      ++pos;
      continue;
    }
    bool inverse = false;
    char name = c;
    if (c >= 'A' && c <= 'Z') {
      inverse = true;
      name = static_cast<char>(c - 'A' + 'a');
    } else if (c < 'a' || c > 'z') {
      throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
    const auto gen = alphabet.index(name);
    if (!gen) throw ParseError(std::string("unknown generator '") + c + "' for alphabet {" + alphabet.names() + "}", pos);
    const std::size_t token_start = pos;
    ++pos;

    std::int64_t exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      bool negative = false;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
      }
      if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') throw ParseError("expected integer exponent after '^'", pos);
      std::int64_t value = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        try {
          value = checked::add(checked::mul(value, 10), text[pos] - '0');
        } catch (const OverflowError&) {
          throw ParseError("exponent out of range", token_start);
        }
        ++pos;
      }
      exponent = negative ? -value : value;
    } else if (text.substr(pos, 5) == "⁻¹") {
      pos += 5;
      exponent = -1;
    }
    if (static_cast<std::uint64_t>(exponent < 0 ? -exponent : exponent) > kMaxWordLength)
      throw ParseError("exponent too large", token_start);
    w.append_power(Letter{*gen, inverse}, exponent);
  }
  return w;
}

/// Canonical text: maximal runs of one letter, e.g. "a^2 b^-1 a". Empty word is "".
inline std::string format(const Word& w) {
  std::string out;
  const auto s = w.letters();
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = i;
    while (j < s.size() && s[j] == s[i]) ++j;
    const std::size_t run = j - i;
    if (!out.empty()) out += ' ';
    out += w.alphabet().name(s[i].generator);
    if (s[i].inverse) {
      out += "^-" + std::to_string(run);
    } else if (run > 1) {
      out += "^" + std::to_string(run);
    }
    i = j;
  }
  return out;
}

inline const Alphabet& alphabet_ab() {
  static const Alphabet a{"ab"};
  return a;
}

inline const Alphabet& alphabet_at() {
  static const Alphabet a{"at"};
  return a;
}

}  // namespace palwidth
