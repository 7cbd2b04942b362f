#pragma once

// Error hierarchy and overflow-checked integer helpers shared by every module.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace palwidth {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed word or element literal. `position()` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at offset " + std::to_string(position) + ")"), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Generator outside the declared alphabet, or words over different alphabets combined.
class AlphabetError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A word would exceed kMaxWordLength letters.
class WordLengthError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (non-palindromic input, element not in G', ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A self-verifying constructor produced output that failed its own check. Always a bug.
class VerificationError : public Error {
 public:
  using Error::Error;
};

/// A bounded search hit its entry cap. Depths up to `completed_depth()` were fully explored.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& message, int completed_depth)
      : Error(message), completed_depth_(completed_depth) {}

  int completed_depth() const noexcept { return completed_depth_; }

 private:
  int completed_depth_;
};

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline std::int64_t neg(std::int64_t a) { return sub(0, a); }

inline std::int64_t abs(std::int64_t a) { return a < 0 ? neg(a) : a; }

/// base^exp for exp >= 0.
inline std::int64_t pow(std::int64_t base, std::int64_t exp) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < exp; ++i) r = mul(r, base);
  return r;
}

}  // namespace checked

}  // namespace palwidth
