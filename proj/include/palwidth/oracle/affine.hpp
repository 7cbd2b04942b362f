#pragma once

// BS(1,n) as 2x2 rational matrices [[s, q], [0, 1]] with arbitrary-precision
// entries: a = [[1, 1], [0, 1]], t = [[1/n, 0], [0, 1]].

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "palwidth/freeword.hpp"

namespace palwidth::oracle {

using Rational = boost::multiprecision::cpp_rational;

struct Affine {
  Rational s{1};
  Rational q{0};

  friend bool operator==(const Affine&, const Affine&) = default;
};

inline Affine operator*(const Affine& m1, const Affine& m2) { return {m1.s * m2.s, m1.s * m2.q + m1.q}; }

inline Affine inverse(const Affine& m) { return {1 / m.s, -m.q / m.s}; }

inline Affine affine_eval(const Word& w, std::int64_t n) {
  const Affine a{1, 1};
  const Affine t{Rational(1) / Rational(n), 0};
  Affine m;
  for (Letter x : w.letters()) {
    const Affine& g = x.generator == 0 ? a : t;
    m = m * (x.inverse ? inverse(g) : g);
  }
  return m;
}

/// Matrix of the element with translation num / n^den_exp and dilation exponent dil.
inline Affine affine_of(std::int64_t num, std::int64_t den_exp, std::int64_t dil, std::int64_t n) {
  Rational scale{1};
  Rational base{n};
  for (std::int64_t i = 0; i < (dil < 0 ? -dil : dil); ++i) scale *= base;
  if (dil > 0) scale = 1 / scale;
  Rational den{1};
  for (std::int64_t i = 0; i < den_exp; ++i) den *= base;
  return {scale, Rational(num) / den};
}

}  // namespace palwidth::oracle
