#pragma once

// 3x3 upper unitriangular integer matrices
//
//   | 1 p r |
//   | 0 1 q |
//   | 0 0 1 |
//
// with a, b sent to the elementary matrices E12 and E23. Only plain matrix
// multiplication is used here, so this model is independent of the Malcev
// collection formula in heisenberg.hpp.

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "palwidth/freeword.hpp"

namespace palwidth::oracle {

using Integer = boost::multiprecision::cpp_int;

struct Unitriangular {
  Integer p = 0;
  Integer q = 0;
  Integer r = 0;

  friend bool operator==(const Unitriangular&, const Unitriangular&) = default;
};

inline Unitriangular operator*(const Unitriangular& m1, const Unitriangular& m2) {
  // Row 1 of m1 times column 3 of m2: r1 + p1 q2 + r2.
  return {m1.p + m2.p, m1.q + m2.q, m1.r + m2.r + m1.p * m2.q};
}

inline Unitriangular inverse(const Unitriangular& m) { return {-m.p, -m.q, m.p * m.q - m.r}; }

inline Unitriangular matrix_a() { return {1, 0, 0}; }
inline Unitriangular matrix_b() { return {0, 1, 0}; }

inline Unitriangular matrix_eval(const Word& w) {
  Unitriangular m;
  for (Letter x : w.letters()) {
    Unitriangular g = x.generator == 0 ? matrix_a() : matrix_b();
    m = m * (x.inverse ? inverse(g) : g);
  }
  return m;
}

inline Unitriangular power(Unitriangular g, std::int64_t e) {
  if (e < 0) {
    g = inverse(g);
    e = -e;
  }
  Unitriangular out;
  for (std::int64_t i = 0; i < e; ++i) out = out * g;
  return out;
}

/// a^x b^y [b,a]^z as a matrix, computed by multiplying the factors.
/// [b,a] = b^-1 a^-1 b a evaluates to (0, 0, -1).
inline Unitriangular from_malcev(std::int64_t x, std::int64_t y, std::int64_t z) {
  const Unitriangular ax{Integer(x), 0, 0};
  const Unitriangular by{0, Integer(y), 0};
  const Unitriangular ba = inverse(matrix_b()) * inverse(matrix_a()) * matrix_b() * matrix_a();
  Unitriangular c{0, 0, ba.r * Integer(z)};
  return ax * by * c;
}

}  // namespace palwidth::oracle
