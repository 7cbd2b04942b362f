#pragma once

// Lamplighter walk model of Z wr Z: a cursor moves along Z and each a^{+-1}
// adjusts the lamp under the cursor. b moves the cursor one step left, so
// b^-i a b^i adjusts lamp i and returns to the origin.

#include <cstdint>
#include <map>

#include "palwidth/freeword.hpp"

namespace palwidth::oracle {

struct LampState {
  std::map<std::int64_t, std::int64_t> lamps;  // zero lamps erased
  std::int64_t cursor = 0;
};

inline LampState lamplighter_walk(const Word& w) {
  LampState s;
  for (Letter x : w.letters()) {
    if (x.generator == 0) {
      auto& lamp = s.lamps[s.cursor];
      lamp += x.inverse ? -1 : 1;
      if (lamp == 0) s.lamps.erase(s.cursor);
    } else {
      s.cursor += x.inverse ? 1 : -1;
    }
  }
  return s;
}

}  // namespace palwidth::oracle
