#pragma once

// Free reduction by repeated passes that delete the first cancelling pair.
// Quadratic, but shares nothing with the stack reduction in freeword.hpp.

#include <vector>

#include "palwidth/freeword.hpp"

namespace palwidth::oracle {

inline std::vector<Letter> naive_reduce(std::vector<Letter> s) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i].generator == s[i + 1].generator && s[i].inverse != s[i + 1].inverse) {
        s.erase(s.begin() + static_cast<std::ptrdiff_t>(i), s.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return s;
}

}  // namespace palwidth::oracle
