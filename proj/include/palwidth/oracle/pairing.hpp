#pragma once

// Quadratic scan over all ordered pairs of enumerated palindromes; the
// reference the meet-in-the-middle search is compared against.

#include <optional>
#include <utility>
#include <vector>

#include "palwidth/widthsearch.hpp"

namespace palwidth::oracle {

template <Evaluator G>
std::optional<std::pair<Word, Word>> brute_force_pair(const G& group, const typename G::Element& target, int max_len) {
  const std::vector<Word> pals = enumerate_palindromes(group.alphabet(), max_len);
  std::vector<typename G::Element> images;
  images.reserve(pals.size());
  for (const Word& p : pals) images.push_back(group.eval(p));
  for (std::size_t i = 0; i < pals.size(); ++i)
    for (std::size_t j = 0; j < pals.size(); ++j)
      if (group.multiply(images[i], images[j]) == target) return std::pair{pals[i], pals[j]};
  return std::nullopt;
}

}  // namespace palwidth::oracle
