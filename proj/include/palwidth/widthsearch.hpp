#pragma once

// Group-agnostic brute force: palindrome enumeration, Cayley balls and
// bounded palindromic length by meet-in-the-middle over image sets.
//
// Any type modelling `Evaluator` plugs in: it supplies the alphabet, word
// evaluation and group operations on a canonical element type, plus a
// byte-comparable encoding used as the hash key.

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "palwidth/certificate.hpp"
#include "palwidth/core.hpp"
#include "palwidth/freeword.hpp"

namespace palwidth {

template <class G>
concept Evaluator = requires(const G& g, const Word& w, const typename G::Element& x) {
  { g.alphabet() } -> std::convertible_to<const Alphabet&>;
  { g.label() } -> std::convertible_to<std::string>;
  { g.identity() } -> std::same_as<typename G::Element>;
  { g.eval(w) } -> std::same_as<typename G::Element>;
  { g.multiply(x, x) } -> std::same_as<typename G::Element>;
  { g.inverse(x) } -> std::same_as<typename G::Element>;
  { g.encode(x) } -> std::same_as<std::string>;
  { g.describe(x) } -> std::same_as<std::string>;
  { x == x } -> std::convertible_to<bool>;
};

namespace detail {

template <class Visit>
void for_each_reduced_word(const std::vector<Letter>& letters, std::size_t length, std::vector<Letter>& prefix,
                           Visit& visit) {
  if (prefix.size() == length) {
    visit(prefix);
    return;
  }
  for (Letter x : letters) {
    if (!prefix.empty() && cancels(prefix.back(), x)) continue;
    prefix.push_back(x);
    for_each_reduced_word(letters, length, prefix, visit);
    prefix.pop_back();
  }
}

}  // namespace detail

/// Calls visit(word) for every reduced palindrome of length <= max_len, once each, in shortlex order.
///
/// A palindrome of length 2h is u rev(u) for reduced u of length h; the seam
/// repeats a letter, so it is always reduced. Length 2h + 1 adds a centre
/// letter c, which must not cancel the last letter of u.
template <class Visit>
void for_each_palindrome(const Alphabet& alphabet, int max_len, Visit&& visit) {
  if (max_len < 0) throw PreconditionError("for_each_palindrome: max_len must be non-negative");
  const std::vector<Letter> letters = alphabet.letters();
  std::vector<Letter> half;
  for (int n = 0; n <= max_len; ++n) {
    const std::size_t h = static_cast<std::size_t>(n / 2);
    const bool odd = n % 2 != 0;
    auto emit = [&](const std::vector<Letter>& u) {
      if (!odd) {
        std::vector<Letter> full(u);
        full.insert(full.end(), u.rbegin(), u.rend());
        visit(reduce(full, alphabet));
        return;
      }
      for (Letter c : letters) {
        if (!u.empty() && cancels(u.back(), c)) continue;
        std::vector<Letter> full(u);
        full.push_back(c);
        full.insert(full.end(), u.rbegin(), u.rend());
        visit(reduce(full, alphabet));
      }
    };
    half.clear();
    detail::for_each_reduced_word(letters, h, half, emit);
  }
}

inline std::vector<Word> enumerate_palindromes(const Alphabet& alphabet, int max_len) {
  std::vector<Word> out;
  for_each_palindrome(alphabet, max_len, [&](const Word& w) { out.push_back(w); });
  return out;
}

/// Default cap on stored image-set entries.
inline constexpr std::size_t kDefaultMaxEntries = std::size_t{1} << 23;

/// Products of up to j palindromes of length <= max_len, layer by layer.
///
/// layer(j) maps each reachable element to the first factor list found, where
/// layers are built in deterministic order (previous layer order, then
/// palindrome shortlex order). The empty palindrome is included, so layers are
/// nested and a lookup in layer(j) answers "at most j factors".
template <Evaluator G>
class PalindromeProducts {
 public:
  using Element = typename G::Element;

  struct Entry {
    Element element;
    std::vector<Word> factors;  // non-empty factors only
  };

  PalindromeProducts(G group, int max_len, std::size_t max_entries = kDefaultMaxEntries)
      : group_(std::move(group)), max_len_(max_len), max_entries_(max_entries) {
    Layer first;
    for_each_palindrome(group_.alphabet(), max_len_, [&](const Word& p) {
      std::vector<Word> factors;
      if (!p.empty()) factors.push_back(p);
      insert(first, group_.eval(p), std::move(factors), 0);
    });
    layers_.push_back(Layer{});  // layer 0: identity
    insert(layers_[0], group_.identity(), {}, 0);
    layers_.push_back(std::move(first));
  }

  const G& group() const noexcept { return group_; }
  int max_len() const noexcept { return max_len_; }
  int built_depth() const noexcept { return static_cast<int>(layers_.size()) - 1; }

  /// Builds layers up to `depth`.
  void ensure(int depth) {
    while (built_depth() < depth) {
      const Layer& prev = layers_.back();
      const Layer& base = layers_[1];
      Layer next;
      for (const Entry& left : prev.entries) {
        for (const Entry& p : base.entries) {
          std::vector<Word> factors = left.factors;
          factors.insert(factors.end(), p.factors.begin(), p.factors.end());
          insert(next, group_.multiply(left.element, p.element), std::move(factors), built_depth());
        }
      }
      layers_.push_back(std::move(next));
    }
  }

  const std::vector<Entry>& layer(int depth) {
    ensure(depth);
    return layers_[static_cast<std::size_t>(depth)].entries;
  }

  const Entry* find(int depth, const Element& x) {
    ensure(depth);
    const Layer& l = layers_[static_cast<std::size_t>(depth)];
    const auto it = l.index.find(group_.encode(x));
    return it == l.index.end() ? nullptr : &l.entries[it->second];
  }

 private:
  struct Layer {
    std::vector<Entry> entries;
    std::unordered_map<std::string, std::size_t> index;
  };

  void insert(Layer& layer, Element x, std::vector<Word> factors, int completed_depth) {
    std::string key = group_.encode(x);
    if (layer.index.contains(key)) return;
    if (layer.entries.size() >= max_entries_)
      throw BudgetExceeded("palindrome image set exceeds " + std::to_string(max_entries_) + " entries", completed_depth);
    layer.index.emplace(std::move(key), layer.entries.size());
    layer.entries.push_back(Entry{std::move(x), std::move(factors)});
  }

  G group_;
  int max_len_;
  std::size_t max_entries_;
  std::vector<Layer> layers_;
};

template <class Element>
struct PalLengthResult {
  /// Smallest k <= max_factors found; empty means unknown within the bounds.
  std::optional<int> length;
  Decomposition<Element> witness;
};

/// Minimal number of palindromes (each of length <= products.max_len()) whose
/// product is `target`, searching k = 0, 1, ..., max_factors. For k factors the
/// target is split as L * R with L from layer ceil(k/2) and R from layer floor(k/2).
template <Evaluator G>
PalLengthResult<typename G::Element> pal_length_bounded(PalindromeProducts<G>& products,
                                                        const typename G::Element& target, int max_factors) {
  if (max_factors < 1) throw PreconditionError("pal_length_bounded: max_factors must be at least 1");
  const G& group = products.group();
  PalLengthResult<typename G::Element> result;
  result.witness.target = target;
  result.witness.alphabet = group.alphabet();
  if (target == group.identity()) {
    result.length = 0;
    return result;
  }
  for (int k = 1; k <= max_factors; ++k) {
    const int left_depth = (k + 1) / 2;
    const int right_depth = k / 2;
    products.ensure(left_depth);
    for (const auto& left : products.layer(left_depth)) {
      const auto rest = group.multiply(group.inverse(left.element), target);
      const auto* right = products.find(right_depth, rest);
      if (right == nullptr) continue;
      result.length = k;
      result.witness.factors = left.factors;
      result.witness.factors.insert(result.witness.factors.end(), right->factors.begin(), right->factors.end());
      const auto outcome = validate(result.witness, [&](const Word& w) { return group.eval(w); });
      if (!outcome.valid || result.witness.length() > static_cast<std::size_t>(k))
        throw VerificationError("pal_length_bounded: witness failed validation: " + outcome.reason);
      return result;
    }
  }
  return result;
}

/// One-shot form building its own image sets.
template <Evaluator G>
PalLengthResult<typename G::Element> pal_length_bounded(const G& group, const typename G::Element& target,
                                                        int max_factors, int max_len,
                                                        std::size_t max_entries = kDefaultMaxEntries) {
  PalindromeProducts<G> products(group, max_len, max_entries);
  return pal_length_bounded(products, target, max_factors);
}

struct BallEntry {
  std::string encoding;
  std::string normal_form;  // human-readable element literal
  int length = 0;
  Word witness;
};

struct BallTable {
  int radius = 0;
  std::vector<BallEntry> entries;  // BFS order
  std::unordered_map<std::string, std::size_t> index;

  const BallEntry* find(const std::string& encoding) const {
    const auto it = index.find(encoding);
    return it == index.end() ? nullptr : &entries[it->second];
  }
};

/// Breadth-first ball of the Cayley graph. Levels are expanded in queue order
/// with letters in shortlex order, so each element's witness is its shortlex-least geodesic.
template <Evaluator G>
BallTable ball_table(const G& group, int radius, std::size_t max_entries = kDefaultMaxEntries) {
  if (radius < 0) throw PreconditionError("ball_table: radius must be non-negative");
  using Element = typename G::Element;
  BallTable table;
  table.radius = radius;
  std::vector<Element> elements;

  auto add = [&](Element x, Word w, int length) {
    std::string key = group.encode(x);
    if (table.index.contains(key)) return;
    if (table.entries.size() >= max_entries)
      throw BudgetExceeded("ball exceeds " + std::to_string(max_entries) + " entries", length - 1);
    table.index.emplace(key, table.entries.size());
    table.entries.push_back(BallEntry{std::move(key), group.describe(x), length, std::move(w)});
    elements.push_back(std::move(x));
  };

  add(group.identity(), Word(group.alphabet()), 0);
  const std::vector<Letter> letters = group.alphabet().letters();
  std::vector<Element> generators;
  for (Letter x : letters) generators.push_back(group.eval(reduce(std::span<const Letter>(&x, 1), group.alphabet())));

  std::size_t level_begin = 0;
  for (int r = 1; r <= radius; ++r) {
    const std::size_t level_end = table.entries.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (std::size_t j = 0; j < letters.size(); ++j) {
        Word w = table.entries[i].witness;
        w.push_back(letters[j]);
        if (w.size() != static_cast<std::size_t>(r)) continue;  // backtracks reach shorter elements
        add(group.multiply(elements[i], generators[j]), std::move(w), r);
      }
    }
    level_begin = level_end;
  }
  return table;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace detail

/// Columns: normal_form, min_length, witness.
inline void write_csv(std::ostream& out, const BallTable& table) {
  out << "normal_form,min_length,witness\n";
  for (const BallEntry& e : table.entries)
    out << detail::csv_field(e.normal_form) << ',' << e.length << ',' << detail::csv_field(format(e.witness)) << '\n';
}

}  // namespace palwidth
