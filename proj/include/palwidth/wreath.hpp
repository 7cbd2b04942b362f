#pragma once

// Exact arithmetic in the lamplighter-type group Z wr Z = C x| <b>, where C is
// the free abelian group on a_i := b^-i a b^i (i in Z).
//
// An element f b^m is stored as (tail = f, shift = m). Conjugation by b^k
// moves a_i to a_{i+k}; every direction in this file is derived from that rule,
// and wr_eval being a homomorphism is the contract that pins it down.

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "palwidth/certificate.hpp"
#include "palwidth/core.hpp"
#include "palwidth/freeword.hpp"

namespace palwidth {

/// Finitely supported map Z -> Z, i.e. the element prod a_i^{n_i} of C. Zero entries are never stored.
class SupportVector {
 public:
  using Map = std::map<std::int64_t, std::int64_t>;

  SupportVector() = default;
  SupportVector(std::initializer_list<std::pair<const std::int64_t, std::int64_t>> entries) {
    for (const auto& [i, n] : entries) add(i, n);
  }

  static SupportVector unit(std::int64_t index, std::int64_t exponent = 1) {
    SupportVector v;
    v.add(index, exponent);
    return v;
  }

  std::int64_t operator[](std::int64_t index) const {
    const auto it = entries_.find(index);
    return it == entries_.end() ? 0 : it->second;
  }

  void add(std::int64_t index, std::int64_t exponent) {
    if (exponent == 0) return;
    auto [it, inserted] = entries_.try_emplace(index, 0);
    it->second = checked::add(it->second, exponent);
    if (it->second == 0) entries_.erase(it);
  }

  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }
  Map::const_iterator begin() const noexcept { return entries_.begin(); }
  Map::const_iterator end() const noexcept { return entries_.end(); }
  const Map& entries() const noexcept { return entries_; }

  std::int64_t min_index() const { return entries_.begin()->first; }
  std::int64_t max_index() const { return entries_.rbegin()->first; }

  SupportVector& operator+=(const SupportVector& rhs) {
    for (const auto& [i, n] : rhs.entries_) add(i, n);
    return *this;
  }
  SupportVector& operator-=(const SupportVector& rhs) {
    for (const auto& [i, n] : rhs.entries_) add(i, checked::neg(n));
    return *this;
  }
  friend SupportVector operator+(SupportVector a, const SupportVector& b) { return a += b; }
  friend SupportVector operator-(SupportVector a, const SupportVector& b) { return a -= b; }
  friend SupportVector operator-(const SupportVector& a) { return SupportVector{} - a; }

  friend bool operator==(const SupportVector&, const SupportVector&) = default;

 private:
  Map entries_;
};

/// f^{b^k} = b^-k f b^k: the entry at index i moves to index i + k.
inline SupportVector wr_shift(const SupportVector& f, std::int64_t k) {
  SupportVector out;
  for (const auto& [i, n] : f) out.add(checked::add(i, k), n);
  return out;
}

/// Index negation i -> -i. This is the image of C under word reversal, since
/// reversing b^-i a b^i gives b^i a b^-i = a_{-i}.
inline SupportVector mirror(const SupportVector& f) {
  SupportVector out;
  for (const auto& [i, n] : f) out.add(checked::neg(i), n);
  return out;
}

/// Sum of all exponents.
inline std::int64_t wr_log(const SupportVector& f) {
  std::int64_t s = 0;
  for (const auto& [i, n] : f) s = checked::add(s, n);
  return s;
}

struct WreathElement {
  SupportVector tail;
  std::int64_t shift = 0;

  friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

inline WreathElement wr_identity() { return {}; }
inline WreathElement wr_a() { return {SupportVector::unit(0), 0}; }
inline WreathElement wr_b() { return {{}, 1}; }

/// (f1 b^m1)(f2 b^m2) = f1 (b^m1 f2 b^-m1) b^(m1+m2) = (f1 + f2 shifted by -m1, m1 + m2).
inline WreathElement wr_mul(const WreathElement& g1, const WreathElement& g2) {
  return {g1.tail + wr_shift(g2.tail, checked::neg(g1.shift)), checked::add(g1.shift, g2.shift)};
}

/// (f b^m)^-1 = b^-m f^-1 = (-f shifted by m, -m).
inline WreathElement wr_inv(const WreathElement& g) { return {wr_shift(-g.tail, g.shift), checked::neg(g.shift)}; }

inline void require_alphabet_ab(const Word& w, const char* who) {
  if (!(w.alphabet() == alphabet_ab()))
    throw AlphabetError(std::string(who) + " expects a word over {a,b}, got {" + w.alphabet().names() + "}");
}

/// Image of a word under a -> (a_0, 0), b -> (empty, 1).
inline WreathElement wr_eval(const Word& w) {
  require_alphabet_ab(w, "wr_eval");
  WreathElement g;
  for (Letter x : w.letters()) {
    if (x.generator == 0) {
      // f b^m a = (f + a_{-m}) b^m
      g.tail.add(checked::neg(g.shift), x.inverse ? -1 : 1);
    } else {
      g.shift = checked::add(g.shift, x.inverse ? -1 : 1);
    }
  }
  return g;
}

/// Membership in G' = [C, B]: shift 0 and log 0.
inline bool in_derived(const WreathElement& g) { return g.shift == 0 && wr_log(g.tail) == 0; }

/// [f, b] = f^-1 b^-1 f b = -f + f^b, an element of C.
inline WreathElement commutator_with_b(const SupportVector& f) { return {wr_shift(f, 1) - f, 0}; }

/// Returns f with [f, b] = c, supported in [min supp c, max supp c - 1].
///
/// Matching coefficients of [f, b] = c gives the triangular system
/// -x_m = n_m, x_{i-1} - x_i = n_i, x_{M-1} = n_M, solved by the prefix sums
/// x_{m+j} = -(n_m + ... + n_{m+j}); the last equation is log c = 0.
inline SupportVector commutator_witness(const WreathElement& c) {
  if (!in_derived(c)) throw PreconditionError("commutator_witness: element is not in the derived subgroup");
  SupportVector f;
  if (c.tail.empty()) return f;
  const std::int64_t lo = c.tail.min_index();
  const std::int64_t hi = c.tail.max_index();
  std::int64_t prefix = 0;
  for (std::int64_t i = lo; i < hi; ++i) {
    prefix = checked::add(prefix, c.tail[i]);
    f.add(i, checked::neg(prefix));
  }
  if (!(commutator_with_b(f) == c)) throw VerificationError("commutator_witness: [f, b] != c");
  return f;
}

/// A word for f in C: blocks b^-i a^{n_i} b^i in ascending index order, with
/// adjacent b-powers fused, so the word walks the support left to right.
inline Word render(const SupportVector& f) {
  Word w(alphabet_ab());
  const Letter a{0, false};
  const Letter b{1, false};
  std::int64_t position = 0;  // current word equals (.., shift = -position)
  for (const auto& [i, n] : f) {
    w.append_power(b, checked::sub(position, i));
    w.append_power(a, n);
    position = i;
  }
  w.append_power(b, position);
  return w;
}

/// Word for the element (tail, shift): render(tail) b^shift.
inline Word render(const WreathElement& g) {
  Word w = render(g.tail);
  w.append_power(Letter{1, false}, g.shift);
  return w;
}

// ---------------------------------------------------------------------------
// Three-palindrome factorization.
//
// Write g = a^k b^l d with l = shift, k = log(tail) and d in G'. With
// f = commutator_witness(d) and F = f^{b^-l}, g b^-(l+1) = a^k F^-1 b^-1 F.
// For any W in C with word w,
//
//   (w^-1 b^-1 rev(w^-1)) (rev(w) a^k w) = W^-1 a_1^k W^b b^-1,
//
// because rev(w^-1) rev(w) cancels. Choosing W = F a^-k makes this equal to
// a^k F^-1 F^b b^-1, so the three symmetric factors
//
//   w^-1 b^-1 rev(w^-1),   rev(w) a^k w,   b^(l+1)
//
// multiply to g. Taking W = F (the `literal` variant) leaves a^k on the wrong
// side of b^-1 and only validates when k = 0.
// ---------------------------------------------------------------------------

enum class ThreePalVariant { corrected, literal };

/// The factorization as emitted by `variant`, unvalidated. Used to compare variants.
inline Decomposition<WreathElement> three_pal_candidate(const WreathElement& g, ThreePalVariant variant) {
  const Alphabet& alphabet = alphabet_ab();
  const std::int64_t k = wr_log(g.tail);
  const std::int64_t l = g.shift;
  const WreathElement d{wr_shift(g.tail - SupportVector::unit(0, k), l), 0};
  const SupportVector f = commutator_witness(d);
  SupportVector big_w = wr_shift(f, checked::neg(l));
  if (variant == ThreePalVariant::corrected) big_w.add(0, checked::neg(k));

  const Word w = render(big_w);
  const Word w_inv = invert(w);
  Decomposition<WreathElement> out;
  out.target = g;
  out.alphabet = alphabet;
  const Word first = w_inv * generator_power(alphabet, 'b', -1) * reverse(w_inv);
  const Word second = reverse(w) * generator_power(alphabet, 'a', k) * w;
  const Word third = generator_power(alphabet, 'b', checked::add(l, 1));
  for (const Word* factor : {&first, &second, &third})
    if (!factor->empty()) out.factors.push_back(*factor);
  return out;
}

/// Certificate with at most three palindromic factors whose product evaluates to g.
/// Powers of a single generator get a one-factor certificate.
inline Decomposition<WreathElement> three_pal_decomposition(const WreathElement& g) {
  Decomposition<WreathElement> out;
  out.target = g;
  out.alphabet = alphabet_ab();
  if (g.tail.empty()) {
    if (g.shift != 0) out.factors.push_back(generator_power(out.alphabet, 'b', g.shift));
  } else if (g.shift == 0 && g.tail.size() == 1 && g.tail.min_index() == 0) {
    out.factors.push_back(generator_power(out.alphabet, 'a', g.tail[0]));
  } else {
    out = three_pal_candidate(g, ThreePalVariant::corrected);
  }
  const auto outcome = validate(out, [](const Word& w) { return wr_eval(w); });
  if (!outcome.valid || out.length() > 3) throw VerificationError("three_pal_decomposition: " + outcome.reason);
  return out;
}

// ---------------------------------------------------------------------------
// Palindrome forms.
//
// A palindrome is u c rev(u) with c in {a^l, b^l}. Writing u = h b^k (h in C),
// rev(u) evaluates to b^k mirror(h), so
//
//   a-form(k, l):  shift 2k,  tail = l a_{-k} + h + (mirror h)^{b^-2k}
//   b-form(l):     shift l,   tail = h + (mirror h)^{b^-l}
//
// Equivalently, tail is symmetric about -shift/2 (with an even centre entry
// for the b-form at even shift). The literal forms replace `mirror h` by h;
// they admit elements that are not palindromes and miss some that are, and
// are kept for comparison.
// ---------------------------------------------------------------------------

struct PalindromeForm {
  enum class Kind { a_form, b_form, neither };

  Kind kind = Kind::neither;
  SupportVector h;
  std::int64_t k = 0;  // a-form: shift = 2k
  std::int64_t l = 0;  // a-form: centre exponent; b-form: shift
  /// A palindromic word evaluating to the classified element (reflection-aware classifier only).
  std::optional<Word> palindrome;
};

inline const char* to_string(PalindromeForm::Kind kind) {
  switch (kind) {
    case PalindromeForm::Kind::a_form:
      return "a-form";
    case PalindromeForm::Kind::b_form:
      return "b-form";
    case PalindromeForm::Kind::neither:
      break;
  }
  return "neither";
}

/// Classifies g as the image of a palindromic word, returning the witness (h, k, l)
/// and a palindrome evaluating to g. Odd shifts report the b-form, even shifts the a-form.
inline PalindromeForm classify_palindrome_form(const WreathElement& g) {
  const std::int64_t s = g.shift;
  // Symmetry about -s/2: tail(i) == tail(-s - i).
  for (const auto& [i, n] : g.tail)
    if (g.tail[checked::sub(checked::neg(s), i)] != n) return {};

  PalindromeForm form;
  const Alphabet& alphabet = alphabet_ab();
  const auto half_below = [&](std::int64_t centre_twice) {
    SupportVector h;
    for (const auto& [i, n] : g.tail)
      if (checked::mul(2, i) < centre_twice) h.add(i, n);
    return h;
  };
  const std::int64_t centre_twice = checked::neg(s);  // 2 * centre index

  std::int64_t k = 0;
  Word centre(alphabet);
  if (s % 2 != 0) {
    form.kind = PalindromeForm::Kind::b_form;
    form.l = s;
    form.h = half_below(centre_twice);
    k = (s - 1) / 2;  // s = 2k + 1
    centre = generator_power(alphabet, 'b', 1);
  } else {
    k = s / 2;
    form.kind = PalindromeForm::Kind::a_form;
    form.k = k;
    form.l = g.tail[-k];
    form.h = half_below(centre_twice);
    centre = generator_power(alphabet, 'a', form.l);
  }
  Word u = render(form.h);
  u.append_power(Letter{1, false}, k);
  form.palindrome = u * centre * reverse(u);
  if (!is_palindrome(*form.palindrome) || !(wr_eval(*form.palindrome) == g))
    throw VerificationError("classify_palindrome_form: witness palindrome does not evaluate to the element");
  return form;
}

namespace detail {

/// Solves h(i) + h(i + step) = t(i) over finitely supported h, step != 0.
inline std::optional<SupportVector> solve_pair_sum(const SupportVector& t, std::int64_t step) {
  // Rewrite as h(j) + h(j + p) = u(j) with p = |step|.
  const std::int64_t p = checked::abs(step);
  SupportVector u = step > 0 ? t : wr_shift(t, checked::neg(p));
  std::map<std::int64_t, std::vector<std::pair<std::int64_t, std::int64_t>>> classes;
  for (const auto& [j, n] : u) {
    const std::int64_t r = ((j % p) + p) % p;
    classes[r].emplace_back(j, n);
  }
  SupportVector h;
  for (const auto& [r, entries] : classes) {
    // Sweep left to right: h(j + p) = u(j) - h(j), with h = 0 below the class support.
    std::int64_t h_prev = 0;
    std::int64_t j = entries.front().first;
    std::size_t next = 0;
    const std::int64_t last = entries.back().first;
    while (j <= last) {
      std::int64_t uj = 0;
      if (next < entries.size() && entries[next].first == j) uj = entries[next++].second;
      const std::int64_t h_next = checked::sub(uj, h_prev);
      h.add(checked::add(j, p), h_next);
      h_prev = h_next;
      j = checked::add(j, p);
    }
    if (h_prev != 0) return std::nullopt;
  }
  return h;
}

/// Solves h + h^{b^-s} = t (h(i) + h(i+s) = t(i)); s = 0 means 2h = t.
inline std::optional<SupportVector> solve_literal(const SupportVector& t, std::int64_t s) {
  if (s != 0) return solve_pair_sum(t, s);
  SupportVector h;
  for (const auto& [i, n] : t) {
    if (n % 2 != 0) return std::nullopt;
    h.add(i, n / 2);
  }
  return h;
}

}  // namespace detail

/// The palindrome forms read literally, without the reflection on C:
/// a-form(k, l): shift 2k and tail - l a_{-k} = h + h^{b^-2k};
/// b-form(l):    shift l  and tail = h + h^{b^-l}.
/// a-form is tried first at even shift.
inline PalindromeForm classify_palindrome_form_literal(const WreathElement& g) {
  const std::int64_t s = g.shift;
  PalindromeForm form;
  if (s % 2 == 0) {
    const std::int64_t k = s / 2;
    const std::int64_t centre = checked::neg(k);
    // Choose l so that the residue class through -k becomes solvable.
    std::optional<std::int64_t> l_choice;
    if (s == 0) {
      l_choice = g.tail[0];
    } else {
      // Alternating sum of the class of -k, measured from -k.
      const std::int64_t p = checked::abs(s);
      std::int64_t alt = 0;
      for (const auto& [i, n] : g.tail) {
        const std::int64_t diff = checked::sub(i, centre);
        if (diff % p != 0) continue;
        const std::int64_t steps = diff / p;
        alt = (steps % 2 == 0) ? checked::add(alt, n) : checked::sub(alt, n);
      }
      l_choice = alt;
    }
    SupportVector t = g.tail;
    t.add(centre, checked::neg(*l_choice));
    if (auto h = detail::solve_literal(t, s)) {
      form.kind = PalindromeForm::Kind::a_form;
      form.k = k;
      form.l = *l_choice;
      form.h = *h;
      return form;
    }
  }
  if (auto h = detail::solve_literal(g.tail, s)) {
    form.kind = PalindromeForm::Kind::b_form;
    form.l = s;
    form.h = *h;
  }
  return form;
}

/// Evaluates a literal-form witness back to its element, for self-checks.
inline WreathElement literal_form_element(const PalindromeForm& form) {
  switch (form.kind) {
    case PalindromeForm::Kind::a_form: {
      SupportVector tail = SupportVector::unit(checked::neg(form.k), form.l) + form.h +
                           wr_shift(form.h, checked::neg(checked::mul(2, form.k)));
      return {tail, checked::mul(2, form.k)};
    }
    case PalindromeForm::Kind::b_form:
      return {form.h + wr_shift(form.h, checked::neg(form.l)), form.l};
    case PalindromeForm::Kind::neither:
      break;
  }
  throw PreconditionError("literal_form_element: no form");
}

/// Group evaluator for the bounded search engine.
struct WreathGroup {
  using Element = WreathElement;

  const Alphabet& alphabet() const { return alphabet_ab(); }
  std::string label() const { return "wreath"; }
  Element identity() const { return {}; }
  Element eval(const Word& w) const { return wr_eval(w); }
  Element multiply(const Element& x, const Element& y) const { return wr_mul(x, y); }
  Element inverse(const Element& x) const { return wr_inv(x); }

  std::string encode(const Element& x) const {
    std::string s = std::to_string(x.shift);
    for (const auto& [i, n] : x.tail) s += ';' + std::to_string(i) + ':' + std::to_string(n);
    return s;
  }

  /// Same text as the JSON literal, e.g. {"support":{"0":1},"shift":2}.
  std::string describe(const Element& x) const {
    std::string s = "{\"support\":{";
    bool first = true;
    for (const auto& [i, n] : x.tail) {
      if (!first) s += ',';
      first = false;
      s += '"' + std::to_string(i) + "\":" + std::to_string(n);
    }
    s += "},\"shift\":" + std::to_string(x.shift) + "}";
    return s;
  }
};

}  // namespace palwidth
