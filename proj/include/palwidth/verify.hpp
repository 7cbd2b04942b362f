#pragma once

// Named property suites. Each suite draws `cases` seeded cases and checks the
// library against the independent models in palwidth/oracle/.

#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "palwidth/baumslag.hpp"
#include "palwidth/certificate.hpp"
#include "palwidth/freeword.hpp"
#include "palwidth/heisenberg.hpp"
#include "palwidth/literals.hpp"
#include "palwidth/oracle/affine.hpp"
#include "palwidth/oracle/free_reduce.hpp"
#include "palwidth/oracle/lamplighter.hpp"
#include "palwidth/oracle/unitriangular.hpp"
#include "palwidth/palrewrite.hpp"
#include "palwidth/random.hpp"
#include "palwidth/wreath.hpp"
#include "palwidth/widthsearch.hpp"

namespace palwidth {

struct SuiteReport {
  std::string name;
  std::uint64_t seed = 0;
  std::int64_t cases = 0;
  std::int64_t checks = 0;
  std::int64_t failures = 0;
  std::string first_failure;

  bool passed() const noexcept { return failures == 0; }
};

inline nlohmann::json to_json(const SuiteReport& r) {
  nlohmann::json j{{"suite", r.name},   {"seed", r.seed},         {"cases", r.cases},
                   {"checks", r.checks}, {"failures", r.failures}, {"passed", r.passed()}};
  if (!r.passed()) j["first_failure"] = r.first_failure;
  return j;
}

namespace verify {

/// Collects check outcomes for one suite run.
class Checker {
 public:
  explicit Checker(SuiteReport& report) : report_(report) {}

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++report_.checks;
    if (ok) return;
    if (report_.failures++ == 0) report_.first_failure = describe();
  }

  /// Runs one case, recording any exception as a failure.
  template <class Body>
  void run_case(Body&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      expect(false, [&] { return std::string("exception: ") + e.what(); });
    }
  }

 private:
  SuiteReport& report_;
};

// ---- generators -----------------------------------------------------------

inline Word raw_word(Rng& rng, const Alphabet& alphabet, std::size_t max_len) {
  return rng.random_word(alphabet, static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(max_len))));
}

inline std::vector<Letter> raw_letters(Rng& rng, const Alphabet& alphabet, std::size_t length) {
  const auto letters = alphabet.letters();
  std::vector<Letter> raw;
  for (std::size_t i = 0; i < length; ++i)
    raw.push_back(letters[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(letters.size()) - 1))]);
  return raw;
}

inline Word random_palindrome(Rng& rng, const Alphabet& alphabet, std::size_t max_len) {
  return rng.palindrome(alphabet, static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(max_len))));
}

inline SupportVector random_support(Rng& rng, std::int64_t lo, std::int64_t hi, std::int64_t bound) {
  SupportVector f;
  for (std::int64_t i = lo; i <= hi; ++i)
    if (rng.coin()) f.add(i, rng.uniform(-bound, bound));
  return f;
}

/// Derived-subgroup element: support in [lo, hi], |n_i| <= bound, one entry
/// adjusted so the exponents sum to zero (kept within the bound when possible).
inline WreathElement random_derived(Rng& rng, std::int64_t lo, std::int64_t hi, std::int64_t bound) {
  SupportVector f = random_support(rng, lo, hi, bound);
  std::int64_t excess = wr_log(f);
  while (excess != 0) {
    const std::int64_t i = rng.uniform(lo, hi);
    const std::int64_t cur = f[i];
    const std::int64_t room = excess > 0 ? cur + bound : bound - cur;
    const std::int64_t step = std::min(room, excess > 0 ? excess : -excess);
    if (step <= 0) continue;
    f.add(i, excess > 0 ? -step : step);
    excess += excess > 0 ? -step : step;
  }
  return {f, 0};
}

inline WreathElement random_wreath(Rng& rng, std::int64_t radius, std::int64_t bound, std::int64_t max_shift) {
  return {random_support(rng, -radius, radius, bound), rng.uniform(-max_shift, max_shift)};
}

inline std::string describe(const WreathElement& g) { return to_json(g).dump(); }
inline std::string describe(const HeisElement& h) { return to_json(h).dump(); }
inline std::string describe(const BSElement& g) { return to_json(g).dump(); }

inline bool lamp_match(const WreathElement& g, const oracle::LampState& s) {
  if (g.shift != -s.cursor) return false;
  if (g.tail.size() != s.lamps.size()) return false;
  for (const auto& [i, n] : s.lamps)
    if (g.tail[i] != n) return false;
  return true;
}

inline oracle::Unitriangular matrix_of(const HeisElement& h) {
  return oracle::from_malcev(h.x, h.y, h.z);
}

inline bool affine_match(const BSElement& g, const oracle::Affine& m) {
  return oracle::affine_of(g.num, g.den_exp, g.dil, g.n) == m;
}

/// Word-level certificate check using only the free reduction oracle.
inline bool independent_word_check(const PalindromicDecomposition& d) {
  std::vector<Letter> concat;
  for (const Word& f : d.factors) {
    std::vector<Letter> s(f.letters().begin(), f.letters().end());
    const auto r = oracle::naive_reduce(s);
    if (!std::equal(r.begin(), r.end(), r.rbegin())) return false;
    concat.insert(concat.end(), s.begin(), s.end());
  }
  const auto t = d.target.letters();
  return oracle::naive_reduce(concat) == std::vector<Letter>(t.begin(), t.end());
}

// ---- suites ---------------------------------------------------------------

inline void freeword_laws(Rng& rng, std::int64_t cases, Checker& c) {
  const Alphabet& ab = alphabet_ab();
  const Alphabet abc{"abc"};
  for (std::int64_t i = 0; i < cases; ++i) {
    c.run_case([&] {
      const Alphabet& alphabet = rng.coin() ? ab : abc;
      const auto raw = raw_letters(rng, alphabet, static_cast<std::size_t>(rng.uniform(0, 30)));
      const Word w = reduce(raw, alphabet);
      const auto naive = oracle::naive_reduce(raw);
      c.expect(std::equal(w.letters().begin(), w.letters().end(), naive.begin(), naive.end()),
               [&] { return "reduce disagrees with naive reduction on " + format(w); });
      c.expect(reduce(w.letters(), alphabet) == w, [&] { return "reduce not idempotent on " + format(w); });
      c.expect(reverse(reverse(w)) == w, [&] { return "reverse not an involution on " + format(w); });
      c.expect(invert(invert(w)) == w, [&] { return "invert not an involution on " + format(w); });
      c.expect(invert(reverse(w)) == reverse(invert(w)), [&] { return "invert and reverse do not commute on " + format(w); });
      c.expect((w * invert(w)).empty(), [&] { return "w w^-1 not empty for " + format(w); });
      c.expect(parse(format(w), alphabet) == w, [&] { return "format/parse round trip fails on " + format(w); });

      // Symmetric letter sequences reduce to palindromes.
      std::vector<Letter> sym(raw);
      sym.insert(sym.end(), raw.rbegin(), raw.rend());
      if (rng.coin()) sym.insert(sym.begin() + static_cast<std::ptrdiff_t>(raw.size()), raw_letters(rng, alphabet, 1)[0]);
      c.expect(is_palindrome(reduce(sym, alphabet)), [&] { return "symmetric sequence reduced to a non-palindrome"; });

      const Word p = random_palindrome(rng, alphabet, 10);
      const std::int64_t m = rng.uniform(-4, 4);
      c.expect(is_palindrome(pal_power(p, m)), [&] { return "power of palindrome " + format(p) + " not a palindrome"; });
    });
  }
}

inline void palrewrite_bounds(Rng& rng, std::int64_t cases, Checker& c) {
  const Alphabet& ab = alphabet_ab();
  for (std::int64_t i = 0; i < cases; ++i) {
    c.run_case([&] {
      const Word u = rng.reduced_word(ab, static_cast<std::size_t>(rng.uniform(0, 8)));
      const std::size_t k = static_cast<std::size_t>(rng.uniform(1, 4));
      std::vector<Word> pals;
      for (std::size_t j = 0; j < k; ++j) pals.push_back(random_palindrome(rng, ab, 8));

      const auto conj = conjugate_decomposition(u, pals);
      c.expect(conj.length() <= k + k % 2, [&] { return "conjugate_decomposition exceeds k + (k mod 2)"; });
      c.expect(independent_word_check(conj), [&] { return "conjugate certificate fails independent check"; });
      Word product(ab);
      for (const Word& p : pals) product *= p;
      c.expect(conj.target == invert(u) * product * u, [&] { return "conjugate target is not u^-1 P u"; });

      const auto comm = commutator_decomposition(u, pals);
      c.expect(comm.length() <= 2 * k + k % 2, [&] { return "commutator_decomposition exceeds 2k + (k mod 2)"; });
      c.expect(independent_word_check(comm), [&] { return "commutator certificate fails independent check"; });
      c.expect(comm.target == invert(u) * invert(product) * u * product,
               [&] { return "commutator target is not [u, P]"; });

      if (u.empty()) {
        std::vector<Word> nonempty;
        for (const Word& p : pals)
          if (!p.empty()) nonempty.push_back(p);
        c.expect(conj.factors == nonempty, [&] { return "conjugation by the empty word changed the factors"; });
      }

      const auto pair = pal_pair_power(pals[0], random_palindrome(rng, ab, 8), rng.uniform(-5, 5));
      c.expect(pair.length() <= 2, [&] { return "pal_pair_power exceeds 2 factors"; });
      c.expect(independent_word_check(pair), [&] { return "pal_pair_power certificate fails independent check"; });

      const auto combined = combine_coset_decomposition(comm, trivial_decomposition(pals[0]));
      c.expect(combined.length() == comm.length() + (pals[0].empty() ? 0 : 1),
               [&] { return "combine_coset_decomposition is not additive"; });
      c.expect(independent_word_check(combined), [&] { return "combined certificate fails independent check"; });
    });
  }
}

inline void wreath_hom(Rng& rng, std::int64_t cases, Checker& c) {
  const Alphabet& ab = alphabet_ab();
  for (std::int64_t i = 0; i < cases; ++i) {
    c.run_case([&] {
      const Word u = raw_word(rng, ab, 20);
      const Word v = raw_word(rng, ab, 20);
      const WreathElement gu = wr_eval(u);
      const WreathElement gv = wr_eval(v);
      c.expect(lamp_match(gu, oracle::lamplighter_walk(u)), [&] { return "wr_eval disagrees with lamplighter on " + format(u); });
      c.expect(wr_eval(u * v) == wr_mul(gu, gv), [&] { return "wr_eval(uv) != wr_eval(u) wr_eval(v) for " + format(u) + " | " + format(v); });
      c.expect(wr_eval(invert(u)) == wr_inv(gu), [&] { return "wr_eval(u^-1) != wr_inv for " + format(u); });
      c.expect(wr_mul(gu, wr_inv(gu)) == wr_identity(), [&] { return "g g^-1 != 1 for " + describe(gu); });
      const WreathElement g = random_wreath(rng, 5, 5, 5);
      c.expect(wr_eval(render(g)) == g, [&] { return "render does not evaluate back for " + describe(g); });
      c.expect(wr_mul(wr_mul(gu, gv), g) == wr_mul(gu, wr_mul(gv, g)), [&] { return "wr_mul not associative"; });
      c.expect(wreath_from_json(to_json(g)) == g, [&] { return "JSON round trip fails for " + describe(g); });
    });
  }
}

inline void wreath_witness(Rng& rng, std::int64_t cases, Checker& c) {
  for (std::int64_t i = 0; i < cases; ++i) {
    c.run_case([&] {
      const WreathElement d = random_derived(rng, -6, 6, 6);
      const SupportVector f = commutator_witness(d);
      // [f, b] = f^-1 b^-1 f b, composed with the group law.
      const WreathElement fe{f, 0};
      const WreathElement comm = wr_mul(wr_mul(wr_inv(fe), wr_inv(wr_b())), wr_mul(fe, wr_b()));
      c.expect(comm == d, [&] { return "[f, b] != c for c = " + describe(d); });
      const Word fw = render(f);
      const Word word = invert(fw) * generator_power(alphabet_ab(), 'b', -1) * fw * generator_power(alphabet_ab(), 'b', 1);
      c.expect(lamp_match(d, oracle::lamplighter_walk(word)), [&] { return "lamplighter rejects [f, b] for " + describe(d); });
    });
  }
}

inline void wreath_three_pal(Rng& rng, std::int64_t cases, Checker& c) {
  for (std::int64_t i = 0; i < cases; ++i) {
    c.run_case([&] {
      const WreathElement g = random_wreath(rng, 5, 5, 5);
      const auto d = three_pal_decomposition(g);
      c.expect(d.length() <= 3, [&] { return "more than 3 factors for " + describe(g); });
      Word product(alphabet_ab());
      bool pals = true;
      for (const Word& f : d.factors) {
        pals = pals && check::factor_is_palindrome(f);
        product *= f;
      }
      c.expect(pals, [&] { return "non-palindromic factor for " + describe(g); });
      c.expect(lamp_match(g, oracle::lamplighter_walk(product)), [&] { return "lamplighter rejects product for " + describe(g); });
    });
  }
}

inline void wreath_forms(Rng& rng, std::int64_t cases, Checker& c) {
  const Alphabet& ab = alphabet_ab();
  for (std::int64_t i = 0; i < cases; ++i) {
    c.run_case([&] {
      const Word p = random_palindrome(rng, ab, 14);
      const WreathElement g = wr_eval(p);
      const PalindromeForm form = classify_palindrome_form(g);
      c.expect(form.kind != PalindromeForm::Kind::neither, [&] { return "palindrome " + format(p) + " classified as neither"; });
      c.expect(form.kind != PalindromeForm::Kind::a_form || g.shift % 2 == 0, [&] { return "a-form at odd shift"; });
      if (form.palindrome) {
        c.expect(is_palindrome(*form.palindrome) && lamp_match(g, oracle::lamplighter_walk(*form.palindrome)),
                 [&] { return "form witness does not evaluate to " + describe(g); });
      }
      // A classified non-palindrome must come with an evaluating palindrome.
      const Word w = raw_word(rng, ab, 10);
      const PalindromeForm other = classify_palindrome_form(wr_eval(w));
      if (other.kind != PalindromeForm::Kind::neither) {
        c.expect(other.palindrome && wr_eval(*other.palindrome) == wr_eval(w), [&] { return "witness missing for " + format(w); });
      }
      // Literal forms are only reported when they reproduce the element.
      const PalindromeForm lit = classify_palindrome_form_literal(wr_eval(w));
      if (lit.kind != PalindromeForm::Kind::neither) {
        c.expect(literal_form_element(lit) == wr_eval(w), [&] { return "literal form does not reproduce " + format(w); });
      }
    });
  }
}

inline void heis_matrix_oracle(Rng& rng, std::int64_t cases, Checker& c) {
  const auto triple = [&] { return HeisElement{rng.uniform(-1000, 1000), rng.uniform(-1000, 1000), rng.uniform(-1000, 1000)}; };
  for (std::int64_t i = 0; i < cases; ++i) {
    c.run_case([&] {
      const HeisElement g = triple();
      const HeisElement h = triple();
      c.expect(matrix_of(h_mul(g, h)) == matrix_of(g) * matrix_of(h),
               [&] { return "h_mul disagrees with matrices for " + describe(g) + " * " + describe(h); });
      c.expect(matrix_of(h_inv(g)) == oracle::inverse(matrix_of(g)), [&] { return "h_inv disagrees for " + describe(g); });
    });
  }
}

inline void heis_eval(Rng& rng, std::int64_t cases, Checker& c) {
  for (std::int64_t i = 0; i < cases; ++i) {
    c.run_case([&] {
      const Word w = raw_word(rng, alphabet_ab(), 30);
      c.expect(matrix_of(h_eval(w)) == oracle::matrix_eval(w), [&] { return "h_eval disagrees with matrices on " + format(w); });
    });
  }
}

inline void heis_quotient(Rng& rng, std::int64_t cases, Checker& c) {
  // a_2 and a_0^-1 a_1^2 have the same image.
  c.run_case([&] {
    const WreathElement a2{SupportVector::unit(2), 0};
    const WreathElement rel{SupportVector{{0, -1}, {1, 2}}, 0};
    c.expect(wreath_to_heis(a2) == wreath_to_heis(rel), [&] { return "a_2 and a_0^-1 a_1^2 differ in the quotient"; });
  });
  for (std::int64_t i = 0; i < cases; ++i) {
    c.run_case([&] {
      const Word w = raw_word(rng, alphabet_ab(), 30);
      c.expect(wreath_to_heis(wr_eval(w)) == h_eval(w), [&] { return "quotient map disagrees with h_eval on " + format(w); });
      const WreathElement g = random_wreath(rng, 4, 4, 4);
      const WreathElement h = random_wreath(rng, 4, 4, 4);
      c.expect(wreath_to_heis(wr_mul(g, h)) == h_mul(wreath_to_heis(g), wreath_to_heis(h)),
               [&] { return "quotient map is not multiplicative"; });
    });
  }
}

inline void heis_pal_law(Rng& rng, std::int64_t cases, Checker& c) {
  const Alphabet& ab = alphabet_ab();
  for (std::int64_t i = 0; i < cases; ++i) {
    c.run_case([&] {
      const Word p = random_palindrome(rng, ab, 16);
      c.expect(is_pal_image(h_eval(p)), [&] { return "palindrome " + format(p) + " violates 2z = xy"; });
      c.expect(h_reversal(h_eval(p)) == h_eval(p), [&] { return "palindrome image not fixed by reversal"; });
      const Word w = raw_word(rng, ab, 16);
      c.expect(h_reversal(h_eval(w)) == h_eval(reverse(w)), [&] { return "reversal map disagrees on " + format(w); });

      const HeisElement h{rng.uniform(-20, 20), rng.uniform(-20, 20), rng.uniform(-20, 20)};
      const auto fast = two_pal_product_decide(h);
      const auto slow = two_pal_product_search(h);
      c.expect(fast.has_value() == slow.has_value(), [&] { return "decide and search disagree on " + describe(h); });
      if (fast) {
        c.expect(is_palindrome(fast->first) && is_palindrome(fast->second) && h_eval(fast->first * fast->second) == h,
                 [&] { return "two-palindrome witness invalid for " + describe(h); });
      }
      const auto d = heis_decomposition(h);
      c.expect(static_cast<int>(d.length()) == heis_pal_length(h), [&] { return "decomposition length differs from exact length"; });
      bool ok = true;
      for (const Word& f : d.factors) ok = ok && is_palindrome(f);
      c.expect(ok && matrix_of(h) == oracle::matrix_eval(d.product()), [&] { return "heis certificate fails matrix check for " + describe(h); });
    });
  }
}

inline std::int64_t random_n(Rng& rng) {
  static constexpr std::int64_t choices[] = {2, 3, -2, 5, -3};
  return choices[rng.uniform(0, 4)];
}

inline void bs_hom(Rng& rng, std::int64_t cases, Checker& c) {
  for (std::int64_t i = 0; i < cases; ++i) {
    c.run_case([&] {
      const std::int64_t n = random_n(rng);
      const Word u = raw_word(rng, alphabet_at(), 20);
      const Word v = raw_word(rng, alphabet_at(), 20);
      const BSElement gu = bs_eval(u, n);
      c.expect(affine_match(gu, oracle::affine_eval(u, n)), [&] { return "bs_eval disagrees with affine matrices on " + format(u); });
      c.expect(bs_eval(u * v, n) == bs_mul(gu, bs_eval(v, n)), [&] { return "bs_eval not multiplicative on " + format(u); });
      c.expect(bs_eval(invert(u), n) == bs_inv(gu), [&] { return "bs_inv disagrees on " + format(u); });
    });
  }
}

/// Random word of length <= 20 over {a, t} whose normal form spells in at most 2^16 letters.
/// Words ending in long t-runs have exponentially large normal forms and are redrawn.
inline std::pair<std::int64_t, Word> random_bs_word(Rng& rng) {
  for (;;) {
    const std::int64_t n = random_n(rng);
    Word w = raw_word(rng, alphabet_at(), 20);
    const BSNormalForm nf = bs_normal_form(bs_eval(w, n));
    if (checked::abs(nf.l) + 2 * (nf.k + nf.m) <= (std::int64_t{1} << 16)) return {n, std::move(w)};
  }
}

inline void bs_roundtrip(Rng& rng, std::int64_t cases, Checker& c) {
  for (std::int64_t i = 0; i < cases; ++i) {
    c.run_case([&] {
      const auto [n, w] = random_bs_word(rng);
      const BSElement g = bs_eval(w, n);
      const BSNormalForm nf = bs_normal_form(g);
      c.expect(nf.k >= 0 && nf.m >= 0, [&] { return "normal form exponents negative"; });
      c.expect(bs_eval(render(nf), n) == g, [&] { return "normal form does not evaluate back for " + format(w); });
      c.expect(affine_match(g, oracle::affine_eval(render(nf), n)), [&] { return "normal form rejected by affine matrices"; });
      c.expect(bs_from_json(to_json(g), n) == g, [&] { return "JSON round trip fails for " + describe(g); });
    });
  }
}

inline void bs_two_pal(Rng& rng, std::int64_t cases, Checker& c) {
  for (std::int64_t i = 0; i < cases; ++i) {
    c.run_case([&] {
      const auto [n, w] = random_bs_word(rng);
      const auto d = bs_two_pal_decomposition(bs_eval(w, n));
      bool pals = true;
      for (const Word& f : d.factors) pals = pals && check::factor_is_palindrome(f);
      c.expect(d.length() <= 2 && pals, [&] { return "bad BS certificate shape for " + format(w); });
      c.expect(oracle::affine_eval(d.product(), n) == oracle::affine_eval(w, n),
               [&] { return "BS certificate rejected by affine matrices for " + format(w); });
    });
  }
}

inline void engine_soundness(Rng& rng, std::int64_t cases, Checker& c) {
  PalindromeProducts<HeisGroup> small(HeisGroup{}, 4);
  PalindromeProducts<HeisGroup> large(HeisGroup{}, 6);
  const BallTable ball = ball_table(HeisGroup{}, 4);
  for (std::int64_t i = 0; i < cases; ++i) {
    c.run_case([&] {
      const HeisElement h{rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)};
      // grid[l][k]: bounded length with max_len index l and max_factors k + 1.
      std::optional<int> grid[2][3];
      PalindromeProducts<HeisGroup>* products[] = {&small, &large};
      for (int l = 0; l < 2; ++l) {
        for (int k = 0; k < 3; ++k) {
          const auto r = pal_length_bounded(*products[l], h, k + 1);
          grid[l][k] = r.length;
          if (!r.length) continue;
          c.expect(r.witness.length() == static_cast<std::size_t>(*r.length) &&
                       oracle::matrix_eval(r.witness.product()) == matrix_of(h),
                   [&] { return "search witness does not evaluate to " + describe(h); });
          c.expect(*r.length >= heis_pal_length(h), [&] { return "search beat the exact length for " + describe(h); });
        }
      }
      for (int l1 = 0; l1 < 2; ++l1)
        for (int k1 = 0; k1 < 3; ++k1)
          for (int l2 = l1; l2 < 2; ++l2)
            for (int k2 = k1; k2 < 3; ++k2)
              if (grid[l1][k1])
                c.expect(grid[l2][k2] && *grid[l2][k2] <= *grid[l1][k1],
                         [&] { return "bounded length not monotone for " + describe(h); });
      const BallEntry& e = ball.entries[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(ball.entries.size()) - 1))];
      c.expect(static_cast<int>(e.witness.size()) == e.length && HeisGroup{}.encode(h_eval(e.witness)) == e.encoding,
               [&] { return "ball entry witness mismatch for " + e.normal_form; });
    });
  }
}

// ---- registry -------------------------------------------------------------

struct Suite {
  std::string_view name;
  std::string_view summary;
  void (*run)(Rng&, std::int64_t, Checker&);
};

inline const std::vector<Suite>& suites() {
  static const std::vector<Suite> all{
      {"freeword-laws", "reduction, reversal, inversion, grammar round trip, palindrome stability", freeword_laws},
      {"palrewrite-bounds", "conjugate/commutator/pair-power/coset certificates within their factor bounds", palrewrite_bounds},
      {"wreath-hom", "wr_eval against the lamplighter walk; group laws", wreath_hom},
      {"wreath-witness", "[f, b] = c for random derived elements", wreath_witness},
      {"wreath-three-pal", "three-palindrome certificates for random elements", wreath_three_pal},
      {"wreath-forms", "palindrome-form classification", wreath_forms},
      {"heis-matrix-oracle", "h_mul and h_inv against unitriangular matrices", heis_matrix_oracle},
      {"heis-eval", "h_eval against matrix evaluation of words", heis_eval},
      {"heis-quotient", "wreath_to_heis is a homomorphism compatible with h_eval", heis_quotient},
      {"heis-pal-law", "palindrome images, two-palindrome decision, exact length", heis_pal_law},
      {"bs-hom", "bs_eval against rational affine matrices", bs_hom},
      {"bs-roundtrip", "normal form and literal round trips", bs_roundtrip},
      {"bs-two-pal", "two-palindrome certificates in BS(1,n)", bs_two_pal},
      {"engine-soundness", "bounded search witnesses, monotonicity, ball witnesses", engine_soundness},
  };
  return all;
}

inline const Suite* find_suite(std::string_view name) {
  for (const Suite& s : suites())
    if (s.name == name) return &s;
  return nullptr;
}

}  // namespace verify

inline SuiteReport run_suite(const verify::Suite& suite, std::uint64_t seed, std::int64_t cases) {
  SuiteReport report;
  report.name = std::string(suite.name);
  report.seed = seed;
  report.cases = cases;
  Rng rng(seed);
  verify::Checker checker(report);
  suite.run(rng, cases, checker);
  return report;
}

}  // namespace palwidth
