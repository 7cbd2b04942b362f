// Acceptance checks. Each criterion prints one PASS/FAIL line with its
// elapsed time; the exit status is non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "palwidth/oracle/affine.hpp"
#include "palwidth/oracle/lamplighter.hpp"
#include "palwidth/oracle/pairing.hpp"
#include "palwidth/oracle/unitriangular.hpp"
#include "palwidth/palwidth.hpp"

using namespace palwidth;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& why) {
    if (!cond && ok) {
      ok = false;
      detail = why;
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;  // 0 means no stated runtime
  std::function<Outcome()> body;
};

Word ab(const char* text) { return parse(text, alphabet_ab()); }

bool all_palindromes(const std::vector<Word>& factors) {
  for (const Word& f : factors)
    if (!check::factor_is_palindrome(f)) return false;
  return true;
}

Outcome commutator_width() {
  Outcome o;
  Rng rng(1001);
  for (int i = 0; i < 10000 && o.ok; ++i) {
    const WreathElement c = verify::random_derived(rng, -6, 6, 6);
    const WreathElement f{commutator_witness(c), 0};
    const WreathElement comm = wr_mul(wr_mul(wr_inv(f), wr_inv(wr_b())), wr_mul(f, wr_b()));
    o.require(comm == c, "[f, b] != c for " + verify::describe(c));
  }
  return o;
}

Outcome three_palindromes() {
  Outcome o;
  Rng rng(1002);
  for (int i = 0; i < 10000 && o.ok; ++i) {
    const WreathElement g = verify::random_wreath(rng, 5, 5, 5);
    const auto d = three_pal_decomposition(g);
    o.require(d.length() <= 3, "more than three factors for " + verify::describe(g));
    o.require(all_palindromes(d.factors), "non-palindromic factor for " + verify::describe(g));
    o.require(verify::lamp_match(g, oracle::lamplighter_walk(d.product())), "product mismatch for " + verify::describe(g));
  }
  return o;
}

Outcome lower_bound() {
  Outcome o;
  const HeisElement c = wreath_to_heis(wr_eval(ab("B A b a")));
  o.require(c.x == 0 && c.y == 0 && (c.z == 1 || c.z == -1), "image of [b, a] is not (0, 0, +-1)");
  o.require(!two_pal_product_decide(c), "two_pal_product_decide accepted the central element");
  PalindromeProducts<HeisGroup> products(HeisGroup{}, 10);
  for (const HeisElement target : {c, h_inv(c)}) {
    o.require(!pal_length_bounded(products, target, 2).length, "meet-in-the-middle found a two-factor product");
    const auto three = pal_length_bounded(products, target, 3);
    o.require(three.length == 3, "no three-factor witness with palindromes of length <= 10");
    o.require(three.length && all_palindromes(three.witness.factors) &&
                  oracle::matrix_eval(three.witness.product()) == verify::matrix_of(target),
              "three-factor witness fails the matrix check");
  }
  // Every central element reachable by two palindromes of length <= 10 is trivial.
  for (const auto& entry : products.layer(2))
    o.require(!(entry.element.x == 0 && entry.element.y == 0 && entry.element.z != 0),
              "two palindromes reach a nontrivial central element");
  return o;
}

Outcome baumslag_solitar() {
  Outcome o;
  Rng rng(1004);
  for (std::int64_t n : {2, 3, -2}) {
    for (int i = 0; i < 1000 && o.ok; ++i) {
      const Word w = rng.random_word(alphabet_at(), static_cast<std::size_t>(rng.uniform(0, 20)));
      const auto d = bs_two_pal_decomposition(bs_eval(w, n));
      o.require(d.length() <= 2 && all_palindromes(d.factors), "bad certificate shape for " + format(w));
      o.require(oracle::affine_eval(d.product(), n) == oracle::affine_eval(w, n), "affine mismatch for " + format(w));
    }
  }
  o.require(!bs_is_palindrome_bounded(bs_eval(parse("ta", alphabet_at()), 2), 13), "t a is a palindrome of length <= 13");
  return o;
}

Outcome heisenberg_law() {
  Outcome o;
  Rng rng(1005);
  const auto triple = [&] { return HeisElement{rng.uniform(-1000, 1000), rng.uniform(-1000, 1000), rng.uniform(-1000, 1000)}; };
  for (int i = 0; i < 100000 && o.ok; ++i) {
    const HeisElement g = triple();
    const HeisElement h = triple();
    o.require(verify::matrix_of(h_mul(g, h)) == verify::matrix_of(g) * verify::matrix_of(h),
              "h_mul mismatch for " + verify::describe(g) + " * " + verify::describe(h));
  }
  for (int i = 0; i < 10000 && o.ok; ++i) {
    const Word w = rng.random_word(alphabet_ab(), static_cast<std::size_t>(rng.uniform(0, 30)));
    o.require(verify::matrix_of(h_eval(w)) == oracle::matrix_eval(w), "h_eval mismatch on " + format(w));
  }
  return o;
}

Outcome quotient() {
  Outcome o;
  Rng rng(1006);
  for (int i = 0; i < 10000 && o.ok; ++i) {
    const Word w = rng.random_word(alphabet_ab(), static_cast<std::size_t>(rng.uniform(0, 30)));
    o.require(wreath_to_heis(wr_eval(w)) == h_eval(w), "quotient square fails on " + format(w));
  }
  const WreathElement a2{SupportVector::unit(2), 0};
  const WreathElement rel = wr_mul(wr_inv({SupportVector::unit(0), 0}), {SupportVector::unit(1, 2), 0});
  o.require(wreath_to_heis(a2) == wreath_to_heis(rel), "a_2 and a_0^-1 a_1^2 have different images");
  o.require(!(a2 == rel), "a_2 = a_0^-1 a_1^2 already in Z wr Z");
  return o;
}

Outcome palindrome_images() {
  Outcome o;
  std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t>> images;
  for_each_palindrome(alphabet_ab(), 12, [&](const Word& p) {
    const HeisElement h = h_eval(p);
    o.require(2 * h.z == h.x * h.y, "palindrome " + format(p) + " violates 2z = xy");
    images.emplace(h.x, h.y, h.z);
  });
  for (std::int64_t x = -4; x <= 4; ++x)
    for (std::int64_t y = -4; y <= 4; ++y)
      if ((x * y) % 2 == 0)
        o.require(images.contains({x, y, x * y / 2}),
                  "(" + std::to_string(x) + ", " + std::to_string(y) + ", xy/2) not attained");
  return o;
}

Outcome construction_bounds() {
  Outcome o;
  Rng rng(1008);
  for (int i = 0; i < 500 && o.ok; ++i) {
    const Word u = rng.random_word(alphabet_ab(), static_cast<std::size_t>(rng.uniform(0, 8)));
    const std::size_t k = static_cast<std::size_t>(rng.uniform(1, 4));
    std::vector<Word> pals;
    for (std::size_t j = 0; j < k; ++j) pals.push_back(rng.palindrome(alphabet_ab(), static_cast<std::size_t>(rng.uniform(0, 8))));
    const auto comm = commutator_decomposition(u, pals);
    o.require(comm.length() <= 2 * k + k % 2, "commutator certificate over the bound");
    o.require(verify::independent_word_check(comm), "commutator certificate fails the naive check");
    const auto conj = conjugate_decomposition(u, pals);
    o.require(conj.length() <= k + k % 2, "conjugate certificate over the bound");
    o.require(verify::independent_word_check(conj), "conjugate certificate fails the naive check");
  }
  return o;
}

template <class G, class Check>
void engine_grid(Outcome& o, const G& group, const std::vector<typename G::Element>& targets, Check&& oracle_ok) {
  const std::vector<int> lens{2, 4, 6};
  std::vector<PalindromeProducts<G>> products;
  for (int len : lens) products.emplace_back(group, len);
  for (const auto& t : targets) {
    std::optional<int> grid[3][3];
    for (std::size_t l = 0; l < lens.size(); ++l)
      for (int k = 0; k < 3; ++k) {
        const auto r = pal_length_bounded(products[l], t, k + 1);
        grid[l][k] = r.length;
        if (r.length)
          o.require(r.witness.length() == static_cast<std::size_t>(*r.length) && all_palindromes(r.witness.factors) &&
                        oracle_ok(r.witness.product(), t),
                    group.label() + ": search witness fails re-evaluation");
      }
    for (int l1 = 0; l1 < 3; ++l1)
      for (int k1 = 0; k1 < 3; ++k1)
        for (int l2 = l1; l2 < 3; ++l2)
          for (int k2 = k1; k2 < 3; ++k2)
            if (grid[l1][k1])
              o.require(grid[l2][k2] && *grid[l2][k2] <= *grid[l1][k1], group.label() + ": bounded length not monotone");
  }
  const BallTable ball = ball_table(group, 5);
  for (const BallEntry& e : ball.entries) {
    const auto x = group.eval(e.witness);
    o.require(group.encode(x) == e.encoding && static_cast<int>(e.witness.size()) == e.length && oracle_ok(e.witness, x),
              group.label() + ": ball witness fails re-evaluation for " + e.normal_form);
  }
}

Outcome engine_soundness() {
  Outcome o;
  Rng rng(1009);
  std::vector<HeisElement> heis;
  std::vector<WreathElement> wreath;
  std::vector<BSElement> bs;
  for (int i = 0; i < 40; ++i) {
    heis.push_back(h_eval(rng.random_word(alphabet_ab(), static_cast<std::size_t>(rng.uniform(0, 8)))));
    wreath.push_back(wr_eval(rng.random_word(alphabet_ab(), static_cast<std::size_t>(rng.uniform(0, 8)))));
    bs.push_back(bs_eval(rng.random_word(alphabet_at(), static_cast<std::size_t>(rng.uniform(0, 8))), 2));
  }
  engine_grid(o, HeisGroup{}, heis, [](const Word& w, const HeisElement& h) { return oracle::matrix_eval(w) == verify::matrix_of(h); });
  engine_grid(o, WreathGroup{}, wreath,
              [](const Word& w, const WreathElement& g) { return verify::lamp_match(g, oracle::lamplighter_walk(w)); });
  engine_grid(o, BSGroup{2}, bs, [](const Word& w, const BSElement& g) { return verify::affine_match(g, oracle::affine_eval(w, 2)); });
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "commutator width of Z wr Z: [f, b] = c on 10^4 derived elements", 5, commutator_width},
      {2, "pw(Z wr Z) <= 3: verified certificates on 10^4 random elements", 30, three_palindromes},
      {3, "pw(Z wr Z) >= 3: [b, a] is not a product of two palindromes", 120, lower_bound},
      {4, "pw(BS(1,n)) <= 2 for n in {2, 3, -2}; t a not a palindrome up to length 13", 60, baumslag_solitar},
      {5, "Heisenberg law against unitriangular matrices", 0, heisenberg_law},
      {6, "quotient Z wr Z -> N(2,2) commutes with evaluation; a_2 = a_0^-1 a_1^2 in the image", 0, quotient},
      {7, "palindrome images in N(2,2) are exactly 2z = xy (|x|, |y| <= 4)", 60, palindrome_images},
      {8, "conjugate and commutator certificates within their factor bounds", 0, construction_bounds},
      {9, "search engine witnesses re-evaluate; monotone in (max_len, max_factors)", 0, engine_soundness},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds && o.ok) {
      o.ok = false;
      o.detail = "over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit";
    }
    if (!o.ok) ++failed;
    std::printf("%s [%d] %s (%.2f s", o.ok ? "PASS" : "FAIL", c.id, c.title.c_str(), secs);
    if (c.limit_seconds > 0) std::printf(", limit %.0f s", c.limit_seconds);
    std::printf(")");
    if (!o.ok) std::printf(": %s", o.detail.c_str());
    std::printf("\n");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
