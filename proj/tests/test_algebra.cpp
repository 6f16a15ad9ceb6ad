#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "nilcox/errors.hpp"
#include "nilcox/nca_algebra.hpp"

using namespace nilcox;

namespace {

AlgebraElement nf(const NcaContext& ctx, const std::vector<int>& word) {
  return normal_form(ctx, word);
}

AlgebraElement gen(const NcaContext& ctx, int i) { return nf(ctx, {i}); }

} // namespace

TEST_CASE("dimension formula", "[algebra]") {
  REQUIRE(dimension(1, 2) == 2);
  REQUIRE(dimension(1, 5) == 5);
  REQUIRE(dimension(2, 2) == 6);
  REQUIRE(dimension(2, 3) == 10);
  REQUIRE(dimension(2, 4) == 14);
  REQUIRE(dimension(3, 2) == 24);
  REQUIRE(dimension(3, 3) == 42);
  REQUIRE(dimension(4, 2) == 120);
  REQUIRE_THROWS_AS(dimension(0, 3), DomainError);
  REQUIRE_THROWS_AS(dimension(2, 1), DomainError);
}

TEST_CASE("hilbert series", "[algebra]") {
  const auto h23 = hilbert(2, 3);
  REQUIRE(h23.coefficients ==
          std::vector<mpz_class>{1, 2, 3, 3, 1});
  REQUIRE(h23.to_string() == "[1,2,3,3,1]");
  REQUIRE(h23.sum() == 10);
  REQUIRE(h23.degree() == 4);

  // d = 2 collapses to the Poincare polynomial of S_{n+1}.
  REQUIRE(hilbert(2, 2).coefficients == std::vector<mpz_class>{1, 2, 2, 1});
  // n = 1 is the truncated polynomial ring on one letter.
  REQUIRE(hilbert(1, 4).coefficients == std::vector<mpz_class>{1, 1, 1, 1});

  for (int n = 1; n <= 4; ++n)
    for (int d = 2; d <= 4; ++d) {
      const auto h = hilbert(n, d);
      REQUIRE(h.sum() == dimension(n, d));
      REQUIRE(h.degree() == NcaContext(n, d).longest_word_length());
    }
}

TEST_CASE("hilbert coefficients count basis words by length", "[algebra]") {
  for (int n = 1; n <= 3; ++n)
    for (int d = 2; d <= 4; ++d) {
      const auto h = hilbert(n, d);
      std::vector<mpz_class> counts(
          static_cast<std::size_t>(h.degree()) + 1, 0);
      for (const auto& b : basis(n, d))
        counts[static_cast<std::size_t>(b.word_length())] += 1;
      REQUIRE(counts == h.coefficients);
    }
}

TEST_CASE("normal form collapses relation words", "[algebra]") {
  const NcaContext ctx{2, 3};
  REQUIRE(nf(ctx, {2, 1, 2, 1}).is_zero());
  REQUIRE(nf(ctx, {1, 1}).is_zero());
  REQUIRE(nf(ctx, {2, 2, 2}).is_zero());
  REQUIRE_FALSE(nf(ctx, {2, 2}).is_zero());
  REQUIRE(nf(ctx, {1, 2, 1}) == nf(ctx, {2, 1, 2}));
  REQUIRE(nf(ctx, {}) == AlgebraElement::unit(ctx));
  REQUIRE(nf(ctx, {1, 2, 2, 1}).to_string() == "1*[1,2,2,1]");
  REQUIRE_THROWS_AS(nf(ctx, {3}), DomainError);
  REQUIRE_THROWS_AS(nf(ctx, {0}), DomainError);
}

TEST_CASE("normal form fixes every basis word", "[algebra]") {
  for (int n = 1; n <= 3; ++n)
    for (int d = 2; d <= 4; ++d) {
      const NcaContext ctx{n, d};
      for (const auto& b : basis(n, d)) {
        const auto e = nf(ctx, b.expand());
        const auto* single = e.single_word();
        REQUIRE(single != nullptr);
        REQUIRE(*single == b);
      }
    }
}

TEST_CASE("multiplication has the empty word as unit", "[algebra]") {
  const NcaContext ctx{3, 3};
  const auto one = AlgebraElement::unit(ctx);
  for (const auto& b : basis(3, 3)) {
    const auto x = AlgebraElement::from_word(b);
    REQUIRE(multiply(one, x) == x);
    REQUIRE(multiply(x, one) == x);
  }
  REQUIRE(multiply(AlgebraElement::zero(ctx), one).is_zero());
}

TEST_CASE("multiplication matches letter concatenation", "[algebra]") {
  const NcaContext ctx{2, 3};
  for (const auto& a : basis(2, 3))
    for (const auto& b : basis(2, 3)) {
      auto word = a.expand();
      const auto tail = b.expand();
      word.insert(word.end(), tail.begin(), tail.end());
      REQUIRE(multiply(AlgebraElement::from_word(a),
                       AlgebraElement::from_word(b)) == nf(ctx, word));
    }
}

TEST_CASE("scalar arithmetic on elements", "[algebra]") {
  const NcaContext ctx{2, 3};
  const auto x = nf(ctx, {1});
  const auto y = nf(ctx, {2});
  auto s = x + y;
  s -= x;
  REQUIRE(s == y);
  REQUIRE((mpz_class(2) * x + x) == mpz_class(3) * x);
  REQUIRE((x - x).is_zero());
  REQUIRE(x.in_augmentation_ideal());
  REQUIRE_FALSE(AlgebraElement::unit(ctx).in_augmentation_ideal());
  REQUIRE((x + AlgebraElement::unit(ctx)).to_string() == "1*[] + 1*[1]");
}

TEST_CASE("power of the full generator sum", "[algebra]") {
  const NcaContext ctx{2, 3};
  const auto s = gen(ctx, 1) + gen(ctx, 2);
  REQUIRE_FALSE(power(s, 4).is_zero());
  REQUIRE(power(s, 5).is_zero());
  REQUIRE(power(s, 0) == AlgebraElement::unit(ctx));
}

TEST_CASE("theta reverses words", "[algebra]") {
  const NcaContext ctx{2, 3};
  REQUIRE(theta(nf(ctx, {1, 2, 2})) == nf(ctx, {2, 2, 1}));
  REQUIRE(theta(AlgebraElement::unit(ctx)) == AlgebraElement::unit(ctx));
  for (int n = 2; n <= 3; ++n)
    for (int d = 2; d <= 3; ++d) {
      const NcaContext c{n, d};
      for (const auto& b : basis(n, d)) {
        const auto x = AlgebraElement::from_word(b);
        REQUIRE(theta(theta(x)) == x);
        const auto letters = b.expand();
        const std::vector<int> reversed(letters.rbegin(), letters.rend());
        REQUIRE(theta(x) == nf(c, reversed));
      }
    }
}

TEST_CASE("rewrite of tail words into the extended form", "[algebra]") {
  const NcaContext c23{2, 3};
  const auto r = rewrite_rprim(c23, 1, 1, Permutation(2));
  REQUIRE(r == BasisWord::extended(c23, Permutation::simple(2, 1), 1, 2));

  const NcaContext c33{3, 3};
  const auto r2 = rewrite_rprim(c33, 2, 1, Permutation::simple(3, 2));
  REQUIRE(r2 == BasisWord::extended(c33, Permutation::simple(3, 2), 1, 2));

  // Agrees with the normal form of [m..n-1] ++ [n]^k ++ reduced(w).
  for (const auto& w : all_permutations(3))
    for (int k = 1; k <= 2; ++k)
      for (int m = 1; m <= 3; ++m) {
        std::vector<int> word;
        for (int j = m; j <= 2; ++j) word.push_back(j);
        for (int t = 0; t < k; ++t) word.push_back(3);
        const auto tail = canonical_reduced_word(w);
        word.insert(word.end(), tail.begin(), tail.end());
        const auto e = nf(c33, word);
        const auto* single = e.single_word();
        REQUIRE(single != nullptr);
        REQUIRE(*single == rewrite_rprim(c33, m, k, w));
      }
}

TEST_CASE("left primitives are annihilated by every generator", "[algebra]") {
  const auto prims = left_primitives(2, 3);
  REQUIRE(prims.size() == 3);
  REQUIRE(prims[0].to_string() == "[1,2,1]");
  REQUIRE(prims[1].to_string() == "[1,2,2,1]");
  REQUIRE(prims[2].to_string() == "[1,2,2]");

  for (int n = 1; n <= 3; ++n)
    for (int d = 2; d <= 4; ++d) {
      const auto ps = left_primitives(n, d);
      const int expected =
          (n == 1 || d == 2) ? 1 : 1 + n * (d - 2);
      REQUIRE(static_cast<int>(ps.size()) == expected);
      for (const auto& p : ps)
        for (int i = 1; i <= n; ++i)
          REQUIRE(act_generator(i, p).is_zero());
    }
}

TEST_CASE("two sided primitives are annihilated on both sides", "[algebra]") {
  const auto prims = two_sided_primitives(2, 3);
  REQUIRE(prims.size() == 2);
  REQUIRE(prims[0].to_string() == "[1,2,1]");
  REQUIRE(prims[1].to_string() == "[1,2,2,1]");

  for (int n = 1; n <= 3; ++n)
    for (int d = 2; d <= 4; ++d) {
      const NcaContext ctx{n, d};
      const auto ps = two_sided_primitives(n, d);
      const int expected = (n == 1 || d == 2) ? 1 : d - 1;
      REQUIRE(static_cast<int>(ps.size()) == expected);
      for (const auto& p : ps) {
        const auto x = AlgebraElement::from_word(p);
        for (int i = 1; i <= n; ++i) {
          REQUIRE(act_generator(i, p).is_zero());
          REQUIRE(multiply(x, gen(ctx, i)).is_zero());
        }
        // theta permutes the two-sided primitive set.
        const auto img = theta(x);
        const auto* single = img.single_word();
        REQUIRE(single != nullptr);
        REQUIRE(std::find(ps.begin(), ps.end(), *single) != ps.end());
      }
    }
}

TEST_CASE("frobenius predicate", "[algebra]") {
  REQUIRE(is_frobenius(1, 5));
  REQUIRE(is_frobenius(4, 2));
  REQUIRE_FALSE(is_frobenius(2, 3));
  REQUIRE_FALSE(is_frobenius(3, 4));
}

TEST_CASE("bimodule rank bookkeeping", "[algebra]") {
  const auto r22 = khovanov_decomposition_check(2, 2);
  REQUIRE(r22.ok());
  REQUIRE(r22.plain_rank == 2);
  REQUIRE(r22.module_ranks == std::vector<long long>{4});
  REQUIRE(r22.total_rank == 6);

  const auto r23 = khovanov_decomposition_check(2, 3);
  REQUIRE(r23.ok());
  REQUIRE(r23.total_rank == 10);

  const auto r33 = khovanov_decomposition_check(3, 3);
  REQUIRE(r33.ok());
  REQUIRE(r33.plain_rank == 6);
  REQUIRE(r33.module_ranks == std::vector<long long>{18, 18});
  REQUIRE(r33.total_rank == 42);
}

TEST_CASE("element text round trip", "[algebra]") {
  const NcaContext ctx{2, 3};
  REQUIRE(parse_element(ctx, "0").is_zero());
  REQUIRE(parse_element(ctx, "[1,2,1]") == nf(ctx, {1, 2, 1}));
  REQUIRE(parse_element(ctx, "2*[1] + -1*[2]") ==
          mpz_class(2) * gen(ctx, 1) - gen(ctx, 2));
  REQUIRE(parse_element(ctx, "[]") == AlgebraElement::unit(ctx));
  REQUIRE(parse_element(ctx, "[2,1,2,1]").is_zero());

  for (const auto& b : basis(2, 3)) {
    const auto x = AlgebraElement::from_word(b);
    REQUIRE(parse_element(ctx, x.to_string()) == x);
  }
  const auto mixed = nf(ctx, {1}) + mpz_class(3) * nf(ctx, {2, 2});
  REQUIRE(parse_element(ctx, mixed.to_string()) == mixed);

  REQUIRE_THROWS_AS(parse_element(ctx, "abc"), DomainError);
  REQUIRE_THROWS_AS(parse_element(ctx, "[1,2,"), DomainError);
  REQUIRE_THROWS_AS(parse_element(ctx, "[9]"), DomainError);
}
