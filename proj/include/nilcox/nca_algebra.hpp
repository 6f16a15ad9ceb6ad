#pragma once
/// @file nca_algebra.hpp
/// @brief The exact engine for NC_A(n,d): generator action on the canonical
///        basis, normal forms, multiplication, Hilbert series, the
///        anti-involution theta, primitives, and decomposition bookkeeping.
///
/// Multiplication is defined through the left regular representation: a
/// letter acts on a basis word by an explicit rule, a letter sequence acts
/// by a right-to-left fold, and products are the bilinear extension. This
/// gives normal forms by construction.

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "nilcox/algebra_element.hpp"
#include "nilcox/basis_word.hpp"
#include "nilcox/errors.hpp"
#include "nilcox/permutation.hpp"

namespace nilcox {

/// Action of the generator T_i on one basis word. The result is a single
/// basis word with coefficient 1, or zero.
///
/// For i < n the basis is a free module over the subalgebra on T_1..T_{n-1}
/// and T_i acts on the T_w factor: Plain(w) or Extended(w,k,m) maps to the
/// same kind with w replaced by s_i w when ell(s_i w) > ell(w), else to 0.
///
/// For i = n, with canonical decomposition w = w' s_{n-1} ... s_{m'}:
///   (a) m' = n (w fixes n):     Plain(w) -> Extended(w,1,n),
///                               Extended(w,k,m) -> Extended(w,k+1,m),
///                               zero when k = d-1;
///   (b) m' <= n-1 and k >= 2:   zero;
///   (c) m' <= n-1 and k = 1:    Extended(w,1,m) -> Extended(w~,1,m') when
///                               m' < m and zero otherwise, where
///                               w~ = w' s_{n-1} ... s_{m-1};
///                               Plain(w) -> Extended(w',1,m').
inline AlgebraElement act_generator(int i, const BasisWord& b) {
  const NcaContext ctx = b.context();
  const int n = ctx.n;
  const int d = ctx.d;
  if (i < 1 || i > n) throw DomainError("generator index out of range");

  if (i < n) {
    if (!b.w().left_ascent(i)) return AlgebraElement::zero(ctx);
    const Permutation moved = b.w().swap_values(i);
    if (b.is_plain())
      return AlgebraElement::from_word(BasisWord::plain(ctx, moved));
    return AlgebraElement::from_word(
        BasisWord::extended(ctx, moved, b.k(), b.m()));
  }

  const CanonicalDecomposition dec = canonical_decompose(b.w());
  if (dec.m_prime == n) {
    if (b.is_plain())
      return AlgebraElement::from_word(BasisWord::extended(ctx, b.w(), 1, n));
    if (b.k() == d - 1) return AlgebraElement::zero(ctx);
    return AlgebraElement::from_word(
        BasisWord::extended(ctx, b.w(), b.k() + 1, b.m()));
  }
  if (b.is_plain())
    return AlgebraElement::from_word(
        BasisWord::extended(ctx, dec.prefix, 1, dec.m_prime));
  if (b.k() >= 2) return AlgebraElement::zero(ctx);
  if (dec.m_prime >= b.m()) return AlgebraElement::zero(ctx);
  Permutation moved = dec.prefix;
  for (int j = n - 1; j >= b.m() - 1; --j) moved = moved.swap_positions(j);
  return AlgebraElement::from_word(
      BasisWord::extended(ctx, moved, 1, dec.m_prime));
}

/// Linear extension of the generator action.
inline AlgebraElement act_generator(int i, const AlgebraElement& x) {
  AlgebraElement out(x.context());
  for (const auto& [b, c] : x.terms()) {
    AlgebraElement piece = act_generator(i, b);
    piece *= c;
    out += piece;
  }
  return out;
}

/// Normal form of a letter sequence: the right-to-left fold of the
/// generator action starting from Plain(identity). The result is a single
/// basis word with coefficient 1, or zero.
inline AlgebraElement normal_form(const NcaContext& ctx,
                                  const std::vector<int>& letters) {
  for (int l : letters)
    if (l < 1 || l > ctx.n) throw DomainError("letter out of range");
  AlgebraElement x = AlgebraElement::unit(ctx);
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    x = act_generator(*it, x);
  return x;
}

inline std::vector<int> expand(const BasisWord& b) { return b.expand(); }

inline int word_length(const BasisWord& b) { return b.word_length(); }

/// Product in NC_A(n,d): each basis word of x acts on y through the fold of
/// its letter sequence, extended bilinearly.
inline AlgebraElement multiply(const AlgebraElement& x,
                               const AlgebraElement& y) {
  if (!(x.context() == y.context()))
    throw DomainError("algebra context mismatch");
  AlgebraElement out(x.context());
  for (const auto& [b, c] : x.terms()) {
    AlgebraElement z = y;
    const std::vector<int> letters = b.expand();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
      z = act_generator(*it, z);
    z *= c;
    out += z;
  }
  return out;
}

/// x^p by repeated multiplication; x^0 is the unit.
inline AlgebraElement power(const AlgebraElement& x, int p) {
  AlgebraElement out = AlgebraElement::unit(x.context());
  for (int t = 0; t < p; ++t) out = multiply(out, x);
  return out;
}

/// dim NC_A(n,d) = n! (1 + n(d-1)).
inline mpz_class dimension(int n, int d) {
  NcaContext ctx(n, d);
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  out *= 1 + static_cast<long>(n) * (d - 1);
  return out;
}

/// Coefficient list of the Hilbert series, indexed by degree.
struct HilbertPolynomial {
  std::vector<mpz_class> coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }

  mpz_class sum() const {
    mpz_class out = 0;
    for (const auto& c : coefficients) out += c;
    return out;
  }

  /// e.g. "[1,2,3,3,1]".
  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
      if (i > 0) out += ",";
      out += coefficients[i].get_str();
    }
    out += "]";
    return out;
  }
};

namespace detail {
inline std::vector<mpz_class> poly_mul(const std::vector<mpz_class>& a,
                                       const std::vector<mpz_class>& b) {
  std::vector<mpz_class> out(a.size() + b.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline std::vector<mpz_class> q_integer(int k) {
  return std::vector<mpz_class>(static_cast<std::size_t>(k), mpz_class(1));
}
} // namespace detail

/// Hilbert series of NC_A(n,d): [n]_q! (1 + q [n]_q [d-1]_q). For d = 2 this
/// collapses to [n+1]_q!, and for n = 1 to [d]_q.
inline HilbertPolynomial hilbert(int n, int d) {
  NcaContext ctx(n, d);
  std::vector<mpz_class> q_factorial{mpz_class(1)};
  for (int j = 2; j <= n; ++j)
    q_factorial = detail::poly_mul(q_factorial, detail::q_integer(j));

  std::vector<mpz_class> tail =
      detail::poly_mul(detail::q_integer(n), detail::q_integer(d - 1));
  std::vector<mpz_class> bracket(tail.size() + 1, mpz_class(0));
  bracket[0] = 1;
  for (std::size_t i = 0; i < tail.size(); ++i) bracket[i + 1] += tail[i];

  return HilbertPolynomial{detail::poly_mul(q_factorial, bracket)};
}

/// All basis words of NC_A(n,d) in the canonical deterministic order.
inline std::vector<BasisWord> basis(int n, int d) {
  NcaContext ctx(n, d);
  std::vector<BasisWord> out;
  for (const auto& w : all_permutations(n)) {
    out.push_back(BasisWord::plain(ctx, w));
    for (int k = 1; k <= d - 1; ++k)
      for (int m = 1; m <= n; ++m)
        out.push_back(BasisWord::extended(ctx, w, k, m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// The anti-involution fixing every generator: each term's letter sequence
/// is reversed and re-normalized.
inline AlgebraElement theta(const AlgebraElement& x) {
  AlgebraElement out(x.context());
  for (const auto& [b, c] : x.terms()) {
    std::vector<int> letters = b.expand();
    std::reverse(letters.begin(), letters.end());
    AlgebraElement piece = normal_form(x.context(), letters);
    piece *= c;
    out += piece;
  }
  return out;
}

/// Normal form of T_m ... T_{n-1} T_n^k T_w in closed form: with
/// w = w' s_{n-1} ... s_{m'}, the word equals
/// Extended(s_m ... s_{n-1} w', k, m').
inline BasisWord rewrite_rprim(const NcaContext& ctx, int m, int k,
                               const Permutation& w) {
  const int n = ctx.n;
  if (w.degree() != n) throw DomainError("permutation degree must equal n");
  if (m < 1 || m > n) throw DomainError("rewrite requires 1 <= m <= n");
  const CanonicalDecomposition dec = canonical_decompose(w);
  Permutation moved = dec.prefix;
  for (int j = n - 1; j >= m; --j) moved = moved.swap_values(j);
  return BasisWord::extended(ctx, moved, k, dec.m_prime);
}

/// Basis of the left-primitive space Prim_L = {x : T_i x = 0 for all i}.
inline std::vector<BasisWord> left_primitives(int n, int d) {
  NcaContext ctx(n, d);
  if (n == 1)
    return {BasisWord::extended(ctx, Permutation(1), d - 1, 1)};
  const Permutation top = longest_element(n);
  std::vector<BasisWord> out{BasisWord::extended(ctx, top, 1, 1)};
  if (d == 2) return out;
  for (int k = 2; k <= d - 1; ++k)
    for (int m = 1; m <= n; ++m)
      out.push_back(BasisWord::extended(ctx, top, k, m));
  return out;
}

/// Basis of the two-sided primitive space {x : T_i x = x T_i = 0 for all i}.
inline std::vector<BasisWord> two_sided_primitives(int n, int d) {
  NcaContext ctx(n, d);
  if (n == 1)
    return {BasisWord::extended(ctx, Permutation(1), d - 1, 1)};
  const Permutation top = longest_element(n);
  if (d == 2) return {BasisWord::extended(ctx, top, 1, 1)};
  std::vector<BasisWord> out;
  for (int k = 1; k <= d - 1; ++k)
    out.push_back(BasisWord::extended(ctx, top, k, 1));
  return out;
}

/// NC_A(n,d) is Frobenius exactly when n = 1 or d = 2.
inline bool is_frobenius(int n, int d) {
  NcaContext ctx(n, d);
  return n == 1 || d == 2;
}

/// Bookkeeping for the bimodule decomposition into the plain span and the
/// d-1 spans M_k = span{Extended(.,k,.)}.
struct KhovanovReport {
  int n = 0;
  int d = 0;
  long long plain_rank = 0;
  std::vector<long long> module_ranks; // indexed by k-1
  bool module_ranks_match = false;     // each equals n * n!
  bool phi_surjective = false;         // every Extended word is T_w T_n^k T_{n-1}..T_m
  long long total_rank = 0;
  bool total_matches_dimension = false;

  bool ok() const {
    return module_ranks_match && phi_surjective && total_matches_dimension;
  }
};

inline KhovanovReport khovanov_decomposition_check(int n, int d) {
  NcaContext ctx(n, d);
  KhovanovReport report;
  report.n = n;
  report.d = d;
  report.module_ranks.assign(static_cast<std::size_t>(d - 1), 0);

  const auto words = basis(n, d);
  bool surjective = true;
  for (const auto& b : words) {
    if (b.is_plain()) {
      ++report.plain_rank;
      continue;
    }
    ++report.module_ranks[static_cast<std::size_t>(b.k() - 1)];
    AlgebraElement t_w = normal_form(ctx, canonical_reduced_word(b.w()));
    AlgebraElement t_n_k =
        normal_form(ctx, std::vector<int>(static_cast<std::size_t>(b.k()), n));
    std::vector<int> descent;
    for (int j = n - 1; j >= b.m(); --j) descent.push_back(j);
    AlgebraElement tail = normal_form(ctx, descent);
    AlgebraElement product = multiply(t_w, multiply(t_n_k, tail));
    if (!(product == AlgebraElement::from_word(b))) surjective = false;
  }

  long long expected = 1;
  for (int j = 2; j <= n; ++j) expected *= j;
  const long long factorial_n = expected;
  report.module_ranks_match = true;
  report.total_rank = report.plain_rank;
  for (long long r : report.module_ranks) {
    if (r != n * factorial_n) report.module_ranks_match = false;
    report.total_rank += r;
  }
  report.phi_surjective = surjective;
  report.total_matches_dimension =
      mpz_class(static_cast<long>(report.total_rank)) == dimension(n, d);
  return report;
}

/// Parses the element text format: "0", or terms "c*[i1,i2,...]" joined by
/// " + ". Each term contributes c times the normal form of its letters, so
/// arbitrary letter sequences are accepted, not only basis words.
inline AlgebraElement parse_element(const NcaContext& ctx,
                                    const std::string& text) {
  auto fail = [](const std::string& why) -> void {
    throw DomainError("element parse error: " + why);
  };
  std::size_t pos = 0;
  auto skip_space = [&]() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };

  skip_space();
  if (pos >= text.size()) fail("empty input");
  {
    std::size_t probe = pos;
    if (text[probe] == '0') {
      ++probe;
      while (probe < text.size() &&
             std::isspace(static_cast<unsigned char>(text[probe])))
        ++probe;
      if (probe == text.size()) return AlgebraElement::zero(ctx);
    }
  }

  AlgebraElement out(ctx);
  while (true) {
    skip_space();
    std::string digits;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      digits += text[pos];
      ++pos;
    }
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      digits += text[pos];
      ++pos;
    }
    mpz_class coeff = 1;
    if (!digits.empty() && digits != "+" && digits != "-") {
      coeff = mpz_class(digits);
      skip_space();
      if (pos >= text.size() || text[pos] != '*') fail("expected '*' after coefficient");
      ++pos;
    } else if (digits == "+" || digits == "-") {
      fail("sign without digits");
    }
    skip_space();
    if (pos >= text.size() || text[pos] != '[') fail("expected '['");
    ++pos;
    std::vector<int> letters;
    skip_space();
    if (pos < text.size() && text[pos] == ']') {
      ++pos;
    } else {
      while (true) {
        skip_space();
        std::string num;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          num += text[pos];
          ++pos;
        }
        if (num.empty()) fail("expected a letter index");
        letters.push_back(std::stoi(num));
        skip_space();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < text.size() && text[pos] == ']') {
          ++pos;
          break;
        }
        fail("expected ',' or ']'");
      }
    }
    AlgebraElement piece = normal_form(ctx, letters);
    piece *= coeff;
    out += piece;
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != '+') fail("expected '+' between terms");
    ++pos;
  }
  return out;
}

} // namespace nilcox
