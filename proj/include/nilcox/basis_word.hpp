#pragma once
/// @file basis_word.hpp
/// @brief Canonical basis words of NC_A(n,d).
///
/// NC_A(n,d) is the quotient of the free algebra on T_1..T_n by the braid
/// relations of the A_n diagram together with T_i^2 = 0 for i < n and
/// T_n^d = 0. Its basis consists of the plain words T_w for w in S_n and
/// the extended words T_w T_n^k T_{n-1} ... T_m for w in S_n, 1 <= k <= d-1,
/// 1 <= m <= n (the trailing descent is empty when m = n).

#include <string>
#include <tuple>
#include <vector>

#include "nilcox/errors.hpp"
#include "nilcox/permutation.hpp"

namespace nilcox {

/// The pair (n,d) fixing one algebra NC_A(n,d).
struct NcaContext {
  int n = 1;
  int d = 2;

  NcaContext() = default;
  NcaContext(int n_, int d_) : n(n_), d(d_) {
    if (n < 1 || d < 2)
      throw DomainError("context requires n >= 1 and d >= 2");
  }

  bool operator==(const NcaContext&) const = default;

  /// Maximal word length l = n(n-1)/2 + d + n - 2.
  int longest_word_length() const { return n * (n - 1) / 2 + d + n - 2; }
};

/// One basis word, Plain(w) or Extended(w,k,m), tied to its context.
class BasisWord {
public:
  static BasisWord plain(const NcaContext& ctx, const Permutation& w) {
    return BasisWord(ctx, w, false, 0, 0);
  }

  static BasisWord extended(const NcaContext& ctx, const Permutation& w,
                            int k, int m) {
    if (k < 1 || k > ctx.d - 1)
      throw DomainError("extended word requires 1 <= k <= d-1");
    if (m < 1 || m > ctx.n)
      throw DomainError("extended word requires 1 <= m <= n");
    return BasisWord(ctx, w, true, k, m);
  }

  /// The unit element's word, Plain(identity).
  static BasisWord one(const NcaContext& ctx) {
    return plain(ctx, Permutation(ctx.n));
  }

  const NcaContext& context() const { return ctx_; }
  bool is_plain() const { return !extended_; }
  bool is_extended() const { return extended_; }
  const Permutation& w() const { return w_; }

  /// Exponent of T_n; only meaningful for extended words.
  int k() const { return k_; }
  /// Endpoint of the trailing T_{n-1}...T_m descent; only for extended words.
  int m() const { return m_; }

  /// ell(w) for plain words, ell(w) + k + n - m for extended ones.
  int word_length() const {
    if (!extended_) return w_.length();
    return w_.length() + k_ + ctx_.n - m_;
  }

  /// The defining letter sequence: reduced word of w, then k copies of n,
  /// then n-1 down to m.
  std::vector<int> expand() const {
    std::vector<int> letters = canonical_reduced_word(w_);
    if (extended_) {
      for (int t = 0; t < k_; ++t) letters.push_back(ctx_.n);
      for (int j = ctx_.n - 1; j >= m_; --j) letters.push_back(j);
    }
    return letters;
  }

  bool operator==(const BasisWord&) const = default;

  /// Deterministic order: by word length, plain words before extended ones,
  /// then by one-line form of w, then (k, m).
  bool operator<(const BasisWord& rhs) const {
    const int ll = word_length();
    const int rl = rhs.word_length();
    if (ll != rl) return ll < rl;
    if (extended_ != rhs.extended_) return !extended_;
    if (w_ != rhs.w_) return w_ < rhs.w_;
    return std::tie(k_, m_) < std::tie(rhs.k_, rhs.m_);
  }

  /// Letter list form, e.g. "[1,2,2,1]"; the empty word prints "[]".
  std::string to_string() const {
    std::string out = "[";
    const auto letters = expand();
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (i > 0) out += ",";
      out += std::to_string(letters[i]);
    }
    out += "]";
    return out;
  }

private:
  BasisWord(const NcaContext& ctx, const Permutation& w, bool extended, int k,
            int m)
      : ctx_(ctx), w_(w), extended_(extended), k_(k), m_(m) {
    if (w.degree() != ctx.n)
      throw DomainError("basis word permutation degree must equal n");
  }

  NcaContext ctx_;
  Permutation w_;
  bool extended_;
  int k_;
  int m_;
};

} // namespace nilcox
