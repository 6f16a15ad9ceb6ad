#pragma once
/// @file permutation.hpp
/// @brief Symmetric group elements in one-line notation: Coxeter length,
///        reduced words, longest elements, and the canonical decomposition
///        w = w' . s_{n-1} ... s_{m'} with w' fixing n.
///
/// Conventions used throughout the library:
///  - A permutation of degree n maps {1..n} to itself; one_line()[i-1] = w(i).
///  - Composition is functional: (u*v)(x) = u(v(x)), so in a product the
///    right factor acts first.
///  - The simple transposition s_i (1 <= i <= n-1) swaps i and i+1.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "nilcox/errors.hpp"

namespace nilcox {

/// A permutation of {1..n} stored in one-line notation.
class Permutation {
public:
  /// The identity permutation of degree n.
  explicit Permutation(int n) : images_(static_cast<std::size_t>(n)) {
    if (n < 1) throw DomainError("permutation degree must be at least 1");
    std::iota(images_.begin(), images_.end(), 1);
  }

  /// Builds a permutation from its one-line notation, validating that the
  /// entries are a bijection of {1..n}.
  static Permutation from_one_line(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    if (n < 1) throw DomainError("one-line notation must be nonempty");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : images) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
        throw DomainError("one-line notation is not a bijection of {1..n}");
      seen[static_cast<std::size_t>(v - 1)] = true;
    }
    Permutation w(n);
    w.images_ = std::move(images);
    return w;
  }

  /// The simple transposition s_i inside S_n (swaps i and i+1).
  static Permutation simple(int n, int i) {
    if (i < 1 || i >= n) throw DomainError("simple transposition index out of range");
    Permutation w(n);
    std::swap(w.images_[static_cast<std::size_t>(i - 1)],
              w.images_[static_cast<std::size_t>(i)]);
    return w;
  }

  int degree() const { return static_cast<int>(images_.size()); }

  /// The image w(x), 1-based.
  int image(int x) const { return images_[static_cast<std::size_t>(x - 1)]; }

  const std::vector<int>& one_line() const { return images_; }

  bool is_identity() const {
    for (int i = 1; i <= degree(); ++i)
      if (image(i) != i) return false;
    return true;
  }

  /// True when w(x) = x.
  bool fixes(int x) const { return image(x) == x; }

  /// The 1-based position of value v in the one-line notation, i.e. w^{-1}(v).
  int position_of(int v) const {
    for (int i = 1; i <= degree(); ++i)
      if (image(i) == v) return i;
    throw DomainError("value not present in permutation");
  }

  /// Functional composition: (u*v)(x) = u(v(x)).
  Permutation operator*(const Permutation& v) const {
    if (degree() != v.degree()) throw DomainError("degree mismatch in composition");
    Permutation r(degree());
    for (int x = 1; x <= degree(); ++x)
      r.images_[static_cast<std::size_t>(x - 1)] = image(v.image(x));
    return r;
  }

  Permutation inverse() const {
    Permutation r(degree());
    for (int x = 1; x <= degree(); ++x)
      r.images_[static_cast<std::size_t>(image(x) - 1)] = x;
    return r;
  }

  bool operator==(const Permutation& rhs) const = default;

  /// Lexicographic order on one-line notation (used for basis ordering).
  bool operator<(const Permutation& rhs) const { return images_ < rhs.images_; }

  /// Coxeter length = inversion count.
  int length() const {
    int inv = 0;
    const int n = degree();
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (image(i) > image(j)) ++inv;
    return inv;
  }

  /// True when ell(s_i * w) > ell(w), i.e. the value i appears to the left
  /// of the value i+1 in one-line notation.
  bool left_ascent(int i) const {
    if (i < 1 || i >= degree()) throw DomainError("generator index out of range");
    return position_of(i) < position_of(i + 1);
  }

  /// s_i * w: swaps the values i and i+1 wherever they occur.
  Permutation swap_values(int i) const {
    if (i < 1 || i >= degree()) throw DomainError("generator index out of range");
    Permutation r = *this;
    const int pi = position_of(i), pj = position_of(i + 1);
    r.images_[static_cast<std::size_t>(pi - 1)] = i + 1;
    r.images_[static_cast<std::size_t>(pj - 1)] = i;
    return r;
  }

  /// w * s_i: swaps the entries at positions i and i+1.
  Permutation swap_positions(int i) const {
    if (i < 1 || i >= degree()) throw DomainError("generator index out of range");
    Permutation r = *this;
    std::swap(r.images_[static_cast<std::size_t>(i - 1)],
              r.images_[static_cast<std::size_t>(i)]);
    return r;
  }

  /// Renders one-line notation as "[3,1,2]".
  std::string to_string() const {
    std::string s = "[";
    for (int i = 1; i <= degree(); ++i) {
      if (i > 1) s += ",";
      s += std::to_string(image(i));
    }
    s += "]";
    return s;
  }

private:
  std::vector<int> images_;
};

/// The order-reversing permutation [n, n-1, ..., 1] of length n(n-1)/2.
inline Permutation longest_element(int n) {
  if (n < 1) throw DomainError("degree must be at least 1");
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = n - i;
  return Permutation::from_one_line(std::move(images));
}

/// The unique factorization w = prefix . s_{n-1} s_{n-2} ... s_{m'} where
/// prefix fixes n. m_prime = n encodes that w itself fixes n (empty tail).
struct CanonicalDecomposition {
  Permutation prefix;
  int m_prime;
};

/// Canonical decomposition of w of degree n. m' is the position of the value
/// n in one-line notation; the prefix deletes that entry and appends n, so it
/// always fixes n. Recomposing prefix . s_{n-1} ... s_{m'} reproduces w and
/// ell(w) = ell(prefix) + (n - m').
inline CanonicalDecomposition canonical_decompose(const Permutation& w) {
  const int n = w.degree();
  const int m_prime = w.position_of(n);
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    if (i != m_prime) images.push_back(w.image(i));
  images.push_back(n);
  return CanonicalDecomposition{Permutation::from_one_line(std::move(images)), m_prime};
}

/// Deterministic reduced word for w, obtained by iterating the canonical
/// decomposition: word(w) = word(prefix) ++ [level-1, level-2, ..., m'] with
/// the largest moved point peeled first. The letters multiply back to w
/// (rightmost letter applied first) and the word has exactly ell(w) letters.
inline std::vector<int> canonical_reduced_word(const Permutation& w) {
  std::vector<int> cur = w.one_line();
  std::vector<std::vector<int>> tails(static_cast<std::size_t>(w.degree()) + 1);
  for (int level = w.degree(); level >= 2; --level) {
    int pos = 0;
    for (int i = 0; i < level; ++i)
      if (cur[static_cast<std::size_t>(i)] == level) { pos = i + 1; break; }
    for (int letter = level - 1; letter >= pos; --letter)
      tails[static_cast<std::size_t>(level)].push_back(letter);
    cur.erase(cur.begin() + (pos - 1));
  }
  std::vector<int> word;
  for (int level = 2; level <= w.degree(); ++level)
    word.insert(word.end(), tails[static_cast<std::size_t>(level)].begin(),
                tails[static_cast<std::size_t>(level)].end());
  return word;
}

/// Multiplies a generator word back into a permutation of degree n.
/// Letters denote s_{i_1} s_{i_2} ... s_{i_l}; the rightmost acts first.
inline Permutation permutation_from_word(int n, const std::vector<int>& letters) {
  Permutation w(n);
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    w = w.swap_values(*it);
  return w;
}

/// All n! permutations of degree n in lexicographic one-line order.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

} // namespace nilcox
