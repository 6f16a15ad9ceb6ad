#pragma once
/// @file oracle.hpp
/// @brief Independent brute-force verifier for NC(M) as a free-algebra
///        quotient: exact graded dimensions and a bounded rewriting search
///        for word equality.
///
/// This module never consults the basis engine; independence is the point.
/// The degree-t component of NC(M) is the span of the N^t words of length t
/// modulo the padded relation rows u*r*v. Every row is either a difference
/// of two words (a padded braid relation) or a single word (a padded
/// nilpotence monomial), so exact elimination specializes to a union-find
/// over word codes carrying field-valued potentials: a difference row links
/// two codes with factor 1, a monomial row kills a class. The computation
/// runs over two coefficient fields and the results must agree.

#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "nilcox/coxeter_matrix.hpp"
#include "nilcox/errors.hpp"

namespace nilcox {

/// Hard cap on the number of words handled per degree.
constexpr long long kOracleWordBudget = 5'000'000;

namespace oracle_detail {

struct RationalField {
  using Element = mpq_class;
  static Element one() { return Element(1); }
  static Element mul(const Element& a, const Element& b) { return a * b; }
  static Element div(const Element& a, const Element& b) { return a / b; }
  static bool eq(const Element& a, const Element& b) { return a == b; }
};

struct PrimeField {
  static constexpr int p = 32003;
  using Element = int;
  static Element one() { return 1; }
  static Element mul(Element a, Element b) {
    return static_cast<Element>((static_cast<std::int64_t>(a) * b) % p);
  }
  static Element div(Element a, Element b) {
    Element inv = 1;
    Element base = b;
    int e = p - 2;
    while (e > 0) {
      if (e & 1) inv = mul(inv, base);
      base = mul(base, base);
      e >>= 1;
    }
    return mul(a, inv);
  }
  static bool eq(Element a, Element b) { return a == b; }
};

/// Union-find on word codes where each node stores its value as a field
/// multiple of its root's value. A difference row x_a - x_b merges classes;
/// an inconsistent merge or a monomial row forces the class value to zero.
template <class Field>
class PotentialUnionFind {
  using Element = typename Field::Element;

public:
  explicit PotentialUnionFind(std::size_t count)
      : parent_(count), size_(count, 1), zero_(count, 0),
        potential_(count, Field::one()) {
    for (std::size_t i = 0; i < count; ++i)
      parent_[i] = static_cast<std::int32_t>(i);
  }

  void relate_equal(std::int64_t a, std::int64_t b) {
    const auto [ra, pa] = find(a);
    const auto [rb, pb] = find(b);
    if (ra == rb) {
      if (!Field::eq(pa, pb)) zero_[static_cast<std::size_t>(ra)] = 1;
      return;
    }
    if (size_[static_cast<std::size_t>(ra)] < size_[static_cast<std::size_t>(rb)])
      attach(ra, rb, Field::div(pb, pa));
    else
      attach(rb, ra, Field::div(pa, pb));
  }

  void mark_zero(std::int64_t a) {
    const auto [root, p] = find(a);
    (void)p;
    zero_[static_cast<std::size_t>(root)] = 1;
  }

  /// Number of classes whose value is not forced to zero.
  long long alive_classes() {
    long long alive = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i)
      if (parent_[i] == static_cast<std::int32_t>(i) && !zero_[i]) ++alive;
    return alive;
  }

private:
  std::pair<std::int32_t, Element> find(std::int64_t start) {
    std::int32_t x = static_cast<std::int32_t>(start);
    path_.clear();
    while (parent_[static_cast<std::size_t>(x)] != x) {
      path_.push_back(x);
      x = parent_[static_cast<std::size_t>(x)];
    }
    for (auto it = path_.rbegin(); it != path_.rend(); ++it) {
      const std::size_t v = static_cast<std::size_t>(*it);
      const std::size_t pv = static_cast<std::size_t>(parent_[v]);
      if (parent_[v] != x) {
        potential_[v] = Field::mul(potential_[v], potential_[pv]);
        parent_[v] = x;
      }
    }
    const std::size_t s = static_cast<std::size_t>(start);
    if (static_cast<std::int32_t>(start) == x) return {x, Field::one()};
    return {x, potential_[s]};
  }

  void attach(std::int32_t child, std::int32_t root, Element q) {
    parent_[static_cast<std::size_t>(child)] = root;
    potential_[static_cast<std::size_t>(child)] = q;
    size_[static_cast<std::size_t>(root)] +=
        size_[static_cast<std::size_t>(child)];
    if (zero_[static_cast<std::size_t>(child)])
      zero_[static_cast<std::size_t>(root)] = 1;
  }

  std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> size_;
  std::vector<std::uint8_t> zero_;
  std::vector<Element> potential_;
  std::vector<std::int32_t> path_;
};

struct DifferenceRelation {
  std::vector<int> lhs;
  std::vector<int> rhs;
};

/// Braid differences for every finite bond (m = 2 gives the commutation
/// T_i T_j - T_j T_i) and nilpotence monomials g^{d_g}. Infinite bonds
/// contribute nothing.
inline void presentation_relations(const CoxeterMatrix& M,
                                   std::vector<DifferenceRelation>& diffs,
                                   std::vector<std::vector<int>>& monomials) {
  diffs.clear();
  monomials.clear();
  for (int i = 1; i <= M.size(); ++i) {
    for (int j = i + 1; j <= M.size(); ++j) {
      const int m = M.bond(i, j);
      if (m == kInfiniteBond) continue;
      DifferenceRelation rel;
      for (int t = 0; t < m; ++t) {
        rel.lhs.push_back(t % 2 == 0 ? i : j);
        rel.rhs.push_back(t % 2 == 0 ? j : i);
      }
      diffs.push_back(std::move(rel));
    }
  }
  for (int g = 1; g <= M.size(); ++g)
    monomials.push_back(
        std::vector<int>(static_cast<std::size_t>(M.order(g)), g));
}

inline std::int64_t word_code(const std::vector<int>& word, int n) {
  std::int64_t code = 0;
  for (int letter : word) code = code * n + (letter - 1);
  return code;
}

inline std::int64_t checked_power(int n, int degree) {
  std::int64_t out = 1;
  for (int t = 0; t < degree; ++t) {
    out *= n;
    if (out > kOracleWordBudget)
      throw ResourceError("word count exceeds the oracle budget of " +
                          std::to_string(kOracleWordBudget));
  }
  return out;
}

template <class Field>
long long graded_dimension_over(const CoxeterMatrix& M, int degree) {
  const int n = M.size();
  const std::int64_t total = checked_power(n, degree);
  PotentialUnionFind<Field> uf(static_cast<std::size_t>(total));

  std::vector<DifferenceRelation> diffs;
  std::vector<std::vector<int>> monomials;
  presentation_relations(M, diffs, monomials);

  for (const auto& rel : diffs) {
    const int len = static_cast<int>(rel.lhs.size());
    if (len > degree) continue;
    const std::int64_t lhs_code = word_code(rel.lhs, n);
    const std::int64_t rhs_code = word_code(rel.rhs, n);
    const std::int64_t mid_scale = checked_power(n, len);
    for (int a = 0; a + len <= degree; ++a) {
      const int b = degree - len - a;
      const std::int64_t left_count = checked_power(n, a);
      const std::int64_t right_count = checked_power(n, b);
      for (std::int64_t cu = 0; cu < left_count; ++cu) {
        const std::int64_t base_l = (cu * mid_scale + lhs_code) * right_count;
        const std::int64_t base_r = (cu * mid_scale + rhs_code) * right_count;
        for (std::int64_t cv = 0; cv < right_count; ++cv)
          uf.relate_equal(base_l + cv, base_r + cv);
      }
    }
  }

  for (const auto& mono : monomials) {
    const int len = static_cast<int>(mono.size());
    if (len > degree) continue;
    const std::int64_t mono_code = word_code(mono, n);
    const std::int64_t mid_scale = checked_power(n, len);
    for (int a = 0; a + len <= degree; ++a) {
      const int b = degree - len - a;
      const std::int64_t left_count = checked_power(n, a);
      const std::int64_t right_count = checked_power(n, b);
      for (std::int64_t cu = 0; cu < left_count; ++cu) {
        const std::int64_t base = (cu * mid_scale + mono_code) * right_count;
        for (std::int64_t cv = 0; cv < right_count; ++cv)
          uf.mark_zero(base + cv);
      }
    }
  }

  return uf.alive_classes();
}

} // namespace oracle_detail

/// Dimension of the degree component of NC(M), computed independently over
/// the rationals and over F_32003; the two counts must agree.
inline long long graded_dimension(const CoxeterMatrix& M, int degree) {
  if (degree < 0) throw DomainError("degree must be non-negative");
  M.require_valid();
  const long long over_q =
      oracle_detail::graded_dimension_over<oracle_detail::RationalField>(M, degree);
  const long long over_p =
      oracle_detail::graded_dimension_over<oracle_detail::PrimeField>(M, degree);
  if (over_q != over_p)
    throw ResourceError("field disagreement in rank computation");
  return over_q;
}

/// Per-degree dimensions of NC(M) up to max_degree.
struct GradedQuotientReport {
  int max_degree = 0;
  std::vector<long long> graded_dims;
  /// True when the last computed level is nonzero, so dimensions may keep
  /// growing past max_degree.
  bool truncated = false;
};

/// Computes graded dimensions degree by degree, stopping early at the first
/// zero level (all higher levels vanish since the algebra is generated in
/// degree one).
inline GradedQuotientReport graded_quotient_report(const CoxeterMatrix& M,
                                                   int max_degree) {
  if (max_degree < 0) throw DomainError("max_degree must be non-negative");
  GradedQuotientReport report;
  report.max_degree = max_degree;
  for (int t = 0; t <= max_degree; ++t) {
    const long long dim = graded_dimension(M, t);
    report.graded_dims.push_back(dim);
    if (dim == 0) break;
  }
  report.truncated = report.graded_dims.back() != 0;
  return report;
}

/// Sum of all graded dimensions when a zero level is reached within
/// max_degree; nullopt when the dimensions are still growing.
inline std::optional<long long> total_dimension_if_finite(
    const CoxeterMatrix& M, int max_degree) {
  const GradedQuotientReport report = graded_quotient_report(M, max_degree);
  if (report.truncated) return std::nullopt;
  long long total = 0;
  for (long long d : report.graded_dims) total += d;
  return total;
}

enum class WordComparison { Equal, Unequal, Inconclusive };

inline std::string to_string(WordComparison c) {
  switch (c) {
    case WordComparison::Equal: return "equal";
    case WordComparison::Unequal: return "unequal";
    case WordComparison::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace oracle_detail {

inline bool contains_nilpotent_run(const CoxeterMatrix& M,
                                   const std::vector<int>& word) {
  int run = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    run = (i > 0 && word[i] == word[i - 1]) ? run + 1 : 1;
    if (run >= M.order(word[i])) return true;
  }
  return false;
}

struct Closure {
  std::set<std::vector<int>> visited;
  bool exhausted = false;
  /// True once any reachable word contains a nilpotent run; definitive even
  /// when the search is cut short.
  bool zero = false;
};

/// Breadth-first closure of the word under braid rewrites (any finite bond,
/// including m = 2 commutations). The bound caps the number of expanded
/// words; `exhausted` reports a complete closure.
inline Closure braid_closure(const CoxeterMatrix& M,
                             const std::vector<int>& word, int bound) {
  Closure out;
  if (contains_nilpotent_run(M, word)) {
    out.zero = true;
    return out;
  }
  out.visited.insert(word);
  std::deque<std::vector<int>> queue{word};
  int expansions = 0;
  while (!queue.empty()) {
    if (expansions >= bound) return out;
    const std::vector<int> cur = queue.front();
    queue.pop_front();
    ++expansions;
    for (std::size_t p = 0; p < cur.size(); ++p) {
      const int a = cur[p];
      for (int b = 1; b <= M.size(); ++b) {
        if (b == a) continue;
        const int m = M.bond(a, b);
        if (m == kInfiniteBond) continue;
        if (p + static_cast<std::size_t>(m) > cur.size()) continue;
        bool alternating = true;
        for (int t = 0; t < m; ++t) {
          if (cur[p + static_cast<std::size_t>(t)] != (t % 2 == 0 ? a : b)) {
            alternating = false;
            break;
          }
        }
        if (!alternating) continue;
        std::vector<int> next = cur;
        for (int t = 0; t < m; ++t)
          next[p + static_cast<std::size_t>(t)] = (t % 2 == 0 ? b : a);
        if (contains_nilpotent_run(M, next)) {
          out.zero = true;
          return out;
        }
        if (out.visited.insert(next).second) queue.push_back(next);
      }
    }
  }
  out.exhausted = true;
  return out;
}

inline bool closures_intersect(const Closure& x, const Closure& y) {
  const Closure& small = x.visited.size() <= y.visited.size() ? x : y;
  const Closure& large = x.visited.size() <= y.visited.size() ? y : x;
  for (const auto& w : small.visited)
    if (large.visited.count(w)) return true;
  return false;
}

} // namespace oracle_detail

/// Bounded semi-decision of whether the word is zero in NC(M): "equal"
/// means equal to the zero element.
inline WordComparison word_is_zero(const CoxeterMatrix& M,
                                   const std::vector<int>& word,
                                   int search_bound) {
  M.require_valid();
  for (int l : word)
    if (l < 1 || l > M.size()) throw DomainError("letter out of range");
  const auto closure = oracle_detail::braid_closure(M, word, search_bound);
  if (closure.zero) return WordComparison::Equal;
  if (closure.exhausted) return WordComparison::Unequal;
  return WordComparison::Inconclusive;
}

/// Bounded semi-decision of word equality in NC(M). Equality is certified
/// by intersecting rewrite closures or by both words reaching zero;
/// inequality requires both closures to be exhausted within the bound.
inline WordComparison words_equal(const CoxeterMatrix& M,
                                  const std::vector<int>& u,
                                  const std::vector<int>& v,
                                  int search_bound) {
  M.require_valid();
  for (int l : u)
    if (l < 1 || l > M.size()) throw DomainError("letter out of range");
  for (int l : v)
    if (l < 1 || l > M.size()) throw DomainError("letter out of range");
  if (u == v) return WordComparison::Equal;

  const auto cu = oracle_detail::braid_closure(M, u, search_bound);
  const auto cv = oracle_detail::braid_closure(M, v, search_bound);
  if (cu.zero && cv.zero) return WordComparison::Equal;
  if (cu.zero) {
    if (cv.exhausted) return WordComparison::Unequal;
    return WordComparison::Inconclusive;
  }
  if (cv.zero) {
    if (cu.exhausted) return WordComparison::Unequal;
    return WordComparison::Inconclusive;
  }
  if (oracle_detail::closures_intersect(cu, cv)) return WordComparison::Equal;
  if (cu.exhausted && cv.exhausted) return WordComparison::Unequal;
  return WordComparison::Inconclusive;
}

} // namespace nilcox
