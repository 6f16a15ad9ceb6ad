/// @file acceptance.cpp
/// @brief End-to-end acceptance gate; prints one pass/fail line per criterion.

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nilcox/classifier.hpp"
#include "nilcox/errors.hpp"
#include "nilcox/matrix_io.hpp"
#include "nilcox/nca_algebra.hpp"
#include "nilcox/oracle.hpp"
#include "nilcox/witness.hpp"
#include "support/exact_kernel.hpp"

using namespace nilcox;

namespace {

int failures = 0;

void run(int number, const std::string& text,
         const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  const auto start = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start)
          .count();
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": "
            << text;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << " [" << elapsed / 1000.0 << "s]" << std::endl;
  if (!ok) ++failures;
}

AlgebraElement apply_word(const NcaContext& ctx, const std::vector<int>& word,
                          const AlgebraElement& x) {
  AlgebraElement cur = x;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    cur = act_generator(*it, cur);
  (void)ctx;
  return cur;
}

/// Odometer over all words of the given length on letters 1..n.
bool next_word(std::vector<int>& word, int n) {
  for (std::size_t i = word.size(); i-- > 0;) {
    if (word[i] < n) {
      ++word[i];
      return true;
    }
    word[i] = 1;
  }
  return false;
}

const std::vector<std::pair<int, int>> kDimensionPairs{
    {1, 2}, {1, 3}, {1, 5}, {2, 2}, {2, 3},
    {2, 4}, {3, 2}, {3, 3}, {4, 2}};

/// Coordinates of x in the listed basis.
std::vector<mpq_class> coordinates(const std::vector<BasisWord>& words,
                                   const std::map<BasisWord, int>& index,
                                   const AlgebraElement& x) {
  std::vector<mpq_class> out(words.size(), 0);
  for (const auto& [b, c] : x.terms())
    out[static_cast<std::size_t>(index.at(b))] = mpq_class(c);
  return out;
}

/// Rows of the stacked operator "apply every map in `maps` to each basis
/// word"; the common kernel of the maps is the kernel of the stack.
std::vector<std::vector<mpq_class>> stacked_action_matrix(
    const std::vector<BasisWord>& words, const std::map<BasisWord, int>& index,
    const std::vector<std::function<AlgebraElement(const BasisWord&)>>& maps) {
  std::vector<std::vector<mpq_class>> rows(
      maps.size() * words.size(), std::vector<mpq_class>(words.size(), 0));
  for (std::size_t j = 0; j < words.size(); ++j) {
    for (std::size_t a = 0; a < maps.size(); ++a) {
      const auto image = coordinates(words, index, maps[a](words[j]));
      for (std::size_t i = 0; i < words.size(); ++i)
        rows[a * words.size() + i][j] = image[i];
    }
  }
  return rows;
}

struct KernelSetup {
  std::vector<BasisWord> words;
  std::map<BasisWord, int> index;
  std::vector<std::vector<mpq_class>> left_rows;
  std::vector<std::vector<mpq_class>> two_sided_rows;
};

KernelSetup kernel_setup(int n, int d) {
  const NcaContext ctx(n, d);
  KernelSetup setup;
  setup.words = basis(n, d);
  for (std::size_t j = 0; j < setup.words.size(); ++j)
    setup.index.emplace(setup.words[j], static_cast<int>(j));

  std::vector<std::function<AlgebraElement(const BasisWord&)>> left, both;
  for (int g = 1; g <= n; ++g) {
    left.push_back([g](const BasisWord& b) { return act_generator(g, b); });
    both.push_back([g](const BasisWord& b) { return act_generator(g, b); });
    both.push_back([g, ctx](const BasisWord& b) {
      return multiply(AlgebraElement::from_word(b),
                      normal_form(ctx, std::vector<int>{g}));
    });
  }
  setup.left_rows = stacked_action_matrix(setup.words, setup.index, left);
  setup.two_sided_rows = stacked_action_matrix(setup.words, setup.index, both);
  return setup;
}

/// Lexicographically smallest (bonds, orders) encoding over all node
/// relabelings; oracle outputs are relabeling-invariant, so this key lets
/// the sweep share one computation per isomorphism class.
std::vector<int> canonical_key(const CoxeterMatrix& M) {
  const int n = M.size();
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
  std::vector<int> best;
  do {
    std::vector<int> key;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        key.push_back(M.bond(perm[static_cast<std::size_t>(i)],
                             perm[static_cast<std::size_t>(j)]));
    for (int i = 0; i < n; ++i)
      key.push_back(M.order(perm[static_cast<std::size_t>(i)]));
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<CoxeterMatrix> sweep_instances() {
  const std::vector<int> order_values{2, 3, 4};
  const std::vector<int> bond_values{2, 3, 4, kInfiniteBond};
  std::vector<CoxeterMatrix> out;

  for (int d : order_values) {
    CoxeterMatrix M(1);
    M.set_order(1, d);
    out.push_back(M);
  }

  for (int bond : {3, 4, kInfiniteBond})
    for (int d1 : order_values)
      for (int d2 : order_values) {
        CoxeterMatrix M(2);
        M.set_bond(1, 2, bond);
        M.set_order(1, d1);
        M.set_order(2, d2);
        out.push_back(M);
      }

  for (int b12 : bond_values)
    for (int b13 : bond_values)
      for (int b23 : bond_values) {
        const int edges = (b12 > 2) + (b13 > 2) + (b23 > 2);
        if (edges <= 1) continue; // not connected on three nodes
        for (int d1 : order_values)
          for (int d2 : order_values)
            for (int d3 : order_values) {
              CoxeterMatrix M(3);
              M.set_bond(1, 2, b12);
              M.set_bond(1, 3, b13);
              M.set_bond(2, 3, b23);
              M.set_order(1, d1);
              M.set_order(2, d2);
              M.set_order(3, d3);
              out.push_back(M);
            }
      }
  return out;
}

bool criterion_dimension_formula(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  for (const auto& [n, d] : kDimensionPairs) {
    const NcaContext ctx(n, d);
    const int max_degree = ctx.longest_word_length() + 1;
    const auto total =
        total_dimension_if_finite(CoxeterMatrix::nc_a(n, d), max_degree);
    if (!total) {
      detail = "no zero level at (" + std::to_string(n) + "," +
               std::to_string(d) + ")";
      return false;
    }
    if (mpz_class(static_cast<long>(*total)) != dimension(n, d)) {
      detail = "total mismatch at (" + std::to_string(n) + "," +
               std::to_string(d) + ")";
      return false;
    }
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  if (elapsed >= 60) {
    detail = "over the 60s budget";
    return false;
  }
  return true;
}

bool criterion_hilbert_series(std::string& detail) {
  for (const auto& [n, d] : kDimensionPairs) {
    const NcaContext ctx(n, d);
    const auto report = graded_quotient_report(CoxeterMatrix::nc_a(n, d),
                                               ctx.longest_word_length());
    const auto poly = hilbert(n, d);
    if (static_cast<int>(report.graded_dims.size()) != poly.degree() + 1) {
      detail = "degree mismatch at (" + std::to_string(n) + "," +
               std::to_string(d) + ")";
      return false;
    }
    for (std::size_t t = 0; t < report.graded_dims.size(); ++t) {
      if (mpz_class(static_cast<long>(report.graded_dims[t])) !=
          poly.coefficients[t]) {
        detail = "coefficient mismatch at (" + std::to_string(n) + "," +
                 std::to_string(d) + ") degree " + std::to_string(t);
        return false;
      }
    }
  }
  return true;
}

bool criterion_relations(std::string& detail) {
  for (int n = 1; n <= 4; ++n)
    for (int d = 2; d <= 4; ++d) {
      const NcaContext ctx(n, d);
      std::vector<std::pair<std::vector<int>, std::vector<int>>> relations;
      for (int i = 1; i < n; ++i)
        relations.push_back({{i, i}, {}});
      relations.push_back(
          {std::vector<int>(static_cast<std::size_t>(d), n), {}});
      for (int i = 1; i + 1 <= n; ++i)
        relations.push_back({{i, i + 1, i}, {i + 1, i, i + 1}});
      for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j)
          relations.push_back({{i, j}, {j, i}});

      for (const auto& b : basis(n, d)) {
        const auto x = AlgebraElement::from_word(b);
        for (const auto& [lhs, rhs] : relations) {
          const auto left = apply_word(ctx, lhs, x);
          const auto right = rhs.empty() ? AlgebraElement::zero(ctx)
                                         : apply_word(ctx, rhs, x);
          if (!(left == right)) {
            detail = "failure at (" + std::to_string(n) + "," +
                     std::to_string(d) + ") on " + b.to_string();
            return false;
          }
        }
      }
    }
  return true;
}

bool criterion_nilpotency_degree(std::string& detail) {
  for (int n = 1; n <= 3; ++n)
    for (int d = 2; d <= 4; ++d) {
      const NcaContext ctx(n, d);
      const int top = ctx.longest_word_length();
      std::vector<int> word(static_cast<std::size_t>(top + 1), 1);
      do {
        if (!normal_form(ctx, word).is_zero()) {
          detail = "nonzero product of " + std::to_string(top + 1) +
                   " generators at (" + std::to_string(n) + "," +
                   std::to_string(d) + ")";
          return false;
        }
      } while (next_word(word, n));

      const auto longest = basis(n, d).back();
      if (longest.word_length() != top ||
          normal_form(ctx, longest.expand()).is_zero()) {
        detail = "longest word failure at (" + std::to_string(n) + "," +
                 std::to_string(d) + ")";
        return false;
      }
    }
  return true;
}

bool criterion_primitive_ranks(std::string& detail) {
  for (const auto& [n, d] :
       std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {3, 3}}) {
    const auto setup = kernel_setup(n, d);
    const long long left_rank =
        testsupport::kernel_dimension(setup.left_rows);
    const long long two_sided_rank =
        testsupport::kernel_dimension(setup.two_sided_rows);
    if (left_rank != 1 + n * (d - 2) || two_sided_rank != d - 1) {
      detail = "rank mismatch at (" + std::to_string(n) + "," +
               std::to_string(d) + "): left " + std::to_string(left_rank) +
               ", two-sided " + std::to_string(two_sided_rank);
      return false;
    }
    for (const auto& b : left_primitives(n, d)) {
      std::vector<mpq_class> v(setup.words.size(), 0);
      v[static_cast<std::size_t>(setup.index.at(b))] = 1;
      if (!testsupport::in_kernel(setup.left_rows, v)) {
        detail = "listed left primitive " + b.to_string() + " not in kernel";
        return false;
      }
    }
    for (const auto& b : two_sided_primitives(n, d)) {
      std::vector<mpq_class> v(setup.words.size(), 0);
      v[static_cast<std::size_t>(setup.index.at(b))] = 1;
      if (!testsupport::in_kernel(setup.two_sided_rows, v)) {
        detail = "listed two-sided primitive " + b.to_string() +
                 " not in kernel";
        return false;
      }
    }
  }
  return true;
}

bool criterion_frobenius(std::string& detail) {
  for (int n = 1; n <= 3; ++n)
    for (int d = 2; d <= 4; ++d) {
      const auto setup = kernel_setup(n, d);
      const long long two_sided_rank =
          testsupport::kernel_dimension(setup.two_sided_rows);
      if ((two_sided_rank == 1) != is_frobenius(n, d)) {
        detail = "predicate mismatch at (" + std::to_string(n) + "," +
                 std::to_string(d) + "): rank " +
                 std::to_string(two_sided_rank);
        return false;
      }
    }
  return true;
}

bool criterion_khovanov(std::string& detail) {
  for (int n = 1; n <= 4; ++n)
    for (int d = 2; d <= 4; ++d) {
      const auto report = khovanov_decomposition_check(n, d);
      if (!report.ok()) {
        detail = "decomposition failure at (" + std::to_string(n) + "," +
                 std::to_string(d) + ")";
        return false;
      }
    }
  return true;
}

bool criterion_classifier_sweep(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  const auto instances = sweep_instances();
  if (instances.size() != 1488) {
    detail = "expected 1488 instances, got " +
             std::to_string(instances.size());
    return false;
  }

  std::map<std::vector<int>, std::optional<long long>> finite_cache;
  std::map<std::vector<int>, std::vector<long long>> graded_cache;
  long long finite_count = 0, infinite_count = 0;

  for (const auto& M : instances) {
    const auto res = classify(M);
    const auto key = canonical_key(M);
    if (res.finite) {
      ++finite_count;
      auto it = finite_cache.find(key);
      if (it == finite_cache.end())
        it = finite_cache.emplace(key, total_dimension_if_finite(M, 12)).first;
      if (!it->second ||
          mpz_class(static_cast<long>(*it->second)) != res.dimension) {
        detail = "finite dimension mismatch, key instance " +
                 matrix_to_json(M).dump();
        return false;
      }
    } else {
      ++infinite_count;
      auto it = graded_cache.find(key);
      if (it == graded_cache.end()) {
        std::vector<long long> dims;
        for (int t = 1; t <= 10; ++t) dims.push_back(graded_dimension(M, t));
        it = graded_cache.emplace(key, std::move(dims)).first;
      }
      for (long long dim : it->second)
        if (dim <= 0) {
          detail = "graded dimension vanished on infinite instance " +
                   matrix_to_json(M).dump();
          return false;
        }
      if (!res.witness_recipe) {
        detail = "infinite verdict without witness on " +
                 matrix_to_json(M).dump();
        return false;
      }
      WitnessModule module(*res.witness_recipe, 16);
      if (!verify_witness(M, module).ok()) {
        detail = "witness failed to verify on " + matrix_to_json(M).dump();
        return false;
      }
    }
  }

  const auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  std::ostringstream note;
  note << finite_count << " finite, " << infinite_count << " infinite, "
       << graded_cache.size() + finite_cache.size() << " oracle classes";
  detail = note.str();
  if (elapsed >= 600) {
    detail += "; over the 600s budget";
    return false;
  }
  return true;
}

bool criterion_group_order(std::string& detail) {
  const auto c23 = group_order_comparison(2, 3);
  const auto c24 = group_order_comparison(2, 4);
  if (c23.algebra_dimension != 10 || c23.group_order != 1 ||
      c24.algebra_dimension != 14 || c24.group_order != 6) {
    detail = "frozen values mismatch";
    return false;
  }
  for (int n = 1; n <= 5; ++n)
    for (int d = 3; d <= 8; ++d) {
      const auto c = group_order_comparison(n, d);
      if (!(c.algebra_dimension > c.group_order)) {
        detail = "inequality fails at (" + std::to_string(n) + "," +
                 std::to_string(d) + ")";
        return false;
      }
    }
  bool threw = false;
  try {
    group_order_comparison(2, 2);
  } catch (const DomainError&) {
    threw = true;
  }
  if (!threw) {
    detail = "d = 2 accepted";
    return false;
  }
  return true;
}

bool criterion_property_suites(std::string& detail) {
  const std::vector<std::pair<int, int>> contexts{
      {2, 3}, {2, 4}, {3, 2}, {3, 3}};
  for (const auto& [n, d] : contexts) {
    const NcaContext ctx(n, d);
    const auto words = basis(n, d);
    std::mt19937 rng(20260817u + static_cast<unsigned>(100 * n + d));
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    auto random_element = [&]() {
      AlgebraElement out(ctx);
      for (int t = 0; t < 3; ++t)
        out.add_term(words[pick(rng)], coeff(rng));
      return out;
    };

    for (int trial = 0; trial < 1000; ++trial) {
      const auto x = random_element();
      const auto y = random_element();
      const auto z = random_element();
      if (!(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)))) {
        detail = "associativity failure at (" + std::to_string(n) + "," +
                 std::to_string(d) + ") trial " + std::to_string(trial);
        return false;
      }
    }
    for (int trial = 0; trial < 1000; ++trial) {
      const auto x = random_element();
      const auto y = random_element();
      if (!(theta(multiply(x, y)) == multiply(theta(y), theta(x)))) {
        detail = "anti-homomorphism failure at (" + std::to_string(n) + "," +
                 std::to_string(d) + ")";
        return false;
      }
      if (!(theta(theta(x)) == x)) {
        detail = "involution failure at (" + std::to_string(n) + "," +
                 std::to_string(d) + ")";
        return false;
      }
    }
  }

  for (const auto& [n, d] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}}) {
    const NcaContext ctx(n, d);
    for (int len = 1; len <= 8; ++len) {
      std::vector<int> word(static_cast<std::size_t>(len), 1);
      do {
        const auto nf = normal_form(ctx, word);
        if (nf.is_zero()) continue;
        const auto* single = nf.single_word();
        if (single == nullptr || single->word_length() != len) {
          detail = "length not preserved at (" + std::to_string(n) + "," +
                   std::to_string(d) + ")";
          return false;
        }
      } while (next_word(word, n));
    }
  }
  return true;
}

} // namespace

int main() {
  run(1, "quotient totals match the closed-form dimension on 9 contexts",
      criterion_dimension_formula);
  run(2, "graded dimensions match the Hilbert polynomial on 9 contexts",
      criterion_hilbert_series);
  run(3, "defining relations hold as operators on the full basis (n<=4, d<=4)",
      criterion_relations);
  run(4, "products past the top length vanish and the longest word survives "
         "(n<=3, d<=4)",
      criterion_nilpotency_degree);
  run(5, "exact kernels give left rank 1+n(d-2) and two-sided rank d-1 with "
         "the listed words inside",
      criterion_primitive_ranks);
  run(6, "Frobenius predicate equals two-sided rank one (n<=3, d<=4)",
      criterion_frobenius);
  run(7, "bimodule decomposition ranks reconcile with the dimension "
         "(n<=4, d<=4)",
      criterion_khovanov);
  run(8, "classifier sweep over 1488 connected diagrams agrees with the "
         "quotient oracle and all witnesses verify at depth 16",
      criterion_classifier_sweep);
  run(9, "group order comparison returns (10,1) and (14,6) with strict "
         "inequality for d>2, n<=5",
      criterion_group_order);
  run(10, "associativity, reversal, and length preservation suites",
      criterion_property_suites);

  if (failures > 0) {
    std::cout << failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all criteria passed" << std::endl;
  return 0;
}
