#pragma once
/// @file coxeter_matrix.hpp
/// @brief Generalized Coxeter matrices: symmetric bond labels m_ij in
///        {2,3,...} or infinity off the diagonal, and an order vector
///        d_i >= 2 on the diagonal.
///
/// The algebra NC(M) attached to such a matrix is the free algebra on
/// generators T_i modulo the braid relations (alternating products of
/// length m_ij on both sides, omitted when m_ij is infinite) and the
/// nilpotence relations T_i^{d_i} = 0.

#include <limits>
#include <string>
#include <vector>

#include "nilcox/errors.hpp"

namespace nilcox {

/// Bond values are plain ints with a distinguished positive sentinel for
/// infinity, so comparisons like "m >= 4" transparently include the
/// infinite bond. The sentinel is never 0 or negative.
constexpr int kInfiniteBond = std::numeric_limits<int>::max();

inline bool bond_is_finite(int m) { return m != kInfiniteBond; }

/// A generalized Coxeter matrix on index set {1..size}.
class CoxeterMatrix {
public:
  explicit CoxeterMatrix(int size)
      : size_(size),
        bonds_(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), 2),
        orders_(static_cast<std::size_t>(size), 2) {
    if (size < 1) throw DomainError("matrix size must be at least 1");
    for (int i = 1; i <= size; ++i) bond_ref(i, i) = 1;
  }

  int size() const { return size_; }

  /// Off-diagonal bond label m_ij (2 when unset, kInfiniteBond for infinity).
  int bond(int i, int j) const {
    check_index(i);
    check_index(j);
    if (i == j) throw DomainError("bond requires two distinct indices");
    return bonds_[flat(i, j)];
  }

  /// Diagonal order d_i >= 2.
  int order(int i) const {
    check_index(i);
    return orders_[static_cast<std::size_t>(i - 1)];
  }

  /// Sets m_ij = m_ji = m. Accepts any integer or kInfiniteBond; validate()
  /// reports values below 2. set_bond_oneway exists so that JSON input can
  /// deliberately produce an asymmetric matrix for validate() to flag.
  void set_bond(int i, int j, int m) {
    set_bond_oneway(i, j, m);
    set_bond_oneway(j, i, m);
  }

  void set_bond_oneway(int i, int j, int m) {
    check_index(i);
    check_index(j);
    if (i == j) throw DomainError("bond requires two distinct indices");
    bond_ref(i, j) = m;
  }

  void set_order(int i, int d) {
    check_index(i);
    orders_[static_cast<std::size_t>(i - 1)] = d;
  }

  const std::vector<int>& orders() const { return orders_; }

  /// Checks all structural invariants and returns the list of violations
  /// (empty when the matrix is valid).
  std::vector<std::string> validate() const {
    std::vector<std::string> errors;
    for (int i = 1; i <= size_; ++i) {
      if (orders_[static_cast<std::size_t>(i - 1)] < 2)
        errors.push_back("order below 2 at index " + std::to_string(i));
    }
    for (int i = 1; i <= size_; ++i) {
      for (int j = i + 1; j <= size_; ++j) {
        const int mij = bonds_[flat(i, j)];
        const int mji = bonds_[flat(j, i)];
        if (mij != mji)
          errors.push_back("asymmetric at (" + std::to_string(i) + "," +
                           std::to_string(j) + ")");
        if (mij < 2 || mji < 2)
          errors.push_back("bond below 2 at (" + std::to_string(i) + "," +
                           std::to_string(j) + ")");
      }
    }
    return errors;
  }

  /// Throws DomainError when validate() reports anything.
  void require_valid() const {
    const auto errors = validate();
    if (!errors.empty()) {
      std::string msg = "invalid matrix:";
      for (const auto& e : errors) msg += " " + e + ";";
      throw DomainError(msg);
    }
  }

  /// Nodes j adjacent to i in the Coxeter graph (m_ij >= 3, including inf).
  std::vector<int> neighbors(int i) const {
    std::vector<int> out;
    for (int j = 1; j <= size_; ++j)
      if (j != i && bond(i, j) >= 3) out.push_back(j);
    return out;
  }

  int node_degree(int i) const { return static_cast<int>(neighbors(i).size()); }

  bool has_infinite_bond() const {
    for (int i = 1; i <= size_; ++i)
      for (int j = i + 1; j <= size_; ++j)
        if (bond(i, j) == kInfiniteBond) return true;
    return false;
  }

  /// Connected components of the Coxeter graph, each as a sorted list of
  /// 1-based node indices.
  std::vector<std::vector<int>> components() const {
    std::vector<int> comp(static_cast<std::size_t>(size_) + 1, 0);
    int next = 0;
    for (int start = 1; start <= size_; ++start) {
      if (comp[static_cast<std::size_t>(start)] != 0) continue;
      ++next;
      std::vector<int> stack{start};
      comp[static_cast<std::size_t>(start)] = next;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u : neighbors(v)) {
          if (comp[static_cast<std::size_t>(u)] == 0) {
            comp[static_cast<std::size_t>(u)] = next;
            stack.push_back(u);
          }
        }
      }
    }
    std::vector<std::vector<int>> out(static_cast<std::size_t>(next));
    for (int v = 1; v <= size_; ++v)
      out[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)] - 1)].push_back(v);
    return out;
  }

  bool is_connected() const { return components().size() == 1; }

  /// The submatrix induced by the given nodes; node k of the result
  /// corresponds to nodes[k-1] of this matrix.
  CoxeterMatrix submatrix(const std::vector<int>& nodes) const {
    CoxeterMatrix sub(static_cast<int>(nodes.size()));
    for (std::size_t a = 0; a < nodes.size(); ++a) {
      sub.set_order(static_cast<int>(a) + 1, order(nodes[a]));
      for (std::size_t b = a + 1; b < nodes.size(); ++b)
        sub.set_bond(static_cast<int>(a) + 1, static_cast<int>(b) + 1,
                     bond(nodes[a], nodes[b]));
    }
    return sub;
  }

  bool operator==(const CoxeterMatrix& rhs) const = default;

  /// The matrix of NC_A(n,d): a path with all bonds 3 and orders
  /// (2, ..., 2, d), the marked node last.
  static CoxeterMatrix nc_a(int n, int d) {
    if (n < 1 || d < 2) throw DomainError("nc_a requires n >= 1 and d >= 2");
    CoxeterMatrix M(n);
    for (int i = 1; i < n; ++i) M.set_bond(i, i + 1, 3);
    M.set_order(n, d);
    return M;
  }

private:
  std::size_t flat(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(size_) +
           static_cast<std::size_t>(j - 1);
  }
  int& bond_ref(int i, int j) { return bonds_[flat(i, j)]; }
  void check_index(int i) const {
    if (i < 1 || i > size_) throw DomainError("node index out of range");
  }

  int size_;
  std::vector<int> bonds_;
  std::vector<int> orders_;
};

} // namespace nilcox
