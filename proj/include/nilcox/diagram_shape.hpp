#pragma once
/// @file diagram_shape.hpp
/// @brief Recognition of Coxeter graphs: connectivity, pendant nodes, and
///        membership in the classification of finite Coxeter diagrams
///        (A, B/C, D, E6..E8, F4, G2, H3, H4, I2(m)).
///
/// Only the off-diagonal bonds matter here; the diagonal orders d_i play no
/// role in the shape of the graph. B and C are identified since they share
/// a diagram.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "nilcox/coxeter_matrix.hpp"

namespace nilcox {

enum class ShapeKind {
  TypeAPath,          ///< connected simple path, all bonds 3 (includes a single node)
  OtherFiniteCoxeter, ///< every component finite type, but not a single type-A path
  NotFiniteCoxeter,
};

inline std::string to_string(ShapeKind k) {
  switch (k) {
    case ShapeKind::TypeAPath: return "TypeA-path";
    case ShapeKind::OtherFiniteCoxeter: return "other-finite-Coxeter";
    case ShapeKind::NotFiniteCoxeter: return "not-finite-Coxeter";
  }
  return "not-finite-Coxeter";
}

/// Shape report for a generalized Coxeter matrix.
struct DiagramShape {
  ShapeKind kind = ShapeKind::NotFiniteCoxeter;
  /// Finite-type name, e.g. "A_3", "B_2 x A_1", "I_2(7)"; empty when the
  /// diagram is not of finite type.
  std::string coxeter_type;
  /// Nodes with exactly one neighbor (bond >= 3), ascending.
  std::vector<int> pendant_nodes;
  int component_count = 0;
};

/// Name and group order of one finite-type component.
struct FiniteTypeInfo {
  std::string name;
  mpz_class group_order;
};

inline mpz_class mpz_factorial(int k) {
  mpz_class out = 1;
  for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

inline mpz_class mpz_power_of_two(int k) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(k));
  return out;
}

/// If the induced graph on `nodes` (assumed connected) is a simple path,
/// returns the nodes in path order; a single node yields itself. Otherwise
/// nullopt.
inline std::optional<std::vector<int>> path_nodes_in_order(
    const CoxeterMatrix& M, const std::vector<int>& nodes) {
  if (nodes.size() == 1) return std::vector<int>{nodes[0]};
  std::vector<int> endpoints;
  for (int v : nodes) {
    const int deg = M.node_degree(v);
    if (deg > 2) return std::nullopt;
    if (deg == 1) endpoints.push_back(v);
  }
  if (endpoints.size() != 2) return std::nullopt;
  std::vector<int> order{endpoints[0]};
  int prev = 0;
  while (order.size() < nodes.size()) {
    const int cur = order.back();
    int next = 0;
    for (int u : M.neighbors(cur))
      if (u != prev) next = u;
    if (next == 0) return std::nullopt;
    prev = cur;
    order.push_back(next);
  }
  if (order.back() != endpoints[1]) return std::nullopt;
  return order;
}

/// Recognizes one connected component as a finite Coxeter diagram, returning
/// its name and group order, or nullopt when it is not of finite type.
inline std::optional<FiniteTypeInfo> recognize_finite_component(
    const CoxeterMatrix& M, const std::vector<int>& nodes) {
  const int k = static_cast<int>(nodes.size());
  for (std::size_t a = 0; a < nodes.size(); ++a)
    for (std::size_t b = a + 1; b < nodes.size(); ++b)
      if (M.bond(nodes[a], nodes[b]) == kInfiniteBond) return std::nullopt;

  if (k == 1) return FiniteTypeInfo{"A_1", 2};

  int edge_count = 0;
  int max_degree = 0;
  std::vector<int> branch_nodes;
  for (int v : nodes) {
    const int deg = M.node_degree(v);
    edge_count += deg;
    max_degree = std::max(max_degree, deg);
    if (deg >= 3) branch_nodes.push_back(v);
  }
  edge_count /= 2;
  if (max_degree >= 4) return std::nullopt;
  if (edge_count != k - 1) return std::nullopt; // cycle
  if (branch_nodes.size() >= 2) return std::nullopt;

  if (branch_nodes.size() == 1) {
    for (std::size_t a = 0; a < nodes.size(); ++a)
      for (std::size_t b = a + 1; b < nodes.size(); ++b) {
        const int m = M.bond(nodes[a], nodes[b]);
        if (m != 2 && m != 3) return std::nullopt;
      }
    const int center = branch_nodes[0];
    std::vector<int> arms;
    for (int start : M.neighbors(center)) {
      int len = 1;
      int prev = center;
      int cur = start;
      while (M.node_degree(cur) == 2) {
        int next = 0;
        for (int u : M.neighbors(cur))
          if (u != prev) next = u;
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1)
      return FiniteTypeInfo{"D_" + std::to_string(k),
                            mpz_power_of_two(k - 1) * mpz_factorial(k)};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] == 2)
      return FiniteTypeInfo{"E_6", mpz_class(51840)};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] == 3)
      return FiniteTypeInfo{"E_7", mpz_class(2903040)};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] == 4)
      return FiniteTypeInfo{"E_8", mpz_class(696729600)};
    return std::nullopt;
  }

  const auto order = path_nodes_in_order(M, nodes);
  if (!order) return std::nullopt;
  std::vector<int> bonds;
  for (int i = 0; i + 1 < k; ++i)
    bonds.push_back(M.bond((*order)[static_cast<std::size_t>(i)],
                           (*order)[static_cast<std::size_t>(i + 1)]));

  if (k == 2) {
    const int m = bonds[0];
    if (m == 3) return FiniteTypeInfo{"A_2", 6};
    if (m == 4) return FiniteTypeInfo{"B_2", 8};
    if (m == 6) return FiniteTypeInfo{"G_2", 12};
    return FiniteTypeInfo{"I_2(" + std::to_string(m) + ")", mpz_class(2 * m)};
  }

  std::vector<int> heavy_positions;
  for (int i = 0; i + 1 < k; ++i)
    if (bonds[static_cast<std::size_t>(i)] > 3) heavy_positions.push_back(i);

  if (heavy_positions.empty())
    return FiniteTypeInfo{"A_" + std::to_string(k), mpz_factorial(k + 1)};
  if (heavy_positions.size() > 1) return std::nullopt;

  const int pos = heavy_positions[0];
  const int m = bonds[static_cast<std::size_t>(pos)];
  const bool at_end = (pos == 0 || pos == k - 2);
  if (m == 4) {
    if (at_end)
      return FiniteTypeInfo{"B_" + std::to_string(k),
                            mpz_power_of_two(k) * mpz_factorial(k)};
    if (k == 4 && pos == 1) return FiniteTypeInfo{"F_4", mpz_class(1152)};
    return std::nullopt;
  }
  if (m == 5 && at_end) {
    if (k == 3) return FiniteTypeInfo{"H_3", mpz_class(120)};
    if (k == 4) return FiniteTypeInfo{"H_4", mpz_class(14400)};
  }
  return std::nullopt;
}

/// Classifies the Coxeter graph of M. The diagonal orders are ignored.
inline DiagramShape shape(const CoxeterMatrix& M) {
  DiagramShape out;
  const auto comps = M.components();
  out.component_count = static_cast<int>(comps.size());
  for (int v = 1; v <= M.size(); ++v)
    if (M.node_degree(v) == 1) out.pendant_nodes.push_back(v);

  std::vector<FiniteTypeInfo> infos;
  for (const auto& comp : comps) {
    auto info = recognize_finite_component(M, comp);
    if (!info) {
      out.kind = ShapeKind::NotFiniteCoxeter;
      out.coxeter_type.clear();
      return out;
    }
    infos.push_back(*info);
  }

  std::string name;
  for (std::size_t c = 0; c < infos.size(); ++c) {
    if (c > 0) name += " x ";
    name += infos[c].name;
  }
  out.coxeter_type = name;
  const bool single_type_a =
      comps.size() == 1 && infos[0].name.rfind("A_", 0) == 0;
  out.kind = single_type_a ? ShapeKind::TypeAPath : ShapeKind::OtherFiniteCoxeter;
  return out;
}

/// Order of the Coxeter group W(M) when every component is of finite type.
inline std::optional<mpz_class> coxeter_group_order(const CoxeterMatrix& M) {
  mpz_class total = 1;
  for (const auto& comp : M.components()) {
    auto info = recognize_finite_component(M, comp);
    if (!info) return std::nullopt;
    total *= info->group_order;
  }
  return total;
}

} // namespace nilcox
