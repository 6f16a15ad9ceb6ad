#pragma once
/// @file matrix_io.hpp
/// @brief JSON serialization for generalized Coxeter matrices.
///
/// The interchange format is
///
///   {"size": 3,
///    "bonds": [[1, 2, 3], [2, 3, "inf"]],
///    "orders": [2, 2, 4]}
///
/// with 1-based node indices. Pairs absent from "bonds" have m_ij = 2, and
/// the string "inf" denotes an infinite bond.

#include <string>

#include <nlohmann/json.hpp>

#include "nilcox/coxeter_matrix.hpp"
#include "nilcox/errors.hpp"

namespace nilcox {

/// Parses a matrix from its JSON value. Structural violations (asymmetry
/// introduced by conflicting rows, orders below 2) are reported through
/// CoxeterMatrix::validate by the caller; malformed JSON throws DomainError.
inline CoxeterMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw DomainError("matrix JSON must be an object");
  if (!j.contains("size") || !j["size"].is_number_integer())
    throw DomainError("matrix JSON needs an integer \"size\"");
  const int size = j["size"].get<int>();
  if (size < 1) throw DomainError("matrix size must be at least 1");
  CoxeterMatrix M(size);

  if (j.contains("orders")) {
    const auto& orders = j["orders"];
    if (!orders.is_array() || static_cast<int>(orders.size()) != size)
      throw DomainError("\"orders\" must be an array of length size");
    for (int i = 1; i <= size; ++i) {
      const auto& entry = orders[static_cast<std::size_t>(i - 1)];
      if (!entry.is_number_integer())
        throw DomainError("orders must be integers");
      M.set_order(i, entry.get<int>());
    }
  }

  if (j.contains("bonds")) {
    const auto& bonds = j["bonds"];
    if (!bonds.is_array()) throw DomainError("\"bonds\" must be an array");
    for (const auto& row : bonds) {
      if (!row.is_array() || row.size() != 3)
        throw DomainError("each bond must be a triple [i, j, m]");
      if (!row[0].is_number_integer() || !row[1].is_number_integer())
        throw DomainError("bond endpoints must be integers");
      const int i = row[0].get<int>();
      const int jdx = row[1].get<int>();
      if (i < 1 || i > size || jdx < 1 || jdx > size || i == jdx)
        throw DomainError("bond endpoints out of range");
      int m;
      if (row[2].is_string()) {
        if (row[2].get<std::string>() != "inf")
          throw DomainError("bond label must be an integer or \"inf\"");
        m = kInfiniteBond;
      } else if (row[2].is_number_integer()) {
        m = row[2].get<int>();
      } else {
        throw DomainError("bond label must be an integer or \"inf\"");
      }
      // One-way assignment so that a file listing both [i,j,m] and
      // [j,i,m'] with m != m' is caught by validate() as asymmetric.
      M.set_bond_oneway(i, jdx, m);
      const int mirror = M.bond(jdx, i);
      if (mirror == 2) M.set_bond_oneway(jdx, i, m);
    }
  }

  return M;
}

inline CoxeterMatrix matrix_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("matrix JSON parse error: ") + e.what());
  }
  return matrix_from_json(j);
}

inline nlohmann::json matrix_to_json(const CoxeterMatrix& M) {
  nlohmann::json j;
  j["size"] = M.size();
  nlohmann::json bonds = nlohmann::json::array();
  for (int i = 1; i <= M.size(); ++i) {
    for (int k = i + 1; k <= M.size(); ++k) {
      const int m = M.bond(i, k);
      if (m == 2) continue;
      nlohmann::json row = nlohmann::json::array();
      row.push_back(i);
      row.push_back(k);
      if (m == kInfiniteBond)
        row.push_back("inf");
      else
        row.push_back(m);
      bonds.push_back(row);
    }
  }
  j["bonds"] = bonds;
  j["orders"] = M.orders();
  return j;
}

} // namespace nilcox
